#include "qcmod/rational.hpp"

#include "qcmod/errors.hpp"

#include <algorithm>

namespace qcmod {

Rational make_rational(long num, long den) {
  if (den == 0)
    throw ParameterError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer height(const Rational &q) {
  Integer num = abs(q.get_num());
  return num > q.get_den() ? num : Integer(q.get_den());
}

Integer height(const GaussianRational &z) {
  Integer a = height(z.re);
  Integer b = height(z.im);
  return a > b ? a : b;
}

std::string to_string(const Rational &q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    Integer num(s.substr(0, slash), 10);
    Integer den = 1;
    if (slash != std::string::npos)
      den = Integer(s.substr(slash + 1), 10);
    if (den == 0)
      throw InputError("zero denominator in rational '" + s + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument &) {
    throw InputError("malformed rational '" + s + "'");
  }
}

GaussianRational inverse(const GaussianRational &z) {
  Rational n = norm2(z);
  if (sgn(n) == 0)
    throw ParameterError("inverse of zero");
  return {z.re / n, -z.im / n};
}

std::string to_string(const GaussianRational &z) {
  return to_string(z.re) + (sgn(z.im) < 0 ? " - " : " + ") + to_string(abs(z.im)) + "i";
}

} // namespace qcmod
