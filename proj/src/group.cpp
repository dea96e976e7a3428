#include "qcmod/group.hpp"

#include "qcmod/errors.hpp"

#include <limits>

namespace qcmod {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    throw ParameterError("word index overflow");
  return a * b;
}

} // namespace

GroupParams make_params(int n, int m) {
  GroupParams p{n, m};
  validate(p);
  return p;
}

void validate(const GroupParams &params) {
  if (params.n < 2 || params.m < 2)
    throw ParameterError("F(n,m) needs n >= 2 and m >= 2, got n=" + std::to_string(params.n) +
                         ", m=" + std::to_string(params.m));
}

std::string to_string(const Word &w) {
  if (w.is_identity())
    return "e";
  std::string out;
  for (const auto &s : w.syllables) {
    if (!out.empty())
      out += ' ';
    out += "u" + std::to_string(s.generator);
    if (s.exponent != 1)
      out += "^" + std::to_string(s.exponent);
  }
  return out;
}

void validate(const Word &w, const GroupParams &params) {
  for (std::size_t t = 0; t < w.syllables.size(); ++t) {
    const auto &s = w.syllables[t];
    if (s.generator < 1 || s.generator > params.n || s.exponent < 1 || s.exponent >= params.m)
      throw ParameterError("word " + to_string(w) + " is not a normal form over F(" +
                           std::to_string(params.n) + "," + std::to_string(params.m) + ")");
    if (t > 0 && w.syllables[t - 1].generator == s.generator)
      throw ParameterError("word " + to_string(w) + " has adjacent equal generators");
  }
}

Word normalize(std::span<const RawSyllable> raw, const GroupParams &params) {
  validate(params);
  std::vector<Syllable> stack;
  stack.reserve(raw.size());
  const long long m = params.m;
  for (const auto &r : raw) {
    if (r.generator < 1 || r.generator > params.n)
      throw ParameterError("generator " + std::to_string(r.generator) + " outside [1," +
                           std::to_string(params.n) + "]");
    long long e = ((r.exponent % m) + m) % m;
    if (e == 0)
      continue;
    if (!stack.empty() && stack.back().generator == r.generator) {
      long long merged = (stack.back().exponent + e) % m;
      if (merged == 0)
        stack.pop_back();
      else
        stack.back().exponent = int(merged);
    } else {
      stack.push_back({r.generator, int(e)});
    }
  }
  return Word(std::move(stack));
}

Word word_mul(const Word &a, const Word &b, const GroupParams &params) {
  validate(params);
  validate(a, params);
  validate(b, params);
  // Cancel across the seam; at most one merge survives.
  std::vector<Syllable> out(a.syllables);
  std::size_t t = 0;
  while (t < b.syllables.size() && !out.empty() &&
         out.back().generator == b.syllables[t].generator) {
    int merged = (out.back().exponent + b.syllables[t].exponent) % params.m;
    ++t;
    if (merged == 0) {
      out.pop_back();
    } else {
      out.back().exponent = merged;
      break;
    }
  }
  out.insert(out.end(), b.syllables.begin() + std::ptrdiff_t(t), b.syllables.end());
  return Word(std::move(out));
}

Word word_inv(const Word &a, const GroupParams &params) {
  validate(params);
  validate(a, params);
  std::vector<Syllable> out;
  out.reserve(a.syllables.size());
  for (auto it = a.syllables.rbegin(); it != a.syllables.rend(); ++it)
    out.push_back({it->generator, params.m - it->exponent});
  return Word(std::move(out));
}

Word word_conj(const Word &a, const Word &g, const GroupParams &params) {
  return word_mul(word_mul(word_inv(g, params), a, params), g, params);
}

Word generator_power(int v, long long a, const GroupParams &params) {
  RawSyllable r{v, a};
  return normalize(std::span(&r, 1), params);
}

Word word_at(const GroupParams &params, std::uint64_t index) {
  validate(params);
  const std::uint64_t exps = std::uint64_t(params.m - 1);
  const std::uint64_t rest = std::uint64_t(params.n - 1) * exps;
  // Words of length s >= 1 number first * rest^(s-1); block tracks rest^(s-1).
  std::size_t s = 0;
  std::uint64_t block = 1;
  if (index >= 1) {
    index -= 1;
    const std::uint64_t first = std::uint64_t(params.n) * exps;
    for (s = 1;; ++s) {
      std::uint64_t c = checked_mul(first, block);
      if (index < c)
        break;
      index -= c;
      block = checked_mul(block, rest);
    }
  }
  std::vector<Syllable> out;
  out.reserve(s);
  for (std::size_t t = 0; t < s; ++t) {
    std::uint64_t choice = index / block;
    index %= block;
    if (t + 1 < s)
      block /= rest;
    int gi = int(choice / exps);
    int e = int(choice % exps) + 1;
    int g;
    if (t == 0) {
      g = gi + 1;
    } else {
      int prev = out.back().generator;
      g = gi + 1 < prev ? gi + 1 : gi + 2;
    }
    out.push_back({g, e});
  }
  return Word(std::move(out));
}

std::uint64_t word_index(const GroupParams &params, const Word &w) {
  validate(params);
  validate(w, params);
  const std::size_t s = w.length();
  const std::uint64_t exps = std::uint64_t(params.m - 1);
  const std::uint64_t rest = std::uint64_t(params.n - 1) * exps;
  const std::uint64_t first = std::uint64_t(params.n) * exps;
  std::uint64_t index = s > 0 ? 1 : 0;
  std::uint64_t block = 1;
  for (std::size_t t = 1; t < s; ++t) {
    index += checked_mul(first, block);
    block = checked_mul(block, rest);
  }
  // Horner over the syllable choices in base rest (first digit base first).
  std::uint64_t offset = 0;
  for (std::size_t t = 0; t < s; ++t) {
    const auto &syl = w.syllables[t];
    std::uint64_t gi;
    if (t == 0) {
      gi = std::uint64_t(syl.generator - 1);
    } else {
      int prev = w.syllables[t - 1].generator;
      gi = std::uint64_t(syl.generator < prev ? syl.generator - 1 : syl.generator - 2);
    }
    std::uint64_t choice = gi * exps + std::uint64_t(syl.exponent - 1);
    offset = t == 0 ? choice : checked_mul(offset, rest) + choice;
  }
  return index + offset;
}

std::vector<Word> enumerate_words(const GroupParams &params, std::uint64_t count) {
  validate(params);
  std::vector<Word> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i)
    out.push_back(word_at(params, i));
  return out;
}

} // namespace qcmod
