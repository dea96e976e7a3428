#include "qcmod/json_io.hpp"

#include "qcmod/errors.hpp"

#include <algorithm>
#include <fstream>

namespace qcmod::json_io {

namespace {

constexpr const char *kRequirementOrder = "height-support-lex/cantor-class";

const json &field(const json &j, const char *key) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_from(const json &j, const char *what) {
  if (!j.is_number_integer())
    throw InputError(std::string(what) + " must be an integer");
  return j.get<int>();
}

Integer integer_from(const json &j, const char *what) {
  std::string text;
  if (j.is_string())
    text = j.get<std::string>();
  else if (j.is_number_unsigned() || j.is_number_integer())
    text = j.dump();
  else
    throw InputError(std::string(what) + " must be a decimal integer string");
  Integer out;
  if (text.empty() || out.set_str(text, 10) != 0)
    throw InputError(std::string(what) + " is not a decimal integer: " + text);
  return out;
}

template <class F> auto guarded(F &&f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception &e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  } catch (const ParameterError &e) {
    throw InputError(e.what());
  }
}

} // namespace

json to_json(const Rational &q) { return to_string(q); }

Rational rational_from(const json &j) {
  if (j.is_string())
    return parse_rational(j.get<std::string>());
  if (j.is_number_integer())
    return Rational(Integer(j.dump()));
  throw InputError("rational must be a \"p/q\" string");
}

json to_json(const GaussianRational &z) { return {{"re", to_json(z.re)}, {"im", to_json(z.im)}}; }

GaussianRational gaussian_from(const json &j) {
  return {rational_from(field(j, "re")), rational_from(field(j, "im"))};
}

json to_json(const Cyclotomic &x) {
  json coeffs = json::array();
  for (const auto &c : x.coeffs())
    coeffs.push_back(to_json(c));
  return {{"m", x.order()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomic_from(const json &j) {
  return guarded([&] {
    int m = int_from(field(j, "m"), "m");
    if (m < 1)
      throw InputError("cyclotomic order must be positive");
    std::vector<Rational> coeffs;
    for (const auto &c : field(j, "coeffs"))
      coeffs.push_back(rational_from(c));
    return Cyclotomic(m, std::move(coeffs));
  });
}

json to_json(const Word &w) {
  json out = json::array();
  for (const auto &s : w.syllables)
    out.push_back({s.generator, s.exponent});
  return out;
}

Word word_from(const json &j, const GroupParams &params) {
  return guarded([&] {
    if (!j.is_array())
      throw InputError("word must be an array of [generator, exponent] pairs");
    Word w;
    for (const auto &s : j) {
      if (!s.is_array() || s.size() != 2)
        throw InputError("syllable must be a [generator, exponent] pair");
      w.syllables.push_back({int_from(s[0], "generator"), int_from(s[1], "exponent")});
    }
    validate(w, params);
    return w;
  });
}

json to_json(const GroupParams &params) { return {{"n", params.n}, {"m", params.m}}; }

GroupParams params_from(const json &j) {
  return guarded([&] {
    return make_params(int_from(field(j, "n"), "n"), int_from(field(j, "m"), "m"));
  });
}

namespace {

template <class Coeff> json ring_json(const GroupRing<Coeff> &x, const char *field_name) {
  json terms = json::array();
  for (const auto &[w, c] : x.terms())
    terms.push_back({to_json(w), to_json(c)});
  return {{"params", to_json(x.params())}, {"field", field_name}, {"terms", terms}};
}

} // namespace

json to_json(const GaussianElement &x) { return ring_json(x, "gaussian"); }
json to_json(const CyclotomicElement &x) { return ring_json(x, "cyclotomic"); }

json to_json(const PartialTrace &tau) {
  json values = json::array();
  for (const auto &[w, z] : tau.values())
    values.push_back({to_json(w), to_json(z)});
  return {{"params", to_json(tau.params())}, {"values", values}};
}

json to_json(const CyclotomicTrace &tau) {
  json values = json::array();
  for (const auto &[w, z] : tau.values())
    values.push_back({to_json(w), to_json(z)});
  return {{"params", to_json(tau.params())}, {"values", values}};
}

std::variant<PartialTrace, CyclotomicTrace> trace_from(const json &j) {
  return guarded([&]() -> std::variant<PartialTrace, CyclotomicTrace> {
    GroupParams params = params_from(field(j, "params"));
    const json &values = field(j, "values");
    if (!values.is_array())
      throw InputError("trace values must be an array");
    int field_order = 0;
    for (const auto &entry : values) {
      if (!entry.is_array() || entry.size() != 2)
        throw InputError("trace value must be a [word, value] pair");
      if (entry[1].is_object() && entry[1].contains("coeffs")) {
        int m = int_from(field(entry[1], "m"), "m");
        if (field_order != 0 && field_order != m)
          throw InputError("trace values use different cyclotomic fields");
        field_order = m;
      }
    }
    if (field_order == 0) {
      std::map<Word, GaussianRational> map;
      for (const auto &entry : values)
        if (!map.emplace(word_from(entry[0], params), gaussian_from(entry[1])).second)
          throw InputError("trace lists a word twice");
      return PartialTrace(params, std::move(map));
    }
    if (field_order % 4 != 0 && std::any_of(values.begin(), values.end(), [](const json &e) {
          return !e[1].contains("coeffs") && sgn(rational_from(field(e[1], "im"))) != 0;
        }))
      throw InputError("Gaussian value with nonzero imaginary part outside Q(i) field");
    CyclotomicTrace tau(params, field_order);
    for (const auto &entry : values) {
      Word w = word_from(entry[0], params);
      if (tau.values().count(w))
        throw InputError("trace lists a word twice");
      if (entry[1].contains("coeffs")) {
        tau.set(w, cyclotomic_from(entry[1]));
      } else {
        GaussianRational z = gaussian_from(entry[1]);
        tau.set(w, sgn(z.im) == 0 ? Cyclotomic::from_rational(field_order, z.re)
                                  : Cyclotomic::from_gaussian(field_order, z));
      }
    }
    return tau;
  });
}

PartialTrace partial_trace_from(const json &j) {
  auto t = trace_from(j);
  if (auto *p = std::get_if<PartialTrace>(&t))
    return std::move(*p);
  throw InputError("expected a trace with Gaussian rational values");
}

json to_json(const Correlation &p) {
  json entries = json::array();
  for (const auto &e : p.entries())
    entries.push_back(to_json(e));
  return {{"n", p.params().n}, {"m", p.params().m}, {"entries", entries}};
}

Correlation correlation_from(const json &j) {
  return guarded([&] {
    GroupParams params = params_from(j);
    std::vector<Rational> entries;
    for (const auto &e : field(j, "entries"))
      entries.push_back(rational_from(e));
    return Correlation(params, std::move(entries));
  });
}

json to_json(const NonlocalGame &game) {
  const auto &params = game.params();
  json mu = json::array(), accept = json::array();
  for (int v = 1; v <= params.n; ++v)
    for (int w = 1; w <= params.n; ++w) {
      if (sgn(game.mu(v, w)) != 0)
        mu.push_back({v, w, to_json(game.mu(v, w))});
      for (int i = 1; i <= params.m; ++i)
        for (int jj = 1; jj <= params.m; ++jj)
          if (game.accepts(v, w, i, jj))
            accept.push_back({v, w, i, jj});
    }
  return {{"n", params.n}, {"m", params.m}, {"mu", mu}, {"accept", accept}};
}

NonlocalGame game_from(const json &j) {
  return guarded([&] {
    GroupParams params = params_from(j);
    const std::size_t n = std::size_t(params.n), m = std::size_t(params.m);
    auto in_range = [](int x, int hi) { return x >= 1 && x <= hi; };
    std::vector<Rational> mu(n * n, 0);
    std::vector<bool> seen(n * n, false);
    for (const auto &e : field(j, "mu")) {
      if (!e.is_array() || e.size() != 3)
        throw InputError("mu entry must be [v, w, \"p/q\"]");
      int v = int_from(e[0], "v"), w = int_from(e[1], "w");
      if (!in_range(v, params.n) || !in_range(w, params.n))
        throw InputError("mu question index out of range");
      std::size_t at = std::size_t(v - 1) * n + std::size_t(w - 1);
      if (seen[at])
        throw InputError("mu lists a question pair twice");
      seen[at] = true;
      mu[at] = rational_from(e[2]);
    }
    std::vector<std::uint8_t> accept(n * n * m * m, 0);
    for (const auto &e : field(j, "accept")) {
      if (!e.is_array() || e.size() != 4)
        throw InputError("accept entry must be [v, w, i, j]");
      int v = int_from(e[0], "v"), w = int_from(e[1], "w");
      int i = int_from(e[2], "i"), jj = int_from(e[3], "j");
      if (!in_range(v, params.n) || !in_range(w, params.n) || !in_range(i, params.m) ||
          !in_range(jj, params.m))
        throw InputError("accept tuple out of range");
      accept[entry_index(params, v, w, i, jj)] = 1;
    }
    return NonlocalGame(params, std::move(mu), std::move(accept));
  });
}

json to_json(const Candidate &c) {
  return {{"index", c.index.get_str()}, {"k", c.k},        {"height", c.height},
          {"p", to_json(c.p)},          {"tau", to_json(c.tau)}};
}

json to_json(const QcModulus &t) {
  switch (t.kind()) {
  case QcModulus::Kind::Constant:
    return {{"kind", "constant"}, {"k", t.constant_value()}};
  case QcModulus::Kind::Table: {
    json entries = json::array();
    for (const auto &[nm, k] : t.entries())
      entries.push_back({nm.first, nm.second, k});
    return {{"kind", "table"}, {"entries", entries}};
  }
  case QcModulus::Kind::External:
    return {{"kind", "external"}, {"command", t.command()}};
  }
  throw InputError("unknown modulus kind");
}

QcModulus modulus_from(const json &j) {
  return guarded([&] {
    std::string kind = field(j, "kind").get<std::string>();
    if (kind == "constant")
      return QcModulus::constant(int_from(field(j, "k"), "k"));
    if (kind == "table") {
      QcModulus::TableMap map;
      for (const auto &e : field(j, "entries")) {
        if (!e.is_array() || e.size() != 3)
          throw InputError("modulus table entry must be [n, m, k]");
        map[{int_from(e[0], "n"), int_from(e[1], "m")}] = int_from(e[2], "k");
      }
      return QcModulus::table(std::move(map));
    }
    if (kind == "external")
      return QcModulus::external(field(j, "command").get<std::string>());
    throw InputError("unknown modulus kind: " + kind);
  });
}

json to_json(const VerdictCertificate &c) {
  return {{"schema_version", c.schema_version},
          {"verdict", "accept"},
          {"requirement_order", kRequirementOrder},
          {"z", c.z},
          {"family", c.family},
          {"modulus", to_json(c.modulus)},
          {"params", to_json(c.params)},
          {"k", c.k},
          {"index", c.index.get_str()},
          {"p", to_json(c.p)},
          {"tau", to_json(c.tau)},
          {"value", to_json(c.value)}};
}

VerdictCertificate certificate_from(const json &j) {
  return guarded([&] {
    int version = int_from(field(j, "schema_version"), "schema_version");
    if (version != 1)
      throw InputError("unsupported certificate schema_version " + std::to_string(version));
    if (field(j, "requirement_order").get<std::string>() != kRequirementOrder)
      throw InputError("certificate uses a different requirement order");
    return VerdictCertificate{version,
                              field(j, "z").get<std::string>(),
                              field(j, "family").get<std::string>(),
                              modulus_from(field(j, "modulus")),
                              params_from(field(j, "params")),
                              int_from(field(j, "k"), "k"),
                              integer_from(field(j, "index"), "index"),
                              correlation_from(field(j, "p")),
                              partial_trace_from(field(j, "tau")),
                              rational_from(field(j, "value"))};
  });
}

json to_json(const VerifyProgress &p) {
  return {{"schema_version", 1},
          {"verdict", "budget_exhausted"},
          {"z", p.z},
          {"family", p.family},
          {"modulus", to_json(p.modulus)},
          {"params", to_json(p.params)},
          {"k", p.k},
          {"next_index", p.next_index.get_str()},
          {"examined", p.examined}};
}

VerifyProgress progress_from(const json &j) {
  return guarded([&] {
    if (int_from(field(j, "schema_version"), "schema_version") != 1)
      throw InputError("unsupported progress schema_version");
    return VerifyProgress{field(j, "z").get<std::string>(),
                          field(j, "family").get<std::string>(),
                          modulus_from(field(j, "modulus")),
                          params_from(field(j, "params")),
                          int_from(field(j, "k"), "k"),
                          integer_from(field(j, "next_index"), "next_index"),
                          field(j, "examined").get<std::uint64_t>()};
  });
}

json to_json(const ProbeResult &r) {
  json combo = json::array();
  for (const auto &[f, w] : r.combination)
    combo.push_back({{"f", f}, {"weight", to_json(w)}});
  return {{"distance", to_json(r.distance)}, {"combination", combo}};
}

json read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception &e) {
    throw InputError(path + ": " + e.what());
  }
}

} // namespace qcmod::json_io
