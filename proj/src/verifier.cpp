#include "qcmod/verifier.hpp"

#include "qcmod/errors.hpp"
#include "qcmod/lp.hpp"

#include <array>
#include <cstdio>
#include <memory>

namespace qcmod {

QcModulus QcModulus::constant(int k) {
  QcModulus t;
  t.kind_ = Kind::Constant;
  t.constant_ = k;
  return t;
}

QcModulus QcModulus::table(TableMap entries) {
  QcModulus t;
  t.kind_ = Kind::Table;
  t.table_ = std::move(entries);
  return t;
}

QcModulus QcModulus::external(std::string command) {
  QcModulus t;
  t.kind_ = Kind::External;
  t.command_ = std::move(command);
  return t;
}

namespace {

int run_external(const std::string &command, const GroupParams &params) {
  std::string line = command + " " + std::to_string(params.n) + " " + std::to_string(params.m);
  std::unique_ptr<FILE, int (*)(FILE *)> pipe(popen(line.c_str(), "r"), pclose);
  if (!pipe)
    throw ModulusError("cannot run modulus command: " + command);
  std::string out;
  std::array<char, 256> buf;
  while (std::fgets(buf.data(), int(buf.size()), pipe.get()))
    out += buf.data();
  int status = pclose(pipe.release());
  if (status != 0)
    throw ModulusError("modulus command failed: " + command);
  try {
    std::size_t used = 0;
    int k = std::stoi(out, &used);
    if (out.find_first_not_of(" \t\r\n", used) != std::string::npos)
      throw ModulusError("modulus command printed trailing output");
    return k;
  } catch (const std::logic_error &) {
    throw ModulusError("modulus command did not print an integer");
  }
}

} // namespace

int QcModulus::operator()(const GroupParams &params) const {
  int k = 0;
  switch (kind_) {
  case Kind::Constant:
    k = constant_;
    break;
  case Kind::Table: {
    auto it = table_.find({params.n, params.m});
    if (it == table_.end())
      throw ModulusError("modulus table has no entry for n=" + std::to_string(params.n) +
                         " m=" + std::to_string(params.m));
    k = it->second;
    break;
  }
  case Kind::External:
    k = run_external(command_, params);
    break;
  }
  if (k < 1)
    throw ModulusError("modulus returned k = " + std::to_string(k) + " < 1");
  return k;
}

GameFamily toy_family() {
  return {"toy", [](const std::string &z) {
            if (z.empty() || z.find_first_not_of("01") != std::string::npos)
              throw InputError("toy family expects a non-empty binary string");
            GroupParams params = make_params(2, 2);
            return z.back() == '1' ? mirror_game(params) : antimirror_game(params);
          }};
}

GameFamily family_by_name(const std::string &name) {
  if (name == "toy")
    return toy_family();
  throw InputError("unknown game family: " + name);
}

namespace {

NonlocalGame generate_game(const GameFamily &family, const std::string &z) {
  if (!family.generate)
    throw InputError("game family has no generator");
  try {
    return family.generate(z);
  } catch (const InputError &) {
    throw;
  } catch (const std::exception &e) {
    throw InputError("game generation failed for z=\"" + z + "\": " + e.what());
  }
}

} // namespace

VerifyOutcome verify(const std::string &z, const GameFamily &family, const QcModulus &modulus,
                     std::uint64_t budget, const Integer &from) {
  if (sgn(from) < 0)
    throw ParameterError("resume index must be nonnegative");
  NonlocalGame game = generate_game(family, z);
  const GroupParams params = game.params();
  const int k = modulus(params);
  const Rational half(1, 2);

  std::optional<VerdictCertificate> cert;
  ScanResult scan;
  if (budget > 0) {
    CandidateSpace space(params, k);
    scan = enumerate_X(space, from, budget, [&](const Candidate &c) {
      Rational value = game_value(game, c.p);
      if (value > half) {
        cert = VerdictCertificate{1,      z,     family.name, modulus, params,
                                  k,      c.index, c.p,       c.tau,   value};
        return false;
      }
      return true;
    });
  } else {
    scan.next_index = from;
  }
  if (cert)
    return *cert;
  return VerifyProgress{z, family.name, modulus, params, k, scan.next_index, scan.examined};
}

bool recheck_certificate(const VerdictCertificate &cert, const GameFamily &family) {
  try {
    if (cert.schema_version != 1 || cert.family != family.name || cert.k < 1)
      return false;
    NonlocalGame game = generate_game(family, cert.z);
    if (!(game.params() == cert.params) || !(cert.p.params() == cert.params))
      return false;
    Rational value = game_value(game, cert.p);
    if (value != cert.value || !(value > Rational(1, 2)))
      return false;
    if (cert.modulus.kind() != QcModulus::Kind::External && cert.modulus(cert.params) != cert.k)
      return false;
    CandidateSpace space(cert.params, cert.k);
    if (cert.tau.values().size() != space.trace_words().size())
      return false;
    if (!space.checker()(cert.p, cert.tau))
      return false;
    if (sgn(cert.index) < 0)
      return false;
    Candidate replay = space.decode(cert.index);
    return replay.p == cert.p && replay.tau == cert.tau;
  } catch (...) {
    return false;
  }
}

namespace {

constexpr std::uint64_t kProbeMaxFunctions = 4096;
constexpr std::uint64_t kProbeMaxSubsets = 200000;

// Distance from p to the hull of the given deterministic correlations.
ProbeResult probe_subset(const Correlation &p, const std::vector<const Correlation *> &pool,
                         const std::vector<const AnswerFunction *> &fs) {
  const std::size_t d = pool.size();
  const std::size_t entries = p.entries().size();
  LinearProgram lp;
  lp.objective.assign(d + 1, 0);
  lp.objective[d] = 1; // t
  for (std::size_t e = 0; e < entries; ++e) {
    std::vector<Rational> row(d + 1, 0);
    for (std::size_t f = 0; f < d; ++f)
      row[f] = pool[f]->entries()[e];
    auto upper = row;
    row[d] = 1;
    lp.add_row(row, Relation::GreaterEqual, p.entries()[e]);
    upper[d] = -1;
    lp.add_row(upper, Relation::LessEqual, p.entries()[e]);
  }
  std::vector<Rational> sum(d + 1, 1);
  sum[d] = 0;
  lp.add_row(sum, Relation::Equal, 1);
  LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::Optimal)
    throw DomainError("stability probe linear program did not solve");
  ProbeResult r{sol.value, {}};
  for (std::size_t f = 0; f < d; ++f)
    if (sgn(sol.x[f]) != 0)
      r.combination.emplace_back(*fs[f], sol.x[f]);
  return r;
}

} // namespace

ProbeResult stability_probe(const Correlation &p, int depth) {
  if (depth < 1)
    throw ParameterError("probe depth must be at least 1");
  const GroupParams &params = p.params();
  const std::uint64_t count = answer_function_count(params, kProbeMaxFunctions);
  std::vector<AnswerFunction> fs;
  std::vector<Correlation> qs;
  for_each_answer_function(params, kProbeMaxFunctions, [&](const AnswerFunction &f) {
    fs.push_back(f);
    qs.push_back(deterministic_correlation(f, params));
  });
  const std::size_t d = std::size_t(std::min<std::uint64_t>(std::uint64_t(depth), count));

  // Number of d-subsets, guarded.
  Integer subsets = 1;
  for (std::size_t i = 0; i < d; ++i)
    subsets = subsets * Integer(static_cast<unsigned long>(count - i)) / Integer(static_cast<unsigned long>(i + 1));
  if (subsets > Integer(static_cast<unsigned long>(kProbeMaxSubsets)))
    throw ParameterError("stability probe search too large; lower the depth");

  std::optional<ProbeResult> best;
  std::vector<std::size_t> pick(d);
  for (std::size_t i = 0; i < d; ++i)
    pick[i] = i;
  for (;;) {
    std::vector<const Correlation *> pool;
    std::vector<const AnswerFunction *> chosen;
    for (auto i : pick) {
      pool.push_back(&qs[i]);
      chosen.push_back(&fs[i]);
    }
    ProbeResult r = probe_subset(p, pool, chosen);
    if (!best || r.distance < best->distance)
      best = std::move(r);
    if (sgn(best->distance) == 0)
      break;
    // next combination in lexicographic order
    std::size_t i = d;
    while (i > 0 && pick[i - 1] == count - d + i - 1)
      --i;
    if (i == 0)
      break;
    ++pick[i - 1];
    for (std::size_t j = i; j < d; ++j)
      pick[j] = pick[j - 1] + 1;
  }
  return *best;
}

} // namespace qcmod
