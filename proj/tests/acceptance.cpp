// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include "oracles.hpp"
#include "support.hpp"

#include "qcmod/enumerator.hpp"
#include "qcmod/games.hpp"
#include "qcmod/spectral.hpp"
#include "qcmod/verifier.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace qcmod;
using namespace testing_support;
using Clock = std::chrono::steady_clock;

namespace {

Rational Q(long a, long b = 1) { return make_rational(a, b); }

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string &what) {
    if (!ok && pass) {
      pass = false;
      detail << "failed: " << what << "; ";
    }
  }
};

int failures = 0;

void report(const std::string &name, double limit_seconds, const std::function<void(Outcome &)> &body) {
  Outcome out;
  auto t0 = Clock::now();
  try {
    body(out);
  } catch (const std::exception &e) {
    out.pass = false;
    out.detail << "exception: " << e.what() << "; ";
  }
  double took = seconds_since(t0);
  if (limit_seconds > 0 && took >= limit_seconds) {
    out.pass = false;
    out.detail << "runtime " << took << " s exceeds " << limit_seconds << " s; ";
  }
  failures += !out.pass;
  std::cout << (out.pass ? "PASS " : "FAIL ") << name << " (" << took << " s) " << out.detail.str() << std::endl;
}

const std::vector<std::pair<int, int>> kParams = {{2, 2}, {2, 3}, {3, 2}, {2, 4}, {2, 5}};

std::vector<Word> short_words(const GroupParams &p) {
  std::vector<Word> out;
  for (std::uint64_t t = 0;; ++t) {
    Word w = word_at(p, t);
    if (w.syllables.size() > 2)
      return out;
    out.push_back(w);
  }
}

void projection_algebra(Outcome &out) {
  for (auto [n, m] : kParams) {
    auto p = make_params(n, m);
    for (int v = 1; v <= n; ++v) {
      CyclotomicElement sum(p);
      std::vector<CyclotomicElement> e;
      for (int i = 1; i <= m; ++i) {
        e.push_back(projection(v, i, p));
        sum += e.back();
        out.require(ring_star(e.back()) == e.back(), "self-adjoint");
        out.require(oracle::ring_is_zero(oracle::ring_sub(to_oracle(e.back(), m), oracle::projection(n, m, v, i))),
                    "projection matches oracle");
      }
      out.require(sum == cyclotomic_one(p), "resolution of identity");
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
          auto prod = e[std::size_t(i - 1)] * e[std::size_t(j - 1)];
          out.require(i == j ? prod == e[std::size_t(i - 1)] : prod.is_zero(), "orthogonal idempotents");
        }
      for (int j = 0; j <= m; ++j) {
        CyclotomicElement rebuilt(p);
        for (int i = 1; i <= m; ++i)
          for (const auto &[w, c] : e[std::size_t(i - 1)].terms())
            rebuilt.add_term(w, c * Cyclotomic::root_power(m, (long long)i * j));
        out.require(rebuilt == CyclotomicElement::monomial(p, generator_power(v, j, p),
                                                           Cyclotomic::from_rational(m, 1)),
                    "u_v^j = sum_i xi^{ji} e_{v,i}");
      }
    }
  }
  out.detail << "5 parameter sets, exact equality";
}

void computable_s(Outcome &out) {
  int certificates = 0;
  for (auto [n, m] : kParams) {
    auto p = make_params(n, m);
    for (int k : {1, 10, 100, 1000})
      for (int v = 1; v <= n; ++v)
        for (int w = 1; w <= n; ++w)
          for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j) {
              auto s = approx_product_s(v, w, i, j, k, p);
              ++certificates;
              out.require(s.error_bound < Q(1, k), "error_bound < 1/k");
              if (m == 2 || m == 4)
                out.require(sgn(s.error_bound) == 0, "exact for m in {2,4}");
              auto exact = projection_product(v, i, w, j, p);
              std::set<Word> words;
              for (const auto &[word, c] : exact.terms())
                words.insert(word);
              for (const auto &[word, c] : s.value.terms())
                words.insert(word);
              mpq_class lower = 0, upper = 0;
              for (const auto &word : words) {
                GaussianRational g = s.value.coefficient(word) ? *s.value.coefficient(word) : GaussianRational{};
                oracle::Poly x = exact.coefficient(word) ? to_oracle(*exact.coefficient(word))
                                                         : oracle::Poly(std::size_t(m), 0);
                oracle::Box b = oracle::poly_box(x, 256);
                auto part = [&](const mpq_class &g0, const mpq_class &lo, const mpq_class &hi) {
                  upper += std::max(abs(hi - g0), abs(lo - g0));
                  lower += g0 < lo ? mpq_class(lo - g0) : g0 > hi ? mpq_class(g0 - hi) : mpq_class(0);
                };
                part(g.re, b.re_lo, b.re_hi);
                part(g.im, b.im_lo, b.im_hi);
              }
              out.require(lower <= s.error_bound, "interval recheck: distance within certified bound");
              out.require(upper < Q(1, k), "interval recheck: distance < 1/k");
            }
  }
  out.detail << certificates << " certificates rechecked with MPFR enclosures";
}

void perturbation(Outcome &out) {
  std::mt19937_64 rng(20240601);
  const long D = 1000;
  std::uniform_int_distribution<long> coord(-D, D);
  Rational prev = delta_for_k(1).delta;
  int trials = 0;
  for (int k = 1; k <= 20; ++k) {
    Rational delta = delta_for_k(k).delta;
    out.require(delta <= prev, "delta nonincreasing");
    prev = delta;
    for (auto p : {make_params(2, 2), make_params(2, 3)}) {
      auto sup = required_support(k, p);
      for (int t = 0; t < 100; ++t) {
        PartialTrace tau(p);
        for (const auto &w : sup)
          for (;;) {
            long a = coord(rng), b = coord(rng);
            if (a * a + b * b >= D * D)
              continue;
            GaussianRational z{delta * make_rational(a, D), delta * make_rational(b, D)};
            if (w.syllables.empty())
              z.re += 1;
            if (!in_unit_disc(z))
              continue;
            tau.set(w, z);
            break;
          }
        ++trials;
        out.require(is_k_approximate(tau, k).pass, "perturbed regular trace passes at k=" + std::to_string(k));
      }
    }
  }
  out.detail << trials << " perturbations, zero failures";
}

void trace_to_correlation(Outcome &out) {
  for (int m : {2, 3, 4}) {
    auto p = make_params(2, m);
    auto c = correlation_from_trace(regular_trace(p, short_words(p)));
    for (int v = 1; v <= 2; ++v)
      for (int w = 1; w <= 2; ++w)
        for (int i = 1; i <= m; ++i)
          for (int j = 1; j <= m; ++j)
            out.require(c(v, w, i, j) == (v != w ? Q(1, m * m) : (i == j ? Q(1, m) : Q(0))),
                        "regular trace closed form");
  }
  int functions = 0;
  for (auto [n, m] : {std::pair{2, 2}, {2, 3}}) {
    auto p = make_params(n, m);
    auto words = short_words(p);
    for_each_answer_function(p, 100, [&](const AnswerFunction &f) {
      ++functions;
      auto c = correlation_from_trace(character_trace(f, p, words));
      for (int v = 1; v <= n; ++v)
        for (int w = 1; w <= n; ++w)
          for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j) {
              Rational expected = (f[std::size_t(v - 1)] == i && f[std::size_t(w - 1)] == j) ? 1 : 0;
              auto prod = oracle::ring_mul(oracle::projection(n, m, v, i), oracle::projection(n, m, w, j));
              oracle::Poly total(std::size_t(m), 0);
              for (const auto &[word, coeff] : prod.terms) {
                long long exponent = 0;
                for (auto [g, a] : word)
                  exponent += (long long)f[std::size_t(g - 1)] * a;
                auto term = oracle::poly_mul(coeff, oracle::poly_monomial(m, exponent));
                for (int t = 0; t < m; ++t)
                  total[std::size_t(t)] += term[std::size_t(t)];
              }
              mpq_class brute;
              out.require(oracle::rational_value(total, brute) && brute == expected, "brute-force expansion");
              out.require(c(v, w, i, j) == expected, "character trace gives deterministic correlation");
            }
    });
  }
  out.detail << "regular traces m=2,3,4 and " << functions << " character traces";
}

void enumerator_desk_scale(Outcome &out) {
  const auto deadline = Clock::now() + std::chrono::seconds(115);
  auto p = make_params(2, 2);
  CandidateSpace space(p, 1);
  MembershipChecker member(p, 1);
  std::set<Word> expected_words{Word{}, Word{{{1, 1}}}, Word{{{2, 1}}}, Word{{{1, 1}, {2, 1}}}, Word{{{2, 1}, {1, 1}}}};
  out.require(std::set<Word>(space.trace_words().begin(), space.trace_words().end()) == expected_words,
              "trace slots are e, u1, u2, u1u2, u2u1");

  // Height 1: full scan, every emission rechecked, count matched to the factorized oracle.
  std::ostringstream phases;
  auto mark = [&, last = Clock::now()](const char *phase) mutable {
    phases << phase << " " << seconds_since(last) << " s, ";
    last = Clock::now();
  };
  Integer n1 = space.grid_size(1);
  std::uint64_t emitted1 = 0, recheck_failures = 0;
  std::set<Integer> prefix_emitted;
  const long prefix = 100000;
  auto scan1 = enumerate_X(space, 0, n1.get_ui(), [&](const Candidate &c) {
    ++emitted1;
    if (!member(c.p, c.tau))
      ++recheck_failures;
    if (c.index < prefix)
      prefix_emitted.insert(c.index);
    return true;
  });
  mark("height-1 scan");
  auto count1 = oracle::count_members_22_k1(1);
  out.require(scan1.next_index == n1, "height-1 scan complete");
  out.require(count1.grid == n1, "height-1 grid size");
  out.require(mpz_class(static_cast<unsigned long>(emitted1)) == count1.members, "height-1 member count matches oracle");
  out.require(recheck_failures == 0, "every emitted candidate rechecks");

  // Brute-force filter on a prefix of each layer.
  auto brute = [&](const Integer &from, long count, const std::set<Integer> &emitted) {
    for (long t = 0; t < count; ++t) {
      Integer l = from + t;
      auto c = space.decode(l);
      if (member(c.p, c.tau) != (emitted.count(l) == 1))
        return false;
    }
    return true;
  };
  out.require(brute(0, prefix, prefix_emitted), "brute-force filter agrees on height-1 prefix");
  std::set<Integer> layer2_emitted;
  enumerate_X(space, n1, std::uint64_t(prefix), [&](const Candidate &c) {
    layer2_emitted.insert(c.index);
    return true;
  });
  out.require(brute(n1, prefix, layer2_emitted), "brute-force filter agrees on height-2 prefix");
  mark("prefix checks");

  // Height 2: scan until the deadline.
  auto count2 = oracle::count_members_22_k1(2);
  Integer n2 = space.grid_size(2);
  out.require(count2.grid == n2, "height-2 grid size");
  mark("height-2 oracle count");
  Integer next = n1;
  std::uint64_t emitted2 = 0;
  auto t2 = Clock::now();
  while (next < n2 && Clock::now() < deadline) {
    auto r = enumerate_X(space, next, 500000, [&](const Candidate &) {
      ++emitted2;
      return true;
    });
    next = r.next_index;
  }
  double rate = mpz_class(next - n1).get_d() / std::max(1e-9, seconds_since(t2));
  bool covered = next >= n2;
  out.require(covered, "height <= 2 comparison within 2 min");
  out.detail << "height 1: " << emitted1 << " of " << n1.get_str() << " candidates are members (oracle "
             << count1.members.get_str() << "); height <= 2 grid has " << n2.get_str() << " candidates with "
             << count2.members.get_str() << " members, scanned " << mpz_class(next - n1).get_str()
             << " height-2 candidates at " << rate << "/s, projected full scan "
             << (mpz_class(n2 - n1).get_d() / rate / 3600.0) << " h; phases: " << phases.str();
}

void end_to_end(Outcome &out) {
  auto fam = toy_family();
  auto T = QcModulus::constant(1);
  const std::vector<std::string> ones = {"1", "01", "11", "001", "011", "101", "111", "0001", "1101", "0110101"};
  const std::vector<std::string> zeros = {"0", "10", "00", "110", "100", "010", "000", "1110", "0010", "1011010"};
  std::set<std::string> indices;
  for (const auto &z : ones) {
    auto o = verify(z, fam, T, 100000);
    out.require(accepted(o), "accept for z=" + z);
    if (!accepted(o))
      continue;
    const auto &cert = std::get<VerdictCertificate>(o);
    out.require(cert.value > Q(1, 2), "value > 1/2");
    out.require(cert.value == game_value(fam.generate(z), cert.p), "value recomputation");
    out.require(recheck_certificate(cert, fam), "recheck for z=" + z);
    indices.insert(cert.index.get_str());
  }
  for (const auto &z : zeros)
    out.require(!accepted(verify(z, fam, T, 100000)), "budget exhausted for z=" + z);
  out.require(Q(1, 2) - Q(1, 12) > Q(1, 3), "1/2 - 1/12 > 1/3");
  out.require(Q(2, 3) - Q(1, 12) > Q(1, 2), "2/3 - 1/12 > 1/2");
  out.detail << "accepting index";
  for (const auto &i : indices)
    out.detail << " " << i;
}

void completeness_chain(Outcome &out) {
  const int k = 5;
  auto p = make_params(2, 3);
  auto sup = required_support(k, p);
  auto table = approx_product_table(k, p);
  Rational eta = std::min(delta_for_k(k).delta, Q(1, 12));
  for (const auto &s : table) {
    Rational weight = ring_l1_bound(s.value);
    if (sgn(weight) > 0)
      eta = std::min(eta, Rational((Q(1, k) - s.error_bound) / weight));
  }
  eta /= 2;
  out.require(eta < Q(1, 12), "eta < 1/12");
  for_each_answer_function(p, 100, [&](const AnswerFunction &f) {
    auto tau = character_trace(f, p, sup);
    auto c = correlation_from_trace(tau);
    auto r = rationalize_pair(tau, c, eta);
    out.require(r.trace_distance < eta, "rounding within eta");
    out.require(is_k_approximate(r.tau, k).pass, "rounded trace is 5-approximate");
    out.require(is_k_adapted(r.tau, r.p, k).pass, "rounded pair is 5-adapted");
  });
  out.detail << "eta = " << to_string(eta) << " for all 9 characters at (2,3)";
}

void stability(Outcome &out) {
  auto p = make_params(2, 2);
  auto reg = correlation_from_trace(regular_trace(p, short_words(p)));
  out.require(stability_probe(reg, 4).distance == 0, "distance 0 for the regular correlation");
  Correlation ones(p, std::vector<Rational>(16, Rational(1)));
  out.require(stability_probe(ones, 4).distance == 1, "distance 1 for the all-ones correlation");
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rational> e;
    for (int t = 0; t < 16; ++t)
      e.push_back(make_rational(long(rng() % 5), 4));
    Correlation c(p, e);
    Rational prev = 2;
    for (int depth = 1; depth <= 4; ++depth) {
      Rational d = stability_probe(c, depth).distance;
      out.require(d <= prev, "nonincreasing in depth");
      prev = d;
    }
  }
  out.detail << "regular 0, all-ones 1, 10 random correlations monotone";
}

} // namespace

int main() {
  report("projection-algebra", 5, projection_algebra);
  report("computable-s", 30, computable_s);
  report("perturbation-stability", 0, perturbation);
  report("trace-to-correlation", 0, trace_to_correlation);
  report("enumerator-desk-scale", 120, enumerator_desk_scale);
  report("end-to-end-verifier", 0, end_to_end);
  report("completeness-chain", 0, completeness_chain);
  report("stability-probe", 0, stability);
  return failures == 0 ? 0 : 1;
}
