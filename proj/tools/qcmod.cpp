#include "qcmod/errors.hpp"
#include "qcmod/json_io.hpp"
#include "qcmod/spectral.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace qcmod;
using json_io::json;

namespace {

enum Exit { kOk = 0, kError = 1, kBudgetExhausted = 2, kCheckFailed = 3 };

void emit(const json &j) { std::cout << j.dump(2) << '\n'; }

QcModulus modulus_arg(const std::string &text) {
  try {
    std::size_t used = 0;
    int k = std::stoi(text, &used);
    if (used == text.size())
      return QcModulus::constant(k);
  } catch (const std::logic_error &) {
  }
  return json_io::modulus_from(json_io::read_file(text));
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact approximate traces, correlation enumeration and game verification on F(n,m)"};
  app.require_subcommand(1);
  int n = 2, m = 2, k = 1, v = 1, w = 1, i = 1, j = 1, depth = 1;
  std::string file, game_file, corr_file, emit_file, from_text = "0", family = "toy", z,
                                                     modulus_text = "1", resume_file, kind = "regular";
  std::uint64_t budget = 0;
  std::vector<int> f;
  int code = kOk;

  auto add_nm = [&](CLI::App *cmd) {
    cmd->add_option("--n", n, "number of generators")->required();
    cmd->add_option("--m", m, "order of each generator")->required();
  };

  auto *project = app.add_subcommand("project", "spectral projection e_{v,i} in Q(xi_m)F(n,m)");
  add_nm(project);
  project->add_option("--v", v)->required();
  project->add_option("--i", i)->required();
  project->callback([&] { emit(json_io::to_json(projection(v, i, make_params(n, m)))); });

  auto *s = app.add_subcommand("s", "certified Q(i) approximant of e_{v,i} e_{w,j}");
  add_nm(s);
  s->add_option("--v", v)->required();
  s->add_option("--w", w)->required();
  s->add_option("--i", i)->required();
  s->add_option("--j", j)->required();
  s->add_option("--k", k)->required();
  s->callback([&] {
    CertifiedApprox a = approx_product_s(v, w, i, j, k, make_params(n, m));
    json out = json_io::to_json(a.value);
    out["error_bound"] = json_io::to_json(a.error_bound);
    out["k"] = a.k;
    emit(out);
  });

  auto *check = app.add_subcommand("check-trace", "check relaxed R_1..R_k on a trace file");
  check->add_option("--file", file)->required();
  check->add_option("--k", k)->required();
  check->callback([&] {
    PartialTrace tau = json_io::partial_trace_from(json_io::read_file(file));
    ApproximateReport r = is_k_approximate(tau, k);
    emit({{"k", k}, {"pass", r.pass}, {"failures", r.failures}});
    code = r.pass ? kOk : kCheckFailed;
  });

  auto *corr = app.add_subcommand("correlation", "correlation p(i,j|v,w) = tau(e_{v,i} e_{w,j})");
  corr->add_option("--trace", file)->required();
  corr->callback([&] {
    auto t = json_io::trace_from(json_io::read_file(file));
    std::visit([](const auto &tau) { emit(json_io::to_json(correlation_from_trace(tau))); }, t);
  });

  auto *gv = app.add_subcommand("game-val", "exact game value val(G, p)");
  gv->add_option("--game", game_file)->required();
  gv->add_option("--corr", corr_file)->required();
  gv->callback([&] {
    NonlocalGame g = json_io::game_from(json_io::read_file(game_file));
    Correlation p = json_io::correlation_from(json_io::read_file(corr_file));
    emit({{"value", json_io::to_json(game_value(g, p))}});
  });

  auto *en = app.add_subcommand("enumerate", "scan the candidate grid of X^{n,m}_k");
  add_nm(en);
  en->add_option("--k", k)->required();
  en->add_option("--budget", budget, "number of indices to examine")->required();
  en->add_option("--from", from_text, "first index (decimal)");
  en->add_option("--emit", emit_file, "write JSON-lines here instead of stdout");
  en->callback([&] {
    Integer from;
    if (from.set_str(from_text, 10) != 0 || sgn(from) < 0)
      throw InputError("--from must be a nonnegative decimal integer");
    std::ofstream out_file;
    if (!emit_file.empty()) {
      out_file.open(emit_file);
      if (!out_file)
        throw InputError("cannot write " + emit_file);
    }
    std::ostream &out = emit_file.empty() ? std::cout : out_file;
    CandidateSpace space(make_params(n, m), k);
    ScanResult r = enumerate_X(space, from, budget, [&](const Candidate &c) {
      out << json_io::to_json(c).dump() << '\n';
      return true;
    });
    std::cerr << json{{"next_index", r.next_index.get_str()},
                      {"examined", r.examined},
                      {"emitted", r.emitted}}
                     .dump()
              << '\n';
  });

  auto *ver = app.add_subcommand("verify", "semi-decision verifier for s-val > 1/2");
  ver->add_option("--family", family)->required();
  ver->add_option("--z", z)->required();
  ver->add_option("--modulus", modulus_text, "constant k, or a modulus JSON file")->required();
  ver->add_option("--budget", budget)->required();
  ver->add_option("--resume", resume_file, "progress document from an earlier run");
  ver->callback([&] {
    GameFamily fam = family_by_name(family);
    QcModulus t = modulus_arg(modulus_text);
    Integer from = 0;
    if (!resume_file.empty()) {
      VerifyProgress prev = json_io::progress_from(json_io::read_file(resume_file));
      if (prev.z != z || prev.family != family || !(prev.modulus == t))
        throw InputError("resume file was produced for a different job");
      from = prev.next_index;
    }
    VerifyOutcome o = verify(z, fam, t, budget, from);
    std::visit([](const auto &x) { emit(json_io::to_json(x)); }, o);
    code = accepted(o) ? kOk : kBudgetExhausted;
  });

  auto *re = app.add_subcommand("recheck", "replay a verdict certificate");
  re->add_option("--cert", file)->required();
  re->callback([&] {
    VerdictCertificate c = json_io::certificate_from(json_io::read_file(file));
    bool ok = recheck_certificate(c, family_by_name(c.family));
    emit({{"valid", ok}});
    code = ok ? kOk : kCheckFailed;
  });

  auto *pr = app.add_subcommand("probe", "distance bound to the synchronous classical hull");
  pr->add_option("--corr", corr_file)->required();
  pr->add_option("--depth", depth)->required();
  pr->callback([&] {
    Correlation p = json_io::correlation_from(json_io::read_file(corr_file));
    emit(json_io::to_json(stability_probe(p, depth)));
  });

  auto *mk = app.add_subcommand("make-trace", "regular or character trace on required_support(k)");
  add_nm(mk);
  mk->add_option("--k", k)->required();
  mk->add_option("--kind", kind)->check(CLI::IsMember({"regular", "character"}));
  mk->add_option("--f", f, "answer function values f(1) ... f(n) for a character");
  mk->callback([&] {
    GroupParams params = make_params(n, m);
    auto support = required_support(k, params);
    if (kind == "regular")
      emit(json_io::to_json(regular_trace(params, support)));
    else
      emit(json_io::to_json(character_trace(f, params, support)));
  });

  auto *dl = app.add_subcommand("delta", "perturbation radius delta(k)");
  dl->add_option("--k", k)->required();
  dl->callback([&] { emit({{"k", k}, {"delta", json_io::to_json(delta_for_k(k).delta)}}); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? kOk : kError;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return code;
}
