#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "json_io.hpp"
#include "rbs/minimal_model.hpp"
#include "rbs/monomial_model.hpp"

using namespace rbs;
using rbsio::json;
using rbsio::InputError;

namespace {

constexpr int kPass = 0, kFail = 1, kInputError = 2;

struct Report {
  json body;
  bool ok = true;
};

json residual_entry(const MultiMap& m) { return {{"ok", m.is_zero()}, {"residual", rbsio::to_json(m)}}; }
json residual_entry(const TensorElem& t) { return {{"ok", t.is_zero()}, {"residual", rbsio::to_json(t)}}; }

Report verify_d_squared(const std::string& pres, int max_arity) {
  Presentation p;
  if (pres == "mrs") p = Presentation::Mrs;
  else if (pres == "xyz") p = Presentation::Xyz;
  else throw InputError("presentation must be mrs or xyz");
  if (max_arity < 2) throw InputError("--max-arity must be >= 2");
  auto r = check_d_squared(p, max_arity);
  json cases = json::object();
  for (const auto& c : r.cases)
    cases[c.generator.name()] = {{"differential", c.differential.to_string()},
                                 {"residual", c.residual.to_string()},
                                 {"ok", c.ok()}};
  return {{{"suite", "verify d-squared"},
           {"parameters", {{"presentation", pres}, {"max_arity", max_arity}}},
           {"cases", cases},
           {"ok", r.ok()}},
          r.ok()};
}

Report verify_homotopy(int A, int W) {
  if (A < 1 || W < 1) throw InputError("--max-arity and --max-weight must be >= 1");
  auto r = check_homotopy(A, W);
  json fails = json::array();
  for (const auto& f : r.failures) fails.push_back({{"tree", f.tree.to_string()}, {"residual", f.residual.to_string()}});
  return {{{"suite", "verify homotopy"},
           {"parameters", {{"max_arity", A}, {"max_weight", W}}},
           {"enumerated", r.enumerated},
           {"checked", r.checked},
           {"h_squared_nonzero", r.h_squared_nonzero},
           {"failures", fails},
           {"ok", r.ok()}},
          r.ok()};
}

Report verify_linfinity(int dim, int trunc, int trials, std::uint64_t seed) {
  if (dim < 1 || dim > 3 || trunc < 1 || trunc > 4 || trials < 0)
    throw InputError("need 1 <= --dim <= 3, 1 <= --trunc <= 4, --trials >= 0");
  auto r = check_generalized_jacobi(dim, trunc, trials, seed);
  json cases = json::array();
  for (std::size_t i = 0; i < r.cases.size(); ++i)
    cases.push_back({{"trial", i}, {"shape", r.cases[i].shape}, {"nonzero_terms", r.cases[i].nonzero_terms}, {"ok", r.cases[i].ok}});
  return {{{"suite", "verify linfinity"},
           {"parameters", {{"dim", dim}, {"trunc", trunc}, {"trials", trials}, {"seed", seed}}},
           {"nontrivial", r.nontrivial()},
           {"failures", r.failures()},
           {"cases", cases},
           {"ok", r.ok()}},
          r.ok()};
}

Report check_rbs(const std::string& file) {
  json j = rbsio::load_file(file);
  auto A = rbsio::algebra_from(rbsio::field(j, "algebra"));
  const auto& v = A.algebra->space();
  auto R = rbsio::multimap_from(rbsio::field(j, "R"), v, v);
  auto S = rbsio::multimap_from(rbsio::field(j, "S"), v, v);
  if (R.arity() != 1 || S.arity() != 1 || R.degree() != 0 || S.degree() != 0)
    throw InputError("R and S must be unary of degree 0");
  auto c = check_classical_rbs(*A.algebra, R, S);
  return {{{"suite", "check rbs"},
           {"parameters", {{"file", file}}},
           {"rbs1", residual_entry(c.rbs1)},
           {"rbs2", residual_entry(c.rbs2)},
           {"ok", c.ok()}},
          c.ok()};
}

Report check_hrbs(const std::string& file, std::optional<int> max_arity) {
  json j = rbsio::load_file(file);
  auto h = rbsio::hrbs_from(j);
  const int N = max_arity.value_or(h.truncation);
  if (N < 1 || N > h.truncation) throw InputError("--max-arity must lie in 1..truncation");
  json cases = json::object();
  bool ok = true;
  for (int n = 1; n <= N; ++n) {
    auto st = stasheff_residual(h, n), r = hrbs_residual_R(h, n), s = hrbs_residual_S(h, n);
    ok &= st.is_zero() && r.is_zero() && s.is_zero();
    cases[std::to_string(n)] = {{"stasheff", residual_entry(st)}, {"R", residual_entry(r)}, {"S", residual_entry(s)}};
  }
  return {{{"suite", "check hrbs"},
           {"parameters", {{"file", file}, {"max_arity", N}}},
           {"arities", cases},
           {"ok", ok}},
          ok};
}

Report check_ybp(const std::string& file) {
  json j = rbsio::load_file(file);
  auto A = rbsio::algebra_from(rbsio::field(j, "algebra"));
  YBPair p{rbsio::tensor_from(rbsio::field(j, "r"), A.algebra), rbsio::tensor_from(rbsio::field(j, "s"), A.algebra)};
  if (p.r.order() != 2 || p.s.order() != 2) throw InputError("r and s must have order 2");
  auto res = check_classical_ybp(p);
  return {{{"suite", "check ybp"},
           {"parameters", {{"file", file}}},
           {"ybp1", residual_entry(res.first)},
           {"ybp2", residual_entry(res.second)},
           {"ok", res.ok()}},
          res.ok()};
}

Report check_aybe(const std::string& file, std::optional<int> max_n) {
  json j = rbsio::load_file(file);
  auto A = rbsio::algebra_from(rbsio::field(j, "algebra"));
  auto p = rbsio::infinity_pair_from(j, A);
  const int N = max_n.value_or(p.truncation - 1);
  if (N < 0 || N > p.truncation - 1) throw InputError("--max-n must lie in 0..truncation-1");
  json cases = json::object();
  bool ok = true;
  for (int n = 0; n <= N; ++n) {
    auto r = check_infinity_ybp(p, n);
    ok &= r.ok();
    cases[std::to_string(n)] = {{"r", residual_entry(r.first)}, {"s", residual_entry(r.second)}};
  }
  return {{{"suite", "check aybe-infinity"},
           {"parameters", {{"file", file}, {"max_n", N}}},
           {"orders", cases},
           {"ok", ok}},
          ok};
}

struct McInput {
  std::optional<LinftyContext> ctx;
  CochainElement alpha;
};

McInput mc_input(const json& j) {
  McInput in;
  if (j.contains("alpha")) {
    in.ctx.emplace(rbsio::space_from(rbsio::field(j, "space")));
    in.alpha = rbsio::cochain_from(j.at("alpha"), *in.ctx);
    return in;
  }
  auto A = rbsio::algebra_from(rbsio::field(j, "algebra"));
  const auto& v = A.algebra->space();
  in.ctx.emplace(v);
  auto R = rbsio::multimap_from(rbsio::field(j, "R"), v, v);
  auto S = rbsio::multimap_from(rbsio::field(j, "S"), v, v);
  try {
    in.alpha = encode_rbs(*in.ctx, A.algebra->multiplication_map(), R, S);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return in;
}

const char* kConvention = "residual = sum_{n>=2} l_n(alpha, ..., alpha) / n!, alpha of degree -1";

Report check_mc(const std::string& file) {
  auto in = mc_input(rbsio::load_file(file));
  if (!in.alpha.is_zero() && *in.alpha.degree() != -1) throw InputError("alpha must have degree -1");
  auto res = mc_residual(*in.ctx, in.alpha);
  return {{{"suite", "check mc"},
           {"parameters", {{"file", file}}},
           {"convention", kConvention},
           {"residual", rbsio::to_json(res)},
           {"ok", res.is_zero()}},
          res.is_zero()};
}

Report run_twist(const std::string& file, int max_arity) {
  if (max_arity < 1 || max_arity > 3) throw InputError("--max-arity must lie in 1..3");
  auto in = mc_input(rbsio::load_file(file));
  if (!in.alpha.is_zero() && *in.alpha.degree() != -1) throw InputError("alpha must have degree -1");
  json body{{"suite", "twist"}, {"parameters", {{"file", file}, {"max_arity", max_arity}}}, {"convention", kConvention}};
  if (!is_mc(*in.ctx, in.alpha)) {
    body["is_mc"] = false;
    body["ok"] = false;
    return {body, false};
  }
  int total = 0, lowered = 0;
  json bad = json::array();
  for (const auto& b : basis_cochains(*in.ctx, max_arity)) {
    ++total;
    auto y = twist(*in.ctx, in.alpha, b);
    if (y.is_zero() || *y.degree() == *b.degree() - 1) ++lowered;
    auto z = twist(*in.ctx, in.alpha, y);
    if (!z.is_zero()) bad.push_back({{"cochain", rbsio::to_json(b)}, {"square", rbsio::to_json(z)}});
  }
  const bool ok = bad.empty() && lowered == total;
  body["is_mc"] = true;
  body["basis_cochains"] = total;
  body["degree_lowered_by_one"] = lowered;
  body["nonzero_squares"] = bad;
  body["ok"] = ok;
  return {body, ok};
}

Report convert_ybp_to_rbs(const std::string& file) {
  json j = rbsio::load_file(file);
  auto A = rbsio::algebra_from(rbsio::field(j, "algebra"));
  YBPair p{rbsio::tensor_from(rbsio::field(j, "r"), A.algebra), rbsio::tensor_from(rbsio::field(j, "s"), A.algebra)};
  if (p.r.order() != 2 || p.s.order() != 2) throw InputError("r and s must have order 2");
  if (!p.r.is_zero() && p.r.degree() != 0) throw InputError("r must have degree 0");
  if (!p.s.is_zero() && p.s.degree() != 0) throw InputError("s must have degree 0");
  auto [R, S] = ybp_to_rbs(p);
  return {{{"algebra", A.spec}, {"R", rbsio::to_json(R)}, {"S", rbsio::to_json(S)}}, true};
}

Report convert_rbs_to_ybp(const std::string& file) {
  json j = rbsio::load_file(file);
  auto A = rbsio::algebra_from(rbsio::field(j, "algebra"));
  if (!A.matrix) throw InputError("rbs-to-ybp needs a matrix algebra");
  const auto& v = A.algebra->space();
  auto R = rbsio::multimap_from(rbsio::field(j, "R"), v, v);
  auto S = rbsio::multimap_from(rbsio::field(j, "S"), v, v);
  auto p = rbs_to_ybp(R, S, A.matrix);
  return {{{"algebra", A.spec}, {"r", rbsio::to_json(p.r)}, {"s", rbsio::to_json(p.s)}}, true};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks homotopy Rota-Baxter systems, Yang-Baxter pairs and their L-infinity deformation theory."};
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing, "add wall time to the report (breaks byte-for-byte reproducibility)");

  std::function<Report()> job;
  std::string file, presentation = "mrs";
  int max_arity = 4, twist_arity = 2, max_weight = 5, dim = 2, trunc = 3, trials = 100;
  std::optional<int> opt_arity, opt_n;
  std::uint64_t seed = 1;

  auto* verify = app.add_subcommand("verify", "symbolic verification suites")->require_subcommand(1);
  auto* vd = verify->add_subcommand("d-squared", "d^2 = 0 on the generators of a presentation");
  vd->add_option("--presentation", presentation, "mrs or xyz")->check(CLI::IsMember({"mrs", "xyz"}));
  vd->add_option("--max-arity", max_arity, "largest generator arity")->check(CLI::Range(2, 8));
  vd->callback([&] { job = [&] { return verify_d_squared(presentation, max_arity); }; });

  auto* vh = verify->add_subcommand("homotopy", "dH + Hd = Id on positive-degree monomials");
  vh->add_option("--max-arity", max_arity)->check(CLI::Range(1, 5));
  vh->add_option("--max-weight", max_weight)->check(CLI::Range(1, 6));
  vh->callback([&] { job = [&] { return verify_homotopy(max_arity, max_weight); }; });

  auto* vl = verify->add_subcommand("linfinity", "generalized Jacobi identities on random cochains");
  vl->add_option("--dim", dim)->check(CLI::Range(1, 3));
  vl->add_option("--trunc", trunc)->check(CLI::Range(1, 4));
  vl->add_option("--trials", trials)->check(CLI::NonNegativeNumber);
  vl->add_option("--seed", seed);
  vl->callback([&] { job = [&] { return verify_linfinity(dim, trunc, trials, seed); }; });

  auto* check = app.add_subcommand("check", "check a structure read from a JSON file")->require_subcommand(1);
  auto* cr = check->add_subcommand("rbs", "Rota-Baxter system on a based algebra");
  cr->add_option("FILE", file)->required();
  cr->callback([&] { job = [&] { return check_rbs(file); }; });
  auto* ch = check->add_subcommand("hrbs", "homotopy Rota-Baxter system");
  ch->add_option("FILE", file)->required();
  ch->add_option("--max-arity", opt_arity);
  ch->callback([&] { job = [&] { return check_hrbs(file, opt_arity); }; });
  auto* cy = check->add_subcommand("ybp", "associative Yang-Baxter pair");
  cy->add_option("FILE", file)->required();
  cy->callback([&] { job = [&] { return check_ybp(file); }; });
  auto* ca = check->add_subcommand("aybe-infinity", "infinity Yang-Baxter pair");
  ca->add_option("FILE", file)->required();
  ca->add_option("--max-n", opt_n);
  ca->callback([&] { job = [&] { return check_aybe(file, opt_n); }; });
  auto* cm = check->add_subcommand("mc", "Maurer-Cartan equation in the deformation L-infinity algebra");
  cm->add_option("FILE", file)->required();
  cm->callback([&] { job = [&] { return check_mc(file); }; });

  auto* tw = app.add_subcommand("twist", "check that the twisted differential squares to zero on basis cochains");
  tw->add_option("FILE", file)->required();
  tw->add_option("--max-arity", twist_arity)->check(CLI::Range(1, 3));
  tw->callback([&] { job = [&] { return run_twist(file, twist_arity); }; });

  auto* conv = app.add_subcommand("convert", "translate between pairs and operators")->require_subcommand(1);
  auto* c1 = conv->add_subcommand("ybp-to-rbs");
  c1->add_option("FILE", file)->required();
  c1->callback([&] { job = [&] { return convert_ybp_to_rbs(file); }; });
  auto* c2 = conv->add_subcommand("rbs-to-ybp");
  c2->add_option("FILE", file)->required();
  c2->callback([&] { job = [&] { return convert_rbs_to_ybp(file); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    const auto t0 = std::chrono::steady_clock::now();
    Report r = job();
    if (timing) r.body["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << r.body.dump(2) << '\n';
    return r.ok ? kPass : kFail;
  } catch (const InputError& e) {
    std::cout << json{{"error", e.what()}}.dump(2) << '\n';
    return kInputError;
  } catch (const json::exception& e) {
    std::cout << json{{"error", e.what()}}.dump(2) << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cout << json{{"error", e.what()}}.dump(2) << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {
    std::cout << json{{"error", e.what()}}.dump(2) << '\n';
    return kInputError;
  }
}
