// Command-line front end: solve the disc boundary value problems, check
// solvability conditions, run the identity suite, verify fields, and emit
// manufactured test problems.
//
// Exit codes: 0 pass, 1 usage/config error, 2 check failed,
//             3 requested tolerance below the quadrature floor.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tribvp/core.hpp"
#include "tribvp/identities.hpp"
#include "tribvp/io.hpp"
#include "tribvp/solvers_base.hpp"
#include "tribvp/solvers_tri.hpp"
#include "tribvp/verify.hpp"

namespace {

using namespace tribvp;
using json = io::json;

constexpr double kIdentityFloor = 1e-9;  // below this, tolerance is unachievable

struct CommonOpts {
  std::string json_path;
  std::string problem_kind;
  std::string f_expr, gamma_expr, gamma0_expr, gamma1_expr;
  std::string c_str, c1_str;
  quad::RuleConfig rules;
  double tol = 1e-6;
};

void add_problem_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--json", o.json_path, "problem JSON file");
  cmd->add_option("--problem,-p", o.problem_kind,
                  "problem kind: dirichlet_cr|neumann_cr|bitsadze_dn|ndn|dnd");
  cmd->add_option("--f", o.f_expr, "right-hand side expression in z, conj(z)");
  cmd->add_option("--gamma", o.gamma_expr, "gamma boundary expression");
  cmd->add_option("--gamma0", o.gamma0_expr, "gamma0 boundary expression");
  cmd->add_option("--gamma1", o.gamma1_expr, "gamma1 boundary expression");
  cmd->add_option("--c", o.c_str, "constant c as re,im");
  cmd->add_option("--c1", o.c1_str, "constant c1 as re,im");
  cmd->add_option("--boundary-n", o.rules.boundary_n, "boundary rule nodes");
  cmd->add_option("--area-nr", o.rules.area_nr, "area rule radial nodes");
  cmd->add_option("--area-ntheta", o.rules.area_ntheta, "area rule angular nodes");
  cmd->add_option("--r-max", o.rules.r_max, "safe interior radius");
  cmd->add_option("--tol", o.tol, "condition tolerance");
}

Complex parse_complex_pair(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) return Complex(std::stod(s), 0.0);
  return Complex(std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1)));
}

core::ProblemData load_problem(const CommonOpts& o) {
  bool has_inline = !o.problem_kind.empty() || !o.f_expr.empty();
  if (!o.json_path.empty() && has_inline)
    throw Error("give either --json or inline flags, not both");
  if (!o.json_path.empty()) {
    std::ifstream is(o.json_path);
    if (!is) throw Error("cannot read '" + o.json_path + "'");
    json j = json::parse(is);
    return io::problem_from_json(j);
  }
  if (o.problem_kind.empty()) throw Error("missing --problem (or --json)");
  auto kind = core::kind_from_name(o.problem_kind);
  if (!kind) throw Error("unknown problem kind '" + o.problem_kind + "'");
  core::ProblemData data;
  data.kind = *kind;
  if (o.f_expr.empty()) throw MissingField(o.problem_kind, "f");
  data.f = core::ComplexFunction::from_source(o.f_expr, core::FnDomain::ClosedDisc);
  if (!o.gamma_expr.empty())
    data.gamma = core::ComplexFunction::from_source(o.gamma_expr, core::FnDomain::Boundary);
  if (!o.gamma0_expr.empty())
    data.gamma0 = core::ComplexFunction::from_source(o.gamma0_expr, core::FnDomain::Boundary);
  if (!o.gamma1_expr.empty())
    data.gamma1 = core::ComplexFunction::from_source(o.gamma1_expr, core::FnDomain::Boundary);
  if (!o.c_str.empty()) data.c = parse_complex_pair(o.c_str);
  if (!o.c1_str.empty()) data.c1 = parse_complex_pair(o.c1_str);
  core::validate(data);
  return data;
}

std::function<Complex(Complex)> make_field(const core::ProblemData& data,
                                           const quad::RuleConfig& rules,
                                           const std::string& method) {
  using namespace solvers;
  if (method == "composed") {
    ComposedConfig ccfg;
    switch (data.kind) {
      case core::ProblemKind::TriNDN: {
        auto s = std::make_shared<NdnComposedSolver>(data, ccfg);
        return [s](Complex z) { return s->value(z); };
      }
      case core::ProblemKind::TriDND: {
        auto s = std::make_shared<DndComposedSolver>(data, ccfg);
        return [s](Complex z) { return s->value(z); };
      }
      default:
        throw Error("composed method exists only for ndn/dnd");
    }
  }
  switch (data.kind) {
    case core::ProblemKind::DirichletCR: {
      auto s = std::make_shared<DirichletCR>(data.f, *data.gamma0, rules);
      return [s](Complex z) { return s->value(z); };
    }
    case core::ProblemKind::NeumannCR: {
      auto s = std::make_shared<NeumannCR>(data.f, *data.gamma, *data.c, rules);
      return [s](Complex z) { return s->value(z); };
    }
    case core::ProblemKind::BitsadzeDN: {
      auto s = std::make_shared<BitsadzeDN>(data.f, *data.gamma0, *data.gamma1, *data.c,
                                            rules);
      return [s](Complex z) { return s->value(z); };
    }
    case core::ProblemKind::TriNDN: {
      auto s = std::make_shared<NdnSolver>(data, rules);
      return [s](Complex z) { return s->value(z); };
    }
    case core::ProblemKind::TriDND: {
      auto s = std::make_shared<DndSolver>(data, rules);
      return [s](Complex z) { return s->value(z); };
    }
  }
  throw Error("unreachable");
}

int run_solve(const CommonOpts& o, const std::string& out_prefix, int grid_nr,
              int grid_ntheta, double grid_rmax, const std::string& method) {
  core::ProblemData data = load_problem(o);
  auto field_fn = make_field(data, o.rules, method);

  core::SolutionField field;
  field.grid = core::EvaluationGrid::polar(grid_nr, grid_ntheta, grid_rmax);
  field.values.resize(field.grid.points.size());
  parallel_for(field.grid.points.size(), [&](std::size_t i) {
    field.values[i] = field_fn(field.grid.points[i].value());
  });
  field.provenance = core::kind_name(data.kind) + "/" + method;

  auto report = verify::condition_sweep(data, core::condition_spiral(64, o.rules.r_max),
                                        o.rules, o.tol);

  json sidecar;
  sidecar["problem"] = io::problem_to_json(data);
  sidecar["method"] = method;
  sidecar["rules"] = io::rules_to_json(o.rules);
  sidecar["grid"] = field.grid.descriptor;
  sidecar["conditions"] = io::report_to_json(report);
  sidecar["solution"] = report.pass();
  if (!report.pass()) sidecar["note"] = "not a solution: solvability conditions fail";

  io::write_field_csv(out_prefix + ".csv", field);
  io::write_text(out_prefix + ".json", sidecar.dump(2) + "\n");
  std::printf("wrote %s.csv and %s.json; conditions %s (worst %.3e, tol %.1e)\n",
              out_prefix.c_str(), out_prefix.c_str(),
              report.pass() ? "pass" : "FAIL", report.worst(), o.tol);
  return report.pass() ? 0 : 2;
}

int run_check(const CommonOpts& o) {
  core::ProblemData data = load_problem(o);
  auto report = verify::condition_sweep(data, core::condition_spiral(64, o.rules.r_max),
                                        o.rules, o.tol);
  std::cout << io::report_to_json(report).dump(2) << "\n";
  return report.pass() ? 0 : 2;
}

int run_identities(int samples, unsigned seed, double tol, const std::string& only,
                   const std::string& out_path, const quad::RuleConfig& rules) {
  auto entries = identities::catalog();
  if (!only.empty()) {
    std::vector<identities::IdentityEntry> filtered;
    for (auto& e : entries)
      if (e.id == only) filtered.push_back(e);
    if (filtered.empty()) throw Error("no identity with id '" + only + "'");
    entries = filtered;
  }
  auto rows = identities::sweep(entries, samples, seed, rules);
  json out = io::sweep_to_json(rows);
  if (!out_path.empty()) io::write_text(out_path, out.dump(2) + "\n");
  std::cout << out.dump(2) << "\n";
  bool pass = true;
  for (const auto& r : rows) pass = pass && r.max_err <= tol;
  if (pass) return 0;
  return tol < kIdentityFloor ? 3 : 2;
}

int run_manufacture(const std::string& omega, const std::string& kind_str,
                    const std::string& out_prefix) {
  auto kind = core::kind_from_name(kind_str);
  if (!kind) throw Error("unknown problem kind '" + kind_str + "'");
  auto mp = verify::manufacture(expr::parse(omega), *kind);
  json j = io::problem_to_json(mp.data);
  j["omega"] = expr::print(mp.omega);
  io::write_text(out_prefix + ".json", j.dump(2) + "\n");

  core::SolutionField ref;
  ref.grid = core::EvaluationGrid::polar(12, 24, 0.7);
  ref.values.resize(ref.grid.points.size());
  for (std::size_t i = 0; i < ref.values.size(); ++i)
    ref.values[i] = mp.reference(ref.grid.points[i].value());
  ref.provenance = "manufactured reference";
  io::write_field_csv(out_prefix + "_reference.csv", ref);
  std::printf("wrote %s.json and %s_reference.csv\n", out_prefix.c_str(),
              out_prefix.c_str());
  return 0;
}

int run_verify(const CommonOpts& o, const std::string& against_path,
               const std::string& method) {
  core::ProblemData data = load_problem(o);
  core::ProblemData against = data;
  if (!against_path.empty()) {
    std::ifstream is(against_path);
    if (!is) throw Error("cannot read '" + against_path + "'");
    against = io::problem_from_json(json::parse(is));
  }
  auto field_fn = make_field(data, o.rules, method);
  auto grid = core::EvaluationGrid::polar(5, 8, 0.6);
  auto diag = verify::verify_solution(field_fn, against, grid);
  auto report = verify::condition_sweep(against, core::condition_spiral(64, o.rules.r_max),
                                        o.rules, o.tol);
  json out;
  out["diagnostics"] = io::diagnostics_to_json(diag);
  out["conditions"] = io::report_to_json(report);
  std::cout << out.dump(2) << "\n";
  return (diag.pass() && report.pass()) ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"boundary value problems for dbar^k w = f on the unit disc"};
  app.require_subcommand(1);

  CommonOpts solve_opts, check_opts, verify_opts;
  std::string out_prefix = "field";
  std::string method = "direct";
  int grid_nr = 10, grid_ntheta = 24;
  double grid_rmax = 0.7;

  CLI::App* solve = app.add_subcommand("solve", "evaluate a solution field");
  add_problem_flags(solve, solve_opts);
  solve->add_option("--out", out_prefix, "output prefix for .csv/.json");
  solve->add_option("--method", method, "direct|composed");
  solve->add_option("--grid-nr", grid_nr, "grid radial count");
  solve->add_option("--grid-ntheta", grid_ntheta, "grid angular count");
  solve->add_option("--grid-rmax", grid_rmax, "grid outer radius");

  CLI::App* check = app.add_subcommand("check", "solvability condition residuals");
  add_problem_flags(check, check_opts);

  int id_samples = 100;
  unsigned id_seed = 20230517;
  double id_tol = 1e-6;
  std::string id_only, id_out;
  quad::RuleConfig id_rules{2048, 240, 512, kDefaultRMax};  // doubled budgets
  CLI::App* ident = app.add_subcommand("identities", "closed-form identity sweep");
  ident->add_option("--samples", id_samples, "sample pairs per identity");
  ident->add_option("--seed", id_seed, "sample seed");
  ident->add_option("--tol", id_tol, "max error tolerance");
  ident->add_option("--only", id_only, "run a single identity id");
  ident->add_option("--out", id_out, "write the JSON report here");
  ident->add_option("--boundary-n", id_rules.boundary_n, "boundary rule nodes");
  ident->add_option("--area-nr", id_rules.area_nr, "area rule radial nodes");
  ident->add_option("--area-ntheta", id_rules.area_ntheta, "area rule angular nodes");

  std::string mf_omega, mf_kind = "ndn", mf_out = "problem";
  CLI::App* mf = app.add_subcommand("manufacture", "derive exact data from omega");
  mf->add_option("--omega", mf_omega, "polynomial omega in z, conj(z)")->required();
  mf->add_option("--kind", mf_kind, "problem kind");
  mf->add_option("--out", mf_out, "output prefix");

  std::string against_path, verify_method = "direct";
  CLI::App* ver = app.add_subcommand("verify", "residuals of a solve against data");
  add_problem_flags(ver, verify_opts);
  ver->add_option("--against", against_path, "verify against this problem JSON");
  ver->add_option("--method", verify_method, "direct|composed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (solve->parsed())
      return run_solve(solve_opts, out_prefix, grid_nr, grid_ntheta, grid_rmax, method);
    if (check->parsed()) return run_check(check_opts);
    if (ident->parsed())
      return run_identities(id_samples, id_seed, id_tol, id_only, id_out, id_rules);
    if (mf->parsed()) return run_manufacture(mf_omega, mf_kind, mf_out);
    if (ver->parsed()) return run_verify(verify_opts, against_path, verify_method);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
