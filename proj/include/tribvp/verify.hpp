#pragma once

// Manufactured problems and end-to-end residual checks. A polynomial omega in
// z, conj(z) is pushed through the trace and derivative operators of a
// problem kind; the resulting data are exact, so solver output can be
// compared against ground truth.

#include <cmath>
#include <string>
#include <vector>

#include "tribvp/common.hpp"
#include "tribvp/core.hpp"
#include "tribvp/expr.hpp"
#include "tribvp/ops.hpp"
#include "tribvp/solvers_base.hpp"
#include "tribvp/solvers_tri.hpp"

namespace tribvp::verify {

using core::ComplexFunction;
using core::ProblemData;
using core::ProblemKind;
using core::SolvabilityReport;

struct ManufacturedProblem {
  expr::ExprPtr omega;
  ProblemKind kind;
  ProblemData data;
  std::function<Complex(Complex)> reference;
};

namespace detail {

inline ComplexFunction boundary_fn(const expr::Poly& p) {
  return ComplexFunction::from_expression(expr::from_poly(expr::poly_trace(p)),
                                          core::FnDomain::Boundary);
}

inline ComplexFunction disc_fn(const expr::Poly& p) {
  return ComplexFunction::from_expression(expr::from_poly(p),
                                          core::FnDomain::ClosedDisc);
}

}  // namespace detail

inline ManufacturedProblem manufacture(const expr::ExprPtr& omega, ProblemKind kind) {
  expr::Poly w = expr::to_poly(omega);  // throws UnsupportedNode off the subset
  expr::Poly d1 = expr::poly_dbar(w);
  expr::Poly d2 = expr::poly_dbar(d1);
  expr::Poly d3 = expr::poly_dbar(d2);

  ManufacturedProblem out;
  out.omega = omega;
  out.kind = kind;
  out.reference = [w](Complex z) { return expr::poly_eval(w, z); };
  ProblemData& d = out.data;
  d.kind = kind;
  switch (kind) {
    case ProblemKind::DirichletCR:
      d.f = detail::disc_fn(d1);
      d.gamma0 = detail::boundary_fn(w);
      break;
    case ProblemKind::NeumannCR:
      d.f = detail::disc_fn(d1);
      d.gamma = detail::boundary_fn(expr::poly_dnu(w));
      d.c = expr::poly_eval(w, Complex(0, 0));
      break;
    case ProblemKind::BitsadzeDN:
      d.f = detail::disc_fn(d2);
      d.gamma0 = detail::boundary_fn(w);
      d.gamma1 = detail::boundary_fn(expr::poly_dnu(d1));
      d.c = expr::poly_eval(d1, Complex(0, 0));
      break;
    case ProblemKind::TriNDN:
      d.f = detail::disc_fn(d3);
      d.gamma = detail::boundary_fn(expr::poly_dnu(w));
      d.gamma0 = detail::boundary_fn(d1);
      d.gamma1 = detail::boundary_fn(expr::poly_dnu(d2));
      d.c = expr::poly_eval(w, Complex(0, 0));
      d.c1 = expr::poly_eval(d2, Complex(0, 0));
      break;
    case ProblemKind::TriDND:
      d.f = detail::disc_fn(d3);
      d.gamma0 = detail::boundary_fn(w);
      d.gamma1 = detail::boundary_fn(expr::poly_dnu(d1));
      d.gamma = detail::boundary_fn(d2);
      d.c = expr::poly_eval(d1, Complex(0, 0));
      break;
  }
  core::validate(d);
  return out;
}

// ------------------------------------------------------------- conditions

inline SolvabilityReport condition_sweep(const ProblemData& data,
                                         const std::vector<core::DiscPoint>& samples,
                                         quad::RuleConfig cfg = {},
                                         double tolerance = 1e-6) {
  core::validate(data);
  SolvabilityReport report;
  report.tolerance_used = tolerance;
  std::vector<std::function<Complex(Complex)>> conds;
  std::vector<std::string> ids;

  // solver objects precompute data samples once; the lambdas share them
  switch (data.kind) {
    case ProblemKind::DirichletCR: {
      auto s = std::make_shared<solvers::DirichletCR>(data.f, *data.gamma0, cfg);
      conds.push_back([s](Complex z) { return s->condition(z); });
      ids.push_back("dirichlet");
      break;
    }
    case ProblemKind::NeumannCR: {
      auto s = std::make_shared<solvers::NeumannCR>(data.f, *data.gamma, *data.c, cfg);
      conds.push_back([s](Complex z) { return s->condition(z); });
      ids.push_back("neumann");
      break;
    }
    case ProblemKind::BitsadzeDN: {
      auto s = std::make_shared<solvers::BitsadzeDN>(data.f, *data.gamma0, *data.gamma1,
                                                     *data.c, cfg);
      conds.push_back([s](Complex z) { return s->condition1(z); });
      conds.push_back([s](Complex z) { return s->condition2(z); });
      ids = {"bitsadze.1", "bitsadze.2"};
      break;
    }
    case ProblemKind::TriNDN: {
      auto s = std::make_shared<solvers::NdnSolver>(data, cfg);
      conds.push_back([s](Complex z) { return s->condition1(z); });
      conds.push_back([s](Complex z) { return s->condition2(z); });
      conds.push_back([s](Complex z) { return s->condition3(z); });
      ids = {"ndn.1", "ndn.2", "ndn.3"};
      break;
    }
    case ProblemKind::TriDND: {
      auto s = std::make_shared<solvers::DndSolver>(data, cfg);
      conds.push_back([s](Complex z) { return s->condition1(z); });
      conds.push_back([s](Complex z) { return s->condition2(z); });
      conds.push_back([s](Complex z) { return s->condition3(z); });
      ids = {"dnd.1", "dnd.2", "dnd.3"};
      break;
    }
  }

  report.per_condition.resize(conds.size());
  for (std::size_t ci = 0; ci < conds.size(); ++ci) {
    SolvabilityReport::Entry e;
    e.condition_id = ids[ci];
    std::vector<double> vals(samples.size());
    parallel_for(samples.size(), [&](std::size_t j) {
      vals[j] = std::abs(conds[ci](samples[j].value()));
    });
    for (std::size_t j = 0; j < samples.size(); ++j) {
      if (vals[j] >= e.sup_residual) {
        e.sup_residual = vals[j];
        e.argmax_point = samples[j];
      }
    }
    report.per_condition[ci] = e;
  }
  return report;
}

// --------------------------------------------------------- field checks

struct CheckLine {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass() const { return value <= tolerance; }
};

struct Diagnostics {
  std::vector<CheckLine> checks;
  bool pass() const {
    for (const CheckLine& c : checks)
      if (!c.pass()) return false;
    return true;
  }
  double worst_ratio() const {
    double w = 0.0;
    for (const CheckLine& c : checks) w = std::max(w, c.value / c.tolerance);
    return w;
  }
};

struct Tolerances {
  double pde_order1 = 1e-4;
  double pde_order2 = 1e-3;
  double pde_order3 = 1e-2;
  double trace = 1e-5;
  double origin_constant = 1e-6;
};

namespace detail {

inline Complex fd_dbar_n(const std::function<Complex(Complex)>& field, Complex z,
                         int order, double h) {
  if (order <= 1) return ops::fd_wirtinger_dbar(field, z, h);
  std::function<Complex(Complex)> inner = [&field, order, h](Complex w) {
    return fd_dbar_n(field, w, order - 1, h);
  };
  return ops::fd_wirtinger_dbar(inner, z, h);
}

// boundary value via linear Richardson from r = 0.999 and 0.998
inline Complex extrapolated_trace(const std::function<Complex(Complex)>& field,
                                  Complex dir) {
  Complex f1 = field(0.999 * dir);
  Complex f2 = field(0.998 * dir);
  return 2.0 * f1 - f2;
}

// deeper variant for fields that are themselves FD stacks (their stencils
// must stay inside the disc); quadratic extrapolation over three radii
inline Complex extrapolated_trace_deep(const std::function<Complex(Complex)>& field,
                                       Complex dir) {
  const double d = 4e-3;
  Complex f1 = field((1.0 - d) * dir);
  Complex f2 = field((1.0 - 2 * d) * dir);
  Complex f3 = field((1.0 - 3 * d) * dir);
  return 3.0 * f1 - 3.0 * f2 + f3;
}

// dnu = r d/dr at r = 1, from radial derivatives at 0.999 and 0.998
inline Complex extrapolated_normal(const std::function<Complex(Complex)>& field,
                                   Complex dir) {
  Complex d1 = ops::fd_radial_derivative(field, dir, 0.999, 4e-4);
  Complex d2 = ops::fd_radial_derivative(field, dir, 0.998, 4e-4);
  return 2.0 * d1 - d2;
}

inline Complex extrapolated_normal_deep(const std::function<Complex(Complex)>& field,
                                        Complex dir) {
  const double d = 5e-3;
  Complex d1 = ops::fd_radial_derivative(field, dir, 1.0 - 2 * d, 1e-3);
  Complex d2 = ops::fd_radial_derivative(field, dir, 1.0 - 3 * d, 1e-3);
  Complex d3 = ops::fd_radial_derivative(field, dir, 1.0 - 4 * d, 1e-3);
  return 3.0 * d1 - 3.0 * d2 + d3;
}

}  // namespace detail

// Residuals of a field against the data of its problem kind: interior PDE
// residual by iterated Wirtinger differences, boundary traces at r = 0.999
// extrapolated to the circle, and the origin constants.
inline Diagnostics verify_solution(const std::function<Complex(Complex)>& field,
                                   const ProblemData& data,
                                   const core::EvaluationGrid& interior_grid,
                                   Tolerances tol = {}, int n_theta_trace = 24) {
  core::validate(data);
  Diagnostics diag;
  int order = 1;
  double pde_tol = tol.pde_order1, h = 1e-4;
  switch (data.kind) {
    case ProblemKind::DirichletCR:
    case ProblemKind::NeumannCR: order = 1; pde_tol = tol.pde_order1; h = 1e-4; break;
    case ProblemKind::BitsadzeDN: order = 2; pde_tol = tol.pde_order2; h = 1e-3; break;
    default: order = 3; pde_tol = tol.pde_order3; h = 1e-3; break;
  }

  {
    std::vector<double> res(interior_grid.points.size());
    parallel_for(interior_grid.points.size(), [&](std::size_t i) {
      Complex z = interior_grid.points[i].value();
      res[i] = std::abs(detail::fd_dbar_n(field, z, order, h) - data.f(z));
    });
    double worst = 0.0;
    for (double r : res) worst = std::max(worst, r);
    diag.checks.push_back({"pde_residual", worst, pde_tol});
  }

  std::vector<Complex> dirs;
  for (int j = 0; j < n_theta_trace; ++j) {
    double th = 2.0 * M_PI * (j + 0.37) / n_theta_trace;
    dirs.emplace_back(std::cos(th), std::sin(th));
  }
  auto sup_over_dirs = [&dirs](const std::function<double(Complex)>& f) {
    std::vector<double> vals(dirs.size());
    parallel_for(dirs.size(), [&](std::size_t j) { vals[j] = f(dirs[j]); });
    double w = 0.0;
    for (double v : vals) w = std::max(w, v);
    return w;
  };
  auto dbar_field = [&field](Complex z) {
    return ops::fd_wirtinger_dbar(field, z, 1e-4);
  };
  auto dbar2_field = [&field](Complex z) {
    auto d1 = [&field](Complex w) { return ops::fd_wirtinger_dbar(field, w, 1e-4); };
    return ops::fd_wirtinger_dbar(d1, z, 1e-3);
  };

  switch (data.kind) {
    case ProblemKind::DirichletCR:
      diag.checks.push_back(
          {"trace[w=gamma0]", sup_over_dirs([&](Complex dir) {
             return std::abs(detail::extrapolated_trace(field, dir) - (*data.gamma0)(dir));
           }),
           tol.trace});
      break;
    case ProblemKind::NeumannCR:
      diag.checks.push_back(
          {"trace[dnu w=gamma]", sup_over_dirs([&](Complex dir) {
             return std::abs(detail::extrapolated_normal(field, dir) - (*data.gamma)(dir));
           }),
           tol.trace});
      diag.checks.push_back(
          {"w(0)=c", std::abs(field(Complex(0, 0)) - *data.c), tol.origin_constant});
      break;
    case ProblemKind::BitsadzeDN:
      diag.checks.push_back(
          {"trace[w=gamma0]", sup_over_dirs([&](Complex dir) {
             return std::abs(detail::extrapolated_trace(field, dir) - (*data.gamma0)(dir));
           }),
           tol.trace});
      diag.checks.push_back(
          {"trace[dnu dbar w=gamma1]", sup_over_dirs([&](Complex dir) {
             return std::abs(detail::extrapolated_normal(dbar_field, dir) -
                             (*data.gamma1)(dir));
           }),
           tol.trace});
      diag.checks.push_back({"dbar w(0)=c",
                             std::abs(dbar_field(Complex(0, 0)) - *data.c),
                             tol.origin_constant});
      break;
    case ProblemKind::TriNDN:
      diag.checks.push_back(
          {"trace[dnu w=gamma]", sup_over_dirs([&](Complex dir) {
             return std::abs(detail::extrapolated_normal(field, dir) - (*data.gamma)(dir));
           }),
           tol.trace});
      diag.checks.push_back(
          {"trace[dbar w=gamma0]", sup_over_dirs([&](Complex dir) {
             return std::abs(detail::extrapolated_trace(dbar_field, dir) -
                             (*data.gamma0)(dir));
           }),
           tol.trace});
      diag.checks.push_back(
          {"trace[dnu dbar2 w=gamma1]", sup_over_dirs([&](Complex dir) {
             return std::abs(detail::extrapolated_normal_deep(dbar2_field, dir) -
                             (*data.gamma1)(dir));
           }),
           10.0 * tol.trace});  // two nested FD layers before the radial stencil
      diag.checks.push_back(
          {"w(0)=c", std::abs(field(Complex(0, 0)) - *data.c), tol.origin_constant});
      diag.checks.push_back({"dbar2 w(0)=c1",
                             std::abs(dbar2_field(Complex(0, 0)) - *data.c1),
                             100.0 * tol.origin_constant});
      break;
    case ProblemKind::TriDND:
      diag.checks.push_back(
          {"trace[w=gamma0]", sup_over_dirs([&](Complex dir) {
             return std::abs(detail::extrapolated_trace(field, dir) - (*data.gamma0)(dir));
           }),
           tol.trace});
      diag.checks.push_back(
          {"trace[dnu dbar w=gamma1]", sup_over_dirs([&](Complex dir) {
             return std::abs(detail::extrapolated_normal(dbar_field, dir) -
                             (*data.gamma1)(dir));
           }),
           10.0 * tol.trace});
      diag.checks.push_back(
          {"trace[dbar2 w=gamma]", sup_over_dirs([&](Complex dir) {
             return std::abs(detail::extrapolated_trace_deep(dbar2_field, dir) -
                             (*data.gamma)(dir));
           }),
           10.0 * tol.trace});
      diag.checks.push_back({"dbar w(0)=c",
                             std::abs(dbar_field(Complex(0, 0)) - *data.c),
                             tol.origin_constant});
      break;
  }
  return diag;
}

}  // namespace tribvp::verify
