#pragma once

// First- and second-order solvers on the unit disc:
//   DirichletCR  dbar w = f in D,   w = g0 on bd
//   NeumannCR    dbar w = f in D,   dnu w = g on bd,  w(0) = c
//   BitsadzeDN   dbar^2 w = f in D, w = g0 on bd, dnu dbar w = g1 on bd,
//                dbar w(0) = c
//
// Each solver evaluates the explicit representation formula unconditionally
// and exposes the solvability-condition residuals separately; the formula is
// the unique solution exactly when the residuals vanish for all z in D.
//
// Formula variants follow RECONCILIATION.md: the Neumann-type boundary terms
// carry the conjugated data with weight 2, which the manufactured monomial
// suite forces.

#include <cmath>
#include <vector>

#include "tribvp/common.hpp"
#include "tribvp/core.hpp"
#include "tribvp/ops.hpp"
#include "tribvp/quad.hpp"

namespace tribvp::solvers {

using core::ComplexFunction;
using core::ConditionResidual;
using core::DiscPoint;
using quad::RuleConfig;

namespace detail {

inline std::vector<Complex> sample_boundary(const ComplexFunction& g,
                                            const quad::BoundaryRule& rule) {
  std::vector<Complex> vals(rule.nodes.size());
  for (std::size_t k = 0; k < vals.size(); ++k) vals[k] = g(rule.nodes[k]);
  return vals;
}

inline std::vector<Complex> sample_area(const ComplexFunction& f,
                                        const quad::AreaRule& rule) {
  std::vector<Complex> vals(rule.nodes.size());
  for (std::size_t k = 0; k < vals.size(); ++k) vals[k] = f(rule.nodes[k]);
  return vals;
}

// (1/n) sum vals_k * kernel(zeta_k); per-zeta measure unless plain is set.
template <class K>
Complex bd_sum(const std::vector<Complex>& vals, const quad::BoundaryRule& rule,
               K&& kernel, bool plain = false) {
  Complex acc(0, 0);
  for (std::size_t k = 0; k < vals.size(); ++k) {
    Complex term = vals[k] * kernel(rule.nodes[k]);
    if (plain) term *= rule.nodes[k];
    acc += term;
  }
  return acc / static_cast<double>(rule.n);
}

template <class K>
Complex area_sum(const std::vector<Complex>& vals, const quad::AreaRule& rule,
                 K&& kernel) {
  Complex acc(0, 0);
  for (std::size_t k = 0; k < vals.size(); ++k)
    acc += vals[k] * kernel(rule.nodes[k]) * rule.weights[k];
  return acc;
}

// A[f (conj(zeta) - conj(z))^k / (zeta - z)] on a rule centered at z.
template <class F>
Complex area_pole(F&& f, Complex z, int k, const RuleConfig& cfg) {
  quad::AreaRule rule(z, cfg.area_nr, cfg.area_ntheta);
  Complex zb = std::conj(z), acc(0, 0);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const Complex& zeta = rule.nodes[i];
    Complex num(1, 0);
    Complex cb = std::conj(zeta) - zb;
    for (int j = 0; j < k; ++j) num *= cb;
    acc += f(zeta) * num / (zeta - z) * rule.weights[i];
  }
  return acc;
}

}  // namespace detail

// --------------------------------------------------------------- Dirichlet

class DirichletCR {
 public:
  DirichletCR(ComplexFunction f, ComplexFunction g0, RuleConfig cfg = {})
      : f_(std::move(f)),
        cfg_(cfg),
        brule_(cfg.boundary_n),
        g0_vals_(detail::sample_boundary(g0, brule_)),
        g0_series_(g0_vals_, brule_),
        f_area0_(detail::sample_area(f_, quad::origin_rule(cfg.area_nr, cfg.area_ntheta))) {}

  // w(z) = Bd[g0/(zeta-z)] - A[f/(zeta-z)]
  Complex value(Complex z) const {
    return g0_series_.cauchy(z) - detail::area_pole(f_, z, 0, cfg_);
  }

  // Bd[conj(z) g0/(1-conj(z) zeta)] - A[conj(z) f/(1-conj(z) zeta)]
  Complex condition(Complex z) const {
    Complex zb = std::conj(z);
    Complex bd = detail::bd_sum(
        g0_vals_, brule_, [zb](Complex s) { return 1.0 / (1.0 - zb * s); }, true);
    const quad::AreaRule& orule = quad::origin_rule(cfg_.area_nr, cfg_.area_ntheta);
    Complex ar = detail::area_sum(f_area0_, orule,
                                  [zb](Complex t) { return 1.0 / (1.0 - zb * t); });
    return zb * (bd - ar);
  }

  const RuleConfig& config() const { return cfg_; }

 private:
  ComplexFunction f_;
  RuleConfig cfg_;
  quad::BoundaryRule brule_;
  std::vector<Complex> g0_vals_;
  ops::BoundarySeries g0_series_;
  std::vector<Complex> f_area0_;
};

// ----------------------------------------------------------------- Neumann

class NeumannCR {
 public:
  NeumannCR(ComplexFunction f, ComplexFunction g, Complex c, RuleConfig cfg = {})
      : f_(std::move(f)),
        c_(c),
        cfg_(cfg),
        brule_(cfg.boundary_n),
        g_vals_(detail::sample_boundary(g, brule_)),
        g_series_(g_vals_, brule_) {
    std::vector<Complex> cf(brule_.nodes.size());
    f_bd_vals_.resize(brule_.nodes.size());
    for (std::size_t k = 0; k < cf.size(); ++k) {
      f_bd_vals_[k] = f_(brule_.nodes[k]);
      cf[k] = std::conj(brule_.nodes[k]) * f_bd_vals_[k];
    }
    cf_series_ = ops::BoundarySeries(cf, brule_);
    const quad::AreaRule& orule = quad::origin_rule(cfg.area_nr, cfg.area_ntheta);
    f_area0_ = detail::sample_area(f_, orule);
    f_over_zeta0_ = detail::area_sum(f_area0_, orule,
                                     [](Complex t) { return 1.0 / t; });
  }

  // w(z) = c - B[g log(1-z cz)] + 2 B[cz f log(1-z cz)]
  //        - A_z[f/(zeta-z)] + A_0[f/zeta]
  Complex value(Complex z) const {
    return c_ - g_series_.log_term(z) + 2.0 * cf_series_.log_term(z) -
           detail::area_pole(f_, z, 0, cfg_) + f_over_zeta0_;
  }

  // B[g/(1-zb s)] - 2 B[sb f/(1-zb s)] + zb A[f/(1-zb t)^2]
  Complex condition(Complex z) const {
    Complex zb = std::conj(z);
    auto k1 = [zb](Complex s) { return 1.0 / (1.0 - zb * s); };
    Complex b1 = detail::bd_sum(g_vals_, brule_, k1);
    Complex b2 = detail::bd_sum(f_bd_vals_, brule_,
                                [zb](Complex s) { return std::conj(s) / (1.0 - zb * s); });
    const quad::AreaRule& orule = quad::origin_rule(cfg_.area_nr, cfg_.area_ntheta);
    Complex ar = detail::area_sum(f_area0_, orule, [zb](Complex t) {
      Complex d = 1.0 - zb * t;
      return 1.0 / (d * d);
    });
    return b1 - 2.0 * b2 + zb * ar;
  }

  const RuleConfig& config() const { return cfg_; }

 private:
  ComplexFunction f_;
  Complex c_;
  RuleConfig cfg_;
  quad::BoundaryRule brule_;
  std::vector<Complex> g_vals_, f_bd_vals_;
  ops::BoundarySeries g_series_, cf_series_;
  std::vector<Complex> f_area0_;
  Complex f_over_zeta0_;
};

// ---------------------------------------------------------------- Bitsadze

class BitsadzeDN {
 public:
  BitsadzeDN(ComplexFunction f, ComplexFunction g0, ComplexFunction g1, Complex c,
             RuleConfig cfg = {})
      : f_(std::move(f)),
        c_(c),
        cfg_(cfg),
        brule_(cfg.boundary_n),
        g0_vals_(detail::sample_boundary(g0, brule_)),
        g1_vals_(detail::sample_boundary(g1, brule_)),
        g0_series_(g0_vals_, brule_) {
    f_bd_vals_.resize(brule_.nodes.size());
    std::vector<Complex> mid(brule_.nodes.size());
    for (std::size_t k = 0; k < mid.size(); ++k) {
      f_bd_vals_[k] = f_(brule_.nodes[k]);
      mid[k] = g1_vals_[k] - 2.0 * std::conj(brule_.nodes[k]) * f_bd_vals_[k];
    }
    mid_series_ = ops::BoundarySeries(mid, brule_);
    const quad::AreaRule& orule = quad::origin_rule(cfg.area_nr, cfg.area_ntheta);
    f_area0_ = detail::sample_area(f_, orule);
    f_over_zeta0_ = detail::area_sum(f_area0_, orule,
                                     [](Complex t) { return 1.0 / t; });
  }

  // w(z) = c zb + Bd[g0/(zeta-z)]
  //        + ((1-|z|^2)/z) B[(g1 - 2 cz f) log(1-z cz)]
  //        + A_z[f (cz - zb)/(zeta-z)] + zb A_0[f/zeta]
  Complex value(Complex z) const {
    Complex zb = std::conj(z);
    return c_ * zb + g0_series_.cauchy(z) + mid_series_.log_term_over_z(z) +
           detail::area_pole(f_, z, 1, cfg_) + zb * f_over_zeta0_;
  }

  // condition 1: c - Bd[g0/(1-zb s)] + A[(1-|t|^2) f/(t (1-zb t))]
  Complex condition1(Complex z) const {
    Complex zb = std::conj(z);
    Complex bd = detail::bd_sum(
        g0_vals_, brule_, [zb](Complex s) { return 1.0 / (1.0 - zb * s); }, true);
    const quad::AreaRule& orule = quad::origin_rule(cfg_.area_nr, cfg_.area_ntheta);
    Complex ar = detail::area_sum(f_area0_, orule, [zb](Complex t) {
      return (1.0 - std::norm(t)) / (t * (1.0 - zb * t));
    });
    return c_ - bd + ar;
  }

  // condition 2 = Neumann-type condition on (f, g1)
  Complex condition2(Complex z) const {
    Complex zb = std::conj(z);
    Complex b1 = detail::bd_sum(g1_vals_, brule_,
                                [zb](Complex s) { return 1.0 / (1.0 - zb * s); });
    Complex b2 = detail::bd_sum(f_bd_vals_, brule_,
                                [zb](Complex s) { return std::conj(s) / (1.0 - zb * s); });
    const quad::AreaRule& orule = quad::origin_rule(cfg_.area_nr, cfg_.area_ntheta);
    Complex ar = detail::area_sum(f_area0_, orule, [zb](Complex t) {
      Complex d = 1.0 - zb * t;
      return 1.0 / (d * d);
    });
    return b1 - 2.0 * b2 + zb * ar;
  }

  const RuleConfig& config() const { return cfg_; }

 private:
  ComplexFunction f_;
  Complex c_;
  RuleConfig cfg_;
  quad::BoundaryRule brule_;
  std::vector<Complex> g0_vals_, g1_vals_, f_bd_vals_;
  ops::BoundarySeries g0_series_, mid_series_;
  std::vector<Complex> f_area0_;
  Complex f_over_zeta0_;
};

// ---------------------------------------------- spec-shaped free functions

inline ConditionResidual dirichlet_cr_condition(const ComplexFunction& f,
                                                const ComplexFunction& g0, DiscPoint z,
                                                RuleConfig cfg = {}) {
  if (!z.safe_interior(cfg.r_max)) throw NearBoundary(z.radius(), cfg.r_max);
  return {DirichletCR(f, g0, cfg).condition(z.value()), z};
}

inline Complex dirichlet_cr_solve(const ComplexFunction& f, const ComplexFunction& g0,
                                  DiscPoint z, RuleConfig cfg = {}) {
  if (!z.safe_interior(cfg.r_max)) throw NearBoundary(z.radius(), cfg.r_max);
  return DirichletCR(f, g0, cfg).value(z.value());
}

inline ConditionResidual neumann_cr_condition(const ComplexFunction& f,
                                              const ComplexFunction& g, DiscPoint z,
                                              RuleConfig cfg = {}) {
  if (!z.safe_interior(cfg.r_max)) throw NearBoundary(z.radius(), cfg.r_max);
  return {NeumannCR(f, g, Complex(0, 0), cfg).condition(z.value()), z};
}

inline Complex neumann_cr_solve(const ComplexFunction& f, const ComplexFunction& g,
                                Complex c, DiscPoint z, RuleConfig cfg = {}) {
  if (!z.safe_interior(cfg.r_max)) throw NearBoundary(z.radius(), cfg.r_max);
  return NeumannCR(f, g, c, cfg).value(z.value());
}

inline std::pair<ConditionResidual, ConditionResidual> bitsadze_dn_conditions(
    const ComplexFunction& f, const ComplexFunction& g0, const ComplexFunction& g1,
    Complex c, DiscPoint z, RuleConfig cfg = {}) {
  if (!z.safe_interior(cfg.r_max)) throw NearBoundary(z.radius(), cfg.r_max);
  BitsadzeDN s(f, g0, g1, c, cfg);
  return {{s.condition1(z.value()), z}, {s.condition2(z.value()), z}};
}

inline Complex bitsadze_dn_solve(const ComplexFunction& f, const ComplexFunction& g0,
                                 const ComplexFunction& g1, Complex c, DiscPoint z,
                                 RuleConfig cfg = {}) {
  if (!z.safe_interior(cfg.r_max)) throw NearBoundary(z.radius(), cfg.r_max);
  return BitsadzeDN(f, g0, g1, c, cfg).value(z.value());
}

}  // namespace tribvp::solvers
