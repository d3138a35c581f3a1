#pragma once

// Third-order combined problems for dbar^3 w = f on the unit disc:
//
//   NDN  (Neumann on w, Dirichlet-Neumann on dbar w)
//        dnu w = gamma, w(0) = c, dbar w = gamma0 on bd,
//        dnu dbar^2 w = gamma1 on bd, dbar^2 w(0) = c1
//
//   DND  (Dirichlet-Neumann on w, Dirichlet on dbar^2 w)
//        w = gamma0 on bd, dnu dbar w = gamma1 on bd,
//        dbar^2 w = gamma on bd, dbar w(0) = c
//
// Each problem has a direct formula evaluator, a three-condition checker, and
// an independent composed solver that chains the base solvers the way the
// decompositions do (NDN = NeumannCR after BitsadzeDN; DND = BitsadzeDN after
// DirichletCR). Direct and composed agree for arbitrary data, not only
// solvable data, because the composed path uses the interior-limit boundary
// values of the inner representation. Formula variants per RECONCILIATION.md.

#include <cmath>
#include <cstdint>
#include <vector>

#include "tribvp/common.hpp"
#include "tribvp/core.hpp"
#include "tribvp/ops.hpp"
#include "tribvp/quad.hpp"
#include "tribvp/solvers_base.hpp"

namespace tribvp::solvers {

using core::ProblemData;
using core::ProblemKind;
using core::SolvabilityReport;

// Budgets for the nested (composed) path. Smaller per-rule budgets than the
// direct path; the cap bounds total inner-solve kernel evaluations.
struct ComposedConfig {
  RuleConfig inner{512, 44, 88, kDefaultRMax};
  RuleConfig outer{512, 48, 96, kDefaultRMax};
  std::int64_t max_kernel_evals = 50'000'000;
};

namespace detail {

// dbar and dbar^2 of a data function: symbolic when the expression is in the
// polynomial subset, finite differences otherwise.
struct DataDerivatives {
  std::function<Complex(Complex)> d1, d2;

  explicit DataDerivatives(const core::ComplexFunction& f) {
    bool symbolic = false;
    if (!f.source.empty()) {
      try {
        auto e = expr::parse(f.source);
        auto e1 = expr::dbar(e);
        auto e2 = expr::dbar(e1);
        d1 = [e1](Complex z) { return expr::eval(e1, z); };
        d2 = [e2](Complex z) { return expr::eval(e2, z); };
        symbolic = true;
      } catch (const Error&) {
        symbolic = false;
      }
    }
    if (!symbolic) {
      auto ev = f.evaluator;
      d1 = [ev](Complex z) { return ops::fd_wirtinger_dbar(ev, z, 1e-4); };
      auto d1c = d1;
      d2 = [d1c](Complex z) { return ops::fd_wirtinger_dbar(d1c, z, 1e-3); };
    }
  }
};

// closed forms A[(conj(zeta) - conj(z))^j / (zeta - z)] = (-1)^{j+1} zb^{j+1}/(j+1)
inline Complex pole_moment(Complex zb, int j) {
  Complex p(1, 0);
  for (int i = 0; i <= j; ++i) p *= zb;
  return ((j % 2 == 0) ? -p : p) / static_cast<double>(j + 1);
}

}  // namespace detail

// ------------------------------------------------------------------- NDN

class NdnSolver {
 public:
  NdnSolver(ProblemData data, RuleConfig cfg = {})
      : cfg_(cfg), brule_(cfg.boundary_n) {
    core::validate(data);
    if (data.kind != ProblemKind::TriNDN) throw Error("NdnSolver needs tri_ndn data");
    f_ = data.f;
    c_ = *data.c;
    c1_ = *data.c1;
    g_vals_ = detail::sample_boundary(*data.gamma, brule_);
    g0_vals_ = detail::sample_boundary(*data.gamma0, brule_);
    g1_vals_ = detail::sample_boundary(*data.gamma1, brule_);
    f_bd_vals_.resize(brule_.nodes.size());
    std::vector<Complex> cg0(brule_.nodes.size()), mid(brule_.nodes.size());
    for (std::size_t k = 0; k < brule_.nodes.size(); ++k) {
      Complex sb = std::conj(brule_.nodes[k]);
      f_bd_vals_[k] = f_(brule_.nodes[k]);
      cg0[k] = sb * g0_vals_[k];
      mid[k] = g1_vals_[k] - 2.0 * sb * f_bd_vals_[k];
    }
    g_series_ = ops::BoundarySeries(g_vals_, brule_);
    g0_series_ = ops::BoundarySeries(g0_vals_, brule_);
    cg0_series_ = ops::BoundarySeries(cg0, brule_);
    mid_series_ = ops::BoundarySeries(mid, brule_);

    const quad::AreaRule& orule = quad::origin_rule(cfg.area_nr, cfg.area_ntheta);
    f_area0_ = detail::sample_area(f_, orule);
    s_f_cz2_over_zeta_ = detail::area_sum(f_area0_, orule, [](Complex t) {
      return std::conj(t) * std::conj(t) / t;
    });
    s_f_over_zeta_ = detail::area_sum(f_area0_, orule,
                                      [](Complex t) { return 1.0 / t; });
    // boundary means entering condition 3
    m_g0_ = detail::bd_sum(g0_vals_, brule_, [](Complex) { return 1.0; });
    m_cg0_ = detail::bd_sum(g0_vals_, brule_, [](Complex s) { return std::conj(s); });
    m_cg1_ = detail::bd_sum(g1_vals_, brule_, [](Complex s) { return std::conj(s); });
    m_c2f_ = detail::bd_sum(f_bd_vals_, brule_,
                            [](Complex s) { return std::conj(s) * std::conj(s); });
  }

  // w(z) = c + c1 zb^2/2 - B[gamma log] + 2 B[cz gamma0 log]
  //        - Bd[gamma0 ((cz-zb)/(zeta-z) - cz/zeta)]
  //        - Q[gamma1 - 2 cz f](z)
  //        - (1/2) A_z[f (cz-zb)^2/(zeta-z)] + (1/2) A_0[f (cz^2 + zb^2)/zeta]
  Complex value(Complex z) const {
    Complex zb = std::conj(z);
    Complex out = c_ + c1_ * zb * zb * 0.5;
    out -= g_series_.log_term(z);
    out += 2.0 * cg0_series_.log_term(z);
    out -= g0_series_.cauchy_shifted(z, 1) - zb * g0_series_.cauchy(z) -
           g0_series_.coef(1);
    out -= mid_series_.neumann_bracket(z);
    out -= 0.5 * detail::area_pole(f_, z, 2, cfg_);
    out += 0.5 * (s_f_cz2_over_zeta_ + zb * zb * s_f_over_zeta_);
    return out;
  }

  // condition 1: c1 - Bd[gamma0/(1-zb s)] + A[(1-|t|^2) f/(t (1-zb t))]
  Complex condition1(Complex z) const {
    Complex zb = std::conj(z);
    Complex bd = detail::bd_sum(
        g0_vals_, brule_, [zb](Complex s) { return 1.0 / (1.0 - zb * s); }, true);
    const quad::AreaRule& orule = quad::origin_rule(cfg_.area_nr, cfg_.area_ntheta);
    Complex ar = detail::area_sum(f_area0_, orule, [zb](Complex t) {
      return (1.0 - std::norm(t)) / (t * (1.0 - zb * t));
    });
    return c1_ - bd + ar;
  }

  // condition 2: Neumann-type condition on (f, gamma1)
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

  // condition 3:
  //   B[gamma/(1-zb s)] - zb B[gamma0] - 2 B[cz gamma0] - (zb/2) B[cz gamma1]
  //   + zb B[cz^2 f] - c1 zb^2
  //   + A[f (zb |t|^2 cz - 2 zb^2 + 3 zb^3 t - 2 zb^3 t |t|^2)/(2 t (1-zb t)^2)]
  Complex condition3(Complex z) const {
    Complex zb = std::conj(z);
    Complex out = detail::bd_sum(g_vals_, brule_,
                                 [zb](Complex s) { return 1.0 / (1.0 - zb * s); });
    out -= zb * m_g0_ + 2.0 * m_cg0_;
    out -= 0.5 * zb * m_cg1_;
    out += zb * m_c2f_;
    out -= c1_ * zb * zb;
    const quad::AreaRule& orule = quad::origin_rule(cfg_.area_nr, cfg_.area_ntheta);
    out += detail::area_sum(f_area0_, orule, [zb](Complex t) {
      Complex tb = std::conj(t);
      double t2 = std::norm(t);
      Complex d = 1.0 - zb * t;
      Complex num = zb * t2 * tb - 2.0 * zb * zb + 3.0 * zb * zb * zb * t -
                    2.0 * zb * zb * zb * t * t2;
      return num / (2.0 * t * d * d);
    });
    return out;
  }

  const RuleConfig& config() const { return cfg_; }

 private:
  core::ComplexFunction f_;
  Complex c_, c1_;
  RuleConfig cfg_;
  quad::BoundaryRule brule_;
  std::vector<Complex> g_vals_, g0_vals_, g1_vals_, f_bd_vals_, f_area0_;
  ops::BoundarySeries g_series_, g0_series_, cg0_series_, mid_series_;
  Complex s_f_cz2_over_zeta_, s_f_over_zeta_;
  Complex m_g0_, m_cg0_, m_cg1_, m_c2f_;
};

// ------------------------------------------------------------------- DND

class DndSolver {
 public:
  DndSolver(ProblemData data, RuleConfig cfg = {})
      : cfg_(cfg), brule_(cfg.boundary_n) {
    core::validate(data);
    if (data.kind != ProblemKind::TriDND) throw Error("DndSolver needs tri_dnd data");
    f_ = data.f;
    c_ = *data.c;
    g_vals_ = detail::sample_boundary(*data.gamma, brule_);
    g0_vals_ = detail::sample_boundary(*data.gamma0, brule_);
    g1_vals_ = detail::sample_boundary(*data.gamma1, brule_);
    std::vector<Complex> mid(brule_.nodes.size());
    for (std::size_t k = 0; k < brule_.nodes.size(); ++k)
      mid[k] = g1_vals_[k] - 2.0 * std::conj(brule_.nodes[k]) * g_vals_[k];
    g_series_ = ops::BoundarySeries(g_vals_, brule_);
    g0_series_ = ops::BoundarySeries(g0_vals_, brule_);
    mid_series_ = ops::BoundarySeries(mid, brule_);
    m_g_ = detail::bd_sum(g_vals_, brule_, [](Complex) { return 1.0; });
    m_cg_ = detail::bd_sum(g_vals_, brule_, [](Complex s) { return std::conj(s); });

    const quad::AreaRule& orule = quad::origin_rule(cfg.area_nr, cfg.area_ntheta);
    f_area0_ = detail::sample_area(f_, orule);
    s_f_cz_over_zeta_ = detail::area_sum(f_area0_, orule,
                                         [](Complex t) { return std::conj(t) / t; });
  }

  // w(z) = c zb + Bd[gamma0/(zeta-z)]
  //        + ((1-|z|^2)/z) B[(gamma1 - 2 cz gamma) log(1-z cz)]
  //        + (1/2) B[gamma (cz (1-2|z|^2) + zb^2 s)/(s - z)]
  //        - (1/2) A_z[f (cz-zb)^2/(zeta-z)] - zb A_0[f cz/zeta]
  Complex value(Complex z) const {
    Complex zb = std::conj(z);
    Complex out = c_ * zb + g0_series_.cauchy(z);
    out += mid_series_.log_term_over_z(z);
    double az2 = std::norm(z);
    out += 0.5 * ((1.0 - 2.0 * az2) * g_series_.cauchy_shifted(z, 2) +
                  zb * zb * g_series_.cauchy(z));
    out -= 0.5 * detail::area_pole(f_, z, 2, cfg_);
    out -= zb * s_f_cz_over_zeta_;
    return out;
  }

  // condition 1: Dirichlet condition on (f, gamma)
  Complex condition1(Complex z) const {
    Complex zb = std::conj(z);
    Complex bd = detail::bd_sum(
        g_vals_, brule_, [zb](Complex s) { return 1.0 / (1.0 - zb * s); }, true);
    const quad::AreaRule& orule = quad::origin_rule(cfg_.area_nr, cfg_.area_ntheta);
    Complex ar = detail::area_sum(f_area0_, orule,
                                  [zb](Complex t) { return 1.0 / (1.0 - zb * t); });
    return zb * (bd - ar);
  }

  // condition 2: c - Bd[gamma0/(1-zb s)]
  //   + (1/2) B[gamma (2 cz - s(cz^2 + zb^2))/(1-zb s)]
  //   - (1/2) A[f (2 cz - t(cz^2 + zb^2))/(t (1-zb t))]
  Complex condition2(Complex z) const {
    Complex zb = std::conj(z);
    Complex bd = detail::bd_sum(
        g0_vals_, brule_, [zb](Complex s) { return 1.0 / (1.0 - zb * s); }, true);
    auto K = [zb](Complex s) {
      Complex sb = std::conj(s);
      return (2.0 * sb - s * (sb * sb + zb * zb)) / (1.0 - zb * s);
    };
    Complex bg = detail::bd_sum(g_vals_, brule_, K);
    const quad::AreaRule& orule = quad::origin_rule(cfg_.area_nr, cfg_.area_ntheta);
    Complex ar = detail::area_sum(f_area0_, orule,
                                  [&K](Complex t) { return K(t) / t; });
    return c_ - bd + 0.5 * bg - 0.5 * ar;
  }

  // condition 3: B[gamma1/(1-zb s)] - zb B[gamma] - 2 B[cz gamma]
  //              - A[f zb (cz - zb^2 t)/(1-zb t)^2]
  Complex condition3(Complex z) const {
    Complex zb = std::conj(z);
    Complex out = detail::bd_sum(g1_vals_, brule_,
                                 [zb](Complex s) { return 1.0 / (1.0 - zb * s); });
    out -= zb * m_g_ + 2.0 * m_cg_;
    const quad::AreaRule& orule = quad::origin_rule(cfg_.area_nr, cfg_.area_ntheta);
    out -= detail::area_sum(f_area0_, orule, [zb](Complex t) {
      Complex d = 1.0 - zb * t;
      return zb * (std::conj(t) - zb * zb * t) / (d * d);
    });
    return out;
  }

  const RuleConfig& config() const { return cfg_; }

 private:
  core::ComplexFunction f_;
  Complex c_;
  RuleConfig cfg_;
  quad::BoundaryRule brule_;
  std::vector<Complex> g_vals_, g0_vals_, g1_vals_, f_area0_;
  ops::BoundarySeries g_series_, g0_series_, mid_series_;
  Complex m_g_, m_cg_, s_f_cz_over_zeta_;
};

// ------------------------------------------------------- composed solvers

// NDN as the proof composes it: phi := BitsadzeDN(f, gamma0, gamma1, c1)
// solved numerically and cached, then NeumannCR(phi, gamma, c). The singular
// outer integral A[phi/(zeta - z)] is taken on the fixed origin rule after
// subtracting the anti-analytic Taylor of phi at z (orders 0..4, using the
// chained dbar solves and the data f, dbar f, dbar^2 f).
class NdnComposedSolver {
 public:
  NdnComposedSolver(ProblemData data, ComposedConfig cfg = {})
      : data_(checked(std::move(data))),
        cfg_(cfg),
        brule_(cfg.outer.boundary_n),
        orule_(quad::origin_rule(cfg.outer.area_nr, cfg.outer.area_ntheta)),
        inner_(data_.f, *data_.gamma0, *data_.gamma1, *data_.c1, cfg.inner),
        inner_dbar_(data_.f, *data_.gamma1, *data_.c1, cfg.inner),
        fderiv_(data_.f) {
    f_ = data_.f;
    c_ = *data_.c;
    per_inner_eval_ = cfg.inner.boundary_n +
                      2ll * cfg.inner.area_nr * cfg.inner.area_ntheta;
    charge(static_cast<std::int64_t>(orule_.nodes.size() + brule_.nodes.size()));

    g_series_ = ops::BoundarySeries(detail::sample_boundary(*data_.gamma, brule_), brule_);

    phi_area_.resize(orule_.nodes.size());
    parallel_for(orule_.nodes.size(),
                 [this](std::size_t i) { phi_area_[i] = inner_.value(orule_.nodes[i]); });
    std::vector<Complex> czphi(brule_.nodes.size());
    parallel_for(brule_.nodes.size(), [this, &czphi](std::size_t k) {
      czphi[k] = std::conj(brule_.nodes[k]) * inner_.value(brule_.nodes[k]);
    });
    czphi_series_ = ops::BoundarySeries(czphi, brule_);
    s_phi_over_zeta_ = detail::area_sum(phi_area_, orule_,
                                        [](Complex t) { return 1.0 / t; });
  }

  Complex value(Complex z) {
    charge(2);
    Complex zb = std::conj(z);
    Complex phi_z = inner_.value(z);
    Complex phi1_z = inner_dbar_.value(z);  // dbar of the inner representation
    Complex f_z = f_(z), df_z = fderiv_.d1(z), d2f_z = fderiv_.d2(z);
    // A[phi/(zeta - z)] on the fixed rule, Taylor-subtracted
    Complex acc(0, 0);
    for (std::size_t i = 0; i < orule_.nodes.size(); ++i) {
      const Complex& t = orule_.nodes[i];
      Complex cb = std::conj(t) - zb;
      Complex cb2 = cb * cb;
      Complex taylor = phi_z + cb * phi1_z + 0.5 * cb2 * f_z +
                       cb * cb2 * (df_z / 6.0) + cb2 * cb2 * (d2f_z / 24.0);
      acc += (phi_area_[i] - taylor) / (t - z) * orule_.weights[i];
    }
    acc += phi_z * detail::pole_moment(zb, 0) + phi1_z * detail::pole_moment(zb, 1) +
           (f_z / 2.0) * detail::pole_moment(zb, 2) +
           (df_z / 6.0) * detail::pole_moment(zb, 3) +
           (d2f_z / 24.0) * detail::pole_moment(zb, 4);
    // NeumannCR(phi, gamma, c) assembled with the cached pieces
    return c_ - g_series_.log_term(z) + 2.0 * czphi_series_.log_term(z) - acc +
           s_phi_over_zeta_;
  }

  std::int64_t kernel_evals() const { return evals_ * per_inner_eval_; }

 private:
  static ProblemData checked(ProblemData d) {
    core::validate(d);
    if (d.kind != ProblemKind::TriNDN) throw Error("composed solver needs tri_ndn data");
    return d;
  }
  void charge(std::int64_t inner_points) {
    evals_ += inner_points;
    if (evals_ * per_inner_eval_ > cfg_.max_kernel_evals)
      throw BudgetExceeded("composed solve exceeds the nested quadrature cap");
  }

  ProblemData data_;
  ComposedConfig cfg_;
  quad::BoundaryRule brule_;
  const quad::AreaRule& orule_;
  BitsadzeDN inner_;
  NeumannCR inner_dbar_;
  detail::DataDerivatives fderiv_;
  core::ComplexFunction f_;
  Complex c_;
  ops::BoundarySeries g_series_, czphi_series_;
  std::vector<Complex> phi_area_;
  Complex s_phi_over_zeta_;
  std::int64_t evals_ = 0, per_inner_eval_ = 0;
};

// DND composed: phi := DirichletCR(f, gamma), then BitsadzeDN(phi, gamma0,
// gamma1, c). Here dbar phi = f is data, so the Taylor subtraction needs only
// f and its dbar-derivatives.
class DndComposedSolver {
 public:
  DndComposedSolver(ProblemData data, ComposedConfig cfg = {})
      : data_(checked(std::move(data))),
        cfg_(cfg),
        brule_(cfg.outer.boundary_n),
        orule_(quad::origin_rule(cfg.outer.area_nr, cfg.outer.area_ntheta)),
        inner_(data_.f, *data_.gamma, cfg.inner),
        fderiv_(data_.f) {
    f_ = data_.f;
    c_ = *data_.c;
    per_inner_eval_ = cfg.inner.boundary_n +
                      1ll * cfg.inner.area_nr * cfg.inner.area_ntheta;
    charge(static_cast<std::int64_t>(orule_.nodes.size() + brule_.nodes.size()));

    g0_series_ = ops::BoundarySeries(detail::sample_boundary(*data_.gamma0, brule_), brule_);

    phi_area_.resize(orule_.nodes.size());
    parallel_for(orule_.nodes.size(),
                 [this](std::size_t i) { phi_area_[i] = inner_.value(orule_.nodes[i]); });
    std::vector<Complex> mid(brule_.nodes.size());
    const core::ComplexFunction& g1 = *data_.gamma1;
    parallel_for(brule_.nodes.size(), [this, &mid, &g1](std::size_t k) {
      const Complex& s = brule_.nodes[k];
      mid[k] = g1(s) - 2.0 * std::conj(s) * inner_.value(s);
    });
    mid_series_ = ops::BoundarySeries(mid, brule_);
    s_phi_over_zeta_ = detail::area_sum(phi_area_, orule_,
                                        [](Complex t) { return 1.0 / t; });
  }

  Complex value(Complex z) {
    charge(1);
    Complex zb = std::conj(z);
    Complex phi_z = inner_.value(z);
    Complex f_z = f_(z), df_z = fderiv_.d1(z), d2f_z = fderiv_.d2(z);
    // A[phi (cz - zb)/(zeta - z)] on the fixed rule, Taylor-subtracted
    Complex acc(0, 0);
    for (std::size_t i = 0; i < orule_.nodes.size(); ++i) {
      const Complex& t = orule_.nodes[i];
      Complex cb = std::conj(t) - zb;
      Complex taylor = phi_z + cb * f_z + 0.5 * cb * cb * df_z +
                       cb * cb * cb * (d2f_z / 6.0);
      acc += (phi_area_[i] - taylor) * cb / (t - z) * orule_.weights[i];
    }
    acc += phi_z * detail::pole_moment(zb, 1) + f_z * detail::pole_moment(zb, 2) +
           (df_z / 2.0) * detail::pole_moment(zb, 3) +
           (d2f_z / 6.0) * detail::pole_moment(zb, 4);
    return c_ * zb + g0_series_.cauchy(z) + mid_series_.log_term_over_z(z) + acc +
           zb * s_phi_over_zeta_;
  }

  std::int64_t kernel_evals() const { return evals_ * per_inner_eval_; }

 private:
  static ProblemData checked(ProblemData d) {
    core::validate(d);
    if (d.kind != ProblemKind::TriDND) throw Error("composed solver needs tri_dnd data");
    return d;
  }
  void charge(std::int64_t inner_points) {
    evals_ += inner_points;
    if (evals_ * per_inner_eval_ > cfg_.max_kernel_evals)
      throw BudgetExceeded("composed solve exceeds the nested quadrature cap");
  }

  ProblemData data_;
  ComposedConfig cfg_;
  quad::BoundaryRule brule_;
  const quad::AreaRule& orule_;
  DirichletCR inner_;
  detail::DataDerivatives fderiv_;
  core::ComplexFunction f_;
  Complex c_;
  ops::BoundarySeries g0_series_, mid_series_;
  std::vector<Complex> phi_area_;
  Complex s_phi_over_zeta_;
  std::int64_t evals_ = 0, per_inner_eval_ = 0;
};

// ---------------------------------------------- spec-shaped free functions

inline std::vector<core::ConditionResidual> ndn_conditions(const ProblemData& data,
                                                           core::DiscPoint z,
                                                           RuleConfig cfg = {}) {
  if (!z.safe_interior(cfg.r_max)) throw NearBoundary(z.radius(), cfg.r_max);
  NdnSolver s(data, cfg);
  return {{s.condition1(z.value()), z},
          {s.condition2(z.value()), z},
          {s.condition3(z.value()), z}};
}

inline Complex ndn_solve(const ProblemData& data, core::DiscPoint z,
                         RuleConfig cfg = {}) {
  if (!z.safe_interior(cfg.r_max)) throw NearBoundary(z.radius(), cfg.r_max);
  return NdnSolver(data, cfg).value(z.value());
}

inline Complex ndn_solve_composed(const ProblemData& data, core::DiscPoint z,
                                  ComposedConfig cfg = {}) {
  if (!z.safe_interior(cfg.outer.r_max))
    throw NearBoundary(z.radius(), cfg.outer.r_max);
  return NdnComposedSolver(data, cfg).value(z.value());
}

inline std::vector<core::ConditionResidual> dnd_conditions(const ProblemData& data,
                                                           core::DiscPoint z,
                                                           RuleConfig cfg = {}) {
  if (!z.safe_interior(cfg.r_max)) throw NearBoundary(z.radius(), cfg.r_max);
  DndSolver s(data, cfg);
  return {{s.condition1(z.value()), z},
          {s.condition2(z.value()), z},
          {s.condition3(z.value()), z}};
}

inline Complex dnd_solve(const ProblemData& data, core::DiscPoint z,
                         RuleConfig cfg = {}) {
  if (!z.safe_interior(cfg.r_max)) throw NearBoundary(z.radius(), cfg.r_max);
  return DndSolver(data, cfg).value(z.value());
}

inline Complex dnd_solve_composed(const ProblemData& data, core::DiscPoint z,
                                  ComposedConfig cfg = {}) {
  if (!z.safe_interior(cfg.outer.r_max))
    throw NearBoundary(z.radius(), cfg.outer.r_max);
  return DndComposedSolver(data, cfg).value(z.value());
}

}  // namespace tribvp::solvers
