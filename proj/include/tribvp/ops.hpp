#pragma once

// Named integral operators and finite-difference probes built on quad.

#include <cmath>
#include <vector>

#include "tribvp/common.hpp"
#include "tribvp/core.hpp"
#include "tribvp/quad.hpp"

namespace tribvp::ops {

enum class KernelId {
  Cauchy,           // 1/(zeta - z), interior pole
  Pompeiu,          // area 1/(zeta - z)
  LogNeumann,       // log(1 - z conj(zeta))
  SchwarzCondition, // 1/(1 - conj(z) zeta), pole outside
  ExteriorPole1,    // same family, first order
  ExteriorPole2     // 1/(1 - conj(z) zeta)^2
};

// (1/2pi i) oint gamma(zeta)/(zeta - z) dzeta
template <class F>
Complex cauchy_transform(F&& gamma, Complex z, const quad::BoundaryRule& rule,
                         double r_max = kDefaultRMax) {
  return quad::boundary_cauchy(gamma, z, rule, r_max);
}

// T f(z) = -(1/pi) iint f(zeta)/(zeta - z); right inverse of dbar.
template <class F>
Complex pompeiu_T(F&& f, Complex z, const quad::RuleConfig& cfg = {}) {
  quad::AreaRule rule(z, cfg.area_nr, cfg.area_ntheta);
  return -quad::area_cauchy_kernel(f, z, rule, cfg.r_max);
}

// Principal branch; |z conj(zeta)| < 1 keeps the argument away from the cut.
inline Complex log_kernel(Complex z, Complex zeta) {
  return std::log(Complex(1, 0) - z * std::conj(zeta));
}

// dbar by central differences: (Dx + i Dy)/2 with 4 evaluations.
template <class F>
Complex fd_wirtinger_dbar(F&& field, Complex z, double h = 1e-4) {
  if (h <= 0 || std::abs(z) + h >= 1.0)
    throw StepTooLarge("fd step crosses the unit circle");
  Complex dx = field(z + h) - field(z - h);
  Complex dy = field(z + Complex(0, h)) - field(z - Complex(0, h));
  return (dx + Complex(0, 1) * dy) / (4.0 * h);
}

template <class F>
Complex fd_wirtinger_dz(F&& field, Complex z, double h = 1e-4) {
  if (h <= 0 || std::abs(z) + h >= 1.0)
    throw StepTooLarge("fd step crosses the unit circle");
  Complex dx = field(z + h) - field(z - h);
  Complex dy = field(z + Complex(0, h)) - field(z - Complex(0, h));
  return (dx - Complex(0, 1) * dy) / (4.0 * h);
}

// One-sided radial derivative (d/dr) field(r e^{i theta}) at r = 1, 3-point
// stencil; the field does not exist outside the closed disc.
template <class F>
Complex fd_normal_derivative(F&& field, Complex zeta, double h = 1e-4) {
  if (h <= 0 || 4.0 * h >= 1.0) throw StepTooLarge("radial fd step too large");
  Complex dir = zeta / std::abs(zeta);
  Complex f0 = field(dir);
  Complex f1 = field((1.0 - h) * dir);
  Complex f2 = field((1.0 - 2.0 * h) * dir);
  return (3.0 * f0 - 4.0 * f1 + f2) / (2.0 * h);
}

// Radial derivative at interior radius r0 (central stencil); used for the
// extrapolated Neumann-trace checks where the field cannot be evaluated at 1.
template <class F>
Complex fd_radial_derivative(F&& field, Complex dir, double r0, double h = 5e-4) {
  if (r0 + h >= 1.0) throw StepTooLarge("radial fd step crosses the circle");
  return (field((r0 + h) * dir) - field((r0 - h) * dir)) / (2.0 * h);
}

// ------------------------------------------------------------------
// Boundary data wrapped as Fourier coefficients g_m = B[g zeta^-m].
// Every boundary term in the solution formulas is a short series in these
// coefficients; the series converge uniformly on |z| < 1, unlike the raw
// trapezoid sums whose aliasing grows like |z|^n near the circle.

class BoundarySeries {
 public:
  BoundarySeries() = default;

  template <class F>
  BoundarySeries(F&& g, const quad::BoundaryRule& rule)
      : coef_(quad::fourier_coefficients(g, rule, rule.n / 2)) {}

  BoundarySeries(std::vector<Complex> samples, const quad::BoundaryRule& rule)
      : coef_(quad::fourier_from_samples(samples, rule, rule.n / 2)) {}

  const std::vector<Complex>& coef() const { return coef_; }
  Complex coef(std::size_t m) const { return m < coef_.size() ? coef_[m] : Complex(0, 0); }

  // Bd[g/(zeta - z)] = sum_{k>=0} g_k z^k (analytic projection)
  Complex cauchy(Complex z) const {
    Complex acc(0, 0), zp(1, 0);
    for (const Complex& c : coef_) {
      acc += c * zp;
      zp *= z;
      if (std::norm(zp) < 1e-44) break;
    }
    return acc;
  }

  // sum_{k>=0} g_{k+shift} z^k; shift = 0 is Bd[g/(zeta-z)], shift = s is
  // the same transform applied to conj(zeta)^s g.
  Complex cauchy_shifted(Complex z, int shift) const {
    Complex acc(0, 0), zp(1, 0);
    for (std::size_t k = static_cast<std::size_t>(shift); k < coef_.size(); ++k) {
      acc += coef_[k] * zp;
      zp *= z;
      if (std::norm(zp) < 1e-44) break;
    }
    return acc;
  }

  // B[g log(1 - z conj(zeta))] = -sum_{m>=1} g_m z^m / m
  Complex log_term(Complex z) const {
    Complex acc(0, 0), zp = z;
    for (std::size_t m = 1; m < coef_.size(); ++m) {
      acc -= coef_[m] * zp / static_cast<double>(m);
      zp *= z;
      if (std::norm(zp) < 1e-44) break;
    }
    return acc;
  }

  // ((1 - |z|^2)/z) B[g log(1 - z conj(zeta))]; the 1/z is removable and the
  // series form below is exact and stable including z = 0.
  Complex log_term_over_z(Complex z) const {
    double s = 1.0 - std::norm(z);
    Complex acc(0, 0), zp(1, 0);
    for (std::size_t m = 1; m < coef_.size(); ++m) {
      acc -= coef_[m] * zp / static_cast<double>(m);
      zp *= z;
      if (std::norm(zp) < 1e-44) break;
    }
    return s * acc;
  }

  // Q(z) = B[g (cz/(2z) + cz^2/4)] + ((1-|z|^2)^2/(2 z^2)) B[g log(1-z cz)],
  // cz = conj(zeta). The removable z = 0 singularity cancels exactly in the
  // rearrangement below:
  //   Q = g_1 conj(z)(2-|z|^2)/2 + g_2 |z|^2 (2-|z|^2)/4
  //       - (1-|z|^2)^2 sum_{m>=3} z^{m-2} g_m / (2m).
  Complex neumann_bracket(Complex z) const {
    double a2 = std::norm(z);
    Complex out = coef(1) * std::conj(z) * (2.0 - a2) * 0.5 +
                  coef(2) * (a2 * (2.0 - a2) * 0.25);
    Complex acc(0, 0), zp = z;  // z^(m-2) starting at m = 3
    for (std::size_t m = 3; m < coef_.size(); ++m) {
      acc += zp * coef_[m] / (2.0 * static_cast<double>(m));
      zp *= z;
      if (std::norm(zp) < 1e-44) break;
    }
    double s = 1.0 - a2;
    return out - s * s * acc;
  }

 private:
  std::vector<Complex> coef_;
};

}  // namespace tribvp::ops
