#pragma once

// Quadrature over the unit circle and unit disc.
//
// Boundary: n-point trapezoid at the roots of unity (spectrally accurate for
// periodic smooth integrands). Two measures:
//   per-zeta  B[g]  = (1/2pi i) oint g dzeta/zeta = (1/n) sum g(zeta_k)
//   plain     Bd[g] = (1/2pi i) oint g dzeta      = (1/n) sum g(zeta_k) zeta_k
//
// Area: polar tensor rule centered at any interior point c, Gauss-Legendre in
// radius with the Jacobian r folded into the weights, trapezoid in angle. The
// radial extent R(theta) = -a + sqrt(a^2 + 1 - |c|^2), a = Re(conj(c) e^{i t}),
// tiles the unit disc exactly. A rule centered at an integrand's pole absorbs
// a simple 1/(zeta - c) factor into the Jacobian.
//
// Normalization: A[g] = (1/pi) integral over the disc, so A[1] = 1.
// Summation is radial-major with a fixed node order; results are bit-identical
// across runs and thread counts.

#include <cmath>
#include <memory>
#include <mutex>
#include <vector>

#include "tribvp/common.hpp"

namespace tribvp::quad {

struct GaussLegendre {
  std::vector<double> x, w;  // on [0, 1]
};

// Nodes/weights by Newton iteration on P_n; standard and dependency-free.
inline const GaussLegendre& gauss_legendre(int n) {
  static std::mutex mu;
  static std::vector<GaussLegendre> cache(1025);
  if (n < 1 || n > 1024) throw Error("gauss_legendre order out of range");
  std::lock_guard<std::mutex> lock(mu);
  GaussLegendre& gl = cache[static_cast<std::size_t>(n)];
  if (!gl.x.empty()) return gl;
  GaussLegendre fresh;
  fresh.x.resize(n);
  fresh.w.resize(n);
  for (int i = 0; i < n; ++i) {
    double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = n * (t * p1 - p0) / (t * t - 1.0);
      double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) {
        p0 = 1.0;
        p1 = t;
        for (int k = 2; k <= n; ++k) {
          double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (t * p1 - p0) / (t * t - 1.0);
        fresh.x[n - 1 - i] = 0.5 * (t + 1.0);
        fresh.w[n - 1 - i] = 1.0 / ((1.0 - t * t) * dp * dp);
        break;
      }
    }
  }
  gl = std::move(fresh);
  return gl;
}

enum class Measure { PerZeta, Plain };

struct BoundaryRule {
  int n;
  std::vector<Complex> nodes;

  explicit BoundaryRule(int count) : n(count) {
    nodes.reserve(n);
    for (int k = 0; k < n; ++k) {
      double th = 2.0 * M_PI * k / n;
      nodes.emplace_back(std::cos(th), std::sin(th));
    }
  }
};

struct AreaRule {
  Complex center;
  int n_r, n_theta;
  std::vector<Complex> nodes;   // radial-major within each angle, angles outer
  std::vector<double> weights;  // include the 1/pi normalization

  // Centers on the circle itself are allowed (half the radial lines then
  // degenerate and are skipped); used when inner solutions are sampled at
  // boundary nodes.
  AreaRule(Complex c, int nr, int nt) : center(c), n_r(nr), n_theta(nt) {
    if (std::abs(c) > 1.0 + 1e-12) throw Error("area rule center outside the closed disc");
    const GaussLegendre& gl = gauss_legendre(nr);
    nodes.reserve(static_cast<std::size_t>(nr) * nt);
    weights.reserve(static_cast<std::size_t>(nr) * nt);
    double c2 = std::norm(c);
    for (int j = 0; j < nt; ++j) {
      double th = 2.0 * M_PI * j / nt;
      Complex dir(std::cos(th), std::sin(th));
      double a = (std::conj(c) * dir).real();
      double disc = a * a + 1.0 - c2;
      double R = -a + std::sqrt(disc > 0.0 ? disc : 0.0);
      if (R < 1e-12) continue;  // degenerate line when the center touches the circle
      for (int i = 0; i < nr; ++i) {
        double r = R * gl.x[i];
        nodes.push_back(c + r * dir);
        weights.push_back(R * gl.w[i] * r * (2.0 * M_PI / nt) / M_PI);
      }
    }
  }
};

// cached origin rules are used pervasively
inline const AreaRule& origin_rule(int nr, int nt) {
  static std::mutex mu;
  static std::vector<std::unique_ptr<AreaRule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  for (const auto& r : cache)
    if (r->n_r == nr && r->n_theta == nt) return *r;
  cache.push_back(std::make_unique<AreaRule>(Complex(0, 0), nr, nt));
  return *cache.back();
}

template <class F>
Complex boundary_mean(F&& g, const BoundaryRule& rule, Measure m = Measure::PerZeta) {
  Complex acc(0, 0);
  if (m == Measure::PerZeta) {
    for (const Complex& zk : rule.nodes) acc += g(zk);
  } else {
    for (const Complex& zk : rule.nodes) acc += g(zk) * zk;
  }
  return acc / static_cast<double>(rule.n);
}

// (1/2pi i) oint g(zeta)/(zeta - z) dzeta as the literal trapezoid sum.
// Aliasing grows like |z|^n, hence the safe-radius gate.
template <class F>
Complex boundary_cauchy(F&& g, Complex z, const BoundaryRule& rule,
                        double r_max = kDefaultRMax) {
  if (std::abs(z) > r_max) throw NearBoundary(std::abs(z), r_max);
  Complex acc(0, 0);
  for (const Complex& zk : rule.nodes) acc += g(zk) * zk / (zk - z);
  return acc / static_cast<double>(rule.n);
}

template <class F>
Complex area_mean(F&& g, const AreaRule& rule) {
  Complex acc(0, 0);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    acc += g(rule.nodes[i]) * rule.weights[i];
  return acc;
}

// A[f/(zeta - z)] on a rule centered at z; the Jacobian r absorbs the pole.
template <class F>
Complex area_cauchy_kernel(F&& f, Complex z, const AreaRule& rule_center_z,
                           double r_max = kDefaultRMax) {
  if (std::abs(z) > r_max) throw NearBoundary(std::abs(z), r_max);
  Complex acc(0, 0);
  for (std::size_t i = 0; i < rule_center_z.nodes.size(); ++i) {
    const Complex& zeta = rule_center_z.nodes[i];
    acc += f(zeta) / (zeta - z) * rule_center_z.weights[i];
  }
  return acc;
}

// Fourier coefficients g_m = B[g zeta^-m], m = 0..count-1, via the rule's
// trapezoid sums. These drive the uniformly convergent evaluation of Cauchy
// and log-kernel boundary integrals used inside the solvers.
inline std::vector<Complex> fourier_from_samples(const std::vector<Complex>& vals,
                                                 const BoundaryRule& rule, int count) {
  std::vector<Complex> out(count, Complex(0, 0));
  for (std::size_t k = 0; k < vals.size(); ++k) {
    Complex w = std::conj(rule.nodes[k]);
    Complex p(1, 0);
    for (int m = 0; m < count; ++m) {
      out[m] += vals[k] * p;
      p *= w;
    }
  }
  for (Complex& c : out) c /= static_cast<double>(rule.n);
  return out;
}

template <class F>
std::vector<Complex> fourier_coefficients(F&& g, const BoundaryRule& rule, int count) {
  std::vector<Complex> vals(rule.nodes.size());
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) vals[k] = g(rule.nodes[k]);
  return fourier_from_samples(vals, rule, count);
}

struct RuleConfig {
  int boundary_n = 1024;
  int area_nr = 120;
  int area_ntheta = 256;
  double r_max = kDefaultRMax;
};

}  // namespace tribvp::quad
