#include <catch2/catch_amalgamated.hpp>

#include "tribvp/quad.hpp"

using namespace tribvp;
using quad::AreaRule;
using quad::BoundaryRule;
using quad::Measure;

TEST_CASE("boundary means", "[quad]") {
  BoundaryRule rule(256);
  CHECK(std::abs(quad::boundary_mean([](Complex) { return Complex(1, 0); }, rule) -
                 Complex(1, 0)) < 1e-15);
  CHECK(std::abs(quad::boundary_mean([](Complex s) { return s * s * s; }, rule)) < 1e-14);
  CHECK(std::abs(quad::boundary_mean([](Complex s) { return std::conj(s) * s; }, rule) -
                 Complex(1, 0)) < 1e-14);
  // exactness B[zeta^m] = delta_m0 for |m| < n/2
  for (int m = -100; m <= 100; ++m) {
    Complex got = quad::boundary_mean(
        [m](Complex s) { return std::pow(s, m); }, rule);
    CHECK(std::abs(got - (m == 0 ? Complex(1, 0) : Complex(0, 0))) < 1e-12);
  }
}

TEST_CASE("boundary Cauchy sums", "[quad]") {
  BoundaryRule rule(512);
  CHECK(std::abs(quad::boundary_cauchy([](Complex s) { return s * s; },
                                       Complex(0.3, 0), rule) -
                 Complex(0.09, 0)) < 1e-13);
  CHECK(std::abs(quad::boundary_cauchy([](Complex) { return Complex(1, 0); },
                                       Complex(0.2, 0.4), rule) -
                 Complex(1, 0)) < 1e-13);
  CHECK(std::abs(quad::boundary_cauchy([](Complex s) { return std::conj(s); },
                                       Complex(0.5, -0.3), rule)) < 1e-13);
  CHECK_THROWS_AS(quad::boundary_cauchy([](Complex) { return Complex(1, 0); },
                                        Complex(0.9, 0), rule),
                  NearBoundary);
}

TEST_CASE("area rule normalization and moments", "[quad]") {
  const AreaRule& rule = quad::origin_rule(120, 256);
  CHECK(std::abs(quad::area_mean([](Complex) { return Complex(1, 0); }, rule) -
                 Complex(1, 0)) < 1e-12);
  CHECK(std::abs(quad::area_mean([](Complex t) { return Complex(std::norm(t), 0); },
                                 rule) -
                 Complex(0.5, 0)) < 1e-12);
  // A[zeta^p conj(zeta)^q] = delta_pq/(p+1) for p, q <= 8
  for (int p = 0; p <= 8; ++p) {
    for (int q = 0; q <= 8; ++q) {
      Complex got = quad::area_mean(
          [p, q](Complex t) {
            Complex v(1, 0);
            for (int i = 0; i < p; ++i) v *= t;
            for (int i = 0; i < q; ++i) v *= std::conj(t);
            return v;
          },
          rule);
      Complex want = (p == q) ? Complex(1.0 / (p + 1), 0) : Complex(0, 0);
      INFO("p=" << p << " q=" << q);
      CHECK(std::abs(got - want) < 1e-10);
    }
  }
}

TEST_CASE("centered rules absorb the Cauchy pole", "[quad]") {
  Complex z(0.4, 0.0);
  AreaRule rule(z, 120, 256);
  CHECK(std::abs(quad::area_mean([z](Complex t) { return 1.0 / (t - z); }, rule) -
                 Complex(-0.4, 0)) < 1e-11);
  CHECK(std::abs(quad::area_cauchy_kernel([](Complex) { return Complex(1, 0); }, z,
                                          rule) -
                 Complex(-0.4, 0)) < 1e-11);
  CHECK(std::abs(quad::area_cauchy_kernel([](Complex) { return Complex(0, 0); }, z,
                                          rule)) == 0.0);
  CHECK(std::abs(quad::area_cauchy_kernel([z](Complex t) { return t - z; }, z, rule) -
                 Complex(1, 0)) < 1e-12);
}

TEST_CASE("center independence for smooth integrands", "[quad]") {
  auto g = [](Complex t) { return std::exp(t) * std::conj(t) + std::cos(t.real()); };
  Complex a = quad::area_mean(g, quad::origin_rule(120, 256));
  Complex b = quad::area_mean(g, AreaRule(Complex(0.37, -0.21), 120, 256));
  CHECK(std::abs(a - b) < 1e-8);
}

TEST_CASE("boundary rule converges spectrally on exp", "[quad]") {
  auto g = [](Complex s) { return std::exp(s); };
  Complex ref = quad::boundary_mean(g, BoundaryRule(512));
  double prev = -1.0;
  for (int n : {4, 8, 16}) {
    double err = std::abs(quad::boundary_mean(g, BoundaryRule(n)) - ref);
    if (prev > 0 && prev > 1e-13) CHECK(err < prev / 10.0);
    prev = err;
  }
}

TEST_CASE("integration is deterministic", "[quad]") {
  const AreaRule& rule = quad::origin_rule(80, 160);
  auto g = [](Complex t) { return std::exp(t * std::conj(t)) / (2.0 - t); };
  Complex a = quad::area_mean(g, rule);
  Complex b = quad::area_mean(g, rule);
  CHECK(a.real() == b.real());
  CHECK(a.imag() == b.imag());
}

TEST_CASE("gauss-legendre weights sum to one", "[quad]") {
  for (int n : {4, 16, 44, 120, 240}) {
    const auto& gl = quad::gauss_legendre(n);
    double s = 0.0;
    for (double w : gl.w) s += w;
    CHECK(std::abs(s - 1.0) < 1e-14);
  }
}
