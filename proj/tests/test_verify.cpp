#include <catch2/catch_amalgamated.hpp>

#include "tribvp/solvers_tri.hpp"
#include "tribvp/verify.hpp"

using namespace tribvp;
using core::ProblemKind;

namespace {
const quad::RuleConfig kCfg{512, 64, 128, 0.8};
}

TEST_CASE("manufacture derives the documented data", "[verify]") {
  auto ndn = verify::manufacture(expr::parse("conj(z)^3"), ProblemKind::TriNDN);
  CHECK(ndn.data.f.source == "6");
  CHECK(ndn.data.gamma->source == "3*conj(z)^3");
  CHECK(ndn.data.gamma0->source == "3*conj(z)^2");
  CHECK(ndn.data.gamma1->source == "6*conj(z)");
  CHECK(*ndn.data.c == Complex(0, 0));
  CHECK(*ndn.data.c1 == Complex(0, 0));

  auto dnd = verify::manufacture(expr::parse("conj(z)^2*z"), ProblemKind::TriDND);
  CHECK(dnd.data.f.source == "0");
  CHECK(dnd.data.gamma0->source == "conj(z)");
  CHECK(dnd.data.gamma1->source == "4");
  CHECK(dnd.data.gamma->source == "2*z");
  CHECK(*dnd.data.c == Complex(0, 0));

  auto k = verify::manufacture(expr::parse("5"), ProblemKind::TriNDN);
  CHECK(k.data.gamma->source == "0");
  CHECK(k.data.gamma0->source == "0");
  CHECK(k.data.gamma1->source == "0");
  CHECK(*k.data.c == Complex(5, 0));
  CHECK(*k.data.c1 == Complex(0, 0));

  CHECK_THROWS_AS(verify::manufacture(expr::parse("log(z)"), ProblemKind::TriNDN),
                  UnsupportedNode);
}

TEST_CASE("reference fields pass their own diagnostics", "[verify]") {
  auto grid = core::EvaluationGrid::polar(4, 8, 0.6);
  for (const char* omega : {"conj(z)^3", "conj(z)^2*z"}) {
    for (ProblemKind kind : {ProblemKind::TriNDN, ProblemKind::TriDND}) {
      auto mp = verify::manufacture(expr::parse(omega), kind);
      auto diag = verify::verify_solution(mp.reference, mp.data, grid);
      INFO("omega = " << omega << " kind = " << core::kind_name(kind));
      for (const auto& c : diag.checks) {
        INFO(c.name << " = " << c.value << " tol " << c.tolerance);
        CHECK(c.pass());
      }
    }
  }
}

TEST_CASE("boundary trace extrapolation", "[verify]") {
  // the solver field itself (not just the polynomial reference) passes the
  // r = 0.999 extrapolated trace checks; requires the uniformly convergent
  // boundary-series evaluation inside the solver
  auto mp = verify::manufacture(expr::parse("conj(z)^2 + z^2"), ProblemKind::TriNDN);
  solvers::NdnSolver s(mp.data, kCfg);
  auto field = [&s](Complex z) { return s.value(z); };
  auto diag = verify::verify_solution(field, mp.data, core::EvaluationGrid::polar(3, 8, 0.5));
  for (const auto& c : diag.checks) {
    INFO(c.name << " = " << c.value << " tol " << c.tolerance);
    CHECK(c.pass());
  }
}

TEST_CASE("a tri-analytic violation is caught by the pde residual", "[verify]") {
  auto mp = verify::manufacture(expr::parse("conj(z)^3"), ProblemKind::TriNDN);
  auto bad = [&mp](Complex z) {
    Complex zb = std::conj(z);
    return mp.reference(z) + 0.01 * zb * zb * zb * zb;  // dbar^3 of zb^4 is 24 zb
  };
  auto diag = verify::verify_solution(bad, mp.data, core::EvaluationGrid::polar(4, 8, 0.6));
  bool pde_failed = false;
  for (const auto& c : diag.checks)
    if (c.name == "pde_residual") pde_failed = !c.pass();
  CHECK(pde_failed);

  auto zero_mp = verify::manufacture(expr::parse("0"), ProblemKind::TriNDN);
  auto zero_field = [](Complex) { return Complex(0, 0); };
  auto zero_diag = verify::verify_solution(zero_field, zero_mp.data,
                                           core::EvaluationGrid::polar(4, 8, 0.6));
  CHECK(zero_diag.pass());
}

TEST_CASE("condition sweep on manufactured and zero data", "[verify]") {
  auto mp = verify::manufacture(expr::parse("z*conj(z)^2"), ProblemKind::TriNDN);
  auto report = verify::condition_sweep(mp.data, core::condition_spiral(64, 0.8), kCfg);
  CHECK(report.pass());
  CHECK(report.per_condition.size() == 3);
  for (const auto& e : report.per_condition) CHECK(e.sup_residual <= 1e-6);

  auto zero = verify::manufacture(expr::parse("0"), ProblemKind::TriDND);
  auto zrep = verify::condition_sweep(zero.data, core::condition_spiral(16, 0.8), kCfg);
  for (const auto& e : zrep.per_condition) CHECK(e.sup_residual < 1e-14);
}

TEST_CASE("condition sup is monotone under sample refinement", "[verify]") {
  auto mp = verify::manufacture(expr::parse("conj(z)^3"), ProblemKind::TriNDN);
  core::ProblemData perturbed = mp.data;
  auto gamma = *mp.data.gamma;
  perturbed.gamma = core::ComplexFunction{
      [gamma](Complex s) { return gamma(s) + 0.05 * std::conj(s) * std::conj(s); },
      core::FnDomain::Boundary,
      ""};
  auto small = verify::condition_sweep(perturbed, core::condition_spiral(16, 0.8), kCfg);
  auto large = verify::condition_sweep(perturbed, core::condition_spiral(64, 0.8), kCfg);
  // the 64-point spiral contains different points, but the sup over a superset
  // sample of the same sampler family may only grow
  auto sixteen = core::condition_spiral(16, 0.8);
  auto both = sixteen;
  auto more = core::condition_spiral(64, 0.8);
  both.insert(both.end(), more.begin(), more.end());
  auto super = verify::condition_sweep(perturbed, both, kCfg);
  for (std::size_t i = 0; i < small.per_condition.size(); ++i)
    CHECK(super.per_condition[i].sup_residual >=
          small.per_condition[i].sup_residual - 1e-15);
  CHECK_FALSE(large.pass());
}
