#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tribvp/core.hpp"
#include "tribvp/io.hpp"

using namespace tribvp;
using core::ProblemData;
using core::ProblemKind;

namespace {

ProblemData bundle(ProblemKind kind, bool g, bool g0, bool g1, bool c, bool c1) {
  ProblemData d;
  d.kind = kind;
  d.f = core::ComplexFunction::from_source("1", core::FnDomain::ClosedDisc);
  auto bd = core::ComplexFunction::from_source("conj(z)", core::FnDomain::Boundary);
  if (g) d.gamma = bd;
  if (g0) d.gamma0 = bd;
  if (g1) d.gamma1 = bd;
  if (c) d.c = Complex(0, 0);
  if (c1) d.c1 = Complex(0, 0);
  return d;
}

}  // namespace

TEST_CASE("disc points reject the closed exterior", "[core]") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-1.6, 1.6);
  for (int i = 0; i < 1000; ++i) {
    Complex v(u(rng), u(rng));
    if (std::abs(v) < 1.0) {
      CHECK(core::DiscPoint(v).value() == v);
    } else {
      CHECK_THROWS_AS(core::DiscPoint(v), Error);
    }
  }
  CHECK_THROWS_AS(core::DiscPoint(Complex(1, 0)), Error);
  CHECK(core::DiscPoint(Complex(0.5, 0)).safe_interior());
  CHECK_FALSE(core::DiscPoint(Complex(0.9, 0)).safe_interior());
}

TEST_CASE("polar grids stay strictly interior", "[core]") {
  auto g = core::EvaluationGrid::polar(9, 16, 0.8);
  CHECK(g.points.size() == 9 * 16);
  for (const auto& p : g.points) CHECK(p.radius() <= 0.8 + 1e-15);
}

TEST_CASE("validation is total over kind/field combinations", "[core]") {
  // accepted bundles
  CHECK_NOTHROW(core::validate(bundle(ProblemKind::TriNDN, 1, 1, 1, 1, 1)));
  CHECK_NOTHROW(core::validate(bundle(ProblemKind::DirichletCR, 0, 1, 0, 0, 0)));
  CHECK_NOTHROW(core::validate(bundle(ProblemKind::NeumannCR, 1, 0, 0, 1, 0)));
  CHECK_NOTHROW(core::validate(bundle(ProblemKind::BitsadzeDN, 0, 1, 1, 1, 0)));
  CHECK_NOTHROW(core::validate(bundle(ProblemKind::TriDND, 1, 1, 1, 1, 0)));

  // spec'd rejections
  CHECK_THROWS_AS(core::validate(bundle(ProblemKind::DirichletCR, 0, 0, 0, 0, 0)),
                  MissingField);
  CHECK_THROWS_AS(core::validate(bundle(ProblemKind::NeumannCR, 1, 0, 0, 0, 0)),
                  MissingField);
  CHECK_THROWS_AS(core::validate(bundle(ProblemKind::DirichletCR, 1, 1, 0, 0, 0)),
                  ExtraField);

  // every combination yields accept or a specific error, never a crash
  for (ProblemKind kind :
       {ProblemKind::DirichletCR, ProblemKind::NeumannCR, ProblemKind::BitsadzeDN,
        ProblemKind::TriNDN, ProblemKind::TriDND}) {
    for (int mask = 0; mask < 32; ++mask) {
      ProblemData d = bundle(kind, mask & 1, mask & 2, mask & 4, mask & 8, mask & 16);
      try {
        core::validate(d);
      } catch (const MissingField&) {
      } catch (const ExtraField&) {
      }
    }
  }
}

TEST_CASE("problem JSON round trip", "[core]") {
  ProblemData d;
  d.kind = ProblemKind::TriNDN;
  d.f = core::ComplexFunction::from_source("6", core::FnDomain::ClosedDisc);
  d.gamma = core::ComplexFunction::from_source("3*conj(z)^3", core::FnDomain::Boundary);
  d.gamma0 = core::ComplexFunction::from_source("3*conj(z)^2", core::FnDomain::Boundary);
  d.gamma1 = core::ComplexFunction::from_source("6*conj(z)", core::FnDomain::Boundary);
  d.c = Complex(0, 0);
  d.c1 = Complex(0.5, -1.0);

  auto j = io::problem_to_json(d);
  CHECK(j["kind"] == "tri_ndn");
  CHECK(j["c1"][1].get<double>() == -1.0);
  ProblemData back = io::problem_from_json(j);
  CHECK(back.kind == d.kind);
  CHECK(back.gamma->source == "3*conj(z)^3");
  Complex zeta = std::polar(1.0, 0.7);
  CHECK(std::abs((*back.gamma)(zeta) - (*d.gamma)(zeta)) < 1e-15);
  CHECK(*back.c1 == Complex(0.5, -1.0));

  j.erase("c1");
  CHECK_THROWS_AS(io::problem_from_json(j), MissingField);
}
