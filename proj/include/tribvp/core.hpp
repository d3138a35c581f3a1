#pragma once

// Shared domain types: points in the disc, data functions, problem bundles,
// evaluation grids, and the reports produced by the condition checkers.

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tribvp/common.hpp"
#include "tribvp/expr.hpp"

namespace tribvp::core {

class DiscPoint {
 public:
  explicit DiscPoint(Complex v) : value_(v) {
    if (std::abs(v) >= 1.0) throw Error("DiscPoint requires |z| < 1");
  }
  Complex value() const { return value_; }
  double radius() const { return std::abs(value_); }
  bool safe_interior(double r_max = kDefaultRMax) const { return radius() <= r_max; }

 private:
  Complex value_;
};

enum class FnDomain { Boundary, ClosedDisc };

// A data function together with where it may be evaluated. Boundary-tagged
// functions are only ever called at |zeta| = 1; disc-tagged at |zeta| <= 1.
struct ComplexFunction {
  std::function<Complex(Complex)> evaluator;
  FnDomain domain_tag = FnDomain::ClosedDisc;
  std::string source;  // expression text when built from one, for provenance

  Complex operator()(Complex zeta) const { return evaluator(zeta); }
  bool valid() const { return static_cast<bool>(evaluator); }

  static ComplexFunction from_expression(const expr::ExprPtr& e, FnDomain dom) {
    ComplexFunction f;
    f.evaluator = [e](Complex z) { return expr::eval(e, z); };
    f.domain_tag = dom;
    f.source = expr::print(e);
    return f;
  }
  static ComplexFunction from_source(const std::string& text, FnDomain dom) {
    ComplexFunction f = from_expression(expr::parse(text), dom);
    f.source = text;
    return f;
  }
  static ComplexFunction constant(Complex c, FnDomain dom) {
    ComplexFunction f;
    f.evaluator = [c](Complex) { return c; };
    f.domain_tag = dom;
    f.source = expr::print(expr::number(c));
    return f;
  }
};

enum class ProblemKind { DirichletCR, NeumannCR, BitsadzeDN, TriNDN, TriDND };

inline std::string kind_name(ProblemKind k) {
  switch (k) {
    case ProblemKind::DirichletCR: return "dirichlet_cr";
    case ProblemKind::NeumannCR: return "neumann_cr";
    case ProblemKind::BitsadzeDN: return "bitsadze_dn";
    case ProblemKind::TriNDN: return "tri_ndn";
    case ProblemKind::TriDND: return "tri_dnd";
  }
  return "?";
}

inline std::optional<ProblemKind> kind_from_name(const std::string& s) {
  if (s == "dirichlet_cr" || s == "dirichlet") return ProblemKind::DirichletCR;
  if (s == "neumann_cr" || s == "neumann") return ProblemKind::NeumannCR;
  if (s == "bitsadze_dn" || s == "bitsadze") return ProblemKind::BitsadzeDN;
  if (s == "tri_ndn" || s == "ndn") return ProblemKind::TriNDN;
  if (s == "tri_dnd" || s == "dnd") return ProblemKind::TriDND;
  return std::nullopt;
}

// Data bundle. Field roles follow the problem statements:
//   gamma   Neumann-type datum (or the second-derivative trace for tri_dnd)
//   gamma0  Dirichlet-type trace (of the solution or of its dbar-derivative)
//   gamma1  Neumann datum of a derivative
//   c, c1   point values at the origin
struct ProblemData {
  ProblemKind kind = ProblemKind::DirichletCR;
  ComplexFunction f;
  std::optional<ComplexFunction> gamma, gamma0, gamma1;
  std::optional<Complex> c, c1;
};

inline const ProblemData& validate(const ProblemData& data) {
  const std::string kn = kind_name(data.kind);
  struct Need {
    bool gamma, gamma0, gamma1, c, c1;
  } need{};
  switch (data.kind) {
    case ProblemKind::DirichletCR: need = {false, true, false, false, false}; break;
    case ProblemKind::NeumannCR: need = {true, false, false, true, false}; break;
    case ProblemKind::BitsadzeDN: need = {false, true, true, true, false}; break;
    case ProblemKind::TriNDN: need = {true, true, true, true, true}; break;
    case ProblemKind::TriDND: need = {true, true, true, true, false}; break;
  }
  if (!data.f.valid()) throw MissingField(kn, "f");
  auto check = [&kn](bool needed, bool present, const char* name) {
    if (needed && !present) throw MissingField(kn, name);
    if (!needed && present) throw ExtraField(kn, name);
  };
  check(need.gamma, data.gamma.has_value(), "gamma");
  check(need.gamma0, data.gamma0.has_value(), "gamma0");
  check(need.gamma1, data.gamma1.has_value(), "gamma1");
  check(need.c, data.c.has_value(), "c");
  check(need.c1, data.c1.has_value(), "c1");
  return data;
}

struct EvaluationGrid {
  std::vector<DiscPoint> points;
  std::string descriptor;

  static EvaluationGrid polar(int n_r, int n_theta, double r_max = kDefaultRMax) {
    EvaluationGrid g;
    g.descriptor = "polar(" + std::to_string(n_r) + "x" + std::to_string(n_theta) +
                   ", r<=" + std::to_string(r_max) + ")";
    for (int i = 0; i < n_r; ++i) {
      double r = r_max * (i + 1.0) / n_r;
      for (int j = 0; j < n_theta; ++j) {
        double th = 2.0 * M_PI * j / n_theta;
        g.points.emplace_back(Complex(r * std::cos(th), r * std::sin(th)));
      }
    }
    return g;
  }

  static EvaluationGrid explicit_points(std::vector<DiscPoint> pts) {
    EvaluationGrid g;
    g.points = std::move(pts);
    g.descriptor = "explicit(" + std::to_string(g.points.size()) + ")";
    return g;
  }
};

// Fixed deterministic sample for "for all z in D" conditions: a spiral in
// |z| <= r_max, well spread and reproducible.
inline std::vector<DiscPoint> condition_spiral(int n = 64, double r_max = kDefaultRMax) {
  std::vector<DiscPoint> pts;
  pts.reserve(n);
  const double golden = M_PI * (3.0 - std::sqrt(5.0));
  for (int j = 0; j < n; ++j) {
    double r = r_max * std::sqrt((j + 0.5) / n);
    double th = golden * j;
    pts.emplace_back(Complex(r * std::cos(th), r * std::sin(th)));
  }
  return pts;
}

struct ConditionResidual {
  Complex value;
  DiscPoint at;
};

struct SolvabilityReport {
  struct Entry {
    std::string condition_id;
    double sup_residual = 0.0;
    DiscPoint argmax_point{Complex(0, 0)};
  };
  std::vector<Entry> per_condition;
  double tolerance_used = 1e-6;

  bool pass() const {
    for (const Entry& e : per_condition)
      if (!(e.sup_residual <= tolerance_used)) return false;
    return true;
  }
  double worst() const {
    double w = 0.0;
    for (const Entry& e : per_condition) w = std::max(w, e.sup_residual);
    return w;
  }
};

struct SolutionField {
  EvaluationGrid grid;
  std::vector<Complex> values;
  std::string provenance;  // solver id + rule descriptor
  std::optional<std::string> diagnostics;
};

}  // namespace tribvp::core
