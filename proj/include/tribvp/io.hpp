#pragma once

// File formats: problem JSON, rule descriptors, field CSV, reports.

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tribvp/common.hpp"
#include "tribvp/core.hpp"
#include "tribvp/identities.hpp"
#include "tribvp/quad.hpp"
#include "tribvp/verify.hpp"

namespace tribvp::io {

using json = nlohmann::ordered_json;

inline json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

inline Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw Error("complex value must be [re, im]");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

inline json problem_to_json(const core::ProblemData& data) {
  json j;
  j["kind"] = core::kind_name(data.kind);
  j["f"] = data.f.source;
  if (data.gamma) j["gamma"] = data.gamma->source;
  if (data.gamma0) j["gamma0"] = data.gamma0->source;
  if (data.gamma1) j["gamma1"] = data.gamma1->source;
  if (data.c) j["c"] = complex_to_json(*data.c);
  if (data.c1) j["c1"] = complex_to_json(*data.c1);
  return j;
}

inline core::ProblemData problem_from_json(const json& j) {
  core::ProblemData data;
  auto kind = core::kind_from_name(j.at("kind").get<std::string>());
  if (!kind) throw Error("unknown problem kind '" + j.at("kind").get<std::string>() + "'");
  data.kind = *kind;
  data.f = core::ComplexFunction::from_source(j.at("f").get<std::string>(),
                                              core::FnDomain::ClosedDisc);
  auto bd = [&j](const char* key) {
    return core::ComplexFunction::from_source(j.at(key).get<std::string>(),
                                              core::FnDomain::Boundary);
  };
  if (j.contains("gamma")) data.gamma = bd("gamma");
  if (j.contains("gamma0")) data.gamma0 = bd("gamma0");
  if (j.contains("gamma1")) data.gamma1 = bd("gamma1");
  if (j.contains("c")) data.c = complex_from_json(j.at("c"));
  if (j.contains("c1")) data.c1 = complex_from_json(j.at("c1"));
  core::validate(data);
  return data;
}

inline json rules_to_json(const quad::RuleConfig& cfg) {
  json j;
  j["boundary_n"] = cfg.boundary_n;
  j["area_nr"] = cfg.area_nr;
  j["area_ntheta"] = cfg.area_ntheta;
  j["r_max"] = cfg.r_max;
  return j;
}

inline quad::RuleConfig rules_from_json(const json& j) {
  quad::RuleConfig cfg;
  if (j.contains("boundary_n")) cfg.boundary_n = j["boundary_n"].get<int>();
  if (j.contains("area_nr")) cfg.area_nr = j["area_nr"].get<int>();
  if (j.contains("area_ntheta")) cfg.area_ntheta = j["area_ntheta"].get<int>();
  if (j.contains("r_max")) cfg.r_max = j["r_max"].get<double>();
  return cfg;
}

inline std::string fmt_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// columns x,y,re,im; header line; LF endings; stable formatting
inline void write_field_csv(const std::string& path, const core::SolutionField& field) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot open '" + path + "' for writing");
  os << "x,y,re,im\n";
  for (std::size_t i = 0; i < field.values.size(); ++i) {
    Complex z = field.grid.points[i].value();
    os << fmt_g17(z.real()) << ',' << fmt_g17(z.imag()) << ','
       << fmt_g17(field.values[i].real()) << ',' << fmt_g17(field.values[i].imag())
       << '\n';
  }
}

inline json report_to_json(const core::SolvabilityReport& report) {
  json arr = json::array();
  for (const auto& e : report.per_condition) {
    json row;
    row["condition_id"] = e.condition_id;
    row["sup_residual"] = e.sup_residual;
    row["argmax_z"] = complex_to_json(e.argmax_point.value());
    arr.push_back(row);
  }
  json j;
  j["tolerance"] = report.tolerance_used;
  j["pass"] = report.pass();
  j["per_condition"] = arr;
  return j;
}

inline json diagnostics_to_json(const verify::Diagnostics& diag) {
  json arr = json::array();
  for (const auto& c : diag.checks) {
    json row;
    row["name"] = c.name;
    row["value"] = c.value;
    row["tolerance"] = c.tolerance;
    row["pass"] = c.pass();
    arr.push_back(row);
  }
  return arr;
}

inline json sweep_to_json(const std::vector<identities::SweepRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    json row;
    row["id"] = r.id;
    row["max_err"] = r.max_err;
    row["argmax_z"] = complex_to_json(r.argmax_z);
    row["argmax_zt"] = complex_to_json(r.argmax_zt);
    arr.push_back(row);
  }
  return arr;
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot open '" + path + "' for writing");
  os << text;
}

}  // namespace tribvp::io
