#pragma once

// Machine-checkable catalog of the closed-form integral identities behind the
// combined solvers: every lemma item plus the in-proof boundary displays.
// Each entry pairs a quadrature evaluation of the integral (LHS) with its
// closed form (RHS) on |z|, |zt| <= r_max. Kernels with interior poles are
// split by exact partial fractions onto pole-centered rules.
//
// Several printed right-hand sides required reconciliation; the chosen
// variants and the tests forcing them are listed in RECONCILIATION.md.

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "tribvp/common.hpp"
#include "tribvp/quad.hpp"

namespace tribvp::identities {

using quad::RuleConfig;

struct IdentityEntry {
  std::string id;
  bool uses_zt = true;
  std::function<Complex(Complex z, Complex zt, const RuleConfig&)> lhs;
  std::function<Complex(Complex z, Complex zt)> rhs;
};

namespace detail {

inline Complex logk(Complex z, Complex s) { return std::log(1.0 - z * std::conj(s)); }

template <class F>
Complex area_centered(F&& g, Complex center, const RuleConfig& cfg) {
  quad::AreaRule rule(center, cfg.area_nr, cfg.area_ntheta);
  return quad::area_mean(g, rule);
}

template <class F>
Complex area_origin(F&& g, const RuleConfig& cfg) {
  return quad::area_mean(g, quad::origin_rule(cfg.area_nr, cfg.area_ntheta));
}

template <class F>
Complex bmean(F&& g, const RuleConfig& cfg) {
  quad::BoundaryRule rule(cfg.boundary_n);
  return quad::boundary_mean(g, rule, quad::Measure::PerZeta);
}

template <class F>
Complex bplain(F&& g, const RuleConfig& cfg) {
  quad::BoundaryRule rule(cfg.boundary_n);
  return quad::boundary_mean(g, rule, quad::Measure::Plain);
}

// A[g/(zeta - c)] with the rule centered at the pole.
template <class F>
Complex area_pole_at(F&& g, Complex c, const RuleConfig& cfg) {
  return area_centered([&](Complex t) { return g(t) / (t - c); }, c, cfg);
}

// stable series for zb(2-|z|^2) tb/2 + |z|^2 (2-|z|^2) tb^2/4
//   - (1-|z|^2)^2 sum_{m>=3} z^{m-2} tb^m/(2m)
// which equals tb/(2z) + tb^2/4 + (1-|z|^2)^2 log(1 - z tb)/(2 z^2)
// including the removable point z = 0.
inline Complex log_bracket(Complex z, Complex tb) {
  double a2 = std::norm(z);
  Complex out = std::conj(z) * (2.0 - a2) * tb * 0.5 +
                tb * tb * (a2 * (2.0 - a2) * 0.25);
  Complex acc(0, 0), zp = z, tp = tb * tb * tb;
  for (int m = 3; m < 500; ++m) {
    acc += zp * tp / (2.0 * m);
    zp *= z;
    tp *= tb;
    if (std::norm(zp * tp) < 1e-60) break;
  }
  double s = 1.0 - a2;
  return out - s * s * acc;
}

}  // namespace detail

inline std::vector<IdentityEntry> catalog() {
  using namespace detail;
  std::vector<IdentityEntry> out;
  auto add = [&out](std::string id, bool uses_zt,
                    std::function<Complex(Complex, Complex, const RuleConfig&)> lhs,
                    std::function<Complex(Complex, Complex)> rhs) {
    out.push_back({std::move(id), uses_zt, std::move(lhs), std::move(rhs)});
  };

  // A[cz zb/(1-zb zeta)^2] = zb^2
  add("L2.i", false,
      [](Complex z, Complex, const RuleConfig& cfg) {
        Complex zb = std::conj(z);
        return area_origin(
            [zb](Complex t) {
              Complex d = 1.0 - zb * t;
              return std::conj(t) * zb / (d * d);
            },
            cfg);
      },
      [](Complex z, Complex) { return std::conj(z) * std::conj(z); });

  // A[zb/((zt-zeta)(1-zb zeta)^2)] = (zb tb - 2 zb^2 + zb^3 zt)/(1-zb zt)^2
  add("L2.ii", true,
      [](Complex z, Complex zt, const RuleConfig& cfg) {
        Complex zb = std::conj(z);
        return -area_pole_at(
            [zb](Complex t) {
              Complex d = 1.0 - zb * t;
              return zb / (d * d);
            },
            zt, cfg);
      },
      [](Complex z, Complex zt) {
        Complex zb = std::conj(z), tb = std::conj(zt);
        Complex d = 1.0 - zb * zt;
        return (zb * tb - 2.0 * zb * zb + zb * zb * zb * zt) / (d * d);
      });

  // A[(1-|t|^2) log(1-t tb) zb/(t (1-zb t)^2)] = -zb tb/2
  add("L2.iii", true,
      [](Complex z, Complex zt, const RuleConfig& cfg) {
        Complex zb = std::conj(z), tb = std::conj(zt);
        return area_origin(
            [zb, tb](Complex t) {
              Complex d = 1.0 - zb * t;
              return (1.0 - std::norm(t)) * std::log(1.0 - t * tb) * zb / (t * d * d);
            },
            cfg);
      },
      [](Complex z, Complex zt) { return -std::conj(z) * std::conj(zt) * 0.5; });

  // A[(|zt|^2-|t|^2) zb/((zt-t)(1-zb t)^2)]
  //   = (zb |zt|^2 (tb - 4 zb + 2 zb^2 zt) + 2 zb^2 - zb^3 zt)/(2 (1-zb zt)^2)
  add("L2.iv", true,
      [](Complex z, Complex zt, const RuleConfig& cfg) {
        Complex zb = std::conj(z);
        double s = std::norm(zt);
        return -area_pole_at(
            [zb, s](Complex t) {
              Complex d = 1.0 - zb * t;
              return (s - std::norm(t)) * zb / (d * d);
            },
            zt, cfg);
      },
      [](Complex z, Complex zt) {
        Complex zb = std::conj(z), tb = std::conj(zt);
        Complex d = 1.0 - zb * zt;
        return (zb * std::norm(zt) * (tb - 4.0 * zb + 2.0 * zb * zb * zt) +
                2.0 * zb * zb - zb * zb * zb * zt) /
               (2.0 * d * d);
      });

  // Bd[cz/((1-zb s)^2 (s - zt))] = (2 zb - zb^2 zt)/(1-zb zt)^2
  add("L2.iv.a", true,
      [](Complex z, Complex zt, const RuleConfig& cfg) {
        Complex zb = std::conj(z);
        return bplain(
            [zb, zt](Complex s) {
              Complex d = 1.0 - zb * s;
              return std::conj(s) / (d * d * (s - zt));
            },
            cfg);
      },
      [](Complex z, Complex zt) {
        Complex zb = std::conj(z);
        Complex d = 1.0 - zb * zt;
        return (2.0 * zb - zb * zb * zt) / (d * d);
      });

  // Bd[s cz^2/(2 (s - zt)(1-zb s)^2)] = (2 zb - zb^2 zt)/(2 (1-zb zt)^2)
  add("L2.iv.b", true,
      [](Complex z, Complex zt, const RuleConfig& cfg) {
        Complex zb = std::conj(z);
        return bplain(
            [zb, zt](Complex s) {
              Complex sb = std::conj(s);
              Complex d = 1.0 - zb * s;
              return s * sb * sb / (2.0 * (s - zt) * d * d);
            },
            cfg);
      },
      [](Complex z, Complex zt) {
        Complex zb = std::conj(z);
        Complex d = 1.0 - zb * zt;
        return (2.0 * zb - zb * zb * zt) / (2.0 * d * d);
      });

  // A[cz z/(t (t - z))] = -zb^2/2 via cz z/(t(t-z)) = cz/(t-z) - cz/t
  add("L2.v", false,
      [](Complex z, Complex, const RuleConfig& cfg) {
        return area_pole_at([](Complex t) { return std::conj(t); }, z, cfg) -
               area_origin([](Complex t) { return std::conj(t) / t; }, cfg);
      },
      [](Complex z, Complex) { return -std::conj(z) * std::conj(z) * 0.5; });

  // A[z/((zt-t) t (t-z))] = (tb - zb)/(zt - z) - tb/zt; three centered rules
  add("L2.vi", true,
      [](Complex z, Complex zt, const RuleConfig& cfg) {
        Complex r_zt = -z / (zt * (zt - z));
        Complex r_0 = -1.0 / zt;
        Complex r_z = 1.0 / (zt - z);
        return r_zt * area_pole_at([](Complex) { return Complex(1, 0); }, zt, cfg) +
               r_0 * area_origin([](Complex t) { return 1.0 / t; }, cfg) +
               r_z * area_pole_at([](Complex) { return Complex(1, 0); }, z, cfg);
      },
      [](Complex z, Complex zt) {
        return (std::conj(zt) - std::conj(z)) / (zt - z) - std::conj(zt) / zt;
      });

  // (1/2pi) iint (t+z)(1-|t|^2) log(1-t tb)/((t-z) t^2)
  //   = (1-|z|^2)^2 log(1-z tb)/(2 z^2) + tb/(2z) + tb^2/8
  add("L2.vii", true,
      [](Complex z, Complex zt, const RuleConfig& cfg) {
        Complex tb = std::conj(zt);
        auto g = [tb](Complex t) { return (1.0 - std::norm(t)) * std::log(1.0 - t * tb); };
        Complex az = area_pole_at(g, z, cfg);
        Complex a0 = area_origin([&g](Complex t) { return g(t) / t; }, cfg);
        Complex a00 = area_origin([&g](Complex t) { return g(t) / (t * t); }, cfg);
        return 0.5 * ((2.0 / z) * (az - a0) - a00);
      },
      [](Complex z, Complex zt) {
        Complex tb = std::conj(zt);
        return log_bracket(z, tb) - tb * tb / 8.0;
      });

  // A[(|zt|^2-|t|^2) z/((zt-t) t (t-z))]
  //   = |zt|^2 [(tb-zb)/(zt-z) - tb/zt] - z (tb^2 - zb^2)/(2 (zt-z))
  add("L2.viii", true,
      [](Complex z, Complex zt, const RuleConfig& cfg) {
        Complex r_zt = -z / (zt * (zt - z));
        Complex r_0 = -1.0 / zt;
        Complex r_z = 1.0 / (zt - z);
        double s = std::norm(zt);
        Complex part6 =
            r_zt * area_pole_at([](Complex) { return Complex(1, 0); }, zt, cfg) +
            r_0 * area_origin([](Complex t) { return 1.0 / t; }, cfg) +
            r_z * area_pole_at([](Complex) { return Complex(1, 0); }, z, cfg);
        Complex part2 =
            (z / (zt - z)) *
            (area_pole_at([](Complex t) { return std::conj(t); }, z, cfg) -
             area_pole_at([](Complex t) { return std::conj(t); }, zt, cfg));
        return s * part6 - part2;
      },
      [](Complex z, Complex zt) {
        Complex zb = std::conj(z), tb = std::conj(zt);
        double s = std::norm(zt);
        return s * ((tb - zb) / (zt - z) - tb / zt) -
               z * (tb * tb - zb * zb) / (2.0 * (zt - z));
      });

  // A[(1-|t|^2) log(1-t tb) z/(t^2 (t-z))]
  //   = tb/(2z) + tb^2/4 + (1-|z|^2)^2 log(1-z tb)/(2 z^2)
  add("L2.ix", true,
      [](Complex z, Complex zt, const RuleConfig& cfg) {
        Complex tb = std::conj(zt);
        auto g = [tb](Complex t) { return (1.0 - std::norm(t)) * std::log(1.0 - t * tb); };
        Complex az = area_pole_at(g, z, cfg);
        Complex a0 = area_origin([&g](Complex t) { return g(t) / t; }, cfg);
        Complex a00 = area_origin([&g](Complex t) { return g(t) / (t * t); }, cfg);
        return (1.0 / z) * (az - a0) - a00;
      },
      [](Complex z, Complex zt) {
        return log_bracket(z, std::conj(zt));
      });

  // A[(1-|t|^2)/(t (1-zb t)(zt - t))] = (2 tb - zt (tb^2 + zb^2))/(2 zt (1-zb zt))
  add("L3.i", true,
      [](Complex z, Complex zt, const RuleConfig& cfg) {
        Complex zb = std::conj(z);
        auto g = [zb](Complex t) { return (1.0 - std::norm(t)) / (1.0 - zb * t); };
        return (1.0 / zt) *
               (area_origin([&g](Complex t) { return g(t) / t; }, cfg) -
                area_pole_at(g, zt, cfg));
      },
      [](Complex z, Complex zt) {
        Complex zb = std::conj(z), tb = std::conj(zt);
        return (2.0 * tb - zt * (tb * tb + zb * zb)) / (2.0 * zt * (1.0 - zb * zt));
      });

  // B[cz (1-|z|^2) log(1-z cz)/(z (zt - s))] = 0
  add("L3.ii", true,
      [](Complex z, Complex zt, const RuleConfig& cfg) {
        double s = 1.0 - std::norm(z);
        return bmean(
            [z, zt, s](Complex w) {
              return std::conj(w) * s / z * logk(z, w) / (zt - w);
            },
            cfg);
      },
      [](Complex, Complex) { return Complex(0, 0); });

  // A[(|t|^2-|z|^2)/(t (t-z)(zt-t))] = (tb (|zt|^2 - 2|z|^2) + zb^2 zt)/(2 zt (zt-z))
  add("L3.iii", true,
      [](Complex z, Complex zt, const RuleConfig& cfg) {
        Complex zb = std::conj(z);
        // (|t|^2-|z|^2)/(t(t-z)(zt-t)) = cz/(t(zt-t)) + (cz-zb) z/((zt-t) t (t-z))
        Complex first =
            (1.0 / zt) *
            (area_origin([](Complex t) { return std::conj(t) / t; }, cfg) -
             area_pole_at([](Complex t) { return std::conj(t); }, zt, cfg));
        Complex r_zt = -z / (zt * (zt - z));
        Complex r_0 = -1.0 / zt;
        Complex r_z = 1.0 / (zt - z);
        Complex second =
            r_zt * area_pole_at([zb](Complex t) { return std::conj(t) - zb; }, zt, cfg) +
            r_0 * area_origin([zb](Complex t) { return (std::conj(t) - zb) / t; }, cfg) +
            r_z * area_pole_at([zb](Complex t) { return std::conj(t) - zb; }, z, cfg);
        return first + second;
      },
      [](Complex z, Complex zt) {
        Complex zb = std::conj(z), tb = std::conj(zt);
        return (tb * (std::norm(zt) - 2.0 * std::norm(z)) + zb * zb * zt) /
               (2.0 * zt * (zt - z));
      });

  // B[cz^2/(1-zb s)] = zb^2
  add("AUX.1", false,
      [](Complex z, Complex, const RuleConfig& cfg) {
        Complex zb = std::conj(z);
        return bmean(
            [zb](Complex s) {
              Complex sb = std::conj(s);
              return sb * sb / (1.0 - zb * s);
            },
            cfg);
      },
      [](Complex z, Complex) { return std::conj(z) * std::conj(z); });

  // B[cz/((zt - s)(1-zb s))] = -zb^2/(1-zb zt)
  add("AUX.2", true,
      [](Complex z, Complex zt, const RuleConfig& cfg) {
        Complex zb = std::conj(z);
        return bmean(
            [zb, zt](Complex s) {
              return std::conj(s) / ((zt - s) * (1.0 - zb * s));
            },
            cfg);
      },
      [](Complex z, Complex zt) {
        Complex zb = std::conj(z);
        return -zb * zb / (1.0 - zb * zt);
      });

  // B[(|zt|^2-|s|^2) cz/((zt - s)(1-zb s))] = zb^2 (1-|zt|^2)/(1-zb zt)
  add("AUX.3", true,
      [](Complex z, Complex zt, const RuleConfig& cfg) {
        Complex zb = std::conj(z);
        double s2 = std::norm(zt);
        return bmean(
            [zb, zt, s2](Complex s) {
              return (s2 - std::norm(s)) * std::conj(s) / ((zt - s) * (1.0 - zb * s));
            },
            cfg);
      },
      [](Complex z, Complex zt) {
        Complex zb = std::conj(z);
        return zb * zb * (1.0 - std::norm(zt)) / (1.0 - zb * zt);
      });

  // B[cz^2 log(1-z cz)] = 0
  add("AUX.4", false,
      [](Complex z, Complex, const RuleConfig& cfg) {
        return bmean(
            [z](Complex s) {
              Complex sb = std::conj(s);
              return sb * sb * logk(z, s);
            },
            cfg);
      },
      [](Complex, Complex) { return Complex(0, 0); });

  // B[cz log(1-z cz)/(zt - s)] = 0
  add("AUX.5", true,
      [](Complex z, Complex zt, const RuleConfig& cfg) {
        return bmean(
            [z, zt](Complex s) { return std::conj(s) * logk(z, s) / (zt - s); },
            cfg);
      },
      [](Complex, Complex) { return Complex(0, 0); });

  return out;
}

struct CheckResult {
  Complex lhs, rhs;
  double err;
};

inline CheckResult check(const IdentityEntry& entry, Complex z, Complex zt,
                         const RuleConfig& cfg) {
  Complex l = entry.lhs(z, zt, cfg);
  Complex r = entry.rhs(z, zt);
  return {l, r, std::abs(l - r)};
}

struct SweepRow {
  std::string id;
  double max_err = 0.0;
  Complex argmax_z, argmax_zt;
};

// Seeded (z, zt) pairs kept away from the origin, each other, and the rim so
// every closed form in the catalog is well conditioned.
inline std::vector<std::pair<Complex, Complex>> sample_pairs(int n, unsigned seed,
                                                             double r_max) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<std::pair<Complex, Complex>> out;
  out.reserve(n);
  auto draw = [&]() {
    for (;;) {
      Complex w(uni(rng), uni(rng));
      if (std::abs(w) <= 1.0) return w * r_max;
    }
  };
  while (static_cast<int>(out.size()) < n) {
    Complex z = draw(), zt = draw();
    if (std::abs(z) < 0.05 || std::abs(zt) < 0.05) continue;
    if (std::abs(z - zt) < 0.12) continue;
    out.emplace_back(z, zt);
  }
  return out;
}

inline std::vector<SweepRow> sweep(const std::vector<IdentityEntry>& entries,
                                   int n_samples, unsigned seed,
                                   const RuleConfig& cfg) {
  auto pairs = sample_pairs(n_samples, seed, cfg.r_max);
  std::vector<SweepRow> rows(entries.size());
  parallel_for(entries.size(), [&](std::size_t i) {
    SweepRow row;
    row.id = entries[i].id;
    for (const auto& [z, zt] : pairs) {
      CheckResult r = check(entries[i], z, zt, cfg);
      if (r.err > row.max_err) {
        row.max_err = r.err;
        row.argmax_z = z;
        row.argmax_zt = zt;
      }
    }
    rows[i] = row;
  });
  return rows;
}

}  // namespace tribvp::identities
