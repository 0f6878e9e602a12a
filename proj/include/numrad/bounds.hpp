// Copyright (c) the numrad authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0
//
// Closed-form bound functions and verification predicates for the radius
// inequalities. Reports keep slacks so tightness statistics can be studied
// downstream.

#ifndef NUMRAD_BOUNDS_HPP
#define NUMRAD_BOUNDS_HPP

#include "numrad/radius.hpp"

#include <map>

namespace numrad {

struct BoundReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  bool holds = false;  // slack >= -tol
  double tol = 0.0;
  std::map<std::string, double> components;
};

/// f(x, y) = (x + y + sqrt((x - y)^2 + 4a)) / 2; symmetric, and equal to
/// max{x, y} when a = 0.
inline double f_merge(double x, double y, double a) {
  if (x < 0.0 || y < 0.0 || a < 0.0) {
    throw std::domain_error("f_merge: inputs must be nonnegative");
  }
  const double d = x - y;
  return 0.5 * (x + y + std::sqrt(d * d + 4.0 * a));
}

/// Samples ordered pairs (x1, y1) <= (x2, y2) with random a >= 0 and checks
/// f(x1, y1) <= f(x2, y2). The report carries the worst observed margin.
inline BoundReport f_monotone_check(int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("f_monotone_check: samples must be >= 1");
  Rng rng(seed);
  BoundReport rep;
  rep.tol = 1e-12;
  double worst = std::numeric_limits<double>::infinity();
  double worst_lhs = 0.0, worst_rhs = 0.0;
  int violations = 0;
  for (int i = 0; i < samples; ++i) {
    double x1 = 10.0 * rng.uniform(), x2 = 10.0 * rng.uniform();
    double y1 = 10.0 * rng.uniform(), y2 = 10.0 * rng.uniform();
    if (x1 > x2) std::swap(x1, x2);
    if (y1 > y2) std::swap(y1, y2);
    const double a = 10.0 * rng.uniform();
    const double f1 = f_merge(x1, y1, a);
    const double f2 = f_merge(x2, y2, a);
    const double margin = f2 - f1;
    if (margin < -rep.tol) ++violations;
    if (margin < worst) {
      worst = margin;
      worst_lhs = f1;
      worst_rhs = f2;
    }
  }
  rep.lhs = worst_lhs;
  rep.rhs = worst_rhs;
  rep.slack = worst;
  rep.holds = violations == 0;
  rep.components["samples"] = static_cast<double>(samples);
  rep.components["violations"] = static_cast<double>(violations);
  rep.components["worst_margin"] = worst;
  return rep;
}

/// Power-inequality sandwich for the spatial radius:
/// ||T*T + TT*|| / 4 <= wtilde(T)^2 <= ||T*T + TT*|| / 2.
/// holds requires both sides; lhs/rhs/slack describe the binding side.
inline BoundReport kittaneh_check(const ModuleOperator& t, double tol = 1e-7) {
  const ModuleOperator s = add(compose(adjoint(t), t), compose(t, adjoint(t)));
  const double ns = op_norm(s);
  const double wt = snr(t, std::min(tol / 10.0, 1e-9)).value;
  const double wt2 = wt * wt;
  const double slack_lower = wt2 - 0.25 * ns;
  const double slack_upper = 0.5 * ns - wt2;

  BoundReport rep;
  rep.tol = tol;
  if (slack_lower <= slack_upper) {
    rep.lhs = 0.25 * ns;
    rep.rhs = wt2;
    rep.slack = slack_lower;
  } else {
    rep.lhs = wt2;
    rep.rhs = 0.5 * ns;
    rep.slack = slack_upper;
  }
  rep.holds = slack_lower >= -tol && slack_upper >= -tol;
  rep.components["norm_s"] = ns;
  rep.components["snr"] = wt;
  rep.components["snr_sq"] = wt2;
  rep.components["slack_lower"] = slack_lower;
  rep.components["slack_upper"] = slack_upper;
  return rep;
}

/// Spectral-radius bound r(A1 B1 + A2 B2) <= f(w(B1 A1), w(B2 A2)) with
/// a = ||B1 A2|| * ||B2 A1||, asserted with the exactly-computable spatial
/// radii in place of w (valid and tighter); the looser version with
/// module-radius lower-bound estimates is reported but never asserted,
/// since a lower bound on the right-hand side would be unsound as a test.
inline BoundReport mixed_radius_bound_check(const ModuleOperator& a1, const ModuleOperator& b1,
                                            const ModuleOperator& a2, const ModuleOperator& b2,
                                            double tol = 1e-7) {
  require_same_shape(a1, b1, "mixed_radius_bound_check");
  require_same_shape(a1, a2, "mixed_radius_bound_check");
  require_same_shape(a1, b2, "mixed_radius_bound_check");

  const double snr_tol = std::min(tol / 10.0, 1e-9);
  const double lhs = spectral_radius(add(compose(a1, b1), compose(a2, b2)), 1e-10);
  const double cross = op_norm(compose(b1, a2)) * op_norm(compose(b2, a1));
  const double wt1 = snr(compose(b1, a1), snr_tol).value;
  const double wt2 = snr(compose(b2, a2), snr_tol).value;
  const double rhs = f_merge(wt1, wt2, cross);

  ModuleNrConfig cfg;
  cfg.restarts = 8;
  const double w1 = module_nr(compose(b1, a1), cfg).value;
  const double w2 = module_nr(compose(b2, a2), cfg).value;
  const double rhs_w = f_merge(w1, w2, cross);

  BoundReport rep;
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.slack = rhs - lhs;
  rep.tol = tol;
  rep.holds = rep.slack >= -tol;
  rep.components["alpha"] = (wt1 - wt2) * (wt1 - wt2) + 4.0 * cross;
  rep.components["cross_norms"] = cross;
  rep.components["snr_b1a1"] = wt1;
  rep.components["snr_b2a2"] = wt2;
  rep.components["rhs_w_estimate"] = rhs_w;
  rep.components["west_dominates"] = rhs_w - rhs;  // >= 0 by monotonicity of f
  return rep;
}

/// The basic sandwich ||T||/2 <= wtilde(T) <= w(T) <= ||T||.
inline BoundReport basic_bounds_check(const ModuleOperator& t, double tol = 1e-7) {
  const double n = op_norm(t);
  const double wt = snr(t, std::min(tol / 10.0, 1e-9)).value;
  const double w = module_nr(t).value;

  const double s1 = wt - 0.5 * n;
  const double s2 = w - wt;
  const double s3 = n - w;
  BoundReport rep;
  rep.lhs = 0.5 * n;
  rep.rhs = n;
  rep.slack = std::min({s1, s2, s3});
  rep.tol = tol;
  rep.holds = rep.slack >= -tol;
  rep.components["norm"] = n;
  rep.components["snr"] = wt;
  rep.components["module_nr"] = w;
  rep.components["slack_half_vs_snr"] = s1;
  rep.components["slack_snr_vs_w"] = s2;
  rep.components["slack_w_vs_norm"] = s3;
  return rep;
}

}  // namespace numrad

#endif  // NUMRAD_BOUNDS_HPP
