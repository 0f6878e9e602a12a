// Copyright (c) the numrad authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0
//
// Certified global maximization of theta -> lambda_max(Re(e^{i theta} M))
// over the circle. Any such objective is the support function of a compact
// convex set (the numerical range, or a union hull of per-block ranges), so
// two sampled supporting half-planes bound the maximum on the arc between
// them by the modulus of their corner point. A uniform grid plus
// golden-section refinement finds the value; adaptive splitting of arcs
// whose corner bound still exceeds value + tol makes the result certified:
// |value - sup| <= tol.

#ifndef NUMRAD_SWEEP_HPP
#define NUMRAD_SWEEP_HPP

#include "numrad/common.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <utility>
#include <vector>

namespace numrad {

struct CircleMaxResult {
  double value = 0.0;        // best objective value found (a true lower bound)
  double theta = 0.0;        // angle in [0, 2*pi) achieving `value`
  double upper_bound = 0.0;  // certified: sup over the circle <= upper_bound
  long evals = 0;            // objective evaluations spent
  bool certified = true;     // upper_bound - value <= tol was reached
};

namespace detail {

// Corner-point bound: largest |z| subject to Re(e^{i tl} z) <= gl and
// Re(e^{i tr} z) <= gr, valid as an upper bound for the support values on
// the whole arc (tl, tr) once tr - tl < pi.
inline double wedge_upper_bound(double tl, double gl, double tr, double gr,
                                double radius_bound) {
  const double delta = tr - tl;
  if (delta >= 1.5) return radius_bound;
  const double s = std::sin(delta);
  const double c = std::cos(delta);
  if (s <= 0.0) return radius_bound;
  // |corner|^2 = ((gl-gr)/sin d)^2 + 2 gl gr / (1 + cos d), stable for small d.
  const double t1 = (gl - gr) / s;
  const double sq = t1 * t1 + 2.0 * gl * gr / (1.0 + c);
  double ub = std::sqrt(std::max(sq, 0.0));
  ub = std::max({ub, gl, gr});
  return std::min(ub, radius_bound);
}

}  // namespace detail

/// Maximize g over [0, 2*pi). `radius_bound` must dominate sup |z| of the
/// underlying convex set (an operator-norm bound). `grid_resolution` sets
/// the initial uniform grid count N = ceil(2*pi*radius_bound / resolution);
/// zero picks a default proportional to radius_bound. Ties in the grid
/// argmax go to the smallest theta. When the splitting budget `eval_cap`
/// runs out first, the result carries certified = false and a still-valid
/// upper bound.
template <typename F>
CircleMaxResult certified_circle_max(F&& g, double radius_bound, double tol,
                                     double grid_resolution = 0.0,
                                     long eval_cap = 4'000'000) {
  if (!(tol > 0.0)) throw std::invalid_argument("certified_circle_max: tol must be positive");
  CircleMaxResult out;
  if (!(radius_bound > 0.0)) {
    // Zero set: the objective is identically zero.
    return out;
  }

  const double res = grid_resolution > 0.0 ? grid_resolution : radius_bound / 20.0;
  long n = static_cast<long>(std::ceil(kTwoPi * radius_bound / res));
  n = std::clamp<long>(n, 32, 1L << 20);

  // theta -> value, kept sorted; arcs are consecutive pairs (wrapping).
  std::map<double, double> samples;
  double best_v = -std::numeric_limits<double>::infinity();
  double best_t = 0.0;
  auto eval_at = [&](double theta) {
    const double v = g(theta);
    ++out.evals;
    samples.emplace(theta, v);
    if (v > best_v) {
      best_v = v;
      best_t = theta;
    }
    return v;
  };

  for (long i = 0; i < n; ++i) {
    eval_at(kTwoPi * static_cast<double>(i) / static_cast<double>(n));
  }

  // Golden-section polish of the bracket around the best grid point. The
  // certificate below does not depend on unimodality; this only sharpens the
  // reported value and theta witness.
  const double h = kTwoPi / static_cast<double>(n);
  const double target_width = std::max(std::sqrt(2.0 * tol / radius_bound) * 0.5, 1e-12);
  auto golden_polish = [&](double center, double half_width) {
    const double inv_phi = 0.6180339887498949;
    double lo = center - half_width, hi = center + half_width;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = g(x1), f2 = g(x2);
    out.evals += 2;
    for (int it = 0; it < 80 && (hi - lo) > target_width; ++it) {
      if (f1 < f2) {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + inv_phi * (hi - lo);
        f2 = g(x2);
      } else {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - inv_phi * (hi - lo);
        f1 = g(x1);
      }
      ++out.evals;
    }
    const double xb = (f1 >= f2) ? x1 : x2;
    const double fb = std::max(f1, f2);
    if (fb > best_v) {
      best_v = fb;
      best_t = xb;
    }
    // Record the polished point so the arc containing it gets split.
    double tw = std::fmod(xb, kTwoPi);
    if (tw < 0.0) tw += kTwoPi;
    samples.emplace(tw, fb);
  };
  golden_polish(best_t, h);

  // Certify: split every arc whose corner bound exceeds best + tol.
  struct Arc {
    double ub;
    double tl, tr;
    double gl, gr;
  };
  auto arc_less = [](const Arc& a, const Arc& b) {
    if (a.ub != b.ub) return a.ub < b.ub;
    return a.tl > b.tl;  // deterministic tie-break: smaller theta first
  };
  std::priority_queue<Arc, std::vector<Arc>, decltype(arc_less)> heap(arc_less);

  {
    auto it = samples.begin();
    auto prev = it++;
    for (; it != samples.end(); ++prev, ++it) {
      heap.push({detail::wedge_upper_bound(prev->first, prev->second, it->first,
                                           it->second, radius_bound),
                 prev->first, it->first, prev->second, it->second});
    }
    // wrap-around arc
    auto first = samples.begin();
    auto last = std::prev(samples.end());
    heap.push({detail::wedge_upper_bound(last->first, last->second,
                                         first->first + kTwoPi, first->second,
                                         radius_bound),
               last->first, first->first + kTwoPi, last->second, first->second});
  }

  double residual_ub = best_v;  // bounds retired arcs that cannot be split further
  while (!heap.empty() && heap.top().ub > best_v + tol) {
    if (out.evals >= eval_cap) {
      out.certified = false;
      break;
    }
    const Arc arc = heap.top();
    heap.pop();
    const double tm = 0.5 * (arc.tl + arc.tr);
    if (!(tm > arc.tl && tm < arc.tr)) {
      // Arc collapsed to rounding width; retire it with its bound.
      residual_ub = std::max(residual_ub, arc.ub);
      continue;
    }
    const double gm = g(tm);
    ++out.evals;
    if (gm > best_v) {
      best_v = gm;
      best_t = tm;
    }
    heap.push({detail::wedge_upper_bound(arc.tl, arc.gl, tm, gm, radius_bound),
               arc.tl, tm, arc.gl, gm});
    heap.push({detail::wedge_upper_bound(tm, gm, arc.tr, arc.gr, radius_bound),
               tm, arc.tr, gm, arc.gr});
  }

  out.value = best_v;
  out.upper_bound = std::max(residual_ub,
                             heap.empty() ? best_v : std::max(best_v, heap.top().ub));
  if (out.upper_bound - out.value > tol) out.certified = false;
  double tw = std::fmod(best_t, kTwoPi);
  if (tw < 0.0) tw += kTwoPi;
  out.theta = tw;
  return out;
}

}  // namespace numrad

#endif  // NUMRAD_SWEEP_HPP
