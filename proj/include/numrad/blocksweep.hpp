// Copyright (c) the numrad authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0
//
// Certified maximization of theta -> max_j lambda_max(Re(e^{i theta} M_j)).
// Phase 1 is the grid + golden-section sweep with the wedge certificate
// (sweep.hpp). Support functions with flat tops (disk-like numerical
// ranges) make half-plane certificates quadratically expensive, so when
// phase 1 exceeds its evaluation budget a level-set bisection takes over:
// the pencil test (levelset.hpp) decides "sup <= mu" / "sup >= mu" exactly,
// and evaluations at the crossing angles raise the reported value onto the
// level, halving the bracket every round.

#ifndef NUMRAD_BLOCKSWEEP_HPP
#define NUMRAD_BLOCKSWEEP_HPP

#include "numrad/levelset.hpp"
#include "numrad/sweep.hpp"

#include <vector>

namespace numrad {
namespace detail {

// Hermitian and skew parts so that Re(e^{i theta} M) = cos(theta) H + sin(theta) K.
struct RotationParts {
  Matrix h, k;
};

inline RotationParts rotation_parts(const Matrix& m) {
  return {0.5 * (m + m.adjoint()), cplx(0.0, 0.5) * (m - m.adjoint())};
}

inline double rotated_top_eig(const RotationParts& p, double theta) {
  return hermitian_top_eigenvalue(Matrix(std::cos(theta) * p.h + std::sin(theta) * p.k));
}

}  // namespace detail

/// Certified sweep over one or more blocks; |value - sup| <= tol with the
/// theta witness being an actual evaluation point.
inline CircleMaxResult certified_support_max(const std::vector<Matrix>& blocks, double tol,
                                             double grid_resolution = 0.0) {
  if (!(tol > 0.0)) throw std::invalid_argument("certified_support_max: tol must be positive");
  double bound = 0.0;
  for (const auto& m : blocks) {
    if (m.rows() != m.cols()) throw ShapeError("certified_support_max: blocks must be square");
    require_finite(m, "certified_support_max");
    bound = std::max(bound, sigma_max(m));
  }
  if (bound == 0.0) return {};

  std::vector<detail::RotationParts> parts;
  parts.reserve(blocks.size());
  for (const auto& m : blocks) parts.push_back(detail::rotation_parts(m));
  auto g = [&](double theta) {
    double v = -std::numeric_limits<double>::infinity();
    for (const auto& p : parts) v = std::max(v, detail::rotated_top_eig(p, theta));
    return v;
  };

  CircleMaxResult res = certified_circle_max(g, bound, tol, grid_resolution, 800);
  if (res.certified) return res;

  double best = res.value;
  double theta = res.theta;
  double hi = std::min(res.upper_bound, bound);
  long evals = res.evals;
  int stall = 0;
  for (int round = 0; round < 200 && hi - best > tol; ++round) {
    const double mu = best + 0.5 * (hi - best);
    std::vector<double> angles;
    for (const auto& m : blocks) {
      const auto a = detail::level_crossing_angles(m, mu);
      angles.insert(angles.end(), a.begin(), a.end());
    }
    if (angles.empty()) {
      // No eigenvalue sheet reaches mu anywhere; together with best < mu this
      // pins the sup below mu.
      hi = mu;
      stall = 0;
      continue;
    }
    std::sort(angles.begin(), angles.end());
    const double prev_best = best;
    auto eval_update = [&](double th) {
      const double v = g(th);
      ++evals;
      if (v > best) {
        best = v;
        theta = th;
      }
    };
    for (std::size_t i = 0; i < angles.size(); ++i) {
      eval_update(angles[i]);  // lambda_max >= crossing sheet, so g >= mu here
      const double next = (i + 1 < angles.size()) ? angles[i + 1] : angles.front() + kTwoPi;
      eval_update(0.5 * (angles[i] + next));
    }
    if (best <= prev_best + 1e-3 * tol) {
      if (++stall >= 2) throw CrossCheckError("certified_support_max: level phase stalled");
    } else {
      stall = 0;
    }
  }
  if (hi - best > tol) throw CrossCheckError("certified_support_max: did not converge");

  CircleMaxResult out;
  out.value = best;
  double tw = std::fmod(theta, kTwoPi);
  if (tw < 0.0) tw += kTwoPi;
  out.theta = tw;
  out.upper_bound = hi;
  out.evals = evals;
  out.certified = true;
  return out;
}

inline CircleMaxResult certified_support_max(const Matrix& block, double tol,
                                             double grid_resolution = 0.0) {
  return certified_support_max(std::vector<Matrix>{block}, tol, grid_resolution);
}

}  // namespace numrad

#endif  // NUMRAD_BLOCKSWEEP_HPP
