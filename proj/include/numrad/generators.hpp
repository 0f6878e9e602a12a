// Copyright (c) the numrad authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0
//
// Seeded random operator families for the property suite. Every kind's
// defining predicate holds to 1e-10 by construction.

#ifndef NUMRAD_GENERATORS_HPP
#define NUMRAD_GENERATORS_HPP

#include "numrad/operator.hpp"

namespace numrad {

enum class OperatorKind { Generic, SelfAdjoint, Normal, Nilpotent2, LeftMult };

inline const char* to_string(OperatorKind k) {
  switch (k) {
    case OperatorKind::Generic: return "generic";
    case OperatorKind::SelfAdjoint: return "selfadjoint";
    case OperatorKind::Normal: return "normal";
    case OperatorKind::Nilpotent2: return "nilpotent2";
    case OperatorKind::LeftMult: return "leftmult";
  }
  return "unknown";
}

namespace detail {

inline Matrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = rng.cnormal();
  return m;
}

// T = P Q with Q P = 0, from random P and an orthogonalized right factor:
// Q = (B - P P^+ B)*, so that T^2 = P (Q P) Q = 0 up to rounding. Blocks of
// dimension 1 cannot carry a nonzero square-zero operator and degenerate to
// zero.
inline Matrix nilpotent2_block(Eigen::Index d, Rng& rng) {
  if (d < 2) return Matrix::Zero(d, d);
  const Eigen::Index p = d / 2;
  const Matrix lhs = gaussian_matrix(d, p, rng);
  const Matrix b = gaussian_matrix(d, p, rng);
  const Matrix coeff = lhs.colPivHouseholderQr().solve(b);  // P^+ B
  const Matrix rhs = (b - lhs * coeff).adjoint();
  return lhs * rhs;
}

inline Matrix normal_block(Eigen::Index d, Rng& rng) {
  const Matrix g = gaussian_matrix(d, d, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  const Matrix u = qr.householderQ();
  Eigen::VectorXcd eigs(d);
  for (Eigen::Index i = 0; i < d; ++i) eigs(i) = rng.cnormal();
  return u * eigs.asDiagonal() * u.adjoint();
}

}  // namespace detail

/// Deterministic per seed; `LeftMult` requires k = 1.
inline ModuleOperator gen_operator(const AlgebraSignature& sig, int k, OperatorKind kind,
                                   std::uint64_t seed) {
  if (k < 1) throw ShapeError("gen_operator: k must be >= 1");
  Rng rng(seed);
  if (kind == OperatorKind::LeftMult) {
    if (k != 1) throw ShapeError("gen_operator: leftmult family requires k = 1");
    return left_mult(random_element(sig, rng));
  }
  std::vector<Matrix> blocks;
  blocks.reserve(static_cast<std::size_t>(sig.num_blocks()));
  for (int j = 0; j < sig.num_blocks(); ++j) {
    const Eigen::Index d = static_cast<Eigen::Index>(k) * sig.dim(j);
    switch (kind) {
      case OperatorKind::Generic:
        blocks.push_back(detail::gaussian_matrix(d, d, rng));
        break;
      case OperatorKind::SelfAdjoint: {
        const Matrix g = detail::gaussian_matrix(d, d, rng);
        blocks.push_back(0.5 * (g + g.adjoint()));
        break;
      }
      case OperatorKind::Normal:
        blocks.push_back(detail::normal_block(d, rng));
        break;
      case OperatorKind::Nilpotent2:
        blocks.push_back(detail::nilpotent2_block(d, rng));
        break;
      case OperatorKind::LeftMult:
        break;  // handled above
    }
  }
  return {sig, k, std::move(blocks)};
}

}  // namespace numrad

#endif  // NUMRAD_GENERATORS_HPP
