// Copyright (c) the numrad authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef NUMRAD_TEST_HELPERS_HPP
#define NUMRAD_TEST_HELPERS_HPP

#include "numrad/numrad.hpp"

#include <catch2/catch_amalgamated.hpp>

namespace testutil {

inline numrad::Matrix random_matrix(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed) {
  numrad::Rng rng(seed);
  numrad::Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = rng.cnormal();
  return m;
}

inline numrad::AlgebraElement random_element(const numrad::AlgebraSignature& sig,
                                             std::uint64_t seed) {
  numrad::Rng rng(seed);
  return numrad::random_element(sig, rng);
}

// Independent dense-grid evaluation of the classical numerical radius:
// max over n equally spaced angles of lambda_max(Re(e^{i theta} M)), straight
// through Eigen. Overestimates by at most a factor cos(pi/n) when inverted,
// i.e. true w lies in [result, result / cos(pi/n)].
inline double oracle_nr_grid(const numrad::Matrix& m, int npoints) {
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < npoints; ++i) {
    const double theta = numrad::kTwoPi * i / npoints;
    const numrad::cplx phase(std::cos(theta), std::sin(theta));
    const numrad::Matrix h = 0.5 * (phase * m + (phase * m).adjoint());
    Eigen::SelfAdjointEigenSolver<numrad::Matrix> es(h, Eigen::EigenvaluesOnly);
    best = std::max(best, es.eigenvalues()(h.rows() - 1));
  }
  return best;
}

// Independent spectral radius through the dense eigensolver.
inline double oracle_spectral_radius(const numrad::ModuleOperator& t) {
  double r = 0.0;
  for (const auto& m : t.blocks) {
    Eigen::ComplexEigenSolver<numrad::Matrix> es(m, false);
    r = std::max(r, es.eigenvalues().cwiseAbs().maxCoeff());
  }
  return r;
}

// The separating 2x2 pair used across the tests.
inline numrad::AlgebraElement oblique_idempotent_element() {
  numrad::Matrix am(2, 2);
  am << 1, 0, 1, 0;
  return {numrad::AlgebraSignature{2}, {am}};
}

inline numrad::AlgebraElement shift_element() {
  numrad::Matrix bm(2, 2);
  bm << 0, 0, 1, 0;
  return {numrad::AlgebraSignature{2}, {bm}};
}

}  // namespace testutil

#endif  // NUMRAD_TEST_HELPERS_HPP
