// Copyright (c) the numrad authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0
//
// Level-set test for the angle sweep. The level mu belongs to the spectrum
// of Re(e^{i theta} M) for some theta iff t = e^{i theta} is a unit-modulus
// root of the quadratic matrix polynomial t^2 M - 2 mu t I + M*. Solved as
// a 2n x 2n generalized eigenproblem (LAPACK zggev on the companion
// pencil), this gives a certification oracle that is immune to flat support
// functions: any unit-circle root certifies w >= mu, no unit-circle root
// certifies w <= mu once a sample below mu is known.

#ifndef NUMRAD_LEVELSET_HPP
#define NUMRAD_LEVELSET_HPP

#include "numrad/common.hpp"

#include <lapacke.h>

#include <vector>

namespace numrad {
namespace detail {

/// Angles theta in [0, 2*pi) where some eigenvalue of Re(e^{i theta} M)
/// equals mu. The modulus band is generous: spurious near-circle roots only
/// add candidate angles, while missing a true root would break the
/// certificate.
inline std::vector<double> level_crossing_angles(const Matrix& m, double mu,
                                                 double band = 1e-6) {
  const lapack_int n = static_cast<lapack_int>(m.rows());
  const lapack_int n2 = 2 * n;

  // Companion pencil A - t B for t^2 M - 2 mu t I + M*:
  //   A = [[2 mu I, -M*], [I, 0]],  B = [[M, 0], [0, I]].
  Matrix a = Matrix::Zero(n2, n2);
  Matrix b = Matrix::Zero(n2, n2);
  a.topLeftCorner(n, n) = 2.0 * mu * Matrix::Identity(n, n);
  a.topRightCorner(n, n) = -m.adjoint();
  a.bottomLeftCorner(n, n) = Matrix::Identity(n, n);
  b.topLeftCorner(n, n) = m;
  b.bottomRightCorner(n, n) = Matrix::Identity(n, n);

  std::vector<cplx> alpha(static_cast<std::size_t>(n2));
  std::vector<cplx> beta(static_cast<std::size_t>(n2));
  const lapack_int info = LAPACKE_zggev(
      LAPACK_COL_MAJOR, 'N', 'N', n2,
      reinterpret_cast<lapack_complex_double*>(a.data()), n2,
      reinterpret_cast<lapack_complex_double*>(b.data()), n2,
      reinterpret_cast<lapack_complex_double*>(alpha.data()),
      reinterpret_cast<lapack_complex_double*>(beta.data()), nullptr, 1, nullptr, 1);
  if (info != 0) {
    throw CrossCheckError("level_crossing_angles: zggev failed, info=" +
                          std::to_string(info));
  }

  std::vector<double> angles;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    const double ab = std::abs(alpha[i]);
    const double bb = std::abs(beta[i]);
    if (bb <= 1e-300 * std::max(1.0, ab)) continue;  // infinite eigenvalue
    const double r = ab / bb;
    if (std::abs(r - 1.0) > band) continue;
    double theta = std::arg(alpha[i] / beta[i]);
    if (theta < 0.0) theta += kTwoPi;
    angles.push_back(theta);
  }
  std::sort(angles.begin(), angles.end());
  return angles;
}

}  // namespace detail
}  // namespace numrad

#endif  // NUMRAD_LEVELSET_HPP
