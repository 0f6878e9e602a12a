// Copyright (c) the numrad authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef NUMRAD_COMMON_HPP
#define NUMRAD_COMMON_HPP

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace numrad {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Default comparison tolerance: 1e-9 absolute + 1e-9 relative.
inline constexpr double kDefaultTol = 1e-9;

struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DegenerateInputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Two independent computation routes disagreed beyond their certified
/// tolerances; indicates a numerical or logic bug, never expected input.
struct CrossCheckError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  std::string field;
  ParseError(std::string field_, const std::string& message)
      : std::runtime_error("parse error at " + field_ + ": " + message),
        field(std::move(field_)) {}
};

inline bool close(double a, double b, double tol = kDefaultTol) {
  return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

inline bool all_finite(const Matrix& m) {
  return m.allFinite();
}

inline void require_finite(const Matrix& m, const char* what) {
  if (!m.allFinite()) {
    throw std::invalid_argument(std::string(what) + ": non-finite entries");
  }
}

/// Deterministic random source. Streams derived from (seed, index) are
/// independent regardless of evaluation order, so multistart restarts and
/// suite trials reproduce bit-for-bit under any scheduling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(mix(seed)) {}

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
    return mix(seed) ^ mix(index + 1);
  }

  static Rng stream(std::uint64_t seed, std::uint64_t index) {
    return Rng(derive(seed, index));
  }

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  /// Standard real normal via Box-Muller (portable, no distribution state).
  double normal() {
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
  }

  /// Complex with independent N(0,1) real and imaginary parts.
  cplx cnormal() {
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return {r * std::cos(kTwoPi * u2), r * std::sin(kTwoPi * u2)};
  }

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

/// Largest eigenvalue of a Hermitian matrix. 1x1 and 2x2 use closed forms;
/// larger sizes go through Eigen's self-adjoint solver.
inline double hermitian_top_eigenvalue(const Matrix& a) {
  const Eigen::Index n = a.rows();
  if (n == 0) throw std::invalid_argument("hermitian_top_eigenvalue: empty matrix");
  if (n == 1) return a(0, 0).real();
  if (n == 2) {
    const double p = a(0, 0).real();
    const double q = a(1, 1).real();
    return 0.5 * (p + q) + std::hypot(0.5 * (p - q), std::abs(a(0, 1)));
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(n - 1);
}

/// Largest singular value, computed as sqrt(lambda_max(A* A)) on the smaller
/// Gram matrix.
inline double sigma_max(const Matrix& a) {
  if (a.rows() == 0 || a.cols() == 0) {
    throw std::invalid_argument("sigma_max: empty matrix");
  }
  Matrix gram;
  if (a.rows() >= a.cols()) {
    gram = a.adjoint() * a;
  } else {
    gram = a * a.adjoint();
  }
  return std::sqrt(std::max(0.0, hermitian_top_eigenvalue(gram)));
}

}  // namespace numrad

#endif  // NUMRAD_COMMON_HPP
