// Copyright (c) the numrad authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0
//
// Adjointable operators on H = A^k, stored per block as the flattened
// (k*n_j) x (k*n_j) complex matrix. The storage is the faithful
// block-matrix representation restricted to the block, so norms and radius
// computations reduce to dense linear algebra.

#ifndef NUMRAD_OPERATOR_HPP
#define NUMRAD_OPERATOR_HPP

#include "numrad/module.hpp"

namespace numrad {

struct ModuleOperator {
  AlgebraSignature sig;
  int k = 0;
  std::vector<Matrix> blocks;  // (k*n_j) x (k*n_j) per block

  ModuleOperator() = default;
  ModuleOperator(AlgebraSignature s, int k_, std::vector<Matrix> b)
      : sig(std::move(s)), k(k_), blocks(std::move(b)) {
    sig.validate();
    if (k < 1) throw ShapeError("operator: k must be >= 1");
    if (static_cast<int>(blocks.size()) != sig.num_blocks()) {
      throw ShapeError("operator: block count does not match signature");
    }
    for (int j = 0; j < sig.num_blocks(); ++j) {
      const Eigen::Index d = static_cast<Eigen::Index>(k) * sig.dim(j);
      const auto& m = blocks[static_cast<std::size_t>(j)];
      if (m.rows() != d || m.cols() != d) {
        throw ShapeError("operator: block shape does not match signature and k");
      }
      require_finite(m, "operator");
    }
  }
};

inline void require_same_shape(const ModuleOperator& s, const ModuleOperator& t,
                               const char* what) {
  if (s.sig != t.sig || s.k != t.k) {
    throw ShapeError(std::string(what) + ": operator shape mismatch");
  }
}

inline ModuleOperator zero_operator(const AlgebraSignature& sig, int k) {
  std::vector<Matrix> blocks;
  for (int j = 0; j < sig.num_blocks(); ++j) {
    const Eigen::Index d = static_cast<Eigen::Index>(k) * sig.dim(j);
    blocks.push_back(Matrix::Zero(d, d));
  }
  return {sig, k, std::move(blocks)};
}

inline ModuleOperator identity_operator(const AlgebraSignature& sig, int k) {
  std::vector<Matrix> blocks;
  for (int j = 0; j < sig.num_blocks(); ++j) {
    const Eigen::Index d = static_cast<Eigen::Index>(k) * sig.dim(j);
    blocks.push_back(Matrix::Identity(d, d));
  }
  return {sig, k, std::move(blocks)};
}

inline Frame apply(const ModuleOperator& t, const Frame& x) {
  if (t.sig != x.sig || t.k != x.k) throw ShapeError("apply: operator/frame shape mismatch");
  std::vector<Matrix> blocks;
  blocks.reserve(x.blocks.size());
  for (std::size_t j = 0; j < x.blocks.size(); ++j) blocks.push_back(t.blocks[j] * x.blocks[j]);
  return {x.sig, x.k, std::move(blocks)};
}

inline ModuleOperator adjoint(const ModuleOperator& t) {
  std::vector<Matrix> blocks;
  blocks.reserve(t.blocks.size());
  for (const auto& m : t.blocks) blocks.push_back(m.adjoint());
  return {t.sig, t.k, std::move(blocks)};
}

/// compose(s, t) applies t first: block j is S_j T_j.
inline ModuleOperator compose(const ModuleOperator& s, const ModuleOperator& t) {
  require_same_shape(s, t, "compose");
  std::vector<Matrix> blocks;
  blocks.reserve(s.blocks.size());
  for (std::size_t j = 0; j < s.blocks.size(); ++j) blocks.push_back(s.blocks[j] * t.blocks[j]);
  return {s.sig, s.k, std::move(blocks)};
}

inline ModuleOperator add(const ModuleOperator& s, const ModuleOperator& t) {
  require_same_shape(s, t, "add");
  std::vector<Matrix> blocks;
  blocks.reserve(s.blocks.size());
  for (std::size_t j = 0; j < s.blocks.size(); ++j) blocks.push_back(s.blocks[j] + t.blocks[j]);
  return {s.sig, s.k, std::move(blocks)};
}

inline ModuleOperator scale(const ModuleOperator& t, cplx c) {
  std::vector<Matrix> blocks;
  blocks.reserve(t.blocks.size());
  for (const auto& m : t.blocks) blocks.push_back(c * m);
  return {t.sig, t.k, std::move(blocks)};
}

inline ModuleOperator real_part(const ModuleOperator& t) {
  std::vector<Matrix> blocks;
  blocks.reserve(t.blocks.size());
  for (const auto& m : t.blocks) blocks.push_back(0.5 * (m + m.adjoint()));
  return {t.sig, t.k, std::move(blocks)};
}

inline ModuleOperator imag_part(const ModuleOperator& t) {
  std::vector<Matrix> blocks;
  blocks.reserve(t.blocks.size());
  for (const auto& m : t.blocks) blocks.push_back((m - m.adjoint()) * cplx(0.0, -0.5));
  return {t.sig, t.k, std::move(blocks)};
}

/// Left multiplication L_a on H = A (k = 1); the flattened block is a_j
/// itself, so ||L_a|| = ||a||.
inline ModuleOperator left_mult(const AlgebraElement& a) {
  return {a.sig, 1, a.blocks};
}

inline double op_norm(const ModuleOperator& t) {
  double n = 0.0;
  for (const auto& m : t.blocks) n = std::max(n, sigma_max(m));
  return n;
}

namespace detail {

// Gelfand formula by repeated squaring with renormalization:
// r_m = ||M^(2^m)||^(1/2^m) tracked in log space. With the spectral norm the
// sequence is monotone from above.
inline double gelfand_spectral_radius(const Matrix& m0, double tol) {
  double n = sigma_max(m0);
  if (n == 0.0) return 0.0;
  Matrix c = m0;
  double acc = std::log(n);  // log r_0
  double r_prev = n;
  double inv_pow = 1.0;  // 1 / 2^m for the next step
  for (int step = 1; step <= 60; ++step) {
    c = (c / n).eval();
    c = (c * c).eval();
    n = sigma_max(c);
    if (n == 0.0) return 0.0;  // nilpotent
    inv_pow *= 0.5;
    acc += inv_pow * std::log(n);
    const double r = std::exp(acc);
    if (std::abs(r - r_prev) <= tol * (1.0 + r)) return r;
    r_prev = r;
  }
  return r_prev;
}

}  // namespace detail

/// Spectral radius max_j r(M_j) via the Gelfand limit; converges from above.
inline double spectral_radius(const ModuleOperator& t, double tol = 1e-9) {
  if (!(tol > 0.0)) throw std::invalid_argument("spectral_radius: tol must be positive");
  double r = 0.0;
  for (const auto& m : t.blocks) {
    require_finite(m, "spectral_radius");
    r = std::max(r, detail::gelfand_spectral_radius(m, tol));
  }
  return r;
}

inline bool is_self_adjoint(const ModuleOperator& t, double tol = 1e-8) {
  double dev = 0.0;
  for (const auto& m : t.blocks) dev = std::max(dev, sigma_max(Matrix(m - m.adjoint())));
  return dev <= tol;
}

inline bool is_normal(const ModuleOperator& t, double tol = 1e-8) {
  const double n = op_norm(t);
  double dev = 0.0;
  for (const auto& m : t.blocks) {
    dev = std::max(dev, sigma_max(Matrix(m.adjoint() * m - m * m.adjoint())));
  }
  return dev <= tol * n * n;
}

inline bool is_nilpotent2(const ModuleOperator& t, double tol = 1e-8) {
  const double n = op_norm(t);
  double dev = 0.0;
  for (const auto& m : t.blocks) dev = std::max(dev, sigma_max(Matrix(m * m)));
  return dev <= tol * n * n;
}

/// Block-diagonal repetition of every block: realizes the amplified
/// representation on A^(k*copies). Preserves norm, spectral radius and the
/// spatial numerical radius.
inline ModuleOperator amplify(const ModuleOperator& t, int copies) {
  if (copies < 1) throw std::invalid_argument("amplify: copies must be >= 1");
  if (copies == 1) return t;
  std::vector<Matrix> blocks;
  blocks.reserve(t.blocks.size());
  for (const auto& m : t.blocks) {
    const Eigen::Index d = m.rows();
    Matrix big = Matrix::Zero(d * copies, d * copies);
    for (int c = 0; c < copies; ++c) big.block(c * d, c * d, d, d) = m;
    blocks.push_back(std::move(big));
  }
  return {t.sig, t.k * copies, std::move(blocks)};
}

}  // namespace numrad

#endif  // NUMRAD_OPERATOR_HPP
