// Copyright (c) the numrad authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0
//
// The standard Hilbert module over the algebra: H = A^k. A frame stores the
// flattened (k*n_j) x n_j matrix per block, so the algebra-valued inner
// product is a single matrix product per block and all module suprema
// decompose as a max over blocks.

#ifndef NUMRAD_MODULE_HPP
#define NUMRAD_MODULE_HPP

#include "numrad/algebra.hpp"

namespace numrad {

struct Frame {
  AlgebraSignature sig;
  int k = 0;
  std::vector<Matrix> blocks;  // (k*n_j) x n_j per block

  Frame() = default;
  Frame(AlgebraSignature s, int k_, std::vector<Matrix> b)
      : sig(std::move(s)), k(k_), blocks(std::move(b)) {
    sig.validate();
    if (k < 1) throw ShapeError("frame: k must be >= 1");
    if (static_cast<int>(blocks.size()) != sig.num_blocks()) {
      throw ShapeError("frame: block count does not match signature");
    }
    for (int j = 0; j < sig.num_blocks(); ++j) {
      const auto& m = blocks[static_cast<std::size_t>(j)];
      if (m.rows() != static_cast<Eigen::Index>(k) * sig.dim(j) || m.cols() != sig.dim(j)) {
        throw ShapeError("frame: block shape does not match signature and k");
      }
      require_finite(m, "frame");
    }
  }
};

inline void require_same_shape(const Frame& x, const Frame& y, const char* what) {
  if (x.sig != y.sig || x.k != y.k) throw ShapeError(std::string(what) + ": frame shape mismatch");
}

/// <x, y>_j = X_j* Y_j. Conjugate-linear in x, linear in y.
inline AlgebraElement inner_product(const Frame& x, const Frame& y) {
  require_same_shape(x, y, "inner_product");
  std::vector<Matrix> blocks;
  blocks.reserve(x.blocks.size());
  for (std::size_t j = 0; j < x.blocks.size(); ++j) {
    blocks.push_back(x.blocks[j].adjoint() * y.blocks[j]);
  }
  return {x.sig, std::move(blocks)};
}

/// ||x|| = sqrt(||<x,x>||) = max_j sigma_max(X_j).
inline double vec_norm(const Frame& x) {
  double n = 0.0;
  for (const auto& m : x.blocks) n = std::max(n, sigma_max(m));
  return n;
}

inline Frame frame_scale(const Frame& x, cplx c) {
  std::vector<Matrix> blocks;
  blocks.reserve(x.blocks.size());
  for (const auto& m : x.blocks) blocks.push_back(c * m);
  return {x.sig, x.k, std::move(blocks)};
}

inline Frame frame_add(const Frame& x, const Frame& y) {
  require_same_shape(x, y, "frame_add");
  std::vector<Matrix> blocks;
  blocks.reserve(x.blocks.size());
  for (std::size_t j = 0; j < x.blocks.size(); ++j) blocks.push_back(x.blocks[j] + y.blocks[j]);
  return {x.sig, x.k, std::move(blocks)};
}

/// Right module action x . s, blockwise X_j s_j.
inline Frame frame_mul(const Frame& x, const AlgebraElement& s) {
  require_same_signature(x.sig, s.sig, "frame_mul");
  std::vector<Matrix> blocks;
  blocks.reserve(x.blocks.size());
  for (std::size_t j = 0; j < x.blocks.size(); ++j) blocks.push_back(x.blocks[j] * s.blocks[j]);
  return {x.sig, x.k, std::move(blocks)};
}

inline Frame normalize(const Frame& x) {
  const double n = vec_norm(x);
  if (n < 1e-150) throw DegenerateInputError("normalize: zero frame");
  return frame_scale(x, 1.0 / n);
}

/// Canonical unit frame: identity in the first module slot, zero elsewhere.
inline Frame identity_frame(const AlgebraSignature& sig, int k) {
  if (k < 1) throw ShapeError("identity_frame: k must be >= 1");
  std::vector<Matrix> blocks;
  blocks.reserve(static_cast<std::size_t>(sig.num_blocks()));
  for (int j = 0; j < sig.num_blocks(); ++j) {
    const int n = sig.dim(j);
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(k) * n, n);
    m.topRows(n) = Matrix::Identity(n, n);
    blocks.push_back(std::move(m));
  }
  return {sig, k, std::move(blocks)};
}

inline Frame random_frame_raw(const AlgebraSignature& sig, int k, Rng& rng) {
  if (k < 1) throw ShapeError("random_frame: k must be >= 1");
  std::vector<Matrix> blocks;
  blocks.reserve(static_cast<std::size_t>(sig.num_blocks()));
  for (int j = 0; j < sig.num_blocks(); ++j) {
    Matrix m(static_cast<Eigen::Index>(k) * sig.dim(j), sig.dim(j));
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = rng.cnormal();
    blocks.push_back(std::move(m));
  }
  return {sig, k, std::move(blocks)};
}

/// Deterministic unit-norm Gaussian frame.
inline Frame random_frame(const AlgebraSignature& sig, int k, std::uint64_t seed) {
  Rng rng(seed);
  return normalize(random_frame_raw(sig, k, rng));
}

}  // namespace numrad

#endif  // NUMRAD_MODULE_HPP
