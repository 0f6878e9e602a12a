// Copyright (c) the numrad authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0
//
// Finite-dimensional C*-algebra arithmetic. An algebra is a direct sum of
// full complex matrix blocks; elements, states and all derived quantities
// are stored and computed per block. Every value is immutable after
// construction and every operation is a pure function.

#ifndef NUMRAD_ALGEBRA_HPP
#define NUMRAD_ALGEBRA_HPP

#include "numrad/blocksweep.hpp"
#include "numrad/common.hpp"

#include <numeric>
#include <utility>
#include <vector>

namespace numrad {

/// Shape [n_1, ..., n_m] of the algebra: one full matrix block per entry.
struct AlgebraSignature {
  std::vector<int> block_dims;

  AlgebraSignature() = default;
  AlgebraSignature(std::initializer_list<int> dims) : block_dims(dims) { validate(); }
  explicit AlgebraSignature(std::vector<int> dims) : block_dims(std::move(dims)) { validate(); }

  void validate() const {
    if (block_dims.empty()) throw ShapeError("signature: needs at least one block");
    for (int d : block_dims) {
      if (d < 1) throw ShapeError("signature: block dimensions must be >= 1");
    }
  }

  int num_blocks() const { return static_cast<int>(block_dims.size()); }
  int dim(int j) const { return block_dims[static_cast<std::size_t>(j)]; }

  bool operator==(const AlgebraSignature& o) const { return block_dims == o.block_dims; }
  bool operator!=(const AlgebraSignature& o) const { return !(*this == o); }
};

/// One n_j x n_j complex matrix per block.
struct AlgebraElement {
  AlgebraSignature sig;
  std::vector<Matrix> blocks;

  AlgebraElement() = default;
  AlgebraElement(AlgebraSignature s, std::vector<Matrix> b)
      : sig(std::move(s)), blocks(std::move(b)) {
    sig.validate();
    if (static_cast<int>(blocks.size()) != sig.num_blocks()) {
      throw ShapeError("element: block count does not match signature");
    }
    for (int j = 0; j < sig.num_blocks(); ++j) {
      const auto& m = blocks[static_cast<std::size_t>(j)];
      if (m.rows() != sig.dim(j) || m.cols() != sig.dim(j)) {
        throw ShapeError("element: block shape does not match signature");
      }
      require_finite(m, "element");
    }
  }
};

/// State on the algebra: per-block PSD density D_j with total trace 1.
/// Evaluates a |-> sum_j tr(D_j a_j). Convex block weights are folded into
/// the densities, so the tuple itself is the canonical form.
struct State {
  AlgebraSignature sig;
  std::vector<Matrix> densities;

  State() = default;
  State(AlgebraSignature s, std::vector<Matrix> d)
      : sig(std::move(s)), densities(std::move(d)) {
    sig.validate();
    if (static_cast<int>(densities.size()) != sig.num_blocks()) {
      throw ShapeError("state: density count does not match signature");
    }
    for (int j = 0; j < sig.num_blocks(); ++j) {
      const auto& m = densities[static_cast<std::size_t>(j)];
      if (m.rows() != sig.dim(j) || m.cols() != sig.dim(j)) {
        throw ShapeError("state: density shape does not match signature");
      }
      require_finite(m, "state");
    }
  }

  double total_trace() const {
    double t = 0.0;
    for (const auto& d : densities) t += d.trace().real();
    return t;
  }
};

inline void require_same_signature(const AlgebraSignature& a, const AlgebraSignature& b,
                                   const char* what) {
  if (a != b) throw ShapeError(std::string(what) + ": signature mismatch");
}

inline AlgebraElement zero_element(const AlgebraSignature& sig) {
  std::vector<Matrix> blocks;
  blocks.reserve(static_cast<std::size_t>(sig.num_blocks()));
  for (int j = 0; j < sig.num_blocks(); ++j) blocks.push_back(Matrix::Zero(sig.dim(j), sig.dim(j)));
  return {sig, std::move(blocks)};
}

/// The unit of the algebra: identity in every block.
inline AlgebraElement identity(const AlgebraSignature& sig) {
  std::vector<Matrix> blocks;
  blocks.reserve(static_cast<std::size_t>(sig.num_blocks()));
  for (int j = 0; j < sig.num_blocks(); ++j) blocks.push_back(Matrix::Identity(sig.dim(j), sig.dim(j)));
  return {sig, std::move(blocks)};
}

inline AlgebraElement adjoint(const AlgebraElement& a) {
  std::vector<Matrix> blocks;
  blocks.reserve(a.blocks.size());
  for (const auto& m : a.blocks) blocks.push_back(m.adjoint());
  return {a.sig, std::move(blocks)};
}

inline AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_signature(a.sig, b.sig, "add");
  std::vector<Matrix> blocks;
  blocks.reserve(a.blocks.size());
  for (std::size_t j = 0; j < a.blocks.size(); ++j) blocks.push_back(a.blocks[j] + b.blocks[j]);
  return {a.sig, std::move(blocks)};
}

inline AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_signature(a.sig, b.sig, "multiply");
  std::vector<Matrix> blocks;
  blocks.reserve(a.blocks.size());
  for (std::size_t j = 0; j < a.blocks.size(); ++j) blocks.push_back(a.blocks[j] * b.blocks[j]);
  return {a.sig, std::move(blocks)};
}

inline AlgebraElement scale(const AlgebraElement& a, cplx c) {
  std::vector<Matrix> blocks;
  blocks.reserve(a.blocks.size());
  for (const auto& m : a.blocks) blocks.push_back(c * m);
  return {a.sig, std::move(blocks)};
}

/// (a + a*) / 2; always self-adjoint.
inline AlgebraElement real_part(const AlgebraElement& a) {
  std::vector<Matrix> blocks;
  blocks.reserve(a.blocks.size());
  for (const auto& m : a.blocks) blocks.push_back(0.5 * (m + m.adjoint()));
  return {a.sig, std::move(blocks)};
}

/// (a - a*) / (2i); always self-adjoint.
inline AlgebraElement imag_part(const AlgebraElement& a) {
  std::vector<Matrix> blocks;
  blocks.reserve(a.blocks.size());
  for (const auto& m : a.blocks) blocks.push_back((m - m.adjoint()) * cplx(0.0, -0.5));
  return {a.sig, std::move(blocks)};
}

/// C*-norm: max over blocks of the largest singular value.
inline double norm(const AlgebraElement& a) {
  double n = 0.0;
  for (const auto& m : a.blocks) n = std::max(n, sigma_max(m));
  return n;
}

/// rho(a) = sum_j tr(D_j a_j). Linear in a; state_eval(rho, a*) is the
/// conjugate.
inline cplx state_eval(const State& rho, const AlgebraElement& a) {
  require_same_signature(rho.sig, a.sig, "state_eval");
  cplx v = 0.0;
  for (std::size_t j = 0; j < a.blocks.size(); ++j) {
    v += (rho.densities[j] * a.blocks[j]).trace();
  }
  return v;
}

inline AlgebraElement random_element(const AlgebraSignature& sig, Rng& rng) {
  std::vector<Matrix> blocks;
  blocks.reserve(static_cast<std::size_t>(sig.num_blocks()));
  for (int j = 0; j < sig.num_blocks(); ++j) {
    Matrix m(sig.dim(j), sig.dim(j));
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = rng.cnormal();
    blocks.push_back(std::move(m));
  }
  return {sig, std::move(blocks)};
}

/// Gaussian construction: D_j proportional to G_j G_j*, normalized to unit
/// block trace, then mixed with random convex weights so the total trace is
/// exactly 1. Deterministic for a fixed seed.
inline State random_state(const AlgebraSignature& sig, std::uint64_t seed) {
  Rng rng(seed);
  const int m = sig.num_blocks();
  std::vector<double> weights(static_cast<std::size_t>(m));
  double wsum = 0.0;
  for (auto& w : weights) {
    w = -std::log(1.0 - rng.uniform());  // Exp(1) draws give Dirichlet weights
    wsum += w;
  }
  std::vector<Matrix> densities;
  densities.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    Matrix g(sig.dim(j), sig.dim(j));
    for (Eigen::Index r = 0; r < g.rows(); ++r)
      for (Eigen::Index c = 0; c < g.cols(); ++c) g(r, c) = rng.cnormal();
    Matrix d = g * g.adjoint();
    d *= weights[static_cast<std::size_t>(j)] / (wsum * d.trace().real());
    densities.push_back(std::move(d));
  }
  return {sig, std::move(densities)};
}

/// sup over all states of |rho(a)|. States of a block direct sum induce
/// exactly the convex hull of the blocks' numerical ranges, so the sup is
/// the largest per-block classical numerical radius, computed here by the
/// certified sweep.
inline double state_sup(const AlgebraElement& a, double tol = 1e-10) {
  double best = 0.0;
  for (const auto& m : a.blocks) {
    best = std::max(best, certified_support_max(m, tol).value);
  }
  return best;
}

}  // namespace numrad

#endif  // NUMRAD_ALGEBRA_HPP
