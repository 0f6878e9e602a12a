// Copyright (c) the numrad authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0
//
// Radius computations. Two independent certified routes exist for the
// spatial numerical radius (whole-operator angle sweep vs. per-block
// classical radius of the representation), a multistart projected ascent
// produces lower bounds for the module numerical radius, and Monte-Carlo
// samplers bound both definitions from below.

#ifndef NUMRAD_RADIUS_HPP
#define NUMRAD_RADIUS_HPP

#include "numrad/blocksweep.hpp"
#include "numrad/operator.hpp"

#include <optional>
#include <sstream>
#include <variant>

namespace numrad {

enum class RadiusMethod {
  ClassicalSweep,
  SnrSweep,
  SnrRep,
  ModuleOpt,
  FastPathNormal,
  FastPathK1,
  SampledLb,
};

inline const char* to_string(RadiusMethod m) {
  switch (m) {
    case RadiusMethod::ClassicalSweep: return "classical-sweep";
    case RadiusMethod::SnrSweep: return "snr-sweep";
    case RadiusMethod::SnrRep: return "snr-rep";
    case RadiusMethod::ModuleOpt: return "module-opt";
    case RadiusMethod::FastPathNormal: return "fast-path-normal";
    case RadiusMethod::FastPathK1: return "fast-path-k1";
    case RadiusMethod::SampledLb: return "sampled-lb";
  }
  return "unknown";
}

enum class Exactness { CertifiedWithinTol, LowerBoundOnly };

inline const char* to_string(Exactness e) {
  return e == Exactness::CertifiedWithinTol ? "certified-within-tol" : "lower-bound-only";
}

struct StateFrameWitness {
  State state;
  Frame frame;
};

using Witness = std::variant<double, Frame, StateFrameWitness>;

struct RadiusResult {
  double value = 0.0;
  RadiusMethod method = RadiusMethod::ClassicalSweep;
  std::optional<Witness> witness;
  Exactness exactness = Exactness::CertifiedWithinTol;
  double tol = 0.0;
};

/// Support value of the whole operator at angle theta:
/// max_j lambda_max(Re(e^{i theta} M_j)). Evaluating it at a theta witness
/// reproduces the certified sweep/rep values.
inline double snr_objective(const ModuleOperator& t, double theta) {
  double v = -std::numeric_limits<double>::infinity();
  for (const auto& m : t.blocks) {
    v = std::max(v, detail::rotated_top_eig(detail::rotation_parts(m), theta));
  }
  return v;
}

/// lambda_max(Re(e^{i theta} M)) for a bare matrix (classical witness check).
inline double classical_witness_value(const Matrix& m, double theta) {
  return detail::rotated_top_eig(detail::rotation_parts(m), theta);
}

/// Classical numerical radius of a complex matrix by the certified angle
/// sweep. The theta -> theta + pi symmetry folds |lambda_min| into
/// lambda_max, so only the largest eigenvalue is tracked. Guarantees
/// |value - w(M)| <= tol.
inline RadiusResult classical_nr(const Matrix& m, double tol = 1e-8,
                                 double grid_resolution = 0.0) {
  if (m.rows() == 0 || m.cols() == 0) throw std::invalid_argument("classical_nr: empty matrix");
  const auto res = certified_support_max(m, tol, grid_resolution);
  return {res.value, RadiusMethod::ClassicalSweep, Witness(res.theta),
          Exactness::CertifiedWithinTol, tol};
}

/// Spatial numerical radius as the global angle sweep
/// sup_theta max_j lambda_max(Re(e^{i theta} M_j)); certified within tol.
inline RadiusResult snr_sweep(const ModuleOperator& t, double tol = 1e-8,
                              double grid_resolution = 0.0) {
  const auto res = certified_support_max(t.blocks, tol, grid_resolution);
  return {res.value, RadiusMethod::SnrSweep, Witness(res.theta),
          Exactness::CertifiedWithinTol, tol};
}

/// Spatial numerical radius through the faithful representation: the largest
/// per-block classical numerical radius; certified within tol.
inline RadiusResult snr_rep(const ModuleOperator& t, double tol = 1e-8) {
  double best = 0.0;
  double best_theta = 0.0;
  for (const auto& m : t.blocks) {
    const auto r = classical_nr(m, tol);
    if (r.value > best) {
      best = r.value;
      best_theta = std::get<double>(*r.witness);
    }
  }
  return {best, RadiusMethod::SnrRep, Witness(best_theta),
          Exactness::CertifiedWithinTol, tol};
}

/// Runs both spatial-radius routes and cross-checks them; disagreement
/// beyond 10*tol means a numerical or logic bug and throws. Returns the
/// per-block route's value.
inline RadiusResult snr(const ModuleOperator& t, double tol = 1e-8) {
  const auto sweep = snr_sweep(t, tol);
  const auto rep = snr_rep(t, tol);
  if (std::abs(sweep.value - rep.value) > 10.0 * tol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "snr: route disagreement, sweep=" << sweep.value << " rep=" << rep.value
        << " tol=" << tol;
    throw CrossCheckError(msg.str());
  }
  return rep;
}

struct ModuleNrConfig {
  int restarts = 64;
  int max_iters = 200;
  double step0 = 0.5;  // backtracking halves from here
  std::uint64_t seed = 42;
  double tol = 1e-8;
};

namespace detail {

// Clip singular values at 1 (projection onto the contraction set), computed
// from the small-side Gram factor: clip(Y) = Y V diag(min(s,1)/s) V*.
inline Matrix clip_contraction(const Matrix& y) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(Matrix(y.adjoint() * y));
  const auto& ev = es.eigenvalues();
  if (ev(ev.size() - 1) <= 1.0) return y;
  Eigen::VectorXd f(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    const double s = std::sqrt(std::max(ev(i), 0.0));
    f(i) = s > 1.0 ? 1.0 / s : 1.0;
  }
  return y * (es.eigenvectors() * f.asDiagonal() * es.eigenvectors().adjoint());
}

// Objective of the module-radius ascent on one block: F(X) = sigma_max(X* M X).
inline double ascent_objective(const Matrix& m, const Matrix& x) {
  return sigma_max(Matrix(x.adjoint() * m * x));
}

struct AscentOutcome {
  double value = 0.0;
  Matrix x;
};

// Projected gradient ascent from one seed. At each iterate the gradient of
// X -> Re(u* X* M X v) for the current top singular pair (u, v) is
// M X v u* + M* X u v*; steps backtrack by halving and the iterate is
// projected back onto the contraction set.
inline AscentOutcome ascend_block(const Matrix& m, Matrix x, int max_iters, double step0) {
  double f = ascent_objective(m, x);
  for (int it = 0; it < max_iters; ++it) {
    const Matrix a = x.adjoint() * m * x;
    Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::VectorXcd u = svd.matrixU().col(0);
    const Eigen::VectorXcd v = svd.matrixV().col(0);
    const Matrix grad = m * (x * v) * u.adjoint() + m.adjoint() * (x * u) * v.adjoint();
    double step = step0;
    bool accepted = false;
    double improvement = 0.0;
    for (int halvings = 0; halvings < 24; ++halvings) {
      const Matrix cand = clip_contraction(Matrix(x + step * grad));
      const double fc = ascent_objective(m, cand);
      if (fc > f) {
        improvement = fc - f;
        x = cand;
        f = fc;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
    if (improvement <= 1e-10 * std::max(1.0, f)) break;
  }
  return {f, std::move(x)};
}

}  // namespace detail

/// Module numerical radius estimate: per block, multistart projected ascent
/// of sigma_max(X* M X) over contractions, fused with the spatial radius
/// (a valid lower bound of w since wtilde <= w). Fast paths certify the
/// normal case (value ||T||) and k = 1 (value ||T|| with the identity-frame
/// witness); otherwise the result is a lower bound, never a certificate.
inline RadiusResult module_nr(const ModuleOperator& t, const ModuleNrConfig& cfg = {},
                              const std::optional<RadiusResult>& known_snr = std::nullopt) {
  const double norm0 = op_norm(t);
  if (norm0 == 0.0) {
    return {0.0, RadiusMethod::FastPathNormal, Witness(identity_frame(t.sig, t.k)),
            Exactness::CertifiedWithinTol, cfg.tol};
  }

  if (is_normal(t, 1e-10)) {
    // Top eigenvector of the block attaining the norm; for a normal block
    // |lambda| = sigma_max, so the frame value reproduces ||T||.
    int jbest = 0;
    double sbest = -1.0;
    for (int j = 0; j < static_cast<int>(t.blocks.size()); ++j) {
      const double s = sigma_max(t.blocks[static_cast<std::size_t>(j)]);
      if (s > sbest) {
        sbest = s;
        jbest = j;
      }
    }
    const Matrix& m = t.blocks[static_cast<std::size_t>(jbest)];
    Eigen::ComplexEigenSolver<Matrix> es(m);
    Eigen::Index imax = 0;
    es.eigenvalues().cwiseAbs().maxCoeff(&imax);
    Eigen::VectorXcd v = es.eigenvectors().col(imax);
    v /= v.norm();
    Frame witness = identity_frame(t.sig, t.k);
    for (auto& b : witness.blocks) b.setZero();
    witness.blocks[static_cast<std::size_t>(jbest)].col(0) = v;
    return {norm0, RadiusMethod::FastPathNormal, Witness(std::move(witness)),
            Exactness::CertifiedWithinTol, cfg.tol};
  }

  if (t.k == 1) {
    return {norm0, RadiusMethod::FastPathK1, Witness(identity_frame(t.sig, t.k)),
            Exactness::CertifiedWithinTol, cfg.tol};
  }

  const RadiusResult snr_result = known_snr ? *known_snr : snr(t, cfg.tol);

  double ascent_best = -1.0;
  int ascent_block_idx = 0;
  Matrix ascent_x;
  for (int j = 0; j < static_cast<int>(t.blocks.size()); ++j) {
    const Matrix& m = t.blocks[static_cast<std::size_t>(j)];
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = t.sig.dim(j);
    for (int r = 0; r <= cfg.restarts; ++r) {
      Matrix seed_x;
      if (r == 0) {
        seed_x = Matrix::Zero(rows, cols);
        seed_x.topRows(cols) = Matrix::Identity(cols, cols);
      } else {
        Rng rng = Rng::stream(cfg.seed, (static_cast<std::uint64_t>(j) << 32) ^
                                            static_cast<std::uint64_t>(r));
        seed_x.resize(rows, cols);
        for (Eigen::Index rr = 0; rr < rows; ++rr)
          for (Eigen::Index cc = 0; cc < cols; ++cc) seed_x(rr, cc) = rng.cnormal();
        seed_x /= sigma_max(seed_x);
      }
      auto outcome = detail::ascend_block(m, std::move(seed_x), cfg.max_iters, cfg.step0);
      if (outcome.value > ascent_best) {
        ascent_best = outcome.value;
        ascent_block_idx = j;
        ascent_x = std::move(outcome.x);
      }
    }
  }

  if (ascent_best > snr_result.value) {
    Frame witness = identity_frame(t.sig, t.k);
    for (auto& b : witness.blocks) b.setZero();
    witness.blocks[static_cast<std::size_t>(ascent_block_idx)] = ascent_x;
    return {ascent_best, RadiusMethod::ModuleOpt, Witness(std::move(witness)),
            Exactness::LowerBoundOnly, cfg.tol};
  }
  return {snr_result.value, RadiusMethod::ModuleOpt, snr_result.witness,
          Exactness::LowerBoundOnly, cfg.tol};
}

/// Monte-Carlo lower bound for w: max of ||<Tx, x>|| over random unit frames.
inline RadiusResult nr_sampled_lb(const ModuleOperator& t, int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("nr_sampled_lb: samples must be >= 1");
  double best = -1.0;
  Frame best_frame;
  for (int i = 0; i < samples; ++i) {
    Frame x = random_frame(t.sig, t.k, Rng::derive(seed, static_cast<std::uint64_t>(i)));
    const double v = norm(inner_product(apply(t, x), x));
    if (v > best) {
      best = v;
      best_frame = std::move(x);
    }
  }
  return {best, RadiusMethod::SampledLb, Witness(std::move(best_frame)),
          Exactness::LowerBoundOnly, 0.0};
}

/// Monte-Carlo lower bound for wtilde: draw (x, rho), reject when
/// rho<x,x> <= 1e-12, rescale x so that rho<x,x> = 1, record |rho<x,Tx>|.
inline RadiusResult snr_sampled_lb(const ModuleOperator& t, int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("snr_sampled_lb: samples must be >= 1");
  double best = -1.0;
  std::optional<StateFrameWitness> best_witness;
  for (int i = 0; i < samples; ++i) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(i));
    Frame x = random_frame_raw(t.sig, t.k, rng);
    const State rho = random_state(t.sig, rng.raw());
    const double s = state_eval(rho, inner_product(x, x)).real();
    if (s <= 1e-12) continue;
    x = frame_scale(x, 1.0 / std::sqrt(s));
    const double v = std::abs(state_eval(rho, inner_product(x, apply(t, x))));
    if (v > best) {
      best = v;
      best_witness = StateFrameWitness{rho, std::move(x)};
    }
  }
  if (!best_witness) {
    return {0.0, RadiusMethod::SampledLb, std::nullopt, Exactness::LowerBoundOnly, 0.0};
  }
  return {best, RadiusMethod::SampledLb, Witness(std::move(*best_witness)),
          Exactness::LowerBoundOnly, 0.0};
}

/// A-posteriori witness evaluation: recomputes the radius value implied by
/// the stored witness under the matching definition.
inline double witness_value(const ModuleOperator& t, const RadiusResult& r) {
  if (!r.witness) throw std::invalid_argument("witness_value: result has no witness");
  if (std::holds_alternative<double>(*r.witness)) {
    return snr_objective(t, std::get<double>(*r.witness));
  }
  if (std::holds_alternative<Frame>(*r.witness)) {
    const Frame& x = std::get<Frame>(*r.witness);
    return norm(inner_product(apply(t, x), x));
  }
  const auto& sf = std::get<StateFrameWitness>(*r.witness);
  return std::abs(state_eval(sf.state, inner_product(sf.frame, apply(t, sf.frame))));
}

}  // namespace numrad

#endif  // NUMRAD_RADIUS_HPP
