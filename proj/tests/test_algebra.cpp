// Copyright (c) the numrad authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "test_helpers.hpp"

using namespace numrad;
using testutil::oblique_idempotent_element;
using testutil::shift_element;

TEST_CASE("signature validation", "[algebra]") {
  CHECK_NOTHROW(AlgebraSignature{2});
  CHECK_NOTHROW((AlgebraSignature{2, 3}));
  CHECK_THROWS_AS(AlgebraSignature(std::vector<int>{}), ShapeError);
  CHECK_THROWS_AS((AlgebraSignature{2, 0}), ShapeError);
  CHECK_THROWS_AS((AlgebraSignature{-1}), ShapeError);
}

TEST_CASE("identity element", "[algebra]") {
  const auto e2 = identity(AlgebraSignature{2});
  CHECK(e2.blocks[0].isApprox(Matrix::Identity(2, 2)));
  CHECK(norm(e2) == Catch::Approx(1.0));

  const auto e23 = identity(AlgebraSignature{2, 3});
  CHECK(e23.blocks.size() == 2);
  CHECK(norm(e23) == Catch::Approx(1.0));

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto a = testutil::random_element({2, 3}, seed);
    const auto e = identity(a.sig);
    CHECK(norm(add(multiply(e, a), scale(a, -1.0))) < 1e-14);
    CHECK(norm(add(multiply(a, e), scale(a, -1.0))) < 1e-14);
  }
}

TEST_CASE("adjoint", "[algebra]") {
  const auto a = oblique_idempotent_element();
  const auto astar = adjoint(a);
  Matrix expected(2, 2);
  expected << 1, 1, 0, 0;
  CHECK(astar.blocks[0].isApprox(expected));

  // involution and Hermitian fixed point
  CHECK(norm(add(adjoint(astar), scale(a, -1.0))) < 1e-15);
  const auto h = real_part(testutil::random_element({3}, 5));
  CHECK(norm(add(adjoint(h), scale(h, -1.0))) < 1e-15);

  // ||a*|| = ||a||, oracle: direct singular values of each block
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto x = testutil::random_element({2, 3}, seed);
    double direct = 0.0, direct_adj = 0.0;
    for (const auto& m : x.blocks) {
      direct = std::max(direct, Eigen::JacobiSVD<Matrix>(m).singularValues()(0));
      direct_adj = std::max(direct_adj,
                            Eigen::JacobiSVD<Matrix>(Matrix(m.adjoint())).singularValues()(0));
    }
    CHECK(norm(x) == Catch::Approx(direct).margin(1e-12));
    CHECK(norm(adjoint(x)) == Catch::Approx(direct_adj).margin(1e-12));
    CHECK(std::abs(norm(adjoint(x)) - norm(x)) < 1e-12);
  }
}

TEST_CASE("real and imaginary parts", "[algebra]") {
  const auto a = oblique_idempotent_element();
  Matrix expected(2, 2);
  expected << 1.0, 0.5, 0.5, 0.0;
  CHECK(real_part(a).blocks[0].isApprox(expected));

  const auto h = real_part(testutil::random_element({2, 3}, 11));
  CHECK(norm(add(real_part(h), scale(h, -1.0))) < 1e-15);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto x = testutil::random_element({2, 3}, seed);
    const auto lhs = real_part(scale(x, cplx(0.0, 1.0)));
    const auto rhs = scale(imag_part(x), -1.0);
    CHECK(norm(add(lhs, scale(rhs, -1.0))) < 1e-14);
    // a = Re(a) + i Im(a)
    const auto recon = add(real_part(x), scale(imag_part(x), cplx(0.0, 1.0)));
    CHECK(norm(add(recon, scale(x, -1.0))) < 1e-14);
  }
}

TEST_CASE("norm values and C*-identity", "[algebra]") {
  CHECK(norm(oblique_idempotent_element()) == Catch::Approx(std::sqrt(2.0)).margin(1e-12));
  CHECK(norm(shift_element()) == Catch::Approx(1.0).margin(1e-12));

  Matrix e1m(2, 2);
  e1m << 1, 0, 0, 0;
  CHECK(norm(AlgebraElement{AlgebraSignature{2}, {e1m}}) == Catch::Approx(1.0));

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    for (const AlgebraSignature& sig : {AlgebraSignature{2}, AlgebraSignature{3},
                                        AlgebraSignature{2, 3}}) {
      const auto a = testutil::random_element(sig, Rng::derive(seed, sig.num_blocks()));
      const double n = norm(a);
      CHECK(std::abs(norm(multiply(adjoint(a), a)) - n * n) <= 1e-10 * (1.0 + n * n));
      const auto b = testutil::random_element(sig, Rng::derive(seed, 77));
      CHECK(norm(multiply(a, b)) <= norm(a) * norm(b) + 1e-10);
    }
  }
}

TEST_CASE("state evaluation", "[algebra]") {
  const AlgebraSignature sig{2};
  const State half{sig, {0.5 * Matrix::Identity(2, 2)}};
  CHECK(std::abs(state_eval(half, identity(sig)) - cplx(1.0)) < 1e-15);

  Matrix d(2, 2);
  d << 1, 0, 0, 0;
  const State pure{sig, {d}};
  CHECK(std::abs(state_eval(pure, oblique_idempotent_element()) - cplx(1.0)) < 1e-15);

  // linearity, conjugation under adjoint, and |rho(a)| <= ||a||
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const AlgebraSignature s{2, 3};
    const State rho = random_state(s, seed);
    const auto a = testutil::random_element(s, Rng::derive(seed, 1));
    const auto b = testutil::random_element(s, Rng::derive(seed, 2));
    const cplx va = state_eval(rho, a);
    const cplx vb = state_eval(rho, b);
    CHECK(std::abs(state_eval(rho, add(a, b)) - (va + vb)) < 1e-12);
    CHECK(std::abs(state_eval(rho, adjoint(a)) - std::conj(va)) < 1e-12);
    CHECK(std::abs(va) <= norm(a) + 1e-12);
  }

  const State mismatched = random_state(AlgebraSignature{2}, 3);
  CHECK_THROWS_AS(state_eval(mismatched, testutil::random_element({3}, 1)), ShapeError);
}

TEST_CASE("random states are valid and deterministic", "[algebra]") {
  for (const AlgebraSignature& sig : {AlgebraSignature{2}, AlgebraSignature{3},
                                      AlgebraSignature{2, 3}}) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const State rho = random_state(sig, seed);
      CHECK(std::abs(rho.total_trace() - 1.0) <= 1e-12);
      for (const auto& dm : rho.densities) {
        CHECK(sigma_max(Matrix(dm - dm.adjoint())) < 1e-14);
        Eigen::SelfAdjointEigenSolver<Matrix> es(dm, Eigen::EigenvaluesOnly);
        CHECK(es.eigenvalues()(0) >= -1e-14);
      }
    }
    const State r1 = random_state(sig, 42);
    const State r2 = random_state(sig, 42);
    for (std::size_t j = 0; j < r1.densities.size(); ++j) {
      CHECK(r1.densities[j] == r2.densities[j]);
    }
  }
}

TEST_CASE("state_sup values", "[algebra]") {
  const auto a = oblique_idempotent_element();
  const double ss = state_sup(a);

  // closed form: max over theta of (cos t + sqrt(1 + cos^2 t)) / 2, frozen
  double oracle = 0.0;
  for (int i = 0; i < 2000000; ++i) {
    const double t = kTwoPi * i / 2000000;
    oracle = std::max(oracle, 0.5 * (std::cos(t) + std::sqrt(1.0 + std::cos(t) * std::cos(t))));
  }
  CHECK(oracle == Catch::Approx(1.2071067811865475).margin(1e-10));
  CHECK(ss == Catch::Approx(1.2071067811865475).margin(1e-9));
  CHECK(ss <= 1.25 + 1e-9);
  CHECK(1.25 < std::sqrt(2.0));
  CHECK(ss < norm(a) - 1e-3);

  CHECK(state_sup(identity(AlgebraSignature{2})) == Catch::Approx(1.0).margin(1e-9));

  // self-adjoint elements attain the norm
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto h = real_part(testutil::random_element({2, 3}, seed));
    CHECK(std::abs(state_sup(h) - norm(h)) <= 1e-9 * (1.0 + norm(h)));
  }
  // never exceeds the norm
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto x = testutil::random_element({2, 3}, Rng::derive(seed, 9));
    CHECK(state_sup(x, 1e-9) <= norm(x) + 1e-9);
  }
}

TEST_CASE("sampled states stay below state_sup", "[algebra]") {
  const auto a = oblique_idempotent_element();
  const double cap = state_sup(a) + 1e-9;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    CHECK(std::abs(state_eval(random_state(a.sig, seed), a)) <= cap);
  }
}
