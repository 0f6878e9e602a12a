// Copyright (c) the numrad authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "test_helpers.hpp"

using namespace numrad;

TEST_CASE("f_merge", "[bounds]") {
  // a = 0 collapses to the max
  Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    const double x = 10.0 * rng.uniform();
    const double y = 10.0 * rng.uniform();
    CHECK(f_merge(x, y, 0.0) == Catch::Approx(std::max(x, y)).margin(1e-12));
  }
  CHECK(f_merge(1.0, 2.0, 0.0) == Catch::Approx(2.0).margin(1e-15));

  // equal arguments
  CHECK(f_merge(3.0, 3.0, 4.0) == Catch::Approx(5.0).margin(1e-14));

  // frozen value (3 + sqrt 5) / 2
  CHECK(f_merge(1.0, 2.0, 1.0) == Catch::Approx(2.618033988749895).margin(1e-13));
  CHECK(f_merge(1.0, 2.0, 1.0) == Catch::Approx(0.5 * (3.0 + std::sqrt(5.0))).margin(1e-15));

  // symmetry
  CHECK(f_merge(0.3, 1.7, 0.9) == f_merge(1.7, 0.3, 0.9));

  CHECK_THROWS_AS(f_merge(-1.0, 0.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(f_merge(0.0, -1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(f_merge(0.0, 0.0, -1.0), std::domain_error);
}

TEST_CASE("f monotonicity", "[bounds]") {
  // (0,0) <= anything
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const double a = 10.0 * rng.uniform();
    const double x = 10.0 * rng.uniform();
    const double y = 10.0 * rng.uniform();
    CHECK(f_merge(0.0, 0.0, a) <= f_merge(x, y, a) + 1e-12);
    CHECK(f_merge(0.0, 0.0, a) == Catch::Approx(std::sqrt(a)).margin(1e-13));
    // equal pairs give zero slack
    CHECK(f_merge(x, y, a) - f_merge(x, y, a) == 0.0);
  }

  const auto report = f_monotone_check(10000, 99);
  CHECK(report.holds);
  CHECK(report.components.at("violations") == 0.0);
  CHECK(report.slack >= -report.tol);
  CHECK((report.holds == (report.slack >= -report.tol)));
  CHECK_THROWS_AS(f_monotone_check(0, 1), std::invalid_argument);
}

TEST_CASE("kittaneh bounds on the square-zero shift", "[bounds]") {
  Matrix shift(2, 2);
  shift << 0, 1, 0, 0;
  const ModuleOperator t{AlgebraSignature{2}, 1, {shift}};
  const auto rep = kittaneh_check(t, 1e-7);
  CHECK(rep.holds);
  // S = T*T + TT* = I, so the lower bound 1/4 is attained
  CHECK(rep.components.at("norm_s") == Catch::Approx(1.0).margin(1e-14));
  CHECK(rep.components.at("snr_sq") == Catch::Approx(0.25).margin(1e-8));
  CHECK(std::abs(rep.components.at("slack_lower")) <= 1e-7);
  CHECK(rep.components.at("slack_upper") == Catch::Approx(0.25).margin(1e-7));
}

TEST_CASE("kittaneh upper bound tight for self-adjoint", "[bounds]") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto h = gen_operator({2, 3}, 2, OperatorKind::SelfAdjoint, seed);
    const auto rep = kittaneh_check(h, 1e-7);
    CHECK(rep.holds);
    CHECK(std::abs(rep.components.at("slack_upper")) <= 1e-7);
  }
}

TEST_CASE("kittaneh holds on random families", "[bounds]") {
  int idx = 0;
  for (OperatorKind kind : {OperatorKind::Generic, OperatorKind::SelfAdjoint,
                            OperatorKind::Normal, OperatorKind::Nilpotent2}) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto t = gen_operator({2, 3}, 2, kind, Rng::derive(seed, 400 + idx));
      const auto rep = kittaneh_check(t, 1e-7);
      CHECK(rep.holds);
      CHECK((rep.holds == (rep.slack >= -rep.tol)));
    }
    ++idx;
  }
}

TEST_CASE("mixed spectral radius bound", "[bounds]") {
  const AlgebraSignature sig{2};
  const int k = 2;

  // A2 = B2 = 0 collapses to r(A1 B1) <= wtilde(B1 A1)
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto a1 = gen_operator(sig, k, OperatorKind::Generic, Rng::derive(seed, 1));
    const auto b1 = gen_operator(sig, k, OperatorKind::Generic, Rng::derive(seed, 2));
    const auto z = zero_operator(sig, k);
    const auto rep = mixed_radius_bound_check(a1, b1, z, z, 1e-7);
    CHECK(rep.holds);
    CHECK(rep.rhs == Catch::Approx(rep.components.at("snr_b1a1")).margin(1e-10));
    CHECK(rep.lhs <= rep.components.at("snr_b1a1") + 1e-7);
  }

  // all four zero
  const auto z = zero_operator(sig, k);
  const auto zero_rep = mixed_radius_bound_check(z, z, z, z, 1e-7);
  CHECK(zero_rep.holds);
  CHECK(zero_rep.lhs == 0.0);
  CHECK(zero_rep.rhs == 0.0);

  // random quadruples
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto a1 = gen_operator(sig, k, OperatorKind::Generic, Rng::derive(seed, 11));
    const auto b1 = gen_operator(sig, k, OperatorKind::Generic, Rng::derive(seed, 12));
    const auto a2 = gen_operator(sig, k, OperatorKind::Generic, Rng::derive(seed, 13));
    const auto b2 = gen_operator(sig, k, OperatorKind::Generic, Rng::derive(seed, 14));
    const auto rep = mixed_radius_bound_check(a1, b1, a2, b2, 1e-7);
    CHECK(rep.holds);
    CHECK(rep.components.at("west_dominates") >= -1e-12);
  }

  CHECK_THROWS_AS(
      mixed_radius_bound_check(gen_operator(sig, 2, OperatorKind::Generic, 1),
                               gen_operator(sig, 3, OperatorKind::Generic, 2),
                               gen_operator(sig, 2, OperatorKind::Generic, 3),
                               gen_operator(sig, 2, OperatorKind::Generic, 4)),
      ShapeError);
}

TEST_CASE("basic sandwich bounds", "[bounds]") {
  int idx = 0;
  for (OperatorKind kind : {OperatorKind::Generic, OperatorKind::SelfAdjoint,
                            OperatorKind::Normal, OperatorKind::Nilpotent2}) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto t = gen_operator({2}, 2, kind, Rng::derive(seed, 500 + idx));
      const auto rep = basic_bounds_check(t, 1e-7);
      CHECK(rep.holds);
      CHECK(rep.components.at("snr") <= rep.components.at("module_nr") + 1e-12);
    }
    ++idx;
  }
  // a larger mixed-signature spot check
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    CHECK(basic_bounds_check(gen_operator({2, 3}, 2, OperatorKind::Generic,
                                          Rng::derive(seed, 900)),
                             1e-7)
              .holds);
  }
}
