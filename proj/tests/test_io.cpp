// Copyright (c) the numrad authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "test_helpers.hpp"

#include <cstring>

using namespace numrad;

namespace {

bool blocks_bit_identical(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j].rows() != b[j].rows() || a[j].cols() != b[j].cols()) return false;
    for (Eigen::Index r = 0; r < a[j].rows(); ++r) {
      for (Eigen::Index c = 0; c < a[j].cols(); ++c) {
        // bitwise, including the sign of zero
        if (std::memcmp(&a[j](r, c), &b[j](r, c), sizeof(cplx)) != 0) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("operator JSON round-trips bit-for-bit", "[io]") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto t = gen_operator({2, 3}, 2, OperatorKind::Generic, seed);
    // go through an actual text serialization, not just the DOM
    const std::string text = to_json(t).dump();
    const auto parsed = parse_operator(nlohmann::json::parse(text));
    CHECK(parsed.sig == t.sig);
    CHECK(parsed.k == t.k);
    CHECK(blocks_bit_identical(parsed.blocks, t.blocks));
  }

  // negative zero survives
  ModuleOperator z = zero_operator({2}, 1);
  z.blocks[0](0, 0) = cplx(-0.0, 0.0);
  const auto back = parse_operator(nlohmann::json::parse(to_json(z).dump()));
  CHECK(blocks_bit_identical(back.blocks, z.blocks));
}

TEST_CASE("element, frame and state round-trips", "[io]") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto a = testutil::random_element({2, 3}, seed);
    const auto a2 = parse_element(nlohmann::json::parse(to_json(a).dump()));
    CHECK(blocks_bit_identical(a2.blocks, a.blocks));

    const auto x = random_frame({2, 3}, 2, seed);
    const auto x2 = parse_frame(nlohmann::json::parse(to_json(x).dump()));
    CHECK(x2.k == x.k);
    CHECK(blocks_bit_identical(x2.blocks, x.blocks));

    const auto rho = random_state({2, 3}, seed);
    const auto rho2 = parse_state(nlohmann::json::parse(to_json(rho).dump()));
    CHECK(blocks_bit_identical(rho2.densities, rho.densities));
  }
}

TEST_CASE("parse errors name the offending field", "[io]") {
  const auto t = gen_operator({2}, 1, OperatorKind::Generic, 1);
  const ordered_json good = to_json(t);

  {
    ordered_json j = good;
    j.erase("sig");
    try {
      parse_operator(j);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.field == "sig");
    }
  }
  {
    ordered_json j = good;
    j["k"] = 0;
    try {
      parse_operator(j);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.field == "k");
    }
  }
  {
    ordered_json j = good;
    j["blocks"][0].erase(1);  // drop a row
    try {
      parse_operator(j);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.field == "blocks[0]");
    }
  }
  {
    ordered_json j = good;
    j["blocks"][0][1][1] = ordered_json::array({1.0});  // not an [re, im] pair
    try {
      parse_operator(j);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.field == "blocks[0][1][1]");
    }
  }
  {
    ordered_json j = good;
    j["blocks"][0][1][1][0] = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(parse_operator(j), ParseError);
  }
  {
    ordered_json j = good;
    j["sig"] = ordered_json::array({2, -1});
    try {
      parse_operator(j);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.field == "sig[1]");
    }
  }
}

TEST_CASE("radius result serialization", "[io]") {
  const auto t2 = left_mult(testutil::oblique_idempotent_element());
  const auto j_w = to_json(module_nr(t2));
  CHECK(j_w.at("method") == "fast-path-k1");
  CHECK(j_w.at("exactness") == "certified-within-tol");
  CHECK(j_w.at("witness").at("type") == "frame");

  const auto j_wt = to_json(snr_sweep(t2, 1e-9));
  CHECK(j_wt.at("method") == "snr-sweep");
  CHECK(j_wt.at("witness").at("type") == "theta");

  const auto j_s = to_json(snr_sampled_lb(t2, 10, 7));
  CHECK(j_s.at("method") == "sampled-lb");
  CHECK(j_s.at("exactness") == "lower-bound-only");
  CHECK(j_s.at("witness").at("type") == "state-frame");
}

TEST_CASE("bound report serialization", "[io]") {
  const auto rep = f_monotone_check(100, 3);
  const auto j = to_json(rep);
  CHECK(j.at("holds") == true);
  CHECK(j.at("components").contains("violations"));
  CHECK(j.at("slack").is_number());
}
