// Copyright (c) the numrad authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Three subcommands:
//   compute         radius quantities of one operator file
//   verify          run the property suite, exit 1 on any failed check
//   counterexample  reproduce the separating two-by-two construction
//
// Exit codes: 0 success; 1 failed checks / failed facts; 2 input parse
// error (message names the offending field); 3 internal cross-check failure.

#include "numrad/numrad.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

namespace {

struct CliOptions {
  std::string input;
  std::string quantity = "all";
  double tol = 1e-8;
  std::uint64_t seed = 42;
  int restarts = 64;
  int trials = 200;
  std::string output;
};

void emit(const numrad::ordered_json& j, const std::string& output_path) {
  if (output_path.empty() || output_path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw std::runtime_error("cannot open output file: " + output_path);
  out << j.dump(2) << "\n";
}

numrad::ModuleOperator load_operator(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw numrad::ParseError("input", "cannot open file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw numrad::ParseError("input", std::string("invalid JSON: ") + e.what());
  }
  return numrad::parse_operator(j);
}

int cmd_compute(const CliOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  const numrad::ModuleOperator t = load_operator(opt.input);

  const bool all = opt.quantity == "all";
  numrad::ordered_json out;
  out["schema"] = "numrad-compute/1";
  out["input"] = opt.input;
  out["quantity"] = opt.quantity;
  out["tol"] = opt.tol;
  out["seed"] = opt.seed;

  numrad::ordered_json details;
  if (all || opt.quantity == "norm") {
    out["norm"] = numrad::op_norm(t);
  }
  if (all || opt.quantity == "w") {
    numrad::ModuleNrConfig cfg;
    cfg.restarts = opt.restarts;
    cfg.seed = opt.seed;
    cfg.tol = opt.tol;
    const auto r = numrad::module_nr(t, cfg);
    out["w"] = r.value;
    details["w"] = numrad::to_json(r);
  }
  if (all || opt.quantity == "wtilde") {
    const auto r = numrad::snr(t, opt.tol);
    out["wtilde"] = r.value;
    details["wtilde"] = numrad::to_json(r);
  }
  if (all || opt.quantity == "srad") {
    out["srad"] = numrad::spectral_radius(t, opt.tol);
  }
  out["details"] = std::move(details);
  out["elapsed_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  emit(out, opt.output);
  return 0;
}

int cmd_verify(const CliOptions& opt) {
  numrad::SuiteConfig cfg;
  cfg.trials = opt.trials;
  cfg.seed = opt.seed;
  cfg.tol = opt.tol;
  cfg.restarts = opt.restarts;
  const numrad::SuiteReport report = numrad::run_suite(cfg);
  emit(report.to_json(), opt.output);
  std::cerr << "verify: " << report.total_pass << " passed, " << report.total_fail
            << " failed (" << report.wall_seconds << " s)\n";
  return report.total_fail > 0 ? 1 : 0;
}

int cmd_counterexample(const CliOptions& opt) {
  const numrad::SuiteReport report = numrad::counterexample();
  emit(report.to_json(), opt.output);
  std::cerr << "counterexample: " << report.total_pass << " facts verified ("
            << report.wall_seconds << " s)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical radius toolkit for operators on finite-dimensional "
               "Hilbert C*-modules"};
  app.require_subcommand(1);

  CliOptions opt;

  auto* compute = app.add_subcommand("compute", "compute radius quantities of an operator file");
  compute->add_option("--input", opt.input, "operator JSON file")->required();
  compute->add_option("--quantity", opt.quantity, "quantity to compute")
      ->check(CLI::IsMember({"w", "wtilde", "norm", "srad", "all"}));
  compute->add_option("--tol", opt.tol, "tolerance (default 1e-8)");
  compute->add_option("--seed", opt.seed, "random seed (default 42)");
  compute->add_option("--restarts", opt.restarts, "ascent restarts (default 64)");
  compute->add_option("--output", opt.output, "output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "run the property suite");
  verify->add_option("--tol", opt.tol, "tolerance (default 1e-8)");
  verify->add_option("--seed", opt.seed, "random seed (default 42)");
  verify->add_option("--restarts", opt.restarts, "ascent restarts (default 64)");
  verify->add_option("--trials", opt.trials, "trials per family and shape (default 200)");
  verify->add_option("--output", opt.output, "output path (default stdout)");

  auto* counter = app.add_subcommand("counterexample", "reproduce the separating construction");
  counter->add_option("--tol", opt.tol, "tolerance (default 1e-8)");
  counter->add_option("--output", opt.output, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (opt.tol <= 0.0) throw std::invalid_argument("--tol must be positive");
    if (opt.restarts < 0) throw std::invalid_argument("--restarts must be >= 0");
    if (opt.trials < 1) throw std::invalid_argument("--trials must be >= 1");
    if (compute->parsed()) return cmd_compute(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (counter->parsed()) return cmd_counterexample(opt);
  } catch (const numrad::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const numrad::CrossCheckError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
