// Copyright (c) the numrad authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0
//
// Property suite over seeded operator families, plus the fixed two-by-two
// construction separating the module radius from the spatial radius.
// Failures are data, not exceptions: the suite always completes and reports.
// Reports serialize deterministically for a given config (wall-clock time is
// kept in memory only).

#ifndef NUMRAD_SUITE_HPP
#define NUMRAD_SUITE_HPP

#include "numrad/generators.hpp"
#include "numrad/io.hpp"

#include <chrono>

namespace numrad {

struct SuiteConfig {
  std::vector<AlgebraSignature> signatures{AlgebraSignature{2}, AlgebraSignature{3},
                                           AlgebraSignature{2, 3}};
  std::vector<int> ks{1, 2, 3};
  int trials = 200;
  std::uint64_t seed = 7;
  double tol = 1e-8;
  int restarts = 64;

  void validate() const {
    if (trials < 1) throw std::invalid_argument("suite: trials must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("suite: tol must be positive");
    if (restarts < 0) throw std::invalid_argument("suite: restarts must be >= 0");
    if (signatures.empty() || ks.empty()) {
      throw std::invalid_argument("suite: signatures and ks must be nonempty");
    }
    for (const auto& s : signatures) s.validate();
    for (int k : ks) {
      if (k < 1) throw std::invalid_argument("suite: k must be >= 1");
    }
  }
};

struct CheckStat {
  std::string name;
  long pass = 0;
  long fail = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  ordered_json failures = ordered_json::array();  // capped payloads
};

struct SuiteReport {
  ordered_json config_json;  // null when not produced by run_suite
  std::vector<CheckStat> checks;
  ordered_json stats = ordered_json::object();
  ordered_json values = ordered_json::object();  // named numbers (counterexample facts)
  double wall_seconds = 0.0;                     // never serialized
  long total_pass = 0;
  long total_fail = 0;

  ordered_json to_json() const {
    ordered_json j;
    j["schema"] = "numrad-suite/1";
    j["config"] = config_json;
    ordered_json jchecks = ordered_json::array();
    for (const auto& c : checks) {
      ordered_json jc;
      jc["name"] = c.name;
      jc["pass"] = c.pass;
      jc["fail"] = c.fail;
      jc["worst_margin"] = std::isfinite(c.worst_margin) ? ordered_json(c.worst_margin)
                                                         : ordered_json(nullptr);
      jc["failures"] = c.failures;
      jchecks.push_back(std::move(jc));
    }
    j["checks"] = std::move(jchecks);
    j["stats"] = stats;
    if (!values.empty()) j["values"] = values;
    j["summary"] = ordered_json{{"pass", total_pass}, {"fail", total_fail}};
    return j;
  }
};

namespace detail {

class CheckRecorder {
 public:
  explicit CheckRecorder(SuiteReport& report) : report_(report) {}

  int add(const std::string& name) {
    report_.checks.push_back(CheckStat{name});
    return static_cast<int>(report_.checks.size()) - 1;
  }

  // margin >= 0 passes. The payload factory runs only on failure.
  template <typename PayloadFn>
  void record(int idx, double margin, PayloadFn&& payload) {
    auto& c = report_.checks[static_cast<std::size_t>(idx)];
    c.worst_margin = std::min(c.worst_margin, margin);
    if (margin >= 0.0) {
      ++c.pass;
      ++report_.total_pass;
    } else {
      ++c.fail;
      ++report_.total_fail;
      if (c.failures.size() < 5) c.failures.push_back(payload());
    }
  }

  void record(int idx, double margin) {
    record(idx, margin, [] { return ordered_json(nullptr); });
  }

 private:
  SuiteReport& report_;
};

inline ordered_json config_to_json(const SuiteConfig& cfg) {
  ordered_json j;
  ordered_json sigs = ordered_json::array();
  for (const auto& s : cfg.signatures) sigs.push_back(s.block_dims);
  j["signatures"] = std::move(sigs);
  j["ks"] = cfg.ks;
  j["trials"] = cfg.trials;
  j["seed"] = cfg.seed;
  j["tol"] = cfg.tol;
  j["restarts"] = cfg.restarts;
  return j;
}

}  // namespace detail

/// Runs every asserted family check over the configured grid and returns a
/// deterministic report. Exit-code semantics live in the CLI; here failures
/// only increment counters and attach serialized payloads.
inline SuiteReport run_suite(const SuiteConfig& cfg) {
  cfg.validate();
  const auto t_start = std::chrono::steady_clock::now();

  SuiteReport report;
  report.config_json = detail::config_to_json(cfg);
  detail::CheckRecorder rec(report);

  const int c_sandwich = rec.add("sandwich");
  const int c_route = rec.add("route_agreement");
  const int c_sa_eq = rec.add("selfadjoint_norm_equality");
  const int c_normal_eq = rec.add("normal_norm_equality");
  const int c_nil_half = rec.add("nilpotent_half_norm");
  const int c_leftmult = rec.add("leftmult_identity_witness");
  const int c_kittaneh = rec.add("kittaneh");
  const int c_kit_lower = rec.add("kittaneh_lower_tight");
  const int c_kit_upper = rec.add("kittaneh_upper_tight");
  const int c_srad_snr = rec.add("spectral_radius_vs_snr");
  const int c_srad_nil = rec.add("spectral_radius_nilpotent");
  const int c_samp_nr = rec.add("sampled_nr_dominance");
  const int c_samp_snr = rec.add("sampled_snr_dominance");
  const int c_amplify = rec.add("amplify_invariance");
  const int c_mixed = rec.add("mixed_radius_bound");
  const int c_mixed_special = rec.add("mixed_radius_special_case");
  const int c_mixed_west = rec.add("mixed_west_dominates");
  const int c_f_mono = rec.add("f_monotonicity");
  const int c_f_zero = rec.add("f_zero_a_max");

  // Tighter than cfg.tol so that squared quantities in the tightness checks
  // stay inside their 1e-7 windows at ||T|| up to ~6.
  const double snr_tol = 0.25 * cfg.tol;

  const OperatorKind kinds[] = {OperatorKind::Generic, OperatorKind::SelfAdjoint,
                                OperatorKind::Normal, OperatorKind::Nilpotent2,
                                OperatorKind::LeftMult};

  double max_rel_w_gap = 0.0;        // (w_reported - wtilde) / ||T||
  double max_rel_norm_gap = 0.0;     // (||T|| - w_reported) / ||T||
  double worst_nil_residual = 0.0;   // |wtilde - ||T||/2| on the nilpotent family

  for (std::size_t si = 0; si < cfg.signatures.size(); ++si) {
    const AlgebraSignature& sig = cfg.signatures[si];
    for (std::size_t ki = 0; ki < cfg.ks.size(); ++ki) {
      const int k = cfg.ks[ki];
      for (std::size_t fi = 0; fi < std::size(kinds); ++fi) {
        const OperatorKind kind = kinds[fi];
        if (kind == OperatorKind::LeftMult && k != 1) continue;

        for (int trial = 0; trial < cfg.trials; ++trial) {
          const std::uint64_t tseed =
              Rng::derive(cfg.seed, (static_cast<std::uint64_t>(si) << 48) ^
                                        (static_cast<std::uint64_t>(ki) << 40) ^
                                        (static_cast<std::uint64_t>(fi) << 32) ^
                                        static_cast<std::uint64_t>(trial));
          const ModuleOperator t = gen_operator(sig, k, kind, tseed);
          const double n = op_norm(t);

          auto payload = [&](const char* check, double margin) {
            return [&, check, margin] {
              ordered_json p;
              p["check"] = check;
              p["sig"] = sig.block_dims;
              p["k"] = k;
              p["family"] = to_string(kind);
              p["trial"] = trial;
              p["margin"] = margin;
              p["operator"] = to_json(t);
              return p;
            };
          };

          const RadiusResult sweep = snr_sweep(t, snr_tol);
          const RadiusResult rep = snr_rep(t, snr_tol);
          const double wt = rep.value;

          ModuleNrConfig mcfg;
          mcfg.restarts = cfg.restarts;
          mcfg.seed = Rng::derive(tseed, 1);
          mcfg.tol = cfg.tol;
          const double w = module_nr(t, mcfg, rep).value;

          const double srad = spectral_radius(t, 1e-9);

          {
            const double margin = 1e-6 - std::abs(sweep.value - rep.value);
            rec.record(c_route, margin, payload("route_agreement", margin));
          }
          {
            const double margin =
                std::min({wt - 0.5 * n + 1e-7, w - wt + 1e-12, n - w + 1e-7});
            rec.record(c_sandwich, margin, payload("sandwich", margin));
          }
          if (kind == OperatorKind::SelfAdjoint) {
            const double margin =
                std::min(1e-7 - std::abs(wt - n), 1e-7 - std::abs(w - n));
            rec.record(c_sa_eq, margin, payload("selfadjoint_norm_equality", margin));
          }
          if (kind == OperatorKind::Normal) {
            const double margin =
                std::min(1e-7 - std::abs(wt - n), 1e-7 - std::abs(w - n));
            rec.record(c_normal_eq, margin, payload("normal_norm_equality", margin));
          }
          if (kind == OperatorKind::Nilpotent2) {
            const double residual = std::abs(wt - 0.5 * n);
            worst_nil_residual = std::max(worst_nil_residual, residual);
            const double margin = 1e-6 - residual;
            rec.record(c_nil_half, margin, payload("nilpotent_half_norm", margin));
          }
          if (kind == OperatorKind::LeftMult) {
            const double margin = 1e-12 - std::abs(w - n);
            rec.record(c_leftmult, margin, payload("leftmult_identity_witness", margin));
          }

          {
            const ModuleOperator s = add(compose(adjoint(t), t), compose(t, adjoint(t)));
            const double ns = op_norm(s);
            const double slack_lower = wt * wt - 0.25 * ns;
            const double slack_upper = 0.5 * ns - wt * wt;
            const double margin = std::min(slack_lower, slack_upper) + 1e-7;
            rec.record(c_kittaneh, margin, payload("kittaneh", margin));
            if (kind == OperatorKind::Nilpotent2) {
              const double m2 = 1e-7 - std::abs(slack_lower);
              rec.record(c_kit_lower, m2, payload("kittaneh_lower_tight", m2));
            }
            if (kind == OperatorKind::SelfAdjoint) {
              const double m2 = 1e-7 - std::abs(slack_upper);
              rec.record(c_kit_upper, m2, payload("kittaneh_upper_tight", m2));
            }
          }

          {
            const double margin = wt + 1e-6 - srad;
            rec.record(c_srad_snr, margin, payload("spectral_radius_vs_snr", margin));
          }
          if (kind == OperatorKind::Nilpotent2) {
            const double margin = 1e-6 * n - srad;
            rec.record(c_srad_nil, margin, payload("spectral_radius_nilpotent", margin));
          }

          if (trial < 10) {
            // Dominance is compared against a tighter certificate so the
            // 1e-9 window is sound: samples <= true value <= certified + 1e-10.
            const double wt_tight = snr(t, 1e-10).value;
            const double nr_s = nr_sampled_lb(t, 1000, Rng::derive(tseed, 2)).value;
            const double snr_s = snr_sampled_lb(t, 1000, Rng::derive(tseed, 3)).value;
            const double m1 = w + 1e-9 - nr_s;
            rec.record(c_samp_nr, m1, payload("sampled_nr_dominance", m1));
            const double m2 = wt_tight + 1e-9 - snr_s;
            rec.record(c_samp_snr, m2, payload("sampled_snr_dominance", m2));
          }

          if (trial < 2 && k == 1) {
            const ModuleOperator big = amplify(t, 2);
            const double dn = std::abs(op_norm(big) - n);
            const double dr = std::abs(spectral_radius(big, 1e-9) - srad);
            const double dw = std::abs(snr_sweep(big, 1e-7).value - snr_sweep(t, 1e-7).value);
            const double margin = 1e-6 - std::max({dn, dr, dw});
            rec.record(c_amplify, margin, payload("amplify_invariance", margin));
          }

          if (n > 0.0) {
            max_rel_w_gap = std::max(max_rel_w_gap, (w - wt) / n);
            max_rel_norm_gap = std::max(max_rel_norm_gap, (n - w) / n);
          }
        }
      }
    }
  }

  // Mixed spectral-radius bound on fixed-shape quadruples.
  {
    const AlgebraSignature sig{2};
    const int k = 2;
    for (int i = 0; i < 200; ++i) {
      const std::uint64_t s = Rng::derive(cfg.seed, 0xA110000ull + static_cast<std::uint64_t>(i));
      const ModuleOperator a1 = gen_operator(sig, k, OperatorKind::Generic, Rng::derive(s, 1));
      const ModuleOperator b1 = gen_operator(sig, k, OperatorKind::Generic, Rng::derive(s, 2));
      const ModuleOperator a2 = gen_operator(sig, k, OperatorKind::Generic, Rng::derive(s, 3));
      const ModuleOperator b2 = gen_operator(sig, k, OperatorKind::Generic, Rng::derive(s, 4));
      const BoundReport br = mixed_radius_bound_check(a1, b1, a2, b2, 1e-7);
      const double margin = br.slack + 1e-7;
      rec.record(c_mixed, margin, [&] {
        ordered_json p;
        p["check"] = "mixed_radius_bound";
        p["trial"] = i;
        p["report"] = to_json(br);
        return p;
      });
      const double mw = br.components.at("west_dominates") + 1e-12;
      rec.record(c_mixed_west, mw);
    }
    for (int i = 0; i < 200; ++i) {
      const std::uint64_t s = Rng::derive(cfg.seed, 0xB220000ull + static_cast<std::uint64_t>(i));
      const ModuleOperator a1 = gen_operator(sig, k, OperatorKind::Generic, Rng::derive(s, 1));
      const ModuleOperator b1 = gen_operator(sig, k, OperatorKind::Generic, Rng::derive(s, 2));
      const double lhs = spectral_radius(compose(a1, b1), 1e-10);
      const double rhs = snr(compose(b1, a1), 1e-9).value;
      const double margin = rhs + 1e-7 - lhs;
      rec.record(c_mixed_special, margin, [&] {
        ordered_json p;
        p["check"] = "mixed_radius_special_case";
        p["trial"] = i;
        p["lhs"] = lhs;
        p["rhs"] = rhs;
        return p;
      });
    }
  }

  // Scalar merge function properties.
  {
    const BoundReport mono = f_monotone_check(10000, Rng::derive(cfg.seed, 0xF00Dull));
    rec.record(c_f_mono, mono.components.at("worst_margin") + 1e-12, [&] {
      ordered_json p;
      p["check"] = "f_monotonicity";
      p["report"] = to_json(mono);
      return p;
    });
    Rng rng(Rng::derive(cfg.seed, 0xF00Eull));
    double worst = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 100; ++i) {
      const double x = 10.0 * rng.uniform();
      const double y = 10.0 * rng.uniform();
      worst = std::min(worst, 1e-12 - std::abs(f_merge(x, y, 0.0) - std::max(x, y)));
    }
    rec.record(c_f_zero, worst);
  }

  report.stats["max_rel_w_minus_wtilde"] = max_rel_w_gap;
  report.stats["max_rel_norm_minus_w"] = max_rel_norm_gap;
  report.stats["worst_nilpotent_half_residual"] = worst_nil_residual;

  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  return report;
}

/// The fixed two-by-two construction: on A = M2(C) with H = A, the left
/// multiplications by b = [[0,0],[1,0]] (square-zero shift) and
/// a = [[1,0],[1,0]] (oblique idempotent) separate w from wtilde:
/// w(shift) = ||shift|| while wtilde(shift) = ||shift||/2, and
/// wtilde(oblique) = (1+sqrt(2))/2 < sqrt(2) = w(oblique), with the state
/// sup of a capped by 5/4. Throws CrossCheckError if any fact fails.
inline SuiteReport counterexample() {
  const auto t_start = std::chrono::steady_clock::now();
  const AlgebraSignature sig{2};

  Matrix am(2, 2), bm(2, 2);
  am << 1, 0, 1, 0;
  bm << 0, 0, 1, 0;
  const AlgebraElement a{sig, {am}};
  const AlgebraElement b{sig, {bm}};
  const AlgebraElement e1{sig, {(Matrix(2, 2) << 1, 0, 0, 0).finished()}};
  const AlgebraElement e2 = add(identity(sig), scale(e1, -1.0));

  const ModuleOperator shift = left_mult(b);
  const ModuleOperator oblique = left_mult(a);

  const double sqrt2 = std::sqrt(2.0);
  const double closed_form = 0.5 * (1.0 + sqrt2);

  const double n_shift = op_norm(shift);
  const double w_shift = module_nr(shift).value;
  const double wt_shift = snr_sweep(shift, 1e-9).value;

  const double n_oblique = op_norm(oblique);
  const RadiusResult w_oblique_res = module_nr(oblique);
  const double w_oblique = w_oblique_res.value;
  const double wt_oblique = snr_sweep(oblique, 1e-9).value;
  const double ss = state_sup(a, 1e-10);
  const double srad_oblique = spectral_radius(oblique, 1e-9);

  SuiteReport report;
  detail::CheckRecorder rec(report);
  auto fact = [&](const char* name, double margin) {
    const int idx = rec.add(name);
    rec.record(idx, margin);
  };

  fact("shift_norm_one", 1e-9 - std::abs(n_shift - 1.0));
  fact("shift_w_equals_norm", 1e-9 - std::abs(w_shift - 1.0));
  fact("shift_wtilde_half", 1e-8 - std::abs(wt_shift - 0.5));
  fact("oblique_norm_sqrt2", 1e-9 - std::abs(n_oblique - sqrt2));
  fact("oblique_w_equals_sqrt2", 1e-9 - std::abs(w_oblique - sqrt2));
  fact("oblique_w_witness_identity",
       1e-9 - std::abs(witness_value(oblique, w_oblique_res) - sqrt2));
  fact("oblique_wtilde_closed_form", 1e-8 - std::abs(wt_oblique - closed_form));
  fact("oblique_gap_strict", (sqrt2 - wt_oblique) - 0.2);
  fact("state_sup_below_five_quarters", 1.25 + 1e-12 - ss);
  fact("sweep_below_state_sup", ss + 1e-9 - wt_oblique);
  fact("spectral_radius_one", 1e-6 - std::abs(srad_oblique - 1.0));
  fact("unit_decomposition", 1e-12 - norm(add(add(e1, e2), scale(identity(sig), -1.0))));

  report.values["norm_shift"] = n_shift;
  report.values["w_shift"] = w_shift;
  report.values["wtilde_shift"] = wt_shift;
  report.values["norm_oblique"] = n_oblique;
  report.values["w_oblique"] = w_oblique;
  report.values["wtilde_oblique"] = wt_oblique;
  report.values["state_sup_a"] = ss;
  report.values["spectral_radius_oblique"] = srad_oblique;
  report.values["gap_w_minus_wtilde"] = w_oblique - wt_oblique;

  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();

  if (report.total_fail > 0) {
    std::string names;
    for (const auto& c : report.checks) {
      if (c.fail > 0) names += " " + c.name;
    }
    throw CrossCheckError("counterexample: facts failed:" + names);
  }
  return report;
}

}  // namespace numrad

#endif  // NUMRAD_SUITE_HPP
