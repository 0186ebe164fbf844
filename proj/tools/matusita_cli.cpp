// Copyright 2026 The matusita authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Talks to the library exclusively through the C
// interface in matusita/matusita.h.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <stdexcept>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "matusita/matusita.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_golden_failure = 2;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(mt_status st) {
  if (st != MT_OK) {
    const std::string detail = mt_last_error();
    throw Failure(std::string(mt_status_string(st)) + (detail.empty() ? "" : ": " + detail));
  }
}

struct StringDeleter {
  void operator()(char* s) const { mt_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

template <class T, void (*Destroy)(T*)>
struct HandleDeleter {
  void operator()(T* p) const { Destroy(p); }
};
using Samples = std::unique_ptr<mt_samples, HandleDeleter<mt_samples, mt_samples_destroy>>;
using Scenario = std::unique_ptr<mt_scenario, HandleDeleter<mt_scenario, mt_scenario_destroy>>;
using Results = std::unique_ptr<mt_results, HandleDeleter<mt_results, mt_results_destroy>>;
using Diff = std::unique_ptr<mt_diff, HandleDeleter<mt_diff, mt_diff_destroy>>;

void emit(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure("cannot write " + path);
  out << data;
  if (!out) throw Failure("failed writing " + path);
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

void print_seed(std::uint64_t seed, bool used) {
  std::cerr << "seed: " << seed << (used ? "" : " (unused, deterministic command)") << '\n';
}

struct PairOptions {
  double mu1 = 0, sigma1 = 1, mu2 = 0, sigma2 = 1;
};

void add_pair_options(CLI::App* sub, PairOptions& p) {
  sub->add_option("--mu1", p.mu1, "Mean of the first normal population")->required();
  sub->add_option("--sigma1", p.sigma1, "Standard deviation of the first population")
      ->required();
  sub->add_option("--mu2", p.mu2, "Mean of the second normal population")->required();
  sub->add_option("--sigma2", p.sigma2, "Standard deviation of the second population")
      ->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matusita overlap coefficient for pairs of normal distributions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(mt_version()));

  const std::string seed_help =
      "Master seed (default " + std::to_string(MT_DEFAULT_SEED) + ")";
  const unsigned default_workers = std::max(1u, std::thread::hardware_concurrency());

  // exact
  PairOptions exact_pair;
  bool use_quadrature = false;
  double tol = 1e-10;
  auto* exact = app.add_subcommand("exact", "Exact rho for two normal populations");
  add_pair_options(exact, exact_pair);
  exact->add_flag("--quadrature", use_quadrature,
                  "Integrate sqrt(f1 f2) numerically instead of using the closed form");
  exact->add_option("--tol", tol, "Quadrature error tolerance, in (0, 1e-4]")
      ->capture_default_str();

  // estimate
  std::string path_x, path_y, which = "all", estimate_out;
  auto* est = app.add_subcommand("estimate", "Estimate rho from two sample files");
  est->add_option("--x", path_x, "First sample, one value per line")->required();
  est->add_option("--y", path_y, "Second sample, one value per line")->required();
  est->add_option("--estimator", which,
                  "rho1_equal_variance | rho2_equal_means | proposed_x | proposed_y | "
                  "proposed_avg | kernel | all")
      ->capture_default_str();
  est->add_option("--out", estimate_out, "Output file (default: standard output)");

  // simulate
  std::string config_path, simulate_out, simulate_format = "csv";
  unsigned simulate_workers = default_workers;
  std::uint64_t simulate_seed = 0;
  auto* sim = app.add_subcommand("simulate", "Monte Carlo study of one scenario file");
  sim->add_option("--config", config_path,
                  "Scenario file: mu1, sigma1, mu2, sigma2, sizes (e.g. 10x10, 20x30), "
                  "replications, seed, estimators")
      ->required();
  sim->add_option("--workers", simulate_workers, "Worker threads (output does not depend on it)")
      ->capture_default_str();
  auto* sim_seed_opt = sim->add_option("--seed", simulate_seed,
                                       seed_help + "; overrides the config file");
  sim->add_option("--format", simulate_format, "csv | text")
      ->check(CLI::IsMember({"csv", "text"}))
      ->capture_default_str();
  sim->add_option("--out", simulate_out, "Output file (default: standard output)");

  // reproduce
  std::uint64_t reproduce_seed = MT_DEFAULT_SEED;
  std::size_t replications = 1000;
  unsigned reproduce_workers = default_workers;
  std::string reproduce_out, full_csv;
  auto* rep = app.add_subcommand(
      "reproduce", "Rerun the published nine-scenario study and diff it against the tables");
  rep->add_option("--seed", reproduce_seed, seed_help)->capture_default_str();
  rep->add_option("--r", replications,
                  "Replications per cell; tolerances widen by sqrt(1000/R)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  rep->add_option("--workers", reproduce_workers, "Worker threads (output does not depend on it)")
      ->capture_default_str();
  rep->add_option("--out", reproduce_out, "Write the reproduced metric csv here");
  rep->add_option("--full-csv", full_csv, "Write the per-cell diff csv here");

  // profile
  PairOptions profile_pair;
  std::size_t points = 512;
  std::string profile_out;
  auto* prof = app.add_subcommand("profile", "Density profile csv: x,f1,f2,sqrt_f1f2");
  add_pair_options(prof, profile_pair);
  prof->add_option("--points", points, "Grid points (>= 2)")->capture_default_str();
  prof->add_option("--out", profile_out, "Output file (default: standard output)");

  for (auto* sub : {exact, est, sim, rep, prof}) sub->footer(seed_help + ".");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*exact) {
      print_seed(MT_DEFAULT_SEED, false);
      const mt_normal p1{exact_pair.mu1, exact_pair.sigma1};
      const mt_normal p2{exact_pair.mu2, exact_pair.sigma2};
      double rho = 0;
      check(use_quadrature ? mt_rho_quadrature(p1, p2, tol, &rho) : mt_rho_general(p1, p2, &rho));
      std::cout << fixed6(rho) << '\n';
      return exit_ok;
    }

    if (*est) {
      print_seed(MT_DEFAULT_SEED, false);
      mt_samples* raw = nullptr;
      check(mt_samples_read_files(path_x.c_str(), path_y.c_str(), &raw));
      Samples samples(raw);
      std::string out = "estimator,value\n";
      auto add = [&](mt_estimator e, double v) {
        out += std::string(mt_estimator_name(e)) + "," + fixed6(v) + "\n";
        if (v > 1.0 && (e == MT_EST_KERNEL || e >= MT_EST_PROPOSED_X)) {
          std::cerr << "warning: " << mt_estimator_name(e) << " = " << fixed6(v)
                    << " exceeds 1 (reported unclamped)\n";
        }
      };
      if (which == "all") {
        double values[MT_ESTIMATOR_COUNT];
        check(mt_estimate_all(samples.get(), values));
        for (int i = 0; i < MT_ESTIMATOR_COUNT; ++i) add(static_cast<mt_estimator>(i), values[i]);
      } else {
        mt_estimator e{};
        check(mt_estimator_from_name(which.c_str(), &e));
        double v = 0;
        check(mt_estimate(samples.get(), e, &v));
        add(e, v);
      }
      emit(estimate_out, out);
      return exit_ok;
    }

    if (*sim) {
      mt_scenario* raw = nullptr;
      check(mt_scenario_load_config(config_path.c_str(), &raw));
      Scenario scenario(raw);
      if (*sim_seed_opt) check(mt_scenario_set_seed(scenario.get(), simulate_seed));
      print_seed(mt_scenario_seed(scenario.get()), true);
      mt_results* res = nullptr;
      check(mt_simulate(scenario.get(), simulate_workers, &res));
      Results results(res);
      char* text = nullptr;
      check(mt_results_render(results.get(),
                              simulate_format == "text" ? MT_FORMAT_TEXT : MT_FORMAT_CSV, &text));
      OwnedString owned(text);
      emit(simulate_out, owned.get());
      return exit_ok;
    }

    if (*rep) {
      print_seed(reproduce_seed, true);
      mt_results* res = nullptr;
      check(mt_reproduce(reproduce_seed, replications, reproduce_workers, &res));
      Results results(res);
      if (!reproduce_out.empty()) {
        char* csv = nullptr;
        check(mt_results_render(results.get(), MT_FORMAT_CSV, &csv));
        OwnedString owned(csv);
        emit(reproduce_out, owned.get());
      }
      mt_diff* d = nullptr;
      check(mt_diff_golden(results.get(), replications, &d));
      Diff diff(d);
      if (!full_csv.empty()) {
        char* csv = nullptr;
        check(mt_diff_render(diff.get(), MT_FORMAT_CSV, &csv));
        OwnedString owned(csv);
        emit(full_csv, owned.get());
      }
      char* text = nullptr;
      check(mt_diff_render(diff.get(), MT_FORMAT_TEXT, &text));
      OwnedString owned(text);
      std::cout << owned.get();
      mt_diff_summary summary{};
      check(mt_diff_summary_get(diff.get(), &summary));
      return summary.passed == summary.checked ? exit_ok : exit_golden_failure;
    }

    if (*prof) {
      print_seed(MT_DEFAULT_SEED, false);
      char* csv = nullptr;
      check(mt_profile_csv({profile_pair.mu1, profile_pair.sigma1},
                           {profile_pair.mu2, profile_pair.sigma2}, points, &csv));
      OwnedString owned(csv);
      emit(profile_out, owned.get());
      return exit_ok;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
