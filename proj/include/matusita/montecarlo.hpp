// Copyright 2026 The matusita authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "matusita/distributions.hpp"
#include "matusita/estimators.hpp"

namespace matusita {

inline constexpr std::uint64_t default_seed = 20240001;
inline constexpr std::size_t study_replications = 1000;

struct SizePair {
  std::size_t n1;
  std::size_t n2;

  friend bool operator==(const SizePair&, const SizePair&) = default;
};

struct ScenarioSpec {
  NormalParams f1;
  NormalParams f2;
  std::vector<SizePair> sizes;
  std::size_t replications = study_replications;
  std::uint64_t master_seed = default_seed;
  // Labels carried into every MetricCell. "U" marks a user scenario;
  // the published study grid uses T2, T3 and T4.
  std::string table_id = "U";
  unsigned scenario = 1;

  /// Throws Error(invalid_params) unless R >= 1, sizes is nonempty and
  /// every n >= 2.
  void validate() const;
};

struct MetricCell {
  std::string table_id;
  unsigned scenario;
  NormalParams f1;
  NormalParams f2;
  EstimatorTag tag;
  std::size_t n1;
  std::size_t n2;
  double exact_rho;
  double rb;
  double rmse_around_truth;
  double rmse_around_mean;
  double mean_estimate;
  std::size_t failures;
};

struct Metrics {
  double mean;
  double rb;
  double rmse_around_truth;
  double rmse_around_mean;
};

/// rb = (mean - truth) / truth
/// rmse_around_mean  = sqrt(sum (e - mean)^2 / R) / truth
/// rmse_around_truth = sqrt(sum (e - truth)^2 / R) / truth
Metrics compute_metrics(std::span<const double> estimates, double truth);

/// One MetricCell per (size, tag), sizes outermost. Replication j of size
/// index k draws x from StreamKey{seed, scenario, k, j, 1} and y from
/// StreamKey{seed, scenario, k, j, 2}. workers == 0 means
/// std::thread::hardware_concurrency(); output does not depend on it.
std::vector<MetricCell> run_scenario(const ScenarioSpec& spec,
                                     std::span<const EstimatorTag> tags,
                                     unsigned workers = 0);

/// The nine scenarios of the published study, with the second parameter of
/// each N(., .) read as a standard deviation.
std::vector<ScenarioSpec> study_grid(std::uint64_t master_seed,
                                     std::size_t replications = study_replications);

/// run_scenario over study_grid() with every estimator tag.
std::vector<MetricCell> run_study_grid(std::uint64_t master_seed,
                                       std::size_t replications,
                                       unsigned workers = 0);

}  // namespace matusita
