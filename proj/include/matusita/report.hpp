// Copyright 2026 The matusita authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "matusita/distributions.hpp"
#include "matusita/estimators.hpp"
#include "matusita/montecarlo.hpp"

namespace matusita {

enum class TableFormat { text, csv };

inline constexpr std::string_view metric_csv_header =
    "table_id,scenario,mu1,sigma1,mu2,sigma2,n1,n2,estimator,exact_rho,"
    "mean_estimate,rb,rmse_truth,rmse_mean,failures";

/// Text mirrors the published layout (scenario block, size, RB row, RMSE
/// row; RMSE about the truth). CSV follows metric_csv_header.
/// Throws Error(empty_input) on an empty sequence.
std::string render_table(std::span<const MetricCell> cells, TableFormat format);

/// Inverse of render_table(csv). Throws ParseError naming the line.
std::vector<MetricCell> parse_table_csv(std::string_view csv);

// ---------------------------------------------------------------------------
// Published reference values

struct GoldenCell {
  std::string_view table_id;  // T2, T3 or T4
  unsigned scenario;          // 1..9, in study grid order
  std::size_t n1;
  std::size_t n2;
  std::string_view column;    // label as printed: rho_k, rho_l, rho_2, rho_p
  EstimatorTag tag;           // estimator that column is reproduced by
  double rb;
  double rmse;
};

struct GoldenExact {
  std::string_view table_id;
  unsigned scenario;
  double rho;
};

std::span<const GoldenCell> golden_cells() noexcept;
std::span<const GoldenExact> golden_exact_values() noexcept;

/// Scenario `index` (1..9) of the published grid.
NormalParams golden_f1(unsigned scenario);
NormalParams golden_f2(unsigned scenario);

/// FNV-1a over the "%.5f" rendering of every golden number, in order.
std::uint64_t golden_checksum() noexcept;

// ---------------------------------------------------------------------------
// Reproduction diff

/// Per-cell tolerances:
///   rb:   scale * max(rb_floor,   rb_se_multiplier * rmse_golden / sqrt(1000))
///   rmse: scale * max(rmse_floor, rmse_fraction * rmse_golden)
struct DiffTolerance {
  double rb_floor;
  double rb_se_multiplier;
  double rmse_floor;
  double rmse_fraction;
  double scale;

  /// Calibrated defaults, widened by sqrt(1000 / R) for cheaper runs.
  static DiffTolerance calibrated(std::size_t replications = study_replications);
  /// Flat tolerances, identical for every cell.
  static DiffTolerance fixed(double tol_rb, double tol_rmse);

  double rb_tol(double rmse_golden) const;
  double rmse_tol(double rmse_golden) const;
};

enum class RmseMatch { none, around_truth, around_mean, both };
std::string_view to_string(RmseMatch m) noexcept;

struct DiffCell {
  const GoldenCell* golden;
  double rb;
  double rmse_around_truth;
  double rmse_around_mean;
  double dev_rb;
  double dev_rmse_truth;
  double dev_rmse_mean;
  double tol_rb;
  double tol_rmse;
  bool rb_pass;
  bool rmse_pass;
  RmseMatch rmse_match;
  bool closer_to_truth;  // which RMSE definition lies nearer the golden value
  bool informational;    // kernel columns: reported, never pass/fail

  bool pass() const noexcept { return rb_pass && rmse_pass; }
};

/// One printed estimator column of one table (kernel columns excluded).
struct ColumnSummary {
  std::string_view table_id;
  std::string_view column;
  EstimatorTag tag;
  std::size_t cells = 0;
  std::size_t rb_pass = 0;
  std::size_t rmse_pass = 0;
  // More than half of the column failing one check points at a formula or
  // column-mapping error rather than Monte Carlo noise.
  bool rb_systematic = false;
  bool rmse_systematic = false;
};

struct TableRmseSummary {
  std::string_view table_id;
  std::size_t cells = 0;
  std::size_t closer_to_truth = 0;
  std::size_t closer_to_mean = 0;
  std::size_t matched_truth = 0;
  std::size_t matched_mean = 0;
};

struct DiffReport {
  std::vector<DiffCell> cells;  // golden order, every golden cell once
  std::vector<ColumnSummary> columns;
  std::vector<TableRmseSummary> tables;
  std::size_t checked = 0;      // non-informational cells
  std::size_t rb_passed = 0;
  std::size_t rmse_passed = 0;
  std::size_t passed = 0;

  std::size_t failed() const noexcept { return checked - passed; }
  bool any_systematic() const noexcept;
};

/// Throws Error(missing_cell) listing every golden cell with no matching
/// MetricCell (matched on table, scenario, sizes and estimator tag).
DiffReport diff_golden(std::span<const MetricCell> cells, const DiffTolerance& tol);

/// MetricCells holding the published values themselves, both RMSE fields
/// set to the printed RMSE.
std::vector<MetricCell> golden_as_cells();

std::string render_diff_text(const DiffReport& report);
std::string render_diff_csv(const DiffReport& report);

// ---------------------------------------------------------------------------
// Density profiles

struct ProfileRow {
  double x;
  double f1;
  double f2;
  double sqrt_f1f2;
};

/// `points` equally spaced rows over [min(mu_i - 4 sigma_i), max(mu_i + 4 sigma_i)].
/// Throws Error(invalid_params) when points < 2.
std::vector<ProfileRow> density_profile(const NormalParams& p1,
                                        const NormalParams& p2,
                                        std::size_t points);

/// Header x,f1,f2,sqrt_f1f2.
std::string render_profile_csv(std::span<const ProfileRow> rows);

}  // namespace matusita
