// Copyright 2026 The matusita authors
// SPDX-License-Identifier: Apache-2.0

#include "matusita/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "matusita/errors.hpp"

namespace matusita {

namespace {

constexpr double half_log_two_pi = 0.91893853320467274178032973640562;

// Mean over `points` of sqrt(numerator / denominator), both densities given
// as log-density callables.
template <class LogNum, class LogDen>
double mean_sqrt_ratio(std::span<const double> points, const LogNum& log_num,
                       const LogDen& log_den) {
  double sum = 0.0;
  for (double t : points) sum += std::exp(0.5 * (log_num(t) - log_den(t)));
  return sum / static_cast<double>(points.size());
}

// Linearly interpolated quantile of sorted data, prob in [0, 1].
double quantile_sorted(const std::vector<double>& sorted, double prob) {
  const double pos = prob * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

}  // namespace

std::string_view to_string(EstimatorTag tag) noexcept {
  switch (tag) {
    case EstimatorTag::rho1_equal_variance: return "rho1_equal_variance";
    case EstimatorTag::rho2_equal_means: return "rho2_equal_means";
    case EstimatorTag::proposed_x: return "proposed_x";
    case EstimatorTag::proposed_y: return "proposed_y";
    case EstimatorTag::proposed_avg: return "proposed_avg";
    case EstimatorTag::kernel: return "kernel";
  }
  return "unknown";
}

std::optional<EstimatorTag> estimator_from_string(std::string_view name) noexcept {
  for (EstimatorTag tag : all_estimator_tags) {
    if (to_string(tag) == name) return tag;
  }
  return std::nullopt;
}

Estimate estimate_rho1(const SamplePair& s) {
  const FittedPair f = fit_ml(s);
  const double d = f.mu1_hat - f.mu2_hat;
  return {EstimatorTag::rho1_equal_variance, std::exp(-d * d / (8.0 * f.pooled_var_hat)),
          s.n1(), s.n2()};
}

Estimate estimate_rho2(const SamplePair& s) {
  const FittedPair f = fit_ml(s);
  const double c = f.c_hat;
  return {EstimatorTag::rho2_equal_means, std::sqrt(2.0 * c / (1.0 + c * c)), s.n1(),
          s.n2()};
}

namespace {

struct ProposedParts {
  double x_mean;
  double y_mean;
};

ProposedParts proposed_parts(const SamplePair& s, const FittedPair& f) {
  const NormalParams f1 = f.fit1();
  const NormalParams f2 = f.fit2();
  auto lp1 = [&](double t) { return log_pdf(f1, t); };
  auto lp2 = [&](double t) { return log_pdf(f2, t); };
  return {mean_sqrt_ratio(s.x(), lp2, lp1), mean_sqrt_ratio(s.y(), lp1, lp2)};
}

double pick(const ProposedParts& p, ProposedVariant v) {
  switch (v) {
    case ProposedVariant::x_only: return p.x_mean;
    case ProposedVariant::y_only: return p.y_mean;
    case ProposedVariant::averaged: break;
  }
  return 0.5 * (p.x_mean + p.y_mean);
}

EstimatorTag tag_of(ProposedVariant v) {
  switch (v) {
    case ProposedVariant::x_only: return EstimatorTag::proposed_x;
    case ProposedVariant::y_only: return EstimatorTag::proposed_y;
    case ProposedVariant::averaged: break;
  }
  return EstimatorTag::proposed_avg;
}

}  // namespace

Estimate estimate_proposed(const SamplePair& s, ProposedVariant variant) {
  const ProposedParts parts = proposed_parts(s, fit_ml(s));
  return {tag_of(variant), pick(parts, variant), s.n1(), s.n2()};
}

double silverman_bandwidth(std::span<const double> data) {
  const std::size_t n = data.size();
  if (n < 2) {
    throw Error(ErrorCode::too_few_observations, "bandwidth needs at least 2 observations");
  }
  double mean = 0.0;
  for (double t : data) mean += t;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double t : data) ss += (t - mean) * (t - mean);
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));

  std::vector<double> sorted(data.begin(), data.end());
  std::sort(sorted.begin(), sorted.end());
  const double iqr = quantile_sorted(sorted, 0.75) - quantile_sorted(sorted, 0.25);

  double scale = sd;
  if (iqr > 0.0) scale = std::min(sd, iqr / 1.349);
  const double h = 0.9 * scale * std::pow(static_cast<double>(n), -0.2);
  if (!(h > 0.0)) {
    throw Error(ErrorCode::degenerate_sample, "kernel bandwidth is zero (constant sample)");
  }
  return h;
}

double kde_log_density(std::span<const double> data, double bandwidth, double t) noexcept {
  // log-sum-exp over the kernel terms.
  double max_term = -std::numeric_limits<double>::infinity();
  for (double xi : data) {
    const double z = (t - xi) / bandwidth;
    max_term = std::max(max_term, -0.5 * z * z);
  }
  double sum = 0.0;
  for (double xi : data) {
    const double z = (t - xi) / bandwidth;
    sum += std::exp(-0.5 * z * z - max_term);
  }
  return max_term + std::log(sum) - std::log(static_cast<double>(data.size()) * bandwidth) -
         half_log_two_pi;
}

namespace {

double kernel_value(const SamplePair& s) {
  const double h1 = silverman_bandwidth(s.x());
  const double h2 = silverman_bandwidth(s.y());
  auto lk1 = [&](double t) { return kde_log_density(s.x(), h1, t); };
  auto lk2 = [&](double t) { return kde_log_density(s.y(), h2, t); };
  return 0.5 * (mean_sqrt_ratio(s.x(), lk2, lk1) + mean_sqrt_ratio(s.y(), lk1, lk2));
}

}  // namespace

Estimate estimate_kernel(const SamplePair& s) {
  return {EstimatorTag::kernel, kernel_value(s), s.n1(), s.n2()};
}

double kernel_overlap_integral(const SamplePair& s) {
  const double h1 = silverman_bandwidth(s.x());
  const double h2 = silverman_bandwidth(s.y());
  const double pad = 6.0 * std::max(h1, h2);
  const auto [x_lo, x_hi] = std::minmax_element(s.x().begin(), s.x().end());
  const auto [y_lo, y_hi] = std::minmax_element(s.y().begin(), s.y().end());
  const double lo = std::min(*x_lo, *y_lo) - pad;
  const double hi = std::max(*x_hi, *y_hi) + pad;

  constexpr std::size_t points = kernel_grid_points;
  const double step = (hi - lo) / static_cast<double>(points - 1);
  std::vector<double> g(points);
  for (std::size_t i = 0; i < points; ++i) {
    const double t = lo + step * static_cast<double>(i);
    g[i] = std::exp(0.5 * (kde_log_density(s.x(), h1, t) + kde_log_density(s.y(), h2, t)));
  }

  // Composite Simpson needs an even number of intervals; the grid has an
  // odd count, so the last three intervals take the 3/8 rule.
  constexpr std::size_t intervals = points - 1;
  constexpr std::size_t simpson_end = intervals % 2 == 0 ? intervals : intervals - 3;
  double simpson = g[0] + g[simpson_end];
  for (std::size_t i = 1; i < simpson_end; ++i) simpson += (i % 2 == 1 ? 4.0 : 2.0) * g[i];
  double total = simpson * step / 3.0;
  if (simpson_end != intervals) {
    const std::size_t k = simpson_end;
    total += 3.0 * step / 8.0 * (g[k] + 3.0 * g[k + 1] + 3.0 * g[k + 2] + g[k + 3]);
  }
  return total;
}

std::vector<Estimate> estimate_all(const SamplePair& s) {
  const FittedPair f = fit_ml(s);
  const double d = f.mu1_hat - f.mu2_hat;
  const double c = f.c_hat;
  const ProposedParts parts = proposed_parts(s, f);
  const std::size_t n1 = s.n1();
  const std::size_t n2 = s.n2();
  return {
      {EstimatorTag::rho1_equal_variance, std::exp(-d * d / (8.0 * f.pooled_var_hat)), n1, n2},
      {EstimatorTag::rho2_equal_means, std::sqrt(2.0 * c / (1.0 + c * c)), n1, n2},
      {EstimatorTag::proposed_x, pick(parts, ProposedVariant::x_only), n1, n2},
      {EstimatorTag::proposed_y, pick(parts, ProposedVariant::y_only), n1, n2},
      {EstimatorTag::proposed_avg, pick(parts, ProposedVariant::averaged), n1, n2},
      {EstimatorTag::kernel, kernel_value(s), n1, n2},
  };
}

Estimate estimate(const SamplePair& s, EstimatorTag tag) {
  switch (tag) {
    case EstimatorTag::rho1_equal_variance: return estimate_rho1(s);
    case EstimatorTag::rho2_equal_means: return estimate_rho2(s);
    case EstimatorTag::proposed_x: return estimate_proposed(s, ProposedVariant::x_only);
    case EstimatorTag::proposed_y: return estimate_proposed(s, ProposedVariant::y_only);
    case EstimatorTag::proposed_avg: return estimate_proposed(s, ProposedVariant::averaged);
    case EstimatorTag::kernel: return estimate_kernel(s);
  }
  throw Error(ErrorCode::invalid_params, "unknown estimator tag");
}

}  // namespace matusita
