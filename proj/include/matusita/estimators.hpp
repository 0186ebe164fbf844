// Copyright 2026 The matusita authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "matusita/distributions.hpp"

namespace matusita {

enum class EstimatorTag {
  rho1_equal_variance,
  rho2_equal_means,
  proposed_x,
  proposed_y,
  proposed_avg,
  kernel,
};

/// All tags, in the order estimate_all() reports them.
inline constexpr std::array<EstimatorTag, 6> all_estimator_tags = {
    EstimatorTag::rho1_equal_variance, EstimatorTag::rho2_equal_means,
    EstimatorTag::proposed_x,          EstimatorTag::proposed_y,
    EstimatorTag::proposed_avg,        EstimatorTag::kernel,
};

std::string_view to_string(EstimatorTag tag) noexcept;
std::optional<EstimatorTag> estimator_from_string(std::string_view name) noexcept;

struct Estimate {
  EstimatorTag tag;
  double value;
  std::size_t n1;
  std::size_t n2;
};

enum class ProposedVariant { x_only, y_only, averaged };

/// exp(-(xbar - ybar)^2 / (8 S^2)), S^2 pooled with divisor n1 + n2.
Estimate estimate_rho1(const SamplePair& s);

/// sqrt(2C / (1 + C^2)), C from variances about the pooled mean.
Estimate estimate_rho2(const SamplePair& s);

/// Mean of sqrt(f2_hat / f1_hat) over x, of sqrt(f1_hat / f2_hat) over y,
/// or the average of the two; f1_hat, f2_hat are per-sample ML normal fits.
Estimate estimate_proposed(const SamplePair& s, ProposedVariant variant);

/// Nonparametric counterpart of the averaged proposed estimator: the same
/// two sample means of square-root density ratios, with Gaussian-kernel
/// density estimates (Silverman bandwidths) in place of the normal fits.
Estimate estimate_kernel(const SamplePair& s);

/// Six estimates in all_estimator_tags order.
std::vector<Estimate> estimate_all(const SamplePair& s);

Estimate estimate(const SamplePair& s, EstimatorTag tag);

/// 0.9 * min(sd, IQR / 1.349) * n^(-1/5). sd uses divisor n - 1 and the
/// quartiles are linearly interpolated. A zero IQR falls back to sd.
/// Throws Error(degenerate_sample) when the bandwidth is zero.
double silverman_bandwidth(std::span<const double> data);

/// log of the Gaussian-kernel density estimate of `data` at t.
double kde_log_density(std::span<const double> data, double bandwidth,
                       double t) noexcept;

inline constexpr std::size_t kernel_grid_points = 2048;

/// Integral of sqrt(f1_kde f2_kde) on kernel_grid_points equally spaced
/// points over [min(data) - 6 hmax, max(data) + 6 hmax], composite Simpson
/// with a closing 3/8 panel.
double kernel_overlap_integral(const SamplePair& s);

}  // namespace matusita
