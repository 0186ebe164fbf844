// Copyright 2026 The matusita authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace matusita {

/// One normal population, parameterised by mean and standard deviation.
///
/// The standard deviation (not the variance) is stored so that every
/// boundary of the library speaks one convention.
class NormalParams {
 public:
  /// Throws Error(invalid_params) unless sigma > 0 and both values are finite.
  NormalParams(double mu, double sigma);

  double mu() const noexcept { return mu_; }
  double sigma() const noexcept { return sigma_; }
  double variance() const noexcept { return sigma_ * sigma_; }

  friend bool operator==(const NormalParams&, const NormalParams&) = default;

 private:
  double mu_;
  double sigma_;
};

double log_pdf(const NormalParams& p, double t) noexcept;
double pdf(const NormalParams& p, double t) noexcept;

/// Two independent observation sequences. Both must hold at least two
/// finite values.
class SamplePair {
 public:
  SamplePair(std::vector<double> x, std::vector<double> y);

  std::span<const double> x() const noexcept { return x_; }
  std::span<const double> y() const noexcept { return y_; }
  std::size_t n1() const noexcept { return x_.size(); }
  std::size_t n2() const noexcept { return y_.size(); }

  /// Same pair with the roles of the two samples exchanged.
  SamplePair swapped() const { return SamplePair(y_, x_); }

 private:
  std::vector<double> x_;
  std::vector<double> y_;
};

/// Maximum-likelihood quantities for a SamplePair.
struct FittedPair {
  double mu1_hat;         // sample mean of x
  double mu2_hat;         // sample mean of y
  double var1_hat;        // divisor-n1 variance about mu1_hat
  double var2_hat;        // divisor-n2 variance about mu2_hat
  double pooled_mu_hat;   // grand mean of both samples
  double pooled_var_hat;  // within-sample sum of squares over n1 + n2
  double eqmean_var1_hat; // divisor-n1 variance of x about pooled_mu_hat
  double eqmean_var2_hat; // divisor-n2 variance of y about pooled_mu_hat
  double c_hat;           // sqrt(eqmean_var1_hat / eqmean_var2_hat)

  NormalParams fit1() const;
  NormalParams fit2() const;
};

/// Throws Error(degenerate_sample) when either sample is constant.
FittedPair fit_ml(const SamplePair& s);

/// Identity of one pseudo-random stream. Two streams with equal keys
/// produce bit-identical variates.
struct StreamKey {
  std::uint64_t master_seed = 0;
  std::uint64_t scenario = 0;
  std::uint64_t size_index = 0;
  std::uint64_t replication = 0;
  std::uint64_t population = 0;

  friend bool operator==(const StreamKey&, const StreamKey&) = default;
};

/// splitmix64 finaliser chained over the key fields; see distributions.cpp.
std::uint64_t derive_seed(const StreamKey& key) noexcept;

/// Deterministic standard-normal source: mt19937_64 seeded from the key,
/// 53-bit uniforms, Marsaglia polar transform.
class SeedStream {
 public:
  explicit SeedStream(const StreamKey& key);

  const StreamKey& key() const noexcept { return key_; }

  /// Uniform on the open interval (0, 1).
  double next_uniform();
  double next_standard_normal();

 private:
  StreamKey key_;
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// n variates of p, computed element-wise as mu + sigma * z.
std::vector<double> sample(const NormalParams& p, std::size_t n,
                           SeedStream& stream);

}  // namespace matusita
