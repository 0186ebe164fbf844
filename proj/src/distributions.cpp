// Copyright 2026 The matusita authors
// SPDX-License-Identifier: Apache-2.0

#include "matusita/distributions.hpp"

#include <cmath>
#include <algorithm>
#include <string>

#include "matusita/errors.hpp"

namespace matusita {

namespace {

constexpr double half_log_two_pi = 0.91893853320467274178032973640562;

double mean_of(std::span<const double> v) {
  double sum = 0.0;
  for (double t : v) sum += t;
  return sum / static_cast<double>(v.size());
}

double mean_square_about(std::span<const double> v, double centre) {
  double sum = 0.0;
  for (double t : v) {
    const double d = t - centre;
    sum += d * d;
  }
  return sum / static_cast<double>(v.size());
}

void check_sample(const std::vector<double>& v, const char* name) {
  if (v.size() < 2) {
    throw Error(ErrorCode::too_few_observations,
                std::string("sample ") + name + " needs at least 2 observations, got " +
                    std::to_string(v.size()));
  }
  for (double t : v) {
    if (!std::isfinite(t)) {
      throw Error(ErrorCode::invalid_params,
                  std::string("sample ") + name + " contains a non-finite value");
    }
  }
}

// splitmix64 output function (Steele, Lea & Flood 2014).
std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

NormalParams::NormalParams(double mu, double sigma) : mu_(mu), sigma_(sigma) {
  if (!std::isfinite(mu) || !std::isfinite(sigma) || !(sigma > 0.0)) {
    throw Error(ErrorCode::invalid_params,
                "normal parameters need finite mu and sigma > 0 (got mu=" +
                    std::to_string(mu) + ", sigma=" + std::to_string(sigma) + ")");
  }
}

double log_pdf(const NormalParams& p, double t) noexcept {
  const double z = (t - p.mu()) / p.sigma();
  return -std::log(p.sigma()) - half_log_two_pi - 0.5 * z * z;
}

double pdf(const NormalParams& p, double t) noexcept {
  return std::exp(log_pdf(p, t));
}

SamplePair::SamplePair(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  check_sample(x_, "x");
  check_sample(y_, "y");
}

NormalParams FittedPair::fit1() const { return {mu1_hat, std::sqrt(var1_hat)}; }
NormalParams FittedPair::fit2() const { return {mu2_hat, std::sqrt(var2_hat)}; }

FittedPair fit_ml(const SamplePair& s) {
  const auto x = s.x();
  const auto y = s.y();
  const double n1 = static_cast<double>(x.size());
  const double n2 = static_cast<double>(y.size());

  FittedPair f{};
  f.mu1_hat = mean_of(x);
  f.mu2_hat = mean_of(y);
  f.var1_hat = mean_square_about(x, f.mu1_hat);
  f.var2_hat = mean_square_about(y, f.mu2_hat);
  if (!(f.var1_hat > 0.0) || !(f.var2_hat > 0.0)) {
    throw Error(ErrorCode::degenerate_sample,
                "a sample has zero ML variance (all observations equal)");
  }
  f.pooled_var_hat = (n1 * f.var1_hat + n2 * f.var2_hat) / (n1 + n2);

  double total = 0.0;
  for (double t : x) total += t;
  for (double t : y) total += t;
  f.pooled_mu_hat = total / (n1 + n2);
  // Rounding can push the grand mean a hair outside [xbar, ybar].
  f.pooled_mu_hat = std::clamp(f.pooled_mu_hat, std::min(f.mu1_hat, f.mu2_hat),
                               std::max(f.mu1_hat, f.mu2_hat));

  f.eqmean_var1_hat = mean_square_about(x, f.pooled_mu_hat);
  f.eqmean_var2_hat = mean_square_about(y, f.pooled_mu_hat);
  f.c_hat = std::sqrt(f.eqmean_var1_hat / f.eqmean_var2_hat);
  return f;
}

// Seed derivation. Each key field is folded into a running 64-bit state:
//
//   h0 = mix64(master_seed + G)
//   h1 = mix64(h0 ^ (scenario    + 1 * G))
//   h2 = mix64(h1 ^ (size_index  + 2 * G))
//   h3 = mix64(h2 ^ (replication + 3 * G))
//   h4 = mix64(h3 ^ (population  + 4 * G))
//
// with G = 0x9e3779b97f4a7c15 and mix64 the splitmix64 finaliser. The
// per-position offsets keep permuted keys apart. mt19937_64 is then seeded
// with h4.
std::uint64_t derive_seed(const StreamKey& key) noexcept {
  constexpr std::uint64_t golden = 0x9e3779b97f4a7c15ULL;
  std::uint64_t h = mix64(key.master_seed + golden);
  h = mix64(h ^ (key.scenario + 1 * golden));
  h = mix64(h ^ (key.size_index + 2 * golden));
  h = mix64(h ^ (key.replication + 3 * golden));
  h = mix64(h ^ (key.population + 4 * golden));
  return h;
}

SeedStream::SeedStream(const StreamKey& key) : key_(key), engine_(derive_seed(key)) {}

double SeedStream::next_uniform() {
  constexpr double scale = 0x1.0p-53;
  return (static_cast<double>(engine_() >> 11) + 0.5) * scale;
}

double SeedStream::next_standard_normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * next_uniform() - 1.0;
    v = 2.0 * next_uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double factor = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * factor;
  has_spare_ = true;
  return u * factor;
}

std::vector<double> sample(const NormalParams& p, std::size_t n, SeedStream& stream) {
  std::vector<double> out(n);
  for (auto& t : out) t = p.mu() + p.sigma() * stream.next_standard_normal();
  return out;
}

}  // namespace matusita
