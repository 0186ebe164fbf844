// Copyright 2026 The matusita authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>
#include <set>

#include "doctest.h"
#include "matusita/distributions.hpp"
#include "matusita/errors.hpp"
#include "matusita/exact_overlap.hpp"
#include "test_support.hpp"

using namespace matusita;
using doctest::Approx;

TEST_CASE("log_pdf hand values") {
  const double half_log_2pi = 0.5 * std::log(2.0 * std::numbers::pi);
  CHECK(log_pdf({0, 1}, 0.0) == Approx(-half_log_2pi).epsilon(1e-15));
  CHECK(log_pdf({0, 1}, 0.0) == Approx(-0.918939).epsilon(1e-6));
  CHECK(log_pdf({0, 1}, 1.0) == Approx(-1.418939).epsilon(1e-6));
  // log(2 / sqrt(2 pi))
  CHECK(log_pdf({2, 0.5}, 2.0) == Approx(-0.225791).epsilon(1e-6));
}

TEST_CASE("density at the mode") {
  for (double sigma : {0.1, 1.0, 3.7}) {
    const NormalParams p(1.25, sigma);
    CHECK(pdf(p, 1.25) == Approx(1.0 / (sigma * std::sqrt(2.0 * std::numbers::pi))));
  }
}

TEST_CASE("NormalParams rejects non-positive or non-finite sigma") {
  for (double bad : {0.0, -1.0, std::nan(""), double(INFINITY)}) {
    try {
      NormalParams p(0.0, bad);
      FAIL("accepted sigma " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::invalid_params);
    }
  }
  CHECK_THROWS_AS(NormalParams(std::nan(""), 1.0), Error);
}

TEST_CASE("the density integrates to one under the quadrature oracle") {
  // rho(p, p) = integral of f.
  for (const NormalParams p : {NormalParams(0, 1), NormalParams(-3, 0.2), NormalParams(7, 9)}) {
    CHECK(std::abs(rho_quadrature(p, p, 1e-10).value - 1.0) <= 1e-8);
  }
}

TEST_CASE("sampling is a pure function of the stream key") {
  const StreamKey key{42, 3, 1, 17, 2};
  SeedStream a(key), b(key);
  const auto xa = sample({0, 1}, 5, a);
  const auto xb = sample({0, 1}, 5, b);
  CHECK(xa == xb);

  SeedStream c(StreamKey{42, 3, 1, 18, 2});
  CHECK(sample({0, 1}, 5, c) != xa);
}

TEST_CASE("location-scale is applied element-wise") {
  const StreamKey key{9, 0, 0, 0, 1};
  SeedStream s1(key), s2(key);
  const auto z = sample({0, 1}, 64, s1);
  const auto w = sample({5, 2}, 64, s2);
  for (std::size_t i = 0; i < z.size(); ++i) CHECK(w[i] == 5.0 + 2.0 * z[i]);
}

TEST_CASE("sample moments of a million variates") {
  SeedStream s(StreamKey{20240001, 0, 0, 0, 1});
  const std::size_t n = 1'000'000;
  const auto v = sample({0, 1}, n, s);
  double sum = 0, ss = 0;
  for (double t : v) sum += t;
  const double mean = sum / n;
  for (double t : v) ss += (t - mean) * (t - mean);
  const double sd = std::sqrt(ss / (n - 1));
  // 4 standard errors: SE(mean) = 1e-3, SE(sd) ~ 1/sqrt(2n)
  CHECK(std::abs(mean) < 0.004);
  CHECK(std::abs(sd - 1.0) < 4.0 / std::sqrt(2.0 * n));
}

TEST_CASE("uniforms stay inside the open unit interval") {
  SeedStream s(StreamKey{1, 2, 3, 4, 5});
  for (int i = 0; i < 100000; ++i) {
    const double u = s.next_uniform();
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
  }
}

TEST_CASE("derived seeds separate every key component") {
  std::set<std::uint64_t> seen;
  std::size_t count = 0;
  for (std::uint64_t a = 0; a < 3; ++a)
    for (std::uint64_t b = 0; b < 4; ++b)
      for (std::uint64_t c = 0; c < 4; ++c)
        for (std::uint64_t d = 0; d < 6; ++d)
          for (std::uint64_t e = 1; e <= 2; ++e) {
            seen.insert(derive_seed({a, b, c, d, e}));
            ++count;
          }
  CHECK(seen.size() == count);
  // Permuted fields must not collide.
  CHECK(derive_seed({1, 2, 0, 0, 1}) != derive_seed({1, 0, 2, 0, 1}));
}

TEST_CASE("fit_ml hand fixtures") {
  SUBCASE("per-sample and pooled") {
    const FittedPair f = fit_ml(SamplePair({0, 2}, {1, 3}));
    CHECK(f.mu1_hat == 1.0);
    CHECK(f.mu2_hat == 2.0);
    CHECK(f.var1_hat == 1.0);
    CHECK(f.var2_hat == 1.0);
    CHECK(f.pooled_var_hat == 1.0);
    CHECK(f.pooled_mu_hat == 1.5);
  }
  SUBCASE("equal-means variances") {
    const FittedPair f = fit_ml(SamplePair({-1, 1}, {-2, 2}));
    CHECK(f.pooled_mu_hat == 0.0);
    CHECK(f.eqmean_var1_hat == 1.0);
    CHECK(f.eqmean_var2_hat == 4.0);
    CHECK(f.c_hat == 0.5);
  }
  SUBCASE("constant sample") {
    try {
      fit_ml(SamplePair({3, 3}, {1, 2}));
      FAIL("no error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::degenerate_sample);
    }
  }
}

TEST_CASE("SamplePair invariants") {
  try {
    SamplePair({1.0}, {1.0, 2.0});
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::too_few_observations);
  }
  CHECK_THROWS_AS(SamplePair({1.0, NAN}, {1.0, 2.0}), Error);
}

TEST_CASE("fit_ml equivariance (property)") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> shift(-50, 50);
  std::uniform_real_distribution<double> scale(0.05, 20);
  for (int trial = 0; trial < 200; ++trial) {
    const SamplePair s = testing::random_pair(rng);
    const FittedPair f = fit_ml(s);
    CHECK(f.pooled_mu_hat >= std::min(f.mu1_hat, f.mu2_hat));
    CHECK(f.pooled_mu_hat <= std::max(f.mu1_hat, f.mu2_hat));
    CHECK(f.c_hat > 0.0);

    const double c = shift(rng);
    const FittedPair g = fit_ml(SamplePair(testing::affine(s.x(), 1, c), testing::affine(s.y(), 1, c)));
    CHECK(g.mu1_hat == Approx(f.mu1_hat + c).epsilon(1e-9));
    CHECK(g.mu2_hat == Approx(f.mu2_hat + c).epsilon(1e-9));
    CHECK(g.pooled_mu_hat == Approx(f.pooled_mu_hat + c).epsilon(1e-9));
    CHECK(g.var1_hat == Approx(f.var1_hat).epsilon(1e-7));
    CHECK(g.pooled_var_hat == Approx(f.pooled_var_hat).epsilon(1e-7));
    CHECK(g.c_hat == Approx(f.c_hat).epsilon(1e-7));

    const double k = scale(rng);
    const FittedPair h = fit_ml(SamplePair(testing::affine(s.x(), k, 0), testing::affine(s.y(), k, 0)));
    CHECK(h.var1_hat == Approx(k * k * f.var1_hat).epsilon(1e-10));
    CHECK(h.var2_hat == Approx(k * k * f.var2_hat).epsilon(1e-10));
    CHECK(h.pooled_var_hat == Approx(k * k * f.pooled_var_hat).epsilon(1e-10));
    CHECK(h.c_hat == Approx(f.c_hat).epsilon(1e-10));
  }
}
