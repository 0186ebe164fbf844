// Copyright 2026 The matusita authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <vector>

#include "doctest.h"
#include "matusita/errors.hpp"
#include "matusita/exact_overlap.hpp"
#include "matusita/montecarlo.hpp"

using namespace matusita;

namespace {

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

bool same(const MetricCell& a, const MetricCell& b) {
  return a.table_id == b.table_id && a.scenario == b.scenario && a.f1 == b.f1 && a.f2 == b.f2 &&
         a.tag == b.tag && a.n1 == b.n1 && a.n2 == b.n2 && a.exact_rho == b.exact_rho &&
         a.rb == b.rb && a.rmse_around_truth == b.rmse_around_truth &&
         a.rmse_around_mean == b.rmse_around_mean && a.mean_estimate == b.mean_estimate &&
         a.failures == b.failures;
}

constexpr EstimatorTag parametric[] = {EstimatorTag::rho1_equal_variance,
                                       EstimatorTag::rho2_equal_means, EstimatorTag::proposed_x,
                                       EstimatorTag::proposed_y, EstimatorTag::proposed_avg};

}  // namespace

TEST_CASE("compute_metrics examples") {
  std::vector<double> a{1.0, 1.0};
  Metrics m = compute_metrics(a, 1.0);
  CHECK(m.rb == 0.0);
  CHECK(m.rmse_around_mean == 0.0);
  CHECK(m.rmse_around_truth == 0.0);

  // mean 0.9; deviations about the mean +-0.1; about the truth -0.2 and 0
  std::vector<double> b{0.8, 1.0};
  m = compute_metrics(b, 1.0);
  CHECK(near(m.rb, -0.1, 1e-15));
  CHECK(near(m.rmse_around_mean, 0.1, 1e-15));
  CHECK(near(m.rmse_around_truth, std::sqrt(0.02), 1e-15));
  CHECK(near(m.rmse_around_truth, 0.141421, 1e-6));
  CHECK(near(m.mean, 0.9, 1e-15));

  std::vector<double> c{0.9, 1.1};
  m = compute_metrics(c, 1.0);
  CHECK(near(m.rb, 0.0, 1e-15));
  CHECK(near(m.rmse_around_mean, 0.1, 1e-15));
  CHECK(near(m.rmse_around_truth, 0.1, 1e-15));

  // relative scaling: halving the truth and the estimates leaves rb alone
  std::vector<double> d{0.4, 0.5};
  m = compute_metrics(d, 0.5);
  CHECK(near(m.rb, -0.1, 1e-15));
  CHECK(near(m.rmse_around_truth, std::sqrt(0.02), 1e-15));
}

TEST_CASE("compute_metrics errors") {
  try {
    compute_metrics(std::vector<double>{}, 1.0);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::empty_input);
  }
  CHECK_THROWS_AS(compute_metrics(std::vector<double>{0.5}, 0.0), Error);
}

TEST_CASE("scenario validation") {
  ScenarioSpec s{{0, 1}, {0, 1}, {{10, 10}}, 5, 1};
  CHECK_NOTHROW(s.validate());
  auto expect_invalid = [](const ScenarioSpec& bad) {
    try {
      bad.validate();
      FAIL("no error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::invalid_params);
    }
  };
  ScenarioSpec r0 = s;
  r0.replications = 0;
  expect_invalid(r0);
  ScenarioSpec none = s;
  none.sizes.clear();
  expect_invalid(none);
  ScenarioSpec small = s;
  small.sizes = {{10, 10}, {1, 5}};
  expect_invalid(small);
  CHECK_THROWS_AS(run_scenario(small, parametric), Error);
}

TEST_CASE("single replication") {
  const ScenarioSpec s{{0, 1}, {0, 1}, {{10, 10}}, 1, default_seed};
  const EstimatorTag tag[] = {EstimatorTag::rho1_equal_variance};
  const auto cells = run_scenario(s, tag, 1);
  REQUIRE(cells.size() == 1);
  const MetricCell& c = cells[0];
  CHECK(c.exact_rho == 1.0);
  CHECK(c.rb == c.mean_estimate - 1.0);
  CHECK(c.rmse_around_mean == 0.0);
  CHECK(c.failures == 0);
  CHECK(c.mean_estimate <= 1.0);
}

TEST_CASE("cell layout: sizes outermost, tags in request order") {
  const ScenarioSpec s{{0, 1}, {1, 2}, {{10, 10}, {20, 30}}, 4, 3};
  const EstimatorTag tags[] = {EstimatorTag::kernel, EstimatorTag::rho1_equal_variance};
  const auto cells = run_scenario(s, tags, 1);
  REQUIRE(cells.size() == 4);
  CHECK(cells[0].n1 == 10);
  CHECK(cells[0].tag == EstimatorTag::kernel);
  CHECK(cells[1].tag == EstimatorTag::rho1_equal_variance);
  CHECK(cells[2].n1 == 20);
  CHECK(cells[3].n2 == 30);
  for (const auto& c : cells) CHECK(near(c.exact_rho, rho_general({0, 1}, {1, 2}).value, 0));
}

TEST_CASE("worker count never changes the output") {
  const ScenarioSpec s{{0, 1}, {2.5, 4}, {{10, 10}, {30, 30}}, 60, 11};
  const auto one = run_scenario(s, all_estimator_tags, 1);
  const auto eight = run_scenario(s, all_estimator_tags, 8);
  const auto three = run_scenario(s, all_estimator_tags, 3);
  REQUIRE(one.size() == eight.size());
  REQUIRE(one.size() == three.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(same(one[i], eight[i]));
    CHECK(same(one[i], three[i]));
  }
  // a single tag sees the same samples as the full set
  const EstimatorTag only[] = {EstimatorTag::proposed_avg};
  const auto alone = run_scenario(s, only, 2);
  CHECK(alone[0].mean_estimate == one[4].mean_estimate);
  CHECK(alone[1].mean_estimate == one[10].mean_estimate);
}

TEST_CASE("seeds separate the streams") {
  ScenarioSpec s{{0, 1}, {0, 1.5}, {{10, 10}}, 20, 1};
  const EstimatorTag tag[] = {EstimatorTag::proposed_avg};
  const double a = run_scenario(s, tag, 1)[0].mean_estimate;
  s.master_seed = 2;
  CHECK(run_scenario(s, tag, 1)[0].mean_estimate != a);
}

TEST_CASE("published study grid") {
  const auto grid = study_grid(default_seed);
  REQUIRE(grid.size() == 9);
  const std::vector<SizePair> sizes{{10, 10}, {20, 30}, {30, 30}, {100, 200}};
  for (const auto& s : grid) {
    CHECK(s.sizes == sizes);
    CHECK(s.replications == 1000);
    CHECK(s.master_seed == default_seed);
    CHECK(s.f1 == NormalParams(0, 1));
  }
  CHECK(grid[0].table_id == "T2");
  CHECK(grid[3].table_id == "T3");
  CHECK(grid[8].table_id == "T4");
  CHECK(near(rho_general(grid[2].f1, grid[2].f2).value, 0.44499, 5e-6));
  CHECK(near(rho_general(grid[8].f1, grid[8].f2).value, 0.25626, 5e-6));
  CHECK(study_grid(5, 200)[4].replications == 200);
}

TEST_CASE("proposed estimator bias at (100,200) for N(0,1.5)") {
  // published relative bias -0.0027
  const ScenarioSpec s{{0, 1}, {0, 1.5}, {{100, 200}}, 1000, default_seed};
  const EstimatorTag tag[] = {EstimatorTag::proposed_avg};
  const auto c = run_scenario(s, tag, 0);
  CHECK(near(c[0].rb, -0.0027, 0.005));
}

TEST_CASE("metric identities on every cell (property)") {
  const auto cells = run_study_grid(default_seed, 100, 0);
  CHECK(cells.size() == 9 * 4 * 6);
  for (const auto& c : cells) {
    const double t2 = c.rmse_around_truth * c.rmse_around_truth;
    const double m2 = c.rmse_around_mean * c.rmse_around_mean;
    CHECK(near(t2, m2 + c.rb * c.rb, 1e-10));
    CHECK(t2 >= c.rb * c.rb - 1e-12);
    CHECK(c.failures == 0);
  }
}

TEST_CASE("seed stability at R = 1000 (property)") {
  std::vector<MetricCell> a, b;
  for (const auto& spec : study_grid(101)) {
    auto r = run_scenario(spec, parametric, 0);
    a.insert(a.end(), r.begin(), r.end());
  }
  for (const auto& spec : study_grid(202)) {
    auto r = run_scenario(spec, parametric, 0);
    b.insert(b.end(), r.begin(), r.end());
  }
  REQUIRE(a.size() == b.size());
  std::size_t stable = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double bound = 6 * a[i].rmse_around_mean / std::sqrt(1000.0);
    if (std::abs(a[i].rb - b[i].rb) < bound) ++stable;
  }
  INFO(stable << " of " << a.size() << " cells stable");
  CHECK(static_cast<double>(stable) >= 0.95 * static_cast<double>(a.size()));
}
