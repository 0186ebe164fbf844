// Copyright 2026 The matusita authors
// SPDX-License-Identifier: Apache-2.0

#include "matusita/exact_overlap.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "matusita/errors.hpp"

namespace matusita {

const char* to_string(ExactMethod m) noexcept {
  switch (m) {
    case ExactMethod::equal_variance_form: return "equal_variance_form";
    case ExactMethod::equal_means_form: return "equal_means_form";
    case ExactMethod::general_form: return "general_form";
    case ExactMethod::quadrature: return "quadrature";
  }
  return "unknown";
}

ExactRho rho_equal_variance(double mu1, double mu2, double sigma) {
  if (!std::isfinite(mu1) || !std::isfinite(mu2) || !std::isfinite(sigma) ||
      !(sigma > 0.0)) {
    throw Error(ErrorCode::invalid_params, "equal-variance rho needs sigma > 0");
  }
  const double d = mu1 - mu2;
  return {std::exp(-d * d / (8.0 * sigma * sigma)), ExactMethod::equal_variance_form};
}

ExactRho rho_equal_means(double c) {
  if (!std::isfinite(c) || !(c > 0.0)) {
    throw Error(ErrorCode::invalid_params, "equal-means rho needs C > 0");
  }
  return {std::sqrt(2.0 * c / (1.0 + c * c)), ExactMethod::equal_means_form};
}

ExactRho rho_general(const NormalParams& p1, const NormalParams& p2) {
  const double s1 = p1.sigma();
  const double s2 = p2.sigma();
  const double sum_var = s1 * s1 + s2 * s2;
  const double d = p1.mu() - p2.mu();
  const double log_rho = 0.5 * std::log(2.0 * s1 * s2 / sum_var) - d * d / (4.0 * sum_var);
  return {std::exp(log_rho), ExactMethod::general_form};
}

namespace {

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1] (QUADPACK qk15).
constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;

  bool operator<(const Panel& other) const { return error < other.error; }
};

template <class F>
Panel gk15(const F& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(centre);
  double kronrod = fc * wgk[7];
  double gauss = fc * wg[3];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * xgk[j];
    const double pair = f(centre - dx) + f(centre + dx);
    kronrod += wgk[j] * pair;
    if (j % 2 == 1) gauss += wg[j / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

ExactRho rho_quadrature(const NormalParams& p1, const NormalParams& p2, double tol) {
  if (!(tol > 0.0) || tol > 1e-4) {
    throw Error(ErrorCode::invalid_params, "quadrature tolerance must lie in (0, 1e-4]");
  }
  const double lo = std::min(p1.mu() - 10.0 * p1.sigma(), p2.mu() - 10.0 * p2.sigma());
  const double hi = std::max(p1.mu() + 10.0 * p1.sigma(), p2.mu() + 10.0 * p2.sigma());

  auto integrand = [&](double t) {
    return std::exp(0.5 * (log_pdf(p1, t) + log_pdf(p2, t)));
  };

  // The integrand can be a narrow spike inside a very wide window, so the
  // initial partition is seeded with breakpoints around both means and
  // around the peak of sqrt(f1 f2) itself.
  const double w1 = 1.0 / p1.variance();
  const double w2 = 1.0 / p2.variance();
  const double peak = (w1 * p1.mu() + w2 * p2.mu()) / (w1 + w2);
  const double peak_sd = std::sqrt(2.0 / (w1 + w2));
  std::vector<double> breaks{lo, hi};
  for (double k : {0.0, 1.0, 2.0, 4.0, 8.0}) {
    for (double sign : {-1.0, 1.0}) {
      for (auto [c, s] : {std::pair{p1.mu(), p1.sigma()}, std::pair{p2.mu(), p2.sigma()},
                          std::pair{peak, peak_sd}}) {
        const double t = c + sign * k * s;
        if (t > lo && t < hi) breaks.push_back(t);
      }
    }
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  std::priority_queue<Panel> panels;
  double total = 0.0;
  double error = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    Panel p = gk15(integrand, breaks[i], breaks[i + 1]);
    total += p.value;
    error += p.error;
    panels.push(p);
  }

  constexpr int max_subdivisions = 20000;
  for (int it = 0; it < max_subdivisions && error > tol; ++it) {
    const Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;
    const Panel left = gk15(integrand, worst.a, mid);
    const Panel right = gk15(integrand, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }

  // Recompute the sums from the panels; the running totals drift.
  total = 0.0;
  error = 0.0;
  while (!panels.empty()) {
    total += panels.top().value;
    error += panels.top().error;
    panels.pop();
  }
  if (!(error <= tol)) {
    throw Error(ErrorCode::quadrature_failure,
                "quadrature error estimate " + std::to_string(error) +
                    " exceeds tolerance " + std::to_string(tol));
  }
  return {total, ExactMethod::quadrature};
}

}  // namespace matusita
