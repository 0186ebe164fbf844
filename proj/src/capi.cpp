// Copyright 2026 The matusita authors
// SPDX-License-Identifier: Apache-2.0

#include "matusita/matusita.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "matusita/config.hpp"
#include "matusita/errors.hpp"
#include "matusita/estimators.hpp"
#include "matusita/exact_overlap.hpp"
#include "matusita/montecarlo.hpp"
#include "matusita/report.hpp"
#include "matusita/samples_io.hpp"

struct mt_samples {
  matusita::SamplePair pair;
};

struct mt_scenario {
  matusita::ScenarioSpec spec;
  std::vector<matusita::EstimatorTag> tags;
};

struct mt_results {
  std::vector<matusita::MetricCell> cells;
};

struct mt_diff {
  matusita::DiffReport report;
};

namespace {

using namespace matusita;

thread_local std::string last_error;

mt_status code_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::invalid_params: return MT_ERR_INVALID_PARAMS;
    case ErrorCode::degenerate_sample: return MT_ERR_DEGENERATE_SAMPLE;
    case ErrorCode::quadrature_failure: return MT_ERR_QUADRATURE_FAILURE;
    case ErrorCode::empty_input: return MT_ERR_EMPTY_INPUT;
    case ErrorCode::missing_cell: return MT_ERR_MISSING_CELL;
    case ErrorCode::parse_error: return MT_ERR_PARSE;
    case ErrorCode::too_few_observations: return MT_ERR_TOO_FEW_OBSERVATIONS;
    case ErrorCode::io_error: return MT_ERR_IO;
  }
  return MT_ERR_INTERNAL;
}

// Runs body, translating exceptions into status codes.
template <class F>
mt_status guarded(F&& body) noexcept {
  try {
    last_error.clear();
    body();
    return MT_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return code_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown failure";
  }
  return MT_ERR_INTERNAL;
}

NormalParams params(mt_normal p) { return {p.mu, p.sigma}; }

EstimatorTag tag_of(mt_estimator e) {
  const auto i = static_cast<std::size_t>(e);
  if (i >= all_estimator_tags.size()) throw Error(ErrorCode::invalid_params, "unknown estimator");
  return all_estimator_tags[i];
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

#define MT_REQUIRE(p)                                        \
  do {                                                       \
    if ((p) == nullptr) {                                    \
      last_error = "null argument: " #p;                     \
      return MT_ERR_NULL_ARGUMENT;                           \
    }                                                        \
  } while (0)

extern "C" {

const char* mt_status_string(mt_status status) {
  switch (status) {
    case MT_OK: return "ok";
    case MT_ERR_INVALID_PARAMS: return "invalid parameters";
    case MT_ERR_DEGENERATE_SAMPLE: return "degenerate sample";
    case MT_ERR_QUADRATURE_FAILURE: return "quadrature failure";
    case MT_ERR_EMPTY_INPUT: return "empty input";
    case MT_ERR_MISSING_CELL: return "missing cell";
    case MT_ERR_PARSE: return "parse error";
    case MT_ERR_TOO_FEW_OBSERVATIONS: return "too few observations";
    case MT_ERR_IO: return "i/o error";
    case MT_ERR_NULL_ARGUMENT: return "null argument";
    case MT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* mt_last_error(void) { return last_error.c_str(); }
const char* mt_version(void) { return "1.0.0"; }
void mt_string_free(char* s) { std::free(s); }

const char* mt_estimator_name(mt_estimator e) {
  const auto i = static_cast<std::size_t>(e);
  if (i >= all_estimator_tags.size()) return nullptr;
  return to_string(all_estimator_tags[i]).data();
}

mt_status mt_estimator_from_name(const char* name, mt_estimator* out) {
  MT_REQUIRE(name);
  MT_REQUIRE(out);
  return guarded([&] {
    const auto tag = estimator_from_string(name);
    if (!tag) throw Error(ErrorCode::invalid_params, std::string("unknown estimator '") + name + "'");
    *out = static_cast<mt_estimator>(*tag);
  });
}

mt_status mt_rho_equal_variance(double mu1, double mu2, double sigma, double* out) {
  MT_REQUIRE(out);
  return guarded([&] { *out = rho_equal_variance(mu1, mu2, sigma).value; });
}

mt_status mt_rho_equal_means(double c, double* out) {
  MT_REQUIRE(out);
  return guarded([&] { *out = rho_equal_means(c).value; });
}

mt_status mt_rho_general(mt_normal p1, mt_normal p2, double* out) {
  MT_REQUIRE(out);
  return guarded([&] { *out = rho_general(params(p1), params(p2)).value; });
}

mt_status mt_rho_quadrature(mt_normal p1, mt_normal p2, double tol, double* out) {
  MT_REQUIRE(out);
  return guarded([&] { *out = rho_quadrature(params(p1), params(p2), tol).value; });
}

mt_status mt_samples_create(const double* x, size_t n1, const double* y, size_t n2,
                            mt_samples** out) {
  MT_REQUIRE(out);
  if (n1 > 0) MT_REQUIRE(x);
  if (n2 > 0) MT_REQUIRE(y);
  return guarded([&] {
    *out = new mt_samples{SamplePair(std::vector<double>(x, x + n1),
                                     std::vector<double>(y, y + n2))};
  });
}

mt_status mt_samples_read_files(const char* path_x, const char* path_y, mt_samples** out) {
  MT_REQUIRE(path_x);
  MT_REQUIRE(path_y);
  MT_REQUIRE(out);
  return guarded([&] { *out = new mt_samples{read_samples(path_x, path_y)}; });
}

void mt_samples_destroy(mt_samples* s) { delete s; }
size_t mt_samples_n1(const mt_samples* s) { return s ? s->pair.n1() : 0; }
size_t mt_samples_n2(const mt_samples* s) { return s ? s->pair.n2() : 0; }

mt_status mt_estimate(const mt_samples* s, mt_estimator e, double* out) {
  MT_REQUIRE(s);
  MT_REQUIRE(out);
  return guarded([&] { *out = estimate(s->pair, tag_of(e)).value; });
}

mt_status mt_estimate_all(const mt_samples* s, double* out) {
  MT_REQUIRE(s);
  MT_REQUIRE(out);
  return guarded([&] {
    const auto all = estimate_all(s->pair);
    for (std::size_t i = 0; i < all.size(); ++i) out[i] = all[i].value;
  });
}

mt_status mt_kernel_overlap_integral(const mt_samples* s, double* out) {
  MT_REQUIRE(s);
  MT_REQUIRE(out);
  return guarded([&] { *out = kernel_overlap_integral(s->pair); });
}

mt_status mt_scenario_create(mt_normal f1, mt_normal f2, size_t replications, uint64_t seed,
                             mt_scenario** out) {
  MT_REQUIRE(out);
  return guarded([&] {
    if (replications < 1) throw Error(ErrorCode::invalid_params, "replications must be >= 1");
    *out = new mt_scenario{ScenarioSpec{params(f1), params(f2), {}, replications, seed},
                           {all_estimator_tags.begin(), all_estimator_tags.end()}};
  });
}

mt_status mt_scenario_add_size(mt_scenario* sc, size_t n1, size_t n2) {
  MT_REQUIRE(sc);
  return guarded([&] {
    if (n1 < 2 || n2 < 2) throw Error(ErrorCode::invalid_params, "sample sizes must be >= 2");
    sc->spec.sizes.push_back({n1, n2});
  });
}

mt_status mt_scenario_set_estimators(mt_scenario* sc, const mt_estimator* tags, size_t count) {
  MT_REQUIRE(sc);
  MT_REQUIRE(tags);
  return guarded([&] {
    if (count == 0) throw Error(ErrorCode::empty_input, "no estimators given");
    std::vector<EstimatorTag> chosen;
    for (size_t i = 0; i < count; ++i) chosen.push_back(tag_of(tags[i]));
    sc->tags = std::move(chosen);
  });
}

mt_status mt_scenario_set_seed(mt_scenario* sc, uint64_t seed) {
  MT_REQUIRE(sc);
  sc->spec.master_seed = seed;
  return MT_OK;
}

mt_status mt_scenario_load_config(const char* path, mt_scenario** out) {
  MT_REQUIRE(path);
  MT_REQUIRE(out);
  return guarded([&] {
    ScenarioConfig cfg = load_scenario_config(path);
    *out = new mt_scenario{std::move(cfg.spec), std::move(cfg.tags)};
  });
}

uint64_t mt_scenario_seed(const mt_scenario* sc) { return sc ? sc->spec.master_seed : 0; }
void mt_scenario_destroy(mt_scenario* sc) { delete sc; }

mt_status mt_simulate(const mt_scenario* sc, unsigned workers, mt_results** out) {
  MT_REQUIRE(sc);
  MT_REQUIRE(out);
  return guarded([&] { *out = new mt_results{run_scenario(sc->spec, sc->tags, workers)}; });
}

mt_status mt_reproduce(uint64_t seed, size_t replications, unsigned workers, mt_results** out) {
  MT_REQUIRE(out);
  return guarded([&] {
    if (replications < 1) throw Error(ErrorCode::invalid_params, "replications must be >= 1");
    *out = new mt_results{run_study_grid(seed, replications, workers)};
  });
}

size_t mt_results_count(const mt_results* r) { return r ? r->cells.size() : 0; }

mt_status mt_results_get(const mt_results* r, size_t index, mt_metric_cell* out) {
  MT_REQUIRE(r);
  MT_REQUIRE(out);
  return guarded([&] {
    if (index >= r->cells.size()) throw Error(ErrorCode::invalid_params, "cell index out of range");
    const MetricCell& c = r->cells[index];
    *out = mt_metric_cell{c.table_id.c_str(),
                          c.scenario,
                          {c.f1.mu(), c.f1.sigma()},
                          {c.f2.mu(), c.f2.sigma()},
                          static_cast<mt_estimator>(c.tag),
                          c.n1,
                          c.n2,
                          c.exact_rho,
                          c.mean_estimate,
                          c.rb,
                          c.rmse_around_truth,
                          c.rmse_around_mean,
                          c.failures};
  });
}

mt_status mt_results_render(const mt_results* r, mt_format format, char** out) {
  MT_REQUIRE(r);
  MT_REQUIRE(out);
  return guarded([&] {
    *out = dup_string(render_table(r->cells, format == MT_FORMAT_CSV ? TableFormat::csv
                                                                     : TableFormat::text));
  });
}

mt_status mt_results_parse_csv(const char* csv, mt_results** out) {
  MT_REQUIRE(csv);
  MT_REQUIRE(out);
  return guarded([&] { *out = new mt_results{parse_table_csv(csv)}; });
}

void mt_results_destroy(mt_results* r) { delete r; }

mt_status mt_diff_golden(const mt_results* r, size_t replications, mt_diff** out) {
  MT_REQUIRE(r);
  MT_REQUIRE(out);
  return guarded([&] {
    *out = new mt_diff{diff_golden(r->cells, DiffTolerance::calibrated(replications))};
  });
}

mt_status mt_diff_golden_fixed(const mt_results* r, double tol_rb, double tol_rmse,
                               mt_diff** out) {
  MT_REQUIRE(r);
  MT_REQUIRE(out);
  return guarded([&] {
    *out = new mt_diff{diff_golden(r->cells, DiffTolerance::fixed(tol_rb, tol_rmse))};
  });
}

mt_status mt_diff_summary_get(const mt_diff* d, mt_diff_summary* out) {
  MT_REQUIRE(d);
  MT_REQUIRE(out);
  const DiffReport& r = d->report;
  *out = mt_diff_summary{r.checked, r.rb_passed, r.rmse_passed, r.passed,
                         r.any_systematic() ? 1 : 0};
  return MT_OK;
}

mt_status mt_diff_render(const mt_diff* d, mt_format format, char** out) {
  MT_REQUIRE(d);
  MT_REQUIRE(out);
  return guarded([&] {
    *out = dup_string(format == MT_FORMAT_CSV ? render_diff_csv(d->report)
                                              : render_diff_text(d->report));
  });
}

void mt_diff_destroy(mt_diff* d) { delete d; }

mt_status mt_profile_csv(mt_normal p1, mt_normal p2, size_t points, char** out) {
  MT_REQUIRE(out);
  return guarded([&] {
    *out = dup_string(render_profile_csv(density_profile(params(p1), params(p2), points)));
  });
}

}  // extern "C"
