// Copyright 2026 The matusita authors
// SPDX-License-Identifier: Apache-2.0

#include "matusita/report.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <tuple>

#include "format.hpp"
#include "matusita/errors.hpp"
#include "matusita/exact_overlap.hpp"

namespace matusita {

using detail::fixed;
using detail::shortest;

namespace {

std::string params_label(const NormalParams& p) {
  return "N(" + shortest(p.mu()) + ", " + shortest(p.sigma()) + ")";
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Tables

std::string render_table(std::span<const MetricCell> cells, TableFormat format) {
  if (cells.empty()) throw Error(ErrorCode::empty_input, "no metric cells to render");

  std::ostringstream out;
  if (format == TableFormat::csv) {
    out << metric_csv_header << '\n';
    for (const MetricCell& c : cells) {
      out << c.table_id << ',' << c.scenario << ',' << shortest(c.f1.mu()) << ','
          << shortest(c.f1.sigma()) << ',' << shortest(c.f2.mu()) << ','
          << shortest(c.f2.sigma()) << ',' << c.n1 << ',' << c.n2 << ',' << to_string(c.tag)
          << ',' << fixed(c.exact_rho, 6) << ',' << fixed(c.mean_estimate, 6) << ','
          << fixed(c.rb, 6) << ',' << fixed(c.rmse_around_truth, 6) << ','
          << fixed(c.rmse_around_mean, 6) << ',' << c.failures << '\n';
    }
    return out.str();
  }

  // Text: one block per (table, scenario), in order of first appearance.
  std::size_t i = 0;
  while (i < cells.size()) {
    std::size_t end = i;
    while (end < cells.size() && cells[end].table_id == cells[i].table_id &&
           cells[end].scenario == cells[i].scenario) {
      ++end;
    }
    const auto block = cells.subspan(i, end - i);
    std::vector<EstimatorTag> tags;
    std::vector<SizePair> sizes;
    for (const MetricCell& c : block) {
      if (std::find(tags.begin(), tags.end(), c.tag) == tags.end()) tags.push_back(c.tag);
      const SizePair sz{c.n1, c.n2};
      if (std::find(sizes.begin(), sizes.end(), sz) == sizes.end()) sizes.push_back(sz);
    }

    const MetricCell& head = block.front();
    out << head.table_id << " scenario " << head.scenario << ": " << params_label(head.f1)
        << " vs " << params_label(head.f2) << "   exact rho = " << fixed(head.exact_rho, 4)
        << '\n';
    char line[256];
    std::snprintf(line, sizeof line, "%-10s %-5s", "(n1,n2)", "");
    out << line;
    for (EstimatorTag t : tags) {
      std::snprintf(line, sizeof line, " %20s", std::string(to_string(t)).c_str());
      out << line;
    }
    out << '\n';
    for (const SizePair& sz : sizes) {
      const std::string label = "(" + std::to_string(sz.n1) + "," + std::to_string(sz.n2) + ")";
      for (int row = 0; row < 2; ++row) {
        std::snprintf(line, sizeof line, "%-10s %-5s", row == 0 ? label.c_str() : "",
                      row == 0 ? "RB" : "RMSE");
        out << line;
        for (EstimatorTag t : tags) {
          auto it = std::find_if(block.begin(), block.end(), [&](const MetricCell& c) {
            return c.tag == t && c.n1 == sz.n1 && c.n2 == sz.n2;
          });
          std::string v = "-";
          if (it != block.end()) v = fixed(row == 0 ? it->rb : it->rmse_around_truth, 4);
          std::snprintf(line, sizeof line, " %20s", v.c_str());
          out << line;
        }
        out << '\n';
      }
    }
    out << '\n';
    i = end;
  }
  return out.str();
}

std::vector<MetricCell> parse_table_csv(std::string_view csv) {
  std::vector<MetricCell> cells;
  std::size_t line_no = 0;
  bool saw_header = false;
  while (!csv.empty()) {
    const auto nl = csv.find('\n');
    std::string_view line = csv.substr(0, nl);
    csv = nl == std::string_view::npos ? std::string_view{} : csv.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!saw_header) {
      if (line != metric_csv_header) {
        throw ParseError(line_no, "line " + std::to_string(line_no) +
                                      ": expected the metric csv header");
      }
      saw_header = true;
      continue;
    }
    const auto f = split(line, ',');
    auto bad = [&](const std::string& why) {
      return ParseError(line_no, "line " + std::to_string(line_no) + ": " + why);
    };
    if (f.size() != 15) throw bad("expected 15 fields, got " + std::to_string(f.size()));

    unsigned scenario = 0;
    std::size_t n1 = 0, n2 = 0, failures = 0;
    // mu1 sigma1 mu2 sigma2 exact_rho mean_estimate rb rmse_truth rmse_mean
    double num[9];
    constexpr std::size_t num_fields[9] = {2, 3, 4, 5, 9, 10, 11, 12, 13};
    for (std::size_t k = 0; k < 9; ++k) {
      if (!detail::parse_double(f[num_fields[k]], num[k])) {
        throw bad("field " + std::to_string(num_fields[k] + 1) + " is not a number");
      }
    }
    if (!detail::parse_int(f[1], scenario) || !detail::parse_int(f[6], n1) ||
        !detail::parse_int(f[7], n2) || !detail::parse_int(f[14], failures)) {
      throw bad("malformed integer field");
    }
    const auto tag = estimator_from_string(f[8]);
    if (!tag) throw bad("unknown estimator '" + std::string(f[8]) + "'");
    try {
      cells.push_back(MetricCell{std::string(f[0]), scenario, NormalParams(num[0], num[1]),
                                 NormalParams(num[2], num[3]), *tag, n1, n2, num[4], num[6],
                                 num[7], num[8], num[5], failures});
    } catch (const Error& e) {
      throw bad(e.what());
    }
  }
  if (!saw_header) throw ParseError(0, "empty metric csv");
  return cells;
}

// ---------------------------------------------------------------------------
// Golden diff

DiffTolerance DiffTolerance::calibrated(std::size_t replications) {
  if (replications == 0) throw Error(ErrorCode::invalid_params, "replications must be >= 1");
  return {0.03, 4.0, 0.05, 0.15,
          std::sqrt(static_cast<double>(study_replications) / static_cast<double>(replications))};
}

DiffTolerance DiffTolerance::fixed(double tol_rb, double tol_rmse) {
  if (!(tol_rb > 0.0) || !(tol_rmse > 0.0)) {
    throw Error(ErrorCode::invalid_params, "tolerances must be positive");
  }
  return {tol_rb, 0.0, tol_rmse, 0.0, 1.0};
}

double DiffTolerance::rb_tol(double rmse_golden) const {
  return scale * std::max(rb_floor, rb_se_multiplier * rmse_golden /
                                        std::sqrt(static_cast<double>(study_replications)));
}

double DiffTolerance::rmse_tol(double rmse_golden) const {
  return scale * std::max(rmse_floor, rmse_fraction * rmse_golden);
}

std::string_view to_string(RmseMatch m) noexcept {
  switch (m) {
    case RmseMatch::none: return "none";
    case RmseMatch::around_truth: return "truth";
    case RmseMatch::around_mean: return "mean";
    case RmseMatch::both: return "both";
  }
  return "none";
}

bool DiffReport::any_systematic() const noexcept {
  return std::any_of(columns.begin(), columns.end(), [](const ColumnSummary& c) {
    return c.rb_systematic || c.rmse_systematic;
  });
}

DiffReport diff_golden(std::span<const MetricCell> cells, const DiffTolerance& tol) {
  using Key = std::tuple<std::string_view, unsigned, std::size_t, std::size_t, EstimatorTag>;
  std::map<Key, const MetricCell*> index;
  for (const MetricCell& c : cells) {
    index.emplace(Key{c.table_id, c.scenario, c.n1, c.n2, c.tag}, &c);
  }

  DiffReport report;
  std::vector<std::string> missing;
  for (const GoldenCell& g : golden_cells()) {
    auto it = index.find(Key{g.table_id, g.scenario, g.n1, g.n2, g.tag});
    if (it == index.end()) {
      missing.push_back(std::string(g.table_id) + "/" + std::to_string(g.scenario) + "/(" +
                        std::to_string(g.n1) + "," + std::to_string(g.n2) + ")/" +
                        std::string(g.column));
      continue;
    }
    const MetricCell& m = *it->second;
    DiffCell d{};
    d.golden = &g;
    d.rb = m.rb;
    d.rmse_around_truth = m.rmse_around_truth;
    d.rmse_around_mean = m.rmse_around_mean;
    d.dev_rb = std::abs(m.rb - g.rb);
    d.dev_rmse_truth = std::abs(m.rmse_around_truth - g.rmse);
    d.dev_rmse_mean = std::abs(m.rmse_around_mean - g.rmse);
    d.tol_rb = tol.rb_tol(g.rmse);
    d.tol_rmse = tol.rmse_tol(g.rmse);
    d.rb_pass = d.dev_rb <= d.tol_rb;
    const bool truth_ok = d.dev_rmse_truth <= d.tol_rmse;
    const bool mean_ok = d.dev_rmse_mean <= d.tol_rmse;
    d.rmse_match = truth_ok && mean_ok ? RmseMatch::both
                   : truth_ok          ? RmseMatch::around_truth
                   : mean_ok           ? RmseMatch::around_mean
                                       : RmseMatch::none;
    d.rmse_pass = truth_ok || mean_ok;
    d.closer_to_truth = d.dev_rmse_truth <= d.dev_rmse_mean;
    d.informational = g.tag == EstimatorTag::kernel;
    report.cells.push_back(d);
  }
  if (!missing.empty()) {
    std::string msg = std::to_string(missing.size()) + " golden cells have no reproduced value:";
    for (const auto& m : missing) msg += " " + m;
    throw Error(ErrorCode::missing_cell, msg);
  }

  for (const DiffCell& d : report.cells) {
    const GoldenCell& g = *d.golden;

    auto table = std::find_if(report.tables.begin(), report.tables.end(),
                              [&](const TableRmseSummary& t) { return t.table_id == g.table_id; });
    if (table == report.tables.end()) {
      report.tables.push_back(TableRmseSummary{g.table_id});
      table = std::prev(report.tables.end());
    }

    if (d.informational) continue;

    ++table->cells;
    (d.closer_to_truth ? table->closer_to_truth : table->closer_to_mean) += 1;
    if (d.rmse_match == RmseMatch::around_truth || d.rmse_match == RmseMatch::both)
      ++table->matched_truth;
    if (d.rmse_match == RmseMatch::around_mean || d.rmse_match == RmseMatch::both)
      ++table->matched_mean;

    auto col = std::find_if(report.columns.begin(), report.columns.end(),
                            [&](const ColumnSummary& c) {
                              return c.table_id == g.table_id && c.column == g.column;
                            });
    if (col == report.columns.end()) {
      report.columns.push_back(ColumnSummary{g.table_id, g.column, g.tag});
      col = std::prev(report.columns.end());
    }
    ++col->cells;
    col->rb_pass += d.rb_pass ? 1 : 0;
    col->rmse_pass += d.rmse_pass ? 1 : 0;

    ++report.checked;
    report.rb_passed += d.rb_pass ? 1 : 0;
    report.rmse_passed += d.rmse_pass ? 1 : 0;
    report.passed += d.pass() ? 1 : 0;
  }
  for (ColumnSummary& c : report.columns) {
    c.rb_systematic = 2 * (c.cells - c.rb_pass) > c.cells;
    c.rmse_systematic = 2 * (c.cells - c.rmse_pass) > c.cells;
  }
  return report;
}

std::vector<MetricCell> golden_as_cells() {
  std::vector<MetricCell> out;
  for (const GoldenCell& g : golden_cells()) {
    const NormalParams f1 = golden_f1(g.scenario);
    const NormalParams f2 = golden_f2(g.scenario);
    const double rho = rho_general(f1, f2).value;
    out.push_back(MetricCell{std::string(g.table_id), g.scenario, f1, f2, g.tag, g.n1, g.n2,
                             rho, g.rb, g.rmse, g.rmse, rho * (1.0 + g.rb), 0});
  }
  return out;
}

namespace {

std::string percent(std::size_t num, std::size_t den) {
  return den == 0 ? std::string("n/a") : fixed(100.0 * static_cast<double>(num) /
                                                   static_cast<double>(den), 1) + "%";
}

std::string cell_label(const GoldenCell& g) {
  return std::string(g.table_id) + " scenario " + std::to_string(g.scenario) + " (" +
         std::to_string(g.n1) + "," + std::to_string(g.n2) + ") " + std::string(g.column);
}

}  // namespace

std::string render_diff_text(const DiffReport& r) {
  std::ostringstream out;
  out << "Reproduction vs published tables\n";
  out << "checked cells (kernel columns excluded): " << r.checked << '\n';
  out << "  RB within tolerance:   " << r.rb_passed << '/' << r.checked << " ("
      << percent(r.rb_passed, r.checked) << ")\n";
  out << "  RMSE within tolerance: " << r.rmse_passed << '/' << r.checked << " ("
      << percent(r.rmse_passed, r.checked) << ")\n";
  out << "  both:                  " << r.passed << '/' << r.checked << " ("
      << percent(r.passed, r.checked) << ")\n\n";

  out << "Columns:\n";
  for (const ColumnSummary& c : r.columns) {
    char line[256];
    std::snprintf(line, sizeof line, "  %s %-6s (%-19s) RB %2zu/%-2zu  RMSE %2zu/%-2zu%s\n",
                  std::string(c.table_id).c_str(), std::string(c.column).c_str(),
                  std::string(to_string(c.tag)).c_str(), c.rb_pass, c.cells, c.rmse_pass,
                  c.cells,
                  c.rb_systematic || c.rmse_systematic ? "  SYSTEMATIC FAILURE" : "");
    out << line;
  }

  out << "\nRMSE definition per table:\n";
  for (const TableRmseSummary& t : r.tables) {
    const char* verdict = t.closer_to_truth > t.closer_to_mean   ? "around the truth"
                          : t.closer_to_mean > t.closer_to_truth ? "around the mean"
                                                                 : "undecided";
    out << "  " << t.table_id << ": closer to truth in " << t.closer_to_truth << ", to mean in "
        << t.closer_to_mean << " of " << t.cells << " cells -> " << verdict
        << " (within tolerance: truth " << t.matched_truth << ", mean " << t.matched_mean
        << ")\n";
  }

  std::size_t kernel_cells = 0;
  double kernel_dev_rb = 0.0;
  double kernel_dev_rmse = 0.0;
  for (const DiffCell& d : r.cells) {
    if (!d.informational) continue;
    ++kernel_cells;
    kernel_dev_rb += d.dev_rb;
    kernel_dev_rmse += std::min(d.dev_rmse_truth, d.dev_rmse_mean);
  }
  if (kernel_cells > 0) {
    out << "\nKernel columns (informational): " << kernel_cells
        << " cells, mean |dRB| = " << fixed(kernel_dev_rb / kernel_cells, 4)
        << ", mean |dRMSE| = " << fixed(kernel_dev_rmse / kernel_cells, 4) << '\n';
  }

  bool header = false;
  for (const DiffCell& d : r.cells) {
    if (d.informational || d.pass()) continue;
    if (!header) {
      out << "\nFailing cells:\n";
      header = true;
    }
    out << "  " << cell_label(*d.golden) << ": RB " << fixed(d.rb, 4) << " vs "
        << fixed(d.golden->rb, 4) << " (tol " << fixed(d.tol_rb, 4) << ")"
        << (d.rb_pass ? "" : " FAIL") << "; RMSE truth " << fixed(d.rmse_around_truth, 4)
        << " / mean " << fixed(d.rmse_around_mean, 4) << " vs " << fixed(d.golden->rmse, 4)
        << " (tol " << fixed(d.tol_rmse, 4) << ")" << (d.rmse_pass ? "" : " FAIL") << '\n';
  }

  out << "\nResult: " << (r.failed() == 0 ? "PASS" : "FAIL") << " (" << r.failed()
      << " failing cells" << (r.any_systematic() ? ", systematic column failure" : "")
      << ")\n";
  return out.str();
}

std::string render_diff_csv(const DiffReport& r) {
  std::ostringstream out;
  out << "table_id,scenario,n1,n2,column,estimator,golden_rb,golden_rmse,rb,rmse_truth,"
         "rmse_mean,dev_rb,dev_rmse_truth,dev_rmse_mean,tol_rb,tol_rmse,rmse_match,"
         "closer_definition,status\n";
  for (const DiffCell& d : r.cells) {
    const GoldenCell& g = *d.golden;
    out << g.table_id << ',' << g.scenario << ',' << g.n1 << ',' << g.n2 << ',' << g.column
        << ',' << to_string(g.tag) << ',' << fixed(g.rb, 6) << ',' << fixed(g.rmse, 6) << ','
        << fixed(d.rb, 6) << ',' << fixed(d.rmse_around_truth, 6) << ','
        << fixed(d.rmse_around_mean, 6) << ',' << fixed(d.dev_rb, 6) << ','
        << fixed(d.dev_rmse_truth, 6) << ',' << fixed(d.dev_rmse_mean, 6) << ','
        << fixed(d.tol_rb, 6) << ',' << fixed(d.tol_rmse, 6) << ',' << to_string(d.rmse_match)
        << ',' << (d.closer_to_truth ? "truth" : "mean") << ','
        << (d.informational ? "info" : d.pass() ? "pass" : "fail") << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Density profiles

std::vector<ProfileRow> density_profile(const NormalParams& p1, const NormalParams& p2,
                                        std::size_t points) {
  if (points < 2) throw Error(ErrorCode::invalid_params, "a profile needs at least 2 points");
  const double lo = std::min(p1.mu() - 4.0 * p1.sigma(), p2.mu() - 4.0 * p2.sigma());
  const double hi = std::max(p1.mu() + 4.0 * p1.sigma(), p2.mu() + 4.0 * p2.sigma());
  const double step = (hi - lo) / static_cast<double>(points - 1);
  std::vector<ProfileRow> rows(points);
  for (std::size_t i = 0; i < points; ++i) {
    const double x = i + 1 == points ? hi : lo + step * static_cast<double>(i);
    const double a = pdf(p1, x);
    const double b = pdf(p2, x);
    rows[i] = {x, a, b, std::exp(0.5 * (log_pdf(p1, x) + log_pdf(p2, x)))};
  }
  return rows;
}

std::string render_profile_csv(std::span<const ProfileRow> rows) {
  std::ostringstream out;
  out << "x,f1,f2,sqrt_f1f2\n";
  for (const ProfileRow& r : rows) {
    out << shortest(r.x) << ',' << shortest(r.f1) << ',' << shortest(r.f2) << ','
        << shortest(r.sqrt_f1f2) << '\n';
  }
  return out.str();
}

}  // namespace matusita
