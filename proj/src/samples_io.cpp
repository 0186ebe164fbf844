// Copyright 2026 The matusita authors
// SPDX-License-Identifier: Apache-2.0

#include "matusita/samples_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "format.hpp"
#include "matusita/errors.hpp"

namespace matusita {

std::vector<double> parse_sample_text(std::string_view text, std::string_view source) {
  std::vector<double> values;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const std::string_view line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    double v = 0.0;
    if (!detail::parse_double(line, v) || !std::isfinite(v)) {
      throw ParseError(line_no, std::string(source) + ":" + std::to_string(line_no) +
                                    ": not a finite number: '" + std::string(line) + "'");
    }
    values.push_back(v);
  }
  return values;
}

std::vector<double> read_sample_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sample_text(buf.str(), path.string());
}

SamplePair read_samples(const std::filesystem::path& path_x,
                        const std::filesystem::path& path_y) {
  auto x = read_sample_file(path_x);
  auto y = read_sample_file(path_y);
  for (const auto& [v, p] : {std::pair{&x, &path_x}, std::pair{&y, &path_y}}) {
    if (v->size() < 2) {
      throw Error(ErrorCode::too_few_observations,
                  p->string() + ": need at least 2 observations, found " +
                      std::to_string(v->size()));
    }
  }
  return SamplePair(std::move(x), std::move(y));
}

}  // namespace matusita
