// Copyright 2026 The matusita authors
// SPDX-License-Identifier: Apache-2.0

#include "matusita/config.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "format.hpp"
#include "matusita/errors.hpp"

namespace matusita {

namespace {

using detail::trim;

struct Entry {
  std::string value;
  std::size_t line;
};

[[noreturn]] void fail(std::size_t line, const std::string& why) {
  throw ParseError(line, "config line " + std::to_string(line) + ": " + why);
}

double number(const Entry& e, const char* key) {
  double v = 0.0;
  if (!detail::parse_double(e.value, v)) fail(e.line, std::string(key) + " is not a number");
  return v;
}

template <class Int>
Int integer(const Entry& e, const char* key) {
  Int v = 0;
  if (!detail::parse_int(e.value, v)) {
    fail(e.line, std::string(key) + " is not a non-negative integer");
  }
  return v;
}

// "10x10, 20x30 100x200"
std::vector<SizePair> parse_sizes(const Entry& e) {
  std::vector<SizePair> sizes;
  std::string text = e.value;
  for (char& ch : text) {
    if (ch == ',') ch = ' ';
  }
  std::istringstream in(text);
  std::string item;
  while (in >> item) {
    const auto x = item.find_first_of("xX");
    SizePair sz{};
    if (x == std::string::npos ||
        !detail::parse_int(std::string_view(item).substr(0, x), sz.n1) ||
        !detail::parse_int(std::string_view(item).substr(x + 1), sz.n2)) {
      fail(e.line, "size '" + item + "' is not of the form N1xN2");
    }
    sizes.push_back(sz);
  }
  if (sizes.empty()) fail(e.line, "sizes list is empty");
  return sizes;
}

std::vector<EstimatorTag> parse_tags(const Entry& e) {
  std::string text = e.value;
  for (char& ch : text) {
    if (ch == ',') ch = ' ';
  }
  std::istringstream in(text);
  std::string item;
  std::vector<EstimatorTag> tags;
  while (in >> item) {
    if (item == "all") {
      tags.assign(all_estimator_tags.begin(), all_estimator_tags.end());
      continue;
    }
    const auto tag = estimator_from_string(item);
    if (!tag) fail(e.line, "unknown estimator '" + item + "'");
    if (std::find(tags.begin(), tags.end(), *tag) == tags.end()) tags.push_back(*tag);
  }
  if (tags.empty()) fail(e.line, "estimators list is empty");
  return tags;
}

}  // namespace

ScenarioConfig parse_scenario_config(std::string_view text) {
  static const char* const known[] = {"mu1",          "sigma1", "mu2",       "sigma2", "sizes",
                                      "replications", "seed",   "estimators"};
  std::map<std::string, Entry> entries;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail(line_no, "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
      fail(line_no, "unknown key '" + key + "'");
    }
    if (value.empty()) fail(line_no, "empty value for '" + key + "'");
    if (!entries.emplace(key, Entry{value, line_no}).second) {
      fail(line_no, "duplicate key '" + key + "'");
    }
  }

  for (const char* required : {"mu1", "sigma1", "mu2", "sigma2", "sizes"}) {
    if (!entries.count(required)) {
      throw ParseError(0, std::string("config is missing required key '") + required + "'");
    }
  }

  auto params = [&](const char* mu_key, const char* sigma_key) {
    const Entry& s = entries.at(sigma_key);
    try {
      return NormalParams(number(entries.at(mu_key), mu_key), number(s, sigma_key));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(s.line, e.what());
    }
  };

  ScenarioConfig cfg{ScenarioSpec{params("mu1", "sigma1"), params("mu2", "sigma2"),
                                  parse_sizes(entries.at("sizes"))},
                     {all_estimator_tags.begin(), all_estimator_tags.end()}};
  if (auto it = entries.find("replications"); it != entries.end()) {
    cfg.spec.replications = integer<std::size_t>(it->second, "replications");
  }
  if (auto it = entries.find("seed"); it != entries.end()) {
    cfg.spec.master_seed = integer<std::uint64_t>(it->second, "seed");
  }
  if (auto it = entries.find("estimators"); it != entries.end()) {
    cfg.tags = parse_tags(it->second);
  }
  try {
    cfg.spec.validate();
  } catch (const Error& e) {
    throw ParseError(0, std::string("config: ") + e.what());
  }
  return cfg;
}

ScenarioConfig load_scenario_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_config(buf.str());
}

}  // namespace matusita
