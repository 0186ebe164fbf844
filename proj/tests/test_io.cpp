// Copyright 2026 The matusita authors
// SPDX-License-Identifier: Apache-2.0

#include <string>

#include "doctest.h"
#include "matusita/config.hpp"
#include "matusita/errors.hpp"
#include "matusita/samples_io.hpp"

using namespace matusita;

namespace {

const std::string data_dir = MATUSITA_TEST_DATA;

std::size_t parse_error_line(std::string_view text) {
  try {
    parse_sample_text(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

ErrorCode config_error(std::string_view text) {
  try {
    parse_scenario_config(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("config accepted: " << text);
  return ErrorCode::io_error;
}

}  // namespace

TEST_CASE("sample text") {
  CHECK(parse_sample_text("0\n2\n") == std::vector<double>{0, 2});
  CHECK(parse_sample_text("  # header\n\n 1.5 \t\n-2e1\r\n3") == std::vector<double>{1.5, -20, 3});
  CHECK(parse_error_line("1\n2\nabc\n") == 3);
  CHECK(parse_error_line("1\n2 3\n") == 2);
  CHECK(parse_error_line("nan\n") == 1);
  CHECK(parse_error_line("1\ninf\n") == 2);
  CHECK(parse_sample_text("# nothing\n").empty());
}

TEST_CASE("sample files") {
  const SamplePair s = read_samples(data_dir + "/x_fixture.txt", data_dir + "/y_fixture.txt");
  CHECK(s.x().size() == 2);
  CHECK(s.x()[0] == 0.0);
  CHECK(s.x()[1] == 2.0);
  CHECK(s.y()[0] == 1.0);
  CHECK(s.y()[1] == 3.0);

  try {
    read_sample_file(data_dir + "/bad_line3.txt");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("bad_line3.txt") != std::string::npos);
  }

  try {
    read_samples(data_dir + "/single.txt", data_dir + "/y_fixture.txt");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::too_few_observations);
  }

  try {
    read_sample_file(data_dir + "/does_not_exist.txt");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::io_error);
  }
}

TEST_CASE("scenario config") {
  const ScenarioConfig c = load_scenario_config(data_dir + "/scenario.cfg");
  CHECK(c.spec.f1 == NormalParams(0, 1));
  CHECK(c.spec.f2 == NormalParams(2.5, 4));
  REQUIRE(c.spec.sizes.size() == 2);
  CHECK(c.spec.sizes[1] == SizePair{20, 30});
  CHECK(c.spec.replications == 50);
  CHECK(c.spec.master_seed == 7);
  REQUIRE(c.tags.size() == 2);
  CHECK(c.tags[0] == EstimatorTag::proposed_avg);
  CHECK(c.tags[1] == EstimatorTag::kernel);

  const ScenarioConfig d = parse_scenario_config(
      "mu1 = 0\nsigma1 = 1\nmu2 = 1\nsigma2 = 2\nsizes = 10x10\n");
  CHECK(d.spec.replications == 1000);
  CHECK(d.spec.master_seed == default_seed);
  CHECK(d.tags.size() == 6);
}

TEST_CASE("scenario config errors") {
  const std::string base = "mu1 = 0\nsigma1 = 1\nmu2 = 1\nsigma2 = 2\n";
  CHECK(config_error(base) == ErrorCode::parse_error);  // no sizes
  CHECK(config_error(base + "sizes = 10x10\ncolour = red\n") == ErrorCode::parse_error);
  CHECK(config_error(base + "sizes = 10x10\nmu1 = 3\n") == ErrorCode::parse_error);
  CHECK(config_error(base + "sizes = 10by10\n") == ErrorCode::parse_error);
  CHECK(config_error(base + "sizes = 10x10\nestimators = rho9\n") == ErrorCode::parse_error);
  // out-of-range values are reported as parse errors of the file
  CHECK(config_error(base + "sizes = 1x10\n") == ErrorCode::parse_error);
  CHECK(config_error(base + "sizes = 10x10\nreplications = 0\n") == ErrorCode::parse_error);
  try {
    parse_scenario_config("mu1 = 0\nsigma1 = -1\nmu2 = 1\nsigma2 = 2\nsizes = 10x10\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK(config_error(base + "sizes 10x10\n") == ErrorCode::parse_error);
}
