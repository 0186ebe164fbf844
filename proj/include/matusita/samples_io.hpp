// Copyright 2026 The matusita authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string_view>
#include <vector>

#include "matusita/distributions.hpp"

namespace matusita {

/// One value per line. Surrounding whitespace is ignored; blank lines and
/// lines starting with '#' are skipped. Throws ParseError with the line
/// number on anything else that is not a finite number.
std::vector<double> parse_sample_text(std::string_view text,
                                      std::string_view source = "<input>");

std::vector<double> read_sample_file(const std::filesystem::path& path);

/// Throws Error(too_few_observations) when either file holds fewer than
/// two values.
SamplePair read_samples(const std::filesystem::path& path_x,
                        const std::filesystem::path& path_y);

}  // namespace matusita
