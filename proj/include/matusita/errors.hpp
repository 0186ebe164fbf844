// Copyright 2026 The matusita authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace matusita {

enum class ErrorCode {
  invalid_params,
  degenerate_sample,
  quadrature_failure,
  empty_input,
  missing_cell,
  parse_error,
  too_few_observations,
  io_error,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above; the
// C API maps them one-to-one onto mt_status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorCode::parse_error, what), line_(line) {}

  // 1-based line number of the offending input, 0 when not line oriented.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace matusita
