// Copyright 2026 The matusita authors
// SPDX-License-Identifier: Apache-2.0

#include "matusita/errors.hpp"

namespace matusita {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_params: return "InvalidParams";
    case ErrorCode::degenerate_sample: return "DegenerateSample";
    case ErrorCode::quadrature_failure: return "QuadratureFailure";
    case ErrorCode::empty_input: return "EmptyInput";
    case ErrorCode::missing_cell: return "MissingCell";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::too_few_observations: return "TooFewObservations";
    case ErrorCode::io_error: return "IoError";
  }
  return "Unknown";
}

}  // namespace matusita
