// Copyright 2026 The matusita authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "matusita/distributions.hpp"

namespace matusita {

enum class ExactMethod {
  equal_variance_form,
  equal_means_form,
  general_form,
  quadrature,
};

const char* to_string(ExactMethod m) noexcept;

/// Matusita overlap rho = integral of sqrt(f1 f2), a value in (0, 1].
struct ExactRho {
  double value;
  ExactMethod method;
};

/// exp(-(mu1 - mu2)^2 / (8 sigma^2)) for two normals sharing sigma.
ExactRho rho_equal_variance(double mu1, double mu2, double sigma);

/// sqrt(2c / (1 + c^2)) for two normals sharing a mean, c = sigma1 / sigma2.
ExactRho rho_equal_means(double c);

/// Closed form for arbitrary normal pairs:
///   sqrt(2 s1 s2 / (s1^2 + s2^2)) * exp(-(m1 - m2)^2 / (4 (s1^2 + s2^2)))
/// obtained by completing the square inside the integral. Evaluated in the
/// log domain so extreme separations underflow gracefully.
ExactRho rho_general(const NormalParams& p1, const NormalParams& p2);

/// Adaptive Gauss-Kronrod (7/15) integration of sqrt(f1 f2) over
/// [min(mu_i - 10 sigma_i), max(mu_i + 10 sigma_i)]. Requires
/// tol in (0, 1e-4]; throws Error(quadrature_failure) when the summed
/// error estimate cannot be brought below tol.
ExactRho rho_quadrature(const NormalParams& p1, const NormalParams& p2,
                        double tol);

}  // namespace matusita
