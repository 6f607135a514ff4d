// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>
#include <vector>

#include "spectra/complex.hpp"

namespace spectra {

/// Trapezoidal quadrature on a circle in the complex plane.
///
/// Nodes sit at half-step angles, z_k = gamma + rho*exp(2*pi*i*(k+1/2)/N),
/// with weights w_k = (rho/N)*exp(2*pi*i*(k+1/2)/N), so no node touches the
/// real axis and nodes come in conjugate pairs:
/// z_k == conj(z_{N-1-k}), w_k == conj(w_{N-1-k}) (exact by construction).
struct ContourQuadrature {
  double gamma = 0.0;  // circle center (real)
  double rho = 0.0;    // circle radius
  int node_qubits = 0; // N = 2^node_qubits
  int node_count = 0;
  std::vector<cplx> nodes;
  std::vector<cplx> weights;
};

/// Build the rule. Requires rho > 0 and 1 <= node_qubits <= 20.
/// Throws InvalidRadius / NodeCountOutOfRange.
ContourQuadrature trapezoid_circle(double gamma, double rho, int node_qubits);

/// Circle through the real interval endpoints: center (a+b)/2, radius (b-a)/2.
/// Throws EmptyInterval when a >= b.
std::pair<double, double> interval_to_circle(double a, double b);

/// The quadrature's spectral filter f(lambda) = sum_k w_k / (z_k - lambda),
/// evaluated by direct summation. Imaginary part cancels to rounding via the
/// conjugate node pairs.
cplx filter_value(const ContourQuadrature& q, double lambda);

/// Analytic form of the same filter, 1 / (1 + u^N) with u = (lambda-gamma)/rho,
/// computed as u^-N / (u^-N + 1) for |u| > 1 so large N cannot overflow.
double filter_closed_form(const ContourQuadrature& q, double lambda);

/// Exact indicator of the open interval (a, b); endpoints count as outside.
/// Throws EmptyInterval when a >= b.
int indicator_g(double lambda, double a, double b);

}  // namespace spectra
