// SPDX-License-Identifier: Apache-2.0

#include "spectra/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "spectra/errors.hpp"

namespace spectra {

ContourQuadrature trapezoid_circle(double gamma, double rho, int node_qubits) {
  if (!(rho > 0.0)) {
    throw InvalidRadius("radius must be positive, got " + std::to_string(rho));
  }
  if (node_qubits < 1 || node_qubits > 20) {
    throw NodeCountOutOfRange("node exponent must be in [1, 20], got " + std::to_string(node_qubits));
  }
  ContourQuadrature q;
  q.gamma = gamma;
  q.rho = rho;
  q.node_qubits = node_qubits;
  q.node_count = 1 << node_qubits;
  q.nodes.resize(q.node_count);
  q.weights.resize(q.node_count);
  // Fill the upper half-plane nodes, then mirror so conjugate pairing is exact.
  for (int k = 0; k < q.node_count / 2; ++k) {
    const double theta = 2.0 * std::numbers::pi * (k + 0.5) / q.node_count;
    const cplx dir(std::cos(theta), std::sin(theta));
    q.nodes[k] = gamma + rho * dir;
    q.weights[k] = (rho / q.node_count) * dir;
    q.nodes[q.node_count - 1 - k] = std::conj(q.nodes[k]);
    q.weights[q.node_count - 1 - k] = std::conj(q.weights[k]);
  }
  return q;
}

std::pair<double, double> interval_to_circle(double a, double b) {
  if (!(a < b)) {
    throw EmptyInterval("interval [" + std::to_string(a) + ", " + std::to_string(b) + "] is empty");
  }
  return {0.5 * (a + b), 0.5 * (b - a)};
}

cplx filter_value(const ContourQuadrature& q, double lambda) {
  cplx sum(0.0, 0.0);
  for (int k = 0; k < q.node_count; ++k) {
    sum += q.weights[k] / (q.nodes[k] - lambda);
  }
  return sum;
}

double filter_closed_form(const ContourQuadrature& q, double lambda) {
  const double u = (lambda - q.gamma) / q.rho;
  const double n = static_cast<double>(q.node_count);
  if (std::abs(u) <= 1.0) {
    return 1.0 / (1.0 + std::pow(u, n));
  }
  const double t = std::pow(1.0 / u, n);
  return t / (t + 1.0);
}

int indicator_g(double lambda, double a, double b) {
  if (!(a < b)) {
    throw EmptyInterval("interval [" + std::to_string(a) + ", " + std::to_string(b) + "] is empty");
  }
  return (a < lambda && lambda < b) ? 1 : 0;
}

}  // namespace spectra
