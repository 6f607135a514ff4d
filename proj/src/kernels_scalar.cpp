// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "kernels_impl.hpp"

// Reference kernels. Plain sequential loops; these define the semantics the
// SIMD variants are tested against.

namespace spectra::kernels::scalar_impl {

double norm_sq(const cplx* x, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sum += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
  return sum;
}

cplx dot(const cplx* x, const cplx* y, std::size_t n) {
  cplx sum(0.0, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    sum += x[i] * y[i];
  }
  return sum;
}

cplx dot_conj(const cplx* x, const cplx* y, std::size_t n) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

void axpy(cplx a, const cplx* x, cplx* y, std::size_t n) {
  const double ar = a.real();
  const double ai = a.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real();
    const double xi = x[i].imag();
    y[i] += cplx(ar * xr - ai * xi, ar * xi + ai * xr);
  }
}

void scale(cplx a, cplx* x, std::size_t n) {
  const double ar = a.real();
  const double ai = a.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real();
    const double xi = x[i].imag();
    x[i] = cplx(ar * xr - ai * xi, ar * xi + ai * xr);
  }
}

void hadamard_pair(cplx* a, cplx* b, std::size_t n) {
  constexpr double inv_sqrt2 = 0.70710678118654752440;
  for (std::size_t i = 0; i < n; ++i) {
    const cplx t = (a[i] + b[i]) * inv_sqrt2;
    b[i] = (a[i] - b[i]) * inv_sqrt2;
    a[i] = t;
  }
}

}  // namespace spectra::kernels::scalar_impl
