// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "spectra/complex.hpp"

namespace spectra::kernels {

/// Vector-arithmetic backends. `scalar` is the portable reference; `avx2`
/// uses 256-bit FMA intrinsics on interleaved complex<double> data.
/// The active backend is picked once at first use: AVX2 when the CPU
/// supports it, unless overridden by the SPECTRA_KERNELS environment
/// variable ("scalar" or "avx2") or by select_backend().
enum class Backend { scalar = 0, avx2 = 1 };

Backend active_backend();
bool backend_available(Backend b);
void select_backend(Backend b);  // throws BackendUnavailable if unsupported on this host
std::string_view backend_name(Backend b);

/// sum_i |x_i|^2
double norm_sq(const cplx* x, std::size_t n);
/// sum_i x_i * y_i  (no conjugation)
cplx dot(const cplx* x, const cplx* y, std::size_t n);
/// sum_i conj(x_i) * y_i
cplx dot_conj(const cplx* x, const cplx* y, std::size_t n);
/// y_i += a * x_i
void axpy(cplx a, const cplx* x, cplx* y, std::size_t n);
/// x_i *= a
void scale(cplx a, cplx* x, std::size_t n);
/// (a_i, b_i) <- ((a_i + b_i)/sqrt2, (a_i - b_i)/sqrt2)
void hadamard_pair(cplx* a, cplx* b, std::size_t n);

inline double norm_sq(std::span<const cplx> x) { return norm_sq(x.data(), x.size()); }
inline cplx dot(std::span<const cplx> x, std::span<const cplx> y) { return dot(x.data(), y.data(), x.size()); }
inline cplx dot_conj(std::span<const cplx> x, std::span<const cplx> y) {
  return dot_conj(x.data(), y.data(), x.size());
}
inline void axpy(cplx a, std::span<const cplx> x, std::span<cplx> y) { axpy(a, x.data(), y.data(), x.size()); }
inline void scale(cplx a, std::span<cplx> x) { scale(a, x.data(), x.size()); }

}  // namespace spectra::kernels
