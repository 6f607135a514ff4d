// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

#include "spectra/complex.hpp"

// Per-backend kernel entry points. Only the dispatcher includes this.

namespace spectra::kernels::scalar_impl {
double norm_sq(const cplx* x, std::size_t n);
cplx dot(const cplx* x, const cplx* y, std::size_t n);
cplx dot_conj(const cplx* x, const cplx* y, std::size_t n);
void axpy(cplx a, const cplx* x, cplx* y, std::size_t n);
void scale(cplx a, cplx* x, std::size_t n);
void hadamard_pair(cplx* a, cplx* b, std::size_t n);
}  // namespace spectra::kernels::scalar_impl

#if SPECTRA_HAVE_AVX2
namespace spectra::kernels::avx2_impl {
double norm_sq(const cplx* x, std::size_t n);
cplx dot(const cplx* x, const cplx* y, std::size_t n);
cplx dot_conj(const cplx* x, const cplx* y, std::size_t n);
void axpy(cplx a, const cplx* x, cplx* y, std::size_t n);
void scale(cplx a, cplx* x, std::size_t n);
void hadamard_pair(cplx* a, cplx* b, std::size_t n);
}  // namespace spectra::kernels::avx2_impl
#endif
