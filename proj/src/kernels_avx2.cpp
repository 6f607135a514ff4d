// SPDX-License-Identifier: Apache-2.0

#include <immintrin.h>

#include "kernels_impl.hpp"

// AVX2+FMA kernels on interleaved complex<double>. One __m256d carries two
// complex values; products use the movedup/unpackhi + fmaddsub pattern.
// Tails fall back to scalar arithmetic. Reduction order differs from the
// scalar reference, so results agree to rounding, not bitwise.

namespace spectra::kernels::avx2_impl {

namespace {

inline const double* as_doubles(const cplx* p) { return reinterpret_cast<const double*>(p); }
inline double* as_doubles(cplx* p) { return reinterpret_cast<double*>(p); }

// (a0.re, a0.im, a1.re, a1.im) * (b0.re, b0.im, b1.re, b1.im), complex-wise
inline __m256d cmul(__m256d a, __m256d b) {
  const __m256d ar = _mm256_movedup_pd(a);
  const __m256d ai = _mm256_unpackhi_pd(a, a);
  const __m256d bswap = _mm256_permute_pd(b, 0x5);
  return _mm256_fmaddsub_pd(ar, b, _mm256_mul_pd(ai, bswap));
}

// conj(a) * b, complex-wise
inline __m256d cmul_conj(__m256d a, __m256d b) {
  const __m256d ar = _mm256_movedup_pd(a);
  const __m256d ai = _mm256_unpackhi_pd(a, a);
  const __m256d bswap = _mm256_permute_pd(b, 0x5);
  return _mm256_fmsubadd_pd(ar, b, _mm256_mul_pd(ai, bswap));
}

// Sum the two complex lanes of acc into one complex value.
inline cplx reduce_complex(__m256d acc) {
  const __m128d lo = _mm256_castpd256_pd128(acc);
  const __m128d hi = _mm256_extractf128_pd(acc, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  double buf[2];
  _mm_storeu_pd(buf, s);
  return {buf[0], buf[1]};
}

}  // namespace

double norm_sq(const cplx* x, std::size_t n) {
  const double* p = as_doubles(x);
  const std::size_t m = 2 * n;
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= m; i += 8) {
    const __m256d v0 = _mm256_loadu_pd(p + i);
    const __m256d v1 = _mm256_loadu_pd(p + i + 4);
    acc0 = _mm256_fmadd_pd(v0, v0, acc0);
    acc1 = _mm256_fmadd_pd(v1, v1, acc1);
  }
  for (; i + 4 <= m; i += 4) {
    const __m256d v = _mm256_loadu_pd(p + i);
    acc0 = _mm256_fmadd_pd(v, v, acc0);
  }
  acc0 = _mm256_add_pd(acc0, acc1);
  const __m128d lo = _mm256_castpd256_pd128(acc0);
  const __m128d hi = _mm256_extractf128_pd(acc0, 1);
  __m128d s = _mm_add_pd(lo, hi);
  s = _mm_hadd_pd(s, s);
  double sum = _mm_cvtsd_f64(s);
  for (; i < m; ++i) {
    sum += p[i] * p[i];
  }
  return sum;
}

cplx dot(const cplx* x, const cplx* y, std::size_t n) {
  const double* px = as_doubles(x);
  const double* py = as_doubles(y);
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_add_pd(acc0, cmul(_mm256_loadu_pd(px + 2 * i), _mm256_loadu_pd(py + 2 * i)));
    acc1 = _mm256_add_pd(acc1, cmul(_mm256_loadu_pd(px + 2 * i + 4), _mm256_loadu_pd(py + 2 * i + 4)));
  }
  for (; i + 2 <= n; i += 2) {
    acc0 = _mm256_add_pd(acc0, cmul(_mm256_loadu_pd(px + 2 * i), _mm256_loadu_pd(py + 2 * i)));
  }
  cplx sum = reduce_complex(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) {
    sum += x[i] * y[i];
  }
  return sum;
}

cplx dot_conj(const cplx* x, const cplx* y, std::size_t n) {
  const double* px = as_doubles(x);
  const double* py = as_doubles(y);
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_add_pd(acc0, cmul_conj(_mm256_loadu_pd(px + 2 * i), _mm256_loadu_pd(py + 2 * i)));
    acc1 =
        _mm256_add_pd(acc1, cmul_conj(_mm256_loadu_pd(px + 2 * i + 4), _mm256_loadu_pd(py + 2 * i + 4)));
  }
  for (; i + 2 <= n; i += 2) {
    acc0 = _mm256_add_pd(acc0, cmul_conj(_mm256_loadu_pd(px + 2 * i), _mm256_loadu_pd(py + 2 * i)));
  }
  cplx sum = reduce_complex(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) {
    const cplx cx = std::conj(x[i]);
    sum += cx * y[i];
  }
  return sum;
}

void axpy(cplx a, const cplx* x, cplx* y, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  const double* px = as_doubles(x);
  double* py = as_doubles(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vx = _mm256_loadu_pd(px + 2 * i);
    const __m256d vy = _mm256_loadu_pd(py + 2 * i);
    const __m256d t = _mm256_mul_pd(ai, _mm256_permute_pd(vx, 0x5));
    const __m256d p = _mm256_fmaddsub_pd(ar, vx, t);
    _mm256_storeu_pd(py + 2 * i, _mm256_add_pd(vy, p));
  }
  for (; i < n; ++i) {
    y[i] += a * x[i];
  }
}

void scale(cplx a, cplx* x, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  double* px = as_doubles(x);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vx = _mm256_loadu_pd(px + 2 * i);
    const __m256d t = _mm256_mul_pd(ai, _mm256_permute_pd(vx, 0x5));
    _mm256_storeu_pd(px + 2 * i, _mm256_fmaddsub_pd(ar, vx, t));
  }
  for (; i < n; ++i) {
    x[i] *= a;
  }
}

void hadamard_pair(cplx* a, cplx* b, std::size_t n) {
  constexpr double inv_sqrt2 = 0.70710678118654752440;
  const __m256d s = _mm256_set1_pd(inv_sqrt2);
  double* pa = as_doubles(a);
  double* pb = as_doubles(b);
  const std::size_t m = 2 * n;
  std::size_t i = 0;
  for (; i + 4 <= m; i += 4) {
    const __m256d va = _mm256_loadu_pd(pa + i);
    const __m256d vb = _mm256_loadu_pd(pb + i);
    _mm256_storeu_pd(pa + i, _mm256_mul_pd(_mm256_add_pd(va, vb), s));
    _mm256_storeu_pd(pb + i, _mm256_mul_pd(_mm256_sub_pd(va, vb), s));
  }
  for (; i < m; ++i) {
    const double t = (pa[i] + pb[i]) * inv_sqrt2;
    pb[i] = (pa[i] - pb[i]) * inv_sqrt2;
    pa[i] = t;
  }
}

}  // namespace spectra::kernels::avx2_impl
