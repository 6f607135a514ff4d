// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "spectra/complex.hpp"
#include "spectra/linalg.hpp"

namespace test_helpers {

using spectra::cplx;

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& g, double lo = -1.0, double hi = 1.0) {
  return lo + (hi - lo) * (static_cast<double>(g() >> 11) * 0x1.0p-53);
}

/// Random dense Hermitian matrix with entries of magnitude O(scale).
inline spectra::HermitianOperator random_hermitian(int n, std::uint64_t seed, double scale = 1.0) {
  std::mt19937_64 g = rng(seed);
  std::vector<cplx> m(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m[static_cast<std::size_t>(i) * n + j] = scale * cplx(uniform(g), uniform(g));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const cplx sym =
          0.5 * (m[static_cast<std::size_t>(i) * n + j] + std::conj(m[static_cast<std::size_t>(j) * n + i]));
      m[static_cast<std::size_t>(i) * n + j] = sym;
      m[static_cast<std::size_t>(j) * n + i] = std::conj(sym);
    }
  }
  return spectra::HermitianOperator::from_entries(std::move(m), n);
}

/// Random real symmetric matrix (the subdomain where elementwise-conjugate
/// resolvent identities hold).
inline spectra::HermitianOperator random_real_symmetric(int n, std::uint64_t seed, double scale = 1.0) {
  std::mt19937_64 g = rng(seed);
  std::vector<cplx> m(static_cast<std::size_t>(n) * n, cplx(0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double v = scale * uniform(g);
      m[static_cast<std::size_t>(i) * n + j] = v;
      m[static_cast<std::size_t>(j) * n + i] = v;
    }
  }
  return spectra::HermitianOperator::from_entries(std::move(m), n);
}

inline spectra::HermitianOperator diag_operator(const std::vector<double>& d) {
  const int n = static_cast<int>(d.size());
  std::vector<cplx> m(static_cast<std::size_t>(n) * n, cplx(0.0));
  for (int i = 0; i < n; ++i) {
    m[static_cast<std::size_t>(i) * n + i] = d[i];
  }
  return spectra::HermitianOperator::from_entries(std::move(m), n);
}

inline double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

inline double norm2(const std::vector<cplx>& v) {
  double s = 0.0;
  for (const cplx& e : v) {
    s += std::norm(e);
  }
  return std::sqrt(s);
}

}  // namespace test_helpers
