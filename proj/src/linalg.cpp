// SPDX-License-Identifier: Apache-2.0

#include "spectra/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "spectra/errors.hpp"
#include "spectra/kernels.hpp"

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace spectra {

HermitianOperator HermitianOperator::from_entries(std::vector<cplx> entries, int dim) {
  if (dim < 1) {
    throw NotSquare("matrix dimension must be at least 1");
  }
  if (entries.size() != static_cast<std::size_t>(dim) * dim) {
    throw NotSquare("entry count " + std::to_string(entries.size()) + " does not match dim " +
                    std::to_string(dim));
  }
  double max_asym = 0.0;
  for (int i = 0; i < dim; ++i) {
    for (int j = i; j < dim; ++j) {
      const cplx upper = entries[static_cast<std::size_t>(i) * dim + j];
      const cplx lower = entries[static_cast<std::size_t>(j) * dim + i];
      max_asym = std::max(max_asym, std::abs(upper - std::conj(lower)));
    }
  }
  if (max_asym > hermiticity_tol) {
    throw NotHermitian("max asymmetry " + std::to_string(max_asym) + " exceeds tolerance");
  }
  for (int i = 0; i < dim; ++i) {
    for (int j = i; j < dim; ++j) {
      const std::size_t ij = static_cast<std::size_t>(i) * dim + j;
      const std::size_t ji = static_cast<std::size_t>(j) * dim + i;
      const cplx sym = (entries[ij] + std::conj(entries[ji])) * 0.5;
      entries[ij] = sym;
      entries[ji] = std::conj(sym);
    }
  }
  HermitianOperator op;
  op.dim_ = dim;
  op.entries_ = std::move(entries);
  op.frob_ = std::sqrt(kernels::norm_sq(op.entries_.data(), op.entries_.size()));
  return op;
}

HermitianOperator build_hermitian(const std::vector<std::vector<cplx>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) {
    throw NotSquare("matrix must be non-empty");
  }
  std::vector<cplx> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) {
      throw NotSquare("row length " + std::to_string(row.size()) + " does not match dim " +
                      std::to_string(n));
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return HermitianOperator::from_entries(std::move(flat), n);
}

LuFactors LuFactors::shifted(const HermitianOperator& a, cplx shift) {
  const int n = a.dim();
  LuFactors f;
  f.n_ = n;
  f.lu_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      f.lu_[static_cast<std::size_t>(i) * n + j] = (i == j ? shift : cplx(0.0)) - a(i, j);
    }
  }
  f.factorize(1e-14 * a.frobenius_norm());
  return f;
}

LuFactors LuFactors::dense(std::vector<cplx> matrix, int dim, double pivot_tol) {
  if (dim < 1 || matrix.size() != static_cast<std::size_t>(dim) * dim) {
    throw NotSquare("dense factorization requires a square matrix");
  }
  LuFactors f;
  f.n_ = dim;
  f.lu_ = std::move(matrix);
  f.factorize(pivot_tol);
  return f;
}

void LuFactors::factorize(double pivot_tol) {
  const int n = n_;
  piv_.resize(n);
  cplx* lu = lu_.data();
  for (int c = 0; c < n; ++c) {
    int p = c;
    double best = std::abs(lu[static_cast<std::size_t>(c) * n + c]);
    for (int r = c + 1; r < n; ++r) {
      const double mag = std::abs(lu[static_cast<std::size_t>(r) * n + c]);
      if (mag > best) {
        best = mag;
        p = r;
      }
    }
    if (best < pivot_tol || best == 0.0) {
      throw SingularShift("zero pivot at column " + std::to_string(c));
    }
    piv_[c] = p;
    if (p != c) {
      std::swap_ranges(lu + static_cast<std::size_t>(c) * n, lu + static_cast<std::size_t>(c + 1) * n,
                       lu + static_cast<std::size_t>(p) * n);
    }
    const cplx inv = cplx(1.0) / lu[static_cast<std::size_t>(c) * n + c];
    for (int r = c + 1; r < n; ++r) {
      cplx& m = lu[static_cast<std::size_t>(r) * n + c];
      m *= inv;
      kernels::axpy(-m, lu + static_cast<std::size_t>(c) * n + c + 1,
                    lu + static_cast<std::size_t>(r) * n + c + 1, static_cast<std::size_t>(n - c - 1));
    }
  }
  luh_.resize(lu_.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      luh_[static_cast<std::size_t>(i) * n + j] = std::conj(lu[static_cast<std::size_t>(j) * n + i]);
    }
  }
}

std::vector<cplx> LuFactors::solve(std::span<const cplx> rhs) const {
  if (static_cast<int>(rhs.size()) != n_) {
    throw DimensionMismatch("rhs length does not match factorization");
  }
  const int n = n_;
  const cplx* lu = lu_.data();
  std::vector<cplx> x(rhs.begin(), rhs.end());
  for (int c = 0; c < n; ++c) {
    if (piv_[c] != c) {
      std::swap(x[c], x[piv_[c]]);
    }
  }
  for (int i = 1; i < n; ++i) {
    x[i] -= kernels::dot(lu + static_cast<std::size_t>(i) * n, x.data(), static_cast<std::size_t>(i));
  }
  for (int i = n - 1; i >= 0; --i) {
    const cplx tail = kernels::dot(lu + static_cast<std::size_t>(i) * n + i + 1, x.data() + i + 1,
                                   static_cast<std::size_t>(n - i - 1));
    x[i] = (x[i] - tail) / lu[static_cast<std::size_t>(i) * n + i];
  }
  return x;
}

std::vector<cplx> LuFactors::solve_adjoint(std::span<const cplx> rhs) const {
  if (static_cast<int>(rhs.size()) != n_) {
    throw DimensionMismatch("rhs length does not match factorization");
  }
  const int n = n_;
  const cplx* luh = luh_.data();
  // With P M = L U: M^H x = b  =>  U^H w = b, L^H u = w, x = P^T u.
  // luh_ holds (L U)^H row-major, so both sweeps read contiguous rows.
  std::vector<cplx> x(rhs.begin(), rhs.end());
  for (int i = 0; i < n; ++i) {
    const cplx head =
        kernels::dot(luh + static_cast<std::size_t>(i) * n, x.data(), static_cast<std::size_t>(i));
    x[i] = (x[i] - head) / luh[static_cast<std::size_t>(i) * n + i];
  }
  for (int i = n - 1; i >= 0; --i) {
    x[i] -= kernels::dot(luh + static_cast<std::size_t>(i) * n + i + 1, x.data() + i + 1,
                         static_cast<std::size_t>(n - i - 1));
  }
  for (int c = n - 1; c >= 0; --c) {
    if (piv_[c] != c) {
      std::swap(x[c], x[piv_[c]]);
    }
  }
  return x;
}

std::vector<cplx> solve_shifted(const HermitianOperator& a, cplx shift, std::span<const cplx> rhs) {
  return LuFactors::shifted(a, shift).solve(rhs);
}

std::vector<cplx> solve_shifted(const HermitianOperator& a, cplx shift, std::span<const double> rhs) {
  std::vector<cplx> rhs_c(rhs.begin(), rhs.end());
  return solve_shifted(a, shift, rhs_c);
}

EigenDecomposition eig_hermitian(const HermitianOperator& a, int dim_cap) {
  const int n = a.dim();
  if (n > dim_cap) {
    throw DimensionTooLarge("dim " + std::to_string(n) + " exceeds eigendecomposition cap " +
                            std::to_string(dim_cap));
  }
  EigenDecomposition d;
  d.dim = n;
  d.eigenvalues.resize(n);
  d.eigenvectors.assign(a.entries().begin(), a.entries().end());
  const lapack_int info =
      LAPACKE_zheev(LAPACK_ROW_MAJOR, 'V', 'L', n, d.eigenvectors.data(), n, d.eigenvalues.data());
  if (info != 0) {
    throw NumericalError("zheev failed with info=" + std::to_string(info));
  }
  return d;
}

}  // namespace spectra
