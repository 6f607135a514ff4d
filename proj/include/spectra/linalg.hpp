// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "spectra/complex.hpp"

namespace spectra {

/// Dense complex Hermitian matrix, row-major, immutable after construction.
/// Construction symmetrizes (M + M^H)/2 when the worst elementwise asymmetry
/// is at most `hermiticity_tol`, and rejects the input otherwise, so stored
/// entries always satisfy entries(i,j) == conj(entries(j,i)) exactly.
class HermitianOperator {
 public:
  static constexpr double hermiticity_tol = 1e-8;

  /// `entries` is row-major with dim*dim elements.
  /// Throws NotSquare / NotHermitian.
  static HermitianOperator from_entries(std::vector<cplx> entries, int dim);

  /// Empty placeholder (dim 0); assign a real operator before use.
  HermitianOperator() = default;

  int dim() const { return dim_; }
  const cplx& operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * dim_ + j]; }
  std::span<const cplx> entries() const { return entries_; }
  double frobenius_norm() const { return frob_; }

 private:
  int dim_ = 0;
  double frob_ = 0.0;
  std::vector<cplx> entries_;
};

/// Convenience builder from nested rows. Throws NotSquare when rows are ragged
/// or the matrix is empty, NotHermitian when asymmetry exceeds the tolerance.
HermitianOperator build_hermitian(const std::vector<std::vector<cplx>>& rows);

/// Partial-pivoted LU of (shift*I - A). Factor once, then solve many
/// right-hand sides against the matrix or its adjoint; the adjoint solve is
/// what makes the conjugate quadrature node reuse a factorization.
class LuFactors {
 public:
  /// Throws SingularShift when a pivot falls below 1e-14 * ||A||_F (or is exactly zero).
  static LuFactors shifted(const HermitianOperator& a, cplx shift);

  /// Factor an arbitrary dense row-major matrix. `pivot_tol` is the absolute
  /// pivot threshold below which SingularShift is thrown.
  static LuFactors dense(std::vector<cplx> matrix, int dim, double pivot_tol);

  int dim() const { return n_; }
  /// Solve (shift*I - A) x = rhs.
  std::vector<cplx> solve(std::span<const cplx> rhs) const;
  /// Solve (shift*I - A)^H x = rhs using the same factors.
  std::vector<cplx> solve_adjoint(std::span<const cplx> rhs) const;

 private:
  LuFactors() = default;
  void factorize(double pivot_tol);
  int n_ = 0;
  std::vector<cplx> lu_;   // row-major; L unit-lower below, U upper
  std::vector<cplx> luh_;  // conj transpose of lu_, keeps adjoint sweeps contiguous
  std::vector<int> piv_;   // row swapped with piv_[c] at step c
};

/// One-shot solve of (shift*I - A) x = rhs.
std::vector<cplx> solve_shifted(const HermitianOperator& a, cplx shift, std::span<const cplx> rhs);
std::vector<cplx> solve_shifted(const HermitianOperator& a, cplx shift, std::span<const double> rhs);

struct EigenDecomposition {
  int dim = 0;
  std::vector<double> eigenvalues;  // ascending
  std::vector<cplx> eigenvectors;   // row-major; column j pairs with eigenvalues[j]
  cplx vector_entry(int i, int j) const { return eigenvectors[static_cast<std::size_t>(i) * dim + j]; }
};

inline constexpr int kEigenDimCap = 1024;

/// Full Hermitian eigendecomposition (test / exact-mode oracle).
/// Throws DimensionTooLarge above `dim_cap`.
EigenDecomposition eig_hermitian(const HermitianOperator& a, int dim_cap = kEigenDimCap);

}  // namespace spectra
