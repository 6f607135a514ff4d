// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "spectra/gates.hpp"
#include "spectra/linalg.hpp"
#include "spectra/quadrature.hpp"

namespace spectra {

/// Block Hermitian system C y = v' that stacks the N shifted resolvent solves
/// into one solve of dimension n*N (half the generic Hermitian dilation,
/// because conjugate node pairs supply the adjoint blocks):
///
///   C = [[0, D^H], [D, 0]],  D = diag(z_0 I - A, ..., z_{N/2-1} I - A),
///   v' = N stacked copies of v.
///
/// The solution carries x_k = (z_k I - A)^{-1} v in block k for k < N/2 and
/// x_{N-1-p} in block N/2+p.
class AugmentedSystem {
 public:
  static constexpr long kMaterializeCap = 4096;  // dense C only up to this dimension
  static constexpr long kDimCap = 1 << 20;

  /// Throws DimensionTooLarge when n*N exceeds kDimCap.
  static AugmentedSystem build(const HermitianOperator& a, const ContourQuadrature& q,
                               std::span<const double> v);

  /// Degenerate dense system for tests and idealized solver models: any
  /// Hermitian C with an explicit right-hand side, no block structure.
  static AugmentedSystem dense_stub(HermitianOperator c, std::vector<cplx> rhs);

  bool is_stub() const { return stub_; }
  int block_dim() const { return block_dim_; }          // n (stub: full dim)
  int node_count() const { return node_count_; }        // N (stub: 0)
  long dim() const;                                     // n*N (stub: full dim)
  const HermitianOperator& op() const { return op_; }   // A (stub: C)
  const ContourQuadrature& quadrature() const { return quad_; }
  std::span<const double> probe() const { return v_; }   // empty for stubs

  /// v' (or the stub's stored right-hand side).
  std::vector<cplx> rhs() const;
  /// Materialized C, row-major. Throws DimensionTooLarge above kMaterializeCap.
  std::vector<cplx> dense_matrix() const;

 private:
  AugmentedSystem() = default;
  bool stub_ = false;
  int block_dim_ = 0;
  int node_count_ = 0;
  HermitianOperator op_;
  ContourQuadrature quad_;
  std::vector<double> v_;
  std::vector<cplx> stub_rhs_;
};

/// Solution of the augmented system with its block layout.
struct SolutionLayout {
  std::vector<cplx> y;
  int block_dim = 0;   // n
  int node_count = 0;  // N; 0 marks an unstructured stub solution

  /// Quadrature index held by block position p: p for p < N/2, else N-1-(p-N/2).
  int block_quadrature_index(int p) const;
  std::span<const cplx> block(int p) const;
};

/// Factors the N/2 distinct shifted blocks once and solves per right-hand
/// side; top blocks by direct solve, bottom blocks by adjoint solve. C itself
/// is never factored densely.
class AugmentedSolver {
 public:
  AugmentedSolver(const HermitianOperator& a, const ContourQuadrature& q);
  SolutionLayout solve(std::span<const double> v) const;

 private:
  int dim_;
  ContourQuadrature quad_;
  std::vector<LuFactors> factors_;
};

/// One-shot solve (handles dense stubs via plain LU).
SolutionLayout solve_augmented(const AugmentedSystem& sys);

/// Index permutation aligning the augmented solution's block order with the
/// quadrature order: k for k < N/2, else 3N/2 - k - 1. An involution.
/// Throws IndexOutOfRange.
int permutation_pi(int n_nodes, int k);

/// The same permutation as node_qubits-1 CNOT gates, each controlled on the
/// most significant counting qubit (flips every lower bit when it is set).
std::vector<GateOp> permutation_as_cnots(int node_qubits);

/// Reorder solution blocks into quadrature order [x_0, ..., x_{N-1}].
std::vector<cplx> reorder_to_yprime(const SolutionLayout& layout);

/// Block-level application of the permutation to a stacked vector.
std::vector<cplx> permute_blocks(std::span<const cplx> stacked, int block_dim, int n_nodes);

}  // namespace spectra
