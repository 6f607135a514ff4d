// SPDX-License-Identifier: Apache-2.0

#include "spectra/augmented.hpp"

#include <string>
#include <utility>

#include "spectra/errors.hpp"

namespace spectra {

namespace {

bool is_power_of_two(long v) { return v > 0 && (v & (v - 1)) == 0; }

}  // namespace

AugmentedSystem AugmentedSystem::build(const HermitianOperator& a, const ContourQuadrature& q,
                                       std::span<const double> v) {
  if (static_cast<int>(v.size()) != a.dim()) {
    throw DimensionMismatch("right-hand side length does not match operator dimension");
  }
  const long dim = static_cast<long>(a.dim()) * q.node_count;
  if (dim > kDimCap) {
    throw DimensionTooLarge("augmented dimension " + std::to_string(dim) + " exceeds cap");
  }
  AugmentedSystem sys;
  sys.block_dim_ = a.dim();
  sys.node_count_ = q.node_count;
  sys.op_ = a;
  sys.quad_ = q;
  sys.v_.assign(v.begin(), v.end());
  return sys;
}

AugmentedSystem AugmentedSystem::dense_stub(HermitianOperator c, std::vector<cplx> rhs) {
  if (static_cast<int>(rhs.size()) != c.dim()) {
    throw DimensionMismatch("stub right-hand side length does not match matrix dimension");
  }
  AugmentedSystem sys;
  sys.stub_ = true;
  sys.block_dim_ = c.dim();
  sys.node_count_ = 0;
  sys.op_ = std::move(c);
  sys.stub_rhs_ = std::move(rhs);
  return sys;
}

long AugmentedSystem::dim() const {
  return stub_ ? block_dim_ : static_cast<long>(block_dim_) * node_count_;
}

std::vector<cplx> AugmentedSystem::rhs() const {
  if (stub_) {
    return stub_rhs_;
  }
  std::vector<cplx> out(static_cast<std::size_t>(dim()));
  for (int b = 0; b < node_count_; ++b) {
    for (int i = 0; i < block_dim_; ++i) {
      out[static_cast<std::size_t>(b) * block_dim_ + i] = v_[i];
    }
  }
  return out;
}

std::vector<cplx> AugmentedSystem::dense_matrix() const {
  const long d = dim();
  if (d > kMaterializeCap) {
    throw DimensionTooLarge("dense augmented matrix capped at dim " + std::to_string(kMaterializeCap));
  }
  if (stub_) {
    return {op_.entries().begin(), op_.entries().end()};
  }
  const int n = block_dim_;
  const long half = d / 2;
  std::vector<cplx> c(static_cast<std::size_t>(d) * d, cplx(0.0));
  for (int p = 0; p < node_count_ / 2; ++p) {
    const cplx z = quad_.nodes[p];
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const cplx upper = (i == j ? std::conj(z) : cplx(0.0)) - op_(i, j);  // (z_p I - A)^H
        const cplx lower = (i == j ? z : cplx(0.0)) - op_(i, j);             //  z_p I - A
        const long row_t = static_cast<long>(p) * n + i;
        const long col_t = half + static_cast<long>(p) * n + j;
        c[static_cast<std::size_t>(row_t) * d + col_t] = upper;
        const long row_b = half + static_cast<long>(p) * n + i;
        const long col_b = static_cast<long>(p) * n + j;
        c[static_cast<std::size_t>(row_b) * d + col_b] = lower;
      }
    }
  }
  return c;
}

int SolutionLayout::block_quadrature_index(int p) const {
  if (p < 0 || p >= node_count) {
    throw IndexOutOfRange("block index " + std::to_string(p) + " out of range");
  }
  return p < node_count / 2 ? p : node_count - 1 - (p - node_count / 2);
}

std::span<const cplx> SolutionLayout::block(int p) const {
  if (p < 0 || p >= node_count) {
    throw IndexOutOfRange("block index " + std::to_string(p) + " out of range");
  }
  return std::span<const cplx>(y).subspan(static_cast<std::size_t>(p) * block_dim, block_dim);
}

AugmentedSolver::AugmentedSolver(const HermitianOperator& a, const ContourQuadrature& q)
    : dim_(a.dim()), quad_(q) {
  factors_.reserve(q.node_count / 2);
  for (int k = 0; k < q.node_count / 2; ++k) {
    factors_.push_back(LuFactors::shifted(a, q.nodes[k]));
  }
}

SolutionLayout AugmentedSolver::solve(std::span<const double> v) const {
  if (static_cast<int>(v.size()) != dim_) {
    throw DimensionMismatch("right-hand side length does not match operator dimension");
  }
  const int n = dim_;
  const int n_nodes = quad_.node_count;
  const int half = n_nodes / 2;
  std::vector<cplx> rhs(v.begin(), v.end());
  SolutionLayout layout;
  layout.block_dim = n;
  layout.node_count = n_nodes;
  layout.y.resize(static_cast<std::size_t>(n) * n_nodes);
  for (int p = 0; p < half; ++p) {
    // Top block p solves (z_p I - A) x = v; bottom block N/2+p solves the
    // adjoint system, which is the resolvent at the conjugate node.
    const std::vector<cplx> top = factors_[p].solve(rhs);
    const std::vector<cplx> bottom = factors_[p].solve_adjoint(rhs);
    std::copy(top.begin(), top.end(), layout.y.begin() + static_cast<std::size_t>(p) * n);
    std::copy(bottom.begin(), bottom.end(), layout.y.begin() + static_cast<std::size_t>(half + p) * n);
  }
  return layout;
}

SolutionLayout solve_augmented(const AugmentedSystem& sys) {
  if (sys.is_stub()) {
    const auto& c = sys.op();
    LuFactors lu = LuFactors::dense({c.entries().begin(), c.entries().end()}, c.dim(),
                                    1e-14 * c.frobenius_norm());
    SolutionLayout layout;
    layout.block_dim = c.dim();
    layout.node_count = 0;
    layout.y = lu.solve(sys.rhs());
    return layout;
  }
  const AugmentedSolver solver(sys.op(), sys.quadrature());
  return solver.solve(sys.probe());
}

int permutation_pi(int n_nodes, int k) {
  if (n_nodes < 2 || !is_power_of_two(n_nodes)) {
    throw IndexOutOfRange("node count must be a power of two, got " + std::to_string(n_nodes));
  }
  if (k < 0 || k >= n_nodes) {
    throw IndexOutOfRange("index " + std::to_string(k) + " out of range for " + std::to_string(n_nodes));
  }
  return k < n_nodes / 2 ? k : 3 * n_nodes / 2 - k - 1;
}

std::vector<GateOp> permutation_as_cnots(int node_qubits) {
  if (node_qubits < 1) {
    throw InputError("counting register needs at least one qubit");
  }
  std::vector<GateOp> gates;
  gates.reserve(node_qubits - 1);
  for (int t = 0; t < node_qubits - 1; ++t) {
    gates.push_back(GateOp::cnot(node_qubits - 1, t));
  }
  return gates;
}

std::vector<cplx> permute_blocks(std::span<const cplx> stacked, int block_dim, int n_nodes) {
  if (stacked.size() != static_cast<std::size_t>(block_dim) * n_nodes) {
    throw DimensionMismatch("stacked vector length does not match block layout");
  }
  std::vector<cplx> out(stacked.size());
  for (int j = 0; j < n_nodes; ++j) {
    const int src = permutation_pi(n_nodes, j);
    std::copy_n(stacked.begin() + static_cast<std::size_t>(src) * block_dim, block_dim,
                out.begin() + static_cast<std::size_t>(j) * block_dim);
  }
  return out;
}

std::vector<cplx> reorder_to_yprime(const SolutionLayout& layout) {
  return permute_blocks(layout.y, layout.block_dim, layout.node_count);
}

}  // namespace spectra
