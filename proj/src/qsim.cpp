// SPDX-License-Identifier: Apache-2.0

#include "spectra/qsim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <utility>

#include <json.hpp>

#include "spectra/errors.hpp"
#include "spectra/kernels.hpp"
#include "spectra/trace.hpp"

namespace spectra {

namespace {

constexpr int kDenseQubitCap = 10;

void check_qubit(int q, int total) {
  if (q < 0 || q >= total) {
    throw IndexOutOfRange("qubit " + std::to_string(q) + " out of range for " + std::to_string(total) +
                          " qubits");
  }
}

void apply_hadamard(std::vector<cplx>& a, int q) {
  const std::size_t stride = std::size_t{1} << q;
  for (std::size_t base = 0; base < a.size(); base += 2 * stride) {
    kernels::hadamard_pair(a.data() + base, a.data() + base + stride, stride);
  }
}

// Multiply by `phase` every amplitude whose bits `qa` and `qb` are both set.
void apply_controlled_phase(std::vector<cplx>& a, int qa, int qb, double angle) {
  const cplx phase(std::cos(angle), std::sin(angle));
  const int lo = std::min(qa, qb);
  const int hi = std::max(qa, qb);
  const std::size_t lo_m = std::size_t{1} << lo;
  const std::size_t hi_m = std::size_t{1} << hi;
  for (std::size_t high = 0; high < a.size(); high += 2 * hi_m) {
    for (std::size_t mid = 0; mid < hi_m; mid += 2 * lo_m) {
      kernels::scale(phase, a.data() + high + hi_m + mid + lo_m, lo_m);
    }
  }
}

void apply_cnot(std::vector<cplx>& a, int control, int target) {
  if (control == target) {
    throw IndexOutOfRange("cnot control and target must differ");
  }
  const std::size_t c_m = std::size_t{1} << control;
  const std::size_t t_m = std::size_t{1} << target;
  if (target < control) {
    for (std::size_t high = 0; high < a.size(); high += 2 * c_m) {
      for (std::size_t mid = 0; mid < c_m; mid += 2 * t_m) {
        const std::size_t base = high + c_m + mid;
        std::swap_ranges(a.begin() + base, a.begin() + base + t_m, a.begin() + base + t_m);
      }
    }
  } else {
    for (std::size_t high = 0; high < a.size(); high += 2 * t_m) {
      for (std::size_t mid = 0; mid < t_m; mid += 2 * c_m) {
        const std::size_t base = high + mid + c_m;
        std::swap_ranges(a.begin() + base, a.begin() + base + c_m, a.begin() + base + t_m + c_m);
      }
    }
  }
}

void apply_swap(std::vector<cplx>& a, int qa, int qb) {
  if (qa == qb) {
    return;
  }
  const int lo = std::min(qa, qb);
  const int hi = std::max(qa, qb);
  const std::size_t lo_m = std::size_t{1} << lo;
  const std::size_t hi_m = std::size_t{1} << hi;
  for (std::size_t high = 0; high < a.size(); high += 2 * hi_m) {
    for (std::size_t mid = 0; mid < hi_m; mid += 2 * lo_m) {
      const std::size_t base = high + mid;
      std::swap_ranges(a.begin() + base + lo_m, a.begin() + base + 2 * lo_m, a.begin() + base + hi_m);
    }
  }
}

void apply_gate_inplace(std::vector<cplx>& a, const GateOp& g, int total_qubits) {
  switch (g.kind) {
    case GateOp::Kind::hadamard:
      check_qubit(g.q0, total_qubits);
      apply_hadamard(a, g.q0);
      break;
    case GateOp::Kind::controlled_phase:
      check_qubit(g.q0, total_qubits);
      check_qubit(g.q1, total_qubits);
      if (g.q0 == g.q1) {
        throw IndexOutOfRange("controlled phase qubits must differ");
      }
      apply_controlled_phase(a, g.q0, g.q1, g.angle);
      break;
    case GateOp::Kind::swap:
      check_qubit(g.q0, total_qubits);
      check_qubit(g.q1, total_qubits);
      apply_swap(a, g.q0, g.q1);
      break;
    case GateOp::Kind::cnot:
      check_qubit(g.q0, total_qubits);
      check_qubit(g.q1, total_qubits);
      apply_cnot(a, g.q0, g.q1);
      break;
  }
}

GateOp shift_gate(const GateOp& g, int offset) {
  GateOp out = g;
  out.q0 += offset;
  if (g.kind != GateOp::Kind::hadamard) {
    out.q1 += offset;
  }
  return out;
}

}  // namespace

StateVector::StateVector(std::vector<cplx> amplitudes, RegisterSplit registers)
    : regs_(registers), amps_(std::move(amplitudes)) {
  if (regs_.counting_qubits < 0 || regs_.system_qubits < 0) {
    throw DimensionMismatch("register sizes must be nonnegative");
  }
  if (amps_.size() != regs_.dim()) {
    throw DimensionMismatch("amplitude count " + std::to_string(amps_.size()) +
                            " does not match register dimension " + std::to_string(regs_.dim()));
  }
  const double norm = kernels::norm_sq(amps_.data(), amps_.size());
  if (std::abs(norm - 1.0) > 1e-12) {
    throw InputError("state norm^2 deviates from 1 by " + std::to_string(std::abs(norm - 1.0)));
  }
}

StateVector prepare_state(std::span<const cplx> vec, RegisterSplit registers) {
  if (vec.size() != registers.dim()) {
    throw DimensionMismatch("vector length " + std::to_string(vec.size()) +
                            " does not match register dimension " + std::to_string(registers.dim()));
  }
  const double norm_sq = kernels::norm_sq(vec.data(), vec.size());
  if (norm_sq == 0.0) {
    throw ZeroVector("cannot prepare a state from the zero vector");
  }
  std::vector<cplx> amps(vec.begin(), vec.end());
  kernels::scale(1.0 / std::sqrt(norm_sq), amps.data(), amps.size());
  return StateVector(std::move(amps), registers);
}

StateVector apply_gate(const StateVector& state, const GateOp& gate) {
  std::vector<cplx> amps = state.amplitudes();
  apply_gate_inplace(amps, gate, state.registers().total());
  return StateVector(std::move(amps), state.registers());
}

StateVector apply_counting_gates(const StateVector& state, std::span<const GateOp> gates) {
  const int offset = state.registers().system_qubits;
  std::vector<cplx> amps = state.amplitudes();
  for (const GateOp& g : gates) {
    apply_gate_inplace(amps, shift_gate(g, offset), state.registers().total());
  }
  return StateVector(std::move(amps), state.registers());
}

StateVector apply_block_permutation(const StateVector& state) {
  const int b_count = state.registers().counting_qubits;
  if (b_count < 1) {
    throw DimensionMismatch("block permutation needs a counting register");
  }
  const std::vector<GateOp> gates = permutation_as_cnots(b_count);
  return apply_counting_gates(state, gates);
}

std::vector<cplx> qft_dense(int qubits) {
  if (qubits < 1 || qubits > kDenseQubitCap) {
    throw NodeCountOutOfRange("dense transform limited to 1..10 qubits");
  }
  const std::size_t n = std::size_t{1} << qubits;
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<cplx> u(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((j * k) % n) / static_cast<double>(n);
      u[j * n + k] = inv_sqrt_n * cplx(std::cos(angle), std::sin(angle));
    }
  }
  return u;
}

std::vector<GateOp> qft_gates(int qubits) {
  if (qubits < 1) {
    throw NodeCountOutOfRange("transform needs at least one qubit");
  }
  std::vector<GateOp> gates;
  for (int j = qubits - 1; j >= 0; --j) {
    gates.push_back(GateOp::h(j));
    for (int k = j - 1; k >= 0; --k) {
      gates.push_back(GateOp::cp(k, j, std::numbers::pi / static_cast<double>(1 << (j - k))));
    }
  }
  for (int i = 0; i < qubits / 2; ++i) {
    gates.push_back(GateOp::swap_q(i, qubits - 1 - i));
  }
  return gates;
}

StateVector apply_qft_counting(const StateVector& state) {
  const int b_count = state.registers().counting_qubits;
  if (b_count < 1) {
    throw DimensionMismatch("transform needs a counting register");
  }
  const std::vector<GateOp> gates = qft_gates(b_count);
  return apply_counting_gates(state, gates);
}

std::vector<cplx> circuit_unitary(std::span<const GateOp> gates, int qubits) {
  if (qubits < 1 || qubits > kDenseQubitCap) {
    throw NodeCountOutOfRange("dense circuit unitary limited to 1..10 qubits");
  }
  const std::size_t n = std::size_t{1} << qubits;
  std::vector<cplx> u(n * n, cplx(0.0));
  std::vector<cplx> column(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::fill(column.begin(), column.end(), cplx(0.0));
    column[k] = 1.0;
    for (const GateOp& g : gates) {
      apply_gate_inplace(column, g, qubits);
    }
    for (std::size_t j = 0; j < n; ++j) {
      u[j * n + k] = column[j];
    }
  }
  return u;
}

double counting_probability(const StateVector& state, int j) {
  const RegisterSplit regs = state.registers();
  const int n_nodes = 1 << regs.counting_qubits;
  if (j < 0 || j >= n_nodes) {
    throw IndexOutOfRange("counting value " + std::to_string(j) + " out of range");
  }
  const std::size_t block = std::size_t{1} << regs.system_qubits;
  return kernels::norm_sq(state.amplitudes().data() + static_cast<std::size_t>(j) * block, block);
}

double recover_s_norm_sq(double p, double y_norm_sq, double rho, int n_nodes) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidProbability("probability " + std::to_string(p) + " outside [0, 1]");
  }
  if (y_norm_sq < 0.0) {
    throw InvalidProbability("squared norm must be nonnegative");
  }
  return rho * rho * p * y_norm_sq / static_cast<double>(n_nodes);
}

HhlOutcome idealized_hhl(const AugmentedSystem& sys, double c) {
  if (!(c > 0.0)) {
    throw InvalidConstant("rotation constant must be positive");
  }
  // The smallest singular value of the system matrix bounds the admissible
  // rotation constant. The shifted blocks are normal, so their singular
  // values are |z_k - lambda_j|; a stub's matrix is Hermitian, so its
  // singular values are |eigenvalues|.
  double min_singular = -1.0;
  if (sys.is_stub()) {
    if (sys.op().dim() <= kEigenDimCap) {
      const EigenDecomposition d = eig_hermitian(sys.op());
      min_singular = std::abs(d.eigenvalues[0]);
      for (double lambda : d.eigenvalues) {
        min_singular = std::min(min_singular, std::abs(lambda));
      }
    }
  } else if (sys.op().dim() <= kEigenDimCap) {
    const EigenDecomposition d = eig_hermitian(sys.op());
    min_singular = std::numeric_limits<double>::infinity();
    for (double lambda : d.eigenvalues) {
      for (const cplx& z : sys.quadrature().nodes) {
        min_singular = std::min(min_singular, std::abs(z - lambda));
      }
    }
  }
  if (min_singular >= 0.0 && c > min_singular * (1.0 + 1e-12)) {
    throw InvalidConstant("rotation constant " + std::to_string(c) +
                          " exceeds the smallest singular value " + std::to_string(min_singular));
  }

  const SolutionLayout layout = solve_augmented(sys);
  const std::vector<cplx> rhs = sys.rhs();
  const double y_norm_sq = kernels::norm_sq(layout.y.data(), layout.y.size());
  const double rhs_norm_sq = kernels::norm_sq(rhs.data(), rhs.size());
  const long d = sys.dim();
  if (d <= 0 || (d & (d - 1)) != 0) {
    throw DimensionMismatch("system dimension must be a power of two to form registers");
  }
  RegisterSplit regs;
  if (sys.is_stub()) {
    regs.counting_qubits = 0;
    while ((1L << regs.system_qubits) < d) {
      ++regs.system_qubits;
    }
  } else {
    regs.counting_qubits = sys.quadrature().node_qubits;
    const int n = sys.block_dim();
    while ((1 << regs.system_qubits) < n) {
      ++regs.system_qubits;
    }
    if ((1 << regs.system_qubits) != n) {
      throw DimensionMismatch("block dimension must be a power of two to form registers");
    }
  }
  HhlOutcome out{prepare_state(layout.y, regs), c * c * y_norm_sq / rhs_norm_sq};
  return out;
}

double swap_test_accept_prob(const StateVector& u, const StateVector& w) {
  if (u.amplitudes().size() != w.amplitudes().size()) {
    throw DimensionMismatch("swap test requires equal register sizes");
  }
  const cplx overlap =
      kernels::dot_conj(u.amplitudes().data(), w.amplitudes().data(), u.amplitudes().size());
  return 0.5 * (1.0 + std::norm(overlap));
}

std::vector<std::uint64_t> sample_counts(const StateVector& state, int shots, std::uint64_t seed) {
  if (shots < 1) {
    throw InputError("shot count must be at least 1");
  }
  const std::vector<cplx>& a = state.amplitudes();
  std::vector<double> cdf(a.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc += std::norm(a[i]);
    cdf[i] = acc;
  }
  cdf.back() = 1.0;
  std::mt19937_64 engine(mix_seed(seed, 0x73686f7473ULL));
  std::vector<std::uint64_t> histogram(a.size(), 0);
  for (int s = 0; s < shots; ++s) {
    const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const std::size_t idx = std::min(static_cast<std::size_t>(it - cdf.begin()), a.size() - 1);
    ++histogram[idx];
  }
  return histogram;
}

QuadratureSpectrum quadrature_spectrum(const std::vector<std::vector<cplx>>& xs) {
  const int n_nodes = static_cast<int>(xs.size());
  if (n_nodes == 0) {
    throw DimensionMismatch("spectrum needs at least one node vector");
  }
  const std::size_t n = xs[0].size();
  QuadratureSpectrum spec;
  spec.t.assign(n_nodes, std::vector<cplx>(n, cplx(0.0)));
  spec.norms.resize(n_nodes);
  const double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(n_nodes));
  for (int j = 0; j < n_nodes; ++j) {
    for (int k = 0; k < n_nodes; ++k) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((static_cast<long>(j) * k) % n_nodes) /
                           static_cast<double>(n_nodes);
      const cplx w = inv_sqrt * cplx(std::cos(angle), std::sin(angle));
      kernels::axpy(w, xs[k].data(), spec.t[j].data(), n);
    }
    spec.norms[j] = std::sqrt(kernels::norm_sq(spec.t[j].data(), n));
  }
  return spec;
}

std::vector<GateOp> counting_circuit(int node_qubits) {
  std::vector<GateOp> gates = permutation_as_cnots(node_qubits);
  const std::vector<GateOp> qft = qft_gates(node_qubits);
  gates.insert(gates.end(), qft.begin(), qft.end());
  return gates;
}

std::string circuit_to_json(std::span<const GateOp> gates) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const GateOp& g : gates) {
    nlohmann::ordered_json item;
    switch (g.kind) {
      case GateOp::Kind::hadamard:
        item["gate"] = "h";
        item["qubit"] = g.q0;
        break;
      case GateOp::Kind::controlled_phase:
        item["gate"] = "cp";
        item["control"] = g.q0;
        item["target"] = g.q1;
        item["angle_over_pi"] = g.angle / std::numbers::pi;
        break;
      case GateOp::Kind::swap:
        item["gate"] = "swap";
        item["a"] = g.q0;
        item["b"] = g.q1;
        break;
      case GateOp::Kind::cnot:
        item["gate"] = "cnot";
        item["control"] = g.q0;
        item["target"] = g.q1;
        break;
    }
    arr.push_back(std::move(item));
  }
  return arr.dump(2);
}

}  // namespace spectra
