// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spectra/augmented.hpp"
#include "spectra/gates.hpp"

namespace spectra {

/// Counting register (most significant qubits) over quadrature indices,
/// system register (least significant) over the solution component:
/// basis index = counting_index * 2^system_qubits + system_index.
struct RegisterSplit {
  int counting_qubits = 0;
  int system_qubits = 0;
  int total() const { return counting_qubits + system_qubits; }
  std::size_t dim() const { return std::size_t{1} << total(); }
};

/// Exact amplitude vector over the two registers. Immutable; gate application
/// returns a new state. Norm is validated to 1 within 1e-12 on construction.
class StateVector {
 public:
  StateVector(std::vector<cplx> amplitudes, RegisterSplit registers);
  const std::vector<cplx>& amplitudes() const { return amps_; }
  RegisterSplit registers() const { return regs_; }

 private:
  RegisterSplit regs_;
  std::vector<cplx> amps_;
};

/// Normalize a raw vector into a state. Throws ZeroVector, DimensionMismatch.
StateVector prepare_state(std::span<const cplx> vec, RegisterSplit registers);

/// Apply one gate; qubit indices are global (0 = least significant).
StateVector apply_gate(const StateVector& state, const GateOp& gate);

/// Apply gates addressed in counting-register-local indices.
StateVector apply_counting_gates(const StateVector& state, std::span<const GateOp> gates);

/// Relabel the counting register by the block permutation (the CNOT cascade
/// from permutation_as_cnots, identity on the system register).
StateVector apply_block_permutation(const StateVector& state);

/// Dense DFT matrix, entry (j, k) = exp(+2*pi*i*j*k/N)/sqrt(N), row-major.
/// Dense construction capped at 10 qubits.
std::vector<cplx> qft_dense(int qubits);

/// Standard gate decomposition of the same unitary: per-qubit Hadamards and
/// controlled phases of +pi/2^m, then qubit-reversal swaps.
std::vector<GateOp> qft_gates(int qubits);

/// Apply the QFT to the counting register.
StateVector apply_qft_counting(const StateVector& state);

/// Build the unitary matrix a gate list implements (applies the gates to each
/// basis state of a `qubits`-qubit register; test oracle, capped at 10 qubits).
std::vector<cplx> circuit_unitary(std::span<const GateOp> gates, int qubits);

/// Probability of reading value j off the counting register.
/// Throws IndexOutOfRange.
double counting_probability(const StateVector& state, int j);

/// Invert p = N*||s||^2 / (rho^2*||y||^2) for ||s||^2.
/// Throws InvalidProbability unless p in [0, 1] and y_norm_sq >= 0.
double recover_s_norm_sq(double p, double y_norm_sq, double rho, int n_nodes);

/// Idealized linear-system solver model: returns the exact normalized
/// solution state of the augmented system plus the success-ancilla
/// zero-probability c^2*||y||^2/||v'||^2, from which ||y||^2 is recoverable.
/// The rotation constant c must not exceed the smallest singular value of the
/// system matrix (checked through the eigenvalues when the dimensions permit);
/// otherwise InvalidConstant is thrown.
struct HhlOutcome {
  StateVector state;
  double ancilla_zero_prob = 0.0;
};
HhlOutcome idealized_hhl(const AugmentedSystem& sys, double c);

/// Swap-test accept probability (1 + |<u|w>|^2)/2. Throws DimensionMismatch.
double swap_test_accept_prob(const StateVector& u, const StateVector& w);

/// Multinomial sampling of basis outcomes; counts indexed by basis state.
/// Deterministic for a fixed seed.
std::vector<std::uint64_t> sample_counts(const StateVector& state, int shots, std::uint64_t seed);

/// DFT of the per-node solution vectors: t_j = sum_k exp(2*pi*i*j*k/N) x_k / sqrt(N).
/// Satisfies Parseval: sum_j ||t_j||^2 == sum_k ||x_k||^2.
struct QuadratureSpectrum {
  std::vector<std::vector<cplx>> t;
  std::vector<double> norms;
};
QuadratureSpectrum quadrature_spectrum(const std::vector<std::vector<cplx>>& xs);

/// Counting-register circuit for the full readout: permutation CNOTs followed
/// by the QFT (the exportable gate list).
std::vector<GateOp> counting_circuit(int node_qubits);

}  // namespace spectra
