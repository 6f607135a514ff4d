// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string>

namespace spectra {

/// Elementary gate on register-local qubit indices (0 = least significant).
struct GateOp {
  enum class Kind { hadamard, controlled_phase, swap, cnot };
  Kind kind = Kind::hadamard;
  int q0 = 0;           // hadamard: target; cp/cnot: control; swap: first qubit
  int q1 = 0;           // cp/cnot: target; swap: second qubit
  double angle = 0.0;   // controlled_phase only (radians)

  static GateOp h(int qubit) { return {Kind::hadamard, qubit, 0, 0.0}; }
  static GateOp cp(int control, int target, double angle) {
    return {Kind::controlled_phase, control, target, angle};
  }
  static GateOp swap_q(int a, int b) { return {Kind::swap, a, b, 0.0}; }
  static GateOp cnot(int control, int target) { return {Kind::cnot, control, target, 0.0}; }
};

/// JSON gate-list export, e.g.
/// [{"gate":"cnot","control":3,"target":0},{"gate":"h","qubit":3},
///  {"gate":"cp","control":2,"target":3,"angle_over_pi":0.5}, ...]
std::string circuit_to_json(std::span<const GateOp> gates);

}  // namespace spectra
