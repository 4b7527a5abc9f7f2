// Copyright 2026 The sfdig Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "sfdig/grid.hpp"
#include "sfdig/hamiltonian.hpp"
#include "sfdig/pauli.hpp"

namespace sfdig {

/**
 * Gate primitives. Angles of PhaseR and GlobalPhase are in units of pi:
 * PhaseR(theta) = diag(1, e^{i pi theta}), GlobalPhase(theta) = e^{i pi theta}.
 * Qubit 0 is the most significant bit of a basis-state index.
 */
enum class GateKind { H, S, Sdg, CNOT, PhaseR, GlobalPhase };

struct Gate {
  GateKind kind;
  int q0 = -1;  // target, or control for CNOT
  int q1 = -1;  // CNOT target
  double angle = 0.0;

  static Gate h(int q) { return {GateKind::H, q, -1, 0.0}; }
  static Gate s(int q) { return {GateKind::S, q, -1, 0.0}; }
  static Gate sdg(int q) { return {GateKind::Sdg, q, -1, 0.0}; }
  static Gate cnot(int control, int target) { return {GateKind::CNOT, control, target, 0.0}; }
  static Gate phase(int q, double theta) { return {GateKind::PhaseR, q, -1, theta}; }
  static Gate global_phase(double theta) { return {GateKind::GlobalPhase, -1, -1, theta}; }

  Gate inverse() const;
};

class Circuit {
 public:
  explicit Circuit(int width = 0) : width_(width) {}

  int width() const { return width_; }
  const std::vector<Gate>& gates() const { return gates_; }

  void add(const Gate& g);
  /// e^{i theta Z} on qubit q as a phase gate and a global phase.
  void add_rz(int q, double theta);
  void append(const Circuit& other);
  /// Appends another circuit with its qubit q placed on map[q].
  void append_mapped(const Circuit& other, const std::vector<int>& map);

  Circuit inverse() const;

  /// Text form, one gate per line: "H 2", "CNOT 0 1", "PR 1 -0.875", "GPHASE 0.125".
  std::string to_text() const;
  static Circuit from_text(std::string_view text, int width);

 private:
  int width_;
  std::vector<Gate> gates_;
};

/// exp(i theta c P) for P with coefficient c. The identity string yields a
/// single global phase; a k-body string uses 2(k-1) CNOTs.
Circuit synth_pauli_exp(const PauliString& p, double theta);

/// exp(i theta sum_j c_j P_j) for mutually commuting strings.
Circuit synth_pauli_sum_exp(const PauliSum& sum, double theta);

/// Textbook transform without terminal swaps: the state |x> is sent to
/// sum_j e^{2 pi i x j / 2^n} |rev(j)> / 2^{n/2}, where rev reverses bit order.
/// Controlled phases are emitted as two CNOTs and three phase gates.
Circuit standard_qft_circuit(int n);

/// Phase layer R(-M/2), R(-M/4), ... (M = 2^n - 1) followed by the standard
/// transform. The control-side phases of each controlled phase are folded
/// into the initial layer, leaving one phase gate per qubit there.
Circuit symmetric_qft_circuit(int n);

/// Swap network reversing qubit order, three CNOTs per swap.
Circuit reversal_swap_network(int n);

/**
 * One first-order Trotter step exp(-i H_Pi dt) exp(-i H_phi dt) of a single
 * JLP site with exact Pi^2: field-space phases, symmetric transform,
 * momentum-space phases on bit-reversed qubits, inverse transform. With
 * use_swaps the momentum phases act on the natural qubit order between two
 * swap networks instead.
 */
Circuit trotter_step_jlp(const JlpGrid& grid, const SiteTheoryParams& params, double dt,
                         bool use_swaps = false);

/// Field-space potential 1/2 mass_sq phi^2 + lambda/4! phi^4 as a Pauli sum.
PauliSum jlp_potential_sum(const JlpGrid& grid, const SiteTheoryParams& params);
/// 1/2 k^2 over the symmetric-transform momentum index as a Pauli sum.
PauliSum jlp_kinetic_momentum_sum(const JlpGrid& grid);

using StateVector = Eigen::VectorXcd;

StateVector simulate_statevector(const Circuit& circuit, const StateVector& state);

/// Full unitary of a circuit of width <= 6.
Eigen::MatrixXcd circuit_unitary(const Circuit& circuit);

struct GateCounts {
  long h = 0;
  long s = 0;
  long sdg = 0;
  long cnot = 0;
  long phase = 0;
  long global_phase = 0;

  long single_qubit() const { return h + s + sdg + phase; }
};

GateCounts count_gates(const Circuit& circuit);

/// max over entries of |A - e^{i a} B| with the best global phase a.
double distance_up_to_phase(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

}  // namespace sfdig
