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

#include "sfdig/circuit.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace sfdig {

Gate Gate::inverse() const {
  switch (kind) {
    case GateKind::S: return sdg(q0);
    case GateKind::Sdg: return s(q0);
    case GateKind::PhaseR: return phase(q0, -angle);
    case GateKind::GlobalPhase: return global_phase(-angle);
    default: return *this;
  }
}

void Circuit::add(const Gate& g) {
  auto check = [this](int q) {
    if (q < 0 || q >= width_) {
      throw std::invalid_argument("Circuit: qubit " + std::to_string(q) + " out of range");
    }
  };
  switch (g.kind) {
    case GateKind::GlobalPhase: break;
    case GateKind::CNOT:
      check(g.q0);
      check(g.q1);
      if (g.q0 == g.q1) throw std::invalid_argument("Circuit: CNOT control equals target");
      break;
    default: check(g.q0);
  }
  gates_.push_back(g);
}

void Circuit::add_rz(int q, double theta) {
  // e^{i theta Z} = e^{i theta} diag(1, e^{-2 i theta})
  add(Gate::phase(q, -2.0 * theta / std::numbers::pi));
  add(Gate::global_phase(theta / std::numbers::pi));
}

void Circuit::append(const Circuit& other) {
  if (other.width_ > width_) throw std::invalid_argument("Circuit::append: circuit too wide");
  for (const auto& g : other.gates_) add(g);
}

void Circuit::append_mapped(const Circuit& other, const std::vector<int>& map) {
  if (static_cast<int>(map.size()) < other.width_) {
    throw std::invalid_argument("Circuit::append_mapped: map too short");
  }
  for (Gate g : other.gates_) {
    if (g.q0 >= 0) g.q0 = map[g.q0];
    if (g.q1 >= 0) g.q1 = map[g.q1];
    add(g);
  }
}

Circuit Circuit::inverse() const {
  Circuit out(width_);
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) out.add(it->inverse());
  return out;
}

std::string Circuit::to_text() const {
  std::string out;
  char buf[96];
  for (const auto& g : gates_) {
    switch (g.kind) {
      case GateKind::H: std::snprintf(buf, sizeof buf, "H %d\n", g.q0); break;
      case GateKind::S: std::snprintf(buf, sizeof buf, "S %d\n", g.q0); break;
      case GateKind::Sdg: std::snprintf(buf, sizeof buf, "SDG %d\n", g.q0); break;
      case GateKind::CNOT: std::snprintf(buf, sizeof buf, "CNOT %d %d\n", g.q0, g.q1); break;
      case GateKind::PhaseR: std::snprintf(buf, sizeof buf, "PR %d %.17g\n", g.q0, g.angle); break;
      case GateKind::GlobalPhase: std::snprintf(buf, sizeof buf, "GPHASE %.17g\n", g.angle); break;
    }
    out += buf;
  }
  return out;
}

Circuit Circuit::from_text(std::string_view text, int width) {
  Circuit c(width);
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string op;
    ls >> op;
    int a = -1, b = -1;
    double theta = 0.0;
    bool ok = true;
    if (op == "H" || op == "S" || op == "SDG") {
      ok = static_cast<bool>(ls >> a);
      if (ok) c.add(op == "H" ? Gate::h(a) : op == "S" ? Gate::s(a) : Gate::sdg(a));
    } else if (op == "CNOT") {
      ok = static_cast<bool>(ls >> a >> b);
      if (ok) c.add(Gate::cnot(a, b));
    } else if (op == "PR") {
      ok = static_cast<bool>(ls >> a >> theta);
      if (ok) c.add(Gate::phase(a, theta));
    } else if (op == "GPHASE") {
      ok = static_cast<bool>(ls >> theta);
      if (ok) c.add(Gate::global_phase(theta));
    } else {
      ok = false;
    }
    if (!ok) throw std::invalid_argument("Circuit: cannot parse line '" + line + "'");
  }
  return c;
}

Circuit synth_pauli_exp(const PauliString& p, double theta) {
  p.validate();
  const int n = p.n_qubits();
  Circuit c(n);
  const double alpha = theta * p.coefficient;
  std::vector<int> support;
  for (int q = 0; q < n; ++q) {
    if (p.axes[q] != 'I') support.push_back(q);
  }
  if (support.empty()) {
    c.add(Gate::global_phase(alpha / std::numbers::pi));
    return c;
  }
  Circuit basis(n);
  for (int q : support) {
    if (p.axes[q] == 'X') {
      basis.add(Gate::h(q));
    } else if (p.axes[q] == 'Y') {
      basis.add(Gate::sdg(q));
      basis.add(Gate::h(q));
    }
  }
  Circuit ladder(n);
  for (size_t i = 0; i + 1 < support.size(); ++i) {
    ladder.add(Gate::cnot(support[i], support[i + 1]));
  }
  c.append(basis);
  c.append(ladder);
  c.add_rz(support.back(), alpha);
  c.append(ladder.inverse());
  c.append(basis.inverse());
  return c;
}

Circuit synth_pauli_sum_exp(const PauliSum& sum, double theta) {
  Circuit c(sum.n_qubits());
  for (const auto& t : sum.terms()) c.append(synth_pauli_exp(t, theta));
  return c;
}

namespace {

// Controlled phase e^{i pi theta} on |11>, control-side phase left out.
void add_controlled_phase_core(Circuit& c, int control, int target, double theta) {
  c.add(Gate::cnot(control, target));
  c.add(Gate::phase(target, -0.5 * theta));
  c.add(Gate::cnot(control, target));
  c.add(Gate::phase(target, 0.5 * theta));
}

double qft_pair_angle(int q, int r) { return std::ldexp(1.0, -(r - q)); }

}  // namespace

Circuit standard_qft_circuit(int n) {
  if (n < 1) throw std::invalid_argument("standard_qft_circuit: n must be >= 1");
  Circuit c(n);
  for (int q = 0; q < n; ++q) {
    c.add(Gate::h(q));
    for (int r = q + 1; r < n; ++r) {
      const double theta = qft_pair_angle(q, r);
      c.add(Gate::phase(r, 0.5 * theta));
      add_controlled_phase_core(c, r, q, theta);
    }
  }
  return c;
}

Circuit symmetric_qft_circuit(int n) {
  if (n < 1) throw std::invalid_argument("symmetric_qft_circuit: n must be >= 1");
  Circuit c(n);
  const double m = std::ldexp(1.0, n) - 1.0;
  for (int q = 0; q < n; ++q) {
    double angle = -m * std::ldexp(1.0, -(q + 1));
    for (int t = 0; t < q; ++t) angle += 0.5 * qft_pair_angle(t, q);
    c.add(Gate::phase(q, angle));
  }
  for (int q = 0; q < n; ++q) {
    c.add(Gate::h(q));
    for (int r = q + 1; r < n; ++r) add_controlled_phase_core(c, r, q, qft_pair_angle(q, r));
  }
  return c;
}

Circuit reversal_swap_network(int n) {
  Circuit c(n);
  for (int q = 0; q < n / 2; ++q) {
    const int r = n - 1 - q;
    c.add(Gate::cnot(q, r));
    c.add(Gate::cnot(r, q));
    c.add(Gate::cnot(q, r));
  }
  return c;
}

PauliSum jlp_potential_sum(const JlpGrid& grid, const SiteTheoryParams& params) {
  std::vector<double> v;
  v.reserve(grid.n_states());
  for (double phi : grid.field_values()) {
    const double p2 = phi * phi;
    v.push_back(0.5 * params.mass_sq * p2 + params.lambda / 24.0 * p2 * p2);
  }
  return decompose_diagonal(v);
}

PauliSum jlp_kinetic_momentum_sum(const JlpGrid& grid) {
  auto f = pi2_momentum_diagonal(grid, Pi2Variant::Exact);
  for (auto& x : f) x *= 0.5;
  return decompose_diagonal(f);
}

Circuit trotter_step_jlp(const JlpGrid& grid, const SiteTheoryParams& params, double dt,
                         bool use_swaps) {
  params.validate();
  const int n = grid.qubits();
  Circuit c(n);
  c.append(synth_pauli_sum_exp(jlp_potential_sum(grid, params), -dt));
  const Circuit qft = symmetric_qft_circuit(n);
  const Circuit kinetic = synth_pauli_sum_exp(jlp_kinetic_momentum_sum(grid), -dt);
  c.append(qft);
  if (use_swaps) {
    const Circuit swaps = reversal_swap_network(n);
    c.append(swaps);
    c.append(kinetic);
    c.append(swaps);
  } else {
    std::vector<int> reversed(n);
    for (int p = 0; p < n; ++p) reversed[p] = n - 1 - p;
    c.append_mapped(kinetic, reversed);
  }
  c.append(qft.inverse());
  return c;
}

StateVector simulate_statevector(const Circuit& circuit, const StateVector& state) {
  const int n = circuit.width();
  if (n > 30) throw std::invalid_argument("simulate_statevector: circuit too wide");
  const long dim = 1L << n;
  if (state.size() != dim) throw std::invalid_argument("simulate_statevector: dimension mismatch");
  StateVector psi = state;
  const double r2 = 1.0 / std::numbers::sqrt2;
  for (const auto& g : circuit.gates()) {
    const long bit = g.q0 >= 0 ? 1L << (n - 1 - g.q0) : 0;
    switch (g.kind) {
      case GateKind::H:
        for (long i = 0; i < dim; ++i) {
          if (i & bit) continue;
          const cplx a = psi(i), b = psi(i | bit);
          psi(i) = r2 * (a + b);
          psi(i | bit) = r2 * (a - b);
        }
        break;
      case GateKind::S:
      case GateKind::Sdg: {
        const cplx ph(0.0, g.kind == GateKind::S ? 1.0 : -1.0);
        for (long i = 0; i < dim; ++i) {
          if (i & bit) psi(i) *= ph;
        }
        break;
      }
      case GateKind::PhaseR: {
        const cplx ph = std::polar(1.0, std::numbers::pi * g.angle);
        for (long i = 0; i < dim; ++i) {
          if (i & bit) psi(i) *= ph;
        }
        break;
      }
      case GateKind::GlobalPhase:
        psi *= std::polar(1.0, std::numbers::pi * g.angle);
        break;
      case GateKind::CNOT: {
        const long tbit = 1L << (n - 1 - g.q1);
        for (long i = 0; i < dim; ++i) {
          if ((i & bit) && !(i & tbit)) std::swap(psi(i), psi(i | tbit));
        }
        break;
      }
    }
  }
  return psi;
}

Eigen::MatrixXcd circuit_unitary(const Circuit& circuit) {
  if (circuit.width() > 6) throw std::invalid_argument("circuit_unitary: width must be <= 6");
  const long dim = 1L << circuit.width();
  Eigen::MatrixXcd u(dim, dim);
  for (long c = 0; c < dim; ++c) {
    StateVector e = StateVector::Zero(dim);
    e(c) = 1.0;
    u.col(c) = simulate_statevector(circuit, e);
  }
  return u;
}

GateCounts count_gates(const Circuit& circuit) {
  GateCounts n;
  for (const auto& g : circuit.gates()) {
    switch (g.kind) {
      case GateKind::H: ++n.h; break;
      case GateKind::S: ++n.s; break;
      case GateKind::Sdg: ++n.sdg; break;
      case GateKind::CNOT: ++n.cnot; break;
      case GateKind::PhaseR: ++n.phase; break;
      case GateKind::GlobalPhase: ++n.global_phase; break;
    }
  }
  return n;
}

double distance_up_to_phase(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("distance_up_to_phase: shape mismatch");
  }
  const cplx overlap = (b.conjugate().cwiseProduct(a)).sum();
  const cplx phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : cplx(1.0, 0.0);
  return (a - phase * b).cwiseAbs().maxCoeff();
}

}  // namespace sfdig
