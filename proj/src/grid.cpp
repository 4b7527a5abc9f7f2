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

#include "sfdig/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sfdig {

std::string_view to_string(BoundaryMode mode) {
  return mode == BoundaryMode::Periodic ? "periodic" : "twisted";
}

BoundaryMode parse_boundary_mode(std::string_view text) {
  if (text == "periodic") return BoundaryMode::Periodic;
  if (text == "twisted") return BoundaryMode::Twisted;
  throw std::invalid_argument("unknown boundary mode: " + std::string(text));
}

JlpGrid JlpGrid::from_qubits(int n_qubits, double phi_max, BoundaryMode bc) {
  if (n_qubits < 1) throw std::invalid_argument("JlpGrid: n_qubits must be >= 1");
  if (n_qubits > 20) throw std::invalid_argument("JlpGrid: n_qubits must be <= 20");
  return JlpGrid(1 << n_qubits, n_qubits, phi_max, bc);
}

JlpGrid JlpGrid::from_states(int n_states, double phi_max, BoundaryMode bc) {
  if (n_states < 2) throw std::invalid_argument("JlpGrid: n_states must be >= 2");
  std::optional<int> nq;
  if ((n_states & (n_states - 1)) == 0) {
    int q = 0;
    while ((1 << q) < n_states) ++q;
    nq = q;
  }
  return JlpGrid(n_states, nq, phi_max, bc);
}

JlpGrid::JlpGrid(int n_states, std::optional<int> n_qubits, double phi_max,
                 BoundaryMode bc)
    : n_states_(n_states), n_qubits_(n_qubits), phi_max_(phi_max), bc_(bc) {
  if (!(phi_max > 0.0) || !std::isfinite(phi_max)) {
    throw std::invalid_argument("JlpGrid: phi_max must be positive and finite");
  }
  delta_ = 2.0 * phi_max_ / (n_states_ - 1);
  field_.resize(n_states_);
  for (int b = 0; b < n_states_; ++b) {
    // Pair b with its mirror so the grid is exactly antisymmetric.
    field_[b] = phi_max_ * (2.0 * b - (n_states_ - 1)) / (n_states_ - 1);
  }
  momenta_.resize(n_states_);
  const double dk = momentum_spacing();
  const auto labels = momentum_labels();
  for (int b = 0; b < n_states_; ++b) momenta_[b] = labels[b] * dk;
}

int JlpGrid::qubits() const {
  if (!n_qubits_) {
    throw std::logic_error("JlpGrid: grid with " + std::to_string(n_states_) +
                           " states has no qubit register");
  }
  return *n_qubits_;
}

double JlpGrid::momentum_spacing() const {
  return 2.0 * std::numbers::pi / (delta_ * n_states_);
}

std::vector<double> momentum_labels(int n_states, BoundaryMode bc) {
  if (n_states < 1) throw std::invalid_argument("momentum_labels: n_states must be >= 1");
  // Centered set j - (n-1)/2 when its parity matches the boundary, else j + 1 - n/2.
  const bool odd = n_states % 2 == 1;
  const bool twisted = bc == BoundaryMode::Twisted;
  const double shift = twisted != odd ? 0.5 : 0.0;
  std::vector<double> labels(n_states);
  for (int b = 0; b < n_states; ++b) labels[b] = -0.5 * n_states + (b + 1) - shift;
  return labels;
}

std::vector<double> JlpGrid::momentum_labels() const {
  return sfdig::momentum_labels(n_states_, bc_);
}

double JlpGrid::max_abs_momentum() const {
  double m = 0.0;
  for (double k : momenta_) m = std::max(m, std::abs(k));
  return m;
}

SaturationEstimate ns_saturation_estimate(const JlpGrid& grid, double support_k) {
  const double kmax = grid.max_abs_momentum();
  return {kmax >= support_k, kmax - support_k};
}

int min_states_for_support(double phi_max, double support_k, BoundaryMode bc,
                           int max_states) {
  for (int n = 2; n <= max_states; n += 2) {
    if (ns_saturation_estimate(JlpGrid::from_states(n, phi_max, bc), support_k).saturated) {
      return n;
    }
  }
  throw std::invalid_argument("min_states_for_support: support not reachable");
}

double balanced_phi_max(int n_states) {
  if (n_states < 2) throw std::invalid_argument("balanced_phi_max: n_states must be >= 2");
  // max|k| = L pi (n-1) / (n phi_max) with L the largest |label|; solve max|k| = phi_max.
  const auto labels = momentum_labels(n_states, BoundaryMode::Twisted);
  const double l = std::max(std::abs(labels.front()), std::abs(labels.back()));
  return std::sqrt(l * std::numbers::pi * (n_states - 1) / n_states);
}

void HoBasisSpec::validate() const {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw std::invalid_argument("HoBasisSpec: omega must be positive");
  }
  if (n_states < 1) throw std::invalid_argument("HoBasisSpec: n_states must be >= 1");
  if (headroom < 0) throw std::invalid_argument("HoBasisSpec: headroom must be >= 0");
}

}  // namespace sfdig
