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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sfdig {

/// Boundary condition imposed on the field register. Twisted shifts every
/// conjugate momentum by half a momentum spacing, which places the momentum
/// samples symmetrically about zero.
enum class BoundaryMode { Periodic, Twisted };

std::string_view to_string(BoundaryMode mode);
BoundaryMode parse_boundary_mode(std::string_view text);

/**
 * Uniform digitization of one field site.
 *
 * Field samples are phi_b = -phi_max + delta * b for b = 0 .. n_states-1 with
 * delta = 2 phi_max / (n_states - 1). Conjugate momenta are
 * k_b = -pi/delta + (b + 1 - shift) * 2 pi / (delta n_states), where shift is
 * 0 for periodic and 1/2 for twisted boundaries; index b of the momentum array
 * lines up with column b of the matching discrete Fourier matrix.
 *
 * A grid built from a qubit count has n_states = 2^n_q. Grids built from an
 * arbitrary state count exist for sweeps only and carry no qubit count.
 */
class JlpGrid {
 public:
  static JlpGrid from_qubits(int n_qubits, double phi_max,
                             BoundaryMode bc = BoundaryMode::Twisted);
  static JlpGrid from_states(int n_states, double phi_max,
                             BoundaryMode bc = BoundaryMode::Twisted);

  int n_states() const { return n_states_; }
  /// Qubit count, present only when the grid was built from qubits.
  std::optional<int> n_qubits() const { return n_qubits_; }
  /// Qubit count; throws when the grid has no qubit register.
  int qubits() const;
  double phi_max() const { return phi_max_; }
  BoundaryMode boundary() const { return bc_; }
  double delta() const { return delta_; }
  double momentum_spacing() const;
  double max_abs_momentum() const;

  const std::vector<double>& field_values() const { return field_; }
  const std::vector<double>& momenta() const { return momenta_; }

  /// Momenta in units of the momentum spacing. Half-integers for twisted
  /// boundaries, integers for periodic ones.
  std::vector<double> momentum_labels() const;

 private:
  JlpGrid(int n_states, std::optional<int> n_qubits, double phi_max,
          BoundaryMode bc);

  int n_states_;
  std::optional<int> n_qubits_;
  double phi_max_;
  BoundaryMode bc_;
  double delta_;
  std::vector<double> field_;
  std::vector<double> momenta_;
};

/// Momentum labels k / dk of an n-state grid: integers for periodic
/// boundaries, half-integers for twisted ones, in increasing order.
std::vector<double> momentum_labels(int n_states, BoundaryMode bc);

/// Nyquist-Shannon coverage test of a grid against the momentum-space support
/// of a target wavefunction.
struct SaturationEstimate {
  bool saturated;
  double margin;  // max|k| - support_k
};

SaturationEstimate ns_saturation_estimate(const JlpGrid& grid, double support_k);

/// Smallest even state count whose grid at phi_max reaches |k| >= support_k.
int min_states_for_support(double phi_max, double support_k,
                           BoundaryMode bc = BoundaryMode::Twisted,
                           int max_states = 1 << 16);

/// Field bound at which a twisted grid of n_states covers the same extent in
/// field and momentum space (max|k| == phi_max). For the free oscillator this
/// is where both spaces saturate together.
double balanced_phi_max(int n_states);

/// Harmonic-oscillator basis truncated to n_states levels. Operators are built
/// with `headroom` extra levels and truncated after all matrix products.
struct HoBasisSpec {
  double omega = 1.0;
  int n_states = 8;
  int headroom = 4;

  void validate() const;
};

}  // namespace sfdig
