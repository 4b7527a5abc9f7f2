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

#include <string_view>
#include <utility>
#include <variant>

#include "sfdig/grid.hpp"
#include "sfdig/operators.hpp"

namespace sfdig {

/// Couplings of H = 1/2 Pi^2 + 1/2 mass_sq phi^2 + lambda/4! phi^4.
/// A double well with minima at +-sqrt(6) mu / sqrt(lambda) has mass_sq = -mu^2.
struct SiteTheoryParams {
  double mass_sq = 1.0;
  double lambda = 0.0;

  static SiteTheoryParams double_well(double mu, double lambda);
  void validate() const;
};

/// Dimensionless couplings (a m0, a^(3-d) lambda0) of a d-dimensional lattice
/// with spacing a.
std::pair<double, double> rescale_params(double m0, double lambda0, double a, int d);

/// Largest total register dimension the lattice builder accepts.
inline constexpr int kMaxLatticeDim = 1 << 14;

enum class SpatialBc { Open, Periodic };

std::string_view to_string(SpatialBc bc);
SpatialBc parse_spatial_bc(std::string_view text);

/**
 * Spatial lattice of identical sites. With Periodic boundaries every site is
 * linked to its right neighbour modulo n_sites, so two sites carry the link
 * (0,1) twice.
 */
struct LatticeSpec {
  int n_sites = 1;
  SpatialBc spatial_bc = SpatialBc::Open;
  std::variant<JlpGrid, HoBasisSpec> site;

  int site_dim() const;
  long total_dim() const;
  /// Ordered site pairs carrying a gradient term.
  std::vector<std::pair<int, int>> links() const;
};

HermitianOperator build_site_hamiltonian_jlp(const JlpGrid& grid, const SiteTheoryParams& params,
                                             Pi2Variant variant = Pi2Variant::Exact);

/// H_basis + 1/2 (mass_sq - omega^2) phi^2 + lambda/4! phi^4 in the HO basis.
HermitianOperator build_site_hamiltonian_ho(const HoBasisSpec& spec,
                                            const SiteTheoryParams& params);

/// Oscillator-basis perturbation 1/2 (1 - omega^2) phi^2 of the free theory.
HermitianOperator ho_delta_h(const HoBasisSpec& spec);

/**
 * Sum of site Hamiltonians plus 1/2 sum over links (phi_x - phi_y)^2. The
 * variant is ignored for HO-basis sites. Throws when the register would
 * exceed kMaxLatticeDim.
 */
HermitianOperator build_lattice_hamiltonian(const LatticeSpec& spec,
                                            const SiteTheoryParams& params,
                                            Pi2Variant variant = Pi2Variant::Exact);

/// Field reflection phi -> -phi applied at every site.
HermitianOperator parity_operator(const LatticeSpec& spec);

}  // namespace sfdig
