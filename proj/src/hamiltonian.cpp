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

#include "sfdig/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sfdig {

SiteTheoryParams SiteTheoryParams::double_well(double mu, double lambda) {
  return {-mu * mu, lambda};
}

void SiteTheoryParams::validate() const {
  if (!std::isfinite(mass_sq)) throw std::invalid_argument("mass_sq must be finite");
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("lambda must be finite and >= 0");
  }
}

std::pair<double, double> rescale_params(double m0, double lambda0, double a, int d) {
  if (!(a > 0.0)) throw std::invalid_argument("rescale_params: lattice spacing must be > 0");
  if (d < 0) throw std::invalid_argument("rescale_params: dimension must be >= 0");
  return {a * m0, std::pow(a, 3 - d) * lambda0};
}

std::string_view to_string(SpatialBc bc) {
  return bc == SpatialBc::Open ? "open" : "periodic";
}

SpatialBc parse_spatial_bc(std::string_view text) {
  if (text == "open") return SpatialBc::Open;
  if (text == "periodic") return SpatialBc::Periodic;
  throw std::invalid_argument("unknown spatial boundary: " + std::string(text));
}

int LatticeSpec::site_dim() const {
  if (const auto* g = std::get_if<JlpGrid>(&site)) return g->n_states();
  return std::get<HoBasisSpec>(site).n_states;
}

long LatticeSpec::total_dim() const {
  if (n_sites < 1) throw std::invalid_argument("LatticeSpec: n_sites must be >= 1");
  long total = 1;
  for (int s = 0; s < n_sites; ++s) {
    total *= site_dim();
    if (total > kMaxLatticeDim) return total;
  }
  return total;
}

std::vector<std::pair<int, int>> LatticeSpec::links() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x + 1 < n_sites; ++x) out.emplace_back(x, x + 1);
  if (spatial_bc == SpatialBc::Periodic && n_sites > 1) out.emplace_back(n_sites - 1, 0);
  return out;
}

HermitianOperator build_site_hamiltonian_jlp(const JlpGrid& grid, const SiteTheoryParams& params,
                                             Pi2Variant variant) {
  params.validate();
  HermitianOperator h = 0.5 * pi2_operator(grid, variant);
  std::vector<double> v;
  v.reserve(grid.n_states());
  for (double phi : grid.field_values()) {
    const double p2 = phi * phi;
    v.push_back(0.5 * params.mass_sq * p2 + params.lambda / 24.0 * p2 * p2);
  }
  h += HermitianOperator::diagonal(v);
  h.set_label("jlp-site-hamiltonian");
  return h;
}

HermitianOperator build_site_hamiltonian_ho(const HoBasisSpec& spec,
                                            const SiteTheoryParams& params) {
  params.validate();
  HermitianOperator h = ho_basis_hamiltonian(spec);
  h += 0.5 * (params.mass_sq - spec.omega * spec.omega) * ho_phi_power_op(spec, 2);
  if (params.lambda != 0.0) h += (params.lambda / 24.0) * ho_phi_power_op(spec, 4);
  h.set_label("ho-site-hamiltonian");
  return h;
}

HermitianOperator ho_delta_h(const HoBasisSpec& spec) {
  HermitianOperator h = 0.5 * (1.0 - spec.omega * spec.omega) * ho_phi_power_op(spec, 2);
  h.set_label("ho-delta-h");
  return h;
}

namespace {

// Adds c * A acting on site s (site 0 most significant) to the full matrix.
void add_single(Eigen::MatrixXd& h, const Eigen::MatrixXd& a, int s, int n_sites, double c) {
  const long d = a.rows();
  long stride = 1;
  for (int t = s + 1; t < n_sites; ++t) stride *= d;
  const long total = h.rows();
  for (long hi = 0; hi < total; hi += d * stride) {
    for (long lo = 0; lo < stride; ++lo) {
      const long base = hi + lo;
      for (long j = 0; j < d; ++j) {
        for (long i = 0; i < d; ++i) {
          const double v = a(i, j);
          if (v != 0.0) h(base + i * stride, base + j * stride) += c * v;
        }
      }
    }
  }
}

// Adds c * (A at site s) (B at site t), s != t.
void add_pair(Eigen::MatrixXd& h, const Eigen::MatrixXd& a, int s, const Eigen::MatrixXd& b,
              int t, int n_sites, double c) {
  const long d = a.rows();
  auto stride_of = [&](int site) {
    long st = 1;
    for (int u = site + 1; u < n_sites; ++u) st *= d;
    return st;
  };
  const long ss = stride_of(s), st = stride_of(t);
  const long total = h.rows();
  for (long j = 0; j < total; ++j) {
    const long ds = (j / ss) % d, dt = (j / st) % d;
    const long rest = j - ds * ss - dt * st;
    for (long x = 0; x < d; ++x) {
      const double av = a(x, ds);
      if (av == 0.0) continue;
      for (long y = 0; y < d; ++y) {
        const double bv = b(y, dt);
        if (bv != 0.0) h(rest + x * ss + y * st, j) += c * av * bv;
      }
    }
  }
}

}  // namespace

HermitianOperator build_lattice_hamiltonian(const LatticeSpec& spec,
                                            const SiteTheoryParams& params,
                                            Pi2Variant variant) {
  const long total = spec.total_dim();
  if (total > kMaxLatticeDim) {
    throw std::invalid_argument("build_lattice_hamiltonian: dimension " + std::to_string(total) +
                                " exceeds " + std::to_string(kMaxLatticeDim));
  }
  HermitianOperator site_h, phi;
  if (const auto* g = std::get_if<JlpGrid>(&spec.site)) {
    site_h = build_site_hamiltonian_jlp(*g, params, variant);
    phi = field_power_op(*g, 1);
  } else {
    const auto& ho = std::get<HoBasisSpec>(spec.site);
    site_h = build_site_hamiltonian_ho(ho, params);
    phi = ho_phi_power_op(ho, 1);
  }
  if (spec.n_sites == 1) return site_h;
  if (!site_h.is_real()) {
    throw std::invalid_argument("build_lattice_hamiltonian: complex site operators unsupported");
  }
  const auto links = spec.links();
  std::vector<int> endpoints(spec.n_sites, 0);
  for (const auto& [x, y] : links) {
    ++endpoints[x];
    ++endpoints[y];
  }
  const Eigen::MatrixXd phi2 = phi.real() * phi.real();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(total, total);
  for (int s = 0; s < spec.n_sites; ++s) {
    add_single(h, site_h.real(), s, spec.n_sites, 1.0);
    if (endpoints[s]) add_single(h, phi2, s, spec.n_sites, 0.5 * endpoints[s]);
  }
  for (const auto& [x, y] : links) add_pair(h, phi.real(), x, phi.real(), y, spec.n_sites, -1.0);
  return HermitianOperator(std::move(h), "lattice-hamiltonian");
}

HermitianOperator parity_operator(const LatticeSpec& spec) {
  const long total = spec.total_dim();
  if (total > kMaxLatticeDim) throw std::invalid_argument("parity_operator: dimension too large");
  const long d = spec.site_dim();
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(total, total);
  const bool jlp = std::holds_alternative<JlpGrid>(spec.site);
  for (long i = 0; i < total; ++i) {
    long rem = i, image = 0, weight = 1, odd = 0;
    for (int s = 0; s < spec.n_sites; ++s) {
      const long digit = rem % d;
      rem /= d;
      image += (jlp ? d - 1 - digit : digit) * weight;
      odd += digit % 2;
      weight *= d;
    }
    p(image, i) = jlp ? 1.0 : (odd % 2 ? -1.0 : 1.0);
  }
  return HermitianOperator(std::move(p), "parity");
}

}  // namespace sfdig
