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

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sfdig/hamiltonian.hpp"
#include "sfdig/operators.hpp"

namespace sfdig {

/// Lowest eigenpairs of a Hermitian operator, ascending.
struct SpectralResult {
  std::vector<double> eigenvalues;
  Eigen::MatrixXcd eigenvectors;  // columns; empty when not retained
  std::vector<double> residuals;  // |H v - E v| per pair

  int retained() const { return static_cast<int>(eigenvectors.cols()); }
};

/// k lowest eigenpairs through LAPACK's MRRR driver. Throws std::runtime_error
/// when a residual exceeds 1e-9 max(1, |E|) plus the backward-error allowance
/// n eps max|H|.
SpectralResult eigensolve(const HermitianOperator& h, int k, bool keep_vectors = true);

/// 100 |computed - reference| / |reference|.
double epsilon_percent(double computed, double reference);

/// Published high-precision energy of a 1-site (or 2-site, lambda = 32) system,
/// if one exists for the couplings and level.
std::optional<double> table_reference_energy(const SiteTheoryParams& params, int level,
                                             int n_sites = 1);

/// Ground-truth energy from a fine Exact-variant JLP grid with n_states
/// points on [-phi_max, phi_max].
double self_reference_energy(const SiteTheoryParams& params, int level, int n_states,
                             double phi_max);

/// Table value when available, otherwise a self reference on 1024 states with
/// a field bound of max(phi_hint, a bound covering the potential well).
double reference_energy(const SiteTheoryParams& params, int level, double phi_hint = 0.0);

/// Worker count from SFDIG_WORKERS, else the hardware concurrency.
int default_worker_count();

/// Runs fn(i) for i in [0, n) on a worker pool. Exceptions are rethrown.
void parallel_for(int n, int workers, const std::function<void(int)>& fn);

struct SweepRecord {
  std::string basis;  // "jlp" or "ho"
  std::optional<double> phi_max;
  std::optional<double> omega;
  int n_states = 0;
  double lambda = 0.0;
  double mass_sq = 1.0;
  std::string variant;
  double sigma = 0.0;
  std::uint64_t seed = 0;
  int level = 0;
  double energy = 0.0;
  double reference = 0.0;
  double epsilon_percent = 0.0;
};

struct JlpSweepRequest {
  SiteTheoryParams params;
  Pi2Variant variant = Pi2Variant::Exact;
  BoundaryMode bc = BoundaryMode::Twisted;
  std::vector<double> phi_max;
  std::vector<int> n_states;
  int level = 0;
  std::optional<double> reference;  // overrides the reference policy
  double sigma = 0.0;               // momentum noise width
  std::uint64_t seed = 0;
  int workers = 0;                  // 0 selects default_worker_count()
};

/// One record per (phi_max, n_states), phi_max major.
std::vector<SweepRecord> sweep_jlp(const JlpSweepRequest& req);

struct HoSweepRequest {
  SiteTheoryParams params;
  std::vector<double> omega;
  std::vector<int> n_states;
  int level = 0;
  int headroom = 4;
  std::optional<double> reference;
  int workers = 0;
};

/// One record per (omega, n_states), omega major.
std::vector<SweepRecord> sweep_ho(const HoSweepRequest& req);

struct SaturationFit {
  double amplitude;  // A
  double rate;       // b in eps = A 2^(-b n)
};

/// Least-squares fit of log2(eps) = log2(A) - b n over (n, eps) points.
SaturationFit fit_saturation_scaling(const std::vector<std::pair<double, double>>& points);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<std::pair<double, double>>& points);

/// First x of an (x, eps) series after which every further step improves eps
/// by less than `tol` relative to the previous point.
std::optional<double> flattening_point(const std::vector<std::pair<double, double>>& series,
                                       double tol = 0.1);

struct NoiseModel {
  double sigma = 0.0;
  std::uint64_t seed = 0;
};

/// Deterministic per-point seed derived from a base seed and a point index.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// Independent Normal(0, sigma^2) offsets for n momentum entries.
std::vector<double> momentum_noise_offsets(int n, const NoiseModel& noise);

/// Exact Pi^2 with every momentum-space eigenvalue shifted by an independent
/// Gaussian offset. sigma = 0 returns pi2_exact unchanged.
HermitianOperator apply_momentum_noise(const JlpGrid& grid, const NoiseModel& noise);

struct Wavefunctions {
  std::vector<double> field;      // amplitude per field sample
  std::vector<cplx> momentum;     // amplitude per grid momentum
};

/// Field-space amplitudes of an eigenvector and their momentum-space image
/// U^dagger psi. The global phase is fixed so the largest field amplitude is
/// real and positive.
Wavefunctions wavefunctions(const SpectralResult& result, const JlpGrid& grid, int level);

}  // namespace sfdig
