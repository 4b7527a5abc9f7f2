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

#include "sfdig/spectra.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace sfdig {

namespace {

void check_residuals(const SpectralResult& r, double hnorm, int n) {
  const double allowance = n * std::numeric_limits<double>::epsilon() * hnorm;
  for (size_t i = 0; i < r.residuals.size(); ++i) {
    const double tol = 1e-9 * std::max(1.0, std::abs(r.eigenvalues[i])) + allowance;
    if (!(r.residuals[i] <= tol)) {
      throw std::runtime_error("eigensolve: eigenpair " + std::to_string(i) +
                               " did not converge (residual " +
                               std::to_string(r.residuals[i]) + ")");
    }
  }
}

}  // namespace

SpectralResult eigensolve(const HermitianOperator& h, int k, bool keep_vectors) {
  const int n = h.dim();
  if (k < 1 || k > n) throw std::invalid_argument("eigensolve: k must be in [1, dim]");
  SpectralResult out;
  std::vector<double> w(n);
  std::vector<lapack_int> isuppz(2 * static_cast<size_t>(k));
  lapack_int found = 0;
  if (h.is_real()) {
    Eigen::MatrixXd a = h.real();
    Eigen::MatrixXd z(n, k);
    const lapack_int info =
        LAPACKE_dsyevr(LAPACK_COL_MAJOR, 'V', 'I', 'U', n, a.data(), n, 0.0, 0.0, 1, k, 0.0,
                       &found, w.data(), z.data(), n, isuppz.data());
    if (info != 0 || found != k) {
      throw std::runtime_error("eigensolve: dsyevr failed (info " + std::to_string(info) + ")");
    }
    a.resize(0, 0);
    const Eigen::MatrixXd hz = h.real() * z;
    for (int i = 0; i < k; ++i) out.residuals.push_back((hz.col(i) - w[i] * z.col(i)).norm());
    if (keep_vectors) out.eigenvectors = z.cast<cplx>();
  } else {
    Eigen::MatrixXcd a = h.to_complex();
    Eigen::MatrixXcd z(n, k);
    const lapack_int info =
        LAPACKE_zheevr(LAPACK_COL_MAJOR, 'V', 'I', 'U', n, a.data(), n, 0.0, 0.0, 1, k, 0.0,
                       &found, w.data(), z.data(), n, isuppz.data());
    if (info != 0 || found != k) {
      throw std::runtime_error("eigensolve: zheevr failed (info " + std::to_string(info) + ")");
    }
    a = h.to_complex();
    const Eigen::MatrixXcd hz = a * z;
    for (int i = 0; i < k; ++i) out.residuals.push_back((hz.col(i) - w[i] * z.col(i)).norm());
    if (keep_vectors) out.eigenvectors = std::move(z);
  }
  out.eigenvalues.assign(w.begin(), w.begin() + k);
  check_residuals(out, h.max_abs_entry(), n);
  return out;
}

double epsilon_percent(double computed, double reference) {
  if (reference == 0.0) throw std::invalid_argument("epsilon_percent: zero reference");
  return 100.0 * std::abs(computed - reference) / std::abs(reference);
}

std::optional<double> table_reference_energy(const SiteTheoryParams& p, int level,
                                             int n_sites) {
  if (level < 0) return std::nullopt;
  if (n_sites == 2) {
    if (p.lambda == 32.0 && p.mass_sq == 1.0) {
      if (level == 0) return 2.12423312343879018508120639;
      if (level == 1) return 4.14178896487443452796737080;
    }
    return std::nullopt;
  }
  if (n_sites != 1) return std::nullopt;
  if (p.lambda == 0.0 && p.mass_sq > 0.0) return std::sqrt(p.mass_sq) * (level + 0.5);
  if (p.lambda == 32.0 && p.mass_sq == 1.0) {
    if (level == 0) return 0.85974269044550901935596;
    if (level == 1) return 2.94936376700996890229;
  }
  if (p.lambda == 1.0 && p.mass_sq == -4.0) {
    if (level == 0) return -22.596382373935095119775874;
    if (level == 1) return -22.596382373935095118634895;
  }
  if (p.lambda == 1.0 && p.mass_sq == -25.0) {
    if (level == 0 || level == 1) return -933.966134532634985047797739;
  }
  return std::nullopt;
}

double self_reference_energy(const SiteTheoryParams& params, int level, int n_states,
                             double phi_max) {
  const auto grid = JlpGrid::from_states(n_states, phi_max, BoundaryMode::Twisted);
  const auto h = build_site_hamiltonian_jlp(grid, params, Pi2Variant::Exact);
  return eigensolve(h, level + 1, false).eigenvalues[level];
}

double reference_energy(const SiteTheoryParams& params, int level, double phi_hint) {
  if (auto t = table_reference_energy(params, level)) return *t;
  double well = 0.0;
  if (params.mass_sq < 0.0 && params.lambda > 0.0) {
    well = std::sqrt(-6.0 * params.mass_sq / params.lambda);
  }
  const double bound = std::max(1.5 * phi_hint, well + 6.0 + 0.5 * level);
  return self_reference_energy(params, level, 512, bound);
}

int default_worker_count() {
  if (const char* env = std::getenv("SFDIG_WORKERS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(int n, int workers, const std::function<void(int)>& fn) {
  if (workers <= 0) workers = default_worker_count();
  workers = std::min(workers, n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::vector<SweepRecord> sweep_jlp(const JlpSweepRequest& req) {
  req.params.validate();
  if (req.sigma < 0.0) throw std::invalid_argument("sweep_jlp: sigma must be >= 0");
  double phi_hint = 0.0;
  for (double p : req.phi_max) phi_hint = std::max(phi_hint, p);
  const double ref = req.reference ? *req.reference
                                   : reference_energy(req.params, req.level, phi_hint);
  const size_t n_points = req.phi_max.size() * req.n_states.size();
  std::vector<SweepRecord> out(n_points);
  parallel_for(static_cast<int>(n_points), req.workers, [&](int idx) {
    const double phi_max = req.phi_max[idx / req.n_states.size()];
    const int n_states = req.n_states[idx % req.n_states.size()];
    const auto grid = JlpGrid::from_states(n_states, phi_max, req.bc);
    SweepRecord& r = out[idx];
    r.basis = "jlp";
    r.phi_max = phi_max;
    r.n_states = n_states;
    r.lambda = req.params.lambda;
    r.mass_sq = req.params.mass_sq;
    r.variant = std::string(to_string(req.variant));
    r.level = req.level;
    r.reference = ref;
    if (n_states <= req.level) {
      r.energy = std::numeric_limits<double>::quiet_NaN();
      r.epsilon_percent = std::numeric_limits<double>::quiet_NaN();
      return;
    }
    HermitianOperator h = build_site_hamiltonian_jlp(grid, req.params, req.variant);
    if (req.sigma > 0.0) {
      r.sigma = req.sigma;
      r.seed = derive_seed(req.seed, idx);
      // Swap the kinetic block for its noisy counterpart.
      h += -0.5 * pi2_operator(grid, req.variant);
      h += 0.5 * apply_momentum_noise(grid, {req.sigma, r.seed});
    }
    r.energy = eigensolve(h, req.level + 1, false).eigenvalues[req.level];
    r.epsilon_percent = epsilon_percent(r.energy, ref);
  });
  return out;
}

std::vector<SweepRecord> sweep_ho(const HoSweepRequest& req) {
  req.params.validate();
  const double ref = req.reference ? *req.reference : reference_energy(req.params, req.level);
  const size_t n_points = req.omega.size() * req.n_states.size();
  std::vector<SweepRecord> out(n_points);
  parallel_for(static_cast<int>(n_points), req.workers, [&](int idx) {
    const double omega = req.omega[idx / req.n_states.size()];
    const int n_states = req.n_states[idx % req.n_states.size()];
    SweepRecord& r = out[idx];
    r.basis = "ho";
    r.omega = omega;
    r.n_states = n_states;
    r.lambda = req.params.lambda;
    r.mass_sq = req.params.mass_sq;
    r.variant = "ho";
    r.level = req.level;
    r.reference = ref;
    if (n_states <= req.level) {
      r.energy = std::numeric_limits<double>::quiet_NaN();
      r.epsilon_percent = std::numeric_limits<double>::quiet_NaN();
      return;
    }
    const HoBasisSpec spec{omega, n_states, req.headroom};
    const auto h = build_site_hamiltonian_ho(spec, req.params);
    r.energy = eigensolve(h, req.level + 1, false).eigenvalues[req.level];
    r.epsilon_percent = epsilon_percent(r.energy, ref);
  });
  return out;
}

SaturationFit fit_saturation_scaling(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 4) {
    throw std::invalid_argument("fit_saturation_scaling: need at least 4 points");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [n, eps] : points) {
    if (!(eps > 0.0)) throw std::invalid_argument("fit_saturation_scaling: eps must be > 0");
    const double y = std::log2(eps);
    sx += n;
    sy += y;
    sxx += n * n;
    sxy += n * y;
  }
  const double m = static_cast<double>(points.size());
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / m;
  return {std::exp2(intercept), -slope};
}

double loglog_slope(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2) throw std::invalid_argument("loglog_slope: need at least 2 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : points) {
    const double lx = std::log(x), ly = std::log(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double m = static_cast<double>(points.size());
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

std::optional<double> flattening_point(const std::vector<std::pair<double, double>>& series,
                                       double tol) {
  if (series.size() < 2) return std::nullopt;
  // Walk backwards to the last step that still gained at least tol.
  size_t start = series.size() - 1;
  for (size_t i = series.size() - 1; i > 0; --i) {
    const double prev = series[i - 1].second, cur = series[i].second;
    if (cur < (1.0 - tol) * prev) break;
    start = i - 1;
  }
  if (start == series.size() - 1) return std::nullopt;
  return series[start].first;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  // splitmix64 finalizer over the combined key
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<double> momentum_noise_offsets(int n, const NoiseModel& noise) {
  if (!(noise.sigma >= 0.0)) throw std::invalid_argument("NoiseModel: sigma must be >= 0");
  std::vector<double> g(n, 0.0);
  if (noise.sigma == 0.0) return g;
  std::mt19937_64 rng(noise.seed);
  std::normal_distribution<double> dist(0.0, noise.sigma);
  for (auto& x : g) x = dist(rng);
  return g;
}

HermitianOperator apply_momentum_noise(const JlpGrid& grid, const NoiseModel& noise) {
  if (!(noise.sigma >= 0.0)) throw std::invalid_argument("NoiseModel: sigma must be >= 0");
  if (noise.sigma == 0.0) return pi2_exact(grid);
  auto f = pi2_momentum_diagonal(grid, Pi2Variant::Exact);
  const auto g = momentum_noise_offsets(grid.n_states(), noise);
  for (size_t i = 0; i < f.size(); ++i) f[i] += g[i];
  return pi2_from_momentum_diagonal(grid, f, "pi2-exact-noisy");
}

Wavefunctions wavefunctions(const SpectralResult& result, const JlpGrid& grid, int level) {
  if (level < 0 || level >= result.retained()) {
    throw std::invalid_argument("wavefunctions: level not retained");
  }
  if (result.eigenvectors.rows() != grid.n_states()) {
    throw std::invalid_argument("wavefunctions: grid does not match eigenvector size");
  }
  Eigen::VectorXcd psi = result.eigenvectors.col(level);
  Eigen::Index imax = 0;
  psi.cwiseAbs().maxCoeff(&imax);
  psi *= std::conj(psi(imax)) / std::abs(psi(imax));
  psi.normalize();
  Wavefunctions out;
  out.field.resize(psi.size());
  for (Eigen::Index i = 0; i < psi.size(); ++i) out.field[i] = psi(i).real();
  const Eigen::VectorXcd mom = SymmetricDft::for_grid(grid).matrix().adjoint() * psi;
  out.momentum.assign(mom.data(), mom.data() + mom.size());
  return out;
}

}  // namespace sfdig
