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

#include "sfdig/operators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sfdig {

namespace {

constexpr double kHermitianTol = 1e-12;

double max_abs(const Eigen::MatrixXd& m) {
  return m.size() ? m.cwiseAbs().maxCoeff() : 0.0;
}

}  // namespace

// ---------------------------------------------------------------------------
// HermitianOperator

HermitianOperator::HermitianOperator(Eigen::MatrixXd re, std::string label)
    : re_(std::move(re)), label_(std::move(label)) {
  check();
}

HermitianOperator::HermitianOperator(Eigen::MatrixXd re, Eigen::MatrixXd im,
                                     std::string label)
    : re_(std::move(re)), im_(std::move(im)), label_(std::move(label)) {
  if (im_->rows() != re_.rows() || im_->cols() != re_.cols()) {
    throw std::invalid_argument("HermitianOperator: real/imag shape mismatch");
  }
  check();
}

void HermitianOperator::check() const {
  if (re_.rows() != re_.cols()) {
    throw std::invalid_argument("HermitianOperator: matrix is not square");
  }
  const double err = hermiticity_error();
  if (!(err < kHermitianTol)) {
    throw std::invalid_argument("HermitianOperator '" + label_ +
                                "': not Hermitian (error " + std::to_string(err) + ")");
  }
}

HermitianOperator HermitianOperator::from_complex(const Eigen::MatrixXcd& m,
                                                  std::string label) {
  Eigen::MatrixXd im = m.imag();
  if (max_abs(im) == 0.0) return HermitianOperator(m.real(), std::move(label));
  return HermitianOperator(m.real(), std::move(im), std::move(label));
}

HermitianOperator HermitianOperator::identity(int dim, std::string label) {
  return HermitianOperator(Eigen::MatrixXd::Identity(dim, dim), std::move(label));
}

HermitianOperator HermitianOperator::zero(int dim, std::string label) {
  return HermitianOperator(Eigen::MatrixXd::Zero(dim, dim), std::move(label));
}

HermitianOperator HermitianOperator::diagonal(const std::vector<double>& values,
                                              std::string label) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(values.size(), values.size());
  for (size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return HermitianOperator(std::move(m), std::move(label));
}

Eigen::MatrixXcd HermitianOperator::to_complex() const {
  Eigen::MatrixXcd m = re_.cast<cplx>();
  if (im_) m += cplx(0.0, 1.0) * im_->cast<cplx>();
  return m;
}

cplx HermitianOperator::operator()(int r, int c) const {
  return {re_(r, c), im_ ? (*im_)(r, c) : 0.0};
}

double HermitianOperator::max_abs_entry() const {
  if (!im_) return max_abs(re_);
  return (re_.array().square() + im_->array().square()).sqrt().maxCoeff();
}

double HermitianOperator::hermiticity_error() const {
  if (re_.size() == 0) return 0.0;
  double err = max_abs(re_ - re_.transpose());
  if (im_) err = std::max(err, max_abs(*im_ + im_->transpose()));
  return err / std::max(1.0, max_abs_entry());
}

HermitianOperator HermitianOperator::truncated(int n, std::string label) const {
  if (n < 1 || n > dim()) throw std::invalid_argument("truncated: bad size");
  if (label.empty()) label = label_;
  if (im_) {
    return HermitianOperator(re_.topLeftCorner(n, n), im_->topLeftCorner(n, n),
                             std::move(label));
  }
  return HermitianOperator(re_.topLeftCorner(n, n), std::move(label));
}

HermitianOperator& HermitianOperator::operator+=(const HermitianOperator& other) {
  if (other.dim() != dim()) throw std::invalid_argument("operator+=: dimension mismatch");
  re_ += other.re_;
  if (other.im_) {
    if (im_) {
      *im_ += *other.im_;
    } else {
      im_ = *other.im_;
    }
  }
  return *this;
}

HermitianOperator& HermitianOperator::operator*=(double s) {
  re_ *= s;
  if (im_) *im_ *= s;
  return *this;
}

HermitianOperator operator+(HermitianOperator a, const HermitianOperator& b) {
  a += b;
  return a;
}

HermitianOperator operator*(double s, HermitianOperator a) {
  a *= s;
  return a;
}

HermitianOperator multiply(const HermitianOperator& a, const HermitianOperator& b,
                           std::string label) {
  if (a.is_real() && b.is_real()) {
    Eigen::MatrixXd m = a.real() * b.real();
    return HermitianOperator(0.5 * (m + m.transpose()), std::move(label));
  }
  Eigen::MatrixXcd m = a.to_complex() * b.to_complex();
  return HermitianOperator::from_complex(0.5 * (m + m.adjoint()), std::move(label));
}

// ---------------------------------------------------------------------------
// Fourier transforms

SymmetricDft::SymmetricDft(int dim, BoundaryMode bc) : bc_(bc) {
  if (dim < 2) throw std::invalid_argument("SymmetricDft: dim must be >= 2");
  labels_ = momentum_labels(dim, bc);
  matrix_.resize(dim, dim);
  const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
  for (int x = 0; x < dim; ++x) {
    for (int j = 0; j < dim; ++j) {
      // Reduce x*m mod n before the exponential to keep the phase small.
      const double xm = std::fmod(x * labels_[j], static_cast<double>(dim));
      matrix_(x, j) = std::polar(norm, 2.0 * std::numbers::pi * xm / dim);
    }
  }
}

SymmetricDft SymmetricDft::for_grid(const JlpGrid& grid) {
  return SymmetricDft(grid.n_states(), grid.boundary());
}

Eigen::MatrixXcd SymmetricDft::conjugate_diagonal(const std::vector<double>& f) const {
  if (static_cast<int>(f.size()) != dim()) {
    throw std::invalid_argument("conjugate_diagonal: size mismatch");
  }
  Eigen::VectorXd d = Eigen::Map<const Eigen::VectorXd>(f.data(), f.size());
  return matrix_ * d.cast<cplx>().asDiagonal() * matrix_.adjoint();
}

SymmetricDft symmetric_dft(int dim) { return SymmetricDft(dim, BoundaryMode::Twisted); }

Eigen::MatrixXcd standard_dft(int dim) {
  if (dim < 1) throw std::invalid_argument("standard_dft: dim must be >= 1");
  Eigen::MatrixXcd f(dim, dim);
  const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
  for (int x = 0; x < dim; ++x) {
    for (int j = 0; j < dim; ++j) {
      const long xj = (static_cast<long>(x) * j) % dim;
      f(x, j) = std::polar(norm, 2.0 * std::numbers::pi * xj / dim);
    }
  }
  return f;
}

std::vector<cplx> symmetric_phase_layer(int n_qubits) {
  if (n_qubits < 1) throw std::invalid_argument("symmetric_phase_layer: n_qubits must be >= 1");
  const long n = 1L << n_qubits;
  const double m = static_cast<double>(n - 1);
  std::vector<cplx> d(n);
  for (long x = 0; x < n; ++x) {
    d[x] = std::polar(1.0, -2.0 * std::numbers::pi * m * x / (2.0 * n));
  }
  return d;
}

// ---------------------------------------------------------------------------
// Field and conjugate-momentum operators

std::string_view to_string(Pi2Variant v) {
  switch (v) {
    case Pi2Variant::FiniteDifference: return "finite-difference";
    case Pi2Variant::Improved1: return "improved1";
    case Pi2Variant::Improved2: return "improved2";
    case Pi2Variant::Exact: return "exact";
  }
  return "?";
}

Pi2Variant parse_pi2_variant(std::string_view text) {
  if (text == "finite-difference" || text == "fd") return Pi2Variant::FiniteDifference;
  if (text == "improved1" || text == "improved") return Pi2Variant::Improved1;
  if (text == "improved2") return Pi2Variant::Improved2;
  if (text == "exact") return Pi2Variant::Exact;
  throw std::invalid_argument("unknown Pi^2 variant: " + std::string(text));
}

double pi2_symbol(Pi2Variant v, double k, double delta) {
  if (v == Pi2Variant::Exact) return k * k;
  const double s2 = std::pow(std::sin(0.5 * k * delta), 2);
  const double pre = 4.0 / (delta * delta);
  // Partial sums of arcsin(s)^2 = s^2 + s^4/3 + 8 s^6/45 + ...
  switch (v) {
    case Pi2Variant::FiniteDifference: return pre * s2;
    case Pi2Variant::Improved1: return pre * (s2 + s2 * s2 / 3.0);
    case Pi2Variant::Improved2: return pre * (s2 + s2 * s2 / 3.0 + 8.0 * s2 * s2 * s2 / 45.0);
    default: break;
  }
  throw std::logic_error("pi2_symbol: unreachable");
}

std::vector<double> pi2_momentum_diagonal(const JlpGrid& grid, Pi2Variant v) {
  std::vector<double> f;
  f.reserve(grid.n_states());
  for (double k : grid.momenta()) f.push_back(pi2_symbol(v, k, grid.delta()));
  return f;
}

HermitianOperator field_power_op(const JlpGrid& grid, int p) {
  if (p < 1) throw std::invalid_argument("field_power_op: p must be >= 1");
  std::vector<double> d;
  d.reserve(grid.n_states());
  for (double phi : grid.field_values()) d.push_back(std::pow(phi, p));
  return HermitianOperator::diagonal(d, "phi^" + std::to_string(p));
}

HermitianOperator pi2_finite_difference(const JlpGrid& grid) {
  const int n = grid.n_states();
  const double inv = 1.0 / (grid.delta() * grid.delta());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, i) += 2.0 * inv;
    if (i + 1 < n) {
      m(i, i + 1) -= inv;
      m(i + 1, i) -= inv;
    }
  }
  const double corner = grid.boundary() == BoundaryMode::Periodic ? -inv : inv;
  m(0, n - 1) += corner;
  m(n - 1, 0) += corner;
  return HermitianOperator(std::move(m), "pi2-finite-difference");
}

HermitianOperator pi2_from_momentum_diagonal(const JlpGrid& grid,
                                             const std::vector<double>& f,
                                             std::string label) {
  const auto dft = SymmetricDft::for_grid(grid);
  Eigen::MatrixXcd m = dft.conjugate_diagonal(f);
  m = 0.5 * (m + m.adjoint()).eval();
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if (m.imag().cwiseAbs().maxCoeff() < 1e-13 * scale) {
    return HermitianOperator(m.real(), std::move(label));
  }
  return HermitianOperator::from_complex(m, std::move(label));
}

HermitianOperator pi2_improved(const JlpGrid& grid, int order) {
  if (order != 1 && order != 2) {
    throw std::invalid_argument("pi2_improved: order must be 1 or 2");
  }
  const auto v = order == 1 ? Pi2Variant::Improved1 : Pi2Variant::Improved2;
  return pi2_from_momentum_diagonal(grid, pi2_momentum_diagonal(grid, v),
                                    std::string("pi2-") + std::string(to_string(v)));
}

HermitianOperator pi2_exact(const JlpGrid& grid) {
  return pi2_from_momentum_diagonal(grid, pi2_momentum_diagonal(grid, Pi2Variant::Exact),
                                    "pi2-exact");
}

HermitianOperator pi2_operator(const JlpGrid& grid, Pi2Variant v) {
  switch (v) {
    case Pi2Variant::FiniteDifference: return pi2_finite_difference(grid);
    case Pi2Variant::Improved1: return pi2_improved(grid, 1);
    case Pi2Variant::Improved2: return pi2_improved(grid, 2);
    case Pi2Variant::Exact: return pi2_exact(grid);
  }
  throw std::logic_error("pi2_operator: unreachable");
}

// ---------------------------------------------------------------------------
// Harmonic-oscillator basis

HermitianOperator ho_basis_hamiltonian(const HoBasisSpec& spec) {
  spec.validate();
  std::vector<double> d(spec.n_states);
  for (int n = 0; n < spec.n_states; ++n) d[n] = spec.omega * (n + 0.5);
  return HermitianOperator::diagonal(d, "ho-basis-hamiltonian");
}

namespace {

Eigen::MatrixXd ho_phi(int dim, double omega) {
  Eigen::MatrixXd phi = Eigen::MatrixXd::Zero(dim, dim);
  const double scale = 1.0 / std::sqrt(2.0 * omega);
  for (int n = 0; n + 1 < dim; ++n) {
    phi(n, n + 1) = phi(n + 1, n) = scale * std::sqrt(n + 1.0);
  }
  return phi;
}

Eigen::MatrixXd matrix_power(const Eigen::MatrixXd& m, int p) {
  Eigen::MatrixXd r = m;
  for (int i = 1; i < p; ++i) r = r * m;
  return r;
}

void check_power(int p) {
  if (p != 1 && p != 2 && p != 4) {
    throw std::invalid_argument("ho_phi_power_op: p must be 1, 2 or 4");
  }
}

}  // namespace

HermitianOperator ho_phi_power_op(const HoBasisSpec& spec, int p) {
  spec.validate();
  check_power(p);
  if (spec.headroom < p / 2) {
    throw std::invalid_argument("ho_phi_power_op: headroom " + std::to_string(spec.headroom) +
                                " too small for phi^" + std::to_string(p));
  }
  const int big = spec.n_states + spec.headroom;
  Eigen::MatrixXd m = matrix_power(ho_phi(big, spec.omega), p);
  return HermitianOperator(m.topLeftCorner(spec.n_states, spec.n_states),
                           "ho-phi^" + std::to_string(p));
}

HermitianOperator ho_phi_power_op_truncate_first(const HoBasisSpec& spec, int p) {
  spec.validate();
  check_power(p);
  return HermitianOperator(matrix_power(ho_phi(spec.n_states, spec.omega), p),
                           "ho-phi^" + std::to_string(p) + "-truncate-first");
}

}  // namespace sfdig
