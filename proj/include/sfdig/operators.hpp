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

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "sfdig/grid.hpp"

namespace sfdig {

using cplx = std::complex<double>;

/**
 * Dense Hermitian matrix stored as a real part plus an optional imaginary
 * part. Almost every operator in the library is real symmetric, so the
 * imaginary block is only allocated when it is needed.
 */
class HermitianOperator {
 public:
  HermitianOperator() = default;
  explicit HermitianOperator(Eigen::MatrixXd re, std::string label = {});
  HermitianOperator(Eigen::MatrixXd re, Eigen::MatrixXd im, std::string label = {});

  static HermitianOperator from_complex(const Eigen::MatrixXcd& m, std::string label = {});
  static HermitianOperator identity(int dim, std::string label = "identity");
  static HermitianOperator zero(int dim, std::string label = "zero");
  static HermitianOperator diagonal(const std::vector<double>& values, std::string label = {});

  int dim() const { return static_cast<int>(re_.rows()); }
  bool is_real() const { return !im_.has_value(); }
  const Eigen::MatrixXd& real() const { return re_; }
  /// Imaginary block, or nullptr for real operators.
  const Eigen::MatrixXd* imag() const { return im_ ? &*im_ : nullptr; }
  Eigen::MatrixXcd to_complex() const;
  cplx operator()(int r, int c) const;

  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  double max_abs_entry() const;
  /// max|M - M^dagger| divided by max(1, max|M|).
  double hermiticity_error() const;

  /// Leading n x n block.
  HermitianOperator truncated(int n, std::string label = {}) const;

  HermitianOperator& operator+=(const HermitianOperator& other);
  HermitianOperator& operator*=(double s);

 private:
  void check() const;

  Eigen::MatrixXd re_;
  std::optional<Eigen::MatrixXd> im_;
  std::string label_;
};

HermitianOperator operator+(HermitianOperator a, const HermitianOperator& b);
HermitianOperator operator*(double s, HermitianOperator a);
/// Product of two commuting or otherwise Hermitian-product operators. The
/// caller is responsible for the product being Hermitian.
HermitianOperator multiply(const HermitianOperator& a, const HermitianOperator& b,
                           std::string label = {});

/**
 * Symmetric discrete Fourier transform U_{x,j} = exp(2 pi i x m_j / n) / sqrt(n)
 * with momentum labels m_j. Twisted labels are the half-integers (or integers
 * for odd n) j - (n-1)/2; periodic labels are j + 1 - n/2.
 */
class SymmetricDft {
 public:
  explicit SymmetricDft(int dim, BoundaryMode bc = BoundaryMode::Twisted);
  static SymmetricDft for_grid(const JlpGrid& grid);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  BoundaryMode boundary() const { return bc_; }
  const std::vector<double>& labels() const { return labels_; }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

  /// U diag(f) U^dagger, index j of f paired with column j of U.
  Eigen::MatrixXcd conjugate_diagonal(const std::vector<double>& f) const;

 private:
  BoundaryMode bc_;
  std::vector<double> labels_;
  Eigen::MatrixXcd matrix_;
};

SymmetricDft symmetric_dft(int dim);

/// Standard DFT F_{x,j} = exp(2 pi i x j / n) / sqrt(n).
Eigen::MatrixXcd standard_dft(int dim);

/// Diagonal phases exp(-2 pi i M x / 2^(n+1)), M = 2^n - 1, that turn the
/// standard transform on n qubits into the twisted symmetric one.
std::vector<cplx> symmetric_phase_layer(int n_qubits);

/// Conjugate-momentum operator variants.
enum class Pi2Variant { FiniteDifference, Improved1, Improved2, Exact };

std::string_view to_string(Pi2Variant v);
Pi2Variant parse_pi2_variant(std::string_view text);

/// Momentum-space eigenvalue of the selected variant at momentum k.
double pi2_symbol(Pi2Variant v, double k, double delta);
/// pi2_symbol evaluated over the grid momenta, in DFT column order.
std::vector<double> pi2_momentum_diagonal(const JlpGrid& grid, Pi2Variant v);

HermitianOperator field_power_op(const JlpGrid& grid, int p);
HermitianOperator pi2_finite_difference(const JlpGrid& grid);
HermitianOperator pi2_improved(const JlpGrid& grid, int order);
HermitianOperator pi2_exact(const JlpGrid& grid);
HermitianOperator pi2_operator(const JlpGrid& grid, Pi2Variant v);

/// U diag(f) U^dagger for a grid, kept real when the result is real.
HermitianOperator pi2_from_momentum_diagonal(const JlpGrid& grid,
                                             const std::vector<double>& f,
                                             std::string label);

HermitianOperator ho_basis_hamiltonian(const HoBasisSpec& spec);
/// phi = (a + a^dagger) / sqrt(2 omega) raised to p in the enlarged space,
/// then truncated. p must be 1, 2 or 4 and headroom >= p / 2.
HermitianOperator ho_phi_power_op(const HoBasisSpec& spec, int p);
/// Same operator with truncation applied before the power. Only used to show
/// why truncation order matters.
HermitianOperator ho_phi_power_op_truncate_first(const HoBasisSpec& spec, int p);

}  // namespace sfdig
