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
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sfdig/operators.hpp"

namespace sfdig {

/**
 * Real multiple of a tensor product of single-qubit Paulis. axes[0] acts on
 * the most significant qubit.
 */
struct PauliString {
  std::string axes;
  double coefficient = 1.0;

  int n_qubits() const { return static_cast<int>(axes.size()); }
  /// Number of non-identity factors.
  int weight() const;
  bool is_identity() const { return weight() == 0; }

  /// Bit masks with bit (n-1-q) set when qubit q carries X or Y (x mask) or
  /// Z or Y (z mask).
  std::uint64_t x_mask() const;
  std::uint64_t z_mask() const;

  static PauliString from_masks(int n_qubits, std::uint64_t x, std::uint64_t z,
                                double coefficient);
  void validate() const;
};

class PauliSum {
 public:
  PauliSum() = default;
  explicit PauliSum(int n_qubits) : n_qubits_(n_qubits) {}

  int n_qubits() const { return n_qubits_; }
  const std::vector<PauliString>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  /// Adds a term, merging with an existing string of the same axes.
  void add(const PauliString& term);
  /// Coefficient of the given axes, 0 when absent.
  double coefficient(std::string_view axes) const;
  /// Sort terms by axes with I < X < Y < Z.
  void canonicalize();
  /// Drop terms with |coefficient| <= tol.
  void prune(double tol);

  PauliSum scaled(double s) const;

  /// One term per line, "+c.ccccccccc AXES".
  std::string to_text() const;
  static PauliSum from_text(std::string_view text);

 private:
  void reindex();

  int n_qubits_ = 0;
  std::vector<PauliString> terms_;
  std::unordered_map<std::string, size_t> index_;
};

/// Coefficients Tr(P H) / 2^n of every Pauli string with a coefficient larger
/// than tol * max(1, max|H|). Throws for non power-of-two dimensions.
PauliSum decompose(const HermitianOperator& h, double tol = 1e-12);

/// Decomposition of a real diagonal given as a vector (length 2^n).
PauliSum decompose_diagonal(const std::vector<double>& diag, double tol = 1e-12);

/// Sum of coefficient-weighted tensor products.
HermitianOperator reconstruct(const PauliSum& sum);

/// Decomposition of A (x) B from decompositions of A and B.
PauliSum tensor_product(const PauliSum& a, const PauliSum& b);

/// Single-qubit operator count of one quantum Fourier transform on n qubits:
/// n Hadamards plus the merged target-side and control-side phases.
int qft_one_body_operators(int n);

struct ResourceTally {
  std::map<int, long> k_body_counts;  // k -> number of k-body operators
  long cnot_total = 0;
  bool includes_qft = false;
  int qft_width = 0;

  long count(int k) const;
};

/**
 * Operator and CNOT counts of one application of the given operator sets.
 * Strings are counted per set; the identity is counted once overall. When
 * includes_qft is set, one transform and its inverse on qft_width qubits
 * contribute their single-qubit operators and 2 C(n,2) CNOTs each.
 */
ResourceTally tally(const std::vector<PauliSum>& sums, bool includes_qft = false,
                    int qft_width = 0);

}  // namespace sfdig
