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

#include "sfdig/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace sfdig {

namespace {

int log2_exact(long dim) {
  if (dim < 1 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument("dimension " + std::to_string(dim) + " is not a power of two");
  }
  return std::countr_zero(static_cast<unsigned long>(dim));
}

// i^k for integer k.
cplx i_power(int k) {
  switch (k & 3) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

}  // namespace

int PauliString::weight() const {
  return static_cast<int>(std::count_if(axes.begin(), axes.end(), [](char c) { return c != 'I'; }));
}

std::uint64_t PauliString::x_mask() const {
  std::uint64_t m = 0;
  const int n = n_qubits();
  for (int q = 0; q < n; ++q) {
    if (axes[q] == 'X' || axes[q] == 'Y') m |= 1ULL << (n - 1 - q);
  }
  return m;
}

std::uint64_t PauliString::z_mask() const {
  std::uint64_t m = 0;
  const int n = n_qubits();
  for (int q = 0; q < n; ++q) {
    if (axes[q] == 'Z' || axes[q] == 'Y') m |= 1ULL << (n - 1 - q);
  }
  return m;
}

PauliString PauliString::from_masks(int n_qubits, std::uint64_t x, std::uint64_t z,
                                    double coefficient) {
  PauliString p{std::string(n_qubits, 'I'), coefficient};
  for (int q = 0; q < n_qubits; ++q) {
    const bool xb = (x >> (n_qubits - 1 - q)) & 1, zb = (z >> (n_qubits - 1 - q)) & 1;
    p.axes[q] = xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
  }
  return p;
}

void PauliString::validate() const {
  if (axes.empty() || axes.size() > 62) throw std::invalid_argument("PauliString: bad length");
  for (char c : axes) {
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
      throw std::invalid_argument("PauliString: invalid axis '" + std::string(1, c) + "'");
    }
  }
}

void PauliSum::add(const PauliString& term) {
  term.validate();
  if (n_qubits_ == 0) n_qubits_ = term.n_qubits();
  if (term.n_qubits() != n_qubits_) {
    throw std::invalid_argument("PauliSum: inconsistent string lengths");
  }
  const auto [it, inserted] = index_.try_emplace(term.axes, terms_.size());
  if (inserted) {
    terms_.push_back(term);
  } else {
    terms_[it->second].coefficient += term.coefficient;
  }
}

double PauliSum::coefficient(std::string_view axes) const {
  const auto it = index_.find(std::string(axes));
  return it == index_.end() ? 0.0 : terms_[it->second].coefficient;
}

void PauliSum::reindex() {
  index_.clear();
  for (size_t i = 0; i < terms_.size(); ++i) index_.emplace(terms_[i].axes, i);
}

void PauliSum::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const PauliString& a, const PauliString& b) { return a.axes < b.axes; });
  reindex();
}

void PauliSum::prune(double tol) {
  std::erase_if(terms_, [tol](const PauliString& t) { return std::abs(t.coefficient) <= tol; });
  reindex();
}

PauliSum PauliSum::scaled(double s) const {
  PauliSum out = *this;
  for (auto& t : out.terms_) t.coefficient *= s;
  return out;
}

std::string PauliSum::to_text() const {
  std::string out;
  char buf[64];
  for (const auto& t : terms_) {
    std::snprintf(buf, sizeof buf, "%+.9f ", t.coefficient);
    out += buf;
    out += t.axes;
    out += '\n';
  }
  return out;
}

PauliSum PauliSum::from_text(std::string_view text) {
  PauliSum sum;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    PauliString p;
    if (!(ls >> p.coefficient >> p.axes)) {
      throw std::invalid_argument("PauliSum: cannot parse line '" + line + "'");
    }
    sum.add(p);
  }
  return sum;
}

PauliSum decompose(const HermitianOperator& h, double tol) {
  const int n = log2_exact(h.dim());
  if (n > 12) throw std::invalid_argument("decompose: more than 12 qubits");
  const long dim = h.dim();
  const double cut = tol * std::max(1.0, h.max_abs_entry());
  const Eigen::MatrixXd& re = h.real();
  const Eigen::MatrixXd* im = h.imag();
  PauliSum out(n);
  for (std::uint64_t x = 0; x < static_cast<std::uint64_t>(dim); ++x) {
    for (std::uint64_t z = 0; z < static_cast<std::uint64_t>(dim); ++z) {
      // Tr(P H) = sum_m i^{|x&z|} (-1)^{|m&z|} H(m, m^x)
      double sr = 0.0, si = 0.0;
      for (std::uint64_t m = 0; m < static_cast<std::uint64_t>(dim); ++m) {
        const double sign = (std::popcount(m & z) & 1) ? -1.0 : 1.0;
        sr += sign * re(m, m ^ x);
        if (im) si += sign * (*im)(m, m ^ x);
      }
      const cplx c = i_power(std::popcount(x & z)) * cplx(sr, si) / static_cast<double>(dim);
      if (std::abs(c.real()) > cut) out.add(PauliString::from_masks(n, x, z, c.real()));
    }
  }
  out.canonicalize();
  return out;
}

PauliSum decompose_diagonal(const std::vector<double>& diag, double tol) {
  const int n = log2_exact(static_cast<long>(diag.size()));
  // Walsh-Hadamard transform: coefficient of Z-mask z is mean of (-1)^{|m&z|} d_m.
  std::vector<double> w = diag;
  for (size_t len = 1; len < w.size(); len <<= 1) {
    for (size_t i = 0; i < w.size(); i += 2 * len) {
      for (size_t j = i; j < i + len; ++j) {
        const double a = w[j], b = w[j + len];
        w[j] = a + b;
        w[j + len] = a - b;
      }
    }
  }
  double scale = 1.0;
  for (double d : diag) scale = std::max(scale, std::abs(d));
  PauliSum out(n);
  for (size_t z = 0; z < w.size(); ++z) {
    const double c = w[z] / static_cast<double>(w.size());
    if (std::abs(c) > tol * scale) out.add(PauliString::from_masks(n, 0, z, c));
  }
  out.canonicalize();
  return out;
}

HermitianOperator reconstruct(const PauliSum& sum) {
  const int n = sum.n_qubits();
  if (n < 1) throw std::invalid_argument("reconstruct: empty sum has no qubit count");
  if (n > 12) throw std::invalid_argument("reconstruct: more than 12 qubits");
  const long dim = 1L << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& t : sum.terms()) {
    if (t.n_qubits() != n) throw std::invalid_argument("reconstruct: inconsistent string lengths");
    const std::uint64_t x = t.x_mask(), z = t.z_mask();
    const cplx phase = i_power(std::popcount(x & z)) * t.coefficient;
    for (std::uint64_t c = 0; c < static_cast<std::uint64_t>(dim); ++c) {
      const double sign = (std::popcount(c & z) & 1) ? -1.0 : 1.0;
      m(c ^ x, c) += sign * phase;
    }
  }
  return HermitianOperator::from_complex(m, "pauli-sum");
}

PauliSum tensor_product(const PauliSum& a, const PauliSum& b) {
  PauliSum out(a.n_qubits() + b.n_qubits());
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      out.add({ta.axes + tb.axes, ta.coefficient * tb.coefficient});
    }
  }
  out.canonicalize();
  return out;
}

int qft_one_body_operators(int n) {
  if (n < 1) throw std::invalid_argument("qft_one_body_operators: n must be >= 1");
  return 3 * n - 2;
}

long ResourceTally::count(int k) const {
  const auto it = k_body_counts.find(k);
  return it == k_body_counts.end() ? 0 : it->second;
}

ResourceTally tally(const std::vector<PauliSum>& sums, bool includes_qft, int qft_width) {
  ResourceTally t;
  t.includes_qft = includes_qft;
  t.qft_width = qft_width;
  bool identity = false;
  for (const auto& s : sums) {
    for (const auto& term : s.terms()) {
      const int k = term.weight();
      if (k == 0) {
        identity = true;
      } else {
        ++t.k_body_counts[k];
        t.cnot_total += 2L * (k - 1);
      }
    }
  }
  if (identity) t.k_body_counts[0] = 1;
  if (includes_qft) {
    if (qft_width < 1) throw std::invalid_argument("tally: qft_width must be >= 1");
    const long pairs = static_cast<long>(qft_width) * (qft_width - 1) / 2;
    t.k_body_counts[1] += 2L * qft_one_body_operators(qft_width);
    t.cnot_total += 2 * (2 * pairs);
  }
  return t;
}

}  // namespace sfdig
