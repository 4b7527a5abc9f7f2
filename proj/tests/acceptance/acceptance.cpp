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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "sfdig/circuit.hpp"
#include "sfdig/cli.hpp"
#include "sfdig/hamiltonian.hpp"
#include "sfdig/pauli.hpp"
#include "sfdig/spectra.hpp"

using namespace sfdig;
using std::numbers::pi;
using cmat = Eigen::MatrixXcd;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + std::string("failed: ") + what;
    }
  }
  void note(const std::string& s) { detail += (detail.empty() ? "" : "; ") + s; }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double rel(double a, double b) { return std::abs(a / b - 1.0); }

// ---------------------------------------------------------------------------
// 1. Reference energies

Outcome reference_energies() {
  Outcome o;
  const double e0 = 0.85974269044550902, e1 = 2.94936376700996890;
  double best_phi = 0, best = 1e300;
  SpectralResult best_r;
  for (int i = 0; i <= 16; ++i) {
    const double phi = 2.2 + 0.05 * i;
    auto r = eigensolve(build_site_hamiltonian_jlp(JlpGrid::from_qubits(7, phi), {1.0, 32.0}), 2,
                        false);
    if (rel(r.eigenvalues[0], e0) < best) {
      best = rel(r.eigenvalues[0], e0);
      best_phi = phi;
      best_r = std::move(r);
    }
  }
  o.require(best < 1e-10, "quartic E0");
  o.require(rel(best_r.eigenvalues[1], e1) < 1e-9, "quartic E1");
  o.note("quartic phi_max " + fmt("%.2f", best_phi) + " rel E0 " + fmt("%.1e", best) + " E1 " +
         fmt("%.1e", rel(best_r.eigenvalues[1], e1)));

  const double w0 = -22.596382373935095;
  const auto w = eigensolve(
      build_site_hamiltonian_jlp(JlpGrid::from_qubits(7, 9.0), SiteTheoryParams::double_well(2, 1)),
      2, false);
  o.require(rel(w.eigenvalues[0], w0) < 1e-10, "double-well E0");
  o.require(std::abs(w.eigenvalues[1] - w.eigenvalues[0]) < 1e-11, "double-well splitting");
  o.note("double well rel E0 " + fmt("%.1e", rel(w.eigenvalues[0], w0)) + " split " +
         fmt("%.1e", std::abs(w.eigenvalues[1] - w.eigenvalues[0])));

  const double l0 = 2.12423312343879;
  const auto site = JlpGrid::from_qubits(6, 3.0);
  const auto two = eigensolve(
      build_lattice_hamiltonian({2, SpatialBc::Periodic, site}, {1.0, 32.0}), 1, false);
  o.require(rel(two.eigenvalues[0], l0) < 1e-6, "two-site E0");
  o.note("two sites (periodic) rel E0 " + fmt("%.1e", rel(two.eigenvalues[0], l0)));
  return o;
}

// ---------------------------------------------------------------------------
// 2. Position-space momentum operators on three qubits

const char* const kPrinted[48] = {
    "2, -1, 0, 0, 0, 0, 0, -1",
    "-1, 2, -1, 0, 0, 0, 0, 0",
    "0, -1, 2, -1, 0, 0, 0, 0",
    "0, 0, -1, 2, -1, 0, 0, 0",
    "0, 0, 0, -1, 2, -1, 0, 0",
    "0, 0, 0, 0, -1, 2, -1, 0",
    "0, 0, 0, 0, 0, -1, 2, -1",
    "-1, 0, 0, 0, 0, 0, -1, 2",
    "2.5, -1.3, 0.083, 0, 0, 0, 0.083, -1.3",
    "-1.3, 2.5, -1.3, 0.083, 0, 0, 0, 0.083",
    "0.083, -1.3, 2.5, -1.3, 0.083, 0, 0, 0",
    "0, 0.083, -1.3, 2.5, -1.3, 0.083, 0, 0",
    "0, 0, 0.083, -1.3, 2.5, -1.3, 0.083, 0",
    "0, 0, 0, 0.083, -1.3, 2.5, -1.3, 0.083",
    "0.083, 0, 0, 0, 0.083, -1.3, 2.5, -1.3",
    "-1.3, 0.083, 0, 0, 0, 0.083, -1.3, 2.5",
    "3.39, -2.11, 0.617, -0.361, 0.308, -0.361, 0.617, -2.11",
    "-2.11, 3.39, -2.11, 0.617, -0.361, 0.308, -0.361, 0.617",
    "0.617, -2.11, 3.39, -2.11, 0.617, -0.361, 0.308, -0.361",
    "-0.361, 0.617, -2.11, 3.39, -2.11, 0.617, -0.361, 0.308",
    "0.308, -0.361, 0.617, -2.11, 3.39, -2.11, 0.617, -0.361",
    "-0.361, 0.308, -0.361, 0.617, -2.11, 3.39, -2.11, 0.617",
    "0.617, -0.361, 0.308, -0.361, 0.617, -2.11, 3.39, -2.11",
    "-2.11, 0.617, -0.361, 0.308, -0.361, 0.617, -2.11, 3.39",
    "2, -1, 0, 0, 0, 0, 0, 1",
    "-1, 2, -1, 0, 0, 0, 0, 0",
    "0, -1, 2, -1, 0, 0, 0, 0",
    "0, 0, -1, 2, -1, 0, 0, 0",
    "0, 0, 0, -1, 2, -1, 0, 0",
    "0, 0, 0, 0, -1, 2, -1, 0",
    "0, 0, 0, 0, 0, -1, 2, -1",
    "1, 0, 0, 0, 0, 0, -1, 2",
    "2.5, -1.3, 0.083, 0, 0, 0, -0.083, 1.3",
    "-1.3, 2.5, -1.3, 0.083, 0, 0, 0, -0.083",
    "0.083, -1.3, 2.5, -1.3, 0.083, 0, 0, 0",
    "0, 0.083, -1.3, 2.5, -1.3, 0.083, 0, 0",
    "0, 0, 0.083, -1.3, 2.5, -1.3, 0.083, 0",
    "0, 0, 0, 0.083, -1.3, 2.5, -1.3, 0.083",
    "-0.083, 0, 0, 0, 0.083, -1.3, 2.5, -1.3",
    "1.3, -0.083, 0, 0, 0, 0.083, -1.3, 2.5",
    "3.24, -1.95, 0.436, -0.138, 0, 0.138, -0.436, 1.95",
    "-1.95, 3.24, -1.95, 0.436, -0.138, 0, 0.138, -0.436",
    "0.436, -1.95, 3.24, -1.95, 0.436, -0.138, 0, 0.138",
    "-0.138, 0.436, -1.95, 3.24, -1.95, 0.436, -0.138, 0",
    "0, -0.138, 0.436, -1.95, 3.24, -1.95, 0.436, -0.138",
    "0.138, 0, -0.138, 0.436, -1.95, 3.24, -1.95, 0.436",
    "-0.436, 0.138, 0, -0.138, 0.436, -1.95, 3.24, -1.95",
    "1.95, -0.436, 0.138, 0, -0.138, 0.436, -1.95, 3.24",
};

// True when v rounds to the printed value at its printed precision.
bool matches_printed(double v, const std::string& printed) {
  const double p = std::stod(printed);
  if (p == 0.0) return std::abs(v) < 1e-12;
  const auto dot = printed.find('.');
  const int decimals = dot == std::string::npos ? 0 : static_cast<int>(printed.size() - dot - 1);
  return std::abs(v - p) <= 0.5 * std::pow(10.0, -decimals) + 1e-12;
}

Outcome golden_matrices() {
  Outcome o;
  int block = 0, bad = 0;
  for (auto bc : {BoundaryMode::Periodic, BoundaryMode::Twisted}) {
    const auto g = JlpGrid::from_qubits(3, 1.7, bc);
    const double d2 = g.delta() * g.delta();
    const Eigen::MatrixXd ops[3] = {pi2_finite_difference(g).real() * d2,
                                    pi2_improved(g, 1).real() * d2, pi2_exact(g).real() * d2};
    for (const auto& m : ops) {
      for (int i = 0; i < 8; ++i) {
        std::stringstream row(kPrinted[block * 8 + i]);
        std::string cell;
        for (int j = 0; j < 8 && std::getline(row, cell, ','); ++j) {
          if (!matches_printed(m(i, j), cell)) ++bad;
        }
      }
      ++block;
    }
  }
  o.require(bad == 0, std::to_string(bad) + " entries");
  o.note("384 entries compared");
  return o;
}

// ---------------------------------------------------------------------------
// 3. Pauli coefficients

int count_mismatches(const PauliSum& s, const std::map<std::string, double>& expect) {
  int bad = 0;
  for (const auto& [axes, c] : expect) bad += std::abs(s.coefficient(axes) - c) > 1e-12;
  for (const auto& t : s.terms()) bad += !expect.count(t.axes) && std::abs(t.coefficient) > 1e-12;
  return bad;
}

Outcome golden_decompositions() {
  Outcome o;
  const double phi = 1.0;
  {
    const Eigen::VectorXd d = field_power_op(JlpGrid::from_qubits(3, phi), 2).real().diagonal();
    const auto s = decompose_diagonal({d.data(), d.data() + d.size()}).scaled(49.0 / 4);
    o.require(count_mismatches(s, {{"ZZI", 4}, {"ZIZ", 2}, {"IZZ", 1}, {"III", 5.25}}) == 0,
              "field squared");
  }
  auto momentum = [&](int n, double norm) {
    return decompose_diagonal(pi2_momentum_diagonal(JlpGrid::from_qubits(n, phi), Pi2Variant::Exact))
        .scaled(1 / norm);
  };
  o.require(count_mismatches(momentum(3, 49 * pi * pi / 64),
                             {{"ZZI", 4}, {"ZIZ", 2}, {"IZZ", 1}, {"III", 5.25}}) == 0,
            "three-qubit momentum");
  o.require(count_mismatches(momentum(4, 225 * pi * pi / 256),
                             {{"ZZII", 16}, {"ZIZI", 8}, {"ZIIZ", 4}, {"IZZI", 4}, {"IZIZ", 2},
                              {"IIZZ", 1}, {"IIII", 85.0 / 4}}) == 0,
            "four-qubit momentum");
  o.require(count_mismatches(momentum(5, 961 * pi * pi / 1024),
                             {{"ZZIII", 64}, {"ZIZII", 32}, {"ZIIZI", 16}, {"ZIIIZ", 8},
                              {"IZZII", 16}, {"IZIZI", 8}, {"IZIIZ", 4}, {"IIZZI", 4},
                              {"IIZIZ", 2}, {"IIIZZ", 1}, {"IIIII", 341.0 / 4}}) == 0,
            "five-qubit momentum");

  const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), r5 = std::sqrt(5.0), r6 = std::sqrt(6.0);
  const double r10 = std::sqrt(10.0), r14 = std::sqrt(14.0), r15 = std::sqrt(15.0);
  const double r21 = std::sqrt(21.0);
  const double w = 1.4;
  const auto dh = decompose(ho_delta_h({w, 8, 4})).scaled(w / (1 - w * w));
  o.require(count_mismatches(dh, {{"XXZ", (r3 - r5) / 8}, {"XXI", (r3 + r5) / 8},
                                  {"YYZ", (r3 - r5) / 8}, {"YYI", (r3 + r5) / 8},
                                  {"ZXZ", (1 - r3 + r21 - r15) / (8 * r2)},
                                  {"ZXI", (1 + r3 - r21 - r15) / (8 * r2)},
                                  {"IXZ", (1 - r3 - r21 + r15) / (8 * r2)},
                                  {"IXI", (1 + r3 + r21 + r15) / (8 * r2)},
                                  {"ZII", -1}, {"IZI", -0.5}, {"IIZ", -0.25}, {"III", 2}}) == 0,
            "detuned correction");
  const double h = 1 / (2 * r2);
  const auto f = decompose(ho_phi_power_op({w, 8, 4}, 1)).scaled(std::sqrt(w));
  o.require(count_mismatches(f, {{"ZZX", (r2 - r6 - r10 + r14) / 8}, {"ZYY", (2 - 2 * r3) / 8},
                                 {"ZXX", (2 - 2 * r3) / 8}, {"YYX", h}, {"YXY", h}, {"XYY", -h},
                                 {"XXX", h}, {"ZIX", (r2 + r6 - r10 - r14) / 8},
                                 {"IZX", (r2 - r6 + r10 - r14) / 8}, {"IYY", (2 + 2 * r3) / 8},
                                 {"IXX", (2 + 2 * r3) / 8},
                                 {"IIX", (r2 + r6 + r10 + r14) / 8}}) == 0,
            "oscillator-basis field");
  if (o.pass) o.note("7 operator sets match to 1e-12");
  return o;
}

// ---------------------------------------------------------------------------
// 4. Resource tables

struct Printed {
  std::map<int, long> body;
  long cnot;
};

int binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<int>(r);
}

int compare_rows(int table, const std::map<std::string, std::vector<Printed>>& printed) {
  int bad = 0;
  const auto rows = resource_table(table, {2, 3, 4, 5, 6});
  std::map<std::string, int> seen;
  for (const auto& r : rows) {
    const auto& p = printed.at(r.basis).at(seen[r.basis]++);
    for (const auto& [k, c] : p.body) bad += r.tally.count(k) != c;
    long total = 0;
    for (const auto& [k, c] : r.tally.k_body_counts) total += c;
    long expect = 0;
    for (const auto& [k, c] : p.body) expect += c;
    bad += total != expect;
    bad += r.tally.cnot_total != p.cnot;
  }
  return bad;
}

Outcome resource_tables() {
  Outcome o;
  using P = Printed;
  const std::map<std::string, std::vector<Printed>> t1 = {
      {"jlp",
       {P{{{0, 1}, {1, 8}, {2, 2}}, 8}, P{{{0, 1}, {1, 14}, {2, 6}}, 24},
        P{{{0, 1}, {1, 20}, {2, 12}}, 48}, P{{{0, 1}, {1, 26}, {2, 20}}, 80},
        P{{{0, 1}, {1, 32}, {2, 30}}, 120}}},
      {"ho-tuned",
       {P{{{0, 1}, {1, 2}}, 0}, P{{{0, 1}, {1, 3}}, 0}, P{{{0, 1}, {1, 4}}, 0},
        P{{{0, 1}, {1, 5}}, 0}, P{{{0, 1}, {1, 6}}, 0}}},
      {"ho-detuned",
       {P{{{0, 1}, {1, 3}, {2, 1}}, 2}, P{{{0, 1}, {1, 4}, {2, 4}, {3, 3}}, 20},
        P{{{0, 1}, {1, 5}, {2, 5}, {3, 11}, {4, 7}}, 96},
        P{{{0, 1}, {1, 6}, {2, 6}, {3, 16}, {4, 26}, {5, 15}}, 352},
        P{{{0, 1}, {1, 7}, {2, 7}, {3, 22}, {4, 42}, {5, 57}, {6, 31}}, 1120}}}};
  const std::map<std::string, std::vector<Printed>> t2 = {
      {"jlp",
       {P{{{0, 1}, {1, 8}, {2, 2}}, 8}, P{{{0, 1}, {1, 14}, {2, 6}}, 24},
        P{{{0, 1}, {1, 20}, {2, 12}, {4, 1}}, 54}, P{{{0, 1}, {1, 26}, {2, 20}, {4, 5}}, 110},
        P{{{0, 1}, {1, 32}, {2, 30}, {4, 15}}, 210}}},
      {"ho",
       {P{{{0, 1}, {1, 3}, {2, 2}}, 4}, P{{{0, 1}, {1, 5}, {2, 9}, {3, 4}}, 34},
        P{{{0, 1}, {1, 6}, {2, 16}, {3, 18}, {4, 10}}, 164},
        P{{{0, 1}, {1, 7}, {2, 22}, {3, 32}, {4, 44}, {5, 22}}, 612},
        P{{{0, 1}, {1, 8}, {2, 29}, {3, 44}, {4, 84}, {5, 98}, {6, 46}}, 1982}}}};
  const std::map<std::string, std::vector<Printed>> t3 = {
      {"jlp",
       {P{{{2, 4}}, 8}, P{{{2, 9}}, 18}, P{{{2, 16}}, 32}, P{{{2, 25}}, 50}, P{{{2, 36}}, 72}}},
      {"ho",
       {P{{{2, 1}, {3, 6}, {4, 9}}, 80},
        P{{{2, 1}, {3, 8}, {4, 30}, {5, 56}, {6, 49}}, 1152},
        P{{{2, 1}, {3, 10}, {4, 47}, {5, 140}, {6, 271}, {7, 330}, {8, 225}}, 11264},
        P{{{2, 1}, {3, 12}, {4, 68}, {5, 244}, {6, 630}, {7, 1204}, {8, 1668}, {9, 1612},
           {10, 961}},
          89600},
        P{{{2, 1}, {3, 14}, {4, 93}, {5, 392}, {6, 1186}, {7, 2772}, {8, 5154}, {9, 7560},
           {10, 8541}, {11, 7182}, {12, 3969}},
          626688}}}};
  const int b1 = compare_rows(1, t1), b2 = compare_rows(2, t2), b3 = compare_rows(3, t3);
  o.require(b1 == 0, "table 1 (" + std::to_string(b1) + " cells)");
  o.require(b2 == 0, "table 2 (" + std::to_string(b2) + " cells)");
  o.require(b3 == 0, "table 3 (" + std::to_string(b3) + " cells)");

  // General-n rows, with the one-body count of the quartic table taken as 6n-4.
  int formula_bad = 0;
  const std::vector<int> wide = {2, 3, 4, 5, 6, 7, 8};
  for (const auto& r : resource_table(1, wide)) {
    const int n = r.n_qubits;
    if (r.basis == "jlp") {
      formula_bad += r.tally.count(1) != 6 * n - 4 || r.tally.count(2) != 2 * binom(n, 2) ||
                     r.tally.cnot_total != 8 * binom(n, 2);
    } else if (r.basis == "ho-tuned") {
      formula_bad += r.tally.count(1) != n || r.tally.cnot_total != 0;
    }
  }
  for (const auto& r : resource_table(2, wide)) {
    const int n = r.n_qubits;
    if (r.basis != "jlp") continue;
    formula_bad += r.tally.count(1) != 6 * n - 4 || r.tally.count(2) != 2 * binom(n, 2) ||
                   r.tally.count(4) != binom(n, 4) ||
                   r.tally.cnot_total != 8 * binom(n, 2) + 6 * binom(n, 4);
  }
  for (const auto& r : resource_table(3, wide)) {
    if (r.basis != "jlp") continue;
    const int n = r.n_qubits;
    formula_bad += r.tally.count(2) != n * n || r.tally.cnot_total != 2 * n * n;
  }
  o.require(formula_bad == 0, "general-n rows");

  const auto c = count_gates(trotter_step_jlp(JlpGrid::from_qubits(3, 2.0), {1.0, 0.0}, 0.1));
  o.require(c.cnot == 24 && c.h == 6 && c.phase == 24, "Trotter step gate counts");
  o.note("Trotter step " + std::to_string(c.cnot) + " CNOT, " + std::to_string(c.h) + " H, " +
         std::to_string(c.phase) + " phase");
  return o;
}

// ---------------------------------------------------------------------------
// 5. Scaling fits

double free_epsilon(const JlpGrid& g, Pi2Variant v) {
  const auto r = eigensolve(build_site_hamiltonian_jlp(g, {1.0, 0.0}, v), 1, false);
  return epsilon_percent(r.eigenvalues[0], 0.5);
}

Outcome scaling_fits() {
  Outcome o;
  std::vector<std::pair<double, double>> sat;
  for (int n = 4; n <= 20; n += 2) {
    sat.emplace_back(n, free_epsilon(JlpGrid::from_states(n, balanced_phi_max(n)), Pi2Variant::Exact));
  }
  const auto fit = fit_saturation_scaling(sat);
  o.require(fit.rate >= 2.0 && fit.rate <= 2.5, "saturation rate");
  o.note("rate " + fmt("%.3f", fit.rate) + " amplitude " + fmt("%.3g", fit.amplitude));

  for (auto [v, target] : {std::pair{Pi2Variant::FiniteDifference, 2.0},
                           std::pair{Pi2Variant::Improved1, 4.0}}) {
    std::vector<std::pair<double, double>> pts;
    for (int n : {32, 64, 128, 256}) {
      const auto g = JlpGrid::from_states(n, 5.5);
      pts.emplace_back(g.delta(), free_epsilon(g, v));
    }
    const double slope = loglog_slope(pts);
    o.require(std::abs(slope - target) <= 0.3, std::string(to_string(v)) + " slope");
    o.note(std::string(to_string(v)) + " slope " + fmt("%.3f", slope));
  }
  return o;
}

// ---------------------------------------------------------------------------
// 6. Saturation points

std::optional<double> flattening_over(const SiteTheoryParams& p, int step, int max_states) {
  std::vector<std::pair<double, double>> series;
  const double ref = *table_reference_energy(p, 0);
  for (int n = 2; n <= max_states; n += step) {
    const auto r = eigensolve(build_site_hamiltonian_jlp(JlpGrid::from_states(n, 2.5), p), 1, false);
    series.emplace_back(n, epsilon_percent(r.eigenvalues[0], ref));
  }
  return flattening_point(series);
}

Outcome saturation_points() {
  Outcome o;
  const auto free_pt = flattening_over({1.0, 0.0}, 2, 40);
  const auto quartic_pt = flattening_over({1.0, 32.0}, 2, 40);
  o.require(free_pt && *free_pt == 6, "free flattening");
  o.require(quartic_pt && *quartic_pt == 18, "quartic flattening");
  o.note("even counts: free " + fmt("%g", free_pt.value_or(-1)) + ", quartic " +
         fmt("%g", quartic_pt.value_or(-1)));
  o.note("all counts: free " + fmt("%g", flattening_over({1.0, 0.0}, 1, 40).value_or(-1)) +
         ", quartic " + fmt("%g", flattening_over({1.0, 32.0}, 1, 40).value_or(-1)));
  const double kmax = JlpGrid::from_states(6, 2.5).max_abs_momentum();
  o.require(std::abs(kmax - 2.618) <= 0.01, "six-state momentum");
  o.note("six-state max|k| " + fmt("%.4f", kmax));
  return o;
}

// ---------------------------------------------------------------------------
// 7. Circuits

cmat pauli_matrix(const std::string& axes) {
  PauliSum s(static_cast<int>(axes.size()));
  s.add({axes, 1.0});
  return reconstruct(s).to_complex();
}

Outcome circuit_equivalence() {
  Outcome o;
  double qft_err = 0;
  for (int n = 1; n <= 5; ++n) {
    const int dim = 1 << n;
    const cmat c = circuit_unitary(symmetric_qft_circuit(n));
    const cmat u = symmetric_dft(dim).matrix();
    for (int x = 0; x < dim; ++x) {
      for (int j = 0; j < dim; ++j) {
        int rj = 0;
        for (int b = 0; b < n; ++b) rj |= ((j >> b) & 1) << (n - 1 - b);
        qft_err = std::max(qft_err, std::abs(c(rj, x) - u(x, j)));
      }
    }
  }
  o.require(qft_err < 1e-12, "symmetric transform");
  o.note("transform error " + fmt("%.1e", qft_err));

  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> uni(-2, 2);
  double exp_err = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + trial % 5;
    std::string axes;
    for (int q = 0; q < n; ++q) axes += "IXYZ"[rng() % 4];
    const PauliString p{axes, uni(rng)};
    const double theta = uni(rng);
    const cmat expect = (std::complex<double>(0, theta * p.coefficient) * pauli_matrix(axes)).exp();
    exp_err = std::max(exp_err, (circuit_unitary(synth_pauli_exp(p, theta)) - expect).cwiseAbs().maxCoeff());
  }
  o.require(exp_err < 1e-12, "Pauli exponentials");
  o.note("500 exponentials, error " + fmt("%.1e", exp_err));

  const auto g = JlpGrid::from_qubits(3, balanced_phi_max(8));
  const SiteTheoryParams free{1.0, 0.0};
  Eigen::VectorXcd psi0(8);
  for (int i = 0; i < 8; ++i) {
    const double x = g.field_values()[i] - 1.0;
    psi0(i) = std::exp(-0.5 * x * x);
  }
  psi0.normalize();
  const double t = 1.0;
  const Eigen::VectorXcd exact =
      (std::complex<double>(0, -t) * build_site_hamiltonian_jlp(g, free).to_complex()).exp() * psi0;
  std::vector<std::pair<double, double>> pts;
  for (int m : {8, 16, 32, 64, 128}) {
    const cmat step = circuit_unitary(trotter_step_jlp(g, free, t / m));
    Eigen::VectorXcd psi = psi0;
    for (int k = 0; k < m; ++k) psi = step * psi;
    const double ov = std::abs(exact.dot(psi));
    pts.emplace_back(m, std::sqrt(std::max(0.0, 1 - ov * ov)));
  }
  const double slope = loglog_slope(pts);
  o.require(std::abs(slope + 1.0) <= 0.1, "Trotter convergence");
  o.note("Trotter error exponent " + fmt("%.3f", slope));
  return o;
}

// ---------------------------------------------------------------------------
// 8. Noise floor

Outcome noise_floor() {
  Outcome o;
  const double phi = 5.5, sigma = 1e-5;
  const std::vector<int> nq = {3, 4, 5, 6, 7, 8};
  std::vector<double> median(nq.size()), clean(nq.size());
  for (size_t i = 0; i < nq.size(); ++i) {
    const auto g = JlpGrid::from_qubits(nq[i], phi);
    clean[i] = free_epsilon(g, Pi2Variant::Exact);
    std::vector<double> eps(32);
    parallel_for(32, default_worker_count(), [&](int s) {
      const auto h = build_site_hamiltonian_jlp(g, {1.0, 0.0}) +
                     0.5 * (apply_momentum_noise(g, {sigma, derive_seed(7, s)}) + (-1.0) * pi2_exact(g));
      eps[s] = epsilon_percent(eigensolve(h, 1, false).eigenvalues[0], 0.5);
    });
    std::nth_element(eps.begin(), eps.begin() + 16, eps.end());
    const double hi = eps[16];
    const double lo = *std::max_element(eps.begin(), eps.begin() + 16);
    median[i] = 0.5 * (lo + hi);
  }
  const int sat_states = min_states_for_support(phi, phi);
  int sat_q = 0;
  while ((1 << sat_q) < sat_states) ++sat_q;
  bool floor_ok = true, flat_ok = true;
  std::string series;
  for (size_t i = 0; i < nq.size(); ++i) {
    floor_ok = floor_ok && median[i] >= 1e-7;
    if (nq[i] >= sat_q && i + 1 < nq.size()) flat_ok = flat_ok && median[i] / median[i + 1] < 2.0;
    series += (i ? " " : "") + fmt("%.2e", median[i]);
  }
  o.require(floor_ok, "median above 1e-7");
  o.require(flat_ok, "no further gain past " + std::to_string(sat_q) + " qubits");
  o.require(clean.back() < median.back(), "noiseless below noisy");
  o.note("medians (nq 3..8) " + series + "; saturation at " + std::to_string(sat_q) +
         " qubits; noiseless at 8 qubits " + fmt("%.1e", clean.back()));
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"reference energies", reference_energies},
      {"position-space momentum operators", golden_matrices},
      {"Pauli decompositions", golden_decompositions},
      {"resource tables", resource_tables},
      {"scaling fits", scaling_fits},
      {"saturation points", saturation_points},
      {"circuit equivalence", circuit_equivalence},
      {"noise floor", noise_floor},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::printf("%s %zu %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
