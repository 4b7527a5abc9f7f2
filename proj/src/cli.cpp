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

#include "sfdig/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "sfdig/circuit.hpp"
#include "sfdig/hamiltonian.hpp"
#include "sfdig/spectra.hpp"

namespace sfdig {

using json = nlohmann::ordered_json;

std::vector<double> parse_real_spec(std::string_view text) {
  auto to_double = [](std::string_view s) {
    const std::string str(s);
    size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(str, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != str.size()) throw std::invalid_argument("bad number '" + str + "'");
    return v;
  };
  std::vector<double> out;
  if (text.find(':') != std::string_view::npos) {
    const auto a = text.find(':');
    const auto b = text.find(':', a + 1);
    if (b == std::string_view::npos) throw std::invalid_argument("range must be start:stop:step");
    const double start = to_double(text.substr(0, a));
    const double stop = to_double(text.substr(a + 1, b - a - 1));
    const double step = to_double(text.substr(b + 1));
    if (!(step > 0.0) || stop < start) {
      throw std::invalid_argument("bad range '" + std::string(text) + "'");
    }
    const long count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
    if (count > 1000000) throw std::invalid_argument("range too long");
    for (long i = 0; i < count; ++i) out.push_back(start + i * step);
    return out;
  }
  size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    out.push_back(to_double(text.substr(pos, comma == text.npos ? text.npos : comma - pos)));
    if (comma == text.npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<int> parse_int_spec(std::string_view text) {
  std::vector<int> out;
  for (double v : parse_real_spec(text)) {
    if (v != std::round(v)) {
      throw std::invalid_argument("expected integers in '" + std::string(text) + "'");
    }
    out.push_back(static_cast<int>(v));
  }
  return out;
}

void write_output(const std::string& path, const std::string& content,
                  std::ostream& stdout_stream) {
  if (path.empty() || path == "-") {
    stdout_stream << content;
    stdout_stream.flush();
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open '" + tmp + "' for writing");
    f << content;
    f.close();
    if (!f) {
      std::filesystem::remove(tmp);
      throw std::runtime_error("failed writing '" + tmp + "'");
    }
  }
  std::filesystem::rename(tmp, path);
}

namespace {

std::vector<double> diagonal_of(const HermitianOperator& op) {
  const Eigen::VectorXd d = op.real().diagonal();
  return {d.data(), d.data() + d.size()};
}

PauliSum jlp_kinetic_sum(const JlpGrid& g) {
  return decompose_diagonal(pi2_momentum_diagonal(g, Pi2Variant::Exact));
}

}  // namespace

std::vector<TallyRow> resource_table(int table, const std::vector<int>& n_qubits, double omega,
                                     double lambda) {
  if (table < 1 || table > 3) throw std::invalid_argument("resource_table: table must be 1, 2 or 3");
  std::vector<TallyRow> jlp, ho_a, ho_b;
  for (int n : n_qubits) {
    if (n < 1 || n > 8) throw std::invalid_argument("resource_table: n_qubits must be in [1, 8]");
    const auto g = JlpGrid::from_qubits(n, 1.0);
    const HoBasisSpec spec{omega, 1 << n, 4};
    if (table == 1) {
      jlp.push_back({"jlp", n,
                     tally({decompose_diagonal(diagonal_of(field_power_op(g, 2))),
                            jlp_kinetic_sum(g)},
                           true, n)});
      ho_a.push_back({"ho-tuned", n,
                      tally({decompose(ho_basis_hamiltonian({1.0, 1 << n, 4}))})});
      ho_b.push_back({"ho-detuned", n,
                      tally({decompose(build_site_hamiltonian_ho(spec, {1.0, 0.0}))})});
    } else if (table == 2) {
      const SiteTheoryParams p{1.0, lambda};
      jlp.push_back({"jlp", n, tally({jlp_potential_sum(g, p), jlp_kinetic_sum(g)}, true, n)});
      ho_a.push_back({"ho", n, tally({decompose(build_site_hamiltonian_ho(spec, p))})});
    } else {
      const PauliSum phi = decompose_diagonal(diagonal_of(field_power_op(g, 1)));
      jlp.push_back({"jlp", n, tally({tensor_product(phi, phi)})});
      const PauliSum ho_phi = decompose(ho_phi_power_op(spec, 1));
      ho_a.push_back({"ho", n, tally({tensor_product(ho_phi, ho_phi)})});
    }
  }
  std::vector<TallyRow> rows = std::move(jlp);
  rows.insert(rows.end(), ho_a.begin(), ho_a.end());
  rows.insert(rows.end(), ho_b.begin(), ho_b.end());
  return rows;
}

namespace {

/// Tabular command output shared by the csv and json renderers.
struct Report {
  json config;
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
};

std::string csv_cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

std::string render(const Report& r, const std::string& format) {
  if (format == "json") {
    json doc;
    doc["config"] = r.config;
    json records = json::array();
    for (const auto& row : r.rows) {
      json rec;
      for (size_t i = 0; i < r.columns.size(); ++i) rec[r.columns[i]] = row[i];
      records.push_back(std::move(rec));
    }
    doc["records"] = std::move(records);
    doc["tool_version"] = kToolVersion;
    return doc.dump(2) + "\n";
  }
  std::string out = "# config: " + r.config.dump() + "\n";
  out += std::string("# tool_version: ") + kToolVersion + "\n";
  for (size_t i = 0; i < r.columns.size(); ++i) out += (i ? "," : "") + r.columns[i];
  out += "\n";
  for (const auto& row : r.rows) {
    for (size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_cell(row[i]);
    out += "\n";
  }
  return out;
}

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

/// Theory couplings shared by most subcommands.
struct TheoryOptions {
  std::string system = "free-ho";
  std::optional<double> lambda;
  std::optional<double> mass_sq;
  std::optional<double> mu;

  void attach(CLI::App* app) {
    app->add_option("--system", system,
                    "Preset couplings: free-ho (lambda 0, m^2 1), phi4 (lambda 32, m^2 1), "
                    "double-well (mu 2, lambda 1)")
        ->check(CLI::IsMember({"free-ho", "phi4", "double-well"}));
    app->add_option("--lambda", lambda, "Quartic coupling (overrides the preset)");
    auto* m = app->add_option("--mass-sq", mass_sq, "Mass term m^2 (overrides the preset)");
    app->add_option("--mu", mu, "Double-well parameter; sets m^2 = -mu^2")->excludes(m);
  }

  SiteTheoryParams params() const {
    SiteTheoryParams p;
    if (system == "phi4") p = {1.0, 32.0};
    if (system == "double-well") p = SiteTheoryParams::double_well(2.0, 1.0);
    if (lambda) p.lambda = *lambda;
    if (mass_sq) p.mass_sq = *mass_sq;
    if (mu) p.mass_sq = -(*mu) * (*mu);
    p.validate();
    return p;
  }

  void echo(json& cfg) const {
    const auto p = params();
    cfg["system"] = system;
    cfg["lambda"] = p.lambda;
    cfg["mass_sq"] = p.mass_sq;
  }
};

struct OutputOptions {
  std::string output = "-";
  std::string format = "csv";

  void attach(CLI::App* app, const std::vector<std::string>& formats) {
    app->add_option("-o,--output", output, "Output path, '-' for stdout (default)");
    format = formats.front();
    app->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
  }
};

std::vector<int> state_counts(const std::string& nq, const std::string& ns) {
  if (!ns.empty()) return parse_int_spec(ns);
  std::vector<int> out;
  for (int q : parse_int_spec(nq)) {
    if (q < 1 || q > 14) throw std::invalid_argument("--nq values must be in [1, 14]");
    out.push_back(1 << q);
  }
  return out;
}

json nq_of(int n_states) {
  if (n_states > 0 && (n_states & (n_states - 1)) == 0) {
    int q = 0;
    while ((1 << q) < n_states) ++q;
    return q;
  }
  return nullptr;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"sfdig: digitized scalar field theory toolkit.\n"
               "Ranges are written start:stop:step (stop inclusive); lists are comma separated.\n"
               "Sweeps use SFDIG_WORKERS worker threads unless --workers is given."};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "Lowest eigenvalues of a site or lattice Hamiltonian");
  TheoryOptions sp_theory;
  OutputOptions sp_out;
  std::string sp_basis = "jlp", sp_variant = "exact", sp_bc = "twisted", sp_spatial = "open";
  int sp_nq = 3, sp_states = 0, sp_levels = 2, sp_sites = 1, sp_headroom = 4;
  double sp_phi = 2.5, sp_omega = 1.0, sp_sigma = 0.0;
  std::uint64_t sp_seed = 0;
  sp_theory.attach(spectrum);
  sp_out.attach(spectrum, {"csv", "json"});
  spectrum->add_option("--basis", sp_basis)->check(CLI::IsMember({"jlp", "ho"}));
  spectrum->add_option("--nq", sp_nq, "Qubits per site");
  spectrum->add_option("--n-states", sp_states, "States per site (overrides --nq)");
  spectrum->add_option("--phi-max", sp_phi, "JLP field bound");
  spectrum->add_option("--omega", sp_omega, "HO basis frequency");
  spectrum->add_option("--headroom", sp_headroom, "HO construction headroom");
  spectrum->add_option("--variant", sp_variant, "finite-difference|improved1|improved2|exact");
  spectrum->add_option("--bc", sp_bc, "twisted|periodic");
  spectrum->add_option("--sites", sp_sites, "Number of lattice sites");
  spectrum->add_option("--spatial-bc", sp_spatial, "open|periodic");
  spectrum->add_option("--levels", sp_levels, "Number of eigenvalues");
  spectrum->add_option("--sigma", sp_sigma, "Momentum noise width (single JLP site)");
  spectrum->add_option("--seed", sp_seed, "Noise seed");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Precision scan over grid or basis parameters");
  TheoryOptions sw_theory;
  OutputOptions sw_out;
  std::string sw_basis = "jlp", sw_variant = "exact", sw_bc = "twisted";
  std::string sw_phi = "2.5", sw_omega = "1.0", sw_nq = "3", sw_states;
  int sw_level = 0, sw_workers = 0, sw_headroom = 4;
  double sw_sigma = 0.0, sw_axis_scale = 1.0;
  std::uint64_t sw_seed = 0;
  std::optional<double> sw_reference;
  sw_theory.attach(sweep);
  sw_out.attach(sweep, {"csv", "json"});
  sweep->add_option("--basis", sw_basis)->check(CLI::IsMember({"jlp", "ho"}));
  sweep->add_option("--phi-max", sw_phi, "JLP field bounds (range or list)");
  sweep->add_option("--omega", sw_omega, "HO frequencies (range or list)");
  sweep->add_option("--nq", sw_nq, "Qubit counts (range or list)");
  sweep->add_option("--n-states", sw_states, "State counts (range or list; overrides --nq)");
  sweep->add_option("--variant", sw_variant, "finite-difference|improved1|improved2|exact");
  sweep->add_option("--bc", sw_bc, "twisted|periodic");
  sweep->add_option("--level", sw_level, "Energy level");
  sweep->add_option("--headroom", sw_headroom, "HO construction headroom");
  sweep->add_option("--sigma", sw_sigma, "Momentum noise width");
  sweep->add_option("--seed", sw_seed, "Base noise seed");
  sweep->add_option("--reference", sw_reference, "Reference energy override");
  sweep->add_option("--axis-scale", sw_axis_scale, "Scale factor on the HO axis sqrt(n_states/omega)");
  sweep->add_option("--workers", sw_workers, "Worker threads");

  // decompose
  auto* dec = app.add_subcommand("decompose", "Pauli decomposition of a single-site operator");
  TheoryOptions dc_theory;
  OutputOptions dc_out;
  std::string dc_target = "hamiltonian", dc_variant = "exact", dc_bc = "twisted";
  int dc_nq = 3, dc_headroom = 4;
  double dc_phi = 1.0, dc_omega = 1.0;
  dc_theory.attach(dec);
  dc_out.attach(dec, {"text", "csv", "json"});
  dec->add_option("--target", dc_target,
                  "phi|phi2|phi4|pi2-fd|pi2-improved1|pi2-improved2|pi2-exact|pi2-momentum|"
                  "potential|hamiltonian|ho-phi|ho-phi2|ho-phi4|ho-delta-h|ho-hamiltonian")
      ->check(CLI::IsMember({"phi", "phi2", "phi4", "pi2-fd", "pi2-improved1", "pi2-improved2",
                             "pi2-exact", "pi2-momentum", "potential", "hamiltonian", "ho-phi",
                             "ho-phi2", "ho-phi4", "ho-delta-h", "ho-hamiltonian"}));
  dec->add_option("--nq", dc_nq, "Qubits");
  dec->add_option("--phi-max", dc_phi, "JLP field bound");
  dec->add_option("--omega", dc_omega, "HO basis frequency");
  dec->add_option("--headroom", dc_headroom, "HO construction headroom");
  dec->add_option("--variant", dc_variant, "Pi^2 variant for --target hamiltonian");
  dec->add_option("--bc", dc_bc, "twisted|periodic");

  // circuit
  auto* circ = app.add_subcommand("circuit", "Emit a gate-level circuit");
  TheoryOptions ci_theory;
  OutputOptions ci_out;
  std::string ci_kind = "trotter", ci_pauli = "ZZ";
  int ci_nq = 3, ci_steps = 1;
  double ci_phi = 2.5, ci_dt = 0.1, ci_theta = 0.1, ci_coeff = 1.0;
  bool ci_swaps = false;
  ci_theory.attach(circ);
  ci_out.attach(circ, {"text", "csv", "json"});
  circ->add_option("--kind", ci_kind, "qft|qft-standard|trotter|pauli-exp")
      ->check(CLI::IsMember({"qft", "qft-standard", "trotter", "pauli-exp"}));
  circ->add_option("--nq", ci_nq, "Qubits");
  circ->add_option("--phi-max", ci_phi, "JLP field bound");
  circ->add_option("--dt", ci_dt, "Trotter time step");
  circ->add_option("--steps", ci_steps, "Number of Trotter steps");
  circ->add_flag("--swaps", ci_swaps, "Use swap networks instead of reversed momentum indexing");
  circ->add_option("--pauli", ci_pauli, "Pauli string for --kind pauli-exp");
  circ->add_option("--coefficient", ci_coeff, "Coefficient of the Pauli string");
  circ->add_option("--theta", ci_theta, "Angle of exp(i theta c P)");

  // tally
  auto* tal = app.add_subcommand("tally", "Operator and CNOT counts of the resource tables");
  OutputOptions ta_out;
  int ta_table = 1;
  std::string ta_nq = "2:6:1";
  double ta_omega = 1.3, ta_lambda = 32.0;
  ta_out.attach(tal, {"csv", "json"});
  tal->add_option("--table", ta_table, "Table number (1, 2 or 3)")->check(CLI::Range(1, 3));
  tal->add_option("--nq", ta_nq, "Qubit counts (range or list)");
  tal->add_option("--omega", ta_omega, "Detuned HO frequency");
  tal->add_option("--lambda", ta_lambda, "Quartic coupling for table 2");

  // noise
  auto* noi = app.add_subcommand("noise", "Precision under Gaussian momentum-space noise");
  TheoryOptions no_theory;
  OutputOptions no_out;
  std::string no_nq = "3:8:1", no_states;
  int no_seeds = 32, no_level = 0, no_workers = 0;
  double no_sigma = 1e-5, no_phi = 5.5;
  std::uint64_t no_seed = 0;
  no_theory.attach(noi);
  no_out.attach(noi, {"csv", "json"});
  noi->add_option("--sigma", no_sigma, "Noise width");
  noi->add_option("--seeds", no_seeds, "Ensemble size");
  noi->add_option("--seed", no_seed, "Base seed");
  noi->add_option("--phi-max", no_phi, "JLP field bound");
  noi->add_option("--nq", no_nq, "Qubit counts (range or list)");
  noi->add_option("--n-states", no_states, "State counts (overrides --nq)");
  noi->add_option("--level", no_level, "Energy level");
  noi->add_option("--workers", no_workers, "Worker threads");

  // wavefunction
  auto* wav = app.add_subcommand("wavefunction", "Field and momentum space wavefunctions");
  TheoryOptions wf_theory;
  OutputOptions wf_out;
  std::string wf_variant = "exact", wf_bc = "twisted";
  int wf_nq = 5, wf_states = 0, wf_level = 0;
  double wf_phi = 2.5;
  wf_theory.attach(wav);
  wf_out.attach(wav, {"csv", "json"});
  wav->add_option("--nq", wf_nq, "Qubits");
  wav->add_option("--n-states", wf_states, "States (overrides --nq)");
  wav->add_option("--phi-max", wf_phi, "JLP field bound");
  wav->add_option("--variant", wf_variant, "Pi^2 variant");
  wav->add_option("--bc", wf_bc, "twisted|periodic");
  wav->add_option("--level", wf_level, "Energy level");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (spectrum->parsed()) {
      const auto p = sp_theory.params();
      const int ns = sp_states > 0 ? sp_states : (1 << sp_nq);
      Report r;
      r.config["command"] = "spectrum";
      sp_theory.echo(r.config);
      r.config["basis"] = sp_basis;
      r.config["n_states"] = ns;
      r.config["sites"] = sp_sites;
      r.config["spatial_bc"] = sp_spatial;
      HermitianOperator h;
      LatticeSpec lat{sp_sites, parse_spatial_bc(sp_spatial), HoBasisSpec{}};
      if (sp_basis == "jlp") {
        const auto grid = JlpGrid::from_states(ns, sp_phi, parse_boundary_mode(sp_bc));
        const auto variant = parse_pi2_variant(sp_variant);
        r.config["phi_max"] = sp_phi;
        r.config["variant"] = std::string(to_string(variant));
        r.config["bc"] = std::string(to_string(grid.boundary()));
        r.config["sigma"] = sp_sigma;
        r.config["seed"] = sp_seed;
        lat.site = grid;
        h = build_lattice_hamiltonian(lat, p, variant);
        if (sp_sigma > 0.0) {
          if (sp_sites != 1) throw std::invalid_argument("--sigma requires a single site");
          h += -0.5 * pi2_operator(grid, variant);
          h += 0.5 * apply_momentum_noise(grid, {sp_sigma, sp_seed});
        }
      } else {
        const HoBasisSpec spec{sp_omega, ns, sp_headroom};
        r.config["omega"] = sp_omega;
        r.config["headroom"] = sp_headroom;
        lat.site = spec;
        h = build_lattice_hamiltonian(lat, p);
      }
      const int k = std::min(sp_levels, h.dim());
      const auto res = eigensolve(h, k, false);
      r.columns = {"level", "energy", "reference", "epsilon_percent"};
      for (int i = 0; i < k; ++i) {
        const auto ref = table_reference_energy(p, i, sp_sites);
        r.rows.push_back({i, res.eigenvalues[i], optional_json(ref),
                          ref ? json(epsilon_percent(res.eigenvalues[i], *ref)) : json(nullptr)});
      }
      write_output(sp_out.output, render(r, sp_out.format), out);
    } else if (sweep->parsed()) {
      const auto p = sw_theory.params();
      const auto ns = state_counts(sw_nq, sw_states);
      Report r;
      r.config["command"] = "sweep";
      sw_theory.echo(r.config);
      r.config["basis"] = sw_basis;
      r.config["n_states"] = ns;
      r.config["level"] = sw_level;
      std::vector<SweepRecord> recs;
      if (sw_basis == "jlp") {
        JlpSweepRequest req;
        req.params = p;
        req.variant = parse_pi2_variant(sw_variant);
        req.bc = parse_boundary_mode(sw_bc);
        req.phi_max = parse_real_spec(sw_phi);
        req.n_states = ns;
        req.level = sw_level;
        req.reference = sw_reference;
        req.sigma = sw_sigma;
        req.seed = sw_seed;
        req.workers = sw_workers;
        r.config["phi_max"] = req.phi_max;
        r.config["variant"] = std::string(to_string(req.variant));
        r.config["bc"] = std::string(to_string(req.bc));
        r.config["sigma"] = sw_sigma;
        r.config["seed"] = sw_seed;
        recs = sweep_jlp(req);
      } else {
        HoSweepRequest req;
        req.params = p;
        req.omega = parse_real_spec(sw_omega);
        req.n_states = ns;
        req.level = sw_level;
        req.headroom = sw_headroom;
        req.reference = sw_reference;
        req.workers = sw_workers;
        r.config["omega"] = req.omega;
        r.config["headroom"] = sw_headroom;
        r.config["axis_scale"] = sw_axis_scale;
        recs = sweep_ho(req);
      }
      r.config["reference"] = optional_json(sw_reference);
      r.columns = {"basis", "phi_max", "omega", "n_states", "n_qubits", "ho_axis", "lambda",
                   "mass_sq", "variant", "sigma", "seed", "level", "energy", "reference",
                   "epsilon_percent"};
      for (const auto& s : recs) {
        const json axis = s.omega ? json(sw_axis_scale * std::sqrt(s.n_states / *s.omega))
                                  : json(nullptr);
        r.rows.push_back({s.basis, optional_json(s.phi_max), optional_json(s.omega), s.n_states,
                          nq_of(s.n_states), axis, s.lambda, s.mass_sq, s.variant, s.sigma,
                          s.seed, s.level, number_or_null(s.energy), s.reference,
                          number_or_null(s.epsilon_percent)});
      }
      write_output(sw_out.output, render(r, sw_out.format), out);
    } else if (dec->parsed()) {
      const auto p = dc_theory.params();
      const auto grid = JlpGrid::from_qubits(dc_nq, dc_phi, parse_boundary_mode(dc_bc));
      const HoBasisSpec spec{dc_omega, 1 << dc_nq, dc_headroom};
      PauliSum sum;
      const std::string& t = dc_target;
      if (t == "phi") sum = decompose(field_power_op(grid, 1));
      else if (t == "phi2") sum = decompose(field_power_op(grid, 2));
      else if (t == "phi4") sum = decompose(field_power_op(grid, 4));
      else if (t == "pi2-fd") sum = decompose(pi2_finite_difference(grid));
      else if (t == "pi2-improved1") sum = decompose(pi2_improved(grid, 1));
      else if (t == "pi2-improved2") sum = decompose(pi2_improved(grid, 2));
      else if (t == "pi2-exact") sum = decompose(pi2_exact(grid));
      else if (t == "pi2-momentum") sum = jlp_kinetic_sum(grid);
      else if (t == "potential") sum = jlp_potential_sum(grid, p);
      else if (t == "hamiltonian")
        sum = decompose(build_site_hamiltonian_jlp(grid, p, parse_pi2_variant(dc_variant)));
      else if (t == "ho-phi") sum = decompose(ho_phi_power_op(spec, 1));
      else if (t == "ho-phi2") sum = decompose(ho_phi_power_op(spec, 2));
      else if (t == "ho-phi4") sum = decompose(ho_phi_power_op(spec, 4));
      else if (t == "ho-delta-h") sum = decompose(ho_delta_h(spec));
      else sum = decompose(build_site_hamiltonian_ho(spec, p));
      if (dc_out.format == "text") {
        write_output(dc_out.output, sum.to_text(), out);
      } else {
        Report r;
        r.config["command"] = "decompose";
        dc_theory.echo(r.config);
        r.config["target"] = t;
        r.config["nq"] = dc_nq;
        r.config["phi_max"] = dc_phi;
        r.config["omega"] = dc_omega;
        r.config["bc"] = dc_bc;
        r.columns = {"axes", "weight", "coefficient"};
        for (const auto& term : sum.terms()) r.rows.push_back({term.axes, term.weight(), term.coefficient});
        write_output(dc_out.output, render(r, dc_out.format), out);
      }
    } else if (circ->parsed()) {
      Circuit c(ci_nq);
      if (ci_kind == "qft") {
        c = symmetric_qft_circuit(ci_nq);
      } else if (ci_kind == "qft-standard") {
        c = standard_qft_circuit(ci_nq);
      } else if (ci_kind == "pauli-exp") {
        c = synth_pauli_exp({ci_pauli, ci_coeff}, ci_theta);
      } else {
        if (ci_steps < 1) throw std::invalid_argument("--steps must be >= 1");
        const auto grid = JlpGrid::from_qubits(ci_nq, ci_phi);
        const auto step = trotter_step_jlp(grid, ci_theory.params(), ci_dt, ci_swaps);
        for (int s = 0; s < ci_steps; ++s) c.append(step);
      }
      if (ci_out.format == "text") {
        write_output(ci_out.output, c.to_text(), out);
      } else {
        Report r;
        r.config["command"] = "circuit";
        r.config["kind"] = ci_kind;
        r.config["width"] = c.width();
        if (ci_kind == "trotter") {
          ci_theory.echo(r.config);
          r.config["phi_max"] = ci_phi;
          r.config["dt"] = ci_dt;
          r.config["steps"] = ci_steps;
          r.config["swaps"] = ci_swaps;
        } else if (ci_kind == "pauli-exp") {
          r.config["pauli"] = ci_pauli;
          r.config["coefficient"] = ci_coeff;
          r.config["theta"] = ci_theta;
        }
        const auto n = count_gates(c);
        r.columns = {"cnot", "h", "s", "sdg", "phase", "global_phase", "single_qubit"};
        r.rows.push_back({n.cnot, n.h, n.s, n.sdg, n.phase, n.global_phase, n.single_qubit()});
        write_output(ci_out.output, render(r, ci_out.format), out);
      }
    } else if (tal->parsed()) {
      const auto nq = parse_int_spec(ta_nq);
      const auto rows = resource_table(ta_table, nq, ta_omega, ta_lambda);
      int kmax = 0;
      for (const auto& row : rows) {
        for (const auto& [k, c] : row.tally.k_body_counts) {
          if (c) kmax = std::max(kmax, k);
        }
      }
      Report r;
      r.config["command"] = "tally";
      r.config["table"] = ta_table;
      r.config["nq"] = nq;
      r.config["omega"] = ta_omega;
      r.config["lambda"] = ta_lambda;
      r.columns = {"basis", "n_qubits"};
      for (int k = 0; k <= kmax; ++k) r.columns.push_back("body_" + std::to_string(k));
      r.columns.push_back("qft");
      r.columns.push_back("cnot");
      for (const auto& row : rows) {
        std::vector<json> cells{row.basis, row.n_qubits};
        for (int k = 0; k <= kmax; ++k) cells.push_back(row.tally.count(k));
        cells.push_back(row.tally.includes_qft);
        cells.push_back(row.tally.cnot_total);
        r.rows.push_back(std::move(cells));
      }
      write_output(ta_out.output, render(r, ta_out.format), out);
    } else if (noi->parsed()) {
      const auto p = no_theory.params();
      const auto ns = state_counts(no_nq, no_states);
      if (no_seeds < 1) throw std::invalid_argument("--seeds must be >= 1");
      Report r;
      r.config["command"] = "noise";
      no_theory.echo(r.config);
      r.config["sigma"] = no_sigma;
      r.config["seeds"] = no_seeds;
      r.config["seed"] = no_seed;
      r.config["phi_max"] = no_phi;
      r.config["n_states"] = ns;
      r.config["level"] = no_level;
      const double ref = reference_energy(p, no_level, no_phi);
      std::vector<std::vector<double>> eps(ns.size(), std::vector<double>(no_seeds + 1));
      parallel_for(static_cast<int>(ns.size() * (no_seeds + 1)), no_workers, [&](int idx) {
        const size_t i = idx / (no_seeds + 1);
        const int s = idx % (no_seeds + 1);
        const auto grid = JlpGrid::from_states(ns[i], no_phi);
        HermitianOperator h = build_site_hamiltonian_jlp(grid, p, Pi2Variant::Exact);
        if (s > 0) {
          h += -0.5 * pi2_exact(grid);
          const NoiseModel nm{no_sigma, derive_seed(derive_seed(no_seed, ns[i]), s - 1)};
          h += 0.5 * apply_momentum_noise(grid, nm);
        }
        eps[i][s] = epsilon_percent(eigensolve(h, no_level + 1, false).eigenvalues[no_level], ref);
      });
      r.columns = {"n_states", "n_qubits", "epsilon_noiseless", "epsilon_median", "epsilon_min",
                   "epsilon_max"};
      for (size_t i = 0; i < ns.size(); ++i) {
        std::vector<double> e(eps[i].begin() + 1, eps[i].end());
        std::sort(e.begin(), e.end());
        const size_t m = e.size();
        const double median = m % 2 ? e[m / 2] : 0.5 * (e[m / 2 - 1] + e[m / 2]);
        r.rows.push_back({ns[i], nq_of(ns[i]), eps[i][0], median, e.front(), e.back()});
      }
      write_output(no_out.output, render(r, no_out.format), out);
    } else if (wav->parsed()) {
      const auto p = wf_theory.params();
      const int ns = wf_states > 0 ? wf_states : (1 << wf_nq);
      const auto grid = JlpGrid::from_states(ns, wf_phi, parse_boundary_mode(wf_bc));
      const auto variant = parse_pi2_variant(wf_variant);
      const auto h = build_site_hamiltonian_jlp(grid, p, variant);
      const auto res = eigensolve(h, wf_level + 1, true);
      const auto wf = wavefunctions(res, grid, wf_level);
      Report r;
      r.config["command"] = "wavefunction";
      wf_theory.echo(r.config);
      r.config["n_states"] = ns;
      r.config["phi_max"] = wf_phi;
      r.config["variant"] = std::string(to_string(variant));
      r.config["bc"] = std::string(to_string(grid.boundary()));
      r.config["level"] = wf_level;
      r.config["energy"] = res.eigenvalues[wf_level];
      r.columns = {"index", "phi", "psi", "k", "psi_k_re", "psi_k_im", "psi_k_abs"};
      for (int i = 0; i < ns; ++i) {
        r.rows.push_back({i, grid.field_values()[i], wf.field[i], grid.momenta()[i],
                          wf.momentum[i].real(), wf.momentum[i].imag(), std::abs(wf.momentum[i])});
      }
      write_output(wf_out.output, render(r, wf_out.format), out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace sfdig
