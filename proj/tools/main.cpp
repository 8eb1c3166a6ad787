// excivib CLI: couplings, band structure, exact diagonalization, polaron
// transform and relaxation kinetics for the 1D exciton-vibration lattice
// model. Artifacts are deterministic: identical inputs give byte-identical
// bodies; run metadata goes to an optional --meta sidecar only.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "excivib/excivib.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitResource = 3;
constexpr int kExitNumerical = 4;

struct OutputTarget {
  std::string path;  // empty: stdout
  std::string meta_path;

  void write(const std::string& body, const std::string& command) const {
    if (path.empty()) {
      std::cout << body;
    } else {
      std::ofstream out(path, std::ios::binary);
      if (!out) throw excivib::ValidationError("cannot write '" + path + "'");
      out << body;
    }
    if (!meta_path.empty()) {
      const auto now = std::chrono::system_clock::now();
      json meta;
      meta["command"] = command;
      meta["output"] = path.empty() ? "-" : path;
      meta["unix_time"] =
          std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch())
              .count();
      std::ofstream out(meta_path, std::ios::binary);
      if (!out)
        throw excivib::ValidationError("cannot write '" + meta_path + "'");
      out << meta.dump(2) << "\n";
    }
  }
};

std::string config_comment_block(const excivib::ModelSpec& spec) {
  std::string block;
  for (const auto& [key, value] : excivib::config_from_spec(spec)) {
    block += "# " + key + " = " + value + "\n";
  }
  return block;
}

json config_json(const excivib::ModelSpec& spec) {
  json j;
  for (const auto& [key, value] : excivib::config_from_spec(spec)) {
    j[key] = value;
  }
  return j;
}

// Simple tabular artifact: CSV with a config-echo comment header, or the
// same table as JSON rows.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::pair<std::string, std::string>> extra_config;

  std::string render_csv(const excivib::ModelSpec& spec) const {
    std::string body = config_comment_block(spec);
    for (const auto& [key, value] : extra_config) {
      body += "# " + key + " = " + value + "\n";
    }
    for (std::size_t i = 0; i < columns.size(); ++i) {
      body += (i ? "," : "") + columns[i];
    }
    body += "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        body += (i ? "," : "") + row[i];
      }
      body += "\n";
    }
    return body;
  }

  std::string render_json(const excivib::ModelSpec& spec) const {
    json j;
    j["config"] = config_json(spec);
    for (const auto& [key, value] : extra_config) j["config"][key] = value;
    j["columns"] = columns;
    j["rows"] = rows;
    return j.dump(2) + "\n";
  }

  std::string render(const excivib::ModelSpec& spec,
                     const std::string& format) const {
    if (format == "json") return render_json(spec);
    return render_csv(spec);
  }
};

using excivib::format_sci;

excivib::ModelSpec load_spec(const std::string& config_path) {
  if (config_path.empty()) {
    throw excivib::ValidationError("--config is required");
  }
  return excivib::spec_from_config(
      excivib::parse_key_value_file(config_path));
}

int run_couplings(const std::string& config_path, const OutputTarget& out) {
  const auto spec = load_spec(config_path);
  const auto c = excivib::compute_couplings(spec);

  json j;
  j["config"] = config_json(spec);
  j["hJ_ev"] = c.j;
  j["hF_g_ev"] = c.f_g;
  j["hF_e_ev"] = c.f_e;
  j["hM_g_ev"] = c.m_g;
  j["hM_e_ev"] = c.m_e;
  j["hDelta_ev"] = c.delta;
  j["hOmega0_ev"] = c.omega_0;
  j["abar_g_angstrom"] = c.abar_g;
  j["abar_e_angstrom"] = c.abar_e;
  try {
    const auto regime = excivib::classify_regime(c);
    j["regime"] = {{"regime", excivib::to_string(regime.regime)},
                   {"ratio", regime.ratio},
                   {"lower", regime.lower},
                   {"upper", regime.upper}};
  } catch (const excivib::DomainError&) {
    j["regime"] = nullptr;  // every coupling vanished (magic angle, M = 0)
  }
  out.write(j.dump(2) + "\n", "couplings");
  return kExitOk;
}

int run_sweep_theta(const std::string& config_path, double from_deg,
                    double to_deg, int steps, const std::string& format,
                    const OutputTarget& out) {
  const auto spec = load_spec(config_path);
  if (steps < 2) throw excivib::ValidationError("sweep-theta needs --steps >= 2");

  Table table;
  table.columns = {"theta_deg", "hJ_ev", "hF_g_ev", "hF_e_ev"};
  const double step = (to_deg - from_deg) / (steps - 1);
  for (int i = 0; i < steps; ++i) {
    const double theta_deg = from_deg + i * step;
    excivib::ModelSpec point = spec;
    point.atom.theta = excivib::deg_to_rad(theta_deg);
    const double j = excivib::dipole_transfer_j(point.atom, point.lattice,
                                                point.units);
    const double f_g = excivib::transfer_vibration_f(
        point.atom, point.lattice, point.vib.omega_g, point.units);
    const double f_e = excivib::transfer_vibration_f(
        point.atom, point.lattice, point.vib.omega_e, point.units);
    table.rows.push_back({format_sci(theta_deg), format_sci(j),
                          format_sci(f_g), format_sci(f_e)});
  }
  out.write(table.render(spec, format), "sweep-theta");
  return kExitOk;
}

int run_band(const std::string& config_path, const std::string& format,
             const OutputTarget& out) {
  const auto spec = load_spec(config_path);
  const auto grid = excivib::build_grid(spec.lattice);
  const double j = excivib::dipole_transfer_j(spec.atom, spec.lattice,
                                              spec.units);
  const auto band = excivib::exciton_dispersion(grid, spec.atom.omega_a, j);

  Table table;
  table.columns = {"n", "k_inv_angstrom", "homega_ev"};
  for (std::size_t i = 0; i < grid.modes.size(); ++i) {
    table.rows.push_back({std::to_string(grid.modes[i].n),
                          format_sci(grid.modes[i].k),
                          format_sci(band.omega[i])});
  }
  out.write(table.render(spec, format), "band");
  return kExitOk;
}

int run_rates(const std::string& config_path, double eta, double temp,
              const std::string& format, const OutputTarget& out) {
  const auto spec = load_spec(config_path);
  const auto grid = excivib::build_grid(spec.lattice);
  const auto c = excivib::compute_couplings(spec);
  const auto band = excivib::exciton_dispersion(grid, spec.atom.omega_a, c.j);
  if (eta <= 0.0) eta = excivib::default_eta(band);
  const auto rates = excivib::build_rate_matrix(band, c, spec.vib, eta, temp);

  Table table;
  table.columns = {"k", "species", "channel", "w"};
  table.extra_config = {{"rates.eta_ev", format_sci(eta)},
                        {"rates.temp_ev", format_sci(temp)}};
  const auto fk_g = excivib::vertex_fk(grid, c.f_g);
  const auto fk_e = excivib::vertex_fk(grid, c.f_e);
  const int n = static_cast<int>(grid.modes.size());
  for (int k = 0; k < n; ++k) {
    const std::string kv = format_sci(grid.modes[k].k);
    table.rows.push_back(
        {kv, "g", "verbatim", format_sci(excivib::golden_rule_rate(fk_g[k]))});
    table.rows.push_back(
        {kv, "e", "verbatim", format_sci(excivib::golden_rule_rate(fk_e[k]))});
    table.rows.push_back(
        {kv, "g", "emission", format_sci(rates.emit_g.col(k).sum())});
    table.rows.push_back(
        {kv, "e", "emission", format_sci(rates.emit_e.col(k).sum())});
    table.rows.push_back(
        {kv, "g", "absorption", format_sci(rates.absorb_g.col(k).sum())});
    table.rows.push_back(
        {kv, "e", "absorption", format_sci(rates.absorb_e.col(k).sum())});
  }
  out.write(table.render(spec, format), "rates");
  return kExitOk;
}

int run_ed(const std::string& config_path, const std::string& terms_csv,
           int eigs, const OutputTarget& out) {
  const auto spec = load_spec(config_path);
  const unsigned terms = excivib::term_mask_from_string(terms_csv);
  const auto basis = excivib::enumerate_basis(spec.lattice, spec.vib);
  const auto c = excivib::compute_couplings(spec);
  const auto h = excivib::assemble_hamiltonian(basis, spec, c, terms);
  const int count = std::min<int>(eigs, h.dimension());
  excivib::DiagonalizeOptions opts;
  opts.want_vectors = false;
  const auto spectrum = excivib::diagonalize(h, count, opts);

  json j;
  j["config"] = config_json(spec);
  j["terms"] = excivib::term_mask_to_string(terms);
  j["dimension"] = h.dimension();
  j["hermiticity_defect_ev"] = h.hermiticity_defect;
  j["eigenvalues_ev"] = spectrum.eigenvalues;
  j["residual_norms"] = spectrum.residual_norms;
  out.write(j.dump(2) + "\n", "ed");
  return kExitOk;
}

int run_evolve(const std::string& config_path, double t, int steps,
               int initial_site, const std::string& format,
               const OutputTarget& out) {
  const auto spec = load_spec(config_path);
  if (initial_site < 0 || initial_site >= spec.lattice.site_count) {
    throw excivib::ValidationError("--initial site outside the lattice");
  }
  const auto basis = excivib::enumerate_basis(spec.lattice, spec.vib);
  const auto c = excivib::compute_couplings(spec);
  const auto h = excivib::assemble_hamiltonian(basis, spec, c);

  excivib::FockState start;
  start.excited_site = initial_site;
  start.n_b.assign(spec.lattice.site_count, 0);
  start.n_c.assign(spec.lattice.site_count, 0);
  const excivib::BasisIndex index(basis);
  const int start_index = index.find(start);

  excivib::StateVector psi0 =
      excivib::StateVector::Zero(static_cast<int>(basis.size()));
  psi0[start_index] = 1.0;
  const auto evolution = excivib::evolve(h, psi0, t, steps);

  Table table;
  table.columns = {"t"};
  for (int site = 0; site < spec.lattice.site_count; ++site) {
    table.columns.push_back("P_site" + std::to_string(site));
  }
  for (std::size_t s = 0; s < evolution.times.size(); ++s) {
    std::vector<std::string> row = {format_sci(evolution.times[s])};
    const auto populations = excivib::site_populations(
        evolution.states[s], basis, spec.lattice.site_count);
    for (const double p : populations) row.push_back(format_sci(p));
    table.rows.push_back(std::move(row));
  }
  out.write(table.render(spec, format), "evolve");
  return kExitOk;
}

int run_polaron(const std::string& config_path, const OutputTarget& out) {
  const auto spec = load_spec(config_path);
  const auto c = excivib::compute_couplings(spec);
  if (spec.vib.n_max < 1) {
    throw excivib::ValidationError("polaron needs vib.n_max >= 1");
  }
  const auto frame = excivib::build_polaron_frame(spec, c);

  json j;
  j["config"] = config_json(spec);
  j["delta_ev"] = c.delta;
  j["omega0_ev"] = frame.omega_0;
  j["unitarity_residual"] = frame.unitarity_residual;
  j["shift_residual"] = frame.shift_residual;
  out.write(j.dump(2) + "\n", "polaron");
  return kExitOk;
}

int run_relax(const std::string& config_path, double t_max, int steps,
              double temp, double eta, int initial_k,
              const std::string& format, const OutputTarget& out,
              const std::string& summary_path) {
  const auto spec = load_spec(config_path);
  const auto grid = excivib::build_grid(spec.lattice);
  const auto c = excivib::compute_couplings(spec);
  const auto band = excivib::exciton_dispersion(grid, spec.atom.omega_a, c.j);
  if (eta <= 0.0) eta = excivib::default_eta(band);
  const int n = static_cast<int>(grid.modes.size());
  if (initial_k < 0 || initial_k >= n) {
    throw excivib::ValidationError("--initial-k outside the momentum grid");
  }
  const auto rates = excivib::build_rate_matrix(band, c, spec.vib, eta, temp);

  Eigen::VectorXd p0 = Eigen::VectorXd::Zero(n);
  p0[initial_k] = 1.0;
  const auto traj = excivib::evolve_populations(rates, p0, t_max, steps);
  const auto energy = excivib::mean_energy_series(traj, band);
  const auto report = excivib::heating_report(traj, band, spec.vib.omega_g,
                                              spec.vib.omega_e);

  Table table;
  table.columns = {"t", "mean_energy_ev"};
  for (int k = 0; k < n; ++k) table.columns.push_back("P_k" + std::to_string(k));
  table.extra_config = {{"relax.eta_ev", format_sci(eta)},
                        {"relax.temp_ev", format_sci(temp)}};
  for (std::size_t s = 0; s < traj.times.size(); ++s) {
    std::vector<std::string> row = {format_sci(traj.times[s]),
                                    format_sci(energy[s])};
    for (int k = 0; k < n; ++k) row.push_back(format_sci(traj.populations(s, k)));
    table.rows.push_back(std::move(row));
  }
  out.write(table.render(spec, format), "relax");

  json summary;
  summary["config"] = config_json(spec);
  summary["eta_ev"] = eta;
  summary["temp_ev"] = temp;
  summary["initial_energy_ev"] = report.initial_energy;
  summary["final_energy_ev"] = report.final_energy;
  summary["emitted_g"] = report.emitted_g;
  summary["emitted_e"] = report.emitted_e;
  summary["absorbed_g"] = report.absorbed_g;
  summary["absorbed_e"] = report.absorbed_e;
  summary["vibration_energy_ev"] = report.vibration_energy;
  summary["closure_residual_ev"] = report.closure_residual;
  summary["transitions"] = report.transitions;
  const std::string summary_body = summary.dump(2) + "\n";
  if (!summary_path.empty()) {
    std::ofstream sout(summary_path, std::ios::binary);
    if (!sout)
      throw excivib::ValidationError("cannot write '" + summary_path + "'");
    sout << summary_body;
  } else if (!out.path.empty()) {
    std::cout << summary_body;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"1D optical-lattice exciton-vibration model toolkit"};
  app.require_subcommand(1);

  std::string config_path, output_path, meta_path, format = "csv";
  std::string terms = "ex,vib,onsite,transfer";
  std::string summary_path;
  double from_deg = 0.0, to_deg = 90.0;
  int steps = 181;
  int eigs = 4;
  double t = 1.0;
  int evolve_steps = 100;
  int initial_site = 0;
  double t_max = 1.0;
  int relax_steps = 100;
  double temp = 0.0;
  double eta = 0.0;
  int initial_k = 0;

  const auto add_common = [&](CLI::App* cmd, bool with_format) {
    cmd->add_option("--config", config_path, "flat key=value parameter file")
        ->required();
    cmd->add_option("--output", output_path, "artifact path (default stdout)");
    cmd->add_option("--meta", meta_path, "sidecar run-metadata path");
    if (with_format) {
      cmd->add_option("--format", format, "csv|json")
          ->check(CLI::IsMember({"csv", "json"}));
    }
  };

  auto* cmd_couplings =
      app.add_subcommand("couplings", "coupling constants as JSON");
  add_common(cmd_couplings, false);

  auto* cmd_sweep = app.add_subcommand(
      "sweep-theta", "J and F versus dipole angle (the angle-sweep dataset)");
  add_common(cmd_sweep, true);
  cmd_sweep->add_option("--from", from_deg, "start angle, degrees");
  cmd_sweep->add_option("--to", to_deg, "end angle, degrees");
  cmd_sweep->add_option("--steps", steps, "number of samples");

  auto* cmd_band = app.add_subcommand("band", "exciton dispersion");
  add_common(cmd_band, true);

  auto* cmd_rates =
      app.add_subcommand("rates", "golden-rule scattering rates per mode");
  add_common(cmd_rates, true);
  cmd_rates->add_option("--eta-ev", eta, "broadening (default: level spacing/10)");
  cmd_rates->add_option("--temp-ev", temp, "vibration temperature");

  auto* cmd_ed = app.add_subcommand("ed", "exact diagonalization spectrum");
  add_common(cmd_ed, false);
  cmd_ed->add_option("--terms", terms, "subset of ex,vib,onsite,transfer");
  cmd_ed->add_option("--eigs", eigs, "number of lowest eigenvalues");

  auto* cmd_evolve =
      app.add_subcommand("evolve", "time evolution of an initial excitation");
  add_common(cmd_evolve, true);
  cmd_evolve->add_option("--t", t, "total time, hbar/eV");
  cmd_evolve->add_option("--steps", evolve_steps, "output steps");
  cmd_evolve->add_option("--initial", initial_site, "initially excited site");

  auto* cmd_polaron =
      app.add_subcommand("polaron", "canonical transformation report");
  add_common(cmd_polaron, false);

  auto* cmd_relax =
      app.add_subcommand("relax", "exciton population kinetics over the band");
  add_common(cmd_relax, true);
  cmd_relax->add_option("--t-max", t_max, "total time, hbar/eV");
  cmd_relax->add_option("--steps", relax_steps, "output steps");
  cmd_relax->add_option("--temp-ev", temp, "vibration temperature");
  cmd_relax->add_option("--eta-ev", eta, "broadening (default: level spacing/10)");
  cmd_relax->add_option("--initial-k", initial_k, "initial momentum mode index");
  cmd_relax->add_option("--summary", summary_path, "heating summary JSON path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints the message / help text
    return code == 0 ? 0 : 1;     // help and version are not errors
  }

  const OutputTarget out{output_path, meta_path};
  try {
    if (cmd_couplings->parsed()) return run_couplings(config_path, out);
    if (cmd_sweep->parsed())
      return run_sweep_theta(config_path, from_deg, to_deg, steps, format, out);
    if (cmd_band->parsed()) return run_band(config_path, format, out);
    if (cmd_rates->parsed())
      return run_rates(config_path, eta, temp, format, out);
    if (cmd_ed->parsed()) return run_ed(config_path, terms, eigs, out);
    if (cmd_evolve->parsed())
      return run_evolve(config_path, t, evolve_steps, initial_site, format, out);
    if (cmd_polaron->parsed()) return run_polaron(config_path, out);
    if (cmd_relax->parsed())
      return run_relax(config_path, t_max, relax_steps, temp, eta, initial_k,
                       format, out, summary_path);
  } catch (const excivib::ResourceError& e) {
    std::cerr << "error: resource: " << e.what() << "\n";
    return kExitResource;
  } catch (const excivib::NumericalError& e) {
    std::cerr << "error: numerical: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const excivib::ValidationError& e) {
    std::cerr << "error: config: " << e.what() << "\n";
    return kExitConfig;
  } catch (const excivib::DomainError& e) {
    std::cerr << "error: config: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitOk;
}
