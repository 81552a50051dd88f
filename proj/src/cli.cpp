#include "vscpt/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <iostream>
#include <sstream>
#include <utility>

#include "vscpt/backscatter.hpp"
#include "vscpt/domain.hpp"
#include "vscpt/eit.hpp"
#include "vscpt/error.hpp"
#include "vscpt/pulse.hpp"
#include "vscpt/quantum.hpp"
#include "vscpt/susceptibility.hpp"

namespace vscpt::cli {

namespace fs = std::filesystem;

std::string command_name(Command c) {
  switch (c) {
    case Command::Backscatter: return "backscatter";
    case Command::Dephasing: return "dephasing";
    case Command::Pulse: return "pulse";
    case Command::Dispersion: return "dispersion";
    case Command::EitMap: return "eit-map";
    case Command::Quantum: return "quantum";
  }
  return "?";
}

namespace {

Command parse_command(const std::string& s) {
  for (Command c : {Command::Backscatter, Command::Dephasing, Command::Pulse,
                    Command::Dispersion, Command::EitMap, Command::Quantum}) {
    if (command_name(c) == s) return c;
  }
  throw InvalidArgument("command: unknown command '" + s +
                        "' (backscatter, dephasing, pulse, dispersion, "
                        "eit-map, quantum)");
}

std::string default_preset(Command c) {
  switch (c) {
    case Command::Backscatter: return "fig3";
    case Command::Dephasing: return "fig4";
    case Command::Pulse: return "rb-pulse";
    case Command::Dispersion: return "fig5";
    case Command::EitMap: return "fig6";
    case Command::Quantum: return "quantum-rb";
  }
  return "";
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void field(bool ok, const std::string& name, const std::string& what) {
  if (!ok) throw InvalidArgument(name + ": " + what);
}

void validate(const RunConfig& c) {
  field(!c.species.empty(), "species", "at least one species required");
  for (const auto& s : c.species) parse_species_name(s);
  if (c.command != Command::Dephasing) {
    field(c.species.size() == 1, "species", "exactly one species expected");
  }
  field(std::isfinite(c.density) && c.density > 0, "density", "must be > 0");
  field(std::isfinite(c.length) && c.length > 0, "length", "must be > 0");
  field(std::isfinite(c.delta_s), "delta-s", "must be finite");
  field(!c.delta_k || std::isfinite(*c.delta_k), "delta-k", "must be finite");
  field(!c.sigma_p || *c.sigma_p >= 0, "sigma-p", "must be >= 0");
  field(c.E0 > 0, "e0", "must be > 0");
  field(c.solver == "exact" || c.solver == "linearized" || c.solver == "oracle",
        "solver", "expected exact, linearized or oracle");
  field(c.nz >= 2, "nz", "must be >= 2");
  field(c.tmax > 0, "tmax", "must be > 0");
  field(c.samples >= 2, "samples", "must be >= 2");
  field(c.fwhm > 0, "fwhm", "must be > 0");
  field(c.lead_fwhm > 0, "lead-fwhm", "must be > 0");
  field(c.cells >= 4, "cells", "must be >= 4");
  field(c.transit_fraction > 0, "transit-fraction", "must be > 0");
  field(c.snapshots >= 2, "snapshots", "must be >= 2");
  field(c.rabi_p >= 0, "rabi-p", "must be >= 0");
  if (c.command == Command::EitMap || (c.command == Command::Quantum && c.pump_on)) {
    field(c.rabi_p > 0, "rabi-p", "must be > 0 with the pump on");
  }
  field(c.delta_s_max > c.delta_s_min, "delta-s-max", "must exceed delta-s-min");
  field(c.sigma_omega > 0, "sigma-omega", "must be > 0");
  field(c.zmin < c.length, "zmin", "must be < length");
  field(!c.tmax_map || *c.tmax_map > c.tmin, "map-tmax", "must exceed tmin");
  field(c.nt >= 2, "nt", "must be >= 2");
  field(c.model == "closed" || c.model == "linearized-quadrature" ||
            c.model == "full-quadrature",
        "model", "expected closed, linearized-quadrature or full-quadrature");
  field(!c.time || *c.time >= 0, "time", "must be >= 0");
  field(c.max_photons >= 1 && c.max_photons <= 12, "max-photons",
        "must be in [1, 12]");
}

// ---- output -------------------------------------------------------------

std::string num(double x) { return fmt::format("{:.16e}", x); }

void write_atomic(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw SolverError("cannot write " + tmp.string());
    out << content;
    if (!out) throw SolverError("cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

class Csv {
 public:
  explicit Csv(std::vector<std::string> header) {
    line(header);
  }
  void row(std::initializer_list<double> values) {
    std::string s;
    for (double v : values) {
      if (!s.empty()) s += ',';
      s += num(v);
    }
    buf_ += s;
    buf_ += '\n';
  }
  void line(const std::vector<std::string>& cells) {
    std::string s;
    for (const auto& c : cells) {
      if (!s.empty()) s += ',';
      s += c;
    }
    buf_ += s;
    buf_ += '\n';
  }
  const std::string& str() const { return buf_; }

 private:
  std::string buf_;
};

class Summary {
 public:
  void add(const std::string& key, const std::string& value) {
    buf_ += key + "=" + value + "\n";
  }
  void add(const std::string& key, double value) { add(key, num(value)); }
  void add(const std::string& key, cplx value) {
    add(key + "_re", value.real());
    add(key + "_im", value.imag());
  }
  const std::string& str() const { return buf_; }

 private:
  std::string buf_;
};

AtomSpecies species_of(const RunConfig& c) {
  return preset_species(parse_species_name(c.species.front()));
}

GasSample sample_of(const RunConfig& c, const AtomSpecies& sp) {
  GasSample s = GasSample::with_default_width(sp, c.density, c.length);
  if (c.sigma_p) s.sigma_p = *c.sigma_p;
  s.validate();
  return s;
}

void common_summary(Summary& s, const RunConfig& c) {
  s.add("command", command_name(c.command));
  s.add("preset", c.preset);
  std::string sp;
  for (const auto& x : c.species) sp += (sp.empty() ? "" : ",") + x;
  s.add("species", sp);
}

void sample_summary(Summary& s, const GasSample& g) {
  s.add("density_m3", g.density);
  s.add("length_m", g.length);
  s.add("sigma_p_kgms", g.sigma_p);
}

// ---- commands -----------------------------------------------------------

void run_backscatter(const RunConfig& c, Summary& s) {
  const AtomSpecies sp = species_of(c);
  const GasSample sample = sample_of(c, sp);
  const double dk = c.delta_k.value_or(c.delta_s / phys::c);
  const ProbeConfig probe = ProbeConfig::cw(sp, c.delta_s, dk, c.E0);
  const CoupledModeProblem problem = make_problem(sp, sample, probe);
  const auto zgrid = default_zgrid(sample.length, c.nz);
  BvpSolution sol = c.solver == "linearized" ? solve_linearized(problem, zgrid)
                    : c.solver == "oracle"   ? solve_numeric_oracle(problem, zgrid)
                                             : solve_exact(problem, zgrid);
  const BvpSolution lin = solve_linearized(problem, zgrid);

  Csv csv({"z_m", "I1_over_I0", "I2_over_I0", "E1_re_V_per_m", "E1_im_V_per_m",
           "E2_re_V_per_m", "E2_im_V_per_m"});
  const auto& env = sol.envelopes;
  for (std::size_t i = 0; i < env.zgrid.size(); ++i) {
    csv.row({env.zgrid[i], std::norm(env.e1[i] / c.E0), std::norm(env.e2[i] / c.E0),
             env.e1[i].real(), env.e1[i].imag(), env.e2[i].real(), env.e2[i].imag()});
  }
  write_atomic(c.output_dir / "backscatter.csv", csv.str());

  sample_summary(s, sample);
  s.add("delta_s_per_s", c.delta_s);
  s.add("delta_k_per_m", dk);
  s.add("E0_V_per_m", c.E0);
  s.add("nz", std::to_string(c.nz));
  s.add("solver", c.solver);
  s.add("n0_per_m", problem.n0);
  s.add("delta_per_m", sol.delta);
  s.add("abs_a_delta", sol.abs_a_delta);
  s.add("reflectivity", sol.reflectivity);
  s.add("transmissivity", sol.transmissivity);
  s.add("reflectivity_linearized", lin.reflectivity);
  s.add("svea_ratio", sol.svea_ratio);
}

void run_dephasing(const RunConfig& c, Summary& s) {
  std::vector<AtomSpecies> list;
  std::vector<std::string> header{"t_s"};
  for (const auto& name : c.species) {
    list.push_back(preset_species(parse_species_name(name)));
    header.push_back("g_" + list.back().name());
  }
  Csv csv(header);
  const auto ts = linspace(0.0, c.tmax, c.samples);
  for (double t : ts) {
    std::string line = num(t);
    for (const auto& sp : list) line += "," + num(dephasing_factor(sp, t));
    csv.line({line});
  }
  write_atomic(c.output_dir / "dephasing.csv", csv.str());
  s.add("tmax_s", c.tmax);
  s.add("samples", std::to_string(c.samples));
  for (const auto& sp : list) {
    s.add("Er_" + sp.name() + "_per_s", sp.Er());
    s.add("t_half_" + sp.name() + "_s", std::sqrt(std::log(2.0) / 2.0) / sp.Er());
    s.add("g_5us_" + sp.name(), dephasing_factor(sp, 5e-6));
  }
}

void run_pulse(const RunConfig& c, Summary& s) {
  const AtomSpecies sp = species_of(c);
  const GasSample sample = sample_of(c, sp);
  ProbeConfig probe = ProbeConfig::cw(sp, c.delta_s, 0.0, c.E0);
  probe.sigma_omega = sigma_omega_from_fwhm(c.fwhm);
  PulseOptions opts;
  opts.lead_fwhm = c.lead_fwhm;
  opts.freeze_dephasing = c.freeze_dephasing;
  PulseGrid grid = auto_pulse_grid(sample, probe, c.cells, opts, c.transit_fraction);
  grid.snapshots = c.snapshots;
  const PulseRun run = propagate_pulse(sp, sample, probe, grid, opts);

  Csv trace({"t_s", "incident_I_over_I0", "reflected_I_over_I0",
             "transmitted_I_over_I0"});
  for (std::size_t i = 0; i < run.trace.t.size(); ++i) {
    trace.row({run.trace.t[i], run.trace.incident[i], run.trace.reflected[i],
               run.trace.transmitted[i]});
  }
  write_atomic(c.output_dir / "pulse_trace.csv", trace.str());

  Csv field({"t_s", "z_m", "I1_over_I0", "I2_over_I0"});
  const auto& env = run.envelopes;
  const std::size_t nz = env.zgrid.size();
  for (std::size_t it = 0; it < env.nt(); ++it) {
    for (std::size_t iz = 0; iz < nz; ++iz) {
      const std::size_t k = it * nz + iz;
      field.row({(*env.tgrid)[it], env.zgrid[iz], std::norm(env.e1[k] / c.E0),
                 std::norm(env.e2[k] / c.E0)});
    }
  }
  write_atomic(c.output_dir / "pulse_field.csv", field.str());

  sample_summary(s, sample);
  s.add("delta_s_per_s", c.delta_s);
  s.add("pulse_fwhm_s", run.pulse_fwhm);
  s.add("lead_fwhm", c.lead_fwhm);
  s.add("freeze_dephasing", c.freeze_dephasing || sample.sigma_p == 0.0 ? "true" : "false");
  s.add("n0_per_m", run.n0);
  s.add("cells_in_medium", std::to_string(c.cells));
  s.add("speed_scale", grid.speed_scale);
  s.add("dz_m", run.dz);
  s.add("dt_s", run.dt);
  s.add("cfl", run.cfl);
  s.add("steps", std::to_string(run.steps));
  s.add("efficiency", run.efficiency);
  s.add("peak_incident", run.peak_incident);
  s.add("peak_reflected", run.peak_reflected);
  s.add("peak_transmitted", run.peak_transmitted);
  s.add("exit_incomplete", run.exit_incomplete ? "true" : "false");
  s.add("below_validity_window", run.below_validity_window ? "true" : "false");
  for (std::size_t i = 0; i < run.warnings.size(); ++i) {
    s.add("warning_" + std::to_string(i), run.warnings[i]);
  }
}

void run_dispersion(const RunConfig& c, Summary& s) {
  const AtomSpecies sp = species_of(c);
  const auto grid = linspace(c.delta_s_min, c.delta_s_max, c.samples);
  const auto curve = dispersion_curve(sp, c.rabi_p, grid, c.pump_detuning);
  Csv csv({"delta_s_per_s", "omega_s_per_s", "chi_p_re_s", "chi_p_im_s"});
  for (std::size_t i = 0; i < curve.size(); ++i) {
    csv.row({grid[i], curve[i].omega, curve[i].value.real(), curve[i].value.imag()});
  }
  write_atomic(c.output_dir / "dispersion.csv", csv.str());

  s.add("rabi_p_per_s", c.rabi_p);
  s.add("pump_detuning_per_s", c.pump_detuning);
  s.add("chi_p_at_pump_s", chi_p(sp, c.rabi_p, c.pump_detuning, 0.0));
  s.add("chi_p_first_s", curve.front().value);
  s.add("chi_p_last_s", curve.back().value);
  std::string extrema;
  for (std::size_t i = 1; i + 1 < curve.size(); ++i) {
    const double m = std::abs(curve[i].value.imag());
    if (m > std::abs(curve[i - 1].value.imag()) &&
        m >= std::abs(curve[i + 1].value.imag())) {
      extrema += (extrema.empty() ? "" : ";") + num(grid[i]);
    }
  }
  s.add("abs_im_chi_maxima_delta_s", extrema);
}

void run_eit_map(const RunConfig& c, Summary& s) {
  const AtomSpecies sp = species_of(c);
  const GasSample sample = sample_of(c, sp);
  const EitPulseParams params =
      make_eit_params(sp, sample, c.rabi_p, c.sigma_omega, c.E0, c.pump_detuning);
  const double tmax = c.tmax_map.value_or(12.0 / c.sigma_omega);
  const auto tgrid = linspace(c.tmin, tmax, c.nt);
  const double zlo = c.model == "closed" ? c.zmin : std::max(0.0, c.zmin);
  const auto zgrid = linspace(zlo, sample.length, c.nz);

  EitFieldMap map;
  if (c.model == "closed") {
    map = intensity_map(params, zgrid, tgrid);
  } else {
    map = intensity_map_quadrature(params, zgrid, tgrid,
                                   c.model == "full-quadrature" ? NpModel::Full
                                                                : NpModel::Linearized);
  }
  Csv csv({"t_s", "z_m", "I1_over_I0", "I2_over_I0"});
  for (std::size_t it = 0; it < tgrid.size(); ++it) {
    for (std::size_t iz = 0; iz < zgrid.size(); ++iz) {
      csv.row({tgrid[it], zgrid[iz], map.intensity1(it, iz), map.intensity2(it, iz)});
    }
  }
  write_atomic(c.output_dir / "eit_map.csv", csv.str());

  // Full-n_p reference peak on a coarse z set inside the medium.
  const auto zref = linspace(0.0, sample.length, 11);
  const auto full = intensity_map_quadrature(params, zref, tgrid, NpModel::Full);

  sample_summary(s, sample);
  s.add("rabi_p_per_s", c.rabi_p);
  s.add("sigma_omega_per_s", c.sigma_omega);
  s.add("pump_detuning_per_s", c.pump_detuning);
  s.add("np_prime_s_per_m", params.np_prime);
  s.add("model", c.model);
  s.add("tmin_s", c.tmin);
  s.add("tmax_s", tmax);
  s.add("peak_reflected", map.peak_reflected_global);
  s.add("peak_reflected_z_m", map.peak_reflected_at.z);
  s.add("peak_reflected_t_s", map.peak_reflected_at.t);
  s.add("peak_reflected_z0", map.peak_reflected_z0);
  s.add("peak_reflected_full_np", full.peak_reflected_global);
  s.add("linearization_error", params.linearization_error());
  s.add("linearization_valid", params.linearization_valid() ? "true" : "false");
  if (c.model == "closed") {
    s.add("group_velocity_m_per_s", map.group_velocity);
    s.add("group_velocity_over_c", map.group_velocity / phys::c);
    s.add("vacuum_velocity_m_per_s", map.vacuum_velocity);
  }
}

void run_quantum(const RunConfig& c, Summary& s) {
  const AtomSpecies sp = species_of(c);
  const GasSample sample = sample_of(c, sp);
  ProbeConfig probe;
  if (c.pump_on) {
    probe.omega_p = sp.omega0() + c.pump_detuning;
    probe.omega_s = sp.omega0() + c.delta_s;
    probe.delta_s = probe.omega_s - sp.omega0();
    probe.delta_k = (probe.omega_s - probe.omega_p) / phys::c;
    probe.E0 = c.E0;
    probe.rabi_p = c.rabi_p;
    probe.validate(sp);
  } else {
    probe = ProbeConfig::cw(sp, c.delta_s, c.delta_k.value_or(c.delta_s / phys::c), c.E0);
  }
  const ModeMixer probe_mixer = mixer(sp, sample, probe, 0.0, c.pump_on);
  double t = 0.0;
  if (c.time) {
    t = *c.time;
  } else {
    if (probe_mixer.beta.real() == 0.0) {
      throw InvalidArgument("time: Re beta = 0, pass --time explicitly");
    }
    t = pi / (4.0 * std::abs(probe_mixer.beta.real()));
  }
  const ModeMixer mx = mixer(sp, sample, probe, t, c.pump_on);

  Csv csv({"input", "n1", "n2", "amp_re", "amp_im", "probability"});
  const std::vector<std::pair<int, int>> inputs{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}};
  TwoModeState single(1);
  for (auto [i1, i2] : inputs) {
    if (i1 + i2 > c.max_photons) continue;
    const auto out = evolve_state(TwoModeState::fock(i1, i2, c.max_photons), mx);
    if (i1 == 1 && i2 == 0) {
      single.set_amplitude(1, 0, out.amplitude(1, 0));
      single.set_amplitude(0, 1, out.amplitude(0, 1));
    }
    const std::string label = fmt::format("|{}.{}>", i1, i2);
    for (int total = 0; total <= c.max_photons; ++total) {
      for (int n2 = 0; n2 <= total; ++n2) {
        const cplx a = out.amplitude(total - n2, n2);
        if (a == cplx(0.0)) continue;
        csv.line({label, std::to_string(total - n2), std::to_string(n2),
                  num(a.real()), num(a.imag()), num(std::norm(a))});
      }
    }
  }
  write_atomic(c.output_dir / "quantum.csv", csv.str());

  sample_summary(s, sample);
  s.add("delta_s_per_s", c.delta_s);
  s.add("pump_on", c.pump_on ? "true" : "false");
  s.add("beta_per_s", mx.beta);
  s.add("time_s", t);
  s.add("beta_t", mx.beta * t);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      s.add(fmt::format("matrix_{}{}", i + 1, j + 1), mx.matrix[i][j]);
    }
  }
  s.add("norm_out_10", single.norm());
  s.add("concurrence_out_10", concurrence_single_photon(single));
}

}  // namespace

RunConfig preset_config(Command command, const std::string& preset) {
  RunConfig c;
  c.command = command;
  c.preset = preset;
  auto wrong = [&] {
    return InvalidArgument("preset: '" + preset + "' does not apply to command " +
                           command_name(command));
  };
  if (preset == "fig3") {
    if (command != Command::Backscatter && command != Command::Quantum) throw wrong();
    c.species = {"rb87"};
    c.density = 2e16;
    c.length = 0.01;
    c.delta_s = 3e6;
  } else if (preset == "fig4") {
    if (command != Command::Dephasing) throw wrong();
    c.species = {"rb87", "he4"};
    c.tmax = 10e-6;
    c.samples = 1001;
  } else if (preset == "fig5") {
    if (command != Command::Dispersion) throw wrong();
    c.species = {"rb87"};
    c.rabi_p = 1e7;
    c.pump_detuning = 0.0;
    c.delta_s_min = -6e7;
    c.delta_s_max = 6e7;
    c.samples = 2001;
  } else if (preset == "fig6") {
    if (command != Command::EitMap) throw wrong();
    c.species = {"rb87"};
    c.density = 2e16;
    c.length = 0.1;
    c.rabi_p = 1e7;
    c.sigma_omega = 5e5;
    c.zmin = -0.02;
    c.nz = 121;
    c.nt = 1201;
  } else if (preset == "eit-strong") {
    if (command != Command::EitMap) throw wrong();
    c.species = {"rb87"};
    c.density = 1e17;
    c.length = 0.01;
    c.rabi_p = 5e6;
    c.sigma_omega = 1e6;
    c.zmin = -0.002;
    c.nz = 121;
    c.nt = 1201;
  } else if (preset == "rb-pulse" || preset == "rb-pulse-ideal") {
    if (command != Command::Pulse) throw wrong();
    c.species = {"rb87"};
    c.density = 2e16;
    c.length = 0.01;
    c.delta_s = 3e6;
    c.fwhm = 4e-6;
    c.cells = 100;
    c.freeze_dephasing = preset == "rb-pulse-ideal";
  } else if (preset == "he-pulse") {
    if (command != Command::Pulse) throw wrong();
    c.species = {"he4"};
    c.density = 2e16;
    c.length = 0.01;
    c.delta_s = 3e6;
    c.fwhm = 2e-6;
    c.cells = 200;
    c.transit_fraction = 1e-2;
  } else if (preset == "quantum-rb") {
    if (command != Command::Quantum) throw wrong();
    c.species = {"rb87"};
    c.density = 2e16;
    c.length = 0.01;
    c.delta_s = 3e6;
    c.pump_on = false;
  } else {
    throw InvalidArgument("preset: unknown preset '" + preset + "'");
  }
  return c;
}

RunConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Optical response of a VSCPT-prepared atomic gas", "vscpt"};
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.set_config("--config", "", "INI/TOML file with option=value lines");

  std::string command;
  std::optional<std::string> preset, species, solver, model, out;
  std::optional<double> density, length, delta_s, delta_k, sigma_p, E0, tmax,
      fwhm, lead_fwhm, transit_fraction, rabi_p, pump_detuning, ds_min, ds_max,
      sigma_omega, zmin, tmin, map_tmax, time;
  std::optional<std::size_t> nz, samples, cells, snapshots, nt;
  std::optional<int> max_photons;
  std::optional<bool> freeze, pump_on;

  app.add_option("command", command,
                 "backscatter | dephasing | pulse | dispersion | eit-map | quantum")
      ->required();
  app.add_option("--preset", preset, "fig3, fig4, fig5, fig6, eit-strong, "
                                     "rb-pulse, rb-pulse-ideal, he-pulse, quantum-rb");
  app.add_option("--out", out, "output directory");
  app.add_option("--species", species, "rb87 | he4 (comma list for dephasing)");
  app.add_option("--density", density, "mean atomic density, m^-3");
  app.add_option("--length", length, "slab length a, m");
  app.add_option("--delta-s", delta_s, "signal detuning omega_s - omega0, s^-1");
  app.add_option("--delta-k", delta_k, "k_s - k_p, m^-1 (default delta_s / c)");
  app.add_option("--sigma-p", sigma_p, "momentum width, kg m/s (default hbar kp/2)");
  app.add_option("--e0", E0, "incident amplitude, V/m");
  app.add_option("--solver", solver, "exact | linearized | oracle");
  app.add_option("--nz", nz, "number of z samples");
  app.add_option("--tmax", tmax, "dephasing curve end time, s");
  app.add_option("--samples", samples, "curve samples");
  app.add_option("--fwhm", fwhm, "pulse intensity FWHM, s");
  app.add_option("--lead-fwhm", lead_fwhm, "pulse arrival at z=0 in units of FWHM");
  app.add_option("--cells", cells, "pulse solver cells across the medium");
  app.add_option("--transit-fraction", transit_fraction,
                 "numerical transit time / FWHM (propagation speed scaling)");
  app.add_option("--freeze-dephasing", freeze, "hold g(t) = 1");
  app.add_option("--snapshots", snapshots, "stored field time slices");
  app.add_option("--rabi-p", rabi_p, "pump Rabi frequency, s^-1");
  app.add_option("--pump-detuning", pump_detuning, "omega_p - omega0, s^-1");
  app.add_option("--delta-s-min", ds_min, "dispersion grid start, s^-1");
  app.add_option("--delta-s-max", ds_max, "dispersion grid end, s^-1");
  app.add_option("--sigma-omega", sigma_omega, "pulse spectral width, s^-1");
  app.add_option("--zmin", zmin, "map start position, m (may be < 0)");
  app.add_option("--tmin", tmin, "map start time, s");
  app.add_option("--map-tmax", map_tmax, "map end time, s (default 12/sigma_omega)");
  app.add_option("--nt", nt, "map time samples");
  app.add_option("--model", model, "closed | linearized-quadrature | full-quadrature");
  app.add_option("--pump-on", pump_on, "quantum: use n_p instead of n0");
  app.add_option("--time", time, "quantum: interaction time, s");
  app.add_option("--max-photons", max_photons, "quantum: Fock truncation");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();  // argv[0]
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    throw;
  }

  const Command cmd = parse_command(command);
  RunConfig c = preset_config(cmd, preset.value_or(default_preset(cmd)));
  if (species) c.species = split_list(*species);
  if (density) c.density = *density;
  if (length) c.length = *length;
  if (delta_s) c.delta_s = *delta_s;
  if (delta_k) c.delta_k = *delta_k;
  if (sigma_p) c.sigma_p = *sigma_p;
  if (E0) c.E0 = *E0;
  if (solver) c.solver = *solver;
  if (nz) c.nz = *nz;
  if (tmax) c.tmax = *tmax;
  if (samples) c.samples = *samples;
  if (fwhm) c.fwhm = *fwhm;
  if (lead_fwhm) c.lead_fwhm = *lead_fwhm;
  if (cells) c.cells = *cells;
  if (transit_fraction) c.transit_fraction = *transit_fraction;
  if (freeze) c.freeze_dephasing = *freeze;
  if (snapshots) c.snapshots = *snapshots;
  if (rabi_p) c.rabi_p = *rabi_p;
  if (pump_detuning) c.pump_detuning = *pump_detuning;
  if (ds_min) c.delta_s_min = *ds_min;
  if (ds_max) c.delta_s_max = *ds_max;
  if (sigma_omega) c.sigma_omega = *sigma_omega;
  if (zmin) c.zmin = *zmin;
  if (tmin) c.tmin = *tmin;
  if (map_tmax) c.tmax_map = *map_tmax;
  if (nt) c.nt = *nt;
  if (model) c.model = *model;
  if (pump_on) c.pump_on = *pump_on;
  if (time) c.time = *time;
  if (max_photons) c.max_photons = *max_photons;
  if (out) c.output_dir = *out;
  validate(c);
  return c;
}

void run(const RunConfig& c) {
  validate(c);
  fs::create_directories(c.output_dir);
  Summary s;
  common_summary(s, c);
  switch (c.command) {
    case Command::Backscatter: run_backscatter(c, s); break;
    case Command::Dephasing: run_dephasing(c, s); break;
    case Command::Pulse: run_pulse(c, s); break;
    case Command::Dispersion: run_dispersion(c, s); break;
    case Command::EitMap: run_eit_map(c, s); break;
    case Command::Quantum: run_quantum(c, s); break;
  }
  write_atomic(c.output_dir / "summary.txt", s.str());
}

int main_entry(const std::vector<std::string>& args) {
  RunConfig cfg;
  try {
    cfg = parse_args(args);
  } catch (const CLI::CallForHelp&) {
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "vscpt: invalid configuration: " << e.what() << "\n";
    return 2;
  } catch (const InvalidArgument& e) {
    std::cerr << "vscpt: invalid configuration: " << e.what() << "\n";
    return 2;
  }
  try {
    run(cfg);
  } catch (const InvalidArgument& e) {
    std::cerr << "vscpt: invalid configuration: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "vscpt: solver error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace vscpt::cli
