#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace vscpt::cli {

enum class Command { Backscatter, Dephasing, Pulse, Dispersion, EitMap, Quantum };

/// Fully resolved parameter set of one run (preset < config file < flags).
struct RunConfig {
  Command command = Command::Backscatter;
  std::string preset;
  std::vector<std::string> species{"rb87"};

  // gas and probe
  double density = 2e16;  // m^-3
  double length = 0.01;   // m
  double delta_s = 3e6;   // s^-1
  std::optional<double> delta_k;  // m^-1, default delta_s / c
  std::optional<double> sigma_p;  // kg m/s, default hbar kp / 2
  double E0 = 1.0;

  // backscatter
  std::string solver = "exact";  // exact | linearized | oracle
  std::size_t nz = 2001;

  // dephasing curve
  double tmax = 10e-6;
  std::size_t samples = 1001;

  // pulse
  double fwhm = 4e-6;
  double lead_fwhm = 4.0;
  std::size_t cells = 100;
  double transit_fraction = 1e-3;
  bool freeze_dephasing = false;
  std::size_t snapshots = 200;

  // EIT
  double rabi_p = 1e7;
  double pump_detuning = 0.0;
  double delta_s_min = -6e7;
  double delta_s_max = 6e7;
  double sigma_omega = 5e5;
  double zmin = -0.02;
  double tmin = 0.0;
  std::optional<double> tmax_map;  // default 12 / sigma_omega
  std::size_t nt = 1201;
  std::string model = "closed";  // closed | linearized-quadrature | full-quadrature

  // quantum
  bool pump_on = false;
  std::optional<double> time;  // default pi / (4 Re beta)
  int max_photons = 4;

  std::filesystem::path output_dir = "vscpt_out";
};

std::string command_name(Command c);

/// Parses argv (including argv[0]) into a resolved config. Throws
/// InvalidArgument with a field-level message on bad input.
RunConfig parse_args(const std::vector<std::string>& args);

/// Applies a named figure preset on top of cfg's command defaults.
RunConfig preset_config(Command command, const std::string& preset);

/// Executes the run and writes CSV + summary.txt into cfg.output_dir.
void run(const RunConfig& cfg);

/// Full CLI entry: 0 success, 2 invalid configuration, 3 solver error.
int main_entry(const std::vector<std::string>& args);

}  // namespace vscpt::cli
