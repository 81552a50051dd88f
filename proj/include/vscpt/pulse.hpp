#pragma once

#include <string>
#include <vector>

#include "vscpt/constants.hpp"
#include "vscpt/domain.hpp"

namespace vscpt {

/// Space-time grid for the pulse solver. Time steps follow from
/// c_num dt = dz with c_num = speed_scale * c.
///
/// The medium's transit time a/c (33 ps for 1 cm) is many orders of
/// magnitude below the microsecond pulse and dephasing scales, so the
/// envelopes follow the medium quasi-statically. speed_scale < 1 runs
/// the same equations with a reduced propagation speed, which keeps the
/// step count tractable while a / c_num stays small against the pulse
/// duration; see auto_pulse_grid().
struct PulseGrid {
  double zmin = 0.0;  // < 0
  double zmax = 0.0;  // > a
  std::size_t nz = 0;
  double tmax = 0.0;
  double speed_scale = 1.0;
  std::size_t snapshots = 200;  // stored time slices of the full field
};

struct PulseOptions {
  /// Incident pulse centre reaches z = 0 at lead_fwhm * FWHM after pump
  /// switch-off (t = 0).
  double lead_fwhm = 4.0;
  /// Hold g(t) = 1, as for the ideal dark state. Implied by sigma_p == 0.
  bool freeze_dephasing = false;
};

struct PulseTrace {
  std::vector<double> t;
  std::vector<double> incident;     // |E1(zmin)|^2 / E0^2
  std::vector<double> reflected;    // |E2(zmin)|^2 / E0^2
  std::vector<double> transmitted;  // |E1(zmax)|^2 / E0^2
};

struct PulseRun {
  EnvelopePair envelopes;  // snapshots on tgrid
  PulseTrace trace;
  double efficiency = 0.0;  // peak reflected / peak incident intensity
  double peak_incident = 0.0;
  double peak_reflected = 0.0;
  double peak_transmitted = 0.0;
  double pulse_fwhm = 0.0;  // intensity FWHM, s
  double cfl = 0.0;         // c_num dt / dz
  double dz = 0.0;
  double dt = 0.0;
  std::size_t steps = 0;
  cplx n0;
  bool exit_incomplete = false;     // tmax too short for the pulse to leave
  bool below_validity_window = false;  // FWHM < 5 / gamma
  std::vector<std::string> warnings;
};

/// Intensity FWHM of a Gaussian pulse whose spectral amplitude has
/// standard deviation sigma_omega, and the inverse.
double fwhm_from_sigma_omega(double sigma_omega);
double sigma_omega_from_fwhm(double fwhm);

/// Grid hugging the medium: cells_in_medium cells across [0, a], two
/// vacuum cells on either side, reduced propagation speed so that the
/// transit time is transit_fraction of the pulse FWHM, and tmax long
/// enough for the pulse to pass.
PulseGrid auto_pulse_grid(const GasSample& sample, const ProbeConfig& probe,
                          std::size_t cells_in_medium,
                          const PulseOptions& options = {},
                          double transit_fraction = 1e-3);

/// Integrates (1/c d_t + d_z) E1 = i n0 (g E2 - E1),
///            (1/c d_t - d_z) E2 = i n0 (g E1 - E2)
/// inside [0, a] (free propagation outside) by exact advection along the
/// characteristics with trapezoidal source terms. The Gaussian pulse
/// (spectral width probe.sigma_omega) enters from the left; E2 = 0 at the
/// right boundary.
PulseRun propagate_pulse(const AtomSpecies& species, const GasSample& sample,
                         const ProbeConfig& probe, const PulseGrid& grid,
                         const PulseOptions& options = {});

struct DephasingSample {
  double t;
  double g;
};

/// n samples of g(t) on [0, tmax].
std::vector<DephasingSample> dephasing_curve(const AtomSpecies& species,
                                             double tmax, std::size_t n);

}  // namespace vscpt
