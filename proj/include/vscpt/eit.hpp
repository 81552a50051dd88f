#pragma once

#include <span>
#include <vector>

#include "vscpt/constants.hpp"
#include "vscpt/domain.hpp"

namespace vscpt {

/// Gaussian signal pulse centred on the pump frequency with the pump on.
struct EitPulseParams {
  AtomSpecies species;
  GasSample sample;
  double rabi_p;         // s^-1
  double sigma_omega;    // s^-1
  double E0;             // V / m
  double np_prime;       // d n_p / d omega at omega_p, s / m
  double pump_detuning;  // omega_p - omega0, s^-1

  double omega_p() const { return species.omega0() + pump_detuning; }
  void validate() const;
  /// Relative size of the quadratic term of n_p at |dw| = sigma_omega.
  double linearization_error() const;
  bool linearization_valid() const { return linearization_error() <= 0.1; }
};

EitPulseParams make_eit_params(const AtomSpecies& species,
                               const GasSample& sample, double rabi_p,
                               double sigma_omega, double E0 = 1.0,
                               double pump_detuning = 0.0);

/// chi_p along a grid of signal detunings (omega stores omega_s).
std::vector<ComplexResponse> dispersion_curve(
    const AtomSpecies& species, double rabi_p,
    std::span<const double> delta_s_grid, double pump_detuning = 0.0);

/// (E0/sigma) exp[4 i (omega - omega_p)/sigma] exp[-(omega - omega_p)^2 /
/// (2 sigma^2)]; the phase delays the time-domain peak to t = 4/sigma.
cplx gaussian_spectrum(const EitPulseParams& params, double omega);

struct EitFields {
  cplx E1;
  cplx E2;
};

/// Residue-theorem closed form of the frequency integrals with
/// n_p(omega) ~ n_p' (omega - omega_p). Requires 0 <= z <= a.
EitFields fields_closed_form(const EitPulseParams& params, double z, double t);

/// Envelopes anywhere on the line: closed form inside the medium, free
/// propagation of the boundary values outside (E2 = 0 beyond z = a).
EitFields fields_on_line(const EitPulseParams& params, double z, double t);

enum class NpModel { Linearized, Full };

/// Direct quadrature of the frequency integrals over omega_p +- 8 sigma
/// (trapezoidal, 4097 nodes, checked against the half-resolution sum).
EitFields fields_quadrature_oracle(const EitPulseParams& params, double z,
                                   double t, NpModel model);

struct PeakPoint {
  double z;
  double t;
};

struct EitFieldMap {
  std::vector<double> zgrid;
  std::vector<double> tgrid;
  std::vector<double> i1;  // |E1|^2 / E0^2, index it * nz + iz
  std::vector<double> i2;
  double peak_reflected_global = 0.0;
  PeakPoint peak_reflected_at{};
  double peak_reflected_z0 = 0.0;  // max over t of i2 at z = 0
  std::vector<PeakPoint> trajectory;  // incident peak time at each grid z
  double group_velocity = 0.0;   // fitted on 0.1a < z < 0.9a
  double vacuum_velocity = 0.0;  // fitted on z < 0, 0 if no such points
  bool linearization_valid = true;

  double intensity1(std::size_t it, std::size_t iz) const {
    return i1[it * zgrid.size() + iz];
  }
  double intensity2(std::size_t it, std::size_t iz) const {
    return i2[it * zgrid.size() + iz];
  }
};

/// Tabulates the closed form (fields_on_line) and extracts peaks and the
/// group velocity of the incident pulse.
EitFieldMap intensity_map(const EitPulseParams& params,
                          std::span<const double> zgrid,
                          std::span<const double> tgrid);

/// Same tabulation from the frequency quadrature (z restricted to [0, a]).
/// Peaks are taken from the grid; the trajectory/velocity fields are left
/// empty.
EitFieldMap intensity_map_quadrature(const EitPulseParams& params,
                                     std::span<const double> zgrid,
                                     std::span<const double> tgrid,
                                     NpModel model);

}  // namespace vscpt
