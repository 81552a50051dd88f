#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vscpt/constants.hpp"

namespace vscpt {

/// Constants of a J=1 <-> J=1 cooling transition. The recoil frequency
/// Er = hbar kp^2 / (2 m) is derived once at construction.
class AtomSpecies {
 public:
  AtomSpecies(std::string name, double mass, double gamma, double dipole,
              double omega0, double kp);

  const std::string& name() const { return name_; }
  double mass() const { return mass_; }
  double gamma() const { return gamma_; }
  double dipole() const { return dipole_; }
  double omega0() const { return omega0_; }
  double kp() const { return kp_; }
  double Er() const { return Er_; }

  /// Two-photon recoil shift omega_r(p) = 2 kp p / m.
  double recoil_shift(double p) const { return 2.0 * kp_ * p / mass_; }

 private:
  std::string name_;
  double mass_;
  double gamma_;
  double dipole_;
  double omega0_;
  double kp_;
  double Er_;
};

enum class SpeciesName { Rb87, He4 };

SpeciesName parse_species_name(std::string_view name);
AtomSpecies preset_species(SpeciesName name);

/// Homogeneous slab of prepared gas occupying 0 <= z <= length.
/// sigma_p == 0 encodes the ideal (zero momentum width) dark state.
struct GasSample {
  double density;  // m^-3
  double length;   // m
  double sigma_p;  // kg m / s

  void validate() const;

  /// sigma_p defaults to hbar kp / 2.
  static GasSample with_default_width(const AtomSpecies& species,
                                      double density, double length);
};

/// Weak signal field plus the pump it is referenced to.
struct ProbeConfig {
  double omega_s = 0.0;      // signal angular frequency
  double delta_s = 0.0;      // omega_s - omega0
  double delta_k = 0.0;      // k_s - k_p, m^-1
  double E0 = 1.0;           // V / m
  double sigma_omega = 0.0;  // spectral width, 0 for cw
  double omega_p = 0.0;      // pump angular frequency
  double rabi_p = 0.0;       // pump Rabi frequency, 0 when pump off

  void validate(const AtomSpecies& species) const;

  /// cw signal with the pump off; delta_k is supplied explicitly.
  static ProbeConfig cw(const AtomSpecies& species, double delta_s,
                        double delta_k, double E0 = 1.0);
  /// Pulse centred on the pump carrier, delta_k = (omega_s - omega_p)/c.
  static ProbeConfig eit(const AtomSpecies& species, double rabi_p,
                         double sigma_omega, double pump_detuning = 0.0,
                         double E0 = 1.0);
};

/// A response function value with the frequency it was evaluated at.
struct ComplexResponse {
  double omega;
  cplx value;
};

/// Complex envelopes of the forward (e1) and backward (e2) signal fields.
/// With a time grid the storage is row-major, index = it * zgrid.size() + iz.
struct EnvelopePair {
  std::vector<double> zgrid;
  std::vector<cplx> e1;
  std::vector<cplx> e2;
  std::optional<std::vector<double>> tgrid;

  std::size_t nt() const { return tgrid ? tgrid->size() : 1; }
  void validate() const;
};

/// Gaussian momentum distribution f(p) of the prepared gas.
double momentum_distribution(const GasSample& sample, double p);

/// Uniform grid of n points covering [lo, hi].
std::vector<double> linspace(double lo, double hi, std::size_t n);

}  // namespace vscpt
