#include "vscpt/domain.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "vscpt/error.hpp"

namespace vscpt {

AtomSpecies::AtomSpecies(std::string name, double mass, double gamma,
                         double dipole, double omega0, double kp)
    : name_(std::move(name)),
      mass_(mass),
      gamma_(gamma),
      dipole_(dipole),
      omega0_(omega0),
      kp_(kp),
      Er_(phys::hbar * kp * kp / (2.0 * mass)) {
  require(mass > 0 && gamma > 0 && dipole > 0 && omega0 > 0 && kp > 0,
          "AtomSpecies: all constants must be strictly positive");
}

SpeciesName parse_species_name(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  if (s == "rb87" || s == "87rb") return SpeciesName::Rb87;
  if (s == "he4" || s == "4he") return SpeciesName::He4;
  throw InvalidArgument("unknown species '" + std::string(name) +
                        "' (expected rb87 or he4)");
}

namespace {

// kp is chosen so that hbar kp^2 / 2m reproduces the quoted recoil frequency.
double kp_from_recoil(double mass, double Er) {
  return std::sqrt(2.0 * mass * Er / phys::hbar);
}

AtomSpecies rubidium87() {
  // D1 line, J=1 <-> J=1 sublevels: Er = 2.3e4 s^-1, gamma = 3.61e7 s^-1,
  // d = 2.99 e a0 / sqrt(12). Line wavelength 794.978851156 nm (Steck,
  // "Rubidium 87 D Line Data"); mass 86.909180527 u.
  const double mass = 86.909180527 * phys::amu;
  const double omega0 = 2.0 * pi * phys::c / 794.978851156e-9;
  const double dipole = 2.99 * phys::e * phys::a0 / std::sqrt(12.0);
  return {"Rb87", mass, 3.61e7, dipole, omega0, kp_from_recoil(mass, 2.3e4)};
}

AtomSpecies helium4() {
  // Metastable 2^3S_1 -> 2^3P_1 line at 1083.32 nm (NIST ASD). The 2^3P
  // lifetime of 97.9 ns gives gamma = 1.0216e7 s^-1. The dipole element
  // follows from the two-level relation |d|^2 = 3 pi eps0 hbar c^3 gamma /
  // omega0^3. Er = 2.7e5 s^-1; mass 4.002603254 u.
  const double mass = 4.002603254 * phys::amu;
  const double omega0 = 2.0 * pi * phys::c / 1083.32e-9;
  const double gamma = 1.0216e7;
  const double dipole =
      std::sqrt(3.0 * pi * phys::eps0 * phys::hbar * std::pow(phys::c, 3) *
                gamma / std::pow(omega0, 3));
  return {"He4", mass, gamma, dipole, omega0, kp_from_recoil(mass, 2.7e5)};
}

}  // namespace

AtomSpecies preset_species(SpeciesName name) {
  switch (name) {
    case SpeciesName::Rb87:
      return rubidium87();
    case SpeciesName::He4:
      return helium4();
  }
  throw InvalidArgument("unknown species preset");
}

void GasSample::validate() const {
  require(std::isfinite(density) && density > 0,
          "sample.density must be > 0");
  require(std::isfinite(length) && length > 0, "sample.length must be > 0");
  require(std::isfinite(sigma_p) && sigma_p >= 0,
          "sample.sigma_p must be >= 0");
}

GasSample GasSample::with_default_width(const AtomSpecies& species,
                                        double density, double length) {
  GasSample s{density, length, 0.5 * phys::hbar * species.kp()};
  s.validate();
  return s;
}

void ProbeConfig::validate(const AtomSpecies& species) const {
  require(std::isfinite(omega_s) && omega_s > 0, "probe.omega_s must be > 0");
  const double expected = omega_s - species.omega0();
  require(std::abs(delta_s - expected) <=
              1e-12 * std::max(std::abs(omega_s), std::abs(delta_s)),
          "probe.delta_s inconsistent with omega_s - omega0");
  require(std::isfinite(delta_k), "probe.delta_k must be finite");
  require(std::isfinite(E0) && E0 > 0, "probe.E0 must be > 0");
  require(std::isfinite(sigma_omega) && sigma_omega >= 0,
          "probe.sigma_omega must be >= 0");
  require(std::isfinite(rabi_p) && rabi_p >= 0, "probe.rabi_p must be >= 0");
  if (rabi_p > 0) {
    require(std::isfinite(omega_p) && omega_p > 0,
            "probe.omega_p must be > 0 with the pump on");
    const double dw = omega_s - omega_p;
    require(std::abs(delta_k * phys::c - dw) <=
                1e-12 * std::max({std::abs(dw), std::abs(delta_k * phys::c),
                                  1e-12 * omega_s}),
            "probe.delta_k * c must equal omega_s - omega_p with the pump on");
  }
}

ProbeConfig ProbeConfig::cw(const AtomSpecies& species, double delta_s,
                            double delta_k, double E0) {
  ProbeConfig p;
  p.omega_s = species.omega0() + delta_s;
  p.delta_s = p.omega_s - species.omega0();
  p.delta_k = delta_k;
  p.E0 = E0;
  p.omega_p = species.omega0();
  p.validate(species);
  return p;
}

ProbeConfig ProbeConfig::eit(const AtomSpecies& species, double rabi_p,
                             double sigma_omega, double pump_detuning,
                             double E0) {
  ProbeConfig p;
  p.omega_p = species.omega0() + pump_detuning;
  p.omega_s = p.omega_p;
  p.delta_s = p.omega_s - species.omega0();
  p.delta_k = 0.0;
  p.E0 = E0;
  p.sigma_omega = sigma_omega;
  p.rabi_p = rabi_p;
  p.validate(species);
  return p;
}

void EnvelopePair::validate() const {
  const std::size_t n = zgrid.size() * nt();
  require(e1.size() == n && e2.size() == n,
          "EnvelopePair: field sizes do not match the grid");
  require(std::is_sorted(zgrid.begin(), zgrid.end()) &&
              std::adjacent_find(zgrid.begin(), zgrid.end()) == zgrid.end(),
          "EnvelopePair: zgrid must be strictly increasing");
}

double momentum_distribution(const GasSample& sample, double p) {
  require(sample.sigma_p > 0,
          "momentum_distribution: sigma_p = 0 (ideal state) has no density");
  const double s = sample.sigma_p;
  return std::exp(-p * p / (2.0 * s * s)) / (std::sqrt(2.0 * pi) * s);
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  require(n >= 2, "linspace: need at least two points");
  std::vector<double> out(n);
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) out[i] = lo + step * static_cast<double>(i);
  out.back() = hi;
  return out;
}

}  // namespace vscpt
