#pragma once

#include "vscpt/constants.hpp"
#include "vscpt/domain.hpp"

namespace vscpt {

// All response functions use the e^{-i omega t} carrier convention: with
// gamma > 0 their imaginary parts are negative, and a field travelling as
// exp(-i n z) decays.

/// chi0 = [(Er - hbar dk^2 / 2m) + i gamma/2 + delta_s]^-1, in seconds.
cplx chi0(const AtomSpecies& species, double delta_s, double delta_k);

/// omega_s rho |d|^2 / (4 c eps0 hbar): maps a susceptibility (s) onto a
/// coupling constant (m^-1). Equal to (1/2k_s) omega_s^2 rho |d|^2 /
/// (2 c^2 eps0 hbar) with k_s = omega_s / c.
double coupling_prefactor(const AtomSpecies& species, double density,
                          double omega_s);

cplx n0(const AtomSpecies& species, const GasSample& sample, double omega_s,
        double delta_s, double delta_k);

/// Susceptibility of the dark-state component with centre-of-mass momentum p.
cplx chi_p_momentum(const AtomSpecies& species, double delta_s, double p);

/// g(t) = exp(-2 Er^2 t^2).
double dephasing_factor(const AtomSpecies& species, double t);

struct DephasingContext {
  AtomSpecies species;
  GasSample sample;
  double time;  // s since pump switch-off
};

struct DephasingIntegrals {
  cplx I_alpha;
  cplx I_beta;
  cplx approx_alpha;  // chi0(dk = 0)
  cplx approx_beta;   // chi0(dk = 0) g(t)
  double error_estimate;
};

/// Momentum averages of chi(omega_s, p) over f(p), without and with the
/// dark-state phase exp(i omega_r(p) t). Adaptive Gauss-Kronrod over
/// +-8 sigma_p.
DephasingIntegrals dephasing_integrals(const DephasingContext& ctx,
                                       double delta_s);

/// EIT susceptibility with the pump on:
/// dw / [dw (Er + i gamma/2 + delta_s) - 2 |rabi_p|^2]. Exactly 0 at dw = 0.
cplx chi_p(const AtomSpecies& species, double rabi_p, double delta_s,
           double delta_omega);

/// delta_s is omega_s - omega0 and delta_omega is omega_s - omega_p.
cplx n_p(const AtomSpecies& species, const GasSample& sample, double omega_s,
         double rabi_p, double delta_omega);

/// d n_p / d omega at omega_s = omega_p: -prefactor(omega_p) / (2 rabi_p^2).
double n_p_prime(const AtomSpecies& species, const GasSample& sample,
                 double omega_p, double rabi_p);

/// Second derivative of n_p at omega_s = omega_p (from the series of chi_p).
cplx n_p_second(const AtomSpecies& species, const GasSample& sample,
                double omega_p, double rabi_p);

}  // namespace vscpt
