#include "vscpt/susceptibility.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <string>

#include "vscpt/error.hpp"

namespace vscpt {

cplx chi0(const AtomSpecies& species, double delta_s, double delta_k) {
  const double kinetic =
      species.Er() - phys::hbar * delta_k * delta_k / (2.0 * species.mass());
  return 1.0 / cplx(kinetic + delta_s, 0.5 * species.gamma());
}

double coupling_prefactor(const AtomSpecies& species, double density,
                          double omega_s) {
  const double d = species.dipole();
  return omega_s * density * d * d / (4.0 * phys::c * phys::eps0 * phys::hbar);
}

cplx n0(const AtomSpecies& species, const GasSample& sample, double omega_s,
        double delta_s, double delta_k) {
  require(omega_s > 0, "n0: omega_s must be > 0");
  return coupling_prefactor(species, sample.density, omega_s) *
         chi0(species, delta_s, delta_k);
}

cplx chi_p_momentum(const AtomSpecies& species, double delta_s, double p) {
  return 1.0 / cplx(species.Er() + delta_s - 0.5 * species.recoil_shift(p),
                    0.5 * species.gamma());
}

double dephasing_factor(const AtomSpecies& species, double t) {
  require(t >= 0, "dephasing_factor: t must be >= 0");
  const double x = species.Er() * t;
  return std::exp(-2.0 * x * x);
}

DephasingIntegrals dephasing_integrals(const DephasingContext& ctx,
                                       double delta_s) {
  require(ctx.time >= 0, "dephasing_integrals: time must be >= 0");
  require(ctx.sample.sigma_p > 0,
          "dephasing_integrals: sigma_p must be > 0");
  const AtomSpecies& sp = ctx.species;
  const double sigma = ctx.sample.sigma_p;
  const double t = ctx.time;
  const cplx chi_ref = chi0(sp, delta_s, 0.0);
  const double tol_abs = 1e-12 * std::abs(chi_ref);

  // Integrate in the scaled variable u = p / sigma_p; the density
  // factor exp(-u^2/2)/sqrt(2 pi) then has unit normalisation.
  auto weight = [](double u) {
    return std::exp(-0.5 * u * u) / std::sqrt(2.0 * pi);
  };
  auto integrate = [&](auto&& f) {
    using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
    double err = 0.0;
    double l1 = 0.0;
    const cplx v = GK::integrate(f, -8.0, 8.0, 30, 1e-13, &err, &l1);
    if (!(err <= tol_abs)) {
      throw SolverError("dephasing_integrals: quadrature did not converge (" +
                        std::to_string(err) + " > " + std::to_string(tol_abs) +
                        ")");
    }
    return std::pair{v, err};
  };

  const auto [Ia, ea] = integrate([&](double u) -> cplx {
    return chi_p_momentum(sp, delta_s, u * sigma) * weight(u);
  });
  const auto [Ib, eb] = integrate([&](double u) -> cplx {
    const double p = u * sigma;
    return chi_p_momentum(sp, delta_s, p) * weight(u) *
           std::exp(I * (sp.recoil_shift(p) * t));
  });
  return {Ia, Ib, chi_ref, chi_ref * dephasing_factor(sp, t),
          std::max(ea, eb)};
}

cplx chi_p(const AtomSpecies& species, double rabi_p, double delta_s,
           double delta_omega) {
  require(rabi_p >= 0, "chi_p: rabi_p must be >= 0");
  if (delta_omega == 0.0) return {0.0, 0.0};
  const cplx bracket(species.Er() + delta_s, 0.5 * species.gamma());
  return delta_omega / (delta_omega * bracket - 2.0 * rabi_p * rabi_p);
}

cplx n_p(const AtomSpecies& species, const GasSample& sample, double omega_s,
         double rabi_p, double delta_omega) {
  require(omega_s > 0, "n_p: omega_s must be > 0");
  return coupling_prefactor(species, sample.density, omega_s) *
         chi_p(species, rabi_p, omega_s - species.omega0(), delta_omega);
}

double n_p_prime(const AtomSpecies& species, const GasSample& sample,
                 double omega_p, double rabi_p) {
  require(rabi_p > 0, "n_p_prime: rabi_p must be > 0");
  return -coupling_prefactor(species, sample.density, omega_p) /
         (2.0 * rabi_p * rabi_p);
}

cplx n_p_second(const AtomSpecies& species, const GasSample& sample,
                double omega_p, double rabi_p) {
  require(rabi_p > 0, "n_p_second: rabi_p must be > 0");
  // With q = 2 rabi^2 and D0 = Er + i gamma/2 + (omega_p - omega0),
  // chi_p = -dw/q - dw^2 (D0 + ...)/q^2 + O(dw^3) and the prefactor is
  // linear in omega: K(omega) = K(omega_p) omega / omega_p.
  const double q = 2.0 * rabi_p * rabi_p;
  const cplx D0(species.Er() + omega_p - species.omega0(),
                0.5 * species.gamma());
  const double K = coupling_prefactor(species, sample.density, omega_p);
  const double dK = K / omega_p;
  return K * (-2.0 * D0 / (q * q)) + 2.0 * dK * (-1.0 / q);
}

}  // namespace vscpt
