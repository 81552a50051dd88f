#include <doctest.h>

#include "test_support.hpp"
#include "vscpt/domain.hpp"
#include "vscpt/error.hpp"
#include "vscpt/susceptibility.hpp"

using namespace vscpt;

namespace {

const AtomSpecies rb = preset_species(SpeciesName::Rb87);
const AtomSpecies he = preset_species(SpeciesName::He4);

}  // namespace

TEST_CASE("chi0 at resonance") {
  const cplx expect = 1.0 / cplx(2.3e4, 0.5 * 3.61e7);
  CHECK(testing::rel_err(chi0(rb, 0.0, 0.0), expect) < 1e-12);
}

TEST_CASE("chi0 properties") {
  auto g = testing::rng(21);
  for (int k = 0; k < 200; ++k) {
    const auto& sp = k % 2 ? rb : he;
    const double ds = testing::uniform(g, -1e9, 1e9);
    const double dk = testing::uniform(g, -100, 100);
    const cplx c = chi0(sp, ds, dk);
    const cplx den(sp.Er() - phys::hbar * dk * dk / (2 * sp.mass()) + ds,
                   0.5 * sp.gamma());
    CHECK(testing::rel_err(c, 1.0 / den) < 1e-13);
    // Passive response in the e^{-i omega t} convention: Im chi0 < 0.
    CHECK(c.imag() == doctest::Approx(-0.5 * sp.gamma() / std::norm(den)).epsilon(1e-12));
  }
  CHECK(std::abs(chi0(rb, 1e15, 0.0)) < 1e-14);
}

TEST_CASE("n0 equals the prefactor formula and is linear in density") {
  auto g = testing::rng(22);
  for (int k = 0; k < 50; ++k) {
    const double rho = testing::log_uniform(g, 1e14, 1e19);
    const double ds = testing::uniform(g, -1e8, 1e8);
    const double dk = ds / phys::c;
    const double ws = rb.omega0() + ds;
    const GasSample s{rho, 0.01, 0.0};
    const double ks = ws / phys::c;
    const double pre = ws * ws * rho * rb.dipole() * rb.dipole() /
                       (2 * phys::c * phys::c * phys::eps0 * phys::hbar);
    const cplx expect = pre / (2 * ks) * chi0(rb, ds, dk);
    CHECK(testing::rel_err(n0(rb, s, ws, ds, dk), expect) < 1e-12);
    const GasSample s2{2 * rho, 0.01, 0.0};
    CHECK(testing::rel_err(n0(rb, s2, ws, ds, dk), 2.0 * n0(rb, s, ws, ds, dk)) < 1e-14);
  }
}

TEST_CASE("momentum-resolved chi reduces to chi0 at p = 0") {
  for (double ds : {-3e7, 0.0, 3e6}) {
    CHECK(chi_p_momentum(rb, ds, 0.0) == chi0(rb, ds, 0.0));
  }
  const double p = 0.5 * phys::hbar * rb.kp();
  const cplx expect = 1.0 / cplx(rb.Er() - rb.kp() * p / rb.mass(), 0.5 * rb.gamma());
  CHECK(testing::rel_err(chi_p_momentum(rb, 0.0, p), expect) < 1e-13);
}

TEST_CASE("dephasing factor") {
  CHECK(dephasing_factor(rb, 0.0) == 1.0);
  auto g = testing::rng(23);
  for (int k = 0; k < 200; ++k) {
    const auto& sp = k % 2 ? rb : he;
    const double t1 = testing::uniform(g, 0, 2e-5);
    const double t2 = t1 + testing::uniform(g, 1e-9, 1e-5);
    CHECK(dephasing_factor(sp, t2) <= dephasing_factor(sp, t1));
    CHECK(dephasing_factor(sp, t1) <= 1.0);
  }
  const double th = std::sqrt(std::log(2.0) / 2.0) / he.Er();
  CHECK(dephasing_factor(he, th) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK_THROWS_AS(dephasing_factor(rb, -1.0), InvalidArgument);
}

TEST_CASE("dephasing integrals match trapezoid quadrature and the Gaussian average") {
  for (const auto& sp : {rb, he}) {
    const auto s = GasSample::with_default_width(sp, 2e16, 0.01);
    for (double t : {0.0, 1e-6, 5e-6}) {
      const double ds = 3e6;
      const auto r = dephasing_integrals({sp, s, t}, ds);
      // Trapezoid in p with the domain's own density.
      const int n = 8001;
      const double lo = -10 * s.sigma_p, h = 20 * s.sigma_p / (n - 1);
      cplx ia = 0.0, ib = 0.0;
      for (int i = 0; i < n; ++i) {
        const double p = lo + i * h;
        const double w = ((i == 0 || i == n - 1) ? 0.5 : 1.0) * momentum_distribution(s, p) * h;
        const cplx c = chi_p_momentum(sp, ds, p);
        ia += w * c;
        ib += w * c * std::exp(I * (2 * sp.kp() * p / sp.mass() * t));
      }
      CHECK(testing::rel_err(r.I_alpha, ia) < 1e-10);
      CHECK(testing::rel_err(r.I_beta, ib) < 1e-10);
      // Recoil shifts are small against gamma / 2, so chi0 g(t) is a good
      // approximation of I_beta.
      const double shift = 4.0 * sp.Er() / sp.gamma();
      CHECK(std::abs(r.I_beta - r.approx_beta) < shift * std::abs(r.approx_alpha));
      if (t == 0.0) CHECK(testing::rel_err(r.I_alpha, r.I_beta) < 1e-14);
    }
  }
}

TEST_CASE("EIT susceptibility") {
  CHECK(chi_p(rb, 1e7, 0.0, 0.0) == cplx(0.0, 0.0));
  auto g = testing::rng(24);
  for (int k = 0; k < 100; ++k) {
    const double rabi = testing::log_uniform(g, 1e5, 1e8);
    const double dw = testing::uniform(g, -1e8, 1e8);
    const double ds = testing::uniform(g, -1e8, 1e8);
    const cplx bracket(rb.Er() + ds, 0.5 * rb.gamma());
    const cplx expect = 1.0 / (bracket - 2 * rabi * rabi / dw);
    CHECK(testing::rel_err(chi_p(rb, rabi, ds, dw), expect) < 1e-12);
  }
  // Without the pump the two-level response returns.
  CHECK(testing::rel_err(chi_p(rb, 0.0, 3e6, 1e5), chi0(rb, 3e6, 0.0)) < 1e-14);
}

TEST_CASE("n_p derivatives match finite differences") {
  const auto s = GasSample::with_default_width(rb, 2e16, 0.1);
  const double wp = rb.omega0();
  for (double rabi : {5e6, 1e7, 3e7}) {
    auto n = [&](double dw) { return n_p(rb, s, wp + dw, rabi, dw); };
    const double h = 1e3;
    const cplx d1 = (n(h) - n(-h)) / (2 * h);
    // n_p vanishes at the pump frequency.
    const cplx second = (n(h) + n(-h)) / (h * h);
    CHECK(testing::rel_err(d1, n_p_prime(rb, s, wp, rabi)) < 1e-6);
    CHECK(testing::rel_err(second, n_p_second(rb, s, wp, rabi)) < 1e-4);
  }
}
