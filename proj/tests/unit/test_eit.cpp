#include <doctest.h>

#include "test_support.hpp"
#include "vscpt/eit.hpp"
#include "vscpt/error.hpp"
#include "vscpt/susceptibility.hpp"

using namespace vscpt;

namespace {

const AtomSpecies rb = preset_species(SpeciesName::Rb87);

EitPulseParams fig6() {
  return make_eit_params(rb, GasSample::with_default_width(rb, 2e16, 0.1), 1e7, 5e5);
}

}  // namespace

TEST_CASE("parameters and linearization flag") {
  const auto p = fig6();
  const auto s = GasSample::with_default_width(rb, 2e16, 0.1);
  CHECK(p.np_prime == doctest::Approx(n_p_prime(rb, s, rb.omega0(), 1e7)));
  CHECK(p.np_prime < 0.0);
  CHECK(p.linearization_valid());
  const auto strong =
      make_eit_params(rb, GasSample::with_default_width(rb, 1e17, 0.01), 5e6, 1e6);
  CHECK_FALSE(strong.linearization_valid());
  CHECK_THROWS_AS(make_eit_params(rb, s, 0.0, 5e5), InvalidArgument);
}

TEST_CASE("dispersion curve") {
  const std::vector<double> grid{-1e7, 0.0, 2e7};
  const auto c = dispersion_curve(rb, 1e7, grid);
  REQUIRE(c.size() == 3);
  CHECK(c[1].value == cplx(0.0));
  CHECK(c[2].omega == rb.omega0() + 2e7);
  CHECK(c[0].value == chi_p(rb, 1e7, -1e7, -1e7));
}

TEST_CASE("gaussian spectrum") {
  const auto p = fig6();
  const double dw = 3e5;
  const cplx expect = p.E0 / p.sigma_omega * std::exp(I * (4 * dw / p.sigma_omega)) *
                      std::exp(-dw * dw / (2 * p.sigma_omega * p.sigma_omega));
  CHECK(testing::rel_err(gaussian_spectrum(p, p.omega_p() + dw), expect) < 1e-14);
}

TEST_CASE("closed form matches the frequency quadrature") {
  const auto p = fig6();
  auto g = testing::rng(41);
  for (int k = 0; k < 40; ++k) {
    const double z = testing::uniform(g, 0, p.sample.length);
    const double t = testing::uniform(g, 0, 12 / p.sigma_omega);
    const auto a = fields_closed_form(p, z, t);
    const auto b = fields_quadrature_oracle(p, z, t, NpModel::Linearized);
    CHECK(std::abs(a.E1 - b.E1) < 1e-8 * p.E0);
    CHECK(std::abs(a.E2 - b.E2) < 1e-8 * p.E0);
  }
}

TEST_CASE("boundary behaviour") {
  const auto p = fig6();
  const double a = p.sample.length;
  auto g = testing::rng(42);
  for (int k = 0; k < 20; ++k) {
    const double t = testing::uniform(g, 0, 12 / p.sigma_omega);
    // Incident field at z = 0 is the vacuum Gaussian peaking at 4 / sigma.
    const double tau = p.sigma_omega * t - 4.0;
    const auto f0 = fields_closed_form(p, 0.0, t);
    CHECK(std::abs(f0.E1 - p.E0 * std::exp(-tau * tau / 2)) < 1e-10);
    CHECK(std::abs(fields_closed_form(p, a, t).E2) < 1e-10);
    // Outside the medium fields continue the boundary values.
    const auto left = fields_on_line(p, -1e-9, t);
    CHECK(std::abs(left.E2 - f0.E2) < 1e-6);
    CHECK(fields_on_line(p, a + 0.01, t).E2 == cplx(0.0));
  }
  CHECK_THROWS_AS(fields_closed_form(p, -0.01, 0.0), InvalidArgument);
}

TEST_CASE("intensity map peaks and slow light") {
  const auto p = fig6();
  const auto z = linspace(-0.02, 0.1, 61);
  const auto t = linspace(0.0, 12 / p.sigma_omega, 301);
  const auto m = intensity_map(p, z, t);
  CHECK(m.peak_reflected_global >= m.peak_reflected_z0 - 1e-12);
  CHECK(m.group_velocity > 0.0);
  CHECK(m.group_velocity < 0.9 * phys::c);
  CHECK(m.vacuum_velocity == doctest::Approx(phys::c).epsilon(0.05));
  CHECK(m.intensity1(0, 0) >= 0.0);
}

TEST_CASE("quadrature map agrees with the closed-form map") {
  const auto p = fig6();
  const auto z = linspace(0.0, 0.1, 11);
  const auto t = linspace(0.0, 12 / p.sigma_omega, 51);
  const auto a = intensity_map(p, z, t);
  const auto b = intensity_map_quadrature(p, z, t, NpModel::Linearized);
  for (std::size_t i = 0; i < a.i1.size(); ++i) {
    CHECK(a.i1[i] == doctest::Approx(b.i1[i]).epsilon(1e-6).scale(1.0));
    CHECK(a.i2[i] == doctest::Approx(b.i2[i]).epsilon(1e-6).scale(1.0));
  }
}
