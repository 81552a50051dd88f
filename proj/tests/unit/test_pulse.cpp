#include <doctest.h>

#include <algorithm>

#include "test_support.hpp"
#include "vscpt/backscatter.hpp"
#include "vscpt/error.hpp"
#include "vscpt/pulse.hpp"

using namespace vscpt;

namespace {

const AtomSpecies rb = preset_species(SpeciesName::Rb87);

ProbeConfig pulse_probe(double fwhm) {
  auto p = ProbeConfig::cw(rb, 3e6, 0.0);
  p.sigma_omega = sigma_omega_from_fwhm(fwhm);
  return p;
}

}  // namespace

TEST_CASE("width conversions") {
  // Intensity |exp(-sigma^2 t^2 / 2)|^2 falls to 1/2 at t = sqrt(ln 2) / sigma.
  CHECK(fwhm_from_sigma_omega(1e6) == doctest::Approx(2 * std::sqrt(std::log(2.0)) / 1e6));
  CHECK(sigma_omega_from_fwhm(fwhm_from_sigma_omega(3.3e5)) == doctest::Approx(3.3e5));
}

TEST_CASE("nearly empty medium transmits the pulse unchanged") {
  const GasSample s{1e6, 0.01, 0.0};
  const auto probe = pulse_probe(4e-6);
  const auto grid = auto_pulse_grid(s, probe, 20);
  const auto run = propagate_pulse(rb, s, probe, grid);
  CHECK(run.peak_incident == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(run.peak_transmitted == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(run.peak_reflected < 1e-12);
  CHECK(run.cfl == doctest::Approx(1.0));
  CHECK_FALSE(run.exit_incomplete);
}

TEST_CASE("long pulse with frozen dephasing reaches the steady state") {
  const auto s = GasSample::with_default_width(rb, 2e16, 0.01);
  const auto probe = pulse_probe(4e-6);
  PulseOptions opt;
  opt.freeze_dephasing = true;
  const auto grid = auto_pulse_grid(s, probe, 40, opt, 1e-2);
  const auto run = propagate_pulse(rb, s, probe, grid, opt);
  const auto bvp = solve_linearized(rb, s, probe, default_zgrid(s.length, 11));
  CHECK(run.efficiency == doctest::Approx(bvp.reflectivity).epsilon(0.02));
  CHECK(run.peak_transmitted == doctest::Approx(bvp.transmissivity).epsilon(0.02));
}

TEST_CASE("dephasing lowers the reflection") {
  const auto s = GasSample::with_default_width(rb, 2e16, 0.01);
  const auto probe = pulse_probe(4e-6);
  PulseOptions frozen;
  frozen.freeze_dephasing = true;
  const auto a = propagate_pulse(rb, s, probe, auto_pulse_grid(s, probe, 20, {}, 1e-2));
  const auto b = propagate_pulse(rb, s, probe, auto_pulse_grid(s, probe, 20, frozen, 1e-2), frozen);
  CHECK(a.efficiency < b.efficiency);
  CHECK(a.efficiency > 0.0);
}

TEST_CASE("envelope snapshots respect the incident boundary") {
  const auto s = GasSample::with_default_width(rb, 2e16, 0.01);
  const auto probe = pulse_probe(4e-6);
  auto grid = auto_pulse_grid(s, probe, 20, {}, 1e-2);
  grid.snapshots = 10;
  const auto run = propagate_pulse(rb, s, probe, grid);
  REQUIRE(run.envelopes.tgrid);
  CHECK_NOTHROW(run.envelopes.validate());
  const std::size_t nz = run.envelopes.zgrid.size();
  for (std::size_t it = 0; it < run.envelopes.nt(); ++it) {
    // Nothing comes back from beyond the right edge.
    CHECK(std::abs(run.envelopes.e2[it * nz + nz - 1]) == 0.0);
  }
}

TEST_CASE("grid checks") {
  const auto s = GasSample::with_default_width(rb, 2e16, 0.01);
  auto probe = pulse_probe(4e-6);
  auto grid = auto_pulse_grid(s, probe, 20);
  auto bad = grid;
  bad.zmin = 0.0;
  CHECK_THROWS_AS(propagate_pulse(rb, s, probe, bad), InvalidArgument);
  bad = grid;
  bad.speed_scale = 2.0;
  CHECK_THROWS_AS(propagate_pulse(rb, s, probe, bad), InvalidArgument);
  probe.rabi_p = 1e7;
  CHECK_THROWS_AS(propagate_pulse(rb, s, probe, grid), InvalidArgument);
  CHECK_THROWS_AS(auto_pulse_grid(s, pulse_probe(4e-6), 2), InvalidArgument);
}

TEST_CASE("short pulses are flagged") {
  const auto s = GasSample::with_default_width(rb, 2e16, 0.01);
  const auto probe = pulse_probe(1e-7);
  const auto run = propagate_pulse(rb, s, probe, auto_pulse_grid(s, probe, 10, {}, 1e-2));
  CHECK(run.below_validity_window);
  CHECK_FALSE(run.warnings.empty());
}

TEST_CASE("dephasing curve is monotone") {
  const auto he = preset_species(SpeciesName::He4);
  const auto c = dephasing_curve(he, 1e-5, 501);
  REQUIRE(c.size() == 501);
  CHECK(c.front().g == 1.0);
  for (std::size_t i = 1; i < c.size(); ++i) CHECK(c[i].g <= c[i - 1].g);
}
