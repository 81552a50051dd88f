#include <doctest.h>

#include "test_support.hpp"
#include "vscpt/domain.hpp"
#include "vscpt/error.hpp"

using namespace vscpt;

TEST_CASE("presets carry the recoil frequencies") {
  const auto rb = preset_species(SpeciesName::Rb87);
  const auto he = preset_species(SpeciesName::He4);
  // Er = hbar kp^2 / 2m recomputed from the stored fields.
  auto er = [](const AtomSpecies& s) {
    return phys::hbar * s.kp() * s.kp() / (2.0 * s.mass());
  };
  CHECK(rb.Er() == doctest::Approx(2.3e4).epsilon(1e-12));
  CHECK(he.Er() == doctest::Approx(2.7e5).epsilon(1e-12));
  CHECK(er(rb) == doctest::Approx(rb.Er()).epsilon(1e-12));
  CHECK(er(he) == doctest::Approx(he.Er()).epsilon(1e-12));
  CHECK(rb.gamma() == doctest::Approx(3.61e7));
  CHECK(rb.recoil_shift(0.0) == 0.0);
}

TEST_CASE("species names parse") {
  CHECK(parse_species_name("rb87") == SpeciesName::Rb87);
  CHECK(parse_species_name("He4") == SpeciesName::He4);
  CHECK_THROWS_AS(parse_species_name("na23"), InvalidArgument);
}

TEST_CASE("sample validation") {
  const auto rb = preset_species(SpeciesName::Rb87);
  auto s = GasSample::with_default_width(rb, 2e16, 0.01);
  CHECK(s.sigma_p == doctest::Approx(0.5 * phys::hbar * rb.kp()));
  CHECK_NOTHROW(s.validate());
  CHECK_THROWS_AS((GasSample{-1.0, 0.01, 0.0}.validate()), InvalidArgument);
  CHECK_THROWS_AS((GasSample{1e16, 0.0, 0.0}.validate()), InvalidArgument);
  CHECK_THROWS_AS((GasSample{1e16, 0.01, -1e-30}.validate()), InvalidArgument);
  CHECK_THROWS_AS(ProbeConfig::cw(rb, 0.0, 0.0, -1.0), InvalidArgument);
}

TEST_CASE("momentum distribution is normalized") {
  auto g = testing::rng(11);
  const auto rb = preset_species(SpeciesName::Rb87);
  for (int k = 0; k < 20; ++k) {
    const double sigma = testing::log_uniform(g, 1e-29, 1e-26);
    const GasSample s{2e16, 0.01, sigma};
    const int n = 4001;
    const double lo = -10 * sigma, h = 20 * sigma / (n - 1);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
      const double f = momentum_distribution(s, lo + i * h);
      CHECK(f >= 0.0);
      sum += w * f;
    }
    CHECK(sum * h == doctest::Approx(1.0).epsilon(1e-10));
  }
  (void)rb;
  CHECK_THROWS(momentum_distribution(GasSample{2e16, 0.01, 0.0}, 0.0));
}

TEST_CASE("linspace endpoints") {
  const auto v = linspace(-1.0, 3.0, 5);
  REQUIRE(v.size() == 5);
  CHECK(v.front() == -1.0);
  CHECK(v.back() == 3.0);
  CHECK(v[2] == doctest::Approx(1.0));
}

TEST_CASE("envelope pair shape check") {
  EnvelopePair e;
  e.zgrid = {0.0, 1.0};
  e.e1 = {1.0, 1.0};
  e.e2 = {0.0};
  CHECK_THROWS(e.validate());
  e.e2 = {0.0, 0.0};
  CHECK_NOTHROW(e.validate());
}
