#include <doctest.h>

#include "test_support.hpp"
#include "vscpt/error.hpp"
#include "vscpt/quantum.hpp"

using namespace vscpt;

using testing::expm_oracle;
using testing::singular_values;

TEST_CASE("transfer matrix equals the matrix exponential") {
  auto g = testing::rng(51);
  for (int k = 0; k < 200; ++k) {
    const cplx beta(testing::uniform(g, -5, 5), -testing::uniform(g, 0, 2));
    const double ws = testing::uniform(g, -3, 3);
    const double t = testing::uniform(g, 0, 2);
    const auto m = ModeMixer::from_beta(beta, ws, t).matrix;
    const auto o = expm_oracle(beta, ws, t);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) CHECK(std::abs(m[i][j] - o[i][j]) < 1e-10);
  }
}

TEST_CASE("real beta is unitary, lossy beta contracts") {
  auto g = testing::rng(52);
  for (int k = 0; k < 200; ++k) {
    const double ws = testing::uniform(g, -10, 10), t = testing::uniform(g, 0, 3);
    const auto u = ModeMixer::from_beta(testing::uniform(g, -5, 5), ws, t).matrix;
    const auto [s1, s2] = singular_values(u);
    CHECK(std::abs(s1 - 1) < 1e-12);
    CHECK(std::abs(s2 - 1) < 1e-12);
    const cplx lossy(testing::uniform(g, -5, 5), -testing::uniform(g, 1e-6, 3));
    const auto [l1, l2] = singular_values(ModeMixer::from_beta(lossy, ws, t).matrix);
    // The symmetric mode is lossless, so l1 = 1 up to rounding.
    CHECK(l1 <= 1 + 1e-10);
    CHECK(l2 <= l1);
    CHECK(l2 < 1.0);
  }
}

TEST_CASE("balanced splitting and two-photon interference") {
  const double beta = 3.7, t = pi / (4 * beta);
  const auto mx = ModeMixer::from_beta(beta, 1.3, t);
  const auto one = evolve_state(TwoModeState::fock(1, 0), mx);
  CHECK(std::abs(std::norm(one.amplitude(1, 0)) - 0.5) < 1e-12);
  CHECK(std::abs(std::norm(one.amplitude(0, 1)) - 0.5) < 1e-12);
  CHECK(concurrence_single_photon(one) == doctest::Approx(1.0).epsilon(1e-12));
  // |1,1> through a balanced splitter never leaves one photon per mode.
  const auto two = evolve_state(TwoModeState::fock(1, 1), mx);
  CHECK(std::abs(two.amplitude(1, 1)) < 1e-12);
  CHECK(std::norm(two.amplitude(2, 0)) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(two.norm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(two.highest_occupied_sector() == 2);
}

TEST_CASE("evolution preserves photon number and norm for real beta") {
  auto g = testing::rng(53);
  for (int k = 0; k < 20; ++k) {
    const auto mx = ModeMixer::from_beta(testing::uniform(g, -3, 3), 0.5, testing::uniform(g, 0, 2));
    for (auto [n1, n2] : {std::pair{2, 1}, {0, 3}, {2, 2}}) {
      const auto out = evolve_state(TwoModeState::fock(n1, n2, 4), mx);
      CHECK(out.norm() == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(out.highest_occupied_sector() == n1 + n2);
    }
  }
  const auto lossy = ModeMixer::from_beta(cplx(1.0, -0.5), 0.0, 1.0);
  CHECK(evolve_state(TwoModeState::fock(1, 0), lossy).norm() < 1.0);
}

TEST_CASE("physical mixer and guards") {
  const auto rb = preset_species(SpeciesName::Rb87);
  const auto s = GasSample::with_default_width(rb, 2e16, 0.01);
  const auto probe = ProbeConfig::cw(rb, 3e6, 0.0);
  const auto mx = mixer(rb, s, probe, 1e-10, false);
  CHECK(mx.beta.imag() < 0.0);
  CHECK(mx.omega_s == doctest::Approx(rb.omega0() + 3e6));
  CHECK_THROWS_AS(mixer(rb, s, probe, -1.0, false), InvalidArgument);
  CHECK_THROWS_AS(TwoModeState::fock(3, 3, 4), InvalidArgument);
  CHECK_THROWS_AS(concurrence_single_photon(TwoModeState::fock(1, 1)), InvalidArgument);
}
