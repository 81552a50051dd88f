#include "vscpt/quantum.hpp"

#include <cmath>
#include <string>

#include "vscpt/error.hpp"
#include "vscpt/susceptibility.hpp"

namespace vscpt {

ModeMixer ModeMixer::from_beta(cplx beta, double omega_s, double t) {
  require(t >= 0, "mixer: t must be >= 0");
  const cplx phase = std::exp(-I * (beta + omega_s) * t);
  const cplx c = std::cos(beta * t);
  const cplx s = I * std::sin(beta * t);
  return {beta, omega_s, t, Matrix2{{{phase * c, phase * s}, {phase * s, phase * c}}}};
}

ModeMixer mixer(const AtomSpecies& species, const GasSample& sample,
                const ProbeConfig& probe, double t, bool pump_on) {
  sample.validate();
  probe.validate(species);
  const cplx nx =
      pump_on ? n_p(species, sample, probe.omega_s, probe.rabi_p,
                    probe.omega_s - probe.omega_p)
              : n0(species, sample, probe.omega_s, probe.delta_s, probe.delta_k);
  const cplx beta = phys::c * nx;
  if (beta.imag() > 0.0) {
    throw SolverError("mixer: Im beta > 0 would describe gain");
  }
  return ModeMixer::from_beta(beta, probe.omega_s, t);
}

TwoModeState::TwoModeState(int max_photons) : max_photons_(max_photons) {
  require(max_photons >= 0, "TwoModeState: max_photons must be >= 0");
  const auto n = static_cast<std::size_t>(max_photons + 1);
  amps_.assign(n * (n + 1) / 2, cplx(0.0));
}

TwoModeState TwoModeState::fock(int n1, int n2, int max_photons) {
  TwoModeState s(max_photons);
  s.set_amplitude(n1, n2, 1.0);
  return s;
}

std::size_t TwoModeState::index(int n1, int n2) const {
  if (n1 < 0 || n2 < 0 || n1 + n2 > max_photons_) {
    throw InvalidArgument("TwoModeState: |" + std::to_string(n1) + "," +
                          std::to_string(n2) + "> exceeds the truncation N = " +
                          std::to_string(max_photons_));
  }
  // Sector N = n1 + n2 starts after N (N + 1) / 2 entries.
  const auto total = static_cast<std::size_t>(n1 + n2);
  return total * (total + 1) / 2 + static_cast<std::size_t>(n2);
}

cplx TwoModeState::amplitude(int n1, int n2) const {
  return amps_[index(n1, n2)];
}

void TwoModeState::set_amplitude(int n1, int n2, cplx value) {
  amps_[index(n1, n2)] = value;
}

double TwoModeState::norm() const {
  double s = 0.0;
  for (const cplx& a : amps_) s += std::norm(a);
  return s;
}

int TwoModeState::highest_occupied_sector() const {
  for (int total = max_photons_; total >= 0; --total) {
    for (int n2 = 0; n2 <= total; ++n2) {
      if (amplitude(total - n2, n2) != cplx(0.0)) return total;
    }
  }
  return -1;
}

namespace {

double binomial(int n, int k) {
  return std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                             std::lgamma(n - k + 1.0)));
}

double factorial(int n) { return std::round(std::exp(std::lgamma(n + 1.0))); }

// Integer power with ipow(x, 0) == 1 for every x, including 0.
cplx ipow(cplx x, int n) {
  cplx r(1.0);
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

}  // namespace

TwoModeState evolve_state(const TwoModeState& state, const ModeMixer& mx) {
  const int nmax = state.max_photons();
  const Matrix2& m = mx.matrix;
  TwoModeState out(nmax);
  // (a1^dag)^n1 (a2^dag)^n2 |0> / sqrt(n1! n2!) with
  // a1^dag -> m00 a1^dag + m10 a2^dag and a2^dag -> m01 a1^dag + m11 a2^dag.
  for (int total = 0; total <= nmax; ++total) {
    for (int n2 = 0; n2 <= total; ++n2) {
      const int n1 = total - n2;
      const cplx amp = state.amplitude(n1, n2);
      if (amp == cplx(0.0)) continue;
      const double inv_norm = 1.0 / std::sqrt(factorial(n1) * factorial(n2));
      for (int j = 0; j <= n1; ++j) {
        // j creation operators of the first factor land in mode 1.
        const cplx f1 = binomial(n1, j) * ipow(m[0][0], j) *
                        ipow(m[1][0], n1 - j);
        for (int k = 0; k <= n2; ++k) {
          const cplx f2 = binomial(n2, k) * ipow(m[0][1], k) *
                          ipow(m[1][1], n2 - k);
          const int m1 = j + k;
          const int m2 = total - m1;
          const double fock_norm = std::sqrt(factorial(m1) * factorial(m2));
          out.set_amplitude(m1, m2, out.amplitude(m1, m2) +
                                        amp * inv_norm * fock_norm * f1 * f2);
        }
      }
    }
  }
  return out;
}

double concurrence_single_photon(const TwoModeState& state) {
  if (state.highest_occupied_sector() > 1) {
    throw InvalidArgument(
        "concurrence_single_photon: state has multi-photon components");
  }
  const cplx alpha = state.amplitude(1, 0);
  const cplx beta = state.amplitude(0, 1);
  const double weight = std::norm(alpha) + std::norm(beta);
  if (weight == 0.0) {
    throw InvalidArgument(
        "concurrence_single_photon: no single-photon component");
  }
  return 2.0 * std::abs(alpha * beta) / weight;
}

}  // namespace vscpt
