#pragma once

#include <array>
#include <vector>

#include "vscpt/constants.hpp"
#include "vscpt/domain.hpp"

namespace vscpt {

using Matrix2 = std::array<std::array<cplx, 2>, 2>;

/// Heisenberg-picture mixing of the forward (a1) and backward (a2) signal
/// modes: a(t) = matrix * a(0) with
///   matrix = exp(-i (beta + omega_s) t) [[cos beta t, i sin beta t],
///                                         [i sin beta t, cos beta t]].
/// beta = c n_x. A lossy medium has Im beta < 0.
struct ModeMixer {
  cplx beta;
  double omega_s;
  double time;
  Matrix2 matrix;

  /// Builds the mixer for an arbitrary coupling (no sign check).
  static ModeMixer from_beta(cplx beta, double omega_s, double t);
};

/// n_x = n0 (pump off) or n_p with delta_omega = omega_s - omega_p (pump on).
/// Asserts the passive sign Im beta <= 0.
ModeMixer mixer(const AtomSpecies& species, const GasSample& sample,
                const ProbeConfig& probe, double t, bool pump_on);

/// Two-mode Fock state truncated at total photon number max_photons.
class TwoModeState {
 public:
  explicit TwoModeState(int max_photons = 4);

  static TwoModeState fock(int n1, int n2, int max_photons = 4);

  int max_photons() const { return max_photons_; }
  cplx amplitude(int n1, int n2) const;
  void set_amplitude(int n1, int n2, cplx value);
  /// Total probability; < 1 once photons have been absorbed.
  double norm() const;
  /// Largest total photon number with a nonzero amplitude (-1 if none).
  int highest_occupied_sector() const;

 private:
  std::size_t index(int n1, int n2) const;
  int max_photons_;
  std::vector<cplx> amps_;
};

/// Schrodinger-picture image of state under the mode transformation:
/// each creation operator a_j^dag maps to sum_i matrix[i][j] a_i^dag.
TwoModeState evolve_state(const TwoModeState& state, const ModeMixer& mixer);

/// 2 |alpha beta'| / (|alpha|^2 + |beta'|^2) for the single-photon
/// amplitudes alpha = <1,0|psi>, beta' = <0,1|psi>.
double concurrence_single_photon(const TwoModeState& state);

}  // namespace vscpt
