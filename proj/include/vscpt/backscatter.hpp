#pragma once

#include <span>
#include <vector>

#include "vscpt/constants.hpp"
#include "vscpt/domain.hpp"

namespace vscpt {

/// Steady-state coupled-mode problem on 0 <= z <= length:
///   d/dz (E1, E2) = [[-i n0, i n0], [-i n0, i (n0 - 2 dk)]] (E1, E2)
/// with E1(0) = E0 and E2(length) = 0.
struct CoupledModeProblem {
  cplx n0;
  double delta_k = 0.0;
  double length = 0.0;
  double E0 = 1.0;
  double k_s = 0.0;  // carrier wavenumber, only used for the SVEA diagnostic

  void validate() const;
  /// delta = sqrt((2 n0 - dk) dk), principal branch.
  cplx delta() const;
  /// Right-hand side matrix applied to (e1, e2).
  std::pair<cplx, cplx> apply(cplx e1, cplx e2) const;
};

struct BvpSolution {
  EnvelopePair envelopes;
  cplx delta;
  double reflectivity;    // |E2(0) / E0|^2
  double transmissivity;  // |E1(a) / E0|^2
  double abs_a_delta;     // |a delta|, small => linearised form is accurate
  double svea_ratio;      // max |E''| / (k_s |E'|) over the grid, 0 if k_s = 0
};

CoupledModeProblem make_problem(const AtomSpecies& species,
                                const GasSample& sample,
                                const ProbeConfig& probe);

/// 2001 uniform points on [0, a].
std::vector<double> default_zgrid(double length, std::size_t n = 2001);

/// Closed-form solution with cosh/sinh of delta (a - z). delta -> 0 is
/// handled by the series of sinh(delta x)/delta.
BvpSolution solve_exact(const CoupledModeProblem& problem,
                        std::span<const double> zgrid);
BvpSolution solve_exact(const AtomSpecies& species, const GasSample& sample,
                        const ProbeConfig& probe,
                        std::span<const double> zgrid);

/// Closed form evaluated with an explicitly chosen square-root branch.
std::pair<cplx, cplx> exact_envelopes_at(const CoupledModeProblem& problem,
                                         cplx delta, double z);

/// Small |a delta|, dk -> 0 limit: E1 = E0 (1 - n0 z/(n0 a - i)),
/// E2 = E0 n0 (a - z)/(n0 a - i).
BvpSolution solve_linearized(const CoupledModeProblem& problem,
                             std::span<const double> zgrid);
BvpSolution solve_linearized(const AtomSpecies& species,
                             const GasSample& sample, const ProbeConfig& probe,
                             std::span<const double> zgrid);

/// Shooting solution of the same two-point problem with an adaptive
/// Dormand-Prince integrator (relative tolerance 1e-10). Independent of
/// the closed form; throws SolverError when the shooting matrix is
/// ill-conditioned.
BvpSolution solve_numeric_oracle(const CoupledModeProblem& problem,
                                 std::span<const double> zgrid);
BvpSolution solve_numeric_oracle(const AtomSpecies& species,
                                 const GasSample& sample,
                                 const ProbeConfig& probe,
                                 std::span<const double> zgrid);

}  // namespace vscpt
