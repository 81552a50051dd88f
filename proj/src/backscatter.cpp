#include "vscpt/backscatter.hpp"

#include <algorithm>
#include <array>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <string>

#include "vscpt/error.hpp"
#include "vscpt/susceptibility.hpp"

namespace vscpt {

void CoupledModeProblem::validate() const {
  require(std::isfinite(n0.real()) && std::isfinite(n0.imag()),
          "coupled-mode problem: n0 must be finite");
  require(std::isfinite(delta_k), "coupled-mode problem: delta_k must be finite");
  require(std::isfinite(length) && length > 0,
          "coupled-mode problem: length must be > 0");
  require(std::isfinite(E0) && E0 > 0, "coupled-mode problem: E0 must be > 0");
  require(k_s >= 0, "coupled-mode problem: k_s must be >= 0");
}

cplx CoupledModeProblem::delta() const {
  return std::sqrt((2.0 * n0 - delta_k) * delta_k);
}

std::pair<cplx, cplx> CoupledModeProblem::apply(cplx e1, cplx e2) const {
  return {-I * n0 * e1 + I * n0 * e2,
          -I * n0 * e1 + I * (n0 - 2.0 * delta_k) * e2};
}

CoupledModeProblem make_problem(const AtomSpecies& species,
                                const GasSample& sample,
                                const ProbeConfig& probe) {
  sample.validate();
  probe.validate(species);
  require(probe.rabi_p == 0.0,
          "backscatter: the steady-state solvers require the pump off");
  CoupledModeProblem p;
  p.n0 = n0(species, sample, probe.omega_s, probe.delta_s, probe.delta_k);
  p.delta_k = probe.delta_k;
  p.length = sample.length;
  p.E0 = probe.E0;
  p.k_s = probe.omega_s / phys::c;
  return p;
}

std::vector<double> default_zgrid(double length, std::size_t n) {
  require(length > 0, "default_zgrid: length must be > 0");
  return linspace(0.0, length, n);
}

namespace {

void check_grid(const CoupledModeProblem& p, std::span<const double> zgrid) {
  require(!zgrid.empty(), "zgrid must not be empty");
  require(std::is_sorted(zgrid.begin(), zgrid.end()) &&
              std::adjacent_find(zgrid.begin(), zgrid.end()) == zgrid.end(),
          "zgrid must be strictly increasing");
  const double slack = 1e-12 * p.length;
  require(zgrid.front() >= -slack && zgrid.back() <= p.length + slack,
          "zgrid must lie within [0, a]");
}

// cosh(d x) and sinh(d x) / d, both even in d.
std::pair<cplx, cplx> cosh_sinhc(cplx d, double x) {
  const cplx u = d * x;
  if (std::abs(u) < 1e-3) {
    const cplx u2 = u * u;
    const cplx c = 1.0 + u2 / 2.0 * (1.0 + u2 / 12.0 * (1.0 + u2 / 30.0));
    const cplx s = x * (1.0 + u2 / 6.0 * (1.0 + u2 / 20.0 * (1.0 + u2 / 42.0)));
    return {c, s};
  }
  return {std::cosh(u), std::sinh(u) / d};
}

double svea_ratio(const CoupledModeProblem& p, const EnvelopePair& env) {
  if (p.k_s <= 0.0) return 0.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < env.zgrid.size(); ++i) {
    const auto [d1, d2] = p.apply(env.e1[i], env.e2[i]);
    const auto [dd1, dd2] = p.apply(d1, d2);
    const double first = std::hypot(std::abs(d1), std::abs(d2));
    const double second = std::hypot(std::abs(dd1), std::abs(dd2));
    if (first > 0.0) worst = std::max(worst, second / (p.k_s * first));
  }
  return worst;
}

template <class Eval>
BvpSolution tabulate(const CoupledModeProblem& p,
                     std::span<const double> zgrid, Eval&& eval) {
  BvpSolution sol;
  sol.envelopes.zgrid.assign(zgrid.begin(), zgrid.end());
  sol.envelopes.e1.resize(zgrid.size());
  sol.envelopes.e2.resize(zgrid.size());
  for (std::size_t i = 0; i < zgrid.size(); ++i) {
    const auto [e1, e2] = eval(zgrid[i]);
    sol.envelopes.e1[i] = e1;
    sol.envelopes.e2[i] = e2;
  }
  sol.delta = p.delta();
  sol.abs_a_delta = std::abs(p.length * sol.delta);
  sol.reflectivity = std::norm(eval(0.0).second / p.E0);
  sol.transmissivity = std::norm(eval(p.length).first / p.E0);
  sol.svea_ratio = svea_ratio(p, sol.envelopes);
  return sol;
}

}  // namespace

std::pair<cplx, cplx> exact_envelopes_at(const CoupledModeProblem& p,
                                         cplx delta, double z) {
  const double a = p.length;
  const cplx m = p.n0 - p.delta_k;
  const cplx phase = std::exp(-I * (p.delta_k * z));
  if (std::abs(delta * a) <= 1.0) {
    const auto [ca, sa] = cosh_sinhc(delta, a);
    const auto [cz, sz] = cosh_sinhc(delta, a - z);
    const cplx den = ca + I * m * sa;
    return {p.E0 * (cz + I * m * sz) / den * phase,
            p.E0 * I * p.n0 * sz / den * phase};
  }
  // Large |a delta|: pick the branch with Re d >= 0 and factor out
  // exp(d a) so nothing overflows.
  const cplx d = delta.real() >= 0.0 ? delta : -delta;
  const cplx ep = d + I * m;
  const cplx em = d - I * m;
  const cplx ea = std::exp(-2.0 * d * a);
  const cplx ez = std::exp(-2.0 * d * (a - z));
  const cplx den = ep + em * ea;
  const cplx shift = std::exp(-d * z);
  return {p.E0 * shift * (ep + em * ez) / den * phase,
          p.E0 * shift * I * p.n0 * (1.0 - ez) / den * phase};
}

BvpSolution solve_exact(const CoupledModeProblem& p,
                        std::span<const double> zgrid) {
  p.validate();
  check_grid(p, zgrid);
  const cplx delta = p.delta();
  auto sol = tabulate(p, zgrid,
                      [&](double z) { return exact_envelopes_at(p, delta, z); });
  // Boundary values hold by construction; pin them against rounding.
  if (!zgrid.empty() && zgrid.front() == 0.0) sol.envelopes.e1.front() = p.E0;
  if (!zgrid.empty() && zgrid.back() == p.length) sol.envelopes.e2.back() = 0.0;
  return sol;
}

BvpSolution solve_linearized(const CoupledModeProblem& p,
                             std::span<const double> zgrid) {
  p.validate();
  check_grid(p, zgrid);
  const cplx den = p.n0 * p.length - I;
  return tabulate(p, zgrid, [&](double z) {
    return std::pair<cplx, cplx>{p.E0 * (1.0 - p.n0 * z / den),
                                 p.E0 * p.n0 * (p.length - z) / den};
  });
}

BvpSolution solve_numeric_oracle(const CoupledModeProblem& p,
                                 std::span<const double> zgrid) {
  p.validate();
  check_grid(p, zgrid);
  // Forward shooting mixes exp(+-delta z); beyond this the decaying
  // solution is lost below double precision.
  if (2.0 * std::abs(p.delta().real()) * p.length > 36.0) {
    throw SolverError(
        "solve_numeric_oracle: shooting is ill-conditioned for |Re delta| a > 18; "
        "use solve_exact");
  }
  namespace ode = boost::numeric::odeint;
  // Two fundamental solutions integrated together: state = (Y1, Y2) with
  // Y1(0) = (1, 0) and Y2(0) = (0, 1).
  using State = std::array<cplx, 4>;
  auto rhs = [&p](const State& y, State& dy, double) {
    const auto [a1, a2] = p.apply(y[0], y[1]);
    const auto [b1, b2] = p.apply(y[2], y[3]);
    dy = {a1, a2, b1, b2};
  };

  std::vector<double> times;
  times.reserve(zgrid.size() + 2);
  times.push_back(0.0);
  for (double z : zgrid) {
    if (z > times.back()) times.push_back(z);
  }
  if (times.back() < p.length) times.push_back(p.length);

  std::vector<State> states;
  states.reserve(times.size());
  State y{cplx(1.0), cplx(0.0), cplx(0.0), cplx(1.0)};
  auto stepper =
      ode::make_controlled(1e-14, 1e-10, ode::runge_kutta_dopri5<State>());
  const double h0 = p.length / std::max<std::size_t>(times.size(), 100);
  ode::integrate_times(stepper, rhs, y, times.begin(), times.end(), h0,
                       [&](const State& s, double) { states.push_back(s); });
  if (states.size() != times.size()) {
    throw SolverError("solve_numeric_oracle: integrator did not reach z = a");
  }

  const State& end = states.back();
  double scale = 0.0;
  for (const cplx& v : end) scale = std::max(scale, std::abs(v));
  if (!std::isfinite(scale) || std::abs(end[3]) < 1e-8 * scale) {
    throw SolverError(
        "solve_numeric_oracle: shooting matrix is ill-conditioned (|a delta| "
        "too large); use solve_exact");
  }
  const cplx c2 = -p.E0 * end[1] / end[3];

  auto combine = [&](const State& s) {
    return std::pair<cplx, cplx>{p.E0 * s[0] + c2 * s[2],
                                 p.E0 * s[1] + c2 * s[3]};
  };
  BvpSolution sol;
  sol.envelopes.zgrid.assign(zgrid.begin(), zgrid.end());
  sol.envelopes.e1.reserve(zgrid.size());
  sol.envelopes.e2.reserve(zgrid.size());
  std::size_t k = 0;
  for (double z : zgrid) {
    while (times[k] < z) ++k;
    const auto [e1, e2] = combine(states[k]);
    sol.envelopes.e1.push_back(e1);
    sol.envelopes.e2.push_back(e2);
  }
  sol.delta = p.delta();
  sol.abs_a_delta = std::abs(p.length * sol.delta);
  sol.reflectivity = std::norm(c2 / p.E0);
  sol.transmissivity = std::norm(combine(states.back()).first / p.E0);
  sol.svea_ratio = svea_ratio(p, sol.envelopes);
  return sol;
}

BvpSolution solve_exact(const AtomSpecies& species, const GasSample& sample,
                        const ProbeConfig& probe,
                        std::span<const double> zgrid) {
  return solve_exact(make_problem(species, sample, probe), zgrid);
}

BvpSolution solve_linearized(const AtomSpecies& species,
                             const GasSample& sample, const ProbeConfig& probe,
                             std::span<const double> zgrid) {
  return solve_linearized(make_problem(species, sample, probe), zgrid);
}

BvpSolution solve_numeric_oracle(const AtomSpecies& species,
                                 const GasSample& sample,
                                 const ProbeConfig& probe,
                                 std::span<const double> zgrid) {
  return solve_numeric_oracle(make_problem(species, sample, probe), zgrid);
}

}  // namespace vscpt
