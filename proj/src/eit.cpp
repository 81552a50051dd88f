#include "vscpt/eit.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

#include "vscpt/error.hpp"
#include "vscpt/faddeeva.hpp"
#include "vscpt/susceptibility.hpp"

namespace vscpt {

void EitPulseParams::validate() const {
  sample.validate();
  require(rabi_p > 0, "eit: rabi_p must be > 0");
  require(sigma_omega > 0, "eit: sigma_omega must be > 0");
  require(E0 > 0, "eit: E0 must be > 0");
  const double expected = n_p_prime(species, sample, omega_p(), rabi_p);
  require(std::abs(np_prime - expected) <= 1e-6 * std::abs(expected),
          "eit: np_prime does not match the analytic derivative of n_p");
}

double EitPulseParams::linearization_error() const {
  const cplx second = n_p_second(species, sample, omega_p(), rabi_p);
  return sigma_omega * std::abs(second) / (2.0 * std::abs(np_prime));
}

EitPulseParams make_eit_params(const AtomSpecies& species,
                               const GasSample& sample, double rabi_p,
                               double sigma_omega, double E0,
                               double pump_detuning) {
  require(rabi_p > 0, "eit: rabi_p must be > 0");
  EitPulseParams p{species,     sample, rabi_p,       sigma_omega,
                   E0,          0.0,    pump_detuning};
  p.np_prime = n_p_prime(species, sample, p.omega_p(), rabi_p);
  p.validate();
  return p;
}

std::vector<ComplexResponse> dispersion_curve(
    const AtomSpecies& species, double rabi_p,
    std::span<const double> delta_s_grid, double pump_detuning) {
  require(rabi_p >= 0, "dispersion_curve: rabi_p must be >= 0");
  std::vector<ComplexResponse> out;
  out.reserve(delta_s_grid.size());
  for (double ds : delta_s_grid) {
    const double dw = ds - pump_detuning;
    out.push_back({species.omega0() + ds, chi_p(species, rabi_p, ds, dw)});
  }
  return out;
}

cplx gaussian_spectrum(const EitPulseParams& params, double omega) {
  require(params.sigma_omega > 0, "gaussian_spectrum: sigma_omega must be > 0");
  const double s = params.sigma_omega;
  const double x = (omega - params.omega_p()) / s;
  return params.E0 / s * std::exp(cplx(-0.5 * x * x, 4.0 * x));
}

namespace {

// exp(-kappa^2/2s^2) * h(eta): the pole contribution of the frequency
// integral, with the Gaussian envelope folded into the scaled erf.
cplx pole_term(const EitPulseParams& p, double kappa) {
  const double s = p.sigma_omega;
  const double a = p.sample.length;
  const double g = kappa * kappa / (2.0 * s * s);
  const double eta = (kappa + 1.0 / (a * p.np_prime)) / (std::sqrt(2.0) * s);
  return std::sqrt(pi / 2.0) / (s * p.np_prime) *
         scaled_erf_plus_one(cplx(eta, 0.0), cplx(-g, 0.0));
}

}  // namespace

EitFields fields_closed_form(const EitPulseParams& p, double z, double t) {
  const double a = p.sample.length;
  require(z >= 0.0 && z <= a, "fields_closed_form: z must lie in [0, a]");
  const double s = p.sigma_omega;
  const double kp = (t - z / phys::c - 4.0 / s) * s * s;
  const double km = (t + z / phys::c - 4.0 / s) * s * s;
  const double gp = std::exp(-kp * kp / (2.0 * s * s));
  const double gm = std::exp(-km * km / (2.0 * s * s));
  const double frac = 1.0 - z / a;
  const cplx e1 = p.E0 * (gp * frac - pole_term(p, kp) * (z / (a * a)));
  const cplx e2 = p.E0 * (gm * frac - pole_term(p, km) * ((z - a) / (a * a)));
  return {e1, e2};
}

EitFields fields_on_line(const EitPulseParams& p, double z, double t) {
  const double a = p.sample.length;
  if (z < 0.0) {
    const double s = p.sigma_omega;
    const double tau = t - z / phys::c - 4.0 / s;
    const cplx e1 = p.E0 * std::exp(-0.5 * s * s * tau * tau);
    return {e1, fields_closed_form(p, 0.0, t + z / phys::c).E2};
  }
  if (z > a) {
    return {fields_closed_form(p, a, t - (z - a) / phys::c).E1, 0.0};
  }
  return fields_closed_form(p, z, t);
}

namespace {

constexpr std::size_t kIntervals = 4096;
constexpr double kHalfWidth = 8.0;

struct FrequencyGrid {
  std::vector<double> dw;
  std::vector<cplx> n;         // n_p at each node
  std::vector<cplx> spectrum;  // E0(omega) / sqrt(2 pi) times trapezoid weight
  double h;
};

FrequencyGrid make_frequency_grid(const EitPulseParams& p, NpModel model) {
  FrequencyGrid g;
  const double s = p.sigma_omega;
  g.dw = linspace(-kHalfWidth * s, kHalfWidth * s, kIntervals + 1);
  g.h = g.dw[1] - g.dw[0];
  g.n.resize(g.dw.size());
  g.spectrum.resize(g.dw.size());
  for (std::size_t k = 0; k < g.dw.size(); ++k) {
    const double w = p.omega_p() + g.dw[k];
    g.n[k] = model == NpModel::Linearized
                 ? cplx(p.np_prime * g.dw[k], 0.0)
                 : n_p(p.species, p.sample, w, p.rabi_p, g.dw[k]);
    const double weight = (k == 0 || k == kIntervals) ? 0.5 : 1.0;
    g.spectrum[k] = weight * g.h * gaussian_spectrum(p, w) / std::sqrt(2.0 * pi);
  }
  return g;
}

// Kernels multiplying the spectrum for E1 and E2 at position z.
std::pair<cplx, cplx> kernels(cplx n, double z, double a) {
  const cplx den = n * a - I;
  return {1.0 - n * z / den, n * (a - z) / den};
}

}  // namespace

EitFields fields_quadrature_oracle(const EitPulseParams& p, double z, double t,
                                   NpModel model) {
  p.validate();
  const double a = p.sample.length;
  require(z >= 0.0 && z <= a, "fields_quadrature_oracle: z must lie in [0, a]");
  const FrequencyGrid g = make_frequency_grid(p, model);
  cplx e1, e2, e1_half, e2_half;
  for (std::size_t k = 0; k < g.dw.size(); ++k) {
    const auto [k1, k2] = kernels(g.n[k], z, a);
    const cplx f1 = g.spectrum[k] * k1 * std::exp(I * (g.dw[k] * (z / phys::c - t)));
    const cplx f2 = g.spectrum[k] * k2 * std::exp(-I * (g.dw[k] * (z / phys::c + t)));
    e1 += f1;
    e2 += f2;
    if (k % 2 == 0) {
      // Half-resolution trapezoid: interior even nodes carry weight 2h.
      const double scale = (k == 0 || k == kIntervals) ? 1.0 : 2.0;
      e1_half += scale * f1;
      e2_half += scale * f2;
    }
  }
  const double tol = 1e-9 * p.E0;
  const double diff = std::max(std::abs(e1 - e1_half), std::abs(e2 - e2_half));
  if (diff > tol + 1e-6 * std::max(std::abs(e1), std::abs(e2))) {
    throw SolverError(fmt::format(
        "fields_quadrature_oracle: frequency quadrature not converged at "
        "z = {:.4g}, t = {:.4g} (resolution change {:.3g})",
        z, t, diff));
  }
  return {e1, e2};
}

namespace {

double golden_max(auto&& f, double lo, double hi) {
  const double r = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - r * (hi - lo);
  double x2 = lo + r * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int i = 0; i < 80 && hi - lo > 1e-12 * std::max(1.0, std::abs(hi)); ++i) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + r * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - r * (hi - lo);
      f1 = f(x1);
    }
  }
  return 0.5 * (lo + hi);
}

// Slope of z against t by linear least squares.
double fit_velocity(const std::vector<PeakPoint>& pts) {
  if (pts.size() < 2) return 0.0;
  double mt = 0.0, mz = 0.0;
  for (const auto& q : pts) {
    mt += q.t;
    mz += q.z;
  }
  mt /= static_cast<double>(pts.size());
  mz /= static_cast<double>(pts.size());
  double stz = 0.0, stt = 0.0;
  for (const auto& q : pts) {
    stz += (q.t - mt) * (q.z - mz);
    stt += (q.t - mt) * (q.t - mt);
  }
  return stt > 0.0 ? stz / stt : 0.0;
}

void check_grids(std::span<const double> zgrid, std::span<const double> tgrid) {
  require(!zgrid.empty() && !tgrid.empty(), "intensity map: empty grid");
  require(std::is_sorted(zgrid.begin(), zgrid.end()),
          "intensity map: zgrid must be increasing");
  require(std::is_sorted(tgrid.begin(), tgrid.end()),
          "intensity map: tgrid must be increasing");
}

}  // namespace

EitFieldMap intensity_map(const EitPulseParams& p,
                          std::span<const double> zgrid,
                          std::span<const double> tgrid) {
  p.validate();
  check_grids(zgrid, tgrid);
  EitFieldMap map;
  map.zgrid.assign(zgrid.begin(), zgrid.end());
  map.tgrid.assign(tgrid.begin(), tgrid.end());
  map.linearization_valid = p.linearization_valid();
  const std::size_t nz = zgrid.size();
  const std::size_t nt = tgrid.size();
  map.i1.resize(nz * nt);
  map.i2.resize(nz * nt);
  const double norm = p.E0 * p.E0;
  for (std::size_t it = 0; it < nt; ++it) {
    for (std::size_t iz = 0; iz < nz; ++iz) {
      const auto f = fields_on_line(p, zgrid[iz], tgrid[it]);
      map.i1[it * nz + iz] = std::norm(f.E1) / norm;
      map.i2[it * nz + iz] = std::norm(f.E2) / norm;
    }
  }

  // Grid maxima refined by golden-section search in t between neighbours.
  auto refine = [&](std::size_t iz, std::size_t it, bool reflected) {
    const double z = zgrid[iz];
    auto intensity = [&](double t) {
      const auto f = fields_on_line(p, z, t);
      return std::norm(reflected ? f.E2 : f.E1) / norm;
    };
    if (nt < 3) return PeakPoint{z, tgrid[it]};
    const double lo = tgrid[it == 0 ? 0 : it - 1];
    const double hi = tgrid[std::min(it + 1, nt - 1)];
    return PeakPoint{z, golden_max(intensity, lo, hi)};
  };
  auto column_argmax = [&](const std::vector<double>& field, std::size_t iz) {
    std::size_t best = 0;
    for (std::size_t it = 1; it < nt; ++it) {
      if (field[it * nz + iz] > field[best * nz + iz]) best = it;
    }
    return best;
  };

  std::size_t best_iz = 0;
  std::size_t best_it = 0;
  for (std::size_t it = 0; it < nt; ++it) {
    for (std::size_t iz = 0; iz < nz; ++iz) {
      if (map.i2[it * nz + iz] > map.i2[best_it * nz + best_iz]) {
        best_it = it;
        best_iz = iz;
      }
    }
  }
  map.peak_reflected_at = refine(best_iz, best_it, true);
  {
    const auto f = fields_on_line(p, map.peak_reflected_at.z, map.peak_reflected_at.t);
    map.peak_reflected_global =
        std::max(std::norm(f.E2) / norm, map.i2[best_it * nz + best_iz]);
  }
  auto z0 = std::find(zgrid.begin(), zgrid.end(), 0.0);
  if (z0 != zgrid.end()) {
    const auto iz = static_cast<std::size_t>(z0 - zgrid.begin());
    const PeakPoint q = refine(iz, column_argmax(map.i2, iz), true);
    const auto f = fields_on_line(p, 0.0, q.t);
    map.peak_reflected_z0 =
        std::max(std::norm(f.E2) / norm, map.i2[column_argmax(map.i2, iz) * nz + iz]);
  }

  const double a = p.sample.length;
  std::vector<PeakPoint> inside, outside;
  for (std::size_t iz = 0; iz < nz; ++iz) {
    const PeakPoint q = refine(iz, column_argmax(map.i1, iz), false);
    map.trajectory.push_back(q);
    if (q.z > 0.1 * a && q.z < 0.9 * a) inside.push_back(q);
    if (q.z < 0.0) outside.push_back(q);
  }
  map.group_velocity = fit_velocity(inside);
  map.vacuum_velocity = fit_velocity(outside);
  return map;
}

EitFieldMap intensity_map_quadrature(const EitPulseParams& p,
                                     std::span<const double> zgrid,
                                     std::span<const double> tgrid,
                                     NpModel model) {
  p.validate();
  check_grids(zgrid, tgrid);
  const double a = p.sample.length;
  require(zgrid.front() >= 0.0 && zgrid.back() <= a,
          "intensity_map_quadrature: z must lie in [0, a]");
  EitFieldMap map;
  map.zgrid.assign(zgrid.begin(), zgrid.end());
  map.tgrid.assign(tgrid.begin(), tgrid.end());
  map.linearization_valid = model == NpModel::Full || p.linearization_valid();
  const std::size_t nz = zgrid.size();
  const std::size_t nt = tgrid.size();
  map.i1.assign(nz * nt, 0.0);
  map.i2.assign(nz * nt, 0.0);

  const FrequencyGrid g = make_frequency_grid(p, model);
  const std::size_t nw = g.dw.size();
  bool uniform = nt > 1;
  const double dt = nt > 1 ? tgrid[1] - tgrid[0] : 0.0;
  for (std::size_t it = 1; it < nt && uniform; ++it) {
    uniform = std::abs(tgrid[it] - tgrid[it - 1] - dt) <= 1e-9 * std::abs(dt);
  }

  std::vector<cplx> w1(nw), w2(nw), step(nw);
  for (std::size_t k = 0; k < nw; ++k) step[k] = std::exp(-I * (g.dw[k] * dt));
  const double norm = p.E0 * p.E0;
  for (std::size_t iz = 0; iz < nz; ++iz) {
    const double z = zgrid[iz];
    for (std::size_t k = 0; k < nw; ++k) {
      const auto [k1, k2] = kernels(g.n[k], z, a);
      w1[k] = g.spectrum[k] * k1 * std::exp(I * (g.dw[k] * (z / phys::c - tgrid[0])));
      w2[k] = g.spectrum[k] * k2 * std::exp(-I * (g.dw[k] * (z / phys::c + tgrid[0])));
    }
    for (std::size_t it = 0; it < nt; ++it) {
      if (!uniform && it > 0) {
        for (std::size_t k = 0; k < nw; ++k) {
          const auto [k1, k2] = kernels(g.n[k], z, a);
          w1[k] = g.spectrum[k] * k1 * std::exp(I * (g.dw[k] * (z / phys::c - tgrid[it])));
          w2[k] = g.spectrum[k] * k2 * std::exp(-I * (g.dw[k] * (z / phys::c + tgrid[it])));
        }
      }
      cplx e1, e2;
      for (std::size_t k = 0; k < nw; ++k) {
        e1 += w1[k];
        e2 += w2[k];
      }
      map.i1[it * nz + iz] = std::norm(e1) / norm;
      map.i2[it * nz + iz] = std::norm(e2) / norm;
      if (uniform) {
        for (std::size_t k = 0; k < nw; ++k) {
          w1[k] *= step[k];
          w2[k] *= step[k];
        }
      }
    }
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < map.i2.size(); ++i) {
    if (map.i2[i] > map.i2[best]) best = i;
  }
  map.peak_reflected_global = map.i2[best];
  map.peak_reflected_at = {zgrid[best % nz], tgrid[best / nz]};
  if (zgrid.front() == 0.0) {
    for (std::size_t it = 0; it < nt; ++it) {
      map.peak_reflected_z0 = std::max(map.peak_reflected_z0, map.i2[it * nz]);
    }
  }
  return map;
}

}  // namespace vscpt
