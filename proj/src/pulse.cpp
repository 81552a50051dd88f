#include "vscpt/pulse.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fmt/format.h>

#include "vscpt/error.hpp"
#include "vscpt/susceptibility.hpp"

namespace vscpt {

double fwhm_from_sigma_omega(double sigma_omega) {
  require(sigma_omega > 0, "sigma_omega must be > 0");
  return 2.0 * std::sqrt(std::log(2.0)) / sigma_omega;
}

double sigma_omega_from_fwhm(double fwhm) {
  require(fwhm > 0, "pulse FWHM must be > 0");
  return 2.0 * std::sqrt(std::log(2.0)) / fwhm;
}

PulseGrid auto_pulse_grid(const GasSample& sample, const ProbeConfig& probe,
                          std::size_t cells_in_medium,
                          const PulseOptions& options,
                          double transit_fraction) {
  require(cells_in_medium >= 4, "auto_pulse_grid: need >= 4 cells");
  require(transit_fraction > 0, "auto_pulse_grid: transit_fraction > 0");
  const double fwhm = fwhm_from_sigma_omega(probe.sigma_omega);
  const double a = sample.length;
  const double dz = a / static_cast<double>(cells_in_medium);
  PulseGrid g;
  g.zmin = -2.0 * dz;
  g.zmax = a + 2.0 * dz;
  g.nz = cells_in_medium + 5;
  g.speed_scale = std::min(1.0, a / (transit_fraction * fwhm * phys::c));
  const double c_num = g.speed_scale * phys::c;
  g.tmax = 2.0 * options.lead_fwhm * fwhm + (g.zmax - g.zmin) / c_num;
  return g;
}

PulseRun propagate_pulse(const AtomSpecies& species, const GasSample& sample,
                         const ProbeConfig& probe, const PulseGrid& grid,
                         const PulseOptions& options) {
  sample.validate();
  probe.validate(species);
  require(probe.rabi_p == 0.0, "propagate_pulse: requires the pump off");
  require(probe.sigma_omega > 0, "propagate_pulse: probe.sigma_omega must be > 0");
  require(grid.zmin < 0.0, "pulse grid: zmin must be < 0");
  require(grid.zmax > sample.length, "pulse grid: zmax must be > a");
  require(grid.nz >= 3, "pulse grid: nz must be >= 3");
  require(grid.tmax > 0, "pulse grid: tmax must be > 0");
  require(grid.speed_scale > 0 && grid.speed_scale <= 1.0,
          "pulse grid: speed_scale must be in (0, 1]");
  require(options.lead_fwhm > 0, "pulse options: lead_fwhm must be > 0");

  const double a = sample.length;
  const double c_num = grid.speed_scale * phys::c;
  const double dz = (grid.zmax - grid.zmin) / static_cast<double>(grid.nz - 1);
  const double dt = dz / c_num;
  const double fwhm = fwhm_from_sigma_omega(probe.sigma_omega);
  const double per_fwhm = c_num * fwhm / dz;
  if (per_fwhm < 20.0) {
    throw InvalidArgument(fmt::format(
        "pulse grid too coarse: {:.3g} points per pulse FWHM (need >= 20)",
        per_fwhm));
  }
  const auto steps = static_cast<std::size_t>(std::ceil(grid.tmax / dt));
  require(steps < 2'000'000'000ULL, "pulse grid: too many time steps");

  PulseRun run;
  run.pulse_fwhm = fwhm;
  run.dz = dz;
  run.dt = dt;
  run.cfl = c_num * dt / dz;
  run.steps = steps;
  run.n0 = n0(species, sample, probe.omega_s, probe.delta_s, 0.0);
  const bool frozen = options.freeze_dephasing || sample.sigma_p == 0.0;

  const std::size_t nz = grid.nz;
  std::vector<double> z(nz);
  for (std::size_t j = 0; j < nz; ++j) z[j] = grid.zmin + dz * static_cast<double>(j);
  z.back() = grid.zmax;
  std::vector<cplx> alpha(nz - 1);
  for (std::size_t j = 0; j + 1 < nz; ++j) {
    const double lo = std::max(z[j], 0.0);
    const double hi = std::min(z[j + 1], a);
    const double w = hi > lo ? (hi - lo) / dz : 0.0;
    alpha[j] = 0.5 * I * run.n0 * dz * w;
  }

  const double arrival = options.lead_fwhm * fwhm;
  const double sw = probe.sigma_omega;
  const double E0 = probe.E0;
  auto incident = [&](double zz, double t) {
    const double tau = t - arrival - zz / c_num;
    return cplx(E0 * std::exp(-0.5 * sw * sw * tau * tau), 0.0);
  };
  auto g_at = [&](double t) { return frozen ? 1.0 : dephasing_factor(species, t); };

  std::vector<cplx> e1(nz), e2(nz, cplx(0.0)), n1(nz), n2(nz);
  for (std::size_t j = 0; j < nz; ++j) e1[j] = incident(z[j], 0.0);

  const std::size_t nsnap = std::max<std::size_t>(grid.snapshots, 2);
  std::vector<double> tgrid;
  auto snapshot = [&](double t) {
    tgrid.push_back(t);
    run.envelopes.e1.insert(run.envelopes.e1.end(), e1.begin(), e1.end());
    run.envelopes.e2.insert(run.envelopes.e2.end(), e2.begin(), e2.end());
  };
  const std::size_t snap_every = std::max<std::size_t>(1, steps / (nsnap - 1));
  const std::size_t trace_every = std::max<std::size_t>(1, steps / 20000);
  auto record = [&]() {
    const double inc = std::norm(e1.front() / E0);
    const double refl = std::norm(e2.front() / E0);
    const double trans = std::norm(e1.back() / E0);
    run.peak_incident = std::max(run.peak_incident, inc);
    run.peak_reflected = std::max(run.peak_reflected, refl);
    run.peak_transmitted = std::max(run.peak_transmitted, trans);
    return std::array<double, 3>{inc, refl, trans};
  };
  auto trace = [&](double t, const std::array<double, 3>& v) {
    run.trace.t.push_back(t);
    run.trace.incident.push_back(v[0]);
    run.trace.reflected.push_back(v[1]);
    run.trace.transmitted.push_back(v[2]);
  };

  snapshot(0.0);
  trace(0.0, record());
  const std::size_t last = nz - 1;
  for (std::size_t n = 1; n <= steps; ++n) {
    const double t = dt * static_cast<double>(n);
    const double g = g_at(t - 0.5 * dt);

    n1[0] = incident(z[0], t);
    {
      const cplx ar = alpha[0];
      n2[0] = (e2[1] + ar * (g * (e1[1] + n1[0]) - e2[1])) / (1.0 + ar);
    }
    for (std::size_t j = 1; j < last; ++j) {
      const cplx al = alpha[j - 1];
      const cplx ar = alpha[j];
      const cplx r1 = e1[j - 1] + al * (g * e2[j - 1] - e1[j - 1]);
      const cplx r2 = e2[j + 1] + ar * (g * e1[j + 1] - e2[j + 1]);
      // [[1 + al, -al g], [-ar g, 1 + ar]] (n1, n2) = (r1, r2)
      const cplx a11 = 1.0 + al;
      const cplx a12 = -al * g;
      const cplx a21 = -ar * g;
      const cplx a22 = 1.0 + ar;
      const cplx det = a11 * a22 - a12 * a21;
      n1[j] = (r1 * a22 - a12 * r2) / det;
      n2[j] = (a11 * r2 - a21 * r1) / det;
    }
    {
      const cplx al = alpha[last - 1];
      n2[last] = 0.0;
      n1[last] = (e1[last - 1] + al * (g * e2[last - 1] - e1[last - 1])) /
                 (1.0 + al);
    }
    e1.swap(n1);
    e2.swap(n2);

    const auto v = record();
    if (n % trace_every == 0 || n == steps) trace(t, v);
    if (n % snap_every == 0 && tgrid.size() < nsnap) snapshot(t);
  }
  if (tgrid.back() != dt * static_cast<double>(steps)) {
    if (tgrid.size() == nsnap) {
      tgrid.pop_back();
      run.envelopes.e1.resize(run.envelopes.e1.size() - nz);
      run.envelopes.e2.resize(run.envelopes.e2.size() - nz);
    }
    snapshot(dt * static_cast<double>(steps));
  }
  run.envelopes.zgrid = std::move(z);
  run.envelopes.tgrid = std::move(tgrid);

  run.efficiency =
      run.peak_incident > 0 ? run.peak_reflected / run.peak_incident : 0.0;

  const double exit_time =
      2.0 * arrival + (grid.zmax - grid.zmin) / c_num;
  if (grid.tmax < exit_time) {
    run.exit_incomplete = true;
    run.warnings.push_back(fmt::format(
        "tmax = {:.4g} s is shorter than the pulse exit time {:.4g} s",
        grid.tmax, exit_time));
  }
  if (fwhm < 5.0 / species.gamma()) {
    run.below_validity_window = true;
    run.warnings.push_back(fmt::format(
        "pulse FWHM {:.3g} s is below 5/gamma = {:.3g} s; transient atomic "
        "response is not modelled",
        fwhm, 5.0 / species.gamma()));
  }
  return run;
}

std::vector<DephasingSample> dephasing_curve(const AtomSpecies& species,
                                             double tmax, std::size_t n) {
  require(tmax > 0, "dephasing_curve: tmax must be > 0");
  require(n >= 2, "dephasing_curve: need n >= 2");
  std::vector<DephasingSample> out;
  out.reserve(n);
  for (double t : linspace(0.0, tmax, n)) {
    out.push_back({t, dephasing_factor(species, t)});
  }
  return out;
}

}  // namespace vscpt
