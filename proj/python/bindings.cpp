#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vscpt/backscatter.hpp"
#include "vscpt/cli.hpp"
#include "vscpt/domain.hpp"
#include "vscpt/eit.hpp"
#include "vscpt/faddeeva.hpp"
#include "vscpt/pulse.hpp"
#include "vscpt/quantum.hpp"
#include "vscpt/susceptibility.hpp"

namespace py = pybind11;
using namespace vscpt;

namespace {

AtomSpecies species_by_name(const std::string& name) {
  return preset_species(parse_species_name(name));
}

GasSample make_sample(const AtomSpecies& sp, double density, double length,
                      std::optional<double> sigma_p) {
  GasSample s = GasSample::with_default_width(sp, density, length);
  if (sigma_p) s.sigma_p = *sigma_p;
  s.validate();
  return s;
}

py::dict solution_dict(const BvpSolution& s) {
  py::dict d;
  d["z"] = s.envelopes.zgrid;
  d["e1"] = s.envelopes.e1;
  d["e2"] = s.envelopes.e2;
  d["delta"] = s.delta;
  d["reflectivity"] = s.reflectivity;
  d["transmissivity"] = s.transmissivity;
  d["abs_a_delta"] = s.abs_a_delta;
  d["svea_ratio"] = s.svea_ratio;
  return d;
}

}  // namespace

PYBIND11_MODULE(_vscpt, m) {
  m.doc() = "Optical response of a VSCPT-prepared atomic gas";

  py::class_<AtomSpecies>(m, "AtomSpecies")
      .def_property_readonly("name", &AtomSpecies::name)
      .def_property_readonly("mass", &AtomSpecies::mass)
      .def_property_readonly("gamma", &AtomSpecies::gamma)
      .def_property_readonly("dipole", &AtomSpecies::dipole)
      .def_property_readonly("omega0", &AtomSpecies::omega0)
      .def_property_readonly("kp", &AtomSpecies::kp)
      .def_property_readonly("Er", &AtomSpecies::Er)
      .def("recoil_shift", &AtomSpecies::recoil_shift, py::arg("p"));

  py::class_<GasSample>(m, "GasSample")
      .def_readonly("density", &GasSample::density)
      .def_readonly("length", &GasSample::length)
      .def_readonly("sigma_p", &GasSample::sigma_p);

  m.def("species", &species_by_name, py::arg("name"), "Preset species: rb87 or he4.");
  m.def("sample", &make_sample, py::arg("species"), py::arg("density"), py::arg("length"),
        py::arg("sigma_p") = py::none(), "Gas sample; sigma_p defaults to hbar kp / 2.");

  m.def("faddeeva_w", &faddeeva_w, py::arg("z"));
  m.def("erf", py::overload_cast<cplx>(&vscpt::erf), py::arg("z"));

  m.def("chi0", &chi0, py::arg("species"), py::arg("delta_s"), py::arg("delta_k") = 0.0);
  m.def("n0", &n0, py::arg("species"), py::arg("sample"), py::arg("omega_s"),
        py::arg("delta_s"), py::arg("delta_k"));
  m.def("chi_p_momentum", &chi_p_momentum, py::arg("species"), py::arg("delta_s"),
        py::arg("p"));
  m.def("dephasing_factor", &dephasing_factor, py::arg("species"), py::arg("t"));
  m.def(
      "dephasing_integrals",
      [](const AtomSpecies& sp, const GasSample& s, double t, double delta_s) {
        const auto r = dephasing_integrals({sp, s, t}, delta_s);
        py::dict d;
        d["I_alpha"] = r.I_alpha;
        d["I_beta"] = r.I_beta;
        d["approx_alpha"] = r.approx_alpha;
        d["approx_beta"] = r.approx_beta;
        d["error_estimate"] = r.error_estimate;
        return d;
      },
      py::arg("species"), py::arg("sample"), py::arg("time"), py::arg("delta_s"));
  m.def("chi_p", &chi_p, py::arg("species"), py::arg("rabi_p"), py::arg("delta_s"),
        py::arg("delta_omega"));
  m.def("n_p", &n_p, py::arg("species"), py::arg("sample"), py::arg("omega_s"),
        py::arg("rabi_p"), py::arg("delta_omega"));
  m.def("n_p_prime", &n_p_prime, py::arg("species"), py::arg("sample"), py::arg("omega_p"),
        py::arg("rabi_p"));

  m.def(
      "solve_backscatter",
      [](const AtomSpecies& sp, const GasSample& s, double delta_s,
         std::optional<double> delta_k, std::size_t nz, const std::string& solver,
         double E0) {
        const auto probe =
            ProbeConfig::cw(sp, delta_s, delta_k.value_or(delta_s / phys::c), E0);
        const auto z = default_zgrid(s.length, nz);
        if (solver == "exact") return solution_dict(solve_exact(sp, s, probe, z));
        if (solver == "linearized") return solution_dict(solve_linearized(sp, s, probe, z));
        if (solver == "oracle") return solution_dict(solve_numeric_oracle(sp, s, probe, z));
        throw py::value_error("solver must be exact, linearized or oracle");
      },
      py::arg("species"), py::arg("sample"), py::arg("delta_s"),
      py::arg("delta_k") = py::none(), py::arg("nz") = 2001, py::arg("solver") = "exact",
      py::arg("E0") = 1.0, "Steady-state coupled-mode envelopes (pump off).");

  m.def(
      "propagate_pulse",
      [](const AtomSpecies& sp, const GasSample& s, double delta_s, double fwhm,
         std::size_t cells, double transit_fraction, bool freeze_dephasing,
         double lead_fwhm) {
        auto probe = ProbeConfig::cw(sp, delta_s, 0.0);
        probe.sigma_omega = sigma_omega_from_fwhm(fwhm);
        PulseOptions opt;
        opt.freeze_dephasing = freeze_dephasing;
        opt.lead_fwhm = lead_fwhm;
        const auto grid = auto_pulse_grid(s, probe, cells, opt, transit_fraction);
        const auto run = propagate_pulse(sp, s, probe, grid, opt);
        py::dict d;
        d["t"] = run.trace.t;
        d["incident"] = run.trace.incident;
        d["reflected"] = run.trace.reflected;
        d["transmitted"] = run.trace.transmitted;
        d["efficiency"] = run.efficiency;
        d["peak_transmitted"] = run.peak_transmitted;
        d["steps"] = run.steps;
        d["warnings"] = run.warnings;
        return d;
      },
      py::arg("species"), py::arg("sample"), py::arg("delta_s"), py::arg("fwhm"),
      py::arg("cells") = 100, py::arg("transit_fraction") = 1e-3,
      py::arg("freeze_dephasing") = false, py::arg("lead_fwhm") = 4.0,
      "Gaussian pulse through the medium after pump switch-off.");

  m.def(
      "dispersion_curve",
      [](const AtomSpecies& sp, double rabi_p, std::vector<double> grid, double pump_det) {
        std::vector<cplx> out;
        for (const auto& r : dispersion_curve(sp, rabi_p, grid, pump_det)) out.push_back(r.value);
        return out;
      },
      py::arg("species"), py::arg("rabi_p"), py::arg("delta_s"), py::arg("pump_detuning") = 0.0);

  py::class_<EitPulseParams>(m, "EitPulseParams")
      .def_readonly("np_prime", &EitPulseParams::np_prime)
      .def_readonly("sigma_omega", &EitPulseParams::sigma_omega)
      .def("linearization_error", &EitPulseParams::linearization_error);
  m.def("eit_params", &make_eit_params, py::arg("species"), py::arg("sample"),
        py::arg("rabi_p"), py::arg("sigma_omega"), py::arg("E0") = 1.0,
        py::arg("pump_detuning") = 0.0);
  m.def(
      "eit_fields",
      [](const EitPulseParams& p, double z, double t, const std::string& model) {
        EitFields f;
        if (model == "closed") f = fields_on_line(p, z, t);
        else if (model == "linearized-quadrature") f = fields_quadrature_oracle(p, z, t, NpModel::Linearized);
        else if (model == "full-quadrature") f = fields_quadrature_oracle(p, z, t, NpModel::Full);
        else throw py::value_error("model must be closed, linearized-quadrature or full-quadrature");
        return std::pair{f.E1, f.E2};
      },
      py::arg("params"), py::arg("z"), py::arg("t"), py::arg("model") = "closed");
  m.def(
      "eit_map",
      [](const EitPulseParams& p, std::vector<double> z, std::vector<double> t) {
        const auto mp = intensity_map(p, z, t);
        py::dict d;
        d["i1"] = mp.i1;
        d["i2"] = mp.i2;
        d["peak_reflected"] = mp.peak_reflected_global;
        d["peak_reflected_z0"] = mp.peak_reflected_z0;
        d["group_velocity"] = mp.group_velocity;
        return d;
      },
      py::arg("params"), py::arg("z"), py::arg("t"),
      "Closed-form intensities, index it * len(z) + iz.");

  m.def(
      "mixer_matrix",
      [](cplx beta, double omega_s, double t) { return ModeMixer::from_beta(beta, omega_s, t).matrix; },
      py::arg("beta"), py::arg("omega_s"), py::arg("t"));
  m.def(
      "evolve_fock",
      [](int n1, int n2, cplx beta, double omega_s, double t, int max_photons) {
        const auto out = evolve_state(TwoModeState::fock(n1, n2, max_photons),
                                      ModeMixer::from_beta(beta, omega_s, t));
        py::dict d;
        for (int total = 0; total <= max_photons; ++total)
          for (int k = 0; k <= total; ++k) {
            const cplx a = out.amplitude(total - k, k);
            if (a != cplx(0.0)) d[py::make_tuple(total - k, k)] = a;
          }
        return d;
      },
      py::arg("n1"), py::arg("n2"), py::arg("beta"), py::arg("omega_s"), py::arg("t"),
      py::arg("max_photons") = 4, "Output Fock amplitudes {(n1, n2): amplitude}.");

  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "vscpt");
        return cli::main_entry(args);
      },
      py::arg("args"), "Runs the command-line driver; returns its exit code.");
}
