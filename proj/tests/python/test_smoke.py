import cmath
import math

import pytest

import vscpt


@pytest.fixture(scope="module")
def rb():
    return vscpt.species("rb87")


def test_species_and_susceptibility(rb):
    assert rb.Er == pytest.approx(2.3e4)
    chi = vscpt.chi0(rb, 0.0, 0.0)
    assert chi == pytest.approx(1.0 / complex(2.3e4, 0.5 * rb.gamma), rel=1e-12)
    assert vscpt.chi_p(rb, 1e7, 0.0, 0.0) == 0
    assert vscpt.dephasing_factor(rb, 0.0) == 1.0


def test_faddeeva():
    assert vscpt.faddeeva_w(1 + 1j) == pytest.approx(0.30474420525691254 + 0.2082189382028316j, rel=1e-13)
    assert vscpt.erf(0.5).real == pytest.approx(math.erf(0.5), rel=1e-14)


def test_backscatter(rb):
    s = vscpt.sample(rb, 2e16, 0.01)
    sol = vscpt.solve_backscatter(rb, s, 3e6, delta_k=0.0, nz=101)
    assert 0.25 <= sol["reflectivity"] <= 0.35
    assert sol["e1"][0] == 1
    assert sol["e2"][-1] == 0
    oracle = vscpt.solve_backscatter(rb, s, 3e6, delta_k=0.0, nz=101, solver="oracle")
    assert oracle["reflectivity"] == pytest.approx(sol["reflectivity"], rel=1e-8)


def test_errors_map_to_python(rb):
    with pytest.raises(ValueError):
        vscpt.species("xx")
    with pytest.raises(ValueError):
        vscpt.sample(rb, -1.0, 0.01)


def test_pulse(rb):
    s = vscpt.sample(rb, 2e16, 0.01)
    run = vscpt.propagate_pulse(rb, s, 3e6, 4e-6, cells=20, transit_fraction=1e-2)
    assert 0 < run["efficiency"] < 0.35
    assert len(run["t"]) == len(run["reflected"])


def test_eit(rb):
    s = vscpt.sample(rb, 2e16, 0.1)
    p = vscpt.eit_params(rb, s, 1e7, 5e5)
    assert p.np_prime < 0
    e1, e2 = vscpt.eit_fields(p, 0.05, 8e-6)
    q1, q2 = vscpt.eit_fields(p, 0.05, 8e-6, "linearized-quadrature")
    assert abs(e1 - q1) < 1e-8 and abs(e2 - q2) < 1e-8
    curve = vscpt.dispersion_curve(rb, 1e7, [-1e7, 0.0, 1e7])
    assert curve[1] == 0


def test_quantum():
    beta = 1.7
    t = math.pi / (4 * beta)
    out = vscpt.evolve_fock(1, 0, beta, 0.0, t)
    assert abs(out[(1, 0)]) ** 2 == pytest.approx(0.5, abs=1e-12)
    assert abs(out[(0, 1)]) ** 2 == pytest.approx(0.5, abs=1e-12)
    m = vscpt.mixer_matrix(beta, 0.0, t)
    assert m[0][0] == pytest.approx(cmath.cos(beta * t) * cmath.exp(-1j * beta * t))


def test_cli(tmp_path):
    assert vscpt.run_cli(["dispersion", "--out", str(tmp_path)]) == 0
    assert (tmp_path / "summary.txt").read_text().startswith("command=dispersion")
    assert vscpt.run_cli(["dispersion", "--samples", "1"]) == 2
