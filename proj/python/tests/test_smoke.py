import json
import math
import os
import subprocess

import numpy as np
import pytest

import monopole_lab as ml


def test_version():
    assert ml.__version__.count(".") == 2


def test_geometry_and_profiles():
    assert ml.sigma("riemann", 1.0, 2.0) == pytest.approx(2.0)
    sol = ml.MonopoleSolution(model="lobachevsky", rho=1.0, kind="hyperbolic", a1=0.7, C=0.2, A=1.3, B=0.1)
    for r in (0.3, 0.9, 1.4):
        res_phi, res_k = sol.residuals(r)
        assert abs(res_phi) < 1e-9 and abs(res_k) < 1e-9
    assert json.loads(sol.to_json())["model"]


def test_wigner():
    assert ml.d_small(0.5, 0.5, 0.5, 0.8) == pytest.approx(math.cos(0.4))
    d = ml.d_matrix(1.5, 1.1)
    assert np.allclose(d @ d.T, np.eye(4), atol=1e-13)
    assert ml.pauli_min_j(0.5) == 0.5
    assert ml.pauli_min_j(0.3) is None
    assert ml.charge_admissible(1.5) and not ml.charge_admissible(0.3)
    with pytest.raises(ValueError):
        ml.d_small(1.0, 2.0, 0.0, 0.3)


def test_gauge():
    c = np.array([0.3, -0.2, 0.5])
    o = ml.rotation_from_gibbs(c)
    assert np.allclose(o @ o.T, np.eye(3), atol=1e-14)
    rep = ml.verify_gauge("dirac", "schwinger", grid=8)
    assert rep["max_defect_Phi"] < 1e-12 and rep["max_defect_W"] < 1e-12


def test_spectrum():
    out = ml.spectrum(j=1, m=1.0, count=2, grid=1000)
    nu = math.sqrt(2.0)
    for n, eps in enumerate(out["eigenvalues_refined"]):
        assert eps == pytest.approx(math.sqrt(1.0 + (nu + 0.5 + n) ** 2), rel=1e-7)
    assert out["diagnostic"] == ""


def test_symmetry():
    assert ml.selection_rule(-1, 1, 1, 0, 0) == "forced_zero"
    assert ml.n_a_square_defect(1.1, 2) < 1e-12
    angles = ml.n_a_consistent_angles(360, 1e-10, 1, 1.3, 0.8, 1.5, 0.4, 0.0, 0.0)
    assert angles == pytest.approx([0.0, math.pi])


@pytest.mark.skipif("MONOPOLE_LAB_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_exit_codes():
    cli = os.environ["MONOPOLE_LAB_CLI"]
    assert subprocess.run([cli, "no-such-command"], capture_output=True).returncode == 2
    ok = subprocess.run([cli, "bps", "verify", "--model", "riemann", "--kind", "trivial"], capture_output=True, text=True)
    assert ok.returncode == 0
    header = json.loads(ok.stdout.splitlines()[0])
    assert header["rng"] == "mt19937_64"
