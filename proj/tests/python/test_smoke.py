import math

import numpy as np
import pytest
from scipy.linalg import expm

import nullcurve as nc


def test_fixture_verification():
    for name in ("product_manifold", "solvable_group"):
        report = nc.verify_structure(nc.structure(name))
        assert report["pass"]
        assert all(v <= 1e-10 for v in report["residuals"].values())


def test_connection_coefficients():
    gamma = nc.connection_coefficients(nc.structure("product_manifold"), "g")
    # derivative of e2 along e1 points down the Reeb direction
    assert np.allclose(gamma[0][:, 1], [0, 0, -1], atol=1e-12)
    assert np.allclose(gamma[1][:, 2], [1, 0, 0], atol=1e-12)


def test_hyperbolic_curvature_functions():
    s = nc.structure("product_manifold")
    c = nc.curve("example_a")
    t = 0.3
    fbar = nc.frame_Fbar(c, s, t, eps=1, eps1=-1)
    assert fbar.k1 == pytest.approx(2 * math.cosh(t) ** 2, abs=1e-10)
    assert fbar.k2 == pytest.approx(1 / math.cosh(t) ** 2, abs=1e-10)
    assert fbar.h == 0.0
    f = nc.frame_F(c, s, t)
    assert f.h == pytest.approx(math.tanh(2 * t), abs=1e-10)


def test_group_exp_against_scipy():
    rng = np.random.default_rng(7)
    for _ in range(25):
        x = rng.uniform(-4, 4, size=3)
        ours = nc.group_exp(nc.ad_matrix(x))
        assert np.allclose(ours, expm(nc.ad_matrix(x)), atol=1e-12)


def test_adjoint_subgroup_law():
    a, b = 0.6, -1.1
    t, u = 0.8, -1.7
    lhs = nc.adjoint_curve(a, b, t + u)
    rhs = nc.adjoint_curve(a, b, t) @ nc.adjoint_curve(a, b, u)
    assert np.allclose(lhs, rhs, atol=1e-12)
    assert np.allclose(nc.adjoint_curve(a, b, 0.0), np.eye(3), atol=1e-14)


def test_nonnull_apparatus_of_phi_geodesic():
    s = nc.structure("product_manifold")
    out = nc.nonnull_apparatus(nc.curve("example_b"), s)
    assert out["order"] == 3
    assert out["k"] == pytest.approx(1.0, abs=1e-10)
    assert out["tau"] == pytest.approx(1.0, abs=1e-10)
    assert out["classification"] == "proper_helix"
    assert np.allclose(out["E3"], [-1, -1, 1], atol=1e-10)


def test_classification_labels():
    s = nc.structure("product_manifold")
    labels_b = nc.classify(nc.curve("example_b"), s)["labels"]
    assert "phi_geodesic" in labels_b and "generalized_helix" in labels_b
    labels_c = nc.classify(nc.curve("example_c"), s)["labels"]
    assert "legendre" in labels_c and "null_cubic" in labels_c


def test_slant_tangent_is_null():
    s = nc.structure("solvable_group")
    g = s.metric()
    spec = nc.slant_null_tangent(0.9, 1.4)
    v = spec.vec
    assert abs(v @ g @ v) <= 1e-12
    assert spec.r == 0.9


def test_errors_surface_as_python_exceptions():
    with pytest.raises(nc.NullCurveError):
        nc.slant_null_tangent(0.0, 0.0)
    with pytest.raises(nc.NullCurveError):
        nc.adjoint_curve(0.0, 1.0, 0.3)


def test_curve_from_csv(tmp_path):
    rows = ["t,p1,p2,p3,v1,v2,v3"]
    for i in range(41):
        t = -2.0 + 0.1 * i
        rows.append(f"{t!r},1,{t!r},{-t!r},0,1,-1")
    path = tmp_path / "curve.csv"
    path.write_text("\n".join(rows) + "\n")

    s = nc.structure("product_manifold")
    c = nc.curve_from_csv(str(path))
    data = nc.slant_data(c, s, -1.8, 1.8)
    assert data["a"] == pytest.approx(-1.0, abs=1e-10)
    assert not data["legendre"]
    labels = nc.classify(c, s, -1.8, 1.8)["labels"]
    assert "phi_geodesic" in labels
