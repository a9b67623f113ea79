import math

import numpy as np
import pytest

import plunge


def test_disk_eigenvalue_matches_poisson_tail():
    from scipy.stats import poisson

    R = 3.0
    mu = math.pi * R * R
    for k in (0, 10, 28, 40):
        assert plunge.disk_eigenvalue(k, R) == pytest.approx(poisson.sf(k, mu), abs=1e-12)


def test_profile_and_counting_are_inverse():
    for lam in (0.05, 0.5, 0.95):
        k = plunge.counting_function(300.0, 60.0, lam)
        assert plunge.erfc_profile(300.0, 60.0, k) == pytest.approx(lam, abs=1e-9)


def test_shape_and_measure():
    mask = plunge.make_shape("disk", 100)
    assert mask.shape == (100, 100)
    assert mask.dtype == np.bool_
    m = plunge.measure(mask, 10, 100)
    assert m["area"] == pytest.approx(mask.sum() * 0.1)
    assert m["components"] == 1
    assert set(plunge.shape_kinds()) >= {"disk", "star", "tiles"}


def test_mask_round_trip(tmp_path):
    rng = np.random.default_rng(1)
    mask = rng.random((17, 23)) < 0.5
    path = tmp_path / "m.pbm"
    plunge.save_mask(mask, path)
    assert np.array_equal(plunge.load_mask(path), mask)


def test_dgt_is_parseval_with_tight_window():
    rng = np.random.default_rng(2)
    f = rng.standard_normal(64) + 1j * rng.standard_normal(64)
    f /= np.linalg.norm(f)
    c = plunge.dgt(f, "gauss", 4, 16)
    assert c.shape == (16, 16)
    assert np.sum(np.abs(c) ** 2) == pytest.approx(1.0, abs=1e-10)


def test_multiplier_complement_identity():
    mask = plunge.make_shape("star", 32)
    A = plunge.frame_multiplier(mask, 4, 32)
    Ac = plunge.frame_multiplier(~mask, 4, 32)
    assert np.abs(A + Ac - np.eye(128)).max() < 1e-10
    ev = plunge.hermitian_eigvals(A)
    assert np.all(np.diff(ev) <= 0)
    assert np.allclose(ev, np.sort(np.linalg.eigvalsh(A))[::-1], atol=1e-10)


def test_small_experiment():
    report = plunge.run_experiment("disk", a=4, M=40)
    assert len(report["eigenvalues"]) == 160
    assert report["plunge_count"] > 0
    assert report["linf_error"] < 0.1


def test_errors_are_python_exceptions():
    with pytest.raises(ValueError):
        plunge.make_shape("hexagon", 100)
    with pytest.raises(ValueError):
        plunge.erfc_inv(2.5)
    with pytest.raises(ValueError):
        plunge.run_experiment("disk", a=10, M=10)


def test_reference_table_rows():
    rows = plunge.table1_reference()
    assert len(rows) == 9
    assert rows[0]["kind"] == "disk"
