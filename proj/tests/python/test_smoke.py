import math

import numpy as np
import pytest

import sphhd


def potentials(n, seed):
    s = sphhd.random_spectrum(n - 1, seed)
    t = sphhd.random_spectrum(n - 1, seed + 1)
    s[0, 0] = 0.0
    t[0, 0] = 0.0
    return s, t


def test_roundtrip():
    s, t = potentials(64, 3)
    r = sphhd.decompose(sphhd.differentiate(s, t))
    assert sphhd.relative_l2_error(r.spheroidal, s) <= 1e-12
    assert sphhd.relative_l2_error(r.toroidal, t) <= 1e-12
    assert r.spheroidal[0, 0] == 0.0
    assert len(r.residual_by_order) == 64
    assert len(r.out_of_range_by_order) == 66


def test_threads_match_serial():
    s, t = potentials(40, 8)
    f = sphhd.differentiate(s, t)
    a = sphhd.decompose(f).spheroidal.to_numpy()
    b = sphhd.decompose(f, threads=4).spheroidal.to_numpy()
    assert np.array_equal(a, b)


def test_numpy_roundtrip_and_indexing():
    z = sphhd.ZSpectrum(5)
    assert len(z) == 5 * 5 + 4 * 5 + 2
    values = np.arange(len(z), dtype=float)
    z2 = sphhd.ZSpectrum.from_numpy(5, values)
    assert np.array_equal(z2.to_numpy(), values)
    assert z2.first_degree(0) == 1
    with pytest.raises(IndexError):
        z2[0, 0]
    with pytest.raises(ValueError):
        sphhd.ZSpectrum.from_numpy(5, values[:-1])


def test_conditioning():
    assert sphhd.kappa_bound(10, 2) == pytest.approx(27.0, rel=1e-15)
    rep = sphhd.kappa_numeric(16, 2)
    assert rep["kappa_R"] == pytest.approx(rep["kappa_M"], rel=1e-10)
    assert rep["kappa_R"] <= rep["bound"]


def test_verify_quick():
    results = sphhd.verify("quick")
    assert len(results) >= 6
    assert all(r["passed"] for r in results)
    with pytest.raises(ValueError):
        sphhd.verify("deep")


def test_gradient_of_y10():
    # grad Y_{1,0} = -sqrt(3/(4 pi)) sin(theta) e_theta and Z_{1,0} = sqrt(3/(8 pi)) sin(theta).
    s = sphhd.ScalarSpectrum(1)
    s[1, 0] = 1.0
    f = sphhd.differentiate(s, sphhd.ScalarSpectrum(1))
    nonzero = np.flatnonzero(np.abs(f.theta.to_numpy()) > 1e-15)
    assert len(nonzero) == 1
    assert f.theta[1, 0] == pytest.approx(-math.sqrt(2.0), rel=1e-14)
    assert np.all(f.phi.to_numpy() == 0.0)
