import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.optimize import bisect

from polarlattice.couplings import (
    DipolePair,
    collinear_transfer,
    magic_angle,
    onsite_angle,
    retarded_transfer,
    static_onsite,
)
from polarlattice.errors import DomainError
from polarlattice.units import photon_wavenumber

# mpmath, 30 digits, direct evaluation of -2 e2 mu^2/R^3 (cos qR + qR sin qR)
J1_REF_GEOMETRY = -7.94328156854935571e-08
Q_2EV = photon_wavenumber(2.0)


def test_retarded_collinear_value():
    pair = DipolePair((4, 0, 0), (4, 0, 0), (2000, 0, 0), Q_2EV)
    assert retarded_transfer(pair) == pytest.approx(J1_REF_GEOMETRY, rel=1e-12)


def test_orthogonal_dipoles_axial_separation_vanish():
    for q in (0.0, 1e-3, 0.05):
        assert retarded_transfer(DipolePair((4, 0, 0), (0, 4, 0), (100, 0, 0), q)) == 0.0


def test_retarded_static_limit():
    pair = DipolePair((4, 0, 0), (4, 0, 0), (80, 0, 0), 0.0)
    assert retarded_transfer(pair) == pytest.approx(-8.999778125e-4, rel=1e-13)


def test_singular_pair():
    with pytest.raises(DomainError):
        DipolePair((1, 0, 0), (1, 0, 0), (0, 0, 0), 0.0)
    with pytest.raises(DomainError):
        collinear_transfer(4, 0, 0.1)
    with pytest.raises(DomainError):
        static_onsite(4, 0)


def test_collinear_values():
    assert collinear_transfer(4, 2000, Q_2EV) == pytest.approx(J1_REF_GEOMETRY, rel=1e-12)
    assert collinear_transfer(4, 2000, 0.0) == pytest.approx(-5.7598580e-8, rel=1e-7)


def test_collinear_first_root():
    bracket = lambda x: math.cos(x) + x * math.sin(x)  # noqa: E731
    x0 = bisect(bracket, 2.0, 3.5, xtol=1e-14)
    assert x0 == pytest.approx(2.79838604578388714, abs=1e-12)
    R = 2000.0
    assert abs(collinear_transfer(4, R, x0 / R)) < 1e-20


def test_static_onsite():
    assert static_onsite(4, 80) == pytest.approx(-8.999778125e-4, rel=1e-14)
    assert static_onsite(4, 160) == pytest.approx(-1.124972265625e-4, rel=1e-14)
    assert static_onsite(0, 80) == 0


def test_onsite_angle_values():
    scale = 4.4998890625e-4
    assert onsite_angle(4, 80, 0.0) == pytest.approx(-2 * scale, rel=1e-14)
    assert onsite_angle(4, 80, math.pi / 2) == pytest.approx(scale, rel=1e-14)
    assert abs(onsite_angle(4, 80, magic_angle())) < 1e-18


def test_magic_angle():
    assert magic_angle() == pytest.approx(0.9553166181245093, rel=1e-15)
    assert math.degrees(magic_angle()) == pytest.approx(54.7356, abs=1e-4)


vec = st.tuples(*[st.floats(-10, 10)] * 3)
sep = st.tuples(*[st.floats(-500, 500)] * 3).filter(lambda v: np.linalg.norm(v) > 1.0)


@given(vec, vec, sep, st.floats(0, 0.01))
def test_retarded_symmetries(mu1, mu2, R, q):
    ref = retarded_transfer(DipolePair(mu1, mu2, R, q))
    swapped = retarded_transfer(DipolePair(mu2, mu1, R, q))
    flipped = retarded_transfer(DipolePair(mu1, mu2, tuple(-x for x in R), q))
    scale = np.linalg.norm(mu1) * np.linalg.norm(mu2) * 14.4 / np.linalg.norm(R) ** 3 * (1 + (q * np.linalg.norm(R)) ** 2)
    assert swapped == pytest.approx(ref, rel=1e-12, abs=1e-12 * scale)
    assert flipped == pytest.approx(ref, rel=1e-12, abs=1e-12 * scale)


def test_collinear_consistency_random():
    rng = np.random.default_rng(7)
    for _ in range(1000):
        mu, R, q = rng.uniform(0.1, 10), rng.uniform(10, 5000), rng.uniform(0, 2e-3)
        if abs(math.cos(q * R) + q * R * math.sin(q * R)) < 1e-3:
            continue  # near a root relative error is meaningless
        full = retarded_transfer(DipolePair((mu, 0, 0), (mu, 0, 0), (R, 0, 0), q))
        assert full == pytest.approx(collinear_transfer(mu, R, q), rel=1e-12)


@settings(max_examples=200)
@given(st.floats(0.1, 10), st.floats(1, 1000))
def test_static_consistency(mu, R):
    full = retarded_transfer(DipolePair((mu, 0, 0), (mu, 0, 0), (R, 0, 0), 0.0))
    assert full == pytest.approx(static_onsite(mu, R), rel=1e-12)


@settings(max_examples=300)
@given(st.floats(0.1, 10), st.floats(1, 1000), st.floats(0, 2 * math.pi))
def test_angle_law_against_tensor(mu, R, theta):
    d = (mu * math.cos(theta), mu * math.sin(theta), 0.0)
    full = retarded_transfer(DipolePair(d, d, (R, 0, 0), 0.0))
    scale = 14.399645 * mu**2 / R**3
    assert full == pytest.approx(onsite_angle(mu, R, theta), rel=1e-10, abs=1e-13 * scale)


@given(st.floats(0.1, 10), st.floats(1, 1000))
def test_inverse_cube_scaling(mu, R):
    assert static_onsite(mu, 2 * R) == pytest.approx(static_onsite(mu, R) / 8, rel=1e-15)
