# -*- coding: utf-8 -*-
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from newtonbound.bounds import prop1_verify
from newtonbound.exceptions import CapViolation, LengthMismatch, MonotonicityError, NormError, WindowError
from newtonbound.heights import (
    DualData,
    HeightInput,
    MinimaProfile,
    MuCoefficientAudit,
    NormCertificate,
    degree_drop_sequence,
    dual_matrices,
    induced_r_sequence,
    mu_coefficient_audit,
    theorem1_lhs,
    v_norm_certify,
)
from newtonbound.sequences import CurveProfile, GapWindow


def heightInput(mu, d=5, g=0, s=1, t=3, h_norm=0, c_d=0):
    return HeightInput(h_norm, c_d, CurveProfile(d, g), GapWindow(s, t), MinimaProfile(mu))


@pytest.mark.parametrize('mu, expected', [
    ((0, 0, 0, 0, 0, 0), 0),
    ((1, 1, 1, 1, 1, 1), 10),
    ((0, 1, 2, 3, 4, 5), Fraction(176, 7)),
])
def test_theorem1_lhs(mu, expected):
    assert theorem1_lhs(heightInput(mu)) == expected


def test_theorem1_lhs_constants_pass_through():
    assert theorem1_lhs(heightInput((0,) * 6, h_norm='7/2', c_d=-3)) == Fraction(1, 2)


def test_height_input_validation():
    with pytest.raises(MonotonicityError):
        heightInput((0, 2, 1, 3, 4, 5))
    with pytest.raises(LengthMismatch):
        heightInput((0, 1, 2))
    with pytest.raises(WindowError):
        heightInput((0,) * 6, s=1, t=5)


def test_height_input_document():
    data = heightInput((0, 1, 2, 3, 4, 5), h_norm='1/3')
    assert HeightInput.fromDocument(data.toDocument()) == data


def test_minima_shift():
    minima = MinimaProfile((0, 1, 2))
    assert minima.shifted('1/2').mu == (Fraction(1, 2), Fraction(3, 2), Fraction(5, 2))


@pytest.mark.parametrize('d, g, s, t, total', [(5, 0, 1, 3, 10), (7, 2, 2, 4, 14)])
def test_mu_coefficient_audit(d, g, s, t, total):
    audit = mu_coefficient_audit(CurveProfile(d, g), GapWindow(s, t))
    assert audit.total == total
    assert MuCoefficientAudit.fromDocument(audit.toDocument()) == audit
    assert len(audit.rows()) == CurveProfile(d, g).N


def test_mu_coefficient_audit_golden():
    audit = mu_coefficient_audit(CurveProfile(5, 0), GapWindow(1, 3))
    a = Fraction(16, 7)
    assert audit.coefficients == (10 - 5 * a + a, a, a, a, 0, a)


def test_mu_coefficient_audit_no_strict_window():
    with pytest.raises(WindowError):
        mu_coefficient_audit(CurveProfile(3, 1), GapWindow(1, 2))


def test_shift_covariance():
    rng = random.Random(11)
    for _ in range(1000):
        d = rng.randint(3, 12)
        g = rng.randint(0, (d - 1) // 2)
        profile = CurveProfile(d, g)
        if profile.N < 4:
            continue
        s = rng.randint(1, profile.N - 3)
        t = rng.randint(s + 1, profile.N - 2)
        mu = sorted(Fraction(rng.randint(-50, 50), rng.randint(1, 9)) for _ in range(profile.N))
        shift = Fraction(rng.randint(-20, 20), rng.randint(1, 5))
        data = HeightInput(0, 0, profile, GapWindow(s, t), MinimaProfile(mu))
        moved = HeightInput(0, 0, profile, GapWindow(s, t), MinimaProfile(mu).shifted(shift))
        assert theorem1_lhs(moved) - theorem1_lhs(data) == 2 * d * shift


@pytest.mark.slow
def test_mu_coefficient_identity_grid():
    for d in range(1, 31):
        for g in range(0, (d - 1) // 2 + 1):
            profile = CurveProfile(d, g)
            for s in range(1, profile.N - 2):
                for t in range(s + 1, profile.N - 1):
                    assert mu_coefficient_audit(profile, GapWindow(s, t)).total == 2 * d


def test_dual_matrices_single_coefficient():
    dual = dual_matrices((5,), GapWindow(1, 3), 4, 10)
    assert dual.W[1] == (0, 1, 5, 0)
    assert dual.V[2] == (0, -5, 1, 0)
    assert DualData.fromDocument(dual.toDocument()) == dual


def test_dual_matrices_two_coefficients():
    dual = dual_matrices((2, 3), GapWindow(1, 4), 6, 10)
    assert dual.V[2] == (0, -2, 1, 0, 0, 0)
    assert dual.V[3] == (0, 6, -3, 1, 0, 0)


def test_dual_matrices_zero_coefficients_are_identity():
    dual = dual_matrices((0, 0, 0), GapWindow(1, 5), 6, 1)
    identity = tuple(tuple(int(i == k) for k in range(6)) for i in range(6))
    assert dual.W == dual.V == identity


def test_dual_matrices_errors():
    with pytest.raises(LengthMismatch):
        dual_matrices((1, 2), GapWindow(1, 3), 4, 10)
    with pytest.raises(CapViolation):
        dual_matrices((11,), GapWindow(1, 3), 4, 10)


@given(st.data())
def test_dual_matrices_random(data):
    size = data.draw(st.integers(3, 9))
    s = data.draw(st.integers(1, size - 1))
    t = data.draw(st.integers(s + 1, size))
    n = data.draw(st.lists(st.integers(-100, 100), min_size=t - 1 - s, max_size=t - 1 - s))
    dual = dual_matrices(n, GapWindow(s, t), size, 100)
    for i in range(size):
        for j in range(size):
            pairing = sum(w * v for w, v in zip(dual.W[i], dual.V[j]))
            assert pairing == int(i == j)


@pytest.mark.slow
def test_dual_matrices_thousand_vectors():
    rng = random.Random(3)
    for _ in range(1000):
        size = rng.randint(3, 15)
        s = rng.randint(1, size - 1)
        t = rng.randint(s + 1, size)
        n = [rng.randint(-100, 100) for _ in range(t - 1 - s)]
        dual_matrices(n, GapWindow(s, t), size, 100)


@pytest.mark.parametrize('n, window, size, norms, minimal', [
    ((5,), GapWindow(1, 3), 4, (8, 4, 2, 1), Fraction(11, 2)),
    ((2, 3), GapWindow(1, 4), 6, (32, 16, 8, 4, 2, 1), Fraction(31, 4)),
])
def test_v_norm_certify(n, window, size, norms, minimal):
    certificate = v_norm_certify(dual_matrices(n, window, size, 10), norms)
    assert certificate.minimal_inflation == minimal
    assert not certificate.all_passed
    assert v_norm_certify(dual_matrices(n, window, size, 10), norms, minimal).all_passed
    assert NormCertificate.fromDocument(certificate.toDocument()) == certificate


def test_v_norm_certify_golden_bounds():
    certificate = v_norm_certify(dual_matrices((2, 3), GapWindow(1, 4), 6, 10), (32, 16, 8, 4, 2, 1))
    assert certificate.bounds[3] == 124
    assert certificate.targets[3] == 16
    certificate = v_norm_certify(dual_matrices((5,), GapWindow(1, 3), 4, 10), (8, 4, 2, 1))
    assert certificate.bounds[2] == 22


def test_v_norm_certify_zero_coefficients():
    norms = (9, 7, 7, 3, 1)
    certificate = v_norm_certify(dual_matrices((0, 0), GapWindow(1, 4), 5, 0), norms)
    assert certificate.bounds == norms
    assert certificate.minimal_inflation == 1


@pytest.mark.parametrize('norms, inflation', [
    ((8, 4, 2, 0), 1),
    ((8, 4, 5, 1), 1),
    ((8, 4, 2, 1), Fraction(1, 2)),
])
def test_v_norm_certify_errors(norms, inflation):
    with pytest.raises(NormError):
        v_norm_certify(dual_matrices((5,), GapWindow(1, 3), 4, 10), norms, inflation)


@given(st.lists(st.integers(-20, 20), min_size=3, max_size=3), st.integers(0, 2), st.integers(1, 5))
def test_norm_bounds_grow_with_coefficients(n, position, extra):
    window = GapWindow(1, 5)
    norms = (40, 20, 10, 5, 2, 1)
    larger = list(n)
    larger[position] += extra if larger[position] >= 0 else -extra
    small = v_norm_certify(dual_matrices(n, window, 6, 30), norms)
    large = v_norm_certify(dual_matrices(larger, window, 6, 30), norms)
    assert all(a <= b for a, b in zip(small.bounds, large.bounds))


def test_degree_drop_and_induced_sequences():
    assert degree_drop_sequence(5, (5, 5, 4, 3)).values == (0, 0, 1, 2)
    with pytest.raises(MonotonicityError):
        degree_drop_sequence(5, (5, 3, 4))

    minima = MinimaProfile((0, 1, 2, 3, 4, 5))
    r = induced_r_sequence(minima, GapWindow(1, 3), c1=1)
    assert r.values == (6, 5, 5, 3, 2, 1)


def test_induced_instance_satisfies_inequality():
    e = degree_drop_sequence(7, (7, 6, 6, 6, 4, 2))
    r = induced_r_sequence(MinimaProfile((0, 1, 2, 3, 4, 5)), GapWindow(2, 4))
    assert prop1_verify(e, r, GapWindow(2, 4)).slack >= 0
