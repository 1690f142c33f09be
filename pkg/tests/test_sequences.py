# -*- coding: utf-8 -*-
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from newtonbound.exceptions import (
    BadInput,
    LengthMismatch,
    MonotonicityError,
    PlateauError,
    ProfileConstraintError,
    WindowError,
)
from newtonbound.sequences import (
    CurveProfile,
    ESequence,
    GapWindow,
    RSequence,
    f_sequence,
    require_instance,
    require_window,
    validate_instance,
    validate_window,
)
from newtonbound.utils import rational2str, toInteger, toRational


@pytest.mark.parametrize('d, g, expected', [
    (5, 0, (0, 1, 2, 3, 4, 5)),
    (7, 2, (0, 1, 2, 3, 5, 7)),
    (3, 1, (0, 1, 3)),
])
def test_f_sequence_golden(d, g, expected):
    assert f_sequence(CurveProfile(d, g)).values == expected


def test_f_sequence_shape():
    for d in range(1, 31):
        for g in range(0, (d - 1) // 2 + 1):
            profile = CurveProfile(d, g)
            values = f_sequence(profile).values
            assert len(values) == profile.N == d + 1 - g
            assert values[0] == 0 and values[-1] == d
            gaps = [b - a for a, b in zip(values, values[1:])]
            assert set(gaps) <= {1, 2}
            assert gaps.count(2) == g


def test_profile_constraints():
    with pytest.raises(ProfileConstraintError, match='d >= 2g\\+1'):
        CurveProfile(4, 2)
    with pytest.raises(ProfileConstraintError, match='g >= 0'):
        CurveProfile(5, -1)
    with pytest.raises(BadInput):
        CurveProfile(5.0, 0)


@pytest.mark.parametrize('n, s, t, strict, accepted', [
    (6, 1, 3, True, True),
    (4, 1, 3, True, False),
    (4, 1, 3, False, True),
    (5, 2, 3, False, True),
    (5, 0, 3, False, False),
    (5, 3, 3, False, False),
    (2, 1, 2, False, False),
])
def test_validate_window(n, s, t, strict, accepted):
    assert bool(validate_window(n, GapWindow(s, t), strict)) is accepted


def test_window_verdict_names_failed_bound():
    verdict = validate_window(4, GapWindow(1, 3), strict=True)
    assert verdict.failed_bound == 't <= N-2'
    with pytest.raises(WindowError):
        require_window(4, GapWindow(1, 3), strict=True)


def test_admissible_indices():
    assert GapWindow(2, 4).admissible(6) == (2, 4, 5, 6)
    assert GapWindow(1, 3).admissible(5) == (3, 4, 5)


def test_validate_instance_accepts():
    verdict = validate_instance((0, 0, 1, 2, 4), (3, 2, 1, 1, 0), GapWindow(1, 3))
    assert verdict
    assert verdict.e.values == (0, 0, 1, 2, 4)


def test_validate_instance_normalizes():
    verdict = validate_instance((0, 1, 1, 2), (1, 1, 1, 1), GapWindow(2, 3))
    assert verdict.normalized.values == (0, 0, 0, 0)


def test_validate_instance_rejects_decreasing_e():
    verdict = validate_instance((0, 2, 1), (3, 2, 1), GapWindow(1, 2))
    assert not verdict
    assert verdict.reason == 'e-monotone'
    assert verdict.index == 3


@pytest.mark.parametrize('e, r, window, reason, error', [
    ((0, 1, 2), (1, 0), GapWindow(1, 2), 'length', LengthMismatch),
    ((1, 1, 2), (1, 1, 0), GapWindow(1, 2), 'e-monotone', MonotonicityError),
    ((0, 1, 2), (0, 1, 0), GapWindow(1, 2), 'r-monotone', MonotonicityError),
    ((0, 1, 2), (1, 1, 0), GapWindow(2, 5), 'window', WindowError),
    ((0, 1, 2, 3), (1, 1, 0, 0), GapWindow(1, 3), 'plateau', PlateauError),
    ((0, 1, 2), (1, 0.5, 0), GapWindow(1, 2), 'value', BadInput),
    (None, (1, 0, 0), GapWindow(1, 2), 'value', BadInput),
    ((0, 1, 2), 3, GapWindow(1, 2), 'value', BadInput),
])
def test_validate_instance_reasons(e, r, window, reason, error):
    verdict = validate_instance(e, r, window)
    assert verdict.reason == reason
    with pytest.raises(error):
        verdict.raise_for_verdict()


def test_empty_plateau_is_vacuous():
    e, r = require_instance((0, 1, 3), (2, 1, 0), GapWindow(1, 2))
    assert len(e) == len(r) == 3


@given(st.lists(st.integers(-5, 5), max_size=8),
       st.lists(st.one_of(st.integers(-5, 5), st.fractions(max_denominator=7)), max_size=8),
       st.integers(-3, 10), st.integers(-3, 10))
def test_validation_is_total(e, r, s, t):
    verdict = validate_instance(e, r, GapWindow(s, t))
    assert verdict.accepted or verdict.reason is not None


@given(st.fractions())
def test_rational_text_form_round_trips(value):
    assert toRational(rational2str(value)) == value


def test_rational_text_form():
    assert rational2str(Fraction(26, 9)) == '26/9'
    assert rational2str(Fraction(12, 2)) == '6'
    assert toRational('-3/6') == Fraction(-1, 2)
    assert toInteger('4/2') == 2


@pytest.mark.parametrize('value', [0.5, True, '0.5', '1e3', 'abc', '3/0', None, [1]])
def test_rational_rejects_inexact(value):
    with pytest.raises(BadInput):
        toRational(value)


def test_r_sequence_helpers():
    r = RSequence((Fraction(5, 2), 1, 1))
    assert r.normalized().values == (Fraction(3, 2), 0, 0)
    assert r.scaled(2).values == (5, 2, 2)
    assert not r.isConstant()
    with pytest.raises(BadInput):
        r.scaled(0)
    assert ESequence((0, 0, 0)).isZero()
