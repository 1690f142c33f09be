# -*- coding: utf-8 -*-
import random
from fractions import Fraction
from itertools import combinations_with_replacement

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from newtonbound.exceptions import BadInput, CapExceeded, ChainError, LengthMismatch
from newtonbound.polygon import (
    Chain,
    ChainMinimum,
    chain_area,
    chain_cost,
    lower_hull_indices,
    min_chain_bruteforce,
    min_chain_dynamic,
    min_chain_hull,
    project_onto_polygon,
)
from newtonbound.sequences import ESequence, RSequence
from strategies import chains, pointSets

E = ESequence((0, 0, 1, 2, 4))
R = RSequence((3, 2, 1, 1, 0))


@pytest.mark.parametrize('chain, expected', [
    ((1, 2, 3, 4, 5), 7),
    ((1, 5), 12),
    ((1, 2, 3, 5), 6),
    ((1, 3, 5), 7),
])
def test_chain_cost(chain, expected):
    assert chain_cost(E, R, Chain(chain)) == expected


def test_chain_cost_constant_r():
    assert chain_cost(E, RSequence((2, 2, 2, 2, 2)), Chain((1, 3, 5))) == 0


@pytest.mark.parametrize('chain', [(2, 5), (1, 4), (1, 3, 3, 5), (1,)])
def test_invalid_chain(chain):
    with pytest.raises(ChainError):
        chain_cost(E, R, Chain(chain))


@pytest.mark.parametrize('indices', [(1, 2.7, 5), (1, True, 5), [1, Fraction(5, 2), 5], (1, 'two', 5)])
def test_chain_rejects_inexact_indices(indices):
    with pytest.raises(BadInput):
        Chain(indices)


def test_chain_accepts_integral_values():
    assert Chain([1, Fraction(4, 2), 5]).indices == (1, 2, 5)


def test_length_mismatch():
    with pytest.raises(LengthMismatch):
        chain_cost(E, RSequence((1, 0)), Chain((1, 2)))


@pytest.mark.parametrize('e, r, value, witness', [
    ((0, 1, 3), (3, 1, 0), 6, (1, 2, 3)),
    ((0, 0, 1, 2, 4), (3, 2, 1, 1, 0), 6, (1, 2, 3, 5)),
    ((0, 1, 2), (2, 1, 0), 4, (1, 2, 3)),
])
def test_bruteforce_golden(e, r, value, witness):
    minimum = min_chain_bruteforce(ESequence(e), RSequence(r), cap=20)
    assert minimum.value == value
    assert minimum.witness.indices == witness


def test_bruteforce_cap():
    with pytest.raises(CapExceeded):
        min_chain_bruteforce(E, R, cap=4)
    size = 21
    with pytest.raises(CapExceeded):
        min_chain_bruteforce(ESequence(tuple(range(size))), RSequence((0,) * size), cap=20)


def test_bruteforce_cap_from_environment(monkeypatch):
    monkeypatch.setenv('NEWTONBOUND_LIMITS_BRUTEFORCE_CAP', '4')
    with pytest.raises(CapExceeded):
        min_chain_bruteforce(E, R)


def test_hull_golden():
    assert lower_hull_indices(E, R) == [2, 3, 5]
    minimum = min_chain_hull(E, R)
    assert minimum.value == 6
    assert minimum.witness.indices == (1, 2, 3, 5)
    assert min_chain_hull(ESequence((0, 1, 3)), RSequence((3, 1, 0))).value == 6
    assert min_chain_hull(E, RSequence((1, 1, 1, 1, 1))).value == 0


def test_chain_minimum_document():
    minimum = min_chain_hull(E, R)
    assert minimum.toDocument() == {'S': '6', 'witness': [1, 2, 3, 5]}
    assert ChainMinimum.fromDocument(minimum.toDocument()) == minimum


def test_small_grid_oracles_agree():
    rng = random.Random(5)
    for tail in combinations_with_replacement(range(5), 4):
        e = ESequence((0,) + tail)
        for _ in range(20):
            r = RSequence(tuple(sorted((Fraction(rng.randint(-30, 30), rng.randint(1, 6)) for _ in range(5)),
                                       reverse=True)))
            brute = min_chain_bruteforce(e, r, cap=20)
            assert min_chain_hull(e, r).value == brute.value
            assert min_chain_dynamic(e, r) == brute


@given(pointSets())
def test_hull_matches_oracles(points):
    e, r = points
    brute = min_chain_bruteforce(e, r, cap=20)
    assert min_chain_hull(e, r).value == brute.value
    assert min_chain_dynamic(e, r) == brute


@given(st.data())
def test_cost_is_twice_the_area(data):
    e, r = data.draw(pointSets())
    chain = Chain(data.draw(chains(len(e))))
    assert chain_cost(e, r, chain) == 2 * chain_area(e, r, chain)


@given(st.data())
def test_duplicate_point_keeps_minimum(data):
    e, r = data.draw(pointSets())
    j = data.draw(st.integers(1, len(e) - 1))
    e2 = ESequence(e.values[:j] + (e.at(j),) + e.values[j:])
    r2 = RSequence(r.values[:j] + (r.at(j),) + r.values[j:])
    assert min_chain_hull(e2, r2).value == min_chain_hull(e, r).value


@given(st.data())
def test_extra_point_never_raises_minimum(data):
    e, r = data.draw(pointSets())
    j = data.draw(st.integers(1, len(e) - 1))
    x = data.draw(st.integers(e.at(j), e.at(j + 1)))
    share = data.draw(st.fractions(min_value=0, max_value=1, max_denominator=10))
    y = r.at(j + 1) + (r.at(j) - r.at(j + 1)) * share
    e2 = ESequence(e.values[:j] + (x,) + e.values[j:])
    r2 = RSequence(r.values[:j] + (y,) + r.values[j:])
    assert min_chain_hull(e2, r2).value <= min_chain_hull(e, r).value


def hullHeight(e, r, x):
    hull = lower_hull_indices(e, r)
    for a, b in zip(hull, hull[1:]):
        if e.at(a) <= x <= e.at(b):
            return r.at(a) + (r.at(b) - r.at(a)) * Fraction(x - e.at(a), e.at(b) - e.at(a))
    return r.at(hull[0])


def test_point_above_path_keeps_minimum():
    e, r = ESequence((0, 1, 2)), RSequence((2, 0, 0))
    assert min_chain_hull(e, r).value == 2
    above = min_chain_bruteforce(ESequence((0, 1, 1, 2)), RSequence((2, 1, 0, 0)), cap=20)
    assert (above.value, above.witness.indices) == (2, (1, 3, 4))


@given(st.data())
def test_point_on_or_above_polygon_keeps_minimum(data):
    e, r = data.draw(pointSets())
    assume(e.at(len(e)) > 0)
    x = data.draw(st.integers(0, e.at(len(e)) - 1))
    position = sum(1 for value in e.values if value <= x)
    floor = max(hullHeight(e, r, x), r.at(position + 1))
    share = data.draw(st.fractions(min_value=0, max_value=1, max_denominator=10))
    y = floor + (r.at(position) - floor) * share
    e2 = ESequence(e.values[:position] + (x,) + e.values[position:])
    r2 = RSequence(r.values[:position] + (y,) + r.values[position:])
    minimum = min_chain_hull(e, r).value
    assert min_chain_hull(e2, r2).value == minimum
    assert min_chain_bruteforce(e2, r2, cap=20).value == minimum


@given(pointSets())
def test_projection_onto_polygon(points):
    e, r = points
    r = r.normalized()
    projected = project_onto_polygon(e, r)
    assert all(a <= b for a, b in zip(projected.values, r.values))
    assert projected.at(len(r)) == r.at(len(r))
    minimum = min_chain_hull(e, r).value
    assert min_chain_hull(e, projected).value == minimum
    assert chain_cost(e, projected, Chain(tuple(range(1, len(e) + 1)))) == minimum
