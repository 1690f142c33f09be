# -*- coding: utf-8 -*-
"""
Chain minimization over the points (e_j, r_j) and its Newton polygon reading.

A chain is an increasing index list 1 = i_0 < ... < i_l = N. Its cost is the
trapezoid sum of (r_a - r_b)(e_a + e_b) over consecutive indices, which is twice
the area enclosed by the chain path and the r-axis. The minimum S is attained on
the lower convex hull of the points.

Classes:
    Chain
    ChainMinimum

Functions:
    chain_cost
    chain_area
    min_chain_bruteforce
    min_chain_dynamic
    min_chain_hull
    lower_hull_indices
    project_onto_polygon
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import List, Optional, Sequence, Tuple

import newtonbound
from newtonbound import log
from newtonbound.exceptions import CapExceeded, ChainError, LengthMismatch
from newtonbound.sequences import ESequence, RSequence
from newtonbound.utils import rational2str, requireField, toIntegerList, toRational


@dataclass(frozen=True)
class Chain:
    """ Strictly increasing 1-based index list from 1 to N. """
    indices: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'indices', toIntegerList(self.indices, 'chain'))

    def __len__(self):
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def segments(self):
        return zip(self.indices, self.indices[1:])

    def check(self, n: int) -> 'Chain':
        """ Raises :exc:`~newtonbound.exceptions.ChainError` unless the chain is valid for length n. """
        indices = self.indices
        if len(indices) < 2:
            raise ChainError('chain needs at least two indices (got %s)' % list(indices))
        if indices[0] != 1:
            raise ChainError('chain must start at 1 (got %d)' % indices[0], index=indices[0])
        if indices[-1] != n:
            raise ChainError('chain must end at N=%d (got %d)' % (n, indices[-1]), index=indices[-1])
        for a, b in self.segments():
            if b <= a:
                raise ChainError('chain must increase strictly (%d then %d)' % (a, b), index=b)
        return self


@dataclass(frozen=True)
class ChainMinimum:
    """ The minimum S together with a chain attaining it. """
    value: Fraction
    witness: Chain

    def toDocument(self) -> dict:
        return {'S': rational2str(self.value), 'witness': list(self.witness.indices)}

    @classmethod
    def fromDocument(cls, document: dict) -> 'ChainMinimum':
        return cls(toRational(requireField(document, 'S'), 'S'),
                   Chain(toIntegerList(requireField(document, 'witness'), 'witness')))


def _checkLengths(e: ESequence, r: RSequence) -> int:
    if len(e) != len(r):
        raise LengthMismatch('length mismatch: e has %d entries, r has %d' % (len(e), len(r)))
    if len(e) < 2:
        raise ChainError('chains need N >= 2 (got N=%d)' % len(e))
    return len(e)


def _segmentCost(e: ESequence, r: RSequence, a: int, b: int) -> Fraction:
    return (r.at(a) - r.at(b)) * (e.at(a) + e.at(b))


def chain_cost(e: ESequence, r: RSequence, chain: Chain) -> Fraction:
    """ Returns the exact trapezoid sum of (r_a - r_b)(e_a + e_b) along chain.

        Raises:
            :exc:`~newtonbound.exceptions.ChainError`: chain invalid for N.
            :exc:`~newtonbound.exceptions.LengthMismatch`: e and r differ in length.
    """
    n = _checkLengths(e, r)
    chain.check(n)
    return sum((_segmentCost(e, r, a, b) for a, b in chain.segments()), Fraction(0))


def chain_area(e: ESequence, r: RSequence, chain: Chain) -> Fraction:
    """ Shoelace area of the polygon bounded by the chain path, the horizontal line
        r = r_N and the r-axis. Equals chain_cost / 2 for every chain.
    """
    n = _checkLengths(e, r)
    chain.check(n)
    vertices = [(Fraction(e.at(i)), r.at(i)) for i in chain]
    vertices.append((Fraction(0), r.at(n)))
    twiceArea = Fraction(0)
    for (x0, y0), (x1, y1) in zip(vertices, vertices[1:] + vertices[:1]):
        twiceArea += x0 * y1 - x1 * y0
    return abs(twiceArea) / 2


def _integerScale(r: RSequence) -> Tuple[int, List[int]]:
    """ Common denominator L of r and the integers r_j * L. """
    scale = reduce(lambda x, y: x * y // math.gcd(x, y), (value.denominator for value in r.values), 1)
    return scale, [int(value * scale) for value in r.values]


def min_chain_bruteforce(e: ESequence, r: RSequence, cap: Optional[int] = None) -> ChainMinimum:
    """ Exhaustive minimum over all 2^(N-2) chains. Chains are visited in lexicographic
        order and only a strictly smaller cost replaces the incumbent, so the witness is
        the lexicographically smallest minimizer.

        Parameters:
            cap (int): Largest N accepted; defaults to :func:`newtonbound.bruteforceCap`.

        Raises:
            :exc:`~newtonbound.exceptions.CapExceeded`: N is larger than cap.
    """
    n = _checkLengths(e, r)
    cap = newtonbound.bruteforceCap() if cap is None else cap
    if n > cap:
        raise CapExceeded('brute-force chain enumeration refused: N=%d exceeds cap %d' % (n, cap))

    scale, scaled = _integerScale(r)
    values = e.values
    cost = [[(scaled[a] - scaled[b]) * (values[a] + values[b]) for b in range(n)] for a in range(n)]
    best = [None, None]
    path = [0]

    def visit(last, accumulated):
        for following in range(last + 1, n):
            total = accumulated + cost[last][following]
            if following == n - 1:
                if best[0] is None or total < best[0]:
                    best[0] = total
                    best[1] = tuple(index + 1 for index in path) + (n,)
            else:
                path.append(following)
                visit(following, total)
                path.pop()

    visit(0, 0)
    return ChainMinimum(Fraction(best[0], scale), Chain(best[1]))


def min_chain_dynamic(e: ESequence, r: RSequence) -> ChainMinimum:
    """ O(N^2) shortest-chain dynamic program; same value and witness as the brute force. """
    n = _checkLengths(e, r)
    best: List[Tuple[Fraction, Tuple[int, ...]]] = [(Fraction(0), (1,))]
    for b in range(2, n + 1):
        best.append(min((best[a - 1][0] + _segmentCost(e, r, a, b), best[a - 1][1] + (b,)) for a in range(1, b)))
    value, witness = best[-1]
    return ChainMinimum(value, Chain(witness))


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def lower_hull_indices(e: ESequence, r: RSequence) -> List[int]:
    """ 1-based indices of the lower convex hull vertices of the points (e_j, r_j), left to
        right. Only the lowest point of every abscissa is a candidate and collinear middle
        points are dropped.
    """
    n = _checkLengths(e, r)
    candidates = []
    for i in range(1, n + 1):
        if candidates and e.at(candidates[-1]) == e.at(i):
            candidates[-1] = i
        else:
            candidates.append(i)

    at = lambda j: (e.at(j), r.at(j))
    hull: List[int] = []
    for i in candidates:
        point = at(i)
        while len(hull) >= 2 and _cross(at(hull[-2]), at(hull[-1]), point) <= 0:
            hull.pop()
        hull.append(i)
    return hull


def min_chain_hull(e: ESequence, r: RSequence) -> ChainMinimum:
    """ Chain minimum read off the Newton polygon: start at point 1, drop to the lowest
        point over e = 0 and follow the lower convex hull to point N.
    """
    hull = lower_hull_indices(e, r)
    witness = Chain(tuple(hull) if hull[0] == 1 else (1,) + tuple(hull))
    return ChainMinimum(chain_cost(e, r, witness), witness)


def _hullValue(e: ESequence, r: RSequence, hull: Sequence[int], x: int) -> Fraction:
    for a, b in zip(hull, hull[1:]):
        if e.at(a) <= x <= e.at(b):
            ea, eb = e.at(a), e.at(b)
            return r.at(a) + (r.at(b) - r.at(a)) * Fraction(x - ea, eb - ea)
    return r.at(hull[0])


def project_onto_polygon(e: ESequence, r: RSequence) -> RSequence:
    """ Moves every point down onto the Newton polygon. The result is pointwise at most r,
        still nonincreasing, and has the same chain minimum.
    """
    hull = lower_hull_indices(e, r)
    projected = RSequence(tuple(_hullValue(e, r, hull, value) for value in e.values))
    log.debug('Projected %d points onto a polygon with %d vertices', len(e), len(hull))
    return projected
