# -*- coding: utf-8 -*-
"""
Bound coefficients, the sharp constant B(s,t), the simplex-vertex analysis behind it
and the verifier for S <= B(s,t) * (sum_{j<=s} (r_j - r_N) + sum_{j>=t} (r_j - r_N)).

Classes:
    BoundCoefficient
    BoundConstant
    ConstraintCheck
    VertexInstance
    SimplexMaximum
    TightnessCertificate
    Prop1Report

Functions:
    coefficient_b
    bound_constant
    profile_bound_constant
    check_vertex_constraints
    vertex_instance
    simplex_maximize
    prop1_verify
    tightness_certificate
    rhs_sum
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Optional, Sequence, Tuple

import newtonbound
from newtonbound import log
from newtonbound.exceptions import (
    BadInput,
    DegenerateVertex,
    IndexDomainError,
    InvariantBreach,
    LengthMismatch,
    ProofViolation,
)
from newtonbound.polygon import (
    Chain,
    chain_cost,
    min_chain_bruteforce,
    min_chain_dynamic,
    min_chain_hull,
)
from newtonbound.sequences import (
    CurveProfile,
    ESequence,
    GapWindow,
    RSequence,
    f_sequence,
    require_instance,
    require_window,
)
from newtonbound.utils import rational2str, requireField, toInteger, toIntegerList, toRational, toRationalList

BRANCH_LOW = 'low'
BRANCH_HIGH = 'high'

VERDICT_HOLDS = 'holds'
VERDICT_VIOLATED = 'violated'


@dataclass(frozen=True)
class BoundCoefficient:
    """ B_i = e_i^2 / denominator on the low (2 <= i <= s) or high (t <= i <= N) branch. """
    index: int
    value: Fraction
    branch: str
    denominator: int

    def toDocument(self) -> dict:
        return {
            'index': self.index,
            'value': rational2str(self.value),
            'branch': self.branch,
            'denominator': self.denominator,
        }

    @classmethod
    def fromDocument(cls, document: dict) -> 'BoundCoefficient':
        branch = requireField(document, 'branch')
        if branch not in (BRANCH_LOW, BRANCH_HIGH):
            raise BadInput('branch: expected %s or %s, got %r' % (BRANCH_LOW, BRANCH_HIGH, branch), field='branch')
        return cls(
            index=toInteger(requireField(document, 'index'), 'index'),
            value=toRational(requireField(document, 'value'), 'value'),
            branch=branch,
            denominator=toInteger(requireField(document, 'denominator'), 'denominator'),
        )


class BoundConstant(NamedTuple):
    """ B(s,t) and the smallest index attaining it. """
    value: Fraction
    index: int


def _branchDenominator(e: ESequence, window: GapWindow, i: int) -> Tuple[str, int]:
    s, t = window.s, window.t
    if 2 <= i <= s:
        return BRANCH_LOW, (i - 1) * e.at(i) - sum(e.at(j) for j in range(2, i))
    return BRANCH_HIGH, (i - t + s) * e.at(i) - sum(e.at(j) for j in range(1, s + 1)) \
        - sum(e.at(j) for j in range(t, i))


def _requireAdmissible(e: ESequence, window: GapWindow, i: int):
    require_window(len(e), window, strict=False)
    if i not in window.admissible(len(e)):
        raise IndexDomainError('index %d outside [2, %d] U [%d, %d]' % (i, window.s, window.t, len(e)), index=i)


def coefficient_b(i: int, e: ESequence, window: GapWindow) -> BoundCoefficient:
    """ Returns the exact coefficient B_i. Defined as 0 when e_i = 0, where the formula
        reads 0/0.

        Raises:
            :exc:`~newtonbound.exceptions.IndexDomainError`: i outside [2, s] U [t, N].
            :exc:`~newtonbound.exceptions.InvariantBreach`: denominator below e_i.
    """
    _requireAdmissible(e, window, i)
    branch, denominator = _branchDenominator(e, window, i)
    if e.at(i) == 0:
        return BoundCoefficient(i, Fraction(0), branch, denominator)
    # e nondecreasing with e_1 = 0 forces denominator >= e_i
    if denominator < e.at(i):
        raise InvariantBreach('denominator %d below e_%d=%d' % (denominator, i, e.at(i)))
    return BoundCoefficient(i, Fraction(e.at(i) ** 2, denominator), branch, denominator)


def bound_coefficients(e: ESequence, window: GapWindow) -> List[BoundCoefficient]:
    require_window(len(e), window, strict=False)
    return [coefficient_b(i, e, window) for i in window.admissible(len(e))]


def bound_constant(e: ESequence, window: GapWindow) -> BoundConstant:
    """ B(s,t): the maximum of B_i over [2, s] U [t, N], with the smallest attaining index.
        With e = f_sequence(profile) this is A(s,t).
    """
    best = None
    for coefficient in bound_coefficients(e, window):
        if best is None or coefficient.value > best.value:
            best = coefficient
    return BoundConstant(best.value, best.index)


def profile_bound_constant(profile: CurveProfile, window: GapWindow) -> BoundConstant:
    """ A(s,t) for a curve profile; the window must satisfy 1 <= s < t <= N - 2. """
    require_window(profile.N, window, strict=True)
    return bound_constant(f_sequence(profile), window)


def _rhsCoefficient(k: int, window: GapWindow) -> int:
    # weight of sigma_k in sum_{j<=s} r_j + sum_{j>=t} r_j when r_N = 0
    if k <= window.s:
        return k - 1
    if k < window.t:
        return window.s
    return k - window.t + window.s


@dataclass(frozen=True)
class ConstraintCheck:
    """ Ordering: sigma_j / (e_j - e_{j-1}) nonincreasing and nonnegative, sigma_j = 0 on flat
        steps. Normalization: the weighted sum that must equal 1 at a vertex.
    """
    ordering: bool
    normalization: Fraction

    def holds(self) -> bool:
        return self.ordering and self.normalization == 1


def check_vertex_constraints(e: ESequence, window: GapWindow, sigma: Sequence[Fraction]) -> ConstraintCheck:
    """ Division-free check of the simplex constraints for sigma = (sigma_2, ..., sigma_N).
        Ratios are compared crosswise between consecutive non-flat steps.
    """
    n = len(e)
    if len(sigma) != n - 1:
        raise LengthMismatch('sigma needs %d entries (got %d)' % (n - 1, len(sigma)))
    sigmaAt = lambda j: Fraction(sigma[j - 2])
    step = lambda j: e.at(j) - e.at(j - 1)

    ordering = all(sigmaAt(j) >= 0 for j in range(2, n + 1))
    ordering = ordering and all(sigmaAt(j) == 0 for j in range(2, n + 1) if step(j) == 0)
    rising = [j for j in range(2, n + 1) if step(j) > 0]
    for a, b in zip(rising, rising[1:]):
        if sigmaAt(a) * step(b) < sigmaAt(b) * step(a):
            ordering = False
            break

    normalization = sum((_rhsCoefficient(k, window) * sigmaAt(k) for k in range(2, n + 1)), Fraction(0))
    return ConstraintCheck(ordering, normalization)


@dataclass(frozen=True)
class VertexInstance:
    """ Vertex of the constraint simplex: sigma_j = alpha (e_j - e_{j-1}) for j <= index and 0
        beyond, with r rebuilt from sigma so that r_N = 0.
    """
    index: int
    alpha: Fraction
    sigma: Tuple[Fraction, ...]
    r: RSequence
    branch: str

    def toDocument(self) -> dict:
        return {
            'index': self.index,
            'alpha': rational2str(self.alpha),
            'sigma': [rational2str(value) for value in self.sigma],
            'r': [rational2str(value) for value in self.r.values],
            'branch': self.branch,
        }

    @classmethod
    def fromDocument(cls, document: dict) -> 'VertexInstance':
        return cls(
            index=toInteger(requireField(document, 'index'), 'index'),
            alpha=toRational(requireField(document, 'alpha'), 'alpha'),
            sigma=toRationalList(requireField(document, 'sigma'), 'sigma'),
            r=RSequence(toRationalList(requireField(document, 'r'), 'r')),
            branch=requireField(document, 'branch'),
        )


def vertex_instance(e: ESequence, window: GapWindow, i: int) -> VertexInstance:
    """ Builds the simplex vertex for index i, alpha being the inverse branch denominator.

        Raises:
            :exc:`~newtonbound.exceptions.DegenerateVertex`: e_i = 0.
            :exc:`~newtonbound.exceptions.InvariantBreach`: the built vertex misses a constraint.
    """
    _requireAdmissible(e, window, i)
    if e.at(i) == 0:
        raise DegenerateVertex('vertex %d is degenerate: e_%d = 0' % (i, i), index=i)
    n = len(e)
    branch, denominator = _branchDenominator(e, window, i)
    alpha = Fraction(1, denominator)
    sigma = tuple(alpha * (e.at(j) - e.at(j - 1)) if j <= i else Fraction(0) for j in range(2, n + 1))

    values = [Fraction(0)] * n
    for j in range(n, 1, -1):
        values[j - 2] = values[j - 1] + sigma[j - 2]

    check = check_vertex_constraints(e, window, sigma)
    if not check.holds():
        raise InvariantBreach('vertex %d violates its constraints (ordering=%s, normalization=%s)'
                              % (i, check.ordering, check.normalization))
    return VertexInstance(i, alpha, sigma, RSequence(tuple(values)), branch)


def vertex_objective(e: ESequence, vertex: VertexInstance) -> Fraction:
    """ The linear objective sum_j sigma_j (e_{j-1} + e_j), which telescopes to alpha e_i^2. """
    return sum((vertex.sigma[j - 2] * (e.at(j - 1) + e.at(j)) for j in range(2, len(e) + 1)), Fraction(0))


@dataclass(frozen=True)
class SimplexMaximum:
    value: Fraction
    vertex: Optional[VertexInstance]

    @property
    def degenerate(self) -> bool:
        return self.vertex is None


def simplex_maximize(e: ESequence, window: GapWindow) -> SimplexMaximum:
    """ Maximizes the objective over the vertices of the constraint simplex. Returns
        (0, None) when every admissible e_i is 0.
    """
    require_window(len(e), window, strict=False)
    best = SimplexMaximum(Fraction(0), None)
    for i in window.admissible(len(e)):
        if e.at(i) == 0:
            continue
        vertex = vertex_instance(e, window, i)
        value = vertex_objective(e, vertex)
        if value != vertex.alpha * e.at(i) ** 2:
            raise InvariantBreach('vertex %d objective %s differs from alpha e_i^2' % (i, value))
        if best.vertex is None or value > best.value:
            best = SimplexMaximum(value, vertex)
    if best.degenerate:
        log.debug('All admissible vertices degenerate for window (%d, %d)', window.s, window.t)
    return best


def rhs_sum(r: RSequence, window: GapWindow) -> Fraction:
    """ sum_{j<=s} (r_j - r_N) + sum_{j>=t} (r_j - r_N). """
    last = r.values[-1]
    indices = list(range(1, window.s + 1)) + list(range(window.t, len(r) + 1))
    return sum((r.at(j) - last for j in indices), Fraction(0))


def _crossCheckedMinimum(e: ESequence, r: RSequence, cap: Optional[int]):
    cap = newtonbound.bruteforceCap() if cap is None else cap
    fast = min_chain_hull(e, r)
    oracle = min_chain_bruteforce(e, r, cap) if len(e) <= cap else min_chain_dynamic(e, r)
    if fast.value != oracle.value:
        raise InvariantBreach('hull minimum %s disagrees with oracle minimum %s' % (fast.value, oracle.value))
    return fast, oracle


@dataclass(frozen=True)
class Prop1Report:
    """ Exact evaluation of both sides of the inequality on one instance. """
    e: ESequence
    r: RSequence
    window: GapWindow
    S: Fraction
    witness: Chain
    B: Fraction
    argmax: int
    rhs_sum: Fraction
    bound: Fraction
    slack: Fraction

    @property
    def verdict(self) -> str:
        return VERDICT_HOLDS if self.slack >= 0 else VERDICT_VIOLATED

    def toDocument(self) -> dict:
        return {
            'e': list(self.e.values),
            'r': [rational2str(value) for value in self.r.values],
            's': self.window.s,
            't': self.window.t,
            'S': rational2str(self.S),
            'witness': list(self.witness.indices),
            'B': rational2str(self.B),
            'argmax': self.argmax,
            'rhs_sum': rational2str(self.rhs_sum),
            'bound': rational2str(self.bound),
            'slack': rational2str(self.slack),
            'verdict': self.verdict,
        }

    @classmethod
    def fromDocument(cls, document: dict) -> 'Prop1Report':
        return cls(
            e=ESequence(toIntegerList(requireField(document, 'e'), 'e')),
            r=RSequence(toRationalList(requireField(document, 'r'), 'r')),
            window=GapWindow(requireField(document, 's'), requireField(document, 't')),
            S=toRational(requireField(document, 'S'), 'S'),
            witness=Chain(toIntegerList(requireField(document, 'witness'), 'witness')),
            B=toRational(requireField(document, 'B'), 'B'),
            argmax=toInteger(requireField(document, 'argmax'), 'argmax'),
            rhs_sum=toRational(requireField(document, 'rhs_sum'), 'rhs_sum'),
            bound=toRational(requireField(document, 'bound'), 'bound'),
            slack=toRational(requireField(document, 'slack'), 'slack'),
        )


def prop1_verify(e, r, window: GapWindow, cap: Optional[int] = None) -> Prop1Report:
    """ Evaluates S and B(s,t) * rhs_sum on an instance. r is normalized internally. S comes
        from the hull and is cross-checked against the brute force (N <= cap) or the dynamic
        program. A negative slack is reported, not raised.

        Raises:
            :exc:`~newtonbound.exceptions.BadInput`: the instance fails validation.
            :exc:`~newtonbound.exceptions.InvariantBreach`: the minimizers disagree.
    """
    e, r = require_instance(e, r, window)
    normalized = r.normalized()
    minimum, _ = _crossCheckedMinimum(e, normalized, cap)
    constant = bound_constant(e, window)
    total = rhs_sum(r, window)
    bound = constant.value * total
    report = Prop1Report(e, r, window, minimum.value, minimum.witness, constant.value, constant.index,
                         total, bound, bound - minimum.value)
    if report.verdict == VERDICT_VIOLATED:
        log.warning('Inequality violated: e=%s r=%s window=(%d, %d) slack=%s', list(e.values),
                    [rational2str(value) for value in r.values], window.s, window.t, report.slack)
    return report


@dataclass(frozen=True)
class TightnessCertificate:
    """ Equality witness S(e, r_vertex) = B(s,t) * rhs_sum at the maximizing vertex. Carries
        enough data to re-check with chain_cost alone.
    """
    e: ESequence
    window: GapWindow
    vertex: VertexInstance
    S: Fraction
    witness: Chain
    rhs_sum: Fraction
    bound: Fraction

    def toDocument(self) -> dict:
        return {
            'e': list(self.e.values),
            's': self.window.s,
            't': self.window.t,
            'vertex': self.vertex.toDocument(),
            'S': rational2str(self.S),
            'witness': list(self.witness.indices),
            'rhs_sum': rational2str(self.rhs_sum),
            'bound': rational2str(self.bound),
        }

    @classmethod
    def fromDocument(cls, document: dict) -> 'TightnessCertificate':
        return cls(
            e=ESequence(toIntegerList(requireField(document, 'e'), 'e')),
            window=GapWindow(requireField(document, 's'), requireField(document, 't')),
            vertex=VertexInstance.fromDocument(requireField(document, 'vertex')),
            S=toRational(requireField(document, 'S'), 'S'),
            witness=Chain(toIntegerList(requireField(document, 'witness'), 'witness')),
            rhs_sum=toRational(requireField(document, 'rhs_sum'), 'rhs_sum'),
            bound=toRational(requireField(document, 'bound'), 'bound'),
        )

    def rows(self) -> List[dict]:
        """ One row per index j: e_j, sigma_j (empty for j = 1), the vertex r_j and whether j
            lies on the witness chain.
        """
        witness = set(self.witness.indices)
        return [{
            'j': j,
            'e': self.e.at(j),
            'sigma': rational2str(self.vertex.sigma[j - 2]) if j >= 2 else '',
            'r': rational2str(self.vertex.r.at(j)),
            'on_witness': j in witness,
        } for j in range(1, len(self.e) + 1)]

    def recheck(self) -> bool:
        """ Re-verifies the equality using only chain_cost on the stored witness. """
        return chain_cost(self.e, self.vertex.r, self.witness) == self.S == self.bound * self.rhs_sum


def tightness_certificate(e: ESequence, window: GapWindow, cap: Optional[int] = None) -> TightnessCertificate:
    """ Builds the vertex at the argmax of B(s,t) and proves S = B(s,t) * rhs_sum there by an
        independent chain minimization.

        Raises:
            :exc:`~newtonbound.exceptions.DegenerateVertex`: every admissible e_i is 0.
            :exc:`~newtonbound.exceptions.ProofViolation`: the equality fails.
    """
    constant = bound_constant(e, window)
    if constant.value == 0:
        raise DegenerateVertex('degenerate sequence: every admissible e_i is 0')
    vertex = vertex_instance(e, window, constant.index)
    _, oracle = _crossCheckedMinimum(e, vertex.r, cap)
    total = rhs_sum(vertex.r, window)
    certificate = TightnessCertificate(e, window, vertex, oracle.value, oracle.witness, total,
                                       constant.value * total)
    if certificate.S != certificate.bound or total != 1:
        raise ProofViolation('tightness fails at vertex %d: S=%s, bound=%s, rhs_sum=%s'
                             % (vertex.index, certificate.S, certificate.bound, total),
                             document=certificate.toDocument())
    return certificate
