# -*- coding: utf-8 -*-
"""
Height-side computations: the left-hand side of the height inequality with its
coefficient audit, the dual-basis change of the modified functionals
w_i = y_i + n_i y_{i+1} and exact norm certificates for the dual vectors.

The arithmetic constants (the height itself, c(d), the cap on |n_i|, the
inflation exp c_1(d)) are never computed here; they are caller parameters.

Classes:
    MinimaProfile
    HeightInput
    MuCoefficientAudit
    DualData
    NormCertificate

Functions:
    theorem1_lhs
    mu_coefficient_audit
    dual_matrices
    v_norm_certify
    degree_drop_sequence
    induced_r_sequence
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from sympy import Matrix, eye

from newtonbound import log
from newtonbound.bounds import profile_bound_constant
from newtonbound.exceptions import CapViolation, InvariantBreach, LengthMismatch, MonotonicityError, NormError
from newtonbound.sequences import CurveProfile, ESequence, GapWindow, RSequence, require_window
from newtonbound.utils import rational2str, requireField, toInteger, toIntegerList, toRational, toRationalList

IntMatrix = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class MinimaProfile:
    """ Logarithmic successive minima mu_1 <= ... <= mu_N. """
    mu: Tuple[Fraction, ...]

    def __post_init__(self):
        mu = toRationalList(self.mu, 'mu')
        object.__setattr__(self, 'mu', mu)
        for i in range(1, len(mu)):
            if mu[i] < mu[i - 1]:
                raise MonotonicityError('minima decrease at index %d (%s > %s)' % (i + 1, mu[i - 1], mu[i]),
                                        index=i + 1, field='mu')

    def __len__(self):
        return len(self.mu)

    def at(self, alpha: int) -> Fraction:
        return self.mu[alpha - 1]

    def shifted(self, amount) -> 'MinimaProfile':
        amount = toRational(amount, 'shift')
        return MinimaProfile(tuple(value + amount for value in self.mu))


@dataclass(frozen=True)
class HeightInput:
    """ Everything the left-hand side needs. The window is checked in the strict regime.

        Attributes:
            h_norm (Fraction): Height divided by the field degree.
            c_d (Fraction): The constant c(d), supplied by the caller.
    """
    h_norm: Fraction
    c_d: Fraction
    profile: CurveProfile
    window: GapWindow
    minima: MinimaProfile

    def __post_init__(self):
        object.__setattr__(self, 'h_norm', toRational(self.h_norm, 'h_norm'))
        object.__setattr__(self, 'c_d', toRational(self.c_d, 'c_d'))
        require_window(self.profile.N, self.window, strict=True)
        if len(self.minima) != self.profile.N:
            raise LengthMismatch('mu needs N=%d entries (got %d)' % (self.profile.N, len(self.minima)), field='mu')

    @classmethod
    def fromDocument(cls, document: dict) -> 'HeightInput':
        return cls(
            h_norm=requireField(document, 'h_norm'),
            c_d=requireField(document, 'c_d'),
            profile=CurveProfile(requireField(document, 'd'), requireField(document, 'g')),
            window=GapWindow(requireField(document, 's'), requireField(document, 't')),
            minima=MinimaProfile(requireField(document, 'mu')),
        )

    def toDocument(self) -> dict:
        return {
            'd': self.profile.d,
            'g': self.profile.g,
            's': self.window.s,
            't': self.window.t,
            'h_norm': rational2str(self.h_norm),
            'c_d': rational2str(self.c_d),
            'mu': [rational2str(value) for value in self.minima.mu],
        }


def theorem1_lhs(data: HeightInput) -> Fraction:
    """ h_norm + (2d - A(N - t + s + 1)) mu_1 + A (sum_{a <= N+1-t} mu_a + sum_{a >= N+1-s} mu_a) + c_d
        with A = A(s,t). Evaluated exactly; its sign is not asserted.
    """
    profile, window, minima = data.profile, data.window, data.minima
    n, s, t = profile.N, window.s, window.t
    a = profile_bound_constant(profile, window).value
    head = sum((minima.at(alpha) for alpha in range(1, n + 2 - t)), Fraction(0))
    tail = sum((minima.at(alpha) for alpha in range(n + 1 - s, n + 1)), Fraction(0))
    return data.h_norm + (2 * profile.d - a * (n - t + s + 1)) * minima.at(1) + a * (head + tail) + data.c_d


@dataclass(frozen=True)
class MuCoefficientAudit:
    """ Per-index coefficients of mu_1 ... mu_N in the left-hand side. Their total is 2d. """
    profile: CurveProfile
    window: GapWindow
    a_st: Fraction
    argmax: int
    coefficients: Tuple[Fraction, ...]

    @property
    def total(self) -> Fraction:
        return sum(self.coefficients, Fraction(0))

    def toDocument(self) -> dict:
        return {
            'd': self.profile.d,
            'g': self.profile.g,
            's': self.window.s,
            't': self.window.t,
            'A': rational2str(self.a_st),
            'argmax': self.argmax,
            'coefficients': [rational2str(value) for value in self.coefficients],
            'total': rational2str(self.total),
        }

    @classmethod
    def fromDocument(cls, document: dict) -> 'MuCoefficientAudit':
        return cls(
            profile=CurveProfile(requireField(document, 'd'), requireField(document, 'g')),
            window=GapWindow(requireField(document, 's'), requireField(document, 't')),
            a_st=toRational(requireField(document, 'A'), 'A'),
            argmax=toInteger(requireField(document, 'argmax'), 'argmax'),
            coefficients=toRationalList(requireField(document, 'coefficients'), 'coefficients'),
        )

    def rows(self) -> List[dict]:
        return [{'alpha': alpha, 'coefficient': rational2str(value)}
                for alpha, value in enumerate(self.coefficients, start=1)]


def mu_coefficient_audit(profile: CurveProfile, window: GapWindow) -> MuCoefficientAudit:
    """ Tabulates the mu coefficients and checks they add up to 2d.

        Raises:
            :exc:`~newtonbound.exceptions.WindowError`: no strict window for this profile.
            :exc:`~newtonbound.exceptions.InvariantBreach`: the total differs from 2d.
    """
    n, s, t = profile.N, window.s, window.t
    a, argmax = profile_bound_constant(profile, window)
    coefficients = [Fraction(0)] * n
    coefficients[0] += 2 * profile.d - a * (n - t + s + 1)
    for alpha in list(range(1, n + 2 - t)) + list(range(n + 1 - s, n + 1)):
        coefficients[alpha - 1] += a
    audit = MuCoefficientAudit(profile, window, a, argmax, tuple(coefficients))
    if audit.total != 2 * profile.d:
        raise InvariantBreach('mu coefficients add up to %s, expected %d' % (audit.total, 2 * profile.d))
    return audit


@dataclass(frozen=True)
class DualData:
    """ The coefficients n_{s+1} ... n_{t-1}, the matrix W of the w-basis in terms of y and the
        matrix V of the dual v-basis in terms of x. Rows are basis vectors, 0-based storage.
    """
    n: Tuple[int, ...]
    window: GapWindow
    W: IntMatrix
    V: IntMatrix
    n_cap: int

    @property
    def size(self) -> int:
        return len(self.W)

    def toDocument(self) -> dict:
        return {
            'n': list(self.n),
            's': self.window.s,
            't': self.window.t,
            'size': self.size,
            'n_cap': self.n_cap,
            'W': [list(row) for row in self.W],
            'V': [list(row) for row in self.V],
        }

    @classmethod
    def fromDocument(cls, document: dict) -> 'DualData':
        return dual_matrices(toIntegerList(requireField(document, 'n'), 'n'),
                             GapWindow(requireField(document, 's'), requireField(document, 't')),
                             toInteger(requireField(document, 'size'), 'size'),
                             toInteger(requireField(document, 'n_cap'), 'n_cap'))

    def rows(self) -> List[dict]:
        return [{'i': i, 'w': list(w), 'v': list(v)} for i, (w, v) in enumerate(zip(self.W, self.V), start=1)]


def _closedFormDual(n: Sequence[int], window: GapWindow, size: int) -> List[List[int]]:
    s, t = window.s, window.t
    coefficient = lambda m: n[m - s - 1]
    rows = [[int(i == k) for k in range(1, size + 1)] for i in range(1, size + 1)]
    for i in range(s + 2, t + 1):
        product = 1
        for k in range(i - 1, s, -1):
            product *= -coefficient(k)
            rows[i - 1][k - 1] = product
    return rows


def dual_matrices(n: Sequence[int], window: GapWindow, size: int, n_cap: int) -> DualData:
    """ Builds W from w_i = y_i + n_i y_{i+1} (s+1 <= i <= t-1) and the dual basis V twice: by
        the alternating-product formula and by exact inversion. Both must agree, W must be
        unit upper triangular with W V^T = I, and v_i = x_i outside s+2 <= i <= t.

        Raises:
            :exc:`~newtonbound.exceptions.LengthMismatch`: len(n) != t - 1 - s.
            :exc:`~newtonbound.exceptions.CapViolation`: some |n_i| > n_cap.
            :exc:`~newtonbound.exceptions.InvariantBreach`: an exact identity fails.
    """
    n = toIntegerList(n, 'n')
    require_window(size, window, strict=False)
    s, t = window.s, window.t
    if len(n) != t - 1 - s:
        raise LengthMismatch('n needs t-1-s=%d entries (got %d)' % (t - 1 - s, len(n)), field='n')
    for offset, value in enumerate(n):
        if abs(value) > n_cap:
            raise CapViolation('|n_%d| = %d exceeds cap %d' % (s + 1 + offset, abs(value), n_cap),
                               index=s + 1 + offset, field='n')

    rows = [[int(i == k) for k in range(size)] for i in range(size)]
    for i in range(s + 1, t):
        rows[i - 1][i] = n[i - s - 1]
    W = Matrix(rows)

    closedForm = _closedFormDual(n, window, size)
    inverted = W.inv().T
    if Matrix(closedForm) != inverted:
        raise InvariantBreach('closed-form dual basis differs from the inverted transpose')
    if W.det() != 1 or not W.is_upper:
        raise InvariantBreach('W is not unit upper triangular')
    if W * Matrix(closedForm).T != eye(size):
        raise InvariantBreach('W V^T is not the identity')
    for i in list(range(1, s + 2)) + list(range(t + 1, size + 1)):
        if closedForm[i - 1] != [int(i == k) for k in range(1, size + 1)]:
            raise InvariantBreach('v_%d differs from x_%d' % (i, i))

    log.debug('Built dual data size=%d window=(%d, %d) n=%s', size, s, t, list(n))
    return DualData(tuple(n), window, tuple(tuple(row) for row in rows),
                    tuple(tuple(row) for row in closedForm), n_cap)


@dataclass(frozen=True)
class NormCertificate:
    """ Triangle-inequality bounds on |v_i| against their targets.

        Attributes:
            bounds: sum_k |V_ik| X_k per index.
            targets: X_i for i <= s or i >= t+1, X_{s+1} for s+1 <= i <= t.
            passed: bound_i <= inflation * target_i per index.
            minimal_inflation: smallest ratio that makes every index pass.
    """
    norms: Tuple[Fraction, ...]
    bounds: Tuple[Fraction, ...]
    targets: Tuple[Fraction, ...]
    passed: Tuple[bool, ...]
    inflation: Fraction
    minimal_inflation: Fraction

    @property
    def all_passed(self) -> bool:
        return all(self.passed)

    def toDocument(self) -> dict:
        return {
            'norms': [rational2str(value) for value in self.norms],
            'bounds': [rational2str(value) for value in self.bounds],
            'targets': [rational2str(value) for value in self.targets],
            'passed': list(self.passed),
            'inflation': rational2str(self.inflation),
            'minimal_inflation': rational2str(self.minimal_inflation),
        }

    @classmethod
    def fromDocument(cls, document: dict) -> 'NormCertificate':
        return cls(
            norms=toRationalList(requireField(document, 'norms'), 'norms'),
            bounds=toRationalList(requireField(document, 'bounds'), 'bounds'),
            targets=toRationalList(requireField(document, 'targets'), 'targets'),
            passed=tuple(bool(value) for value in requireField(document, 'passed')),
            inflation=toRational(requireField(document, 'inflation'), 'inflation'),
            minimal_inflation=toRational(requireField(document, 'minimal_inflation'), 'minimal_inflation'),
        )

    def rows(self) -> List[dict]:
        return [{'i': i, 'norm': rational2str(norm), 'bound': rational2str(bound), 'target': rational2str(target),
                 'passed': passed}
                for i, (norm, bound, target, passed)
                in enumerate(zip(self.norms, self.bounds, self.targets, self.passed), start=1)]


def v_norm_certify(dual: DualData, norms: Sequence, inflation=1) -> NormCertificate:
    """ Certifies |v_i| <= C * target_i from norms X_1 >= ... >= X_N > 0 of the x-basis.

        Raises:
            :exc:`~newtonbound.exceptions.NormError`: norms nonpositive or increasing, C < 1.
    """
    norms = toRationalList(norms, 'norms')
    inflation = toRational(inflation, 'inflation')
    size, s, t = dual.size, dual.window.s, dual.window.t
    if len(norms) != size:
        raise LengthMismatch('norms need %d entries (got %d)' % (size, len(norms)), field='norms')
    if inflation < 1:
        raise NormError('inflation must be >= 1 (got %s)' % inflation, field='inflation')
    for i, value in enumerate(norms, start=1):
        if value <= 0:
            raise NormError('norm X_%d must be positive (got %s)' % (i, value), index=i, field='norms')
        if i > 1 and value > norms[i - 2]:
            raise NormError('norms increase at index %d' % i, index=i, field='norms')

    bounds = tuple(sum((abs(entry) * norm for entry, norm in zip(row, norms)), Fraction(0)) for row in dual.V)
    targets = tuple(norms[s] if s + 1 <= i <= t else norms[i - 1] for i in range(1, size + 1))
    passed = tuple(bound <= inflation * target for bound, target in zip(bounds, targets))
    minimal = max(bound / target for bound, target in zip(bounds, targets))
    return NormCertificate(norms, bounds, targets, passed, inflation, minimal)


def degree_drop_sequence(d: int, degrees: Sequence[int]) -> ESequence:
    """ e_i = d - d_i from the degrees d_1 = d >= d_2 >= ... of the successive projections. """
    return ESequence(tuple(d - degree for degree in toIntegerList(degrees, 'degrees')))


def induced_r_sequence(minima: MinimaProfile, window: GapWindow, c1=0) -> RSequence:
    """ r_i = mu_{N+1-i} + c1 for i <= s or i >= t+1 and mu_{N-s} + c1 for s+1 <= i <= t. """
    n = len(minima)
    require_window(n, window, strict=False)
    c1 = toRational(c1, 'c1')
    s, t = window.s, window.t
    return RSequence(tuple((minima.at(n - s) if s + 1 <= i <= t else minima.at(n + 1 - i)) + c1
                           for i in range(1, n + 1)))
