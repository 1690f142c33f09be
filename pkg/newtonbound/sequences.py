# -*- coding: utf-8 -*-
"""
Core sequence types, parameter validation and the f-sequence generator.

Classes:
    CurveProfile
    GapWindow
    ESequence
    RSequence
    WindowVerdict
    InstanceVerdict

Functions:
    f_sequence
    validate_window
    validate_instance
    require_window
    require_instance
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Tuple, Union

from newtonbound import log
from newtonbound.exceptions import (
    BadInput,
    LengthMismatch,
    MonotonicityError,
    PlateauError,
    ProfileConstraintError,
    WindowError,
)
from newtonbound.utils import toInteger, toRational

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class CurveProfile:
    """ Degree and genus of the curve. The rank N = d + 1 - g is always derived.

        Raises:
            :exc:`~newtonbound.exceptions.ProfileConstraintError`: g < 0 or d < 2g + 1.
    """
    d: int
    g: int

    def __post_init__(self):
        object.__setattr__(self, 'd', toInteger(self.d, 'd'))
        object.__setattr__(self, 'g', toInteger(self.g, 'g'))
        if self.g < 0:
            raise ProfileConstraintError('profile violates g >= 0 (g=%d)' % self.g, field='g')
        if self.d < 2 * self.g + 1:
            raise ProfileConstraintError('profile violates d >= 2g+1 (d=%d, 2g+1=%d)'
                                         % (self.d, 2 * self.g + 1), field='d')

    @property
    def N(self) -> int:
        return self.d + 1 - self.g


@dataclass(frozen=True)
class GapWindow:
    """ The pair (s, t) delimiting the plateau window. Range checks depend on the
        regime and live in :func:`validate_window`.
    """
    s: int
    t: int

    def __post_init__(self):
        object.__setattr__(self, 's', toInteger(self.s, 's'))
        object.__setattr__(self, 't', toInteger(self.t, 't'))

    def admissible(self, n: int) -> Tuple[int, ...]:
        """ The index set [2, s] U [t, n] (1-based) over which bound coefficients range. """
        return tuple(range(2, self.s + 1)) + tuple(range(self.t, n + 1))


@dataclass(frozen=True)
class ESequence:
    """ Nondecreasing integer sequence e_1 ... e_N with e_1 = 0. Indexing through
        :meth:`at` is 1-based.
    """
    values: Tuple[int, ...]

    def __post_init__(self):
        values = tuple(toInteger(value, 'e[%d]' % i) for i, value in enumerate(self.values))
        object.__setattr__(self, 'values', values)
        index = _firstEViolation(values)
        if index is not None:
            raise MonotonicityError(_eViolationMessage(values, index), index=index, field='e')

    def __len__(self):
        return len(self.values)

    def at(self, i: int) -> int:
        return self.values[i - 1]

    def plateauViolation(self, window: GapWindow) -> Optional[int]:
        """ Returns the first index j in (s, t) with e_j != e_s, or None if the plateau holds. """
        for j in range(window.s + 1, window.t):
            if self.at(j) != self.at(window.s):
                return j
        return None

    def isZero(self) -> bool:
        return not any(self.values)


@dataclass(frozen=True)
class RSequence:
    """ Nonincreasing sequence of exact rationals r_1 ... r_N. """
    values: Tuple[Fraction, ...]

    def __post_init__(self):
        values = tuple(toRational(value, 'r[%d]' % i) for i, value in enumerate(self.values))
        object.__setattr__(self, 'values', values)
        if not values:
            raise LengthMismatch('r-sequence is empty', field='r')
        index = _firstRViolation(values)
        if index is not None:
            raise MonotonicityError('r-sequence increases at index %d (%s < %s)'
                                    % (index, values[index - 2], values[index - 1]), index=index, field='r')

    def __len__(self):
        return len(self.values)

    def at(self, i: int) -> Fraction:
        return self.values[i - 1]

    def normalized(self) -> 'RSequence':
        """ Returns r' with r'_i = r_i - r_N, so r'_N = 0. """
        last = self.values[-1]
        return RSequence(tuple(value - last for value in self.values))

    def scaled(self, factor: Rational) -> 'RSequence':
        factor = Fraction(factor)
        if factor <= 0:
            raise BadInput('scale factor must be positive (got %s)' % factor)
        return RSequence(tuple(value * factor for value in self.values))

    def isConstant(self) -> bool:
        return self.values[0] == self.values[-1]


def _firstEViolation(values: Tuple[int, ...]) -> Optional[int]:
    if not values:
        return 1
    if values[0] != 0:
        return 1
    for i in range(1, len(values)):
        if values[i] < values[i - 1]:
            return i + 1
    return None


def _eViolationMessage(values, index):
    if not values:
        return 'e-sequence is empty'
    if index == 1:
        return 'e-sequence must start with e_1 = 0 (got %d)' % values[0]
    return 'e-sequence decreases at index %d (%d > %d)' % (index, values[index - 2], values[index - 1])


def _firstRViolation(values: Tuple[Fraction, ...]) -> Optional[int]:
    for i in range(1, len(values)):
        if values[i] > values[i - 1]:
            return i + 1
    return None


def f_sequence(profile: CurveProfile) -> ESequence:
    """ Returns the degree-drop sequence f_1 ... f_N of a curve of genus g and degree d:
        f_i = i - 1 while i - 1 <= d - 2g, then f_i = i - 1 + a where i - 1 = d - 2g + a.

        Parameters:
            profile (:class:`CurveProfile`): Degree and genus.
    """
    threshold = profile.d - 2 * profile.g
    values = []
    for i in range(1, profile.N + 1):
        if i - 1 <= threshold:
            values.append(i - 1)
        else:
            values.append(i - 1 + (i - 1 - threshold))
    return ESequence(tuple(values))


@dataclass(frozen=True)
class WindowVerdict:
    """ Outcome of :func:`validate_window`; failed_bound names the violated inequality. """
    accepted: bool
    failed_bound: Optional[str] = None
    message: str = ''

    def __bool__(self):
        return self.accepted

    def raise_for_verdict(self):
        if not self.accepted:
            raise WindowError(self.message, field='window')


def validate_window(n: int, window: GapWindow, strict: bool) -> WindowVerdict:
    """ Checks 1 <= s < t <= n - 2 (strict) or 1 <= s < t <= n (non-strict). Never raises. """
    upper, upperName = (n - 2, 'N-2') if strict else (n, 'N')
    checks = (
        (n >= 3, 'N >= 3', 'N=%d' % n),
        (window.s >= 1, '1 <= s', 's=%d' % window.s),
        (window.s < window.t, 's < t', 's=%d, t=%d' % (window.s, window.t)),
        (window.t <= upper, 't <= %s' % upperName, 't=%d, %s=%d' % (window.t, upperName, upper)),
    )
    for passed, bound, detail in checks:
        if not passed:
            return WindowVerdict(False, bound,
                                 'window (%d, %d) violates %s (%s)' % (window.s, window.t, bound, detail))
    return WindowVerdict(True)


def require_window(n: int, window: GapWindow, strict: bool) -> GapWindow:
    validate_window(n, window, strict).raise_for_verdict()
    return window


_REASON_EXCEPTIONS = {
    'length': LengthMismatch,
    'e-monotone': MonotonicityError,
    'r-monotone': MonotonicityError,
    'window': WindowError,
    'plateau': PlateauError,
    'value': BadInput,
}


@dataclass(frozen=True)
class InstanceVerdict:
    """ Outcome of :func:`validate_instance`. On acceptance e and r hold the typed sequences
        and normalized holds r with r_N subtracted.
    """
    accepted: bool
    reason: Optional[str] = None
    index: Optional[int] = None
    message: str = ''
    e: Optional[ESequence] = field(default=None, repr=False)
    r: Optional[RSequence] = field(default=None, repr=False)

    def __bool__(self):
        return self.accepted

    @property
    def normalized(self) -> Optional[RSequence]:
        return self.r.normalized() if self.r is not None else None

    def raise_for_verdict(self):
        if not self.accepted:
            raise _REASON_EXCEPTIONS[self.reason](self.message, index=self.index)


def validate_instance(e: Union[ESequence, Sequence[int]],
                      r: Union[RSequence, Sequence[Rational]],
                      window: GapWindow) -> InstanceVerdict:
    """ Checks an inequality instance: equal lengths, e_1 = 0, e nondecreasing, r
        nonincreasing, the window in the non-strict regime and e_s = ... = e_{t-1}.
        Never raises.
    """
    try:
        rawE = e.values if isinstance(e, ESequence) else tuple(e)
        rawR = r.values if isinstance(r, RSequence) else tuple(r)
    except TypeError as error:
        return InstanceVerdict(False, 'value', None, 'e and r must be sequences: %s' % error)
    if len(rawE) != len(rawR):
        return InstanceVerdict(False, 'length', None,
                               'length mismatch: e has %d entries, r has %d' % (len(rawE), len(rawR)))
    try:
        typedE = e if isinstance(e, ESequence) else ESequence(rawE)
    except MonotonicityError as error:
        return InstanceVerdict(False, 'e-monotone', error.index, str(error))
    except BadInput as error:
        return InstanceVerdict(False, 'value', None, str(error))
    try:
        typedR = r if isinstance(r, RSequence) else RSequence(rawR)
    except MonotonicityError as error:
        return InstanceVerdict(False, 'r-monotone', error.index, str(error))
    except BadInput as error:
        return InstanceVerdict(False, 'value', None, str(error))

    windowVerdict = validate_window(len(typedE), window, strict=False)
    if not windowVerdict:
        return InstanceVerdict(False, 'window', None, windowVerdict.message)

    index = typedE.plateauViolation(window)
    if index is not None:
        return InstanceVerdict(False, 'plateau', index,
                               'plateau violated at index %d: e_%d=%d differs from e_s=%d'
                               % (index, index, typedE.at(index), typedE.at(window.s)))

    log.debug('Accepted instance N=%d window=(%d, %d)', len(typedE), window.s, window.t)
    return InstanceVerdict(True, e=typedE, r=typedR)


def require_instance(e, r, window: GapWindow) -> Tuple[ESequence, RSequence]:
    verdict = validate_instance(e, r, window)
    verdict.raise_for_verdict()
    return verdict.e, verdict.r
