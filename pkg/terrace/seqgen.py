"""Generating sequences for terraced matrices

A terraced matrix is generated by a sequence a_0, a_1, ... with
a_n = g(1/(n+k)) for a fixed function g and shift k. This module provides
the families of sequences studied by terrace, rigorous enclosures of their
values and of their consecutive differences, and the truncated Maclaurin
polynomials every bound is built from.

All the enclosures are `IntervalR` with exact rational endpoints. Series
are truncated at an order N (see `SeriesOrder`) and the truncation error is
accounted for either by alternating-series bracketing or by the geometric
remainder bound of `remainder_bound()`.
"""
# terrace/seqgen.py - sequence families and their enclosures
#
# Copyright (C) 2026 The terrace developers
#
# terrace is free software: you can redistribute it and/or modify it
# under the terms of the GNU Lesser General Public License as published
# by the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# terrace is distributed in the hope that it will be useful, but WITHOUT
# ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or
# FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Lesser General Public
# License for more details.

import re
import math
import logging
import threading
import warnings
from fractions import Fraction

from terrace.errors import EnclosureWarning, InterfaceError
from terrace.errors import NotSupportedError, ProgrammingError
from terrace.exact import IntervalR, PolyQ, PRECISION_BITS, as_rat

_logger = logging.getLogger("terrace.seqgen")


"""Order adaptive refinements start from."""
DEFAULT_ORDER = 2

"""Largest order adaptive refinements may reach."""
DEFAULT_BUDGET = 64


"""Builtin sequence families."""
CESARO = 'cesaro'
LN1P = 'ln1p'
TAN = 'tan'
SINH = 'sinh'
SIN = 'sin'
ATAN = 'atan'
ASIN = 'asin'

FAMILIES = (CESARO, LN1P, TAN, SINH, SIN, ATAN, ASIN)

"""Functions with a Maclaurin series handled by `maclaurin_poly()`."""
COS = 'cos'
COSH = 'cosh'

ALTERNATING_KINDS = (LN1P, SIN, COS, ATAN)
POSITIVE_KINDS = (SINH, COSH, ASIN)
SERIES_KINDS = ALTERNATING_KINDS + POSITIVE_KINDS

"""Classifications returned by `weighted_monotonicity()`."""
INCREASING = 'increasing'
DECREASING = 'decreasing'
NEITHER = 'neither'
UNDECIDED = 'undecided'


class SeriesOrder(object):
    """A truncation order N together with the budget it may grow to."""

    __slots__ = ('order', 'budget')

    def __init__(self, order=DEFAULT_ORDER, budget=DEFAULT_BUDGET):
        order = int(order)
        budget = int(budget)
        if order < 0:
            raise ProgrammingError("negative series order: %d" % order)
        if budget < order:
            raise ProgrammingError("series order %d beyond budget %d"
                % (order, budget))
        self.order = order
        self.budget = budget

    @property
    def N(self):
        return self.order

    @property
    def exhausted(self):
        return self.order >= self.budget

    def doubled(self):
        return SeriesOrder(min(max(1, 2 * self.order), self.budget),
            self.budget)

    def __int__(self):
        return self.order

    __index__ = __int__

    def __repr__(self):
        return "SeriesOrder(%d, budget=%d)" % (self.order, self.budget)


def as_order(order=None, budget=None):
    """Build a `SeriesOrder` from an int, a `SeriesOrder` or None."""
    if isinstance(order, SeriesOrder):
        if budget is None or budget == order.budget:
            return order
        return SeriesOrder(order.order, budget)
    if order is None:
        order = DEFAULT_ORDER
    if budget is None:
        budget = max(DEFAULT_BUDGET, order)
    return SeriesOrder(order, budget)


class Enclosure(IntervalR):
    """An `IntervalR` remembering the series order it was computed at.

    `exhausted` is set when an adaptive refinement reached its budget
    before its width target: the interval is still sound, only wider than
    requested.
    """

    __slots__ = ('order', 'exhausted')

    def __init__(self, lo, hi=None, order=0, exhausted=False):
        IntervalR.__init__(self, lo, hi)
        self.order = order
        self.exhausted = exhausted

    @classmethod
    def wrap(cls, interval, order, exhausted=False):
        return cls(interval.lo, interval.hi, order, exhausted)

    def __repr__(self):
        return "Enclosure(%r, %r, order=%d%s)" % (self.lo, self.hi,
            self.order, self.exhausted and ', exhausted' or '')


# Maclaurin series

def first_term(kind):
    """Index of the first term of the series of 'kind'."""
    return kind == LN1P and 1 or 0


def term_power(kind, j):
    """Power of x in the j-th term of the series of 'kind'."""
    if kind == LN1P:
        return j
    if kind in (COS, COSH):
        return 2 * j
    return 2 * j + 1


def term_coefficient(kind, j):
    """Exact coefficient of the j-th term of the series of 'kind'."""
    if kind == LN1P:
        if j < 1:
            raise ProgrammingError("ln1p series starts at j = 1")
        return Fraction((-1) ** (j + 1), j)
    if kind == SIN:
        return Fraction((-1) ** j, math.factorial(2 * j + 1))
    if kind == COS:
        return Fraction((-1) ** j, math.factorial(2 * j))
    if kind == SINH:
        return Fraction(1, math.factorial(2 * j + 1))
    if kind == COSH:
        return Fraction(1, math.factorial(2 * j))
    if kind == ATAN:
        return Fraction((-1) ** j, 2 * j + 1)
    if kind == ASIN:
        return Fraction(math.factorial(2 * j),
            4 ** j * math.factorial(j) ** 2 * (2 * j + 1))
    raise ProgrammingError("no Maclaurin series for %r" % (kind,))


def maclaurin_poly(kind, order):
    """Return the truncated Maclaurin polynomial of order N of 'kind'.

    The order counts terms the way the classical truncations do: for ln1p
    p_N = x - x^2/2 + ... + (-1)^(N+1) x^N/N (N >= 1); for the odd
    functions r_N stops at x^(2N+1) and for cos, cosh s_N stops at x^(2N).
    """
    N = int(order)
    if kind not in SERIES_KINDS:
        raise ProgrammingError("no Maclaurin series for %r" % (kind,))
    if N < first_term(kind):
        raise ProgrammingError("%s needs N >= %d" % (kind, first_term(kind)))
    coeffs = [Fraction(0)] * (term_power(kind, N) + 1)
    for j in range(first_term(kind), N + 1):
        coeffs[term_power(kind, j)] = term_coefficient(kind, j)
    return PolyQ(coeffs)


def _partial_sums(kind, N, x):
    """Return the partial sums of order N and N + 1 at the rational x."""
    s = Fraction(0)
    for j in range(first_term(kind), N + 1):
        s += term_coefficient(kind, j) * x ** term_power(kind, j)
    return s, s + term_coefficient(kind, N + 1) * x ** term_power(kind, N + 1)


def remainder_ratio(kind, N):
    """Coefficient c with term(j+1)/term(j) <= c x^2 for every j > N.

    Only defined for the positive-term series.
    """
    if kind == SINH:
        return Fraction(1, (2 * N + 2) * (2 * N + 3))
    if kind == COSH:
        return Fraction(1, (2 * N + 1) * (2 * N + 2))
    if kind == ASIN:
        return Fraction(1)
    raise ProgrammingError("no geometric remainder for %r" % (kind,))


def remainder_bound(kind, N, x):
    """Upper bound of the truncation error of the order N series at x.

    For the alternating series this is the first omitted term; for the
    positive-term series (sinh, cosh, asin) it is the first omitted term
    times 1/(1 - q), q the term ratio bound from `remainder_ratio()`.
    """
    x = as_rat(x)
    N = int(N)
    t = abs(term_coefficient(kind, N + 1) * x ** term_power(kind, N + 1))
    if kind in ALTERNATING_KINDS:
        return t
    q = remainder_ratio(kind, N) * x * x
    if q >= 1:
        raise ProgrammingError("%s remainder diverges at x = %s" % (kind, x))
    return t / (1 - q)


def _ln1p_accelerated(x, N):
    # ln(1+x) = 2 atanh(t) with t = x/(2+x) <= 1/3: positive terms
    t = x / (2 + x)
    t2 = t * t
    s = Fraction(0)
    p = t
    for j in range(N + 1):
        s += p / (2 * j + 1)
        p *= t2
    lo = 2 * s
    return IntervalR(lo, lo + 2 * p / ((2 * N + 3) * (1 - t2)))


def _atan_euler(x, N):
    # Euler: atan x = sum c_j x y^j / (1+x^2), y = x^2/(1+x^2),
    # c_0 = 1, c_(j+1) = c_j (2j+2)/(2j+3)
    y = x * x / (1 + x * x)
    term = x / (1 + x * x)
    s = Fraction(0)
    for j in range(N + 1):
        s += term
        term = term * y * (2 * j + 2) / (2 * j + 3)
    return IntervalR(s, s + term / (1 - y))


def function_enclosure(kind, x, order):
    """Return an interval containing kind(x) for a rational 0 <= x <= 1.

    'kind' is one of the series kinds or 'tan'. asin requires x <= 1/2.
    """
    x = as_rat(x)
    N = int(order)
    if not 0 <= x <= 1:
        raise ProgrammingError("%s argument %s outside [0, 1]" % (kind, x))
    if kind == TAN:
        return function_enclosure(SIN, x, N) / function_enclosure(COS, x, N)
    if kind not in SERIES_KINDS:
        raise ProgrammingError("no enclosure for %r" % (kind,))
    if kind == ASIN and x > Fraction(1, 2):
        raise ProgrammingError("asin argument %s > 1/2" % x)
    N = max(N, first_term(kind))

    if kind in ALTERNATING_KINDS:
        a, b = _partial_sums(kind, N, x)
        rv = IntervalR(min(a, b), max(a, b))
        if kind == LN1P:
            rv = rv.intersect(_ln1p_accelerated(x, N))
        elif kind == ATAN:
            rv = rv.intersect(_atan_euler(x, N))
        return rv

    lo = _partial_sums(kind, N, x)[0]
    return IntervalR(lo, lo + remainder_bound(kind, N, x))


def taylor_coefficients(family, degree):
    """Exact Maclaurin coefficients e_0..e_degree of the generating function.

    tan is obtained by power series division of sin by cos.
    """
    family = _as_family(family)
    if not family.builtin:
        raise NotSupportedError("no Taylor series for %s" % family.spec)
    name = family.family
    if name == CESARO:
        rv = [Fraction(0)] * (degree + 1)
        if degree >= 1:
            rv[1] = Fraction(1)
        return rv
    if name == TAN:
        s = _series(SIN, degree)
        c = _series(COS, degree)
        rv = []
        for i in range(degree + 1):
            rv.append(s[i] - sum(rv[j] * c[i - j] for j in range(i)))
        return rv
    return _series(name, degree)


def _series(kind, degree):
    rv = [Fraction(0)] * (degree + 1)
    j = first_term(kind)
    while term_power(kind, j) <= degree:
        rv[term_power(kind, j)] = term_coefficient(kind, j)
        j += 1
    return rv


# families

class SequenceFamily(object):
    """A builtin family: a_n = g(1/(n+k)) with g named by 'family'."""

    __slots__ = ('family', 'shift')

    builtin = True

    def __init__(self, family, shift=1):
        family = str(family).lower()
        if family not in FAMILIES:
            raise InterfaceError("unknown family: %r" % family)
        if not isinstance(shift, int) or shift < 1:
            raise InterfaceError("shift must be a positive integer, got %r"
                % (shift,))
        if family == ASIN and shift < 2:
            raise InterfaceError("asin needs k >= 2 (arguments <= 1/2)")
        self.family = family
        self.shift = shift

    @property
    def spec(self):
        return "%s@k=%d" % (self.family, self.shift)

    def __repr__(self):
        return "SequenceFamily(%r, %d)" % (self.family, self.shift)

    __str__ = lambda self: self.spec

    def __eq__(self, other):
        if not isinstance(other, SequenceFamily):
            return NotImplemented
        return self.spec == other.spec

    def __ne__(self, other):
        rv = self.__eq__(other)
        if rv is NotImplemented:
            return rv
        return not rv

    def __hash__(self):
        return hash(self.spec)

    def argument(self, n):
        """The exact argument 1/(n+k) of the n-th term."""
        return Fraction(1, n + self.shift)

    def value_at(self, n, N):
        """Interval containing a_n, computed at series order N."""
        x = self.argument(n)
        if self.family == CESARO:
            return IntervalR(x)
        return function_enclosure(self.family, x, N)

    def diff_at(self, n, N):
        """Interval containing a_n - a_(n+1), computed at series order N.

        Each family uses an identity free of cancellation; see the module
        documentation for the list.
        """
        m = n + self.shift
        f = self.family
        if f == CESARO:
            return IntervalR(Fraction(1, m * (m + 1)))
        if f == LN1P:
            return function_enclosure(LN1P, Fraction(1, m * (m + 2)), N)
        if f == ATAN:
            return function_enclosure(ATAN, Fraction(1, m * m + m + 1), N)
        if f == TAN:
            w = Fraction(1, m * (m + 1))
            return function_enclosure(SIN, w, N) / (
                function_enclosure(COS, Fraction(1, m), N)
                * function_enclosure(COS, Fraction(1, m + 1), N))
        if f in (SINH, SIN):
            c = Fraction(2 * m + 1, 2 * m * (m + 1))
            h = Fraction(1, 2 * m * (m + 1))
            even = f == SINH and COSH or COS
            return 2 * (function_enclosure(even, c, N)
                * function_enclosure(f, h, N))
        if f == ASIN:
            return _asin_difference(Fraction(1, m), Fraction(1, m + 1), N)
        raise ProgrammingError("no difference for %r" % f)


def _asin_difference(a, b, N):
    # sum c_j (a^(2j+1) - b^(2j+1)); omitted terms are positive and
    # c_j (2j+1) <= 1 bounds them by (a-b) a^(2j)
    lo = Fraction(0)
    for j in range(N + 1):
        p = 2 * j + 1
        lo += term_coefficient(ASIN, j) * (a ** p - b ** p)
    tail = (a - b) * a ** (2 * N + 2) / (1 - a * a)
    return IntervalR(lo, lo + tail)


class CustomFamily(object):
    """A user supplied family, the extension hook of terrace.

    'value' is a callable (n, N) -> IntervalR enclosing a_n at order N;
    'diff', if given, a callable (n, N) -> IntervalR enclosing
    a_n - a_(n+1). Without 'diff' the difference of the value enclosures
    is used. Tail certificates and refutations are not available.
    """

    builtin = False

    def __init__(self, name, value, diff=None):
        if not re.match(r'^[A-Za-z0-9_.-]+$', name or ''):
            raise InterfaceError("bad custom family name: %r" % (name,))
        self.name = name
        self._value = value
        self._diff = diff

    @property
    def spec(self):
        return "custom:%s" % self.name

    family = property(lambda self: 'custom')

    def __repr__(self):
        return "<CustomFamily %s>" % self.name

    __str__ = lambda self: self.spec

    def value_at(self, n, N):
        return self._value(n, N)

    def diff_at(self, n, N):
        if self._diff is not None:
            return self._diff(n, N)
        return self._value(n, N) - self._value(n + 1, N)


_custom_lock = threading.Lock()
_custom = {}

def register_family(family):
    """Make a `CustomFamily` known to `parse_family()`."""
    if not isinstance(family, CustomFamily):
        raise InterfaceError("only custom families can be registered")
    _custom_lock.acquire()
    try:
        _custom[family.name] = family
    finally:
        _custom_lock.release()
    return family


_spec_re = re.compile(r'^\s*([a-z0-9]+)\s*@\s*k\s*=\s*([+-]?\d+)\s*$', re.I)
_custom_re = re.compile(r'^\s*custom:\s*(\S+)\s*$', re.I)

def parse_family(spec):
    """Parse a family spec string: ``<family>@k=<int>`` or ``custom:<name>``.

    The family name is case-insensitive. Raise `InterfaceError` on anything
    else.
    """
    if isinstance(spec, (SequenceFamily, CustomFamily)):
        return spec
    m = _custom_re.match(spec or '')
    if m:
        _custom_lock.acquire()
        try:
            family = _custom.get(m.group(1))
        finally:
            _custom_lock.release()
        if family is None:
            raise InterfaceError("unknown custom family: %r" % m.group(1))
        return family
    m = _spec_re.match(spec or '')
    if not m:
        raise InterfaceError("bad family spec %r: expected <family>@k=<int>"
            % (spec,))
    return SequenceFamily(m.group(1).lower(), int(m.group(2)))


def _as_family(family):
    if isinstance(family, (SequenceFamily, CustomFamily)):
        return family
    return parse_family(family)


def _check_index(n):
    if not isinstance(n, int) or n < 0:
        raise ProgrammingError("index must be a nonnegative integer, got %r"
            % (n,))


def _cached(cache, key, compute):
    if cache is None:
        return compute()
    return cache.get(key, compute)


def _rounded(iv):
    if iv.is_point():
        return iv
    return iv.round_out(PRECISION_BITS)


def _enclose(what, family, n, order, width, budget, cache):
    family = _as_family(family)
    _check_index(n)
    order = as_order(order, budget)
    compute = getattr(family, what + '_at')
    while True:
        N = order.order
        iv = _cached(cache, (family.spec, what, n, N),
            lambda: _rounded(compute(n, N)))
        if width is None or iv.width() <= width:
            return Enclosure.wrap(iv, N)
        if order.exhausted:
            msg = ("%s enclosure of %s at n=%d has width %.3g > %.3g at "
                "order budget %d" % (what, family.spec, n, iv.width(), width,
                    order.budget))
            _logger.warning(msg)
            warnings.warn(msg, EnclosureWarning, stacklevel=3)
            return Enclosure.wrap(iv, N, exhausted=True)
        order = order.doubled()


def value_enclosure(family, n, order=None, width=None, budget=None,
        cache=None):
    """Return an `Enclosure` of a_n.

    With 'width' None the enclosure is computed once at 'order'. Otherwise
    the order is doubled until the width drops to 'width' or the budget is
    reached; in the latter case the (sound) enclosure comes back flagged
    `exhausted` and an `EnclosureWarning` is emitted.
    """
    return _enclose('value', family, n, order, width, budget, cache)


def diff_enclosure(family, n, order=None, width=None, budget=None,
        cache=None):
    """Return an `Enclosure` of a_n - a_(n+1), refined like
    `value_enclosure()`."""
    return _enclose('diff', family, n, order, width, budget, cache)


# weighted sequence

class MonotonicityReport(object):
    """Classification of the prefix of the weighted sequence (n+1) a_n."""

    def __init__(self, spec, n_max, classification, first_violation_index,
            first_increase_failure, first_decrease_failure, undecided):
        self.spec = spec
        self.n_max = n_max
        self.classification = classification
        self.first_violation_index = first_violation_index
        self.first_increase_failure = first_increase_failure
        self.first_decrease_failure = first_decrease_failure
        self.undecided = undecided

    @property
    def strictly_decreasing(self):
        return self.classification == DECREASING

    def as_dict(self):
        return {
            'family': self.spec,
            'n_max': self.n_max,
            'classification': self.classification,
            'first_violation_index': self.first_violation_index,
            'first_increase_failure': self.first_increase_failure,
            'first_decrease_failure': self.first_decrease_failure,
            'undecided': list(self.undecided),
        }

    def __repr__(self):
        return "<MonotonicityReport %s up to %d: %s>" % (
            self.spec, self.n_max, self.classification)


def _weighted_step(family, n, order, cache):
    # (n+2) a_(n+1) - (n+1) a_n = a_(n+1) - (n+1)(a_n - a_(n+1))
    while True:
        N = order.order
        b = value_enclosure(family, n + 1, N, budget=order.budget,
            cache=cache)
        d = diff_enclosure(family, n, N, budget=order.budget, cache=cache)
        e = b - (n + 1) * d
        if e.is_point() or e.lo > 0 or e.hi < 0 or order.exhausted:
            return e
        order = order.doubled()


def weighted_monotonicity(family, n_max, order=None, budget=None,
        cache=None):
    """Classify the weighted sequence (n+1) a_n on 0 <= n <= n_max.

    Every step is decided by interval comparison: an increase is certified
    to fail at step n when (n+2) a_(n+1) <= (n+1) a_n is certified, and
    likewise for a decrease. Steps that remain undecided at the budget are
    listed in the report, never guessed.
    """
    family = _as_family(family)
    if not isinstance(n_max, int) or n_max < 2:
        raise ProgrammingError("n_max must be at least 2")
    order = as_order(order, budget)

    inc_fail = dec_fail = None
    undecided = []
    for n in range(n_max):
        e = _weighted_step(family, n, order, cache)
        if e.hi <= 0 and inc_fail is None:
            inc_fail = n
        if e.lo >= 0 and dec_fail is None:
            dec_fail = n
        if e.lo < 0 < e.hi:
            undecided.append(n)
        if inc_fail is not None and dec_fail is not None:
            break

    violation = None
    if inc_fail is not None and dec_fail is not None:
        classification = NEITHER
        violation = max(inc_fail, dec_fail)
    elif undecided:
        classification = UNDECIDED
    elif inc_fail is None:
        classification = INCREASING
    else:
        classification = DECREASING

    _logger.info("weighted sequence of %s up to %d: %s",
        family.spec, n_max, classification)
    return MonotonicityReport(family.spec, n_max, classification, violation,
        inc_fail, dec_fail, undecided)
