"""Exact arithmetic for terrace

This module holds the rigor substrate every certificate is built on:

- `Rat` -- arbitrary precision rationals (`fractions.Fraction`)
- `IntervalR` -- closed intervals with rational endpoints
- `PolyQ` and `RatFuncQ` -- univariate polynomials and rational functions
  over the rationals
- `sturm_roots()`, `poly_nonneg_on_ray()` and friends -- decision
  procedures for sign conditions of polynomials on half lines

No floating point value ever enters this module: endpoints, coefficients
and witnesses are exact, so every answer can be checked again by hand.
"""
# terrace/exact.py - rationals, intervals, polynomials and Sturm sequences
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

import math
import logging
from fractions import Fraction

from terrace.errors import DataError, IndeterminateQuotient
from terrace.errors import InternalError, ProgrammingError

_logger = logging.getLogger("terrace.exact")

Rat = Fraction

"""Default number of fractional bits kept by `IntervalR.round_out()`."""
PRECISION_BITS = 256

"""Bisection steps allowed while looking for a violation witness."""
WITNESS_SEARCH_LIMIT = 100000


def as_rat(x):
    """Convert 'x' to a `Rat`, refusing floats.

    Floats convert exactly but almost never to the value the caller had in
    mind (0.1 is not 1/10), so they are rejected: use an int, a string such
    as ``'1/10'`` or a `Fraction`.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise DataError("refusing inexact float %r: pass a string or a Fraction"
            % x)
    return Fraction(x)


def _sign(x):
    return (x > 0) - (x < 0)


# rational intervals

class IntervalR(object):
    """A closed interval [lo, hi] with exact rational endpoints.

    All the arithmetic is outward sound: the result of an operation
    contains every value obtained by applying the operation to points of
    the operands. Since the endpoints are exact there is no rounding at
    all, unless `round_out()` is called explicitly.
    """

    __slots__ = ('lo', 'hi')

    def __init__(self, lo, hi=None):
        lo = as_rat(lo)
        if hi is None:
            hi = lo
        else:
            hi = as_rat(hi)
        if lo > hi:
            raise DataError("empty interval [%s, %s]" % (lo, hi))
        self.lo = lo
        self.hi = hi

    @classmethod
    def point(cls, x):
        return cls(x, x)

    def __repr__(self):
        return "IntervalR(%r, %r)" % (self.lo, self.hi)

    def __str__(self):
        return "[%s, %s]" % (self.lo, self.hi)

    def __eq__(self, other):
        if not isinstance(other, IntervalR):
            return NotImplemented
        return self.lo == other.lo and self.hi == other.hi

    def __ne__(self, other):
        rv = self.__eq__(other)
        if rv is NotImplemented:
            return rv
        return not rv

    def __hash__(self):
        return hash((self.lo, self.hi))

    # properties

    def width(self):
        return self.hi - self.lo

    def midpoint(self):
        return (self.lo + self.hi) / 2

    def is_point(self):
        return self.lo == self.hi

    def contains(self, x):
        """Return True if 'x' (a number or an interval) lies inside."""
        if isinstance(x, IntervalR):
            return self.lo <= x.lo and x.hi <= self.hi
        x = as_rat(x)
        return self.lo <= x <= self.hi

    def __contains__(self, x):
        return self.contains(x)

    def hull(self, other):
        other = _as_interval(other)
        return IntervalR(min(self.lo, other.lo), max(self.hi, other.hi))

    def intersect(self, other):
        """Return the intersection, raise `DataError` if it is empty.

        Intersecting two sound enclosures of the same quantity is sound; an
        empty result means one of them was not.
        """
        other = _as_interval(other)
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo > hi:
            raise DataError("disjoint enclosures %s and %s" % (self, other))
        return IntervalR(lo, hi)

    def round_out(self, bits=PRECISION_BITS):
        """Widen the endpoints to the dyadic grid 2**-bits.

        Used to stop denominators growing without bound along long
        computations. Exact points stay untouched when they already sit on
        the grid.
        """
        scale = 1 << bits
        lo = Fraction(math.floor(self.lo * scale), scale)
        hi = Fraction(math.ceil(self.hi * scale), scale)
        return IntervalR(lo, hi)

    # certified comparisons

    def is_above(self, x):
        """True if every point of the interval is > x."""
        return self.lo > as_rat(x)

    def is_below(self, x):
        """True if every point of the interval is < x."""
        return self.hi < as_rat(x)

    def at_least(self, x):
        """True if every point of the interval is >= x."""
        return self.lo >= as_rat(x)

    def at_most(self, x):
        """True if every point of the interval is <= x."""
        return self.hi <= as_rat(x)

    # arithmetic

    def __neg__(self):
        return IntervalR(-self.hi, -self.lo)

    def __pos__(self):
        return self

    def __add__(self, other):
        if not isinstance(other, IntervalR):
            other = _as_interval_or_none(other)
            if other is None:
                return NotImplemented
        return IntervalR(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, IntervalR):
            other = _as_interval_or_none(other)
            if other is None:
                return NotImplemented
        return IntervalR(self.lo - other.hi, self.hi - other.lo)

    def __rsub__(self, other):
        other = _as_interval_or_none(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if not isinstance(other, IntervalR):
            other = _as_interval_or_none(other)
            if other is None:
                return NotImplemented
        if self.lo >= 0 and other.lo >= 0:
            return IntervalR(self.lo * other.lo, self.hi * other.hi)
        ps = (self.lo * other.lo, self.lo * other.hi,
              self.hi * other.lo, self.hi * other.hi)
        return IntervalR(min(ps), max(ps))

    __rmul__ = __mul__

    def reciprocal(self):
        if self.lo <= 0 <= self.hi:
            raise IndeterminateQuotient()
        return IntervalR(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other):
        if not isinstance(other, IntervalR):
            other = _as_interval_or_none(other)
            if other is None:
                return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        other = _as_interval_or_none(other)
        if other is None:
            return NotImplemented
        return other * self.reciprocal()

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ProgrammingError("only natural powers are supported")
        if n == 0:
            return IntervalR(1)
        lo, hi = self.lo ** n, self.hi ** n
        if n % 2:
            return IntervalR(lo, hi)
        if self.lo >= 0:
            return IntervalR(lo, hi)
        if self.hi <= 0:
            return IntervalR(hi, lo)
        return IntervalR(0, max(lo, hi))


def _as_interval_or_none(x):
    if isinstance(x, IntervalR):
        return x
    if isinstance(x, (int, Fraction)):
        return IntervalR(x)
    return None


def _as_interval(x):
    rv = _as_interval_or_none(x)
    if rv is None:
        raise DataError("can't use %r as an interval" % (x,))
    return rv


def interval_add(a, b):
    """Return an interval containing {x + y : x in a, y in b}."""
    return _as_interval(a) + _as_interval(b)

def interval_sub(a, b):
    """Return an interval containing {x - y : x in a, y in b}."""
    return _as_interval(a) - _as_interval(b)

def interval_mul(a, b):
    """Return an interval containing {x * y : x in a, y in b}."""
    return _as_interval(a) * _as_interval(b)

def interval_div(a, b):
    """Return an interval containing {x / y : x in a, y in b}.

    Raise `IndeterminateQuotient` if 0 belongs to 'b'.
    """
    return _as_interval(a) / _as_interval(b)

def interval_neg(a):
    """Return the interval {-x : x in a}."""
    return -_as_interval(a)


# polynomials

class PolyQ(object):
    """A polynomial with rational coefficients, in ascending degree order.

    The coefficient tuple never ends with a zero, so the zero polynomial is
    the empty tuple and `degree` is -1 for it.
    """

    __slots__ = ('coeffs',)

    def __init__(self, coeffs=()):
        cs = [as_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, c, degree):
        return cls((0,) * degree + (c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def leading(self):
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __repr__(self):
        return "PolyQ(%r)" % (list(self.coeffs),)

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = c < 0 and '-' or '+'
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                body = i == 1 and 'x' or 'x^%d' % i
                if mag != 1:
                    body = "%s*%s" % (mag, body)
            terms.append((sign, body))
        first = terms[0]
        out = [first[0] == '-' and '-' + first[1] or first[1]]
        for sign, body in terms[1:]:
            out.append("%s %s" % (sign, body))
        return ' '.join(out)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PolyQ((other,))
        if not isinstance(other, PolyQ):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __ne__(self, other):
        rv = self.__eq__(other)
        if rv is NotImplemented:
            return rv
        return not rv

    def __hash__(self):
        return hash(self.coeffs)

    # evaluation

    def __call__(self, x):
        if isinstance(x, IntervalR):
            return self.eval_interval(x)
        return self.evaluate(x)

    def evaluate(self, x):
        """Exact value at the rational 'x' (Horner form)."""
        x = as_rat(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_interval(self, x):
        """Interval containing the image of the interval 'x' (Horner form)."""
        x = _as_interval(x)
        acc = IntervalR(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, PolyQ):
            return other
        if isinstance(other, (int, Fraction)):
            return PolyQ((other,))
        return None

    def __neg__(self):
        return PolyQ([-c for c in self.coeffs])

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return PolyQ(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PolyQ([c * other for c in self.coeffs])
        if not isinstance(other, PolyQ):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return PolyQ()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return PolyQ(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ProgrammingError("only natural powers are supported")
        rv = PolyQ((1,))
        base = self
        while n:
            if n & 1:
                rv = rv * base
            n >>= 1
            if n:
                base = base * base
        return rv

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ProgrammingError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = other.degree
        lc = other.leading
        quo = [Fraction(0)] * max(0, len(rem) - dd)
        for i in range(len(rem) - 1 - dd, -1, -1):
            c = rem[i + dd] / lc
            quo[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= c * b
        return PolyQ(quo), PolyQ(rem[:dd])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def derivative(self):
        return PolyQ([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self):
        if self.is_zero:
            return self
        return self * (1 / self.leading)

    def primitive(self):
        """Rescale by a positive rational to coprime integer coefficients.

        The sign of the polynomial at every point is preserved.
        """
        if self.is_zero:
            return self
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        nums = [int(c * den) for c in self.coeffs]
        g = 0
        for v in nums:
            g = math.gcd(g, v)
        return PolyQ([Fraction(v, g) for v in nums])

    def gcd(self, other):
        """Monic greatest common divisor (zero if both are zero)."""
        a, b = self, _as_poly(other)
        while not b.is_zero:
            a, b = b, (a % b).primitive()
        return a.monic()

    def compose(self, q):
        """Return the polynomial self(q(x))."""
        q = _as_poly(q)
        acc = PolyQ()
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def compose_ratfunc(self, r):
        """Return the rational function self(u/v) for r = u/v.

        Computed as sum(c_i u^i v^(d-i)) / v^d, then reduced.
        """
        r = _as_ratfunc(r)
        d = self.degree
        if d < 0:
            return RatFuncQ(PolyQ())
        u, v = r.numerator, r.denominator
        vpows = [PolyQ((1,))]
        for i in range(d):
            vpows.append(vpows[-1] * v)
        num = PolyQ()
        upow = PolyQ((1,))
        for i, c in enumerate(self.coeffs):
            if c:
                num = num + upow * vpows[d - i] * c
            upow = upow * u
        return RatFuncQ(num, vpows[d])

    def squarefree_part(self):
        """The product of the distinct irreducible factors (made primitive)."""
        if self.degree < 1:
            return self
        g = self.gcd(self.derivative())
        return (self // g).primitive()

    def squarefree_factors(self):
        """Yun's square-free decomposition: a list of (factor, multiplicity).

        The factors are pairwise coprime, square free, of positive degree,
        and the product of factor**multiplicity equals self up to a
        constant.
        """
        if self.degree < 1:
            return []
        dp = self.derivative()
        a = self.gcd(dp)
        b = self // a
        c = dp // a
        d = c - b.derivative()
        i = 1
        rv = []
        while b.degree > 0:
            f = b.gcd(d)
            b = b // f
            c = d // f
            d = c - b.derivative()
            if f.degree > 0:
                rv.append((f, i))
            i += 1
        return rv

    def odd_multiplicity_part(self):
        """The product of the factors with odd multiplicity.

        Its real roots are exactly the points where self changes sign.
        """
        rv = PolyQ((1,))
        for f, m in self.squarefree_factors():
            if m % 2:
                rv = rv * f
        return rv.primitive()

    def cauchy_bound(self):
        """A rational strictly greater than the modulus of every root."""
        if self.degree < 1:
            return Fraction(1)
        lc = abs(self.leading)
        return 1 + max(abs(c) / lc for c in self.coeffs[:-1])

    def sign_at_infinity(self, positive=True):
        """Sign of self(x) for x -> +inf (or -inf if not 'positive')."""
        s = _sign(self.leading)
        if not positive and self.degree % 2:
            s = -s
        return s


def _as_poly(p):
    if isinstance(p, PolyQ):
        return p
    if isinstance(p, (int, Fraction)):
        return PolyQ((p,))
    if isinstance(p, (list, tuple)):
        return PolyQ(p)
    raise DataError("can't use %r as a polynomial" % (p,))


def poly_eval(p, x):
    """Exact value of 'p' at the rational 'x'."""
    return _as_poly(p).evaluate(x)

def poly_eval_interval(p, x):
    """Interval containing p(x) for every x in the interval 'x'."""
    return _as_poly(p).eval_interval(x)


# rational functions

class RatFuncQ(object):
    """A quotient of two `PolyQ` in lowest terms.

    The denominator is monic, so its leading coefficient is positive and
    the sign of the function far out on the right is the sign of the
    numerator's leading coefficient.
    """

    __slots__ = ('numerator', 'denominator')

    def __init__(self, numerator, denominator=None, reduce=True):
        num = _as_poly(numerator)
        if denominator is None:
            den = PolyQ((1,))
        else:
            den = _as_poly(denominator)
        if den.is_zero:
            raise DataError("rational function with zero denominator")
        if reduce and den.degree > 0:
            g = num.gcd(den)
            if g.degree > 0:
                num = num // g
                den = den // g
        lc = den.leading
        if lc != 1:
            num = num * (1 / lc)
            den = den * (1 / lc)
        self.numerator = num
        self.denominator = den

    @classmethod
    def reciprocal_linear(cls, shift, scale=1):
        """Return 1 / (scale * (n + shift)), the typical sequence argument."""
        return cls(PolyQ((1,)), PolyQ((shift, 1)) * scale)

    def __repr__(self):
        return "RatFuncQ(%r, %r)" % (self.numerator, self.denominator)

    def __str__(self):
        if self.denominator.degree == 0:
            return str(self.numerator)
        return "(%s) / (%s)" % (self.numerator, self.denominator)

    def __eq__(self, other):
        if not isinstance(other, RatFuncQ):
            return NotImplemented
        return (self.numerator == other.numerator
            and self.denominator == other.denominator)

    def __ne__(self, other):
        rv = self.__eq__(other)
        if rv is NotImplemented:
            return rv
        return not rv

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def __call__(self, x):
        if isinstance(x, IntervalR):
            return (self.numerator.eval_interval(x)
                / self.denominator.eval_interval(x))
        den = self.denominator.evaluate(x)
        if not den:
            raise IndeterminateQuotient()
        return self.numerator.evaluate(x) / den

    def __neg__(self):
        return RatFuncQ(-self.numerator, self.denominator, reduce=False)

    def __add__(self, other):
        other = _as_ratfunc(other)
        return RatFuncQ(
            self.numerator * other.denominator
                + other.numerator * self.denominator,
            self.denominator * other.denominator)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_ratfunc(other))

    def __rsub__(self, other):
        return _as_ratfunc(other) + (-self)

    def __mul__(self, other):
        other = _as_ratfunc(other)
        # cross cancellation keeps the operands small; both are reduced
        g1 = self.numerator.gcd(other.denominator)
        g2 = other.numerator.gcd(self.denominator)
        n1, d2 = self.numerator, other.denominator
        n2, d1 = other.numerator, self.denominator
        if g1.degree > 0:
            n1, d2 = n1 // g1, d2 // g1
        if g2.degree > 0:
            n2, d1 = n2 // g2, d1 // g2
        return RatFuncQ(n1 * n2, d1 * d2, reduce=False)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_ratfunc(other)
        if other.numerator.is_zero:
            raise IndeterminateQuotient()
        return self * RatFuncQ(other.denominator, other.numerator)

    def __rtruediv__(self, other):
        return _as_ratfunc(other) / self

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ProgrammingError("only natural powers are supported")
        return RatFuncQ(self.numerator ** n, self.denominator ** n,
            reduce=False)


def _as_ratfunc(r):
    if isinstance(r, RatFuncQ):
        return r
    return RatFuncQ(_as_poly(r))


# Sturm sequences

class Certificate(object):
    """Outcome of a sign decision on a ray [a, +inf).

    `outcome` is one of NONNEG, POSITIVE or VIOLATION; on violation
    `witness` is a rational point where the condition fails and `value`
    the exact value there. A certificate is true when the condition holds.
    """

    NONNEG = 'nonneg'
    POSITIVE = 'positive'
    VIOLATION = 'witness_violation'

    __slots__ = ('outcome', 'start', 'witness', 'value', 'roots')

    def __init__(self, outcome, start, witness=None, value=None, roots=0):
        self.outcome = outcome
        self.start = start
        self.witness = witness
        self.value = value
        self.roots = roots

    def __bool__(self):
        return self.outcome != self.VIOLATION

    __nonzero__ = __bool__

    def __repr__(self):
        if self:
            return "<Certificate %s on [%s, +inf)>" % (self.outcome, self.start)
        return "<Certificate %s at x=%s>" % (self.outcome, self.witness)


def sturm_chain(p):
    """The Sturm sequence of the square-free part of 'p'.

    Every member is rescaled by a positive constant to keep the integers
    small; this does not change any sign.
    """
    p = _as_poly(p)
    if p.is_zero:
        raise ProgrammingError("Sturm sequence of the zero polynomial")
    p0 = p.squarefree_part().primitive()
    chain = [p0]
    p1 = p0.derivative()
    if p1.is_zero:
        return chain
    chain.append(p1.primitive())
    while True:
        r = -(chain[-2] % chain[-1])
        if r.is_zero:
            break
        chain.append(r.primitive())
    return chain


def _variations(chain, x):
    """Sign variations of the chain at x (None means +inf)."""
    signs = []
    for q in chain:
        if x is None:
            s = q.sign_at_infinity(True)
        elif x is _NEG_INF:
            s = q.sign_at_infinity(False)
        else:
            s = _sign(q.evaluate(x))
        if s:
            signs.append(s)
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


_NEG_INF = object()


def _count(chain, a, b):
    if a is None:
        a = _NEG_INF
    return _variations(chain, a) - _variations(chain, b)


def sturm_roots(p, a=None, b=None):
    """Number of distinct real roots of 'p' in the half-open interval (a, b].

    'a' None stands for -inf, 'b' None for +inf; infinite endpoints are
    handled through the signs of the leading coefficients, never by
    substituting large numbers.
    """
    chain = sturm_chain(p)
    if a is not None:
        a = as_rat(a)
    if b is not None:
        b = as_rat(b)
    if a is not None and b is not None and a >= b:
        if a > b:
            raise ProgrammingError("empty range (%s, %s]" % (a, b))
        return 0
    return _count(chain, a, b)


def poly_positive_on_ray(p, a):
    """Decide p(x) > 0 for every x >= a."""
    p = _as_poly(p)
    a = as_rat(a)
    if p.is_zero:
        raise ProgrammingError("sign of the zero polynomial")
    va = p.evaluate(a)
    if va <= 0:
        return Certificate(Certificate.VIOLATION, a, a, va)
    roots = sturm_roots(p, a, None)
    if roots == 0:
        return Certificate(Certificate.POSITIVE, a)
    rv = poly_nonneg_on_ray(p, a)
    if not rv:
        return rv
    # no sign change but some touching root: p vanishes somewhere on the ray
    return Certificate(Certificate.VIOLATION, a, None, Fraction(0), roots)


def poly_nonneg_on_ray(p, a):
    """Decide p(x) >= 0 for every x >= a.

    Return a `Certificate`: NONNEG when the condition holds, otherwise a
    VIOLATION carrying a rational witness x0 >= a with p(x0) < 0.

    The decision uses the sign of p(a), the sign of the leading
    coefficient and a Sturm count of the roots of odd multiplicity on
    (a, +inf): those are the only places where p can change sign.
    """
    p = _as_poly(p)
    a = as_rat(a)
    if p.is_zero:
        raise ProgrammingError("sign of the zero polynomial")
    va = p.evaluate(a)
    if va < 0:
        return Certificate(Certificate.VIOLATION, a, a, va)
    bound = max(p.cauchy_bound(), a + 1)
    if p.leading < 0:
        return Certificate(Certificate.VIOLATION, a, bound, p.evaluate(bound))
    if p.degree < 1:
        return Certificate(Certificate.NONNEG, a)

    odd = p.odd_multiplicity_part()
    if odd.degree < 1:
        return Certificate(Certificate.NONNEG, a)
    chain = sturm_chain(odd)
    changes = _count(chain, a, None)
    if changes == 0:
        return Certificate(Certificate.NONNEG, a)

    _logger.debug("%d sign changes on [%s, +inf): looking for a witness",
        changes, a)
    x0 = _negative_point(p, chain, a, bound)
    return Certificate(Certificate.VIOLATION, a, x0, p.evaluate(x0), changes)


def _negative_point(p, chain, a, bound):
    # bisect the intervals holding sign changes until a midpoint falls on
    # the negative side of one of them; split points are never roots of p,
    # else (lo, root] keeps counting that root forever
    stack = [(a, bound)]
    steps = 0
    while stack:
        lo, hi = stack.pop()
        if _count(chain, lo, hi) == 0:
            continue
        mid = (lo + hi) / 2
        value = p.evaluate(mid)
        while value == 0:
            mid = (mid + hi) / 2
            value = p.evaluate(mid)
        if value < 0:
            return mid
        stack.append((mid, hi))
        stack.append((lo, mid))
        steps += 1
        if steps > WITNESS_SEARCH_LIMIT:
            break
    raise InternalError("sign change certified but no witness found")


def ratfunc_nonneg_on_ray(r, a, strict=False):
    """Decide r(x) >= 0 (or > 0 if 'strict') for every x >= a.

    The denominator is certified positive on the ray first: clearing it
    is only legal when its sign is known.
    """
    r = _as_ratfunc(r)
    a = as_rat(a)
    den = poly_positive_on_ray(r.denominator, a)
    if not den:
        return den
    if r.numerator.is_zero:
        if strict:
            return Certificate(Certificate.VIOLATION, a, a, Fraction(0))
        return Certificate(Certificate.NONNEG, a)
    if strict:
        return poly_positive_on_ray(r.numerator, a)
    return poly_nonneg_on_ray(r.numerator, a)
