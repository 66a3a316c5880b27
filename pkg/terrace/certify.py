"""Hyponormality certification for terraced matrices

A terraced matrix M(a) generated by a positive sequence a_n decreasing to 0
with 0 < a_0 <= 1 is hyponormal as soon as, for every n,

    (a_n - a_(n+1)) / a_n^2  <=  1  <=  (a_n - a_(n+1)) / (a_n a_(n+1))

This module checks that criterion rigorously:

- `check_criterion_at()` and `check_prefix()` decide it index by index
  with interval enclosures;
- `tail_certificate()` proves it for all n >= n0 at once, replacing the
  transcendental functions by certified polynomial bounds and deciding
  the resulting polynomial inequality with Sturm sequences;
- `refute_by_normaloid()` proves the opposite for some families: a
  hyponormal M - I would be normaloid with norm 1, so a column of norm
  > 1 refutes hyponormality;
- `certify()` puts everything together into a `CertReport`.

Undecided is always a possible answer: nothing in here turns numerical
evidence into a claim.
"""
# terrace/certify.py - criterion checks, tail certificates and refutations
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

import time
import logging
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from terrace import report
from terrace.errors import IndeterminateQuotient, NotSupportedError
from terrace.errors import ProgrammingError
from terrace.exact import IntervalR, PolyQ, RatFuncQ, PRECISION_BITS
from terrace.exact import as_rat, ratfunc_nonneg_on_ray
from terrace.pool import SimpleEnclosureCache, ThreadedEnclosureCache
from terrace import seqgen
from terrace.seqgen import as_order, value_enclosure, diff_enclosure
from terrace.seqgen import maclaurin_poly, term_coefficient, term_power
from terrace.seqgen import remainder_ratio

_logger = logging.getLogger("terrace.certify")


"""Highest index checked pointwise by `certify()` unless told otherwise."""
DEFAULT_PREFIX = 16

"""Default split point of `zeta_tail_enclosure()` in refutations."""
DEFAULT_ZETA_SPLIT = 1000

"""Outcomes of a single inequality check."""
HOLDS = 'holds'
FAILS = 'fails'
UNDECIDED = 'undecided'

"""Verdicts of `certify()`."""
CERTIFIED = 'certified_hyponormal'
REFUTED = 'refuted'

"""Which half of the criterion a tail certificate proves."""
UPPER = 'upper'
LOWER = 'lower'

"""Sides of a polynomial bound."""
MINORANT = 'lower'
MAJORANT = 'upper'


class SchemaError(NotSupportedError):
    """No tail schema is available for the family."""


# the criterion

def theorem_form_holds(a, b):
    """Return True if a (1 - a) <= b <= a / (1 + a), for exact a, b > 0."""
    a = as_rat(a)
    b = as_rat(b)
    return a * (1 - a) <= b <= a / (1 + a)


def criterion_form_holds(a, b):
    """Return True if (a - b)/a^2 <= 1 <= (a - b)/(a b), for exact a, b > 0."""
    a = as_rat(a)
    b = as_rat(b)
    d = a - b
    return d / (a * a) <= 1 <= d / (a * b)


class CriterionVerdict(object):
    """Outcome of the criterion at one index.

    `lower_margin` encloses (a_n - a_(n+1))/a_n^2 and `upper_margin`
    encloses (a_n - a_(n+1))/(a_n a_(n+1)); either is None when the
    quotient could not be formed.
    """

    __slots__ = ('n', 'lower_check', 'upper_check', 'lower_margin',
        'upper_margin', 'order')

    def __init__(self, n, lower_check, upper_check, lower_margin,
            upper_margin, order):
        self.n = n
        self.lower_check = lower_check
        self.upper_check = upper_check
        self.lower_margin = lower_margin
        self.upper_margin = upper_margin
        self.order = order

    @property
    def holds(self):
        return self.lower_check == HOLDS and self.upper_check == HOLDS

    @property
    def fails(self):
        return FAILS in (self.lower_check, self.upper_check)

    def as_dict(self):
        return {
            'n': self.n,
            'lower_check': self.lower_check,
            'upper_check': self.upper_check,
            'lower_margin': report.interval_dict(self.lower_margin),
            'upper_margin': report.interval_dict(self.upper_margin),
            'order': self.order,
        }

    def __repr__(self):
        return "<CriterionVerdict n=%d lower=%s upper=%s>" % (
            self.n, self.lower_check, self.upper_check)


def _at_most_one(q):
    if q is None:
        return UNDECIDED
    if q.hi <= 1:
        return HOLDS
    if q.lo > 1:
        return FAILS
    return UNDECIDED


def _at_least_one(q):
    if q is None:
        return UNDECIDED
    if q.lo >= 1:
        return HOLDS
    if q.hi < 1:
        return FAILS
    return UNDECIDED


def _quotient(num, den):
    try:
        return num / den
    except IndeterminateQuotient:
        return None


def check_criterion_at(family, n, order=None, budget=None, cache=None):
    """Decide both halves of the criterion at index 'n'.

    The series order is doubled until both halves are decided, one of them
    fails, or the budget is reached.
    """
    family = seqgen.parse_family(family)
    order = as_order(order, budget)
    while True:
        N = order.order
        kw = dict(budget=order.budget, cache=cache)
        a = value_enclosure(family, n, N, **kw)
        b = value_enclosure(family, n + 1, N, **kw)
        d = diff_enclosure(family, n, N, **kw)
        lower_m = _quotient(d, a ** 2)
        upper_m = _quotient(d, a * b)
        lower = _at_most_one(lower_m)
        upper = _at_least_one(upper_m)
        if FAILS in (lower, upper) or UNDECIDED not in (lower, upper):
            break
        if order.exhausted:
            _logger.debug("%s: criterion at n=%d undecided at order %d",
                family.spec, n, N)
            break
        order = order.doubled()
    return CriterionVerdict(n, lower, upper, lower_m, upper_m, N)


# prefix

class HypothesisChecks(object):
    """The hypotheses of the criterion checked on a prefix."""

    def __init__(self, a0, a0_check, decrease_check, first_nondecrease=None):
        self.a0 = a0
        self.a0_check = a0_check
        self.decrease_check = decrease_check
        self.first_nondecrease = first_nondecrease

    @property
    def hold(self):
        return self.a0_check == HOLDS and self.decrease_check == HOLDS

    def as_dict(self):
        return {
            'a0': report.interval_dict(self.a0),
            'a0_in_unit_interval': self.a0_check,
            'strictly_decreasing': self.decrease_check,
            'first_nondecrease': self.first_nondecrease,
        }


class PrefixResult(object):
    """What `check_prefix()` found on the indices 0..n_max."""

    def __init__(self, spec, n_max, hypotheses, verdicts, first_failure=None):
        self.spec = spec
        self.n_max = n_max
        self.hypotheses = hypotheses
        self.verdicts = verdicts
        self.first_failure = first_failure

    @property
    def complete(self):
        return len(self.verdicts) == self.n_max + 1

    @property
    def all_hold(self):
        return (self.hypotheses.hold and self.complete
            and all(v.holds for v in self.verdicts))

    def holds_up_to(self, n):
        """True if every index 0..n was checked and holds."""
        if len(self.verdicts) <= n:
            return False
        return all(v.holds for v in self.verdicts[:n + 1])

    def __iter__(self):
        return iter(self.verdicts)

    def __len__(self):
        return len(self.verdicts)


def _check_a0(family, order, cache):
    while True:
        a0 = value_enclosure(family, 0, order.order, budget=order.budget,
            cache=cache)
        if a0.lo > 0 and a0.hi <= 1:
            return a0, HOLDS
        if a0.hi <= 0 or a0.lo > 1:
            return a0, FAILS
        if order.exhausted:
            return a0, UNDECIDED
        order = order.doubled()


def _check_decrease(family, n, order, cache):
    while True:
        d = diff_enclosure(family, n, order.order, budget=order.budget,
            cache=cache)
        if d.lo > 0:
            return HOLDS
        if d.hi <= 0:
            return FAILS
        if order.exhausted:
            return UNDECIDED
        order = order.doubled()


def _index_job(family, n, order, cache):
    return (_check_decrease(family, n, order, cache),
        check_criterion_at(family, n, order, cache=cache))


def check_prefix(family, n_max, order=None, budget=None, workers=1,
        cache=None):
    """Check the hypotheses and the criterion for 0 <= n <= n_max.

    a_0 must be certified inside (0, 1] and every difference a_n - a_(n+1)
    certified positive. The scan stops at the first certified failure.
    With 'workers' > 1 the indices are checked on a thread pool; results
    always come back in index order.
    """
    family = seqgen.parse_family(family)
    if not isinstance(n_max, int) or n_max < 0:
        raise ProgrammingError("n_max must be a nonnegative integer")
    order = as_order(order, budget)
    if cache is None:
        if workers > 1:
            cache = ThreadedEnclosureCache()
        else:
            cache = SimpleEnclosureCache()

    a0, a0_check = _check_a0(family, order, cache)
    if a0_check == FAILS:
        _logger.info("%s: a_0 = %s is outside (0, 1]", family.spec, a0)
        return PrefixResult(family.spec, n_max,
            HypothesisChecks(a0, FAILS, UNDECIDED), [], 0)

    verdicts = []
    decrease = HOLDS
    first_nondecrease = None
    first_failure = None

    def record(n, dec, verdict):
        # returns True when the scan must stop
        nonlocal decrease, first_nondecrease, first_failure
        verdicts.append(verdict)
        if dec != HOLDS:
            if first_nondecrease is None:
                first_nondecrease = n
            if dec == FAILS or decrease == HOLDS:
                decrease = dec
        if dec == FAILS or verdict.fails:
            first_failure = n
            return True
        return False

    if workers > 1:
        executor = ThreadPoolExecutor(max_workers=workers)
        try:
            futures = [executor.submit(_index_job, family, n, order, cache)
                for n in range(n_max + 1)]
            for n, fut in enumerate(futures):
                if record(n, *fut.result()):
                    for f in futures[n + 1:]:
                        f.cancel()
                    break
        finally:
            executor.shutdown(wait=True)
    else:
        for n in range(n_max + 1):
            if record(n, *_index_job(family, n, order, cache)):
                break

    if first_failure is not None:
        _logger.info("%s: certified failure at n=%d", family.spec,
            first_failure)
    return PrefixResult(family.spec, n_max,
        HypothesisChecks(a0, a0_check, decrease, first_nondecrease),
        verdicts, first_failure)


# tail schemas

class Bound(object):
    """A truncated series used as a bound of kind(argument).

    'argument' is a `RatFuncQ` in n; 'side' says whether the truncation is
    used as a minorant or a majorant; 'correction', a pair (c, d), adds
    c * argument**d to the polynomial. The cesaro kind stands for the
    argument itself, an identity rather than a truncation.
    """

    __slots__ = ('kind', 'argument', 'order', 'side', 'correction', 'label')

    def __init__(self, kind, argument, order, side, correction=None,
            label='x'):
        self.kind = kind
        self.argument = argument
        self.order = order
        self.side = side
        if correction is not None:
            correction = (as_rat(correction[0]), int(correction[1]))
        self.correction = correction
        self.label = label

    def polynomial(self):
        """The bounding polynomial in the argument."""
        if self.kind == seqgen.CESARO:
            return PolyQ.x()
        p = maclaurin_poly(self.kind, self.order)
        if self.correction:
            c, d = self.correction
            p = p + PolyQ.monomial(c, d)
        return p

    def as_ratfunc(self):
        """The bound as a rational function of n."""
        return self.polynomial().compose_ratfunc(self.argument)

    def __str__(self):
        if self.kind == seqgen.CESARO:
            return self.label
        s = "%s[%d](%s)" % (self.kind, self.order, self.label)
        if self.correction:
            c, d = self.correction
            s = "(%s + %s*%s^%d)" % (s, c, self.label, d)
        return s


class TailSchema(object):
    """A sufficient inequality: big side product >= small side product.

    Each side is a rational constant times a product of `Bound`; the big
    side uses minorants, the small side majorants.
    """

    def __init__(self, name, which, n0, big, small, arguments):
        self.name = name
        self.which = which
        self.n0 = n0
        self.big = big
        self.small = small
        self.arguments = arguments

    def bounds(self):
        return list(self.big[1]) + list(self.small[1])

    def _side(self, side):
        const, bounds = side
        rv = RatFuncQ(const)
        for b in bounds:
            rv = rv * b.as_ratfunc()
        return rv

    def reduction(self):
        """The rational function big - small, reduced."""
        return self._side(self.big) - self._side(self.small)

    def identity(self):
        def fmt(side):
            const, bounds = side
            parts = [str(b) for b in bounds]
            if const != 1:
                parts.insert(0, str(const))
            return '*'.join(parts)
        return "%s - %s >= 0 for n >= %d" % (fmt(self.big), fmt(self.small),
            self.n0)


def _linear(c0, c1=1):
    return PolyQ((c0, c1))


def tail_schema(family, which):
    """Return the `TailSchema` proving half 'which' of the criterion.

    Raise `SchemaError` for families without one.
    """
    family = seqgen.parse_family(family)
    if which not in (UPPER, LOWER):
        raise ProgrammingError("which must be 'upper' or 'lower', got %r"
            % (which,))
    name = getattr(family, 'family', None)
    k = getattr(family, 'shift', 0)
    if not family.builtin or name not in (seqgen.CESARO, seqgen.LN1P,
            seqgen.TAN, seqgen.SINH) or (name in (seqgen.TAN, seqgen.SINH)
            and k < 2):
        raise SchemaError("no tail schema for %s" % family.spec)
    label = "%s-%s" % (name, which)

    m0 = _linear(k)
    m1 = _linear(k + 1)
    A = RatFuncQ(1, m0)
    B = RatFuncQ(1, m1)
    args = {'A': A, 'B': B}

    if name == seqgen.CESARO:
        # A - B = AB holds exactly
        w = RatFuncQ(1, m0 * m1)
        args['w'] = w
        if which == UPPER:
            return TailSchema(label, which, 0,
                (1, [Bound(seqgen.CESARO, w, 1, MINORANT, label='w')]),
                (1, [Bound(seqgen.CESARO, A, 1, MAJORANT, label='A'),
                     Bound(seqgen.CESARO, B, 1, MAJORANT, label='B')]), args)
        return TailSchema(label, which, 0,
            (1, [Bound(seqgen.CESARO, A, 1, MINORANT, label='A'),
                 Bound(seqgen.CESARO, A, 1, MINORANT, label='A')]),
            (1, [Bound(seqgen.CESARO, w, 1, MAJORANT, label='w')]), args)

    if name == seqgen.LN1P:
        z = RatFuncQ(1, m0 * _linear(k + 2))
        args['z'] = z
        n0 = max(0, 2 - k)
        if which == UPPER:
            return TailSchema(label, which, n0,
                (1, [Bound(seqgen.LN1P, z, 4, MINORANT, label='z')]),
                (1, [Bound(seqgen.LN1P, A, 5, MAJORANT, label='A'),
                     Bound(seqgen.LN1P, B, 5, MAJORANT, label='B')]), args)
        return TailSchema(label, which, n0,
            (1, [Bound(seqgen.LN1P, A, 2, MINORANT, label='A'),
                 Bound(seqgen.LN1P, A, 2, MINORANT, label='A')]),
            (1, [Bound(seqgen.LN1P, z, 3, MAJORANT, label='z')]), args)

    if name == seqgen.TAN:
        # tan A - tan B = sin(w) / (cos A cos B), w = A - B = AB
        w = RatFuncQ(1, m0 * m1)
        args['w'] = w
        if which == UPPER:
            return TailSchema(label, which, 0,
                (1, [Bound(seqgen.SIN, w, 1, MINORANT, label='w')]),
                (1, [Bound(seqgen.SIN, A, 2, MAJORANT, label='A'),
                     Bound(seqgen.SIN, B, 2, MAJORANT, label='B')]), args)
        return TailSchema(label, which, 0,
            (1, [Bound(seqgen.SIN, A, 1, MINORANT, label='A'),
                 Bound(seqgen.SIN, A, 1, MINORANT, label='A'),
                 Bound(seqgen.COS, B, 1, MINORANT, label='B')]),
            (1, [Bound(seqgen.SIN, w, 0, MAJORANT, label='w'),
                 Bound(seqgen.COS, A, 0, MAJORANT, label='A')]), args)

    # sinh A - sinh B = 2 cosh(c) sinh(h), c = (A+B)/2, h = (A-B)/2
    c = RatFuncQ(_linear(2 * k + 1, 2), m0 * m1 * 2)
    h = RatFuncQ(1, m0 * m1 * 2)
    args['c'] = c
    args['h'] = h
    quartic = (Fraction(1, 12), 4)
    if which == UPPER:
        return TailSchema(label, which, 0,
            (2, [Bound(seqgen.COSH, c, 1, MINORANT, label='c'),
                 Bound(seqgen.SINH, h, 1, MINORANT, label='h')]),
            (1, [Bound(seqgen.SINH, A, 1, MAJORANT, quartic, label='A'),
                 Bound(seqgen.SINH, B, 1, MAJORANT, quartic, label='B')]),
            args)
    return TailSchema(label, which, 0,
        (1, [Bound(seqgen.SINH, A, 1, MINORANT, label='A'),
             Bound(seqgen.SINH, A, 1, MINORANT, label='A')]),
        (2, [Bound(seqgen.COSH, c, 1, MAJORANT, (Fraction(1, 3), 3),
                label='c'),
             Bound(seqgen.SINH, h, 1, MAJORANT, quartic, label='h')]),
        args)


class MajorantLemma(object):
    """The validation record of one `Bound` on the ray [n0, +inf).

    `checks` is a list of (description, `Certificate`) pairs; the lemma is
    valid when the rule applies and every certificate holds.
    """

    def __init__(self, bound, rule, checks, problems):
        self.bound = bound
        self.rule = rule
        self.checks = checks
        self.problems = problems

    @property
    def valid(self):
        return not self.problems and all(c for _, c in self.checks)

    def as_dict(self):
        return {
            'bound': str(self.bound),
            'side': self.bound.side,
            'rule': self.rule,
            'checks': [{'claim': claim, 'outcome': cert.outcome,
                    'witness': report.rational_dict(cert.witness)}
                for claim, cert in self.checks],
            'problems': list(self.problems),
            'valid': self.valid,
        }


def validate_bound(bound, n0, big_side):
    """Validate the use of 'bound' for every n >= n0.

    The argument must stay in (0, 1]. A truncated alternating series is a
    minorant when its last term is negative and a majorant otherwise. A
    truncated positive-term series is a minorant; as a majorant it needs a
    correction c x^d dominating the geometric remainder, that is
    c x^d (1 - q) >= t_(N+1) with q < 1. The cesaro kind is exact and
    takes no correction. Big side bounds must be nonnegative, so that
    their product stays a minorant.
    """
    x = bound.argument
    label = bound.label
    checks = [
        ("%s > 0" % label, ratfunc_nonneg_on_ray(x, n0, strict=True)),
        ("%s <= 1" % label, ratfunc_nonneg_on_ray(1 - x, n0)),
    ]
    problems = []
    kind, N = bound.kind, bound.order

    if kind == seqgen.CESARO:
        rule = 'exact'
        if bound.correction:
            problems.append("the identity takes no correction")
    elif kind in seqgen.ALTERNATING_KINDS:
        rule = 'alternating'
        side = term_coefficient(kind, N) < 0 and MINORANT or MAJORANT
        if side != bound.side:
            problems.append("order %d truncation of %s is a %s, not a %s"
                % (N, kind, side == MINORANT and 'minorant' or 'majorant',
                    bound.side == MINORANT and 'minorant' or 'majorant'))
        if bound.correction:
            problems.append("corrections only apply to positive series")
    elif kind in seqgen.POSITIVE_KINDS:
        if bound.side == MINORANT:
            rule = 'positive terms'
            if bound.correction:
                problems.append("a corrected minorant is not a partial sum")
        else:
            rule = 'geometric remainder'
            if not bound.correction:
                problems.append("a positive series majorant needs a "
                    "correction term")
            else:
                c, d = bound.correction
                q = x * x * remainder_ratio(kind, N)
                t = x ** term_power(kind, N + 1) * term_coefficient(kind, N + 1)
                checks.append(("1 - q(%s) > 0" % label,
                    ratfunc_nonneg_on_ray(1 - q, n0, strict=True)))
                checks.append(("%s*%s^%d*(1 - q) >= t_%d" % (c, label, d,
                        N + 1),
                    ratfunc_nonneg_on_ray(x ** d * c * (1 - q) - t, n0)))
    else:
        rule = 'unknown'
        problems.append("no bound rule for %r" % kind)

    if big_side:
        checks.append(("%s >= 0" % bound,
            ratfunc_nonneg_on_ray(bound.as_ratfunc(), n0)))
    return MajorantLemma(bound, rule, checks, problems)


class TailCertificate(object):
    """A proof (or a failed attempt) of one half of the criterion for n >= n0.

    `sturm_outcome` is the `Certificate` of big - small >= 0 on the ray;
    its numerator is `reduced_numerator`, its denominator
    `reduced_denominator` (certified positive on the ray).
    """

    def __init__(self, spec, schema, reduced, sturm_outcome, lemmas):
        self.spec = spec
        self.schema = schema.name
        self.which = schema.which
        self.n0 = schema.n0
        self.identity = schema.identity()
        self.reduced_numerator = reduced.numerator
        self.reduced_denominator = reduced.denominator
        self.sturm_outcome = sturm_outcome
        self.majorant_lemmas = lemmas

    @property
    def valid(self):
        return bool(self.sturm_outcome) and all(
            lemma.valid for lemma in self.majorant_lemmas)

    @property
    def witness(self):
        return self.sturm_outcome.witness

    def as_dict(self):
        return {
            'schema': self.schema,
            'which': self.which,
            'n0': self.n0,
            'identity': self.identity,
            'reduced_numerator': report.poly_list(self.reduced_numerator),
            'reduced_denominator': report.poly_list(self.reduced_denominator),
            'sturm_outcome': self.sturm_outcome.outcome,
            'witness': report.rational_dict(self.sturm_outcome.witness),
            'majorant_lemmas': [l.as_dict() for l in self.majorant_lemmas],
            'valid': self.valid,
        }

    def __repr__(self):
        return "<TailCertificate %s %s for n >= %d: %s>" % (
            self.schema, self.spec, self.n0,
            self.valid and 'valid' or 'invalid')


def tail_certificate(family, which, n0=None):
    """Prove half 'which' ('upper' or 'lower') of the criterion on a tail.

    Raise `SchemaError` when the family has no schema. 'n0' overrides the
    first index of the schema. A schema whose polynomial inequality fails
    comes back as an invalid certificate carrying a rational witness.
    """
    family = seqgen.parse_family(family)
    schema = tail_schema(family, which)
    if n0 is not None:
        if not isinstance(n0, int) or n0 < 0:
            raise ProgrammingError("n0 must be a nonnegative integer")
        schema.n0 = n0
    n0 = schema.n0
    lemmas = [validate_bound(b, n0, True) for b in schema.big[1]]
    lemmas.extend(validate_bound(b, n0, False) for b in schema.small[1])

    reduced = schema.reduction()
    outcome = ratfunc_nonneg_on_ray(reduced, n0)
    rv = TailCertificate(family.spec, schema, reduced, outcome, lemmas)
    _logger.info("%s: tail certificate %s for n >= %d is %s",
        family.spec, rv.schema, n0, rv.valid and 'valid' or 'invalid')
    return rv


# refutation

def zeta_tail_enclosure(s_exponent, n_split=DEFAULT_ZETA_SPLIT):
    """Enclose sum(m^-s for m >= 2) for an integer s >= 2.

    The terms up to 'n_split' are summed exactly (kept on a dyadic grid of
    `PRECISION_BITS` bits, rounding outward); the rest lies between the
    integrals of x^-s from n_split + 1 and from n_split.
    """
    s = int(s_exponent)
    if s < 2:
        raise ProgrammingError("zeta tail needs s >= 2, got %r"
            % (s_exponent,))
    if n_split < 2:
        raise ProgrammingError("n_split must be at least 2")
    acc = IntervalR(0)
    for m in range(2, n_split + 1):
        acc = (acc + Fraction(1, m ** s)).round_out(PRECISION_BITS)
    tail = IntervalR(Fraction(1, (s - 1) * (n_split + 1) ** (s - 1)),
        Fraction(1, (s - 1) * n_split ** (s - 1)))
    return acc + tail


"""Polynomial minorants g(x) <= a(x) of the generating functions on
(0, 1/2], nonnegative there; they bound the entries of column 0. Each is
checked by `column_minorant_lemmas()` before it is used."""
COLUMN_MINORANTS = {
    seqgen.CESARO: PolyQ((0, 1)),
    seqgen.LN1P: PolyQ((0, 1, Fraction(-1, 2))),
    seqgen.TAN: PolyQ((0, 1, 0, Fraction(1, 3))),
    seqgen.SINH: PolyQ((0, 1, 0, Fraction(1, 6))),
    seqgen.ASIN: PolyQ((0, 1, 0, Fraction(1, 6))),
    seqgen.SIN: PolyQ((0, 1, 0, Fraction(-1, 6))),
    seqgen.ATAN: PolyQ((0, 1, 0, Fraction(-1, 3))),
}

"""The truncation (kind, order) equal to each column minorant; tan has
none and goes through sin/cos."""
_COLUMN_TRUNCATIONS = {
    seqgen.CESARO: (seqgen.CESARO, 1),
    seqgen.LN1P: (seqgen.LN1P, 2),
    seqgen.SINH: (seqgen.SINH, 1),
    seqgen.ASIN: (seqgen.ASIN, 1),
    seqgen.SIN: (seqgen.SIN, 1),
    seqgen.ATAN: (seqgen.ATAN, 1),
}


def column_minorant_lemmas(family):
    """Check 0 <= g(x_n) <= a_n for n >= 1, g the column minorant.

    Return a list of `MajorantLemma` on x = 1/(n+k). For tan the bound
    follows from g cos <= g cos[2] <= sin[1] <= sin with cos > 0.
    """
    family = seqgen.parse_family(family)
    if not family.builtin:
        raise NotSupportedError("no column minorant for %s" % family.spec)
    name = family.family
    g = COLUMN_MINORANTS[name]
    x = RatFuncQ(1, _linear(family.shift))
    if name != seqgen.TAN:
        kind, order = _COLUMN_TRUNCATIONS[name]
        bound = Bound(kind, x, order, MINORANT)
        lemma = validate_bound(bound, 1, True)
        if bound.polynomial() != g:
            lemma.problems.append("minorant is not %s" % bound)
        return [lemma]

    sin1 = Bound(seqgen.SIN, x, 1, MINORANT)
    cos1 = Bound(seqgen.COS, x, 1, MINORANT)
    cos2 = Bound(seqgen.COS, x, 2, MAJORANT)
    lemmas = [validate_bound(sin1, 1, True), validate_bound(cos1, 1, True),
        validate_bound(cos2, 1, False)]
    gx = g.compose_ratfunc(x)
    checks = [
        ("g(x) >= 0", ratfunc_nonneg_on_ray(gx, 1)),
        ("%s > 0" % cos1, ratfunc_nonneg_on_ray(cos1.as_ratfunc(), 1,
            strict=True)),
        ("%s - g(x)*%s >= 0" % (sin1, cos2), ratfunc_nonneg_on_ray(
            sin1.as_ratfunc() - gx * cos2.as_ratfunc(), 1)),
    ]
    lemmas.append(MajorantLemma(Bound(seqgen.TAN, x, 1, MINORANT),
        'quotient', checks, []))
    return lemmas


class RefutationRecord(object):
    """Outcome of `refute_by_normaloid()`.

    `column_norm_sq_lower` is a certified lower bound of |(M - I) e_0|^2;
    the family is refuted when it exceeds `threshold`.
    """

    def __init__(self, spec, lam, a0, minorant, zeta_terms, lower,
            threshold=1, reason=None, lemmas=()):
        self.spec = spec
        self.lam = lam
        self.a0 = a0
        self.minorant = minorant
        self.minorant_lemmas = list(lemmas)
        self.zeta_terms = zeta_terms
        self.column_norm_sq_lower = lower
        self.threshold = as_rat(threshold)
        self.reason = reason

    @property
    def refuted(self):
        return (self.column_norm_sq_lower is not None
            and self.column_norm_sq_lower > self.threshold
            and all(lemma.valid for lemma in self.minorant_lemmas))

    __bool__ = lambda self: self.refuted

    def as_dict(self):
        return {
            'lambda': report.rational_dict(self.lam),
            'a0': report.interval_dict(self.a0),
            'minorant': report.poly_list(self.minorant),
            'minorant_lemmas': [lemma.as_dict()
                for lemma in self.minorant_lemmas],
            'zeta_terms': [{'exponent': s,
                    'coefficient': report.rational_dict(c),
                    'enclosure': report.interval_dict(iv)}
                for s, c, iv in self.zeta_terms],
            'column_norm_sq_lower': report.rational_dict(
                self.column_norm_sq_lower),
            'threshold': report.rational_dict(self.threshold),
            'refuted': self.refuted,
            'reason': self.reason,
        }

    def __repr__(self):
        return "<RefutationRecord %s L=%s refuted=%s>" % (self.spec,
            self.column_norm_sq_lower is not None
                and "%.6f" % self.column_norm_sq_lower or None,
            self.refuted)


def refute_by_normaloid(family, lam=1, n_split=DEFAULT_ZETA_SPLIT,
        budget=None):
    """Try to refute hyponormality through the column |(M - I) e_0|.

    The spectrum of M is the disk |z - 1| <= 1 when a_0 lies in (0, 2), so
    a hyponormal M - I would be normaloid of norm 1. The column norm is
    bounded below by (a_0 - 1)^2 plus sum(g(1/(n+k))^2 for n >= 1), g a
    polynomial minorant; the squares expand into zeta tails. Return a
    `RefutationRecord`; it is refuted when the bound exceeds 1.
    """
    family = seqgen.parse_family(family)
    lam = as_rat(lam)
    if lam != 1:
        raise NotSupportedError("only the translation by 1 is supported")
    if not family.builtin:
        raise NotSupportedError("no column minorant for %s" % family.spec)
    g = COLUMN_MINORANTS[family.family]
    k = family.shift
    lemmas = column_minorant_lemmas(family)

    order = as_order(None, budget)
    a0 = value_enclosure(family, 0, order, width=Fraction(1, 10 ** 12),
        budget=order.budget)
    if not (a0.lo > 0 and a0.hi < 2):
        return RefutationRecord(family.spec, lam, a0, g, [], None,
            reason="a_0 not certified inside (0, 2)", lemmas=lemmas)

    # sum over n >= 1 of x_n^j, x_n = 1/(n+k), is the zeta tail without
    # the terms m = 2..k
    square = g * g
    total = (a0 - 1) ** 2
    terms = []
    for j, e in enumerate(square.coeffs):
        if not e:
            continue
        if j < 2:
            raise ProgrammingError("minorant square must vanish to order 2")
        z = zeta_tail_enclosure(j, n_split)
        z = z - sum(Fraction(1, m ** j) for m in range(2, k + 1))
        terms.append((j, e, z))
        total = total + e * z
    rv = RefutationRecord(family.spec, lam, a0, g, terms, total.lo,
        lemmas=lemmas)
    _logger.info("%s: column norm squared >= %.6f, %s", family.spec,
        total.lo, rv.refuted and 'refuted' or 'inconclusive')
    if not all(lemma.valid for lemma in lemmas):
        rv.reason = "column minorant not certified"
    elif not rv.refuted:
        rv.reason = "column norm bound does not exceed 1"
    return rv


# the whole pipeline

class CertReport(object):
    """Everything `certify()` found out about a family."""

    def __init__(self, spec):
        self.spec = spec
        self.verdict = UNDECIDED
        self.hypotheses = None
        self.prefix_results = []
        self.prefix_max = None
        self.tail = None
        self.refutation = None
        self.diagnostics = []
        self.elapsed = None
        self.max_order = 0

    def as_dict(self, timing=True):
        rv = {
            'family': self.spec,
            'verdict': self.verdict,
            'hypothesis_checks': None,
            'prefix_max': self.prefix_max,
            'prefix_results': [v.as_dict() for v in self.prefix_results],
            'tail': None,
            'refutation': None,
            'max_order': self.max_order,
            'diagnostics': list(self.diagnostics),
        }
        if self.hypotheses is not None:
            rv['hypothesis_checks'] = self.hypotheses.as_dict()
        if self.tail is not None:
            rv['tail'] = {'upper': self.tail[0].as_dict(),
                'lower': self.tail[1].as_dict()}
        if self.refutation is not None:
            rv['refutation'] = self.refutation.as_dict()
        if timing:
            rv['timing'] = {'elapsed_seconds': report.float_str(self.elapsed)}
        return rv

    def __repr__(self):
        return "<CertReport %s: %s>" % (self.spec, self.verdict)


def certify(family, prefix_max=DEFAULT_PREFIX, budget=None, workers=1,
        cache=None):
    """Certify, refute or give up on the hyponormality of M(a).

    The family is certified hyponormal when a_0 lies in (0, 1], the
    criterion holds on 0..n0 (and on the rest of the checked prefix) and
    both tail certificates from n0 on are valid. Otherwise the column
    refutation is attempted. Failing both the verdict is undecided and
    `diagnostics` says why.
    """
    started = time.time()
    family = seqgen.parse_family(family)
    rv = CertReport(family.spec)

    tails = None
    try:
        tails = (tail_certificate(family, UPPER),
            tail_certificate(family, LOWER))
    except SchemaError as e:
        rv.diagnostics.append(str(e))
    n0 = 0
    if tails:
        n0 = max(t.n0 for t in tails)
        rv.tail = tails
        for t in tails:
            if not t.valid:
                rv.diagnostics.append("tail certificate %s is invalid"
                    % t.schema)

    rv.prefix_max = max(prefix_max, n0)
    prefix = check_prefix(family, rv.prefix_max, budget=budget,
        workers=workers, cache=cache)
    rv.hypotheses = prefix.hypotheses
    rv.prefix_results = prefix.verdicts
    rv.max_order = max([v.order for v in prefix.verdicts] or [0])

    h = prefix.hypotheses
    if h.a0_check != HOLDS:
        rv.diagnostics.append("a_0 = %s is not certified inside (0, 1]"
            % report.interval_str(h.a0))
    elif h.decrease_check != HOLDS:
        rv.diagnostics.append("strict decrease not certified at n=%s"
            % h.first_nondecrease)
    for v in prefix.verdicts:
        if not v.holds:
            rv.diagnostics.append("criterion at n=%d: lower %s, upper %s"
                % (v.n, v.lower_check, v.upper_check))
            break

    if (tails and all(t.valid for t in tails) and h.hold
            and prefix.holds_up_to(n0) and prefix.first_failure is None):
        rv.verdict = CERTIFIED
    elif family.builtin:
        rv.refutation = refute_by_normaloid(family, budget=budget)
        if rv.refutation.refuted:
            rv.verdict = REFUTED
        else:
            rv.diagnostics.append(rv.refutation.reason)
    else:
        rv.diagnostics.append("no column minorant for %s" % family.spec)

    rv.elapsed = time.time() - started
    _logger.info("%s: %s in %.2fs", family.spec, rv.verdict, rv.elapsed)
    return rv
