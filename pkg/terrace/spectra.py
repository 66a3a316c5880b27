"""Numerical laboratory for terraced matrices

Floating point experiments on M(a): finite truncations, the quadratic
form <(M*M - MM*) f, f> with the infinite part of the sums accounted for,
compressions of the self-commutator to the first N basis vectors, their
smallest eigenvalue, and the norm of the truncations.

Nothing computed here is a certificate: these are evidence for the
questions `terrace.certify` leaves undecided. Entries come from rigorous
enclosures rounded to binary64; eigenvalues come from LAPACK through
`scipy.linalg.eigh`.
"""
# terrace/spectra.py - truncations, compressions and eigenvalues
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

import numpy as np
from scipy import linalg, special

from terrace import report, seqgen
from terrace.errors import DataError, InternalError
from terrace.errors import ProgrammingError

_logger = logging.getLogger("terrace.spectra")


"""Width of the enclosures whose midpoints become matrix entries."""
LAB_WIDTH = Fraction(1, 10 ** 30)

"""Series order budget of the laboratory enclosures."""
LAB_BUDGET = 128

"""Largest dimension handled with dense storage."""
MAX_DIMENSION = 4096

"""Largest support accepted by `quadratic_form()`."""
MAX_SUPPORT = 10000

"""Relative residual allowed for a reported eigenpair."""
EIGEN_TOLERANCE = 1e-8

"""Largest asymmetry accepted by `SymMatrix`."""
SYMMETRY_TOLERANCE = 1e-12

"""Terms summed explicitly before the zeta expansion of a tail."""
TAIL_CUTOFF = 1000

"""Degree of the series expansion used for tails."""
TAIL_DEGREE = 24

"""Power iteration parameters of `norm_estimate()`."""
NORM_TOLERANCE = 1e-13
NORM_MAX_ITERATIONS = 20000

"""Eigenvalues above -NEGATIVITY_FLOOR count as nonnegative."""
NEGATIVITY_FLOOR = 1e-10

"""Tags of `SpectrumReport`."""
CONSISTENT = 'consistent-with-hyponormal'
REFUTATION_CONSISTENT = 'refutation-consistent'
INCONCLUSIVE = 'inconclusive'


class EigenError(InternalError):
    """The eigensolver missed its residual contract.

    `best` holds the best (eigenvalue, eigenvector, residual) found.
    """

    def __init__(self, msg, best=None):
        InternalError.__init__(self, msg)
        self.best = best


_ufuncs = {
    seqgen.CESARO: lambda x: x,
    seqgen.LN1P: np.log1p,
    seqgen.TAN: np.tan,
    seqgen.SINH: np.sinh,
    seqgen.SIN: np.sin,
    seqgen.ATAN: np.arctan,
    seqgen.ASIN: np.arcsin,
}


def _check_dimension(N):
    if not isinstance(N, (int, np.integer)) or N < 1:
        raise ProgrammingError("dimension must be a positive integer, got %r"
            % (N,))
    if N > MAX_DIMENSION:
        raise ProgrammingError("dimension %d exceeds %d" % (N, MAX_DIMENSION))


def lab_values(family, count, start=0):
    """Return a_start .. a_(start+count-1) as floats.

    Each value is the midpoint of an enclosure narrower than `LAB_WIDTH`,
    so the only error is the final rounding to binary64.
    """
    family = seqgen.parse_family(family)
    rv = np.empty(count)
    for i in range(count):
        iv = seqgen.value_enclosure(family, start + i, width=LAB_WIDTH,
            budget=LAB_BUDGET)
        rv[i] = float(iv.midpoint())
    return rv


def _float_values(family, start, stop):
    # plain libm values, only used far out in tails
    if not family.builtin:
        return lab_values(family, stop - start, start)
    x = 1.0 / (np.arange(start, stop, dtype=float) + family.shift)
    return _ufuncs[family.family](x)


def tail_bracket(family, m):
    """Return (lo, hi) floats bracketing sum(a_i^2 for i >= m).

    For builtin families the first `TAIL_CUTOFF` terms are summed and the
    rest expanded as sum(e_j zeta(j, M + k)), the e_j being the Maclaurin
    coefficients of g^2; the first omitted term sets the bracket width.
    Custom families fall back to a_i <= 2/(i+1), which gives [0, 4/M] for
    the rest.
    """
    family = seqgen.parse_family(family)
    M = m + TAIL_CUTOFF
    head = math.fsum(_float_values(family, m, M) ** 2)
    if not family.builtin:
        return head, head + 4.0 / M

    e = seqgen.taylor_coefficients(family, TAIL_DEGREE + 2)
    sq = np.convolve([float(c) for c in e], [float(c) for c in e])
    q = M + family.shift
    rest = 0.0
    for j in range(2, TAIL_DEGREE + 1):
        if sq[j]:
            rest += sq[j] * special.zeta(j, q)
    err = sum(abs(sq[j]) * special.zeta(j, q)
        for j in (TAIL_DEGREE + 1, TAIL_DEGREE + 2))
    err += 4 * np.finfo(float).eps * (head + rest)
    return head + rest - err, head + rest + err


class TruncatedTerraced(object):
    """The N x N top left corner of M(a)."""

    def __init__(self, spec, values):
        self.spec = spec
        self.values = np.asarray(values, dtype=float)
        self.N = len(self.values)

    @property
    def entries(self):
        """Dense lower triangular array: row i is a_i on columns 0..i."""
        return np.tril(np.repeat(self.values[:, None], self.N, axis=1))

    def matvec(self, v):
        """M v in O(N): (M v)_i = a_i (v_0 + ... + v_i)."""
        return self.values * np.cumsum(v)

    def rmatvec(self, u):
        """M^T u in O(N): (M^T u)_j = sum(a_i u_i for i >= j)."""
        return np.cumsum((self.values * u)[::-1])[::-1]

    def __repr__(self):
        return "<TruncatedTerraced %s N=%d>" % (self.spec, self.N)


def build_truncation(family, N):
    """Return the `TruncatedTerraced` of size N of the family."""
    family = seqgen.parse_family(family)
    _check_dimension(N)
    return TruncatedTerraced(family.spec, lab_values(family, N))


class FinSuppVec(object):
    """A finitely supported vector f_0 .. f_(n-1) of l^2."""

    def __init__(self, coefficients):
        self.coefficients = np.asarray(coefficients, dtype=float).ravel()

    @classmethod
    def basis(cls, n, size=None):
        rv = np.zeros(size or n + 1)
        rv[n] = 1.0
        return cls(rv)

    @property
    def support(self):
        return len(self.coefficients)

    def norm(self):
        return float(np.linalg.norm(self.coefficients))


def quadratic_form(family, f):
    """Return (lo, hi) bracketing <(M*M - MM*) f, f> for a finite f.

    With S_i the prefix sums of f and S the full sum,
    |Mf|^2 = sum(a_i^2 S_i^2, i < n) + S^2 sum(a_i^2, i >= n) and
    |M*f|^2 = sum((sum(a_i f_i, i >= j))^2, j < n); only the infinite
    sum is not exact and `tail_bracket()` encloses it.
    """
    family = seqgen.parse_family(family)
    if not isinstance(f, FinSuppVec):
        f = FinSuppVec(f)
    n = f.support
    if n > MAX_SUPPORT:
        raise ProgrammingError("support %d exceeds %d" % (n, MAX_SUPPORT))
    if n == 0 or not f.coefficients.any():
        return 0.0, 0.0
    c = f.coefficients
    a = lab_values(family, n)
    S = np.cumsum(c)
    head = math.fsum((a * S) ** 2)
    star = math.fsum(np.cumsum((a * c)[::-1]) ** 2)
    lo, hi = tail_bracket(family, n)
    s2 = S[-1] ** 2
    return head + s2 * lo - star, head + s2 * hi - star


class SymMatrix(object):
    """A dense symmetric matrix; asymmetry is checked then averaged away."""

    def __init__(self, array, tail_width=0.0):
        array = np.asarray(array, dtype=float)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise DataError("not a square matrix: shape %r" % (array.shape,))
        asym = np.max(np.abs(array - array.T)) if array.size else 0.0
        if asym > SYMMETRY_TOLERANCE * max(1.0, np.max(np.abs(array))):
            raise DataError("matrix is not symmetric (asymmetry %g)" % asym)
        self.array = (array + array.T) / 2
        self.tail_width = tail_width

    @property
    def N(self):
        return self.array.shape[0]

    def form(self, f):
        f = np.asarray(f, dtype=float)
        return float(f @ self.array @ f)


def self_commutator_compression(family, N):
    """The compression of M*M - MM* to span(e_0 .. e_(N-1)).

    G_jk = T(max(j, k)) - a_j a_k (min(j, k) + 1), T(m) the tail
    sum(a_i^2 for i >= m), computed from one bracketed tail T(N) and
    suffix sums. The returned `SymMatrix` records the width of the tail
    bracket in `tail_width`.
    """
    family = seqgen.parse_family(family)
    _check_dimension(N)
    a = lab_values(family, N)
    lo, hi = tail_bracket(family, N)
    T = np.empty(N + 1)
    T[N] = (lo + hi) / 2
    T[:N] = np.cumsum((a ** 2)[::-1])[::-1] + T[N]
    idx = np.arange(N)
    G = T[np.maximum.outer(idx, idx)] - np.outer(a, a) * (
        np.minimum.outer(idx, idx) + 1)
    _logger.debug("%s: compression of size %d, tail bracket width %g",
        family.spec, N, hi - lo)
    return SymMatrix(G, tail_width=hi - lo)


def min_eigenvalue(A, tolerance=EIGEN_TOLERANCE):
    """Return (value, residual) for the smallest eigenvalue of 'A'.

    LAPACK reduces A to tridiagonal form and solves only for the bottom
    eigenpair. The residual |A v - l v| must stay below tolerance |A|_F,
    else `EigenError` is raised with the pair attached.
    """
    if not isinstance(A, SymMatrix):
        A = SymMatrix(A)
    a = A.array
    try:
        w, v = linalg.eigh(a, subset_by_index=[0, 0])
    except linalg.LinAlgError as e:
        raise EigenError("eigensolver failed: %s" % e)
    lam = float(w[0])
    vec = v[:, 0]
    residual = float(np.linalg.norm(a @ vec - lam * vec))
    scale = float(np.linalg.norm(a))
    if residual > tolerance * max(scale, np.finfo(float).tiny):
        raise EigenError("residual %g above %g" % (residual,
            tolerance * scale), best=(lam, vec, residual))
    return lam, residual


def norm_estimate(family, N, tolerance=NORM_TOLERANCE,
        max_iterations=NORM_MAX_ITERATIONS):
    """Largest singular value of the N x N truncation.

    Power iteration on M^T M from the vector of ones; the Rayleigh
    quotients increase towards the answer.
    """
    if isinstance(family, TruncatedTerraced):
        M = family
    else:
        M = build_truncation(family, N)
    v = np.ones(M.N) / math.sqrt(M.N)
    lam = 0.0
    for i in range(max_iterations):
        w = M.rmatvec(M.matvec(v))
        new = float(v @ w)
        nw = np.linalg.norm(w)
        if nw == 0:
            return 0.0
        v = w / nw
        if abs(new - lam) <= tolerance * new:
            lam = new
            break
        lam = new
    else:
        _logger.warning("%s: power iteration stopped after %d steps",
            M.spec, max_iterations)
    return math.sqrt(lam)


class SpectrumReport(object):
    """Evidence about the compression of size N: never a verdict."""

    def __init__(self, spec, N, min_eigenvalue, residual, tail_bound_used,
            tag, weighted=None):
        self.spec = spec
        self.N = N
        self.min_eigenvalue = min_eigenvalue
        self.residual = residual
        self.tail_bound_used = tail_bound_used
        self.tag = tag
        self.weighted = weighted

    def as_dict(self):
        rv = {
            'family': self.spec,
            'N': self.N,
            'min_eigenvalue': report.float_str(self.min_eigenvalue),
            'residual': report.float_str(self.residual),
            'tail_bound_used': report.float_str(self.tail_bound_used),
            'tag': self.tag,
        }
        if self.weighted is not None:
            rv['weighted_monotonicity'] = self.weighted.as_dict()
        return rv

    def csv_row(self):
        return [self.N, report.float_str(self.min_eigenvalue),
            report.float_str(self.residual)]

    def __repr__(self):
        return "<SpectrumReport %s N=%d min=%g %s>" % (self.spec, self.N,
            self.min_eigenvalue, self.tag)


def classify(lam, residual, tail_width, N, scale, tolerance=EIGEN_TOLERANCE):
    """Tag a smallest eigenvalue given its error budget.

    The tail constant enters every entry of the compression, so its
    bracket moves the eigenvalue by at most N times its width.
    """
    margin = residual + N * tail_width + NEGATIVITY_FLOOR
    if lam >= -margin:
        return CONSISTENT
    if lam < -(margin + tolerance * scale):
        return REFUTATION_CONSISTENT
    return INCONCLUSIVE


def explore_open_question(family, dims, tolerance=EIGEN_TOLERANCE,
        weighted=False):
    """Return one `SpectrumReport` per dimension in 'dims'.

    With 'weighted' the reports also carry the classification of the
    weighted sequence (n+1) a_n up to the largest dimension.
    """
    family = seqgen.parse_family(family)
    dims = list(dims)
    for N in dims:
        _check_dimension(N)
    monotonicity = None
    if weighted:
        monotonicity = seqgen.weighted_monotonicity(family, max(2, max(dims)))

    rv = []
    for N in dims:
        G = self_commutator_compression(family, N)
        lam, residual = min_eigenvalue(G, tolerance)
        scale = float(np.linalg.norm(G.array))
        tag = classify(lam, residual, G.tail_width, N, scale, tolerance)
        _logger.info("%s N=%d: min eigenvalue %.3e (%s)", family.spec, N,
            lam, tag)
        rv.append(SpectrumReport(family.spec, N, lam, residual,
            G.tail_width, tag, monotonicity))
    return rv
