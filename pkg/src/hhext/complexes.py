"""Chain and cochain complexes computing Hochschild (co)homology dimensions.

The degree-m term is the exterior algebra tensored with the degree-m
commutative monomials; basis elements are pairs (monomial, exponent
vector), ordered monomial-major (length-lex on the monomial, then lex on
the exponent vector).  That ordering is fixed so reports are byte-stable.

A reduced bar complex provides an independent oracle for the same
dimensions; it never touches the small resolution's generators.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product

from .exactla import SparseMatrix, rank
from .exterior import ExtMonomial, check_n, merge_signed, monomials, mu_count, signed_append
from .formulas import binom
from .resolution import exponent_vectors

DEFAULT_ORACLE_CAP = 50000


class OracleInfeasibleError(Exception):
    """Raised when the bar oracle would need a matrix beyond the size cap."""


@lru_cache(maxsize=None)
def chain_basis(n, m):
    """Ordered basis of the degree-m chain/cochain term: all pairs
    (basis monomial, exponent vector of degree m)."""
    return tuple(
        (mono, e) for mono in monomials(n) for e in exponent_vectors(n, m)
    )


@lru_cache(maxsize=None)
def _chain_index(n, m):
    return {
        (mono.indices, e): i for i, (mono, e) in enumerate(chain_basis(n, m))
    }


def chain_dim(n, m):
    return 2 ** n * binom(n + m - 1, n - 1)


def grade(mono, e):
    """Size of the support: indices in the monomial or with a positive exponent."""
    return len(set(mono.indices) | {h + 1 for h, v in enumerate(e) if v})


def positive_degree(mono, e):
    """Count of monomial indices whose exponent entry is zero."""
    return sum(1 for t in mono.indices if e[t - 1] == 0)


def negative_degree(mono, e):
    """Total exponent excess over the monomial's indicator vector."""
    total = 0
    for h in range(1, len(e) + 1):
        total += max(e[h - 1] - (1 if h in mono.indices else 0), 0)
    return total


class ComplexSlice:
    """One differential of a complex, with its fixed basis orderings."""

    __slots__ = ("n", "m", "field", "matrix", "domain_basis", "codomain_basis")

    def __init__(self, n, m, field, matrix, domain_basis, codomain_basis):
        self.n = n
        self.m = m
        self.field = field
        self.matrix = matrix
        self.domain_basis = domain_basis
        self.codomain_basis = codomain_basis


@lru_cache(maxsize=None)
def chain_matrix(n, m, field):
    """The degree-m chain differential, lowering exponent degree m to m-1.

    The column of (mono, e) has, for every h in the support of e with h
    not in mono, the entry ((-1)^j + (-1)^m) * (-1)^mu at the row for
    (mono with h inserted, e minus h), where j is the monomial degree and
    mu counts monomial indices below h.
    """
    check_n(n)
    if m < 1:
        raise ValueError("m must be >= 1")
    domain = chain_basis(n, m)
    codomain = chain_basis(n, m - 1)
    rows = _chain_index(n, m - 1)
    entries = {}
    for col, (mono, e) in enumerate(domain):
        factor = field.of((-1) ** mono.degree + (-1) ** m)
        if factor == field.zero:
            continue
        for h in range(1, n + 1):
            if e[h - 1] == 0:
                continue
            res = signed_append(mono, h)
            if res is None:
                continue
            sign, target = res
            e2 = list(e)
            e2[h - 1] -= 1
            r = rows[(target.indices, tuple(e2))]
            v = factor if sign > 0 else field.neg(factor)
            entries[(r, col)] = v
    M = SparseMatrix(len(codomain), len(domain), field, entries)
    return ComplexSlice(n, m, field, M, domain, codomain)


@lru_cache(maxsize=None)
def cochain_matrix(n, m, field):
    """The cochain differential raising exponent degree m to m+1.

    The column of (mono, e) has, for every h not in mono, the entry
    (1 + (-1)^(m+j+1)) * (-1)^mu at the row for (mono with h inserted,
    e plus h).
    """
    check_n(n)
    if m < 0:
        raise ValueError("m must be >= 0")
    domain = chain_basis(n, m)
    codomain = chain_basis(n, m + 1)
    rows = _chain_index(n, m + 1)
    entries = {}
    for col, (mono, e) in enumerate(domain):
        factor = field.of(1 + (-1) ** (m + mono.degree + 1))
        if factor == field.zero:
            continue
        for h in range(1, n + 1):
            res = signed_append(mono, h)
            if res is None:
                continue
            sign, target = res
            e2 = list(e)
            e2[h - 1] += 1
            r = rows[(target.indices, tuple(e2))]
            v = factor if sign > 0 else field.neg(factor)
            entries[(r, col)] = v
    M = SparseMatrix(len(codomain), len(domain), field, entries)
    return ComplexSlice(n, m, field, M, domain, codomain)


@lru_cache(maxsize=None)
def chain_rank(n, m, field):
    return rank(chain_matrix(n, m, field).matrix)


@lru_cache(maxsize=None)
def cochain_rank(n, m, field):
    return rank(cochain_matrix(n, m, field).matrix)


def hh_dim_computed(n, m, field):
    """Hochschild homology dimension from matrix ranks (rank-nullity)."""
    if m < 0:
        raise ValueError("m must be >= 0")
    if m == 0:
        return 2 ** n - chain_rank(n, 1, field)
    return chain_dim(n, m) - chain_rank(n, m, field) - chain_rank(n, m + 1, field)


def hhc_dim_computed(n, m, field):
    """Hochschild cohomology dimension from matrix ranks."""
    if m < 0:
        raise ValueError("m must be >= 0")
    if m == 0:
        return 2 ** n - cochain_rank(n, 0, field)
    return chain_dim(n, m) - cochain_rank(n, m - 1, field) - cochain_rank(n, m, field)


def verify_d_squared_zero(n, m_max, field):
    """Consecutive chain and cochain differentials compose to zero, as
    exact matrix products, for every degree within m_max."""
    for m in range(1, m_max):
        prod = chain_matrix(n, m, field).matrix.matmul(
            chain_matrix(n, m + 1, field).matrix
        )
        if not prod.is_zero():
            return False
    for m in range(1, m_max + 1):
        prod = cochain_matrix(n, m, field).matrix.matmul(
            cochain_matrix(n, m - 1, field).matrix
        )
        if not prod.is_zero():
            return False
    return True


# ---------------------------------------------------------------------------
# Reduced bar complex oracle.


@lru_cache(maxsize=None)
def _nonunit_monomials(n):
    check_n(n)
    return tuple(m.indices for m in monomials(n) if m.indices)


@lru_cache(maxsize=None)
def _all_monomials(n):
    return tuple(m.indices for m in monomials(n))


def bar_chain_dim(n, m):
    return 2 ** n * (2 ** n - 1) ** m


@lru_cache(maxsize=None)
def _bar_chain_basis(n, m):
    """Basis of the degree-m reduced Hochschild chain term: a coefficient
    monomial followed by m nonunit monomials."""
    return tuple(
        (a0,) + rest
        for a0 in _all_monomials(n)
        for rest in product(_nonunit_monomials(n), repeat=m)
    )


@lru_cache(maxsize=None)
def _bar_chain_index(n, m):
    return {t: i for i, t in enumerate(_bar_chain_basis(n, m))}


@lru_cache(maxsize=None)
def bar_chain_matrix(n, m, field):
    """Degree-m differential of the reduced Hochschild chain complex:
    alternating sum of adjacent products, with the last slot wrapping
    around onto the coefficient.  Interior products of nonunit monomials
    are never the unit, so no extra normalization is needed.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    domain = _bar_chain_basis(n, m)
    rows = _bar_chain_index(n, m - 1)
    entries = {}
    for col, t in enumerate(domain):
        acc = {}

        def put(target, s):
            acc[target] = acc.get(target, 0) + s

        res = merge_signed(t[0], t[1])
        if res is not None:
            put((res[1],) + t[2:], res[0])
        for i in range(1, m):
            res = merge_signed(t[i], t[i + 1])
            if res is not None:
                put(t[:i] + (res[1],) + t[i + 2:], (-1) ** i * res[0])
        res = merge_signed(t[m], t[0])
        if res is not None:
            put((res[1],) + t[1:m], (-1) ** m * res[0])
        for target, s in acc.items():
            v = field.of(s)
            if v != field.zero:
                entries[(rows[target], col)] = v
    return SparseMatrix(len(rows), len(domain), field, entries)


@lru_cache(maxsize=None)
def _bar_cochain_basis(n, m):
    """Basis of degree-m reduced Hochschild cochains: an argument tuple of
    m nonunit monomials together with a value monomial."""
    return tuple(
        (w, b)
        for w in product(_nonunit_monomials(n), repeat=m)
        for b in _all_monomials(n)
    )


@lru_cache(maxsize=None)
def _bar_cochain_index(n, m):
    return {t: i for i, t in enumerate(_bar_cochain_basis(n, m))}


@lru_cache(maxsize=None)
def _splits(word):
    """All ways to split an increasing index tuple into two nonempty
    disjoint increasing tuples, with the sign of reassembling them."""
    out = []
    positions = range(len(word))
    for k in range(1, len(word)):
        for S in combinations(positions, k):
            u = tuple(word[i] for i in S)
            v = tuple(word[i] for i in positions if i not in S)
            sign, merged = merge_signed(u, v)
            out.append((u, v, sign))
    return tuple(out)


@lru_cache(maxsize=None)
def bar_cochain_matrix(n, m, field):
    """Differential from degree-m to degree-(m+1) reduced Hochschild
    cochains: left action on the value, alternating interior splits of
    the argument slots, and signed right action.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    domain = _bar_cochain_basis(n, m)
    rows = _bar_cochain_index(n, m + 1)
    nonunit = _nonunit_monomials(n)
    entries = {}
    for col, (w, b) in enumerate(domain):
        acc = {}

        def put(target, s):
            acc[target] = acc.get(target, 0) + s

        for a in nonunit:
            res = merge_signed(a, b)
            if res is not None:
                put(((a,) + w, res[1]), res[0])
            res = merge_signed(b, a)
            if res is not None:
                put((w + (a,), res[1]), (-1) ** (m + 1) * res[0])
        for i in range(1, m + 1):
            for u, v, sign in _splits(w[i - 1]):
                put((w[:i - 1] + (u, v) + w[i:], b), (-1) ** i * sign)
        for target, s in acc.items():
            val = field.of(s)
            if val != field.zero:
                entries[(rows[target], col)] = val
    return SparseMatrix(len(rows), len(domain), field, entries)


@lru_cache(maxsize=None)
def _bar_chain_rank(n, m, field):
    return rank(bar_chain_matrix(n, m, field))


@lru_cache(maxsize=None)
def _bar_cochain_rank(n, m, field):
    return rank(bar_cochain_matrix(n, m, field))


def largest_feasible_degree(n, cap=DEFAULT_ORACLE_CAP):
    """Largest m for which the bar oracle stays within the cap, i.e. with
    2^n (2^n - 1)^(m + 1) <= cap.  Can be -1 when even m = 0 is too big."""
    m = -1
    while bar_chain_dim(n, m + 2) <= cap:
        m += 1
    return m


def bar_oracle_dims(n, m_max, field, cap=DEFAULT_ORACLE_CAP):
    """Hochschild homology and cohomology dimensions up to m_max from the
    reduced bar complex alone.  Returns a list of (m, homology dim,
    cohomology dim).  Refuses to start if the largest matrix side
    2^n (2^n - 1)^(m_max + 1) exceeds the cap.
    """
    worst = bar_chain_dim(n, m_max + 1)
    if worst > cap:
        raise OracleInfeasibleError(
            f"bar complex dimension {worst} at degree {m_max + 1} "
            f"exceeds the cap {cap}"
        )
    out = []
    for m in range(m_max + 1):
        if m == 0:
            h = 2 ** n - _bar_chain_rank(n, 1, field)
            c = 2 ** n - _bar_cochain_rank(n, 0, field)
        else:
            dim = bar_chain_dim(n, m)
            h = dim - _bar_chain_rank(n, m, field) - _bar_chain_rank(n, m + 1, field)
            c = dim - _bar_cochain_rank(n, m - 1, field) - _bar_cochain_rank(n, m, field)
        out.append((m, h, c))
    return out
