"""Cup product structure on Hochschild cohomology.

Cocycles on the small resolution are stored by their values on the
resolution generators: a degree-m cochain is a sparse combination of
pairs (monomial, exponent vector of degree m).  The cup product of two
such cochains multiplies the monomial parts in the exterior algebra and
adds the exponent vectors (a convolution over all splittings).

Away from characteristic 2 a class has a canonical representative whose
monomial degrees match the cohomological degree mod 2; the opposite
parity part of any cocycle is a coboundary, and that is checked, not
assumed.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product

from .complexes import chain_dim, cochain_matrix, _chain_index, hhc_dim_computed
from .exactla import SpanBasis
from .exterior import check_n, merge_signed, monomials, center_basis
from .formulas import binom, same_parity
from .resolution import exponent_vectors


class CohomologyError(Exception):
    """A cochain failed a structural check (not a cocycle, or a residual
    that should be a coboundary is not one)."""


class CochainVector:
    """Sparse degree-m cochain: {(monomial indices, exponent vector): scalar}."""

    __slots__ = ("n", "m", "field", "terms")

    def __init__(self, n, m, field, terms):
        check_n(n)
        if m < 0:
            raise ValueError("cochain degree must be >= 0")
        self.n = n
        self.m = m
        self.field = field
        clean = {}
        for (idx, e), c in terms.items():
            if len(e) != n or sum(e) != m:
                raise ValueError(f"exponent vector {e} has wrong degree for m={m}")
            if c != field.zero:
                clean[(idx, e)] = c
        self.terms = clean

    def is_zero(self):
        return not self.terms

    def add(self, other):
        self._check(other)
        out = dict(self.terms)
        F = self.field
        for key, c in other.terms.items():
            v = F.add(out.get(key, F.zero), c)
            if v == F.zero:
                out.pop(key, None)
            else:
                out[key] = v
        return CochainVector(self.n, self.m, F, out)

    def scale(self, c):
        F = self.field
        c = F.of(c)
        return CochainVector(
            self.n, self.m, F, {k: F.mul(c, v) for k, v in self.terms.items()}
        )

    def sub(self, other):
        return self.add(other.scale(-1))

    def _check(self, other):
        if self.n != other.n or self.m != other.m or self.field != other.field:
            raise ValueError("incompatible cochains")

    def __eq__(self, other):
        return (
            isinstance(other, CochainVector)
            and self.n == other.n
            and self.m == other.m
            and self.field == other.field
            and self.terms == other.terms
        )

    def __repr__(self):
        return f"CochainVector(n={self.n}, m={self.m}, {self.terms})"


def zero_cochain(n, m, field):
    return CochainVector(n, m, field, {})


def unit_class(n, field):
    """The multiplicative unit: the empty monomial in degree 0."""
    return CochainVector(n, 0, field, {((), (0,) * n): field.one})


def apply_differential(vec):
    """Image of the cochain under the cochain differential, one degree up.

    Each term (mono, e) contributes (1 + (-1)^(m+j+1)) * (-1)^mu at
    (mono with h inserted, e plus h) for every h outside mono.
    """
    n, m, F = vec.n, vec.m, vec.field
    out = {}
    for (idx, e), c in vec.terms.items():
        j = len(idx)
        factor = F.of(1 + (-1) ** (m + j + 1))
        if factor == F.zero:
            continue
        base = F.mul(factor, c)
        for h in range(1, n + 1):
            if h in idx:
                continue
            mu = sum(1 for t in idx if t < h)
            new_idx = tuple(sorted(idx + (h,)))
            e2 = list(e)
            e2[h - 1] += 1
            key = (new_idx, tuple(e2))
            v = base if mu % 2 == 0 else F.neg(base)
            acc = F.add(out.get(key, F.zero), v)
            if acc == F.zero:
                out.pop(key, None)
            else:
                out[key] = acc
    return CochainVector(n, m + 1, F, out)


def is_cocycle(vec):
    return apply_differential(vec).is_zero()


def _row_vec(vec):
    index = _chain_index(vec.n, vec.m)
    return {index[key]: c for key, c in vec.terms.items()}


@lru_cache(maxsize=None)
def _image_span(n, m, field):
    """Echelonized span of the coboundaries in degree m (m >= 1)."""
    span = SpanBasis(field)
    for col in cochain_matrix(n, m - 1, field).matrix.columns():
        if col:
            span.insert(col)
    return span


def in_coboundary_image(vec):
    if vec.m == 0:
        return vec.is_zero()
    return _image_span(vec.n, vec.m, vec.field).contains(_row_vec(vec))


def class_representative(vec):
    """Canonical cocycle representative of the class of ``vec``.

    Keeps the terms whose monomial degree has the parity of the
    cohomological degree and drops the rest, after checking that the
    dropped part really is a coboundary.  Degree 0 has no coboundaries,
    so there the cocycle itself is returned.
    """
    if vec.field.char == 2:
        raise ValueError("parity reduction needs 2 invertible")
    if not is_cocycle(vec):
        raise CohomologyError("not a cocycle")
    if vec.m == 0:
        return vec
    F = vec.field
    pure = {}
    rest = {}
    for (idx, e), c in vec.terms.items():
        (pure if same_parity(len(idx), vec.m) else rest)[(idx, e)] = c
    residual = CochainVector(vec.n, vec.m, F, rest)
    if not residual.is_zero() and not in_coboundary_image(residual):
        raise CohomologyError("mixed-parity residual is not a coboundary")
    return CochainVector(vec.n, vec.m, F, pure)


def classes_equal(a, b):
    """Equality in cohomology: the difference is a cocycle and a coboundary."""
    diff = a.sub(b)
    if diff.is_zero():
        return True
    if not is_cocycle(diff):
        return False
    return in_coboundary_image(diff)


def is_zero_class(a):
    return classes_equal(a, zero_cochain(a.n, a.m, a.field))


def cup(a, b):
    """Cup product: multiply monomial parts, add exponent vectors."""
    if a.n != b.n or a.field != b.field:
        raise ValueError("incompatible cochains")
    n, F = a.n, a.field
    out = {}
    for (l1, e1), c1 in a.terms.items():
        for (l2, e2), c2 in b.terms.items():
            res = merge_signed(l1, l2)
            if res is None:
                continue
            sign, merged = res
            e = tuple(x + y for x, y in zip(e1, e2))
            v = F.mul(c1, c2)
            if sign < 0:
                v = F.neg(v)
            key = (merged, e)
            acc = F.add(out.get(key, F.zero), v)
            if acc == F.zero:
                out.pop(key, None)
            else:
                out[key] = acc
    return CochainVector(n, a.m + b.m, F, out)


def cohomology_basis(n, m, field):
    """Basis of degree-m cohomology classes, away from characteristic 2.

    Degree 0 is the center of the algebra.  In degree m >= 1 the basis
    vectors are the single terms whose monomial degree i satisfies
    p(i) = p(m), with i running over 0..n.
    """
    if field.char == 2:
        raise ValueError("characteristic 2 has no parity basis; every "
                         "cochain is a cocycle there")
    if m == 0:
        zero_e = (0,) * n
        return [
            CochainVector(n, 0, field, {(mono.indices, zero_e): field.one})
            for mono in center_basis(n, field)
        ]
    out = []
    for mono in monomials(n):
        if not same_parity(mono.degree, m):
            continue
        for e in exponent_vectors(n, m):
            out.append(
                CochainVector(n, m, field, {(mono.indices, e): field.one})
            )
    return out


def verify_cohomology_basis(n, m, field):
    """The claimed basis has the right size, consists of cocycles, and is
    independent modulo coboundaries."""
    basis = cohomology_basis(n, m, field)
    if len(basis) != hhc_dim_computed(n, m, field):
        return False
    span = SpanBasis(field)
    if m >= 1:
        for col in cochain_matrix(n, m - 1, field).matrix.columns():
            if col:
                span.insert(col)
    for v in basis:
        if not is_cocycle(v):
            return False
        if not span.insert(_row_vec(v)):
            return False
    return True


# ---------------------------------------------------------------------------
# Generators and their relations.


def _delta_e(n, *hs):
    e = [0] * n
    for h in hs:
        e[h - 1] += 1
    return tuple(e)


def deg0_generator(n, field, i, j):
    """Degree-0 class of the quadratic central monomial x_i x_j, i < j."""
    if not 1 <= i < j <= n:
        raise ValueError("need 1 <= i < j <= n")
    return CochainVector(n, 0, field, {((i, j), (0,) * n): field.one})


def deg1_generator(n, field, p, q):
    """Degree-1 class: generator p against the first power of exponent q."""
    if not (1 <= p <= n and 1 <= q <= n):
        raise ValueError("indices out of range")
    return CochainVector(n, 1, field, {((p,), _delta_e(n, q)): field.one})


def deg2_generator(n, field, s, t):
    """Degree-2 class with exponent vector supported on s and t, s <= t."""
    if not 1 <= s <= t <= n:
        raise ValueError("need 1 <= s <= t <= n")
    return CochainVector(n, 2, field, {((), _delta_e(n, s, t)): field.one})


def relation_instances(n, field):
    """Yield (family id, instance indices, lhs, rhs) for every instance of
    the generator relations in range.  rhs None means the product must be
    the zero class.

    Families are grouped by the degrees multiplied: deg00.* are products
    of two degree-0 generators, deg01.* a degree-0 by a degree-1, and so
    on.  Commutation families come first in each group, then the
    vanishing and rewriting families.
    """
    check_n(n)
    rng = range(1, n + 1)
    U = lambda i, j: deg0_generator(n, field, i, j)
    V = lambda p, q: deg1_generator(n, field, p, q)
    W = lambda s, t: deg2_generator(n, field, s, t)

    for i, j in combinations(rng, 2):
        for s, t in combinations(rng, 2):
            yield "deg00.1", (i, j, s, t), cup(U(i, j), U(s, t)), cup(U(s, t), U(i, j))
            if {i, j} & {s, t}:
                yield "deg00.2", (i, j, s, t), cup(U(i, j), U(s, t)), None
    for a, b, c, d in combinations(rng, 4):
        # patterns of two interleaved index pairs, in each relative order
        i, s, j, t = a, b, c, d
        yield "deg00.3", (i, j, s, t), cup(U(i, j), U(s, t)), cup(U(i, s), U(j, t)).scale(-1)
        i, s, t, j = a, b, c, d
        yield "deg00.4", (i, j, s, t), cup(U(i, j), U(s, t)), cup(U(i, s), U(t, j))
        s, i, t, j = a, b, c, d
        yield "deg00.5", (i, j, s, t), cup(U(i, j), U(s, t)), cup(U(s, i), U(t, j)).scale(-1)
        s, i, j, t = a, b, c, d
        yield "deg00.6", (i, j, s, t), cup(U(i, j), U(s, t)), cup(U(s, i), U(j, t))

    for i, j in combinations(rng, 2):
        for s in rng:
            for t in rng:
                yield "deg01.1", (i, j, s, t), cup(U(i, j), V(s, t)), cup(V(s, t), U(i, j))
                if s in (i, j):
                    yield "deg01.2", (i, j, s, t), cup(U(i, j), V(s, t)), None
    for a, b, c in combinations(rng, 3):
        for t in rng:
            s, i, j = a, b, c
            yield "deg01.3", (i, j, s, t), cup(U(i, j), V(s, t)), cup(U(s, i), V(j, t))
            i, s, j = a, b, c
            yield "deg01.4", (i, j, s, t), cup(U(i, j), V(s, t)), cup(U(i, s), V(j, t)).scale(-1)

    for i, j in combinations(rng, 2):
        for s, t in combinations_with_replacement(rng, 2):
            yield "deg02.1", (i, j, s, t), cup(U(i, j), W(s, t)), cup(W(s, t), U(i, j))

    for i in rng:
        for j in rng:
            for t in rng:
                yield "deg11.1", (i, j, i, t), cup(V(i, j), V(i, t)), None
    for i, s in combinations(rng, 2):
        for j in rng:
            for t in rng:
                if j <= t:
                    yield "deg11.2", (i, j, s, t), cup(V(i, j), V(s, t)), cup(U(i, s), W(j, t))
                if t <= j:
                    yield "deg11.3", (i, j, s, t), cup(V(i, j), V(s, t)), cup(U(i, s), W(t, j))
                if j <= t:
                    yield "deg11.4", (s, j, i, t), cup(V(s, j), V(i, t)), cup(U(i, s), W(j, t)).scale(-1)
                if t <= j:
                    yield "deg11.5", (s, j, i, t), cup(V(s, j), V(i, t)), cup(U(i, s), W(t, j)).scale(-1)

    for i in rng:
        for j in rng:
            for s, t in combinations_with_replacement(rng, 2):
                yield "deg12.1", (i, j, s, t), cup(V(i, j), W(s, t)), cup(W(s, t), V(i, j))
                if s < j <= t:
                    yield "deg12.2", (i, j, s, t), cup(V(i, j), W(s, t)), cup(V(i, s), W(j, t))
                if s < t <= j:
                    yield "deg12.3", (i, j, s, t), cup(V(i, j), W(s, t)), cup(V(i, s), W(t, j))

    for i, j in combinations_with_replacement(rng, 2):
        for s, t in combinations_with_replacement(rng, 2):
            yield "deg22.1", (i, j, s, t), cup(W(i, j), W(s, t)), cup(W(s, t), W(i, j))
            if i <= s <= j <= t:
                yield "deg22.2", (i, j, s, t), cup(W(i, j), W(s, t)), cup(W(i, s), W(j, t))
            if i <= s <= t <= j:
                yield "deg22.3", (i, j, s, t), cup(W(i, j), W(s, t)), cup(W(i, s), W(t, j))
            if s <= i <= t <= j:
                yield "deg22.4", (i, j, s, t), cup(W(i, j), W(s, t)), cup(W(s, i), W(t, j))
            if s <= i <= j <= t:
                yield "deg22.5", (i, j, s, t), cup(W(i, j), W(s, t)), cup(W(s, i), W(j, t))


RELATION_FAMILIES = (
    "deg00.1", "deg00.2", "deg00.3", "deg00.4", "deg00.5", "deg00.6",
    "deg01.1", "deg01.2", "deg01.3", "deg01.4",
    "deg02.1",
    "deg11.1", "deg11.2", "deg11.3", "deg11.4", "deg11.5",
    "deg12.1", "deg12.2", "deg12.3",
    "deg22.1", "deg22.2", "deg22.3", "deg22.4", "deg22.5",
)


def verify_ring_relations(n, field):
    """Check every relation instance as an equality of cohomology classes.

    Returns a list of per-family records {family, instances, failures}
    with failures listing the offending index tuples (empty when all
    instances hold).
    """
    stats = {fid: {"family": fid, "instances": 0, "failures": []} for fid in RELATION_FAMILIES}
    for fid, inst, lhs, rhs in relation_instances(n, field):
        rec = stats[fid]
        rec["instances"] += 1
        ok = is_zero_class(lhs) if rhs is None else classes_equal(lhs, rhs)
        if not ok:
            rec["failures"].append(inst)
    return [stats[fid] for fid in RELATION_FAMILIES]


def ring_relations_hold(n, field):
    return all(not rec["failures"] for rec in verify_ring_relations(n, field))


# ---------------------------------------------------------------------------
# Bulk structural checks over the basis.


@lru_cache(maxsize=None)
def _merge_table(n):
    mons = [m.indices for m in monomials(n)]
    return {(a, b): merge_signed(a, b) for a in mons for b in mons}


@lru_cache(maxsize=None)
def _basis_terms(n, m, parity_pure):
    """Single-term basis keys (indices, exponent) of degree m; restricted
    to monomial degrees of parity p(m) when parity_pure."""
    out = []
    for mono in monomials(n):
        if parity_pure and not same_parity(mono.degree, m):
            continue
        for e in exponent_vectors(n, m):
            out.append((mono.indices, e))
    return tuple(out)


def verify_graded_commutativity(n, field, total_deg_max):
    """a * b = (-1)^(st) b * a over all pairs of basis classes with
    degrees s + t <= total_deg_max.  Works on raw single terms; the
    product of two basis classes is again a single term or zero."""
    if field.char == 2:
        raise ValueError("use the characteristic-2 structure check instead")
    table = _merge_table(n)
    for s in range(total_deg_max + 1):
        for t in range(total_deg_max + 1 - s):
            sign = (-1) ** (s * t)
            left = _basis_terms(n, s, True)
            right = _basis_terms(n, t, True)
            for l1, e1 in left:
                for l2, e2 in right:
                    r12 = table[(l1, l2)]
                    r21 = table[(l2, l1)]
                    if r12 is None or r21 is None:
                        if r12 is not r21:
                            return False
                        continue
                    if r12[1] != r21[1] or r12[0] != sign * r21[0]:
                        return False
                    e12 = tuple(x + y for x, y in zip(e1, e2))
                    e21 = tuple(y + x for x, y in zip(e1, e2))
                    if e12 != e21:
                        return False
    return True


def verify_associativity(n, field, total_deg_max):
    """(a * b) * c = a * (b * c) over all triples of basis classes with
    total degree <= total_deg_max."""
    if field.char == 2:
        raise ValueError("use the characteristic-2 structure check instead")
    table = _merge_table(n)
    for s in range(total_deg_max + 1):
        for t in range(total_deg_max + 1 - s):
            for u in range(total_deg_max + 1 - s - t):
                for l1, e1 in _basis_terms(n, s, True):
                    for l2, e2 in _basis_terms(n, t, True):
                        r12 = table[(l1, l2)]
                        for l3, e3 in _basis_terms(n, u, True):
                            if r12 is None:
                                lk = None
                            else:
                                r = table[(r12[1], l3)]
                                lk = None if r is None else (r12[0] * r[0], r[1])
                            r23 = table[(l2, l3)]
                            if r23 is None:
                                rk = None
                            else:
                                r = table[(l1, r23[1])]
                                rk = None if r is None else (r23[0] * r[0], r[1])
                            if lk != rk:
                                return False
                            if lk is not None:
                                el = tuple((x + y) + z for x, y, z in zip(e1, e2, e3))
                                er = tuple(x + (y + z) for x, y, z in zip(e1, e2, e3))
                                if el != er:
                                    return False
    return True


def verify_unital(n, field, total_deg_max):
    """The degree-0 empty-monomial class is a two-sided unit on the basis."""
    one = unit_class(n, field)
    for m in range(total_deg_max + 1):
        for key in _basis_terms(n, m, field.char != 2):
            v = CochainVector(n, m, field, {key: field.one})
            if cup(one, v) != v or cup(v, one) != v:
                return False
    return True


# ---------------------------------------------------------------------------
# Presentation by generators and relations: normal form audit.


def presentation_normal_forms(n, degree, min_index=1):
    """Normal-form words of the given total degree.

    A word is an even-length strictly increasing chain of indices
    >= min_index grouped into degree-0 pair letters, extended by one
    degree-1 letter on the next chain index when the degree is odd,
    followed by a sorted multiset of exponent indices grouped into one
    slot on the degree-1 letter (odd case) and degree-2 pair letters.

    Letters are (0, (i1, i2)), (1, (p, q)) or (2, (s, t)).
    """
    check_n(n)
    if degree < 0:
        raise ValueError("degree must be >= 0")
    odd = degree % 2
    pool = range(min_index, n + 1)
    out = []
    for size in range(odd, len(pool) + 1, 2):
        for chain in combinations(pool, size):
            for jvec in combinations_with_replacement(range(1, n + 1), degree):
                letters = []
                pairs = size // 2
                for p in range(pairs):
                    letters.append((0, (chain[2 * p], chain[2 * p + 1])))
                rest = jvec
                if odd:
                    letters.append((1, (chain[-1], jvec[0])))
                    rest = jvec[1:]
                for p in range(len(rest) // 2):
                    letters.append((2, (rest[2 * p], rest[2 * p + 1])))
                out.append(tuple(letters))
    return out


def presentation_count(n, degree, min_index=1):
    """Closed count of normal forms: (chains of the right parity from the
    allowed indices) times (exponent multisets of the size the degree
    dictates)."""
    pool_size = n - min_index + 1
    odd = degree % 2
    chains = sum(binom(pool_size, k) for k in range(odd, pool_size + 1, 2))
    return chains * binom(n + degree - 1, degree)


def evaluate_word(n, field, word):
    """Cup product of the word's letters, left to right."""
    acc = unit_class(n, field)
    makers = {0: deg0_generator, 1: deg1_generator, 2: deg2_generator}
    for d, (a, b) in word:
        acc = cup(acc, makers[d](n, field, a, b))
    return acc


def presentation_audit(n, deg_max, field):
    """Per degree, compare the normal-form count against the cohomology
    dimension, under both readings of the chain's starting index (from 1,
    and the strict variant from 2), and evaluate every normal form.

    Evaluations must be nonzero single terms with distinct supports; that
    makes them independent classes, so a matching count means the normal
    forms form a basis in that degree.
    """
    records = []
    for d in range(deg_max + 1):
        words = presentation_normal_forms(n, d, min_index=1)
        count = len(words)
        expected = len(cohomology_basis(n, d, field)) if field.char != 2 else chain_dim(n, d)
        keys = set()
        clean = True
        for w in words:
            val = evaluate_word(n, field, w)
            if len(val.terms) != 1:
                clean = False
                break
            (key, c), = val.terms.items()
            if c == field.zero or key in keys:
                clean = False
                break
            if not same_parity(len(key[0]), d):
                clean = False
                break
            keys.add(key)
        if count != presentation_count(n, d, min_index=1):
            clean = False
        records.append(
            {
                "degree": d,
                "count": count,
                "strict_count": presentation_count(n, d, min_index=2),
                "expected": expected,
                "matches": count == expected,
                "evaluations_independent": clean,
            }
        )
    return records


# ---------------------------------------------------------------------------
# Characteristic 2: the ring is the whole term algebra.


def char2_ring_check(n, deg_max, field):
    """Structure of the cohomology ring in characteristic 2.

    Checks that both differentials vanish (so every cochain is a cocycle
    and there are no coboundaries), that the degree-m dimension is the
    full term dimension, and that the product is the sign-free
    polynomial-style product: monomial union when disjoint else zero,
    exponents added; in particular the ring is commutative.
    """
    from .complexes import chain_matrix, cochain_matrix as _cm

    if field.char != 2:
        raise ValueError("this check is only meaningful in characteristic 2")
    diffs_vanish = all(
        _cm(n, m, field).matrix.is_zero() for m in range(deg_max + 1)
    ) and all(
        chain_matrix(n, m, field).matrix.is_zero() for m in range(1, deg_max + 2)
    )
    dims_full = all(
        hhc_dim_computed(n, m, field) == chain_dim(n, m) for m in range(deg_max + 1)
    )
    table = _merge_table(n)
    product_ok = True
    commutative = True
    for s in range(deg_max + 1):
        for t in range(deg_max + 1 - s):
            for l1, e1 in _basis_terms(n, s, False):
                set1 = set(l1)
                a = CochainVector(n, s, field, {(l1, e1): field.one})
                for l2, e2 in _basis_terms(n, t, False):
                    b = CochainVector(n, t, field, {(l2, e2): field.one})
                    got = cup(a, b)
                    if set1 & set(l2):
                        if not got.is_zero():
                            product_ok = False
                    else:
                        key = (
                            tuple(sorted(l1 + l2)),
                            tuple(x + y for x, y in zip(e1, e2)),
                        )
                        if got.terms != {key: field.one}:
                            product_ok = False
                    if got.terms != cup(b, a).terms:
                        commutative = False
            if not (product_ok and commutative):
                break
        if not (product_ok and commutative):
            break
    ok = diffs_vanish and dims_full and product_ok and commutative
    return {
        "differentials_vanish": diffs_vanish,
        "dims_full": dims_full,
        "product_matches_polynomial_model": product_ok,
        "commutative": commutative,
        "ok": ok,
    }
