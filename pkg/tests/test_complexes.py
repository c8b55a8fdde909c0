"""Chain/cochain matrices, dimension computations, bar oracle."""

import pytest

from hhext.exactla import GF, QQ
from hhext.complexes import (
    OracleInfeasibleError,
    bar_chain_dim,
    bar_chain_matrix,
    bar_cochain_matrix,
    bar_oracle_dims,
    chain_basis,
    chain_dim,
    chain_matrix,
    chain_rank,
    cochain_matrix,
    cochain_rank,
    grade,
    hh_dim_computed,
    hhc_dim_computed,
    largest_feasible_degree,
    verify_d_squared_zero,
)


def test_chain_basis_order():
    """Monomial-major, exponent lex minor."""
    basis = chain_basis(2, 1)
    got = [(m.indices, e) for m, e in basis]
    assert got == [
        ((), (0, 1)), ((), (1, 0)),
        ((1,), (0, 1)), ((1,), (1, 0)),
        ((2,), (0, 1)), ((2,), (1, 0)),
        ((1, 2), (0, 1)), ((1, 2), (1, 0)),
    ]
    assert len(chain_basis(3, 2)) == chain_dim(3, 2) == 48


def test_chain_matrix_entries():
    """Hand-checked differential column for x1 against the second exponent."""
    sl = chain_matrix(2, 1, QQ)
    mono, e = sl.domain_basis[2]
    assert (mono.indices, e) == ((1,), (0, 1))
    col = sl.matrix.col_dict(2)
    # only h=2 applies: mu=1 gives sign -1, factor (-1)^1 + (-1)^1 = -2,
    # so the (x1x2, (0,0)) entry is (-1)*(-2) = 2
    row = sl.codomain_basis.index(
        next(b for b in sl.codomain_basis if b[0].indices == (1, 2))
    )
    assert col == {row: QQ.of(2)}
    # even-degree monomials have factor 0 in odd homological degree
    assert sl.matrix.col_dict(0) == {}
    assert sl.matrix.col_dict(6) == {}


def test_differential_preserves_grade():
    for n, m in ((2, 2), (3, 2)):
        sl = chain_matrix(n, m, QQ)
        for (r, c) in sl.matrix.entries:
            mr, er = sl.codomain_basis[r]
            mc, ec = sl.domain_basis[c]
            assert grade(mr, er) == grade(mc, ec)


def test_d_squared_zero():
    for n in (2, 3):
        assert verify_d_squared_zero(n, 4, QQ)
        assert verify_d_squared_zero(n, 3, GF(3))


def test_computed_dims_frozen():
    assert [hh_dim_computed(2, m, QQ) for m in range(5)] == [3, 4, 6, 8, 10]
    assert [hhc_dim_computed(2, m, QQ) for m in range(5)] == [2, 4, 6, 8, 10]
    assert [hh_dim_computed(3, m, QQ) for m in range(4)] == [5, 12, 24, 40]
    assert [hhc_dim_computed(3, m, QQ) for m in range(4)] == [5, 12, 24, 40]


def test_char2_matrices_vanish():
    F = GF(2)
    for n in (2, 3):
        for m in range(4):
            assert cochain_matrix(n, m, F).matrix.is_zero()
            assert chain_matrix(n, m + 1, F).matrix.is_zero()
        assert hh_dim_computed(n, 2, F) == chain_dim(n, 2)


def test_odd_char_matches_rationals():
    F = GF(3)
    for m in range(1, 4):
        assert chain_rank(2, m, F) == chain_rank(2, m, QQ)
        assert cochain_rank(2, m, F) == cochain_rank(2, m, QQ)


def test_bar_dims():
    assert bar_chain_dim(2, 0) == 4
    assert bar_chain_dim(2, 2) == 36
    assert bar_chain_dim(3, 3) == 2744


def test_bar_differential_squares_to_zero():
    for m in (2, 3):
        prod = bar_chain_matrix(2, m - 1, QQ).matmul(bar_chain_matrix(2, m, QQ))
        assert prod.is_zero()
    for m in (0, 1):
        prod = bar_cochain_matrix(2, m + 1, QQ).matmul(bar_cochain_matrix(2, m, QQ))
        assert prod.is_zero()


def test_bar_oracle_n2():
    got = bar_oracle_dims(2, 3, QQ)
    assert got == [(0, 3, 2), (1, 4, 4), (2, 6, 6), (3, 8, 8)]


def test_bar_oracle_char2_n2():
    got = bar_oracle_dims(2, 2, GF(2))
    assert got == [(0, 4, 4), (1, 8, 8), (2, 12, 12)]


def test_bar_oracle_agrees_with_small_complex():
    for m, h, c in bar_oracle_dims(3, 2, QQ):
        assert h == hh_dim_computed(3, m, QQ)
        assert c == hhc_dim_computed(3, m, QQ)


def test_oracle_cap():
    assert largest_feasible_degree(2, 50000) == 7
    assert largest_feasible_degree(3, 50000) == 3
    assert largest_feasible_degree(4, 50000) == 1
    with pytest.raises(OracleInfeasibleError) as exc:
        bar_oracle_dims(3, 5, QQ, cap=50000)
    assert "941192" in str(exc.value)


def test_chain_matrix_validation():
    with pytest.raises(ValueError):
        chain_matrix(2, 0, QQ)
    with pytest.raises(ValueError):
        cochain_matrix(2, -1, QQ)
