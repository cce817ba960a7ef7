"""Character values, tables, and block bookkeeping for symmetric groups."""

from fractions import Fraction
from math import factorial

import pytest

from blockiso.partitions import (
    GuardExceeded,
    contains,
    enumerate_partitions,
)
from blockiso.symchar import (
    SnClassFunction,
    block_projection,
    centralizer_order_sn,
    char_table,
    character_value,
    d_alpha,
    decompose,
    degree,
    height_by_tower,
    height_by_valuation,
    inner_product,
    irr_class_function,
    irr_in_block,
    skew_class_function,
    tilde_pi_rho,
)


def test_table_s3_frozen():
    # rows and columns both follow the descending-lex partition order
    assert char_table(3) == [
        [1, 1, 1],
        [-1, 0, 2],
        [1, -1, 1],
    ]


def test_table_s4_frozen():
    assert char_table(4) == [
        [1, 1, 1, 1, 1],
        [-1, 0, -1, 1, 3],
        [0, -1, 2, 0, 2],
        [1, 0, -1, -1, 3],
        [-1, 1, 1, -1, 1],
    ]


def test_table_guard():
    with pytest.raises(GuardExceeded):
        char_table(13)


def test_centralizer_orders_sum_to_group_order():
    for n in range(1, 9):
        assert sum(
            factorial(n) // centralizer_order_sn(tau)
            for tau in enumerate_partitions(n)
        ) == factorial(n)


def test_first_orthogonality():
    for n in range(1, 8):
        parts = enumerate_partitions(n)
        for i, lam in enumerate(parts):
            for mu in parts[i:]:
                got = inner_product(irr_class_function(lam), irr_class_function(mu))
                assert got == (1 if lam == mu else 0), (lam, mu)


def test_second_orthogonality():
    for n in range(1, 8):
        parts = enumerate_partitions(n)
        table = char_table(n)
        for i, sig in enumerate(parts):
            for j, tau in enumerate(parts):
                total = sum(row[i] * row[j] for row in table)
                expect = centralizer_order_sn(tau) if i == j else 0
                assert total == expect, (sig, tau)


def test_degree_matches_identity_value():
    for n in range(0, 9):
        total = 0
        for lam in enumerate_partitions(n):
            d = degree(lam)
            assert d == character_value(lam, (1,) * n)
            assert d > 0
            total += d * d
        assert total == factorial(n)


def test_skew_decomposition_integral_nonnegative():
    for n in range(2, 7):
        for lam in enumerate_partitions(n):
            for e in range(1, n):
                for mu in enumerate_partitions(e):
                    if not contains(lam, mu):
                        continue
                    coeffs = decompose(skew_class_function(lam, mu))
                    for nu, c in coeffs.items():
                        assert c.denominator == 1 and c >= 0, (lam, mu, nu, c)


def test_skew_frozen():
    coeffs = decompose(skew_class_function((3, 1), (1,)))
    assert {k: int(v) for k, v in coeffs.items() if v} == {(3,): 1, (2, 1): 1}
    coeffs = decompose(skew_class_function((2, 2), (1,)))
    assert {k: int(v) for k, v in coeffs.items() if v} == {(2, 1): 1}


def test_skew_outside_shape_vanishes():
    xi = skew_class_function((2, 2), (3,))
    assert all(xi.value(tau) == 0 for tau in enumerate_partitions(xi.n))


def test_pushdown_equals_skew_on_irreducibles():
    for n in range(2, 7):
        for lam in enumerate_partitions(n):
            for rho in ((1,), (2,), (1, 1)):
                if sum(rho) > n:
                    continue
                down = tilde_pi_rho(irr_class_function(lam), rho)
                skew = skew_class_function(lam, rho)
                assert down.values == skew.values, (lam, rho)


def test_d_alpha_spot_values():
    xi = d_alpha(irr_class_function((2, 1)), (1,), 3)
    assert xi.n == 0 and xi.values == (-1,)
    xi = d_alpha(irr_class_function((4,)), (1,), 2)
    assert xi.values == (1, 1)
    # sign character picks up the parity of the adjoined transposition
    xi = d_alpha(irr_class_function((1, 1, 1, 1)), (1,), 2)
    assert xi.values == (1, -1)
    with pytest.raises(ValueError):
        d_alpha(irr_class_function((2,)), (2,), 2)


def test_height_definitions_agree():
    for p in (2, 3):
        for n in range(1, 9):
            for lam in enumerate_partitions(n):
                assert height_by_tower(lam, p) == height_by_valuation(lam, p), (
                    lam,
                    p,
                )


def test_heights_frozen_weight_two():
    heights = [height_by_tower(lam, 2) for lam in enumerate_partitions(4)]
    assert heights == [0, 0, 1, 0, 0]
    assert height_by_tower((2, 1, 1), 2) == 0


def test_irr_in_block_frozen():
    assert irr_in_block(4, 2, ()) == enumerate_partitions(4)
    assert irr_in_block(4, 3, (1,)) == ((4,), (2, 2), (1, 1, 1, 1))
    assert irr_in_block(3, 3, ()) == ((3,), (2, 1), (1, 1, 1))
    assert irr_in_block(5, 3, (1, 1)) == ((4, 1), (3, 2), (1, 1, 1, 1, 1))
    assert irr_in_block(5, 3, (2,)) == ((5,), (2, 2, 1), (2, 1, 1, 1))


def test_block_projection_splits_identity():
    # summing the projections over all cores recovers the original function
    from blockiso.abacus import p_core

    n, p = 4, 3
    xi = SnClassFunction(n, tuple(sum(t) for t in enumerate_partitions(n)))
    total = [Fraction(0)] * len(enumerate_partitions(n))
    seen = set()
    for lam in enumerate_partitions(n):
        rho = p_core(lam, p)
        if rho in seen:
            continue
        seen.add(rho)
        proj = block_projection(xi, p, rho)
        total = [a + b for a, b in zip(total, proj.values)]
    assert tuple(total) == xi.values


def test_character_values_are_integers():
    for n in range(1, 8):
        for lam in enumerate_partitions(n):
            for tau in enumerate_partitions(n):
                assert isinstance(character_value(lam, tau), int)
