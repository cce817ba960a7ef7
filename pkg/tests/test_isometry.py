"""The signed bijection between block characters and wreath characters."""

import pytest

from blockiso.abacus import partitions_with_core
from blockiso.isometry import (
    build_isometry,
    compute_W,
    epsilon_sign,
    isometry_image,
    isometry_inverse,
    isometry_row,
    psi_p,
    pushdown_to_wreath,
    verify_centp,
    verify_diagram,
    verify_heights,
    verify_lemma_f,
    verify_main,
    verify_uniqueness,
    verify_val,
)
from blockiso.partitions import GuardExceeded
from blockiso.wreath import (
    enumerate_wreath_classes,
    in_U_s,
    lambda_psi,
    wreath_inner_product,
    zeta_irr,
)


def test_weight_one_rows_frozen():
    assert isometry_row((2,), (), 2) == (1, ((1,), ()))
    assert isometry_row((1, 1), (), 2) == (1, ((), (1,)))
    assert isometry_row((3,), (), 3) == (1, ((1,), (), ()))
    # the bead move sign -1 cancels against the odd leg conjugation factor
    assert isometry_row((2, 1), (), 3) == (1, ((), (1,), ()))
    assert isometry_row((1, 1, 1), (), 3) == (1, ((), (), (1,)))


def test_weight_two_table_frozen():
    rows = {lam: isometry_row(lam, (), 2) for lam in partitions_with_core(4, (), 2)}
    assert rows == {
        (4,): (1, ((2,), ())),
        (3, 1): (-1, ((), (1, 1))),
        (2, 2): (-1, ((1,), (1,))),
        (2, 1, 1): (-1, ((1, 1), ())),
        (1, 1, 1, 1): (1, ((), (2,))),
    }


def test_rows_with_nonempty_core():
    for lam in partitions_with_core(5, (1,), 2):
        sign, psi = isometry_row(lam, (1,), 2)
        assert sum(sum(q) for q in psi) == 2
        assert isometry_inverse(psi, (1,), 2) == lam
        assert sign in (1, -1)
        assert epsilon_sign(lam, (1,), 2) == sign


def test_inverse_round_trip():
    for p, w, rho in ((2, 2, ()), (2, 3, ()), (3, 2, (1, 1)), (2, 2, (1,)), (3, 1, (2,))):
        n = p * w + sum(rho)
        for lam in partitions_with_core(n, rho, p):
            sign, psi = isometry_row(lam, rho, p)
            assert isometry_inverse(psi, rho, p) == lam
            assert sign * sign == 1


def test_psi_components_partition_weight():
    for p, w, rho in ((2, 3, ()), (3, 2, (1,)), (5, 1, ())):
        n = p * w + sum(rho)
        seen = set()
        for lam in partitions_with_core(n, rho, p):
            psi = psi_p(lam, rho, p)
            assert len(psi) == p
            assert sum(sum(q) for q in psi) == w
            assert psi not in seen
            seen.add(psi)


def test_image_is_signed_irreducible():
    for lam in partitions_with_core(4, (), 2):
        sign, psi = isometry_row(lam, (), 2)
        img = isometry_image(lam, (), 2)
        ref = zeta_irr(2, 2, lambda_psi(psi, 2)).scaled(sign)
        assert img.values == ref.values
        assert wreath_inner_product(img, img) == 1


def test_build_isometry_consistent():
    rows = build_isometry(2, 2, ())
    assert len(rows) == 5
    for lam, sign, psi in rows:
        assert isometry_row(lam, (), 2) == (sign, psi)
    with pytest.raises(ValueError):
        build_isometry(2, 2, (2,))


def test_pushdown_matches_image_on_heavy_classes():
    # the pushdown and the signed irreducible agree wherever the class has
    # at least w base p cycles; away from those classes they may differ
    for p, w, rho in ((2, 2, ()), (2, 1, (1,)), (3, 1, (1, 1)), (3, 2, ())):
        n = p * w + sum(rho)
        heavy = [
            lbl for lbl in enumerate_wreath_classes(p, w) if in_U_s(lbl, p, w)
        ]
        assert heavy
        for lam in partitions_with_core(n, rho, p):
            down = pushdown_to_wreath(lam, rho, p, w)
            img = isometry_image(lam, rho, p)
            for lbl in heavy:
                assert down.value(lbl) == img.value(lbl), (p, w, rho, lam, lbl)


def test_verify_main_suites():
    for p, w, rho in ((2, 2, ()), (2, 3, ()), (3, 2, ()), (2, 2, (1,)), (3, 1, (2,))):
        rep = verify_main(p, w, rho)
        assert rep.ok, rep.failures()
        assert rep.records


def test_verify_val_suites():
    for p, w in ((2, 2), (2, 3), (3, 2)):
        rep = verify_val(p, w)
        assert rep.ok, rep.failures()


def test_verify_heights_suites():
    for p, w, rho in ((2, 2, ()), (2, 3, ()), (3, 2, ()), (3, 2, (1,))):
        rep = verify_heights(p, w, rho)
        assert rep.ok, rep.failures()


def test_verify_uniqueness_counts():
    rep = verify_uniqueness(2, 2)
    assert rep.ok
    assert len(rep.records) == 25


def test_verify_diagram_suites():
    for p, w, rho in ((2, 2, ()), (3, 2, ()), (2, 3, ())):
        rep = verify_diagram(p, w, rho)
        assert rep.ok, rep.failures()


def test_verify_lemma_f_suites():
    for p, w in ((2, 2), (2, 3), (3, 2)):
        rep = verify_lemma_f(p, w)
        assert rep.ok, rep.failures()


def test_verify_centp_small():
    for p, w, e in ((2, 1, 0), (2, 1, 1), (2, 2, 0), (2, 2, 1), (3, 1, 0), (3, 1, 1)):
        rep = verify_centp(p, w, e)
        assert rep.ok, rep.failures()


def test_compute_W_small_and_guard():
    with pytest.raises(GuardExceeded):
        compute_W(3, 2, 3)
    assert compute_W(2, 1, 1) == {
        ((1, (1, 1)),): False,
        ((1, (2,)),): True,
    }


def test_epsilon_spot_values():
    assert epsilon_sign((4,), (), 2) == 1
    assert epsilon_sign((3, 1), (), 2) == -1
    assert epsilon_sign((2, 2), (), 2) == -1
    assert epsilon_sign((2, 1, 1), (), 2) == -1
    assert epsilon_sign((1, 1, 1, 1), (), 2) == 1
