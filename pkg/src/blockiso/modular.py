"""Modular data for the base group and its wreath products.

For a prime p the base symmetric group has one p-singular class, the
p-cycles.  Irreducible Brauer characters are the alternating hook sums for
the principal block plus the non-hook irreducibles (defect zero); their
projective partners are adjacent-hook sums and the non-hooks themselves.
Assignments of partitions to Brauer labels give a basis of class functions
on the classes with p-regular cycle products; paired with the projective
tuples they are orthonormal, which yields integer decomposition numbers.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache

from .abacus import hook_partition, is_hook
from .partitions import Partition, enumerate_partitions, format_partition, is_prime
from .reporting import Report
from .symchar import character_value
from .wreath import (
    Factor,
    WreathClassFunction,
    enumerate_wreath_classes,
    wreath_inner_product,
    zeta_class_function,
)

BrauerLabel = tuple[str, object]


def p_regular_classes(p: int) -> tuple[Partition, ...]:
    """Base classes with no part divisible by p (here: all but the p-cycle)."""
    return tuple(c for c in enumerate_partitions(p) if c != (p,))


@cache
def brauer_labels(p: int) -> tuple[BrauerLabel, ...]:
    """Principal-block labels by leg length, then defect-zero non-hooks."""
    if not is_prime(p):
        raise ValueError("modular data needs a prime")
    labels: list[BrauerLabel] = [("leg", i) for i in range(p - 1)]
    labels += [("defect0", lam) for lam in enumerate_partitions(p) if not is_hook(lam)]
    return tuple(labels)


def brauer_coeffs(label: BrauerLabel, p: int) -> dict[Partition, int]:
    """Ordinary-character coefficients restricting to the Brauer character."""
    kind, data = label
    if kind == "leg":
        i = int(data)
        return {hook_partition(j, p): (-1) ** (i - j) for j in range(i + 1)}
    return {data: 1}


def projective_coeffs(label: BrauerLabel, p: int) -> dict[Partition, int]:
    """Ordinary-character coefficients of the projective partner."""
    kind, data = label
    if kind == "leg":
        i = int(data)
        return {hook_partition(i, p): 1, hook_partition(i + 1, p): 1}
    return {data: 1}


def _values_on_classes(coeffs: dict[Partition, int], p: int, regular_only: bool) -> tuple:
    out = []
    for c in enumerate_partitions(p):
        if regular_only and c == (p,):
            out.append(0)
        else:
            out.append(sum(k * character_value(mu, c) for mu, k in coeffs.items()))
    return tuple(out)


def brauer_values(label: BrauerLabel, p: int) -> tuple:
    """Brauer character extended by zero on the p-singular class."""
    return _values_on_classes(brauer_coeffs(label, p), p, regular_only=True)


def projective_values(label: BrauerLabel, p: int) -> tuple:
    vals = _values_on_classes(projective_coeffs(label, p), p, regular_only=False)
    idx = list(enumerate_partitions(p)).index((p,))
    if vals[idx] != 0:
        raise AssertionError("projective character fails to vanish at the p-cycle")
    return vals


def validate_base_modular(p: int) -> None:
    """Biorthogonality of the Brauer and projective families."""
    labels = brauer_labels(p)
    from .symchar import centralizer_order_sn

    for a in labels:
        for b in labels:
            phi = brauer_values(a, p)
            hat = projective_values(b, p)
            total = Fraction(0)
            for c, x, y in zip(enumerate_partitions(p), phi, hat):
                total += Fraction(x * y, centralizer_order_sn(c))
            if total != (1 if a == b else 0):
                raise AssertionError(f"biorthogonality failed at {a}, {b}")


GIBrLabel = tuple[Partition, ...]


@cache
def enumerate_gibr(p: int, w: int) -> tuple[GIBrLabel, ...]:
    """Assignments of partitions to Brauer labels with total size w."""
    labels = brauer_labels(p)

    def gen(i: int, rem: int):
        if i == len(labels):
            if rem == 0:
                yield ()
            return
        for k in range(rem, -1, -1):
            for mu in enumerate_partitions(k):
                for rest in gen(i + 1, rem - k):
                    yield (mu,) + rest

    return tuple(sorted(gen(0, w), reverse=True))


def principal_gibr_filter(assignments, p: int) -> tuple[GIBrLabel, ...]:
    """Keep assignments supported on the principal-block Brauer labels."""
    labels = brauer_labels(p)
    return tuple(
        a
        for a in assignments
        if all(not mu or kind == "leg" for (kind, _), mu in zip(labels, a))
    )


def _factors(psi: GIBrLabel, p: int, value_fn) -> list[Factor]:
    labels = brauer_labels(p)
    out: list[Factor] = []
    for label, mu in zip(labels, psi):
        if mu:
            out.append((value_fn(label, p), {mu: 1}))
    if not out:
        out.append(((1,) * len(enumerate_partitions(p)), {(): 1}))
    return out


def zeta_brauer(p: int, w: int, psi: GIBrLabel) -> WreathClassFunction:
    """Induced class function with zero-extended Brauer base factors.

    Vanishes automatically on classes with a base p-cycle pair, and on the
    remaining classes is independent of the chosen extension.
    """
    return zeta_class_function(p, w, _factors(psi, p, brauer_values))


def zeta_projective(p: int, w: int, psi: GIBrLabel) -> WreathClassFunction:
    """Induced class function with projective base factors."""
    return zeta_class_function(p, w, _factors(psi, p, projective_values))


def regular_wreath_classes(p: int, w: int):
    """Labels all of whose base classes are p-regular."""
    return tuple(
        lbl
        for lbl in enumerate_wreath_classes(p, w)
        if all(c != (p,) for _, c in lbl)
    )


def verify_orth(p: int, w: int) -> Report:
    """Projective tuples against Brauer tuples give the identity Gram matrix,
    and the Brauer family is square on the regular classes."""
    rep = Report("orth")
    validate_base_modular(p)
    gibr = enumerate_gibr(p, w)
    rep.add(
        {"p": p, "w": w, "count": len(gibr), "regular_classes": len(regular_wreath_classes(p, w))},
        len(gibr) == len(regular_wreath_classes(p, w)),
    )
    brauer_side = {psi: zeta_brauer(p, w, psi) for psi in gibr}
    proj_side = {psi: zeta_projective(p, w, psi) for psi in gibr}
    for a in gibr:
        for b in gibr:
            val = wreath_inner_product(proj_side[a], brauer_side[b])
            want = 1 if a == b else 0
            rep.add(
                {"p": p, "w": w, "psi": _gibr_text(a), "phi": _gibr_text(b)},
                val == want,
                None if val == want else {"gram": str(val)},
            )
    return rep


def decomposition_matrix(p: int, w: int):
    """Integer matrix of ordinary wreath irreducibles against Brauer tuples.

    Rows follow the ordinary labels, columns the assignments; entries are
    inner products with the projective tuples, checked integral, and the
    restriction of each row to the regular classes must match the integer
    combination of Brauer tuples.
    """
    from .wreath import enumerate_irr_wreath, zeta_irr

    gibr = enumerate_gibr(p, w)
    proj = [zeta_projective(p, w, psi) for psi in gibr]
    brau = [zeta_brauer(p, w, psi) for psi in gibr]
    regular = regular_wreath_classes(p, w)
    rows = []
    for theta_label in enumerate_irr_wreath(p, w):
        theta = zeta_irr(p, w, theta_label)
        row = []
        for hat in proj:
            d = wreath_inner_product(theta, hat)
            if d.denominator != 1:
                raise AssertionError("decomposition number is not an integer")
            row.append(int(d))
        recon = WreathClassFunction(p, w, (0,) * len(theta.values))
        for d, zb in zip(row, brau):
            recon = recon + zb.scaled(d)
        for lbl in regular:
            if recon.value(lbl) != theta.value(lbl):
                raise AssertionError("Brauer expansion fails on a regular class")
        rows.append(row)
    return rows


def _gibr_text(psi: GIBrLabel) -> str:
    return ";".join(format_partition(mu) for mu in psi)
