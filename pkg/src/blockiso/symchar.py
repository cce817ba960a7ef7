"""Ordinary characters of symmetric groups by border-strip recursion.

Character values are computed on first-column hook length sets: removing a
border strip of length k is subtracting k from one entry, and the sign is
the parity of the entries jumped over.  Skew shapes recurse the same way
with the inner shape as a floor.  Everything returns exact ints or
Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import factorial

from .abacus import beta_set, partition_from_beta, p_core, partitions_with_core
from .partitions import (
    GuardExceeded,
    Partition,
    contains,
    enumerate_partitions,
    p_adic_digits,
    partition_index,
    scale,
    sqcup,
    v_p,
)

MAX_TABLE_N = 12


def mn_value(lam: Partition, mu: Partition, tau: Partition) -> int:
    """Value of the (skew) irreducible character lam/mu at cycle type tau.

    Zero if lam does not contain mu.  tau must partition |lam| - |mu|.
    """
    if sum(tau) != sum(lam) - sum(mu):
        raise ValueError("cycle type size mismatch")
    return _mn(lam, mu, tuple(sorted(tau, reverse=True)))


@cache
def _mn(lam: Partition, mu: Partition, tau: Partition) -> int:
    if not contains(lam, mu):
        return 0
    if not tau:
        return 1
    k, rest = tau[0], tau[1:]
    n_beads = len(lam) if lam else 1
    beta = beta_set(lam, n_beads)
    occupied = set(beta)
    total = 0
    for s in beta:
        t = s - k
        if t < 0 or t in occupied:
            continue
        jumped = sum(1 for x in beta if t < x < s)
        nu = partition_from_beta((occupied - {s}) | {t})
        if contains(nu, mu):
            total += (-1) ** jumped * _mn(nu, mu, rest)
    return total


def character_value(lam: Partition, tau: Partition) -> int:
    return mn_value(lam, (), tau)


@cache
def degree(lam: Partition) -> int:
    """Dimension by the hook length product."""
    n = sum(lam)
    if n == 0:
        return 1
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            arm = row - j - 1
            leg = sum(1 for x in lam[i + 1 :] if x > j)
            hooks *= arm + leg + 1
    return factorial(n) // hooks


def centralizer_order_sn(tau: Partition) -> int:
    """Order of the centralizer of an element of cycle type tau."""
    out = 1
    mult: dict[int, int] = {}
    for part in tau:
        mult[part] = mult.get(part, 0) + 1
    for part, m in mult.items():
        out *= part**m * factorial(m)
    return out


def char_table(n: int, max_n: int = MAX_TABLE_N) -> list[list[int]]:
    """Full character table, rows and columns in canonical partition order."""
    if n > max_n:
        raise GuardExceeded(f"char_table guard: n={n} > {max_n}")
    classes = enumerate_partitions(n)
    return [[character_value(lam, tau) for tau in classes] for lam in classes]


@dataclass(frozen=True)
class SnClassFunction:
    """Dense class function on a symmetric group, canonical class order."""

    n: int
    values: tuple

    def value(self, tau: Partition):
        return self.values[partition_index(tau)]

    def __add__(self, other: "SnClassFunction") -> "SnClassFunction":
        if self.n != other.n:
            raise ValueError("mismatched group sizes")
        return SnClassFunction(self.n, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "SnClassFunction") -> "SnClassFunction":
        if self.n != other.n:
            raise ValueError("mismatched group sizes")
        return SnClassFunction(self.n, tuple(a - b for a, b in zip(self.values, other.values)))

    def scaled(self, c) -> "SnClassFunction":
        return SnClassFunction(self.n, tuple(c * a for a in self.values))

    def is_zero(self) -> bool:
        return not any(self.values)


def irr_class_function(lam: Partition) -> SnClassFunction:
    n = sum(lam)
    return SnClassFunction(n, tuple(character_value(lam, tau) for tau in enumerate_partitions(n)))


def skew_class_function(lam: Partition, mu: Partition) -> SnClassFunction:
    n = sum(lam) - sum(mu)
    return SnClassFunction(n, tuple(mn_value(lam, mu, tau) for tau in enumerate_partitions(n)))


def class_function_from_coeffs(n: int, coeffs: dict[Partition, int]) -> SnClassFunction:
    """Virtual character from an irreducible-coefficient dict."""
    values = [0] * len(enumerate_partitions(n))
    for lam, c in coeffs.items():
        if sum(lam) != n:
            raise ValueError("coefficient label of wrong size")
        for j, tau in enumerate(enumerate_partitions(n)):
            values[j] += c * character_value(lam, tau)
    return SnClassFunction(n, tuple(values))


def inner_product(xi: SnClassFunction, theta: SnClassFunction) -> Fraction:
    """Class-weighted inner product; all classes here are self-inverse."""
    if xi.n != theta.n:
        raise ValueError("mismatched group sizes")
    total = Fraction(0)
    for tau, a, b in zip(enumerate_partitions(xi.n), xi.values, theta.values):
        total += Fraction(a * b, centralizer_order_sn(tau))
    return total


def decompose(xi: SnClassFunction) -> dict[Partition, Fraction]:
    """Coefficients of xi on the irreducible basis."""
    out = {}
    for lam in enumerate_partitions(xi.n):
        c = inner_product(xi, irr_class_function(lam))
        if c:
            out[lam] = c
    return out


def irr_in_block(n: int, p: int, rho: Partition) -> tuple[Partition, ...]:
    """Labels of the irreducibles with p-core rho, canonical order."""
    return partitions_with_core(n, rho, p)


def block_projection(xi: SnClassFunction, p: int, rho: Partition) -> SnClassFunction:
    """Orthogonal projection onto the span of the block's irreducibles."""
    out = SnClassFunction(xi.n, (Fraction(0),) * len(xi.values))
    for lam in irr_in_block(xi.n, p, rho):
        c = inner_product(xi, irr_class_function(lam))
        if c:
            out = out + irr_class_function(lam).scaled(c)
    return out


def tilde_pi_rho(xi: SnClassFunction, rho: Partition) -> SnClassFunction:
    """Push a class function down by the fixed small partition rho.

    The value at a class of the smaller group averages xi over all ways of
    adjoining a cycle type of size |rho|, weighted by the character of rho
    over the centralizer order of the adjoined type.  On an irreducible
    this produces exactly the skew character by rho.
    """
    e = sum(rho)
    m = xi.n - e
    if m < 0:
        raise ValueError("rho larger than the domain")
    values = []
    for tau in enumerate_partitions(m):
        total = Fraction(0)
        for sigma in enumerate_partitions(e):
            total += Fraction(
                xi.value(sqcup(tau, sigma)) * character_value(rho, sigma),
                centralizer_order_sn(sigma),
            )
        values.append(total)
    return SnClassFunction(m, tuple(values))


def d_alpha(xi: SnClassFunction, alpha: Partition, p: int) -> SnClassFunction:
    """Evaluate xi with disjoint cycles of lengths p*alpha adjoined."""
    m = xi.n - p * sum(alpha)
    if m < 0:
        raise ValueError("alpha too large")
    stretched = scale(p, alpha)
    return SnClassFunction(
        m, tuple(xi.value(sqcup(stretched, tau)) for tau in enumerate_partitions(m))
    )


def height_by_tower(lam: Partition, p: int) -> int:
    """Height from iterated core sizes against the base-p digits of the weight."""
    from .abacus import block_weight, core_tower_sizes

    w = block_weight(lam, p)
    towers = core_tower_sizes(lam, p)
    total = sum(towers[1:]) - sum(p_adic_digits(w, p))
    q, r = divmod(total, p - 1)
    if r:
        raise AssertionError("height formula did not divide evenly")
    return q


def height_by_valuation(lam: Partition, p: int) -> int:
    """Height as the degree valuation minus the block minimum."""
    n = sum(lam)
    block = irr_in_block(n, p, p_core(lam, p))
    floor = min(v_p(degree(mu), p) for mu in block)
    return v_p(degree(lam), p) - floor
