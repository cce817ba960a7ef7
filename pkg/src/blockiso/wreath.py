"""Class functions on wreath products of a symmetric group base.

Conjugacy classes of the wreath of S_p by S_w are labelled by multisets of
pairs (k, c): a top cycle of length k whose cycle product lies in the base
class c (a partition of p), with the k summing to w.  A tuple of factors
(phi_i, chi_i) with the chi_i virtual characters of smaller top groups
induces up to a class function; its value at a label sums over all ways of
assigning the label's pairs to factors so that each factor i receives top
length exactly w_i, each assignment contributing the chi_i value at the
collected top cycle type times the phi values at the base classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import factorial

from .abacus import hook_partition, is_hook
from .lattice import hnf_basis, lattice_contains
from .partitions import (
    GuardExceeded,
    Partition,
    enumerate_partitions,
    scale,
    sqcup,
)
from .symchar import SnClassFunction, centralizer_order_sn, character_value

ClassLabel = tuple[tuple[int, Partition], ...]
PMapLabel = tuple[Partition, ...]

MAX_P = 5
MAX_W = 4


def _pair_key(pair: tuple[int, Partition]):
    k, c = pair
    return (-k, tuple(-x for x in c))


def canonical_label(pairs) -> ClassLabel:
    return tuple(sorted(pairs, key=_pair_key))


@cache
def enumerate_wreath_classes(p: int, w: int, max_p: int = MAX_P, max_w: int = MAX_W) -> tuple[ClassLabel, ...]:
    """All class labels of the wreath of S_p by S_w, canonical order."""
    if p > max_p or w > max_w:
        raise GuardExceeded(f"wreath guard: p={p}, w={w} beyond ({max_p}, {max_w})")
    pool = sorted(
        ((k, c) for k in range(1, w + 1) for c in enumerate_partitions(p)),
        key=_pair_key,
    )

    def gen(start: int, rem: int):
        if rem == 0:
            yield ()
            return
        for i in range(start, len(pool)):
            k, c = pool[i]
            if k <= rem:
                for rest in gen(i, rem - k):
                    yield ((k, c),) + rest

    labels = [canonical_label(lbl) for lbl in gen(0, w)]
    labels.sort(key=lambda lbl: tuple(_pair_key(pr) for pr in lbl))
    return tuple(labels)


@cache
def _label_index(p: int, w: int) -> dict[ClassLabel, int]:
    return {lbl: i for i, lbl in enumerate(enumerate_wreath_classes(p, w))}


def wreath_group_order(p: int, w: int) -> int:
    return factorial(p) ** w * factorial(w)


def centralizer_order_wreath(label: ClassLabel, p: int) -> int:
    """Centralizer order from pair multiplicities: prod m! * (k * z_c)^m."""
    mult: dict[tuple[int, Partition], int] = {}
    for pair in label:
        mult[pair] = mult.get(pair, 0) + 1
    out = 1
    for (k, c), m in mult.items():
        out *= factorial(m) * (k * centralizer_order_sn(c)) ** m
    return out


def embed_to_sn(label: ClassLabel) -> Partition:
    """Cycle type of a label's representative inside the big symmetric group."""
    typ: Partition = ()
    for k, c in label:
        typ = sqcup(typ, scale(k, c))
    return typ


def tp_wr(label: ClassLabel, p: int) -> Partition:
    """Top cycle lengths over base p-cycles, as a partition."""
    return tuple(sorted((k for k, c in label if c == (p,)), reverse=True))


def in_U_s(label: ClassLabel, p: int, s: int) -> bool:
    """Whether the label's base p-cycle top lengths sum to at least s."""
    return sum(tp_wr(label, p)) >= s


def identity_label(p: int, w: int) -> ClassLabel:
    return canonical_label(((1, (1,) * p),) * w)


@dataclass(frozen=True)
class WreathClassFunction:
    """Dense class function on a wreath product, canonical label order."""

    p: int
    w: int
    values: tuple

    def value(self, label: ClassLabel):
        return self.values[_label_index(self.p, self.w)[canonical_label(label)]]

    def __add__(self, other: "WreathClassFunction") -> "WreathClassFunction":
        self._match(other)
        return WreathClassFunction(self.p, self.w, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "WreathClassFunction") -> "WreathClassFunction":
        self._match(other)
        return WreathClassFunction(self.p, self.w, tuple(a - b for a, b in zip(self.values, other.values)))

    def scaled(self, c) -> "WreathClassFunction":
        return WreathClassFunction(self.p, self.w, tuple(c * a for a in self.values))

    def is_zero(self) -> bool:
        return not any(self.values)

    def _match(self, other: "WreathClassFunction") -> None:
        if (self.p, self.w) != (other.p, other.w):
            raise ValueError("mismatched wreath parameters")


def wreath_inner_product(xi: WreathClassFunction, theta: WreathClassFunction) -> Fraction:
    xi._match(theta)
    total = Fraction(0)
    for label, a, b in zip(enumerate_wreath_classes(xi.p, xi.w), xi.values, theta.values):
        total += Fraction(a * b, centralizer_order_wreath(label, xi.p))
    return total


# A factor is a pair (phi, chi): phi is a dense value tuple over the base
# classes, chi a dict mapping top-group partitions to integer coefficients
# (all keys of one chi partition the same number).
Factor = tuple[tuple, dict[Partition, int]]


def _chi_weight(chi: dict[Partition, int]) -> int:
    sizes = {sum(mu) for mu in chi}
    if len(sizes) != 1:
        raise ValueError("factor coefficients must share one size")
    return sizes.pop()


def _chi_value(chi: dict[Partition, int], tau: Partition) -> int:
    return sum(c * character_value(mu, tau) for mu, c in chi.items())


def zeta_value(p: int, factors: list[Factor], label: ClassLabel):
    """Value at label of the class function induced from the given factors."""
    caps = [_chi_weight(chi) for _, chi in factors]
    pairs = list(label)
    if sum(caps) != sum(k for k, _ in pairs):
        raise ValueError("factor weights do not sum to the label weight")
    class_idx = {c: i for i, c in enumerate(enumerate_partitions(p))}
    s = len(factors)
    total = 0

    def rec(j: int, rem: list[int], acc):
        nonlocal total
        if j == len(pairs):
            if any(rem):
                return
            term = 1
            for i, (phi, chi) in enumerate(factors):
                tau = tuple(sorted((k for k, c in acc[i]), reverse=True))
                term *= _chi_value(chi, tau)
                if term == 0:
                    return
                for _, c in acc[i]:
                    term *= phi[class_idx[c]]
            total += term
            return
        k, c = pairs[j]
        for i in range(s):
            if rem[i] >= k:
                rem[i] -= k
                acc[i].append((k, c))
                rec(j + 1, rem, acc)
                acc[i].pop()
                rem[i] += k

    rec(0, caps, [[] for _ in range(s)])
    return total


def zeta_class_function(p: int, w: int, factors: list[Factor]) -> WreathClassFunction:
    return WreathClassFunction(
        p, w, tuple(zeta_value(p, factors, lbl) for lbl in enumerate_wreath_classes(p, w))
    )


def irr_base_values(kappa: Partition, p: int) -> tuple:
    """Dense value tuple of one base irreducible over the base classes."""
    return tuple(character_value(kappa, c) for c in enumerate_partitions(p))


def factors_from_pmap(phi_label: PMapLabel, p: int) -> list[Factor]:
    """Factors of the irreducible labelled by an assignment of partitions."""
    kappas = enumerate_partitions(p)
    if len(phi_label) != len(kappas):
        raise ValueError("assignment length must match the base class count")
    out: list[Factor] = []
    for kappa, mu in zip(kappas, phi_label):
        if mu:
            out.append((irr_base_values(kappa, p), {mu: 1}))
    if not out:
        out.append((irr_base_values((p,), p), {(): 1}))
    return out


def zeta_irr(p: int, w: int, phi_label: PMapLabel) -> WreathClassFunction:
    if sum(sum(mu) for mu in phi_label) != w:
        raise ValueError("assignment sizes must sum to w")
    return zeta_class_function(p, w, factors_from_pmap(phi_label, p))


@cache
def enumerate_irr_wreath(p: int, w: int) -> tuple[PMapLabel, ...]:
    """Assignments of partitions to base irreducibles with total size w."""
    kappas = enumerate_partitions(p)
    enumerate_wreath_classes(p, w)  # shared guard

    def gen(i: int, rem: int):
        if i == len(kappas):
            if rem == 0:
                yield ()
            return
        for k in range(rem, -1, -1):
            for mu in enumerate_partitions(k):
                for rest in gen(i + 1, rem - k):
                    yield (mu,) + rest

    return tuple(sorted(gen(0, w), reverse=True))


def principal_block_filter(labels, p: int) -> tuple[PMapLabel, ...]:
    """Keep the assignments concentrated on hook base irreducibles."""
    kappas = enumerate_partitions(p)
    return tuple(
        lbl
        for lbl in labels
        if all(not mu or is_hook(kappa) for kappa, mu in zip(kappas, lbl))
    )


def lambda_psi(psi: tuple[Partition, ...], p: int) -> PMapLabel:
    """Assignment placing psi[i] on the hook with leg i, empty elsewhere."""
    if len(psi) != p:
        raise ValueError("need one partition per leg length")
    kappas = enumerate_partitions(p)
    spot = {hook_partition(i, p): psi[i] for i in range(p)}
    return tuple(spot.get(kappa, ()) for kappa in kappas)


def tilde_power(phi: tuple, p: int, w: int) -> WreathClassFunction:
    """Product of base values over a label's pairs (top group ignored)."""
    class_idx = {c: i for i, c in enumerate(enumerate_partitions(p))}
    values = []
    for label in enumerate_wreath_classes(p, w):
        term = 1
        for _, c in label:
            term *= phi[class_idx[c]]
        values.append(term)
    return WreathClassFunction(p, w, tuple(values))


def restrict_from_sn(chi: SnClassFunction, p: int, w: int) -> WreathClassFunction:
    """Pull back a class function of the big symmetric group along embedding."""
    if chi.n != p * w:
        raise ValueError("degree mismatch")
    return WreathClassFunction(
        p, w, tuple(chi.value(embed_to_sn(lbl)) for lbl in enumerate_wreath_classes(p, w))
    )


def omega_lambda(xi: WreathClassFunction, lam: Partition) -> dict[tuple[Partition, ...], object]:
    """Base-class tensor of xi along labels with top cycle lengths lam."""
    if sum(lam) != xi.w:
        raise ValueError("lam must partition w")
    out = {}

    def rec(j: int, chosen):
        if j == len(lam):
            out[tuple(chosen)] = xi.value(canonical_label(zip(lam, chosen)))
            return
        for c in enumerate_partitions(xi.p):
            chosen.append(c)
            rec(j + 1, chosen)
            chosen.pop()

    rec(0, [])
    return out


def shr_m(xi: WreathClassFunction, m: int) -> WreathClassFunction:
    """Shrink: value at a label is the value at the label with tops scaled by m."""
    if xi.w % m:
        raise ValueError("m must divide w")
    d = xi.w // m
    values = tuple(
        xi.value(canonical_label((m * k, c) for k, c in lbl))
        for lbl in enumerate_wreath_classes(xi.p, d)
    )
    return WreathClassFunction(xi.p, d, values)


def delta_alpha(xi: WreathClassFunction, alpha: Partition) -> WreathClassFunction:
    """Adjoin pairs (alpha_j, base p-cycle) to every label, then evaluate xi."""
    m = sum(alpha)
    if m > xi.w:
        raise ValueError("alpha too large")
    extra = tuple((a, (xi.p,)) for a in alpha)
    values = tuple(
        xi.value(canonical_label(tuple(lbl) + extra))
        for lbl in enumerate_wreath_classes(xi.p, xi.w - m)
    )
    return WreathClassFunction(xi.p, xi.w - m, values)


def in_K_s(xi: WreathClassFunction, s: int) -> bool:
    """Whether xi vanishes on every class with at least s base p-cycles."""
    return all(
        v == 0
        for lbl, v in zip(enumerate_wreath_classes(xi.p, xi.w), xi.values)
        if in_U_s(lbl, xi.p, s)
    )


def span_generators(p: int, w: int, base_list: list[tuple]) -> list[WreathClassFunction]:
    """Induced generators with base factors drawn from the given value tuples."""

    def gen(i: int, rem: int):
        if i == len(base_list):
            if rem == 0:
                yield ()
            return
        for k in range(rem, -1, -1):
            for mu in enumerate_partitions(k):
                for rest in gen(i + 1, rem - k):
                    yield (mu,) + rest

    out = []
    for assign in gen(0, w):
        factors: list[Factor] = [
            (phi, {mu: 1}) for phi, mu in zip(base_list, assign) if mu
        ]
        if not factors:
            factors = [(base_list[0], {(): 1})] if base_list else []
        out.append(zeta_class_function(p, w, factors))
    return out


def span_membership(xi: WreathClassFunction, base_list: list[tuple]) -> bool:
    """Whether xi lies in the integer span of the induced generators."""
    if any(int(v) != v for v in xi.values):
        raise ValueError("membership asks for integer class functions")
    gens = span_generators(xi.p, xi.w, base_list)
    rows = [[int(v) for v in g.values] for g in gens]
    return lattice_contains(hnf_basis(rows), [int(v) for v in xi.values])
