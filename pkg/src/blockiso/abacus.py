"""Bead abacus for partitions: cores, quotients, and bead-move signs.

A partition with at most N - 1 parts is displayed on an abacus with N beads,
bead i sitting in slot lam_i + N - i (1-indexed parts, missing parts zero).
With p runners, slot r*p + i lies on runner i at row r.  Pushing every bead
as far up its runner as possible yields the p-core; reading each runner as a
single-runner abacus yields the p-quotient.  N must be divisible by p and
large enough that every runner holds a bead; all derived data below is
independent of the admissible N chosen.
"""

from __future__ import annotations

from functools import cache

from .partitions import (
    Partition,
    conjugate,
    contains,
    enumerate_partitions,
    partition,
)


def default_bead_count(lam: Partition, p: int) -> int:
    """Smallest convenient N: divisible by p with N - p > len(lam)."""
    k = len(lam)
    return p * ((k + p) // p + 1)


def beta_set(lam: Partition, n_beads: int) -> tuple[int, ...]:
    """First-column hook lengths for n_beads beads, sorted decreasing."""
    if n_beads < len(lam):
        raise ValueError("need at least len(lam) beads")
    lam_pad = lam + (0,) * (n_beads - len(lam))
    return tuple(lam_pad[i] + n_beads - 1 - i for i in range(n_beads))


def partition_from_beta(beta) -> Partition:
    """Inverse of beta_set; beta is any iterable of distinct slots."""
    slots = sorted(beta, reverse=True)
    n = len(slots)
    return partition(slots[i] - (n - 1 - i) for i in range(n))


def _check_beads(lam: Partition, p: int, n_beads: int | None) -> int:
    if p < 2:
        raise ValueError("p must be >= 2")
    if n_beads is None:
        return default_bead_count(lam, p)
    if n_beads % p or n_beads - p <= len(lam):
        raise ValueError(f"inadmissible bead count {n_beads} for p={p}")
    return n_beads


def runner_rows(lam: Partition, p: int, n_beads: int | None = None) -> list[list[int]]:
    """Bead rows per runner, each list sorted increasing."""
    n_beads = _check_beads(lam, p, n_beads)
    rows: list[list[int]] = [[] for _ in range(p)]
    for slot in beta_set(lam, n_beads):
        rows[slot % p].append(slot // p)
    for r in rows:
        r.sort()
    return rows


def p_core(lam: Partition, p: int) -> Partition:
    """Push all beads up; the partition left is the p-core."""
    rows = runner_rows(lam, p)
    slots = [r * p + i for i, col in enumerate(rows) for r in range(len(col))]
    return partition_from_beta(slots)


def p_quotient(lam: Partition, p: int, n_beads: int | None = None) -> tuple[Partition, ...]:
    """Tuple of p partitions, component i read off runner i."""
    rows = runner_rows(lam, p, n_beads)
    return tuple(partition_from_beta(col) for col in rows)


def block_weight(lam: Partition, p: int) -> int:
    """Number of p-hooks removed to reach the core."""
    return (sum(lam) - sum(p_core(lam, p))) // p


def is_core(rho: Partition, p: int) -> bool:
    return p_core(rho, p) == rho


def from_core_and_quotient(rho: Partition, quot: tuple[Partition, ...], p: int) -> Partition:
    """Rebuild the partition with p-core rho and p-quotient quot."""
    if len(quot) != p:
        raise ValueError("quotient must have p components")
    if not is_core(rho, p):
        raise ValueError(f"{rho} is not a p-core for p={p}")
    n_beads = default_bead_count(rho, p) + p * sum(sum(q) for q in quot)
    base = runner_rows(rho, p, n_beads)
    slots = []
    for i, (col, q) in enumerate(zip(base, quot)):
        b = len(col)
        q_pad = q + (0,) * (b - len(q))
        if len(q) > b:
            raise ValueError("bead count too small for quotient component")
        for j in range(b):
            slots.append((q_pad[j] + b - 1 - j) * p + i)
    return partition_from_beta(slots)


def contains_p(lam: Partition, mu: Partition, p: int) -> bool:
    """Whether mu is reachable from lam by moving beads up runners.

    Equivalently: equal p-cores and componentwise containment of the
    p-quotients.
    """
    if not contains(lam, mu) or (sum(lam) - sum(mu)) % p:
        return False
    n_beads = default_bead_count(lam, p)
    rows_l = runner_rows(lam, p, n_beads)
    rows_m = runner_rows(mu, p, n_beads)
    for col_l, col_m in zip(rows_l, rows_m):
        if len(col_l) != len(col_m):
            return False
        if any(m > l for l, m in zip(col_l, col_m)):
            return False
    return True


def p_sign(lam: Partition, mu: Partition, p: int) -> int:
    """Sign of the bead renumbering permutation from lam down to mu.

    Beads of lam are numbered 1..N in increasing slot order, then moved up
    one step at a time (carrying their numbers) until the abacus shows mu;
    the result is the parity of the final number sequence read in slot
    order.  Independent of the move order and of the admissible N.
    """
    if not contains_p(lam, mu, p):
        raise ValueError("mu is not reachable from lam by upward bead moves")
    n_beads = default_bead_count(lam, p)
    start = sorted(beta_set(lam, n_beads))
    number = {slot: i + 1 for i, slot in enumerate(start)}
    occupied = set(start)
    targets = runner_rows(mu, p, n_beads)
    moved = True
    while moved:
        moved = False
        for i in range(p):
            cur = sorted(s for s in occupied if s % p == i)
            for row_now, row_want in zip((s // p for s in cur), targets[i]):
                s = row_now * p + i
                if row_now > row_want and (s - p) not in occupied:
                    occupied.remove(s)
                    occupied.add(s - p)
                    number[s - p] = number.pop(s)
                    moved = True
    seq = [number[s] for s in sorted(occupied)]
    inversions = sum(
        1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b]
    )
    return -1 if inversions % 2 else 1


def runner_permutation(rho: Partition, p: int) -> tuple[int, ...]:
    """Rank of each runner's lowest bead among all runners' lowest beads.

    Entry i is the number of runners whose bottom bead sits in an earlier
    slot than runner i's bottom bead; independent of the admissible N.
    """
    if not is_core(rho, p):
        raise ValueError(f"{rho} is not a p-core for p={p}")
    rows = runner_rows(rho, p)
    bottoms = [p * (len(col) - 1) + i for i, col in enumerate(rows)]
    return tuple(sum(1 for s in bottoms if s < bottoms[i]) for i in range(p))


def circularly_nondecreasing(rho: Partition, p: int) -> int | None:
    """Starting point j if the runner ranks rotate the identity, else None.

    The condition holds exactly when the runner bead counts, read from the
    starting runner around the circle, are weakly increasing.
    """
    gamma = runner_permutation(rho, p)
    for j in range(p):
        if all(gamma[i] == (i - j) % p for i in range(p)):
            return j
    return None


@cache
def core_tower_sizes(lam: Partition, p: int) -> tuple[int, ...]:
    """Row sums of the iterated core tower.

    Entry 0 is the size of the p-core; entry i sums the core sizes of the
    i-th iterated quotient components.  The sizes weighted by p**i add up
    to the size of lam.
    """
    sizes = []
    layer = [lam]
    while any(layer):
        sizes.append(sum(sum(p_core(x, p)) for x in layer))
        layer = [q for x in layer for q in p_quotient(x, p)]
    total = sum(c * p**i for i, c in enumerate(sizes))
    if total != sum(lam):
        raise AssertionError("core tower does not resolve the partition")
    return tuple(sizes)


def partitions_with_core(n: int, rho: Partition, p: int) -> tuple[Partition, ...]:
    """All partitions of n whose p-core is rho, canonical order."""
    if not is_core(rho, p):
        raise ValueError(f"{rho} is not a p-core for p={p}")
    if (n - sum(rho)) % p or n < sum(rho):
        return ()
    return tuple(lam for lam in enumerate_partitions(n) if p_core(lam, p) == rho)


def hook_partition(i: int, p: int) -> Partition:
    """The hook with arm p - i - 1 and leg i, a partition of p."""
    if not 0 <= i < p:
        raise ValueError("leg length out of range")
    return (p - i,) + (1,) * i


def is_hook(lam: Partition) -> bool:
    return len(lam) <= 1 or lam[1] == 1


def quotient_tuple_conjugates(quot: tuple[Partition, ...]) -> tuple[Partition, ...]:
    """Componentwise conjugate (used when pairing runners with hook legs)."""
    return tuple(conjugate(q) for q in quot)
