"""Integer partitions as plain tuples, plus the p-adic helpers built on them.

A partition is a tuple of weakly decreasing positive ints; ``()`` is the
empty partition.  All enumeration is in descending lexicographic order, so
``(n)`` comes first and ``(1,)*n`` last; every dense vector in this package
is aligned to that order.
"""

from __future__ import annotations

from functools import cache

Partition = tuple[int, ...]

# Enumeration guard: partition counts grow fast enough that anything past
# this is a mistake at desk scale.
MAX_ENUM_N = 64


class GuardExceeded(Exception):
    """A size guard was hit; the request is out of desk-scale range."""


def partition(parts) -> Partition:
    """Validate and normalize an iterable of parts (trailing zeros dropped)."""
    out = []
    prev = None
    for x in parts:
        x = int(x)
        if x < 0:
            raise ValueError(f"negative part {x}")
        if x == 0:
            continue
        if prev is not None and x > prev:
            raise ValueError(f"parts not weakly decreasing: {tuple(parts)}")
        out.append(x)
        prev = x
    return tuple(out)


def parse_partition(text: str) -> Partition:
    """Parse the wire format: comma-separated decreasing ints, '' is empty."""
    text = text.strip()
    if not text:
        return ()
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise ValueError(f"bad partition literal {text!r}") from exc
    if any(x <= 0 for x in parts):
        raise ValueError(f"parts must be positive in {text!r}")
    lam = tuple(parts)
    if partition(lam) != lam:
        raise ValueError(f"parts must be weakly decreasing in {text!r}")
    return lam


def format_partition(lam: Partition) -> str:
    return ",".join(str(x) for x in lam)


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram."""
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x >= i) for i in range(1, lam[0] + 1))


def sqcup(lam: Partition, mu: Partition) -> Partition:
    """Disjoint union of parts, resorted."""
    return tuple(sorted(lam + mu, reverse=True))


def scale(m: int, lam: Partition) -> Partition:
    """Multiply every part by m >= 1."""
    if m < 1:
        raise ValueError("scale factor must be >= 1")
    return tuple(m * x for x in lam)


def contains(lam: Partition, mu: Partition) -> bool:
    """Containment of Young diagrams."""
    if len(mu) > len(lam):
        return False
    return all(mu[i] <= lam[i] for i in range(len(mu)))


@cache
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n, descending lexicographic."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > MAX_ENUM_N:
        raise GuardExceeded(f"enumerate_partitions guard: n={n} > {MAX_ENUM_N}")

    def gen(rem: int, maxpart: int):
        if rem == 0:
            yield ()
            return
        for first in range(min(rem, maxpart), 0, -1):
            for rest in gen(rem - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def partition_index(lam: Partition) -> int:
    """Position of lam in the canonical ordering of its size class."""
    return _index_map(sum(lam))[lam]


@cache
def _index_map(n: int) -> dict[Partition, int]:
    return {lam: i for i, lam in enumerate(enumerate_partitions(n))}


def compare_dominance(lam: Partition, mu: Partition) -> str:
    """Dominance comparison of equal-size partitions.

    Returns one of 'equal', 'greater', 'less', 'incomparable'.
    """
    if sum(lam) != sum(mu):
        raise ValueError("dominance needs equal sizes")
    if lam == mu:
        return "equal"
    k = max(len(lam), len(mu))
    ge = le = True
    a = b = 0
    for i in range(k):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            ge = False
        if a > b:
            le = False
    if ge:
        return "greater"
    if le:
        return "less"
    return "incomparable"


def compare_lex(lam: Partition, mu: Partition) -> str:
    """Lexicographic comparison of equal-size partitions."""
    if sum(lam) != sum(mu):
        raise ValueError("lex comparison needs equal sizes")
    if lam == mu:
        return "equal"
    return "greater" if lam > mu else "less"


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def v_p(n: int, p: int) -> int:
    """Exponent of p in n; n must be nonzero."""
    if n == 0:
        raise ValueError("v_p(0) is undefined")
    if p < 2:
        raise ValueError("p must be >= 2")
    n = abs(n)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def p_adic_digits(n: int, p: int) -> list[int]:
    """Base-p digits of n >= 0, least significant first; 0 has no digits."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if p < 2:
        raise ValueError("p must be >= 2")
    digits = []
    while n:
        n, r = divmod(n, p)
        digits.append(r)
    return digits


def multinomial_valuation(w: int, parts: tuple[int, ...], p: int) -> int:
    """p-valuation of the multinomial coefficient (w; parts).

    Computed from carry counts: (sum of digits of the parts minus digits
    of w) / (p - 1).
    """
    if sum(parts) != w:
        raise ValueError("parts must sum to w")
    if any(x < 0 for x in parts):
        raise ValueError("parts must be >= 0")
    total = sum(sum(p_adic_digits(u, p)) for u in parts) - sum(p_adic_digits(w, p))
    q, r = divmod(total, p - 1)
    if r:
        raise ValueError("digit sum mismatch; not a valid multinomial")
    return q
