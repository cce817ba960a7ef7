"""
Bead positions, cores, and quotients
====================================

A partition becomes a strictly decreasing list of bead positions; pushing
beads up one runner at a time strips away full hooks.  Everything below
prints exact integers.
"""

from blockiso.abacus import (
    beta_set,
    block_weight,
    circularly_nondecreasing,
    from_core_and_quotient,
    p_core,
    p_quotient,
    p_sign,
    runner_permutation,
)

lam = (4, 3, 1, 1)
p = 2

print("partition:", lam)
print("bead positions with 6 beads:", beta_set(lam, 6))

# runner i holds the positions congruent to i mod p; pushing every bead to
# the top of its runner removes all length-p hooks at once
print("2-core:", p_core(lam, p))
print("2-quotient:", p_quotient(lam, p))
print("weight:", block_weight(lam, p))

# the core and quotient together rebuild the partition
rebuilt = from_core_and_quotient(p_core(lam, p), p_quotient(lam, p), p)
print("rebuilt:", rebuilt, "round trip ok:", rebuilt == lam)

# the sign tracks how bead numbers get shuffled on the way down to the core
for mu in ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)):
    print("sign for", mu, "over the empty core:", p_sign(mu, (), 2))

# each core orders its runners by how deep the first gap sits
for rho, q in (((), 3), ((1,), 3), ((1, 1), 3), ((2,), 3)):
    gamma = runner_permutation(rho, q)
    start = circularly_nondecreasing(rho, q)
    print(f"core {rho or '()'} with p={q}: runner ranks {gamma}, circular start {start}")
