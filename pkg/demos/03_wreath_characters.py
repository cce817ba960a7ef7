"""
Classes and characters of the small wreath products
===================================================

The p = w = 2 case is the dihedral group of order eight acting on two
blocks of two points, so every number below can be checked by hand.
"""

from blockiso.wreath import (
    centralizer_order_wreath,
    embed_to_sn,
    enumerate_irr_wreath,
    enumerate_wreath_classes,
    identity_label,
    wreath_group_order,
    zeta_irr,
)

p, w = 2, 2
print("group order:", wreath_group_order(p, w))

print("conjugacy classes (top cycle length : base class):")
for lbl in enumerate_wreath_classes(p, w):
    pretty = ",".join(f"{k}:{c}" for k, c in lbl)
    size = wreath_group_order(p, w) // centralizer_order_wreath(lbl, p)
    print(f"  {pretty:<24} size {size:>2}  lands on cycle type {embed_to_sn(lbl)}")

print("character table (rows are irreducible labels):")
for psi in enumerate_irr_wreath(p, w):
    f = zeta_irr(p, w, psi)
    print(f"  {str(psi):<22} {f.values}")

# degrees again satisfy the sum of squares identity
ident = identity_label(p, w)
total = sum(zeta_irr(p, w, psi).value(ident) ** 2 for psi in enumerate_irr_wreath(p, w))
print("sum of squared degrees:", total)

# the same machinery at p=3, w=2 gives a group of order 72
print("order 72 case has", len(enumerate_wreath_classes(3, 2)), "classes")
for psi in enumerate_irr_wreath(3, 2)[:3]:
    print(" ", psi, zeta_irr(3, 2, psi).values)
