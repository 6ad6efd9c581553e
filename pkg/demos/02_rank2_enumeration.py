"""Definite rank-2 lattices: reduction, enumeration by determinant, and
finite isometry groups.

Run as:  python3 demos/02_rank2_enumeration.py
"""

from latticelab import (
    Rank2Form,
    rank2_automorphism_orders,
    rank2_enumerate,
    rank2_reduce,
)

print("Gauss reduction brings any definite binary form to the shape")
print("-a < 2b <= a <= c (b >= 0 when a = c):")
for triple in [(14, -1, 2), (2, -1, 14), (30, 7, 2)]:
    red = rank2_reduce(Rank2Form(*triple))
    print(f"  {triple} -> {red}")

print()
print("All negative definite even forms for a few determinants:")
for det in (3, 27, 36, 75, 363):
    forms = rank2_enumerate(det, negative=True)
    print(f"  det {det:3d}: " + ", ".join(str(f) for f in forms))

print()
print("Isometry orders detect the hexagonal and square shapes:")
for triple in [(6, 3, 6), (6, 0, 6), (2, 1, 14), (12, 0, 30)]:
    orders = sorted(rank2_automorphism_orders(Rank2Form(*triple)))
    print(f"  {Rank2Form(*triple)}: element orders {orders}")
print("An order-3 isometry occurs exactly for the (2a, a, 2a) shape,")
print("an order-4 isometry exactly for (m, 0, m).")
