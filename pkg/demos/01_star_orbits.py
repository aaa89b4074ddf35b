"""Star homoclinic orbits and the order of rationals.

Every rational q in (0, 1/2) has an NBT word c_q, and the homoclinic orbit
inf0.c_q 0inf is pruned by a single rectangle.  Larger q gives a smaller
rectangle, hence fewer pruned orbits and a larger forced set.
"""
from fractions import Fraction

from hsforce import enumerate_periodic, forced_periodic, forces_pair, nbt_code, region_star, star

qs = [Fraction(1, 5), Fraction(1, 4), Fraction(2, 7), Fraction(1, 3), Fraction(2, 5)]

print("NBT words")
for q in qs:
    print(f"  c_{q} = {nbt_code(q).word}")

print("\nRectangles (x_min moves right as q grows; y-levels stay fixed)")
for q in qs:
    r = region_star(q)[0]
    print(f"  {str(q):>4}: x in ({r.x_min}, {r.x_max}), y in ({r.y_min}, {r.y_max})")

N = 12
total = len(enumerate_periodic(N))
print(f"\nForced periodic orbits of period <= {N} (out of {total})")
for q in qs:
    print(f"  {str(q):>4}: {len(forced_periodic(star(q), N).forced)}")

print("\nPairwise forcing, row forces column")
print("      " + " ".join(f"{str(q):>5}" for q in qs))
for a in qs:
    row = ["  yes" if forces_pair(star(a), star(b)) else "   . " for b in qs]
    print(f"{str(a):>5} " + " ".join(row))
