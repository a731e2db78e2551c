"""Rational measured laminations and their coordinates.

A rational lamination is a weighted family of disjoint curves and arcs.  On
a bordered surface the coordinate system keeps, per interior decomposition
curve, an (intersection, twist) pair, and collapses each boundary curve to a
single number: positive when arcs cross it, negative for a boundary leaf.
The coordinate space of the pair of pants and of the one-holed torus is
3-dimensional, so their projective lamination spheres are 2-spheres.
"""

import random

from arcmetric import (CurveClass, dt_decode, dt_double_coordinates,
                       dt_encode, intersection_number, pants_surface,
                       rational_lamination, sample_supported_lamination,
                       sphere_dimension, torus_surface)
from arcmetric.lamination import dt_to_dict, lamination_to_dict

S = pants_surface()
T = torus_surface()

print("intersection numbers on the pair of pants:")
a33 = S.arc_alias("a33")
a12 = S.arc_alias("a12")
mu = rational_lamination(S, {a33: 1.0})
print(f"  i(a33, a12) = {intersection_number(mu, a12)}  "
      f"(the separating arc blocks the crossing one)")
print(f"  i(a33, B3)  = {intersection_number(mu, CurveClass('boundary', 'B3'))}"
      f"  (one count per endpoint: the double's transverse measure)")
leaf = rational_lamination(S, {CurveClass("boundary", "B3"): 1.0})
print(f"  i(B3-leaf, a13) = {intersection_number(leaf, S.arc_alias('a13'))}  "
      f"(half the leaf weight per endpoint resting on it)")
print()

print("coordinates and their round trip:")
for surface, name in ((S, "pair of pants"), (T, "one-holed torus")):
    dim, sphere = sphere_dimension(surface)
    print(f"  {name}: coordinate dimension {dim}, "
          f"projective sphere dimension {sphere}")
rng = random.Random(1)
for surface in (S, T):
    mu = sample_supported_lamination(surface, rng)
    coords = dt_encode(mu)
    back = dt_decode(surface, coords)
    print(f"  {surface.signature}: {lamination_to_dict(mu)}")
    print(f"    -> coordinates {dt_to_dict(coords)}")
    print(f"    -> decoded     {lamination_to_dict(back)}")
print()

print("a lamination on the surface doubles to a mirror-symmetric one;")
print("its coordinates repeat with negated twists:")
beta = CurveClass("word", "w(2,3)", (2, 3))
mu = rational_lamination(T, {beta: 0.5})
for label, (i_val, theta) in sorted(dt_double_coordinates(mu).items()):
    print(f"  {label:>4}: intersection {i_val:.3f}, twist {theta:+.3f}")
