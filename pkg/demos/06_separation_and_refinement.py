"""Distinct projective laminations have distinct horofunctions.

The refinement mu-hat extends a lamination until it meets every boundary
and blocks every arc of the panel.  Stretching toward a blend of mu and the
added part drives every class crossing mu-hat to be long, which crushes the
normalized intersection ratios of mu while those of any other lamination nu
stay larger: a point witnessing Phi_nu > Phi_mu.
"""

from arcmetric import (CurveClass, enumerate_panel, normalize, pants_point,
                       rational_lamination, refine, separation_experiment)
from arcmetric.lamination import lamination_to_dict, refinement_complete

X0 = pants_point(2, 2, 2)
S = X0.surface
panel = enumerate_panel(S, 0)
a33, a12 = S.arc_alias("a33"), S.arc_alias("a12")
B1, B3 = CurveClass("boundary", "B1"), CurveClass("boundary", "B3")

print("refinement examples:")
for weights in ({a33: 1.0}, {a12: 1.0}, {B1: 1.0, B3: 1.0}):
    mu = rational_lamination(S, weights)
    mu_hat, zeta = refine(mu)
    print(f"  mu     = {lamination_to_dict(mu)}")
    print(f"  mu-hat = {lamination_to_dict(mu_hat)}")
    print(f"  added  = {[str(c) for c in zeta.classes()]}, "
          f"blocking property holds: {refinement_complete(mu_hat, panel)}")
print()

pairs = [
    ({a33: 1.0}, {B3: 1.0}, "arc vs the boundary leaf it ends on"),
    ({B1: 1.0}, {B3: 1.0}, "two disjoint boundary leaves"),
    ({B1: 1.0, B3: 1.0}, {B1: 2.0, B3: 1.0},
     "same support, different weights"),
]
print("separation witnesses (normalized at the symmetric base point):")
for w_mu, w_nu, label in pairs:
    mu = normalize(rational_lamination(S, w_mu), X0)
    nu = normalize(rational_lamination(S, w_nu), X0)
    w = separation_experiment(mu, nu, X0, panel)
    lengths = {lab: round(v, 4) for lab, v in w.point.boundary}
    print(f"  {label}:")
    print(f"    witness at eps = {w.epsilon}, t = {w.t}, "
          f"boundary lengths {lengths}")
    print(f"    log sup i(nu,.)/l = {w.lhs:+.4f} > "
          f"log sup i(mu,.)/l = {w.rhs:+.4f} (gap {w.lhs - w.rhs:.4f})")
