"""Hyperbolic trigonometry of a pair of pants.

Closed-form lengths of the two kinds of orthogeodesic arcs in a hyperbolic
pair of pants with geodesic boundary, the piecewise-linear intersection
numbers of a measured lamination with those arcs, and the decay envelope for
a boundary leaf along exponential scaling paths.

Lengths are evaluated in log space throughout, so boundary lengths of order
10^5 (cosh far beyond double range) are handled without overflow.  A cusp is
encoded as a boundary of length zero; the formulas degrade continuously to
that case via cosh(0) = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

_LN2 = math.log(2.0)


def _check_finite(name, x):
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x!r}")


def log_cosh(x: float) -> float:
    """log(cosh(x)), safe for large |x|."""
    ax = abs(x)
    return ax + math.log1p(math.exp(-2.0 * ax)) - _LN2


def log_sinh(x: float) -> float:
    """log(sinh(x)) for x > 0, safe for large and for denormal-small x."""
    if x <= 0:
        raise DomainError("log_sinh needs a positive argument")
    if x < 1e-8:
        return math.log(x)  # sinh(x) = x (1 + x^2/6 + ...), correction < 1e-17
    return x + math.log1p(-math.exp(-2.0 * x)) - _LN2


def acosh_clamped(x: float) -> float:
    """arccosh with rounding guard: x in [1 - 1e-12, 1] is clamped to 1."""
    if x < 1.0:
        if x < 1.0 - 1e-12:
            raise DomainError(f"arccosh argument {x} < 1")
        return 0.0
    return math.acosh(x)


def _asinh_of_exp(lx: float) -> float:
    """arcsinh(exp(lx)), stable for lx anywhere in the double range."""
    if lx > 33.0:
        # asinh(x) = log(2x) + 1/(4x^2) - ...; the correction is < 1e-29 here
        return lx + _LN2
    return math.asinh(math.exp(lx))  # underflow of exp gives a true 0 length


def _logsumexp(terms) -> float:
    m = max(terms)
    return m + math.log(sum(math.exp(t - m) for t in terms))


def arc_length_same_boundary(lb: float, lg1: float, lg2: float) -> float:
    """Length of the arc from a boundary of length lb back to itself.

    The arc separates the other two boundaries (lengths lg1, lg2; either may
    be 0 for a cusp) and satisfies

        cosh^2(l/2) = (-1 + cosh^2(lb/2) + cosh^2(lg1/2) + cosh^2(lg2/2)
                       + 2 cosh(lb/2) cosh(lg1/2) cosh(lg2/2)) / sinh^2(lb/2),

    evaluated through the cancellation-free equivalent

        sinh^2(l/2) = (cosh^2(lg1/2) + cosh^2(lg2/2)
                       + 2 cosh(lb/2) cosh(lg1/2) cosh(lg2/2)) / sinh^2(lb/2)

    in log space, so near-degenerate and overflow-scale inputs stay exact.
    """
    for name, v in (("lb", lb), ("lg1", lg1), ("lg2", lg2)):
        _check_finite(name, v)
        if v < 0:
            raise DomainError(f"{name} must be nonnegative, got {v}")
    if lb == 0:
        raise DomainError("arc from a cusp is undefined (lb = 0)")
    if lg1 < lg2:
        lg1, lg2 = lg2, lg1  # bit-stable symmetry in the gamma sides
    cb, c1, c2 = log_cosh(lb / 2), log_cosh(lg1 / 2), log_cosh(lg2 / 2)
    le = _logsumexp([2 * c1, 2 * c2, _LN2 + cb + c1 + c2]) - 2 * log_sinh(lb / 2)
    return 2.0 * _asinh_of_exp(le / 2.0)


def arc_length_distinct_boundaries(lb1: float, lb2: float, lg: float) -> float:
    """Length of the arc joining boundaries of lengths lb1 and lb2.

    The third boundary has length lg (0 for a cusp) and

        cosh(l) = (cosh(lg/2) + cosh(lb1/2) cosh(lb2/2))
                  / (sinh(lb1/2) sinh(lb2/2)),

    evaluated through the cancellation-free equivalent

        sinh^2(l/2) = (cosh(lg/2) + cosh((lb1 - lb2)/2))
                      / (2 sinh(lb1/2) sinh(lb2/2))

    in log space.
    """
    for name, v in (("lb1", lb1), ("lb2", lb2), ("lg", lg)):
        _check_finite(name, v)
        if v < 0:
            raise DomainError(f"{name} must be nonnegative, got {v}")
    if lb1 == 0 or lb2 == 0:
        raise DomainError("arc endpoint on a cusp is undefined (lb = 0)")
    le = (_logsumexp([log_cosh(lg / 2), log_cosh((lb1 - lb2) / 2)]) - _LN2
          - log_sinh(lb1 / 2) - log_sinh(lb2 / 2))
    return 2.0 * _asinh_of_exp(le / 2.0)


# -- intersection of a measured lamination with a pants-local arc -----------


def _check_side(i, w, name):
    _check_finite(f"i_{name}", i)
    _check_finite(f"w_{name}", w)
    if i < 0 or w < 0:
        raise DomainError(f"side {name}: intersection and weight must be >= 0")
    if i > 0 and w > 0:
        raise DomainError(
            f"side {name}: a boundary leaf (w > 0) is disjoint from the rest "
            f"of its lamination, so i > 0 and w > 0 cannot both hold"
        )


def intersection_arc_same(i_beta, i_gamma1, i_gamma2, w_beta=0.0) -> float:
    """i(mu, arc) for the arc from beta to itself separating gamma1, gamma2.

    Case split on the triple of boundary intersection numbers; the index
    convention i(mu, gamma1) >= i(mu, gamma2) is enforced by sorting, and
    the three regimes agree on their common boundaries.
    """
    _check_side(i_beta, w_beta, "beta")
    _check_side(i_gamma1, 0.0, "gamma1")
    _check_side(i_gamma2, 0.0, "gamma2")
    g1, g2 = (i_gamma1, i_gamma2) if i_gamma1 >= i_gamma2 else (i_gamma2, i_gamma1)
    if i_beta > g1 + g2:
        return 0.0
    if g1 > i_beta + g2:
        return g1 - i_beta + w_beta
    return 0.5 * (g1 + g2 - i_beta) + w_beta


def intersection_arc_distinct(i_beta1, i_beta2, i_gamma,
                              w_beta1=0.0, w_beta2=0.0) -> float:
    """i(mu, arc) for the arc joining distinct boundaries beta1, beta2."""
    _check_side(i_beta1, w_beta1, "beta1")
    _check_side(i_beta2, w_beta2, "beta2")
    _check_side(i_gamma, 0.0, "gamma")
    b1, b2 = (i_beta1, i_beta2) if i_beta1 >= i_beta2 else (i_beta2, i_beta1)
    if i_gamma > b1 + b2:
        return 0.5 * (i_gamma - b1 - b2) + w_beta1 + w_beta2
    return 0.5 * (w_beta1 + w_beta2)


def leaf_decay_bound(omega: float, t: float, abs_chi: int) -> float:
    """Decay envelope 3*|chi| / sinh(e^t * omega / 2) for a boundary leaf.

    Strictly decreasing in both t and omega; used as the exact length
    prescription for decaying curves on scaling paths.
    """
    _check_finite("omega", omega)
    _check_finite("t", t)
    if omega <= 0:
        raise DomainError("leaf weight omega must be positive")
    if abs_chi < 1:
        raise DomainError("|chi| must be at least 1")
    x = math.exp(t) * omega / 2.0
    if x <= 700.0:
        return 3.0 * abs_chi / math.sinh(x)
    ly = math.log(3.0 * abs_chi) - log_sinh(x)
    return math.exp(ly)  # may underflow to 0.0 for astronomical arguments


# -- grouped value types ------------------------------------------------------


@dataclass(frozen=True)
class PantsBoundaryLengths:
    """Boundary lengths of a pair of pants; zero encodes a cusp."""

    b1: float
    b2: float
    b3: float

    def __post_init__(self):
        for name in ("b1", "b2", "b3"):
            v = getattr(self, name)
            _check_finite(name, v)
            if v < 0:
                raise DomainError(f"{name} must be >= 0, got {v}")


@dataclass(frozen=True)
class PantsIntersectionData:
    """Intersection numbers and boundary-leaf weights of mu with three sides."""

    i_side1: float
    i_side2: float
    i_side3: float
    w_side1: float = 0.0
    w_side2: float = 0.0
    w_side3: float = 0.0

    def __post_init__(self):
        _check_side(self.i_side1, self.w_side1, "1")
        _check_side(self.i_side2, self.w_side2, "2")
        _check_side(self.i_side3, self.w_side3, "3")

    def arc_same(self) -> float:
        """Arc from side 1 to itself, separating sides 2 and 3."""
        return intersection_arc_same(self.i_side1, self.i_side2, self.i_side3,
                                     self.w_side1)

    def arc_distinct(self) -> float:
        """Arc joining sides 1 and 2, with side 3 as the third boundary."""
        return intersection_arc_distinct(self.i_side1, self.i_side2,
                                         self.i_side3, self.w_side1,
                                         self.w_side2)
