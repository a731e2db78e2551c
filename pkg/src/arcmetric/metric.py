"""The arc metric, horofunctions, and convergence in the length-vector sense.

All suprema over curves and arcs are truncated to a finite panel; on the
pair of pants the nine-entry panel is the complete family, so there the
values are exact.  Every result reports the panel complexity it used, and
values are monotone nondecreasing under panel refinement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import geometry as geo
from . import lamination as lam
from .errors import DegeneratePanelError, DomainError
from .topology import Panel


@dataclass(frozen=True)
class MetricValue:
    """log of the panel supremum, with the entry attaining it."""

    value: float
    maximizer: str
    panel_complexity: int


def _length_vector(X: geo.FNPoint, panel: Panel) -> list[float]:
    return [geo.class_length(X, entry) for entry in panel]


def arc_metric(X: geo.FNPoint, Y: geo.FNPoint, panel: Panel) -> MetricValue:
    """d(X, Y) = log sup of length ratios l(Y)/l(X) over the panel.

    Ties are broken by panel order, so reports are deterministic.
    """
    if len(panel) == 0:
        raise DomainError("panel is empty")
    if X.surface != Y.surface:
        raise DomainError("points live on different surfaces")
    best, best_entry = -math.inf, None
    for entry, lx, ly in zip(panel, _length_vector(X, panel),
                             _length_vector(Y, panel)):
        ratio = math.inf if lx <= 0.0 else ly / lx
        if ratio > best:
            best, best_entry = ratio, entry
    return MetricValue(math.log(best) if math.isfinite(best) else math.inf,
                       str(best_entry), panel.complexity)


def symmetrized_metric(X, Y, panel) -> float:
    """max(d(X,Y), d(Y,X)); a genuine metric, provided for convenience."""
    return max(arc_metric(X, Y, panel).value, arc_metric(Y, X, panel).value)


def thurston_vector(X: geo.FNPoint, panel: Panel) -> tuple[float, ...]:
    """Panel length vector normalized to sup-norm 1 (projective class)."""
    if len(panel) == 0:
        raise DomainError("panel is empty")
    lengths = _length_vector(X, panel)
    top = max(lengths)
    return tuple(v / top for v in lengths)


# -- horofunctions -----------------------------------------------------------------


@dataclass(frozen=True)
class Horofunction:
    """Either an interior point function d(., X) - d(X0, X), or the boundary
    function attached to a projective lamination via the normalized
    intersection form."""

    kind: str  # "interior" | "boundary"
    base_point: geo.FNPoint
    panel: Panel
    point: geo.FNPoint | None = None
    mu: lam.RationalLamination | None = None


def interior_horofunction(X: geo.FNPoint, base_point: geo.FNPoint,
                          panel: Panel) -> Horofunction:
    return Horofunction("interior", base_point, panel, point=X)


def _normalizer(mu, base_point, panel) -> float:
    """sup over the panel of i(mu, .)/l(., X0); scale-invariant data for mu."""
    best = 0.0
    for entry in panel:
        ival = lam.intersection_number(mu, entry)
        if ival > 0:
            best = max(best, ival / geo.class_length(base_point, entry))
    return best


def boundary_horofunction(mu: lam.RationalLamination, base_point: geo.FNPoint,
                          panel: Panel) -> Horofunction:
    if mu.is_zero():
        raise DomainError("boundary horofunction needs a nonzero lamination")
    if _normalizer(mu, base_point, panel) == 0.0:
        raise DegeneratePanelError(
            "every panel class misses the lamination; refine the panel")
    return Horofunction("boundary", base_point, panel, mu=mu)


def horofunction_eval(h: Horofunction, Y: geo.FNPoint) -> float:
    """Value at Y: interior points give d(Y, X) - d(X0, X); boundary points
    give log sup of the normalized intersection form against lengths at Y."""
    if h.kind == "interior":
        return (arc_metric(Y, h.point, h.panel).value
                - arc_metric(h.base_point, h.point, h.panel).value)
    norm = _normalizer(h.mu, h.base_point, h.panel)
    best = 0.0
    for entry in h.panel:
        ival = lam.intersection_number(h.mu, entry)
        if ival > 0:
            best = max(best, ival / (norm * geo.class_length(Y, entry)))
    if best == 0.0:
        raise DegeneratePanelError("panel misses the lamination at Y")
    return math.log(best)


# -- convergence detection ------------------------------------------------------------


def normalized_length_vector(X: geo.FNPoint, base_point: geo.FNPoint,
                             panel: Panel) -> tuple[float, ...]:
    """Lengths at X divided by the maximal ratio against the base point.

    This is the quantity whose convergence characterizes convergence in the
    compactification: toward an interior point it tends to that point's
    lengths, toward a projective lamination it tends to a multiple of the
    intersection-number vector.
    """
    lengths = _length_vector(X, panel)
    base = _length_vector(base_point, panel)
    sup = max(l / b for l, b in zip(lengths, base))
    return tuple(l / sup for l in lengths)


@dataclass(frozen=True)
class LimitReport:
    kind: str  # "interior" | "boundary" | "none"
    panel_complexity: int
    point: geo.FNPoint | None = None
    projective_vector: tuple | None = None


def detect_limit(points, panel: Panel, tolerance: float = 1e-6,
                 base_point: geo.FNPoint | None = None) -> LimitReport:
    """Classify the limit of a sequence from its normalized length vectors.

    Interior limits are recognized by the Fenchel-Nielsen coordinates
    settling; boundary limits by the normalized vectors settling while the
    coordinates diverge.  Reports the panel complexity used (a too-small
    panel can misread a boundary limit on surfaces where the panel is not
    complete).
    """
    pts = list(points)
    if len(pts) < 2:
        raise DomainError("need at least two points to detect a limit")
    base = base_point or pts[0]
    vecs = [normalized_length_vector(X, base, panel) for X in pts]
    vec_step = max(abs(a - b) for a, b in zip(vecs[-1], vecs[-2]))
    if vec_step > tolerance:
        return LimitReport("none", panel.complexity)

    def coords(X):
        out = [v for _, v in X.boundary]
        for _, (length, twist) in X.interior:
            out.extend((length, twist))
        return out

    coord_step = max(abs(a - b) for a, b in zip(coords(pts[-1]), coords(pts[-2])))
    if coord_step <= tolerance * max(1.0, max(map(abs, coords(pts[-1])))):
        return LimitReport("interior", panel.complexity, point=pts[-1])
    top = max(vecs[-1])
    return LimitReport("boundary", panel.complexity,
                       projective_vector=tuple(v / top for v in vecs[-1]))
