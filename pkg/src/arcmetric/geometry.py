"""Fenchel-Nielsen points, the doubling embedding, and geodesic lengths.

Lengths of decomposition and boundary curves are Fenchel-Nielsen coordinates
and exact; pants-local arcs go through the closed-form pants formulas; word
classes on tier-1 surfaces and their doubles go through explicit holonomy
matrices (trace-length relation l = 2 arccosh(|tr|/2)).

Twists are hyperbolic lengths, positive = right twist; the mirror side of a
double carries negated twists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import holonomy as ho
from . import hyptrig as ht
from .errors import DomainError, UnsupportedClassError, UnsupportedSurfaceError
from .topology import (ArcClass, CurveClass, Surface, SurfaceSignature,
                       build_surface, double_topology)

_PANTS_SIG = SurfaceSignature(0, 0, 3)
_TORUS_SIG = SurfaceSignature(1, 0, 1)


@dataclass(frozen=True)
class FNPoint:
    """Marked hyperbolic structure in Fenchel-Nielsen coordinates.

    interior maps each decomposition curve to (length, twist); boundary maps
    each boundary label to its length.  Stored as sorted tuples so points
    are hashable (holonomy realizations are cached per point).
    """

    surface: Surface
    interior: tuple
    boundary: tuple

    def interior_dict(self) -> dict:
        return dict(self.interior)

    def boundary_dict(self) -> dict:
        return dict(self.boundary)

    def length_of(self, label: str) -> float:
        for lab, v in self.boundary:
            if lab == label:
                return v
        for lab, (length, _) in self.interior:
            if lab == label:
                return length
        raise DomainError(f"no coordinate curve {label!r} on {self.surface.signature}")

    def twist_of(self, label: str) -> float:
        for lab, (_, twist) in self.interior:
            if lab == label:
                return twist
        raise DomainError(f"no interior curve {label!r}")


def fn_point(surface: Surface, interior: dict | None = None,
             boundary: dict | None = None) -> FNPoint:
    interior = dict(interior or {})
    boundary = dict(boundary or {})
    if set(interior) != set(surface.interior_curves):
        raise DomainError(
            f"interior coordinates must cover {surface.interior_curves}")
    if set(boundary) != set(surface.boundaries):
        raise DomainError(f"boundary coordinates must cover {surface.boundaries}")
    int_items = []
    for label in sorted(interior):
        v = interior[label]
        length, twist = (v if isinstance(v, tuple) else (v, 0.0))
        if not (math.isfinite(length) and length > 0):
            raise DomainError(f"length of {label} must be positive and finite")
        if not math.isfinite(twist):
            raise DomainError(f"twist of {label} must be finite")
        int_items.append((label, (float(length), float(twist))))
    bdy_items = []
    for label in sorted(boundary):
        v = float(boundary[label])
        if not (math.isfinite(v) and v > 0):
            raise DomainError(f"length of {label} must be positive and finite")
        bdy_items.append((label, v))
    return FNPoint(surface, tuple(int_items), tuple(bdy_items))


@lru_cache(maxsize=8)
def _cached_surface(g, n, p) -> Surface:
    return build_surface(g, n, p)


def pants_surface() -> Surface:
    return _cached_surface(0, 0, 3)


def torus_surface() -> Surface:
    return _cached_surface(1, 0, 1)


def pants_point(l1: float, l2: float, l3: float) -> FNPoint:
    return fn_point(pants_surface(), {}, {"B1": l1, "B2": l2, "B3": l3})


def torus_point(l_curve: float, twist: float, l_boundary: float) -> FNPoint:
    return fn_point(torus_surface(), {"C1": (l_curve, twist)},
                    {"B1": l_boundary})


def double_point(X: FNPoint) -> FNPoint:
    """The doubled structure: mirror twists negated, boundary twists zero."""
    if X.surface.double_of is not None:
        raise DomainError("point is already on a double")
    dsurf = double_topology(X.surface)
    interior = {}
    for label, (length, twist) in X.interior:
        interior[label] = (length, twist)
        interior[label + "m"] = (length, -twist)
    for label, length in X.boundary:
        interior[label] = (length, 0.0)
    return fn_point(dsurf, interior, {})


# -- holonomy -----------------------------------------------------------------


class Holonomy:
    """Named holonomy generators plus the registered word table.

    Generator matrices have |det| = 1; mirror gluing generators have
    determinant -1 and occur an even number of times in any closed word.
    """

    def __init__(self, surface: Surface, gens: ho.GeneratorSet,
                 words: dict, boundary_lengths: dict):
        self.surface = surface
        self.gens = gens
        self.words = dict(words)
        self._boundary_lengths = dict(boundary_lengths)

    def word_for(self, label: str):
        if label not in self.words:
            raise UnsupportedClassError(
                f"no registered word for {label!r} on {self.surface.signature}")
        return self.words[label]

    def word_length(self, label: str) -> float:
        return self.gens.word_length(self.word_for(label))

    def matrix(self, label: str) -> np.ndarray:
        return self.gens.matrix(self.word_for(label))

    def generator_trace_errors(self) -> dict:
        """|trace| vs 2cosh(l/2) for every coordinate curve with a word."""
        out = {}
        for label, length in self._boundary_lengths.items():
            if label in self.words:
                tr = abs(float(np.trace(self.matrix(label))))
                out[label] = abs(tr - 2.0 * math.cosh(length / 2.0))
        return out

    def relator_residuals(self) -> list[float]:
        """Deviation of the defining relators from +-identity."""
        res = []
        for word in self.words.get("_relators", []):
            M = self.gens.matrix(word)
            res.append(min(float(np.abs(M - np.eye(2)).max()),
                           float(np.abs(M + np.eye(2)).max())))
        return res


def _slope_word(p: int, q: int) -> list:
    """Registered word of the simple closed curve of slope (p, q), gcd 1."""
    if q < 0:
        p, q = -p, -q
    flip = p < 0
    p = abs(p)
    if math.gcd(p, q) != 1:
        raise UnsupportedClassError(f"slope ({p},{q}) is not primitive")

    def rec(p, q):
        if (p, q) == (1, 0):
            return [("a", 1)]
        if (p, q) == (0, 1):
            return [("b", 1)]
        if p >= q:
            inner = rec(p - q, q)
            sub = {"b": [("a", 1), ("b", 1)]}
        else:
            inner = rec(p, q - p)
            sub = {"a": [("a", 1), ("b", 1)]}
        out = []
        for name, exp in inner:
            out.extend(sub.get(name, [(name, exp)]))
        return out

    word = rec(p, q)
    if flip:
        word = [(n, -e if n == "a" else e) for n, e in word]
    return word


def _build_holonomy(X: FNPoint) -> Holonomy:
    surf = X.surface
    sig = surf.signature
    if surf.double_of is None:
        if sig == _PANTS_SIG:
            b = X.boundary_dict()
            pants = ho.build_pants(b["B1"], b["B2"], b["B3"])
            gens = ho.GeneratorSet({"x1": pants.cuff_matrices[0],
                                    "x2": pants.cuff_matrices[1],
                                    "x3": pants.cuff_matrices[2]})
            words = {"B1": [("x1", 1)], "B2": [("x2", 1)], "B3": [("x3", 1)],
                     "_relators": [[("x1", 1), ("x2", 1), ("x3", 1)]]}
            lengths = {lab: X.length_of(lab) for lab in surf.boundaries}
            return Holonomy(surf, gens, words, lengths)
        if sig == _TORUS_SIG:
            lC, tau = X.interior_dict()["C1"]
            lB = X.boundary_dict()["B1"]
            gens = ho.torus_holonomy(lC, tau, lB)
            words = {"C1": [("a", 1)],
                     "B1": [("b", -1), ("a", 1), ("b", 1), ("a", -1)],
                     "_relators": [[("a", 1), ("b", -1), ("a", -1), ("b", 1),
                                    ("x3", 1)]]}
            return Holonomy(surf, gens, words, {"C1": lC, "B1": lB})
        raise UnsupportedSurfaceError(
            f"no registered holonomy marking for {sig}")

    base = surf.double_of
    coords = X.interior_dict()
    if base == _PANTS_SIG:
        lengths = tuple(coords[f"B{j}"][0] for j in (1, 2, 3))
        twists = tuple(coords[f"B{j}"][1] for j in (1, 2, 3))
        gens = ho.pants_double_holonomy(lengths, twists)
        words = {"B1": [("x1", 1)], "B2": [("x2", 1)], "B3": [("x3", 1)]}
        # doubled seam arcs and doubled same-boundary arcs
        words["a12^d"] = [("h2", 1), ("h1", -1)]
        words["a13^d"] = [("h3", 1), ("h1", -1)]
        words["a23^d"] = [("h3", 1), ("h2", -1)]
        words["a11^d"] = [("h1", 1), ("x2", 1), ("h1", -1), ("x2", -1)]
        words["a22^d"] = [("h2", 1), ("x3", 1), ("h2", -1), ("x3", -1)]
        words["a33^d"] = [("h3", 1), ("x1", 1), ("h3", -1), ("x1", -1)]
        # each gluing map preserves its cuff axis, so it commutes with the
        # cuff holonomy; these are the edge relations of the assembly
        words["_relators"] = [
            [("h1", 1), ("x1", 1), ("h1", -1), ("x1", -1)],
            [("h2", 1), ("x2", 1), ("h2", -1), ("x2", -1)],
            [("h3", 1), ("x3", 1), ("h3", -1), ("x3", -1)],
        ]
        blen = {f"B{j}": lengths[j - 1] for j in (1, 2, 3)}
        return Holonomy(surf, gens, words, blen)
    if base == _TORUS_SIG:
        lC, tC = coords["C1"]
        lB, tB = coords["B1"]
        lCm, tCm = coords["C1m"]
        gens = ho.torus_double_holonomy(lC, tC, lB, tB, lCm, tCm)
        words = {"C1": [("a", 1)],
                 "C1m": [("am", 1)],
                 "B1": [("b", -1), ("a", 1), ("b", 1), ("a", -1)],
                 "w(0,1)": [("b", 1)],
                 "w(0,1)m": [("bm", 1)],
                 "a(B1;C1,C1)^d": [("h3", 1), ("a", 1), ("h3", -1), ("a", -1)],
                 "_relators": [
                     [("a", 1), ("b", -1), ("a", -1), ("b", 1), ("x3", 1)],
                     [("h3", 1), ("x3", 1), ("h3", -1), ("x3", -1)],
                 ]}
        return Holonomy(surf, gens, words, {"C1": lC, "B1": lB, "C1m": lCm})
    raise UnsupportedSurfaceError(f"no registered marking for double of {base}")


@lru_cache(maxsize=256)
def holonomy_build(X: FNPoint) -> Holonomy:
    """Explicit holonomy for a tier-1 surface or tier-1 double."""
    return _build_holonomy(X)


# -- length evaluation ----------------------------------------------------------


def _side_length(X: FNPoint, label: str) -> float:
    """Length of a pants side: coordinate curve, or 0 for a puncture."""
    if label in X.surface.punctures:
        return 0.0
    return X.length_of(label)


def curve_length(X: FNPoint, curve: CurveClass) -> float:
    """Geodesic length of a curve class at X."""
    if curve.kind in ("boundary", "interior"):
        return X.length_of(curve.label)
    if curve.kind == "word":
        if X.surface.signature == _TORUS_SIG and curve.slope is not None:
            hol = holonomy_build(X)
            return hol.gens.word_length(_slope_word(*curve.slope))
        if X.surface.double_of is not None:
            return holonomy_build(X).word_length(curve.label)
        raise UnsupportedClassError(
            f"word class {curve.label!r} unsupported on {X.surface.signature}")
    raise UnsupportedClassError(f"unknown curve kind {curve.kind!r}")


def _torus_host_curve_length(X: FNPoint, twist: int) -> float:
    if twist == 0:
        return X.length_of("C1")
    return curve_length(X, CurveClass("word", f"w(1,{twist})", (1, twist)))


def arc_length(X: FNPoint, arc: ArcClass) -> float:
    """Length of the orthogeodesic arc at X, via the pants formulas.

    The formulas take the host pants' side lengths; on the one-holed torus a
    twisted arc's host pants is bounded by the slope-(1, k) curve, so the
    host length itself comes from holonomy.
    """
    if X.surface.double_of is not None:
        raise DomainError("arcs live on bordered surfaces, not doubles")
    pattern = arc.pattern
    if arc.twist != 0:
        if X.surface.signature != _TORUS_SIG:
            raise UnsupportedClassError("twisted arcs are registered on the "
                                        "one-holed torus only")
        host = _torus_host_curve_length(X, arc.twist)
        return ht.arc_length_same_boundary(X.length_of("B1"), host, host)
    if pattern[0] == "same":
        lb = _side_length(X, pattern[1])
        return ht.arc_length_same_boundary(lb, _side_length(X, pattern[2]),
                                           _side_length(X, pattern[3]))
    lb1 = _side_length(X, pattern[1])
    lb2 = _side_length(X, pattern[2])
    return ht.arc_length_distinct_boundaries(lb1, lb2, _side_length(X, pattern[3]))


def arc_length_doubled_route(X: FNPoint, arc: ArcClass) -> float:
    """Arc length as half the doubled closed curve's length on X^d.

    Exact for the symmetric doubles produced by double_point; agrees with
    the formula route to 1e-9 (tested invariant).
    """
    if arc.twist != 0:
        raise UnsupportedClassError("doubled route registered for base arcs only")
    Xd = double_point(X)
    hol = holonomy_build(Xd)
    if X.surface.signature == _PANTS_SIG:
        alias = _pants_arc_alias(arc)
        return 0.5 * hol.word_length(f"{alias}^d")
    if X.surface.signature == _TORUS_SIG:
        return 0.5 * hol.word_length("a(B1;C1,C1)^d")
    raise UnsupportedSurfaceError("doubled route is registered on tier-1 only")


def _pants_arc_alias(arc: ArcClass) -> str:
    pat = arc.pattern
    if pat[0] == "same":
        j = pat[1][1]
        return f"a{j}{j}"
    return f"a{pat[1][1]}{pat[2][1]}"


def class_length(X: FNPoint, cls) -> float:
    """Length of a CurveClass or ArcClass (panel-entry dispatch)."""
    if isinstance(cls, ArcClass):
        return arc_length(X, cls)
    return curve_length(X, cls)


def lamination_length(X: FNPoint, lamination) -> float:
    """Total weighted length; linear in the weights."""
    return sum(w * class_length(X, c) for c, w in lamination.components)


def fn_to_dict(X: FNPoint) -> dict:
    """JSON form: {curve-id: {"length":..., "twist":...}, boundary-id: length}."""
    out = {}
    for label, (length, twist) in X.interior:
        out[label] = {"length": length, "twist": twist}
    for label, length in X.boundary:
        out[label] = length
    return out


def fn_from_dict(surface: Surface, data: dict) -> FNPoint:
    interior, boundary = {}, {}
    for label, v in data.items():
        if isinstance(v, dict):
            interior[label] = (float(v["length"]), float(v.get("twist", 0.0)))
        else:
            boundary[label] = float(v)
    return fn_point(surface, interior, boundary)
