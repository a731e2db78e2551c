"""Surface signatures, pants decompositions, curve/arc classes, panels.

Surfaces are bordered (at least one boundary component) except for the
closed doubles produced by `double_topology`.  Every surface gets a
deterministic canonical pants decomposition.  Two surfaces are "tier 1"
(the pair of pants S_{0,0,3} and the one-holed torus S_{1,0,1}): these carry
holonomy markings, so their panels extend beyond decomposition data to
registered word classes.

Labels: interior decomposition curves "C1", "C2", ...; boundary components
"B1", ...; punctures "U1", ...; mirrored curves on a double get an "m"
suffix.  Pair-of-pants arc aliases "a11" ... "a23" index the boundary pair
the arc joins.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .errors import DomainError, UnsupportedSurfaceError


@dataclass(frozen=True)
class SurfaceSignature:
    genus: int
    punctures: int
    boundary: int

    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus - self.punctures - self.boundary

    def __str__(self):
        return f"S_{self.genus},{self.punctures},{self.boundary}"


@dataclass(frozen=True)
class Pants:
    pants_id: str
    sides: tuple[str, str, str]


@dataclass(frozen=True)
class CurveClass:
    """Essential simple closed curve: boundary, decomposition, or word class.

    Word classes exist on tier-1 surfaces only; on the one-holed torus the
    slope (p, q) records the homology class relative to the decomposition
    curve (1, 0) and its dual (0, 1).
    """

    kind: str  # "boundary" | "interior" | "word"
    label: str
    slope: tuple[int, int] | None = None

    def __str__(self):
        return self.label


@dataclass(frozen=True)
class ArcClass:
    """Essential arc, pants-local: both endpoints on boundary components.

    pattern is ("same", beta, gamma1, gamma2) for an arc from boundary beta
    back to itself separating the other two sides, or
    ("distinct", beta1, beta2, gamma) for an arc joining two boundaries.
    On the one-holed torus, `twist` = k registers the image of the base arc
    under k Dehn twists along the dual curve; its host pants is then bounded
    by two copies of the slope-(1, k) curve.
    """

    pants_id: str
    pattern: tuple
    twist: int = 0

    @property
    def label(self) -> str:
        kind = self.pattern[0]
        if kind == "same":
            body = f"a({self.pattern[1]};{self.pattern[2]},{self.pattern[3]})"
        else:
            body = f"a({self.pattern[1]},{self.pattern[2]};{self.pattern[3]})"
        return body if self.twist == 0 else f"{body}~{self.twist}"

    def endpoints(self) -> tuple[str, str]:
        if self.pattern[0] == "same":
            return (self.pattern[1], self.pattern[1])
        return (self.pattern[1], self.pattern[2])

    def __str__(self):
        return self.label


@dataclass(frozen=True)
class Surface:
    signature: SurfaceSignature
    pants: tuple[Pants, ...]
    interior_curves: tuple[str, ...]
    boundaries: tuple[str, ...]
    punctures: tuple[str, ...]
    tier1: bool
    double_of: SurfaceSignature | None = None

    # -- class constructors --------------------------------------------------

    def boundary_classes(self) -> list[CurveClass]:
        return [CurveClass("boundary", b) for b in self.boundaries]

    def interior_classes(self) -> list[CurveClass]:
        return [CurveClass("interior", c) for c in self.interior_curves]

    def curve_class(self, label: str) -> CurveClass:
        if label in self.boundaries:
            return CurveClass("boundary", label)
        if label in self.interior_curves:
            return CurveClass("interior", label)
        raise DomainError(f"unknown curve label {label!r} on {self.signature}")

    def pants_arcs(self) -> list[ArcClass]:
        """All pants-local arc classes, in deterministic order."""
        arcs = []
        seen = set()
        for pants in self.pants:
            s = pants.sides
            for i in range(3):
                j, k = (i + 1) % 3, (i + 2) % 3
                if s[i] in self.boundaries:
                    g1, g2 = sorted((s[j], s[k]))
                    arc = ArcClass(pants.pants_id, ("same", s[i], g1, g2))
                    if arc.label not in seen:
                        seen.add(arc.label)
                        arcs.append(arc)
            for i in range(3):
                for j in range(i + 1, 3):
                    k = 3 - i - j
                    if (s[i] in self.boundaries and s[j] in self.boundaries
                            and s[i] != s[j]):
                        b1, b2 = sorted((s[i], s[j]))
                        arc = ArcClass(pants.pants_id, ("distinct", b1, b2, s[k]))
                        if arc.label not in seen:
                            seen.add(arc.label)
                            arcs.append(arc)
        arcs.sort(key=lambda a: (a.pattern[0] != "same", a.label))
        return arcs

    def is_torus(self) -> bool:
        return self.signature == SurfaceSignature(1, 0, 1)

    def is_pants(self) -> bool:
        return self.signature == SurfaceSignature(0, 0, 3)

    def word_curves_at(self, word_length: int) -> list[CurveClass]:
        """Registered word curves of exactly the given word length (tier 1)."""
        if not (self.tier1 and self.is_torus()) or word_length < 1:
            return []
        out = []
        for q in range(1, word_length + 1):
            p = word_length - q
            if math.gcd(p, q) != 1:
                continue
            out.append(CurveClass("word", f"w({p},{q})", (p, q)))
            if p > 0:
                out.append(CurveClass("word", f"w({-p},{q})", (-p, q)))
        return out

    def word_curves(self, max_word_length: int) -> list[CurveClass]:
        return [c for n in range(1, max_word_length + 1)
                for c in self.word_curves_at(n)]

    def word_arcs_at(self, word_length: int) -> list[ArcClass]:
        """Twisted torus arcs whose host curve has the given word length."""
        if not (self.tier1 and self.is_torus()) or word_length < 2:
            return []
        base = self.pants_arcs()[0]
        k = word_length - 1
        return [ArcClass(base.pants_id, base.pattern, twist=k),
                ArcClass(base.pants_id, base.pattern, twist=-k)]

    def word_arcs(self, max_word_length: int) -> list[ArcClass]:
        return [a for n in range(1, max_word_length + 1)
                for a in self.word_arcs_at(n)]

    def arc_alias(self, name: str) -> ArcClass:
        """Resolve short pants aliases a11..a33, a12, a13, a23 and full labels."""
        arcs = {a.label: a for a in self.pants_arcs()}
        if name in arcs:
            return arcs[name]
        if self.is_pants() and len(name) == 3 and name[0] == "a":
            j, k = name[1], name[2]
            if j == k:
                others = sorted(b for b in self.boundaries if b != f"B{j}")
                label = f"a(B{j};{others[0]},{others[1]})"
            else:
                g = ({"1", "2", "3"} - {j, k}).pop()
                label = f"a(B{min(j,k)},B{max(j,k)};B{g})"
            if label in arcs:
                return arcs[label]
        raise DomainError(f"unknown arc {name!r} on {self.signature}")


def build_surface(genus: int, punctures: int, boundary: int) -> Surface:
    """Signature checks plus a deterministic canonical pants decomposition."""
    sig = SurfaceSignature(genus, punctures, boundary)
    if genus < 0 or punctures < 0 or boundary < 1:
        raise UnsupportedSurfaceError(
            f"{sig} is not a bordered surface (need g,n >= 0 and p >= 1)")
    if sig.euler_characteristic() >= 0:
        raise UnsupportedSurfaceError(
            f"{sig} has Euler characteristic {sig.euler_characteristic()} >= 0")

    boundaries = tuple(f"B{i + 1}" for i in range(boundary))
    puncture_labels = tuple(f"U{i + 1}" for i in range(punctures))
    pants_list: list[Pants] = []
    curves: list[str] = []

    def new_curve() -> str:
        curves.append(f"C{len(curves) + 1}")
        return curves[-1]

    def new_pants(sides):
        pants_list.append(Pants(f"P{len(pants_list) + 1}", tuple(sides)))

    def decompose(g, ends):
        if g == 0:
            if len(ends) == 3:
                new_pants(ends)
                return
            c = new_curve()
            new_pants((ends[0], ends[1], c))
            decompose(0, [c] + list(ends[2:]))
            return
        if len(ends) >= 2:
            c = new_curve()
            new_pants((ends[0], ends[1], c))
            decompose(g, [c] + list(ends[2:]))
            return
        if g == 1:
            h = new_curve()
            new_pants((ends[0], h, h))
            return
        a, b = new_curve(), new_curve()
        c = new_curve()
        new_pants((ends[0], a, b))
        new_pants((a, b, c))
        decompose(g - 1, [c])

    decompose(genus, list(boundaries) + list(puncture_labels))

    expected_pants = 2 * genus - 2 + punctures + boundary
    expected_curves = 3 * genus - 3 + punctures + boundary
    assert len(pants_list) == expected_pants, "pants count mismatch"
    assert len(curves) == expected_curves, "interior curve count mismatch"

    tier1 = sig in (SurfaceSignature(0, 0, 3), SurfaceSignature(1, 0, 1))
    return Surface(sig, tuple(pants_list), tuple(curves), boundaries,
                   puncture_labels, tier1)


def double_topology(surface: Surface) -> Surface:
    """Closed double: genus 2g+p-1, 2n punctures, symmetric decomposition.

    Decomposition curves of the double are the original interior curves, the
    former boundary curves, and the mirrored interior curves ("m" suffix);
    every pants reappears twice, once mirrored.
    """
    sig = surface.signature
    dsig = SurfaceSignature(2 * sig.genus + sig.boundary - 1,
                            2 * sig.punctures, 0)

    def mirror_side(s: str) -> str:
        if s in surface.boundaries:
            return s
        if s in surface.interior_curves:
            return s + "m"
        return s + "m"  # punctures double to two punctures

    pants = list(surface.pants)
    for p in surface.pants:
        pants.append(Pants(p.pants_id + "m", tuple(mirror_side(s) for s in p.sides)))
    curves = (tuple(surface.interior_curves) + tuple(surface.boundaries)
              + tuple(c + "m" for c in surface.interior_curves))
    punctures = tuple(surface.punctures) + tuple(u + "m" for u in surface.punctures)
    return Surface(dsig, tuple(pants), curves, (), punctures,
                   surface.tier1, double_of=sig)


def mirror_label(surface: Surface, label: str) -> str:
    """The mirror involution on decomposition-curve labels of a double."""
    if surface.double_of is None:
        raise DomainError("mirror map is defined on doubles only")
    if label.endswith("m"):
        return label[:-1]
    if label + "m" in surface.interior_curves:
        return label + "m"
    return label  # former boundary curves are fixed


@dataclass(frozen=True)
class Panel:
    """Finite ordered family of curve/arc classes truncating the suprema."""

    surface: Surface
    complexity: int
    entries: tuple

    def labels(self) -> list[str]:
        return [str(e) for e in self.entries]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def enumerate_panel(surface: Surface, complexity: int = 0) -> Panel:
    """Deterministic panel, monotone in complexity.

    Level 0 holds the boundary classes, the decomposition curves, and all
    pants-local arcs; higher levels append registered word classes (tier-1
    surfaces only).
    """
    if complexity < 0:
        raise DomainError("panel complexity must be >= 0")
    entries: list = []
    entries.extend(surface.boundary_classes())
    entries.extend(surface.interior_classes())
    entries.extend(surface.pants_arcs())
    for n in range(1, complexity + 1):  # level order makes panels nested
        entries.extend(surface.word_curves_at(n))
        entries.extend(surface.word_arcs_at(n))
    return Panel(surface, complexity, tuple(entries))


# -- JSON schema ---------------------------------------------------------------


def surface_to_dict(surface: Surface) -> dict:
    return {
        "signature": {"genus": surface.signature.genus,
                      "punctures": surface.signature.punctures,
                      "boundary": surface.signature.boundary},
        "interior_curves": list(surface.interior_curves),
        "boundaries": list(surface.boundaries),
        "punctures": list(surface.punctures),
        "pants": [{"id": p.pants_id, "sides": list(p.sides)} for p in surface.pants],
        "tier1": surface.tier1,
        "double_of": None if surface.double_of is None else
            [surface.double_of.genus, surface.double_of.punctures,
             surface.double_of.boundary],
    }


def panel_to_dict(panel: Panel) -> dict:
    return {
        "surface": surface_to_dict(panel.surface),
        "complexity": panel.complexity,
        "entries": [{"kind": "arc" if isinstance(e, ArcClass) else e.kind,
                     "id": str(e)} for e in panel.entries],
    }


def surface_to_json(surface: Surface, **kw) -> str:
    return json.dumps(surface_to_dict(surface), **kw)


def panel_to_json(panel: Panel, **kw) -> str:
    return json.dumps(panel_to_dict(panel), **kw)
