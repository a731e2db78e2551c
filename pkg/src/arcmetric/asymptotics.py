"""Scaling paths and the asymptotic experiments they drive.

A path is prescribed coordinate-wise from a driving lamination mu: curves
crossed by mu grow exponentially (length e^t * i(mu, C), exact by
construction), leaves of mu decay super-exponentially along the standard
envelope 3|chi| / sinh(e^t w / 2), and curves with neither interaction hold
their initial length.  Twists are held constant.  This reproduces exactly
the boundary-length asymptotics the pants-local case analysis consumes;
targets crossing several pants would be exploratory and are not registered.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import geometry as geo
from . import hyptrig as ht
from . import lamination as lam
from . import metric as met
from .errors import (DegeneratePanelError, DomainError, InvalidSpecError,
                     NoWitnessError, UnsupportedClassError)
from .topology import Panel, enumerate_panel

DEFAULT_GRID = tuple(0.5 * k for k in range(21))  # 0.0, 0.5, ..., 10.0
_LENGTH_FLOOR = 1e-300  # decay regime under double precision


def default_grid() -> tuple[float, ...]:
    return DEFAULT_GRID


def abs_double_chi(surface) -> int:
    """|Euler characteristic of the double| = 2 |chi(S)|."""
    return 2 * abs(surface.signature.euler_characteristic())


@dataclass(frozen=True)
class PathSpec:
    """Coordinate-wise scaling path driven by a lamination.

    regimes maps every coordinate curve label to ("grow", rate),
    ("decay", leaf_weight) or ("hold", initial_length).
    """

    mu: lam.RationalLamination
    base_point: geo.FNPoint
    grid: tuple
    regimes: tuple  # ((label, (kind, parameter)), ...)

    def regime_dict(self) -> dict:
        return dict(self.regimes)


def make_path_spec(mu: lam.RationalLamination, base_point: geo.FNPoint,
                   grid=DEFAULT_GRID) -> PathSpec:
    """Classify each coordinate curve from the lamination data."""
    surface = mu.surface
    if base_point.surface != surface:
        raise InvalidSpecError("base point and lamination disagree on surface")
    grid = tuple(float(t) for t in grid)
    if len(grid) < 1 or any(t < 0 for t in grid) \
            or any(b <= a for a, b in zip(grid, grid[1:])):
        raise InvalidSpecError("grid must be strictly increasing with t >= 0")
    regimes = []
    for label in list(surface.boundaries) + list(surface.interior_curves):
        cls = surface.curve_class(label)
        ival = lam.intersection_number(mu, cls)
        weight = mu.weight_of(cls)
        if ival > 0:
            regimes.append((label, ("grow", ival)))
        elif weight > 0:
            regimes.append((label, ("decay", weight)))
        else:
            regimes.append((label, ("hold", base_point.length_of(label))))
    return PathSpec(mu, base_point, grid, tuple(regimes))


def validate_path_spec(spec: PathSpec) -> None:
    """Check the regime of every curve against the driving lamination."""
    surface = spec.mu.surface
    labels = set(surface.boundaries) | set(surface.interior_curves)
    reg = spec.regime_dict()
    if set(reg) != labels:
        raise InvalidSpecError("regimes must cover every coordinate curve once")
    for label, (kind, param) in reg.items():
        cls = surface.curve_class(label)
        ival = lam.intersection_number(spec.mu, cls)
        weight = spec.mu.weight_of(cls)
        if kind == "grow" and not (ival > 0 and abs(param - ival) < 1e-12):
            raise InvalidSpecError(f"{label}: grow regime needs i(mu, C) > 0")
        if kind == "decay" and not (ival == 0 and weight > 0
                                    and abs(param - weight) < 1e-12):
            raise InvalidSpecError(f"{label}: decay regime needs a leaf weight")
        if kind == "hold" and not (ival == 0 and weight == 0):
            raise InvalidSpecError(f"{label}: hold regime needs i = 0 and w = 0")


def scaling_path(spec: PathSpec, t: float) -> geo.FNPoint:
    """The point at parameter t; deterministic, twists from the base point."""
    if not (math.isfinite(t) and t >= 0):
        raise DomainError("path parameter must be >= 0")
    validate_path_spec(spec)
    surface = spec.mu.surface
    chi = abs_double_chi(surface)

    def coord_length(label):
        kind, param = spec.regime_dict()[label]
        if kind == "grow":
            return math.exp(t) * param
        if kind == "decay":
            return max(ht.leaf_decay_bound(param, t, chi), _LENGTH_FLOOR)
        return param

    boundary = {label: coord_length(label) for label in surface.boundaries}
    interior = {label: (coord_length(label), spec.base_point.twist_of(label))
                for label in surface.interior_curves}
    return geo.fn_point(surface, interior, boundary)


# -- experiments -----------------------------------------------------------------


@dataclass(frozen=True)
class DeviationReport:
    """Per-target envelope of l(X_t) - e^t i(mu, target) over the grid."""

    target: str
    i_mu: float
    max_lower_deviation: float   # max of e^t i - l  (lower-bound slack)
    max_upper_deviation: float   # max of l - e^t i  (upper-bound slack)
    flagged: bool


def verify_key_inequality(spec: PathSpec, targets, grid=None, cap=50.0):
    """Sandwich check: e^t i(mu, a) - C <= l_a(X_t) <= e^t i(mu, a) + C_a.

    Returns (reports, skipped); a target is flagged when either deviation
    envelope exceeds the cap.  Unsupported targets are skipped with notice,
    never silently dropped.
    """
    grid = tuple(grid) if grid is not None else spec.grid
    reports, skipped = [], []
    for target in targets:
        ival = lam.intersection_number(spec.mu, target)
        lower, upper = -math.inf, -math.inf
        try:
            for t in grid:
                X = scaling_path(spec, t)
                length = geo.class_length(X, target)
                growth = math.exp(t) * ival
                lower = max(lower, growth - length)
                upper = max(upper, length - growth)
        except UnsupportedClassError as exc:
            skipped.append((str(target), str(exc)))
            continue
        reports.append(DeviationReport(str(target), ival, lower, upper,
                                       flagged=max(lower, upper) > cap))
    return reports, skipped


def boundary_convergence(spec: PathSpec, panel: Panel, grid=None):
    """Projective sup-norm distance between the length vector of X_t and the
    normalized intersection vector of the driving lamination."""
    grid = tuple(grid) if grid is not None else spec.grid
    ivec = [lam.intersection_number(spec.mu, entry) for entry in panel]
    top = max(ivec)
    if top == 0:
        raise DegeneratePanelError("panel misses the driving lamination")
    target = [v / top for v in ivec]
    out = []
    for t in grid:
        vec = met.thurston_vector(scaling_path(spec, t), panel)
        out.append((t, max(abs(a - b) for a, b in zip(vec, target))))
    return out


def horo_convergence(spec: PathSpec, base_point: geo.FNPoint, probes,
                     panel: Panel, grid=None):
    """Max over probe points of |Phi_{X_t} - Phi_mu| along the path."""
    grid = tuple(grid) if grid is not None else spec.grid
    h_mu = met.boundary_horofunction(spec.mu, base_point, panel)
    mu_values = [met.horofunction_eval(h_mu, Y) for Y in probes]
    out = []
    for t in grid:
        X = scaling_path(spec, t)
        h_t = met.interior_horofunction(X, base_point, panel)
        dev = max(abs(met.horofunction_eval(h_t, Y) - v)
                  for Y, v in zip(probes, mu_values))
        out.append((t, dev))
    return out


# -- separation ---------------------------------------------------------------------


@dataclass(frozen=True)
class SeparationWitness:
    point: geo.FNPoint
    lhs: float   # log sup i(nu, .)/l(., Y)
    rhs: float   # log sup i(mu, .)/l(., Y)
    epsilon: float
    t: float


def _log_sup_intersection_ratio(mu, Y, panel) -> float:
    best = 0.0
    for entry in panel:
        ival = lam.intersection_number(mu, entry)
        if ival > 0:
            length = geo.class_length(Y, entry)
            # a class crushed below double precision gives an effectively
            # infinite ratio; keep the comparison meaningful
            best = math.inf if length <= 0.0 else max(best, ival / length)
    if best == 0.0:
        raise DegeneratePanelError("panel misses the lamination")
    return math.log(best) if math.isfinite(best) else math.inf


def separation_experiment(mu: lam.RationalLamination,
                          nu: lam.RationalLamination,
                          X0: geo.FNPoint,
                          panel: Panel | None = None,
                          epsilons=(0.5, 0.25, 0.125, 0.0625),
                          grid=DEFAULT_GRID,
                          min_gap: float = 1e-3) -> SeparationWitness:
    """Find Y separating two normalized laminations by their horofunctions.

    Scans scaling paths driven by the blended refinements
    (1 - eps) mu + (eps / L) zeta over the epsilon and t grids; a returned
    witness is always re-verified by direct evaluation of both suprema.
    """
    surface = mu.surface
    if panel is None:
        panel = enumerate_panel(surface, 3 if surface.is_torus() else 0)
    for name, m in (("mu", mu), ("nu", nu)):
        if abs(geo.lamination_length(X0, m) - 1.0) > 1e-6:
            raise DomainError(f"{name} must be normalized at the base point")
    same = (len(mu.components) == len(nu.components) and all(
        cm == cn and abs(wm - wn) <= 1e-12
        for (cm, wm), (cn, wn) in zip(mu.components, nu.components)))
    if same:
        raise DomainError("laminations must be distinct")

    mu_hat, zeta = lam.refine(mu)
    attempts = []
    for eps in epsilons:
        if zeta.is_zero():
            blend = mu
        else:
            L = geo.lamination_length(X0, zeta)
            blend = mu.scaled(1.0 - eps) + zeta.scaled(eps / L)
        spec = make_path_spec(blend, X0, grid)
        for t in grid:
            Y = scaling_path(spec, t)
            try:
                lhs = _log_sup_intersection_ratio(nu, Y, panel)
                rhs = _log_sup_intersection_ratio(mu, Y, panel)
            except DegeneratePanelError:
                continue
            if lhs - rhs >= min_gap:
                # independent re-verification before certifying
                lhs2 = _log_sup_intersection_ratio(nu, Y, panel)
                rhs2 = _log_sup_intersection_ratio(mu, Y, panel)
                if lhs2 - rhs2 >= min_gap:
                    return SeparationWitness(Y, lhs2, rhs2, eps, t)
            attempts.append((eps, t))
        if zeta.is_zero():
            break  # epsilon does not enter without a refinement part
    raise NoWitnessError(
        f"no separating point found over {len(attempts)} grid points",
        attempts=attempts)
