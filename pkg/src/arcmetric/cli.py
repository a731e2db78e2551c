"""Command-line front end.

Verbs: arc-length, curve-length, double, distance, horofn, and
experiment {inequality | boundary-limit | horo-converge | separate | dt-sphere}.
Exit codes: 0 success, 2 usage, 3 domain error, 4 unsupported class/surface.

Sweeps are written as CSV with a header row and fixed 9-significant-digit
decimals, so identical configs produce byte-identical files; summaries are
JSON with shortest round-trip floats.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import random
import sys

from . import asymptotics as asy
from . import geometry as geo
from . import lamination as lam
from . import metric as met
from .errors import (ArcmetricError, DomainError, InvalidSpecError,
                     NoWitnessError, UnsupportedClassError,
                     UnsupportedCoordinatesError, UnsupportedSurfaceError)
from .topology import build_surface, enumerate_panel, panel_to_dict


def _fmt(x: float) -> str:
    return f"{x:.9g}"


def _parse_triple(text: str):
    parts = [float(t) for t in text.split(",")]
    if len(parts) != 3:
        raise DomainError(f"expected three comma-separated values, got {text!r}")
    return parts


def _make_point(args, coords: str | None) -> geo.FNPoint:
    """Build a point from 'l1,l2,l3' (pants) or 'lC,tau,lB' (torus)."""
    if not coords:
        raise DomainError("missing Fenchel-Nielsen coordinates")
    if args.pants is not None:
        return geo.pants_point(*_parse_triple(coords))
    if args.torus is not None:
        l, tau, b = _parse_triple(coords)
        return geo.torus_point(l, tau, b)
    raise DomainError("select a surface with --pants or --torus")


def _point_from_args(args, which: str) -> geo.FNPoint:
    """The point named by flag `which`, or by the surface flag's own value."""
    coords = getattr(args, which, None)
    if coords is None and which == "point":
        coords = args.pants if args.pants else args.torus
    return _make_point(args, coords)


def _surface_from_args(args):
    if args.pants is not None:
        return geo.pants_surface()
    if args.torus is not None:
        return geo.torus_surface()
    raise DomainError("select a surface with --pants or --torus")


def _load_config(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise DomainError(
            f"config {path}: invalid JSON at line {exc.lineno} column "
            f"{exc.colno}: {exc.msg}") from exc
    except OSError as exc:
        raise DomainError(f"config {path}: {exc}") from exc


def _require(config: dict, field: str):
    if field not in config:
        raise DomainError(f"config is missing required field {field!r}")
    return config[field]


def _config_surface(config):
    g, n, p = _require(config, "surface")
    return build_surface(int(g), int(n), int(p))


def _config_grid(config) -> tuple:
    grid = config.get("grid")
    if grid is None:
        return asy.default_grid()
    if isinstance(grid, dict):
        start, stop = float(grid["start"]), float(grid["stop"])
        step = float(grid["step"])
        n = int(round((stop - start) / step))
        return tuple(start + k * step for k in range(n + 1))
    return tuple(float(t) for t in grid)


def _write_csv(path, header, rows):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(v) if isinstance(v, float) else v
                             for v in row])


def _emit(data, path=None):
    text = json.dumps(data, indent=2, sort_keys=True)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


# -- verbs ------------------------------------------------------------------------


def cmd_arc_length(args) -> int:
    X = _point_from_args(args, "point")
    arc = X.surface.arc_alias(args.arc)
    print(_fmt(geo.arc_length(X, arc)))
    return 0


def cmd_curve_length(args) -> int:
    X = _point_from_args(args, "point")
    cls = lam.class_from_id(X.surface, args.curve)
    print(_fmt(geo.class_length(X, cls)))
    return 0


def cmd_double(args) -> int:
    X = _point_from_args(args, "point")
    print(json.dumps(geo.fn_to_dict(geo.double_point(X)), sort_keys=True))
    return 0


def cmd_distance(args) -> int:
    X = _point_from_args(args, "x")
    Y = _point_from_args(args, "y")
    panel = enumerate_panel(X.surface, args.panel_n)
    d_xy = met.arc_metric(X, Y, panel)
    d_yx = met.arc_metric(Y, X, panel)
    _emit({"d_xy": d_xy.value, "maximizer_xy": d_xy.maximizer,
           "d_yx": d_yx.value, "maximizer_yx": d_yx.maximizer,
           "panel_n": panel.complexity})
    return 0


def cmd_horofn(args) -> int:
    base = _point_from_args(args, "base")
    at = _point_from_args(args, "at")
    panel = enumerate_panel(base.surface, args.panel_n)
    if args.mu:
        mu = lam.lamination_from_dict(base.surface, json.loads(args.mu))
        h = met.boundary_horofunction(mu, base, panel)
    elif args.point:
        h = met.interior_horofunction(_point_from_args(args, "point"),
                                      base, panel)
    else:
        raise DomainError("give --point (interior) or --mu (boundary)")
    print(_fmt(met.horofunction_eval(h, at)))
    return 0


# -- experiments --------------------------------------------------------------------


def _experiment_common(config):
    surface = _config_surface(config)
    base = geo.fn_from_dict(surface, _require(config, "base_point"))
    mu = lam.lamination_from_dict(surface, _require(config, "mu"))
    grid = _config_grid(config)
    panel = enumerate_panel(surface, int(config.get("panel_n", 0)))
    return surface, base, mu, grid, panel


def cmd_experiment_inequality(config, csv_path, json_path) -> int:
    surface, base, mu, grid, panel = _experiment_common(config)
    spec = asy.make_path_spec(mu, base, grid)
    names = config.get("targets") or panel.labels()
    targets = [lam.class_from_id(surface, n) for n in names]
    rows = []
    for t in grid:
        X = asy.scaling_path(spec, t)
        row = [t]
        for target in targets:
            growth = math.exp(t) * lam.intersection_number(mu, target)
            row.append(geo.class_length(X, target) - growth)
        rows.append(row)
    if csv_path:
        _write_csv(csv_path, ["t"] + [f"dev[{n}]" for n in names]
                   + [f"panel_n={panel.complexity}"], rows)
    reports, skipped = asy.verify_key_inequality(spec, targets, grid)
    _emit({"targets": [r.__dict__ for r in reports],
           "skipped": skipped, "panel_n": panel.complexity}, json_path)
    return 0


def cmd_experiment_boundary_limit(config, csv_path, json_path) -> int:
    surface, base, mu, grid, panel = _experiment_common(config)
    spec = asy.make_path_spec(mu, base, grid)
    series = asy.boundary_convergence(spec, panel, grid)
    if csv_path:
        _write_csv(csv_path, ["t", "sup_norm_distance",
                              f"panel_n={panel.complexity}"], series)
    ivec = [lam.intersection_number(mu, e) for e in panel]
    top = max(ivec)
    _emit({"final_distance": series[-1][1],
           "limit_vector": {lab: v / top for lab, v in zip(panel.labels(), ivec)},
           "panel": panel_to_dict(panel),
           "panel_n": panel.complexity}, json_path)
    return 0


def cmd_experiment_horo_converge(config, csv_path, json_path) -> int:
    surface, base, mu, grid, panel = _experiment_common(config)
    spec = asy.make_path_spec(mu, base, grid)
    probes = [geo.fn_from_dict(surface, p) for p in _require(config, "probes")]
    series = asy.horo_convergence(spec, base, probes, panel, grid)
    if csv_path:
        _write_csv(csv_path, ["t", "max_probe_deviation",
                              f"panel_n={panel.complexity}"], series)
    _emit({"final_deviation": series[-1][1], "probes": len(probes),
           "panel_n": panel.complexity}, json_path)
    return 0


def cmd_experiment_separate(config, csv_path, json_path) -> int:
    surface, base, mu, grid, panel = _experiment_common(config)
    nu = lam.lamination_from_dict(surface, _require(config, "nu"))
    mu = lam.normalize(mu, base)
    nu = lam.normalize(nu, base)
    witness = asy.separation_experiment(mu, nu, base, panel, grid=grid)
    _emit({"witness_point": geo.fn_to_dict(witness.point),
           "lhs": witness.lhs, "rhs": witness.rhs,
           "gap": witness.lhs - witness.rhs,
           "epsilon": witness.epsilon, "t": witness.t,
           "panel_n": panel.complexity}, json_path)
    return 0


def cmd_experiment_dt_sphere(args) -> int:
    g, n, p = (int(v) for v in args.surface.split(","))
    surface = build_surface(g, n, p)
    coord_dim, sphere_dim = lam.sphere_dimension(surface)
    rng = random.Random(args.seed)
    passed = 0
    for _ in range(args.samples):
        mu = lam.sample_supported_lamination(surface, rng)
        back = lam.dt_decode(surface, lam.dt_encode(mu))
        same = (len(back.components) == len(mu.components) and all(
            cb == cm and abs(wb - wm) <= 1e-9 * max(1.0, wm)
            for (cm, wm), (cb, wb) in zip(mu.components, back.components)))
        passed += bool(same)
    _emit({"surface": [g, n, p], "coordinate_dim": coord_dim,
           "sphere_dim": sphere_dim, "roundtrip_pass": passed,
           "samples": args.samples})
    return 0 if passed == args.samples else 3


# -- entry point -----------------------------------------------------------------------


def _add_surface_flags(sub):
    sub.add_argument("--pants", nargs="?", const="", default=None,
                     metavar="l1,l2,l3",
                     help="pair of pants; optionally the point itself")
    sub.add_argument("--torus", nargs="?", const="", default=None,
                     metavar="lC,tau,lB",
                     help="one-holed torus; optionally the point itself")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arcmetric",
        description="lengths, the arc metric, and boundary experiments on "
                    "Teichmueller spaces of bordered hyperbolic surfaces")
    subs = parser.add_subparsers(dest="cmd", required=True)

    s = subs.add_parser("arc-length", help="orthogeodesic arc length")
    _add_surface_flags(s)
    s.add_argument("--point", default=None, help="FN coordinates")
    s.add_argument("--arc", required=True, help="arc id (a12, a33, ...)")
    s.set_defaults(func=cmd_arc_length)

    s = subs.add_parser("curve-length", help="closed geodesic length")
    _add_surface_flags(s)
    s.add_argument("--point", default=None)
    s.add_argument("--curve", required=True, help="curve id (B1, C1, w(1,1))")
    s.set_defaults(func=cmd_curve_length)

    s = subs.add_parser("double", help="Fenchel-Nielsen data of the double")
    _add_surface_flags(s)
    s.add_argument("--point", default=None)
    s.set_defaults(func=cmd_double)

    s = subs.add_parser("distance", help="arc metric both ways")
    _add_surface_flags(s)
    s.add_argument("--x", required=True)
    s.add_argument("--y", required=True)
    s.add_argument("--panel-n", type=int, default=0)
    s.set_defaults(func=cmd_distance)

    s = subs.add_parser("horofn", help="evaluate a horofunction")
    _add_surface_flags(s)
    s.add_argument("--base", required=True)
    s.add_argument("--at", required=True)
    s.add_argument("--point", default=None, help="interior horofunction point")
    s.add_argument("--mu", default=None, help="boundary lamination JSON")
    s.add_argument("--panel-n", type=int, default=0)
    s.set_defaults(func=cmd_horofn)

    s = subs.add_parser("experiment", help="run a configured experiment")
    exp = s.add_subparsers(dest="verb", required=True)
    for verb in ("inequality", "boundary-limit", "horo-converge", "separate"):
        e = exp.add_parser(verb)
        e.add_argument("config", help="JSON experiment config")
        e.add_argument("--csv", default=None, help="CSV sweep output path")
        e.add_argument("--json", dest="json_out", default=None,
                       help="JSON summary path (default: stdout)")
        e.set_defaults(verb_name=verb)
    e = exp.add_parser("dt-sphere")
    e.add_argument("--surface", required=True, help="g,n,p")
    e.add_argument("--samples", type=int, default=50)
    e.add_argument("--seed", type=int, default=0)
    e.set_defaults(verb_name="dt-sphere")
    return parser


_EXPERIMENTS = {
    "inequality": cmd_experiment_inequality,
    "boundary-limit": cmd_experiment_boundary_limit,
    "horo-converge": cmd_experiment_horo_converge,
    "separate": cmd_experiment_separate,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.cmd == "experiment":
            if args.verb_name == "dt-sphere":
                return cmd_experiment_dt_sphere(args)
            config = _load_config(args.config)
            out = config.get("output", {})
            csv_path = args.csv or out.get("csv")
            json_path = args.json_out or out.get("json")
            return _EXPERIMENTS[args.verb_name](config, csv_path, json_path)
        return args.func(args)
    except (UnsupportedSurfaceError, UnsupportedClassError,
            UnsupportedCoordinatesError) as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return 4
    except (DomainError, InvalidSpecError, NoWitnessError,
            ArcmetricError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
