"""Command line front end: build / measure / verify / sweep / render.

Angles cross the CLI surface in degrees; everything internal is radians.
Exit codes: 0 success, 1 a verified claim was violated, 2 invalid input.
"""

from __future__ import annotations

import argparse
import math
import os
import random
import sys

from . import __version__, geom, metrics, oracles, report, sampling, svgout, theorems
from .construct import BulgingTriangle, Convexity, build
from .errors import DegenerateTriangle, GeometryError
from .geom import Kind, Point2, Triangle, dist, normalize


class _CliError(Exception):
    pass


def _parse_point(text: str) -> Point2:
    try:
        xs, ys = text.split(",")
        return Point2(float(xs), float(ys))
    except (ValueError, TypeError) as exc:
        raise _CliError(f"bad coordinate pair {text!r}, expected X,Y") from exc


def _add_input_options(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument(
        "--vertices", nargs=3, metavar="X,Y", help="three vertices as X,Y pairs"
    )
    g.add_argument(
        "--sides", nargs=3, type=float, metavar=("A", "B", "C"),
        help="side lengths a=|BC| b=|CA| c=|AB|",
    )
    g.add_argument(
        "--right", nargs=2, type=float, metavar=("A", "B"),
        help="right-angle legs; places B(0,0) C(a,0) A(a,b)",
    )


def _triangle_from_args(args) -> tuple[Triangle, dict]:
    if args.vertices is not None:
        pts = [_parse_point(v) for v in args.vertices]
        try:
            t = normalize(*pts)
        except DegenerateTriangle as exc:
            raise _CliError(str(exc)) from exc
        echo = {"vertices": [[p.x, p.y] for p in pts]}
        return t, echo
    if args.sides is not None:
        a, b, c = args.sides
        if min(a, b, c) <= 0.0:
            raise _CliError("side lengths must be positive")
        if not (a < b + c and b < c + a and c < a + b):
            raise _CliError(f"side lengths ({a}, {b}, {c}) violate the triangle inequality")
        # B at the origin, C on the x axis, A above.
        x = (a * a + c * c - b * b) / (2.0 * a)
        y2 = c * c - x * x
        if y2 <= 0.0:
            raise _CliError(f"side lengths ({a}, {b}, {c}) are numerically degenerate")
        t = normalize(Point2(x, math.sqrt(y2)), Point2(0.0, 0.0), Point2(a, 0.0))
        return t, {"sides": [a, b, c]}
    a, b = args.right
    if not (a > 0.0 and b > 0.0):
        raise _CliError("legs must be positive")
    t = normalize(Point2(a, b), Point2(0.0, 0.0), Point2(a, 0.0))
    return t, {"right_legs": [a, b]}


def _default_seed(args) -> int:
    if getattr(args, "seed", None) is not None:
        return args.seed
    return int(os.environ.get("BULGE_SEED", "0"))


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="\n") as fh:
            fh.write(text)


def _point_pair(p: Point2) -> list[float]:
    return [p.x, p.y]


def _deg(rad: float) -> float:
    return math.degrees(rad)


def _triangle_section(t: Triangle) -> dict:
    sides = geom.side_lengths(t)
    ang = geom.interior_angles(t)
    cls = geom.classify_triangle(t)
    return {
        "sides": {"a": sides.a, "b": sides.b, "c": sides.c},
        "angles_deg": {
            "alpha": _deg(ang.alpha),
            "beta": _deg(ang.beta),
            "gamma": _deg(ang.gamma),
        },
        "class": cls.kind.value,
        "extreme_vertex": cls.vertex,
    }


def _arcs_section(bt: BulgingTriangle) -> dict:
    out = {}
    for name, arc in (("ab", bt.arc_ab), ("bc", bt.arc_bc), ("ca", bt.arc_ca)):
        out[name] = {
            "center": _point_pair(arc.center),
            "radius": arc.radius,
            "central_angle_deg": _deg(arc.central_angle),
            "start": _point_pair(arc.start),
            "end": _point_pair(arc.end),
        }
    return out


def _metrics_section(bt: BulgingTriangle) -> dict:
    lab, lbc, lca = metrics.edge_lengths(bt)
    convex = bt.convexity is Convexity.CONVEX
    return {
        "len_ab": lab,
        "len_bc": lbc,
        "len_ca": lca,
        "perimeter": lab + lbc + lca,
        "area": metrics.area(bt) if convex else None,
        "convexity": bt.convexity.value,
    }


def _right_legs(t: Triangle) -> tuple[float, float] | None:
    cls = geom.classify_triangle(t)
    if cls.kind is not Kind.RIGHT:
        return None
    sides = geom.side_lengths(t)
    legs = {
        "A": (sides.b, sides.c),
        "B": (sides.c, sides.a),
        "C": (sides.a, sides.b),
    }[cls.vertex]
    return legs


def _theorems_section(bt: BulgingTriangle) -> dict:
    convex = bt.convexity is Convexity.CONVEX
    tri_ineq = None
    if convex:
        holds, margin = theorems.check_triangle_inequality(bt)
        tri_ineq = {"holds": holds, "margin": margin}
    pyth = None
    circ = None
    legs = _right_legs(bt.triangle)
    if legs is not None:
        rep = theorems.pyth_gap(*legs)
        pyth = {
            "a": rep.a,
            "b": rep.b,
            "t_deg": _deg(rep.t),
            "theta0_deg": _deg(rep.theta0),
            "gap": rep.gap,
            "verdict": rep.verdict.value,
        }
        disk = metrics.circumdisk_gap(bt)
        circ = {
            "center": _point_pair(disk.center),
            "radius": disk.radius,
            "max_boundary_distance": disk.max_boundary_distance,
            "contained": disk.contained,
        }
    return {"triangle_inequality": tri_ineq, "pyth": pyth, "circumdisk": circ}


def _build_document(t: Triangle, echo: dict) -> dict:
    bt = build(t)
    return {
        "tool": "bulge",
        "version": __version__,
        "input": echo,
        "vertices": {
            "a": _point_pair(t.a),
            "b": _point_pair(t.b),
            "c": _point_pair(t.c),
        },
        "triangle": _triangle_section(t),
        "arcs": _arcs_section(bt),
        "metrics": _metrics_section(bt),
        "theorems": _theorems_section(bt),
        "seed": None,
    }


def _cmd_build(args) -> int:
    t, echo = _triangle_from_args(args)
    _write(args.json, report.dumps(_build_document(t, echo)))
    return 0


# --- exploratory smallest enclosing circle (no containment claim) ----------


def _circle_from(points) -> tuple[Point2, float]:
    if not points:
        return Point2(0.0, 0.0), 0.0
    if len(points) == 1:
        return points[0], 0.0
    if len(points) == 2:
        c = geom.midpoint(points[0], points[1])
        return c, dist(points[0], points[1]) / 2.0
    (ax, ay), (bx, by), (cx, cy) = ((p.x, p.y) for p in points)
    d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    ux = ((ax**2 + ay**2) * (by - cy) + (bx**2 + by**2) * (cy - ay)
          + (cx**2 + cy**2) * (ay - by)) / d
    uy = ((ax**2 + ay**2) * (cx - bx) + (bx**2 + by**2) * (ax - cx)
          + (cx**2 + cy**2) * (bx - ax)) / d
    center = Point2(ux, uy)
    return center, dist(center, points[0])


def _min_enclosing_circle(points: list[Point2]) -> tuple[Point2, float]:
    rnd = random.Random(0)
    pts = list(points)
    rnd.shuffle(pts)
    center, radius = _circle_from([])

    def inside(p):
        return dist(p, center) <= radius * (1.0 + 1e-12) + 1e-300

    for i, p in enumerate(pts):
        if inside(p):
            continue
        center, radius = _circle_from([p])
        for j in range(i):
            q = pts[j]
            if inside(q):
                continue
            center, radius = _circle_from([p, q])
            for k in range(j):
                r = pts[k]
                if not inside(r):
                    center, radius = _circle_from([p, q, r])
    return center, radius


def _cmd_measure(args) -> int:
    t, echo = _triangle_from_args(args)
    bt = build(t)
    if args.area and bt.convexity is Convexity.CONCAVE:
        raise _CliError("area is undefined for concave bulging triangles")
    doc = {
        "tool": "bulge",
        "version": __version__,
        "input": echo,
        "triangle": _triangle_section(t),
        "metrics": _metrics_section(bt),
    }
    if args.explore_circle:
        if bt.convexity is Convexity.CONCAVE:
            raise _CliError("--explore-circle requires a convex bulging triangle")
        center, radius = _min_enclosing_circle(oracles.boundary_samples(bt, 256))
        doc["enclosing_circle"] = {
            "exploratory": True,
            "center": _point_pair(center),
            "radius": radius,
        }
    _write(args.json, report.dumps(doc))
    return 0


# --- verify -----------------------------------------------------------------


def _verify_instance(t: Triangle, failures: list[str]) -> None:
    bt = build(t)
    label = f"vertices A{(t.a.x, t.a.y)} B{(t.b.x, t.b.y)} C{(t.c.x, t.c.y)}"

    for name, arc in (("AB", bt.arc_ab), ("BC", bt.arc_bc), ("CA", bt.arc_ca)):
        for endpoint in (arc.start, arc.end):
            if abs(dist(arc.center, endpoint) - arc.radius) > 1e-9 * arc.radius:
                failures.append(f"arc {name} radius mismatch: {label}")
        chord = dist(arc.start, arc.end)
        expect = 2.0 * arc.radius * math.sin(arc.central_angle / 2.0)
        if abs(chord - expect) > 1e-9 * chord:
            failures.append(f"arc {name} chord relation: {label}")

    try:
        verdict = metrics.convexity_check(bt, 64)
    except GeometryError as exc:
        failures.append(f"convexity check inconclusive ({exc}): {label}")
        return
    if verdict is not bt.convexity:
        failures.append(f"convexity flag {bt.convexity.value} != sampled {verdict.value}: {label}")

    if bt.convexity is Convexity.CONCAVE:
        return

    holds, margin = theorems.check_triangle_inequality(bt)
    if not holds:
        failures.append(f"triangle inequality violated (margin {margin}): {label}")

    ordering = theorems.edge_ordering_check(bt)
    if not (ordering.consistent and ordering.converse_consistent):
        failures.append(f"angle/edge ordering violated: {label}")

    for arc in bt.arcs:
        closed = metrics.edge_length(arc)
        poly = oracles.polyline_length(arc, 64)
        if abs(closed - poly) > 2.0 * closed / 64**2:
            failures.append(f"polyline oracle disagrees with closed form: {label}")
            break

    legs = _right_legs(t)
    if legs is not None:
        a, b = legs
        lab, lbc, lca = metrics.edge_lengths(bt)
        hyp = math.hypot(a, b)
        # Identity: the two leg edges join into the semicircle over the
        # hypotenuse, so their lengths sum to (pi/2) * hypotenuse.
        cls = geom.classify_triangle(t)
        edge_sum = {
            "C": lbc + lca,
            "A": lca + lab,
            "B": lab + lbc,
        }[cls.vertex]
        if abs(edge_sum - math.pi / 2.0 * hyp) > 1e-9 * hyp:
            failures.append(f"leg-edge semicircle identity violated: {label}")
        try:
            theorems.pyth_gap(a, b)
        except AssertionError:
            failures.append(f"gap two-path consistency violated: {label}")
        disk = metrics.circumdisk_gap(bt)
        if not disk.contained:
            failures.append(f"hypotenuse disk containment violated: {label}")


def _cmd_verify(args) -> int:
    seed = _default_seed(args)
    rng = random.Random(seed)
    failures: list[str] = []
    counts = {"acute": 0, "right": 0, "obtuse": 0}
    for _ in range(args.random):
        if args.kind == "acute":
            t = sampling.random_acute(rng)
        elif args.kind == "right":
            t = sampling.random_right(rng)
        else:
            u = rng.random()
            if u < 0.4:
                t = sampling.random_acute(rng)
            elif u < 0.7:
                t = sampling.random_right(rng)
            else:
                t = sampling.random_obtuse(rng)
        counts[geom.classify_triangle(t).kind.value] += 1
        _verify_instance(t, failures)
        if len(failures) >= 20:
            break
    print(f"verify: {args.random} instances, seed {seed}, kind {args.kind} "
          f"(acute {counts['acute']}, right {counts['right']}, obtuse {counts['obtuse']})")
    if failures:
        for line in failures:
            print(f"FAIL {line}")
        return 1
    print("all claims held")
    return 0


def _cmd_sweep(args) -> int:
    a = args.leg_a
    if a <= 0.0 or args.b_from <= 0.0 or args.b_to < args.b_from or args.steps < 1:
        raise _CliError("need leg-a > 0, 0 < b-from <= b-to, steps >= 1")
    rows = ["b,t,theta0,gap"]
    for i in range(args.steps):
        frac = i / (args.steps - 1) if args.steps > 1 else 0.0
        b = args.b_from + frac * (args.b_to - args.b_from)
        rep = theorems.pyth_gap(a, b)
        rows.append(
            f"{rep_field(b)},{rep_field(_deg(rep.t))},"
            f"{rep_field(_deg(rep.theta0))},{rep_field(rep.gap)}"
        )
    _write(args.csv, "\n".join(rows) + "\n")
    return 0


def rep_field(x: float) -> str:
    s = f"{x:.17g}"
    return "0" if s == "-0" else s


def _cmd_render(args) -> int:
    t, _ = _triangle_from_args(args)
    bt = build(t)
    try:
        opts = svgout.RenderOptions(
            width_px=args.width,
            height_px=args.height,
            margin_frac=args.margin,
            overlays=frozenset(args.overlay or ()),
        )
        doc = svgout.to_svg(bt, opts)
    except (ValueError, GeometryError) as exc:
        raise _CliError(str(exc)) from exc
    _write(args.out, doc)
    return 0


def _make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bulge",
        description="Construct, measure, verify and render bulging triangles.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct and report arcs, metrics and theorem checks")
    _add_input_options(p)
    p.add_argument("--json", default="-", metavar="PATH", help="output path, - for stdout")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("measure", help="edge lengths, perimeter and area")
    _add_input_options(p)
    p.add_argument("--json", default="-", metavar="PATH")
    p.add_argument("--area", action="store_true",
                   help="require the area (errors on concave input)")
    p.add_argument("--explore-circle", action="store_true",
                   help="exploratory smallest enclosing circle of the boundary")
    p.set_defaults(func=_cmd_measure)

    p = sub.add_parser("verify", help="check every claim on random instances")
    p.add_argument("--random", type=int, default=1000, metavar="N")
    p.add_argument("--seed", type=int, default=None,
                   help="default from BULGE_SEED, else 0")
    p.add_argument("--kind", choices=("acute", "right", "all"), default="all")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("sweep", help="Pythagorean gap over a leg-ratio grid (CSV)")
    p.add_argument("--leg-a", type=float, required=True)
    p.add_argument("--b-from", type=float, required=True)
    p.add_argument("--b-to", type=float, required=True)
    p.add_argument("--steps", type=int, default=101)
    p.add_argument("--csv", default="-", metavar="PATH")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("render", help="emit an SVG figure")
    _add_input_options(p)
    p.add_argument("--out", default="-", metavar="PATH")
    p.add_argument("--overlay", action="append", choices=svgout.OVERLAYS,
                   metavar="NAME", help=f"one of {', '.join(svgout.OVERLAYS)}")
    p.add_argument("--width", type=int, default=640)
    p.add_argument("--height", type=int, default=640)
    p.add_argument("--margin", type=float, default=0.08)
    p.set_defaults(func=_cmd_render)

    return parser


def main(argv=None) -> int:
    parser = _make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
