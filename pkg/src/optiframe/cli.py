"""Command-line interface for the optiframe library.

Subcommands
-----------
enumerate M     list vanishing sign-pattern classes of length M
table           class counts and optimal bounds over a range of M
polygon M       optimal polygon of a solution class (JSON/SVG/PNG)
frame M         optimal frame of a solution class (JSON/SVG/PNG)
beta            condition report for a frame read from a CSV matrix
harmonic M      condition report for the harmonic frame
verify          run a named self-check suite

Exit status is 0 on success, 1 when a verify suite fails, and 2 on
invalid input (m out of range, bad class index, malformed CSV).  All
file output is deterministic: JSON and CSV floats carry at most 9
significant digits and SVG coordinates exactly 6 decimals, so identical
invocations produce byte-identical files.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Callable, Sequence

import numpy as np

from .constructions import (
    NoOddFactor,
    OptimalPair,
    harmonic_frame,
    optimal_pair_from_sign,
    optimal_pair_m4,
)
from .enumeration import (
    MTooLarge,
    class_count,
    classes_json,
    enumerate_solution_classes,
    has_odd_factor,
    is_power_of_two,
    iter_solutions,
)
from .frames import (
    ConditionReport,
    Frame,
    beta_harmonic,
    beta_min_bound,
    condition_number,
    is_tight,
    lipschitz_lower_cap,
    lower_lipschitz_numeric,
    universal_lower_bounds,
)
from .geometry import (
    ConvexPolygon,
    edge_image,
    is_zero_sum,
    max_abs_projection_sum,
    polygon_json,
)
from .oracle import brute_force_diameter, brute_force_solutions, discrepancy_max
from .sampling import (
    random_convex_polygon,
    random_frame,
    random_tight_frame,
    random_unit_edges,
)

# Class counts for the supported range; the enumeration finds none for
# m = 4 and m = 8, whose minimizers are known from the literature.
REFERENCE_CLASS_COUNTS = {
    3: 1, 4: 0, 5: 1, 6: 1, 7: 1, 8: 0, 9: 2,
    10: 1, 11: 1, 12: 2, 13: 1, 14: 1, 15: 5,
}
LITERATURE_COUNTS = {4: 1, 8: 1}


class UsageError(Exception):
    """Invalid command-line input; mapped to exit status 2."""


# ---- Deterministic formatting ----


def round_floats(obj):
    """Clamp every float in a JSON-ready structure to 9 significant digits."""
    if isinstance(obj, float):
        return float(f"{obj:.9g}")
    if isinstance(obj, dict):
        return {k: round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [round_floats(v) for v in obj]
    return obj


def json_text(payload: dict) -> str:
    return json.dumps(round_floats(payload), indent=2) + "\n"


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _fmt9(x: float) -> str:
    return f"{x:.9g}"


def _sign_str(eps: Sequence[int]) -> str:
    return "".join("+" if s == 1 else "-" for s in eps)


# ---- SVG emission ----


def _svg_polygon_text(polygon: ConvexPolygon, label: str) -> str:
    """800x800 drawing of the polygon at unit diameter, chords dashed."""
    diam = polygon.diameter()
    pts = [(x / diam, y / diam) for x, y in polygon.vertices]
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    cx = 0.5 * (min(xs) + max(xs))
    cy = 0.5 * (min(ys) + max(ys))
    scale = 640.0

    def place(p: tuple[float, float]) -> tuple[float, float]:
        return 400.0 + scale * (p[0] - cx), 400.0 - scale * (p[1] - cy)

    placed = [place(p) for p in pts]
    points = " ".join(f"{x:.6f},{y:.6f}" for x, y in placed)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" width="800" height="800" viewBox="0 0 800 800">',
        f'  <polygon points="{points}" fill="#dce6f1" stroke="#1f4e79" stroke-width="2"/>',
    ]
    for i, j in polygon.diameter_pairs(1e-9):
        x1, y1 = placed[i]
        x2, y2 = placed[j]
        lines.append(
            f'  <line x1="{x1:.6f}" y1="{y1:.6f}" x2="{x2:.6f}" y2="{y2:.6f}" '
            'stroke="#c44e52" stroke-width="1.5" stroke-dasharray="9 6"/>'
        )
    for x, y in placed:
        lines.append(f'  <circle cx="{x:.6f}" cy="{y:.6f}" r="3" fill="#1f4e79"/>')
    lines.append(
        f'  <text x="24" y="776" font-family="monospace" font-size="16">{label}</text>'
    )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _svg_frame_text(frame: Frame, label: str) -> str:
    """800x800 drawing of frame vectors as arrows from the center."""
    max_norm = max(math.hypot(x, y) for x, y in frame.vectors)
    scale = 300.0 / max_norm if max_norm > 0.0 else 1.0
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" width="800" height="800" viewBox="0 0 800 800">',
        "  <defs>",
        '    <marker id="tip" markerWidth="9" markerHeight="8" refX="8" refY="4" orient="auto">',
        '      <path d="M0,0 L8,4 L0,8 z" fill="#1f4e79"/>',
        "    </marker>",
        "  </defs>",
        f'  <circle cx="400" cy="400" r="{scale:.6f}" fill="none" stroke="#999999" stroke-dasharray="4 4"/>',
    ]
    for x, y in frame.vectors:
        tx = 400.0 + scale * x
        ty = 400.0 - scale * y
        lines.append(
            f'  <line x1="400" y1="400" x2="{tx:.6f}" y2="{ty:.6f}" '
            'stroke="#1f4e79" stroke-width="2" marker-end="url(#tip)"/>'
        )
    lines.append(
        f'  <text x="24" y="776" font-family="monospace" font-size="16">{label}</text>'
    )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


# ---- Input parsing and pair resolution ----


def _parse_matrix_csv(path: str) -> Frame:
    rows: list[tuple[float, float]] = []
    try:
        fh = open(path, encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    with fh:
        for lineno, line in enumerate(fh, 1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            parts = [p.strip() for p in text.split(",")]
            if len(parts) != 2:
                raise UsageError(f"{path}:{lineno}: expected two comma-separated values")
            try:
                x, y = float(parts[0]), float(parts[1])
            except ValueError as exc:
                raise UsageError(f"{path}:{lineno}: not a number: {exc}") from exc
            if not (math.isfinite(x) and math.isfinite(y)):
                raise UsageError(f"{path}:{lineno}: entries must be finite")
            rows.append((x, y))
    if len(rows) < 2:
        raise UsageError(f"{path}: a frame needs at least 2 rows")
    return Frame(tuple(rows))


def _validate_m(m: int) -> None:
    if m < 3:
        raise UsageError(f"m must be at least 3, got {m}")


def resolve_pair(m: int, class_index: int) -> OptimalPair:
    """Optimal pair for class k of length m, with the m=4 special case."""
    _validate_m(m)
    if m == 4:
        if class_index != 0:
            raise UsageError("m=4 has exactly one known minimizer; use --class 0")
        return optimal_pair_m4()
    if is_power_of_two(m):
        raise UsageError(
            f"m={m} is a power of two: no sign-pattern construction exists; "
            "the m=8 minimizer is known from the literature and out of scope"
        )
    try:
        classes = enumerate_solution_classes(m)
    except MTooLarge as exc:
        raise UsageError(str(exc)) from exc
    if not 0 <= class_index < len(classes):
        raise UsageError(
            f"class index {class_index} out of range: m={m} has {len(classes)} classes"
        )
    return optimal_pair_from_sign(classes[class_index].canonical)


# ---- Subcommands ----


def cmd_enumerate(args: argparse.Namespace) -> int:
    _validate_m(args.m)
    try:
        classes = enumerate_solution_classes(args.m, keep_members=args.raw)
    except MTooLarge as exc:
        raise UsageError(str(exc)) from exc
    payload = classes_json(args.m, classes)
    print(f"m={args.m}: {len(classes)} solution classes, {payload['raw_total']} raw solutions")
    for k, c in enumerate(classes):
        print(f"class {k}: canonical={_sign_str(c.canonical)} orbit_size={c.orbit_size}")
        if args.raw and c.members:
            for eps in c.members:
                print(f"  raw {_sign_str(eps)}")
    if is_power_of_two(args.m):
        lit = LITERATURE_COUNTS.get(args.m)
        note = f"; the literature count is {lit}" if lit is not None else ""
        print(f"note: m={args.m} is a power of two, so no sign pattern vanishes{note}")
    if args.json:
        _write_text(args.json, json_text(payload))
        print(f"wrote {args.json}")
    return 0


def _table_rows(max_m: int) -> list[dict]:
    rows = []
    for m in range(3, max_m + 1):
        try:
            count = class_count(m)
        except MTooLarge as exc:
            raise UsageError(str(exc)) from exc
        row = {"m": m, "classes": count, "beta_min": None, "r_min": None, "note": ""}
        if has_odd_factor(m):
            row["beta_min"] = beta_min_bound(m)
            row["r_min"] = 1.0 / (2.0 * m * math.sin(math.pi / (2 * m)))
        elif m == 4:
            pair = optimal_pair_m4()
            row["beta_min"] = pair.beta
            row["r_min"] = pair.r
            row["note"] = "count from literature: 1"
        elif m == 8:
            row["note"] = "count from literature: 1; optimal octagon out of scope"
        else:
            row["note"] = "power of two; out of scope"
        rows.append(row)
    return rows


def cmd_table(args: argparse.Namespace) -> int:
    _validate_m(args.max_m)
    rows = _table_rows(args.max_m)
    print(f"{'m':>3} {'classes':>8} {'beta_min':>14} {'r_min':>14}  note")
    for row in rows:
        beta = _fmt9(row["beta_min"]) if row["beta_min"] is not None else "-"
        r = _fmt9(row["r_min"]) if row["r_min"] is not None else "-"
        print(f"{row['m']:>3} {row['classes']:>8} {beta:>14} {r:>14}  {row['note']}")
    if args.csv:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["m", "classes", "beta_min", "r_min", "note"])
        for row in rows:
            writer.writerow(
                [
                    row["m"],
                    row["classes"],
                    _fmt9(row["beta_min"]) if row["beta_min"] is not None else "",
                    _fmt9(row["r_min"]) if row["r_min"] is not None else "",
                    row["note"],
                ]
            )
        _write_text(args.csv, buf.getvalue())
        print(f"wrote {args.csv}")
    if args.plot:
        from . import figures

        plot_rows = [
            {
                "m": row["m"],
                "classes": row["classes"],
                "beta_floor": beta_min_bound(row["m"]),
                "beta_harmonic": beta_harmonic(row["m"]),
            }
            for row in rows
        ]
        figures.save_bounds_figure(plot_rows, args.plot)
        print(f"wrote {args.plot}")
    return 0


def _pair_label(pair: OptimalPair, class_index: int) -> str:
    sign = _sign_str(pair.sign) if pair.sign is not None else "(none)"
    return (
        f"m={pair.m} class={class_index} sign={sign} "
        f"beta={_fmt9(pair.beta)} r={_fmt9(pair.r)}"
    )


def cmd_polygon(args: argparse.Namespace) -> int:
    pair = resolve_pair(args.m, args.class_index)
    polygon = pair.polygon
    print(_pair_label(pair, args.class_index))
    print(
        f"diameter={_fmt9(polygon.diameter())} perimeter={_fmt9(polygon.perimeter())}"
    )
    if args.json:
        _write_text(args.json, json_text(polygon_json(polygon)))
        print(f"wrote {args.json}")
    if args.svg:
        label = f"m={pair.m} beta={_fmt9(pair.beta)} r={_fmt9(pair.r)}"
        _write_text(args.svg, _svg_polygon_text(polygon, label))
        print(f"wrote {args.svg}")
    if args.png:
        from . import figures

        figures.save_polygon_figure(
            polygon, args.png, title=f"optimal {pair.m}-gon, r={_fmt9(pair.r)}"
        )
        print(f"wrote {args.png}")
    return 0


def cmd_frame(args: argparse.Namespace) -> int:
    pair = resolve_pair(args.m, args.class_index)
    print(_pair_label(pair, args.class_index))
    for x, y in pair.frame.vectors:
        print(f"  {_fmt9(x)}, {_fmt9(y)}")
    if args.json:
        _write_text(args.json, json_text(pair.to_json_dict()))
        print(f"wrote {args.json}")
    if args.svg:
        label = f"m={pair.m} beta={_fmt9(pair.beta)} tight frame"
        _write_text(args.svg, _svg_frame_text(pair.frame, label))
        print(f"wrote {args.svg}")
    if args.png:
        from . import figures

        figures.save_frame_figure(
            pair.frame, args.png, title=f"optimal frame, m={pair.m}"
        )
        print(f"wrote {args.png}")
    return 0


def _print_report(report: ConditionReport, json_path: str | None) -> None:
    text = json_text(report.to_json_dict())
    sys.stdout.write(text)
    if json_path:
        _write_text(json_path, text)
        print(f"wrote {json_path}")


def cmd_beta(args: argparse.Namespace) -> int:
    frame = _parse_matrix_csv(args.matrix)
    report = condition_number(frame)
    _print_report(report, args.json)
    return 0


def cmd_harmonic(args: argparse.Namespace) -> int:
    _validate_m(args.m)
    report = condition_number(harmonic_frame(args.m))
    _print_report(report, args.json)
    return 0


# ---- Verify suites ----

Check = tuple[bool, str]


def _suite_table1() -> list[Check]:
    checks: list[Check] = []
    for m, want in REFERENCE_CLASS_COUNTS.items():
        got = class_count(m)
        label = f"m={m}: {got} classes (expected {want})"
        if m in LITERATURE_COUNTS:
            label += f"; literature count {LITERATURE_COUNTS[m]}"
        checks.append((got == want, label))
    return checks


def _suite_diameter() -> list[Check]:
    rng = np.random.default_rng(1009)
    worst_identity = 0.0
    worst_brute = 0.0
    for _ in range(100):
        m = int(rng.integers(3, 41))
        p = random_convex_polygon(rng, m)
        value, _ = max_abs_projection_sum(p.edges())
        worst_identity = max(
            worst_identity, abs(p.diameter() - 0.5 * value) / p.perimeter()
        )
        worst_brute = max(worst_brute, abs(p.diameter() - brute_force_diameter(p)))
    return [
        (worst_identity <= 1e-9, f"projection identity on 100 polygons (worst {worst_identity:.2e})"),
        (worst_brute <= 1e-12, f"brute-force diameter agreement (worst {worst_brute:.2e})"),
    ]


def _suite_tightness() -> list[Check]:
    rng = np.random.default_rng(1013)
    ok_random = True
    for _ in range(50):
        f = random_frame(rng, int(rng.integers(3, 11)))
        edges = [edge_image(v) for v in f.vectors]
        ok_random &= bool(is_tight(f)) == is_zero_sum(edges)
    ok_tight = True
    for _ in range(50):
        f = random_tight_frame(rng, int(rng.integers(3, 11)))
        edges = [edge_image(v) for v in f.vectors]
        ok_tight &= bool(is_tight(f)) and is_zero_sum(edges)
    ok_harmonic = all(
        abs(condition_number(harmonic_frame(m)).beta - beta_harmonic(m)) <= 1e-9
        for m in range(3, 13)
    )
    return [
        (ok_random, "random frames: tight iff zero edge-sum"),
        (ok_tight, "constructed tight frames: tight and zero edge-sum"),
        (ok_harmonic, "harmonic frames: exact beta matches closed form (m=3..12)"),
    ]


def _suite_solutions() -> list[Check]:
    checks = []
    for m in range(3, 13):
        exact = list(iter_solutions(m))
        approx = brute_force_solutions(m)
        checks.append((exact == approx, f"m={m}: exact and float solution sets agree"))
    return checks


def _suite_discrepancy() -> list[Check]:
    rng = np.random.default_rng(1019)
    worst = 0.0
    for _ in range(50):
        edges = random_unit_edges(rng, int(rng.integers(3, 13)))
        value, _ = max_abs_projection_sum(edges)
        worst = max(worst, abs(discrepancy_max(edges) - value))
    return [(worst <= 1e-10, f"sign discrepancy equals projection maximum (worst {worst:.2e})")]


def _suite_floor() -> list[Check]:
    floor_real, _ = universal_lower_bounds()
    betas = [beta_harmonic(m) for m in range(3, 16)]
    for m in REFERENCE_CLASS_COUNTS:
        for c in enumerate_solution_classes(m):
            betas.append(optimal_pair_from_sign(c.canonical).beta)
    betas.append(optimal_pair_m4().beta)
    ok = all(b >= floor_real - 1e-9 for b in betas)
    return [(ok, f"all {len(betas)} computed betas respect the universal floor")]


def _suite_lipschitz() -> list[Check]:
    rng = np.random.default_rng(1021)
    ok_cap = True
    ok_match = True
    for _ in range(20):
        m = int(rng.integers(3, 11))
        f = random_frame(rng, m)
        found = lower_lipschitz_numeric(f, grid=(1024, 128))
        ok_cap &= found.value ** 2 <= lipschitz_lower_cap(f) + 1e-9
        t = random_tight_frame(rng, m)
        exact = condition_number(t)
        numeric = lower_lipschitz_numeric(t, grid=(1024, 128))
        ok_match &= abs(numeric.value - exact.lower) <= 1e-4 * exact.lower
    return [
        (ok_cap, "numeric L^2 respects the frame-independent cap"),
        (ok_match, "numeric L matches exact L on tight frames (1e-4 relative)"),
    ]


SUITES: dict[str, Callable[[], list[Check]]] = {
    "table1": _suite_table1,
    "diameter": _suite_diameter,
    "tightness": _suite_tightness,
    "solutions": _suite_solutions,
    "discrepancy": _suite_discrepancy,
    "floor": _suite_floor,
    "lipschitz": _suite_lipschitz,
}


def cmd_verify(args: argparse.Namespace) -> int:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    failures = 0
    for name in names:
        checks = SUITES[name]()
        for ok, label in checks:
            print(f"{'ok' if ok else 'FAIL'}: [{name}] {label}")
            failures += 0 if ok else 1
    print(f"{failures} failures" if failures else "all checks passed")
    return 1 if failures else 0


# ---- Parser ----


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="optiframe",
        description="Optimal condition numbers of plane frames and their polygons.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list solution classes of length m")
    p.add_argument("m", type=int)
    p.add_argument("--raw", action="store_true", help="also list raw solutions")
    p.add_argument("--json", metavar="PATH", help="write the class summary as JSON")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("table", help="class counts and optimal bounds per m")
    p.add_argument("--max-m", type=int, default=15, dest="max_m")
    p.add_argument("--csv", metavar="PATH", help="write the table as CSV")
    p.add_argument("--plot", metavar="PATH", help="render the bounds as a figure")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("polygon", help="optimal polygon for a solution class")
    p.add_argument("m", type=int)
    p.add_argument("--class", type=int, default=0, dest="class_index")
    p.add_argument("--json", metavar="PATH")
    p.add_argument("--svg", metavar="PATH")
    p.add_argument("--png", metavar="PATH")
    p.set_defaults(func=cmd_polygon)

    p = sub.add_parser("frame", help="optimal frame for a solution class")
    p.add_argument("m", type=int)
    p.add_argument("--class", type=int, default=0, dest="class_index")
    p.add_argument("--json", metavar="PATH")
    p.add_argument("--svg", metavar="PATH")
    p.add_argument("--png", metavar="PATH")
    p.set_defaults(func=cmd_frame)

    p = sub.add_parser("beta", help="condition report for a CSV matrix")
    p.add_argument("--matrix", required=True, metavar="PATH")
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=cmd_beta)

    p = sub.add_parser("harmonic", help="condition report for the harmonic frame")
    p.add_argument("m", type=int)
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=cmd_harmonic)

    p = sub.add_parser("verify", help="run a self-check suite")
    p.add_argument(
        "--suite",
        required=True,
        choices=sorted(SUITES) + ["all"],
    )
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (MTooLarge, NoOddFactor) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
