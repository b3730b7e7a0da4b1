"""Unified command line front end.

Subcommands: homology, check-torsion-bound, abelianize, girth, build-graph,
sleeve, bounds, waring, genfun, corpus, sweep.  Output is deterministic:
identical invocations produce byte-identical artifacts.  Exit codes:
0 success (possibly with per-row warnings), 1 invariant violation (a
theorem-level check came back false, which signals a bug), 2 usage error.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

from . import bounds as bounds_mod
from . import corpus as corpus_mod
from . import genfun as genfun_mod
from . import waring as waring_mod
from .complexes import load_complex
from .graphs import (
    GirthSearchError,
    MetricGraph,
    construct_regular_girth,
    dump_graph,
    girth,
    load_graph,
    metric_systole,
)
from .homology import check_s2_torsion_bound, homology
from .presentations import abelianization, parse_presentation
from .sleeves import CubicalModel, assemble

__version__ = "0.1.0"

USAGE_ERROR = 2
INVARIANT_VIOLATION = 1


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return value
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {f.name: _jsonable(getattr(value, f.name)) for f in dataclasses.fields(value)}
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        Path(out_path).write_text(text)
    else:
        sys.stdout.write(text)


def _dump_json(payload, out_path: str | None) -> None:
    _emit(json.dumps(_jsonable(payload), indent=2) + "\n", out_path)


def _csv_cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, Fraction):
        return str(value)
    return str(value)


def _dump_csv(header_comment: str, columns, rows, out_path: str | None) -> None:
    lines = [f"# {header_comment}", ",".join(columns)]
    lines += [",".join(_csv_cell(cell) for cell in row) for row in rows]
    _emit("\n".join(lines) + "\n", out_path)


def _provenance(args) -> str:
    constants = "defaults(illustrative)" if not args.constants else args.constants
    return f"systolic {__version__} seed={args.seed} constants={constants}"


def _load_constants(args) -> bounds_mod.BoundConstants:
    if args.constants:
        return bounds_mod.load_constants(args.constants)
    return bounds_mod.BoundConstants()


def _named_complexes(args):
    """(name, complex) pairs from file paths or the whole built-in corpus."""
    if getattr(args, "corpus", False):
        return list(corpus_mod.corpus_complexes().items())
    if not args.inputs:
        raise SystemExit2("no input complexes given (pass files or --corpus)")
    out = []
    for path in args.inputs:
        with open(path) as handle:
            out.append((Path(path).stem, load_complex(handle)))
    return out


class SystemExit2(Exception):
    """Usage-level error: exits with code 2."""


def cmd_homology(args) -> int:
    pairs = _named_complexes(args)
    if args.format == "csv":
        rows = []
        for name, complex_ in pairs:
            summary = homology(complex_)
            rows.append(
                (
                    name,
                    " ".join(map(str, summary.betti)),
                    " ".join("/".join(map(str, chain)) or "-" for chain in summary.torsion),
                )
            )
        _dump_csv(_provenance(args), ("name", "betti", "torsion"), rows, args.out)
        return 0
    payload = {
        name: {"betti": list(homology(c).betti), "torsion": [list(t) for t in homology(c).torsion]}
        for name, c in pairs
    }
    if len(payload) == 1:
        payload = next(iter(payload.values()))
    _dump_json(payload, args.out)
    return 0


def cmd_check_torsion_bound(args) -> int:
    pairs = _named_complexes(args)
    rows = []
    violated = False
    for name, complex_ in pairs:
        report = check_s2_torsion_bound(complex_)
        violated |= not report.holds
        rows.append((name, report.s2, report.lower_bound, report.holds))
    _dump_csv(_provenance(args), ("name", "s2", "bound", "holds"), rows, args.out)
    return INVARIANT_VIOLATION if violated else 0


def cmd_abelianize(args) -> int:
    presentation = parse_presentation(args.presentation)
    image = abelianization(presentation)
    _dump_json(
        {"free_rank": image.free_rank, "torsion_factors": list(image.torsion_factors)},
        args.out,
    )
    return 0


def cmd_girth(args) -> int:
    with open(args.graph) as handle:
        graph = load_graph(handle)
    payload: dict = {"girth": _jsonable(float(girth(graph)))}
    if args.edge_length:
        systole = metric_systole(MetricGraph(graph, Fraction(args.edge_length)))
        payload["edge_length"] = args.edge_length
        payload["metric_systole"] = _jsonable(systole if systole == math.inf else Fraction(systole))
    if isinstance(payload["girth"], float):
        payload["girth"] = int(payload["girth"])
    _dump_json(payload, args.out)
    return 0


def cmd_build_graph(args) -> int:
    graph = construct_regular_girth(args.c, args.girth, args.vertices, seed=args.seed)
    _emit(dump_graph(graph) + "\n", args.out)
    return 0


def cmd_sleeve(args) -> int:
    with open(args.graph) as handle:
        graph = load_graph(handle)
    model = CubicalModel(args.m, args.c)
    report = assemble(model, Fraction(args.eps), graph)
    payload = _jsonable(report)
    # exact fields stay exact; transcendental formula values print to 6 digits
    payload["sublinear_upper_bound"] = float(f"{report.sublinear_upper_bound:.6g}")
    _dump_json(payload, args.out)
    return 0


def cmd_bound_multiple(args) -> int:
    from .sleeves import multiple_class_bound

    ks = _parse_grid_ints(args.k)
    rows = [(k, multiple_class_bound(k, args.constant), multiple_class_bound(k, args.constant) / k) for k in ks]
    _dump_csv(_provenance(args), ("k", "bound", "bound_over_k"), rows, args.out)
    return 0


def _parse_grid_ints(spec: str) -> list[int]:
    """'1,2,3' or 'start:stop:step' (inclusive stop)."""
    if ":" in spec:
        parts = [int(x) for x in spec.split(":")]
        start, stop = parts[0], parts[1]
        step = parts[2] if len(parts) > 2 else 1
        return list(range(start, stop + 1, step))
    return [int(x) for x in spec.split(",")]


_BOUND_EVALUATORS = {
    "height": lambda a, k: bounds_mod.height_lb(a.value, k),
    "simvol": lambda a, k: bounds_mod.simvol_lb(a.value, k),
    "torsion": lambda a, k: bounds_mod.torsion_lb(a.value, k),
    "height-from-torsion": lambda a, k: bounds_mod.height_from_torsion(a.value),
    "lens": lambda a, k: bounds_mod.lens_lb(int(a.value), k),
    "pi1-3manifold": lambda a, k: bounds_mod.finite_pi1_3manifold_lb(int(a.value), k),
    "kappa-upper": lambda a, k: bounds_mod.kappa_upper_from_systole(a.value),
    "kappa-alpha": lambda a, k: bounds_mod.kappa_alpha_scale(a.value),
    "area-from-kappa": lambda a, k: bounds_mod.systolic_area_upper_from_kappa(a.value),
}


def cmd_bounds(args) -> int:
    constants = _load_constants(args)
    name = args.name
    if name == "sweep":
        return _run_sweep_file(args.spec, args)
    if name in _BOUND_EVALUATORS:
        if args.value is None:
            raise SystemExit2(f"bounds {name} requires --value")
        value = _BOUND_EVALUATORS[name](args, constants)
        payload = {"name": name, "value": value, "constants": constants.provenance}
        _dump_json(payload, args.out)
        return 0
    if name == "sandwich":
        if args.value is None:
            raise SystemExit2("bounds sandwich requires --value (the multiple k)")
        report = bounds_mod.sandwich(args.value, constants)
        _dump_json(
            {
                "name": report.name,
                "lower": report.lower_bounds[0][1],
                "upper": report.upper_bounds[0][1],
                "consistent": report.consistent,
                "constants": constants.provenance,
            },
            args.out,
        )
        return 0
    if name == "group-count":
        report = bounds_mod.group_count_bound(int(args.value))
        _dump_json(report, args.out)
        return 0 if report.chain_ok else INVARIANT_VIOLATION
    if name == "surface-kappa":
        low, high = bounds_mod.surface_kappa_bounds(int(args.value))
        _dump_json({"genus": int(args.value), "lower": low, "upper": high}, args.out)
        return 0
    if name == "abelian-kappa":
        low, high = bounds_mod.abelian_kappa_bounds(int(args.value))
        _dump_json({"rank": int(args.value), "lower": low, "upper": high}, args.out)
        return 0
    raise SystemExit2(f"unknown bounds evaluator {name!r}")


def cmd_waring(args) -> int:
    if args.mode == "verify":
        if args.d not in (None, 4):
            raise SystemExit2("the uniform-cap verification is specific to d = 4")
        report = waring_mod.verify_g4(args.limit)
        _dump_json(report, args.out)
        return 0 if report.within_19 else INVARIANT_VIOLATION
    if args.k is None or args.d is None:
        raise SystemExit2("waring requires --k and --d (or the 'verify' mode)")
    decomposition = waring_mod.min_powers(args.k, args.d)
    _dump_json(decomposition, args.out)
    return 0


def cmd_genfun(args) -> int:
    with open(args.file) as handle:
        data = json.load(handle)
    sequence = genfun_mod.RationalSequence.from_values(data["terms"])
    verdict = genfun_mod.detect_linear_recurrence(sequence, max_order=args.max_order)
    _dump_json(verdict, args.out)
    return 0


def cmd_corpus(args) -> int:
    entries = corpus_mod.corpus_list()
    if args.format == "json":
        _dump_json([dataclasses.asdict(e) for e in entries], args.out)
    else:
        _dump_csv(
            _provenance(args),
            ("name", "kind", "provenance"),
            [(e.name, e.kind, f'"{e.provenance}"') for e in entries],
            args.out,
        )
    return 0


# ---------------------------------------------------------------------------
# experiment sweeps


def _run_sweep_file(spec_path: str, args) -> int:
    """One output row per grid point; per-row failures never abort the run."""
    try:
        with open(spec_path) as handle:
            spec = json.load(handle)
        command = spec["command"]
        grid = spec["grid"]
        if not grid or any(not values for values in grid.values()):
            raise ValueError("empty grid")
    except (OSError, KeyError, ValueError, json.JSONDecodeError) as exc:
        raise SystemExit2(f"unreadable sweep spec {spec_path}: {exc}") from exc
    seed = spec.get("seed", args.seed)
    out_path = spec.get("out", args.out)
    if spec.get("constants"):
        args = argparse.Namespace(**{**vars(args), "constants": spec["constants"]})
    keys = sorted(grid)
    points: list[dict] = [{}]
    for key in keys:
        points = [dict(p, **{key: v}) for p in points for v in grid[key]]
    rows = []
    warnings = 0
    for point in points:
        try:
            result = _sweep_eval(command, point, args)
            rows.append([*(point[k] for k in keys), _sweep_render(result), ""])
        except Exception as exc:  # per-row failure becomes a row-level error field
            warnings += 1
            rows.append([*(point[k] for k in keys), "", f'"{exc}"'])
    comment = f"systolic {__version__} seed={seed} command={command} " + (
        f"constants={args.constants}" if args.constants else "constants=defaults(illustrative)"
    )
    _dump_csv(comment, (*keys, "result", "error"), rows, out_path)
    if warnings:
        sys.stderr.write(f"sweep finished with {warnings} row errors\n")
    return 0


def _sweep_eval(command: str, point: dict, args):
    if command in _BOUND_EVALUATORS or command in (
        "surface-kappa", "abelian-kappa", "group-count", "sandwich"
    ):
        constants = _load_constants(args)
        value = point["value"]
        if command in _BOUND_EVALUATORS:
            holder = argparse.Namespace(value=value)
            return _BOUND_EVALUATORS[command](holder, constants)
        if command == "surface-kappa":
            low, high = bounds_mod.surface_kappa_bounds(int(value))
            return {"lower": str(low), "upper": high}
        if command == "abelian-kappa":
            low, high = bounds_mod.abelian_kappa_bounds(int(value))
            return {"lower": low, "upper": high}
        if command == "sandwich":
            report = bounds_mod.sandwich(value, constants)
            return {
                "lower": report.lower_bounds[0][1],
                "upper": report.upper_bounds[0][1],
                "consistent": report.consistent,
            }
        report = bounds_mod.group_count_bound(int(value))
        return {"exponent": str(report.exponent), "chain_ok": report.chain_ok}
    if command == "homology":
        complex_ = corpus_mod.corpus_complex(point["name"])
        summary = homology(complex_)
        return {"betti": list(summary.betti)}
    if command == "check-torsion-bound":
        complex_ = corpus_mod.corpus_complex(point["name"])
        report = check_s2_torsion_bound(complex_)
        return {"s2": report.s2, "torsion": report.torsion_order, "holds": report.holds}
    if command == "sleeve-volume":
        from .sleeves import sleeve_volume_single

        model = CubicalModel(point["m"], point["c"])
        return str(sleeve_volume_single(model, Fraction(point["eps"])))
    if command == "multiple-class-bound":
        from .sleeves import multiple_class_bound

        return multiple_class_bound(point["k"], point["C"])
    if command == "waring":
        return waring_mod.min_count(point["k"], point["d"])
    raise ValueError(f"sweep does not support command {command!r}")


def _sweep_render(result) -> str:
    if isinstance(result, dict):
        return json.dumps(_jsonable(result), separators=(";", ":")).replace(",", ";")
    if isinstance(result, float):
        return repr(result)
    return str(result)


def cmd_sweep(args) -> int:
    return _run_sweep_file(args.spec, args)


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--constants", default=None, help="JSON file of bound constants")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", default=None, help="output file (default stdout)")
    common.add_argument("--format", choices=("csv", "json"), default="json")

    parser = argparse.ArgumentParser(
        prog="systolic",
        description="exact homology, girth graphs, and systolic bound evaluators",
        parents=[common],
    )
    parser.add_argument("--version", action="version", version=f"systolic {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("homology", parents=[common], help="Betti numbers and torsion")
    p.add_argument("inputs", nargs="*", help="complex JSON files")
    p.add_argument("--corpus", action="store_true", help="run on the built-in corpus")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("check-torsion-bound", parents=[common], help="s2 vs 2 log3 |Tors H1|")
    p.add_argument("inputs", nargs="*")
    p.add_argument("--corpus", action="store_true")
    p.set_defaults(func=cmd_check_torsion_bound)

    p = sub.add_parser("abelianize", parents=[common], help="abelian invariants of a presentation")
    p.add_argument("presentation", help="e.g. 'a,b,c ; [a,b]c^-5, [a,c], [b,c]'")
    p.set_defaults(func=cmd_abelianize)

    p = sub.add_parser("girth", parents=[common], help="girth and optional metric systole")
    p.add_argument("graph", help="graph JSON file")
    p.add_argument("--edge-length", default=None, help="uniform rational edge length, e.g. 1/8")
    p.set_defaults(func=cmd_girth)

    p = sub.add_parser("build-graph", parents=[common], help="regular graph of prescribed girth")
    p.add_argument("--c", type=int, required=True, help="degree")
    p.add_argument("--girth", type=int, required=True)
    p.add_argument("--vertices", type=int, required=True)
    p.set_defaults(func=cmd_build_graph)

    p = sub.add_parser("sleeve", parents=[common], help="assemble sleeves over a graph")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--eps", required=True, help="rational sleeve thickness, e.g. 1/10")
    p.add_argument("--graph", required=True)
    p.set_defaults(func=cmd_sleeve)

    p = sub.add_parser("bound-multiple", parents=[common], help="C k/ln(1+k) over a k grid")
    p.add_argument("--k", required=True, help="'1,2,3' or 'start:stop:step'")
    p.add_argument("--constant", "--C", dest="constant", type=float, required=True)
    p.set_defaults(func=cmd_bound_multiple)

    p = sub.add_parser("bounds", parents=[common], help="closed-form bound evaluators")
    p.add_argument("name", help="evaluator name or 'sweep'")
    p.add_argument("--value", type=float, default=None)
    p.add_argument("--spec", default=None, help="sweep spec JSON (with name=sweep)")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("waring", parents=[common], help="minimal sums of d-th powers")
    p.add_argument("mode", nargs="?", choices=("verify",), default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--limit", type=int, default=100_000)
    p.set_defaults(func=cmd_waring)

    p = sub.add_parser("genfun", parents=[common], help="recurrence detection")
    p.add_argument("mode", choices=("detect",))
    p.add_argument("--file", required=True, help='sequence JSON: {"terms": ["3/2", ...]}')
    p.add_argument("--max-order", type=int, default=16)
    p.set_defaults(func=cmd_genfun)

    p = sub.add_parser("corpus", parents=[common], help="list built-in complexes and graphs")
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("sweep", parents=[common], help="grid sweep from a spec file")
    p.add_argument("--spec", required=True)
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit2 as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE_ERROR
    except (OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE_ERROR
    except (ValueError, KeyError, GirthSearchError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
