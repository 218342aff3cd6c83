"""Command-line interface: JSON in, JSON out.

Subcommands read a JSON document from ``--input`` (or stdin) and write JSON to
``--output`` (or stdout), so they compose in pipelines::

    excyclic gen --mode vandermonde --nodes 1,2,3,4,5,6 --rows 4 | excyclic hull --k 2

Exit codes: 0 success (PASS or FINDING), 1 an experiment FAILed, 2 usage or
input error, 3 internal error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Any

from . import amplituhedron as amp
from . import matroid as mt
from .experiments import REGISTRY, UnknownExperiment, run_experiment
from .polycone import f_vector
from .rational import DimensionError, RatMatrix
from .schubert import classify_facets, exterior_cone
from .twistor import wedge_power_matrix
from .zmatrix import NotPositiveError, PositiveMatrix, random_positive, twist, vandermonde

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class InputError(Exception):
    """Bad user input; reported with exit code 2."""


# ---------------------------------------------------------------------------
# JSON plumbing
# ---------------------------------------------------------------------------


def _default(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (set, frozenset, tuple)):
        return list(obj)
    raise TypeError(f"not JSON serializable: {type(obj).__name__}")


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, default=_default)


def _read_json(path: str | None) -> Any:
    text = sys.stdin.read() if path in (None, "-") else open(path, encoding="utf-8").read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON at byte offset {len(text[: exc.pos].encode())}: {exc.msg}") from exc


def _write(args, obj: Any) -> None:
    text = dumps(obj) + "\n"
    if args.output in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)


def _matrix_from(obj: Any) -> RatMatrix:
    if isinstance(obj, dict) and "entries" not in obj:
        for key in ("matrix", "z", "Z"):
            if key in obj:
                return _matrix_from(obj[key])
    if isinstance(obj, list):
        return RatMatrix([[Fraction(x) if isinstance(x, str) else x for x in r] for r in obj])
    if isinstance(obj, dict) and "entries" in obj:
        return RatMatrix.from_json(obj)
    raise InputError("expected a matrix: a list of rows or an object with 'entries'")


def _positive(obj: Any) -> PositiveMatrix:
    return PositiveMatrix(_matrix_from(obj))


def _rational_list(text: str) -> list[Fraction]:
    return [Fraction(x) for x in text.split(",") if x.strip()]


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_gen(args) -> int:
    if args.mode == "vandermonde":
        if not args.nodes:
            raise InputError("--nodes is required for vandermonde mode")
        z = vandermonde(_rational_list(args.nodes), args.rows)
    else:
        if args.n is None:
            raise InputError("--n is required for random mode")
        z = random_positive(args.rows, args.n, args.seed)
    _write(args, z.to_json())
    return EXIT_OK


def cmd_wedge(args) -> int:
    z = _matrix_from(_read_json(args.input))
    _write(args, wedge_power_matrix(z, args.k).to_json())
    return EXIT_OK


def cmd_hull(args) -> int:
    z = _positive(_read_json(args.input))
    cone = exterior_cone(z, args.k)
    out = {"f_vector": f_vector(cone), "facets": len(cone.facets), "rays": len(cone.rays)}
    if args.full:
        out["cone"] = cone.to_json()
    print(f"f-vector {out['f_vector']}", file=sys.stderr)
    _write(args, out)
    return EXIT_OK


def cmd_matroid(args) -> int:
    z = _matrix_from(_read_json(args.input))
    m = mt.matroid_of(z, args.k)
    if args.enum == "bases":
        items = mt.bases(m, guard=args.guard)
    elif args.enum == "circuits":
        items = mt.circuits(m, args.max_size or m.rank_total + 1)
    else:
        items = mt.hyperplane_flats(m, guard=max(args.guard, 40))
    out = {"enum": args.enum, "count": len(items), "rank": m.rank_total}
    if args.list:
        out["items"] = [[list(e) for e in it] for it in items]
    print(f"{args.enum}: {len(items)}", file=sys.stderr)
    _write(args, out)
    return EXIT_OK


def cmd_schubert(args) -> int:
    z = _positive(_read_json(args.input))
    classes = classify_facets(z, args.k)
    kinds: dict[str, int] = {}
    for f in classes:
        kinds[f.kind.value] = kinds.get(f.kind.value, 0) + 1
    _write(args, {"counts": kinds, "facets": [f.to_json() for f in classes]})
    return EXIT_OK


def cmd_twist(args) -> int:
    z = _positive(_read_json(args.input))
    _write(args, twist(z, args.k, args.m).to_json())
    return EXIT_OK


def cmd_amp(args) -> int:
    doc = _read_json(args.input)
    if args.action == "sample":
        z = _positive(doc)
        y = amp.sample_amplituhedron(z, args.k, args.seed)
        _write(args, y.to_json())
        return EXIT_OK
    if args.action == "verify-equivalence":
        z = _positive(doc)
        rep = amp.oracle_equivalence(z, args.trials, args.seed)
        _write(args, rep.to_json())
        return EXIT_OK if rep.disagreements == 0 else EXIT_FAIL
    # member
    if not isinstance(doc, dict) or "y" not in doc or not any(k in doc for k in ("z", "Z", "matrix")):
        raise InputError("member expects an object with keys 'z' and 'y'")
    z = _positive(doc.get("z", doc.get("Z", doc.get("matrix"))))
    y = amp.GrassmannPoint.from_rows(_matrix_from(doc["y"]))
    if args.method == "bar":
        verdict: Any = amp.member_bar(y, z)
    elif args.method == "cone":
        verdict = amp.member_cone(y, z)
    elif args.method == "signflip":
        verdict = amp.member_signflip(y, z, args.k).value
    else:
        verdict = amp.member_dual(y, z).value
    _write(args, {"method": args.method, "member": verdict})
    return EXIT_OK


def _experiment_options(args) -> dict:
    opts: dict[str, Any] = {}
    if args.n is not None:
        opts["ns"] = (args.n,)
    if args.seed is not None:
        opts["seed"] = args.seed
        opts["seeds"] = (args.seed,)
    if args.trials is not None:
        opts["trials"] = args.trials
    return opts


def _run_one(name: str, opts: dict) -> dict:
    return run_experiment(name, **opts).to_json()


def cmd_verify(args) -> int:
    names = list(REGISTRY) if args.name == "all" else [args.name]
    opts = _experiment_options(args)
    if args.parallel and len(names) > 1:
        workers = int(os.environ.get("EXC_THREADS", os.cpu_count() or 1))
        with ProcessPoolExecutor(max_workers=max(1, workers)) as pool:
            reports = list(pool.map(_run_one, names, [opts] * len(names)))
    else:
        reports = [_run_one(n, opts) for n in names]
    _write(args, reports[0] if len(reports) == 1 else reports)
    return EXIT_FAIL if any(r["status"] == "FAIL" for r in reports) else EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="excyclic", description="Exterior cyclic polytopes and amplituhedra.")
    sub = p.add_subparsers(dest="command", required=True)

    def io(sp):
        sp.add_argument("--input", help="JSON input file (default: stdin)")
        sp.add_argument("--output", help="JSON output file (default: stdout)")

    g = sub.add_parser("gen", help="generate a positive matrix")
    g.add_argument("--mode", choices=["vandermonde", "random"], default="random")
    g.add_argument("--nodes", help="comma-separated increasing nodes (rationals allowed)")
    g.add_argument("--rows", type=int, default=4)
    g.add_argument("--n", type=int)
    g.add_argument("--seed", type=int, default=1)
    g.add_argument("--output")
    g.set_defaults(func=cmd_gen)

    w = sub.add_parser("wedge", help="k-th wedge power of a matrix")
    w.add_argument("--k", type=int, default=2)
    io(w)
    w.set_defaults(func=cmd_wedge)

    h = sub.add_parser("hull", help="exterior cyclic polytope: facets and f-vector")
    h.add_argument("--k", type=int, default=2)
    h.add_argument("--full", action="store_true", help="include rays, facets and incidences")
    io(h)
    h.set_defaults(func=cmd_hull)

    m = sub.add_parser("matroid", help="bases, circuits or hyperplanes of the wedge power matroid")
    m.add_argument("--k", type=int, default=2)
    m.add_argument("--enum", choices=["bases", "circuits", "hyperplanes"], default="bases")
    m.add_argument("--max-size", type=int)
    m.add_argument("--guard", type=int, default=20)
    m.add_argument("--list", action="store_true", help="list the sets, not only the count")
    io(m)
    m.set_defaults(func=cmd_matroid)

    s = sub.add_parser("schubert", help="classify facets as Schubert or not")
    s.add_argument("--k", type=int, default=2)
    io(s)
    s.set_defaults(func=cmd_schubert)

    t = sub.add_parser("twist", help="the twist of a positive matrix")
    t.add_argument("--k", type=int, default=2)
    t.add_argument("--m", type=int, default=2)
    io(t)
    t.set_defaults(func=cmd_twist)

    a = sub.add_parser("amp", help="amplituhedron membership and sampling")
    a.add_argument("action", choices=["member", "sample", "verify-equivalence"])
    a.add_argument("--method", choices=["bar", "signflip", "dual", "cone"], default="bar")
    a.add_argument("--k", type=int, default=2)
    a.add_argument("--seed", type=int, default=1)
    a.add_argument("--trials", type=int, default=10000)
    io(a)
    a.set_defaults(func=cmd_amp)

    v = sub.add_parser("verify", help="run a named experiment (or 'all')")
    v.add_argument("name", help="experiment name: " + ", ".join(REGISTRY) + ", or all")
    v.add_argument("--n", type=int)
    v.add_argument("--seed", type=int)
    v.add_argument("--trials", type=int)
    v.add_argument("--parallel", action="store_true", help="run experiments in worker processes")
    v.add_argument("--output")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnknownExperiment as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    except NotPositiveError as exc:
        print(f"domain error: matrix is not positive; {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InputError, DimensionError, ValueError, KeyError, TypeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # pragma: no cover - reported rather than hidden
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
