"""Command line entry point: ``spexlab <subcommand> ...``.

Exit codes: 0 success, 1 failed verification, 2 usage or input error,
3 capacity exceeded.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import __version__
from .catalog import parse_graph
from .census import (
    DEFAULT_CAP,
    CensusRecord,
    cache_dir,
    consistency_check,
    family_key,
    load_or_run,
)
from .criticality import criticality_order, matching_good_desk_check, q_color_critical
from .decomposition import (
    b_family,
    beta_gamma,
    decomposition_family,
    q_value,
    smallest_matching_member,
)
from .errors import CapacityError, InputError, SpexError
from .graph6 import read_stream
from .jsonio import digest, dumps
from .report import render, rows
from .spectral import DEFAULT_TOL, compare_radius_exact, spectral_radius

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _workers(value: int | None) -> int:
    if value is not None:
        return value
    env = os.environ.get("SPEXLAB_WORKERS")
    try:
        return max(1, int(env)) if env else 1
    except ValueError:
        raise InputError(f"SPEXLAB_WORKERS must be an integer, got {env!r}") from None


def _family(specs: list[str]) -> list:
    """Graphs from names/graph6 strings; ``@path`` reads a graph6 stream."""
    out = []
    for s in specs:
        if s.startswith("@"):
            try:
                with open(s[1:], encoding="ascii") as fh:
                    out.extend(read_stream(fh))
            except OSError as exc:
                raise InputError(f"cannot read {s[1:]}: {exc}") from None
        else:
            out.append(parse_graph(s))
    if not out:
        raise InputError("empty forbidden family")
    return out


def _doc(kind: str, body: dict) -> dict:
    return {"schema": f"spexlab/{kind}/1", "version": __version__, **body}


def cmd_construct(args) -> tuple[dict, int]:
    g = parse_graph(args.graph)
    from .canonical import canonical_form

    return _doc("construct", {
        "input": args.graph, "n": g.n, "edges": g.num_edges(),
        "graph6": canonical_form(g).decode("ascii"),
    }), EXIT_OK


def cmd_decomp(args) -> tuple[dict, int]:
    fam = _family(args.forbid)
    df = decomposition_family(fam, t_override=args.t)
    try:
        beta, gamma = beta_gamma(df)
        bfam = [m.to_graph6() for m in b_family(df)]
    except RuntimeError:
        beta, gamma, bfam = None, None, None
    q = q_value(fam[0]) if len(fam) == 1 else None
    return _doc("decomp", {
        "forbidden": family_key(fam), "p": df.p, "t_used": df.t_used,
        "members": [m.to_graph6() for m in df.members],
        "beta": beta, "gamma": gamma, "b_family": bfam, "q": q,
        "matching": smallest_matching_member(df),
    }), EXIT_OK


def cmd_critical(args) -> tuple[dict, int]:
    fam = _family(args.forbid)
    if args.order:
        q, rep = criticality_order(fam)
        body = {"order": q, "report": rep.to_dict() if rep else None}
    else:
        body = {"report": q_color_critical(fam, args.q).to_dict()}
    return _doc("critical", {"forbidden": family_key(fam), **body}), EXIT_OK


def cmd_spectral(args) -> tuple[dict | str, int]:
    if args.exact_compare:
        g1, g2 = (parse_graph(s) for s in args.exact_compare)
        return {-1: "LT", 0: "EQ", 1: "GT"}[compare_radius_exact(g1, g2, args.tol)] + "\n", EXIT_OK
    if not args.graph:
        raise InputError("spectral needs a graph or --exact-compare G1 G2")
    prof = spectral_radius(parse_graph(args.graph), args.tol)
    return _doc("spectral", {
        "rho": prof.rho, "residual": prof.residual, "iterations": prof.iterations,
        "perron": list(prof.perron), "tol": args.tol,
    }), EXIT_OK


def _census(args, n: int, mode: str) -> CensusRecord:
    fam = _family(args.forbid)
    return load_or_run(n, fam, mode=mode, tol=args.tol, workers=_workers(args.workers),
                       cache=cache_dir(args.cache), cap=args.cap)


def cmd_census(args) -> tuple[dict, int]:
    rec = _census(args, args.n, args.mode)
    return rec.to_dict(), EXIT_OK


def cmd_verify(args) -> tuple[dict, int]:
    fam = _family(args.forbid)
    rec = _census(args, args.n, "full" if args.n <= 8 else "maximal")
    consistent = consistency_check(rec)
    mg = None
    if len(fam) == 1:
        mg = matching_good_desk_check(fam[0], args.n, args.budget, workers=_workers(args.workers)).to_dict()
    failed = consistent is False or (args.strict and mg is not None and not mg["passed"])
    lines = [
        f"forbidden   {','.join(rec.forbidden)}",
        f"n           {rec.n} ({rec.mode})",
        f"ex          {rec.ex}  |EX| = {len(rec.ex_graphs)}",
        f"spex        {rec.spex:.12f}  |SPEX| = {len(rec.spex_graphs)}",
        f"consistent  {consistent}",
    ]
    if mg is not None:
        lines.append(f"matching    member={mg['has_matching_member']} apex_ok={mg['apex_ok']} "
                     f"min_edits={mg['min_edits']} budget={mg['edit_budget']} ({mg['note']})")
    print("\n".join(lines), file=sys.stderr)
    return _doc("verify", {"census": rec.to_dict(), "consistent": consistent, "matching_good": mg}), \
        EXIT_FAIL if failed else EXIT_OK


def _load_records(paths: list[str]) -> list[CensusRecord]:
    files: list[Path] = []
    for p in map(Path, paths):
        files.extend(sorted(p.glob("census-*.json")) if p.is_dir() else [p])
    recs = []
    for f in files:
        try:
            recs.append(CensusRecord.from_dict(json.loads(f.read_text(encoding="utf-8"))))
        except (OSError, json.JSONDecodeError, KeyError) as exc:
            raise InputError(f"cannot read census record {f}: {exc}") from None
    return recs


def cmd_report(args) -> tuple[dict, int]:
    table = rows(_load_records(args.records))
    print(render(table), end="", file=sys.stderr if args.json else sys.stdout)
    bad = any(r["consistent"] is False for r in table)
    return _doc("report", {"rows": table}) if args.json else None, EXIT_FAIL if args.strict and bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="spexlab", description="Extremal and spectral extremal graph computations.")
    ap.add_argument("--version", action="version", version=__version__)
    ap.add_argument("-o", "--output", help="write the result here instead of stdout")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("construct", help="build a named graph and print its canonical graph6")
    p.add_argument("graph")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("decomp", help="decomposition family and covering parameters")
    p.add_argument("--forbid", action="append", required=True)
    p.add_argument("--t", type=int, help="blow-up constant (default max |H|)")
    p.set_defaults(func=cmd_decomp)

    p = sub.add_parser("critical", help="q-colour-criticality")
    p.add_argument("--forbid", action="append", required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--q", type=int)
    g.add_argument("--order", action="store_true")
    p.set_defaults(func=cmd_critical)

    p = sub.add_parser("spectral", help="spectral radius and Perron vector")
    p.add_argument("graph", nargs="?")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--exact-compare", nargs=2, metavar=("G1", "G2"))
    p.set_defaults(func=cmd_spectral)

    for name, func, hlp in (("census", cmd_census, "ex/EX and spex/SPEX by exhaustive search"),
                            ("verify", cmd_verify, "consistency and matching-good checks at one n")):
        p = sub.add_parser(name, help=hlp)
        p.add_argument("--forbid", action="append", required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--tol", type=float, default=DEFAULT_TOL)
        p.add_argument("--workers", type=int, help="worker processes (env SPEXLAB_WORKERS)")
        p.add_argument("--cache", help="cache directory (env SPEXLAB_CACHE)")
        p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest n allowed")
        p.set_defaults(func=func)
        if name == "census":
            p.add_argument("--mode", choices=("full", "maximal"), default="full")
        else:
            p.add_argument("--budget", type=int, default=0, help="edit budget for the matching-good check")
            p.add_argument("--strict", action="store_true", help="exit 1 when the matching-good check fails")

    p = sub.add_parser("report", help="summary table over census record files")
    p.add_argument("records", nargs="*", help="record files or cache directories")
    p.add_argument("--json", action="store_true")
    p.add_argument("--strict", action="store_true", help="exit 1 if any row is inconsistent")
    p.set_defaults(func=cmd_report)
    return ap


def _manifest(args, argv: list[str], text: str, elapsed: float) -> None:
    directory = cache_dir(getattr(args, "cache", None))
    if directory is None:
        return
    params = {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "output")}
    entry = {
        "schema": "spexlab/manifest/1",
        "subcommand": args.command,
        "parameters": params,
        "inputs": family_key(_family(args.forbid)) if getattr(args, "forbid", None) else [],
        "version": __version__,
        "elapsed_s": elapsed,
        "output_sha256": digest(text),
    }
    directory.mkdir(parents=True, exist_ok=True)
    with open(directory / "manifests.jsonl", "a", encoding="utf-8") as fh:
        fh.write(dumps(entry, indent=None))


def run(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    t0 = time.perf_counter()
    try:
        result, code = args.func(args)
    except CapacityError as exc:
        print(f"spexlab: capacity exceeded: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except InputError as exc:
        print(f"spexlab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SpexError as exc:
        print(f"spexlab: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if result is None:
        return code
    text = result if isinstance(result, str) else dumps(result)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    _manifest(args, argv, text, time.perf_counter() - t0)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
