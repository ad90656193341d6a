"""Command-line entry point.

Exit codes: 0 success, 1 coloring is not good, 2 invalid input,
3 inconclusive (budget exhausted), 4 property violation found.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from pathlib import Path

from . import graph as gc
from .arrowing import (
    INCONCLUSIVE,
    Inconclusive,
    SearchBudget,
    append_regression_row,
    arrows,
    compute_ramsey,
    compute_star_critical,
)
from .coloring import HostSpec, TwoColoring, load_coloring, save_coloring, verify_coloring
from .constructions import (
    ConstructionParams,
    FormulaRangeError,
    build_ramsey_critical,
    build_star_critical,
    center_degree,
    ramsey_formula_cycle_clique,
    star_critical_formula,
)
from .graph6 import from_graph6, to_dot, to_graph6
from .lemmas import (
    NearCycleInstance,
    check_lemma1,
    check_lemma3,
    check_lemma4,
    generate_lemma4_family,
    run_lemma3_suite,
)

EXIT_OK = 0
EXIT_NOT_GOOD = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3
EXIT_VIOLATION = 4


class UsageError(Exception):
    pass


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", type=Path, default=None, help="directory for artifacts and runs.jsonl")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--deterministic", action="store_true", help="force sequential search order")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget-nodes", type=int, default=10**8)
    p.add_argument("--budget-seconds", type=float, default=300.0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ramsey-star", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build and verify an extremal colouring")
    p.add_argument("kind", choices=["critical", "star-critical"])
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    _common(p)

    p = sub.add_parser("verify", help="verify a colouring file or graph6 pair")
    p.add_argument("coloring", nargs="?", type=Path)
    p.add_argument("--g6", nargs=2, metavar=("HOST", "RED"))
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--path", action="store_true", help="red target is the path on n vertices")
    _common(p)

    p = sub.add_parser("arrows", help="decide host -> (C_n, K_m)")
    p.add_argument("--complete", type=int, required=True, metavar="N")
    p.add_argument("--star-k", type=int, default=0, metavar="K", help="delete K star edges at vertex N-1")
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("-n", type=int)
    target.add_argument("--path", type=int, metavar="K")
    p.add_argument("-m", type=int, required=True)
    _common(p)

    p = sub.add_parser("ramsey", help="compute r(C_n, K_m) or r(P_k, K_m) by search")
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--cycle", type=int, metavar="N")
    target.add_argument("--path", type=int, metavar="K")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--table", type=Path, default=None, help="regression CSV (default OUT/regression.csv)")
    _common(p)

    p = sub.add_parser("star", help="compute r_*(C_n, K_m) by search")
    p.add_argument("--cycle", type=int, required=True, metavar="N")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--r", type=int, default=None, help="known r(C_n, K_m)")
    p.add_argument("--table", type=Path, default=None)
    _common(p)

    p = sub.add_parser("check-lemma", help="run a lemma checker")
    p.add_argument("which", choices=["1", "3", "4"])
    p.add_argument("--graph6", action="append", default=[], help="graph6 input (repeatable)")
    p.add_argument("--input", type=Path, help="file with one graph6 string per line")
    p.add_argument("--generate", action="store_true")
    p.add_argument("--count", type=int, default=None)
    p.add_argument("-n", type=int)
    p.add_argument("-m", type=int)
    p.add_argument("--r", type=int, default=None, help="r(C_n, K_m) for lemma 1")
    _common(p)

    p = sub.add_parser("export-dot", help="write DOT for a colouring or graph")
    p.add_argument("coloring", nargs="?", type=Path)
    p.add_argument("--graph6")
    _common(p)
    return parser


def _budget(args) -> SearchBudget:
    return SearchBudget(
        max_nodes=args.budget_nodes,
        max_seconds=args.budget_seconds,
        deterministic=args.deterministic or args.workers <= 1,
    )


def _artifact(args, name: str) -> Path | None:
    if args.out is None:
        return None
    args.out.mkdir(parents=True, exist_ok=True)
    return args.out / name


def _construct(args, artifacts: list[str]) -> tuple[dict, int]:
    try:
        p = ConstructionParams(args.n, args.m)
        c = build_star_critical(p) if args.kind == "star-critical" else build_ramsey_critical(p)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    verdict = verify_coloring(c, p.n, p.m, node_budget=args.budget_nodes)
    outcome = {
        "kind": args.kind,
        "n": p.n,
        "m": p.m,
        "host": {"order": c.host.order, "star_k": c.host.star_k, "center": c.host.center},
        "order": c.host.order,
        "star_k": c.host.star_k,
        "center_degree": center_degree(c),
        "red_edges": c.red.num_edges,
        "verdict": verdict.to_dict(),
    }
    if args.kind == "star-critical":
        outcome["lower_bound"] = center_degree(c) + 1 if verdict.good else None
        try:
            outcome["formula"] = star_critical_formula(p).value
        except FormulaRangeError:
            outcome["formula"] = None
    stem = f"{args.kind}_n{p.n}_m{p.m}"
    path = _artifact(args, stem + ".json")
    if path is not None:
        save_coloring(c, path)
        g6 = _artifact(args, stem + ".g6")
        g6.write_text("\n".join(c.to_graph6_pair()) + "\n")
        report = _artifact(args, stem + "_report.json")
        report.write_text(json.dumps(outcome, indent=1) + "\n")
        artifacts += [str(path), str(g6), str(report)]
    return outcome, EXIT_OK if verdict.good else EXIT_VIOLATION


def _load(args) -> TwoColoring:
    if getattr(args, "g6", None):
        try:
            return TwoColoring.from_graph6_pair(*args.g6)
        except ValueError as exc:
            raise UsageError(f"bad graph6 pair: {exc}") from exc
    if args.coloring is None:
        raise UsageError("give a colouring file or --g6 HOST RED")
    try:
        return load_coloring(args.coloring)
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"cannot read colouring: {exc}") from exc


def _verify(args, artifacts: list[str]) -> tuple[dict, int]:
    c = _load(args)
    try:
        verdict = verify_coloring(c, args.n, args.m, "path" if args.path else "cycle", args.budget_nodes)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return verdict.to_dict(), EXIT_OK if verdict.good else EXIT_NOT_GOOD


def _host_from_args(order: int, star_k: int) -> HostSpec:
    if star_k == 0:
        return HostSpec.complete(order)
    return HostSpec.center_joined(order - 1, order - 1 - star_k)


def _arrows(args, artifacts: list[str]) -> tuple[dict, int]:
    budget = _budget(args)
    try:
        host = _host_from_args(args.complete, args.star_k)
        kind, size = ("path", args.path) if args.path is not None else ("cycle", args.n)
        verdict = arrows(host, size, args.m, budget, kind, workers=args.workers)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    ref = None
    if verdict.witness is not None:
        path = _artifact(args, f"witness_N{host.order}_k{host.star_k}_{kind}{size}_m{args.m}.json")
        if path is not None:
            save_coloring(verdict.witness, path)
            ref = str(path)
            artifacts.append(ref)
    record = verdict.to_record(budget, ref)
    if verdict.witness is not None and ref is None:
        record["witness"] = verdict.witness.to_dict()
    return record, EXIT_INCONCLUSIVE if verdict.status == INCONCLUSIVE else EXIT_OK


def _table(args) -> Path | None:
    if args.table is not None:
        return args.table
    return _artifact(args, "regression.csv")


def _ramsey(args, artifacts: list[str]) -> tuple[dict, int]:
    budget = _budget(args)
    target = ("path", args.path) if args.path is not None else ("cycle", args.cycle)
    try:
        value = compute_ramsey(target, args.m, budget, workers=args.workers)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    except Inconclusive as exc:
        return {"status": INCONCLUSIVE, "reason": str(exc)}, EXIT_INCONCLUSIVE
    table = _table(args)
    if table is not None:
        append_regression_row(table, value)
        artifacts.append(str(table))
    outcome = {
        "kind": value.kind,
        "red_size": value.params[0],
        "m": value.params[1],
        "value": value.value,
        "provenance": value.provenance,
        "nodes": value.nodes,
        "scan": [list(s) for s in value.scan],
        "critical_coloring": value.witness.to_dict() if value.witness else None,
    }
    return outcome, EXIT_OK


def _star(args, artifacts: list[str]) -> tuple[dict, int]:
    budget = _budget(args)
    try:
        value = compute_star_critical(args.cycle, args.m, budget, r=args.r, workers=args.workers)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    except Inconclusive as exc:
        return {"status": INCONCLUSIVE, "reason": str(exc)}, EXIT_INCONCLUSIVE
    except RuntimeError as exc:
        return {"status": "violation", "reason": str(exc)}, EXIT_VIOLATION
    table = _table(args)
    if table is not None:
        append_regression_row(table, value)
        artifacts.append(str(table))
    outcome = {
        "kind": value.kind,
        "n": args.cycle,
        "m": args.m,
        "value": value.value,
        "provenance": value.provenance,
        "nodes": value.nodes,
        "scan": [list(s) for s in value.scan],
    }
    return outcome, EXIT_OK


def _input_graphs(args) -> list[gc.Graph]:
    texts = list(args.graph6)
    if args.input is not None:
        texts += [line.strip() for line in args.input.read_text().splitlines() if line.strip()]
    try:
        return [from_graph6(t) for t in texts]
    except ValueError as exc:
        raise UsageError(f"bad graph6 input: {exc}") from exc


def _lemma_exit(reports: list[dict]) -> int:
    if any(r.get("conclusion_holds") is False and r.get("hypotheses_hold") for r in reports):
        return EXIT_VIOLATION
    if any(r.get("inconclusive") for r in reports):
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _check_lemma(args, artifacts: list[str]) -> tuple[dict, int]:
    which = args.which
    if which == "3" and args.generate:
        suite = run_lemma3_suite(args.count or 1000, args.seed, args.workers)
        outcome = suite.summary() | {"counterexamples": [r["counterexample"] for r in suite.violations]}
        return outcome, EXIT_VIOLATION if suite.violations else EXIT_OK
    if args.n is None:
        raise UsageError("-n is required")
    if which in ("1", "4") and args.m is None:
        raise UsageError("-m is required")
    if args.generate:
        rng = random.Random(args.seed)
        if which == "1":
            graphs = []
            for _ in range(args.count or 20):
                order = rng.randint(4, 9)
                p = rng.random()
                graphs.append(gc.Graph(order, [(i, j) for i in range(order) for j in range(i + 1, order) if rng.random() < p]))
        else:
            try:
                graphs = generate_lemma4_family(ConstructionParams(args.n, args.m), args.seed, args.count or 1)
            except ValueError as exc:
                raise UsageError(str(exc)) from exc
    else:
        graphs = _input_graphs(args)
        if not graphs:
            raise UsageError("give --graph6/--input or --generate")

    reports = []
    for g in graphs:
        if which == "1":
            r_value = args.r
            if r_value is None:
                try:
                    r_value = ramsey_formula_cycle_clique(ConstructionParams(args.n, args.m)).value
                except FormulaRangeError as exc:
                    raise UsageError(f"{exc}; pass --r") from exc
            rep = check_lemma1(g, args.n, args.m, r_value)
        elif which == "3":
            if args.n - 1 < 3:
                raise UsageError("-n must be at least 4")
            cyc = gc.find_cycle(g, args.n - 1) if args.n - 1 <= g.order else None
            if cyc is None:
                rep_d = {"lemma": "3", "hypotheses_hold": False, "conclusion_holds": None,
                         "details": {"failed_hypothesis": "no C_{n-1}"}, "graph6": to_graph6(g)}
                reports.append(rep_d)
                continue
            rep = check_lemma3(NearCycleInstance(g, cyc), args.m)
        else:
            rep = check_lemma4(g, args.n, args.m, args.budget_nodes)
        reports.append(rep.to_dict() | {"graph6": to_graph6(g)})
    outcome = {"lemma": which, "instances": len(reports), "reports": reports}
    if len(reports) == 1:
        outcome.update({k: reports[0].get(k) for k in ("hypotheses_hold", "conclusion_holds")})
    else:
        outcome["conclusion_holds"] = all(
            r.get("conclusion_holds") is not False for r in reports if r.get("hypotheses_hold")
        )
    return outcome, _lemma_exit(reports)


def _export_dot(args, artifacts: list[str]) -> tuple[dict, int]:
    if args.graph6:
        try:
            text = to_dot(from_graph6(args.graph6))
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    else:
        if args.coloring is None:
            raise UsageError("give a colouring file or --graph6")
        c = _load(args)
        text = to_dot(c.host.graph(), red_edges=c.red.edges())
    path = _artifact(args, "graph.dot")
    if path is None:
        sys.stdout.write(text)
        return {"dot": None}, EXIT_OK
    path.write_text(text)
    artifacts.append(str(path))
    return {"dot": str(path)}, EXIT_OK


HANDLERS = {
    "construct": _construct,
    "verify": _verify,
    "arrows": _arrows,
    "ramsey": _ramsey,
    "star": _star,
    "check-lemma": _check_lemma,
    "export-dot": _export_dot,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.workers < 1 or args.budget_nodes < 1 or args.budget_seconds <= 0:
        parser.error("--workers, --budget-nodes and --budget-seconds must be positive")
    t0 = time.monotonic()
    artifacts: list[str] = []
    try:
        outcome, code = HANDLERS[args.command](args, artifacts)
    except UsageError as exc:
        print(f"ramsey-star: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    params = {k: (str(v) if isinstance(v, Path) else v) for k, v in vars(args).items()}
    record = {
        "subcommand": args.command,
        "parameters": params,
        "budget": {"max_nodes": args.budget_nodes, "max_seconds": args.budget_seconds},
        "outcome": outcome,
        "exit_code": code,
        "artifacts": artifacts,
        "wall_time": round(time.monotonic() - t0, 6),
        "seed": args.seed,
    }
    line = json.dumps(record)
    log = _artifact(args, "runs.jsonl")
    if log is not None:
        with log.open("a") as fh:
            fh.write(line + "\n")
    if args.command == "export-dot" and args.out is None:
        print(line, file=sys.stderr)
    else:
        print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
