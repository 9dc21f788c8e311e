"""Command line entry point: ``dtproof <command> ...``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import statistics
import sys
import time
from dataclasses import dataclass
from multiprocessing import Pool
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from . import generators
from .axioms import EMPTY, AxiomSet
from .bp import (
    bisimilar,
    bp_to_edt,
    distinguishing_path,
    edt_to_bp,
    eval_bp,
    is_obdd,
    isomorphic,
    read_bp,
    to_dot,
    unroll,
    write_bp,
)
from .config import (
    CONF_HEIGHT_CONSTANT,
    CONF_MAX_VARS,
    CONF_TREE_CAP,
    ROUTES,
    Settings,
    load_settings,
    parse_assignment,
    validate_params,
    validate_report,
)
from .const import EXIT_CHECK_FAILED, EXIT_IO_ERROR, EXIT_OK, MODE_TREE, REPORT_SCHEMA_VERSION
from .exceptions import CheckFailure, DtProofError, PreconditionError, UnsupportedRoute, VariableBoundError
from .formula import System, classify
from .logutil import configure, get_logger
from .proof import Proof, check, stats, to_tree
from .proofio import load_proof, write_proof
from .semantics import eval_formula, validity
from .simulations import (
    DIRECTION_TO_2LK,
    SIMULATIONS,
    STRATEGY_DAG,
    STRATEGY_TREE,
    SimulationReport,
    sim_lndt_2lk,
)
from .syntax import parse_formula

logger = get_logger(__file__)

STRATEGIES = {"dag": STRATEGY_DAG, "tree": STRATEGY_TREE}


@dataclass
class RunResult:
    outcome: str
    inputs: Dict[str, Any]
    stats: Dict[str, Any]
    summary: str
    exit_code: int = EXIT_OK
    output: Optional[str] = None


def _read_axioms(path: Optional[str]) -> Optional[AxiomSet]:
    if path is None:
        return None
    return AxiomSet.parse(Path(path).read_text())


def _emit(result: RunResult, path: Optional[str], json_mode: bool) -> None:
    """Write ``result.output`` to ``path``, to stdout, or into the JSON report."""
    if result.output is None:
        return
    if path is not None:
        Path(path).write_text(result.output)
        result.inputs["output"] = path
    elif json_mode:
        result.stats["output_text"] = result.output
    else:
        sys.stdout.write(result.output)


_GLOBAL_OPTIONS = ("command", "json", "verbose", "log_level", "max_vars", "tree_cap", "height_constant")


def _given(args: argparse.Namespace) -> Dict[str, Any]:
    """The command's own arguments, for reports of runs that stopped early."""
    return {k: v for k, v in sorted(vars(args).items()) if k not in _GLOBAL_OPTIONS and v is not None}


# check
def cmd_check(args: argparse.Namespace, settings: Settings) -> RunResult:
    proof = load_proof(args.proof, _read_axioms(args.axioms))
    inputs = {"proof": args.proof, "system": str(proof.system), "mode": proof.mode}
    report = check(proof)
    if not report.ok:
        failure = CheckFailure(report.step, report.reason)
        return RunResult(
            "failed",
            inputs,
            {"ok": False, "step": report.step, "reason": report.reason},
            str(failure),
            EXIT_CHECK_FAILED,
        )
    out = {"ok": True, **stats(proof).as_dict()}
    summary = f"ok: {len(proof)} steps proving {proof.endsequent}"
    if args.oracle:
        try:
            result = validity(proof.endsequent, proof.axioms, settings.max_vars)
        except VariableBoundError as err:
            out["valid"] = None
            summary += f"; oracle skipped ({err.msg})"
        else:
            out["valid"] = result.valid
            summary += f"; valid: {str(result.valid).lower()}"
            if not result.valid:
                # a checked proof with an invalid endsequent is a kernel fault
                out["counterexample"] = result.counterexample
                return RunResult("failed", inputs, out, summary, EXIT_CHECK_FAILED)
    return RunResult("ok", inputs, out, summary)


# translate
def _accepts(proof: Proof, source: System) -> Proof:
    if proof.system.name != source.name:
        raise PreconditionError(f"the file holds a {proof.system} proof, not {source}")
    if source.depth is not None and stats(proof).max_formula_depth > source.depth:
        raise PreconditionError(f"the proof has formulas deeper than {source.depth}")
    return proof.with_system(source)


def _simulation_kwargs(name: str, strategy: str, settings: Settings) -> Dict[str, Any]:
    if name == "ldt-to-1lk":
        return {"strategy": strategy}
    if name == "lk-to-eldt":
        return {"height_constant": settings.height_constant}
    return {}


def translate(proof: Proof, source: System, target: System, strategy: str, settings: Settings) -> List[SimulationReport]:
    """Run the routed simulations; the result of each feeds the next."""
    route = ROUTES.get((str(source), str(target)))
    if route is None:
        raise UnsupportedRoute(str(source), str(target))
    proof = _accepts(proof, source)
    if strategy == STRATEGY_TREE and not stats(proof).is_tree:
        proof = to_tree(proof, settings.tree_cap)
        logger.info("expanded the input into a tree of %d steps", len(proof))
    reports = []
    for name in route:
        report = SIMULATIONS[name](proof, **_simulation_kwargs(name, strategy, settings))
        check(report.proof).raise_for_failure()
        reports.append(report)
        proof = report.proof
    return reports


def cmd_translate(args: argparse.Namespace, settings: Settings) -> RunResult:
    proof = load_proof(args.proof, _read_axioms(args.axioms))
    source = System.parse(args.source) if args.source else proof.system
    target = System.parse(args.target)
    strategy = STRATEGIES[args.strategy]
    inputs = {"proof": args.proof, "from": str(source), "to": str(target), "strategy": args.strategy}
    if str(source) == str(target):
        _accepts(proof, source)
        check(proof).raise_for_failure()
        return RunResult(
            "ok",
            inputs,
            {"route": [], "output": stats(proof).as_dict()},
            f"{source} to {target}: nothing to do",
            output=write_proof(proof),
        )
    reports = translate(proof, source, target, strategy, settings)
    final = reports[-1]
    out = {
        "route": [r.theorem for r in reports],
        "simulations": [r.as_dict() for r in reports],
        "output": final.output_stats.as_dict(),
    }
    summary = (
        f"{source} to {target} via {', '.join(out['route'])}: "
        f"size {reports[0].input_stats.size} became {final.output_stats.size}"
    )
    if final.exponent is not None:
        summary += f" (exponent {final.exponent:.3f})"
    return RunResult("ok", inputs, out, summary, output=write_proof(final.proof))


# gen
def _family_params(args: argparse.Namespace) -> Dict[str, Any]:
    keys = ("formula", "variant", "literal", "second", "mode", "ps", "qs", "term", "clause", "axioms", "backward", "sequent", "system")
    return {k: getattr(args, k) for k in keys if getattr(args, k, None) is not None}


def generate(family: str, params: Dict[str, Any], settings: Settings) -> Proof:
    p = validate_params(family, params)
    if family in ("identity", "ndtnf"):
        build = generators.prop_identity if family == "identity" else generators.prop_ndtnf
        return build(p["formula"], p["variant"], p.get("literal"), p.get("second"), p["mode"])
    if family == "conjdisj":
        return generators.prop_conjdisj(p["ps"], p["qs"], p["variant"], p["mode"])
    if family == "clstms":
        return generators.prop_cls_tms(p["formula"], p["mode"])
    if family == "sigmapi":
        return generators.prop_sigma_pi(p["formula"], p["term"], p["clause"])
    if family == "andor":
        return generators.lemma_andor(p["formula"], p["second"], _read_axioms(p.get("axioms")) or EMPTY, p["variant"])
    if family == "rename":
        return generators.lemma_rename(p["formula"], _read_axioms(p.get("axioms")) or EMPTY, backward=p["backward"])
    sequent = p["sequent"]
    system = System.parse(p["system"]) if "system" in p else generators.system_for(sequent.formulas())
    return generators.prove_cutfree(sequent, system, settings.max_vars)


def cmd_gen(args: argparse.Namespace, settings: Settings) -> RunResult:
    params = _family_params(args)
    proof = generate(args.family, params, settings)
    check(proof).raise_for_failure()
    out = stats(proof).as_dict()
    inputs = {"family": args.family, "params": {k: str(v) for k, v in sorted(params.items())}}
    summary = f"{args.family}: {len(proof)} step {proof.system} proof of {proof.endsequent}"
    return RunResult("ok", inputs, out, summary, output=write_proof(proof))


# bench
def bench_input(name: str, n: int) -> Proof:
    """An input proof for simulation ``name`` built around a DT formula with ``n`` leaves."""
    a = generators.balanced_dt(n)
    if name in ("1lk-to-ldt", "lk-to-eldt"):
        return generators.prop_cls_tms(a)
    identity = generators.prop_identity(a, "a", mode=MODE_TREE)
    if name == "2lk-to-lndt":
        return sim_lndt_2lk(identity, DIRECTION_TO_2LK).proof
    return identity


def bench_row(task: Tuple[str, int, str, int]) -> Dict[str, Any]:
    name, n, strategy, height_constant = task
    proof = bench_input(name, n)
    kwargs = _simulation_kwargs(name, strategy, Settings(height_constant=height_constant))
    report = SIMULATIONS[name](proof, **kwargs)
    row: Dict[str, Any] = {
        "n": n,
        "input_steps": report.input_stats.steps,
        "input_size": report.input_stats.size,
        "output_steps": report.output_stats.steps,
        "output_size": report.output_stats.size,
    }
    if report.exponent is not None:
        row["exponent"] = round(report.exponent, 6)
    return row


def loglog_slope(rows: Sequence[Dict[str, Any]]) -> Optional[float]:
    points = {(r["input_size"], r["output_size"]) for r in rows}
    if len({x for x, _ in points}) < 2:
        return None
    xs = [math.log2(x) for x, _ in sorted(points)]
    ys = [math.log2(y) for _, y in sorted(points)]
    return statistics.linear_regression(xs, ys).slope


def cmd_bench(args: argparse.Namespace, settings: Settings) -> RunResult:
    if args.simulation not in SIMULATIONS:
        raise UnsupportedRoute(args.simulation, "a measured simulation")
    sizes = sorted({int(s) for s in args.sizes.split(",") if s.strip()})
    if not sizes or sizes[0] < 1:
        raise PreconditionError("sizes must be positive integers")
    tasks = [(args.simulation, n, STRATEGIES[args.strategy], settings.height_constant) for n in sizes]
    if args.jobs > 1:
        with Pool(min(args.jobs, len(tasks))) as pool:
            rows = pool.map(bench_row, tasks)
    else:
        rows = [bench_row(t) for t in tasks]
    slope = loglog_slope(rows)
    out: Dict[str, Any] = {"rows": rows, "slope": None if slope is None else round(slope, 6)}
    exponents = [r["exponent"] for r in rows if "exponent" in r]
    if exponents:
        out["exponent_spread"] = round(max(exponents) - min(exponents), 6)
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    summary = buffer.getvalue() + (f"log-log slope: {slope:.3f}" if slope is not None else "log-log slope: n/a")
    inputs = {"simulation": args.simulation, "sizes": sizes, "strategy": args.strategy}
    return RunResult("ok", inputs, out, summary)


# bp
def _load_bp(path: str):
    return read_bp(Path(path).read_text())


def cmd_bp(args: argparse.Namespace, settings: Settings) -> RunResult:
    action = args.action
    inputs: Dict[str, Any] = {"action": action, "files": list(args.files)}
    if action == "from-edt":
        if not args.formula:
            raise PreconditionError("from-edt needs --formula")
        g = edt_to_bp(parse_formula(args.formula), _read_axioms(args.axioms) or EMPTY)
        inputs["formula"] = args.formula
        return RunResult("ok", inputs, {"nodes": len(g)}, f"{len(g)} nodes", output=write_bp(g))
    needed = 2 if action in ("bisim", "iso") else 1
    if len(args.files) != needed:
        raise PreconditionError(f"bp {action} takes {needed} program file(s)")
    programs = [_load_bp(path) for path in args.files]
    g = programs[0]
    if action == "eval":
        assignment = parse_assignment(args.assign or "")
        value = eval_bp(g, assignment)
        inputs["assign"] = dict(sorted(assignment.items()))
        return RunResult("ok", inputs, {"value": value}, str(value))
    if action == "to-edt":
        f, axioms = bp_to_edt(g)
        out = {"formula": str(f), "axioms": len(axioms), "leaf_size": axioms.leaf_size + f.leaf_size}
        text = axioms.format()
        return RunResult("ok", inputs, out, f"formula: {f}", output=text + "\n" if text else None)
    if action in ("bisim", "iso"):
        a, b = programs
        same = bisimilar(a, b) if action == "bisim" else isomorphic(a, b)
        out = {"equal": same}
        if action == "bisim" and not same:
            out["path"] = list(distinguishing_path(a, b))
        return RunResult("ok", inputs, out, str(same).lower())
    if action == "obdd":
        if not args.order:
            raise PreconditionError("obdd needs --order")
        order = [v.strip() for v in args.order.split(",") if v.strip()]
        inputs["order"] = order
        ok = is_obdd(g, order)
        return RunResult("ok", inputs, {"obdd": ok}, str(ok).lower())
    if action == "unroll":
        tree = unroll(g, settings.tree_cap)
        return RunResult("ok", inputs, {"nodes": len(g), "tree_nodes": len(tree)}, f"{len(tree)} nodes", output=write_bp(tree))
    return RunResult("ok", inputs, {"nodes": len(g)}, f"{len(g)} nodes", output=to_dot(g))


# eval, classify
def cmd_eval(args: argparse.Namespace, settings: Settings) -> RunResult:
    f = parse_formula(args.formula)
    assignment = parse_assignment(args.assign or "")
    value = eval_formula(f, assignment, _read_axioms(args.axioms) or EMPTY)
    inputs = {"formula": str(f), "assign": dict(sorted(assignment.items()))}
    return RunResult("ok", inputs, {"value": value}, str(value))


def cmd_classify(args: argparse.Namespace, settings: Settings) -> RunResult:
    f = parse_formula(args.formula)
    classes = sorted(classify(f))
    out = {"classes": classes, "size": f.size, "leaf_size": f.leaf_size, "height": f.height, "depth": f.depth}
    return RunResult("ok", {"formula": str(f)}, out, " ".join(classes) or "none")


COMMANDS: Dict[str, Callable[[argparse.Namespace, Settings], RunResult]] = {
    "check": cmd_check,
    "translate": cmd_translate,
    "gen": cmd_gen,
    "bench": cmd_bench,
    "bp": cmd_bp,
    "eval": cmd_eval,
    "classify": cmd_classify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dtproof", description="Decision-tree proof systems: check, translate, generate.")
    parser.add_argument("--json", action="store_true", help="print a JSON report instead of a summary")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="more logging (repeatable)")
    parser.add_argument("--log-level", choices=["TRACE", "DEBUG", "INFO", "WARNING", "ERROR"])
    parser.add_argument("--max-vars", type=int, help="oracle variable bound")
    parser.add_argument("--tree-cap", type=int, help="step cap for tree expansion")
    parser.add_argument("--height-constant", type=int, help="height constant of the LK to eLDT translation")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="check a proof file")
    p.add_argument("proof")
    p.add_argument("--axioms", help="extension axiom file replacing the proof's own")
    p.add_argument("--oracle", action="store_true", help="also decide validity of the endsequent")

    p = sub.add_parser("translate", help="translate a proof between systems")
    p.add_argument("proof")
    p.add_argument("--from", dest="source", help="source system (default: the proof's)")
    p.add_argument("--to", dest="target", required=True)
    p.add_argument("--strategy", choices=sorted(STRATEGIES), default="dag")
    p.add_argument("--axioms")
    p.add_argument("-o", "--output")

    p = sub.add_parser("gen", help="generate a proof of a parameterized family")
    p.add_argument("family")
    p.add_argument("--formula")
    p.add_argument("--variant")
    p.add_argument("--literal")
    p.add_argument("--second")
    p.add_argument("--mode")
    p.add_argument("--ps")
    p.add_argument("--qs")
    p.add_argument("--term", type=int)
    p.add_argument("--clause", type=int)
    p.add_argument("--axioms")
    p.add_argument("--backward", action="store_true", default=None)
    p.add_argument("--sequent")
    p.add_argument("--system")
    p.add_argument("-o", "--output")

    p = sub.add_parser("bench", help="measure proof growth of a simulation")
    p.add_argument("simulation", choices=sorted(SIMULATIONS))
    p.add_argument("--sizes", default="8,16,32,64")
    p.add_argument("--strategy", choices=sorted(STRATEGIES), default="dag")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("bp", help="branching programs")
    p.add_argument("action", choices=["eval", "to-edt", "from-edt", "bisim", "iso", "obdd", "unroll", "dot"])
    p.add_argument("files", nargs="*")
    p.add_argument("--assign")
    p.add_argument("--formula")
    p.add_argument("--axioms")
    p.add_argument("--order")
    p.add_argument("-o", "--output")

    p = sub.add_parser("eval", help="evaluate a formula")
    p.add_argument("formula")
    p.add_argument("--assign")
    p.add_argument("--axioms")

    p = sub.add_parser("classify", help="formula classes of a formula")
    p.add_argument("formula")
    return parser


def _report(command: str, result: RunResult, started: float) -> Dict[str, Any]:
    return validate_report(
        {
            "schema": REPORT_SCHEMA_VERSION,
            "command": command,
            "inputs": result.inputs,
            "outcome": result.outcome,
            "stats": result.stats,
            "timing": round(time.perf_counter() - started, 6),
        }
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure(args.verbose, args.log_level)
    started = time.perf_counter()
    try:
        settings = load_settings(
            overrides={
                CONF_MAX_VARS: args.max_vars,
                CONF_TREE_CAP: args.tree_cap,
                CONF_HEIGHT_CONSTANT: args.height_constant,
            }
        )
        result = COMMANDS[args.command](args, settings)
        _emit(result, getattr(args, "output", None), args.json)
    except CheckFailure as err:
        result = RunResult("failed", _given(args), {"step": err.step, "reason": err.reason}, str(err), EXIT_CHECK_FAILED)
    except (DtProofError, OSError) as err:
        logger.debug("%s failed", args.command, exc_info=True)
        result = RunResult("error", _given(args), {"error": str(err)}, f"error: {err}", EXIT_IO_ERROR)
    if args.json:
        print(json.dumps(_report(args.command, result, started), sort_keys=True, indent=2, default=str))
    elif result.outcome == "ok":
        print(result.summary)
    else:
        print(result.summary, file=sys.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
