"""Command-line front end.

Exit status: 0 success, 1 verdict failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import signal
import sys
from typing import List, Optional

from . import __version__
from .gvd import (
    ORDER_FAMILIES,
    UnmixedPolicy,
    invariants_via_recursion,
    is_gvd,
)
from .hilbert import CMStatus, invariants_direct
from .io import InputError, ideal_to_json, load_complex, load_graph, load_ideal
from .simplicial import (
    ComplexError,
    is_vertex_decomposable_pure,
    reg_via_vd_recursion,
    stanley_reisner_ideal,
)
from .toric import (
    GraphError,
    bipartite_a,
    ferrers_graph,
    ferrers_invariants,
    glue_cycle,
    grd_expected,
    grd_graph,
    toric_ideal,
)

EXIT_OK, EXIT_VERDICT, EXIT_INPUT = 0, 1, 2


def _emit(obj, args) -> None:
    if args.format != "text":
        print(json.dumps(obj, indent=2, sort_keys=False))
    else:
        print(_text(obj))


def _text(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and any(isinstance(x, (dict, list)) for x in (v.values() if isinstance(v, dict) else v)):
                lines.append(f"{pad}{k}:")
                lines.append(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v)}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(_text(x, indent) for x in obj)
    return f"{pad}{obj}"


def _policy(args) -> UnmixedPolicy:
    if getattr(args, "assume_unmixed", False):
        return UnmixedPolicy.ASSUME
    if getattr(args, "strict_unmixed", False):
        return UnmixedPolicy.STRICT
    return UnmixedPolicy.STRUCTURAL


def _orders(args) -> List[str]:
    raw = getattr(args, "orders", None) or "yblock"
    fams = [x.strip() for x in raw.split(",") if x.strip()]
    for f in fams:
        if f not in ORDER_FAMILIES:
            raise InputError(f"--orders: unknown order family {f!r} (choose from {', '.join(ORDER_FAMILIES)})")
    if "yblock" not in fams:
        fams.insert(0, "yblock")
    return fams


def _both(I, args) -> dict:
    """Direct and recursion reports for one ideal."""
    policy = _policy(args)
    tree = is_gvd(I, policy, _orders(args))
    out = {"gvd": tree.certified, "unmixed_policy": policy.value}
    if tree.certified:
        rec = invariants_via_recursion(tree)
        direct = invariants_direct(I, CMStatus.CERTIFIED)
    elif args.assume_cm:
        rec = invariants_via_recursion(tree, assume_cm=True)
        direct = invariants_direct(I, CMStatus.ASSERTED)
    else:
        out["direct"] = invariants_direct(I).to_json()
        out["recursion"] = None
        out["provenance"] = "direct"
        return out
    out["direct"] = direct.to_json()
    out["recursion"] = rec.to_json()
    out["agree"] = rec.same_invariants(direct)
    out["provenance"] = "both"
    return out


# ---------------------------------------------------------------------------
# subcommands


def cmd_invariants(args) -> int:
    I = load_ideal(args.ideal)
    cm = CMStatus.ASSERTED if args.assume_cm else CMStatus.UNKNOWN
    _emit(invariants_direct(I, cm).to_json(), args)
    return EXIT_OK


def cmd_gvd(args) -> int:
    I = load_ideal(args.ideal)
    if args.action == "invariants":
        out = _both(I, args)
        _emit(out, args)
        if out["recursion"] is None or not out.get("agree", False):
            return EXIT_VERDICT
        return EXIT_OK
    tree = is_gvd(I, _policy(args), _orders(args))
    if args.action == "trace":
        print("\n".join(_trace_lines(tree)))
    else:
        _emit(tree.to_json(), args)
    if args.expect == "gvd" and not tree.certified:
        return EXIT_VERDICT
    if args.expect == "not-gvd" and tree.certified:
        return EXIT_VERDICT
    return EXIT_OK


def _trace_lines(tree, depth: int = 0) -> List[str]:
    pad = "  " * depth
    gens = ", ".join(str(g) for g in tree.ideal.generators) or "0"
    head = f"{pad}{tree.verdict.value} [{tree.unmixed}] <{gens}> in K[{','.join(tree.ideal.ring.variables)}]"
    lines = [head]
    if tree.split is not None:
        s = tree.split
        lines.append(f"{pad}  split at {s.y} ({s.degeneracy.value})")
        lines.append(f"{pad}  C:")
        lines += _trace_lines(tree.c_branch, depth + 2)
        lines.append(f"{pad}  N:")
        lines += _trace_lines(tree.n_branch, depth + 2)
    for y, reason in tree.reasons:
        lines.append(f"{pad}  {y}: {reason}")
    return lines


def _certify(I, args) -> CMStatus:
    return CMStatus.CERTIFIED if is_gvd(I, _policy(args), _orders(args)).certified else CMStatus.UNKNOWN


def _graph_report(G, args, label: str = "graph") -> dict:
    I = toric_ideal(G, args.walk_bound)
    out = {label: G.to_json(), "ideal": ideal_to_json(I), "tags": sorted(I.tags)}
    if "generators-not-certified" in I.tags:
        out["direct"] = invariants_direct(I).to_json()
        return out
    out.update(_both(I, args))
    out["bipartite_a"] = bipartite_a(G, out["direct"]["reg"])
    return out


def cmd_toric(args) -> int:
    G = load_graph(args.graph)
    _emit(_graph_report(G, args), args)
    return EXIT_OK


def _partition(text: str):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"--partition: expected comma-separated integers, got {text!r}")


def cmd_ferrers(args) -> int:
    lam = _partition(args.partition)
    closed = ferrers_invariants(lam)
    out = {"partition": list(lam), "closed_form": closed.to_json()}
    ok = True
    if args.verify_direct:
        G = ferrers_graph(lam)
        I = toric_ideal(G)
        direct = invariants_direct(I, _certify(I, args))
        out["ideal"] = ideal_to_json(I)
        out["direct"] = direct.to_json()
        ok = direct.same_invariants(closed)
        out["agree"] = ok
    _emit(out, args)
    return EXIT_OK if ok else EXIT_VERDICT


def cmd_glue(args) -> int:
    G = load_graph(args.graph)
    H = glue_cycle(G, args.edge, args.cycle)
    d = args.cycle // 2
    IG, IH = toric_ideal(G, args.walk_bound), toric_ideal(H, args.walk_bound)
    cm = _certify(IG, args)
    before = invariants_direct(IG, cm)
    after = invariants_direct(IH, _certify(IH, args))
    predicted = None
    ok = True
    if cm is CMStatus.CERTIFIED:
        predicted = {"reg": before.reg + d - 1, "e": d * before.e, "a": before.a - (d - 1)}
        ok = predicted == {"reg": after.reg, "e": after.e, "a": after.a}
    out = {"glued": H.to_json(), "ideal": ideal_to_json(IH), "before": before.to_json(),
           "after": after.to_json(), "predicted": predicted, "agree": ok}
    _emit(out, args)
    return EXIT_OK if ok else EXIT_VERDICT


def cmd_grd(args) -> int:
    G = grd_graph(args.r, args.d)
    exp = grd_expected(args.r, args.d)
    out = {"graph": G.to_json(), "closed_form": exp}
    ok = True
    if args.verify_direct:
        I = toric_ideal(G)
        direct = invariants_direct(I, _certify(I, args))
        out["ideal"] = ideal_to_json(I)
        out["direct"] = direct.to_json()
        ok = (direct.reg, direct.e, direct.a) == (exp["reg"], exp["e"], exp["a"])
        out["agree"] = ok
    _emit(out, args)
    return EXIT_OK if ok else EXIT_VERDICT


def cmd_sr(args) -> int:
    D = load_complex(args.complex)
    I = stanley_reisner_ideal(D)
    if args.action == "vd-check":
        try:
            trace = is_vertex_decomposable_pure(D)
        except ComplexError as exc:
            raise InputError(f"{args.complex}: {exc}") from exc
        out = {"vertex_decomposable": trace is not None,
               "trace": trace.to_json() if trace else None}
        _emit(out, args)
        if args.expect == "vd" and trace is None:
            return EXIT_VERDICT
        return EXIT_OK
    trace = is_vertex_decomposable_pure(D) if D.is_pure() else None
    cm = CMStatus.CERTIFIED if trace else CMStatus.UNKNOWN
    out = {"ideal": ideal_to_json(I), "direct": invariants_direct(I, cm).to_json(),
           "vertex_decomposable": trace is not None}
    if trace:
        out["reg_via_vd_recursion"] = reg_via_vd_recursion(D, trace)
    _emit(out, args)
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    from .acceptance import run_all, format_table

    only = [x.strip() for x in args.only.split(",")] if args.only else None
    results = run_all(only=only, threads=args.threads, seed=args.seed)
    if args.json or args.format == "json":
        print(json.dumps([r.to_json() for r in results], indent=2))
    else:
        print(format_table(results))
    return EXIT_OK if all(r.ok for r in results) else EXIT_VERDICT


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for corpus generators")
    common.add_argument("--threads", type=int, default=1, help="worker threads for batch runs")
    common.add_argument("--timeout-secs", type=int, default=0, help="abort after this many seconds (0 = none)")
    common.add_argument("--format", choices=("json", "text"), default=None)
    common.add_argument("--assume-cm", action="store_true",
                        help="run the recursion under asserted Cohen-Macaulayness")
    common.add_argument("--assume-unmixed", action="store_true",
                        help="skip unmixedness certification at every node")
    common.add_argument("--strict-unmixed", action="store_true",
                        help="fail nodes whose unmixedness cannot be certified")
    common.add_argument("--orders", default="yblock",
                        help="comma-separated y-compatible order families to try (yblock, lex)")
    common.add_argument("--walk-bound", type=int, default=None,
                        help="closed-walk length bound for non-bipartite graphs")

    p = argparse.ArgumentParser(prog="gvdkit", description="Geometric vertex decomposition toolkit.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("invariants", parents=[common], help="h-polynomial, dim, reg, e, a of R/I")
    s.add_argument("ideal")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("gvd", parents=[common], help="geometric vertex decomposition")
    s.add_argument("action", choices=("check", "trace", "invariants"))
    s.add_argument("ideal")
    s.add_argument("--expect", choices=("gvd", "not-gvd"))
    s.set_defaults(func=cmd_gvd)

    s = sub.add_parser("toric", parents=[common], help="toric ideal of a graph")
    s.add_argument("action", choices=("build",))
    s.add_argument("graph")
    s.set_defaults(func=cmd_toric)

    s = sub.add_parser("ferrers", parents=[common], help="Ferrers graph closed forms")
    s.add_argument("--partition", required=True)
    s.add_argument("--verify-direct", action="store_true")
    s.set_defaults(func=cmd_ferrers)

    s = sub.add_parser("glue", parents=[common], help="glue an even cycle along an edge")
    s.add_argument("graph")
    s.add_argument("--edge", required=True)
    s.add_argument("--cycle", type=int, required=True, help="cycle length 2d")
    s.set_defaults(func=cmd_glue)

    s = sub.add_parser("grd", parents=[common], help="the G_{r,d} family")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--verify-direct", action="store_true")
    s.set_defaults(func=cmd_grd)

    s = sub.add_parser("sr", parents=[common], help="Stanley-Reisner ideals")
    s.add_argument("action", choices=("invariants", "vd-check"))
    s.add_argument("complex")
    s.add_argument("--expect", choices=("vd",))
    s.set_defaults(func=cmd_sr)

    s = sub.add_parser("verify-paper", parents=[common], help="run the acceptance suite")
    s.add_argument("--only", help="comma-separated criterion ids or groups")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_verify_paper)
    return p


def _on_alarm(signum, frame):
    raise TimeoutError("time limit reached")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.assume_unmixed and args.strict_unmixed:
        print("error: --assume-unmixed and --strict-unmixed are exclusive", file=sys.stderr)
        return EXIT_INPUT
    if args.threads < 1 or args.timeout_secs < 0:
        print("error: --threads must be ≥ 1 and --timeout-secs ≥ 0", file=sys.stderr)
        return EXIT_INPUT
    if args.timeout_secs and hasattr(signal, "SIGALRM"):
        signal.signal(signal.SIGALRM, _on_alarm)
        signal.alarm(args.timeout_secs)
    try:
        return args.func(args)
    except (InputError, GraphError, ComplexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except TimeoutError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERDICT
    finally:
        if args.timeout_secs and hasattr(signal, "SIGALRM"):
            signal.alarm(0)


if __name__ == "__main__":
    sys.exit(main())
