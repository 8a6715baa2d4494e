"""Command-line interface.

Exit codes: 0 on success, 1 on unparseable input, 2 on domain errors (the
message names the violated precondition).  Every subcommand can emit JSON
with --output json; figure-producing commands accept --figure PATH and write
whatever format the extension selects (svg, png, pdf).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from . import render, verify
from .caps import cap_diagram, co_diagram, dagger, cap_orientations, is_oriented, overlay
from .diagrams import diagram_string, preceq, preceq_witness, wall_move, arrow_diagram
from .errors import CapdiagError
from .jantzen import full_jsf, reduced_jsf
from .multiplicities import (block_below, decomp_number, decomposition_matrix,
                             tilting_mult, DecompositionMatrix)
from .walled_brauer import (enumerate_diagrams, format_poly, format_walled,
                            multiply, parse_walled, labels_rs,
                            specht_dim_walled, walled_decomp_number)
from .weights import (DominantWeight, format_partition, format_weight,
                      parse_weight, to_tuple)

JSON_SCHEMA = "capdiag/1"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


class _ParseFailure(Exception):
    """Malformed textual argument: reported with exit code 1."""


def _emit(args, text_fn, payload) -> None:
    if args.output == "json":
        print(json.dumps({"schema": JSON_SCHEMA, "command": args.command,
                          "result": payload}, indent=2, sort_keys=True))
    else:
        print(text_fn())


def _weight_arg(args, name="lam") -> DominantWeight:
    try:
        return parse_weight(getattr(args, name), args.n)
    except CapdiagError as exc:
        raise _ParseFailure(str(exc)) from exc


def _diagram_arg(text: str):
    try:
        return parse_walled(text)
    except CapdiagError as exc:
        raise _ParseFailure(str(exc)) from exc


def _combination_payload(combo):
    terms = sorted(combo.items(), key=lambda wc: to_tuple(wc[0]), reverse=True)
    return [{"weight": format_weight(w), "coefficient": c} for w, c in terms]


def _combination_text(combo) -> str:
    terms = sorted(combo.items(), key=lambda wc: to_tuple(wc[0]), reverse=True)
    if not terms:
        return "0"
    return "\n".join(f"{c:+d}  chi({format_weight(w)})" for w, c in terms)


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_diagram(args):
    lam = _weight_arg(args)
    ds = diagram_string(lam, args.s1, args.s2, args.p)
    if args.figure:
        render.save_diagram_figure(ds, args.figure)
    _emit(args, lambda: render.diagram_text(ds, args.unicode), {
        "compact": ds.compact(), "shift": ds.shift, "split": ds.split,
        "header": render.header_line(ds)})


def _cmd_caps(args, kind: str):
    lam = _weight_arg(args)
    builder = cap_diagram if kind == "c" else co_diagram
    cd = builder(lam, args.s1, args.s2, args.p)
    if args.mu:
        cd = overlay(cd, _weight_arg(args, "mu"))
    if args.figure:
        render.save_diagram_figure(cd, args.figure)
    payload = {
        "compact": cd.base.compact(),
        "caps": [{"labels": [cd.base.label_at(c.left), cd.base.label_at(c.right)],
                  "side": "left" if c.side == 0 else "right",
                  "orientation": verdict}
                 for c, verdict in zip(cd.caps, cap_orientations(cd))],
        "oriented": is_oriented(cd)}
    _emit(args, lambda: render.caps_text(cd, args.unicode), payload)


def _cmd_jsf(args):
    lam = _weight_arg(args)
    combo, terms = (reduced_jsf if args.reduced else full_jsf)(lam, args.p)
    payload = {"combination": _combination_payload(combo)}
    if args.verbose:
        payload["terms"] = [
            {"i": t.reflection.i, "j": t.reflection.j, "l": t.reflection.level,
             "a": t.a, "sign": t.sign, "valuation": t.valuation,
             "target": format_weight(t.target)} for t in terms]

    def text():
        lines = [_combination_text(combo)]
        if args.verbose:
            for t in terms:
                lines.append(
                    f"term i={t.reflection.i} j={t.reflection.j} "
                    f"l={t.reflection.level} a={t.a} sign={t.sign:+d} "
                    f"val={t.valuation} target={format_weight(t.target)}")
        return "\n".join(lines)

    _emit(args, text, payload)


def _cmd_preceq(args):
    lam = _weight_arg(args)
    mu = _weight_arg(args, "mu")
    value = preceq(mu, lam, args.s1, args.s2, args.p)
    _emit(args, lambda: "true" if value else "false", {"value": value})


def _cmd_block(args):
    lam = _weight_arg(args)
    ws = block_below(lam, args.s1, args.s2, args.p)
    _emit(args, lambda: "\n".join(format_weight(w) for w in ws),
          [format_weight(w) for w in ws])


def _trace_lines(lam, mu, s1, s2, p, kind) -> List[str]:
    chain = preceq_witness(mu, lam, s1, s2, p)
    if chain is None:
        return [f"{format_weight(mu)} is not below {format_weight(lam)}"]
    lines = ["preceq witness: " + " -> ".join(format_weight(w) for w in chain)]
    cd = cap_diagram(lam, s1, s2, p) if kind == "c" else co_diagram(mu, s1, s2, p)
    over = overlay(cd, mu if kind == "c" else lam)
    for c, verdict in zip(over.caps, cap_orientations(over)):
        lines.append(f"cap ({over.base.label_at(c.left)},"
                     f"{over.base.label_at(c.right)}): {verdict}")
    return lines


def _cmd_tilting(args):
    lam = _weight_arg(args)
    mu = _weight_arg(args, "mu")
    value = tilting_mult(lam, mu, args.s1, args.s2, args.p)

    def text():
        lines = [str(value)]
        if args.verbose:
            lines += _trace_lines(lam, mu, args.s1, args.s2, args.p, "c")
        return "\n".join(lines)

    _emit(args, text, {"value": value})


def _cmd_decnum(args):
    lam = _weight_arg(args)
    mu = _weight_arg(args, "mu")
    value = decomp_number(lam, mu, args.s1, args.s2, args.p)

    def text():
        lines = [str(value)]
        if args.verbose:
            lines += _trace_lines(lam, mu, args.s1, args.s2, args.p, "co")
        return "\n".join(lines)

    _emit(args, text, {"value": value})


def _parallel_matrix(lam, s1, s2, p, jobs: int) -> DecompositionMatrix:
    if jobs <= 1:
        return decomposition_matrix(lam, s1, s2, p)
    from concurrent.futures import ThreadPoolExecutor
    ws = tuple(block_below(lam, s1, s2, p))
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        rows = list(pool.map(
            lambda w: tuple(decomp_number(w, mu, s1, s2, p) for mu in ws), ws))
    return DecompositionMatrix(ws, tuple(rows))


def _cmd_decmat(args):
    lam = _weight_arg(args)
    jobs = int(os.environ.get("CAPDIAG_JOBS", "1"))
    dm = _parallel_matrix(lam, args.s1, args.s2, args.p, jobs)
    rows = list(render.matrix_rows(dm))
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write("lambda,mu,value\n")
            for rec in rows:
                fh.write(f"{rec['lambda']},{rec['mu']},{rec['value']}\n")
    if args.figure:
        render.save_matrix_figure(dm, args.figure)
    _emit(args, lambda: render.matrix_text(dm),
          {"weights": [format_weight(w) for w in dm.weights], "rows": rows})


def _cmd_dagger(args):
    lam = _weight_arg(args)
    result = dagger(lam, args.s, args.p)
    _emit(args, lambda: format_weight(result), {"weight": format_weight(result)})


def _cmd_wallmove(args):
    lam = _weight_arg(args)
    d = arrow_diagram(lam, args.s1, args.s2, args.p)
    moved = wall_move(d, args.which, args.direction)
    if moved is None:
        _emit(args, lambda: "not allowed", {"allowed": False})
        return
    from .diagrams import diagram_to_weight, normalise_shift
    payload = {"allowed": True, "s1": moved.s1, "s2": moved.s2,
               "weight": format_weight(diagram_to_weight(moved)),
               "compact": normalise_shift(moved).compact()}
    _emit(args, lambda: render.diagram_text(normalise_shift(moved), args.unicode),
          payload)


def _cmd_brauer(args):
    if args.brauer_cmd == "count":
        ds = enumerate_diagrams(args.r, args.s)
        _emit(args, lambda: str(len(ds)), {"count": len(ds)})
    elif args.brauer_cmd == "mul":
        a, b = _diagram_arg(args.a), _diagram_arg(args.b)
        result = multiply(a, b)
        payload = [{"coefficient": format_poly(c), "diagram": format_walled(d)}
                   for d, c in result.terms.items()]
        _emit(args, lambda: "\n".join(
            f"({format_poly(c)}) * {format_walled(d)}"
            for d, c in result.terms.items()), payload)
    elif args.brauer_cmd == "dims":
        records = [{"lambda1": format_partition(l1), "lambda2": format_partition(l2),
                    "t": args.r - sum(l1),
                    "dim": specht_dim_walled(l1, l2, args.r, args.s)}
                   for l1, l2 in labels_rs(args.r, args.s)]
        if args.csv:
            with open(args.csv, "w") as fh:
                fh.write("lambda1,lambda2,t,dim\n")
                for rec in records:
                    fh.write(f"{rec['lambda1']};{rec['lambda2']};"
                             f"{rec['t']};{rec['dim']}\n".replace(";", ","))
        _emit(args, lambda: "\n".join(
            f"{r['lambda1']}\t{r['lambda2']}\t{r['t']}\t{r['dim']}"
            for r in records), records)
    else:  # decnum
        try:
            lam = parse_weight(args.lam, max(args.r + args.s, 1))
            mu = parse_weight(args.mu, max(args.r + args.s, 1))
        except CapdiagError as exc:
            raise _ParseFailure(str(exc)) from exc
        value = walled_decomp_number(mu.lambda1, mu.lambda2,
                                     lam.lambda1, lam.lambda2,
                                     args.r, args.s, args.delta, args.p,
                                     n=args.n)
        _emit(args, lambda: str(value), {"value": value})


def _cmd_verify(args):
    kwargs = {}
    if args.suite in ("jsf-reduced", "jsf-arrows", "preceq", "structural"):
        if args.p:
            kwargs["primes"] = tuple(args.p)
        if args.n:
            kwargs["n_max"] = args.n
    if args.suite == "jsf-reduced" and args.max_size:
        kwargs["size_max"] = args.max_size
    if args.suite in ("jsf-arrows", "structural") and args.s_max:
        kwargs["s_max"] = args.s_max
    if args.suite in ("characters", "brauer") and args.rs_max:
        kwargs["rs_max"] = args.rs_max
    if args.suite == "brauer" and args.samples:
        kwargs["assoc_samples"] = args.samples
    try:
        results = verify.run_suite(args.suite, **kwargs)
    except KeyError:
        print(f"unknown suite {args.suite!r}; choose from "
              f"{', '.join(sorted(verify.SUITES))} or 'all'", file=sys.stderr)
        return 1
    for r in results:
        print(r.line())
    return 0 if verify.suite_passed(results) else 1


# ---------------------------------------------------------------------------
# parser assembly


def _add_common(sp, *, s_params=True, mu=False, figure=False):
    sp.add_argument("--p", type=int, required=True, help="characteristic")
    sp.add_argument("--n", type=int, required=True, help="GL_n rank")
    if s_params:
        sp.add_argument("--s1", type=int, required=True)
        sp.add_argument("--s2", type=int, required=True)
    sp.add_argument("--lambda", dest="lam", required=True,
                    help='bipartition, e.g. "3,1/2,1" ("-" for empty)')
    if mu:
        sp.add_argument("--mu", required=True, help="second bipartition")
    if figure:
        sp.add_argument("--figure", help="write a matplotlib figure to this path")
    sp.add_argument("--output", choices=("text", "json"), default="text")
    sp.add_argument("--unicode", action="store_true",
                    help="render arrows as unicode instead of A/V/X/O")
    sp.add_argument("-v", "--verbose", action="store_true")


def build_parser() -> _Parser:
    ap = _Parser(prog="capdiag",
                 description="Tilting multiplicities and decomposition numbers "
                             "for GL_n and the walled Brauer algebra via "
                             "arrow/cap diagrams.")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("diagram", help="arrow diagram of a weight")
    _add_common(sp, figure=True)
    sp.set_defaults(fn=_cmd_diagram)

    sp = sub.add_parser("caps", help="cap diagram c_lambda")
    _add_common(sp, figure=True)
    sp.add_argument("--mu", help="overlay the caps on this weight's arrows")
    sp.set_defaults(fn=lambda a: _cmd_caps(a, "c"))

    sp = sub.add_parser("cocaps", help="cap codiagram co_mu")
    _add_common(sp, figure=True)
    sp.add_argument("--mu", help="overlay the caps on this weight's arrows")
    sp.set_defaults(fn=lambda a: _cmd_caps(a, "co"))

    sp = sub.add_parser("jsf", help="Jantzen Sum Formula (full or --reduced)")
    _add_common(sp, s_params=False)
    sp.add_argument("--reduced", action="store_true")
    sp.set_defaults(fn=_cmd_jsf)

    sp = sub.add_parser("preceq", help="is mu below lambda in the order?")
    _add_common(sp, mu=True)
    sp.set_defaults(fn=_cmd_preceq)

    sp = sub.add_parser("block", help="all weights below lambda, sorted")
    _add_common(sp)
    sp.set_defaults(fn=_cmd_block)

    sp = sub.add_parser("tilting", help="(T(lambda) : Delta(mu)), 0 or 1")
    _add_common(sp, mu=True)
    sp.set_defaults(fn=_cmd_tilting)

    sp = sub.add_parser("decnum", help="[Delta(lambda) : L(mu)], 0 or 1")
    _add_common(sp, mu=True)
    sp.set_defaults(fn=_cmd_decnum)

    sp = sub.add_parser("decmat", help="decomposition matrix of the block")
    _add_common(sp, figure=True)
    sp.add_argument("--csv", help="write lambda,mu,value rows to this path")
    sp.set_defaults(fn=_cmd_decmat)

    sp = sub.add_parser("dagger", help="arrow-flip involution on Lambda(s,s)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--output", choices=("text", "json"), default="text")
    sp.set_defaults(fn=_cmd_dagger)

    sp = sub.add_parser("wallmove", help="move a wall one step if allowed")
    _add_common(sp)
    sp.add_argument("--which", choices=("below", "above"), required=True)
    sp.add_argument("--direction", choices=("left", "right"), required=True)
    sp.set_defaults(fn=_cmd_wallmove)

    sp = sub.add_parser("brauer", help="walled Brauer algebra operations")
    bsub = sp.add_subparsers(dest="brauer_cmd", required=True)
    bp = bsub.add_parser("count", help="number of diagrams")
    bp.add_argument("--r", type=int, required=True)
    bp.add_argument("--s", type=int, required=True)
    bp.add_argument("--output", choices=("text", "json"), default="text")
    bp.set_defaults(fn=_cmd_brauer)
    bp = bsub.add_parser("mul", help="multiply two diagrams")
    bp.add_argument("--a", required=True, help='diagram, e.g. "1 1 | T1-T2,B1-B2"')
    bp.add_argument("--b", required=True)
    bp.add_argument("--output", choices=("text", "json"), default="text")
    bp.set_defaults(fn=_cmd_brauer)
    bp = bsub.add_parser("dims", help="cell-module dimensions for B_{r,s}")
    bp.add_argument("--r", type=int, required=True)
    bp.add_argument("--s", type=int, required=True)
    bp.add_argument("--csv", help="write a delimited table to this path")
    bp.add_argument("--output", choices=("text", "json"), default="text")
    bp.set_defaults(fn=_cmd_brauer)
    bp = bsub.add_parser("decnum", help="[S(mu):D(lambda)] via GL_n")
    bp.add_argument("--r", type=int, required=True)
    bp.add_argument("--s", type=int, required=True)
    bp.add_argument("--delta", type=int, required=True)
    bp.add_argument("--p", type=int, required=True)
    bp.add_argument("--n", type=int, help="override the admissible GL rank")
    bp.add_argument("--lambda", dest="lam", required=True, help="simple label")
    bp.add_argument("--mu", required=True, help="cell-module label")
    bp.add_argument("--output", choices=("text", "json"), default="text")
    bp.set_defaults(fn=_cmd_brauer)

    sp = sub.add_parser("verify", help="run a cross-module identity suite")
    sp.add_argument("suite", help=f"one of: {', '.join(sorted(verify.SUITES))}, all")
    sp.add_argument("--p", type=int, action="append",
                    help="restrict to this characteristic (repeatable)")
    sp.add_argument("--n", type=int, help="bound on the GL rank")
    sp.add_argument("--max-size", type=int, dest="max_size")
    sp.add_argument("--s-max", type=int, dest="s_max")
    sp.add_argument("--rs-max", type=int, dest="rs_max")
    sp.add_argument("--samples", type=int)
    sp.set_defaults(fn=_cmd_verify)

    return ap


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        rc = args.fn(args)
    except _ParseFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CapdiagError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return rc or 0


if __name__ == "__main__":
    sys.exit(main())
