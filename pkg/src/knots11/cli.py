"""Command-line front end: ``knots11 <subcommand> ... [--json] [--output PATH]``.

Every subcommand builds a payload dict.  Text output prints it as
``key: value`` lines; ``--json`` prints the same dict as JSON.  Exit codes are
0 on success, 1 on invalid input and 2 on an internal consistency failure.
"""
from __future__ import annotations

import argparse
import json
import shlex
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Optional, Sequence

from . import __version__
from .convert import convert_torus, trace_convert
from .dunwoody import (DunwoodyParams, ambient_order, build_diagram, coverings, homology,
                       homology_str, is_admissible, relator_str)
from .errors import ConsistencyError, DomainError
from .families import (ConwayEven, TorusKnot, closed_form_candidates, torus_word,
                       twobridge_kernel_word, twobridge_word)
from .omega import is_kernel, lens_space_of, omega, trivial_knot_word
from .params import (ParamKnot, known_invalid_reason, move_a, move_b, move_path, normalize,
                     orbit)
from .pi1 import I_SHARP_BETA_IMAGE, i_sharp, in_E, word_action
from .table import generate_table, render
from .words import parse_word

EXIT_OK, EXIT_DOMAIN, EXIT_INTERNAL = 0, 1, 2
MAX_SAFE_INT = 2**53 - 1


@dataclass
class CommandResult:
    command: list[str]
    payload: dict[str, Any]
    warnings: list[str] = field(default_factory=list)
    # Raw document (table output) written verbatim instead of the payload.
    body: Optional[str] = None

    def json_payload(self) -> dict[str, Any]:
        return json_safe(self.payload)

    def to_json(self) -> str:
        doc = {"command": self.command, **self.json_payload()}
        if self.warnings:
            doc["warnings"] = self.warnings
        return json.dumps(doc)

    def to_text(self) -> str:
        lines = [f"{key}: {_text_value(value)}" for key, value in self.json_payload().items()]
        lines += [f"warning: {w}" for w in self.warnings]
        return "\n".join(lines)


def json_safe(value: Any) -> Any:
    """Integers outside the exactly representable double range become strings."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value if abs(value) <= MAX_SAFE_INT else str(value)
    if isinstance(value, dict):
        return {str(k): json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [json_safe(v) for v in value]
    return value


def _text_value(value: Any) -> str:
    if isinstance(value, str):
        try:
            json.loads(value)
        except ValueError:
            return value
        return json.dumps(value)  # quote strings that would read back as numbers etc.
    return json.dumps(value, separators=(",", ":"))


def parse_text(text: str) -> dict[str, Any]:
    """Inverse of ``CommandResult.to_text`` (warnings are dropped)."""
    out: dict[str, Any] = {}
    for line in text.splitlines():
        key, _, raw = line.partition(": ")
        if key == "warning":
            continue
        try:
            out[key] = json.loads(raw)
        except ValueError:
            out[key] = raw
    return out


class UsageError(DomainError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{message}\n{self.format_usage().rstrip()}")


def _word(tokens: Sequence[str]):
    return parse_word(" ".join(tokens))


def _knot(values: Sequence[int]) -> ParamKnot:
    return normalize(*values)


def _param(k: ParamKnot) -> list[int]:
    return list(k.astuple())


def cmd_omega(args) -> dict:
    w = _word(args.word)
    return {"word": str(w), "matrix": omega(w).rows()}


def cmd_lens(args) -> dict:
    w = _word(args.word)
    L = lens_space_of(w)
    return {"word": str(w), "lens": [L.p, L.q], "name": str(L)}


def cmd_trivial_word(args) -> dict:
    return {"lens": [args.p, args.q], "word": str(trivial_knot_word(args.p, args.q))}


def cmd_is_kernel(args) -> dict:
    w = _word(args.word)
    return {"word": str(w), "kernel": is_kernel(w)}


def cmd_torus_word(args) -> dict:
    prefix, word = torus_word(TorusKnot(args.k, args.h))
    return {"knot": [args.k, args.h], "kernel_prefix": str(prefix), "word": str(word)}


def cmd_twobridge_word(args) -> dict:
    c = ConwayEven.from_parameters(args.params)
    return {"conway": c.parameters(), "kernel_prefix": str(twobridge_kernel_word(c)),
            "word": str(twobridge_word(c))}


def cmd_closed_form(args) -> CommandResult:
    cands = closed_form_candidates(TorusKnot(args.k, args.h))
    payload = {
        "knot": [args.k, args.h],
        "family": cands[0][0] if cands else None,
        "param": _param(cands[0][1]) if cands else None,
        "candidates": [{"family": tag, "param": _param(k)} for tag, k in cands],
    }
    warnings = [] if cands else [f"t({args.k},{args.h}) is not covered by a closed form; use convert"]
    return CommandResult([], payload, warnings)


def cmd_convert(args) -> dict:
    t = TorusKnot(args.k, args.h)
    if not args.trace:
        return {"knot": [t.k, t.h], "param": _param(convert_torus(t))}
    states = trace_convert(t)
    return {"knot": [t.k, t.h], "param": _param(states[-1].knot()),
            "trace": [list(s.astuple()) for s in states]}


def cmd_table(args) -> CommandResult:
    rows = generate_table(args.max, args.max_k, jobs=args.jobs)
    payload = {"max_h": args.max, "max_k": args.max_k if args.max_k is not None else args.max,
               "format": args.format, "rows": len(rows)}
    return CommandResult([], payload, body=render(rows, args.format))


def cmd_moves(args) -> dict:
    k = _knot(args.param)
    mb = move_b(k)
    return {"param": _param(k), "move_a": _param(move_a(k)),
            "move_b": _param(mb) if mb is not None else None,
            "orbit": [_param(x) for x in sorted(orbit(k))]}


def cmd_equiv(args) -> dict:
    k1, k2 = _knot(args.params[:4]), _knot(args.params[4:])
    path = move_path(k1, k2, args.depth)
    return {"from": _param(k1), "to": _param(k2), "depth": args.depth,
            "equivalent": path is not None,
            "path": [_param(x) for x in path] if path is not None else None}


def cmd_check(args) -> dict:
    k = _knot(args.param)
    reason = known_invalid_reason(k)
    admissible = is_admissible(DunwoodyParams.from_knot(k)) if k.d > 0 else None
    valid = reason is None and admissible is not False
    return {"param": _param(k), "valid": valid, "reason": reason, "admissible": admissible}


def cmd_dunwoody(args) -> CommandResult:
    p = DunwoodyParams.of(*args.params)
    D = build_diagram(p)
    ok = is_admissible(D)
    payload: dict[str, Any] = {"params": list(p.astuple()), "admissible": ok,
                               "curves": [relator_str(rel) for rel in D.curves]}
    warnings = []
    if args.homology:
        if ok:
            h = homology(D)
            payload["homology"] = h
            payload["group"] = homology_str(h)
        else:
            warnings.append("homology skipped: diagram is not admissible")
    if args.diagram:
        payload["diagram"] = D.to_dict()
    if args.svg:
        Path(args.svg).write_text(D.to_svg())
        payload["svg"] = args.svg
    return CommandResult([], payload, warnings)


def _ambient_name(order: int) -> str:
    if order == 1:
        return "S^3"
    if order == 0:
        return "S^1 x S^2"
    return f"lens space L({order},q)"


def cmd_ambient(args) -> dict:
    k = _knot(args.param)
    order = ambient_order(k)
    return {"param": _param(k), "order": order, "ambient": _ambient_name(order)}


def cmd_coverings(args) -> dict:
    k = _knot(args.param)
    found = coverings(k, args.n)
    return {"param": _param(k), "n": args.n,
            "coverings": [{"s": s, "homology": h, "group": homology_str(h)} for s, h in found]}


def cmd_in_e(args) -> dict:
    w = _word(args.word)
    beta = word_action(w).b
    return {"word": str(w), "in_E": in_E(w), "beta_image": str(beta),
            "i_sharp_image": str(i_sharp(beta)), "i_sharp_beta": str(I_SHARP_BETA_IMAGE)}


def cmd_action(args) -> dict:
    w = _word(args.word)
    return {"word": str(w), "images": word_action(w).images()}


def cmd_batch(args) -> CommandResult:
    results, worst = [], EXIT_OK
    for lineno, line in enumerate(Path(args.file).read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        argv = shlex.split(line)
        if argv[0] == "batch":
            raise DomainError(f"line {lineno}: nested batch is not allowed")
        res, code = run(argv)
        worst = max(worst, code)
        results.append({"line": lineno, "exit": code, **res.json_payload()})
    return CommandResult([], {"results": results}, [] if worst == EXIT_OK else
                         ["some batch commands failed"])


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--output", metavar="PATH", help="write output to PATH")

    parser = _Parser(prog="knots11", description="(1,1)-knot computations.")
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--json", action="store_true", help="emit JSON")
    parser.add_argument("--output", metavar="PATH", help="write output to PATH")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)

    def add(name: str, handler: Callable, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(handler=handler)
        return p

    def word(p):
        p.add_argument("word", nargs="+", help="twist word, e.g. 'ta^-2 tb tc^3'")

    def quad(p, name="param"):
        p.add_argument(name, nargs=4, type=int, metavar=("A", "B", "C", "R"))

    word(add("omega", cmd_omega, "SL(2,Z) image of a word"))
    word(add("lens", cmd_lens, "lens space of the knot given by a word"))
    p = add("trivial-word", cmd_trivial_word, "word of the trivial knot in L(p,q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    word(add("is-kernel", cmd_is_kernel, "is the word in the kernel of omega"))
    for name, handler, desc in (("torus-word", cmd_torus_word, "twist word of t(k,h)"),
                                ("closed-form", cmd_closed_form, "closed-form K(a,b,c,r) of t(k,h)")):
        p = add(name, handler, desc)
        p.add_argument("k", type=int)
        p.add_argument("h", type=int)
    p = add("twobridge-word", cmd_twobridge_word, "twist word of a two-bridge knot")
    p.add_argument("params", nargs="+", type=int, help="even Conway parameters 2a1 2b1 ...")
    p = add("convert", cmd_convert, "K(a,b,c,r) of t(k,h) by the conversion algorithm")
    p.add_argument("k", type=int)
    p.add_argument("h", type=int)
    p.add_argument("--trace", action="store_true", help="include all intermediate states")
    p = add("table", cmd_table, "parameter table of torus knots")
    p.add_argument("--max", type=int, default=25, help="largest h (default 25)")
    p.add_argument("--max-k", type=int, default=None, help="largest k (default --max)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    quad(add("moves", cmd_moves, "equivalence moves of K(a,b,c,r)"))
    p = add("equiv", cmd_equiv, "search a chain of moves between two tuples")
    p.add_argument("params", nargs=8, type=int, metavar="N")
    p.add_argument("--depth", type=int, default=4)
    quad(add("check", cmd_check, "known-invalid families and admissibility"))
    p = add("dunwoody", cmd_dunwoody, "Dunwoody diagram D(a,b,c,n,r,s)")
    p.add_argument("params", nargs=6, type=int, metavar=("A", "B", "C", "N", "R", "S"))
    p.add_argument("--homology", action="store_true")
    p.add_argument("--diagram", action="store_true", help="include the adjacency description")
    p.add_argument("--svg", metavar="PATH", help="write an SVG drawing")
    quad(add("ambient", cmd_ambient, "|H1| of the ambient lens space"))
    p = add("coverings", cmd_coverings, "strongly-cyclic n-fold coverings")
    quad(p)
    p.add_argument("n", type=int)
    word(add("in-e", cmd_in_e, "membership in the extending subgroup"))
    word(add("action", cmd_action, "images of the pi_1 generators"))
    p = add("batch", cmd_batch, "run one command per line of FILE")
    p.add_argument("file")
    return parser


def run(argv: Sequence[str]) -> tuple[CommandResult, int]:
    """Execute one command; never raises for bad input or internal failures."""
    argv = list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "handler", None):
            raise UsageError("missing subcommand\n" + parser.format_usage().rstrip())
        out = args.handler(args)
        res = out if isinstance(out, CommandResult) else CommandResult([], out)
        res.command = argv
        return res, EXIT_OK
    except DomainError as e:
        return CommandResult(argv, {"error": str(e)}), EXIT_DOMAIN
    except OSError as e:
        return CommandResult(argv, {"error": str(e)}), EXIT_DOMAIN
    except ConsistencyError as e:
        return CommandResult(argv, {"error": f"internal consistency failure: {e}"}), EXIT_INTERNAL


def _wants(argv: Sequence[str], flag: str) -> Optional[str]:
    """Value of a global flag wherever it appears on the command line."""
    for i, tok in enumerate(argv):
        if tok == flag:
            if flag == "--json":
                return "1"
            return argv[i + 1] if i + 1 < len(argv) else None
        if tok.startswith(flag + "="):
            return tok.split("=", 1)[1]
    return None


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    res, code = run(argv)
    as_json = _wants(argv, "--json") is not None
    output = _wants(argv, "--output")
    if code == EXIT_OK:
        rendered = res.to_json() if as_json else res.to_text()
        # table output is the document itself; the summary goes to stdout when it is written to a file
        doc = res.body if res.body is not None else rendered + "\n"
        try:
            if output:
                Path(output).write_text(doc)
                if res.body is not None:
                    print(rendered)
            else:
                sys.stdout.write(doc)
            return code
        except OSError as e:
            res, code = CommandResult(argv, {"error": str(e)}), EXIT_DOMAIN
    print(res.to_json() if as_json else f"error: {res.payload['error']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
