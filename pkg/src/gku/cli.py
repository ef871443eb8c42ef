"""Command-line entry point: ``gku <command> ...`` or ``python -m gku``."""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from . import __version__
from .abelian import render
from .arith import Factorization, factorize
from .classify import check_bound, classify, trivializing_bound
from .fixtures import run_fixtures
from .oracle import brute_uk
from .pratt import CompositeError, PrattCert, build_cert, build_tree, cert_failure, equivalence_dot
from .units import decomposition_trace, uk_shape

_FACTORED = re.compile(r"\d+(\^\d+)?(\*\d+(\^\d+)?)*")


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # one-line diagnostic instead of usage + message
        self.exit(2, f"{self.prog}: error: {message}\n")


def parse_modulus(text: str) -> Factorization:
    """Decimal ``"338"`` or factored ``"2*13^2"``."""
    s = text.strip().replace(" ", "")
    if s.isdigit():
        n = int(s)
        if n < 1:
            raise argparse.ArgumentTypeError(f"modulus must be >= 1, got {text!r}")
        return factorize(n)
    if not _FACTORED.fullmatch(s):
        raise argparse.ArgumentTypeError(f"malformed modulus {text!r}")
    pairs = []
    for part in s.split("*"):
        base, _, exp = part.partition("^")
        pairs.append((int(base), int(exp) if exp else 1))
    if any(e < 1 for _, e in pairs):
        raise argparse.ArgumentTypeError(f"exponents must be >= 1 in {text!r}")
    try:
        return Factorization.from_pairs(pairs)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"{text!r}: {exc}") from None


def _level(text: str) -> int:
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"k must be an integer, got {text!r}") from None
    if k < 0:
        raise argparse.ArgumentTypeError(f"k must be >= 0, got {k}")
    return k


def _positive(text: str) -> int:
    k = _level(text)
    if k < 1:
        raise argparse.ArgumentTypeError("value must be >= 1")
    return k


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gku", description="Iterated unit groups U^k(Z_n) and Pratt trees.")
    parser.add_argument("--version", action="version", version=f"gku {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="canonical JSON output")
        return p

    p = cmd("decompose", "primary decomposition of U^k(Z_n)")
    p.add_argument("n", type=parse_modulus)
    p.add_argument("--k", type=_level, default=1)

    p = cmd("classify", "trivial / boolean / neither verdict for U^k(Z_n)")
    p.add_argument("n", type=parse_modulus)
    p.add_argument("--k", type=_positive, default=1)

    p = cmd("bound", "the trivializing modulus N_k")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--limit", type=_positive, help="also run check_bound with this sample limit")

    p = cmd("pratt", "Pratt certificate and tree of a prime")
    p.add_argument("p", type=parse_modulus, nargs="?")
    p.add_argument("--verify", action="store_true", help="verify the certificate")
    p.add_argument("--cert", metavar="FILE", help="verify a JSON certificate read from FILE ('-' for stdin)")
    p.add_argument("--dot", action="store_true", help="DOT export of the Pratt tree")

    p = cmd("trace", "recursion tree of the decomposition of U^k(Z_n)")
    p.add_argument("n", type=parse_modulus)
    p.add_argument("--k", type=_level, default=1)
    p.add_argument("--dot", action="store_true")
    p.add_argument("--with-pratt", action="store_true",
                   help="with --dot and a prime n, draw the Pratt tree beside the trace")

    p = cmd("oracle", "U^k(Z_n) by brute-force enumeration, compared with the engine")
    p.add_argument("n", type=parse_modulus)
    p.add_argument("--k", type=_level, default=1)
    p.add_argument("--limit", type=_positive, help="largest modulus to enumerate")

    cmd("paper-suite", "run the built-in worked-example fixtures")
    return parser


def _shape_result(shape) -> dict:
    return {"factors": shape.to_json(), "rendered": render(shape)}


def _run(args) -> tuple[dict, dict, str, int]:
    """Returns (input echo, result payload, text output, exit code)."""
    c = args.command
    if c == "decompose":
        shape = uk_shape(args.n, args.k)
        text = f"{render(shape)}\nfactors: {json.dumps(shape.to_json())}"
        return {"n": str(args.n.value), "k": args.k}, _shape_result(shape), text, 0

    if c == "classify":
        res = classify(args.n, args.k)
        text = f"{res.verdict}\nrule: {res.rule}\nshape: {render(res.shape)}"
        return {"n": str(args.n.value), "k": args.k}, res.to_json(), text, 0

    if c == "bound":
        b = trivializing_bound(args.k)
        result = b.to_json()
        text = f"{b.value} = {b.bound}"
        code = 0
        if args.limit is not None:
            report = check_bound(b, args.limit)
            result["check"] = report.to_json()
            text += "\ncheck: " + ("pass" if report.ok else f"FAIL: {report.counterexample}")
            code = 0 if report.ok else 1
        return {"k": args.k, "limit": args.limit}, result, text, code

    if c == "pratt":
        if args.cert is not None:
            raw = sys.stdin.read() if args.cert == "-" else open(args.cert, encoding="utf-8").read()
            try:
                cert = PrattCert.from_json(json.loads(raw))
            except (ValueError, KeyError, TypeError) as exc:
                raise CliError(f"unreadable certificate: {exc}") from None
            why = cert_failure(cert)
            text = "valid" if why is None else f"invalid: {why}"
            return {"cert": args.cert}, {"valid": why is None, "failure": why}, text, int(why is not None)
        if args.p is None:
            raise CliError("pratt needs a prime or --cert FILE")
        if len(args.p) != 1 or args.p.factors[0][1] != 1:
            raise CompositeError(f"{args.p.value} is not prime")
        p = args.p.value
        cert = build_cert(p)
        tree = build_tree(p)
        echo = {"p": str(p), "verify": args.verify}
        if args.verify:
            why = cert_failure(cert)
            text = "valid" if why is None else f"invalid: {why}"
            return echo, {"valid": why is None, "failure": why}, text, int(why is not None)
        if args.dot:
            return echo, {"dot": tree.to_dot()}, tree.to_dot().rstrip("\n"), 0
        text = "\n".join(_cert_lines(cert, 0) + [f"levels: {tree.levels}"])
        return echo, {"certificate": cert.to_json(), "tree": tree.to_json()}, text, 0

    if c == "trace":
        echo = {"n": str(args.n.value), "k": args.k}
        if args.with_pratt:
            if len(args.n) != 1 or args.n.factors[0][1] != 1 or args.n.value == 2:
                raise CliError("--with-pratt needs an odd prime modulus")
            dot = equivalence_dot(args.n.value, args.k)
            return echo, {"dot": dot}, dot.rstrip("\n"), 0
        trace = decomposition_trace(args.n, args.k)
        if args.dot:
            return echo, {"dot": trace.to_dot()}, trace.to_dot().rstrip("\n"), 0
        return echo, trace.to_json(), "\n".join(_trace_lines(trace.root, 0)), 0

    if c == "oracle":
        n = args.n.value
        brute = brute_uk(n, args.k, args.limit)
        engine = uk_shape(args.n, args.k)
        agree = brute == engine
        text = f"{render(brute)}\nengine agrees: {'yes' if agree else 'NO, engine gives ' + render(engine)}"
        result = {"factors": brute.to_json(), "engine": engine.to_json(), "agree": agree}
        return {"n": str(n), "k": args.k, "limit": args.limit}, result, text, int(not agree)

    if c == "paper-suite":
        results = run_fixtures()
        failed = [r for r in results if not r.passed]
        lines = [f"{'PASS' if r.passed else 'FAIL'} {r.name}" + ("" if r.passed else f": {r.detail}")
                 for r in results]
        lines.append(f"{len(results) - len(failed)}/{len(results)} fixtures passed")
        result = {"fixtures": [r.to_json() for r in results], "passed": not failed}
        return {}, result, "\n".join(lines), int(bool(failed))

    raise CliError(f"unknown command {c}")


def _cert_lines(cert: PrattCert, depth: int) -> list[str]:
    pad = "  " * depth
    if cert.is_axiom:
        return [f"{pad}2 (axiom)"]
    out = [f"{pad}{cert.prime}: witness {cert.witness}, {cert.prime - 1} = {cert.factored_p_minus_1}"]
    for ch in cert.children:
        out += _cert_lines(ch, depth + 1)
    return out


def _trace_lines(node, depth: int) -> list[str]:
    out = [f"{'  ' * depth}U^{node.level}(Z_{node.modulus}) = {render(node.shape)}  [{node.rule}]"]
    for c in node.children:
        out += _trace_lines(c, depth + 1)
    return out


def dumps(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, ensure_ascii=False)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        echo, result, text, code = _run(args)
    except (CliError, ValueError, OSError) as exc:
        # CompositeError and EnumerationLimitError are ValueErrors
        print(f"gku {args.command}: error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(dumps({"command": args.command, "input": echo, "result": result, "version": __version__}))
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
