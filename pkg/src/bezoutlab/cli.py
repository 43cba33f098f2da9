"""Command-line interface: one subcommand per operation, JSON on stdout.

Exit codes: 0 ok, 1 domain error (``error_code`` names the exception),
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import serialize as ser
from .edr import find_pq, smith_nxm
from .errors import BezoutLabError, CertificateMismatch, ParseError
from .lab import THEOREMS, classify, verify_theorem
from .neat_clean import (
    clean_decompose, is_neat, neat_range1_shift, neat_witness, prop5_backward, prop5_forward,
)
from .rings import parse_element, parse_ring
from .ringcore import bezout_certificate
from .stable_range import sr1_witness, sr2_reduce, ssr1_witness
from .toeplitz import toeplitz_complete, toeplitz_diag_2x2, toeplitz_row_reduce

# subcommand -> (positional names, nargs) ; nargs "*" means variadic
ELEMENT_COMMANDS = {
    "bezout": ("a", "b"),
    "sr1": ("a", "b"),
    "ssr1": ("a", "b"),
    "sr2": None,
    "toeplitz-reduce": ("a", "b"),
    "toeplitz-complete": ("a", "b"),
    "find-pq": ("a", "b", "c"),
    "neat": None,
    "neat-shift": ("a", "b"),
    "clean": ("r", "s", "a", "x"),
    "prop5-forward": ("a", "b", "c", "p", "q"),
    "prop5-backward": ("a", "b", "c", "lambda", "u", "v"),
}
MATRIX_COMMANDS = ("toeplitz-snf", "snf")
HELP = {
    "bezout": "gcd certificate d = p*a + q*b, a = d*a0, b = d*b0",
    "sr1": "least y with a + b*y a unit",
    "ssr1": "least x with a^2 + b*x a unit",
    "sr2": "b_1..b_{r-1} shortening a unimodular row a_1..a_r",
    "toeplitz-reduce": "invertible Toeplitz T with (a, b) T = (d, 0)",
    "toeplitz-complete": "invertible Toeplitz [[a, b], [x, a]]",
    "toeplitz-snf": "diagonalize a 2x2 matrix with Toeplitz transforms",
    "snf": "Smith form by elementary transforms",
    "find-pq": "(p, q) with (p*a)R + (p*b + q*c)R = R",
    "neat": "neat factorization a = r*s for (b, c), or neatness of a alone",
    "neat-shift": "least t with a + b*t neat",
    "clean": "clean decomposition of x in R/(r*s)",
    "prop5-forward": "(p, q) pair -> b + lambda*c = v*u",
    "prop5-backward": "b + lambda*c = v*u -> (p, q) pair",
    "classify": "exhaustive stable-range / Toeplitz / neat-range flags of Z/n",
    "verify": "exhaustive sweep of one theorem over Z/n",
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bezoutlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--ring", help='ring spec: "Z", "Z/<n>", "GF(<p>)[x]" or "Z_(<p>)"')
        p.add_argument("--json", dest="json_file", metavar="FILE",
                       help='read inputs from a JSON file ({"ring", "args"} or {"ring", "rows"})')
        p.add_argument("--check", action="store_true",
                       help="replay verification of the emitted certificate; exit 1 on mismatch")
        p.add_argument("--certificate", metavar="FILE",
                       help="with --check: verify this stored certificate instead of computing")

    for name in ELEMENT_COMMANDS:
        p = sub.add_parser(name, help=HELP[name])
        common(p)
        p.add_argument("args", nargs="*", metavar="ELEMENT")
        if name in ("sr1", "ssr1", "sr2", "toeplitz-reduce", "toeplitz-complete",
                    "find-pq", "neat-shift"):
            p.add_argument("--bound", type=int, help="search bound for infinite rings")
    for name in MATRIX_COMMANDS:
        p = sub.add_parser(name, help=HELP[name])
        common(p)
        p.add_argument("matrix", nargs="?", help='rows as JSON ("[[2,4],[6,8]]") or "2 4; 6 8"')
        if name == "toeplitz-snf":
            p.add_argument("--bound", type=int, help="search bound for infinite rings")
    p = sub.add_parser("classify", help=HELP["classify"])
    common(p)
    p.add_argument("--bound", type=int, help="largest n allowed (default 30)")
    p = sub.add_parser("verify", help=HELP["verify"])
    common(p)
    p.add_argument("theorem", choices=THEOREMS)
    p.add_argument("--bound", type=int, help="largest n allowed")
    p.add_argument("--samples", type=int, help="THM13: number of random matrices instead of all")
    p.add_argument("--seed", type=int, default=0)
    return parser


def _parse_matrix_text(text: str):
    text = text.strip()
    if text.startswith("["):
        return json.loads(text)
    return [row.split() for row in text.split(";") if row.strip()]


def _inputs(args):
    """(ring, raw positional values or matrix rows) from the command line or --json."""
    data = {}
    if args.json_file:
        with open(args.json_file) as fh:
            data = json.load(fh)
    spec = args.ring or data.get("ring")
    if spec is None:
        raise ParseError("--ring is required (or a 'ring' key in the JSON file)")
    ring = parse_ring(spec)
    if args.command in MATRIX_COMMANDS:
        if args.matrix is not None:
            rows = _parse_matrix_text(args.matrix)
        elif "rows" in data:
            rows = data["rows"]
        else:
            raise ParseError("a matrix is required (positional or --json)")
        return ring, rows
    values = getattr(args, "args", None) or data.get("args", [])
    return ring, [str(v) for v in values]


def _arity(command: str, values: list[str]) -> None:
    names = ELEMENT_COMMANDS.get(command)
    if command == "sr2":
        if len(values) < 3:
            raise _Usage("sr2 needs at least three elements")
    elif command == "neat":
        if len(values) not in (1, 3):
            raise _Usage("neat takes a, or a b c")
    elif names is not None and len(values) != len(names):
        raise _Usage(f"{command} takes {len(names)} elements: {' '.join(names)}")


class _Usage(Exception):
    pass


def compute(args) -> dict:
    command = args.command
    ring, raw = _inputs(args)
    bound = getattr(args, "bound", None)
    payload: dict = {"command": command, "ring": str(ring)}
    if command in MATRIX_COMMANDS:
        A = ser.parse_matrix(ring, raw)
        cert = toeplitz_diag_2x2(A, bound) if command == "toeplitz-snf" else smith_nxm(A)
        payload.update(ser.reduction_payload(cert))
        return payload
    if command == "classify":
        payload.update(classify(ring, **({"bound": bound} if bound else {})).to_json())
        if bound:
            payload["bound"] = bound
        return payload
    if command == "verify":
        rep = verify_theorem(ring, args.theorem, bound=bound, samples=args.samples, seed=args.seed)
        payload.update(rep.to_json())
        payload.update({"bound": bound, "samples": args.samples, "seed": args.seed})
        return payload

    _arity(command, raw)
    e = [parse_element(ring, v) for v in raw]
    if command == "bezout":
        payload.update(ser.bezout_payload(bezout_certificate(*e)))
    elif command == "sr1":
        payload.update(ser.witness_payload(*e, sr1_witness(*e, bound=bound)))
    elif command == "ssr1":
        payload.update(ser.witness_payload(*e, ssr1_witness(*e, bound=bound)))
    elif command == "sr2":
        payload.update(ser.sr2_payload(e, sr2_reduce(*e, bound=bound)))
    elif command == "toeplitz-reduce":
        t, d = toeplitz_row_reduce(*e, bound=bound)
        payload.update(ser.row_reduce_payload(*e, t, d))
    elif command == "toeplitz-complete":
        payload.update(ser.complete_payload(*e, toeplitz_complete(*e, bound=bound)))
    elif command == "find-pq":
        payload.update(ser.pq_payload(*e, find_pq(*e, bound=bound)))
    elif command == "neat":
        if len(e) == 3:
            payload.update(ser.neat_payload(neat_witness(*e)))
        else:
            payload.update({"a": str(e[0]), "neat": is_neat(e[0])})
    elif command == "neat-shift":
        t = neat_range1_shift(*e, bound=bound)
        payload.update({"a": str(e[0]), "b": str(e[1]), "t": str(t),
                        "shifted": str(e[0] + e[1] * t)})
    elif command == "clean":
        payload.update(ser.clean_payload(*e, clean_decompose(*e)))
    elif command == "prop5-forward":
        payload.update(ser.prop5_forward_payload(*e, prop5_forward(*e)))
    elif command == "prop5-backward":
        payload.update(ser.prop5_backward_payload(*e, prop5_backward(*e)))
    return payload


def dumps(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def run(argv=None) -> tuple[int, str]:
    """Execute one command; returns (exit code, stdout text)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.certificate:
            with open(args.certificate) as fh:
                payload = json.load(fh)
            payload.pop("status", None)
            payload.pop("check", None)
        else:
            payload = compute(args)
        if args.check or args.certificate:
            # replay what would be emitted, not the in-memory objects
            problems = ser.check_payload(json.loads(json.dumps(payload)))
            if problems:
                raise CertificateMismatch("; ".join(problems))
            payload["check"] = "passed"
    except _Usage as exc:
        parser.error(str(exc))
    except BezoutLabError as exc:
        return 1, dumps({"status": "error", "error_code": exc.code, "message": str(exc),
                         "command": args.command})
    return 0, dumps({"status": "ok", **payload})


def main(argv=None) -> int:
    code, out = run(argv)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
