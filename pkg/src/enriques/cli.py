"""Command-line entry point: ``enriques <subcommand> ...``.

Diagram keys use the text form ``n=<int>;chi=<sym>,...``; pass ``-`` to read
one from standard input.  Exit status: 0 success, 1 verification failure,
2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from enriques.core import EnriquesError, parse
from enriques.enumeration import enumerate_diagrams, extremal
from enriques.invariants import multiplicity_sequence
from enriques.lattice import DEFAULT_HASSE_BOUND, dual, hasse, self_duals
from enriques.operators import apply


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def _read_key(key, stdin):
    if key == "-":
        key = stdin.read().strip()
    return parse(key)


def _profile(d):
    return multiplicity_sequence(d).to_json()


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="enriques", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("enumerate", help="all diagrams of complexity n as JSON lines")
    s.add_argument("n", type=int)

    s = sub.add_parser("invariants", help="multiplicity profile of a diagram")
    s.add_argument("key")

    s = sub.add_parser("dual", help="dual diagram")
    s.add_argument("key")

    s = sub.add_parser("apply-op", help="apply a straightening or breaking operator")
    s.add_argument("key")
    s.add_argument("--kind", required=True, choices=["straighten", "break"])
    s.add_argument("--pos", required=True, type=int)

    s = sub.add_parser("hasse", help="Hasse graph of E_n")
    s.add_argument("n", type=int)
    s.add_argument("--dot", metavar="PATH", help="write DOT to PATH ('-' for stdout)")
    s.add_argument("--max-n", type=int, default=DEFAULT_HASSE_BOUND)
    s.add_argument("--json", action="store_true", help="print nodes and edges as JSON")

    s = sub.add_parser("extremal", help="alpha, omega, pi with their profiles")
    s.add_argument("n", type=int)

    s = sub.add_parser("self-duals", help="self-dual diagrams of complexity n")
    s.add_argument("n", type=int)

    s = sub.add_parser("verify", help="rerun every claim; exit 0 iff all pass")
    s.add_argument("--max-n", type=int, default=10)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--samples", type=int, default=100_000,
                   help="random triples per complexity for distributivity sampling")
    s.add_argument("--json", action="store_true", help="print the report as JSON")
    return p


def run(args, stdin, stdout) -> int:
    cmd = args.command
    if cmd == "enumerate":
        for d in enumerate_diagrams(args.n):
            print(_profile(d), file=stdout)
    elif cmd == "invariants":
        print(_profile(_read_key(args.key, stdin)), file=stdout)
    elif cmd == "dual":
        print(dual(_read_key(args.key, stdin)).key, file=stdout)
    elif cmd == "apply-op":
        d = _read_key(args.key, stdin)
        print(apply(d, args.kind, args.pos).key, file=stdout)
    elif cmd == "hasse":
        g = hasse(args.n, max_n=args.max_n)
        if args.dot == "-":
            stdout.write(g.to_dot())
        elif args.dot:
            with open(args.dot, "w", encoding="ascii", newline="\n") as fh:
                fh.write(g.to_dot())
        if args.json:
            payload = {"n": g.n, "nodes": list(g.nodes),
                       "edges": [[lo, hi, str(s)] for lo, hi, s in g.edges]}
            print(json.dumps(payload, separators=(",", ":")), file=stdout)
        elif args.dot != "-":
            print(f"{len(g.nodes)} nodes, {len(g.edges)} edges", file=stdout)
    elif cmd == "extremal":
        for name, d in extremal(args.n).items():
            print(f"{name} {d.key} {_profile(d)}", file=stdout)
    elif cmd == "self-duals":
        for d in self_duals(args.n):
            print(d.key, file=stdout)
    elif cmd == "verify":
        from enriques.verify import run_all

        progress = None if args.json else (lambda line: print(line, file=stdout, flush=True))
        report = run_all(max_n=args.max_n, seed=args.seed, samples=args.samples,
                         progress=progress)
        if args.json:
            print(report.to_json(), file=stdout)
        else:
            print("ALL PASS" if report.passed else "FAILURES", file=stdout)
        return 0 if report.passed else 1
    return 0


def main(argv=None, stdin=None, stdout=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return run(args, stdin, stdout)
    except EnriquesError as exc:
        print(f"enriques: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
