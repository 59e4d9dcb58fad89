"""Command-line front end.

Exit codes: 0 success, 1 invalid input or usage, 2 a law check failed, 3 a size guard was exceeded.
Data goes to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import catalog, errors, laws, serialize
from .errors import EtaleError, GuardExceeded
from .functors import transformation_groupoid, universal_groupoid
from .groupoid import TopGroupoid, compose_couples, open_bisections, slice_action, to_dot
from .semigroup import Action, InverseSemigroup, compose_action_morphisms, spectral_action
from .star_algebra import paterson_iso

CHECKS = ["category-isa", "category-eg", "functor-sp", "functor-tg", "functor-sa", "functor-cstar",
          "functor-gu", "adjunction", "paterson", "lemmas"]


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> Parser:
    p = Parser(prog="etalecat", description="Inverse semigroup actions, etale groupoids and their algebras.")
    p.add_argument("--guards", help="JSON object overriding size guards, e.g. '{\"bis_max_arrows\": 20}'")
    p.add_argument("-o", "--output", help="write data here instead of stdout")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=Parser)

    sub.add_parser("validate", help="validate a JSON document").add_argument("file")
    sub.add_parser("spectral", help="spectral action of a semigroup").add_argument("semigroup")
    sub.add_parser("universal", help="universal groupoid of a semigroup").add_argument("semigroup")
    sub.add_parser("transform", help="transformation groupoid of an action").add_argument("action")
    sub.add_parser("slice", help="slice action of a groupoid").add_argument("groupoid")
    sub.add_parser("bis", help="inverse semigroup of open bisections").add_argument("groupoid")
    c = sub.add_parser("compose", help="second morphism after the first")
    c.add_argument("category", choices=["isa", "eg"])
    c.add_argument("first")
    c.add_argument("second")
    ch = sub.add_parser("check", help="run a law-check suite on the default pool")
    ch.add_argument("suite", choices=CHECKS)
    ch.add_argument("--seed", type=int, default=0)
    sub.add_parser("paterson", help="matrix of the Paterson isomorphism").add_argument("semigroup")
    sub.add_parser("export-dot", help="Graphviz rendering of a groupoid").add_argument("groupoid")
    cat = sub.add_parser("catalog", help="list or emit named examples")
    cat.add_argument("action", choices=["list", "emit"])
    cat.add_argument("name", nargs="?")
    return p


def _expect(obj, cls, what):
    if not isinstance(obj, cls):
        raise errors.ValidationError(f"expected {what}, got {type(obj).__name__}")
    return obj


def run(args) -> tuple[int, str]:
    """Execute parsed arguments; returns (exit code, data text)."""
    if args.guards:
        errors.set_guards(**json.loads(args.guards))
    v = args.verb
    if v == "validate":
        obj = serialize.load(args.file)
        return 0, json.dumps({"valid": True, "kind": catalog.kind(obj)}) + "\n"
    if v == "spectral":
        S = _expect(serialize.load(args.semigroup), InverseSemigroup, "a semigroup")
        return 0, serialize.dumps(spectral_action(S)) + "\n"
    if v == "universal":
        S = _expect(serialize.load(args.semigroup), InverseSemigroup, "a semigroup")
        return 0, serialize.dumps(universal_groupoid(S).groupoid) + "\n"
    if v == "transform":
        A = _expect(serialize.load(args.action), Action, "an action")
        return 0, serialize.dumps(transformation_groupoid(A).groupoid) + "\n"
    if v == "slice":
        G = _expect(serialize.load(args.groupoid), TopGroupoid, "a groupoid")
        return 0, serialize.dumps(slice_action(G)) + "\n"
    if v == "bis":
        G = _expect(serialize.load(args.groupoid), TopGroupoid, "a groupoid")
        return 0, serialize.dumps(open_bisections(G)) + "\n"
    if v == "compose":
        loader = serialize.load_action_morphism if args.category == "isa" else serialize.load_couple
        first, second = loader(args.first), loader(args.second)
        comp = compose_action_morphisms if args.category == "isa" else compose_couples
        return 0, serialize.dumps(comp(second, first)) + "\n"
    if v == "check":
        rep = laws.run_suite(args.suite, args.seed)
        return (0 if rep.passed else 2), json.dumps(rep.to_json(), indent=1) + "\n"
    if v == "paterson":
        S = _expect(serialize.load(args.semigroup), InverseSemigroup, "a semigroup")
        return 0, serialize.dumps(paterson_iso(S)) + "\n"
    if v == "export-dot":
        G = _expect(serialize.load(args.groupoid), TopGroupoid, "a groupoid")
        return 0, to_dot(G)
    if args.action == "list":
        return 0, "".join(f"{n}\t{catalog.kind(catalog.get(n))}\n" for n in catalog.names())
    if not args.name:
        raise UsageError("catalog emit needs a name")
    try:
        obj = catalog.get(args.name)
    except KeyError:
        raise errors.ValidationError(f"no catalog entry named {args.name!r}") from None
    return 0, serialize.dumps(obj) + "\n"


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = build_parser().parse_args(argv)
        code, out = run(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except GuardExceeded as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return 3
    except (EtaleError, KeyError, TypeError, ValueError) as exc:
        print(f"invalid input: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    if code == 2:
        print("law check failed; counterexamples are in the report", file=sys.stderr)
    return code
