"""Command-line front end and the problem-file format.

A problem file is line oriented::

    # comments run to the end of the line
    ctx p=3 N=4 n=2
    vec a = 1,3
    vec e = 1,0
    set A = {e}

The ``ctx`` line comes first. Names are unique across vectors and sets, and a
set may only mention vectors defined above it.

Exit codes: 0 success, 1 usage, 2 parse error, 3 computation error,
4 property suite failure.
"""

from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass, field
from typing import Sequence

from .errors import DimensionMismatch, NonPrime, PadicError, ParseError
from .indep import eps_independent, galois_type, independent, rank
from .lattice import dist_to, saturate, span
from .padic_core import Context, DistanceValue, Vector
from .pregeometry import GeometryClass, GeometrySpace, closure_member, dimension, forks_equiv

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_COMPUTE, EXIT_SUITE = 0, 1, 2, 3, 4

GRAMMAR = """problem file grammar:
  ctx p=<int> N=<int> n=<int>
  vec <name> = <i1>,<i2>,...,<in>
  set <name> = {<vecname>,...}
  # comment"""

_NAME = r"[A-Za-z_][A-Za-z0-9_]*"
_CTX_RE = re.compile(r"ctx\s+p\s*=\s*(-?\d+)\s+N\s*=\s*(-?\d+)\s+n\s*=\s*(-?\d+)")
_VEC_RE = re.compile(rf"vec\s+({_NAME})\s*=\s*(.*)")
_SET_RE = re.compile(rf"set\s+({_NAME})\s*=\s*\{{(.*)\}}")


@dataclass
class ProblemFile:
    ctx: Context
    vectors: dict[str, Vector] = field(default_factory=dict)
    sets: dict[str, tuple[str, ...]] = field(default_factory=dict)

    def vector(self, name: str) -> Vector:
        try:
            return self.vectors[name]
        except KeyError:
            raise KeyError(f"no vector named {name!r}") from None

    def set(self, name: str) -> list[Vector]:
        try:
            return [self.vectors[v] for v in self.sets[name]]
        except KeyError:
            raise KeyError(f"no set named {name!r}") from None


def parse_problem(text: str) -> ProblemFile:
    """Parse a problem file.

    Raises:
        ParseError: on malformed lines, duplicates, unknown names or a missing ``ctx``.
        DimensionMismatch: when a vector does not have ``n`` coordinates.
        NonPrime: when ``p`` is not prime.
    """
    pf: ProblemFile | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _CTX_RE.fullmatch(line)
        if m:
            if pf is not None:
                raise ParseError("second ctx line", lineno)
            p, N, n = map(int, m.groups())
            try:
                pf = ProblemFile(Context(p, N, n))
            except NonPrime:
                raise
            except ValueError as exc:
                raise ParseError(str(exc), lineno) from None
            continue
        if pf is None:
            raise ParseError("expected a ctx line before anything else", lineno)
        m = _VEC_RE.fullmatch(line)
        if m:
            name, body = m.groups()
            _fresh(pf, name, lineno)
            try:
                coords = [int(c) for c in body.split(",")]
            except ValueError:
                raise ParseError(f"bad coordinates {body!r}", lineno) from None
            if len(coords) != pf.ctx.n:
                raise DimensionMismatch(f"vector {name} has {len(coords)} coordinates, expected {pf.ctx.n}", lineno)
            pf.vectors[name] = Vector(pf.ctx, tuple(coords))
            continue
        m = _SET_RE.fullmatch(line)
        if m:
            name, body = m.groups()
            _fresh(pf, name, lineno)
            members = tuple(s.strip() for s in body.split(",") if s.strip())
            for v in members:
                if v not in pf.vectors:
                    raise ParseError(f"set {name} uses undefined vector {v!r}", lineno)
            pf.sets[name] = members
            continue
        raise ParseError(f"cannot parse {line!r}", lineno)
    if pf is None:
        raise ParseError("missing ctx line")
    return pf


def _fresh(pf: ProblemFile, name: str, lineno: int) -> None:
    if name in pf.vectors or name in pf.sets:
        raise ParseError(f"duplicate name {name!r}", lineno)


def render_problem(pf: ProblemFile) -> str:
    lines = [f"ctx p={pf.ctx.p} N={pf.ctx.N} n={pf.ctx.n}"]
    lines += [f"vec {name} = {format_vector(v)}" for name, v in pf.vectors.items()]
    lines += [f"set {name} = {{{','.join(members)}}}" for name, members in pf.sets.items()]
    return "\n".join(lines) + "\n"


def format_vector(v: Vector) -> str:
    return ",".join(map(str, v.coords))


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}\n\n{GRAMMAR}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="padic-forking",
        description="Queries on truncated p-adic modules.",
        epilog=GRAMMAR,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name: str, help: str, *args: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("file")
        for a in args:
            p.add_argument(a)
        return p

    cmd("closure", "echelon generators of the pure closure of a set", "set")
    cmd("dist", "distance from a vector to the pure closure of a set", "vec", "set")
    cmd("type", "radius and anchor of the type of a vector over a set", "vec", "set")
    cmd("indep", "whether vec is independent from setB over setA", "vec", "setA", "setB")
    cmd("rank", "rank of a vector over a set", "vec", "setA")
    cmd("epsindep", "eps-independence with threshold p^-<k> or 0", "vec", "setA", "setB", "eps")
    g = sub.add_parser("geom", help="forking classes, dimension and closures of realizations")
    g.add_argument("file")
    g.add_argument("setA")
    g.add_argument("vecs", nargs="+")
    v = sub.add_parser("verify", help="run the property suites")
    v.add_argument("--suite", action="append", help="suite name (repeatable; default: all)")
    v.add_argument("--seed", type=int, default=None)
    v.add_argument("--instances", type=int, default=None)
    v.add_argument("--list", action="store_true", help="list suite names and exit")
    return parser


def _load(path: str) -> ProblemFile:
    with open(path, encoding="utf-8") as fh:
        return parse_problem(fh.read())


def _run(args: argparse.Namespace) -> int:
    if args.command == "verify":
        return _verify(args)
    pf = _load(args.file)
    out = []
    if args.command == "closure":
        T = saturate(span(pf.set(args.set), pf.ctx))
        out += [format_vector(c) for c in T.columns]
    elif args.command == "dist":
        out.append(str(dist_to(pf.vector(args.vec), saturate(span(pf.set(args.set), pf.ctx)))))
    elif args.command == "type":
        q = galois_type(pf.vector(args.vec), pf.set(args.set))
        out += [f"radius {q.radius}", f"anchor {format_vector(q.anchor)}"]
    elif args.command == "indep":
        ok = independent(pf.vector(args.vec), pf.set(args.setA), pf.set(args.setB))
        out.append("independent" if ok else "forks")
    elif args.command == "rank":
        out.append(str(rank(pf.vector(args.vec), pf.set(args.setA))))
    elif args.command == "epsindep":
        try:
            eps = DistanceValue.parse(args.eps)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        ok = eps_independent(pf.vector(args.vec), pf.set(args.setA), pf.set(args.setB), eps)
        out.append("true" if ok else "false")
    elif args.command == "geom":
        out += _geom(pf, args.setA, args.vecs)
    print("\n".join(out))
    return EXIT_OK


def _geom(pf: ProblemFile, set_name: str, names: Sequence[str]) -> list[str]:
    A = pf.set(set_name)
    vecs = [pf.vector(n) for n in names]
    G = GeometrySpace.of(vecs[0], A)
    for v in vecs:
        G.check(v)
    classes: list[list[int]] = []
    for i, v in enumerate(vecs):
        for c in classes:
            if forks_equiv(v, vecs[c[0]], G):
                c.append(i)
                break
        else:
            classes.append([i])
    out = [f"radius {G.radius}"]
    out += ["class {" + ",".join(names[i] for i in c) + "}" for c in classes]
    reps = [GeometryClass(vecs[c[0]]) for c in classes]
    out.append(f"dimension {dimension(reps, G)}")
    for i, rep in enumerate(reps):
        others = reps[:i] + reps[i + 1:]
        verdict = "true" if closure_member(rep, others, G) else "false"
        out.append(f"closure {names[classes[i][0]]} in cl(others) {verdict}")
    return out


def _verify(args: argparse.Namespace) -> int:
    from .oracle_lab import PropertyConfig, render_report, run_suite, suite_names

    if args.list:
        print("\n".join(suite_names()))
        return EXIT_OK
    kwargs = {}
    if args.seed is not None:
        kwargs["seed"] = args.seed
    if args.instances is not None:
        kwargs["instances"] = args.instances
    config = PropertyConfig(**kwargs)
    names = args.suite or suite_names()
    reports = [run_suite(n, config) for n in names]
    print(render_report(reports))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_SUITE


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _run(args)
    except ParseError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NonPrime as exc:
        print(f"error: NonPrime: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except KeyError as exc:
        if isinstance(exc, PadicError):
            print(f"error: {type(exc).__name__}: {exc.args[0]}", file=sys.stderr)
            return EXIT_COMPUTE
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    except PadicError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
