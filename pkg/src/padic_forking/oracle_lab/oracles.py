"""Brute-force reference answers by exhaustive enumeration.

Nothing here calls the echelon code: spans are materialized as explicit sets
of coordinate tuples by closing the generators under addition, and every
answer is a minimum or maximum over those sets. Only arithmetic and
:class:`DistanceValue` come from :mod:`padic_forking.padic_core`.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from ..errors import ContextMismatch, ContextTooLarge
from ..padic_core import BELOW_PRECISION, Context, DistanceValue, Vector, _int_valuation

ENUMERATION_LIMIT = 1 << 20

Point = tuple[int, ...]


def check_enumerable(ctx: Context) -> None:
    if ctx.modulus**ctx.n > ENUMERATION_LIMIT:
        raise ContextTooLarge(f"{ctx} has {ctx.modulus ** ctx.n} points, limit {ENUMERATION_LIMIT}")


def all_points(ctx: Context) -> Iterable[Point]:
    return itertools.product(range(ctx.modulus), repeat=ctx.n)


def span_set(ctx: Context, gens: Sequence[Point]) -> frozenset[Point]:
    """Every combination of ``gens`` mod ``p^N`` (closure under adding a generator)."""
    check_enumerable(ctx)
    q = ctx.modulus
    zero = (0,) * ctx.n
    seen = {zero}
    frontier = [zero]
    gens = [tuple(g) for g in gens]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple((a + b) % q for a, b in zip(x, g))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def _pdist_exp(ctx: Context, x: Point, y: Point) -> int:
    return min(_int_valuation(a - b, ctx.p, ctx.N) for a, b in zip(x, y))


def _as_dist(ctx: Context, j: int) -> DistanceValue:
    return BELOW_PRECISION if j >= ctx.N else DistanceValue(j)


def plain_level(ctx: Context, x: Point, elems: frozenset[Point]) -> int:
    """Largest ``j`` such that some element of ``elems`` agrees with ``x`` mod ``p^j``."""
    return max(_pdist_exp(ctx, x, s) for s in elems)


def certified_level(ctx: Context, x: Point, elems: frozenset[Point]) -> int:
    """Largest ``j`` with ``p^(N-j) x`` in ``elems``."""
    q = ctx.modulus
    for j in range(ctx.N, -1, -1):
        s = ctx.p ** (ctx.N - j)
        if tuple(a * s % q for a in x) in elems:
            return j
    raise AssertionError("unreachable: 0 is always in a span")


def _generators_of(S) -> tuple[list[Point], bool]:
    # a saturated module is rebuilt from the exact generators it came from
    p, N = S.ctx.p, S.ctx.N
    gens = [tuple(a * p ** (N - pi) for a in col.coords) for col, pi in zip(S.columns, S.precisions)]
    return gens, S.saturated


def oracle_dist(x: Vector, S) -> DistanceValue:
    """Distance from ``x`` to ``S`` by enumeration.

    For a plain span this is the minimum of ``distance(x, s)`` over all ``s``.
    For a saturated module it is the certified distance to the pure closure,
    ``p^-j`` for the largest ``j`` with ``p^(N-j) x`` in the original span.
    """
    if x.ctx != S.ctx:
        raise ContextMismatch(f"{x.ctx} vs {S.ctx}")
    gens, saturated = _generators_of(S)
    return oracle_dist_generators(x, gens, saturated)


def oracle_dist_generators(x: Vector, gens: Sequence[Point], saturated: bool = False) -> DistanceValue:
    ctx = x.ctx
    elems = span_set(ctx, gens)
    level = certified_level if saturated else plain_level
    return _as_dist(ctx, level(ctx, x.coords, elems))


def realizations(q) -> list[Point]:
    """All points with the type ``q``: same closure distance, same anchor ball."""
    ctx = q.anchor.ctx
    if q.radius.is_below_precision:
        return [q.anchor.coords]
    gens, _ = _generators_of(q.base)
    elems = span_set(ctx, gens)
    k = q.radius.exponent
    m = ctx.p**k
    anchor = tuple(c % m for c in q.anchor.coords)
    out = []
    for x in all_points(ctx):
        if tuple(c % m for c in x) == anchor and certified_level(ctx, x, elems) == k:
            out.append(x)
    return out


def oracle_type_distance(q1, q2) -> DistanceValue:
    """Minimum of ``distance(x, y)`` over realizations ``x`` of ``q1`` and ``y`` of ``q2``."""
    ctx = q1.anchor.ctx
    check_enumerable(ctx)
    r1, r2 = realizations(q1), realizations(q2)
    if not r1 or not r2:
        raise ValueError("a type without realizations")
    # two finite sets are within p^-j iff their reductions mod p^j meet
    for j in range(ctx.N, -1, -1):
        m = ctx.p**j
        red1 = {tuple(c % m for c in x) for x in r1}
        if any(tuple(c % m for c in y) in red1 for y in r2):
            return _as_dist(ctx, j)
    raise AssertionError("unreachable: everything meets mod p^0")


def oracle_orbit_same(A: Sequence[Vector], a: Vector, b: Vector, group: Sequence[tuple[tuple[int, ...], ...]]) -> bool:
    """Whether a matrix in ``group`` fixes every vector of ``A`` and sends ``a`` to ``b``."""
    ctx = a.ctx
    q = ctx.modulus

    def act(g, v: Point) -> Point:
        return tuple(sum(x * y for x, y in zip(row, v)) % q for row in g)

    fixed = [v.coords for v in A]
    for g in group:
        if act(g, a.coords) == b.coords and all(act(g, v) == v for v in fixed):
            return True
    return False


def general_linear_group(ctx: Context) -> list[tuple[tuple[int, ...], ...]]:
    """All invertible ``n x n`` matrices over ``Z/p^N`` (tiny contexts only)."""
    n, q, p = ctx.n, ctx.modulus, ctx.p
    if q ** (n * n) > ENUMERATION_LIMIT:
        raise ContextTooLarge(f"GL_{n} over Z/{q} is too large to list")
    out = []
    for entries in itertools.product(range(q), repeat=n * n):
        M = [list(entries[i * n:(i + 1) * n]) for i in range(n)]
        if _det_mod_p(M, p):
            out.append(tuple(tuple(r) for r in M))
    return out


def _det_mod_p(M: list[list[int]], p: int) -> int:
    M = [[x % p for x in row] for row in M]
    n = len(M)
    det = 1
    for c in range(n):
        r = next((i for i in range(c, n) if M[i][c]), None)
        if r is None:
            return 0
        if r != c:
            M[c], M[r] = M[r], M[c]
            det = -det
        det = det * M[c][c] % p
        inv = pow(M[c][c], -1, p)
        for i in range(c + 1, n):
            f = M[i][c] * inv % p
            M[i] = [(a - f * b) % p for a, b in zip(M[i], M[c])]
    return det % p
