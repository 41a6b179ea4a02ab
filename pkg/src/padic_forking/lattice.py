"""Submodules of ``(Z/p^N)^n``: echelon form, saturation, distance, witnesses.

A :class:`Submodule` is stored as a canonical column echelon form, so two
spans that agree at precision ``N`` produce identical objects and ``==`` is
submodule equality.

Saturation keeps track of how many digits of each saturated generator are
actually known. Dividing a column with pivot ``p^v`` by ``p^v`` leaves its top
``v`` digits undetermined; the saturated column records that it is only known
mod ``p^(N-v)``, and membership never relies on the missing digits. Concretely
``x`` is in ``saturate(S) + p^j M`` exactly when ``p^(N-j) x`` lies in ``S``.
The result is the part of the pure closure that every lift of ``S`` to
``Z_p`` agrees on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ContextMismatch, NotIndependent
from .padic_core import (
    BELOW_PRECISION,
    Context,
    DistanceValue,
    Vector,
    _int_valuation,
    common_context,
)

__all__ = [
    "LinearMap",
    "Submodule",
    "closest",
    "dist_to",
    "extend_to_p_basis",
    "member",
    "p_independent",
    "rank_mod_p",
    "saturate",
    "smith_form",
    "span",
    "witness_map",
]


@dataclass(frozen=True)
class Submodule:
    """A submodule in canonical column echelon form.

    ``columns[i]`` has pivot ``p^pivots[i][1]`` in row ``pivots[i][0]`` and
    nothing in the pivot rows of earlier columns. ``precisions[i]`` is the
    number of trustworthy low digits of column ``i`` (``N`` for a plain span).
    """

    ctx: Context
    columns: tuple[Vector, ...]
    pivots: tuple[tuple[int, int], ...]
    precisions: tuple[int, ...]
    saturated: bool = False

    @property
    def rank(self) -> int:
        return len(self.columns)

    def is_zero(self) -> bool:
        return not self.columns

    def generators(self) -> list[Vector]:
        """Exact generators of the module this was saturated from (or itself)."""
        p, N = self.ctx.p, self.ctx.N
        return [c * p ** (N - pi) for c, pi in zip(self.columns, self.precisions)]

    def __contains__(self, x: Vector) -> bool:
        return member(x, self, self.ctx.N)


def _echelon(ctx: Context, cols: list[list[int]]) -> tuple[list[list[int]], list[tuple[int, int]]]:
    p, N, q = ctx.p, ctx.N, ctx.modulus
    rem = [[c % q for c in col] for col in cols]
    rem = [c for c in rem if any(c)]
    out: list[list[int]] = []
    piv: list[tuple[int, int]] = []
    while rem:
        # global minimum valuation; ties: lowest row, then lowest column
        best = None
        for j, col in enumerate(rem):
            for i, x in enumerate(col):
                if x:
                    key = (_int_valuation(x, p, N), i, j)
                    if best is None or key < best:
                        best = key
        v, r, j = best
        col = rem[j]
        ui = pow(col[r] // p**v, -1, q)
        col = [x * ui % q for x in col]
        pv = p**v
        rest = []
        for k, other in enumerate(rem):
            if k == j:
                continue
            t = other[r] // pv
            other = [(a - t * b) % q for a, b in zip(other, col)]
            if any(other):
                rest.append(other)
        out.append(col)
        piv.append((r, v))
        rem = rest
    # Hermite step: reduce entries at later pivot rows below the pivot scale
    for a in range(len(out)):
        col = out[a]
        for b in range(a + 1, len(out)):
            rb, vb = piv[b]
            t = col[rb] // p**vb
            if t:
                col = [(x - t * y) % q for x, y in zip(col, out[b])]
        out[a] = col
    return out, piv


def span(vectors: Sequence[Vector], ctx: Context | None = None) -> Submodule:
    """Canonical echelon form of the span of ``vectors``.

    ``ctx`` is required only when ``vectors`` is empty.
    """
    ctx = common_context(vectors, ctx)
    cols, piv = _echelon(ctx, [list(v.coords) for v in vectors])
    return Submodule(
        ctx,
        tuple(Vector(ctx, tuple(c)) for c in cols),
        tuple(piv),
        (ctx.N,) * len(cols),
        saturated=False,
    )


def saturate(S: Submodule) -> Submodule:
    """Pure closure of ``S``, with per-column precision bookkeeping.

    Each column is divided by its pivot ``p^v`` (exact, since every entry of
    an echelon column has valuation at least ``v``) and flagged as known only
    mod ``p^(N-v)``. Idempotent.
    """
    if S.saturated:
        return S
    p, N = S.ctx.p, S.ctx.N
    cols = []
    for c, (r, v) in zip(S.columns, S.pivots):
        pv = p**v
        cols.append(Vector(S.ctx, tuple(x // pv for x in c.coords)))
    return Submodule(
        S.ctx,
        tuple(cols),
        tuple((r, 0) for r, _ in S.pivots),
        tuple(N - v for _, v in S.pivots),
        saturated=True,
    )


def _solve(x: Vector, S: Submodule, j: int) -> list[int] | None:
    """Coefficients ``t`` with ``x = sum t_i c_i (mod p^j)``, or None."""
    p = S.ctx.p
    m = p**j
    y = [c % m for c in x.coords]
    coeffs = []
    for col, (r, v), prec in zip(S.columns, S.pivots, S.precisions):
        if v >= j:
            coeffs.append(0)
            continue
        # the coefficient must kill the digits this column does not carry
        need = v + max(0, j - prec)
        if need < j and y[r] % p**need:
            return None
        if need >= j and y[r] % m:
            return None
        t = (y[r] // p**v) % p ** (j - v)
        coeffs.append(t)
        if t:
            y = [(a - t * b) % m for a, b in zip(y, col.coords)]
    if any(y):
        return None
    return coeffs


def member(x: Vector, S: Submodule, j: int) -> bool:
    """Whether ``x`` lies in ``S + p^j M``."""
    if x.ctx != S.ctx:
        raise ContextMismatch(f"{x.ctx} vs {S.ctx}")
    if not 0 <= j <= S.ctx.N:
        raise ValueError(f"j must be in [0, N], got {j}")
    return _solve(x, S, j) is not None


def _best_level(x: Vector, S: Submodule) -> tuple[int, list[int]]:
    for j in range(S.ctx.N, -1, -1):
        t = _solve(x, S, j)
        if t is not None:
            return j, t
    raise AssertionError("membership at j=0 always holds")


def dist_to(x: Vector, S: Submodule) -> DistanceValue:
    """Distance from ``x`` to ``S``: ``p^-j`` for the largest ``j`` with ``x`` in ``S + p^j M``."""
    if x.ctx != S.ctx:
        raise ContextMismatch(f"{x.ctx} vs {S.ctx}")
    j, _ = _best_level(x, S)
    return BELOW_PRECISION if j == S.ctx.N else DistanceValue(j)


def closest(x: Vector, S: Submodule) -> Vector:
    """A closest element of ``S`` to ``x``.

    Built from the minimal nonnegative coefficients of the triangular solve,
    so the choice is deterministic. Returns ``x`` when ``x`` is in ``S``.

    For a saturated module at distance ``p^-j`` the result is a member of
    ``S + p^j M`` only; its low ``j`` digits are the certified part.
    """
    if x.ctx != S.ctx:
        raise ContextMismatch(f"{x.ctx} vs {S.ctx}")
    j, t = _best_level(x, S)
    if j == S.ctx.N:
        return x
    out = S.ctx.zero()
    for ti, col in zip(t, S.columns):
        if ti:
            out = out + col * ti
    if S.columns and (x - out).valuation() > j:
        # only possible with uncertified digits: move to distance exactly p^-j
        out = out + S.columns[0] * S.ctx.p**j
    return out


def rank_mod_p(vectors: Sequence[Vector]) -> int:
    """Rank over ``F_p`` of the reductions mod ``p``."""
    if not vectors:
        return 0
    p = vectors[0].ctx.p
    rows = [[c % p for c in v.coords] for v in vectors]
    rank = 0
    ncols = len(rows[0])
    for col in range(ncols):
        pr = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pr is None:
            continue
        rows[rank], rows[pr] = rows[pr], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def p_independent(vectors: Sequence[Vector]) -> bool:
    """Whether the family is independent mod ``p``.

    A vector of positive valuation makes the family dependent, as does a
    repeated vector.
    """
    if vectors:
        common_context(vectors)
    return rank_mod_p(vectors) == len(vectors)


def extend_to_p_basis(I: Sequence[Vector], ctx: Context | None = None) -> list[Vector]:
    """Extend a p-independent family to ``n`` vectors, greedily by standard basis index.

    Raises:
        NotIndependent: if ``I`` is not p-independent.
    """
    ctx = common_context(I, ctx)
    if not p_independent(I):
        raise NotIndependent("input family is dependent mod p")
    out = list(I)
    for e in ctx.standard_basis():
        if len(out) == ctx.n:
            break
        if rank_mod_p(out + [e]) == len(out) + 1:
            out.append(e)
    return out


@dataclass(frozen=True)
class LinearMap:
    """An ``n x n`` matrix acting on column vectors."""

    ctx: Context
    matrix: tuple[tuple[int, ...], ...]

    def __call__(self, v: Vector) -> Vector:
        if v.ctx != self.ctx:
            raise ContextMismatch(f"{v.ctx} vs {self.ctx}")
        return Vector(self.ctx, tuple(sum(a * b for a, b in zip(row, v.coords)) for row in self.matrix))

    def is_invertible(self) -> bool:
        rows = [Vector(self.ctx, r) for r in self.matrix]
        return rank_mod_p(rows) == self.ctx.n

    @classmethod
    def identity(cls, ctx: Context) -> LinearMap:
        return cls(ctx, tuple(tuple(int(i == j) for j in range(ctx.n)) for i in range(ctx.n)))


def _matmul(A: list[list[int]], B: list[list[int]], q: int) -> list[list[int]]:
    return [[sum(a * b for a, b in zip(row, col)) % q for col in zip(*B)] for row in A]


def _identity(k: int) -> list[list[int]]:
    return [[int(i == j) for j in range(k)] for i in range(k)]


def smith_form(ctx: Context, A: list[list[int]]) -> tuple[list[list[int]], list[list[int]], list[list[int]], list[int]]:
    """Smith form ``U A V = D`` over ``Z/p^N``.

    ``A`` is ``n x m`` (rows first). Returns ``(U, Uinv, V, vals)`` where
    ``vals[k]`` is the valuation of the ``k``-th diagonal entry of ``D``,
    whose entries are exactly ``p^vals[k]``; only the nonzero ones are listed.
    """
    p, N, q = ctx.p, ctx.N, ctx.modulus
    n = len(A)
    m = len(A[0]) if A else 0
    D = [[x % q for x in row] for row in A]
    U, Uinv, V = _identity(n), _identity(n), _identity(m)
    vals: list[int] = []

    def row_op(i: int, k: int, t: int) -> None:
        # row_i += t * row_k
        D[i] = [(a + t * b) % q for a, b in zip(D[i], D[k])]
        U[i] = [(a + t * b) % q for a, b in zip(U[i], U[k])]
        for r in range(n):  # inverse: col_k -= t * col_i
            Uinv[r][k] = (Uinv[r][k] - t * Uinv[r][i]) % q

    def col_op(i: int, k: int, t: int) -> None:
        # col_i += t * col_k
        for r in range(n):
            D[r][i] = (D[r][i] + t * D[r][k]) % q
        for r in range(m):
            V[r][i] = (V[r][i] + t * V[r][k]) % q

    for k in range(min(n, m)):
        best = None
        for i in range(k, n):
            for j in range(k, m):
                if D[i][j]:
                    key = (_int_valuation(D[i][j], p, N), i, j)
                    if best is None or key < best:
                        best = key
        if best is None:
            break
        v, i, j = best
        if i != k:
            D[i], D[k] = D[k], D[i]
            U[i], U[k] = U[k], U[i]
            for r in range(n):
                Uinv[r][i], Uinv[r][k] = Uinv[r][k], Uinv[r][i]
        if j != k:
            for r in range(n):
                D[r][j], D[r][k] = D[r][k], D[r][j]
            for r in range(m):
                V[r][j], V[r][k] = V[r][k], V[r][j]
        u = D[k][k] // p**v
        ui = pow(u, -1, q)
        D[k] = [a * ui % q for a in D[k]]
        U[k] = [a * ui % q for a in U[k]]
        for r in range(n):
            Uinv[r][k] = Uinv[r][k] * u % q
        pv = p**v
        for i2 in range(n):
            if i2 != k and D[i2][k]:
                row_op(i2, k, -(D[i2][k] // pv))
        for j2 in range(k + 1, m):
            if D[k][j2]:
                col_op(j2, k, -(D[k][j2] // pv))
        vals.append(v)
    return U, Uinv, V, vals


def witness_map(a_tuple: Sequence[Vector], b_tuple: Sequence[Vector]) -> LinearMap | None:
    """An automorphism ``g`` of ``M`` with ``g(a_i) = b_i`` for all ``i``, or None.

    Such a ``g`` exists exactly when the two tuples have the same Smith data
    and the correspondence lifts to a unimodular basis change; the returned
    matrix restricts to the required isometry between the generated
    submodules (and their saturations). Empty tuples yield the identity.
    """
    if len(a_tuple) != len(b_tuple):
        raise ValueError("tuples must have equal length")
    vecs = list(a_tuple) + list(b_tuple)
    if not vecs:
        raise ValueError("cannot infer a context from empty tuples")
    ctx = common_context(vecs)
    p, q, n = ctx.p, ctx.modulus, ctx.n
    if not a_tuple:
        return LinearMap.identity(ctx)
    m = len(a_tuple)
    A = [[a_tuple[c][r] for c in range(m)] for r in range(n)]
    B = [[b_tuple[c][r] for c in range(m)] for r in range(n)]
    U, Uinv, V, vals = smith_form(ctx, A)
    r = len(vals)
    AV = _matmul(A, V, q)
    BV = _matmul(B, V, q)
    for k in range(r, m):
        if any(BV[i][k] for i in range(n)):
            return None
    z_cols: list[list[int]] = []
    for k in range(r):
        pv = p ** vals[k]
        diff = [(BV[i][k] - AV[i][k]) % q for i in range(n)]
        if any(d % pv for d in diff):
            return None
        z_cols.append([(Uinv[i][k] + diff[i] // pv) % q for i in range(n)])
    zvecs = [Vector(ctx, tuple(c)) for c in z_cols]
    if rank_mod_p(zvecs) < r:
        return None
    candidates = [Vector(ctx, tuple(Uinv[i][k] for i in range(n))) for k in range(r, n)]
    candidates += ctx.standard_basis()
    for cand in candidates:
        if len(zvecs) == n:
            break
        if rank_mod_p(zvecs + [cand]) == len(zvecs) + 1:
            zvecs.append(cand)
    Z = [[zvecs[k][i] for k in range(n)] for i in range(n)]
    G = _matmul(Z, U, q)
    g = LinearMap(ctx, tuple(tuple(row) for row in G))
    if any(g(a) != b for a, b in zip(a_tuple, b_tuple)):
        raise AssertionError("witness construction failed its own check")
    return g
