"""Types over a parameter set, type distances, independence and rank.

The type of ``a`` over ``A`` is pinned down by two things: the distance ``r``
from ``a`` to the pure closure of ``A``, and the ball of radius ``r`` (inside
that closure) of elements closest to ``a``. :class:`TypeInvariant` stores the
closure, ``r`` and one point of the ball.

Thresholds ``eps`` are :class:`DistanceValue` instances; ``BELOW_PRECISION``
plays the role of zero.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import AmbientTooSmall, ContextMismatch
from .lattice import Submodule, closest, dist_to, member, saturate, span, witness_map
from .padic_core import BELOW_PRECISION, Context, DistanceValue, Vector, distance

__all__ = [
    "TypeDistance",
    "TypeInvariant",
    "eps_independent",
    "free_extension",
    "galois_type",
    "independent",
    "independent_tuple",
    "lascar_eps_splits",
    "rank",
    "same_type",
    "tuple_type_distance",
    "type_distance",
]


@dataclass(frozen=True)
class TypeInvariant:
    base: Submodule
    radius: DistanceValue
    anchor: Vector

    @property
    def bounded(self) -> bool:
        return self.radius.is_below_precision

    def realized_by(self, x: Vector) -> bool:
        """Whether ``x`` has this type over ``base``."""
        if self.bounded:
            return x == self.anchor
        return dist_to(x, self.base) == self.radius and distance(x, self.anchor) <= self.radius


@dataclass(frozen=True)
class TypeDistance:
    value: DistanceValue

    def __str__(self) -> str:
        return str(self.value)


def closure(A: Sequence[Vector], ctx: Context | None = None) -> Submodule:
    return saturate(span(A, ctx))


def galois_type(a: Vector, A: Sequence[Vector]) -> TypeInvariant:
    base = closure(A, a.ctx)
    return TypeInvariant(base, dist_to(a, base), closest(a, base))


def same_type(a: Vector, b: Vector, A: Sequence[Vector]) -> bool:
    """Whether some automorphism fixing ``A`` pointwise sends ``a`` to ``b``."""
    qa, qb = galois_type(a, A), galois_type(b, A)
    if qa.radius != qb.radius:
        return False
    if qa.bounded:
        # bounded types are fixed points
        return a == b
    return distance(qa.anchor, qb.anchor) <= qa.radius


def type_distance(q1: TypeInvariant, q2: TypeInvariant) -> TypeDistance:
    """Infimum distance between realizations of two types over one base."""
    if q1.base != q2.base:
        raise ContextMismatch("types live over different bases")
    if q1.radius == q2.radius and (
        (q1.bounded and q1.anchor == q2.anchor)
        or (not q1.bounded and distance(q1.anchor, q2.anchor) <= q1.radius)
    ):
        return TypeDistance(BELOW_PRECISION)
    return TypeDistance(max(q1.radius, q2.radius, distance(q1.anchor, q2.anchor)))


def rank(a: Vector, A: Sequence[Vector]) -> DistanceValue:
    return dist_to(a, closure(A, a.ctx))


def independent(a: Vector, A: Sequence[Vector], B: Sequence[Vector]) -> bool:
    """``a`` does not fork with ``B`` over ``A``: adding ``B`` keeps the distance."""
    return rank(a, list(A)) == rank(a, list(A) + list(B))


def independent_tuple(a_tuple: Sequence[Vector], A: Sequence[Vector], B: Sequence[Vector]) -> bool:
    base = list(A)
    for a in a_tuple:
        if not independent(a, base, B):
            return False
        base.append(a)
    return True


def free_extension(a: Vector, A: Sequence[Vector], B: Sequence[Vector]) -> Vector:
    """A realization of the type of ``a`` over ``A`` that is independent from ``B``.

    Moves the anchor of ``a`` by ``p^k`` times the first standard basis
    direction that is still unit-free in ``<A, B, a>``, where ``p^-k`` is the
    rank of ``a`` over ``A``.

    Raises:
        AmbientTooSmall: if every standard direction is already used up.
    """
    ctx = a.ctx
    A, B = list(A), list(B)
    q = galois_type(a, A)
    if q.bounded:
        return a
    k = q.radius.exponent
    used = span(A + B + [a, q.anchor], ctx)
    top = ctx.p ** (ctx.N - 1)
    for u in ctx.standard_basis():
        if not member(u * top, used, ctx.N):
            b = q.anchor + u * ctx.p**k
            if not (same_type(b, a, A) and independent(b, A, B)):
                raise AssertionError(f"free extension {b} failed its postcondition")
            return b
    raise AmbientTooSmall(f"no fresh direction left in dimension n={ctx.n}")


def eps_independent(
    a: Vector, A: Sequence[Vector], B: Sequence[Vector], eps: DistanceValue
) -> bool:
    """Whether the type of ``a`` over ``A`` and ``B`` is within ``eps`` of the free extension."""
    AB = list(A) + list(B)
    b = free_extension(a, A, B)
    d = type_distance(galois_type(a, AB), galois_type(b, AB)).value
    return d <= eps


def _tuple_same_type(A: list[Vector], xs: Sequence[Vector], ys: Sequence[Vector]) -> bool:
    return witness_map(A + list(xs), A + list(ys)) is not None


def tuple_type_distance(
    A: Sequence[Vector],
    xs: Sequence[Vector],
    ys: Sequence[Vector],
    cap: int = 1 << 14,
) -> DistanceValue | None:
    """Distance from the tuple ``xs`` to the set of realizations of the type of ``ys`` over ``A``.

    Searches tuples congruent to ``xs`` mod ``p^j`` for decreasing ``j``.
    Returns None when a level would need more than ``cap`` candidates.
    """
    A = list(A)
    ctx = xs[0].ctx
    p, N, n = ctx.p, ctx.N, ctx.n
    if _tuple_same_type(A, ys, xs):
        return BELOW_PRECISION
    L = len(xs)
    for j in range(N - 1, 0, -1):
        width = p ** (N - j)
        if width ** (n * L) > cap:
            return None
        step = p**j
        for digits in itertools.product(range(width), repeat=n * L):
            cand = [
                xs[i] + Vector(ctx, digits[i * n:(i + 1) * n]) * step
                for i in range(L)
            ]
            if _tuple_same_type(A, ys, cand):
                return DistanceValue(j)
    return DistanceValue(0)


def lascar_eps_splits(
    a: Vector,
    A: Sequence[Vector],
    B: Sequence[Vector],
    eps: DistanceValue,
    L: int,
    cap: int = 1 << 14,
) -> bool:
    """Bounded search for a splitting witness.

    Looks for tuples ``b``, ``c`` from ``B`` of length at most ``L`` with the
    same type over ``A`` such that ``(a, b)`` and ``(a, c)`` have types over
    ``A`` more than ``eps`` apart. A False answer only means no witness was
    found within the bounds.
    """
    if L < 1:
        raise ValueError("L must be >= 1")
    A, B = list(A), list(B)
    for length in range(1, L + 1):
        # the type distance is symmetric, so each unordered pair is enough
        for ib, ic in itertools.combinations(itertools.product(range(len(B)), repeat=length), 2):
            bs = [B[i] for i in ib]
            cs = [B[i] for i in ic]
            if not _tuple_same_type(A, bs, cs):
                continue
            d = tuple_type_distance(A, [a, *bs], [a, *cs], cap)
            if d is not None and d > eps:
                return True
    return False
