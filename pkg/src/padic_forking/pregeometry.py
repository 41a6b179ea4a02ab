"""The forking geometry on the realizations of an unbounded type.

Fix ``A`` and a type ``q`` over ``A`` with radius ``r > 0``. On the set ``D``
of realizations of ``q``, "forks with" is an equivalence relation, and the
closure

    a* in cl(b_1*, ..., b_m*)  iff  a forks with {b_1, ..., b_m} over A

is a pregeometry on the classes, provided the right representatives are
used. Plain element-level forking (:func:`naive_closure_member`) is not
idempotent. :func:`closure_member` first thins the ``b``'s to a forking-free
family, which makes the answer independent of the representatives chosen.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import NotARealization, PreconditionViolated
from .indep import TypeInvariant, galois_type, independent
from .padic_core import Context, DistanceValue, Vector

__all__ = [
    "GeometryClass",
    "GeometrySpace",
    "closure_member",
    "dimension",
    "fp_line",
    "forks_equiv",
    "naive_closure_member",
]


@dataclass(frozen=True)
class GeometrySpace:
    """Realizations of a fixed unbounded type over ``A``."""

    A: tuple[Vector, ...]
    q: TypeInvariant

    def __post_init__(self) -> None:
        if self.q.bounded:
            raise PreconditionViolated("the defining type must be unbounded")
        object.__setattr__(self, "A", tuple(self.A))

    @classmethod
    def of(cls, representative: Vector, A: Sequence[Vector] = ()) -> GeometrySpace:
        return cls(tuple(A), galois_type(representative, list(A)))

    @property
    def ctx(self) -> Context:
        return self.q.anchor.ctx

    @property
    def radius(self) -> DistanceValue:
        return self.q.radius

    def contains(self, x: Vector) -> bool:
        return self.q.realized_by(x)

    def check(self, x: Vector) -> Vector:
        if not self.contains(x):
            raise NotARealization(f"{x} does not realize the defining type")
        return x

    def cls(self, x: Vector) -> GeometryClass:
        return GeometryClass(self.check(x))

    def candidates(self) -> Iterator[Vector]:
        """Deterministic enumeration of ``D``: anchor plus ``p^k`` times each vector."""
        step = self.ctx.p**self.radius.exponent
        for w in self.ctx.all_vectors():
            x = self.q.anchor + w * step
            if self.contains(x):
                yield x

    def sample(self, rng: random.Random, tries: int = 200) -> Vector:
        """A random element of ``D`` (anchor plus ``p^k`` times a uniform vector)."""
        ctx = self.ctx
        step = ctx.p**self.radius.exponent
        for _ in range(tries):
            w = Vector(ctx, tuple(rng.randrange(ctx.modulus) for _ in range(ctx.n)))
            x = self.q.anchor + w * step
            if self.contains(x):
                return x
        return next(self.candidates())

    def resample(self, b: Vector, rng: random.Random, tries: int = 200) -> Vector:
        """A random element of the class of ``b``; falls back to ``b`` itself.

        Candidates are ``anchor + l(b - anchor) + p^(k+1) s + p^k t`` with ``l``
        a unit and ``t`` a combination of base columns.
        """
        ctx = self.ctx
        p = ctx.p
        step = p**self.radius.exponent
        anchor = self.q.anchor
        for _ in range(tries):
            lam = rng.randrange(1, ctx.modulus)
            if lam % p == 0:
                continue
            s = Vector(ctx, tuple(rng.randrange(ctx.modulus) for _ in range(ctx.n)))
            x = anchor + (b - anchor) * lam + s * (step * p)
            for col in self.q.base.columns:
                x = x + col * (step * rng.randrange(ctx.modulus))
            if self.contains(x) and forks_equiv(x, b, self):
                return x
        return b


@dataclass(frozen=True)
class GeometryClass:
    representative: Vector


def forks_equiv(b: Vector, b2: Vector, G: GeometrySpace) -> bool:
    """Whether ``b`` forks with ``b2`` over ``A`` (both must lie in ``D``)."""
    G.check(b)
    G.check(b2)
    return not independent(b, G.A, [b2])


def _forking_free(reps: Sequence[Vector], G: GeometrySpace) -> list[Vector]:
    basis: list[Vector] = []
    for b in reps:
        if not basis or independent(b, G.A, basis):
            basis.append(b)
    return basis


def closure_member(a_class: GeometryClass, b_classes: Sequence[GeometryClass], G: GeometrySpace) -> bool:
    """Whether ``a*`` lies in the closure of the classes ``b_classes``."""
    a = G.check(a_class.representative)
    reps = [G.check(c.representative) for c in b_classes]
    if not reps:
        return False
    return not independent(a, G.A, _forking_free(reps, G))


def naive_closure_member(a: Vector, B: Sequence[Vector], G: GeometrySpace) -> bool:
    """Element-level closure: ``a`` forks with ``B`` over ``A``."""
    return not independent(a, G.A, list(B))


def dimension(classes: Sequence[GeometryClass], G: GeometrySpace) -> int:
    kept: list[GeometryClass] = []
    for c in classes:
        if not closure_member(c, kept, G):
            kept.append(c)
    return len(kept)


def fp_line(b: Vector, G: GeometrySpace) -> tuple[int, ...]:
    """The point of projective space over ``F_p`` given by ``b`` mod ``p``.

    Only meaningful when ``A`` generates nothing and the radius is 1.
    """
    if any(not x.is_zero() for x in G.A) or G.radius.exponent != 0:
        raise PreconditionViolated("fp_line needs an empty base and radius 1")
    G.check(b)
    p = b.ctx.p
    red = [c % p for c in b.coords]
    lead = next(c for c in red if c)
    inv = pow(lead, -1, p)
    return tuple(c * inv % p for c in red)
