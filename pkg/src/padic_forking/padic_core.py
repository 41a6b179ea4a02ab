"""Exact arithmetic in the truncated module ``(Z/p^N)^n``.

Everything here is an immutable value object. A :class:`Context` fixes the
prime ``p``, the absolute precision ``N`` and the dimension ``n``; scalars and
vectors remember their context and refuse to mix with foreign ones.

Distances are never floats. A :class:`DistanceValue` stores the exponent ``k``
of ``p^-k`` and a separate flag for "equal at precision ``N``", so callers can
tell a genuine distance ``p^-(N-1)`` apart from indistinguishability.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import ContextMismatch, NonPrime, NonUnit

__all__ = [
    "BELOW_PRECISION",
    "Context",
    "DistanceValue",
    "Scalar",
    "Vector",
    "add",
    "distance",
    "is_prime",
    "multiply",
    "negate",
    "unit_inverse",
    "valuation",
]


def is_prime(p: int) -> bool:
    """Trial division primality test."""
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _int_valuation(x: int, p: int, N: int) -> int:
    x %= p**N
    if x == 0:
        return N
    k = 0
    while x % p == 0:
        x //= p
        k += 1
    return k


@dataclass(frozen=True)
class Context:
    """Ambient parameters: prime ``p``, precision ``N``, dimension ``n``."""

    p: int
    N: int
    n: int

    def __post_init__(self) -> None:
        for name in ("p", "N", "n"):
            if not isinstance(getattr(self, name), int):
                raise TypeError(f"{name} must be an int")
        if not is_prime(self.p):
            raise NonPrime(f"p={self.p} is not prime")
        if self.N < 1:
            raise ValueError(f"precision N must be >= 1, got {self.N}")
        if self.n < 1:
            raise ValueError(f"dimension n must be >= 1, got {self.n}")

    @property
    def modulus(self) -> int:
        return self.p**self.N

    def scalar(self, x: int) -> Scalar:
        return Scalar(self, x)

    def vector(self, coords: Iterable[int]) -> Vector:
        return Vector(self, tuple(coords))

    def zero(self) -> Vector:
        return Vector(self, (0,) * self.n)

    def basis_vector(self, i: int) -> Vector:
        """The ``i``-th standard basis vector (0-based)."""
        if not 0 <= i < self.n:
            raise IndexError(f"basis index {i} out of range for n={self.n}")
        return Vector(self, tuple(int(k == i) for k in range(self.n)))

    def standard_basis(self) -> list[Vector]:
        return [self.basis_vector(i) for i in range(self.n)]

    def all_vectors(self) -> Iterator[Vector]:
        """Every element of ``(Z/p^N)^n`` in lexicographic order of residues."""
        q = self.modulus
        total = q**self.n
        for idx in range(total):
            coords = []
            for _ in range(self.n):
                idx, r = divmod(idx, q)
                coords.append(r)
            yield Vector(self, tuple(reversed(coords)))

    def __str__(self) -> str:
        return f"ctx p={self.p} N={self.N} n={self.n}"


def _check_same(a_ctx: Context, b_ctx: Context) -> None:
    if a_ctx != b_ctx:
        raise ContextMismatch(f"{a_ctx} vs {b_ctx}")


@dataclass(frozen=True)
class Scalar:
    """An element of ``Z/p^N``; the residue is kept in ``[0, p^N)``."""

    ctx: Context
    residue: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "residue", int(self.residue) % self.ctx.modulus)

    def valuation(self) -> int:
        return _int_valuation(self.residue, self.ctx.p, self.ctx.N)

    def is_unit(self) -> bool:
        return self.residue % self.ctx.p != 0

    def _coerce(self, other: Scalar | int) -> int:
        if isinstance(other, Scalar):
            _check_same(self.ctx, other.ctx)
            return other.residue
        if isinstance(other, int):
            return other
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: Scalar | int) -> Scalar:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar(self.ctx, self.residue + o)

    __radd__ = __add__

    def __sub__(self, other: Scalar | int) -> Scalar:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar(self.ctx, self.residue - o)

    def __rsub__(self, other: int) -> Scalar:
        return Scalar(self.ctx, other - self.residue)

    def __mul__(self, other: Scalar | int) -> Scalar:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar(self.ctx, self.residue * o)

    __rmul__ = __mul__

    def __neg__(self) -> Scalar:
        return Scalar(self.ctx, -self.residue)

    def __int__(self) -> int:
        return self.residue

    def __repr__(self) -> str:
        return f"Scalar({self.residue} mod {self.ctx.p}^{self.ctx.N})"


def valuation(x: Scalar) -> int:
    """``max{k <= N : p^k | x}``, with ``v(0) = N``."""
    return x.valuation()


def add(x: Scalar, y: Scalar) -> Scalar:
    return x + y


def negate(x: Scalar) -> Scalar:
    return -x


def multiply(x: Scalar, y: Scalar) -> Scalar:
    return x * y


def unit_inverse(x: Scalar) -> Scalar:
    """Inverse of a unit of ``Z/p^N``.

    Raises:
        NonUnit: if ``p`` divides ``x``.
    """
    if not x.is_unit():
        raise NonUnit(f"{x.residue} is divisible by p={x.ctx.p}")
    return Scalar(x.ctx, pow(x.residue, -1, x.ctx.modulus))


@dataclass(frozen=True)
class Vector:
    """An element of ``(Z/p^N)^n``.

    Coordinates are stored as plain residues in ``[0, p^N)``; any integers are
    accepted at construction and reduced.
    """

    ctx: Context
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        coords = tuple(int(c) % self.ctx.modulus for c in self.coords)
        if len(coords) != self.ctx.n:
            raise ValueError(f"expected {self.ctx.n} coordinates, got {len(coords)}")
        object.__setattr__(self, "coords", coords)

    @property
    def scalars(self) -> tuple[Scalar, ...]:
        return tuple(Scalar(self.ctx, c) for c in self.coords)

    def __getitem__(self, i: int) -> int:
        return self.coords[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __add__(self, other: Vector) -> Vector:
        if not isinstance(other, Vector):
            return NotImplemented
        _check_same(self.ctx, other.ctx)
        return Vector(self.ctx, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: Vector) -> Vector:
        if not isinstance(other, Vector):
            return NotImplemented
        _check_same(self.ctx, other.ctx)
        return Vector(self.ctx, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> Vector:
        return Vector(self.ctx, tuple(-a for a in self.coords))

    def __mul__(self, t: Scalar | int) -> Vector:
        if isinstance(t, Scalar):
            _check_same(self.ctx, t.ctx)
            t = t.residue
        if not isinstance(t, int):
            return NotImplemented
        return Vector(self.ctx, tuple(t * a for a in self.coords))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def valuation(self) -> int:
        """Minimum coordinate valuation; ``N`` for the zero vector."""
        p, N = self.ctx.p, self.ctx.N
        return min(_int_valuation(c, p, N) for c in self.coords)

    def norm(self) -> DistanceValue:
        return DistanceValue.from_valuation(self.valuation(), self.ctx.N)

    def reduce(self, j: int) -> tuple[int, ...]:
        """Coordinates reduced mod ``p^j`` (a plain tuple, not a Vector)."""
        m = self.ctx.p**j
        return tuple(c % m for c in self.coords)

    def __repr__(self) -> str:
        return f"Vector({','.join(map(str, self.coords))})"


@functools.total_ordering
@dataclass(frozen=True)
class DistanceValue:
    """A distance ``p^-exponent``, or the flag :data:`BELOW_PRECISION`.

    ``exponent is None`` encodes :data:`BELOW_PRECISION`, which sorts below
    every ``p^-k``. Larger exponents are smaller distances.
    """

    exponent: int | None

    def __post_init__(self) -> None:
        if self.exponent is not None and self.exponent < 0:
            raise ValueError("distance exponent must be >= 0")

    @classmethod
    def from_valuation(cls, v: int, N: int) -> DistanceValue:
        return BELOW_PRECISION if v >= N else cls(v)

    @classmethod
    def parse(cls, text: str) -> DistanceValue:
        """Parse ``p^-<k>`` or ``0``."""
        text = text.strip()
        if text == "0":
            return BELOW_PRECISION
        m = re.fullmatch(r"p\^-(\d+)", text)
        if m is None:
            raise ValueError(f"not a distance: {text!r} (expected p^-<k> or 0)")
        return cls(int(m.group(1)))

    @property
    def is_below_precision(self) -> bool:
        return self.exponent is None

    def _key(self) -> float:
        return float("-inf") if self.exponent is None else -self.exponent

    def __lt__(self, other: DistanceValue) -> bool:
        if not isinstance(other, DistanceValue):
            return NotImplemented
        return self._key() < other._key()

    def __str__(self) -> str:
        return "0" if self.exponent is None else f"p^-{self.exponent}"

    def __repr__(self) -> str:
        return "BELOW_PRECISION" if self.exponent is None else f"DistanceValue(p^-{self.exponent})"


BELOW_PRECISION = DistanceValue(None)
ONE = DistanceValue(0)


def distance(a: Vector, b: Vector) -> DistanceValue:
    """Ultrametric distance between two vectors of the same context."""
    _check_same(a.ctx, b.ctx)
    return (a - b).norm()


def common_context(vectors: Sequence[Vector], ctx: Context | None = None) -> Context:
    """The single context shared by ``vectors`` (and ``ctx`` if given)."""
    for v in vectors:
        if ctx is None:
            ctx = v.ctx
        else:
            _check_same(ctx, v.ctx)
    if ctx is None:
        raise ValueError("cannot infer a context from an empty family; pass ctx=")
    return ctx
