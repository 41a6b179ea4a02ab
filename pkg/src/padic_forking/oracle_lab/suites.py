"""Randomized and exhaustive property suites, addressable by name.

Each suite is a function ``(rng, ctx, config) -> outcome`` run once per
instance. Instance ``i`` of suite ``name`` gets its own generator seeded with
``f"{seed}:{name}:{i}"`` and the context ``contexts[i % len(contexts)]``, so a
failure replays from its index alone. Outcomes: ``None`` (passed), ``SKIP``
(instance not applicable, not counted), ``HIT`` (passed, and the property's
premise actually fired) or a string describing the failure.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable

from ..errors import AmbientTooSmall, UnknownSuite
from ..indep import (
    eps_independent,
    free_extension,
    galois_type,
    independent,
    independent_tuple,
    rank,
    same_type,
    tuple_type_distance,
    type_distance,
)
from ..lattice import closest, dist_to, member, saturate, span, witness_map
from ..padic_core import BELOW_PRECISION, Context, DistanceValue, Vector, distance
from ..pregeometry import (
    GeometryClass,
    GeometrySpace,
    closure_member,
    fp_line,
    forks_equiv,
    naive_closure_member,
)
from . import oracles

ENUMERATION_CONTEXTS = ((2, 2, 2), (2, 3, 2), (2, 2, 3), (3, 2, 2), (3, 3, 2))
SAMPLED_CONTEXTS = ENUMERATION_CONTEXTS + ((2, 3, 4), (3, 2, 4), (2, 4, 4), (3, 3, 3), (2, 3, 5))
GEOMETRY_CONTEXTS = ((2, 2, 2), (2, 3, 2), (2, 2, 3), (3, 2, 2), (3, 3, 2), (2, 3, 4), (3, 2, 4), (2, 4, 4))

SKIP = "skip"
HIT = "hit"


def identity_modulus(eps: DistanceValue) -> DistanceValue:
    return eps


@dataclass(frozen=True)
class PropertyConfig:
    """Run parameters. ``n_eps`` and ``m_eps_delta`` are the continuity moduli (identity here)."""

    seed: int = 20240611
    instances: int = 500
    enumeration_contexts: tuple[tuple[int, int, int], ...] = ENUMERATION_CONTEXTS
    sampled_contexts: tuple[tuple[int, int, int], ...] = SAMPLED_CONTEXTS
    geometry_contexts: tuple[tuple[int, int, int], ...] = GEOMETRY_CONTEXTS
    resamples: int = 25
    n_eps: Callable[[DistanceValue], DistanceValue] = identity_modulus
    m_eps_delta: Callable[[DistanceValue, DistanceValue], DistanceValue] = lambda eps, delta: eps

    def __post_init__(self) -> None:
        for p, N, n in self.enumeration_contexts:
            if (p**N) ** n > oracles.ENUMERATION_LIMIT:
                raise ValueError(f"enumeration context {(p, N, n)} exceeds the state limit")


@dataclass(frozen=True)
class Failure:
    index: int
    context: tuple[int, int, int]
    detail: str

    def replay_key(self, seed: int, suite: str) -> str:
        return f"{seed}:{suite}:{self.index}"


@dataclass(frozen=True)
class SuiteReport:
    name: str
    instances: int
    skipped: int
    failures: tuple[Failure, ...]
    seed: int
    nontrivial: int = 0
    per_context: tuple[tuple[tuple[int, int, int], int], ...] = ()
    wall_time: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{self.name} instances={self.instances} nontrivial={self.nontrivial} "
            f"failures={len(self.failures)} {status}"
        )

    def details(self) -> list[str]:
        return [
            f"  replay {f.replay_key(self.seed, self.name)} ctx={f.context}: {f.detail}"
            for f in self.failures
        ]


@dataclass(frozen=True)
class _Suite:
    fn: Callable
    contexts: str
    scale: float
    minimum: int
    exhaustive: bool


SUITES: dict[str, _Suite] = {}


def suite(name: str, contexts: str = "sampled", scale: float = 1.0, minimum: int = 0, exhaustive: bool = False):
    def deco(fn):
        SUITES[name] = _Suite(fn, contexts, scale, minimum, exhaustive)
        return fn

    return deco


# names other tools already use for some suites
ALIASES = {"prop66_symmetry": "independence_symmetry"}


def suite_names() -> list[str]:
    return sorted(SUITES)


def run_suite(name: str, config: PropertyConfig | None = None) -> SuiteReport:
    """Run one named suite. Deterministic for a fixed ``config.seed``.

    Raises:
        UnknownSuite: if no suite has that name.
    """
    config = config or PropertyConfig()
    name = ALIASES.get(name, name)
    try:
        s = SUITES[name]
    except KeyError:
        raise UnknownSuite(name) from None
    ctxs = [Context(*c) for c in getattr(config, f"{s.contexts}_contexts")]
    start = time.perf_counter()
    failures: list[Failure] = []
    ran = skipped = hits = 0
    counts = {(c.p, c.N, c.n): 0 for c in ctxs}
    if s.exhaustive:
        for i, ctx in enumerate(ctxs):
            for detail in s.fn(ctx, config):
                failures.append(Failure(i, (ctx.p, ctx.N, ctx.n), detail))
            ran += 1
            counts[(ctx.p, ctx.N, ctx.n)] += 1
    else:
        target = max(int(config.instances * s.scale), s.minimum)
        i = 0
        # skipped instances do not count; give up after a generous budget
        while ran < target and i < 20 * target + 100:
            ctx = ctxs[i % len(ctxs)]
            rng = random.Random(f"{config.seed}:{name}:{i}")
            try:
                out = s.fn(rng, ctx, config)
            except AmbientTooSmall:
                out = SKIP
            if out == SKIP:
                skipped += 1
            else:
                ran += 1
                counts[(ctx.p, ctx.N, ctx.n)] += 1
                if out == HIT:
                    hits += 1
                elif out is not None:
                    failures.append(Failure(i, (ctx.p, ctx.N, ctx.n), out))
            i += 1
    return SuiteReport(
        name, ran, skipped, tuple(failures), config.seed, hits, tuple(counts.items()), time.perf_counter() - start
    )


def run_all(config: PropertyConfig | None = None, names: list[str] | None = None) -> list[SuiteReport]:
    return [run_suite(n, config) for n in (names or suite_names())]


def render_report(reports: list[SuiteReport], verbose: bool = True) -> str:
    lines = []
    for r in reports:
        lines.append(r.line())
        if verbose:
            lines.extend(r.details())
    total = sum(len(r.failures) for r in reports)
    lines.append(f"suites={len(reports)} failed={sum(not r.passed for r in reports)} failures={total}")
    return "\n".join(lines)


# random instances


def rand_vec(rng: random.Random, ctx: Context) -> Vector:
    return Vector(ctx, tuple(rng.randrange(ctx.modulus) for _ in range(ctx.n)))


def rand_near(rng: random.Random, v: Vector, k: int | None = None) -> Vector:
    """``v + p^k w`` for random ``w`` and (by default) random ``k``."""
    ctx = v.ctx
    if k is None:
        k = rng.randrange(ctx.N + 1)
    return v + rand_vec(rng, ctx) * ctx.p**k


def rand_family(rng: random.Random, ctx: Context, lo: int = 0, hi: int | None = None) -> list[Vector]:
    """Generator sets of size in ``[lo, hi]``, mixing uniform vectors with near-dependent ones."""
    hi = ctx.n if hi is None else hi
    out: list[Vector] = []
    for _ in range(rng.randint(lo, max(lo, hi))):
        out.append(rand_related(rng, ctx, out))
    return out


def rand_related(rng: random.Random, ctx: Context, pool: list[Vector]) -> Vector:
    """Uniform, or a combination of ``pool`` plus a ``p^k`` perturbation."""
    if not pool or rng.random() < 0.4:
        v = rand_vec(rng, ctx)
        if rng.random() < 0.3:
            v = v * ctx.p ** rng.randrange(1, ctx.N + 1)
        return v
    v = ctx.zero()
    for b in pool:
        v = v + b * rng.randrange(ctx.modulus)
    return rand_near(rng, v)


def rand_eps(rng: random.Random, ctx: Context, near: DistanceValue | None = None) -> DistanceValue:
    """Uniform over the distance lattice, or (half the time) adjacent to ``near``."""
    k = rng.randrange(ctx.N + 1)
    if near is not None and rng.random() < 0.5:
        base = ctx.N if near.is_below_precision else near.exponent
        k = min(ctx.N, max(0, base + rng.choice((-1, 0, 1))))
    return BELOW_PRECISION if k == ctx.N else DistanceValue(k)


# padic_core


@suite("core_ultrametric")
def _ultrametric(rng, ctx, cfg):
    a, b, c = (rand_related(rng, ctx, [rand_vec(rng, ctx)]) for _ in range(3))
    if distance(a, c) > max(distance(a, b), distance(b, c)):
        return f"a={a} b={b} c={c}"


@suite("core_translation")
def _translation(rng, ctx, cfg):
    a, b, t = rand_vec(rng, ctx), rand_vec(rng, ctx), rand_vec(rng, ctx)
    b = rand_near(rng, a) if rng.random() < 0.5 else b
    if distance(a + t, b + t) != distance(a, b):
        return f"a={a} b={b} t={t}"


@suite("core_scaling")
def _scaling(rng, ctx, cfg):
    a = rand_vec(rng, ctx)
    b = rand_near(rng, a)
    d = distance(a, b)
    want = BELOW_PRECISION if d.is_below_precision or d.exponent + 1 >= ctx.N else DistanceValue(d.exponent + 1)
    if distance(a * ctx.p, b * ctx.p) != want:
        return f"a={a} b={b}"


@suite("core_valuation_laws")
def _valuation_laws(rng, ctx, cfg):
    x = ctx.scalar(rng.randrange(ctx.modulus) * ctx.p ** rng.randrange(ctx.N))
    y = ctx.scalar(rng.randrange(ctx.modulus))
    if (x * y).valuation() != min(ctx.N, x.valuation() + y.valuation()):
        return f"product x={x} y={y}"
    if (x + y).valuation() < min(x.valuation(), y.valuation()):
        return f"sum x={x} y={y}"


# lattice


@suite("lattice_dist_oracle", contexts="enumeration", scale=5.0)
def _dist_oracle(rng, ctx, cfg):
    gens = rand_family(rng, ctx)
    x = rand_related(rng, ctx, gens)
    S = span(gens, ctx)
    got, want = dist_to(x, S), oracles.oracle_dist(x, S)
    if got != want:
        return f"x={x} gens={gens}: dist_to={got} oracle={want}"


@suite("lattice_saturated_dist_oracle", contexts="enumeration", scale=5.0)
def _sat_dist_oracle(rng, ctx, cfg):
    gens = rand_family(rng, ctx)
    x = rand_related(rng, ctx, gens)
    T = saturate(span(gens, ctx))
    got, want = dist_to(x, T), oracles.oracle_dist(x, T)
    if got != want:
        return f"x={x} gens={gens}: dist_to={got} oracle={want}"


@suite("lattice_saturate_idempotent")
def _sat_idem(rng, ctx, cfg):
    T = saturate(span(rand_family(rng, ctx), ctx))
    if saturate(T) != T:
        return f"T={T}"
    S2 = saturate(span(list(T.generators()), ctx))
    if S2 != T:
        return f"re-saturating the recovered generators changed the module: {T}"


@suite("lattice_saturate_contains")
def _sat_contains(rng, ctx, cfg):
    gens = rand_family(rng, ctx, lo=1)
    S = span(gens, ctx)
    T = saturate(S)
    if T.rank != S.rank:
        return f"rank changed for {gens}"
    for g in gens:
        if not member(g, T, ctx.N) or not member(g, S, ctx.N):
            return f"generator {g} lost, gens={gens}"


@suite("lattice_span_canonical")
def _canonical(rng, ctx, cfg):
    gens = rand_family(rng, ctx, lo=1)
    mixed = list(gens)
    rng.shuffle(mixed)
    extra = ctx.zero()
    for g in gens:
        extra = extra + g * rng.randrange(ctx.modulus)
    if span(gens, ctx) != span(mixed + [extra], ctx):
        return f"gens={gens} extra={extra}"


@suite("lattice_purity", contexts="enumeration", exhaustive=True)
def _purity(ctx, cfg):
    rng = random.Random(f"{cfg.seed}:purity:{ctx}")
    for _ in range(8):
        T = saturate(span(rand_family(rng, ctx), ctx))
        for x in ctx.all_vectors():
            if member(x * ctx.p, T, ctx.N) and not member(x, T, ctx.N - 1):
                yield f"x={x} T={T}"
                return


@suite("lattice_dist_monotone")
def _dist_monotone(rng, ctx, cfg):
    gens = rand_family(rng, ctx)
    more = gens + rand_family(rng, ctx, hi=2)
    x = rand_related(rng, ctx, more)
    for sat in (False, True):
        S, T = span(gens, ctx), span(more, ctx)
        if sat:
            S, T = saturate(S), saturate(T)
        if dist_to(x, T) > dist_to(x, S):
            return f"x={x} S<={gens} T<={more} saturated={sat}"


@suite("lattice_closest")
def _closest(rng, ctx, cfg):
    gens = rand_family(rng, ctx)
    x = rand_related(rng, ctx, gens)
    for S in (span(gens, ctx), saturate(span(gens, ctx))):
        c = closest(x, S)
        d = dist_to(x, S)
        j = ctx.N if d.is_below_precision else d.exponent
        if distance(x, c) != d:
            return f"x={x} gens={gens}: distance to closest {distance(x, c)} != {d}"
        if not member(c, S, j):
            return f"x={x} gens={gens}: closest {c} not in S at level {j}"
        if not S.saturated and not member(c, S, ctx.N):
            return f"x={x} gens={gens}: closest {c} not in the span"


@suite("lattice_witness_isometry")
def _witness(rng, ctx, cfg):
    a = rand_family(rng, ctx, lo=1)
    # images under a random automorphism, sometimes perturbed
    g = _random_automorphism(rng, ctx)
    b = [g(v) for v in a]
    if rng.random() < 0.3:
        i = rng.randrange(len(b))
        b[i] = rand_near(rng, b[i])
    w = witness_map(a, b)
    if w is None:
        if b == [g(v) for v in a]:
            return f"no witness for an automorphic image a={a}"
        return None
    if not w.is_invertible():
        return f"witness not invertible a={a} b={b}"
    for u, v in zip(a, b):
        if w(u) != v:
            return f"witness misses {u}->{v}"
    for _ in range(4):
        u = _combo(rng, ctx, a)
        v = _combo(rng, ctx, a)
        if distance(w(u), w(v)) != distance(u, v) or w(u + v) != w(u) + w(v):
            return f"witness not an additive isometry on {u},{v}"


def _combo(rng, ctx, vs):
    out = ctx.zero()
    for v in vs:
        out = out + v * rng.randrange(ctx.modulus)
    return out


def _random_automorphism(rng, ctx):
    from ..lattice import LinearMap, rank_mod_p

    while True:
        rows = [Vector(ctx, tuple(rng.randrange(ctx.modulus) for _ in range(ctx.n))) for _ in range(ctx.n)]
        if rank_mod_p(rows) == ctx.n:
            return LinearMap(ctx, tuple(r.coords for r in rows))


# indep


def _abc(rng, ctx, max_params=None):
    hi = ctx.n if max_params is None else max_params
    A = rand_family(rng, ctx, hi=hi)
    B = []
    for _ in range(rng.randint(0, max(0, hi - len(A)))):
        B.append(rand_related(rng, ctx, A + B))
    a = rand_related(rng, ctx, B if B and rng.random() < 0.5 else A + B)
    return a, A, B


@suite("same_type_equivalence")
def _same_type_eq(rng, ctx, cfg):
    A = rand_family(rng, ctx, hi=ctx.n - 1)
    a = rand_related(rng, ctx, A)
    b = rand_near(rng, a) if rng.random() < 0.7 else rand_vec(rng, ctx)
    c = rand_near(rng, b) if rng.random() < 0.7 else rand_vec(rng, ctx)
    if not same_type(a, a, A):
        return f"not reflexive at {a}"
    if same_type(a, b, A) != same_type(b, a, A):
        return f"not symmetric a={a} b={b} A={A}"
    if same_type(a, b, A) and same_type(b, c, A) and not same_type(a, c, A):
        return f"not transitive a={a} b={b} c={c} A={A}"


@suite("same_type_witness", contexts="enumeration", exhaustive=True)
def _same_type_witness(ctx, cfg):
    # exhaustive over pairs for a few bases, on the smallest contexts only
    if ctx.modulus**ctx.n > 64:
        return
    rng = random.Random(f"{cfg.seed}:same_type_witness:{ctx}")
    bases = [[]] + [rand_family(rng, ctx, lo=1, hi=ctx.n - 1) for _ in range(3)]
    pts = list(ctx.all_vectors())
    for A in bases:
        for a in pts:
            for b in pts:
                st = same_type(a, b, A)
                wt = witness_map(A + [a], A + [b]) is not None if A else witness_map([a], [b]) is not None
                if st != wt:
                    yield f"a={a} b={b} A={A}: same_type={st} witness={wt}"
                    return


@suite("indep_rank_identity")
def _rank_identity(rng, ctx, cfg):
    a, A, B = _abc(rng, ctx)
    if independent(a, A, B) != (rank(a, A + B) == rank(a, A)):
        return f"a={a} A={A} B={B}"


@suite("independence_symmetry")
def _symmetry(rng, ctx, cfg):
    A = rand_family(rng, ctx, hi=ctx.n - 1)
    a = rand_related(rng, ctx, A)
    b = rand_related(rng, ctx, A + [a])
    ab = independent(a, A, [b])
    if ab != independent(b, A, [a]):
        return f"a={a} b={b} A={A}"
    return None if ab else HIT


@suite("independence_base_monotone")
def _base_monotone(rng, ctx, cfg):
    a, A, B = _abc(rng, ctx)
    r0, r1 = rank(a, A), rank(a, A + B)
    if r1 > r0:
        return f"a={a} A={A} B={B}"
    return HIT if r1 < r0 else None


@suite("eps_rank_coherence")
def _eps_coherence(rng, ctx, cfg):
    a, A, B = _abc(rng, ctx, max_params=ctx.n - 1)
    eps = rand_eps(rng, ctx, rank(a, A))
    got = eps_independent(a, A, B, eps)
    ind = independent(a, A, B)
    want = ind or eps >= rank(a, A)
    if got != want:
        return f"a={a} A={A} B={B} eps={eps}: eps_independent={got}"
    return None if ind else HIT


def _chain(rng, ctx):
    hi = ctx.n - 1
    A = rand_family(rng, ctx, hi=min(hi, 1))
    B = A + [rand_related(rng, ctx, A) for _ in range(rng.randint(0, max(0, hi - len(A))))]
    C = B + [rand_related(rng, ctx, B) for _ in range(rng.randint(0, max(0, hi - len(B))))]
    # build a from the added parameters half the time, so that forking is common
    fresh = C[len(A):]
    a = rand_related(rng, ctx, fresh if fresh and rng.random() < 0.5 else C)
    return a, A, B, C


@suite("eps_monotone_base")
def _eps_mono_base(rng, ctx, cfg):
    a, A, C, D = _chain(rng, ctx)
    eps = rand_eps(rng, ctx, rank(a, A))
    if eps_independent(a, A, D, eps):
        if not eps_independent(a, A, C, eps):
            return f"a={a} A={A} C={C} D={D} eps={eps}"
        return None if independent(a, A, D) else HIT


@suite("eps_monotone_threshold")
def _eps_mono_eps(rng, ctx, cfg):
    a, A, B, _ = _chain(rng, ctx)
    r = rank(a, A)
    e1, e2 = sorted([rand_eps(rng, ctx, r), rand_eps(rng, ctx, r)])
    if eps_independent(a, A, B, e1):
        if not eps_independent(a, A, B, e2):
            return f"a={a} A={A} B={B} delta={e1} eps={e2}"
        return None if independent(a, A, B) else HIT


@suite("eps_transitivity")
def _eps_trans(rng, ctx, cfg):
    a, A, B, C = _chain(rng, ctx)
    eps = cfg.n_eps(rand_eps(rng, ctx, rank(a, A)))
    if eps_independent(a, A, B, eps) and eps_independent(a, B, C, eps):
        if not eps_independent(a, A, C, eps):
            return f"a={a} A={A} B={B} C={C} eps={eps}"
        return None if independent(a, A, C) else HIT


@suite("local_character")
def _local_character(rng, ctx, cfg):
    A = rand_family(rng, ctx, hi=ctx.n - 2)
    a = rand_related(rng, ctx, A)
    B0 = list(span(A, ctx).columns)
    for j in range(ctx.N + 1):
        eps = BELOW_PRECISION if j == ctx.N else DistanceValue(j)
        if not eps_independent(a, B0, A, eps):
            return f"a={a} A={A} eps={eps}"


@suite("rank_invariance")
def _rank_invariance(rng, ctx, cfg):
    a, A, C = _abc(rng, ctx)
    if independent(a, A, C):
        if rank(a, A + C) != rank(a, A):
            return f"a={a} A={A} C={C}"
        return HIT if C and not rank(a, A).is_below_precision else None


@suite("free_extension_post")
def _free_ext(rng, ctx, cfg):
    a, A, B = _abc(rng, ctx, max_params=ctx.n - 1)
    b = free_extension(a, A, B)
    if not same_type(b, a, A) or not independent(b, A, B):
        return f"a={a} A={A} B={B} b={b}"


def _type_triple(rng, ctx):
    A = rand_family(rng, ctx, hi=ctx.n - 1)
    x = rand_related(rng, ctx, A)
    y = rand_near(rng, x)
    z = rand_near(rng, y) if rng.random() < 0.5 else rand_near(rng, x)
    return A, [x, y, z], [galois_type(v, A) for v in (x, y, z)]


@suite("almost_summability")
def _almost_summability(rng, ctx, cfg):
    A, _, (t1, t2, t3) = _type_triple(rng, ctx)
    delta, eps = sorted([rand_eps(rng, ctx), rand_eps(rng, ctx)])
    m = cfg.m_eps_delta(eps, delta)
    d12 = type_distance(t1, t2).value
    d23 = type_distance(t2, t3).value
    d13 = type_distance(t1, t3).value
    if d12 <= delta and d23 <= m:
        if not d13 <= eps:
            return f"A={A} types={t1},{t2},{t3} delta={delta} eps={eps}"
        return HIT if not d23.is_below_precision else None


@suite("type_distance_oracle", contexts="enumeration", scale=3.0)
def _type_distance_oracle(rng, ctx, cfg):
    A, _, (t1, t2, _) = _type_triple(rng, ctx)
    got = type_distance(t1, t2).value
    want = oracles.oracle_type_distance(t1, t2)
    if got != want:
        return f"A={A} q1={t1} q2={t2}: closed form {got} oracle {want}"
    return HIT if got.exponent not in (None, 0) else None


@suite("type_distance_symmetric")
def _type_distance_sym(rng, ctx, cfg):
    A, (x, y, _), (t1, t2, _) = _type_triple(rng, ctx)
    d = type_distance(t1, t2).value
    if d != type_distance(t2, t1).value:
        return f"asymmetric A={A}"
    if d.is_below_precision != same_type(x, y, A):
        return f"zero distance mismatch A={A} x={x} y={y}"


@suite("anchor_insensitivity")
def _anchor_insensitivity(rng, ctx, cfg):
    A = rand_family(rng, ctx, hi=ctx.n - 1)
    a = rand_related(rng, ctx, A)
    b = rand_near(rng, a)
    q = galois_type(a, A)
    if q.bounded:
        return SKIP
    # any other point of the anchor ball gives the same answers
    alt = q.anchor + _combo(rng, ctx, list(q.base.columns)) * ctx.p**q.radius.exponent
    q2 = type(q)(q.base, q.radius, alt)
    qb = galois_type(b, A)
    if type_distance(q, qb) != type_distance(q2, qb):
        return f"a={a} b={b} A={A} alt={alt}"
    if q.realized_by(b) != q2.realized_by(b):
        return f"a={a} b={b} A={A} alt={alt}"


@suite("extension_stability")
def _extension_stability(rng, ctx, cfg):
    A = rand_family(rng, ctx, hi=ctx.n - 2)
    x = rand_related(rng, ctx, A)
    y = rand_near(rng, x)
    C = [rand_related(rng, ctx, A)]
    if not (independent(x, A, C) and independent(y, A, C)):
        return SKIP
    d0 = type_distance(galois_type(x, A), galois_type(y, A)).value
    d1 = type_distance(galois_type(x, A + C), galois_type(y, A + C)).value
    if d1 > d0:
        return f"x={x} y={y} A={A} C={C}: {d0} -> {d1}"
    # pairs sharing a second coordinate, by bounded search
    w = rand_related(rng, ctx, A)
    if ctx.p ** (2 * ctx.n) <= 256 and independent_tuple([x, w], A, C) and independent_tuple([y, w], A, C):
        t0 = tuple_type_distance(A, [x, w], [y, w])
        t1 = tuple_type_distance(A + C, [x, w], [y, w])
        if t0 is not None and t1 is not None and t1 > t0:
            return f"x={x} y={y} w={w} A={A} C={C}: pair {t0} -> {t1}"
    return None if d0.is_below_precision else HIT


# pregeometry


def _space(rng, ctx):
    A = rand_family(rng, ctx, hi=max(0, ctx.n - 2))
    a = rand_related(rng, ctx, A)
    q = galois_type(a, A)
    if q.bounded:
        return None
    return GeometrySpace(tuple(A), q)


def _member_from(rng, G, pool):
    """A realization built from ``pool`` (forking with it more often than not)."""
    ctx = G.ctx
    if pool and rng.random() < 0.6:
        anchor = G.q.anchor
        x = anchor
        for b in pool:
            x = x + (b - anchor) * rng.randrange(ctx.modulus)
        x = x + rand_vec(rng, ctx) * ctx.p ** (G.radius.exponent + rng.randrange(1, ctx.N + 1))
        if G.contains(x):
            return x
    return G.sample(rng)


@suite("pregeometry_exchange", contexts="geometry", scale=0.6, minimum=300)
def _exchange(rng, ctx, cfg):
    G = _space(rng, ctx)
    if G is None:
        return SKIP
    Bs = []
    for _ in range(rng.randint(0, 2)):
        Bs.append(_member_from(rng, G, Bs))
    c = _member_from(rng, G, Bs)
    a = _member_from(rng, G, Bs + [c])
    K = GeometryClass
    Bc = [K(b) for b in Bs]
    if closure_member(K(a), Bc + [K(c)], G) and not closure_member(K(a), Bc, G):
        if not closure_member(K(c), Bc + [K(a)], G):
            return f"A={G.A} B={Bs} a={a} c={c}"
        return HIT


@suite("pregeometry_idempotence", contexts="geometry", scale=0.6, minimum=300)
def _idempotence(rng, ctx, cfg):
    G = _space(rng, ctx)
    if G is None:
        return SKIP
    Bs = []
    for _ in range(rng.randint(1, 3)):
        Bs.append(_member_from(rng, G, Bs))
    c = _member_from(rng, G, Bs)
    a = _member_from(rng, G, Bs + [c])
    K = GeometryClass
    Bc = [K(b) for b in Bs]
    if closure_member(K(c), Bc, G) and closure_member(K(a), Bc + [K(c)], G):
        if not closure_member(K(a), Bc, G):
            return f"A={G.A} B={Bs} c={c} a={a}"
        return HIT


@suite("pregeometry_closure_structure", contexts="geometry", scale=0.6, minimum=300)
def _closure_structure(rng, ctx, cfg):
    G = _space(rng, ctx)
    if G is None:
        return SKIP
    Bs = []
    for _ in range(rng.randint(1, 3)):
        Bs.append(_member_from(rng, G, Bs))
    a = _member_from(rng, G, Bs)
    extra = G.sample(rng)
    K = GeometryClass
    Bc = [K(b) for b in Bs]
    for b in Bc:
        if not closure_member(b, Bc, G):
            return f"{b} not in its own closure"
    if closure_member(K(a), Bc, G) and not closure_member(K(a), Bc + [K(extra)], G):
        return f"not monotone A={G.A} B={Bs} a={a} extra={extra}"
    # finite character: some finite subset already suffices (the list itself is finite)
    return None


@suite("forks_equiv_equivalence", contexts="geometry", scale=2.0, minimum=1000)
def _forks_equiv(rng, ctx, cfg):
    G = _space(rng, ctx)
    if G is None:
        return SKIP
    b = G.sample(rng)
    b2 = G.resample(b, rng) if rng.random() < 0.5 else _member_from(rng, G, [b])
    b3 = G.resample(b2, rng) if rng.random() < 0.5 else _member_from(rng, G, [b2])
    if not forks_equiv(b, b, G):
        return f"not reflexive {b}"
    if forks_equiv(b, b2, G) != forks_equiv(b2, b, G):
        return f"not symmetric {b} {b2}"
    if forks_equiv(b, b2, G) and forks_equiv(b2, b3, G):
        if not forks_equiv(b, b3, G):
            return f"not transitive {b} {b2} {b3} A={G.A}"
        return HIT if len({b, b2, b3}) == 3 else None


@suite("equivalence_is_forking", contexts="geometry", scale=0.6, minimum=300)
def _lemma48(rng, ctx, cfg):
    G = _space(rng, ctx)
    if G is None:
        return SKIP
    b = G.sample(rng)
    b2 = _member_from(rng, G, [b])
    if forks_equiv(b, b2, G) != (not independent(b, G.A, [b2])):
        return f"{b} {b2}"


@suite("representative_independence", contexts="geometry", scale=0.6, minimum=300)
def _rep_independence(rng, ctx, cfg):
    G = _space(rng, ctx)
    if G is None:
        return SKIP
    Bs = []
    for _ in range(rng.randint(1, 3)):
        Bs.append(_member_from(rng, G, Bs))
    a = _member_from(rng, G, Bs)
    K = GeometryClass
    val = closure_member(K(a), [K(b) for b in Bs], G)
    for _ in range(cfg.resamples):
        a2 = G.resample(a, rng)
        B2 = [G.resample(b, rng) for b in Bs]
        if closure_member(K(a2), [K(b) for b in B2], G) != val:
            return f"class answer changed: A={G.A} a={a}->{a2} B={Bs}->{B2}"
        if val and not naive_closure_member(a2, B2, G):
            return f"representatives escape the closure: A={G.A} a2={a2} B2={B2}"
    return HIT if val else None


@suite("fp_line_correspondence", contexts="enumeration", exhaustive=True)
def _fp_line(ctx, cfg):
    if (ctx.p, ctx.N, ctx.n) != (2, 2, 3):
        return
    e0 = ctx.basis_vector(0)
    G = GeometrySpace.of(e0)
    pts = [x for x in ctx.all_vectors() if x.valuation() == 0]
    for b in pts:
        for b2 in pts:
            if forks_equiv(b, b2, G) != (fp_line(b, G) == fp_line(b2, G)):
                yield f"b={b} b2={b2}"
                return


def non_idempotent_triple(p: int, N: int = 3):
    ctx = Context(p, N, 3)
    b0, b1, b2 = ctx.standard_basis()
    G = GeometrySpace.of(b0)
    B = [b1 - b2 * p]
    c = b0 * p + b1
    a = b0 + b2
    return G, B, c, a


@suite("naive_closure_counterexample", contexts="enumeration", exhaustive=True)
def _naive_counterexample(ctx, cfg):
    if ctx != Context(*cfg.enumeration_contexts[0]):
        return
    for p in (2, 3):
        G, B, c, a = non_idempotent_triple(p)
        got = (
            naive_closure_member(c, B, G),
            naive_closure_member(a, B + [c], G),
            naive_closure_member(a, B, G),
        )
        if got != (True, True, False):
            yield f"p={p}: naive closure gave {got}"
        K = GeometryClass
        Bc = [K(b) for b in B]
        c_in = closure_member(K(c), Bc, G)
        a_in_bc = closure_member(K(a), Bc + [K(c)], G)
        a_in = closure_member(K(a), Bc, G)
        if c_in and a_in_bc and not a_in:
            yield f"p={p}: quotient closure not idempotent on the triple"


@suite("cli_round_trip")
def _cli_round_trip(rng, ctx, cfg):
    from ..cli import parse_problem, render_problem

    names = [f"v{i}" for i in range(rng.randint(1, 4))]
    lines = [f"ctx p={ctx.p} N={ctx.N} n={ctx.n}"]
    for nm in names:
        coords = [rng.randint(-3 * ctx.modulus, 3 * ctx.modulus) for _ in range(ctx.n)]
        lines.append(f"vec {nm} = {','.join(map(str, coords))}")
    members = [nm for nm in names if rng.random() < 0.5]
    lines.append(f"set S = {{{','.join(members)}}}")
    pf = parse_problem("\n".join(lines))
    if parse_problem(render_problem(pf)) != pf:
        return f"round trip changed {pf}"
