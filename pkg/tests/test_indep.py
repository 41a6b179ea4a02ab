import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import context_and_vectors
from padic_forking import (
    BELOW_PRECISION,
    AmbientTooSmall,
    Context,
    ContextMismatch,
    DistanceValue,
    eps_independent,
    free_extension,
    galois_type,
    independent,
    independent_tuple,
    lascar_eps_splits,
    rank,
    same_type,
    type_distance,
)
from padic_forking.indep import tuple_type_distance
from padic_forking.oracle_lab import general_linear_group, oracle_orbit_same, oracle_type_distance

ONE = DistanceValue(0)


def test_galois_type_examples():
    c = Context(3, 3, 2)
    e1, e2 = c.standard_basis()
    q = galois_type(e2, [e1])
    assert q.radius == ONE and q.anchor == c.zero()
    q = galois_type(e1 * 4, [e1])
    assert q.radius is BELOW_PRECISION and q.anchor == e1 * 4
    q = galois_type(c.vector([1, 3]), [c.vector([1, 0])])
    assert q.radius == DistanceValue(1) and q.anchor == c.vector([1, 0])


def test_same_type_examples():
    c = Context(3, 3, 2)
    e1, e2 = c.standard_basis()
    assert same_type(e2, e1 + e2, [e1])
    assert not same_type(e2, e2 * 3, [e1])
    assert same_type(e2, e2, [e1])


def test_bounded_types_are_points():
    c = Context(2, 2, 2)
    e1 = c.basis_vector(0)
    # automorphisms fixing e1 fix its multiples
    assert not same_type(e1, e1 * 3, [e1])
    assert same_type(e1 * 2, e1 * 2, [e1])


def test_type_distance_examples():
    c = Context(2, 2, 2)
    q1 = galois_type(c.vector([1, 0]), [])
    q2 = galois_type(c.vector([2, 0]), [])
    assert type_distance(q1, q1).value is BELOW_PRECISION
    assert type_distance(q1, q2).value == ONE
    assert oracle_type_distance(q1, q2) == ONE
    A = [c.vector([1, 0])]
    qa, qb = galois_type(c.vector([0, 2]), A), galois_type(c.vector([1, 2]), A)
    assert qa.radius == qb.radius == DistanceValue(1)
    assert type_distance(qa, qb).value == ONE == oracle_type_distance(qa, qb)


def test_type_distance_needs_common_base():
    c = Context(2, 2, 2)
    e1, e2 = c.standard_basis()
    with pytest.raises(ContextMismatch):
        type_distance(galois_type(e1, []), galois_type(e1, [e2]))


def test_independent_examples():
    c = Context(3, 3, 2)
    assert independent(c.vector([0, 1]), [], [c.vector([1, 0])])
    assert not independent(c.vector([1, 0]), [], [c.vector([1, 3])])
    A = [c.vector([1, 0])]
    assert independent(c.vector([2, 2]), A, [c.vector([3, 0]), c.vector([1, 0])])


def test_independent_tuple_examples():
    c = Context(3, 3, 3)
    e1, e2, e3 = c.standard_basis()
    assert independent_tuple([e1], [], [e2]) == independent(e1, [], [e2])
    assert independent_tuple([e1, e2], [], [e3])
    assert not independent_tuple([e1, e1 + e2 * 3], [], [e2])


def test_rank_examples():
    c = Context(3, 3, 2)
    assert rank(c.vector([1, 3]), [c.vector([0, 1])]) == ONE
    assert rank(c.vector([0, 5]), [c.vector([0, 1])]) is BELOW_PRECISION
    assert rank(c.vector([3, 0]), []) == DistanceValue(1)


def test_free_extension_examples():
    p = 3
    c = Context(p, 3, 3)
    e1, e2, e3 = c.standard_basis()
    a, B = e1, [c.vector([1, p, 0])]
    assert free_extension(a, [], B) == e3
    a, A, B = c.vector([1, 3, 0]), [e1], [e2]
    assert free_extension(a, A, B) == e1 + e3 * 3
    # B inside the closure of A: the extension still has the type of a
    b = free_extension(a, A, [e1 * 2])
    assert same_type(b, a, A) and independent(b, A, [e1 * 2])
    # bounded types extend to themselves
    assert free_extension(e1 * 2, [e1], [e2]) == e1 * 2


def test_free_extension_needs_room():
    c = Context(2, 2, 2)
    e1, e2 = c.standard_basis()
    with pytest.raises(AmbientTooSmall):
        free_extension(e1, [], [e2])


def test_eps_independent_examples():
    p = 3
    c = Context(p, 3, 3)
    a, B = c.vector([1, 0, 0]), [c.vector([1, p, 0])]
    assert not eps_independent(a, [], B, DistanceValue(1))
    assert eps_independent(a, [], B, ONE)
    e2 = c.basis_vector(1)
    for k in range(c.N):
        assert eps_independent(a, [], [e2], DistanceValue(k))
    assert eps_independent(a, [], [e2], BELOW_PRECISION)


def _orbit_pairs(ctx, A, group):
    """Brute force: is there g fixing A with g(x) = y, for every pair."""
    pts = list(ctx.all_vectors())
    return {(x, y): oracle_orbit_same(A, x, y, group) for x in pts for y in pts}


def test_same_type_matches_automorphism_orbits():
    ctx = Context(2, 2, 2)
    group = general_linear_group(ctx)
    assert len(group) == 96
    e1, e2 = ctx.standard_basis()
    for A in ([], [e1], [e1 * 2], [ctx.vector([2, 2])], [e1 + e2 * 2], [e1, e2 * 2]):
        for (x, y), want in _orbit_pairs(ctx, A, group).items():
            assert same_type(x, y, A) == want, (A, x, y)


def _tuple_orbit(ctx, group, A, xs, ys):
    q = ctx.modulus

    def act(g, v):
        return tuple(sum(a * b for a, b in zip(row, v.coords)) % q for row in g)

    return any(
        all(act(g, v) == v.coords for v in A) and all(act(g, x) == y.coords for x, y in zip(xs, ys))
        for g in group
    )


def test_splitting_example_with_matching_extensions():
    # b=(0,1) and c=(2,1) share a type, and so do (a,b) and (a,c): [[1,2],[0,1]] fixes a
    ctx = Context(2, 2, 2)
    group = general_linear_group(ctx)
    a, b, c = ctx.vector([1, 0]), ctx.vector([0, 1]), ctx.vector([2, 1])
    assert _tuple_orbit(ctx, group, [], [b], [c])
    assert _tuple_orbit(ctx, group, [], [a, b], [a, c])
    for eps in (BELOW_PRECISION, DistanceValue(1), ONE):
        assert not lascar_eps_splits(a, [], [b, c], eps, 1)


def test_splitting_example_that_splits():
    ctx = Context(2, 2, 2)
    group = general_linear_group(ctx)
    e1, e2 = ctx.standard_basis()
    assert _tuple_orbit(ctx, group, [], [e1], [e2])
    assert not _tuple_orbit(ctx, group, [], [e1, e1], [e1, e2])
    assert lascar_eps_splits(e1, [], [e1, e2], BELOW_PRECISION, 1)
    assert lascar_eps_splits(e1, [], [e1, e2], DistanceValue(1), 1)
    assert not lascar_eps_splits(e1, [], [e1, e2], ONE, 1)


def test_splitting_trivial_when_parameters_are_in_the_closure():
    ctx = Context(3, 2, 2)
    e1, e2 = ctx.standard_basis()
    assert not lascar_eps_splits(e2, [e1], [e1 * 2, e1 * 4], BELOW_PRECISION, 2)
    with pytest.raises(ValueError):
        lascar_eps_splits(e2, [e1], [e1], BELOW_PRECISION, 0)


def test_tuple_type_distance_against_brute_force():
    ctx = Context(2, 2, 2)
    group = general_linear_group(ctx)
    e1, e2 = ctx.standard_basis()
    for xs, ys in [((e1, e1), (e1, e2)), ((e1, e2 * 2), (e1, e1 * 2)), ((e1, e2), (e2, e1 + e2 * 2))]:
        # minimum over all realizations (x', y') of tp(ys) of the tuple distance to xs
        best = None
        for g in group:
            imgs = [ctx.vector([sum(a * b for a, b in zip(row, v.coords)) for row in g]) for v in ys]
            d = max((x - y).norm() for x, y in zip(xs, imgs))
            best = d if best is None or d < best else best
        assert tuple_type_distance([], list(xs), list(ys)) == best


@given(context_and_vectors(4))
def test_same_type_is_an_equivalence(cv):
    _, (x, y, z, a) = cv
    A = [a]
    assert same_type(x, x, A)
    assert same_type(x, y, A) == same_type(y, x, A)
    if same_type(x, y, A) and same_type(y, z, A):
        assert same_type(x, z, A)


@given(context_and_vectors(4))
def test_independence_symmetry_and_rank_identity(cv):
    _, (a, b, *A) = cv
    assert independent(a, A, [b]) == independent(b, A, [a])
    assert independent(a, A, [b]) == (rank(a, A + [b]) == rank(a, A))
    assert rank(a, A + [b]) <= rank(a, A)


@settings(max_examples=60)
@given(context_and_vectors(3, [(2, 2, 2), (2, 3, 2), (3, 2, 2)]), st.integers(0, 1))
def test_type_distance_matches_oracle(cv, near):
    ctx, (x, y, a) = cv
    if near:
        y = x + y * ctx.p
    A = [a]
    qx, qy = galois_type(x, A), galois_type(y, A)
    assert type_distance(qx, qy).value == oracle_type_distance(qx, qy)


@settings(max_examples=60)
@given(context_and_vectors(3, [(2, 3, 4), (3, 2, 4), (2, 2, 5)]), st.integers(0, 3))
def test_eps_independence_coherent_with_rank(cv, k):
    ctx, (a, b, c) = cv
    A, B = [b], [a + c * ctx.p] if k % 2 else [c]
    eps = BELOW_PRECISION if k >= ctx.N else DistanceValue(k)
    assert eps_independent(a, A, B, eps) == (independent(a, A, B) or eps >= rank(a, A))


def test_types_over_nothing_are_norms():
    ctx = Context(2, 2, 2)
    radii = {galois_type(x, []).radius for x in ctx.all_vectors()}
    assert radii == {BELOW_PRECISION, DistanceValue(0), DistanceValue(1)}
