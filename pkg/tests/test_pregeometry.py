import random

import pytest

from padic_forking import (
    Context,
    DistanceValue,
    GeometryClass,
    GeometrySpace,
    NotARealization,
    PreconditionViolated,
    closure_member,
    dimension,
    fp_line,
    forks_equiv,
    naive_closure_member,
)

K = GeometryClass


def non_idempotent_triple(p):
    c = Context(p, 3, 3)
    b0, b1, b2 = c.standard_basis()
    return GeometrySpace.of(b0), [b1 - b2 * p], b0 * p + b1, b0 + b2


def test_space_requires_unbounded_type():
    c = Context(2, 2, 2)
    e1 = c.basis_vector(0)
    with pytest.raises(PreconditionViolated):
        GeometrySpace.of(e1, [e1])


def test_membership_checked():
    c = Context(2, 2, 3)
    G = GeometrySpace.of(c.basis_vector(0))
    with pytest.raises(NotARealization):
        forks_equiv(c.basis_vector(0), c.vector([2, 0, 0]), G)
    with pytest.raises(NotARealization):
        G.cls(c.zero())


def test_forks_equiv_examples():
    c = Context(2, 3, 3)
    e1, e2, _ = c.standard_basis()
    G = GeometrySpace.of(e1)
    assert forks_equiv(e1, e1, G)
    assert forks_equiv(e1, e1 + e2 * 2, G)
    assert not forks_equiv(e1, e2, G)


@pytest.mark.parametrize("p", [2, 3])
def test_non_idempotent_triple(p):
    G, B, c, a = non_idempotent_triple(p)
    assert naive_closure_member(c, B, G)
    assert naive_closure_member(a, B + [c], G)
    assert not naive_closure_member(a, B, G)
    # on classes the closure keeps idempotence on the same instance
    Bc = [K(b) for b in B]
    assert closure_member(K(c), Bc, G)
    assert not closure_member(K(a), Bc, G)
    assert not closure_member(K(a), Bc + [K(c)], G)


def test_closure_examples():
    G, B, c, a = non_idempotent_triple(2)
    assert closure_member(K(a), [K(a)], G)
    assert not closure_member(K(a), [], G)
    assert naive_closure_member(a, [a], G)


def test_naive_closure_far_parameters():
    c = Context(3, 2, 3)
    e1, e2, e3 = c.standard_basis()
    G = GeometrySpace.of(e1)
    assert not naive_closure_member(e1, [e2, e3 + e2 * 3], G)


def test_dimension_examples():
    c = Context(2, 2, 3)
    e = c.standard_basis()
    G = GeometrySpace.of(e[0])
    assert dimension([K(v) for v in e], G) == 3
    assert dimension([K(e[0]), K(e[1]), K(e[0] + e[1])], G) == 2
    assert dimension([], G) == 0


def test_fp_line_examples():
    c = Context(2, 3, 3)
    e1, e2, _ = c.standard_basis()
    G = GeometrySpace.of(e1)
    assert fp_line(e1, G) == fp_line(e1 * 3, G)
    assert fp_line(e1, G) == fp_line(e1 + e2 * 2, G)
    assert fp_line(e1, G) != fp_line(e2, G)
    c3 = Context(3, 2, 2)
    G3 = GeometrySpace.of(c3.basis_vector(0))
    assert fp_line(c3.vector([2, 1]), G3) == (1, 2)


def test_fp_line_preconditions():
    c = Context(2, 3, 3)
    e1, e2, _ = c.standard_basis()
    with pytest.raises(PreconditionViolated):
        fp_line(e2, GeometrySpace.of(e2, [e1]))
    with pytest.raises(PreconditionViolated):
        fp_line(e1 * 2, GeometrySpace.of(e1 * 2))


def test_fp_line_correspondence_exhaustive():
    c = Context(2, 2, 3)
    G = GeometrySpace.of(c.basis_vector(0))
    pts = [x for x in c.all_vectors() if x.valuation() == 0]
    assert len(pts) == 56
    for b in pts:
        for b2 in pts:
            assert forks_equiv(b, b2, G) == (fp_line(b, G) == fp_line(b2, G))


def test_three_lines_summing_to_a_multiple_of_p():
    # (1,1,0)+(1,0,1)+(0,1,1) = 2(1,1,1): each forks with the other two
    c = Context(2, 3, 3)
    u, v, w = c.vector([1, 1, 0]), c.vector([1, 0, 1]), c.vector([0, 1, 1])
    G = GeometrySpace.of(u)
    assert closure_member(K(w), [K(u), K(v)], G)
    assert dimension([K(u), K(v), K(w)], G) == 2


def test_sampler_is_deterministic_and_in_space():
    c = Context(3, 3, 3)
    G = GeometrySpace.of(c.vector([1, 3, 0]), [c.vector([1, 0, 0])])
    assert G.radius == DistanceValue(1)
    xs = [G.sample(random.Random(7)) for _ in range(3)]
    assert xs[0] == xs[1] == xs[2]
    assert all(G.contains(x) for x in xs)
    rng = random.Random(1)
    b = G.sample(rng)
    for _ in range(10):
        b2 = G.resample(b, rng)
        assert G.contains(b2) and forks_equiv(b, b2, G)
    first = next(G.candidates())
    assert G.contains(first)


def test_closure_is_representative_independent_on_samples():
    rng = random.Random(3)
    c = Context(2, 3, 4)
    G = GeometrySpace.of(c.basis_vector(0), [c.vector([1, 2, 0, 0])])
    for _ in range(30):
        Bs = [G.sample(rng) for _ in range(rng.randint(1, 3))]
        a = G.sample(rng)
        val = closure_member(K(a), [K(b) for b in Bs], G)
        for _ in range(5):
            a2 = G.resample(a, rng)
            B2 = [G.resample(b, rng) for b in Bs]
            assert closure_member(K(a2), [K(b) for b in B2], G) == val
