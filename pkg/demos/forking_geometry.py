"""
The geometry of forking classes
===============================

"""

from padic_forking import (
    Context,
    GeometryClass,
    GeometrySpace,
    closure_member,
    dimension,
    fp_line,
    forks_equiv,
    naive_closure_member,
)

for p in (2, 3):
    ctx = Context(p, 3, 3)
    b0, b1, b2 = ctx.standard_basis()
    G = GeometrySpace.of(b0)
    B, c, a = [b1 - b2 * p], b0 * p + b1, b0 + b2

    # closure on elements is not idempotent
    print(p, naive_closure_member(c, B, G), naive_closure_member(a, B + [c], G), naive_closure_member(a, B, G))

    # on forking classes it is
    K = GeometryClass
    print(p, closure_member(K(c), [K(b) for b in B], G), closure_member(K(a), [K(b) for b in B], G))

# over nothing, with radius 1, classes are lines of F_p^n
ctx = Context(2, 2, 3)
G = GeometrySpace.of(ctx.basis_vector(0))
u, v = ctx.vector([1, 1, 0]), ctx.vector([3, 1, 2])
print(forks_equiv(u, v, G), fp_line(u, G), fp_line(v, G))

pts = [x for x in ctx.all_vectors() if x.valuation() == 0]
print(dimension([GeometryClass(x) for x in pts], G))
