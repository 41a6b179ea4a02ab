"""
Types, independence and rank
============================

"""

from padic_forking import (
    Context,
    DistanceValue,
    eps_independent,
    free_extension,
    galois_type,
    independent,
    rank,
    type_distance,
)

ctx = Context(3, 3, 3)
e1, e2, e3 = ctx.standard_basis()

# a type over A is a radius and an anchor
a, A = ctx.vector([1, 3, 0]), [e1]
q = galois_type(a, A)
print(q.radius, q.anchor)

# a forks with B exactly when B brings its closure nearer
print(independent(a, A, [e2]), rank(a, A), rank(a, A + [e2]))
print(independent(e1 + e2 * 9, [], [e2 * 3 + e1]))

# a non-forking copy of the type over A + B
b = free_extension(a, A, [e2])
print(b, galois_type(b, A) == q)

q1, q2 = galois_type(e2, A), galois_type(e2 * 3, A)
print(type_distance(q1, q2).value)

# forking at distance below eps is tolerated
B = [ctx.vector([1, 3, 0])]
for k in range(ctx.N):
    print(k, eps_independent(e1, [], B, DistanceValue(k)))
