"""
Distances to pure closures
==========================

"""

from padic_forking import Context, closest, dist_to, member, saturate, span

# vectors live in (Z/3^3)^2
ctx = Context(3, 3, 2)
S = span([ctx.vector([3, 0])])
print(S.pivots)

# the span of 3*e1 misses e1; its pure closure does not
T = saturate(S)
print(T.columns, T.precisions)

x = ctx.vector([1, 3])
print("plain", dist_to(x, S), "closure", dist_to(x, T))
print("closest", closest(x, T))

# saturating loses the top digit: e1 is certified only modulo 3^2
print(member(ctx.vector([1, 0]), T, 2), member(ctx.vector([1, 0]), T, 3))
