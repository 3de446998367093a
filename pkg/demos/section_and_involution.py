"""
A section of m and the involution S
===================================

m(u, v) = (1+i)u - (1+j)v maps Q + Q onto Q.  A section q gives the
idempotent p = q m, and S = 2p - 1 acts as -1 on ker m and +1 on the image
of q.
"""

from eala import counterexample as cx
from eala.matrix import E12, identity, is_in_sl2
from eala.torus import I

# grow the degree box until (1+i)a - (1+j)b = 1 is solvable
try:
    cx.solve_section(0)
except cx.BoxExhausted as exc:
    print("no section with constant coefficients:", exc)
sec, box = cx.find_section(0)
print(f"first feasible box {box}:")
print("  a =", sec.a)
print("  b =", sec.b)
print("  residual =", sec.residual())

p = cx.build_projection(sec)
S = cx.build_S(p)
print("S =", S.matrix)
print("S^2 == 1:", S.matrix * S.matrix == identity(), " S in sl2:", is_in_sl2(S.matrix))

# kernel vectors of m are -1 eigenvectors
for w in cx.kernel_basis(1)[:3]:
    print("kernel vector", cx.format_column(w), "-> S w =", cx.format_column(S.matrix.apply(w)))

# ad S satisfies t(t-2)(t+2) = 0, so it splits sl2(Q) into three eigenspaces
x = E12(I)
parts = cx.eigen_decompose(S, x)
print("x =", x)
for lam, v in parts.items():
    print(f"eigenvalue {lam:+d} part:", v)
assert parts[0] + parts[2] + parts[-2] == x
