"""
Commuting partners for S in the extended algebra
================================================

Starting from S, build y = [S, d_theta], split it by ad S, and correct the
derivation to d' = d_theta - y2/2 + y-2/2, which commutes with S.
"""

from eala import counterexample as cx
from eala.core import bracket_E, central, lift

S = cx.default_S()
yd = cx.compute_y(S)
print("y    =", yd.y)
print("y0   =", yd.y0)
print("y2   =", yd.y2)
print("y-2  =", yd.ym2)

dp = cx.build_d_prime(S, yd)
print("d'   =", dp.element)
print("[S, d'] =", bracket_E(lift(S.matrix), dp.element))
print("[S, c]  =", bracket_E(lift(S.matrix), central()))
print("sigma(S, y-2 - y2) =", cx.central_term(S, yd))

# the cocycle identity sigma(S, [a, b]) = (alpha + beta) sigma(a, b) on eigenvectors
print(cx.weight_cocycle_check(S, box=1, samples=200))
