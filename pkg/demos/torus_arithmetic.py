"""
Arithmetic in the quaternion torus
==================================

"""

from eala.scalars import SQRT2, Scalar
from eala.torus import I, J, T1, monomial, parse_torus

# i and j anticommute, and their squares are the Laurent variables t1, t2
print("i*j =", I * J)
print("j*i =", J * I)
print("i*i =", I * I, "== t1:", I * I == T1)

# (ij)(ij) picks up a sign from moving j past i
ij = I * J
print("(ij)^2 =", ij * ij)

# coefficients live in Q(sqrt 2) and stay exact
x = monomial(1, 0, SQRT2) + monomial(0, 1, Scalar(1, 1))
print("x =", x)
print("x * x =", x * x)

# monomials are units; general elements need not be
print("inverse of i =", I.invert_monomial())

# the involution negates everything outside the (even, even) degrees
print("conjugate(x) =", x.conjugate())

# text form round-trips
assert parse_torus(str(x * x)) == x * x
