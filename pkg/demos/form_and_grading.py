"""
sl2 over the torus: grading and the invariant form
==================================================

"""

from eala.core import StandardMad, cocycle, derive, simultaneous_eigenvalues
from eala.lie_torus import form_L, gram_report, root_component
from eala.matrix import E12, E21, bracket, diag, is_in_sl2
from eala.torus import I, J, monomial

# a matrix is in sl2(Q) when its trace has no (even, even) part, so
# diag(i, i) qualifies even though its trace is 2i
print("diag(i, i) in sl2:", is_in_sl2(diag(I, I)))
print("diag(1, 1) in sl2:", is_in_sl2(diag(1, 1)))

x = E12(I) + E21(J) + diag(monomial(1, 1), -monomial(1, 1))
for root in (-2, 0, 2):
    print(f"root {root:+d} part:", root_component(x, root))

# the form pairs degree lambda with -lambda and root xi with -xi
print("form(E12(i), E21(i^-1)) =", form_L(E12(I), E21(I.invert_monomial())))
print("form(E12(i), E21(i))    =", form_L(E12(I), E21(I)))

# each graded slice pairs nondegenerately with its opposite
for row in gram_report(1)[:6]:
    print("slice", row)

# the degree derivation scales degree (a, b) by a + b*sqrt2
print("derive(E12(ij)) =", derive(E12(I * J)))
print("cocycle(E12(i), E21(i^-1)) =", cocycle(E12(I), E21(I.invert_monomial())))

# graded basis elements are weight vectors for the standard MAD
print("weights of E12(i j):", simultaneous_eigenvalues(E12(I * J), StandardMad()))
print("[P, E21(j)] =", bracket(diag(1, -1), E21(J)))
