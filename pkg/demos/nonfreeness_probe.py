"""
Looking for a single generator of ker m
=======================================

If ker m were a free rank-one Q-module, some column w with small support would
generate it.  The probe searches each degree box exhaustively.  It can only
ever fail to find one, so its verdict is "not-falsified".
"""

from eala import counterexample as cx
from eala.matrix import Matrix2
from eala.torus import J, ONE_T, TorusElement

S = cx.default_S()
for box in range(3):
    print(cx.nonfreeness_probe(box, S))

# control: u - (1+j)v has the free kernel (1+j, 1)Q, and the probe finds it
row = (ONE_T, ONE_T + J)
p = Matrix2([[ONE_T, -(ONE_T + J)], [TorusElement(), TorusElement()]])
print(cx.nonfreeness_probe(1, cx.build_S(p), row=row))
