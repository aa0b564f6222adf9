"""Minimal extremal generation of the Chevalley algebras.

For each type the package builds the recursive generator recipe (a subalgebra's
generators plus one or two elements obtained as exp-images of root elements),
verifies that the left-normed closure reaches the full algebra, and matches
an independent lower bound: the natural-representation rank argument for the
classical types, the dimension thresholds (dim >= 9 needs 4 generators,
dim >= 29 needs 5) for the exceptional ones.

    A_n: n+1   B_n: n+1 (n>=3)   C_n: 2n   D_n: n   E_6/E_7/E_8: 5   F_4: 5   G_2: 4
"""

import sys, time

sys.path.insert(0, "src")

from extremal_lie.chevalley import mingen_certify, mingen_generators, natural_representation
from extremal_lie.scalars import QQ, GF

from extremal_lie.chevalley import ChevalleyAlgebra

print("the D4 recipe, step by step")
A = ChevalleyAlgebra("D", 4, QQ)
gens = mingen_generators(A)
for g in gens:
    print("   generator:", g)

print()
print("certification rows (type, char, t, lower bound, generated dimension)")
for t, n in [("A", 3), ("B", 3), ("C", 3), ("D", 4), ("G", 2), ("F", 4), ("E", 6)]:
    for field in (QQ, GF(5)):
        t0 = time.time()
        rep = mingen_certify(t, n, field)
        print("  %s%d char %d: t=%d lower=%d dim=%d pass=%s (%.1fs)" % (
            t, n, field.characteristic, rep["t_claimed"], rep["lower_bound"],
            rep["generated_dim"], rep["pass"], time.time() - t0))

print()
print("the natural-representation lower bounds for the classical types")
for t, n in [("A", 3), ("B", 3), ("C", 3), ("D", 4)]:
    rep = natural_representation(t, n, QQ)
    print("  %s%d: module dim %d, extremal matrix rank %d, bound %d" % (
        t, n, rep["module_dim"], rep["extremal_matrix_rank"], rep["lower_bound"]))
