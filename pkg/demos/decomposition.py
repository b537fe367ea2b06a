"""
Splitting the motive of Y
=========================

Projective-bundle idempotents on X restrict to Y and leave a rank-n
complement in the middle degree. That complement is the idempotent
built from the gamma_l.
"""
import numpy as np

from milnor_motive.motives import artin_idempotent, decomposition_report, diagram, restricted_system

n = 5
report = decomposition_report(n)
print(report.summary)
print()
print(diagram(n))

rs = restricted_system(n)
art = artin_idempotent(n)
print()
print("complement equals the gamma idempotent:", rs.complement == art.p)
print("image ranks of the gamma idempotent:", art.p.image_ranks())

# monodromy acts on the middle degree by a permutation matrix on the gammas
S = art.monodromy[1][n - 2]
print()
print("eta on CH^{n-2}, gamma block:")
print(np.array(S[:n, :n].tolist(), dtype=int))
