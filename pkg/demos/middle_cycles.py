"""
The middle-degree cycles gamma_l
================================

Each gamma_l is supported on the n-1 fixed points with first index l.
Its self-pairing is (-1)^(n-2), and the cyclic monodromy permutes the
gamma_l among themselves.
"""
import numpy as np

from milnor_motive.cycles_monodromy import MonodromyElement, act, gamma, lagrange_oracle
from milnor_motive.equivariant import gram_matrix, is_gkm

n = 4
g1 = gamma(n, 1)
print(f"gamma_1 for n={n}, degree {g1.degree}")
for v, p in g1.items():
    if p:
        print(f"  [{v}]  {p}")
print("edge conditions hold:", is_gkm(g1)[0])

G = gram_matrix([gamma(n, ell) for ell in range(1, n + 1)])
print()
print("pairings <gamma_k, gamma_l>:")
print(np.array(G.tolist(), dtype=int))

# an independent check that never calls the localization sum
o = lagrange_oracle(n, 1)
print()
print("interpolation values:", {i: str(v) for i, v in o.values.items()})

eta = MonodromyElement.power(n, 1)
print()
for ell in range(1, n + 1):
    image = act(eta, gamma(n, ell))
    print(f"eta . gamma_{ell} == gamma_{eta(ell)}:", image == gamma(n, eta(ell)))
