"""
Chow ranks from edge conditions
===============================

The dimension of the space of degree-d tuples satisfying every edge
condition gives a Hilbert series; deconvolving it yields Chow ranks.
"""
import numpy as np

from milnor_motive.equivariant import chow_ranks
from milnor_motive.gkm_graph import build_graph

for variety in ("X", "Y"):
    print(f"variety {variety}")
    for n in (3, 4, 5):
        table = chow_ranks(build_graph(n, variety))
        ranks = np.array(table.chow_ranks)
        print(f"  n={n}: {ranks}  total {ranks.sum()} = n(n-1) = {n * (n - 1)}")

# Y is n-2 shifted copies of P^(n-1), plus n extra classes in the middle degree
n = 5
y = np.array(chow_ranks(build_graph(n, "Y")).chow_ranks)
copies = sum(np.convolve(np.eye(n - 2, dtype=int)[i], np.ones(n, dtype=int)) for i in range(n - 2))
extra = y - copies
print()
print(f"n={n}: Y minus shifted copies of P^{n - 1}: {extra}")
