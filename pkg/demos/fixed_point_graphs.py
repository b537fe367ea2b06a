"""
Fixed-point graphs
==================

Vertices are ordered pairs ij with i != j; edges carry a root as weight.
The flag variety X has three kinds of edge, its hyperplane section Y two.
"""
from collections import Counter

from milnor_motive.gkm_graph import build_graph

for n in (3, 4, 5):
    X, Y = build_graph(n, "X"), build_graph(n, "Y")
    kinds = Counter(e.kind.value for e in X.edges)
    print(f"n={n}: {len(X.vertices)} fixed points, X edges {dict(kinds)}, Y edges {len(Y.edges)}")

g = build_graph(3, "Y")
print()
print("Euler classes on Y for n=3")
for v in g.vertices:
    print(f"  [{v}]  {g.euler_class(v)}")

print()
print(g.to_dot())
