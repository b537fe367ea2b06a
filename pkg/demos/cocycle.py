"""
The splitting cocycle
=====================

A cyclic algebra of degree n is represented by n x n matrices over the
cyclotomic integers. Conjugating by the shift matrix realises the
cocycle, and the induced permutation of fixed points has order n.
"""
from milnor_motive.cocycle import build_generators, fixed_point_permutation, verify_cocycle

n = 3
u, v = build_generators(n)
print("rho(u) =")
print(u)
print("rho(v) =")
print(v)
print()
print(verify_cocycle(n))
print()
for k in range(n):
    perm = fixed_point_permutation(n, k)
    print(f"eta^{k}:", " ".join(f"{a}->{b}" for a, b in perm.items()))
