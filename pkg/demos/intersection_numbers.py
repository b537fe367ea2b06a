"""
Three routes to deg(h^a H^b)
============================

Top intersection numbers on X computed from the ring presentation, from
the ambient product of projective spaces, and by summing over fixed points.
"""
from milnor_motive.motives import intersection_number, localization_number, product_oracle

for n in (3, 4, 5):
    dim = 2 * n - 3
    row = []
    for a in range(dim + 1):
        b = dim - a
        values = {intersection_number(n, a, b), product_oracle(n, a, b), localization_number(n, a, b)}
        assert len(values) == 1
        row.append(values.pop())
    print(f"n={n}: deg(h^a H^(2n-3-a)) for a = 0..{dim}: {row}")
