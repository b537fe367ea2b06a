"""
Exact polynomials in the torus weights
======================================

Sparse integer polynomials in t1..tn, division by roots, and the
permutation action used for monodromy.
"""
from milnor_motive.polyring import Polynomial, divides, permute, rational, root

p = Polynomial.parse(4, "t1^2*t3 - 2*t2*t4 + 7")
print("p =", p)

# roots are the linear forms t_i - t_j
a13 = root(4, 1, 3)
q = p * a13.to_polynomial()
print("q = p * (t1 - t3) =", q)
print("divisible by t1 - t3:", divides(a13, q), "   quotient:", q.divide_linear(a13))

# cyclic relabelling 1 -> 2 -> 3 -> 4 -> 1
print("shifted:", permute((2, 3, 4, 1), p))

# rational functions cancel common factors on construction
r = rational(q, a13.to_polynomial() * root(4, 2, 4).to_polynomial())
print("q / ((t1 - t3)(t2 - t4)) =", r)
