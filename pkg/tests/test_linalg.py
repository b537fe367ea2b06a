import random

import sympy

from milnor_motive.linalg import det, int_matrix, inverse, rank, smith_invariants, sparse_rank


def random_matrix(rng, r, c, lo=-4, hi=4):
    return [[rng.randint(lo, hi) for _ in range(c)] for _ in range(r)]


def test_against_sympy_on_random_matrices():
    rng = random.Random(7)
    for _ in range(60):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        rows = random_matrix(rng, r, c)
        if rng.random() < 0.3 and r > 1:
            rows[-1] = [a + b for a, b in zip(rows[0], rows[1 % r])]
        m = int_matrix(rows)
        ref = sympy.Matrix(rows)
        assert rank(m) == ref.rank()
        assert sparse_rank([{k: v for k, v in enumerate(row) if v} for row in rows]) == ref.rank()
        if r == c:
            assert det(m) == ref.det()
        from sympy.matrices.normalforms import smith_normal_form

        snf = smith_normal_form(ref, domain=sympy.ZZ)
        want = [abs(snf[k, k]) for k in range(min(r, c)) if snf[k, k] != 0]
        assert smith_invariants(m) == want


def test_inverse_of_unimodular_matrix_is_integral():
    m = int_matrix([[2, 1], [1, 1]])
    inv = inverse(m)
    assert inv.tolist() == [[1, -1], [-1, 2]]
    assert all(isinstance(x, int) for x in inv.flat)
