import random
from itertools import combinations_with_replacement
from math import comb

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from milnor_motive.cycles_monodromy import MonodromyElement, act, gamma, lift_H, lift_h
from milnor_motive.equivariant import (
    EquivariantClass,
    GradedRankTable,
    chow_ranks,
    constraint_matrix,
    graded_gkm_rank,
    is_gkm,
    middle_basis_check,
    multiply,
    pairing,
    pairing_number,
    scale,
)
from milnor_motive.errors import IntegralityViolation
from milnor_motive.gkm_graph import Variety, build_graph
from milnor_motive.linalg import rank, smith_invariants
from milnor_motive.polyring import Polynomial, permute
from random_classes import random_class


def brute_force_gkm_rank(n, variety, d):
    """Kernel dimension of the edge conditions, set up directly in sympy over Q."""
    g = build_graph(n, variety)
    t = sympy.symbols(f"t1:{n + 1}")
    free = t[: n - 1]
    monos = [sympy.Mul(*m) for m in combinations_with_replacement(free, d)] if d else [sympy.Integer(1)]
    unknowns = sympy.symbols(f"c0:{len(g.vertices) * len(monos)}")
    value = {}
    for k, v in enumerate(g.vertices):
        value[v] = sum(unknowns[k * len(monos) + j] * m for j, m in enumerate(monos))
    equations = []
    for e in g.edges:
        w = sum(c * x for c, x in zip(e.weight.coeffs, t)).subs(t[n - 1], 0)
        diff = sympy.expand(value[e.source] - value[e.target])
        _, r = sympy.reduced(diff, [w], *free)
        equations += sympy.Poly(r, *free).coeffs() if r != 0 else []
    if not equations:
        return len(unknowns)
    A, _ = sympy.linear_eq_to_matrix(equations, unknowns)
    return len(unknowns) - A.rank()


def test_degree_one_rank_of_the_n3_section_is_six():
    assert graded_gkm_rank(build_graph(3, "Y"), 1) == 6
    assert brute_force_gkm_rank(3, "Y", 1) == 6


@pytest.mark.parametrize("n, variety, d", [(3, "Y", 2), (3, "X", 1), (3, "X", 2), (4, "Y", 1)])
def test_ranks_against_brute_force(n, variety, d):
    assert graded_gkm_rank(build_graph(n, variety), d) == brute_force_gkm_rank(n, variety, d)


@pytest.mark.parametrize("n, variety", [(3, "X"), (4, "Y"), (5, "X")])
def test_degree_zero_rank_is_one(n, variety):
    assert graded_gkm_rank(build_graph(n, variety), 0) == 1


def test_hilbert_series_of_the_n3_flag_variety():
    g = build_graph(3, "X")
    b = (1, 2, 2, 1)
    for d in range(8):
        want = sum(b[m] * (d - m + 1) for m in range(min(d, 3) + 1))
        assert graded_gkm_rank(g, d) == want


@pytest.mark.parametrize("n, variety", [(3, "X"), (3, "Y"), (4, "X"), (4, "Y"), (5, "Y")])
def test_full_and_plane_methods_agree(n, variety):
    g = build_graph(n, variety)
    assert chow_ranks(g, method="full").chow_ranks == chow_ranks(g, method="plane").chow_ranks


@pytest.mark.parametrize("n, variety", [(3, "X"), (3, "Y"), (4, "Y")])
def test_smith_form_rank_agrees(n, variety):
    g = build_graph(n, variety)
    for d in range(n + 1):
        A = constraint_matrix(g, d)
        inv = smith_invariants(A)
        assert len(inv) == rank(A)
        assert A.shape[1] - len(inv) == graded_gkm_rank(g, d)
        # edge conditions are 0/+-1 rows; every invariant factor is 1
        assert set(inv) <= {1}


@pytest.mark.parametrize(
    "n, variety, want",
    [
        (3, "X", (1, 2, 2, 1)),
        (5, "X", (1, 2, 3, 4, 4, 3, 2, 1)),
        (3, "Y", (1, 4, 1)),
        (4, "Y", (1, 2, 6, 2, 1)),
        (5, "Y", (1, 2, 3, 8, 3, 2, 1)),
    ],
)
def test_rank_profiles(n, variety, want):
    table = chow_ranks(build_graph(n, variety))
    assert table.chow_ranks == want
    assert table.total == n * (n - 1)


def test_parallel_ranks_match_serial():
    g = build_graph(4, "X")
    assert chow_ranks(g, jobs=3) == chow_ranks(g)


def test_rank_table_json():
    table = chow_ranks(build_graph(3, "Y"))
    data = table.to_dict()
    assert data["schema_version"] == 1 and data["chow_ranks"] == [1, 4, 1]
    assert isinstance(table, GradedRankTable)


def sympy_pairing(c1, c2):
    g = c1.graph
    t = sympy.symbols(f"t1:{g.n + 1}")

    def sym(p):
        return sum(c * sympy.Mul(*[x**e for x, e in zip(t, exps)]) for exps, c in p.terms.items())

    total = 0
    for v, a in c1.items():
        b = c2[v]
        total += sym(a) * sym(b) / sym(g.euler_class(v))
    return sympy.cancel(sympy.together(total))


@pytest.mark.parametrize("seed", range(4))
def test_pairing_against_sympy(seed):
    rng = random.Random(seed)
    n = 3 + seed % 2
    dim = 2 * n - 4
    d1 = rng.randint(0, dim)
    c1, c2 = random_class(rng, n, d1), random_class(rng, n, dim - d1 + rng.randint(0, 1))
    got = pairing(c1, c2)
    want = sympy_pairing(c1, c2)
    t = sympy.symbols(f"t1:{n + 1}")
    assert sympy.expand(want - sum(c * sympy.Mul(*[x**e for x, e in zip(t, ex)]) for ex, c in got.terms.items())) == 0


def test_non_class_raises_integrality_violation():
    g = build_graph(3, "Y")
    t1 = Polynomial.var(3, 1)
    bad = EquivariantClass(g, 1, [t1] + [Polynomial.zero(3)] * 5)
    assert not is_gkm(bad)[0]
    with pytest.raises(IntegralityViolation):
        pairing(bad, EquivariantClass.constant(g))


def test_degree_bookkeeping():
    n = 4
    rng = random.Random(3)
    c1, c2 = random_class(rng, n, 1), random_class(rng, n, 2)
    assert pairing(c1, c2).is_zero()
    c3 = random_class(rng, n, 3)
    p = pairing(c3, random_class(rng, n, 2))
    assert p.is_zero() or p.is_homogeneous(1)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_pairing_number_is_the_constant_term(n):
    rng = random.Random(n)
    dim = 2 * n - 4
    for _ in range(5):
        d = rng.randint(0, dim)
        c1, c2 = random_class(rng, n, d), random_class(rng, n, dim - d)
        assert pairing_number(c1, c2) == pairing(c1, c2).constant_value()


@settings(max_examples=30)
@given(st.integers(3, 4), st.randoms(use_true_random=False), st.integers(-3, 3), st.integers(-3, 3))
def test_bilinear_symmetric_and_equivariant(n, rng, a, b):
    dim = 2 * n - 4
    d = rng.randint(0, dim)
    x, y = random_class(rng, n, d), random_class(rng, n, d)
    z = random_class(rng, n, dim - d + rng.randint(0, 1))
    pxz, pyz = pairing(x, z), pairing(y, z)
    assert pairing(a * x + b * y, z) == pxz * a + pyz * b
    assert pairing(z, x) == pxz
    sigma = MonodromyElement.power(n, rng.randint(1, n - 1))
    assert pairing(act(sigma, x), act(sigma, z)) == permute(sigma.sigma, pxz)


def test_module_structure():
    g = build_graph(4, "Y")
    c = gamma(4, 2)
    t = Polynomial.var(4, 3) - Polynomial.var(4, 1)
    assert is_gkm(scale(t, c))[0]
    assert multiply(lift_h(4).restrict(g), c) == scale(Polynomial.var(4, 2) - Polynomial.var(4, 1), c)


def test_class_json_round_trip():
    c = multiply(lift_h(4), lift_H(4))
    assert EquivariantClass.from_dict(c.to_json()) == c


def test_middle_basis_for_n3():
    mb = middle_basis_check(3)
    assert mb.passed
    assert mb.gram.tolist() == [[-1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, 1]]
    assert mb.determinant == -1


@pytest.mark.parametrize("n", [4, 5])
def test_middle_basis_unimodular(n):
    mb = middle_basis_check(n)
    assert mb.passed, mb.failures
    assert mb.middle_rank == 2 * n - 2


def test_invalid_class_construction():
    g = build_graph(3, "Y")
    with pytest.raises(ValueError):
        EquivariantClass(g, 1, [Polynomial.one(3)] * 6)
    with pytest.raises(ValueError):
        EquivariantClass(g, 0, [Polynomial.one(3)] * 5)
    with pytest.raises(ValueError):
        lift_h(3) + gamma(3, 1)


def test_rank_formula_for_hilbert_deconvolution():
    # plane restriction: rank-2 lattice, so h_k = k + 1
    g = build_graph(4, Variety.Y)
    table = chow_ranks(g, method="plane")
    for m, gm in enumerate(table.gkm_ranks):
        assert gm == sum(table.chow_ranks[j] * comb(m - j + 1, 1) for j in range(m + 1))
