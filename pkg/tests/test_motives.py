import numpy as np
import pytest

from milnor_motive.equivariant import chow_ranks
from milnor_motive.errors import VerificationError
from milnor_motive.gkm_graph import build_graph
from milnor_motive.motives import (
    Correspondence,
    artin_idempotent,
    decomposition_report,
    diagram,
    h_family_gram,
    intersection_number,
    localization_number,
    manin_system,
    monodromy_matrices,
    oracle_ring,
    orthogonality_check,
    product_oracle,
    projective_space,
    restricted_system,
    restriction,
    y_model,
)


def test_oracle_ring_n3():
    X = oracle_ring(3)
    assert X.ranks == (1, 2, 2, 1)
    assert intersection_number(3, 2, 1) == 1
    assert [intersection_number(3, a, 3 - a) for a in range(4)] == [6, 3, 1, 0]


@pytest.mark.parametrize("n", [3, 4, 5])
def test_three_routes_to_intersection_numbers(n):
    for a in range(2 * n - 2):
        b = 2 * n - 3 - a
        assert intersection_number(n, a, b) == product_oracle(n, a, b) == localization_number(n, a, b)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_models_are_unimodular_and_match_gkm_ranks(n):
    for model, variety in ((oracle_ring(n), "X"), (y_model(n), "Y")):
        assert model.ranks == chow_ranks(build_graph(n, variety)).chow_ranks
        for G in model.gram:
            assert abs(int(round(np.linalg.det(G.astype(float))))) == 1


@pytest.mark.parametrize("n", [3, 4])
def test_composition_is_associative_and_transpose_is_an_involution(n):
    X, Y = oracle_ring(n), y_model(n)
    i_up = restriction(n)
    cH = X.multiplication("H")
    ch = X.multiplication("h")
    assert (i_up @ cH) @ ch == i_up @ (cH @ ch)
    assert i_up.transpose().transpose() == i_up
    assert Correspondence.identity(Y) @ i_up == i_up
    # adjointness: <a^t y, x>_X = <y, a x>_Y
    a = i_up
    at = a.transpose()
    for m in range(X.dim + 1):
        k = Y.dim - m
        if X.rank(m) == 0 or Y.rank(k) == 0:
            continue
        lhs = at.block(k).T @ X.gram[m]
        rhs = Y.gram[k] @ a.block(m)
        assert (lhs == rhs).all()


def test_manin_system_n3():
    ms = manin_system(3)
    P = projective_space(3)
    assert ms.f[1] @ ms.g[1] == Correspondence.identity(P)
    assert (ms.f[1] @ ms.g[0]).is_zero()
    assert ms.p[0] + ms.p[1] == Correspondence.identity(oracle_ring(3))
    assert ms.passed


@pytest.mark.parametrize("n", [3, 4, 5])
def test_manin_system_images(n):
    ms = manin_system(n)
    for i, p in enumerate(ms.p):
        assert sum(p.image_ranks()) == n
        assert p.image_ranks()[n - 2 - i] == 1


def test_restricted_system_n4():
    rs = restricted_system(4)
    P = projective_space(4)
    assert rs.f_bar[1] @ rs.g_bar[0] == Correspondence.identity(P)
    assert (rs.f_bar[2] @ rs.g_bar[0]).is_zero()
    assert rs.passed


@pytest.mark.parametrize("n", [3, 4, 5])
def test_restricted_complement(n):
    rs = restricted_system(n)
    want = tuple(n if m == n - 2 else 0 for m in range(2 * n - 3))
    assert rs.complement.image_ranks() == want
    for q in rs.p_bar:
        assert sum(q.image_ranks()) == n


@pytest.mark.parametrize("n", [3, 4, 5])
def test_artin_idempotent(n):
    art = artin_idempotent(n)
    assert art.passed
    assert art.p.is_idempotent()
    assert all(t.is_idempotent() for t in art.terms)


@pytest.mark.parametrize("n", [3, 4])
def test_monodromy_is_trivial_off_the_middle(n):
    Y = y_model(n)
    for k in range(1, n):
        S = monodromy_matrices(n, k)
        for m in range(Y.dim + 1):
            if m != n - 2:
                assert (S[m] == np.eye(Y.rank(m), dtype=object)).all()


def test_orthogonality_n3():
    verdicts = orthogonality_check(3)
    assert all(v.passed for v in verdicts)
    assert h_family_gram(3).tolist() == [[1]]


@pytest.mark.parametrize("n", [4, 5])
def test_h_family_gram_is_unitriangular_about_the_antidiagonal(n):
    G = h_family_gram(n)
    size = n - 2
    for a in range(size):
        for b in range(size):
            if a + b == n - 3:
                assert G[a, b] == 1
            elif a + b > n - 3:
                assert G[a, b] == 0
            else:
                # entries above the anti-diagonal follow from deg(h^a H^b) on X0
                i = a + b
                assert G[a, b] == product_oracle(n, i + 2, 2 * n - 5 - i)


@pytest.mark.parametrize("n", [4, 5])
def test_strict_orthogonality_check_reports_the_literal_gram_identity(n):
    with pytest.raises(VerificationError) as exc:
        orthogonality_check(n)
    assert "delta" in exc.value.identity
    verdicts = orthogonality_check(n, strict=False)
    failing = [v.name for v in verdicts if not v.passed]
    assert len(failing) == 1 and "delta" in failing[0]


def test_reports():
    r3 = decomposition_report(3)
    assert r3.passed
    assert r3.summary == "M(Y) = M(SB(A)) + M(Spec L)(1)"
    r4 = decomposition_report(4)
    assert [sum(r) for _, r in r4.idempotents] == [4, 4, 4]
    assert r4.idempotents[-1][1] == (0, 0, 4, 0, 0)
    assert sum(r4.rank_profile) == 12
    assert r4.to_dict()["schema_version"] == 1


def test_diagram_n5():
    d = diagram(5)
    lines = d.splitlines()
    chains = [line for line in lines if "SB(" in line]
    assert len(chains) == 3
    assert all(line.count("o") == 5 for line in chains)
    artin = [line for line in lines if "@" in line]
    assert len(artin) == 1
    # the Artin node sits in the column of degree 3
    axis = lines[-1]
    assert artin[0].index("@") == axis.index("3")
