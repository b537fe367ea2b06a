import pytest

from milnor_motive.cycles_monodromy import MonodromyElement, act, eta, gamma, lagrange_oracle, lift_H, lift_h
from milnor_motive.equivariant import EquivariantClass, is_gkm, multiply, scale
from milnor_motive.gkm_graph import Vertex, build_graph
from milnor_motive.polyring import Polynomial, root


def test_gamma_values_for_n3():
    g1 = gamma(3, 1)
    assert g1[(1, 2)] == root(3, 1, 3).to_polynomial()
    assert g1[(1, 3)] == root(3, 1, 2).to_polynomial()
    assert g1.support() == [Vertex(1, 2), Vertex(1, 3)]


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_gamma_support_and_membership(n):
    for ell in range(1, n + 1):
        c = gamma(n, ell)
        assert c.degree == n - 2
        assert set(c.support()) == {Vertex(ell, j) for j in range(1, n + 1) if j != ell}
        assert is_gkm(c)[0]


def test_gamma_n5_values_are_cubic_products():
    c = gamma(5, 2)
    assert len(c.support()) == 4
    for v in c.support():
        assert c[v].is_homogeneous(3)
        assert c[v] == root(5, 2, [s for s in range(1, 6) if s not in v][0]).to_polynomial() * (
            c[v].divide_linear(root(5, 2, [s for s in range(1, 6) if s not in v][0]))
        )


def test_gamma_index_range():
    with pytest.raises(ValueError):
        gamma(4, 5)
    with pytest.raises(ValueError):
        gamma(4, 0)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_supports_are_disjoint(n):
    for k in range(1, n + 1):
        for ell in range(k + 1, n + 1):
            assert multiply(gamma(n, k), gamma(n, ell)).is_zero()


def test_lift_h_values():
    h = lift_h(3)
    assert h[(1, 2)].is_zero()
    assert h[(2, 3)] == Polynomial.var(3, 2) - Polynomial.var(3, 1)
    assert h[(3, 1)] == Polynomial.var(3, 3) - Polynomial.var(3, 1)
    assert lift_H(3)[(1, 2)] == root(3, 1, 2).to_polynomial()


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_lifts_are_classes(n):
    assert is_gkm(lift_h(n))[0]
    assert is_gkm(lift_H(n))[0]


@pytest.mark.parametrize("n", [3, 4, 5])
def test_h_times_gamma_is_scalar_multiple(n):
    gy = build_graph(n, "Y")
    h = lift_h(n).restrict(gy)
    t = [Polynomial.var(n, k) for k in range(1, n + 1)]
    for ell in range(1, n + 1):
        assert multiply(h, gamma(n, ell)) == scale(t[ell - 1] - t[0], gamma(n, ell))


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_monodromy_rotates_gammas(n):
    for k in range(n):
        m = MonodromyElement.power(n, k)
        for ell in range(1, n + 1):
            assert act(m, gamma(n, ell)) == gamma(n, m(ell))


def test_monodromy_group_law():
    c = multiply(lift_h(3), lift_H(3))
    e = eta(3)
    assert act(e, act(e * e, c)) == c
    assert act(MonodromyElement.power(3, 0), c) is c
    assert (e * e * e).is_identity()
    assert e.inverse() == MonodromyElement.power(3, 2)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_orbit_of_gamma_1(n):
    orbit = {act(k, gamma(n, 1)) for k in range(n)}
    assert orbit == {gamma(n, ell) for ell in range(1, n + 1)}


@pytest.mark.parametrize("n", [3, 4, 5])
def test_H_lift_is_invariant_and_h_lift_is_not(n):
    for k in range(1, n):
        assert act(k, lift_H(n)) == lift_H(n)
        assert act(k, lift_h(n)) != lift_h(n)


@pytest.mark.parametrize("n", [3, 4])
def test_act_is_a_ring_automorphism_preserving_membership(n):
    a, b = lift_h(n), lift_H(n)
    for k in range(1, n):
        assert act(k, multiply(a, b)) == multiply(act(k, a), act(k, b))
        assert act(k, a + b) == act(k, a) + act(k, b)
        assert is_gkm(act(k, a))[0]


def test_act_rejects_mismatched_size():
    with pytest.raises(ValueError):
        act(MonodromyElement.power(4, 1), gamma(3, 1))
    with pytest.raises(ValueError):
        MonodromyElement((2, 1, 3))


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_lagrange_oracle(n):
    for ell in range(1, n + 1):
        o = lagrange_oracle(n, ell)
        assert len(o.values) == n - 1
        assert o.passed
        assert o.function == (-1) ** (n - 2)


def test_constant_class():
    g = build_graph(3, "X")
    assert EquivariantClass.constant(g, 2)[(2, 1)] == Polynomial.constant(3, 2)
