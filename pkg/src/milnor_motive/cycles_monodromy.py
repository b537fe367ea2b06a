"""The explicit middle-degree cycles gamma_l, the lifts h' and H', and the monodromy action.

The Galois group of L/F acts on fixed-point tuples through its image
<eta> in S_n, eta = (1 2 ... n): a tuple (phi_ij) goes to
(sigma phi_{sigma^-1(i) sigma^-1(j)}), where sigma also permutes the
variables t_k -> t_{sigma(k)}.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .equivariant import EquivariantClass
from .gkm_graph import GkmGraph, Variety, Vertex, build_graph
from .polyring import (
    Polynomial,
    check_permutation,
    compose_permutations,
    invert_permutation,
    RationalFunction,
    product,
    rational,
    root,
)

__all__ = ["MonodromyElement", "gamma", "lift_h", "lift_H", "act", "eta", "LagrangeOracle", "lagrange_oracle"]


def _cycle_power(n: int, k: int) -> tuple[int, ...]:
    return tuple((i - 1 + k) % n + 1 for i in range(1, n + 1))


@dataclass(frozen=True)
class MonodromyElement:
    """An element of the cyclic group <eta> inside S_n, in one-line notation."""

    sigma: tuple[int, ...]

    def __post_init__(self):
        n = len(self.sigma)
        sigma = check_permutation(self.sigma, n)
        object.__setattr__(self, "sigma", sigma)
        k = (sigma[0] - 1) % n
        if sigma != _cycle_power(n, k):
            raise ValueError(f"{sigma} is not a power of the cycle (1 2 ... {n})")

    @classmethod
    def power(cls, n: int, k: int) -> "MonodromyElement":
        return cls(_cycle_power(n, k % n))

    @property
    def n(self) -> int:
        return len(self.sigma)

    @property
    def exponent(self) -> int:
        return (self.sigma[0] - 1) % self.n

    def __call__(self, i: int) -> int:
        return self.sigma[i - 1]

    def __mul__(self, other: "MonodromyElement") -> "MonodromyElement":
        return MonodromyElement(compose_permutations(self.sigma, other.sigma))

    def inverse(self) -> "MonodromyElement":
        return MonodromyElement(invert_permutation(self.sigma))

    def is_identity(self) -> bool:
        return self.exponent == 0


def eta(n: int) -> MonodromyElement:
    return MonodromyElement.power(n, 1)


@lru_cache(maxsize=None)
def gamma(n: int, ell: int) -> EquivariantClass:
    """gamma_l: value prod_{s != i, j} (t_i - t_s) at [ij] when i = l, zero elsewhere."""
    if not 1 <= ell <= n:
        raise ValueError(f"index {ell} out of range 1..{n}")
    g = build_graph(n, Variety.Y)
    zero = Polynomial.zero(n)

    def value(v: Vertex) -> Polynomial:
        if v.i != ell:
            return zero
        return product((root(n, v.i, s) for s in range(1, n + 1) if s not in v), n)

    return EquivariantClass.from_function(g, n - 2, value)


@lru_cache(maxsize=None)
def lift_h(n: int) -> EquivariantClass:
    """Lift of the hyperplane class from P^{n-1}: t_i - t_1 at [ij]."""
    if n < 3:
        raise ValueError("n must be at least 3")
    g = build_graph(n, Variety.X)
    t = [Polynomial.var(n, k) for k in range(1, n + 1)]
    return EquivariantClass.from_function(g, 1, lambda v: t[v.i - 1] - t[0])


@lru_cache(maxsize=None)
def lift_H(n: int) -> EquivariantClass:
    """Lift of H = c_1(L): the root t_i - t_j at [ij]."""
    if n < 3:
        raise ValueError("n must be at least 3")
    g = build_graph(n, Variety.X)
    return EquivariantClass.from_function(g, 1, lambda v: root(n, v.i, v.j).to_polynomial())


def act(m: MonodromyElement | int, c: EquivariantClass) -> EquivariantClass:
    """Monodromy image: value at [ij] is sigma(c[sigma^-1(i) sigma^-1(j)])."""
    g: GkmGraph = c.graph
    if isinstance(m, int):
        m = MonodromyElement.power(g.n, m)
    if m.n != g.n:
        raise ValueError(f"monodromy element for n={m.n} applied to a class with n={g.n}")
    if m.is_identity():
        return c
    sigma = m.sigma
    inv = invert_permutation(sigma)
    vals = [c[Vertex(inv[v.i - 1], inv[v.j - 1])].permute(sigma) for v in g.vertices]
    return EquivariantClass(g, c.degree, vals)


@dataclass(frozen=True)
class LagrangeOracle:
    """The self-pairing of gamma_l written as a rational function of t_l."""

    n: int
    ell: int
    function: RationalFunction
    values: dict[int, RationalFunction]

    @property
    def expected(self) -> int:
        return (-1) ** (self.n - 2)

    @property
    def passed(self) -> bool:
        return all(v == self.expected for v in self.values.values()) and self.function == self.expected


def lagrange_oracle(n: int, ell: int) -> LagrangeOracle:
    """Evaluate f = sum_{j != l} prod_{s != l,j} a_ls / prod_{s != l,j} a_sj at t_l := t_i.

    f has degree at most n-2 in t_l, so agreeing with (-1)^(n-2) at the
    n-1 points t_i (i != l) forces it to be that constant.  Only the j = i
    summand survives each substitution, which is computed term by term
    rather than through the localization pairing.
    """
    if not 1 <= ell <= n:
        raise ValueError(f"index {ell} out of range 1..{n}")
    others = [j for j in range(1, n + 1) if j != ell]
    terms = []
    for j in others:
        rest = [s for s in others if s != j]
        num = product((root(n, ell, s) for s in rest), n)
        den = product((root(n, s, j) for s in rest), n)
        terms.append((num, den))
    total = rational(Polynomial.zero(n))
    for num, den in terms:
        total = total + rational(num, den)
    values = {}
    for i in others:
        acc = rational(Polynomial.zero(n))
        for num, den in terms:
            sub = num.substitute(ell, i)
            if sub:
                acc = acc + rational(sub, den)
        values[i] = acc
    return LagrangeOracle(n, ell, total, values)
