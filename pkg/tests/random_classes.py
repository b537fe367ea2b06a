"""Random integer combinations of products of gamma_l, h' and H' on the Y graph."""
from functools import lru_cache

from milnor_motive.cycles_monodromy import gamma, lift_H, lift_h
from milnor_motive.equivariant import EquivariantClass, multiply
from milnor_motive.gkm_graph import build_graph


@lru_cache(maxsize=None)
def _power(n, which, e):
    gy = build_graph(n, "Y")
    base = (lift_h if which == "h" else lift_H)(n).restrict(gy)
    return base**e


@lru_cache(maxsize=None)
def monomial(n, a, b, ell=0):
    out = multiply(_power(n, "h", a), _power(n, "H", b))
    return multiply(out, gamma(n, ell)) if ell else out


def random_class(rng, n, d):
    """Random GKM class of degree d on the Y graph of size n."""
    gy = build_graph(n, "Y")
    out = EquivariantClass.zero(gy, d)
    for a in range(d + 1):
        c = rng.randint(-3, 3)
        if c:
            out = out + c * monomial(n, a, d - a)
    rest = d - (n - 2)
    if rest >= 0:
        for ell in range(1, n + 1):
            for a in range(rest + 1):
                c = rng.randint(-2, 2)
                if c:
                    out = out + c * monomial(n, a, rest - a, ell)
    return out
