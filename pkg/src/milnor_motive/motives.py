"""Split-level correspondence calculus for X0, Y_L, P^{n-1} and Spec(L (x) L).

Over L every variety involved is cellular, so a correspondence is
determined by its action on Chow groups.  A ``Correspondence`` stores that
action as one integer matrix per source degree; composition is matrix
multiplication and transposition is the adjoint for the Poincare
pairings.

Chow groups of X0 come from the ring presentation

    Z[h, H] / (h^n,  sum_{k=0}^{n-1} (-1)^k C(n, k) h^k H^{n-1-k}),
    deg(h^{n-1} H^{n-2}) = 1,

(the Chern relation of the rank n-1 bundle whose projectivization is X0
over P^{n-1}).  Chow groups of Y_L are read off from equivariant lifts:
integer pairings are the degree-0 values of localization pairings.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Callable, Sequence

import numpy as np

from .cycles_monodromy import MonodromyElement, act, gamma, lift_H, lift_h
from .equivariant import EquivariantClass, chow_ranks, multiply, pairing, pairing_number
from .errors import VerificationError
from .gkm_graph import Variety, build_graph
from .linalg import det, identity, int_matrix, inverse, rank, zeros

__all__ = [
    "ChowModel",
    "Correspondence",
    "Verdict",
    "oracle_ring",
    "projective_space",
    "y_model",
    "split_point_model",
    "intersection_number",
    "product_oracle",
    "localization_number",
    "manin_system",
    "restricted_system",
    "artin_idempotent",
    "orthogonality_check",
    "h_family_gram",
    "monodromy_matrices",
    "restriction",
    "decomposition_report",
    "DecompositionReport",
]


# --- matrices ----------------------------------------------------------------

def _mm(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
    if a.shape[1] == 0 or a.shape[0] == 0 or b.shape[1] == 0:
        return zeros(a.shape[0], b.shape[1])
    return a.dot(b)


def _eq(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and bool(np.all(a == b))


# --- verdicts ---------------------------------------------------------------

@dataclass
class Verdict:
    name: str
    passed: bool
    detail: str = ""

    def __str__(self):
        return f"[{'pass' if self.passed else 'FAIL'}] {self.name}" + (f" ({self.detail})" if self.detail else "")


def _check(verdicts: list[Verdict], name: str, ok: bool, detail: str = "") -> bool:
    verdicts.append(Verdict(name, bool(ok), detail))
    return ok


def _raise_on_failure(verdicts: Sequence[Verdict]) -> None:
    for v in verdicts:
        if not v.passed:
            raise VerificationError(v.name, v.detail)


# --- Chow models --------------------------------------------------------------

@dataclass
class ChowModel:
    """Graded free Z-module with a unimodular pairing between complementary degrees."""

    tag: str
    n: int
    dim: int
    labels: list[list[str]]
    gram: list[np.ndarray]
    lifts: list[list[EquivariantClass]] | None = None
    mult: dict[str, list[np.ndarray]] = field(default_factory=dict)

    def rank(self, m: int) -> int:
        return len(self.labels[m]) if 0 <= m <= self.dim else 0

    @property
    def ranks(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.labels)

    def coords(self, m: int, values: np.ndarray) -> np.ndarray:
        """Coordinates of the degree-m class whose pairings with B_{dim-m} are ``values``."""
        v = int_matrix([[int(x)] for x in values], (self.rank(self.dim - m), 1))
        if self.rank(m) == 0:
            return zeros(0, 1)
        return _mm(inverse(self.gram[m].T), v)

    def lift_coords(self, m: int, lift: EquivariantClass) -> np.ndarray:
        """Coordinates of the class represented by an equivariant lift (degree-0 extraction)."""
        if self.lifts is None:
            raise ValueError(f"{self.tag} model has no equivariant lifts")
        return self.coords(m, [pairing_number(lift, z) for z in self.lifts[self.dim - m]])

    def multiplication(self, name: str) -> "Correspondence":
        blocks = self.mult[name]
        return Correspondence(self, self, 1, {m: blocks[m] for m in range(self.dim + 1)}, label=f"c_{name}")


def projective_space(n: int) -> ChowModel:
    """CH(P^{n-1}) = Z[h]/h^n."""
    dim = n - 1
    labels = [[f"h^{a}"] for a in range(n)]
    gram = [int_matrix([[1]]) for _ in range(n)]
    mult_h = [int_matrix([[1]]) if m < dim else zeros(0, 1) for m in range(n)]
    return ChowModel("P", n, dim, labels, gram, None, {"h": mult_h})


def split_point_model(n: int) -> ChowModel:
    """CH of Spec(L (x)_F L) = n points, indexed by the elements eta^k of the Galois group."""
    return ChowModel("L", n, 0, [[f"eta^{k}" for k in range(n)]], [identity(n)])


def _x_basis(n: int, m: int) -> list[tuple[int, int]]:
    return [(a, m - a) for a in range(min(m, n - 1), -1, -1) if m - a <= n - 2]


class _XRing:
    """Normal forms in Z[h, H]/(h^n, Chern relation)."""

    def __init__(self, n: int):
        self.n = n
        self.relation = {k: (-1) ** k * comb(n, k) for k in range(1, n)}
        self._cache: dict[tuple[int, int], dict[tuple[int, int], int]] = {}

    def reduce(self, a: int, b: int) -> dict[tuple[int, int], int]:
        n = self.n
        key = (a, b)
        if key in self._cache:
            return self._cache[key]
        if a >= n:
            out = {}
        elif b <= n - 2:
            out = {(a, b): 1}
        else:
            # H^{n-1} = -sum_{k>=1} (-1)^k C(n,k) h^k H^{n-1-k}
            out = {}
            for k, c in self.relation.items():
                for mono, v in self.reduce(a + k, b - k).items():
                    out[mono] = out.get(mono, 0) - c * v
            out = {k: v for k, v in out.items() if v}
        self._cache[key] = out
        return out

    def degree(self, a: int, b: int) -> int:
        return self.reduce(a, b).get((self.n - 1, self.n - 2), 0)


def intersection_number(n: int, a: int, b: int) -> int:
    """deg(h^a H^b) on X0 from the ring presentation."""
    if a + b != 2 * n - 3:
        raise ValueError("not a top-degree monomial")
    return _XRing(n).degree(a, b)


def product_oracle(n: int, a: int, b: int) -> int:
    """deg(h^a H^b) on X0 computed in P^{n-1} x P^{n-1}.

    X0 is a (1,1) divisor and H = h1 + h2, so the number is the coefficient
    of h1^{n-1} h2^{n-1} in h1^a (h1 + h2)^{b+1}.
    """
    if a + b != 2 * n - 3:
        raise ValueError("not a top-degree monomial")
    k = n - 1 - a
    return comb(b + 1, k) if 0 <= k <= b + 1 else 0


def localization_number(n: int, a: int, b: int) -> int:
    """deg(h^a H^b) on X0 by localization on the X graph."""
    gx = build_graph(n, Variety.X)
    cls = multiply(lift_h(n) ** a, lift_H(n) ** b)
    return pairing(cls, EquivariantClass.constant(gx)).constant_value()


@lru_cache(maxsize=None)
def oracle_ring(n: int) -> ChowModel:
    """CH(X0) as a lattice on h^a H^b (a < n, b < n-1) with its intersection form."""
    if n < 3:
        raise ValueError("n must be at least 3")
    ring = _XRing(n)
    dim = 2 * n - 3
    bases = [_x_basis(n, m) for m in range(dim + 1)]
    labels = [[f"h^{a}H^{b}" for a, b in B] for B in bases]
    gram = [
        int_matrix([[ring.degree(a + c, b + d) for c, d in bases[dim - m]] for a, b in bases[m]], (len(bases[m]), len(bases[dim - m])))
        for m in range(dim + 1)
    ]

    def mult(da: int, db: int) -> list[np.ndarray]:
        out = []
        for m in range(dim + 1):
            src = bases[m]
            tgt = bases[m + 1] if m + 1 <= dim else []
            idx = {mono: r for r, mono in enumerate(tgt)}
            mat = zeros(len(tgt), len(src))
            for col, (a, b) in enumerate(src):
                for mono, v in ring.reduce(a + da, b + db).items():
                    mat[idx[mono], col] += v
            out.append(mat)
        return out

    gx = build_graph(n, Variety.X)
    h, H = lift_h(n), lift_H(n)
    lifts = [[multiply(h**a, H**b) for a, b in B] for B in bases]
    del gx
    return ChowModel("X", n, dim, labels, gram, lifts, {"h": mult(1, 0), "H": mult(0, 1)})


def _y_basis(n: int, m: int) -> list[tuple[int, int]]:
    return [(a, m - a) for a in range(min(m, n - 1), -1, -1) if m - a <= n - 3]


@lru_cache(maxsize=None)
def y_model(n: int) -> ChowModel:
    """CH(Y_L): restricted monomials h^a H^i (i <= n-3), plus gamma_1..gamma_n in the middle."""
    if n < 3:
        raise ValueError("n must be at least 3")
    gy = build_graph(n, Variety.Y)
    dim = 2 * n - 4
    h = lift_h(n).restrict(gy)
    H = lift_H(n).restrict(gy)
    hp = [h**a for a in range(n)]
    Hp = [H**i for i in range(n - 2)]
    labels, lifts = [], []
    for m in range(dim + 1):
        lab, lif = [], []
        if m == n - 2:
            for ell in range(1, n + 1):
                lab.append(f"gamma_{ell}")
                lif.append(gamma(n, ell))
        for a, i in _y_basis(n, m):
            lab.append(f"h^{a}H^{i}")
            lif.append(multiply(hp[a], Hp[i]))
        labels.append(lab)
        lifts.append(lif)
    gram = []
    for m in range(dim + 1):
        rows = [[pairing_number(x, z) for z in lifts[dim - m]] for x in lifts[m]]
        gram.append(int_matrix(rows, (len(lifts[m]), len(lifts[dim - m]))))
    model = ChowModel("Y", n, dim, labels, gram, lifts)
    for name, cls in (("h", h), ("H", H)):
        blocks = []
        for m in range(dim + 1):
            if m == dim:
                blocks.append(zeros(0, len(lifts[m])))
                continue
            cols = [model.lift_coords(m + 1, multiply(cls, x)) for x in lifts[m]]
            blocks.append(np.hstack(cols) if cols else zeros(model.rank(m + 1), 0))
        model.mult[name] = blocks
    return model


# --- correspondences ----------------------------------------------------------

class Correspondence:
    """Graded action CH^m(source) -> CH^{m+shift}(target)."""

    def __init__(self, source: ChowModel, target: ChowModel, shift: int, blocks: dict[int, np.ndarray], label: str = ""):
        self.source = source
        self.target = target
        self.shift = shift
        self.label = label
        self.blocks = {}
        for m in range(source.dim + 1):
            shape = (target.rank(m + shift), source.rank(m))
            blk = blocks.get(m)
            if blk is None or 0 in shape:
                blk = zeros(*shape)
            elif blk.shape != shape:
                raise ValueError(f"block {m} of {label or 'correspondence'} has shape {blk.shape}, expected {shape}")
            self.blocks[m] = blk

    @classmethod
    def identity(cls, model: ChowModel, label: str = "") -> "Correspondence":
        return cls(model, model, 0, {m: identity(model.rank(m)) for m in range(model.dim + 1)}, label or f"Delta_{model.tag}")

    @classmethod
    def zero(cls, source: ChowModel, target: ChowModel, shift: int) -> "Correspondence":
        return cls(source, target, shift, {})

    def block(self, m: int) -> np.ndarray:
        if 0 <= m <= self.source.dim:
            return self.blocks[m]
        return zeros(self.target.rank(m + self.shift), 0)

    def __matmul__(self, other: "Correspondence") -> "Correspondence":
        """self o other (other acts first)."""
        if other.target is not self.source:
            raise ValueError(f"cannot compose {self.label} o {other.label}: {other.target.tag} != {self.source.tag}")
        shift = other.shift + self.shift
        blocks = {m: _mm(self.block(m + other.shift), other.block(m)) for m in range(other.source.dim + 1)}
        return Correspondence(other.source, self.target, shift, blocks, f"{self.label} o {other.label}")

    def _binary(self, other: "Correspondence", op: Callable) -> "Correspondence":
        if (other.source, other.target, other.shift) != (self.source, self.target, self.shift):
            if self.is_zero() and other.source is self.source and other.target is self.target:
                return other if op is np.add else -other
            if other.is_zero() and other.source is self.source and other.target is self.target:
                return self
            raise ValueError("correspondences of different type")
        return Correspondence(self.source, self.target, self.shift, {m: op(self.blocks[m], other.blocks[m]) for m in self.blocks})

    def __add__(self, other):
        return self._binary(other, np.add)

    def __sub__(self, other):
        return self._binary(other, np.subtract)

    def __neg__(self):
        return self * -1

    def __mul__(self, k: int):
        return Correspondence(self.source, self.target, self.shift, {m: b * k for m, b in self.blocks.items()}, self.label)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Correspondence):
            return NotImplemented
        if other.source is not self.source or other.target is not self.target:
            return False
        if self.is_zero() and other.is_zero():
            return True
        return self.shift == other.shift and all(_eq(self.blocks[m], other.blocks[m]) for m in self.blocks)

    def is_zero(self) -> bool:
        return all(not any(b.flat) for b in self.blocks.values())

    def transpose(self) -> "Correspondence":
        """Adjoint action: <a^t y, x>_source = <y, a x>_target."""
        S, T = self.source, self.target
        shift = S.dim - T.dim + self.shift
        blocks = {}
        for k in range(T.dim + 1):
            m = S.dim - k - shift
            if not (0 <= m <= S.dim) or not (0 <= k + shift <= S.dim):
                continue
            # a^t[k]^T G_S[k+shift] = G_T[k] a[m]
            rhs = _mm(T.gram[k], self.block(m))
            if S.rank(k + shift) == 0 or T.rank(k) == 0:
                continue
            sol = _mm(rhs, inverse(S.gram[k + shift]))
            blocks[k] = sol.T.copy()
        return Correspondence(T, S, shift, blocks, f"({self.label})^t")

    def image_ranks(self) -> tuple[int, ...]:
        """Rank of the action in each target degree."""
        out = [0] * (self.target.dim + 1)
        for m, b in self.blocks.items():
            t = m + self.shift
            if 0 <= t <= self.target.dim:
                out[t] += rank(b)
        return tuple(out)

    def is_idempotent(self) -> bool:
        return self.source is self.target and self.shift == 0 and self @ self == self

    def __repr__(self):
        return f"Correspondence({self.label or '?'}: {self.source.tag} -> {self.target.tag}, shift {self.shift})"


def _pullback_from_p(n: int) -> Correspondence:
    """pi^*: CH(P) -> CH(X0), h^a -> h^a."""
    P, X = projective_space(n), oracle_ring(n)
    blocks = {}
    for m in range(n):
        col = zeros(X.rank(m), 1)
        col[X.labels[m].index(f"h^{m}H^0"), 0] = 1
        blocks[m] = col
    return Correspondence(P, X, 0, blocks, "pi^*")


# cache projective space models so identity checks compare the same objects
projective_space = lru_cache(maxsize=None)(projective_space)
split_point_model = lru_cache(maxsize=None)(split_point_model)


@lru_cache(maxsize=None)
def restriction(n: int) -> Correspondence:
    """i^*: CH(X0) -> CH(Y_L), computed from restricted lifts."""
    X, Y = oracle_ring(n), y_model(n)
    gy = build_graph(n, Variety.Y)
    blocks = {}
    for m in range(X.dim + 1):
        if Y.rank(m) == 0:
            continue
        cols = [Y.lift_coords(m, lift.restrict(gy)) for lift in X.lifts[m]]
        blocks[m] = np.hstack(cols)
    return Correspondence(X, Y, 0, blocks, "i^*")


# --- Manin system on X --------------------------------------------------------

@dataclass
class ManinSystem:
    n: int
    f: list[Correspondence]
    g: list[Correspondence]
    p: list[Correspondence]
    verdicts: list[Verdict]

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)


@lru_cache(maxsize=None)
def manin_system(n: int, strict: bool = True) -> ManinSystem:
    X, P = oracle_ring(n), projective_space(n)
    delta_x = Correspondence.identity(X)
    delta_p = Correspondence.identity(P)
    cH = X.multiplication("H")
    pi_up = _pullback_from_p(n)
    pi_down = pi_up.transpose()
    pi_down.label = "pi_*"

    def cpow(k):
        out = delta_x
        for _ in range(k):
            out = cH @ out
        return out

    r = n - 2
    g = [cpow(i) @ pi_up for i in range(r + 1)]
    for i, gi in enumerate(g):
        gi.label = f"g_{i}"
    # f_i = pi_* o c_H^{r-i} o (Delta_X - sum_{k>i} g_k o f_k)
    f: list[Correspondence | None] = [None] * (r + 1)
    f[r] = pi_down
    for i in range(r - 1, -1, -1):
        acc = delta_x
        for k in range(i + 1, r + 1):
            acc = acc - g[k] @ f[k]
        f[i] = pi_down @ cpow(r - i) @ acc
    for i, fi in enumerate(f):
        fi.label = f"f_{i}"
    p: list[Correspondence | None] = [None] * (r + 1)
    for i in range(r + 1):
        p[r - i] = g[i] @ f[i]
        p[r - i].label = f"p_{r - i}"

    verdicts: list[Verdict] = []
    for i in range(r + 1):
        for j in range(r + 1):
            comp = f[i] @ g[j]
            want = delta_p if i == j else Correspondence.zero(P, P, 0)
            _check(verdicts, f"f_{i} o g_{j} = {'Delta_P' if i == j else '0'}", comp == want)
    total = p[0]
    for q in p[1:]:
        total = total + q
    _check(verdicts, "sum p_i = Delta_X", total == delta_x)
    for i in range(r + 1):
        for j in range(r + 1):
            comp = p[i] @ p[j]
            ok = comp == p[i] if i == j else comp.is_zero()
            _check(verdicts, f"p_{i} o p_{j} = {'p_' + str(i) if i == j else '0'}", ok)
    for i in range(r + 1):
        prof = p[i].image_ranks()
        s = r - i
        want = tuple(1 if s <= m < s + n else 0 for m in range(X.dim + 1))
        _check(verdicts, f"p_{i} has image P^{n - 1}({s})", prof == want, f"ranks {prof}")
    for j in range(r):
        _check(verdicts, f"c_H o g_{j} = g_{j + 1}", cH @ g[j] == g[j + 1])
    if strict:
        _raise_on_failure(verdicts)
    return ManinSystem(n, f, g, p, verdicts)


# --- restriction to Y -----------------------------------------------------------

@dataclass
class RestrictedSystem:
    n: int
    f_bar: list[Correspondence]
    g_bar: list[Correspondence]
    p_bar: list[Correspondence]
    complement: Correspondence
    pushforward: Correspondence
    verdicts: list[Verdict]

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)


@lru_cache(maxsize=None)
def restricted_system(n: int, strict: bool = True) -> RestrictedSystem:
    X, Y, P = oracle_ring(n), y_model(n), projective_space(n)
    ms = manin_system(n, strict)
    i_up = restriction(n)
    i_down = i_up.transpose()
    i_down.label = "i_*"
    verdicts: list[Verdict] = []
    cH = X.multiplication("H")
    _check(verdicts, "i_* o i^* = c_H  ([Y] = H)", i_down @ i_up == cH)
    one = zeros(1, 1)
    one[0, 0] = 1
    push_one = _mm(i_down.block(0), one)
    H_col = zeros(X.rank(1), 1)
    H_col[X.labels[1].index("h^0H^1"), 0] = 1
    _check(verdicts, "i_*(1) = H", _eq(push_one, H_col))

    f_bar = [fi @ i_down for fi in ms.f]
    g_bar = [i_up @ gi for gi in ms.g]
    for k, c in enumerate(f_bar):
        c.label = f"fbar_{k}"
    for k, c in enumerate(g_bar):
        c.label = f"gbar_{k}"
    delta_p = Correspondence.identity(P)
    for i in range(n - 2):
        for j in range(n - 2):
            comp = f_bar[i + 1] @ g_bar[j]
            ok = comp == delta_p if i == j else comp.is_zero()
            _check(verdicts, f"fbar_{i + 1} o gbar_{j} = {'Delta_P' if i == j else '0'}", ok)
    p_bar = []
    for i in range(n - 2):
        q = g_bar[i] @ f_bar[i + 1]
        q.label = f"pbar_{i}"
        p_bar.append(q)
    for i in range(n - 2):
        for j in range(n - 2):
            comp = p_bar[i] @ p_bar[j]
            ok = comp == p_bar[i] if i == j else comp.is_zero()
            _check(verdicts, f"pbar_{i} o pbar_{j} = {'pbar_' + str(i) if i == j else '0'}", ok)
        prof = p_bar[i].image_ranks()
        want = tuple(1 if i <= m < i + n else 0 for m in range(Y.dim + 1))
        _check(verdicts, f"pbar_{i} has image P^{n - 1}({i})", prof == want, f"ranks {prof}")
    delta_y = Correspondence.identity(Y)
    comp = delta_y
    for q in p_bar:
        comp = comp - q
    comp.label = "pbar"
    _check(verdicts, "pbar is idempotent", comp.is_idempotent())
    _check(verdicts, "pbar is non-zero", not comp.is_zero())
    prof = comp.image_ranks()
    want = tuple(n if m == n - 2 else 0 for m in range(Y.dim + 1))
    _check(verdicts, f"pbar has rank {n} in degree {n - 2}", prof == want, f"ranks {prof}")
    if strict:
        _raise_on_failure(verdicts)
    return RestrictedSystem(n, f_bar, g_bar, p_bar, comp, i_down, verdicts)


# --- the Artin idempotent ---------------------------------------------------------

@dataclass
class ArtinIdempotent:
    n: int
    p: Correspondence
    f: Correspondence
    g: Correspondence
    terms: list[Correspondence]
    monodromy: dict[int, dict[int, np.ndarray]]
    verdicts: list[Verdict]

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)


def monodromy_matrices(n: int, k: int) -> dict[int, np.ndarray]:
    """Action of eta^k on CH^m(Y_L), read off from the action on equivariant lifts."""
    Y = y_model(n)
    sigma = MonodromyElement.power(n, k)
    out = {}
    for m in range(Y.dim + 1):
        cols = [Y.lift_coords(m, act(sigma, x)) for x in Y.lifts[m]]
        out[m] = np.hstack(cols)
    return out


@lru_cache(maxsize=None)
def artin_idempotent(n: int, strict: bool = True) -> ArtinIdempotent:
    Y, Lm = y_model(n), split_point_model(n)
    mid = n - 2
    sign = (-1) ** (n - 2)
    verdicts: list[Verdict] = []

    # f = gamma_1 : Y -> Spec L, split as (sigma gamma_1)_sigma; g = sign * gamma_1 back
    orbit = [act(MonodromyElement.power(n, k), gamma(n, 1)) for k in range(n)]
    f_rows = [[pairing_number(b, o) for b in Y.lifts[mid]] for o in orbit]
    f = Correspondence(Y, Lm, -mid, {mid: int_matrix(f_rows)}, "f")
    g_cols = [Y.lift_coords(mid, o) * sign for o in orbit]
    g = Correspondence(Lm, Y, mid, {0: np.hstack(g_cols)}, "g")
    p = g @ f
    p.label = "p"

    corrg = (f @ g).block(0)
    _check(verdicts, "f o g = Delta_{Spec L}  (<sigma gamma_2, tau gamma_1> = identity)", _eq(corrg, identity(n)))
    descent = [sign * pairing(gamma(n, 1), o).constant_value() for o in orbit]
    _check(
        verdicts,
        "(-1)^(n-2) <gamma_1, sigma gamma_1> = delta(id, sigma)",
        descent == [1] + [0] * (n - 1),
        f"values {descent}",
    )

    # direct split form: sum_l sign * gamma_l (x) gamma_l
    terms = []
    gram_mid = Y.gram[mid]
    for ell in range(n):
        col = zeros(Y.rank(mid), 1)
        col[ell, 0] = sign
        row = gram_mid[:, ell].reshape(1, -1)
        terms.append(Correspondence(Y, Y, 0, {mid: _mm(col, row)}, f"term_{ell + 1}"))
    total = terms[0]
    for t in terms[1:]:
        total = total + t
    _check(verdicts, "res(g o f) = sum_l (-1)^(n-2) gamma_l (x) gamma_l", total == p)
    _check(verdicts, "each (-1)^(n-2) gamma_l (x) gamma_l is idempotent", all(t.is_idempotent() for t in terms))
    _check(verdicts, "p o p = p", p.is_idempotent())
    prof = p.image_ranks()
    want = tuple(n if m == mid else 0 for m in range(Y.dim + 1))
    _check(verdicts, f"p has rank {n} concentrated in degree {mid}", prof == want, f"ranks {prof}")

    mono = {}
    for k in range(1, n):
        S = monodromy_matrices(n, k)
        mono[k] = S
        _check(verdicts, f"eta^{k} commutes with p", _eq(_mm(S[mid], p.block(mid)), _mm(p.block(mid), S[mid])))
        perm_ok = all(
            _eq(S[mid][:, ell], _unit(Y.rank(mid), (ell + k) % n)) for ell in range(n)
        )
        _check(verdicts, f"eta^{k} permutes gamma_l -> gamma_(l+{k})", perm_ok)
        fixed_rest = all(_eq(S[m], identity(Y.rank(m))) for m in range(Y.dim + 1) if m != mid) and all(
            _eq(S[mid][:, c], _unit(Y.rank(mid), c)) for c in range(n, Y.rank(mid))
        )
        _check(verdicts, f"eta^{k} fixes the span of h^a H^b in every degree", fixed_rest)
    if strict:
        _raise_on_failure(verdicts)
    return ArtinIdempotent(n, p, f, g, terms, mono, verdicts)


def _unit(k: int, i: int) -> np.ndarray:
    out = zeros(k, 1)
    out[i, 0] = 1
    return out.reshape(-1)


def h_family_gram(n: int) -> np.ndarray:
    """Pairings <h^{i+1}H^{n-3-i}, h^{i'+1}H^{n-3-i'}> on Y_L, rows and columns indexed by i = 0..n-3."""
    Y = y_model(n)
    mid = n - 2
    pos = {lab: k for k, lab in enumerate(Y.labels[mid])}
    idx = [pos[f"h^{i + 1}H^{n - 3 - i}"] for i in range(n - 2)]
    return Y.gram[mid][np.ix_(idx, idx)]


# --- orthogonality ------------------------------------------------------------

@lru_cache(maxsize=None)
def orthogonality_check(n: int, strict: bool = True) -> list[Verdict]:
    Y = y_model(n)
    rs = restricted_system(n, strict)
    art = artin_idempotent(n, strict)
    p = art.p
    mid = n - 2
    verdicts: list[Verdict] = []
    for j, q in enumerate(rs.p_bar):
        _check(verdicts, f"p o pbar_{j} = 0", (p @ q).is_zero())
        _check(verdicts, f"pbar_{j} o p = 0", (q @ p).is_zero())
    total = p
    for q in rs.p_bar:
        total = total + q
    _check(verdicts, "p + sum pbar_j = Delta_Y", total == Correspondence.identity(Y))
    _check(verdicts, "p = pbar over L", p == rs.complement)
    _check(verdicts, "rank p = rank pbar", p.image_ranks() == rs.complement.image_ranks())

    G = Y.gram[mid]
    hfam = list(range(n, Y.rank(mid)))
    hg = h_family_gram(n)
    size = n - 2
    antidiagonal = all(hg[a, b] == (1 if a + b == n - 3 else 0) for a in range(size) for b in range(size))
    _check(verdicts, "<h^{i+1}H^j, h^{i'+1}H^{j'}> = delta(i+i', n-3)", antidiagonal, f"gram {hg.tolist()}")
    triangular = all(
        hg[a, b] == (1 if a + b == n - 3 else 0) for a in range(size) for b in range(size) if a + b >= n - 3
    )
    _check(verdicts, "h-family Gram is zero below the anti-diagonal with unit anti-diagonal", triangular)
    cross = all(G[ell, c] == 0 and G[c, ell] == 0 for ell in range(n) for c in hfam)
    _check(verdicts, "<gamma_l, h gamma> = 0", cross)
    _check(verdicts, "middle Gram has determinant +-1", abs(det(G)) == 1, f"det {det(G)}")
    if strict:
        _raise_on_failure(verdicts)
    return verdicts


# --- the report -------------------------------------------------------------------

@dataclass
class DecompositionReport:
    n: int
    rank_profile: tuple[int, ...]
    idempotents: list[tuple[str, tuple[int, ...]]]
    verdicts: list[Verdict]
    diagram: str

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    @property
    def summary(self) -> str:
        parts = ["M(SB(A))" if i == 0 else f"M(SB(A))({i})" for i in range(self.n - 2)]
        parts.append(f"M(Spec L)({self.n - 2})")
        return "M(Y) = " + " + ".join(parts)

    def to_dict(self) -> dict:
        return {
            "schema_version": 1,
            "n": self.n,
            "passed": self.passed,
            "summary": self.summary,
            "rank_profile": list(self.rank_profile),
            "idempotents": [{"label": lab, "ranks": list(r), "rank": sum(r)} for lab, r in self.idempotents],
            "verdicts": [{"name": v.name, "passed": v.passed, "detail": v.detail} for v in self.verdicts],
            "diagram": self.diagram,
        }

    def __str__(self):
        lines = [self.summary, f"ranks of CH(Y_L): {self.rank_profile}", ""]
        lines.append(self.diagram)
        lines.append("")
        for lab, r in self.idempotents:
            lines.append(f"  {lab:8s} ranks {r}")
        lines.append("")
        lines.extend(str(v) for v in self.verdicts)
        return "\n".join(lines)


def diagram(n: int) -> str:
    """Chains of Tate pieces: one per Severi-Brauer summand, and the Artin node."""
    dim = 2 * n - 4
    width = 2 * dim + 1
    rows = []
    mid = n - 2
    art = [" "] * width
    art[2 * mid] = "@"
    rows.append(f"{'L(' + str(mid) + ')':>8} " + "".join(art).rstrip())
    for i in range(n - 3, -1, -1):
        cells = [" "] * width
        for m in range(i, i + n):
            cells[2 * m] = "o"
            if m < i + n - 1:
                cells[2 * m + 1] = "-"
        rows.append(f"{'SB(' + str(i) + ')':>8} " + "".join(cells).rstrip())
    axis = " ".join(str(m % 10) for m in range(dim + 1))
    rows.append(f"{'degree':>8} {axis}")
    return "\n".join(rows)


def decomposition_report(n: int) -> DecompositionReport:
    """Run every check and assemble the decomposition of M(Y) over L."""
    verdicts: list[Verdict] = []
    Y = y_model(n)
    table = chow_ranks(build_graph(n, Variety.Y))
    _check(verdicts, "Chow model ranks match GKM ranks", Y.ranks == table.chow_ranks, f"{Y.ranks} vs {table.chow_ranks}")
    for m in range(Y.dim + 1):
        if abs(det(Y.gram[m])) != 1:
            _check(verdicts, f"Poincare pairing CH^{m} x CH^{Y.dim - m} unimodular", False)
    _check(verdicts, "Poincare pairings on CH(Y_L) unimodular", all(abs(det(G)) == 1 for G in Y.gram))
    ms = manin_system(n, strict=False)
    rs = restricted_system(n, strict=False)
    art = artin_idempotent(n, strict=False)
    orth = orthogonality_check(n, strict=False)
    verdicts += ms.verdicts + rs.verdicts + art.verdicts + orth
    idem = [(q.label, q.image_ranks()) for q in rs.p_bar] + [("p", art.p.image_ranks())]
    summed = tuple(sum(r[m] for _, r in idem) for m in range(Y.dim + 1))
    _check(verdicts, "idempotent ranks add up to CH(Y_L)", summed == Y.ranks, f"{summed}")
    _check(verdicts, "total rank n(n-1)", sum(Y.ranks) == n * (n - 1))
    return DecompositionReport(n, Y.ranks, idem, verdicts, diagram(n))
