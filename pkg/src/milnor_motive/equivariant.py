"""Piecewise-polynomial equivariant classes on a fixed-point graph.

A class is a tuple of homogeneous polynomials, one per fixed point,
subject to the edge divisibility conditions.  The localization pairing
sums ``c1 * c2 / euler`` over the fixed points; all Euler classes are
products of roots, so the sum is accumulated with the denominator kept
as a multiset of roots and cancelled by exact linear division.
"""
from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd
from itertools import combinations_with_replacement
from typing import Callable, Mapping, Sequence

from .errors import FreenessViolation, IntegralityViolation
from .gkm_graph import GkmGraph, Variety, Vertex, build_graph
from .linalg import det, int_matrix, sparse_rank
from .polyring import LinearForm, Polynomial, divides

__all__ = [
    "EquivariantClass",
    "GradedRankTable",
    "is_gkm",
    "pairing",
    "pairing_number",
    "multiply",
    "add",
    "scale",
    "graded_gkm_rank",
    "chow_ranks",
    "middle_basis_check",
    "MiddleBasisVerdict",
]


class EquivariantClass:
    """Homogeneous piecewise polynomial on the vertices of a GkmGraph."""

    __slots__ = ("graph", "degree", "values")

    def __init__(self, graph: GkmGraph, degree: int, values: Mapping[Vertex, Polynomial] | Sequence[Polynomial]):
        if degree < 0:
            raise ValueError("degree must be non-negative")
        n = graph.n
        if isinstance(values, Mapping):
            missing = [v for v in graph.vertices if v not in values]
            if missing:
                raise ValueError(f"no value at vertices {missing[:3]}")
            vals = tuple(values[v] for v in graph.vertices)
        else:
            vals = tuple(values)
            if len(vals) != len(graph.vertices):
                raise ValueError("one value per vertex required")
        for v, p in zip(graph.vertices, vals):
            if p.n != n:
                raise ValueError(f"value at {v} lives in the wrong ring")
            if not p.is_homogeneous(degree):
                raise ValueError(f"value at {v} is not homogeneous of degree {degree}: {p}")
        self.graph = graph
        self.degree = degree
        self.values = vals

    @classmethod
    def from_function(cls, graph: GkmGraph, degree: int, fn: Callable[[Vertex], Polynomial]) -> "EquivariantClass":
        return cls(graph, degree, [fn(v) for v in graph.vertices])

    @classmethod
    def constant(cls, graph: GkmGraph, c: int = 1) -> "EquivariantClass":
        p = Polynomial.constant(graph.n, c)
        return cls(graph, 0, [p] * len(graph.vertices))

    @classmethod
    def zero(cls, graph: GkmGraph, degree: int = 0) -> "EquivariantClass":
        z = Polynomial.zero(graph.n)
        return cls(graph, degree, [z] * len(graph.vertices))

    def __getitem__(self, v) -> Polynomial:
        return self.values[self.graph.index[Vertex(*v)]]

    def items(self):
        return zip(self.graph.vertices, self.values)

    def support(self) -> list[Vertex]:
        return [v for v, p in self.items() if p]

    def is_zero(self) -> bool:
        return not any(self.values)

    def restrict(self, graph: GkmGraph) -> "EquivariantClass":
        """Reinterpret the vertex tuple on another graph with the same fixed points."""
        if graph.vertices != self.graph.vertices:
            raise ValueError("graphs have different fixed points")
        return EquivariantClass(graph, self.degree, self.values)

    def __eq__(self, other):
        if not isinstance(other, EquivariantClass):
            return NotImplemented
        if self.graph.vertices != other.graph.vertices or self.values != other.values:
            return False
        return self.degree == other.degree or self.is_zero()

    def __hash__(self):
        return hash(self.values)

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, scale(-1, other))

    def __neg__(self):
        return scale(-1, self)

    def __mul__(self, other):
        if isinstance(other, int):
            return scale(other, self)
        return multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = EquivariantClass.constant(self.graph)
        for _ in range(e):
            out = multiply(out, self)
        return out

    def __repr__(self):
        shown = ", ".join(f"[{v}]: {p}" for v, p in self.items() if p)
        return f"EquivariantClass({self.graph.variety.value}, n={self.graph.n}, deg={self.degree}, {{{shown}}})"

    def to_dict(self) -> dict:
        return {
            "schema_version": 1,
            "n": self.graph.n,
            "variety": self.graph.variety.value,
            "degree": self.degree,
            "values": {str(v): str(p) for v, p in self.items()},
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, data: dict | str) -> "EquivariantClass":
        if isinstance(data, str):
            data = json.loads(data)
        g = build_graph(int(data["n"]), data["variety"])
        vals = data["values"]
        return cls(g, int(data["degree"]), [Polynomial.parse(g.n, vals[str(v)]) for v in g.vertices])


def _same_graph(c1: EquivariantClass, c2: EquivariantClass) -> None:
    if c1.graph is not c2.graph and c1.graph != c2.graph:
        raise ValueError("classes live on different graphs")


def multiply(c1: EquivariantClass, c2: EquivariantClass) -> EquivariantClass:
    _same_graph(c1, c2)
    return EquivariantClass(c1.graph, c1.degree + c2.degree, [a * b for a, b in zip(c1.values, c2.values)])


def add(c1: EquivariantClass, c2: EquivariantClass) -> EquivariantClass:
    _same_graph(c1, c2)
    if c1.degree != c2.degree:
        if c1.is_zero():
            return c2
        if c2.is_zero():
            return c1
        raise ValueError(f"cannot add classes of degrees {c1.degree} and {c2.degree}")
    return EquivariantClass(c1.graph, c1.degree, [a + b for a, b in zip(c1.values, c2.values)])


def scale(k: int | Polynomial, c: EquivariantClass) -> EquivariantClass:
    """Multiply by an integer or by a homogeneous polynomial (the module structure)."""
    if isinstance(k, Polynomial):
        if not k.is_homogeneous():
            raise ValueError("scalar polynomial must be homogeneous")
        d = max(k.degree(), 0)
        return EquivariantClass(c.graph, c.degree + d, [k * p for p in c.values])
    return EquivariantClass(c.graph, c.degree, [p * k for p in c.values])


def is_gkm(c: EquivariantClass) -> tuple[bool, list]:
    """Check every edge condition; returns (ok, violated edges)."""
    bad = [
        e
        for e in c.graph.edges
        if not divides(e.weight, c[e.source] - c[e.target])
    ]
    return (not bad, bad)


# --- localization pairing ---------------------------------------------------

def _canonical(alpha: LinearForm) -> tuple[tuple[int, ...], int]:
    """Sign-normalize a linear form: first non-zero coefficient positive."""
    lead = next(c for c in alpha.coeffs if c)
    return (alpha.coeffs, 1) if lead > 0 else (tuple(-c for c in alpha.coeffs), -1)


def _euler_data(g: GkmGraph) -> list[tuple[int, Counter]]:
    cache = getattr(_euler_data, "_cache", None)
    if cache is None:
        cache = _euler_data._cache = {}
    key = (g.n, g.variety)
    if key not in cache:
        out = []
        for v in g.vertices:
            sign = 1
            ctr: Counter = Counter()
            for w in g.tangent_weights(v):
                f, s = _canonical(w)
                sign *= s
                ctr[f] += 1
            out.append((sign, ctr))
        cache[key] = out
    return cache[key]


def _linear(coeffs: tuple[int, ...]) -> LinearForm:
    return LinearForm(coeffs)


def pairing(c1: EquivariantClass, c2: EquivariantClass) -> Polynomial:
    """Localization pairing sum_v c1(v) c2(v) / e(v), returned as a Polynomial.

    Raises IntegralityViolation when the sum is not a polynomial.
    """
    _same_graph(c1, c2)
    g = c1.graph
    n = g.n
    num = Polynomial.zero(n)
    den: Counter = Counter()
    polys: dict[tuple[int, ...], Polynomial] = {}

    def lin(f):
        p = polys.get(f)
        if p is None:
            p = polys[f] = _linear(f).to_polynomial()
        return p

    # visit vertices row by row; rows share many Euler factors
    for (sign, ctr), a, b in zip(_euler_data(g), c1.values, c2.values):
        if not a or not b:
            continue
        term = a * b
        if sign < 0:
            term = -term
        # bring both fractions to the multiset lcm of their denominators
        for f, m in ctr.items():
            extra = m - den.get(f, 0)
            for _ in range(extra):
                num = num * lin(f)
            if extra > 0:
                den[f] = m
        for f, m in den.items():
            for _ in range(m - ctr.get(f, 0)):
                term = term * lin(f)
        num = num + term
        num, den = _cancel(num, den, lin)
    if not num:
        return Polynomial.zero(n)
    if den:
        raise IntegralityViolation(
            f"pairing is not polynomial; uncancelled denominator factors "
            f"{[str(_linear(f)) for f in den.elements()]}"
        )
    return num


def _cancel(num: Polynomial, den: Counter, lin) -> tuple[Polynomial, Counter]:
    if not num:
        return num, Counter()
    for f in list(den):
        alpha = _linear(f)
        while den[f] and divides(alpha, num):
            num = num.divide_linear(alpha)
            den[f] -= 1
        if not den[f]:
            del den[f]
    return num, den


def _sample_points(n: int) -> tuple[tuple[int, ...], ...]:
    # distinct coordinates keep every root t_i - t_j away from zero
    return tuple(range(1, n + 1)), tuple(k * k * k + 2 * k for k in range(1, n + 1))


def _euler_values(g: GkmGraph, point: tuple[int, ...]) -> list[int]:
    cache = getattr(_euler_values, "_cache", None)
    if cache is None:
        cache = _euler_values._cache = {}
    key = (g.n, g.variety, point)
    if key not in cache:
        vals = []
        for v in g.vertices:
            e = 1
            for w in g.tangent_weights(v):
                e *= sum(c * x for c, x in zip(w.coeffs, point))
            vals.append(e)
        cache[key] = vals
    return cache[key]


def pairing_number(c1: EquivariantClass, c2: EquivariantClass) -> int:
    """Non-equivariant intersection number: the degree-0 part of ``pairing``.

    When the degrees are complementary the localization sum is a constant,
    so it is evaluated exactly at integer points (two of them, as a guard).
    Any other degree combination contributes 0.
    """
    _same_graph(c1, c2)
    g = c1.graph
    if c1.degree + c2.degree != g.dim:
        return 0
    results = []
    for point in _sample_points(g.n):
        total = Fraction(0)
        for e, a, b in zip(_euler_values(g, point), c1.values, c2.values):
            if a and b:
                total += Fraction(a.evaluate(point) * b.evaluate(point), e)
        results.append(total)
    if results[0] != results[1] or results[0].denominator != 1:
        raise IntegralityViolation(f"degree-0 pairing is not an integer constant: {results}")
    return results[0].numerator


# --- graded ranks ---------------------------------------------------------

@dataclass(frozen=True)
class GradedRankTable:
    variety: Variety
    n: int
    gkm_ranks: tuple[int, ...]
    chow_ranks: tuple[int, ...]
    method: str = "full"

    @property
    def total(self) -> int:
        return sum(self.chow_ranks)

    def to_dict(self) -> dict:
        return {
            "schema_version": 1,
            "variety": self.variety.value,
            "n": self.n,
            "method": self.method,
            "gkm_ranks": list(self.gkm_ranks),
            "chow_ranks": list(self.chow_ranks),
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    def __str__(self):
        lines = [f"{self.variety.value}, n={self.n} ({self.method})", " m  gkm_rank  chow_rank"]
        for m, (gm, bm) in enumerate(zip(self.gkm_ranks, self.chow_ranks)):
            lines.append(f"{m:2d}  {gm:8d}  {bm:9d}")
        lines.append(f"total chow rank {self.total}")
        return "\n".join(lines)


def _monomials(r: int, d: int) -> list[tuple[int, ...]]:
    out = []
    for combo in combinations_with_replacement(range(r), d):
        e = [0] * r
        for k in combo:
            e[k] += 1
        out.append(tuple(e))
    return out


def _constraint_rows_full(g: GkmGraph, d: int) -> tuple[list[dict[int, int]], int]:
    """Edge divisibility as integer-linear conditions on coefficient vectors.

    Variables are t1..t_{n-1} (t_n := 0).  For a weight t_a - t_b the
    condition is that the difference vanishes under t_a := t_b, or under
    t_a := 0 when b = n.
    """
    n = g.n
    r = n - 1
    monos = _monomials(r, d)
    M = len(monos)
    rows: list[dict[int, int]] = []
    for e in g.edges:
        coeffs, _ = _canonical(e.weight)
        a = coeffs.index(1) if 1 in coeffs else coeffs.index(-1)
        b = next(k for k, c in enumerate(coeffs) if c and k != a)
        if b == n - 1:
            kill, into = a, None
        elif a == n - 1:
            kill, into = b, None
        else:
            kill, into = a, b
        groups: dict[tuple[int, ...], list[int]] = {}
        for idx, m in enumerate(monos):
            if into is None:
                if m[kill]:
                    continue
                img = m
            else:
                img = list(m)
                img[into] += img[kill]
                img[kill] = 0
                img = tuple(img)
            groups.setdefault(img, []).append(idx)
        s, t = g.index[e.source] * M, g.index[e.target] * M
        for idxs in groups.values():
            row = {}
            for idx in idxs:
                row[s + idx] = 1
                row[t + idx] = -1
            rows.append(row)
    return rows, len(g.vertices) * M


def _generic_plane(n: int) -> list[tuple[int, int]]:
    """Images (a_k, b_k) of t_k in a rank-2 lattice keeping all roots pairwise independent."""
    for shift in range(0, 64):
        pts = [(k, k**3 + shift * k * k) for k in range(1, n + 1)]
        dirs = set()
        ok = True
        for i in range(n):
            for j in range(i + 1, n):
                A, B = pts[i][0] - pts[j][0], pts[i][1] - pts[j][1]
                # direction up to sign and scale
                q = gcd(A, B)
                A, B = A // q, B // q
                if A < 0 or (A == 0 and B < 0):
                    A, B = -A, -B
                if (A, B) in dirs:
                    ok = False
                    break
                dirs.add((A, B))
            if not ok:
                break
        if ok:
            return pts
    raise RuntimeError("no generic plane found")


def _constraint_rows_plane(g: GkmGraph, d: int) -> tuple[list[dict[int, int]], int]:
    """Conditions after restricting to a generic rank-2 subtorus.

    Every root restricts to a binary linear form A x + B y; divisibility of
    a binary form of degree d is its vanishing at the point (B, -A).
    """
    pts = _generic_plane(g.n)
    M = d + 1
    rows = []
    for e in g.edges:
        c = e.weight.coeffs
        A = sum(ck * p[0] for ck, p in zip(c, pts))
        B = sum(ck * p[1] for ck, p in zip(c, pts))
        # basis x^k y^(d-k), k = 0..d
        vals = [B**k * (-A) ** (d - k) for k in range(M)]
        s, t = g.index[e.source] * M, g.index[e.target] * M
        row = {}
        for k, v in enumerate(vals):
            if v:
                row[s + k] = v
                row[t + k] = -v
        rows.append(row)
    return rows, len(g.vertices) * M


def graded_gkm_rank(g: GkmGraph, d: int, method: str = "full") -> int:
    """Rank of the degree-d part of the GKM module.

    ``full`` works over Q[t1..t_{n-1}] (t_n := 0); ``plane`` restricts to a
    generic rank-2 subtorus, which has the same fixed points and invariant
    curves and hence a free GKM module with the same Poincare polynomial.
    """
    if d < 0:
        raise ValueError("degree must be non-negative")
    if method == "full":
        rows, unknowns = _constraint_rows_full(g, d)
    elif method == "plane":
        rows, unknowns = _constraint_rows_plane(g, d)
    else:
        raise ValueError(f"unknown method {method!r}")
    return unknowns - sparse_rank(rows)


def constraint_matrix(g: GkmGraph, d: int, method: str = "full"):
    """Dense integer matrix of the degree-d divisibility conditions (for Smith-form checks)."""
    rows, unknowns = (_constraint_rows_full if method == "full" else _constraint_rows_plane)(g, d)
    return int_matrix([[row.get(k, 0) for k in range(unknowns)] for row in rows], (0, unknowns))


def chow_ranks(g: GkmGraph, up_to: int | None = None, method: str = "auto", jobs: int = 1) -> GradedRankTable:
    """Nonequivariant ranks by deconvolving the Hilbert series of the GKM module.

    With r polynomial variables, b_m = g_m - sum_{k>=1} C(k+r-1, r-1) b_{m-k}.
    The per-degree kernel ranks are independent; ``jobs > 1`` farms them out
    to worker processes.
    """
    if up_to is None:
        up_to = g.dim
    if method == "auto":
        method = "full" if g.n <= 4 else "plane"
    if method not in ("full", "plane"):
        raise ValueError(f"unknown rank method {method!r}")
    r = g.n - 1 if method == "full" else 2
    degrees = range(up_to + 1)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            kernel = list(pool.map(_rank_job, [(g.n, g.variety.value, m, method) for m in degrees]))
    else:
        kernel = [graded_gkm_rank(g, m, method) for m in degrees]
    gs, bs = [], []
    for m in degrees:
        gm = kernel[m]
        bm = gm - sum(comb(k + r - 1, r - 1) * bs[m - k] for k in range(1, m + 1))
        if bm < 0:
            raise FreenessViolation(f"negative rank b_{m} = {bm} for {g.variety.value}, n={g.n}")
        gs.append(gm)
        bs.append(bm)
    return GradedRankTable(g.variety, g.n, tuple(gs), tuple(bs), method)


def _rank_job(args: tuple[int, str, int, str]) -> int:
    n, variety, d, method = args
    return graded_gkm_rank(build_graph(n, variety), d, method)


# --- middle degree basis ----------------------------------------------------

@dataclass
class MiddleBasisVerdict:
    n: int
    labels: list[str]
    gram: object
    determinant: int
    middle_rank: int
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def middle_family(n: int) -> tuple[list[str], list[EquivariantClass]]:
    """Lifts of the candidate middle-degree basis of CH(Y_L)."""
    from .cycles_monodromy import gamma, lift_H, lift_h

    gy = build_graph(n, Variety.Y)
    h = lift_h(n).restrict(gy)
    H = lift_H(n).restrict(gy)
    labels, classes = [], []
    for ell in range(1, n + 1):
        labels.append(f"gamma_{ell}")
        classes.append(gamma(n, ell))
    for i in range(n - 2):
        j = n - 3 - i
        labels.append(f"h^{i + 1}H^{j}")
        classes.append(multiply(h ** (i + 1), H**j))
    return labels, classes


def gram_matrix(classes: Sequence[EquivariantClass], others: Sequence[EquivariantClass] | None = None):
    """Integer Gram matrix of degree-0 localization pairings."""
    others = classes if others is None else others
    symmetric = others is classes
    rows = [[0] * len(others) for _ in classes]
    for a, x in enumerate(classes):
        for b, y in enumerate(others):
            if symmetric and b < a:
                rows[a][b] = rows[b][a]
                continue
            p = pairing(x, y)
            if not p.is_constant():
                raise ValueError("Gram entries must be degree-0 pairings")
            rows[a][b] = p.constant_value()
    return int_matrix(rows, (len(classes), len(others)))


def middle_basis_check(n: int, rank_method: str = "auto") -> MiddleBasisVerdict:
    labels, classes = middle_family(n)
    G = gram_matrix(classes)
    D = det(G)
    gy = build_graph(n, Variety.Y)
    if rank_method == "auto":
        rank_method = "full" if n <= 4 else "plane"
    # only degrees up to the middle are needed for the middle rank
    table = chow_ranks(gy, up_to=n - 2, method=rank_method)
    mid = table.chow_ranks[n - 2]
    failures = []
    if abs(D) != 1:
        failures.append(f"|det| = {abs(D)} != 1")
    if mid != 2 * n - 2:
        failures.append(f"middle rank {mid} != {2 * n - 2}")
    k = n
    cross = G[:k, k:]
    if any(x != 0 for x in cross.flat):
        failures.append("gamma vs h-family cross block is non-zero")
    return MiddleBasisVerdict(n, labels, G, D, mid, failures)
