"""Splitting matrices of the cyclic algebra (a, b)_zeta over L = F(c), c^n = a.

Entries live in Z[zeta, c, b] / (Phi_n(zeta)); c and b stay formal.
The conjugation identities behind the cocycle eta^k -> M^k are checked
in the inverse-free form

    zeta^k * M^k * rho(u) == rho(u) * M^k,     M^k * M == M * M^k,

with M = rho(v).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache

from .gkm_graph import Vertex

__all__ = [
    "cyclotomic_polynomial",
    "CycElement",
    "CycMatrix",
    "CyclicAlgebraSpec",
    "build_generators",
    "verify_cocycle",
    "CocycleReport",
    "fixed_point_permutation",
]


def _poly_divmod(a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    """Divide integer coefficient lists (index = power) by a monic b."""
    a = list(a)
    db = len(b) - 1
    if b[-1] != 1:
        raise ValueError("divisor must be monic")
    q = [0] * max(len(a) - db, 1)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c:
            q[k - db] = c
            for t in range(db + 1):
                a[k - db + t] -= c * b[t]
    rem = a[:db] if db else []
    while rem and rem[-1] == 0:
        rem.pop()
    return q, rem


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Phi_n as a coefficient tuple, by dividing x^n - 1 by Phi_d for d | n, d < n."""
    if n < 1:
        raise ValueError("n must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod(num, list(cyclotomic_polynomial(d)))
            if rem:
                raise ArithmeticError("cyclotomic division left a remainder")
    while num and num[-1] == 0:
        num.pop()
    return tuple(num)


class CycElement:
    """Element of Z[zeta, c, b]/(Phi_n(zeta)): map (zeta exp, c exp, b exp) -> int."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[tuple[int, int, int], int] | None = None):
        self.n = n
        self.terms = _reduce(n, terms or {})

    @classmethod
    def zeta(cls, n, k=1):
        return cls(n, {(k % n, 0, 0): 1})

    @classmethod
    def c(cls, n):
        return cls(n, {(0, 1, 0): 1})

    @classmethod
    def b(cls, n):
        return cls(n, {(0, 0, 1): 1})

    @classmethod
    def scalar(cls, n, v: int):
        return cls(n, {(0, 0, 0): v} if v else {})

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return CycElement(self.n, out)

    def __neg__(self):
        return CycElement(self.n, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return CycElement(self.n, {k: v * other for k, v in self.terms.items()})
        out: dict[tuple[int, int, int], int] = {}
        for (z1, c1, b1), v1 in self.terms.items():
            for (z2, c2, b2), v2 in other.terms.items():
                key = (z1 + z2, c1 + c2, b1 + b2)
                out[key] = out.get(key, 0) + v1 * v2
        return CycElement(self.n, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = CycElement.scalar(self.n, other)
        return isinstance(other, CycElement) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (z, c, b), v in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                sym if e == 1 else f"{sym}^{e}" for sym, e in (("zeta", z), ("c", c), ("b", b)) if e
            )
            if not mono:
                parts.append(str(v))
            elif v == 1:
                parts.append(mono)
            elif v == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{v}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


def _reduce(n: int, terms: dict[tuple[int, int, int], int]) -> dict[tuple[int, int, int], int]:
    """Reduce zeta powers: first mod zeta^n = 1, then modulo Phi_n."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    # collect per (c, b) a dense zeta polynomial
    buckets: dict[tuple[int, int], list[int]] = {}
    for (z, c, b), v in terms.items():
        if v:
            arr = buckets.setdefault((c, b), [0] * n)
            arr[z % n] += v
    out = {}
    for (c, b), arr in buckets.items():
        _, rem = _poly_divmod(arr, list(phi)) if len(arr) > deg else (None, arr)
        for z, v in enumerate(rem):
            if v:
                out[(z, c, b)] = v
    return out


class CycMatrix:
    """Square matrix over Z[zeta, c, b]/(Phi_n)."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: list[list[CycElement]]):
        self.n = n
        self.rows = rows

    @classmethod
    def identity(cls, n: int) -> "CycMatrix":
        return cls(n, [[CycElement.scalar(n, int(i == j)) for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: "CycMatrix") -> "CycMatrix":
        n = self.n
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = CycElement.scalar(n, 0)
                for k in range(n):
                    a, b = self.rows[i][k], other.rows[k][j]
                    if a.terms and b.terms:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return CycMatrix(n, out)

    def scale(self, s: CycElement) -> "CycMatrix":
        return CycMatrix(self.n, [[s * x for x in r] for r in self.rows])

    def __pow__(self, k: int) -> "CycMatrix":
        out = CycMatrix.identity(self.n)
        for _ in range(k):
            out = out @ self
        return out

    def __eq__(self, other):
        return isinstance(other, CycMatrix) and self.rows == other.rows

    def is_diagonal(self) -> bool:
        return all(self.rows[i][j].is_zero() for i in range(self.n) for j in range(self.n) if i != j)

    def __str__(self):
        return "\n".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows)


@dataclass(frozen=True)
class CyclicAlgebraSpec:
    n: int

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("degree must be at least 3")

    @property
    def phi(self) -> tuple[int, ...]:
        return cyclotomic_polynomial(self.n)


def build_generators(spec: CyclicAlgebraSpec | int) -> tuple[CycMatrix, CycMatrix]:
    """rho(u) = diag(c, zeta c, ..., zeta^{n-1} c); rho(v) = cyclic shift with b in the corner."""
    if isinstance(spec, int):
        spec = CyclicAlgebraSpec(spec)
    n = spec.n
    zero = CycElement.scalar(n, 0)
    u = [[zero] * n for _ in range(n)]
    v = [[zero] * n for _ in range(n)]
    for i in range(n):
        u[i][i] = CycElement(n, {(i, 1, 0): 1})
    for i in range(1, n):
        v[i][i - 1] = CycElement.scalar(n, 1)
    v[0][n - 1] = CycElement.b(n)
    return CycMatrix(n, u), CycMatrix(n, v)


@dataclass
class CocycleReport:
    n: int
    checks: list[tuple[str, int, bool]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ok for _, _, ok in self.checks)

    def to_dict(self) -> dict:
        return {
            "schema_version": 1,
            "n": self.n,
            "passed": self.passed,
            "checks": [{"identity": name, "k": k, "verdict": "pass" if ok else "fail"} for name, k, ok in self.checks],
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    def __str__(self):
        lines = [f"cocycle identities, n={self.n}"]
        for name, k, ok in self.checks:
            lines.append(f"  k={k}: {name}: {'pass' if ok else 'FAIL'}")
        return "\n".join(lines)


def verify_cocycle(spec: CyclicAlgebraSpec | int) -> CocycleReport:
    if isinstance(spec, int):
        spec = CyclicAlgebraSpec(spec)
    n = spec.n
    u, M = build_generators(spec)
    report = CocycleReport(n)
    Mk = CycMatrix.identity(n)
    for k in range(n):
        lhs = (Mk @ u).scale(CycElement.zeta(n, k))
        report.checks.append(("zeta^k M^k rho(u) = rho(u) M^k", k, lhs == u @ Mk))
        report.checks.append(("M^k rho(v) = rho(v) M^k", k, Mk @ M == M @ Mk))
        Mk = Mk @ M
    return report


def fixed_point_permutation(n: int, k: int) -> dict[Vertex, Vertex]:
    """Action of M^k on the fixed flags: [ij] -> [eta^k(i) eta^k(j)], eta = (1 2 ... n)."""
    if n < 3:
        raise ValueError("n must be at least 3")
    if not 0 <= k < n:
        raise ValueError(f"exponent {k} out of range 0..{n - 1}")

    def e(i):
        return (i - 1 + k) % n + 1

    return {
        Vertex(i, j): Vertex(e(i), e(j))
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if i != j
    }
