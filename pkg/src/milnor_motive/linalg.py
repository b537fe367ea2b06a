"""Exact integer/rational linear algebra used by the rank and Gram computations.

Dense matrices are numpy object arrays of Python ints so products stay
exact; sparse systems are lists of ``{column: int}`` rows.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "int_matrix",
    "identity",
    "zeros",
    "sparse_rank",
    "rank",
    "det",
    "inverse",
    "solve_left",
    "smith_invariants",
    "is_identity",
]


def int_matrix(rows: Iterable[Sequence[int]], shape: tuple[int, int] | None = None) -> np.ndarray:
    data = [[int(x) for x in r] for r in rows]
    if not data:
        return zeros(*(shape or (0, 0)))
    arr = np.empty((len(data), len(data[0])), dtype=object)
    for i, r in enumerate(data):
        arr[i, :] = r
    return arr


def zeros(r: int, c: int) -> np.ndarray:
    arr = np.empty((r, c), dtype=object)
    arr.fill(0)
    return arr


def identity(k: int) -> np.ndarray:
    arr = zeros(k, k)
    for i in range(k):
        arr[i, i] = 1
    return arr


def is_identity(m: np.ndarray) -> bool:
    return m.shape[0] == m.shape[1] and bool(np.all(m == identity(m.shape[0])))


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {k: v // g for k, v in row.items()}


def sparse_rank(rows: Iterable[dict[int, int]]) -> int:
    """Rank over Q of a sparse integer matrix, by fraction-free incremental echelon."""
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        row = {k: v for k, v in row.items() if v}
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = _primitive(row)
                break
            a, b = piv[lead], row[lead]
            g = gcd(a, b)
            fa, fb = a // g, b // g
            new = {k: v * fa for k, v in row.items()}
            for k, v in piv.items():
                w = new.get(k, 0) - fb * v
                if w:
                    new[k] = w
                else:
                    new.pop(k, None)
            row = _primitive(new) if new else new
    return len(pivots)


def rank(m: np.ndarray) -> int:
    return sparse_rank({j: int(v) for j, v in enumerate(r) if v} for r in m)


def det(m: np.ndarray) -> int:
    """Bareiss fraction-free determinant."""
    k = m.shape[0]
    if m.shape != (k, k):
        raise ValueError("determinant of a non-square matrix")
    if k == 0:
        return 1
    a = [[int(x) for x in r] for r in m]
    sign = 1
    prev = 1
    for p in range(k - 1):
        if a[p][p] == 0:
            swap = next((r for r in range(p + 1, k) if a[r][p]), None)
            if swap is None:
                return 0
            a[p], a[swap] = a[swap], a[p]
            sign = -sign
        for i in range(p + 1, k):
            for j in range(p + 1, k):
                a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) // prev
        prev = a[p][p]
    return sign * a[k - 1][k - 1]


def _gauss_jordan(m: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    k = m.shape[0]
    a = [[Fraction(int(x)) for x in r] + [Fraction(int(y)) for y in s] for r, s in zip(m, rhs)]
    width = len(a[0]) if a else 0
    for col in range(k):
        piv = next((r for r in range(col, k) if a[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(k):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    out = np.empty((k, width - k), dtype=object)
    for i in range(k):
        for j in range(width - k):
            v = a[i][k + j]
            out[i, j] = v.numerator if v.denominator == 1 else v
    return out


def inverse(m: np.ndarray) -> np.ndarray:
    """Exact inverse; entries are ints when ``m`` is unimodular, Fractions otherwise."""
    if m.shape[0] != m.shape[1]:
        raise ValueError("inverse of a non-square matrix")
    return _gauss_jordan(m, identity(m.shape[0]))


def solve_left(m: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """Solve ``m @ x = rhs`` exactly for square invertible ``m``."""
    return _gauss_jordan(m, rhs)


def smith_invariants(m: np.ndarray) -> list[int]:
    """Non-zero invariant factors d1 | d2 | ... of an integer matrix."""
    a = [[int(x) for x in r] for r in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    out = []
    t = 0
    while t < min(rows, cols):
        # pick the smallest non-zero entry in the trailing block as pivot
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[t], a[i] = a[i], a[t]
        for r in a:
            r[t], r[j] = r[j], r[t]
        while True:
            p = a[t][t]
            done = True
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    done = False
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for r in a:
                        r[j] -= q * r[t]
                if a[t][j]:
                    done = False
            if done:
                # divisibility condition on the trailing block
                bad = next(
                    ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                continue
            # move the smallest remaining entry of row/column t into the pivot
            cands = [(abs(a[i][t]), i, t) for i in range(t, rows) if a[i][t]]
            cands += [(abs(a[t][j]), t, j) for j in range(t, cols) if a[t][j]]
            _, i, j = min(cands)
            if i != t:
                a[t], a[i] = a[i], a[t]
            if j != t:
                for r in a:
                    r[t], r[j] = r[j], r[t]
        out.append(abs(a[t][t]))
        t += 1
    return out
