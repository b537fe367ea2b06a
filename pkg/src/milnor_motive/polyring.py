"""Exact sparse polynomials over the integers in the character variables t1..tn.

Monomials are packed into a single Python int so that monomial
multiplication is integer addition and comparing packed keys is the
graded lexicographic order (t1 > t2 > ... > tn).  Coefficients are
arbitrary precision ints; zero coefficients are never stored, so two
polynomials are equal exactly when their term maps are equal.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

__all__ = [
    "Polynomial",
    "product",
    "LinearForm",
    "RationalFunction",
    "divides",
    "permute",
    "rational",
    "root",
    "check_permutation",
    "compose_permutations",
    "invert_permutation",
]

_BITS = 8
_MASK = (1 << _BITS) - 1
_MAX_EXP = _MASK


def _pack(exps: Sequence[int]) -> int:
    n = len(exps)
    key = 0
    deg = 0
    for e in exps:
        if e < 0:
            raise ValueError("negative exponent")
        if e > _MAX_EXP:
            raise OverflowError(f"exponent {e} exceeds {_MAX_EXP}")
        key = (key << _BITS) | e
        deg += e
    return (deg << (_BITS * n)) | key


def _unpack(key: int, n: int) -> list[int]:
    out = [0] * n
    for k in range(n - 1, -1, -1):
        out[k] = key & _MASK
        key >>= _BITS
    return out


def _key_degree(key: int, n: int) -> int:
    return key >> (_BITS * n)


def check_permutation(sigma: Sequence[int], n: int) -> tuple[int, ...]:
    """Validate a permutation given in one-line notation ``sigma[k-1] = sigma(k)``."""
    sigma = tuple(int(s) for s in sigma)
    if len(sigma) != n or sorted(sigma) != list(range(1, n + 1)):
        raise ValueError(f"{sigma!r} is not a permutation of 1..{n}")
    return sigma


def invert_permutation(sigma: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(sigma)
    for k, s in enumerate(sigma, start=1):
        inv[s - 1] = k
    return tuple(inv)


def compose_permutations(sigma: Sequence[int], tau: Sequence[int]) -> tuple[int, ...]:
    """Return sigma o tau (apply tau first)."""
    return tuple(sigma[t - 1] for t in tau)


class Polynomial:
    """Immutable sparse polynomial in ``n`` variables with integer coefficients."""

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Sequence[int], int] | None = None):
        if n < 1:
            raise ValueError("need at least one variable")
        self.n = n
        packed: dict[int, int] = {}
        if terms:
            for exps, c in terms.items():
                if len(exps) != n:
                    raise ValueError(f"exponent vector {exps!r} has wrong length")
                c = int(c)
                if c:
                    k = _pack(exps)
                    c += packed.get(k, 0)
                    if c:
                        packed[k] = c
                    else:
                        packed.pop(k, None)
        self._terms = packed
        self._hash = None

    @classmethod
    def _raw(cls, n: int, packed: dict[int, int]) -> "Polynomial":
        p = object.__new__(cls)
        p.n = n
        p._terms = packed
        p._hash = None
        return p

    # constructors
    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls._raw(n, {})

    @classmethod
    def constant(cls, n: int, c: int) -> "Polynomial":
        c = int(c)
        return cls._raw(n, {0: c} if c else {})

    @classmethod
    def one(cls, n: int) -> "Polynomial":
        return cls.constant(n, 1)

    @classmethod
    def var(cls, n: int, k: int) -> "Polynomial":
        """The variable ``t_k`` (1-based)."""
        if not 1 <= k <= n:
            raise ValueError(f"variable index {k} out of range 1..{n}")
        exps = [0] * n
        exps[k - 1] = 1
        return cls._raw(n, {_pack(exps): 1})

    # inspection
    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        return {tuple(_unpack(k, self.n)): c for k, c in self._terms.items()}

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self._terms.get(0, 0)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return _key_degree(max(self._terms), self.n)

    def is_homogeneous(self, d: int | None = None) -> bool:
        degs = {_key_degree(k, self.n) for k in self._terms}
        if not degs:
            return True
        if len(degs) != 1:
            return False
        return d is None or degs == {d}

    def leading_term(self) -> tuple[tuple[int, ...], int]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        k = max(self._terms)
        return tuple(_unpack(k, self.n)), self._terms[k]

    def content(self) -> int:
        g = 0
        for c in self._terms.values():
            g = gcd(g, c)
        return g

    # arithmetic
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.n != self.n:
                raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")
            return other
        if isinstance(other, int):
            return Polynomial.constant(self.n, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            c += out.get(k, 0)
            if c:
                out[k] = c
            else:
                del out[k]
        return Polynomial._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.n, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            c = out.get(k, 0) - c
            if c:
                out[k] = c
            else:
                del out[k]
        return Polynomial._raw(self.n, out)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return Polynomial.zero(self.n)
            return Polynomial._raw(self.n, {k: c * other for k, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        if not b:
            return Polynomial.zero(self.n)
        if self.degree() + other.degree() > _MAX_EXP:
            raise OverflowError("product degree exceeds packed exponent range")
        out: dict[int, int] = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        return Polynomial._raw(self.n, {k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result = Polynomial.one(self.n)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    # substitutions
    def substitute(self, i: int, j: int | None) -> "Polynomial":
        """Substitute ``t_i := t_j`` (or ``t_i := 0`` when ``j`` is None)."""
        n = self.n
        # work on packed keys directly: the exponent of t_k sits at bit offset
        # _BITS * (n - k), and the total degree is unchanged by t_i := t_j
        si = _BITS * (n - i)
        sj = None if j is None else _BITS * (n - j)
        out: dict[int, int] = {}
        for k, c in self._terms.items():
            ei = (k >> si) & _MASK
            if ei:
                if sj is None:
                    continue
                if ((k >> sj) & _MASK) + ei > _MAX_EXP:
                    raise OverflowError("exponent overflow in substitution")
                k = k - (ei << si) + (ei << sj)
            c += out.get(k, 0)
            if c:
                out[k] = c
            else:
                out.pop(k, None)
        return Polynomial._raw(n, out)

    def permute(self, sigma: Sequence[int]) -> "Polynomial":
        sigma = check_permutation(sigma, self.n)
        n = self.n
        out = {}
        for k, c in self._terms.items():
            e = _unpack(k, n)
            f = [0] * n
            for idx, ex in enumerate(e):
                f[sigma[idx] - 1] = ex
            out[_pack(f)] = c
        return Polynomial._raw(n, out)

    def evaluate(self, point: Sequence) -> int | Fraction:
        if len(point) != self.n:
            raise ValueError("point has wrong dimension")
        total = 0
        for k, c in self._terms.items():
            term = c
            for x, e in zip(point, _unpack(k, self.n)):
                if e:
                    term *= x**e
            total += term
        return total

    def specialize(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Ring map sending ``t_k`` to ``images[k-1]`` (images may live in another ring)."""
        if len(images) != self.n:
            raise ValueError("need one image per variable")
        m = images[0].n
        total = Polynomial.zero(m)
        cache: dict[tuple[int, int], Polynomial] = {}
        for k, c in self._terms.items():
            term = Polynomial.constant(m, c)
            for idx, e in enumerate(_unpack(k, self.n)):
                if e:
                    pw = cache.get((idx, e))
                    if pw is None:
                        pw = cache[(idx, e)] = images[idx] ** e
                    term = term * pw
            total = total + term
        return total

    def divide_linear(self, alpha: "LinearForm") -> "Polynomial":
        """Exact quotient by a linear form; raises ArithmeticError if it does not divide."""
        q = _divide_linear(self, alpha)
        if q is None:
            raise ArithmeticError(f"{alpha} does not divide {self}")
        return q

    # rendering
    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return [(tuple(_unpack(k, self.n)), self._terms[k]) for k in sorted(self._terms, reverse=True)]

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                f"t{idx + 1}" if e == 1 else f"t{idx + 1}^{e}" for idx, e in enumerate(exps) if e
            )
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"Polynomial({self.n}, '{self}')"

    _TERM = re.compile(r"\s*([+-])?\s*([^+-]+)")

    @classmethod
    def parse(cls, n: int, text: str) -> "Polynomial":
        """Inverse of ``str``: accepts sums of ``c*t1^a*t2`` style terms."""
        text = text.strip()
        if not text:
            raise ValueError("empty polynomial string")
        terms: dict[tuple[int, ...], int] = {}
        pos = 0
        while pos < len(text):
            m = cls._TERM.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
            sign = -1 if m.group(1) == "-" else 1
            coef = sign
            exps = [0] * n
            for factor in m.group(2).split("*"):
                factor = factor.strip()
                fm = re.fullmatch(r"t(\d+)(?:\^(\d+))?", factor)
                if fm:
                    k = int(fm.group(1))
                    if not 1 <= k <= n:
                        raise ValueError(f"variable t{k} out of range")
                    exps[k - 1] += int(fm.group(2) or 1)
                elif re.fullmatch(r"\d+", factor):
                    coef *= int(factor)
                else:
                    raise ValueError(f"bad factor {factor!r}")
            key = tuple(exps)
            terms[key] = terms.get(key, 0) + coef
            pos = m.end()
        return cls(n, terms)

    def to_json(self) -> dict:
        return {"n": self.n, "terms": [[list(e), c] for e, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, data: dict | str) -> "Polynomial":
        if isinstance(data, str):
            data = json.loads(data)
        n = int(data["n"])
        terms: dict[tuple[int, ...], int] = {}
        for exps, c in data["terms"]:
            terms[tuple(exps)] = terms.get(tuple(exps), 0) + int(c)
        return cls(n, terms)


@dataclass(frozen=True)
class LinearForm:
    """A non-zero integer linear form sum(coeffs[k] * t_{k+1})."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if not any(self.coeffs):
            raise ValueError("zero linear form")

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def is_primitive(self) -> bool:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g == 1

    def __neg__(self):
        return LinearForm(tuple(-c for c in self.coeffs))

    def to_polynomial(self) -> Polynomial:
        n = self.n
        terms = {}
        for k, c in enumerate(self.coeffs):
            if c:
                e = [0] * n
                e[k] = 1
                terms[tuple(e)] = c
        return Polynomial(n, terms)

    def permute(self, sigma: Sequence[int]) -> "LinearForm":
        sigma = check_permutation(sigma, self.n)
        out = [0] * self.n
        for k, c in enumerate(self.coeffs):
            out[sigma[k] - 1] = c
        return LinearForm(tuple(out))

    def __str__(self):
        return str(self.to_polynomial())


def root(n: int, i: int, j: int) -> LinearForm:
    """The root alpha_ij = t_i - t_j."""
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"invalid root indices ({i}, {j}) for n={n}")
    c = [0] * n
    c[i - 1] = 1
    c[j - 1] = -1
    return LinearForm(tuple(c))


def _divide_linear(p: Polynomial, alpha: LinearForm) -> Polynomial | None:
    if alpha.n != p.n:
        raise ValueError("linear form and polynomial live in different rings")
    n = p.n
    if p.is_zero():
        return p
    coeffs = alpha.coeffs
    # pivot on a variable with unit coefficient when possible
    k = next((idx for idx, c in enumerate(coeffs) if abs(c) == 1), None)
    if k is None:
        k = next(idx for idx, c in enumerate(coeffs) if c)
    lead = coeffs[k]
    rest = [(idx, c) for idx, c in enumerate(coeffs) if c and idx != k]
    # group p by the exponent of the pivot variable: slices[e] = {other exps: coef}
    slices: dict[int, dict[tuple[int, ...], int | Fraction]] = {}
    for key, c in p._terms.items():
        e = _unpack(key, n)
        ek = e[k]
        e[k] = 0
        slices.setdefault(ek, {})[tuple(e)] = c
    top = max(slices)
    quotient: dict[tuple[int, ...], int | Fraction] = {}
    for ek in range(top, 0, -1):
        cur = slices.pop(ek, None)
        if not cur:
            continue
        # q_{ek-1} = cur / lead; then subtract rest * q_{ek-1} from slice ek-1
        below = slices.setdefault(ek - 1, {})
        for mono, c in cur.items():
            qc = c // lead if abs(lead) == 1 else Fraction(c, lead)
            qe = list(mono)
            qe[k] = ek - 1
            quotient[tuple(qe)] = qc
            for idx, rc in rest:
                m2 = list(mono)
                m2[idx] += 1
                m2 = tuple(m2)
                v = below.get(m2, 0) - rc * qc
                if v:
                    below[m2] = v
                else:
                    below.pop(m2, None)
    if slices.get(0):
        return None
    out = {}
    for e, c in quotient.items():
        if isinstance(c, Fraction):
            if c.denominator != 1:
                return None
            c = c.numerator
        if c:
            out[_pack(e)] = c
    return Polynomial._raw(n, out)


def divides(alpha: LinearForm, p: Polynomial) -> bool:
    """True iff the linear form ``alpha`` divides ``p`` in Z[t1..tn].

    For a root ``t_i - t_j`` this is the vanishing of ``p`` under ``t_i := t_j``.
    """
    if not isinstance(alpha, LinearForm):
        raise TypeError("alpha must be a LinearForm")
    if p.is_zero():
        return True
    nz = [(k, c) for k, c in enumerate(alpha.coeffs, start=1) if c]
    if len(nz) == 2 and {nz[0][1], nz[1][1]} == {1, -1}:
        return p.substitute(nz[0][0], nz[1][0]).is_zero()
    if len(nz) == 1 and abs(nz[0][1]) == 1:
        return p.substitute(nz[0][0], None).is_zero()
    return _divide_linear(p, alpha) is not None


def permute(sigma: Sequence[int], p: Polynomial) -> Polynomial:
    """Replace every ``t_k`` by ``t_{sigma(k)}``."""
    return p.permute(sigma)


# --- rational functions -------------------------------------------------

def _to_sympy(p: Polynomial, R):
    return R.from_dict(p.terms) if p._terms else R.zero


def _from_sympy(f, n: int) -> Polynomial:
    return Polynomial(n, {tuple(m): int(c) for m, c in f.items()})


_RINGS: dict[int, object] = {}


def _sympy_ring(n: int):
    R = _RINGS.get(n)
    if R is None:
        from sympy.polys.domains import ZZ
        from sympy.polys.orderings import grlex
        from sympy.polys.rings import PolyRing

        R = _RINGS[n] = PolyRing([f"t{k}" for k in range(1, n + 1)], ZZ, grlex)
    return R


class RationalFunction:
    """Reduced quotient of two Polynomials with positive leading denominator coefficient."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: Polynomial, denominator: Polynomial, *, _reduced: bool = False):
        if denominator.is_zero():
            raise ZeroDivisionError("zero denominator")
        if numerator.n != denominator.n:
            raise ValueError("numerator and denominator live in different rings")
        if not _reduced:
            numerator, denominator = _reduce(numerator, denominator)
        self.numerator = numerator
        self.denominator = denominator

    @property
    def n(self) -> int:
        return self.numerator.n

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> "RationalFunction":
        return cls(p, Polynomial.one(p.n), _reduced=True)

    def is_polynomial(self) -> bool:
        return self.denominator == 1

    def to_polynomial(self) -> Polynomial:
        if not self.is_polynomial():
            raise ArithmeticError(f"{self} is not a polynomial")
        return self.numerator

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial):
            return RationalFunction.from_polynomial(other)
        if isinstance(other, int):
            return RationalFunction.from_polynomial(Polynomial.constant(self.n, other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.denominator == other.denominator:
            return RationalFunction(self.numerator + other.numerator, self.denominator)
        return RationalFunction(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.numerator, self.denominator, _reduced=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalFunction(self.numerator * other.numerator, self.denominator * other.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.numerator.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.numerator * other.denominator, self.denominator * other.numerator)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.numerator == other.numerator and self.denominator == other.denominator

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def __str__(self):
        if self.is_polynomial():
            return str(self.numerator)
        return f"({self.numerator}) / ({self.denominator})"

    __repr__ = __str__


def _reduce(num: Polynomial, den: Polynomial) -> tuple[Polynomial, Polynomial]:
    n = num.n
    if num.is_zero():
        return num, Polynomial.one(n)
    if den.is_constant():
        c = den.constant_value()
        g = gcd(num.content(), c)
        if c < 0:
            g = -g
        if abs(g) == 1:
            return (num * g, den * g) if g < 0 else (num, den)
        return (
            Polynomial._raw(n, {k: v // g for k, v in num._terms.items()}),
            Polynomial.constant(n, c // g),
        )
    R = _sympy_ring(n)
    _, a, b = _to_sympy(num, R).cofactors(_to_sympy(den, R))
    num, den = _from_sympy(a, n), _from_sympy(b, n)
    if den.leading_term()[1] < 0:
        num, den = -num, -den
    return num, den


def rational(num: Polynomial, den: Polynomial | int = 1) -> RationalFunction:
    """Build the reduced rational function ``num / den``."""
    if isinstance(den, int):
        den = Polynomial.constant(num.n, den)
    return RationalFunction(num, den)


def product(factors: Iterable[Polynomial | LinearForm], n: int) -> Polynomial:
    out = Polynomial.one(n)
    for f in factors:
        out = out * (f.to_polynomial() if isinstance(f, LinearForm) else f)
    return out
