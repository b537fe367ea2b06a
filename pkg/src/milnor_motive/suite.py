"""Every computable identity for a given n, gathered as named verdicts.

The groups are independent and can be run separately; ``run_suite`` runs
them all, optionally in worker processes.
"""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .cocycle import fixed_point_permutation, verify_cocycle
from .cycles_monodromy import MonodromyElement, act, gamma, lagrange_oracle, lift_H, lift_h
from .equivariant import chow_ranks, is_gkm, middle_basis_check, pairing
from .gkm_graph import Variety, Vertex, build_graph
from .motives import (
    Verdict,
    decomposition_report,
    h_family_gram,
    intersection_number,
    localization_number,
    product_oracle,
)

__all__ = ["GROUPS", "SuiteResult", "expected_ranks", "run_group", "run_suite"]


def expected_ranks(n: int, variety: Variety | str) -> tuple[int, ...]:
    """Tate-piece counts: (n-1) shifted copies of P^{n-1} for X; n-2 copies plus n classes in the middle for Y."""
    variety = Variety(variety)
    copies = n - 1 if variety is Variety.X else n - 2
    dim = 2 * n - 3 if variety is Variety.X else 2 * n - 4
    out = [0] * (dim + 1)
    for i in range(copies):
        for m in range(i, i + n):
            out[m] += 1
    if variety is Variety.Y:
        out[n - 2] += n
    return tuple(out)


def _gkm(n: int) -> list[Verdict]:
    out = []
    for ell in range(1, n + 1):
        ok, bad = is_gkm(gamma(n, ell))
        out.append(Verdict(f"gamma_{ell} satisfies every edge condition", ok, f"{len(bad)} bad edges" if bad else ""))
    for name, cls in (("h'", lift_h(n)), ("H'", lift_H(n))):
        ok, bad = is_gkm(cls)
        out.append(Verdict(f"{name} satisfies every edge condition on X", ok))
    return out


def _monodromy(n: int) -> list[Verdict]:
    out = []
    for k in range(n):
        m = MonodromyElement.power(n, k)
        ok = all(act(m, gamma(n, ell)) == gamma(n, m(ell)) for ell in range(1, n + 1))
        out.append(Verdict(f"eta^{k} sends gamma_l to gamma_(eta^{k}(l))", ok))
    out.append(Verdict("act(sigma, H') = H' for every sigma", all(act(k, lift_H(n)) == lift_H(n) for k in range(n))))
    return out


def _self_pairing(n: int) -> list[Verdict]:
    sign = (-1) ** (n - 2)
    table = {}
    for k in range(1, n + 1):
        for ell in range(k, n + 1):
            table[k, ell] = pairing(gamma(n, k), gamma(n, ell))
    ok = all(p == (sign if k == ell else 0) for (k, ell), p in table.items())
    bad = [f"<{k},{ell}>={p}" for (k, ell), p in table.items() if p != (sign if k == ell else 0)]
    out = [Verdict(f"<gamma_k, gamma_l> = {sign} delta(k,l) by localization", ok, ", ".join(bad[:3]))]
    for ell in range(1, n + 1):
        o = lagrange_oracle(n, ell)
        out.append(
            Verdict(f"interpolation oracle for gamma_{ell} is constant {sign} at {len(o.values)} points", o.passed, str(o.function))
        )
    return out


def _middle(n: int) -> list[Verdict]:
    mb = middle_basis_check(n)
    out = [
        Verdict("middle Gram has determinant +-1", abs(mb.determinant) == 1, f"det {mb.determinant}"),
        Verdict(f"middle Chow rank is {2 * n - 2}", mb.middle_rank == 2 * n - 2, f"rank {mb.middle_rank}"),
        Verdict("gamma block and h-family block are orthogonal", not any(x != 0 for x in mb.gram[:n, n:].flat)),
    ]
    hg = h_family_gram(n)
    size = n - 2
    delta = all(hg[a, b] == (1 if a + b == n - 3 else 0) for a in range(size) for b in range(size))
    out.append(Verdict("h-family Gram equals the anti-diagonal delta(i+i', n-3)", delta, f"gram {hg.tolist()}"))
    return out


def _ranks(n: int) -> list[Verdict]:
    out = []
    for variety in (Variety.X, Variety.Y):
        table = chow_ranks(build_graph(n, variety))
        want = expected_ranks(n, variety)
        out.append(Verdict(f"Chow ranks of {variety.value} are {want}", table.chow_ranks == want, f"got {table.chow_ranks}"))
        out.append(Verdict(f"total rank of {variety.value} is n(n-1)", table.total == n * (n - 1)))
    return out


def _decomposition(n: int) -> list[Verdict]:
    return list(decomposition_report(n).verdicts)


def _cocycle(n: int) -> list[Verdict]:
    report = verify_cocycle(n)
    out = [Verdict(f"k={k}: {name}", ok) for name, k, ok in report.checks]
    perms = [fixed_point_permutation(n, k) for k in range(n)]
    hom = all(
        all(perms[a][perms[b][v]] == perms[(a + b) % n][v] for v in perms[0])
        for a in range(n)
        for b in range(n)
    )
    out.append(Verdict("k -> fixed-point permutation is a homomorphism", hom))
    order = all(any(perms[k][v] != v for v in perms[0]) for k in range(1, n))
    out.append(Verdict(f"eta has order exactly {n} on fixed points", order))
    for variety in (Variety.X, Variety.Y):
        g = build_graph(n, variety)
        kinds = {frozenset((e.source, e.target)): e.kind for e in g.edges}
        ok = all(
            kinds.get(frozenset((perms[k][Vertex(*e.source)], perms[k][Vertex(*e.target)]))) == e.kind
            for k in range(n)
            for e in g.edges
        )
        out.append(Verdict(f"fixed-point permutations preserve the {variety.value} graph and edge kinds", ok))
    return out


def _dual_route(n: int) -> list[Verdict]:
    out = []
    for a in range(2 * n - 2):
        b = 2 * n - 3 - a
        ring, prod_, loc = intersection_number(n, a, b), product_oracle(n, a, b), localization_number(n, a, b)
        out.append(Verdict(f"deg(h^{a} H^{b}) agrees across ring, P x P and localization", ring == prod_ == loc, f"{ring}, {prod_}, {loc}"))
    return out


GROUPS = {
    "gkm": _gkm,
    "monodromy": _monodromy,
    "self-pairing": _self_pairing,
    "middle-gram": _middle,
    "ranks": _ranks,
    "decomposition": _decomposition,
    "cocycle": _cocycle,
    "dual-route": _dual_route,
}


def run_group(name: str, n: int) -> list[Verdict]:
    return GROUPS[name](n)


def _job(args):
    name, n = args
    return name, run_group(name, n)


@dataclass
class SuiteResult:
    n: int
    groups: dict[str, list[Verdict]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(v.passed for vs in self.groups.values() for v in vs)

    def failures(self) -> list[tuple[str, Verdict]]:
        return [(g, v) for g, vs in self.groups.items() for v in vs if not v.passed]

    def to_dict(self) -> dict:
        return {
            "schema_version": 1,
            "n": self.n,
            "passed": self.passed,
            "groups": {
                g: [{"name": v.name, "passed": v.passed, "detail": v.detail} for v in vs] for g, vs in self.groups.items()
            },
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    def __str__(self):
        lines = [f"verification suite, n={self.n}"]
        for g, vs in self.groups.items():
            lines.append(f"{g}:")
            lines.extend(f"  {v}" for v in vs)
        total = sum(len(vs) for vs in self.groups.values())
        bad = self.failures()
        lines.append(f"{total - len(bad)}/{total} checks passed")
        return "\n".join(lines)


def run_suite(n: int, groups=None, jobs: int = 1) -> SuiteResult:
    """Run the named groups (all by default); results keep the group order regardless of ``jobs``."""
    names = list(GROUPS) if groups is None else list(groups)
    unknown = [g for g in names if g not in GROUPS]
    if unknown:
        raise ValueError(f"unknown groups {unknown}")
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            done = dict(pool.map(_job, [(g, n) for g in names]))
    else:
        done = {g: run_group(g, n) for g in names}
    return SuiteResult(n, {g: done[g] for g in names})
