"""Command-line front end.

Exit codes: 0 when everything passes, 1 when a verification fails,
2 for usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .cocycle import fixed_point_permutation, verify_cocycle
from .cycles_monodromy import MonodromyElement, act, gamma, lift_H, lift_h
from .equivariant import EquivariantClass, chow_ranks, middle_basis_check, middle_family, gram_matrix
from .gkm_graph import build_graph
from .motives import decomposition_report, diagram, h_family_gram
from .suite import GROUPS, run_suite

DEFAULT_MAX_N = 8
COMMANDS = ("verify", "ranks", "gram", "graph", "diagram", "cycle", "monodromy", "cocycle")
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    n: int = 3
    variety: str = "Y"
    format: str = "text"
    jobs: int = 1
    max_degree: int | None = None
    gamma: int = 1
    k: int = 1
    apply: str = "gamma:1"
    family: str = "middle"
    groups: tuple[str, ...] | None = None
    max_n: int = DEFAULT_MAX_N

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if not 3 <= self.n <= self.max_n:
            raise UsageError(f"--n must lie in 3..{self.max_n}")
        if self.variety not in ("X", "Y"):
            raise UsageError("--variety must be X or Y")
        if self.format not in ("text", "json", "dot"):
            raise UsageError("--format must be text, json or dot")
        if self.format == "dot" and self.command != "graph":
            raise UsageError("--format dot is only available for the graph command")
        if self.jobs < 1:
            raise UsageError("--jobs must be positive")
        if self.max_degree is not None and self.max_degree < 0:
            raise UsageError("--max-degree must be non-negative")
        if self.command == "cycle" and not 1 <= self.gamma <= self.n:
            raise UsageError(f"--gamma must lie in 1..{self.n}")
        if self.groups:
            unknown = [g for g in self.groups if g not in GROUPS]
            if unknown:
                raise UsageError(f"unknown groups {unknown}; choose from {list(GROUPS)}")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _resolve_class(spec: str, n: int) -> EquivariantClass:
    name, _, arg = spec.partition(":")
    if name == "gamma":
        try:
            ell = int(arg)
        except ValueError:
            raise UsageError(f"--apply gamma needs an index, e.g. gamma:1 (got {spec!r})") from None
        if not 1 <= ell <= n:
            raise UsageError(f"gamma index must lie in 1..{n}")
        return gamma(n, ell)
    if name == "h" and not arg:
        return lift_h(n)
    if name == "H" and not arg:
        return lift_H(n)
    raise UsageError(f"--apply expects gamma:<l>, h or H (got {spec!r})")


def _render_class(c: EquivariantClass, fmt: str, title: str) -> str:
    if fmt == "json":
        return _dump(c.to_dict())
    lines = [title, f"degree {c.degree}, support {len(c.support())} of {len(c.graph.vertices)} fixed points"]
    lines += [f"  [{v}]  {p}" for v, p in c.items() if p]
    return "\n".join(lines)


def _matrix_text(labels, G) -> str:
    width = max(len(str(x)) for x in G.flat) if G.size else 1
    pad = max(len(s) for s in labels)
    return "\n".join(f"{lab:>{pad}}  " + " ".join(f"{int(x):>{width}}" for x in row) for lab, row in zip(labels, G))


def run(config: RunConfig) -> tuple[int, str]:
    """Execute one command; returns (exit status, rendered output)."""
    try:
        config.validate()
    except UsageError as exc:
        return EXIT_USAGE, f"usage error: {exc}"
    n, fmt = config.n, config.format
    cmd = config.command

    if cmd == "verify":
        result = run_suite(n, config.groups, jobs=config.jobs)
        out = result.to_json(indent=2) if fmt == "json" else str(result)
        if not result.passed:
            names = "; ".join(v.name for _, v in result.failures())
            out += f"\nfailed: {names}" if fmt == "text" else ""
        return (EXIT_OK if result.passed else EXIT_FAIL), out

    if cmd == "ranks":
        g = build_graph(n, config.variety)
        up_to = g.dim if config.max_degree is None else min(config.max_degree, g.dim)
        table = chow_ranks(g, up_to=up_to, jobs=config.jobs)
        return EXIT_OK, table.to_json(indent=2) if fmt == "json" else str(table)

    if cmd == "gram":
        if config.family == "middle":
            mb = middle_basis_check(n)
            if fmt == "json":
                return EXIT_OK, _dump(
                    {
                        "schema_version": 1,
                        "n": n,
                        "family": "middle",
                        "labels": mb.labels,
                        "gram": mb.gram.tolist(),
                        "determinant": mb.determinant,
                        "middle_rank": mb.middle_rank,
                        "passed": mb.passed,
                    }
                )
            text = _matrix_text(mb.labels, mb.gram) + f"\ndeterminant {mb.determinant}, middle rank {mb.middle_rank}"
            return (EXIT_OK if mb.passed else EXIT_FAIL), text
        if config.family == "h":
            G = h_family_gram(n)
            labels = [f"h^{i + 1}H^{n - 3 - i}" for i in range(n - 2)]
        elif config.family == "gamma":
            labels, classes = middle_family(n)
            labels, G = labels[:n], gram_matrix(classes[:n])
        else:
            return EXIT_USAGE, "usage error: --family must be middle, h or gamma"
        if fmt == "json":
            return EXIT_OK, _dump({"schema_version": 1, "n": n, "family": config.family, "labels": labels, "gram": G.tolist()})
        return EXIT_OK, _matrix_text(labels, G)

    if cmd == "graph":
        g = build_graph(n, config.variety)
        if fmt == "dot":
            return EXIT_OK, g.to_dot()
        if fmt == "json":
            return EXIT_OK, g.to_json(indent=2)
        lines = [f"{g.variety.value} graph, n={n}: {len(g.vertices)} fixed points, {len(g.edges)} edges, dim {g.dim}"]
        lines += [f"  [{e.source}] -- [{e.target}]  {e.kind.value}  weight {e.weight}" for e in g.edges]
        return EXIT_OK, "\n".join(lines)

    if cmd == "diagram":
        if fmt == "json":
            return EXIT_OK, _dump(decomposition_report(n).to_dict())
        return EXIT_OK, diagram(n)

    if cmd == "cycle":
        return EXIT_OK, _render_class(gamma(n, config.gamma), fmt, f"gamma_{config.gamma}, n={n}")

    if cmd == "monodromy":
        try:
            c = _resolve_class(config.apply, n)
        except UsageError as exc:
            return EXIT_USAGE, f"usage error: {exc}"
        m = MonodromyElement.power(n, config.k)
        image = act(m, c)
        return EXIT_OK, _render_class(image, fmt, f"eta^{m.exponent} applied to {config.apply}, n={n}")

    # cocycle
    report = verify_cocycle(n)
    if fmt == "json":
        data = report.to_dict()
        data["fixed_point_permutation"] = {str(v): str(w) for v, w in fixed_point_permutation(n, config.k % n).items()}
        return (EXIT_OK if report.passed else EXIT_FAIL), _dump(data)
    perm = fixed_point_permutation(n, config.k % n)
    text = str(report) + f"\nfixed points under eta^{config.k % n}: " + ", ".join(f"[{v}]->[{w}]" for v, w in perm.items())
    return (EXIT_OK if report.passed else EXIT_FAIL), text


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="milnor-motive", description="Exact checks on the hyperplane section of a twisted flag variety.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    common = _Parser(add_help=False)
    common.add_argument("--n", type=int, default=3, help="degree of the cyclic algebra (3..8)")
    common.add_argument("--format", default="text", choices=("text", "json", "dot"))
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    helps = {
        "verify": "run every verification and exit non-zero on failure",
        "ranks": "graded Chow ranks from the fixed-point graph",
        "gram": "Gram matrices of middle-degree classes",
        "graph": "the fixed-point graph (text, json or dot)",
        "diagram": "ASCII picture of the motivic decomposition",
        "cycle": "print one of the middle-degree cycles gamma_l",
        "monodromy": "apply eta^k to a class",
        "cocycle": "check the splitting-matrix identities",
    }
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common], help=helps[name])
        if name in ("ranks", "graph"):
            p.add_argument("--variety", default="Y", choices=("X", "Y"))
        if name == "ranks":
            p.add_argument("--max-degree", type=int, default=None)
        if name == "gram":
            p.add_argument("--family", default="middle", choices=("middle", "h", "gamma"))
        if name == "cycle":
            p.add_argument("--gamma", type=int, default=1)
        if name in ("monodromy", "cocycle"):
            p.add_argument("--k", type=int, default=1)
        if name == "monodromy":
            p.add_argument("--apply", default="gamma:1", help="gamma:<l>, h or H")
        if name == "verify":
            p.add_argument("--group", action="append", dest="groups", choices=list(GROUPS), help="restrict to a group")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    fields = {k: v for k, v in vars(args).items() if v is not None}
    if "groups" in fields:
        fields["groups"] = tuple(fields["groups"])
    status, out = run(RunConfig(**fields))
    stream = sys.stderr if status == EXIT_USAGE else sys.stdout
    print(out, file=stream)
    return status


if __name__ == "__main__":
    sys.exit(main())
