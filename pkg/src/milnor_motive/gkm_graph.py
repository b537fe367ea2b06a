"""Fixed-point graphs of the Milnor hypersurface X0 and its hyperplane section Y.

Vertices are the torus-fixed flags [ij] (i != j).  Three families of
invariant curves join them:

* ``ROOT_CONIC``  [ij] -- [ji], weight t_i - t_j at [ij]   (X only)
* ``PLANE_II``    [ij] -- [ik], weight t_k - t_j at [ij]
* ``PLANE_III``   [ij] -- [kj], weight t_i - t_k at [ij]

Y keeps only the two plane families, so its graph is the rook graph on
the off-diagonal cells of an n x n board.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from .polyring import LinearForm, Polynomial, product, root

__all__ = ["Vertex", "EdgeKind", "Edge", "Variety", "GkmGraph", "build_graph", "euler_class"]


class Vertex(NamedTuple):
    i: int
    j: int

    def __str__(self):
        return f"{self.i}{self.j}" if max(self) < 10 else f"{self.i},{self.j}"


class EdgeKind(str, enum.Enum):
    ROOT_CONIC = "RootConic"
    PLANE_II = "PlaneII"
    PLANE_III = "PlaneIII"


class Variety(str, enum.Enum):
    X = "X"
    Y = "Y"


@dataclass(frozen=True)
class Edge:
    """An invariant curve; ``weight`` is its tangent weight at ``source``."""

    source: Vertex
    target: Vertex
    kind: EdgeKind
    weight: LinearForm

    def weight_at(self, v: Vertex) -> LinearForm:
        if v == self.source:
            return self.weight
        if v == self.target:
            return -self.weight
        raise ValueError(f"{v} is not an endpoint of {self}")

    def other(self, v: Vertex) -> Vertex:
        if v == self.source:
            return self.target
        if v == self.target:
            return self.source
        raise ValueError(f"{v} is not an endpoint of {self}")


def _edge(n: int, v: Vertex, w: Vertex) -> Edge:
    """Classify the curve joining ``v`` and ``w`` and orient it from the smaller vertex."""
    if v > w:
        v, w = w, v
    i, j = v
    if w == (j, i):
        return Edge(v, w, EdgeKind.ROOT_CONIC, root(n, i, j))
    if w.i == i:
        return Edge(v, w, EdgeKind.PLANE_II, root(n, w.j, j))
    if w.j == j:
        return Edge(v, w, EdgeKind.PLANE_III, root(n, i, w.i))
    raise ValueError(f"no invariant curve joins {v} and {w}")


@dataclass(frozen=True)
class GkmGraph:
    n: int
    variety: Variety
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]

    @property
    def dim(self) -> int:
        return 2 * self.n - 3 if self.variety is Variety.X else 2 * self.n - 4

    @cached_property
    def index(self) -> dict[Vertex, int]:
        return {v: k for k, v in enumerate(self.vertices)}

    @cached_property
    def incident(self) -> dict[Vertex, tuple[Edge, ...]]:
        inc: dict[Vertex, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            inc[e.source].append(e)
            inc[e.target].append(e)
        return {v: tuple(es) for v, es in inc.items()}

    def tangent_weights(self, v: Vertex) -> list[LinearForm]:
        if v not in self.index:
            raise ValueError(f"{v} is not a vertex of this graph")
        return [e.weight_at(v) for e in self.incident[v]]

    def valency(self, v: Vertex) -> int:
        return len(self.incident[v])

    @cached_property
    def _euler(self) -> dict[Vertex, Polynomial]:
        return {v: product(self.tangent_weights(v), self.n) for v in self.vertices}

    def euler_class(self, v: Vertex) -> Polynomial:
        if v not in self.index:
            raise ValueError(f"{v} is not a vertex of this graph")
        return self._euler[v]

    # export
    def to_dict(self) -> dict:
        return {
            "schema_version": 1,
            "n": self.n,
            "variety": self.variety.value,
            "vertices": [str(v) for v in self.vertices],
            "edges": [
                {
                    "source": str(e.source),
                    "target": str(e.target),
                    "kind": e.kind.value,
                    "weight": str(e.weight),
                }
                for e in self.edges
            ],
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    def to_dot(self) -> str:
        lines = [f'graph "{self.variety.value}_{self.n}" {{']
        for v in self.vertices:
            lines.append(f'  "{v}";')
        for e in self.edges:
            lines.append(f'  "{e.source}" -- "{e.target}" [label="{e.kind.value}: {e.weight}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


_CACHE: dict[tuple[int, Variety], GkmGraph] = {}


def build_graph(n: int, variety: Variety | str) -> GkmGraph:
    """Fixed-point graph of X0 (all three curve families) or Y (plane curves only)."""
    if n < 3:
        raise ValueError("n must be at least 3")
    variety = Variety(variety)
    key = (n, variety)
    if key in _CACHE:
        return _CACHE[key]
    vertices = tuple(Vertex(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j)
    edges = []
    for a, v in enumerate(vertices):
        for w in vertices[a + 1:]:
            if v.i == w.i or v.j == w.j:
                edges.append(_edge(n, v, w))
            elif variety is Variety.X and w == (v.j, v.i):
                edges.append(_edge(n, v, w))
    g = GkmGraph(n, variety, vertices, tuple(edges))
    _CACHE[key] = g
    return g


def euler_class(g: GkmGraph, v: Vertex) -> Polynomial:
    return g.euler_class(Vertex(*v))
