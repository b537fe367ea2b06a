import json
from itertools import permutations

import pytest

from milnor_motive.cocycle import fixed_point_permutation
from milnor_motive.gkm_graph import EdgeKind, Variety, Vertex, build_graph, euler_class
from milnor_motive.polyring import product, root


@pytest.mark.parametrize(
    "n, variety, edges, valency",
    [(3, "X", 9, 3), (3, "Y", 6, 2), (4, "X", 30, 5), (4, "Y", 24, 4), (5, "X", 70, 7), (5, "Y", 60, 6)],
)
def test_sizes(n, variety, edges, valency):
    g = build_graph(n, variety)
    assert len(g.vertices) == n * (n - 1)
    assert len(g.edges) == edges
    assert {g.valency(v) for v in g.vertices} == {valency}
    assert valency == g.dim


@pytest.mark.parametrize("n", [3, 4, 5])
def test_edge_weights_are_antisymmetric_and_match_the_curve_family(n):
    for e in build_graph(n, "X").edges:
        (i, j), (k, l) = e.source, e.target
        assert e.weight_at(e.target) == -e.weight_at(e.source)
        if e.kind is EdgeKind.ROOT_CONIC:
            assert (k, l) == (j, i) and e.weight == root(n, i, j)
        elif e.kind is EdgeKind.PLANE_II:
            assert i == k and e.weight == root(n, l, j)
        else:
            assert j == l and e.weight == root(n, i, k)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_euler_class_on_y_is_the_product_formula(n):
    g = build_graph(n, Variety.Y)
    for i, j in permutations(range(1, n + 1), 2):
        others = [s for s in range(1, n + 1) if s not in (i, j)]
        want = product([root(n, i, s) for s in others] + [root(n, s, j) for s in others], n)
        assert euler_class(g, (i, j)) == want


@pytest.mark.parametrize("n", [3, 4, 5])
def test_euler_class_on_x_adds_the_root_conic(n):
    gx, gy = build_graph(n, "X"), build_graph(n, "Y")
    for v in gx.vertices:
        assert gx.euler_class(v) == gy.euler_class(v) * root(n, v.i, v.j).to_polynomial()


@pytest.mark.parametrize("n", [3, 4, 5])
@pytest.mark.parametrize("variety", ["X", "Y"])
def test_monodromy_permutes_edges_preserving_kind(n, variety):
    g = build_graph(n, variety)
    kinds = {frozenset((e.source, e.target)): e.kind for e in g.edges}
    for k in range(n):
        perm = fixed_point_permutation(n, k)
        for e in g.edges:
            assert kinds[frozenset((perm[e.source], perm[e.target]))] == e.kind


def test_dot_export_for_n3_y():
    dot = build_graph(3, "Y").to_dot()
    assert dot.startswith('graph "Y_3" {')
    assert dot.count(" -- ") == 6
    assert sum(1 for line in dot.splitlines() if line.strip().endswith('";') and "--" not in line) == 6


def test_json_export():
    data = json.loads(build_graph(4, "X").to_json())
    assert data["schema_version"] == 1
    assert len(data["vertices"]) == 12 and len(data["edges"]) == 30
    assert {e["kind"] for e in data["edges"]} == {"RootConic", "PlaneII", "PlaneIII"}


def test_invalid():
    with pytest.raises(ValueError):
        build_graph(2, "X")
    with pytest.raises(ValueError):
        build_graph(3, "Z")
    with pytest.raises(ValueError):
        build_graph(3, "Y").euler_class(Vertex(1, 1))
