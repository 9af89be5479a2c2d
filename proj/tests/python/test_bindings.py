# Copyright 2026 The prescheck Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import itertools

import networkx as nx
import pytest

prescheck = pytest.importorskip("prescheck")


def nx_graph(doc):
    g = nx.Graph()
    g.add_nodes_from(range(doc["order"]))
    g.add_edges_from(map(tuple, doc["edges"]))
    return g


def clique(n):
    return {"order": n, "edges": [[u, v] for u, v in itertools.combinations(range(n), 2)]}


@pytest.mark.parametrize("n", [7, 8, 9])
def test_h_models_phi_and_is_minimal(n):
    h = prescheck.build_h(n)
    assert h["order"] == 2 * n + 2
    r = prescheck.check_phi(h)
    assert r["holds"] and r["copies"] == 1
    assert len(r["witness"]["tuple"]) == 14
    assert prescheck.check_minimal(h)["minimal"]


def test_clique_is_not_a_model():
    assert not prescheck.check_phi(clique(5))["holds"]
    with pytest.raises(prescheck.NotAModelError):
        prescheck.check_minimal(clique(5))


def test_embedding_counts():
    h = prescheck.build_h(7)
    assert prescheck.count_embeddings(prescheck.build_gadget(), h) == 1
    assert prescheck.count_embeddings(prescheck.build_gadget_prefix(), h) == 2
    assert prescheck.count_embeddings(clique(3), clique(4)) == 24
    assert len(prescheck.find_embeddings(clique(3), clique(4), limit=5)) == 5


def test_flip_of_clique_is_edgeless():
    g = prescheck.apply_flip(clique(3), [0, 0, 0], 1, [(0, 0)])
    assert g == {"order": 3, "edges": []}
    s = prescheck.flip_sum(clique(3), [0, 0, 1], 2, [(0, 1)])
    assert s["order"] == 6


def test_translation_agrees_with_networkx_triangle_count():
    g = {"order": 5, "edges": [[0, 1], [1, 2], [2, 0], [3, 4]]}
    has_triangle = any(len(c) >= 3 for c in nx.find_cliques(nx_graph(g)))
    assert prescheck.evaluate(g, "exists x, y, z. E(x,y) and E(y,z) and E(x,z)") == has_triangle
    assert prescheck.evaluate(g, "E(x,y)", {"x": 3, "y": 4})
    t = prescheck.translate_flip("exists x. E(x,y)", 2, [(0, 1)])
    assert "P_1" in t and "P_2" in t


def test_constants_monotone_in_p():
    a = prescheck.theorem_constants(1, 1, 1, 1, 2)
    b = prescheck.theorem_constants(1, 1, 1, 1, 3)
    assert all(b[k] >= a[k] for k in a)


def test_clique_expression_is_h():
    for n in (7, 10):
        e = prescheck.hn_clique_expression(n)
        assert e["colors"] <= 4
        assert nx.is_isomorphic(nx_graph(prescheck.eval_clique_expression(e)), nx_graph(prescheck.build_h(n)))


def test_cover_and_fuzz():
    c = prescheck.bottleneck_cover(prescheck.build_h(8), d=1, n=2)
    assert c["problems"] == []
    report = prescheck.preservation_fuzz(20, seed=3)
    assert report["violations"] == [] and report["trials"] == 20


def test_flipflat_probe_independent_in_flipped_graph():
    g = prescheck.build_half_graph(5)
    w = prescheck.flipflat_probe(g, r=1, k=2, seed=0)
    flipped = nx_graph(prescheck.apply_flip(g, w["partition"], w["k"], w["flip"]))
    s = w["set"]
    for u, v in itertools.combinations(s, 2):
        assert not flipped.has_edge(u, v)


def test_run_cli():
    code, out, err = prescheck.run_cli(["constants", "--rho", "1", "--s", "1", "--gamma", "1", "--ell", "1", "--p", "1"])
    assert code == 0 and out.startswith("q=")
    code, _, err = prescheck.run_cli(["construct"])
    assert code == 2 and err
