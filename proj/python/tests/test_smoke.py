# Copyright 2026 The rigikit Authors.
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


import pytest

import rigikit


def test_prism_graph():
    g = rigikit.named_graph("ThreePrism")
    assert g.num_vertices() == 6 and g.num_edges() == 9
    assert rigikit.is_min_rigid(g, 2)["value"]
    assert rigikit.is_kl_tight(g, 2, 3)
    v = rigikit.is_rigid(g, 2, algorithm="randomized", seed=5)
    assert v["value"] and v["method"] == "Randomized" and v["seed"] == 5
    assert not rigikit.is_globally_rigid(g, 2)["value"]
    assert rigikit.rigid_components(g, 2) == [set(range(6))]


def test_graph_construction():
    c4 = rigikit.Graph([(0, 1), (1, 2), (2, 3), (3, 0)])
    assert c4.edges == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert not rigikit.is_rigid(c4, 2)["value"]
    assert rigikit.is_rigid(c4, 1)["value"]
    assert len(rigikit.nac_colorings(c4)) == 3
    assert rigikit.cone(c4).num_edges() == 8
    assert rigikit.Graph([(0, 1)], vertices=[0, 1, 2]).num_vertices() == 3
    k4 = rigikit.named_graph("Complete", [4])
    assert rigikit.nac_colorings(k4) == []
    assert rigikit.rd_closure(k4, [e for e in k4.edges if e != (0, 1)], 2) == k4.edges


def test_errors_carry_codes():
    with pytest.raises(rigikit.RigikitError) as info:
        rigikit.Graph([(1, 1)])
    assert info.value.args[0] == "LoopEdge"
    with pytest.raises(rigikit.RigikitError) as info:
        rigikit.named_graph("Nope")
    assert info.value.args[0] == "UnknownName"


def test_parallel_prism_framework():
    entry = rigikit.db("ThreePrism", variant="parallel")
    out = rigikit.analyze_framework(
        {"framework": entry["framework"],
         "properties": ["inf-rigid", "prestress-stable", "second-order-rigid"]})
    assert out["results"] == {"inf-rigid": False, "prestress-stable": True,
                              "second-order-rigid": True}
    spaces = rigikit.flexes({"framework": entry["framework"]})
    assert len(spaces["flexes"]) == 1 and len(spaces["stresses"]) == 1
    assert spaces["trivial_dim"] == 3


def test_paper_cycle_in_approx_mode():
    framework = {
        "graph": {"vertices": [0, 1, 2, 3], "edges": [[0, 1], [0, 3], [1, 2], [2, 3]]},
        "realization": {"0": ["0", "0"], "1": ["sqrt(2)", "0"], "2": ["1", "1"], "3": ["0", "3/4"]},
        "mode": "approx",
    }
    out = rigikit.analyze_framework({"framework": framework, "properties": ["inf-rigid"]})
    assert out["results"]["inf-rigid"] is False
    with pytest.raises(rigikit.RigikitError) as info:
        rigikit.analyze_framework({"framework": dict(framework, mode="exact"),
                                   "properties": ["inf-rigid"]})
    assert info.value.args[0] == "ExactUnsupported"


def test_motion():
    entry = rigikit.db("CompleteBipartite", [2, 4])
    out = rigikit.approximate_motion({"framework": entry["framework"], "steps": 4,
                                      "step_size": 0.1, "fixed_pair": [0, 1]})
    samples = out["samples"]
    assert len(samples) == 5
    assert samples[-1]["0"] == [0.0, 0.0]
