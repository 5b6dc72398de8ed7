"""Graph-presented modules: validation, round trips, tensor closure."""

import random

import pytest

from gwa.errors import GraphConditionError, NonSplitSpectrum
from gwa.graphmod import (
    GraphModule,
    graph_tensor,
    graph_to_module,
    module_to_graph,
)
from gwa.modules import PathModule, split
from gwa.orbit import OrbitConfig, TParam, Word
from gwa.selftest import _graph_friendly_module
from gwa.tensorops import tensor


CFG = OrbitConfig(3)
T = TParam.parse("0:1,2:1", 3)


def path_graph(cfg, t, names, start_wt, labels, check=True):
    """Chain of vertices with consecutive weights and given labels."""
    wt = {v: (start_wt + k) % cfg.p for k, v in enumerate(names)}
    edges = {}
    for k, label in enumerate(labels):
        u, v = names[k], names[k + 1]
        ap = cfg.one()
        am = t.evaluate(cfg, wt[u]) if label == "1" else cfg.one()
        edges[(u, v)] = (label, ap, am)
    return GraphModule(cfg, t, names, wt, edges, check=check)


class TestValidation:
    def test_valid_graph_accepted(self):
        path_graph(CFG, T, ["a", "b", "c"], 1, ["1", "x"])

    def test_degree_bound(self):
        g = path_graph(CFG, T, ["a", "b", "c"], 1, ["1", "x"], check=False)
        g.edges[("a", "c")] = ("x", CFG.one(), CFG.one())
        with pytest.raises(GraphConditionError):
            g.validate()

    def test_weight_must_advance(self):
        g = path_graph(CFG, T, ["a", "b", "c"], 1, ["1", "x"], check=False)
        g.wt["b"] = 0
        with pytest.raises(GraphConditionError):
            g.validate()

    def test_source_after_break(self):
        # source weight 2 means the previous weight 1 must be a break
        with pytest.raises(GraphConditionError):
            path_graph(CFG, T, ["a", "b"], 2, ["x"])

    def test_sink_on_break(self):
        # sink at weight 1, which is not a break of t
        with pytest.raises(GraphConditionError):
            path_graph(CFG, T, ["a", "b"], 0, ["x"])

    def test_label_matches_break_set(self):
        with pytest.raises(GraphConditionError):
            path_graph(CFG, T, ["a", "b", "c"], 1, ["x", "x"])

    def test_nonzero_scaling(self):
        g = path_graph(CFG, T, ["a", "b", "c"], 1, ["1", "x"], check=False)
        lbl, ap, am = g.edges[("b", "c")]
        g.edges[("b", "c")] = (lbl, CFG.scalar(0), am)
        with pytest.raises(GraphConditionError):
            g.validate()

    def test_unbroken_edge_scalars_multiply_to_parameter(self):
        g = path_graph(CFG, T, ["a", "b", "c"], 1, ["1", "x"], check=False)
        g.edges[("a", "b")] = ("1", CFG.one(), CFG.one())
        with pytest.raises(GraphConditionError):
            g.validate()


class TestRoundTrips:
    def _pairs(self, count, seed):
        rng = random.Random(seed)
        done = 0
        while done < count:
            p = rng.choice([2, 3, 4])
            cfg = OrbitConfig(p, p if rng.random() < 0.7 else 2 * p)
            try:
                m1 = _graph_friendly_module(rng, cfg)
                m2 = _graph_friendly_module(rng, cfg)
                yield split(m1), split(m2)
            except NonSplitSpectrum:
                continue
            done += 1

    def test_module_graph_round_trip(self):
        for d1, _ in self._pairs(25, seed=11):
            g = module_to_graph(d1)
            assert graph_to_module(g).isomorphic(d1)

    def test_json_round_trip(self):
        for d1, _ in self._pairs(5, seed=13):
            g = module_to_graph(d1)
            back = GraphModule.from_json(g.cfg, g.to_json())
            assert graph_to_module(back).isomorphic(d1)

    def test_tensor_of_graphs_is_tensor_of_modules(self):
        count = 0
        for d1, d2 in self._pairs(25, seed=17):
            try:
                rhs = split(tensor(d1, d2).decomposition)
            except NonSplitSpectrum:
                continue
            gt = graph_tensor(module_to_graph(d1), module_to_graph(d2))
            assert graph_to_module(gt).isomorphic(rhs)
            count += 1
        assert count >= 15


class TestComponents:
    def test_path_components_listed(self):
        t = TParam.parse("0:1,1:1,2:1", 3)
        m = PathModule(CFG, t, 2, Word(3, 3, "x0x"))
        g = module_to_graph(split(m))
        comps = g.components()
        assert sorted(kind for kind, _ in comps) == ["path", "path"]
        assert sum(len(vs) for _, vs in comps) == len(g.vertices)
