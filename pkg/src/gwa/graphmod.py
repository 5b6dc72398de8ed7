"""Weight modules built from labeled graphs.

A finite directed graph whose components are paths or cycles, with a
weight function into the orbit, edge labels in {1, x, y}, and nonzero
scaling factors on both directions of each edge, carries a weight
module: vertices are basis vectors, X follows edges not labeled y, and
Y follows edges backward when not labeled x. The class of such modules
is closed under direct sums and tensor products, and the tensor product
of two graph modules is a graph module over the product parameter.
"""

from __future__ import annotations

from .errors import GraphConditionError
from .modules import CycleModule, Decomposition, PathModule, split_cycle
from .orbit import Word, letter_mul, require_same_config
from .scalars import JordanType, scalar_from_text, scalar_to_text


class GraphModule:
    """A validated labeled graph over an orbit configuration.

    vertices: iterable of hashable ids; wt maps each id to an orbit
    index; edges maps (u, v) pairs to (label, alpha_plus, alpha_minus).
    """

    __slots__ = ("cfg", "t", "vertices", "wt", "edges")

    def __init__(self, cfg, t, vertices, wt, edges, check=True):
        self.cfg = cfg
        self.t = t
        self.vertices = tuple(vertices)
        self.wt = dict(wt)
        self.edges = dict(edges)
        if check:
            self.validate()

    def validate(self):
        cfg = self.cfg
        p = cfg.p
        breaks = self.t.breaks()
        seen = set()
        for v in self.vertices:
            if v in seen:
                raise GraphConditionError("shape", f"duplicate vertex {v!r}")
            seen.add(v)
            if v not in self.wt or not (0 <= self.wt[v] < p):
                raise GraphConditionError(
                    "shape", f"vertex {v!r} lacks a valid orbit weight")
        out_deg = {v: 0 for v in self.vertices}
        in_deg = {v: 0 for v in self.vertices}
        for (u, v), (label, ap, am) in self.edges.items():
            if u not in seen or v not in seen:
                raise GraphConditionError(
                    "shape", f"edge ({u!r}, {v!r}) uses unknown vertices")
            out_deg[u] += 1
            in_deg[v] += 1
            if out_deg[u] > 1 or in_deg[v] > 1:
                raise GraphConditionError(
                    "shape", "components must be paths or cycles "
                    "(vertex degree exceeds one)")
            if label not in ("1", "x", "y"):
                raise GraphConditionError(
                    "shape", f"edge label {label!r} not in {{1, x, y}}")
            if self.wt[v] != (self.wt[u] + 1) % p:
                raise GraphConditionError(
                    "a", f"edge ({u!r}, {v!r}) does not advance the weight")
            if (label == "1") != (self.wt[u] % p not in breaks):
                raise GraphConditionError(
                    "d", f"label {label!r} conflicts with the break set "
                    f"at weight {self.wt[u]}")
            if ap.is_zero() or am.is_zero():
                raise GraphConditionError(
                    "e", f"scaling factors on ({u!r}, {v!r}) must be nonzero")
            if label == "1" and ap * am != self.t.evaluate(cfg, self.wt[u]):
                raise GraphConditionError(
                    "f", f"scaling factors on ({u!r}, {v!r}) do not "
                    "multiply to the parameter value")
        for v in self.vertices:
            if in_deg[v] == 0 and (self.wt[v] - 1) % p not in breaks:
                raise GraphConditionError(
                    "b", f"source {v!r} must sit just after a break")
            if out_deg[v] == 0 and self.wt[v] % p not in breaks:
                raise GraphConditionError(
                    "c", f"sink {v!r} must sit on a break")

    # -- component structure ------------------------------------------------

    def components(self):
        """List of (kind, ordered vertices); kind is "path" or "cycle".
        Path vertices start at the source; cycle vertices start at a
        vertex of weight 1 (deterministically the least by repr)."""
        succ = {u: v for (u, v) in self.edges}
        pred = {v: u for (u, v) in self.edges}
        remaining = set(self.vertices)
        comps = []
        # paths first: start from sources
        for v in sorted(remaining, key=repr):
            if v in remaining and v not in pred:
                chain = [v]
                while chain[-1] in succ and succ[chain[-1]] in remaining:
                    chain.append(succ[chain[-1]])
                remaining.difference_update(chain)
                comps.append(("path", chain))
        # what remains are cycles
        while remaining:
            anchors = [v for v in remaining if self.wt[v] == 1 % self.cfg.p]
            start = min(anchors, key=repr)
            chain = [start]
            while True:
                nxt = succ[chain[-1]]
                if nxt == start:
                    break
                chain.append(nxt)
            remaining.difference_update(chain)
            comps.append(("cycle", chain))
        return comps

    # -- serialization ------------------------------------------------------

    def to_json(self):
        return {
            "t": repr(self.t),
            "vertices": [{"id": str(v), "wt": self.wt[v]}
                         for v in self.vertices],
            "edges": [{"from": str(u), "to": str(v), "label": lab,
                       "ap": scalar_to_text(ap), "am": scalar_to_text(am)}
                      for (u, v), (lab, ap, am) in sorted(
                          self.edges.items(),
                          key=lambda kv: (str(kv[0][0]), str(kv[0][1])))],
        }

    @staticmethod
    def from_json(cfg, data):
        from .orbit import TParam
        t = TParam.parse(data["t"] if data["t"] != "1" else "", cfg.p)
        vertices = [v["id"] for v in data["vertices"]]
        wt = {v["id"]: v["wt"] for v in data["vertices"]}
        edges = {}
        for e in data["edges"]:
            edges[(e["from"], e["to"])] = (
                e["label"],
                scalar_from_text(e["ap"], cfg.conductor),
                scalar_from_text(e["am"], cfg.conductor))
        return GraphModule(cfg, t, vertices, wt, edges)

    def __repr__(self):
        return f"GraphModule({len(self.vertices)} vertices, " \
               f"{len(self.edges)} edges, t={self.t!r})"


def graph_to_module(g):
    """The weight module carried by the graph, as a decomposition with
    one summand group per connected component."""
    cfg = g.cfg
    p = cfg.p
    succ = {u: (v, lab, ap, am) for (u, v), (lab, ap, am) in g.edges.items()}
    out = []
    for kind, chain in g.components():
        if kind == "path":
            i = (g.wt[chain[0]] - 1) % p
            letters = "".join(succ[u][1] for u in chain[:-1])
            out.append(PathModule(cfg, g.t, i, Word(p, i + 1, letters)))
            continue
        letters = []
        zeta = cfg.one()
        for u in chain:
            _, lab, ap, am = succ[u]
            letters.append(lab)
            zeta = zeta * (ap if lab == "x" else am.inverse())
        w_full = Word(p, 1, "".join(letters))
        cyc = CycleModule(cfg, g.t, w_full, JordanType([(zeta, 1)]))
        out.extend((m, mult) for m, mult in split_cycle(cyc))
    return Decomposition(out)


def module_to_graph(m, prefix=""):
    """The canonical graph carrying the module: vertices are the basis
    vectors, with the standard scaling factors."""
    if isinstance(m, Decomposition):
        vertices = []
        wt = {}
        edges = {}
        cfg = None
        t = None
        counter = 0
        for sub, mult in m:
            for _ in range(mult):
                sg = module_to_graph(sub, prefix=f"c{counter}.")
                counter += 1
                vertices.extend(sg.vertices)
                wt.update(sg.wt)
                edges.update(sg.edges)
                cfg, t = sg.cfg, sg.t
        if cfg is None:
            raise ValueError("empty decomposition has no graph")
        return GraphModule(cfg, t, vertices, wt, edges)
    cfg = m.cfg
    p = cfg.p
    if isinstance(m, PathModule):
        ks = list(range(m.i + 1, m.i + len(m.w) + 2))
        vertices = [f"{prefix}v{k}" for k in ks]
        wt = {f"{prefix}v{k}": k % p for k in ks}
        edges = {}
        for k in ks[:-1]:
            lab = m.w.letter(k)
            ap = m.t.evaluate(cfg, k) if lab == "1" else cfg.one()
            edges[(f"{prefix}v{k}", f"{prefix}v{k + 1}")] = \
                (lab, ap, cfg.one())
        return GraphModule(cfg, m.t, vertices, wt, edges)
    if len(m.F.blocks) != 1 or m.F.blocks[0][1] != 1:
        raise ValueError(
            "only semisimple eigen-data of multiplicity one carries a "
            "single-cycle graph; split the module first")
    xi = m.F.blocks[0][0]
    rp = len(m.w)
    ks = list(range(1, rp + 1))
    vertices = [f"{prefix}v{k}" for k in ks]
    wt = {f"{prefix}v{k}": k % p for k in ks}
    edges = {}
    for k in ks:
        lab = m.w.letter(k)
        u, v = f"{prefix}v{k}", f"{prefix}v{k % rp + 1}"
        if k < rp:
            ap = m.t.evaluate(cfg, k) if lab == "1" else cfg.one()
            edges[(u, v)] = (lab, ap, cfg.one())
        else:
            if lab == "1":
                edges[(u, v)] = (lab, m.t.evaluate(cfg, k) * xi,
                                 xi.inverse())
            elif lab == "x":
                edges[(u, v)] = (lab, xi, cfg.one())
            else:
                edges[(u, v)] = (lab, cfg.one(), xi.inverse())
    return GraphModule(cfg, m.t, vertices, wt, edges)


def graph_tensor(g1, g2):
    """Tensor product of two graph modules: paired vertices of equal
    weight, edges where the labels are compatible, multiplied labels
    and scaling factors."""
    require_same_config(g1.cfg, g2.cfg)
    cfg = g1.cfg
    t = g1.t * g2.t
    vertices = [(u, v) for u in g1.vertices for v in g2.vertices
                if g1.wt[u] == g2.wt[v]]
    wt = {(u, v): g1.wt[u] for (u, v) in vertices}
    edges = {}
    for (u1, v1), (lab1, ap1, am1) in g1.edges.items():
        for (u2, v2), (lab2, ap2, am2) in g2.edges.items():
            if g1.wt[u1] != g2.wt[u2]:
                continue
            if {lab1, lab2} == {"x", "y"}:
                continue
            edges[((u1, u2), (v1, v2))] = (letter_mul(lab1, lab2),
                                           ap1 * ap2, am1 * am2)
    return GraphModule(cfg, t, vertices, wt, edges)
