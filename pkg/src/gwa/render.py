"""Deterministic rendering of modules and graphs.

All three formats (text, DOT, SVG) place basis vectors on rays from the
origin, one ray per orbit weight at angle 2*pi*wt/p, with vertices of
equal weight stacked outward by increasing radius. Output is built from
sorted data only, so rendering the same object twice yields identical
bytes.
"""

from __future__ import annotations

import math

from .graphmod import GraphModule
from .modules import CycleModule, Decomposition, PathModule
from .scalars import scalar_to_text


def _module_figure(m, prefix=""):
    """(vertices, edges) where vertices is a list of (id, weight) and
    edges a list of (src, dst, label)."""
    cfg = m.cfg
    p = cfg.p
    if isinstance(m, PathModule):
        ks = list(range(m.i + 1, m.i + len(m.w) + 2))
        vertices = [(f"{prefix}v{k}", k % p) for k in ks]
        edges = [(f"{prefix}v{k}", f"{prefix}v{k + 1}", m.w.letter(k))
                 for k in ks[:-1]]
        return vertices, edges
    if isinstance(m, CycleModule):
        rp = len(m.w)
        vertices = []
        edges = []
        offset = 0
        for xi, size in m.F.blocks:
            for s in range(size):
                layer = offset + s
                for k in range(1, rp + 1):
                    vertices.append((f"{prefix}b{layer}.v{k}", k % p))
                for k in range(1, rp):
                    edges.append((f"{prefix}b{layer}.v{k}",
                                  f"{prefix}b{layer}.v{k + 1}",
                                  m.w.letter(k)))
                edges.append((f"{prefix}b{layer}.v{rp}",
                              f"{prefix}b{layer}.v1", m.w.letter(rp)))
                if s > 0:
                    # nilpotent coupling between adjacent layers of a block
                    edges.append((f"{prefix}b{layer}.v{rp}",
                                  f"{prefix}b{layer - 1}.v1",
                                  m.w.letter(rp)))
            offset += size
        return vertices, edges
    raise TypeError(f"cannot render {type(m).__name__}")


def _figure(value):
    """Normalize any renderable value to (p, vertices, edges)."""
    if hasattr(value, "decomposition"):
        value = value.decomposition
    if isinstance(value, GraphModule):
        vertices = sorted((str(v), value.wt[v]) for v in value.vertices)
        edges = sorted((str(u), str(v), lab)
                       for (u, v), (lab, _, _) in value.edges.items())
        return value.cfg.p, vertices, list(edges)
    if isinstance(value, Decomposition):
        vertices = []
        edges = []
        p = None
        counter = 0
        for sub, mult in value:
            for _ in range(mult):
                vs, es = _module_figure(sub, prefix=f"c{counter}.")
                counter += 1
                vertices.extend(vs)
                edges.extend(es)
                p = sub.cfg.p
        if p is None:
            raise ValueError("empty decomposition has nothing to render")
        return p, vertices, edges
    vs, es = _module_figure(value)
    return value.cfg.p, vs, es


def _positions(p, vertices):
    """Vertex id -> (x, y); vertices of equal weight stack outward."""
    by_weight = {}
    pos = {}
    for vid, w in vertices:
        idx = by_weight.get(w, 0)
        by_weight[w] = idx + 1
        angle = 2 * math.pi * w / p
        radius = 1.0 + 0.6 * idx
        pos[vid] = (round(radius * math.cos(angle), 4),
                    round(radius * math.sin(angle), 4))
    return pos


def render_text(value):
    """Human-readable structural description."""
    if hasattr(value, "decomposition"):
        value = value.decomposition
    if isinstance(value, Decomposition):
        parts = []
        for sub, mult in value:
            part = repr(sub)
            if mult > 1:
                part = f"{mult} * {part}"
            parts.append(part)
        return " (+) ".join(parts) if parts else "0"
    if isinstance(value, GraphModule):
        lines = [f"graph over t={value.t!r} with "
                 f"{len(value.vertices)} vertices"]
        for kind, chain in value.components():
            lines.append(f"  {kind}: " + " -> ".join(str(v) for v in chain))
        return "\n".join(lines)
    if hasattr(value, "terms"):
        terms = value.sorted_terms()
        if not terms:
            return "0"
        return " + ".join(
            (f"{c} * {m!r}" if c != 1 else repr(m)) for m, c in terms)
    return repr(value)


def render_dot(value):
    """Graphviz DOT with explicit circular layout; byte-stable."""
    p, vertices, edges = _figure(value)
    pos = _positions(p, vertices)
    lines = ["digraph module {",
             '  layout="neato";',
             "  node [shape=circle, fontsize=10];"]
    for vid, w in sorted(vertices):
        x, y = pos[vid]
        lines.append(f'  "{vid}" [label="{w}", pos="{x},{y}!"];')
    for u, v, lab in sorted(edges):
        lines.append(f'  "{u}" -> "{v}" [label="{lab}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_svg(value):
    """Minimal standalone SVG using the same circular layout."""
    p, vertices, edges = _figure(value)
    pos = _positions(p, vertices)
    scale = 80.0
    max_r = max((abs(x) for xy in pos.values() for x in xy), default=1.0)
    size = int(2 * scale * max_r + 80)
    cx = cy = size / 2

    def pt(vid):
        x, y = pos[vid]
        return (round(cx + scale * x, 2), round(cy - scale * y, 2))

    lines = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" '
             f'height="{size}" viewBox="0 0 {size} {size}">']
    for u, v, lab in sorted(edges):
        x1, y1 = pt(u)
        x2, y2 = pt(v)
        mx, my = round((x1 + x2) / 2, 2), round((y1 + y2) / 2, 2)
        lines.append(f'  <line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
                     'stroke="black"/>')
        lines.append(f'  <text x="{mx}" y="{my}" font-size="10" '
                     f'fill="blue">{lab}</text>')
    for vid, w in sorted(vertices):
        x, y = pt(vid)
        lines.append(f'  <circle cx="{x}" cy="{y}" r="12" fill="white" '
                     'stroke="black"/>')
        lines.append(f'  <text x="{x}" y="{y + 4}" font-size="10" '
                     f'text-anchor="middle">{w}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render(value, fmt="text"):
    if fmt == "text":
        return render_text(value)
    if fmt == "dot":
        return render_dot(value)
    if fmt == "svg":
        return render_svg(value)
    raise ValueError(f"unknown render format {fmt!r}")
