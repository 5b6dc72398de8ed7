"""Present modules as labeled graphs, tensor them at the graph level,
and emit a deterministic DOT drawing.

Run with:  python3 demos/03_graphs_and_rendering.py > product.dot
           neato -Tsvg product.dot -o product.svg   (optional)
"""

import sys

from gwa.exprparse import parse_module
from gwa.graphmod import graph_tensor, graph_to_module, module_to_graph
from gwa.modules import split
from gwa.orbit import OrbitConfig
from gwa.render import render_dot, render_text
from gwa.tensorops import tensor

cfg = OrbitConfig(3)

m1 = parse_module('V[t=0:1,2:1; i=2; w="x1x"]', cfg)
m2 = parse_module('V[t=1:1,2:1; i=2; w="1yx1"]', cfg)

g1 = module_to_graph(split(m1))
g2 = module_to_graph(split(m2))
gt = graph_tensor(g1, g2)

print("components of the product graph:", file=sys.stderr)
for kind, verts in gt.components():
    print(f"  {kind} with {len(verts)} vertices", file=sys.stderr)

# The graph-level product realizes the same module as the tensor product.
assert graph_to_module(gt).isomorphic(
    split(tensor(m1, m2).decomposition))
print("matches the module-level tensor product:", file=sys.stderr)
print(" ", render_text(tensor(m1, m2).decomposition), file=sys.stderr)

# DOT output is byte-stable across runs, suitable for golden files.
print(render_dot(gt))
