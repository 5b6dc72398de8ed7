"""Decompose a tensor product of weight modules, two ways.

Run with:  python3 demos/01_tensor_decomposition.py
"""

from gwa.exprparse import parse_module
from gwa.modules import split
from gwa.orbit import OrbitConfig
from gwa.render import render_text
from gwa.tensorops import tensor

cfg = OrbitConfig(3)

m1 = parse_module('V[t=0:1,2:1; i=2; w="x1x"]', cfg)
m2 = parse_module('V[t=1:1,2:1; i=2; w="1yx10x1"]', cfg)

print("factor 1:", m1)
print("factor 2:", m2)
print()

# Route 1: tensor the modules directly, then decompose.
direct = tensor(m1, m2).decomposition
print("direct:   ", render_text(direct))

# Route 2: split the second factor first (its word contains a 0 letter,
# so it is decomposable), tensor each piece, and collect the results.
pieces = split(m2)
print("pre-split:", render_text(pieces))
via_split = tensor(m1, pieces).decomposition
print("combined: ", render_text(via_split))

assert direct.isomorphic(via_split)
print()
print("Both routes agree.")
