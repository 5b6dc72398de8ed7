"""Multiply classes in the symbolic product ring and cross-check
against the module-level tensor product.

Run with:  python3 demos/02_product_ring.py
"""

from gwa.exprparse import parse_ring_element
from gwa.groth import groth_mul_modules, groth_mul_rewrite, \
    hilbert_series_coeff
from gwa.orbit import OrbitConfig

cfg = OrbitConfig(3)

pairs = [
    ("x[0]", "x[1]"),       # two vertex classes: a sum of two arc classes
    ("x[0,1]", "x[1,0]"),   # complementary arcs: product vanishes
    ("y[0]*y[1]*y[2]", "ys[0]*ys[1]*ys[2]"),  # full revolutions
]

for left, right in pairs:
    e1 = parse_ring_element(left, cfg, "groth")
    e2 = parse_ring_element(right, cfg, "groth")
    by_rules = groth_mul_rewrite(e1, e2)
    by_modules = groth_mul_modules(e1, e2)
    assert by_rules == by_modules
    print(f"{left} * {right} = {by_rules!r}")

print()
print("graded dimensions for p=3:",
      [hilbert_series_coeff(3, d) for d in range(7)])
