"""Sweep the cubic family x^3 - 8x^2 + 8(3-2q)x - 16(1-q) over q.

The family comes from an elastic surface-wave problem; only values of q in
(0, 3/4) are physical. The modified rule sees the loss of two real roots
before the discriminant is computed.

    python3 demos/parametric_sweep.py
"""

from fractions import Fraction as F

from newtonrule import isolate_threshold, parse_parametric, sweep
from newtonrule.sweep import parametric_discriminant, parametric_quadratic_elements

family = parse_parametric("x^3 - 8x^2 + 8*(3-2q)x - 16*(1-q)", "q")
print("family:", family)
print("A_1, A_2 in q:", [a.to_text("q") for a in parametric_quadratic_elements(family)[1:3]])
print("discriminant in q:", parametric_discriminant(family).to_text("q"))

prev = None
for row in sweep(family, F(1, 100), F(74, 100), F(1, 100)):
    if row.regime != prev:
        print(f"q = {str(row.value):>7}: {row.regime:<17} modified {row.modified}  real roots {row.real_roots}")
        prev = row.regime

iv = isolate_threshold(family, "falsely-positive", F(1, 6), F(3, 4), F(1, 10 ** 6))
print(f"falsely positive elements disappear for q in ({iv.lo}, {iv.hi}], about {float(iv.midpoint):.6f}")
