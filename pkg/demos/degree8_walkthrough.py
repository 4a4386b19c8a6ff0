"""Walk through every method on the degree-8 example polynomial.

    python3 demos/degree8_walkthrough.py
"""

from newtonrule import (
    classify_elements,
    descartes_negative,
    descartes_positive,
    newton_complete,
    newton_modified,
    parse_polynomial,
    sturm_count,
    to_binomial,
)
from newtonrule.classical import fourier_signs
from newtonrule.rules import combine_with_descartes

p = parse_polynomial("x^8 - 16x^7 + 28x^6 + 112x^5 - 70x^4 + (28/5)x^3 + 28x^2 + 16x + 1")
bf = to_binomial(p)
table = classify_elements(bf)

print("p(x) =", p.to_text())
print("simple elements a_8..a_0:    ", [str(v) for v in bf.a[::-1]])
print("quadratic elements A_8..A_0: ", [str(v) for v in table.quadratic[::-1]])
for c in table.checks:
    if not c.inside:
        lo, hi = c.interval.decimal_endpoints(3)
        print(f"  A_{c.element}: a_{c.adjacent} = {bf.a[c.adjacent]} lies outside [{lo}, {hi}]")
print("falsely positive:", ", ".join(f"A_{m}" for m in table.falsely_positive()))

orig = newton_complete(bf)
mod = newton_modified(table)
print(f"complete rule:  {orig.tally.as_dict()}  -> positive <= {orig.max_positive}, negative <= {orig.max_negative}")
print(f"modified rule:  {mod.tally.as_dict()}  -> positive <= {mod.max_positive}, negative <= {mod.max_negative}")

dp, dn = descartes_positive(p), descartes_negative(p)
both = combine_with_descartes(mod, dp, dn)
print(f"Descartes: {dp} / {dn}; combined sets {sorted(both.positive_set)} / {sorted(both.negative_set)}")

sym = lambda seq: "".join("+" if s > 0 else "-" if s < 0 else "0" for s in seq)
print("Fourier signs at -3:", sym(fourier_signs(p, -3)), " at 0:", sym(fourier_signs(p, 0)))
print("Sturm: negative roots in (-3, 0]:", sturm_count(p, -3, 0), " positive roots in (0, 15]:", sturm_count(p, 0, 15))
