"""The cubic-sector necessary condition on a quintic and a quartic.

    python3 demos/quintic_condition.py
"""

from newtonrule import count_real_roots, necessary_condition_all_real, parse_polynomial
from newtonrule.cubic import classify_elements
from newtonrule.poly import to_binomial

for text in ("x^5 + x^4 - 28x^3 + 32x^2 + 96x - 144", "x^4 - 2x^3 - 2x^2 + 5x + 10"):
    p = parse_polynomial(text)
    table = classify_elements(to_binomial(p))
    print(text)
    print("  quadratic elements:", [str(a) for a in table.quadratic])
    for c in table.checks:
        lo, hi = c.interval.decimal_endpoints(3)
        mark = "in " if c.inside else "OUT"
        print(f"  A_{c.element} vs a_{c.adjacent}: {mark} [{lo}, {hi}]")
    nc = necessary_condition_all_real(p)
    print("  all-real condition:", "holds" if nc else f"fails at {nc.witness}")
    print("  real roots (Sturm):", count_real_roots(p))
