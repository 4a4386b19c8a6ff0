"""Privileged free terms: where a free-term family gains or loses real roots.

For p(x) + c the real-root count can only change when c passes a value
making a stationary point a root. Those values are listed, highest first.

    python3 demos/bands.py
"""

from newtonrule import parse_polynomial, privileged_free_terms

families = [
    "x^5 - 3x^4 - x^3 + 7x^2 - (3/2)x",
    "5x^5 + (1/10)x^4 - 8x^3 - (1/4)x^2 + 4x",
    "x^3 - 5x^2 - x",
    "x^3 - x^2 + x",
]
for text in families:
    terms = privileged_free_terms(parse_polynomial(text))
    shown = ", ".join(t.decimal(3) for t in terms) or "none (no real stationary point)"
    print(f"{text} + f:  {shown}")
