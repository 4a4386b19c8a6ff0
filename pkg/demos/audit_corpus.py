"""Run the seeded audit and print which bounds and identities held.

    python3 demos/audit_corpus.py [count] [seed]
"""

import sys

from newtonrule import run_audit

count = int(sys.argv[1]) if len(sys.argv) > 1 else 300
seed = int(sys.argv[2]) if len(sys.argv) > 2 else 0
summary = run_audit(count, seed)
for check, row in sorted(summary.counts().items()):
    print(f"{check:<40} pass {row['pass']:>5}  fail {row['fail']:>4}  skip {row['skip']:>4}")

worst = sorted(summary.failures, key=lambda f: (f.polynomial.degree, len(f.polynomial.to_text())))[:3]
for f in worst:
    print(f"\n{f.check}: {f.polynomial.to_text()}\n  bound {f.expected}, exact {f.actual}  {f.note}")
