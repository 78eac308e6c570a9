"""Probing the q-ary parity-restricted bound.

For q >= 3 nothing is proven; the explorer searches exhaustively and
reports, per distance set, whether the largest family stays within the
conjectured sum.  Two readings of the hypothesis are shown side by side.

Run:  python demos/04_conjecture_explorer.py
"""

from hamsym.search import CONJECTURE_HEADER, conjecture_explorer, format_survey_table

for q in (3, 4):
    n_max = 4 if q == 3 else 3
    rows = conjecture_explorer(n_max, q=q, time_limit=60)
    print(format_survey_table(rows, header=CONJECTURE_HEADER))
    bad = [r for r in rows if r.counterexample]
    print(f"q={q}: {len(rows)} rows, {len(bad)} counterexamples\n")
