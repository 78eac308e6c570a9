"""Maximum families for every Hamming symmetric distance set, n = 2..6.

Each row is an exhaustive maximum-clique search in the distance graph.
The bound is chosen from the distance set the found family actually
realises, which can be smaller than the prescribed one.

Run:  python demos/03_sharpness_survey.py
"""

import time

from hamsym.search import exhaustive_family_sweep, format_survey_table, sharpness_survey, sweep_family_count

for n in range(2, 7):
    t0 = time.perf_counter()
    rows = sharpness_survey(n)
    print(format_survey_table(rows), end="")
    print(f"({time.perf_counter() - t0:.2f}s)\n")

# %% Brute force over every family on [n] for n <= 4.
for n in range(1, 5):
    v = exhaustive_family_sweep(n)
    print(f"n={n}: {sweep_family_count(n)} families, {len(v)} violations")
