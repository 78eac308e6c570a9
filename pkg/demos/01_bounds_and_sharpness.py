"""Closed-form bounds and the family that makes them sharp.

Run:  python demos/01_bounds_and_sharpness.py
"""

from hamsym import (
    MonomialClassSpec,
    complete_intersecting_family,
    contains_half,
    delsarte_bound,
    distance_set,
    is_hamming_symmetric,
    monomial_class_count,
    monomial_class_enumerate,
    symmetric_family_bound,
)

# %% Bounds side by side: a family with s distinct distances versus a
# Hamming symmetric one with the same s.
n = 10
print(f"n = {n}")
print(" s  delsarte  symmetric(n/2 not in D)  symmetric(n/2 in D)")
for s in range(1, n):
    sym_even = symmetric_family_bound(n, s, False).value
    sym_odd = symmetric_family_bound(n, s, True).value
    print(f"{s:2d}  {delsarte_bound(n, s).value:8d}  {sym_even:23d}  {sym_odd:19d}")

# %% The sets containing element 1 realise every distance 1..n-1, so
# n/2 is a distance and the odd-case bound with s = n-1 applies.
for n in (2, 4, 6, 8, 10):
    fam = complete_intersecting_family(n)
    ds = distance_set(fam)
    bound = symmetric_family_bound(n, len(ds), contains_half(ds))
    print(f"n={n:2d}  |F|={len(fam):4d}  symmetric={is_hamming_symmetric(ds)}  bound={bound.value:4d}")

# %% The bound values are the sizes of the square-free monomial classes.
spec = MonomialClassSpec(4, 2, "even")
print(spec.name, monomial_class_count(spec), monomial_class_enumerate(spec))
