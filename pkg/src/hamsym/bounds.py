"""Exact evaluation of the counting bounds and monomial-class sizes.

Everything here is arbitrary-precision integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .errors import ParameterError, ResourceLimitError

FORMULA_IDS = (
    "delsarte_q",
    "delsarte_binary",
    "symmetric_even_case",
    "symmetric_odd_case",
    "conjecture_even_case",
    "conjecture_odd_case",
)

ENUMERATION_CAP = 1_000_000


@dataclass(frozen=True)
class BoundResult:
    value: int
    formula_id: str
    n: int
    s: int
    q: int = 2
    half_in: bool = False

    def __int__(self):
        return self.value


@dataclass(frozen=True)
class MonomialClassSpec:
    """Exponent vectors of total degree <= s with fixed parity.

    (even, False) is T(n, s), (even, True) is Q(n, s), (odd, False) is
    O(n, s) and (odd, True) is R(n, s).
    """

    n: int
    s: int
    parity: str
    multilinear_only: bool = True

    def __post_init__(self):
        if self.parity not in ("even", "odd"):
            raise ParameterError(f"parity must be 'even' or 'odd', got {self.parity!r}")
        if self.n < 1 or not 0 <= self.s <= self.n:
            raise ParameterError(f"need 0 <= s <= n and n >= 1, got n={self.n}, s={self.s}")

    @property
    def name(self) -> str:
        if self.parity == "even":
            return "Q" if self.multilinear_only else "T"
        return "R" if self.multilinear_only else "O"


def binomial(n: int, k: int) -> int:
    if n < 0:
        raise ParameterError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _check_sq(n, s, q):
    if q <= 1:
        raise ParameterError(f"alphabet size must exceed 1, got q={q}")
    if s <= 0 or s > n:
        raise ParameterError(f"need 0 < s <= n, got n={n}, s={s}")


def delsarte_bound(n: int, s: int, q: int = 2) -> BoundResult:
    """Sum of C(n, i) (q-1)^i over 0 <= i <= s."""
    _check_sq(n, s, q)
    value = sum(binomial(n, i) * (q - 1) ** i for i in range(s + 1))
    fid = "delsarte_binary" if q == 2 else "delsarte_q"
    return BoundResult(value, fid, n, s, q, False)


def symmetric_family_bound(n: int, s: int, half_in: bool) -> BoundResult:
    """Size bound for a Hamming symmetric family with |D(F)| = s.

    Without n/2 in D(F) the even binomials C(n, 2j), 2j <= s, are summed;
    with it, the odd binomials C(n, 2j+1), 2j+1 <= s.
    """
    if n < 1 or not 0 <= s <= n:
        raise ParameterError(f"need 0 <= s <= n and n >= 1, got n={n}, s={s}")
    if half_in:
        if n % 2:
            raise ParameterError(f"n/2 cannot be a distance for odd n={n}")
        if s < 1:
            raise ParameterError("n/2 in D(F) forces s >= 1")
        value = sum(binomial(n, 2 * j + 1) for j in range((s - 1) // 2 + 1))
        return BoundResult(value, "symmetric_odd_case", n, s, 2, True)
    value = sum(binomial(n, 2 * j) for j in range(s // 2 + 1))
    return BoundResult(value, "symmetric_even_case", n, s, 2, False)


def conjecture_bound(n: int, s: int, q: int, half_in: bool) -> BoundResult:
    """Conjectured q-ary analogue: parity-restricted Delsarte sum."""
    _check_sq(n, s, q)
    if half_in and n % 2:
        raise ParameterError(f"n/2 cannot be a distance for odd n={n}")
    start = 1 if half_in else 0
    value = sum(binomial(n, i) * (q - 1) ** i for i in range(start, s + 1, 2))
    fid = "conjecture_odd_case" if half_in else "conjecture_even_case"
    return BoundResult(value, fid, n, s, q, half_in)


def monomial_class_count(spec: MonomialClassSpec) -> int:
    """Closed-form |Q(n, s)| or |R(n, s)|."""
    if not spec.multilinear_only:
        raise ParameterError("no closed form for T/O classes; use monomial_class_enumerate")
    n, s = spec.n, spec.s
    if spec.parity == "even":
        return sum(binomial(n, 2 * j) for j in range(s // 2 + 1))
    return sum(binomial(n, 2 * j + 1) for j in range((s - 1) // 2 + 1))


def _class_size(spec: MonomialClassSpec) -> int:
    first = 0 if spec.parity == "even" else 1
    if spec.multilinear_only:
        return sum(binomial(spec.n, d) for d in range(first, spec.s + 1, 2))
    # exponent vectors of degree exactly d: C(n + d - 1, d)
    return sum(binomial(spec.n + d - 1, d) for d in range(first, spec.s + 1, 2))


def _compositions(n, d):
    """Exponent vectors in N^n of total degree d, in descending lex order."""
    if n == 1:
        yield (d,)
        return
    for head in range(d, -1, -1):
        for tail in _compositions(n - 1, d - head):
            yield (head,) + tail


def monomial_class_enumerate(spec: MonomialClassSpec, cap: int = ENUMERATION_CAP) -> list[tuple[int, ...]]:
    """List the class explicitly: graded by degree, descending lex within."""
    size = _class_size(spec)
    if size > cap:
        raise ResourceLimitError(f"{spec.name}({spec.n},{spec.s}) has {size} members, cap is {cap}")
    n = spec.n
    out: list[tuple[int, ...]] = []
    for d in range(0 if spec.parity == "even" else 1, spec.s + 1, 2):
        if spec.multilinear_only:
            for support in combinations(range(n), d):
                alpha = [0] * n
                for k in support:
                    alpha[k] = 1
                out.append(tuple(alpha))
        else:
            out.extend(_compositions(n, d))
    return out
