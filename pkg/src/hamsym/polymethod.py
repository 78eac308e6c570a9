"""Annihilator polynomials on the cube {-1, 1}^n and independence certificates.

A multilinear polynomial is a map from monomial supports (bit words, bit k
standing for x_{k+1}) to nonzero integer coefficients.  Products are reduced
on the fly with x_j^2 = 1, so the support of a product monomial is the XOR
of the factor supports.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field, replace
from types import MappingProxyType
from typing import Mapping, Sequence

from .bounds import MonomialClassSpec, monomial_class_count
from .errors import ResourceLimitError
from .family import (
    ScalarProductSet,
    SetFamily,
    SignedVector,
    distance_set,
    scalar_product_set,
    signed_vector,
)

MONOMIAL_CAP = 1 << 22
MAX_CERTIFICATE_MEMBERS = 4096


@dataclass(frozen=True, eq=False)
class MultilinearPoly:
    n: int
    coeffs: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        top = 1 << self.n
        for support, c in self.coeffs.items():
            if not 0 <= support < top:
                raise ValueError(f"monomial support {support} is not a word of [{self.n}]")
            if c:
                clean[support] = int(c)
        object.__setattr__(self, "coeffs", MappingProxyType(clean))

    @classmethod
    def constant(cls, n: int, c: int = 1) -> MultilinearPoly:
        return cls(n, {0: c})

    def __eq__(self, other):
        if not isinstance(other, MultilinearPoly):
            return NotImplemented
        return self.n == other.n and dict(self.coeffs) == dict(other.coeffs)

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def __len__(self):
        return len(self.coeffs)

    def __mul__(self, other):
        return multiply_reduce(self, other)

    def __add__(self, other):
        if self.n != other.n:
            raise ValueError("polynomials live on different ground sets")
        out = dict(self.coeffs)
        for s, c in other.coeffs.items():
            out[s] = out.get(s, 0) + c
        return MultilinearPoly(self.n, out)

    def __neg__(self):
        return MultilinearPoly(self.n, {s: -c for s, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((s.bit_count() for s in self.coeffs), default=-1)

    def __call__(self, v: SignedVector) -> int:
        return evaluate(self, v)

    def __repr__(self):
        return f"MultilinearPoly(n={self.n}, {format_poly(self)})"


def format_poly(p: MultilinearPoly) -> str:
    if not p.coeffs:
        return "0"
    terms = []
    for s in sorted(p.coeffs, key=lambda s: (-s.bit_count(), s)):
        c = p.coeffs[s]
        mono = "*".join(f"x{k + 1}" for k in range(p.n) if (s >> k) & 1)
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def linear_form(center: SignedVector) -> MultilinearPoly:
    """<x, v> = sum_k v_k x_k."""
    coords = center.coords
    return MultilinearPoly(center.n, {1 << k: coords[k] for k in range(center.n)})


def multiply_reduce(p: MultilinearPoly, q: MultilinearPoly, cap: int = MONOMIAL_CAP) -> MultilinearPoly:
    if p.n != q.n:
        raise ValueError("polynomials live on different ground sets")
    out: dict[int, int] = defaultdict(int)
    for s, a in p.coeffs.items():
        for t, b in q.coeffs.items():
            out[s ^ t] += a * b
    if len(out) > cap:
        raise ResourceLimitError(f"product has {len(out)} monomials, cap is {cap}")
    return MultilinearPoly(p.n, out)


def evaluate(p: MultilinearPoly, v: SignedVector) -> int:
    if p.n != v.n:
        raise ValueError("polynomial and point live on different ground sets")
    # prod_{k in S} v_k = (-1)^{|S minus F|}
    neg = ~v.word
    total = 0
    for s, c in p.coeffs.items():
        total += -c if (s & neg).bit_count() & 1 else c
    return total


def parity_class(p: MultilinearPoly) -> str:
    """'even', 'odd', 'mixed' or 'zero' by the sizes of monomial supports."""
    parities = {s.bit_count() & 1 for s in p.coeffs}
    if not parities:
        return "zero"
    if len(parities) == 2:
        return "mixed"
    return "odd" if parities == {1} else "even"


@dataclass(frozen=True)
class AnnihilatorSpec:
    center: SignedVector
    roots: ScalarProductSet

    def __post_init__(self):
        if self.center.n != self.roots.n:
            raise ValueError("center and roots live on different ground sets")

    @property
    def n(self) -> int:
        return self.center.n


def shifted_form_product(center: SignedVector, shifts, cap: int = MONOMIAL_CAP) -> MultilinearPoly:
    """Reduced form of prod_{d in shifts} (<x, center> - d), factors in the given order.

    Any integer shifts are accepted, repeats included.
    """
    n = center.n
    lin = linear_form(center)
    poly = MultilinearPoly.constant(n)
    for d in shifts:
        factor = lin - MultilinearPoly.constant(n, d) if d else lin
        poly = multiply_reduce(poly, factor, cap)
    return poly


def build_annihilator(spec: AnnihilatorSpec, cap: int = MONOMIAL_CAP) -> MultilinearPoly:
    """Reduced annihilator of ``spec.center``, factors in ascending root order."""
    return shifted_form_product(spec.center, sorted(spec.roots.values), cap)


def exact_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination.

    Pivots are chosen by largest absolute value in the column.  All
    intermediate entries stay integers.
    """
    a = [list(map(int, row)) for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    rank = 0
    prev = 1
    for c in range(cols):
        if rank == rows:
            break
        pivot = max(range(rank, rows), key=lambda r: abs(a[r][c]))
        if a[pivot][c] == 0:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][c]
        for r in range(rank + 1, rows):
            f = a[r][c]
            row_r, row_p = a[r], a[rank]
            for k in range(c + 1, cols):
                # exact division is guaranteed by Sylvester's identity
                row_r[k] = (p * row_r[k] - f * row_p[k]) // prev
            row_r[c] = 0
        prev = p
        rank += 1
    return rank


@dataclass(frozen=True)
class IndependenceCertificate:
    n: int
    m: int
    s: int
    distances: frozenset[int]
    scalar_products: frozenset[int]
    matrix: tuple[tuple[int, ...], ...]
    diagonal_witness: int
    parity_class: str
    monomial_budget: int
    rank: int
    failures: tuple[str, ...] = ()

    @property
    def valid(self) -> bool:
        return not self.failures

    @property
    def verdict(self) -> str:
        if self.valid:
            return "valid"
        return "invalid(" + ",".join(self.failures) + ")"

    @property
    def offdiagonal_zero(self) -> bool:
        return all(
            x == 0 for i, row in enumerate(self.matrix) for j, x in enumerate(row) if i != j
        )

    @property
    def diagonal_ok(self) -> bool:
        return self.diagonal_witness != 0 and all(
            self.matrix[i][i] == self.diagonal_witness for i in range(self.m)
        )

    def to_text(self) -> str:
        return format_certificate(self)


def _braced(values) -> str:
    return "{" + ",".join(map(str, sorted(values))) + "}"


def format_certificate(cert: IndependenceCertificate) -> str:
    lines = [
        f"n: {cert.n}",
        f"m: {cert.m}",
        f"s: {cert.s}",
        f"distance_set: {_braced(cert.distances)}",
        f"scalar_product_set: {_braced(cert.scalar_products)}",
        f"parity_class: {cert.parity_class}",
        f"monomial_budget: {cert.monomial_budget}",
        f"diagonal_witness: {cert.diagonal_witness}",
        f"rank: {cert.rank}",
        f"verdict: {cert.verdict}",
        "matrix:",
    ]
    lines.extend(" ".join(map(str, row)) for row in cert.matrix)
    return "\n".join(lines) + "\n"


def build_certificate(
    fam: SetFamily,
    cap: int = MONOMIAL_CAP,
    max_members: int = MAX_CERTIFICATE_MEMBERS,
) -> IndependenceCertificate:
    """Evaluate each member's reduced annihilator at every member.

    The family is certified when the evaluation matrix is the diagonal
    witness times the identity, has full rank, and all annihilators share
    the parity class that confines them to |Q(n,s)| or |R(n,s)| monomials.
    """
    m, n = len(fam), fam.n
    if m == 0:
        raise ValueError("certificate needs at least one member")
    if m > max_members:
        raise ResourceLimitError(f"family has {m} members, certificate cap is {max_members}")
    if (1 << n) > cap:
        raise ResourceLimitError(f"n={n} may need 2^{n} monomials, cap is {cap}")

    dist = distance_set(fam)
    roots = scalar_product_set(dist)
    s = len(roots)
    vectors = [signed_vector(w, n) for w in fam.members]
    polys = [build_annihilator(AnnihilatorSpec(v, roots), cap) for v in vectors]
    matrix = tuple(tuple(evaluate(p, v) for v in vectors) for p in polys)

    witness = 1
    for d in roots.values:
        witness *= n - d

    classes = {parity_class(p) for p in polys}
    if len(classes) == 1:
        parity = classes.pop()
    else:
        parity = "mixed"
    odd_case = 0 in roots
    budget = monomial_class_count(MonomialClassSpec(n, s, "odd" if odd_case else "even"))
    rank = exact_rank(matrix)

    cert = IndependenceCertificate(
        n=n,
        m=m,
        s=s,
        distances=dist.distances,
        scalar_products=roots.values,
        matrix=matrix,
        diagonal_witness=witness,
        parity_class=parity,
        monomial_budget=budget,
        rank=rank,
    )
    failures = []
    if not cert.offdiagonal_zero:
        failures.append("offdiagonal")
    if not cert.diagonal_ok:
        failures.append("diagonal")
    if rank != m:
        failures.append("rank")
    if parity != ("odd" if odd_case else "even"):
        failures.append("parity")
    if m > budget:
        failures.append("budget")
    return replace(cert, failures=tuple(failures))
