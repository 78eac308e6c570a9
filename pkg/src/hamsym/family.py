"""Set families, q-ary word families and their Hamming distance sets.

A subset F of [n] is stored as an int bit word: element k is in F iff bit
k - 1 is set.  The same word read as a vector in {-1, 1}^n (bit set -> +1)
is the signed characteristic vector used by the polynomial method.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

MAX_WORD_BITS = 64
MAX_COMPLETE_INTERSECTING_N = 30


def word_from_set(elements: Iterable[int]) -> int:
    """Bit word of a subset of [n] given by its 1-indexed elements."""
    word = 0
    for k in elements:
        if k < 1:
            raise ValueError(f"elements are 1-indexed, got {k}")
        word |= 1 << (k - 1)
    return word


def set_from_word(word: int) -> frozenset[int]:
    out = []
    k = 1
    while word:
        if word & 1:
            out.append(k)
        word >>= 1
        k += 1
    return frozenset(out)


def _check_n(n: int, cap: int | None = MAX_WORD_BITS) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"ground set size must be a positive integer, got {n!r}")
    if cap is not None and n > cap:
        raise ValueError(f"bit-word families support n <= {cap}, got {n}")


def _check_word(word: int, n: int) -> None:
    if not 0 <= word < (1 << n):
        raise ValueError(f"{word!r} is not a subset word of [{n}]")


@dataclass(frozen=True)
class SetFamily:
    """An ordered family of distinct subsets of [n]."""

    n: int
    members: tuple[int, ...]

    def __post_init__(self):
        _check_n(self.n)
        members = tuple(self.members)
        object.__setattr__(self, "members", members)
        for w in members:
            _check_word(w, self.n)
        if len(set(members)) != len(members):
            raise ValueError("family members must be distinct")

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> SetFamily:
        return cls(n, tuple(word_from_set(s) for s in sets))

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def as_sets(self) -> list[frozenset[int]]:
        return [set_from_word(w) for w in self.members]


@dataclass(frozen=True)
class QaryFamily:
    """An ordered family of distinct length-n words over {0, ..., q-1}."""

    n: int
    q: int
    members: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        _check_n(self.n, cap=None)
        if self.q < 2:
            raise ValueError(f"alphabet size must be >= 2, got {self.q}")
        members = tuple(tuple(m) for m in self.members)
        object.__setattr__(self, "members", members)
        for m in members:
            if len(m) != self.n:
                raise ValueError(f"word {m} does not have length {self.n}")
            if any(not 0 <= c < self.q for c in m):
                raise ValueError(f"word {m} has a letter outside 0..{self.q - 1}")
        if len(set(members)) != len(members):
            raise ValueError("family members must be distinct")

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


@dataclass(frozen=True)
class DistanceSet:
    """A set of Hamming distances between distinct words of length n."""

    n: int
    distances: frozenset[int]

    def __post_init__(self):
        _check_n(self.n, cap=None)
        ds = frozenset(self.distances)
        object.__setattr__(self, "distances", ds)
        bad = [d for d in ds if not 1 <= d <= self.n]
        if bad:
            raise ValueError(f"distances must lie in [1, {self.n}], got {sorted(bad)}")

    def __len__(self):
        return len(self.distances)

    def __iter__(self):
        return iter(sorted(self.distances))

    def __contains__(self, d):
        return d in self.distances

    def __str__(self):
        return "{" + ",".join(map(str, sorted(self.distances))) + "}"


@dataclass(frozen=True)
class SignedVector:
    """The word ``word`` viewed as a vector in {-1, 1}^n."""

    n: int
    word: int

    def __post_init__(self):
        _check_n(self.n)
        _check_word(self.word, self.n)

    @property
    def coords(self) -> tuple[int, ...]:
        return tuple(1 if (self.word >> k) & 1 else -1 for k in range(self.n))


@dataclass(frozen=True)
class ScalarProductSet:
    """Inner products <v_F, v_G> realised between distinct members."""

    n: int
    values: frozenset[int]

    def __post_init__(self):
        _check_n(self.n, cap=None)
        vs = frozenset(self.values)
        object.__setattr__(self, "values", vs)
        if self.n in vs:
            raise ValueError("n cannot be a scalar product of distinct members")
        bad = [v for v in vs if not -self.n <= v < self.n]
        if bad:
            raise ValueError(f"scalar products must lie in [-{self.n}, {self.n - 1}]")

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(sorted(self.values))

    def __contains__(self, v):
        return v in self.values

    def __str__(self):
        return "{" + ",".join(map(str, sorted(self.values))) + "}"


def hamming_distance(a: int, b: int, n: int) -> int:
    _check_word(a, n)
    _check_word(b, n)
    return (a ^ b).bit_count()


def distance_set(fam: SetFamily) -> DistanceSet:
    ds = {(a ^ b).bit_count() for a, b in combinations(fam.members, 2)}
    return DistanceSet(fam.n, frozenset(ds))


def qary_distance(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(1 for x, y in zip(u, v) if x != y)


def qary_distance_set(fam: QaryFamily) -> DistanceSet:
    ds = {qary_distance(u, v) for u, v in combinations(fam.members, 2)}
    return DistanceSet(fam.n, frozenset(ds))


def is_hamming_symmetric(d: DistanceSet) -> bool:
    """True iff d in D implies n - d in D.  The empty set qualifies."""
    return all(d.n - x in d.distances for x in d.distances)


def contains_half(d: DistanceSet) -> bool:
    return d.n % 2 == 0 and d.n // 2 in d.distances


def signed_vector(f: int, n: int) -> SignedVector:
    return SignedVector(n, f)


def scalar_product(u: SignedVector, v: SignedVector) -> int:
    if u.n != v.n:
        raise ValueError("signed vectors live on different ground sets")
    # each agreeing coordinate contributes +1, each disagreement -1
    return u.n - 2 * (u.word ^ v.word).bit_count()


def scalar_product_set(d: DistanceSet) -> ScalarProductSet:
    return ScalarProductSet(d.n, frozenset(d.n - 2 * x for x in d.distances))


def complete_intersecting_family(n: int) -> SetFamily:
    """All 2^(n-1) subsets of [n] containing element 1, in word order."""
    _check_n(n)
    if n > MAX_COMPLETE_INTERSECTING_N:
        raise ValueError(
            f"complete intersecting family has 2^(n-1) members; n <= "
            f"{MAX_COMPLETE_INTERSECTING_N} required, got {n}"
        )
    return SetFamily(n, tuple(range(1, 1 << n, 2)))


def translate_family(fam: SetFamily, a: int) -> SetFamily:
    """XOR every member with ``a``; distances are unchanged."""
    _check_word(a, fam.n)
    return SetFamily(fam.n, tuple(w ^ a for w in fam.members))


def translate_qary_family(fam: QaryFamily, shift: Sequence[int]) -> QaryFamily:
    """Coordinate-wise addition of ``shift`` modulo q."""
    if len(shift) != fam.n:
        raise ValueError("shift has the wrong length")
    q = fam.q
    return QaryFamily(
        fam.n, q, tuple(tuple((x + s) % q for x, s in zip(m, shift)) for m in fam.members)
    )
