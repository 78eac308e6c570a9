"""Searching for extremal families.

Maximum families with pairwise distances in a prescribed set are maximum
cliques of the distance graph on all q^n words.  Vertex v encodes the word
whose coordinate i is digit i of v in base q (for q = 2, bit i), so the
all-zeros word is vertex 0.  Distances are invariant under coordinate-wise
translation, hence some maximum clique contains vertex 0 and the search
fixes it.
"""

from __future__ import annotations

import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import Iterable

import numpy as np

from .bounds import (
    BoundResult,
    conjecture_bound,
    delsarte_bound,
    symmetric_family_bound,
)
from .errors import ParameterError, ResourceLimitError
from .family import (
    DistanceSet,
    QaryFamily,
    SetFamily,
    contains_half,
    distance_set,
    is_hamming_symmetric,
    qary_distance_set,
)
from .familyio import format_qary_word, format_word

log = logging.getLogger(__name__)

GRAPH_CAP = 4096
DEFAULT_NODE_BUDGET = 10**8
SYMMETRIC_SET_CAP = 24
SWEEP_MAX_N = 4


# ---------------------------------------------------------------- distance sets

def enumerate_symmetric_distance_sets(n: int, cap: int = SYMMETRIC_SET_CAP) -> list[DistanceSet]:
    """All subsets of [n-1] closed under d -> n - d, smallest first."""
    if n < 1:
        raise ParameterError(f"n must be positive, got {n}")
    if n > cap:
        raise ResourceLimitError(f"enumeration capped at n <= {cap}, got {n}")
    orbits = [{d, n - d} for d in range(1, n // 2 + 1)]
    out = []
    for mask in range(1 << len(orbits)):
        ds = set()
        for i, orbit in enumerate(orbits):
            if (mask >> i) & 1:
                ds |= orbit
        out.append(frozenset(ds))
    out.sort(key=lambda ds: (len(ds), sorted(ds)))
    return [DistanceSet(n, ds) for ds in out]


# ---------------------------------------------------------------- graph

@dataclass(frozen=True)
class DistanceGraph:
    n: int
    q: int
    allowed: DistanceSet
    adjacency: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.adjacency)

    def word(self, v: int) -> tuple[int, ...]:
        return tuple((v // self.q**i) % self.q for i in range(self.n))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adjacency[u] >> v) & 1)


def _bitset(mask: np.ndarray) -> int:
    return int.from_bytes(np.packbits(mask, bitorder="little").tobytes(), "little")


def distance_graph(n: int, allowed: DistanceSet, q: int = 2, cap: int = GRAPH_CAP) -> DistanceGraph:
    if q < 2:
        raise ParameterError(f"alphabet size must be >= 2, got {q}")
    if allowed.n != n:
        raise ParameterError("allowed distance set lives on a different ground set")
    size = q**n
    if size > cap:
        raise ResourceLimitError(f"q^n = {size} vertices exceeds the graph cap {cap}")
    digits = (np.arange(size)[:, None] // q ** np.arange(n)[None, :]) % q
    wanted = np.array(sorted(allowed.distances), dtype=np.int64)
    rows = []
    for v in range(size):
        dist = (digits != digits[v]).sum(axis=1)
        rows.append(_bitset(np.isin(dist, wanted)))
    return DistanceGraph(n, q, allowed, tuple(rows))


# ---------------------------------------------------------------- clique search

class _BudgetExhausted(Exception):
    pass


class _Counter:
    def __init__(self, node_budget, time_limit):
        self.nodes = 0
        self.node_budget = node_budget
        self.deadline = None if time_limit is None else time.monotonic() + time_limit

    def tick(self):
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise _BudgetExhausted
        if self.deadline is not None and not self.nodes & 1023 and time.monotonic() > self.deadline:
            raise _BudgetExhausted


def _color_sort(p: int, adj) -> tuple[list[int], list[int]]:
    """Greedy sequential colouring of the vertex set ``p``.

    Returns vertices in colour order with the running colour count, which
    bounds the clique number of every prefix.
    """
    order, colors = [], []
    uncolored = p
    k = 0
    while uncolored:
        k += 1
        avail = uncolored
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~adj[v] & ~low
            uncolored &= ~low
            order.append(v)
            colors.append(k)
    return order, colors


def _max_clique(adj, cand: int, counter: _Counter, best: list[int], current: list[int]):
    """Branch and bound on ``cand`` (MCQ style); ``best`` is updated in place."""
    counter.tick()
    order, colors = _color_sort(cand, adj)
    for i in range(len(order) - 1, -1, -1):
        if len(current) + colors[i] <= len(best):
            return
        v = order[i]
        current.append(v)
        sub = cand & adj[v]
        if sub:
            _max_clique(adj, sub, counter, best, current)
        elif len(current) > len(best):
            best[:] = current
        current.pop()
        cand &= ~(1 << v)


def _first_clique(adj, cand: int, need: int, counter: _Counter, current: list[int]) -> bool:
    """Lexicographically first clique extension of ``need`` more vertices."""
    if need == 0:
        return True
    counter.tick()
    while cand:
        if cand.bit_count() < need:
            return False
        _, colors = _color_sort(cand, adj)
        if colors[-1] < need:
            return False
        low = cand & -cand
        v = low.bit_length() - 1
        cand &= ~low
        current.append(v)
        if _first_clique(adj, cand & adj[v], need - 1, counter, current):
            return True
        current.pop()
    return False


def maximum_clique_through_zero(graph: DistanceGraph, node_budget=DEFAULT_NODE_BUDGET, time_limit=None):
    """Largest clique containing vertex 0.

    Returns (vertices ascending, exhaustive, nodes).  When exhaustive the
    vertices are the lexicographically smallest maximum clique.
    """
    adj = graph.adjacency
    # recursion depth tracks clique size
    sys.setrecursionlimit(max(sys.getrecursionlimit(), graph.order + 200))
    counter = _Counter(node_budget, time_limit)
    best = [0]
    current = [0]
    try:
        _max_clique(adj, adj[0], counter, best, current)
    except _BudgetExhausted:
        return sorted(best), False, counter.nodes
    omega = len(best)
    current = [0]
    try:
        if _first_clique(adj, adj[0], omega - 1, counter, current):
            return current, True, counter.nodes
    except _BudgetExhausted:
        pass
    return sorted(best), True, counter.nodes


# ---------------------------------------------------------------- reports

def applicable_bound(n: int, q: int, realized: DistanceSet) -> BoundResult:
    """Bound for a family with realised distance set ``realized``.

    Symmetric sets use the parity-restricted sum (proven for q = 2,
    conjectured for q > 2); other sets fall back to the Delsarte sum.
    """
    s = len(realized)
    if is_hamming_symmetric(realized):
        if s == 0:
            return symmetric_family_bound(n, 0, False)
        half = contains_half(realized)
        if q == 2:
            return symmetric_family_bound(n, s, half)
        return conjecture_bound(n, s, q, half)
    return delsarte_bound(n, s, q)


@dataclass(frozen=True)
class SearchReport:
    n: int
    q: int
    target: DistanceSet
    family: SetFamily | QaryFamily
    realized: DistanceSet
    realized_symmetric: bool
    bound: BoundResult
    slack: int
    exhaustive: bool
    nodes: int = 0
    # bound under the reading where symmetry and s refer to the prescribed set
    prescribed_bound: BoundResult | None = None
    prescribed_slack: int | None = None

    @property
    def size(self) -> int:
        return len(self.family)

    @property
    def counterexample(self) -> bool:
        return self.slack < 0 or (self.prescribed_slack is not None and self.prescribed_slack < 0)

    @property
    def verdict(self) -> str:
        if self.slack < 0:
            return "counterexample" if self.realized_symmetric else "counterexample(delsarte)"
        if self.prescribed_slack is not None and self.prescribed_slack < 0:
            return "counterexample(prescribed)"
        if not self.exhaustive:
            return "inconclusive(budget)"
        return "consistent"

    def words(self) -> list[str]:
        if isinstance(self.family, QaryFamily):
            return [format_qary_word(w) for w in self.family.members]
        return [format_word(w, self.n) for w in self.family.members]

    def record(self) -> dict:
        rec = {
            "n": self.n,
            "q": self.q,
            "D": sorted(self.target.distances),
            "max_size": self.size,
            "realized_D": sorted(self.realized.distances),
            "symmetric": self.realized_symmetric,
            "bound_id": self.bound.formula_id,
            "bound_value": self.bound.value,
            "slack": self.slack,
            "exhaustive": self.exhaustive,
            "family": self.words(),
        }
        if self.prescribed_bound is not None:
            rec["prescribed_bound_id"] = self.prescribed_bound.formula_id
            rec["prescribed_bound_value"] = self.prescribed_bound.value
            rec["prescribed_slack"] = self.prescribed_slack
            rec["verdict"] = self.verdict
        return rec


def _as_distance_set(n, allowed) -> DistanceSet:
    if isinstance(allowed, DistanceSet):
        return allowed
    return DistanceSet(n, frozenset(allowed))


def max_family(
    n: int,
    allowed: DistanceSet | Iterable[int],
    q: int = 2,
    node_budget: int = DEFAULT_NODE_BUDGET,
    time_limit: float | None = None,
    graph_cap: int = GRAPH_CAP,
) -> SearchReport:
    """Largest family of words whose pairwise distances all lie in ``allowed``."""
    allowed = _as_distance_set(n, allowed)
    graph = distance_graph(n, allowed, q, graph_cap)
    vertices, exhaustive, nodes = maximum_clique_through_zero(graph, node_budget, time_limit)

    if q == 2:
        fam = SetFamily(n, tuple(vertices))
        realized = distance_set(fam)
    else:
        fam = QaryFamily(n, q, tuple(graph.word(v) for v in vertices))
        realized = qary_distance_set(fam)
    # never trust the solver: re-derive distances from the family itself
    if not realized.distances <= allowed.distances:
        raise AssertionError(f"clique realises {realized} outside allowed {allowed}")

    bound = applicable_bound(n, q, realized)
    symmetric = is_hamming_symmetric(realized)
    report = SearchReport(
        n=n,
        q=q,
        target=allowed,
        family=fam,
        realized=realized,
        realized_symmetric=symmetric,
        bound=bound,
        slack=bound.value - len(fam),
        exhaustive=exhaustive,
        nodes=nodes,
    )
    if report.slack < 0:
        log.warning("bound violated: n=%d q=%d D=%s size=%d bound=%d (%s)",
                    n, q, realized, len(fam), bound.value, bound.formula_id)
    return report


def _survey_row(args):
    n, allowed, q, node_budget, time_limit = args
    return max_family(n, allowed, q, node_budget, time_limit)


def sharpness_survey(
    n: int,
    q: int = 2,
    node_budget: int = DEFAULT_NODE_BUDGET,
    time_limit: float | None = None,
    workers: int = 1,
) -> list[SearchReport]:
    """Maximum family for every Hamming symmetric distance set on [n].

    Rows are independent; ``workers > 1`` spreads them over processes and
    returns the same reports in the same order.
    """
    if q ** n > GRAPH_CAP:
        raise ResourceLimitError(f"q^n = {q ** n} vertices exceeds the graph cap {GRAPH_CAP}")
    jobs = [(n, ds, q, node_budget, time_limit) for ds in enumerate_symmetric_distance_sets(n)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_survey_row, jobs))
    else:
        reports = [_survey_row(job) for job in jobs]
    for r in reports:
        if r.realized_symmetric and r.slack < 0:
            log.error("COUNTEREXAMPLE: n=%d q=%d realised D=%s has %d members > bound %d",
                      r.n, r.q, r.realized, r.size, r.bound.value)
    return reports


def prescribed_reading_bound(n: int, q: int, target: DistanceSet) -> BoundResult:
    """Bound with s = |L| and the n/2 test applied to the prescribed set L."""
    if not target.distances:
        return symmetric_family_bound(n, 0, False)
    return conjecture_bound(n, len(target), q, contains_half(target))


def conjecture_explorer(
    n_max: int,
    q: int = 3,
    node_budget: int = DEFAULT_NODE_BUDGET,
    time_limit: float | None = None,
    workers: int = 1,
) -> list[SearchReport]:
    """Probe the q-ary parity-restricted bound for n = 1..n_max.

    Every row carries both readings of the hypothesis: realised D(H) in
    ``bound``/``slack`` and the prescribed set L in ``prescribed_*``.
    """
    if q < 3:
        raise ParameterError("q = 2 is the proven binary case; use sharpness_survey")
    if n_max < 1:
        raise ParameterError(f"n_max must be positive, got {n_max}")
    rows = []
    for n in range(1, n_max + 1):
        for r in sharpness_survey(n, q, node_budget, time_limit, workers):
            pb = prescribed_reading_bound(n, q, r.target)
            rows.append(replace(r, prescribed_bound=pb, prescribed_slack=pb.value - r.size))
    return rows


# ---------------------------------------------------------------- brute force

@dataclass(frozen=True)
class Violation:
    family: SetFamily
    distances: DistanceSet
    kind: str
    size: int
    bound: int


def exhaustive_family_sweep(n: int) -> list[Violation]:
    """Check every subfamily of 2^[n] against both binary bounds.

    Families are generated depth first in word order so each child's
    distance set extends its parent's by the distances to the new word.
    """
    if not 1 <= n <= SWEEP_MAX_N:
        raise ParameterError(f"sweep needs 1 <= n <= {SWEEP_MAX_N}, got {n}")
    words = 1 << n
    dist = [[(a ^ b).bit_count() for b in range(words)] for a in range(words)]

    # per distance mask (bit d <-> distance d): (symmetric bound or None, delsarte bound or None)
    table = {}
    for mask in range(1 << (n + 1)):
        if mask & 1:
            continue
        ds = DistanceSet(n, frozenset(d for d in range(1, n + 1) if (mask >> d) & 1))
        s = len(ds)
        sym = symmetric_family_bound(n, s, contains_half(ds)).value if is_hamming_symmetric(ds) else None
        dels = delsarte_bound(n, s, 2).value if s >= 1 else None
        table[mask] = (ds, sym, dels)

    violations: list[Violation] = []
    members: list[int] = []

    def visit(start, mask):
        ds, sym, dels = table[mask]
        m = len(members)
        if sym is not None and m > sym:
            violations.append(Violation(SetFamily(n, tuple(members)), ds, "symmetric", m, sym))
        if dels is not None and m > dels:
            violations.append(Violation(SetFamily(n, tuple(members)), ds, "delsarte", m, dels))
        for w in range(start, words):
            row = dist[w]
            child = mask
            for u in members:
                child |= 1 << row[u]
            members.append(w)
            visit(w + 1, child)
            members.pop()

    visit(0, 0)
    return violations


def sweep_family_count(n: int) -> int:
    return 2 ** (2**n)


# ---------------------------------------------------------------- rendering

def format_survey_table(reports: list[SearchReport], header: str | None = None) -> str:
    cols = ["n", "q", "D", "max", "realized D", "sym", "bound", "formula", "slack", "exhaustive"]
    with_prescribed = any(r.prescribed_bound is not None for r in reports)
    if with_prescribed:
        cols += ["L-bound", "L-slack", "verdict"]
    rows = []
    for r in reports:
        row = [
            str(r.n), str(r.q), str(r.target), str(r.size), str(r.realized),
            "yes" if r.realized_symmetric else "no", str(r.bound.value),
            r.bound.formula_id, str(r.slack), "yes" if r.exhaustive else "no",
        ]
        if with_prescribed:
            pb = r.prescribed_bound
            row += [
                "-" if pb is None else str(pb.value),
                "-" if r.prescribed_slack is None else str(r.prescribed_slack),
                r.verdict,
            ]
        rows.append(row)
    widths = [max(len(c), *(len(row[i]) for row in rows)) if rows else len(c) for i, c in enumerate(cols)]
    lines = []
    if header:
        lines.extend(f"# {h}" for h in header.splitlines())
    lines.append("  ".join(c.rjust(w) for c, w in zip(cols, widths)).rstrip())
    lines.append("  ".join("-" * w for w in widths))
    for row in rows:
        lines.append("  ".join(x.rjust(w) for x, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


CONJECTURE_HEADER = (
    "q-ary parity-restricted bound explorer (empirical; nothing here is a proof)\n"
    "'n/2 in D' is read as a condition on the family's own distance set D(H).\n"
    "bound/slack: symmetry and s taken from the realised D(H); "
    "L-bound/L-slack: taken from the prescribed set L."
)
