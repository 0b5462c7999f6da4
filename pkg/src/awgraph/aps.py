"""Arithmetic progressions of a graph under the shortest-path metric.

A k-AP is a set of k distinct vertices admitting at least one ordering
x_1, ..., x_k with d(x_i, x_{i+1}) = d for a single common difference d >= 1.
Orderings are existential: a vertex set is stored once even when several
orderings (possibly with different d) realize it.  Degenerate progressions
with repeated vertices are excluded throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .errors import BudgetExceededError
from .graphs import DistanceMatrix

BRUTE_FORCE_TUPLE_LIMIT = 10**8


@dataclass(frozen=True)
class ArithmeticProgression:
    """One k-AP: its vertex set (sorted) plus one realizing ordering."""

    vertices: tuple[int, ...]
    witness: tuple[int, ...]
    d: int


@dataclass(frozen=True)
class ApTable:
    """All k-APs of a fixed graph, sorted lexicographically by vertex set.

    by_vertex[v] lists the indices into aps of every AP containing v, so a
    search can test exactly the progressions a new assignment can complete.
    """

    k: int
    n: int
    aps: tuple[ArithmeticProgression, ...]
    by_vertex: tuple[tuple[int, ...], ...]


def _assemble(k: int, n: int, found: dict[tuple[int, ...], ArithmeticProgression]) -> ApTable:
    aps = tuple(found[key] for key in sorted(found))
    index: list[list[int]] = [[] for _ in range(n)]
    for i, ap in enumerate(aps):
        for v in ap.vertices:
            index[v].append(i)
    return ApTable(k, n, aps, tuple(tuple(row) for row in index))


def enumerate_k_aps(dist: DistanceMatrix, k: int) -> ApTable:
    """All k-APs of the graph behind dist.

    k = 2: every vertex pair (any positive distance is a common difference).
    k = 3: a set {a, b, c} qualifies iff some member is equidistant from the
    other two, so middle vertices are scanned and the others bucketed by
    distance; pairs sharing a bucket close a progression.
    k >= 4: depth-first extension of ordered partial progressions sharing one
    common difference.  The first ordering found in this fixed scan order is
    kept as the stored witness.
    """
    if k < 2:
        raise ValueError(f"k-APs need k >= 2, got k={k}")
    n = dist.n
    found: dict[tuple[int, ...], ArithmeticProgression] = {}
    if k == 2:
        for u, v in combinations(range(n), 2):
            found[(u, v)] = ArithmeticProgression((u, v), (u, v), dist.d(u, v))
        return _assemble(k, n, found)
    if k == 3:
        rows = dist.dist
        for b in range(n):
            row = rows[b]
            buckets: dict[int, list[int]] = {}
            for a in range(n):
                if a != b:
                    buckets.setdefault(row[a], []).append(a)
            for d in sorted(buckets):
                group = buckets[d]
                for a, c in combinations(group, 2):
                    key = tuple(sorted((a, b, c)))
                    if key not in found:
                        found[key] = ArithmeticProgression(key, (a, b, c), d)
        return _assemble(k, n, found)

    rows = dist.dist

    def extend(seq: list[int], d: int) -> None:
        if len(seq) == k:
            key = tuple(sorted(seq))
            if key not in found:
                found[key] = ArithmeticProgression(key, tuple(seq), d)
            return
        last = rows[seq[-1]]
        for y in range(n):
            if last[y] == d and y not in seq:
                seq.append(y)
                extend(seq, d)
                seq.pop()

    for x1 in range(n):
        row = rows[x1]
        for x2 in range(n):
            if x2 != x1:
                extend([x1, x2], row[x2])
    return _assemble(k, n, found)


def brute_force_k_aps(dist: DistanceMatrix, k: int) -> ApTable:
    """Oracle: test every ordered k-tuple of distinct vertices directly.

    Independent of enumerate_k_aps on purpose; refuses instances with more
    than BRUTE_FORCE_TUPLE_LIMIT candidate tuples.
    """
    if k < 2:
        raise ValueError(f"k-APs need k >= 2, got k={k}")
    n = dist.n
    if n**k > BRUTE_FORCE_TUPLE_LIMIT:
        raise BudgetExceededError(
            f"brute force over n^k = {n}^{k} tuples exceeds {BRUTE_FORCE_TUPLE_LIMIT}"
        )
    rows = dist.dist
    found: dict[tuple[int, ...], ArithmeticProgression] = {}
    for tup in permutations(range(n), k):
        d = rows[tup[0]][tup[1]]
        if all(rows[tup[i]][tup[i + 1]] == d for i in range(1, k - 1)):
            key = tuple(sorted(tup))
            if key not in found:
                found[key] = ArithmeticProgression(key, tup, d)
    return _assemble(k, n, found)


def is_rainbow(ap: ArithmeticProgression, colors) -> bool:
    """True iff the coloring assigns pairwise distinct colors on the AP.

    colors is any sequence indexed by vertex id (a Coloring's colors tuple or
    a plain list); it must cover every vertex of the AP.
    """
    k = len(ap.vertices)
    return len({colors[v] for v in ap.vertices}) == k


def find_rainbow_ap(table: ApTable, colors) -> ArithmeticProgression | None:
    """First rainbow AP in table order, or None when the coloring is rainbow-free."""
    for ap in table.aps:
        if is_rainbow(ap, colors):
            return ap
    return None
