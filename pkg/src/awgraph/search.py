"""Exhaustive symmetry-reduced search for rainbow-free exact colorings.

Colorings are explored in restricted-growth (canonical) form only, which
quotients out color relabeling: every class of an exact r-coloring under the
free relabeling action has exactly one canonical member, so counts scale by
r! when converted back to labeled colorings.

Search order is fixed: vertices are assigned in id order and colors in
ascending order, so the first coloring found is the lexicographically least
canonical one and enumeration output is lex-sorted.  Two prunes keep the tree
small: a branch dies as soon as the newest vertex completes a rainbow AP
(only APs whose maximum vertex is the newest need checking), and as soon as
the remaining vertices cannot supply the colors still missing from 1..r.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass

from .aps import ApTable, enumerate_k_aps
from .coloring import Coloring
from .errors import BudgetExceededError
from .graphs import Graph, all_pairs_distances

DEFAULT_NODE_BUDGET = 10**9

# Parallel mode splits the tree at a shallow prefix depth; each worker gets a
# block of consistent canonical prefixes and the merge preserves lex order,
# so results are identical for every thread count.
_MIN_TASKS_PER_WORKER = 4
_MAX_PREFIX_DEPTH = 12


@dataclass(frozen=True)
class AwResult:
    """Outcome of an anti-van der Waerden computation.

    per_r records, for each color count examined in ascending order, whether
    a rainbow-free exact r-coloring exists.  witness is a lexicographically
    least canonical rainbow-free exact (aw-1)-coloring; it is omitted when
    aw - 1 < 2 (a monochromatic witness certifies nothing).
    """

    aw: int
    k: int
    n: int
    per_r: tuple[tuple[int, bool], ...]
    witness: Coloring | None


# ======================================================================
# Core backtracking engine
# ======================================================================


def _completed_groups(table: ApTable) -> list[list[tuple[int, ...]]]:
    """For each vertex v, the other-vertex tuples of APs whose maximum is v."""
    groups: list[list[tuple[int, ...]]] = [[] for _ in range(table.n)]
    for ap in table.aps:
        vs = ap.vertices
        groups[vs[-1]].append(vs[:-1])
    return groups


def _check_prefix(groups, colors, upto: int, k: int) -> bool:
    """True iff no AP fully inside colors[0:upto] is rainbow."""
    for v in range(upto):
        cv = colors[v]
        for others in groups[v]:
            seen = {cv}
            for u in others:
                cu = colors[u]
                if cu in seen:
                    break
                seen.add(cu)
            else:
                return False
    return True


def _search_k3(pairs, n: int, r: int, budget: int, first_only: bool, prefix) -> list[tuple[int, ...]]:
    # Specialized k=3 hot path: each completed AP is a pair (a, b) and the
    # rainbow test is three inequality checks, no set allocation.
    colors = [0] * n
    top = 0
    for v, c in enumerate(prefix):
        colors[v] = c
        if c > top:
            top = c
    found: list[tuple[int, ...]] = []
    nodes = 0

    def extend(v: int, top: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceededError(
                f"search expanded more than {budget} nodes (r={r}, n={n})"
            )
        if v == n:
            if top == r:
                found.append(tuple(colors))
                return not first_only
            return True
        if r - top > n - v:
            return True
        hi = top + 1 if top < r else r
        pv = pairs[v]
        for c in range(1, hi + 1):
            ok = True
            for a, b in pv:
                ca = colors[a]
                if ca != c:
                    cb = colors[b]
                    if cb != c and cb != ca:
                        ok = False
                        break
            if ok:
                colors[v] = c
                deeper = extend(v + 1, c if c > top else top)
                colors[v] = 0
                if not deeper:
                    return False
        return True

    extend(len(prefix), top)
    return found


def _search_any(groups, k: int, n: int, r: int, budget: int, first_only: bool, prefix) -> list[tuple[int, ...]]:
    # Generic engine for k != 3 (k = 2 and k >= 4).
    colors = [0] * n
    top = 0
    for v, c in enumerate(prefix):
        colors[v] = c
        if c > top:
            top = c
    found: list[tuple[int, ...]] = []
    nodes = 0

    def extend(v: int, top: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceededError(
                f"search expanded more than {budget} nodes (r={r}, n={n})"
            )
        if v == n:
            if top == r:
                found.append(tuple(colors))
                return not first_only
            return True
        if r - top > n - v:
            return True
        hi = top + 1 if top < r else r
        gv = groups[v]
        for c in range(1, hi + 1):
            ok = True
            for others in gv:
                seen = {c}
                for u in others:
                    cu = colors[u]
                    if cu in seen:
                        break
                    seen.add(cu)
                else:
                    ok = False
                    break
            if ok:
                colors[v] = c
                deeper = extend(v + 1, c if c > top else top)
                colors[v] = 0
                if not deeper:
                    return False
        return True

    extend(len(prefix), top)
    return found


def _run_search(table: ApTable, n: int, r: int, budget: int, first_only: bool, prefix=()) -> list[tuple[int, ...]]:
    groups = _completed_groups(table)
    if prefix and not _check_prefix(groups, list(prefix) + [0] * (n - len(prefix)), len(prefix), table.k):
        return []
    if table.k == 3:
        pairs = [tuple(g) for g in groups]
        return _search_k3(pairs, n, r, budget, first_only, prefix)
    return _search_any(groups, table.k, n, r, budget, first_only, prefix)


# ======================================================================
# Parallel splitting
# ======================================================================


def _canonical_prefixes(table: ApTable, n: int, r: int, depth: int) -> list[tuple[int, ...]]:
    """All consistent canonical prefixes of the given depth, in lex order."""
    groups = _completed_groups(table)
    out: list[tuple[int, ...]] = []
    colors = [0] * n

    def extend(v: int, top: int) -> None:
        if v == depth:
            out.append(tuple(colors[:depth]))
            return
        if r - top > n - v:
            return
        hi = top + 1 if top < r else r
        gv = groups[v]
        for c in range(1, hi + 1):
            ok = True
            for others in gv:
                seen = {c}
                for u in others:
                    cu = colors[u]
                    if cu in seen:
                        break
                    seen.add(cu)
                else:
                    ok = False
                    break
            if ok:
                colors[v] = c
                extend(v + 1, c if c > top else top)
                colors[v] = 0

    extend(0, 0)
    return out


def _worker(args) -> list[tuple[int, ...]]:
    table, n, r, budget, first_only, prefix = args
    return _run_search(table, n, r, budget, first_only, prefix)


def _search_parallel(table: ApTable, n: int, r: int, budget: int, first_only: bool, threads: int) -> list[tuple[int, ...]]:
    depth = 1
    prefixes = _canonical_prefixes(table, n, r, depth)
    while depth < min(n, _MAX_PREFIX_DEPTH) and len(prefixes) < _MIN_TASKS_PER_WORKER * threads:
        depth += 1
        prefixes = _canonical_prefixes(table, n, r, depth)
    if depth >= n or len(prefixes) <= 1:
        return _run_search(table, n, r, budget, first_only)
    tasks = [(table, n, r, budget, first_only, p) for p in prefixes]
    found: list[tuple[int, ...]] = []
    with multiprocessing.Pool(threads) as pool:
        # imap preserves prefix (lex) order, so first hit and merge order are
        # deterministic regardless of worker scheduling.
        for chunk in pool.imap(_worker, tasks):
            if chunk:
                found.extend(chunk)
                if first_only:
                    pool.terminate()
                    break
    return found[:1] if first_only else found


def _search(table: ApTable, n: int, r: int, budget: int, first_only: bool, threads: int) -> list[tuple[int, ...]]:
    if threads > 1:
        return _search_parallel(table, n, r, budget, first_only, threads)
    return _run_search(table, n, r, budget, first_only)


# ======================================================================
# Public operations
# ======================================================================


def _validate_search_args(table: ApTable, n: int, r: int) -> None:
    if n != table.n:
        raise ValueError(f"n={n} does not match the AP table (n={table.n})")
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r} with n={n}")


def exists_rainbow_free_coloring(
    table: ApTable,
    n: int,
    r: int,
    *,
    budget: int = DEFAULT_NODE_BUDGET,
    threads: int = 1,
) -> Coloring | None:
    """Lexicographically least canonical rainbow-free exact r-coloring, or None."""
    _validate_search_args(table, n, r)
    found = _search(table, n, r, budget, True, threads)
    if not found:
        return None
    return Coloring(found[0], r)


def enumerate_rainbow_free_colorings(
    table: ApTable,
    n: int,
    r: int,
    *,
    budget: int = DEFAULT_NODE_BUDGET,
    threads: int = 1,
) -> list[Coloring]:
    """All canonical rainbow-free exact r-colorings in lexicographic order.

    Multiply the count by r! for the number of labeled exact r-colorings
    avoiding rainbow k-APs (the relabeling action is free).
    """
    _validate_search_args(table, n, r)
    return [Coloring(c, r) for c in _search(table, n, r, budget, False, threads)]


def compute_aw(
    g: Graph,
    k: int,
    *,
    budget: int = DEFAULT_NODE_BUDGET,
    threads: int = 1,
) -> AwResult:
    """Anti-van der Waerden number aw(g, k) by ascending exhaustive search.

    aw is the least r such that every exact r-coloring contains a rainbow
    k-AP, with aw = n + 1 by convention when every r <= n admits a
    rainbow-free exact r-coloring.  Color counts r = k, k+1, ... are checked
    independently in ascending order (no monotonicity is assumed; the least
    failing r is simply the first one met) and each verdict is recorded.
    """
    if k < 2:
        raise ValueError(f"need k >= 2, got k={k}")
    n = g.n
    if k >= n + 1:
        # No k distinct vertices exist, so no coloring has a rainbow k-AP.
        witness = Coloring(tuple(range(1, n + 1)), n) if n >= 2 else None
        return AwResult(aw=n + 1, k=k, n=n, per_r=(), witness=witness)
    table = enumerate_k_aps(all_pairs_distances(g), k)
    per_r: list[tuple[int, bool]] = []
    aw = n + 1
    witness: Coloring | None = None
    for r in range(k, n + 1):
        c = exists_rainbow_free_coloring(table, n, r, budget=budget, threads=threads)
        per_r.append((r, c is not None))
        if c is None:
            aw = r
            break
        witness = c
    if aw == k:
        # The scan starts at r = k, so the witness color count k - 1 was
        # never searched; any exact (k-1)-coloring is rainbow-free.
        witness = exists_rainbow_free_coloring(
            table, n, k - 1, budget=budget, threads=threads
        )
    if aw - 1 < 2:
        witness = None
    return AwResult(aw=aw, k=k, n=n, per_r=tuple(per_r), witness=witness)


def find_polychromatic_path(g: Graph, coloring: Coloring) -> list[int]:
    """A simple path carrying at least three colors, built deterministically.

    Take the first edge uv with different colors, the vertex w nearest to v
    carrying a third color (ties by id), and a shortest path from v to w;
    prepend u when it is not already on that path.  The result starts at a
    vertex colored c(u) or lies on a geodesic, touches colors c(u), c(v) and
    c(w), and is a simple path because u is adjacent to the path's start.
    """
    if coloring.n != g.n:
        raise ValueError(f"coloring has {coloring.n} vertices, graph has {g.n}")
    if coloring.r < 3:
        raise ValueError(f"need at least 3 colors, got r={coloring.r}")
    cs = coloring.colors
    edge = None
    for u in range(g.n):
        for v in g.adjacency[u]:
            if u < v and cs[u] != cs[v]:
                edge = (u, v)
                break
        if edge:
            break
    if edge is None:
        raise ValueError("no bichromatic edge (coloring cannot be exact)")
    u, v = edge
    dist = [-1] * g.n
    parent = [-1] * g.n
    dist[v] = 0
    queue = [v]
    head = 0
    while head < len(queue):
        x = queue[head]
        head += 1
        for y in g.adjacency[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                parent[y] = x
                queue.append(y)
    banned = {cs[u], cs[v]}
    w = min(
        (x for x in range(g.n) if cs[x] not in banned),
        key=lambda x: (dist[x], x),
    )
    path = [w]
    while path[-1] != v:
        path.append(parent[path[-1]])
    path.reverse()
    if u not in path:
        path.insert(0, u)
    return path
