"""Search engine tests: frozen results, brute-force oracles, determinism."""

import random

import pytest

from awgraph import (
    BudgetExceededError,
    Coloring,
    all_pairs_distances,
    build_grid,
    build_path,
    build_star,
    canonicalize,
    compute_aw,
    enumerate_k_aps,
    enumerate_rainbow_free_colorings,
    exists_rainbow_free_coloring,
    find_polychromatic_path,
    is_canonical,
)
from prop_helpers import (
    assert_lex_sorted_canonical,
    brute_force_aw,
    check_polychromatic_path,
    grid_flip_horizontal,
    labeled_rainbow_free,
    random_exact_coloring,
    small_corpus,
)

# aw(P_m x P_n, 3), confirmed against the brute-force oracle below.
AW_GRID = {
    (2, 2): 3,
    (2, 3): 4,
    (2, 4): 3,
    (2, 5): 4,
    (2, 6): 3,
    (2, 7): 4,
    (2, 8): 3,
    (3, 3): 3,
    (3, 4): 4,
    (3, 5): 3,
    (4, 4): 4,
}


def _table(g, k=3):
    return enumerate_k_aps(all_pairs_distances(g), k)


def test_exists_one_color_always():
    # A single color can never be rainbow for k >= 3.
    for name, g in small_corpus():
        c = exists_rainbow_free_coloring(_table(g), g.n, 1)
        assert c is not None, name
        assert c.colors == (1,) * g.n, name


def test_exists_none_when_every_coloring_rainbow():
    g, _ = build_grid(2, 2)
    assert exists_rainbow_free_coloring(_table(g), 4, 3) is None


def test_exists_returns_lex_least():
    g, _ = build_grid(2, 3)
    c = exists_rainbow_free_coloring(_table(g), 6, 3)
    assert c == Coloring((1, 1, 2, 3, 1, 1), 3)


def test_enumerate_frozen_grids():
    expected = {
        (2, 3): [(1, 1, 2, 3, 1, 1), (1, 2, 2, 2, 2, 3)],
        (2, 5): [
            (1, 1, 1, 1, 2, 3, 1, 1, 1, 1),
            (1, 2, 2, 2, 2, 2, 2, 2, 2, 3),
        ],
        (2, 7): [
            (1, 1, 1, 1, 1, 1, 2, 3, 1, 1, 1, 1, 1, 1),
            (1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 3),
        ],
    }
    for (m, n), colorings in expected.items():
        g, _ = build_grid(m, n)
        found = enumerate_rainbow_free_colorings(_table(g), g.n, 3)
        assert [c.colors for c in found] == colorings, (m, n)
        assert_lex_sorted_canonical(found)


def test_enumerate_path2_two_colors():
    g = build_path(2)
    found = enumerate_rainbow_free_colorings(_table(g), 2, 2)
    assert [c.colors for c in found] == [(1, 2)]


def test_extremal_pair_swapped_by_flip():
    # The two canonical colorings of P_2 x P_n (n odd) are one coloring up
    # to the column-reversing automorphism: flipping either one and
    # renaming colors by first appearance yields the other.
    for n in (3, 5, 7):
        g, _ = build_grid(2, n)
        a, b = enumerate_rainbow_free_colorings(_table(g), g.n, 3)
        assert canonicalize(grid_flip_horizontal(a.colors, 2, n)) == b
        assert canonicalize(grid_flip_horizontal(b.colors, 2, n)) == a


def test_compute_aw_matches_brute_force():
    for name, g in small_corpus():
        if g.n > 6:
            continue
        for k in (3, 4):
            got = compute_aw(g, k).aw
            want = brute_force_aw(g, k)
            assert got == want, f"{name} k={k}: search {got}, brute force {want}"


def test_frozen_grid_aw_values():
    for (m, n), want in AW_GRID.items():
        g, _ = build_grid(m, n)
        assert compute_aw(g, 3).aw == want, (m, n)


def test_short_circuit_when_k_exceeds_n():
    res = compute_aw(build_path(2), 3)
    assert res.aw == 3
    assert res.per_r == ()
    assert res.witness == Coloring((1, 2), 2)
    res = compute_aw(build_path(4), 5)
    assert res.aw == 5
    assert res.per_r == ()
    assert res.witness == Coloring((1, 2, 3, 4), 4)


def test_witness_none_when_fewer_than_two_colors():
    res = compute_aw(build_path(2), 2)
    assert res.aw == 2
    assert res.witness is None


def test_per_r_shape_and_witness():
    for name, g in small_corpus():
        if g.n > 6 or g.n < 3:
            continue
        res = compute_aw(g, 3)
        rs = [r for r, _ in res.per_r]
        assert rs == list(range(3, 3 + len(rs))), name
        flags = [e for _, e in res.per_r]
        if res.aw <= g.n:
            assert flags == [True] * (len(flags) - 1) + [False], name
            assert rs[-1] == res.aw, name
        else:
            assert all(flags), name
            assert rs[-1] == g.n, name
        if res.aw - 1 < 2:
            assert res.witness is None, name
        else:
            assert res.witness is not None, name
            assert res.witness.r == res.aw - 1, name
            assert res.witness.n == g.n, name


def test_witness_is_lex_least_and_rainbow_free():
    for m, n in ((2, 3), (2, 4), (3, 3), (3, 4)):
        g, _ = build_grid(m, n)
        res = compute_aw(g, 3)
        table = _table(g)
        first = enumerate_rainbow_free_colorings(table, g.n, res.aw - 1)[0]
        assert res.witness == first, (m, n)
        assert res.witness.colors in labeled_rainbow_free(g, 3, res.aw - 1), (m, n)


def test_canonical_count_times_factorial():
    # Canonical enumeration x r! recovers the labeled count, and filtering
    # the labeled colorings down to canonical ones recovers the enumeration.
    factorial = {2: 2, 3: 6}
    for name, g in small_corpus():
        if g.n > 8:
            continue
        table = _table(g)
        for r in (2, 3):
            if r > g.n:
                continue
            canonical = enumerate_rainbow_free_colorings(table, g.n, r)
            labeled = labeled_rainbow_free(g, 3, r)
            assert len(labeled) == len(canonical) * factorial[r], (name, r)
            filtered = [cs for cs in labeled if is_canonical(Coloring(cs, r))]
            assert filtered == [c.colors for c in canonical], (name, r)


def test_budget_exhaustion_raises():
    g, _ = build_grid(2, 3)
    table = _table(g)
    with pytest.raises(BudgetExceededError):
        exists_rainbow_free_coloring(table, 6, 3, budget=2)
    with pytest.raises(BudgetExceededError):
        enumerate_rainbow_free_colorings(table, 6, 3, budget=2)
    with pytest.raises(BudgetExceededError):
        compute_aw(build_grid(3, 4)[0], 3, budget=20)


def test_threads_do_not_change_results():
    g, _ = build_grid(2, 5)
    table = _table(g)
    assert enumerate_rainbow_free_colorings(
        table, g.n, 3, threads=2
    ) == enumerate_rainbow_free_colorings(table, g.n, 3)
    assert exists_rainbow_free_coloring(
        table, g.n, 3, threads=2
    ) == exists_rainbow_free_coloring(table, g.n, 3)
    assert compute_aw(build_grid(3, 4)[0], 3, threads=2) == compute_aw(
        build_grid(3, 4)[0], 3
    )


def test_argument_validation():
    g, _ = build_grid(2, 3)
    table = _table(g)
    for bad_r in (0, -1, 7):
        with pytest.raises(ValueError):
            exists_rainbow_free_coloring(table, 6, bad_r)
    with pytest.raises(ValueError):
        enumerate_rainbow_free_colorings(table, 5, 3)
    with pytest.raises(ValueError):
        compute_aw(g, 1)


def test_polychromatic_path_frozen():
    star = build_star(4)
    path = find_polychromatic_path(star, Coloring((1, 2, 3, 3), 3))
    assert path == [1, 0, 2]
    p3 = build_path(3)
    assert find_polychromatic_path(p3, Coloring((1, 2, 3), 3)) == [0, 1, 2]


def test_polychromatic_path_on_random_colorings():
    rng = random.Random(43)
    for name, g in small_corpus():
        for r in (3, 4):
            if r > g.n:
                continue
            for _ in range(5):
                coloring = random_exact_coloring(g.n, r, rng)
                path = find_polychromatic_path(g, coloring)
                assert check_polychromatic_path(g, coloring, path) == [], (
                    name,
                    coloring.colors,
                    path,
                )


def test_polychromatic_path_validation():
    g = build_path(4)
    with pytest.raises(ValueError):
        find_polychromatic_path(g, Coloring((1, 2, 1, 2), 2))
    with pytest.raises(ValueError):
        find_polychromatic_path(g, Coloring((1, 2, 3), 3))
