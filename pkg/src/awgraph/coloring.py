"""Exact vertex colorings and their plain-text file format.

An exact r-coloring assigns every vertex one of the colors 1..r and uses all
of them.  The canonical representative of a relabeling class is the
restricted-growth form: color 1 on vertex 0, and each later entry at most one
above the maximum seen so far.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AwgraphError


class ColoringError(AwgraphError, ValueError):
    """Invalid coloring (bad color values or missing colors)."""


class ColoringFormatError(ColoringError):
    """Malformed coloring file text."""


@dataclass(frozen=True)
class Coloring:
    """Exact (surjective) r-coloring of vertices 0..n-1 with colors 1..r."""

    colors: tuple[int, ...]
    r: int

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ColoringError(f"need r >= 1, got r={self.r}")
        if not self.colors:
            raise ColoringError("coloring of an empty vertex set")
        used = set()
        for v, c in enumerate(self.colors):
            if not 1 <= c <= self.r:
                raise ColoringError(f"color {c} at vertex {v} outside 1..{self.r}")
            used.add(c)
        if len(used) != self.r:
            missing = sorted(set(range(1, self.r + 1)) - used)
            raise ColoringError(f"not exact: colors {missing} unused")

    @property
    def n(self) -> int:
        return len(self.colors)


def is_canonical(coloring: Coloring) -> bool:
    """True iff the coloring is in restricted-growth form."""
    top = 0
    for c in coloring.colors:
        if c > top + 1:
            return False
        if c > top:
            top = c
    return True


def canonicalize(colors) -> Coloring:
    """Relabel colors by first appearance, yielding the canonical class member."""
    relabel: dict[int, int] = {}
    out = []
    for c in colors:
        if c not in relabel:
            relabel[c] = len(relabel) + 1
        out.append(relabel[c])
    return Coloring(tuple(out), len(relabel))


def colors_used(coloring: Coloring, vertices) -> set[int]:
    """Set of colors appearing on the given vertices."""
    cs = coloring.colors
    n = coloring.n
    out = set()
    for v in vertices:
        if not 0 <= v < n:
            raise ColoringError(f"vertex {v} outside 0..{n - 1}")
        out.add(cs[v])
    return out


def parse_coloring(text: str) -> Coloring:
    """Parse the coloring file format: "<n> <r>" then n colors in 1..r.

    Surjectivity is validated on load; a non-exact coloring is rejected.
    """
    lines = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if len(lines) != 2:
        raise ColoringFormatError(
            f"expected header and one color line, got {len(lines)} lines"
        )
    head = lines[0].split()
    if len(head) != 2:
        raise ColoringFormatError(f"header must be '<n> <r>', got {lines[0]!r}")
    try:
        n, r = int(head[0]), int(head[1])
    except ValueError:
        raise ColoringFormatError(
            f"header must be two integers, got {lines[0]!r}"
        ) from None
    if n < 1 or r < 1:
        raise ColoringFormatError(f"need n >= 1 and r >= 1, got n={n} r={r}")
    parts = lines[1].split()
    if len(parts) != n:
        raise ColoringFormatError(f"expected {n} colors, found {len(parts)}")
    try:
        values = tuple(int(p) for p in parts)
    except ValueError:
        raise ColoringFormatError("colors must be integers") from None
    for v, c in enumerate(values):
        if not 1 <= c <= r:
            raise ColoringFormatError(
                f"color {c} at vertex {v} outside 1..{r}"
            )
    try:
        return Coloring(values, r)
    except ColoringError as exc:
        raise ColoringFormatError(str(exc)) from None


def coloring_to_text(coloring: Coloring) -> str:
    """Inverse of parse_coloring."""
    return (
        f"{coloring.n} {coloring.r}\n"
        + " ".join(str(c) for c in coloring.colors)
        + "\n"
    )
