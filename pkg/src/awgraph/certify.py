"""Plain-text certificates for anti-van der Waerden results, and their checker.

A certificate packages a claimed aw value with the evidence a search
produced: the graph, k, the per-r existence flags, and the extremal witness
coloring.  The checker re-derives distances and the AP table from the
embedded graph text and validates the witness on its own; it never runs a
coloring search.  Nonexistence flags ("no rainbow-free exact r-coloring")
are attestations of an exhausted search and are checked for arithmetic
consistency with the claimed value, not re-proved.

Format: five sections in fixed order, separated by blank lines, each a
header line followed by its content:

    GRAPH        graph file text (embedded verbatim)
    K            one integer
    CLAIMED_AW   one integer
    WITNESS      coloring file text, or the single word "none"
    PER_R        one line "<r> true|false" per examined color count
"""

from __future__ import annotations

from dataclasses import dataclass

from .aps import enumerate_k_aps, find_rainbow_ap
from .coloring import Coloring, ColoringError, coloring_to_text
from .errors import AwgraphError
from .graphs import Graph, GraphError, all_pairs_distances, graph_to_text, parse_graph
from .search import AwResult

VERDICT_WITNESS_VALID = "witness-valid"
VERDICT_WITNESS_INVALID = "witness-invalid"
VERDICT_INCONSISTENT = "inconsistent"
VERDICT_MALFORMED = "malformed"

_SECTIONS = ("GRAPH", "K", "CLAIMED_AW", "WITNESS", "PER_R")


class CertificateFormatError(AwgraphError, ValueError):
    """Certificate text does not follow the five-section format."""


@dataclass(frozen=True)
class Certificate:
    """Parsed certificate contents."""

    graph: Graph
    k: int
    claimed_aw: int
    witness: Coloring | None
    per_r: tuple[tuple[int, bool], ...]


@dataclass(frozen=True)
class VerificationReport:
    """Verdict plus human-readable notes on what was and was not checked."""

    verdict: str
    notes: tuple[str, ...]


# ======================================================================
# Emission
# ======================================================================


def certificate_from_result(result: AwResult, g: Graph) -> Certificate:
    if result.n != g.n:
        raise ValueError(
            f"result is for {result.n} vertices but the graph has {g.n}"
        )
    return Certificate(
        graph=g,
        k=result.k,
        claimed_aw=result.aw,
        witness=result.witness,
        per_r=result.per_r,
    )


def emit_certificate(result: AwResult, g: Graph) -> str:
    """Render a compute_aw outcome in the five-section certificate format."""
    cert = certificate_from_result(result, g)
    parts = [
        "GRAPH\n" + graph_to_text(cert.graph).rstrip("\n"),
        f"K\n{cert.k}",
        f"CLAIMED_AW\n{cert.claimed_aw}",
        "WITNESS\n"
        + (
            coloring_to_text(cert.witness).rstrip("\n")
            if cert.witness is not None
            else "none"
        ),
        "PER_R\n"
        + (
            "\n".join(
                f"{r} {'true' if flag else 'false'}" for r, flag in cert.per_r
            )
            if cert.per_r
            else "none"
        ),
    ]
    return "\n\n".join(parts) + "\n"


# ======================================================================
# Parsing
# ======================================================================


def _split_sections(text: str) -> dict[str, list[str]]:
    blocks: list[list[str]] = []
    current: list[str] = []
    for line in text.splitlines():
        if line.strip():
            current.append(line.rstrip())
        elif current:
            blocks.append(current)
            current = []
    if current:
        blocks.append(current)
    if len(blocks) != len(_SECTIONS):
        raise CertificateFormatError(
            f"expected {len(_SECTIONS)} sections {_SECTIONS}, found {len(blocks)}"
        )
    out: dict[str, list[str]] = {}
    for block, name in zip(blocks, _SECTIONS):
        if block[0].strip() != name:
            raise CertificateFormatError(
                f"expected section {name!r}, found {block[0]!r}"
            )
        if len(block) < 2:
            raise CertificateFormatError(f"section {name} has no content")
        out[name] = block[1:]
    return out


def _single_int(lines: list[str], name: str) -> int:
    if len(lines) != 1:
        raise CertificateFormatError(f"section {name} must be a single line")
    try:
        return int(lines[0].strip())
    except ValueError:
        raise CertificateFormatError(
            f"section {name} must be an integer, got {lines[0]!r}"
        ) from None


def _parse_witness_lines(lines: list[str]) -> tuple[tuple[int, ...], int] | None:
    """Structural parse of a WITNESS section: colors plus declared r, or None.

    Surjectivity is deliberately not enforced here; exactness is a semantic
    check with its own verdict.
    """
    if len(lines) == 1 and lines[0].strip() == "none":
        return None
    if len(lines) != 2:
        raise CertificateFormatError(
            "WITNESS must be 'none' or the two-line coloring format"
        )
    head = lines[0].split()
    if len(head) != 2:
        raise CertificateFormatError(
            f"witness header must be '<n> <r>', got {lines[0]!r}"
        )
    try:
        n, r = int(head[0]), int(head[1])
    except ValueError:
        raise CertificateFormatError(
            f"witness header must be two integers, got {lines[0]!r}"
        ) from None
    if n < 1 or r < 1:
        raise CertificateFormatError(f"witness needs n >= 1 and r >= 1, got {lines[0]!r}")
    parts = lines[1].split()
    if len(parts) != n:
        raise CertificateFormatError(
            f"witness declares {n} vertices but lists {len(parts)} colors"
        )
    try:
        values = tuple(int(p) for p in parts)
    except ValueError:
        raise CertificateFormatError("witness colors must be integers") from None
    for v, c in enumerate(values):
        if not 1 <= c <= r:
            raise CertificateFormatError(
                f"witness color {c} at vertex {v} outside 1..{r}"
            )
    return values, r


def _parse_per_r_lines(lines: list[str]) -> tuple[tuple[int, bool], ...]:
    if len(lines) == 1 and lines[0].strip() == "none":
        return ()
    out = []
    for ln in lines:
        parts = ln.split()
        if len(parts) != 2 or parts[1] not in ("true", "false"):
            raise CertificateFormatError(
                f"PER_R line must be '<r> true|false', got {ln!r}"
            )
        try:
            r = int(parts[0])
        except ValueError:
            raise CertificateFormatError(
                f"PER_R line must start with an integer, got {ln!r}"
            ) from None
        out.append((r, parts[1] == "true"))
    return tuple(out)


def parse_certificate(text: str) -> Certificate:
    """Strict parse; raises CertificateFormatError on any structural defect.

    The witness, when present, must be a well-formed exact coloring (this is
    the constructor used for round-tripping emitted certificates; the
    tolerant classifier is verify_certificate).
    """
    sections = _split_sections(text)
    try:
        graph = parse_graph("\n".join(sections["GRAPH"]))
    except GraphError as exc:
        raise CertificateFormatError(f"bad GRAPH section: {exc}") from None
    k = _single_int(sections["K"], "K")
    if k < 2:
        raise CertificateFormatError(f"k must be >= 2, got {k}")
    claimed = _single_int(sections["CLAIMED_AW"], "CLAIMED_AW")
    raw = _parse_witness_lines(sections["WITNESS"])
    witness = None
    if raw is not None:
        values, r = raw
        try:
            witness = Coloring(values, r)
        except ColoringError as exc:
            raise CertificateFormatError(f"bad WITNESS section: {exc}") from None
    return Certificate(graph, k, claimed, witness, _parse_per_r_lines(sections["PER_R"]))


# ======================================================================
# Verification
# ======================================================================


def _consistency_notes(k: int, n: int, claimed: int, per_r) -> list[str]:
    """Arithmetic checks of the claimed value against the attested flags."""
    problems = []
    if not k <= claimed <= n + 1:
        problems.append(f"claimed aw={claimed} outside the bounds k={k}..n+1={n + 1}")
        return problems
    if not per_r:
        if k <= n:
            problems.append(
                f"no per-r attestations although r = {k}..{n} must be examined"
            )
        elif claimed != n + 1:
            problems.append(
                f"k={k} exceeds n={n}, so claimed aw must be {n + 1}, got {claimed}"
            )
        return problems
    rs = [r for r, _ in per_r]
    if rs[0] != k or rs != list(range(k, k + len(rs))):
        problems.append(
            f"per-r attestations must cover consecutive r starting at k={k}, got {rs}"
        )
        return problems
    if rs[-1] > n:
        problems.append(f"per-r attestation for r={rs[-1]} exceeds n={n}")
        return problems
    false_rs = [r for r, flag in per_r if not flag]
    if false_rs:
        if claimed != false_rs[0]:
            problems.append(
                f"claimed aw={claimed} but the least attested-failing r is {false_rs[0]}"
            )
    else:
        if rs[-1] != n:
            problems.append(
                f"all attested r admit colorings but the range stops at {rs[-1]} < n={n}"
            )
        elif claimed != n + 1:
            problems.append(
                f"every r = {k}..{n} attested as admitting a coloring, so aw must be {n + 1}, got {claimed}"
            )
    return problems


def verify_certificate(text: str) -> VerificationReport:
    """Classify certificate text: witness-valid, witness-invalid, inconsistent or malformed.

    Rebuilds distances and the AP table from the embedded graph and checks
    the witness (dimension, color count claimed_aw - 1, exactness,
    rainbow-freeness) against them.  Nonexistence attestations are only
    checked arithmetically; a "valid" verdict therefore certifies the lower
    bound and the internal consistency, not the exhaustive search itself.
    """
    try:
        sections = _split_sections(text)
        graph = parse_graph("\n".join(sections["GRAPH"]))
        k = _single_int(sections["K"], "K")
        if k < 2:
            raise CertificateFormatError(f"k must be >= 2, got {k}")
        claimed = _single_int(sections["CLAIMED_AW"], "CLAIMED_AW")
        raw_witness = _parse_witness_lines(sections["WITNESS"])
        per_r = _parse_per_r_lines(sections["PER_R"])
    except (CertificateFormatError, GraphError) as exc:
        return VerificationReport(VERDICT_MALFORMED, (str(exc),))

    n = graph.n
    notes = [f"graph: n={n} m={graph.m}, k={k}, claimed aw={claimed}"]
    problems = _consistency_notes(k, n, claimed, per_r)
    if problems:
        return VerificationReport(VERDICT_INCONSISTENT, tuple(notes + problems))
    if any(not flag for _, flag in per_r):
        notes.append(
            "nonexistence flags are attestations of an exhausted search, not re-proved"
        )

    if raw_witness is None:
        if claimed - 1 >= 2:
            notes.append(
                f"witness absent: lower bound aw > {claimed - 1} attested, not checked"
            )
        else:
            notes.append("witness absent: a 1-coloring certifies nothing to check")
        return VerificationReport(VERDICT_WITNESS_VALID, tuple(notes))

    values, r = raw_witness
    if len(values) != n:
        return VerificationReport(
            VERDICT_WITNESS_INVALID,
            tuple(notes + [f"witness colors {len(values)} vertices, graph has {n}"]),
        )
    if r != claimed - 1:
        return VerificationReport(
            VERDICT_WITNESS_INVALID,
            tuple(notes + [f"witness declares r={r}, expected claimed aw - 1 = {claimed - 1}"]),
        )
    missing = sorted(set(range(1, r + 1)) - set(values))
    if missing:
        return VerificationReport(
            VERDICT_WITNESS_INVALID,
            tuple(notes + [f"witness is not exact: colors {missing} unused"]),
        )
    table = enumerate_k_aps(all_pairs_distances(graph), k)
    rainbow = find_rainbow_ap(table, values)
    if rainbow is not None:
        return VerificationReport(
            VERDICT_WITNESS_INVALID,
            tuple(
                notes
                + [
                    f"witness has a rainbow {k}-AP: vertices {list(rainbow.vertices)}"
                    f" (ordering {list(rainbow.witness)}, d={rainbow.d})"
                ]
            ),
        )
    notes.append(
        f"witness checked: exact {r}-coloring, rainbow-free against all {len(table.aps)} {k}-APs"
    )
    return VerificationReport(VERDICT_WITNESS_VALID, tuple(notes))
