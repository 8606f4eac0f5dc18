"""Dyck paths, Shi tableaux, and the conversions and statistics between them.

A Dyck path of semilength ``s`` is a word over ``{U, D}`` with ``s`` letters
of each kind in which every prefix contains at least as many ``U`` as ``D``.
Equivalently it is a monotone lattice path from ``(0, 0)`` to ``(s, s)``
(``U`` = north, ``D`` = east) that stays weakly above the diagonal.

A Shi tableau of size ``n`` is a binary filling of the staircase diagram with
rows of ``0, 1, ..., n`` boxes (labelled bottom to top) in which every full
cell has all cells above it and to its left full as well.  Shi tableaux of
size ``n`` are in bijection with Dyck paths of semilength ``n + 1``; we store
a tableau through its area vector, the per-row counts of empty boxes.

Conventions used throughout the package:

* step indices, row indices and column indices are 1-based;
* the word is the canonical representation; area vectors, run forms and
  2 x s standard tableaux are derived views;
* the empty path (semilength 0) is legal and acts as the identity for
  concatenation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence


class MalformedWord(ValueError):
    """A path word contains a character outside the accepted alphabets."""

    def __init__(self, index: int, char: str):
        self.index = index
        self.char = char
        super().__init__(f"unexpected character {char!r} at index {index}")


class NotBalanced(ValueError):
    """A path word has unequal numbers of U and D steps."""

    def __init__(self, index: int, ups: int, downs: int):
        self.index = index
        super().__init__(f"word of length {index} has {ups} U vs {downs} D steps")


class PrefixViolation(ValueError):
    """Some prefix of a path word contains more D than U steps."""

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"prefix ending at index {index} has more D than U steps")


def _validate_word(word: str) -> None:
    ups = 0
    downs = 0
    for pos, char in enumerate(word, start=1):
        if char == "U":
            ups += 1
        elif char == "D":
            downs += 1
            if downs > ups:
                raise PrefixViolation(pos)
        else:
            raise MalformedWord(pos, char)
    if ups != downs:
        raise NotBalanced(len(word), ups, downs)


@dataclass(frozen=True, order=True)
class DyckPath:
    """A Dyck path, stored as its step word over {U, D}.

    Instances are immutable values; equality and (lexicographic) order are
    inherited from the word, so paths can live in sets and sorted containers.
    """

    word: str = ""

    def __post_init__(self) -> None:
        _validate_word(self.word)

    @property
    def semilength(self) -> int:
        return len(self.word) // 2

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return self.word if self.word else "(empty)"

    def concat(self, other: "DyckPath") -> "DyckPath":
        return DyckPath(self.word + other.word)

    def heights(self) -> tuple[int, ...]:
        """Prefix heights h_1..h_2s, where h_t = #U - #D after t steps."""
        out = []
        h = 0
        for char in self.word:
            h += 1 if char == "U" else -1
            out.append(h)
        return tuple(out)


EMPTY_PATH = DyckPath("")

_ALIASES = {"U": "U", "1": "U", "(": "U", "D": "D", "0": "D", ")": "D"}


def parse_path(text: str) -> DyckPath:
    """Parse a path word; besides U/D the aliases 1/0 and (/) are accepted.

    Raises :class:`MalformedWord`, :class:`NotBalanced` or
    :class:`PrefixViolation`, each carrying the first offending 1-based index
    (for :class:`NotBalanced` the index is the word length).
    """
    chars = []
    for pos, char in enumerate(text.strip(), start=1):
        norm = _ALIASES.get(char)
        if norm is None:
            raise MalformedWord(pos, char)
        chars.append(norm)
    return DyckPath("".join(chars))


def catalan(n: int) -> int:
    """The n-th Catalan number, |D_n|."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return math.comb(2 * n, n) // (n + 1)


def enumerate_paths(s: int, prefix: str = "") -> Iterator[DyckPath]:
    """Yield every Dyck path of semilength ``s`` once, in lexicographic order.

    ``prefix`` restricts the stream to paths starting with the given word,
    which lets callers split the enumeration for parallel consumption.
    """
    if s < 0:
        raise ValueError("semilength must be >= 0")
    ups = prefix.count("U")
    downs = len(prefix) - ups
    if set(prefix) - {"U", "D"} or ups > s or downs > ups:
        raise ValueError(f"not a legal Dyck prefix for semilength {s}: {prefix!r}")

    word = list(prefix)

    def extend(ups: int, downs: int) -> Iterator[DyckPath]:
        if ups == s and downs == s:
            yield DyckPath("".join(word))
            return
        # 'D' < 'U' in ASCII, so trying D first yields ascending order.
        if downs < ups:
            word.append("D")
            yield from extend(ups, downs + 1)
            word.pop()
        if ups < s:
            word.append("U")
            yield from extend(ups + 1, downs)
            word.pop()

    return extend(ups, downs)


def mirror(p: DyckPath) -> DyckPath:
    """Reverse-complement: read the word backwards swapping U and D."""
    swapped = {"U": "D", "D": "U"}
    return DyckPath("".join(swapped[c] for c in reversed(p.word)))


# ---------------------------------------------------------------------------
# Shi tableaux (area vectors)
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class ShiTableau:
    """A Shi tableau of size n, stored as its area vector a_1..a_{n+1}.

    ``area[i-1]`` is the number of empty boxes in row i; row i has i - 1
    boxes, full cells are the leftmost ones of each row.
    """

    area: tuple[int, ...]

    def __post_init__(self) -> None:
        area = self.area
        if len(area) == 0:
            raise ValueError("area vector must have at least one entry")
        if area[0] != 0:
            raise ValueError("a_1 must be 0")
        for i, value in enumerate(area, start=1):
            if not 0 <= value <= i - 1:
                raise ValueError(f"a_{i}={value} outside [0, {i - 1}]")
        for i in range(1, len(area)):
            if area[i] > area[i - 1] + 1:
                raise ValueError(f"a_{i + 1} exceeds a_{i} + 1")

    @property
    def size(self) -> int:
        return len(self.area) - 1

    def is_full(self, row: int, col: int) -> bool:
        """Whether cell (row, col) is full; the cell must exist (col < row)."""
        if not (1 <= row <= self.size + 1 and 1 <= col <= row - 1):
            raise ValueError(f"no cell at row {row}, column {col}")
        return col <= (row - 1) - self.area[row - 1]


def area_vector(p: DyckPath) -> tuple[int, ...]:
    """Area vector of a path: a_i = (i - 1) - #D before the i-th U step."""
    out = []
    downs = 0
    i = 0
    for char in p.word:
        if char == "U":
            i += 1
            out.append(i - 1 - downs)
        else:
            downs += 1
    return tuple(out)


def path_to_tableau(p: DyckPath) -> ShiTableau:
    """The Shi tableau of size s - 1 encoding a path of semilength s >= 1."""
    if p.semilength == 0:
        raise ValueError("the empty path has no Shi tableau")
    return ShiTableau(area_vector(p))


def tableau_to_path(t: ShiTableau) -> DyckPath:
    """Inverse of :func:`path_to_tableau`."""
    chunks = []
    area = t.area
    for i, a in enumerate(area):
        # a_i + 1 - a_{i+1} down-steps separate U_i from U_{i+1}.
        chunks.append("U")
        gap = a + 1 - area[i + 1] if i + 1 < len(area) else a + 1
        chunks.append("D" * gap)
    return DyckPath("".join(chunks))


def region_inequalities(t: ShiTableau) -> list[str]:
    """Defining inequalities of the dominant Shi region encoded by ``t``.

    A tableau of size n describes a region of the Shi arrangement on the
    n + 1 variables x1..x{n+1}: the pair (i, j) with i < j reads cell
    (N - i + 1, N - j + 1), N = n + 1, and contributes ``xi-xj>1`` if the
    cell is full and ``0<xi-xj<1`` if it is empty.  Cells are emitted column
    by column, top row first, which is the order used when describing
    regions of Shi(3).
    """
    n = t.size
    if n < 1:
        raise ValueError("region emission needs a tableau of size >= 1")
    big_n = n + 1
    lines = []
    for col in range(1, big_n):
        for row in range(big_n, col, -1):
            i = big_n - row + 1
            j = big_n - col + 1
            if t.is_full(row, col):
                lines.append(f"x{i}-x{j}>1")
            else:
                lines.append(f"0<x{i}-x{j}<1")
    return lines


# ---------------------------------------------------------------------------
# 2 x s standard Young tableaux
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StandardTableau2:
    """A 2 x s standard Young tableau: U-step and D-step positions."""

    top: tuple[int, ...]
    bottom: tuple[int, ...]

    def __post_init__(self) -> None:
        top, bottom = self.top, self.bottom
        if len(top) != len(bottom):
            raise ValueError("rows must have equal length")
        size = 2 * len(top)
        if sorted(top + bottom) != list(range(1, size + 1)):
            raise ValueError(f"entries must be a permutation of 1..{size}")
        if any(a >= b for a, b in zip(top, top[1:])):
            raise ValueError("top row must be strictly increasing")
        if any(a >= b for a, b in zip(bottom, bottom[1:])):
            raise ValueError("bottom row must be strictly increasing")
        if any(a >= b for a, b in zip(top, bottom)):
            raise ValueError("columns must be strictly increasing")


def path_to_syt(p: DyckPath) -> StandardTableau2:
    """Register U-step positions in the top row, D-step positions below."""
    top = tuple(i for i, c in enumerate(p.word, start=1) if c == "U")
    bottom = tuple(i for i, c in enumerate(p.word, start=1) if c == "D")
    return StandardTableau2(top, bottom)


def syt_to_path(s: StandardTableau2) -> DyckPath:
    chars = ["D"] * (2 * len(s.top))
    for pos in s.top:
        chars[pos - 1] = "U"
    return DyckPath("".join(chars))


# ---------------------------------------------------------------------------
# Path statistics
# ---------------------------------------------------------------------------


def height(p: DyckPath) -> int:
    """Maximal prefix height of the path (0 for the empty path)."""
    best = 0
    h = 0
    for char in p.word:
        h += 1 if char == "U" else -1
        if h > best:
            best = h
    return best


def peaks(p: DyckPath) -> list[tuple[int, int]]:
    """Occurrences of UD as (index of the U step, height at the peak)."""
    out = []
    h = 0
    for t, char in enumerate(p.word, start=1):
        h += 1 if char == "U" else -1
        if char == "U" and t < len(p.word) and p.word[t] == "D":
            out.append((t, h))
    return out


def valleys(p: DyckPath) -> list[tuple[int, int]]:
    """Occurrences of DU as (index of the D step, height at the valley)."""
    out = []
    h = 0
    for t, char in enumerate(p.word, start=1):
        h += 1 if char == "U" else -1
        if char == "D" and t < len(p.word) and p.word[t] == "U":
            out.append((t, h))
    return out


def _down_step_heights(p: DyckPath) -> list[int]:
    """h_j = number of U steps before the j-th D step, for j = 1..s."""
    out = []
    ups = 0
    for char in p.word:
        if char == "U":
            ups += 1
        else:
            out.append(ups)
    return out


def return_points(p: DyckPath) -> list[int]:
    """Diagonal touch points of the bounce path, endpoint included.

    The values are the x-coordinates (equal to the y-coordinates) of the
    points where the bounce path comes back to the diagonal; the origin is
    not listed.
    """
    h = _down_step_heights(p)
    points = []
    j = 0
    while j < p.semilength:
        j = h[j]
        points.append(j)
    return points


def bounce_path(p: DyckPath) -> DyckPath:
    """The bounce path: travel up along the path, drop to the diagonal, repeat."""
    h = _down_step_heights(p)
    chunks = []
    j = 0
    while j < p.semilength:
        step = h[j] - j
        chunks.append("U" * step + "D" * step)
        j = h[j]
    return DyckPath("".join(chunks))


# ---------------------------------------------------------------------------
# Run form and decompositions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RunForm:
    """Alternating run lengths (a_1, b_1, ..., a_l, b_l) of a path."""

    runs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.runs) % 2:
            raise ValueError("runs must alternate ascent/descent pairs")
        if any(r < 1 for r in self.runs):
            raise ValueError("run lengths must be >= 1")

    @property
    def ascents(self) -> tuple[int, ...]:
        return self.runs[0::2]

    @property
    def descents(self) -> tuple[int, ...]:
        return self.runs[1::2]

    def to_path(self) -> DyckPath:
        chunks = []
        for a, b in zip(self.ascents, self.descents):
            chunks.append("U" * a + "D" * b)
        return DyckPath("".join(chunks))


def run_form(p: DyckPath) -> RunForm:
    runs = []
    for char in p.word:
        if runs and (char == "U") == (len(runs) % 2 == 1):
            runs[-1] += 1
        else:
            runs.append(1)
    return RunForm(tuple(runs))


def is_irreducible(p: DyckPath) -> bool:
    """True iff the path touches the diagonal only at its endpoints."""
    if p.semilength == 0:
        return False
    heights = p.heights()
    return all(h >= 1 for h in heights[:-1])


def is_strongly_irreducible(p: DyckPath) -> bool:
    """True iff only the first and last step touch the shifted diagonal.

    In height terms: h_t >= 2 for 2 <= t <= 2s - 2 (the endpoints of the
    first and last step are allowed to sit at height 1).
    """
    if p.semilength == 0:
        return False
    heights = p.heights()
    return all(h >= 2 for h in heights[1:-2])


class NotIrreducible(ValueError):
    """Strong decomposition was requested for a reducible path."""


IRREDUCIBLE = "irreducible"
STRONGLY_IRREDUCIBLE = "strongly-irreducible"
CONNECTING = "connecting"


@dataclass(frozen=True)
class Part:
    """One component of a decomposition.

    For connecting parts ``peak_count`` is the number of peaks in the run
    (0 is legal: an empty connector between two adjacent irreducible
    components is materialized so that it can be counted).
    """

    component: DyckPath
    kind: str
    peak_count: int | None = None


@dataclass(frozen=True)
class Decomposition:
    """An ordered split of a path into components.

    ``level`` is "irreducible" (ground-level split) or
    "strongly-irreducible" (split of the interior of an irreducible path;
    reassembly wraps the concatenated parts in U...D).  At the strong level
    a part of kind "strongly-irreducible" holds the interior component
    sigma, meaning U sigma D is the strongly irreducible factor.
    """

    level: str
    parts: tuple[Part, ...]

    def reassemble(self) -> DyckPath:
        body = "".join(part.component.word for part in self.parts)
        if self.level == STRONGLY_IRREDUCIBLE:
            return DyckPath("U" + body + "D")
        return DyckPath(body)

    @property
    def k_prime(self) -> int:
        """Number of connecting parts (empty connectors included)."""
        return sum(1 for part in self.parts if part.kind == CONNECTING)


def _ground_factors(p: DyckPath) -> list[DyckPath]:
    """Split at every return to the diagonal."""
    factors = []
    h = 0
    start = 0
    for t, char in enumerate(p.word, start=1):
        h += 1 if char == "U" else -1
        if h == 0:
            factors.append(DyckPath(p.word[start:t]))
            start = t
    return factors


def _group_factors(factors: Sequence[DyckPath], connector_kind: str,
                   materialize_empty: bool) -> tuple[Part, ...]:
    parts: list[Part] = []
    peak_run = 0
    for factor in factors:
        if factor.word == "UD":
            peak_run += 1
            continue
        if peak_run or (materialize_empty and parts):
            parts.append(Part(DyckPath("UD" * peak_run), CONNECTING, peak_run))
        peak_run = 0
        parts.append(Part(factor, connector_kind))
    if peak_run:
        parts.append(Part(DyckPath("UD" * peak_run), CONNECTING, peak_run))
    return tuple(parts)


def irreducible_decomposition(p: DyckPath) -> Decomposition:
    """Split into irreducible components and runs of height-1 peaks.

    Consecutive UD factors are grouped into one connecting part; an empty
    connecting part is materialized between two adjacent irreducible
    components so that connectors can be counted uniformly.
    """
    return Decomposition(IRREDUCIBLE, _group_factors(
        _ground_factors(p), IRREDUCIBLE, materialize_empty=True))


def strongly_irreducible_decomposition(p: DyckPath) -> Decomposition:
    """Split the interior of an irreducible path.

    Each part is either an interior component sigma with U sigma D strongly
    irreducible, or a nonempty run of height-2 peaks.  Raises
    :class:`NotIrreducible` on reducible input.
    """
    if not is_irreducible(p):
        raise NotIrreducible(f"{p.word or '(empty)'} is not irreducible")
    interior = DyckPath(p.word[1:-1])
    return Decomposition(STRONGLY_IRREDUCIBLE, _group_factors(
        _ground_factors(interior), STRONGLY_IRREDUCIBLE, materialize_empty=False))
