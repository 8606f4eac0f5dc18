"""The pattern order on Dyck paths: bounce deletions, covers, containment.

A bounce deletion removes a pair of steps from a path: ``delta(i, i)``
removes the i-th U step together with the i-th D step, and
``delta(i, i - 1)`` removes the i-th U step together with the (i-1)-st D
step.  A path covers every result of a single bounce deletion; iterating
deletions gives the pattern order (q occurs in p iff q is reachable from p).

Cover enumeration is pure; the containment search keeps a module-level memo
keyed by canonical words that is shared across queries.  All values handled
here are immutable, so the cache races (if any) are benign last-write-wins
on identical results.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator

from .core import (
    DyckPath,
    area_vector,
    catalan,
    enumerate_paths,
    height,
)


class IndexOutOfRange(ValueError):
    """A deletion refers to a step index the path does not have."""


class InvalidDeletion(ValueError):
    """A (i, i-1) deletion broke the prefix property.

    Kept for contract completeness: on words this cannot actually occur
    (between U_i and D_{i-1} every prefix height is at least 2), but results
    are re-validated instead of assumed valid.
    """


class ResourceLimit(RuntimeError):
    """A computation would exceed its configured node budget."""


@dataclass(frozen=True)
class Deletion:
    """A bounce deletion delta_{i,k}: remove U_i and D_k with k in {i-1, i}."""

    i: int
    k: int

    def __post_init__(self) -> None:
        if self.k not in (self.i - 1, self.i):
            raise ValueError(f"k must be i-1 or i, got i={self.i}, k={self.k}")
        if self.k < 1:
            raise ValueError("k must be >= 1 (i = 1 forces k = 1)")


def _step_positions(word: str, letter: str) -> list[int]:
    return [pos for pos, char in enumerate(word) if char == letter]


def bounce_delete(p: DyckPath, d: Deletion) -> DyckPath:
    """Apply one bounce deletion; the result is validated before returning."""
    s = p.semilength
    if s < 2:
        raise IndexOutOfRange(f"cannot delete from a path of semilength {s}")
    if not 1 <= d.i <= s:
        raise IndexOutOfRange(f"U index {d.i} outside 1..{s}")
    ups = _step_positions(p.word, "U")
    downs = _step_positions(p.word, "D")
    drop = {ups[d.i - 1], downs[d.k - 1]}
    word = "".join(c for pos, c in enumerate(p.word) if pos not in drop)
    try:
        return DyckPath(word)
    except ValueError as exc:
        raise InvalidDeletion(f"delta({d.i},{d.k}) of {p.word}") from exc


def deletions(p: DyckPath) -> Iterator[Deletion]:
    """All formally legal deletions of a path of semilength >= 2."""
    for i in range(1, p.semilength + 1):
        if i >= 2:
            yield Deletion(i, i - 1)
        yield Deletion(i, i)


def lower_covers(p: DyckPath) -> frozenset[DyckPath]:
    """Distinct results of all bounce deletions (empty for semilength <= 1)."""
    if p.semilength < 2:
        return frozenset()
    return frozenset(bounce_delete(p, d) for d in deletions(p))


def cover_collisions(p: DyckPath) -> dict[DyckPath, list[Deletion]]:
    """Children that arise from more than one deletion, with the witnesses."""
    hits: dict[DyckPath, list[Deletion]] = {}
    if p.semilength >= 2:
        for d in deletions(p):
            hits.setdefault(bounce_delete(p, d), []).append(d)
    return {child: ds for child, ds in hits.items() if len(ds) > 1}


def _insertions(p: DyckPath) -> Iterator[tuple[DyckPath, int, int]]:
    """All words made by inserting one U and one D, with the new step indices.

    Yields (q, i, k) where the inserted U is the i-th U of q and the inserted
    D is the k-th D of q; invalid words are skipped.
    """
    word = p.word
    n = len(word)
    for u_spot in range(n + 1):
        with_u = word[:u_spot] + "U" + word[u_spot:]
        i = with_u[:u_spot].count("U") + 1
        for d_spot in range(n + 2):
            q_word = with_u[:d_spot] + "D" + with_u[d_spot:]
            k = with_u[:d_spot].count("D") + 1
            try:
                yield DyckPath(q_word), i, k
            except ValueError:
                continue


def upper_covers(p: DyckPath) -> frozenset[DyckPath]:
    """All paths of semilength s + 1 covering p, by bounce insertion.

    A bounce insertion adds a U step (becoming U_i) and a D step placed so
    that it becomes D_{i-1} or D_i, i.e. exactly the insertions undone by a
    bounce deletion.
    """
    return frozenset(q for q, i, k in _insertions(p) if k in (i - 1, i))


def upper_covers_by_search(p: DyckPath) -> frozenset[DyckPath]:
    """Definitional upper covers: every q one size up with p among its lower covers.

    Independent of the insertion-index reasoning in :func:`upper_covers`;
    used to cross-check it.
    """
    candidates = {q for q, _, _ in _insertions(p)}
    return frozenset(q for q in candidates if p in lower_covers(q))


# ---------------------------------------------------------------------------
# Pattern containment
# ---------------------------------------------------------------------------

_containment_cache: dict[tuple[str, str], bool] = {}


def clear_containment_cache() -> None:
    _containment_cache.clear()


def _area_total(p: DyckPath) -> int:
    return sum(area_vector(p))


def contains_pattern(p: DyckPath, q: DyckPath) -> bool:
    """True iff q is reachable from p by repeated bounce deletions.

    Reflexive by convention (zero deletions).  The search goes downward from
    p with memoization on the current path and prunes on semilength, height
    and total area, none of which a bounce deletion can increase.
    """
    target_s = q.semilength
    target_h = height(q)
    target_area = _area_total(q)
    q_word = q.word

    def search(current: DyckPath) -> bool:
        if current.word == q_word:
            return True
        if current.semilength <= target_s:
            return False
        if height(current) < target_h or _area_total(current) < target_area:
            return False
        key = (current.word, q_word)
        cached = _containment_cache.get(key)
        if cached is not None:
            return cached
        result = any(search(child) for child in lower_covers(current))
        _containment_cache[key] = result
        return result

    return search(p)


def avoids(p: DyckPath, q: DyckPath) -> bool:
    return not contains_pattern(p, q)


def contains_pattern_noprune(p: DyckPath, q: DyckPath) -> bool:
    """Reference containment search without pruning (for soundness tests)."""
    seen: set[str] = set()

    def search(current: DyckPath) -> bool:
        if current.word == q.word:
            return True
        if current.word in seen:
            return False
        seen.add(current.word)
        return any(search(child) for child in lower_covers(current))

    return search(p)


# ---------------------------------------------------------------------------
# Hasse diagram
# ---------------------------------------------------------------------------

MAX_NODES_ENV = "SHIPAT_MAX_NODES"
DEFAULT_MAX_NODES = 100_000


@dataclass(frozen=True)
class HasseGraph:
    """Cover graph of the pattern order up to a maximal semilength.

    ``levels[s]`` lists the paths of semilength s in lexicographic order;
    every edge (parent, child) drops the semilength by exactly one.
    """

    levels: tuple[tuple[DyckPath, ...], ...]
    edges: tuple[tuple[DyckPath, DyckPath], ...]

    @property
    def node_count(self) -> int:
        return sum(len(level) for level in self.levels)


def hasse(max_semilength: int, max_nodes: int | None = None) -> HasseGraph:
    """Build the cover graph on all paths of semilength 1..max_semilength."""
    if max_semilength < 1:
        raise ValueError("max_semilength must be >= 1")
    if max_nodes is None:
        max_nodes = int(os.environ.get(MAX_NODES_ENV, DEFAULT_MAX_NODES))
    total = sum(catalan(s) for s in range(1, max_semilength + 1))
    if total > max_nodes:
        raise ResourceLimit(f"{total} nodes exceed the budget of {max_nodes}")
    levels = [tuple(sorted(enumerate_paths(s)))
              for s in range(1, max_semilength + 1)]
    edges = []
    for level in levels[1:]:
        for parent in level:
            for child in sorted(lower_covers(parent)):
                edges.append((parent, child))
    return HasseGraph(tuple(levels), tuple(edges))


def export_dot(graph: HasseGraph) -> str:
    """Deterministic DOT rendering; node labels are the step words."""
    lines = ["digraph shi_pattern_poset {", "  rankdir=BT;"]
    for level in graph.levels:
        for node in level:
            lines.append(f'  "{node.word}";')
    for parent, child in graph.edges:
        lines.append(f'  "{parent.word}" -> "{child.word}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
