"""Pattern families, avoidance characterizations, and avoider counting.

Five pattern families generalize the five size-2 Shi tableaux:

    te_k = U^{k+1} D^{k+1}      tg_k = U^k D U D^k     tor_k = U^k D^k U D
    tv_k = U D U^k D^k          tf_k = (UD)^{k+1}

Avoidance of each family has a structural characterization that needs no
poset search (height bound, bounce return bound, valley bound, or a
column-stripped tableau condition), and the number of avoiders of each size
has a closed form built from bounded-height Catalan numbers, ballot numbers
and strip-confined lattice path counts.  Both the characterizations and the
closed counts are cross-checked against the brute-force search oracle in
the test suite.

All counting here is exact integer arithmetic; rational prefactors of the
reflection-principle formula are evaluated as fractions and asserted
integral before use.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .core import (
    DyckPath,
    area_vector,
    catalan,
    enumerate_paths,
    height,
    mirror,
    peaks,
    return_points,
    valleys,
)
from .poset import ResourceLimit, avoids

FAMILY_TAGS = ("te", "tg", "tor", "tv", "tf")

BRUTE_MAX_TABLEAU_SIZE = 12


class UnsupportedFamily(ValueError):
    """A family tag outside te/tg/tor/tv/tf."""


@dataclass(frozen=True)
class PatternFamily:
    """One of the five pattern families, at size k >= 2."""

    tag: str
    k: int

    def __post_init__(self) -> None:
        if self.tag not in FAMILY_TAGS:
            raise UnsupportedFamily(f"unknown family {self.tag!r}")
        if self.k < 2:
            raise ValueError("family size k must be >= 2")

    def path(self) -> DyckPath:
        return pattern(self.tag, self.k)


def pattern(tag: str, k: int) -> DyckPath:
    """The pattern of the given family and size, a path of semilength k + 1."""
    if k < 2:
        raise ValueError("family size k must be >= 2")
    words = {
        "te": "U" * (k + 1) + "D" * (k + 1),
        "tg": "U" * k + "DU" + "D" * k,
        "tor": "U" * k + "D" * k + "UD",
        "tv": "UD" + "U" * k + "D" * k,
        "tf": "UD" * (k + 1),
    }
    if tag not in words:
        raise UnsupportedFamily(f"unknown family {tag!r}")
    return DyckPath(words[tag])


# ---------------------------------------------------------------------------
# Structural avoidance predicates
# ---------------------------------------------------------------------------


def _nonempty_rows(area: tuple[int, ...]) -> int:
    """Rows of the tableau with at least one full box."""
    return sum(1 for i, a in enumerate(area, start=1) if a < i - 1)


def _stripped_height(p: DyckPath) -> int:
    """Height of the tableau left after deleting the all-empty leading columns.

    With l the number of non-empty rows, the first (semilength - l) columns
    are removed; row c + j keeps min(a_{c+j}, j - 1) empty boxes.
    """
    area = area_vector(p)
    ell = _nonempty_rows(area)
    c = len(area) - ell
    best = 0
    for j in range(1, ell + 1):
        best = max(best, min(area[c + j - 1], j - 1))
    return best + 1 if ell else 0


def avoids_characterized(p: DyckPath, tag: str, k: int) -> bool:
    """Family avoidance decided structurally, without any poset search."""
    if tag not in FAMILY_TAGS:
        raise UnsupportedFamily(f"unknown family {tag!r}")
    if k < 2:
        raise ValueError("family size k must be >= 2")
    if tag == "te":
        return height(p) <= k
    if tag == "tf":
        return len(return_points(p)) <= k
    if tag == "tg":
        if k == 2:
            return sum(1 for _, h in peaks(p) if h >= 2) <= 1
        return all(h < k - 1 for _, h in valleys(p))
    if tag == "tv":
        return _stripped_height(p) <= k - 1
    return _stripped_height(mirror(p)) <= k - 1  # tor mirrors tv


def avoids_tv2_shape(p: DyckPath) -> bool:
    """Explicit word shapes of the size-2 tv avoiders.

    A tableau avoids tv iff it is U^{n+1}D^{n+1} or U^r D w D (UD)^{n-r}
    with 1 <= r <= n and w a shuffle of r - 1 D steps with a single U.
    """
    s = p.semilength
    word = p.word
    if word == "U" * s + "D" * s:
        return True
    r = 0
    while r < len(word) and word[r] == "U":
        r += 1
    if not 1 <= r <= s - 1:
        return False
    # shape U^r D w D (UD)^{s-1-r} with |w| = r and exactly one U in w
    shuffle = word[r + 1:2 * r + 1]
    return (shuffle.count("U") == 1 and word[2 * r + 1] == "D"
            and word[2 * r + 2:] == "UD" * (s - 1 - r))


def avoids_tor2_shape(p: DyckPath) -> bool:
    """Mirror image of :func:`avoids_tv2_shape`."""
    return avoids_tv2_shape(mirror(p))


def flatten_high_peaks(p: DyckPath, level: int) -> DyckPath:
    """Replace every excursion above ``level`` (a peak U^m D^m) by (UD)^m.

    Defined for paths with no valley at height >= level, where the steps
    above the cut line form disconnected pyramids; this is the bijection
    sending tg_k avoiders onto te_k avoiders for level = k - 1.
    """
    out = []
    h = 0
    for char in p.word:
        nxt = h + (1 if char == "U" else -1)
        if min(h, nxt) >= level:
            # a step of the pyramid above the cut: each U becomes a UD
            # peak and the matching D disappears
            if char == "U":
                out.append("UD")
        else:
            out.append(char)
        h = nxt
    return DyckPath("".join(out))


# ---------------------------------------------------------------------------
# Counting helpers
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def bounded_height_count(n: int, k: int) -> int:
    """Dyck paths of semilength n with height at most k."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be >= 0")
    if n == 0:
        return 1
    if k == 0:
        return 0
    return sum(bounded_height_count(i, k) * bounded_height_count(n - 1 - i, k - 1)
               for i in range(n))


def ballot_count(n: int, ell: int) -> int:
    """Ballot paths with n U steps and ell D steps never going below the diagonal."""
    if not 0 <= ell <= n:
        raise ValueError("need 0 <= ell <= n")
    value = (n - ell + 1) * math.comb(n + ell, ell)
    assert value % (n + 1) == 0
    return value // (n + 1)


def f_count(m: int, n: int, k: int) -> int:
    """Strip-confined path count by the iterated reflection principle.

    Counts monotone lattice paths from (0, 0) to (m, n) all of whose points
    (x, y) satisfy x <= y <= x + k, as two sums of ballot-type terms over
    reflected endpoints; each term is asserted integral and the loops stop
    as soon as the binomial index leaves [0, m + n].  An endpoint outside
    the strip admits no path at all, which is outside the reflection
    identity's domain, so that case returns 0 directly.
    """
    if m < 0 or n < 0 or k < 0:
        raise ValueError("m, n, k must be >= 0")
    if not 0 <= n - m <= k:
        return 0
    period = k + 2
    total = Fraction(0)
    i = 0
    while m - i * period >= 0:
        term = (Fraction(n - m + 2 * i * period + 1, n + i * period + 1)
                * math.comb(m + n, m - i * period))
        assert term.denominator == 1
        total += term
        i += 1
    i = 1
    while m + i * period - 1 <= m + n:
        term = (Fraction(n - m - 2 * i * period + 1, m + i * period)
                * math.comb(m + n, m + i * period - 1))
        assert term.denominator == 1
        total += term
        i += 1
    assert total.denominator == 1
    return int(total)


def f_count_oracle(m: int, n: int, k: int) -> int:
    """Independent dynamic-programming count of the same strip-confined paths."""
    if m < 0 or n < 0 or k < 0:
        raise ValueError("m, n, k must be >= 0")
    if not 0 <= n - m <= k:
        return 0
    # dp over columns: dp[y] = paths reaching (x, y)
    dp = [0] * (n + 1)
    for y in range(0, min(k, n) + 1):
        dp[y] = 1
    for x in range(1, m + 1):
        new = [0] * (n + 1)
        for y in range(x, min(x + k, n) + 1):
            new[y] = dp[y] + (new[y - 1] if y > x else 0)
        dp = new
    return dp[n]


def zeta(p: DyckPath) -> DyckPath:
    """The zeta map: rebuild the path from its area vector, level by level.

    Reading the area vector once per level j, entries equal to j emit a U
    and entries equal to j - 1 emit a D; concatenating the level words gives
    a path of the same semilength.  The map is a bijection exchanging the
    height bound for the bounce return-point bound.
    """
    area = area_vector(p)
    chunks = []
    for j in range(0, len(area) + 1):
        for a in area:
            if a == j:
                chunks.append("U")
            elif a == j - 1:
                chunks.append("D")
    return DyckPath("".join(chunks))


# ---------------------------------------------------------------------------
# Avoider counting
# ---------------------------------------------------------------------------


def count_avoiders_brute(q: DyckPath, n: int, jobs: int = 1,
                         max_size: int = BRUTE_MAX_TABLEAU_SIZE) -> int:
    """|Av_n(q)| by enumerating all tableaux of size n with the search oracle."""
    if n < 0:
        raise ValueError("tableau size must be >= 0")
    if n > max_size:
        raise ResourceLimit(f"brute avoider counting capped at size {max_size}")
    if n + 1 < q.semilength:
        return catalan(n + 1)
    if jobs > 1:
        return _count_avoiders_parallel(q, n, jobs)
    return sum(1 for p in enumerate_paths(n + 1) if avoids(p, q))


def _shard_prefixes(s: int, depth: int) -> list[str]:
    seen = []
    stack = [("U", 1, 0)]
    while stack:
        prefix, ups, downs = stack.pop()
        if len(prefix) == min(depth, s) or ups == s:
            seen.append(prefix)
            continue
        if ups < s:
            stack.append((prefix + "U", ups + 1, downs))
        if downs < ups:
            stack.append((prefix + "D", ups, downs + 1))
    return sorted(set(seen))


def _count_shard(args: tuple[str, int, str]) -> int:
    q_word, s, prefix = args
    target = DyckPath(q_word)
    return sum(1 for p in enumerate_paths(s, prefix) if avoids(p, target))


def _count_avoiders_parallel(q: DyckPath, n: int, jobs: int) -> int:
    shards = _shard_prefixes(n + 1, 4)
    work = [(q.word, n + 1, prefix) for prefix in shards]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return sum(pool.map(_count_shard, work))


def count_avoiders_closed(tag: str, k: int, n: int) -> int:
    """|Av_n| of the family pattern by the closed formulas.

    te, tf and (for k >= 3) tg avoiders are bounded-height paths; tv and
    tor avoiders split by the number l of non-empty rows into ballot paths
    (l < k), a full-size strip count (l = n) and a convolution of free
    prefixes with strip-confined suffix paths (k <= l < n).  At size two
    tg sits in the tv/tor Wilf class instead, with C(n+1, 2) + 1 avoiders,
    which is what the tv formula evaluates to there.
    """
    if tag not in FAMILY_TAGS:
        raise UnsupportedFamily(f"unknown family {tag!r}")
    if k < 2:
        raise ValueError("family size k must be >= 2")
    if n < 0:
        raise ValueError("tableau size must be >= 0")
    if tag in ("te", "tf") or (tag == "tg" and k >= 3):
        return bounded_height_count(n + 1, k)
    total = sum(ballot_count(n, ell) for ell in range(0, min(k - 1, n) + 1))
    if n >= k:
        total += f_count(n, n, k - 1)
        for ell in range(k, n):
            for h in range(0, k):
                total += (math.comb(n - ell + h - 1, h)
                          * f_count(ell - h, ell, k - 1))
    return total


@dataclass(frozen=True)
class WilfReport:
    """Brute avoider counts of two families side by side."""

    tag_a: str
    tag_b: str
    k: int
    counts_a: tuple[int, ...]
    counts_b: tuple[int, ...]

    @property
    def equal(self) -> bool:
        return self.counts_a == self.counts_b

    @property
    def first_divergence(self) -> int | None:
        for n, (a, b) in enumerate(zip(self.counts_a, self.counts_b)):
            if a != b:
                return n
        return None


def wilf_check(tag_a: str, tag_b: str, k: int, n_max: int) -> WilfReport:
    """Tabulate brute counts of two families for n = 0..n_max."""
    qa, qb = pattern(tag_a, k), pattern(tag_b, k)
    counts_a = tuple(count_avoiders_brute(qa, n) for n in range(n_max + 1))
    counts_b = tuple(count_avoiders_brute(qb, n) for n in range(n_max + 1))
    return WilfReport(tag_a, tag_b, k, counts_a, counts_b)


def sequence_csv(counts: list[int]) -> str:
    """CSV rendering ``n,count`` of an avoider sequence indexed from n = 0."""
    lines = ["n,count"]
    lines += [f"{n},{value}" for n, value in enumerate(counts)]
    return "\n".join(lines) + "\n"


def sequence_oeis(counts: list[int]) -> str:
    """One-line OEIS lookup format: space-separated terms."""
    return " ".join(str(value) for value in counts) + "\n"
