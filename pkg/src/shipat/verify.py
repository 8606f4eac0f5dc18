"""Oracle-equivalence suites: every closed formula against its brute twin.

Each check walks an exhaustive range (bounded by ``n_max``), compares an
analytic result with an independent enumeration, and reports one line.  The
CLI ``verify`` subcommand runs these and exits nonzero if anything fails.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import avoidance, covers, poset
from .core import (
    DyckPath,
    ShiTableau,
    area_vector,
    bounce_path,
    catalan,
    enumerate_paths,
    height,
    irreducible_decomposition,
    is_irreducible,
    mirror,
    path_to_syt,
    path_to_tableau,
    peaks,
    return_points,
    run_form,
    syt_to_path,
    tableau_to_path,
    valleys,
)


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    ok: bool
    detail: str

    def line(self) -> str:
        status = "ok" if self.ok else "FAIL"
        return f"{status} {self.suite}.{self.name}: {self.detail}"


def _paths_upto(n_max: int):
    for s in range(1, n_max + 1):
        yield from enumerate_paths(s)


# ---------------------------------------------------------------------------
# core suite
# ---------------------------------------------------------------------------


def check_roundtrips(n_max: int) -> CheckResult:
    count = 0
    for p in _paths_upto(n_max):
        count += 1
        if tableau_to_path(path_to_tableau(p)) != p:
            return CheckResult("core", "roundtrips", False, f"tableau roundtrip broke {p}")
        if syt_to_path(path_to_syt(p)) != p:
            return CheckResult("core", "roundtrips", False, f"syt roundtrip broke {p}")
    return CheckResult("core", "roundtrips", True, f"{count} paths round-trip")


def _legal_area_vectors(length: int):
    def extend(prefix: list[int]):
        i = len(prefix)
        if i == length:
            yield tuple(prefix)
            return
        top = min(i, (prefix[-1] + 1) if prefix else 0)
        for a in range(0, top + 1):
            prefix.append(a)
            yield from extend(prefix)
            prefix.pop()
    yield from extend([])


def check_area_characterization(n_max: int) -> CheckResult:
    for s in range(1, n_max + 1):
        vectors = set(_legal_area_vectors(s))
        if len(vectors) != catalan(s):
            return CheckResult("core", "area-characterization", False,
                               f"{len(vectors)} legal vectors at length {s}, "
                               f"expected {catalan(s)}")
        from_paths = {area_vector(p) for p in enumerate_paths(s)}
        if vectors != from_paths:
            return CheckResult("core", "area-characterization", False,
                               f"legal vectors differ from path areas at length {s}")
        for vec in vectors:
            if tableau_to_path(ShiTableau(vec)).semilength != s:
                return CheckResult("core", "area-characterization", False,
                                   f"rebuild failed for {vec}")
    return CheckResult("core", "area-characterization", True,
                       f"legal area vectors = path areas up to length {n_max}")


def _diagonal_returns(p: DyckPath) -> int:
    h = 0
    hits = 0
    for char in p.word:
        h += 1 if char == "U" else -1
        if char == "D" and h == 0:
            hits += 1
    return hits


def check_peak_valley_returns(n_max: int) -> CheckResult:
    # valleys sitting on the diagonal are the returns, so only the strictly
    # raised ones count on the right-hand side
    for p in _paths_upto(n_max):
        raised = sum(1 for _, h in valleys(p) if h >= 1)
        if len(peaks(p)) != raised + _diagonal_returns(p):
            return CheckResult("core", "peaks-valleys-returns", False, p.word)
    return CheckResult("core", "peaks-valleys-returns", True,
                       f"|peaks| = |raised valleys| + returns up to semilength {n_max}")


def check_bounce(n_max: int) -> CheckResult:
    for p in _paths_upto(n_max):
        b = bounce_path(p)
        if any(x > y for x, y in zip(area_vector(b), area_vector(p))):
            return CheckResult("core", "bounce", False, f"{b} not below {p}")
        if bounce_path(b) != b:
            return CheckResult("core", "bounce", False, f"not idempotent on {p}")
        if len(return_points(p)) != len([x for x in return_points(b)]):
            return CheckResult("core", "bounce", False, f"return points differ on {p}")
    return CheckResult("core", "bounce", True,
                       f"valid, weakly below, idempotent up to semilength {n_max}")


def check_decompositions(n_max: int) -> CheckResult:
    for p in _paths_upto(n_max):
        d = irreducible_decomposition(p)
        if d.reassemble() != p:
            return CheckResult("core", "decompositions", False, f"reassembly broke {p}")
        for part in d.parts:
            if part.kind == "irreducible" and not is_irreducible(part.component):
                return CheckResult("core", "decompositions", False,
                                   f"{part.component} misclassified in {p}")
        if is_irreducible(p):
            from .core import strongly_irreducible_decomposition
            sd = strongly_irreducible_decomposition(p)
            if sd.reassemble() != p:
                return CheckResult("core", "decompositions", False,
                                   f"strong reassembly broke {p}")
    return CheckResult("core", "decompositions", True,
                       f"reassembly identity up to semilength {n_max}")


# ---------------------------------------------------------------------------
# covers suite
# ---------------------------------------------------------------------------


def check_cover_audit(n_max: int) -> CheckResult:
    report = covers.audit_cover_counts(n_max)
    detail = (f"{report.paths_checked} paths, "
              f"{len(report.mismatches)} mismatches, "
              f"{len(report.fallbacks)} fallbacks")
    return CheckResult("covers", "closed-vs-brute", report.ok, detail)


def check_inverse_consistency(n_max: int) -> CheckResult:
    bound = min(n_max, 7)
    for p in _paths_upto(bound):
        for q in poset.upper_covers(p):
            if p not in poset.lower_covers(q):
                return CheckResult("covers", "inverse-consistency", False,
                                   f"{q} does not delete to {p}")
        if poset.upper_covers(p) != poset.upper_covers_by_search(p):
            return CheckResult("covers", "inverse-consistency", False,
                               f"insertion vs search differ at {p}")
    return CheckResult("covers", "inverse-consistency", True,
                       f"insertion = inverse search up to semilength {bound}")


def check_lower_cover_exists(n_max: int) -> CheckResult:
    for p in _paths_upto(n_max):
        if p.semilength >= 2 and not poset.lower_covers(p):
            return CheckResult("covers", "lower-cover-exists", False, p.word)
    return CheckResult("covers", "lower-cover-exists", True,
                       f"every path of semilength 2..{n_max} has a lower cover")


def check_up_irred_dual_route(n_max: int) -> CheckResult:
    for p in _paths_upto(n_max):
        if covers.classify_branch(p) in (covers.BRANCH_STRONG, covers.BRANCH_SYMMETRIC):
            if covers._up_irred(p) != _up_irred_from_runs(p):
                return CheckResult("covers", "column-formula-dual", False, p.word)
    return CheckResult("covers", "column-formula-dual", True,
                       "word-scan and run-form evaluations agree")


def _up_irred_from_runs(p: DyckPath) -> int:
    """Column formula computed purely from run-length arithmetic."""
    rf = run_form(p)
    asc, desc = rf.ascents, rf.descents
    cum_a = [0]
    cum_b = [0]
    for a, b in zip(asc, desc):
        cum_a.append(cum_a[-1] + a)
        cum_b.append(cum_b[-1] + b)
    s = p.semilength

    def run_of_down(j: int) -> int:
        for i in range(1, len(cum_b)):
            if cum_b[i] >= j:
                return i
        return len(desc)

    total = 2 * s + 1
    for i in range(1, len(asc) + 1):
        c = cum_a[i]
        left = run_of_down(c - 1) if c - 1 >= 1 else 0
        right = run_of_down(c + 1) if c + 1 <= s else len(desc)
        total += desc[i - 1] * (cum_a[right] - cum_a[left])
    return total


def _is_zigzag_segment(segment: str) -> bool:
    """First and last runs free, every interior run of length one."""
    runs = []
    for char in segment:
        if runs and runs[-1][0] == char:
            runs[-1][1] += 1
        else:
            runs.append([char, 1])
    return len(runs) >= 3 and all(r[1] == 1 for r in runs[1:-1])


def classify_double_cover(p: DyckPath, d1: poset.Deletion,
                          d2: poset.Deletion) -> str:
    """Case of the double-cover dichotomy a collision falls into.

    Returns "same-runs" when both deleted U steps share an ascent run and
    both deleted D steps share a descent run, "zigzag" when the word
    segment spanned by the four deleted steps is an alternating bridge
    U^r (UD)^l D^t (interior runs all of length one), and "unclassified"
    otherwise.
    """
    word = p.word
    run_id = []
    rid = 0
    for t in range(len(word)):
        if t and word[t] != word[t - 1]:
            rid += 1
        run_id.append(rid)
    ups = [i for i, c in enumerate(word) if c == "U"]
    downs = [i for i, c in enumerate(word) if c == "D"]
    u1, u2 = ups[d1.i - 1], ups[d2.i - 1]
    v1, v2 = downs[d1.k - 1], downs[d2.k - 1]
    if run_id[u1] == run_id[u2] and run_id[v1] == run_id[v2]:
        return "same-runs"
    lo, hi = min(u1, u2, v1, v2), max(u1, u2, v1, v2)
    if _is_zigzag_segment(word[lo:hi + 1]):
        return "zigzag"
    return "unclassified"


def check_double_covers(n_max: int) -> CheckResult:
    bound = min(n_max, 7)
    census = {"same-runs": 0, "zigzag": 0}
    for p in _paths_upto(bound):
        for child, ds in poset.cover_collisions(p).items():
            for x in range(len(ds)):
                for y in range(x + 1, len(ds)):
                    kind = classify_double_cover(p, ds[x], ds[y])
                    if kind == "unclassified":
                        return CheckResult("covers", "double-cover", False,
                                           f"{p.word}: {ds[x]} vs {ds[y]}")
                    census[kind] += 1
    return CheckResult("covers", "double-cover", True,
                       f"collisions classified up to semilength {bound}: {census}")


def check_containment_properties(n_max: int) -> CheckResult:
    bound = min(n_max, 6)
    paths = list(_paths_upto(bound))
    for p in paths:
        if not poset.contains_pattern(p, p):
            return CheckResult("covers", "containment-order", False,
                               f"not reflexive at {p}")
    # pruned search vs unpruned reference
    small = [p for p in paths if p.semilength <= 5]
    for p in small:
        for q in small:
            if poset.contains_pattern(p, q) != poset.contains_pattern_noprune(p, q):
                return CheckResult("covers", "containment-order", False,
                                   f"pruning changed {p} >= {q}")
    return CheckResult("covers", "containment-order", True,
                       "reflexive; pruned search matches unpruned reference")


# ---------------------------------------------------------------------------
# avoidance suite
# ---------------------------------------------------------------------------


def check_characterizations(n_max: int) -> CheckResult:
    count = 0
    for p in _paths_upto(n_max):
        for tag in avoidance.FAMILY_TAGS:
            for k in (2, 3, 4):
                count += 1
                lhs = avoidance.avoids_characterized(p, tag, k)
                rhs = poset.avoids(p, avoidance.pattern(tag, k))
                if lhs != rhs:
                    return CheckResult("avoidance", "characterizations", False,
                                       f"{tag}_{k} differs at {p.word}")
    return CheckResult("avoidance", "characterizations", True,
                       f"{count} predicate/search agreements")


def check_zeta(n_max: int) -> CheckResult:
    for s in range(1, n_max + 1):
        images = set()
        for p in enumerate_paths(s):
            z = avoidance.zeta(p)
            if z.semilength != s:
                return CheckResult("avoidance", "zeta", False, f"size broke at {p}")
            images.add(z)
        if len(images) != catalan(s):
            return CheckResult("avoidance", "zeta", False, f"not bijective at {s}")
    for p in _paths_upto(min(n_max, 8)):
        z = avoidance.zeta(p)
        for k in range(1, 6):
            if (height(p) <= k) != (len(return_points(z)) <= k):
                return CheckResult("avoidance", "zeta", False,
                                   f"height/bounce equivalence broke at {p}, k={k}")
    return CheckResult("avoidance", "zeta", True,
                       f"bijective up to semilength {n_max}; "
                       "height <=> bounce returns for k <= 5")


def check_peak_flattening(n_max: int) -> CheckResult:
    # the flattening bijection pairs tg_k with te_k only from k = 3 on;
    # at size two tg sits in the other Wilf class
    for k in (3, 4):
        for s in range(1, min(n_max, 7) + 1):
            g_avoiders = [p for p in enumerate_paths(s)
                          if avoidance.avoids_characterized(p, "tg", k)]
            images = set()
            for p in g_avoiders:
                q = avoidance.flatten_high_peaks(p, k - 1)
                if not avoidance.avoids_characterized(q, "te", k):
                    return CheckResult("avoidance", "peak-flattening", False,
                                       f"{p.word} -> {q.word} not te_{k}-avoiding")
                images.add(q)
            e_avoiders = {p for p in enumerate_paths(s)
                          if avoidance.avoids_characterized(p, "te", k)}
            if images != e_avoiders:
                return CheckResult("avoidance", "peak-flattening", False,
                                   f"not onto for k={k}, s={s}")
    return CheckResult("avoidance", "peak-flattening", True,
                       "tg avoiders map bijectively onto te avoiders (k = 3, 4)")


def check_mirror_symmetry(n_max: int) -> CheckResult:
    bound = min(n_max, 8)
    for s in range(1, bound + 1):
        for p in enumerate_paths(s):
            if avoidance.avoids_characterized(p, "tv", 2) != \
                    avoidance.avoids_characterized(mirror(p), "tor", 2):
                return CheckResult("avoidance", "mirror-symmetry", False, p.word)
    for k in (2, 3):
        for n in range(0, min(n_max, 7) + 1):
            a = avoidance.count_avoiders_brute(avoidance.pattern("tv", k), n)
            b = avoidance.count_avoiders_brute(avoidance.pattern("tor", k), n)
            if a != b:
                return CheckResult("avoidance", "mirror-symmetry", False,
                                   f"counts differ at k={k}, n={n}")
    return CheckResult("avoidance", "mirror-symmetry", True,
                       "mirror exchanges tv and tor avoiders; counts agree")


def check_f_count(n_max: int) -> CheckResult:
    for m in range(0, 21):
        for n in range(0, 21):
            for k in range(0, 9):
                if avoidance.f_count(m, n, k) != avoidance.f_count_oracle(m, n, k):
                    return CheckResult("avoidance", "f-count", False,
                                       f"mismatch at ({m}, {n}, {k})")
    return CheckResult("avoidance", "f-count", True,
                       "reflection formula = DP oracle on 0..20 x 0..20 x 0..8")


def check_closed_vs_brute(n_max: int) -> CheckResult:
    bound = min(n_max, 8)
    for tag in avoidance.FAMILY_TAGS:
        for k in (2, 3, 4, 5):
            for n in range(0, bound + 1):
                closed = avoidance.count_avoiders_closed(tag, k, n)
                brute = avoidance.count_avoiders_brute(avoidance.pattern(tag, k), n)
                if closed != brute:
                    return CheckResult("avoidance", "closed-vs-brute", False,
                                       f"{tag}_{k} at n={n}: closed={closed} brute={brute}")
    return CheckResult("avoidance", "closed-vs-brute", True,
                       f"all families, k 2..5, n 0..{bound}")


SUITES: dict[str, list] = {
    "core": [
        check_roundtrips,
        check_area_characterization,
        check_peak_valley_returns,
        check_bounce,
        check_decompositions,
    ],
    "covers": [
        check_cover_audit,
        check_inverse_consistency,
        check_lower_cover_exists,
        check_up_irred_dual_route,
        check_double_covers,
        check_containment_properties,
    ],
    "avoidance": [
        check_characterizations,
        check_zeta,
        check_peak_flattening,
        check_mirror_symmetry,
        check_f_count,
        check_closed_vs_brute,
    ],
}


def _run_one(args: tuple[str, int, int]) -> CheckResult:
    suite, index, n_max = args
    return SUITES[suite][index](n_max)


def run_suite(suite: str, n_max: int = 7, jobs: int = 1) -> list[CheckResult]:
    """Run one suite (or "all"); results come back in registry order."""
    names = list(SUITES) if suite == "all" else [suite]
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}")
    work = [(name, i, n_max) for name in names
            for i in range(len(SUITES[name]))]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_one, work))
    return [_run_one(item) for item in work]
