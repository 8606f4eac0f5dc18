import pytest
from hypothesis import given, settings

from shipat import (
    DyckPath,
    UnsupportedFamily,
    avoids,
    avoids_characterized,
    ballot_count,
    bounded_height_count,
    catalan,
    count_avoiders_brute,
    count_avoiders_closed,
    enumerate_paths,
    f_count,
    f_count_oracle,
    flatten_high_peaks,
    height,
    mirror,
    parse_path,
    pattern,
    return_points,
    wilf_check,
    zeta,
)
from shipat.avoidance import (
    FAMILY_TAGS,
    PatternFamily,
    avoids_tor2_shape,
    avoids_tv2_shape,
    sequence_csv,
    sequence_oeis,
)
from shipat.poset import ResourceLimit

from conftest import dyck_paths

TV5_TERMS = [1, 2, 5, 14, 42, 131, 413, 1294, 4007, 12272,
             37277, 112622, 339152, 1019457]
TV6_TERMS = [1, 2, 5, 14, 42, 132, 428, 1411, 4675, 15463,
             50928, 166999, 545682, 1778631]


class TestPatterns:
    def test_size_two(self):
        assert pattern("te", 2).word == "UUUDDD"
        assert pattern("tg", 2).word == "UUDUDD"
        assert pattern("tor", 2).word == "UUDDUD"
        assert pattern("tv", 2).word == "UDUUDD"
        assert pattern("tf", 2).word == "UDUDUD"

    def test_size_k(self):
        assert pattern("tv", 5).word == "UD" + "U" * 5 + "D" * 5
        assert pattern("tg", 4).word == "UUUUDUDDDD"
        for tag in FAMILY_TAGS:
            assert pattern(tag, 3).semilength == 4

    def test_unknown_family(self):
        with pytest.raises(UnsupportedFamily):
            pattern("tx", 2)
        with pytest.raises(UnsupportedFamily):
            PatternFamily("tx", 2)

    def test_family_object(self):
        assert PatternFamily("te", 3).path().word == "UUUUDDDD"


class TestCharacterizations:
    def test_zigzag_avoids_te(self):
        for n in range(1, 6):
            assert avoids_characterized(DyckPath("UD" * (n + 1)), "te", 2)

    def test_pyramid_avoids_tf(self):
        for n in range(2, 7):
            assert avoids_characterized(DyckPath("U" * (n + 1) + "D" * (n + 1)), "tf", 2)

    def test_tg2_is_contained_in_itself(self):
        # UUDUDD is the tg pattern, so it cannot avoid it; the predicate and
        # the search oracle agree on that
        p = parse_path("UUDUDD")
        assert not avoids_characterized(p, "tg", 2)
        assert not avoids(p, pattern("tg", 2))

    def test_exhaustive_vs_search(self):
        for s in range(1, 8):
            for p in enumerate_paths(s):
                for tag in FAMILY_TAGS:
                    for k in (2, 3):
                        assert avoids_characterized(p, tag, k) == \
                            avoids(p, pattern(tag, k)), (p.word, tag, k)

    def test_size2_shape_predicates(self):
        for s in range(1, 8):
            for p in enumerate_paths(s):
                assert avoids_tv2_shape(p) == avoids_characterized(p, "tv", 2)
                assert avoids_tor2_shape(p) == avoids_characterized(p, "tor", 2)

    @given(dyck_paths(min_semilength=1, max_semilength=6))
    @settings(max_examples=50)
    def test_mirror_exchanges_tv_tor(self, p):
        for k in (2, 3):
            assert avoids_characterized(p, "tv", k) == \
                avoids_characterized(mirror(p), "tor", k)


class TestCounting:
    def test_bounded_height(self):
        assert bounded_height_count(3, 2) == 4
        assert all(bounded_height_count(n, 1) == 1 for n in range(8))
        assert [bounded_height_count(n + 1, 2) for n in range(7)] == [
            2 ** n for n in range(7)]

    def test_ballot(self):
        assert ballot_count(2, 1) == 2
        assert all(ballot_count(n, 0) == 1 for n in range(8))
        assert all(ballot_count(n, n) == catalan(n) for n in range(11))
        with pytest.raises(ValueError):
            ballot_count(2, 3)

    def test_f_count_basics(self):
        assert all(f_count(0, 0, k) == 1 for k in range(5))
        assert f_count(3, 3, 2) == 4
        assert all(f_count(n, n, k) == bounded_height_count(n, k)
                   for n in range(10) for k in range(6))

    def test_f_count_against_oracle(self):
        for m in range(12):
            for n in range(12):
                for k in range(6):
                    assert f_count(m, n, k) == f_count_oracle(m, n, k)

    def test_brute_small_patterns(self):
        assert count_avoiders_brute(pattern("te", 2), 2) == 4
        assert count_avoiders_brute(pattern("tg", 2), 3) == 7

    def test_pattern_too_large(self):
        assert count_avoiders_brute(pattern("tf", 9), 3) == catalan(4)

    def test_brute_cap(self):
        with pytest.raises(ResourceLimit):
            count_avoiders_brute(pattern("te", 2), 400)

    def test_closed_size2(self):
        for n in range(2, 10):
            assert count_avoiders_closed("te", 2, n) == 2 ** n
            assert count_avoiders_closed("tf", 2, n) == 2 ** n
            expected = n * (n + 1) // 2 + 1
            for tag in ("tg", "tor", "tv"):
                assert count_avoiders_closed(tag, 2, n) == expected

    def test_closed_published_sequences(self):
        assert [count_avoiders_closed("tv", 5, n) for n in range(14)] == TV5_TERMS
        assert [count_avoiders_closed("tv", 6, n) for n in range(14)] == TV6_TERMS

    def test_closed_small_n_falls_back_to_catalan(self):
        for k in (5, 6):
            for n in range(k):
                assert count_avoiders_closed("tv", k, n) == catalan(n + 1)

    def test_closed_vs_brute_samples(self):
        for tag in FAMILY_TAGS:
            for k in (2, 3):
                for n in range(7):
                    assert count_avoiders_closed(tag, k, n) == \
                        count_avoiders_brute(pattern(tag, k), n), (tag, k, n)

    def test_parallel_matches_serial(self):
        q = pattern("tg", 2)
        assert count_avoiders_brute(q, 6, jobs=2) == count_avoiders_brute(q, 6)


class TestZeta:
    def test_fixed_points(self):
        assert zeta(parse_path("UD")).word == "UD"

    def test_zigzag_to_pyramid(self):
        for s in range(1, 7):
            assert zeta(DyckPath("UD" * s)).word == "U" * s + "D" * s

    def test_bijective(self):
        for s in range(1, 8):
            images = {zeta(p) for p in enumerate_paths(s)}
            assert len(images) == catalan(s)

    def test_height_to_bounce_returns(self):
        for s in range(1, 8):
            for p in enumerate_paths(s):
                z = zeta(p)
                for k in range(1, 6):
                    assert (height(p) <= k) == (len(return_points(z)) <= k)


class TestFlattening:
    def test_bijection_small(self):
        for k in (3, 4):
            for s in range(1, 7):
                g_avoiders = [p for p in enumerate_paths(s)
                              if avoids_characterized(p, "tg", k)]
                images = {flatten_high_peaks(p, k - 1) for p in g_avoiders}
                e_avoiders = {p for p in enumerate_paths(s)
                              if avoids_characterized(p, "te", k)}
                assert images == e_avoiders
                assert len(images) == len(g_avoiders)


class TestWilf:
    def test_te_tf_equivalent(self):
        report = wilf_check("te", "tf", 2, 6)
        assert report.equal and report.first_divergence is None

    def test_tg_tv_equivalent(self):
        report = wilf_check("tg", "tv", 2, 6)
        assert report.equal

    def test_te_tg_diverge(self):
        report = wilf_check("te", "tg", 2, 3)
        assert not report.equal
        assert report.first_divergence == 3
        assert report.counts_a[3] == 8 and report.counts_b[3] == 7


class TestSequenceFormats:
    def test_csv(self):
        assert sequence_csv([1, 2, 5]) == "n,count\n0,1\n1,2\n2,5\n"

    def test_oeis(self):
        assert sequence_oeis([1, 2, 5]) == "1 2 5\n"
