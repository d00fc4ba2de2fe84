import pytest

from oracles import brute_hom, chi_by_partitions
from ordgraph import (
    BoundExceeded,
    OrderedGraph,
    enumerate_ordered_graphs,
    gen_complete,
    gen_matching,
    gen_path,
    refute_pair,
    verify_duality,
)
from ordgraph.duality import (
    DualityReport,
    Violation,
    expected_count,
    is_matching_complete_pair,
    pair_direction,
    refute_small_pairs,
    resolve_workers,
)


class TestVerifyDuality:
    def test_k2_n5(self):
        report = verify_duality(2, 5)
        assert report.checked == 1 + 1 + 2 + 8 + 64 + 1024
        assert report.holds and not report.matching_mismatches

    def test_k1_n4(self):
        report = verify_duality(1, 4)
        assert report.checked == expected_count(4) == 76
        assert report.holds

    @pytest.mark.parametrize("n,count", [(0, 1), (3, 12), (5, 1100), (6, 33868)])
    def test_expected_count(self, n, count):
        assert expected_count(n) == count == sum(2 ** (m * (m - 1) // 2) for m in range(n + 1))

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_against_brute_force(self, k):
        # both sides recomputed with the brute-force references
        mk = gen_matching(k)
        for n in range(5):
            for g in enumerate_ordered_graphs(n):
                assert (brute_hom(mk, g) is None) == (chi_by_partitions(g) <= k)
        assert verify_duality(k, 4).holds

    def test_workers_agree(self):
        a = verify_duality(3, 5, workers=1)
        b = verify_duality(3, 5, workers=2)
        assert (a.checked, a.violations, a.matching_mismatches) == (b.checked, b.violations, b.matching_mismatches)

    def test_progress(self):
        seen = []
        verify_duality(1, 3, progress=lambda n, checked: seen.append((n, checked)))
        assert seen == [(0, 1), (1, 2), (2, 4), (3, 12)]

    def test_errors(self):
        with pytest.raises(ValueError):
            verify_duality(0, 3)
        with pytest.raises(BoundExceeded):
            verify_duality(1, 8)

    def test_merge_is_associative(self):
        g = OrderedGraph(1)
        parts = [DualityReport(1, 3, c, [Violation(g, "both-hold", c)]) for c in (1, 2, 3)]

        def fresh(i):
            p = parts[i]
            return DualityReport(p.k, p.max_n, p.checked, list(p.violations))

        left = fresh(0).merge(fresh(1)).merge(fresh(2))
        right = fresh(0).merge(fresh(1).merge(fresh(2)))
        assert left.checked == right.checked == 6
        assert left.violations == right.violations

    def test_resolve_workers(self, monkeypatch):
        monkeypatch.setenv("ORDGRAPH_WORKERS", "3")
        assert resolve_workers(None) == 3
        assert resolve_workers(2) == 2
        monkeypatch.delenv("ORDGRAPH_WORKERS")
        assert resolve_workers(None) == 1
        assert resolve_workers(0) == 1


class TestPairDirection:
    def test_path_against_k5(self):
        # P_3 has no image in M_5, and M_5 needs 6 blocks
        assert pair_direction(gen_path(3), gen_complete(5), gen_matching(5)) == "neither-holds"

    def test_triangle_against_k3(self):
        assert pair_direction(gen_complete(3), gen_complete(3), gen_matching(4)) == "neither-holds"

    def test_duality_pair_never_breaks(self):
        for g in enumerate_ordered_graphs(4):
            assert pair_direction(gen_matching(2), gen_complete(2), g) is None


class TestRefutePair:
    def test_path_k5(self):
        rep = refute_pair(gen_path(3), gen_complete(5), 5)
        assert not rep.confirmed and rep.revalidate()
        # first in enumeration order is P_3 itself: it maps to itself and to K_5
        assert rep.counterexample == gen_path(3)
        assert rep.direction == "both-hold"

    def test_matching_k2_confirmed(self):
        rep = refute_pair(gen_matching(2), gen_complete(2), 5)
        assert rep.confirmed and rep.checked == expected_count(5)

    def test_triangle_k3(self):
        rep = refute_pair(gen_complete(3), gen_complete(3), 6)
        assert rep.revalidate()
        assert (rep.counterexample, rep.direction) == (gen_complete(3), "both-hold")
        # the other failure mode also shows up well inside the bound
        g = gen_matching(3)
        assert brute_hom(gen_complete(3), g) is None
        assert chi_by_partitions(g) == 4
        assert pair_direction(gen_complete(3), gen_complete(3), g) == "neither-holds"

    def test_bound(self):
        with pytest.raises(BoundExceeded):
            refute_pair(gen_path(3), gen_complete(3), 8)

    def test_revalidate_catches_tampering(self):
        rep = refute_pair(gen_path(3), gen_complete(5), 3)
        rep.direction = "neither-holds"
        assert not rep.revalidate()


class TestSmallPairs:
    def test_matching_complete_recognition(self):
        assert is_matching_complete_pair(gen_matching(1), gen_complete(1))
        assert is_matching_complete_pair(gen_path(2), OrderedGraph(3))
        assert not is_matching_complete_pair(gen_path(3), gen_complete(3))
        assert not is_matching_complete_pair(gen_complete(2), gen_complete(2))

    def test_all_small_candidates_refuted(self):
        reports, excepted = refute_small_pairs(3, 4)
        assert len(reports) + len(excepted) == 11 ** 2
        assert all(not r.confirmed and r.revalidate() for r in reports)
        assert excepted and all(is_matching_complete_pair(f, d) for f, d in excepted)
