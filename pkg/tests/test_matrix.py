import itertools

import numpy as np
import pytest

from paircomp import (
    Judgment,
    Mode,
    NONZERO_REALS,
    PcMatrix,
    POSITIVE_REALS,
    complete_from_tree,
    superfluous_count,
)
from paircomp.errors import (
    DiagonalNotIdentity,
    DuplicateEdge,
    NonMember,
    NonPositiveValue,
    NotATree,
    ReciprocityViolation,
    SelfComparison,
    StrictModeViolation,
    UndefinedForGroup,
)
from tests.conftest import consistent_matrix, perturbed_matrix

M1_ENTRIES = [[1, -1, 1], [-1, 1, -1], [1, -1, 1]]


def matrix_253() -> PcMatrix:
    # judgments A/B=2, A/C=5, B/C=3
    return PcMatrix.from_entries(
        [[1, 2, 5], [0.5, 1, 3], [0.2, 1 / 3, 1]], POSITIVE_REALS, Mode.STRICT
    )


class TestValidation:
    def test_m1_accepted_in_research_mode(self):
        m = PcMatrix.from_entries(M1_ENTRIES, NONZERO_REALS, Mode.RESEARCH)
        assert m.n == 3 and m.mode is Mode.RESEARCH

    def test_m1_rejected_by_strict_gate(self):
        with pytest.raises(StrictModeViolation):
            PcMatrix.from_entries(M1_ENTRIES, POSITIVE_REALS, Mode.STRICT)

    def test_strict_mode_requires_positive_reals_group(self):
        with pytest.raises(StrictModeViolation):
            PcMatrix.from_entries([[1, 2], [0.5, 1]], NONZERO_REALS, Mode.STRICT)

    def test_reciprocal_pair_accepted(self):
        m = PcMatrix.from_entries([[1, 2], [0.5, 1]], POSITIVE_REALS, Mode.STRICT)
        assert m.entries[1, 0] == 0.5

    def test_diagonal_must_be_identity(self):
        with pytest.raises(DiagonalNotIdentity):
            PcMatrix.from_entries([[2, 2], [0.5, 1]], POSITIVE_REALS, Mode.STRICT)

    def test_reciprocity_violations_are_not_repaired(self):
        with pytest.raises(ReciprocityViolation) as exc:
            PcMatrix.from_entries([[1, 2], [0.6, 1]], POSITIVE_REALS, Mode.STRICT)
        assert (exc.value.i, exc.value.j) == (0, 1)

    def test_membership_enforced(self):
        with pytest.raises(NonMember):
            PcMatrix.from_entries([[1, -2], [-0.5, 1]], POSITIVE_REALS, Mode.RESEARCH)

    def test_non_finite_rejected(self):
        with pytest.raises(ValueError):
            PcMatrix.from_entries([[1, float("inf")], [0, 1]], POSITIVE_REALS, Mode.STRICT)

    def test_entries_are_immutable(self):
        m = PcMatrix.from_entries([[1, 2], [0.5, 1]], POSITIVE_REALS, Mode.STRICT)
        with pytest.raises(ValueError):
            m.entries[0, 1] = 3.0

    def test_labels_length_checked(self):
        with pytest.raises(ValueError):
            PcMatrix.from_entries(
                [[1, 2], [0.5, 1]], POSITIVE_REALS, Mode.STRICT, labels=("A",)
            )


class TestTriads:
    def test_three_entities_one_triad(self):
        m = matrix_253()
        assert len(m.triads()) == 1

    def test_four_entities_four_triads(self):
        m = consistent_matrix(np.random.default_rng(0), 4)
        assert len(m.triads()) == 4

    def test_fewer_than_three_entities_empty(self):
        m = PcMatrix.from_entries([[1, 2], [0.5, 1]], POSITIVE_REALS, Mode.STRICT)
        assert m.triads() == []

    def test_lexicographic_order_and_value_layout(self):
        m = consistent_matrix(np.random.default_rng(1), 4)
        triads = m.triads()
        assert [t.indices for t in triads] == [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
        t = triads[0]
        assert (t.x, t.y, t.z) == (m.entries[0, 1], m.entries[0, 2], m.entries[1, 2])


class TestConsistency:
    def test_m1_consistent(self):
        m = PcMatrix.from_entries(M1_ENTRIES, NONZERO_REALS, Mode.RESEARCH)
        assert m.is_consistent()

    def test_253_is_inconsistent(self):
        assert not matrix_253().is_consistent()

    def test_identity_matrix_consistent(self):
        m = PcMatrix.from_entries(np.ones((3, 3)), POSITIVE_REALS, Mode.STRICT)
        assert m.is_consistent()

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_ordered_index_triples_are_redundant(self, n):
        # brute-force oracle: checking all ordered (i,k,j) equals the i<k<j scan
        rng = np.random.default_rng(n)
        for case in range(20):
            m = consistent_matrix(rng, n) if case % 2 == 0 else perturbed_matrix(rng, n)
            full = all(
                abs(m.entries[i, k] * m.entries[k, j] - m.entries[i, j])
                <= 1e-9 * max(abs(m.entries[i, j]), abs(m.entries[i, k] * m.entries[k, j]))
                for i, k, j in itertools.permutations(range(n), 3)
            )
            assert m.is_consistent() == full


class TestKii:
    def test_triad_2_5_3(self):
        # oracle: direct evaluation of the two deviation ratios
        x, y, z = 2.0, 5.0, 3.0
        oracle = min(abs(1 - y / (x * z)), abs(1 - (x * z) / y))
        assert oracle == pytest.approx(1 / 6, abs=1e-15)

        report = matrix_253().kii()
        assert report.kii == pytest.approx(oracle, abs=1e-15)
        assert report.worst_triad.indices == (0, 1, 2)

    def test_consistent_triad_zero(self):
        m = PcMatrix.from_entries(
            [[1, 2, 6], [0.5, 1, 3], [1 / 6, 1 / 3, 1]], POSITIVE_REALS, Mode.STRICT
        )
        assert m.kii().kii == 0.0

    def test_exam_scale_matrix_zero(self):
        w = np.array([30.0, 20.0, 10.0, 40.0])
        m = PcMatrix.from_entries(np.outer(w, 1 / w), POSITIVE_REALS, Mode.STRICT)
        assert m.kii().kii == 0.0

    def test_undefined_for_negative_entries(self):
        m = PcMatrix.from_entries(M1_ENTRIES, NONZERO_REALS, Mode.RESEARCH)
        with pytest.raises(UndefinedForGroup):
            m.kii()

    def test_worst_triad_tie_breaks_lexicographically(self):
        w = np.array([1.0, 2.0, 4.0, 8.0])
        entries = np.outer(w, 1 / w)
        entries[0, 1] *= 1.5
        entries[1, 0] = 1 / entries[0, 1]
        entries[2, 3] *= 1.5
        entries[3, 2] = 1 / entries[2, 3]
        m = PcMatrix.from_entries(entries, POSITIVE_REALS, Mode.STRICT)
        report = m.kii()
        locals_at_max = [t.indices for t, v in report.per_triad if v == report.kii]
        assert report.worst_triad.indices == min(locals_at_max)

    def test_zero_iff_consistent_on_random_matrices(self):
        rng = np.random.default_rng(12)
        for case in range(200):
            n = int(rng.integers(3, 7))
            m = consistent_matrix(rng, n) if case % 2 == 0 else perturbed_matrix(rng, n)
            assert (m.kii().kii <= 1e-9) == m.is_consistent(1e-9)

    def test_scale_invariance(self):
        rng = np.random.default_rng(99)
        for _ in range(20):
            w = 10.0 ** rng.uniform(-2, 2, size=4)
            c = 10.0 ** rng.uniform(-2, 2)
            base = np.outer(w, 1 / w)
            scaled = np.outer(c * w, 1 / (c * w))
            for entries in (base, scaled):
                entries[0, 2] *= 1.7
                entries[2, 0] = 1 / entries[0, 2]
            kii_base = PcMatrix.from_entries(base, POSITIVE_REALS, Mode.STRICT).kii().kii
            kii_scaled = PcMatrix.from_entries(scaled, POSITIVE_REALS, Mode.STRICT).kii().kii
            assert kii_base == pytest.approx(kii_scaled, rel=1e-12)


class TestCompleteFromTree:
    def test_two_judgments_imply_third(self):
        m = complete_from_tree(3, [Judgment(0, 1, 2), Judgment(1, 2, 3)])
        assert m.entries[0, 2] == pytest.approx(6)
        assert m.is_consistent()

    def test_single_edge(self):
        m = complete_from_tree(2, [Judgment(0, 1, 7)])
        assert np.allclose(m.entries.real, [[1, 7], [1 / 7, 1]])

    def test_chain_path_product(self):
        # oracle: 2 * 2 * 2
        judgments = [Judgment(0, 1, 2), Judgment(1, 2, 2), Judgment(2, 3, 2)]
        m = complete_from_tree(4, judgments)
        assert m.entries[0, 3] == pytest.approx(8)

    def test_too_many_judgments(self):
        with pytest.raises(NotATree):
            complete_from_tree(3, [Judgment(0, 1, 2), Judgment(1, 2, 3), Judgment(0, 2, 5)])

    def test_cycle_plus_isolated_vertex(self):
        # right edge count, but a triangle over {0,1,2} leaves entity 3 unreached
        judgments = [Judgment(0, 1, 2), Judgment(0, 2, 6), Judgment(1, 2, 3)]
        with pytest.raises(NotATree):
            complete_from_tree(4, judgments)

    def test_duplicate_edge(self):
        with pytest.raises(DuplicateEdge):
            complete_from_tree(3, [Judgment(0, 1, 2), Judgment(1, 0, 3)])

    def test_self_comparison(self):
        with pytest.raises(SelfComparison):
            complete_from_tree(3, [Judgment(0, 0, 2), Judgment(1, 2, 3)])

    def test_strict_rejects_negative_value(self):
        with pytest.raises(NonPositiveValue):
            complete_from_tree(3, [Judgment(0, 1, -2), Judgment(1, 2, 3)])

    def test_research_mode_completion_over_nonzero_reals(self):
        judgments = [Judgment(0, 1, -1), Judgment(1, 2, -1)]
        m = complete_from_tree(3, judgments, NONZERO_REALS, Mode.RESEARCH)
        expected = np.array([[1, -1, 1], [-1, 1, -1], [1, -1, 1]], dtype=np.complex128)
        assert np.array_equal(m.entries, expected)

    def test_zero_value_rejected_in_research_mode(self):
        from paircomp.errors import ZeroEntry

        with pytest.raises(ZeroEntry):
            complete_from_tree(3, [Judgment(0, 1, 0), Judgment(1, 2, -1)],
                               NONZERO_REALS, Mode.RESEARCH)

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_every_spanning_tree_reproduces_the_matrix(self, n):
        # enumerate all spanning trees of the complete judgment graph
        rng = np.random.default_rng(40 + n)
        source = consistent_matrix(rng, n)
        pairs = list(itertools.combinations(range(n), 2))
        trees = 0
        for edge_set in itertools.combinations(pairs, n - 1):
            reached = {0}
            frontier = [0]
            adj = {i: [] for i in range(n)}
            for a, b in edge_set:
                adj[a].append(b)
                adj[b].append(a)
            while frontier:
                node = frontier.pop()
                for nb in adj[node]:
                    if nb not in reached:
                        reached.add(nb)
                        frontier.append(nb)
            if len(reached) != n:
                continue
            trees += 1
            judgments = [
                Judgment(a, b, complex(source.entries[a, b])) for a, b in edge_set
            ]
            rebuilt = complete_from_tree(n, judgments)
            assert np.max(np.abs(rebuilt.entries - source.entries)) <= 1e-10 * np.max(
                np.abs(source.entries)
            )
        assert trees == n ** (n - 2)  # Cayley's count, sanity check on the enumeration


class TestSuperfluous:
    def test_three_judgments_on_three_entities(self):
        judgments = [Judgment(0, 1, 2), Judgment(1, 2, 3), Judgment(0, 2, 5)]
        assert superfluous_count(3, judgments) == 1

    def test_tree_has_none(self):
        assert superfluous_count(3, [Judgment(0, 1, 2), Judgment(1, 2, 3)]) == 0

    def test_full_grid_on_four_entities(self):
        judgments = [Judgment(i, j, 1) for i, j in itertools.combinations(range(4), 2)]
        assert len(judgments) == 6
        assert superfluous_count(4, judgments) == 3

    def test_duplicates_rejected(self):
        with pytest.raises(DuplicateEdge):
            superfluous_count(3, [Judgment(0, 1, 2), Judgment(1, 0, 2)])
