"""Perfection checking and the structure of perfect 2-colorings."""

import pytest

from circulant_colorings import (
    DistanceSet,
    FiniteColoring,
    ParameterMatrix,
    PerfectionVerdict,
    PeriodicColoring,
    admissible_matrix_templates,
    check_even_odd_balance,
    check_local_patterns,
    check_perfect,
    check_period_length_claim,
    is_bipartite_coloring,
    make_odd_distance_set,
    neighbor_color_counts,
    outer_degrees,
)

D2 = DistanceSet((1, 3))


class TestCheckPerfect:
    def test_three_color_example(self):
        v = check_perfect(FiniteColoring((1, 2, 1, 1, 3, 3, 2, 1), 3), D2)
        assert v.is_perfect
        assert v.matrix.rows == ((2, 1, 1), (2, 1, 1), (2, 1, 1))

    def test_four_color_example(self):
        v = check_perfect(FiniteColoring((1, 2, 3, 1, 4, 1, 2, 4, 1, 3), 4), D2)
        assert v.is_perfect
        assert v.matrix.rows == (
            (1, 1, 1, 1),
            (2, 0, 1, 1),
            (2, 1, 1, 0),
            (2, 1, 0, 1),
        )

    def test_doubled_edge_graph_examples(self):
        left = check_perfect(FiniteColoring((1, 2, 1, 1, 2, 1), 2), D2)
        right = check_perfect(FiniteColoring((1, 2, 1, 2, 1, 2), 2), D2)
        assert left.matrix.rows == ((3, 1), (2, 2))
        assert right.matrix.rows == ((0, 4), (4, 0))

    def test_witness_names_conflicting_pair(self):
        coloring = FiniteColoring((1, 1, 1, 2, 2, 2), 2)
        v = check_perfect(coloring, D2)
        assert not v.is_perfect
        u, w = v.witness
        assert coloring.word[u] == coloring.word[w]
        assert neighbor_color_counts(coloring, D2, u) != neighbor_color_counts(
            coloring, D2, w
        )

    def test_periodic_word(self):
        v = check_perfect(PeriodicColoring((1, 1, 2), 2), D2)
        assert v.is_perfect
        assert v.matrix.rows == ((3, 1), (2, 2))

    def test_periodic_not_perfect(self):
        v = check_perfect(PeriodicColoring((1, 2, 2, 2), 2), D2)
        assert not v.is_perfect

    def test_single_color(self):
        v = check_perfect(PeriodicColoring((1,), 1), D2)
        assert v.is_perfect
        assert v.matrix.rows == ((4,),)

    def test_verdict_is_truthy_iff_perfect(self):
        assert check_perfect(PeriodicColoring((1, 2), 2), D2)
        assert not check_perfect(PeriodicColoring((1, 2, 2, 2), 2), D2)


class TestVerdictType:
    def test_requires_matrix_xor_witness(self):
        m = ParameterMatrix(((0, 2), (2, 0)))
        with pytest.raises(ValueError):
            PerfectionVerdict(True, matrix=None, witness=None)
        with pytest.raises(ValueError):
            PerfectionVerdict(True, matrix=m, witness=(0, 1))
        with pytest.raises(ValueError):
            PerfectionVerdict(False, matrix=m, witness=None)

    def test_to_json(self):
        m = ParameterMatrix(((0, 2), (2, 0)))
        good = PerfectionVerdict(True, matrix=m).to_json()
        assert good == {"perfect": True, "matrix": [[0, 2], [2, 0]], "witness": None}
        bad = PerfectionVerdict(False, witness=(0, 3)).to_json()
        assert bad == {"perfect": False, "matrix": None, "witness": [0, 3]}


class TestBipartiteColoring:
    def test_side_disjoint_is_bipartite(self):
        assert is_bipartite_coloring(FiniteColoring((1, 2, 1, 2, 1, 2), 2), D2)
        assert is_bipartite_coloring(PeriodicColoring((1, 2), 2), DistanceSet((1,)))

    def test_shared_color_is_not(self):
        assert not is_bipartite_coloring(FiniteColoring((1, 2, 1, 1, 2, 1), 2), D2)
        assert not is_bipartite_coloring(PeriodicColoring((1, 1, 2, 2), 2), D2)

    def test_rejects_odd_order(self):
        with pytest.raises(ValueError):
            is_bipartite_coloring(FiniteColoring((1, 2, 2), 2), DistanceSet((1,)))

    def test_rejects_even_distance(self):
        with pytest.raises(ValueError):
            is_bipartite_coloring(FiniteColoring((1, 2, 1, 2), 2), DistanceSet((2,)))


class TestEvenOddBalance:
    def test_disjoint_sides(self):
        assert check_even_odd_balance(PeriodicColoring((1, 2), 2))

    def test_balanced_sides(self):
        assert check_even_odd_balance(PeriodicColoring((1, 1, 2, 2), 2))

    def test_neither(self):
        assert not check_even_odd_balance(FiniteColoring((1, 1, 1, 2), 2))

    def test_rejects_odd_length(self):
        with pytest.raises(ValueError):
            check_even_odd_balance(PeriodicColoring((1, 1, 2), 2))


class TestOuterDegrees:
    def test_reads_off_diagonal(self):
        degs = outer_degrees(ParameterMatrix(((3, 1), (2, 2))), 2)
        assert (degs.b, degs.c, degs.n) == (1, 2, 2)

    def test_bipartite_matrix(self):
        degs = outer_degrees(ParameterMatrix(((0, 4), (4, 0))), 2)
        assert degs.b == degs.c == 4

    def test_rejects_wrong_size(self):
        with pytest.raises(ValueError):
            outer_degrees(ParameterMatrix(((2, 1, 1), (2, 1, 1), (2, 1, 1))), 2)

    def test_rejects_wrong_row_sums(self):
        with pytest.raises(ValueError):
            outer_degrees(ParameterMatrix(((3, 1), (2, 2))), 3)


class TestAdmissibleTemplates:
    def test_family_sums_and_counts(self):
        for n in (1, 2, 3, 4):
            fams = admissible_matrix_templates(n)
            assert [f.bc_sum for f in fams] == [4 * n, 2 * n, 2 * n + 1, 2 * n - 1]
            total = sum(len(f.matrices()) for f in fams)
            assert total == 6 * n - 2
            for fam in fams:
                for m in fam.matrices():
                    assert m.row_sums() == (2 * n, 2 * n)
                    degs = outer_degrees(m, n)
                    assert degs.b + degs.c == fam.bc_sum

    def test_bipartite_family_is_single_matrix(self):
        fams = admissible_matrix_templates(3)
        assert fams[0].matrices() == (ParameterMatrix(((0, 6), (6, 0))),)

    def test_smallest_case_has_empty_family(self):
        fams = admissible_matrix_templates(1)
        assert [len(f.matrices()) for f in fams] == [1, 1, 2, 0]

    def test_all_matrices_realized_distinct(self):
        fams = admissible_matrix_templates(2)
        seen = [m for f in fams for m in f.matrices()]
        assert len(seen) == len(set(seen)) == 10


class TestLocalPatterns:
    def test_holds_on_exhaustive_enumeration(self, periodic_k2):
        for n in (1, 2, 3):
            for coloring, _ in periodic_k2[n].entries:
                assert check_local_patterns(coloring, n), (n, coloring.word)

    def test_rejects_non_perfect(self):
        with pytest.raises(ValueError):
            check_local_patterns(PeriodicColoring((1, 2, 2, 2), 2), 2)

    def test_rejects_wrong_color_count(self):
        with pytest.raises(ValueError):
            check_local_patterns(PeriodicColoring((1, 2, 3), 3), 1)


class TestPeriodLengthClaim:
    def test_bipartite_sum_divides_two(self):
        assert check_period_length_claim(PeriodicColoring((1, 2), 2), 2)

    def test_equal_sum_divides_4n(self):
        # period 4 divides 4n = 8: divisibility, not equality
        assert check_period_length_claim(PeriodicColoring((1, 1, 2, 2), 2), 2)

    def test_odd_sums_divide_exactly(self):
        assert check_period_length_claim(PeriodicColoring((1, 1, 2), 2), 2)
        assert check_period_length_claim(PeriodicColoring((1, 1, 2, 2, 2), 2), 2)

    def test_holds_on_exhaustive_enumeration(self, periodic_k2):
        for n in (1, 2, 3):
            for coloring, _ in periodic_k2[n].entries:
                assert check_period_length_claim(coloring, n), (n, coloring.word)

    def test_rejects_non_perfect(self):
        with pytest.raises(ValueError):
            check_period_length_claim(PeriodicColoring((1, 2, 2, 2), 2), 2)
