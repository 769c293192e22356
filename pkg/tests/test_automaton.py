"""Counting-table tests: oracle equivalence, totals, functional equations."""

import pytest

from skewdyck.automaton import (
    Layer,
    dp_counts,
    prefix_count,
    total,
    verify_functional_equations,
)
from skewdyck.kernel import recurrence_residuals
from skewdyck.paths import Step, enumerate_words


def word_layer(word):
    if not word.steps:
        return Layer.F
    return {Step.U: Layer.F, Step.D: Layer.G, Step.L: Layer.H}[word.steps[-1]]


class TestTotals:
    def test_printed_totals_t2(self):
        assert [total(2, n) for n in (3, 6, 9, 12)] == [1, 4, 19, 100]

    def test_parity_zero(self):
        assert total(2, 7) == 0
        assert total(2, 8) == 0

    def test_t3_small(self):
        assert total(3, 4) == 1
        # exhaustive enumeration finds five closed words of length 8:
        # UUUDUUUD, UUUUDUUD wait -- see the enumeration itself
        assert total(3, 8) == len(enumerate_words(3, 8))
        assert total(3, 8) == 5

    def test_empty_word(self):
        assert total(2, 0) == 1
        assert total(3, 0) == 1


class TestCells:
    def test_seed_is_layer_f(self):
        table = dp_counts(2, 0)
        assert table.count(0, 0, Layer.F) == 1
        assert table.count(0, 0, Layer.G) == 0
        assert table.count(0, 0, Layer.H) == 0

    def test_level_one_after_four_steps(self):
        table = dp_counts(2, 4)
        assert table.count(4, 1, Layer.F) == 1  # UUDU
        assert table.count(4, 1, Layer.G) == 1  # UUUD
        assert table.count(4, 1, Layer.H) == 0

    def test_level_zero_after_six_steps(self):
        table = dp_counts(2, 6)
        assert table.count(6, 0, Layer.F) == 0
        assert table.count(6, 0, Layer.G) == 3
        assert table.count(6, 0, Layer.H) == 1

    def test_prefix_count_examples(self):
        assert prefix_count(2, Layer.F, 1, 4) == 1
        assert prefix_count(2, Layer.H, 0, 6) == 1
        assert prefix_count(2, Layer.H, 0, 9) == 6

    def test_out_of_bounds(self):
        table = dp_counts(2, 5, k_max=3)
        with pytest.raises(ValueError, match="bounds"):
            table.count(6, 0, Layer.F)
        with pytest.raises(ValueError, match="bounds"):
            table.count(2, 4, Layer.F)

    def test_h_layer_unreachable_early(self):
        for t in (2, 3):
            table = dp_counts(t, 2 * t)
            for n in range(2 * t):
                for k in range(n + 1):
                    assert table.count(n, k, Layer.H) == 0

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            dp_counts(1, 5)
        with pytest.raises(ValueError):
            dp_counts(2, -1)
        with pytest.raises(ValueError):
            dp_counts(2, 5, direction="down")


class TestOracleEquivalence:
    @pytest.mark.parametrize("t", [2, 3])
    def test_every_cell_matches_enumeration(self, t):
        n_hi = 15
        table = dp_counts(t, n_hi)
        for n in range(n_hi + 1):
            cells = {}
            for word in enumerate_words(t, n, closed_only=False):
                key = (word.final_level(), word_layer(word))
                cells[key] = cells.get(key, 0) + 1
            for k in range(n + 1):
                for layer in Layer:
                    assert table.count(n, k, layer) == cells.get((k, layer), 0), (
                        t, n, k, layer,
                    )

    @pytest.mark.parametrize("t", [2, 3])
    def test_closed_counts_match_enumeration(self, t):
        for n in range(16):
            assert total(t, n) == len(enumerate_words(t, n))


class TestReversedTable:
    def test_seeds(self):
        table = dp_counts(2, 0, direction="RL")
        assert table.count(0, 0, Layer.G) == 1
        assert table.count(0, 0, Layer.H) == 1
        assert table.count(0, 0, Layer.F) == 0

    def test_one_step_lands_at_level_t(self):
        # both reversed step kinds climb by t, so level 1 is empty after
        # one step and level 2 holds everything
        table = dp_counts(2, 1, k_max=4, direction="RL")
        assert table.level_total(1, 1) == 0
        assert table.count(1, 2, Layer.F) == 1
        assert table.count(1, 2, Layer.G) == 2
        assert table.count(1, 2, Layer.H) == 2

    def test_origin_f_cell_stays_zero(self):
        table = dp_counts(2, 12, direction="RL")
        assert all(table.count(n, 0, Layer.F) == 0 for n in range(13))

    def test_closed_counts_via_g_column(self):
        table = dp_counts(2, 15, k_max=0, direction="RL")
        assert [table.closed_count(n) for n in (0, 3, 6, 9, 12, 15)] == [
            1, 1, 4, 19, 100, 563,
        ]

    def test_mirror_consistency(self):
        lr = dp_counts(2, 30, k_max=0)
        rl = dp_counts(2, 30, k_max=0, direction="RL")
        for n in range(31):
            assert lr.closed_count(n) == rl.closed_count(n)

    def test_mirror_consistency_t3(self):
        lr = dp_counts(3, 24, k_max=0)
        rl = dp_counts(3, 24, k_max=0, direction="RL")
        for n in range(25):
            assert lr.closed_count(n) == rl.closed_count(n)


class TestColumnRecurrence:
    def test_t2_columns_satisfy_kernel_recurrence(self):
        table = dp_counts(2, 24, k_max=12)
        for layer in Layer:
            cols = [table.column_series(layer, k) for k in range(11)]
            for residual in recurrence_residuals(cols, 2):
                assert residual.truncate(24).is_zero()


class TestFunctionalEquations:
    @pytest.mark.parametrize("t,direction", [(2, "LR"), (3, "LR"), (2, "RL")])
    def test_equations_hold(self, t, direction):
        report = verify_functional_equations(t, 8, 20, direction)
        assert report.all_hold, str(report)

    def test_violation_is_reported_not_raised(self):
        # a corrupted table must produce a finding, not silence
        table = dp_counts(2, 20, k_max=8)
        table._grid[9][0][1] += 1  # tamper with one G cell
        report = verify_functional_equations(2, 8, 20, "LR", table)
        assert not report.all_hold
        assert any(bad for _, ok, bad in report.results if not ok)

    def test_rl_requires_t2(self):
        with pytest.raises(ValueError, match="t=2"):
            verify_functional_equations(3, 8, 20, "RL")


class TestExports:
    def test_csv_shape(self):
        table = dp_counts(2, 3, k_max=2)
        lines = table.to_csv().strip().splitlines()
        assert lines[0] == "n,k,layer,count"
        assert len(lines) == 1 + 4 * 3 * 3
        assert "3,0,G,1" in lines

    def test_json_counts_are_strings(self):
        import json

        table = dp_counts(2, 3, k_max=1)
        data = json.loads(table.to_json())
        assert data["t"] == 2
        assert all(isinstance(cell["count"], str) for cell in data["counts"])
