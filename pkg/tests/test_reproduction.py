from fractions import Fraction

import pytest

from fuzzygames import (
    CheckRow,
    FiniteSpace,
    Game,
    PossibilityCapacity,
    example_belief_one,
    example_belief_two,
    example_game_one,
    example_game_two,
    reference_report,
)

H = Fraction(1, 2)
AB = FiniteSpace(("a", "b"))


class TestReferenceReport:
    def test_rational_mode_is_fully_green(self):
        rows = reference_report()
        assert len(rows) == 14
        assert all(isinstance(r, CheckRow) for r in rows)
        assert all(r.passed for r in rows)
        names = [r.name for r in rows]
        assert len(set(names)) == 14
        assert any("game 1" in n for n in names)
        assert any("game 2" in n for n in names)

    def test_expected_strings_are_exact(self):
        by_name = {r.name: r for r in reference_report()}
        row = by_name["game 1: expected payoff, player 1, b, prod"]
        assert row.expected == "1/4"
        assert row.computed == "1/4"
        row = by_name["game 1: verdict and player-2 residual, prod"]
        assert row.expected == "no, residual 1/2"
        assert row.computed == "no, residual 1/2"
        row = by_name["game 2: capacity equilibrium verdict, min/min"]
        assert row.expected == "yes"

    def test_float_mode_is_fully_green(self):
        rows = reference_report(numeric="float")
        assert len(rows) == 14
        assert all(r.passed for r in rows)

    def test_bad_numeric_mode(self):
        with pytest.raises(ValueError, match="numeric"):
            reference_report(numeric="decimal")

    def test_corrupted_payoff_is_caught(self):
        bad = Game(
            (AB, AB),
            (
                {("a", "a"): Fraction(1, 4), ("a", "b"): 0,
                 ("b", "a"): 0, ("b", "b"): H},
                {("a", "a"): 0, ("a", "b"): H, ("b", "a"): H, ("b", "b"): 0},
            ),
        )
        rows = reference_report(game_one=bad)
        assert not all(r.passed for r in rows)
        failed = [r for r in rows if not r.passed]
        assert any("game 1" in r.name for r in failed)
        # game 2 rows are untouched by the game 1 corruption
        assert all(r.passed for r in rows if "game 2" in r.name)

    def test_corrupted_belief_is_caught(self):
        rows = reference_report(
            belief_one=PossibilityCapacity(AB, (1, 1))
        )
        failed = [r.name for r in rows if not r.passed]
        assert "game 1: expected payoff, player 1, b, prod" in failed
        assert "game 1: best responses, player 1, prod" in failed

    def test_corrupted_second_game_is_caught(self):
        bad = Game(
            (AB, AB),
            (
                # (a, a) pays 1/2 instead of 1
                {("a", "a"): H, ("a", "b"): 0, ("b", "a"): H, ("b", "b"): H},
                {("a", "a"): 0, ("a", "b"): 1, ("b", "a"): H, ("b", "b"): H},
            ),
        )
        rows = reference_report(game_two=bad)
        failed = [r for r in rows if not r.passed]
        assert failed
        assert all("game 2" in r.name for r in failed)


class TestExampleObjects:
    def test_game_one_payoffs(self):
        g = example_game_one()
        assert g.payoffs[0] == (H, 0, 0, H)
        assert g.payoffs[1] == (0, H, H, 0)

    def test_game_two_payoffs(self):
        g = example_game_two()
        assert g.payoffs[0] == (1, 0, H, H)
        assert g.payoffs[1] == (0, 1, H, H)

    def test_beliefs(self):
        assert example_belief_one().density == (1, H)
        assert example_belief_two().density == (1, 1)
