"""Word validation, enumeration, and geometry tests.

The brute-force checker below is a direct transcription of the word
rules and never calls the library validator, so the exhaustive
comparisons are a genuine second opinion.
"""

import itertools

import pytest

from skewdyck.paths import (
    SkewWord,
    Step,
    enumerate_words,
    is_closed,
    overlap_diagnostic,
    realize,
    validate,
)


def brute_valid(t, text):
    level = 0
    prev = ""
    for i, ch in enumerate(text):
        if i == 0 and ch != "U":
            return False
        if prev == "U" and ch == "L":
            return False
        if prev == "L" and ch == "U":
            return False
        level += 1 if ch == "U" else -t
        if level < 0:
            return False
        prev = ch
    return True


def brute_level(t, text):
    return sum(1 if ch == "U" else -t for ch in text)


def step_lex_key(text):
    # the library's step order U < D < L, which ASCII does not share
    return ["UDL".index(ch) for ch in text]


def w(t, text):
    return SkewWord.from_string(t, text)


class TestValidate:
    def test_simple_closed(self):
        assert validate(w(2, "UUD"))

    def test_ul_reported_with_index(self):
        res = validate(w(2, "UUL"))
        assert not res
        assert res.rule == "UL"
        assert res.index == 1

    def test_lu_reported(self):
        res = validate(w(2, "UUUUDLUUD"))
        assert not res
        assert res.rule == "LU"
        assert res.index == 5

    def test_below_axis(self):
        res = validate(w(2, "UD"))
        assert res.rule == "below-axis"
        assert res.index == 1

    def test_first_step_rule(self):
        res = validate(w(2, "DU"))
        assert res.rule == "first-step"
        assert res.index == 0

    def test_red_variant_of_plain_word(self):
        # the L-variant of UUUUDD, confirmed against the brute-force rules
        assert brute_valid(2, "UUUUDL")
        assert validate(w(2, "UUUUDL"))

    def test_empty_word_is_valid_and_closed(self):
        empty = SkewWord(2, ())
        assert validate(empty)
        assert is_closed(empty)

    def test_t_below_two_rejected_at_construction(self):
        with pytest.raises(ValueError):
            SkewWord(1, ())

    def test_exhaustive_against_brute_force(self):
        for t in (2, 3):
            for n in range(7):
                expected = sorted(
                    "".join(word)
                    for word in itertools.product("UDL", repeat=n)
                    if brute_valid(t, "".join(word))
                )
                got = sorted(str(x) for x in enumerate_words(t, n, closed_only=False))
                assert got == expected


class TestIsClosed:
    def test_examples(self):
        assert is_closed(w(2, "UUD"))
        assert not is_closed(w(2, "UU"))
        assert is_closed(w(2, "UUUUDL"))


class TestEnumerate:
    def test_length_three(self):
        assert [str(x) for x in enumerate_words(2, 3)] == ["UUD"]

    def test_length_six(self):
        words = enumerate_words(2, 6)
        assert len(words) == 4
        assert [str(x) for x in words] == ["UUUUDD", "UUUUDL", "UUUDUD", "UUDUUD"]

    def test_length_nine_count(self):
        assert len(enumerate_words(2, 9)) == 19

    def test_sorted_and_unique(self):
        words = [str(x) for x in enumerate_words(2, 12)]
        assert words == sorted(words, key=step_lex_key)
        assert len(words) == len(set(words))

    def test_closed_matches_brute_force(self):
        for n in (0, 3, 6, 9):
            expected = sorted(
                (
                    "".join(word)
                    for word in itertools.product("UDL", repeat=n)
                    if brute_valid(2, "".join(word)) and brute_level(2, "".join(word)) == 0
                ),
                key=step_lex_key,
            )
            assert [str(x) for x in enumerate_words(2, n)] == expected

    def test_prefix_closure(self):
        # every prefix of a valid word is itself a valid (open) word
        for word in enumerate_words(2, 9, closed_only=False):
            for cut in range(len(word)):
                assert validate(SkewWord(2, word.steps[:cut]))

    def test_cap_refusal_mentions_the_table(self):
        with pytest.raises(ValueError, match="counting table"):
            enumerate_words(2, 25)

    def test_cap_overridable(self):
        assert len(enumerate_words(2, 3, cap=3)) == 1
        with pytest.raises(ValueError):
            enumerate_words(2, 4, cap=3)


class TestRealize:
    def test_uud_segments(self):
        geo = realize(w(2, "UUD"))
        assert geo.points() == ((0, 0), (1, 1), (2, 2), (4, 0))
        assert geo.colors == ("black", "black", "black")

    def test_empty_geometry(self):
        geo = realize(SkewWord(2, ()))
        assert geo.segments == ()
        assert geo.points() == ((0, 0),)

    def test_left_mode_walks_backwards(self):
        geo = realize(w(2, "UUUUDL"), mode="left")
        assert geo.points() == ((0, 0), (1, 1), (2, 2), (3, 3), (4, 4), (6, 2), (4, 0))
        assert geo.colors[-1] == "red"

    def test_overlay_mode_keeps_moving_right(self):
        geo = realize(w(2, "UUUUDL"), mode="red-overlay")
        assert geo.points()[-1] == (8, 0)
        assert geo.colors[-1] == "red"

    def test_t3_vertical_drop(self):
        geo = realize(w(3, "UUUD"))
        assert geo.points()[-1] == (5, 0)

    def test_invalid_word_rejected(self):
        with pytest.raises(ValueError, match="invalid"):
            realize(w(2, "UUL"))

    def test_unknown_mode_rejected(self):
        with pytest.raises(ValueError, match="mode"):
            realize(w(2, "UUD"), mode="sideways")


class TestOverlapDiagnostic:
    def test_monotone_word_clean(self):
        assert overlap_diagnostic(w(2, "UUD")) == []

    def test_red_variant_clean(self):
        assert overlap_diagnostic(w(2, "UUUUDL")) == []

    def test_collinear_helper_catches_planted_overlap(self):
        from skewdyck.paths import _collinear_overlap

        assert _collinear_overlap(((0, 0), (2, 2)), ((1, 1), (3, 3)))
        assert not _collinear_overlap(((0, 0), (2, 2)), ((2, 2), (4, 4)))  # touch
        assert not _collinear_overlap(((0, 0), (2, 2)), ((0, 1), (2, 3)))  # parallel

    def test_recorded_empirical_run_all_closed_words(self):
        # recorded finding: no closed word up to length 12 self-overlaps
        # in left-step geometry (checked, not assumed)
        for n in (0, 3, 6, 9, 12):
            for word in enumerate_words(2, n):
                assert overlap_diagnostic(word) == []
