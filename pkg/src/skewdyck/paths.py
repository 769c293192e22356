"""Step alphabet, word validation, exhaustive enumeration, and geometry.

A skew t-Dyck word is a sequence over {U, D, L} where U climbs one unit
and both down-steps drop t units; the word must stay on or above the
axis and may not contain UL or LU as adjacent pairs.  Closed words end
back on the axis.  The drawing convention stretches down-steps: U maps
to (+1, +1), D to (+2, -t), and L either to a true left step (-2, -t)
or, in the default overlay style, to a forward (+2, -t) segment tagged
red so the emitters can offset it visually.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Step(Enum):
    U = "U"
    D = "D"
    L = "L"

    def level_delta(self, t: int) -> int:
        return 1 if self is Step.U else -t


# canonical (and lexicographic) step order: U < D < L
STEP_ORDER = (Step.U, Step.D, Step.L)

DEFAULT_ENUMERATION_CAP = 24

GEOMETRY_MODES = ("red-overlay", "left")


@dataclass(frozen=True)
class SkewWord:
    """A candidate word; validity is checked, not enforced by construction."""

    t: int
    steps: tuple[Step, ...]

    def __post_init__(self):
        if not isinstance(self.t, int) or self.t < 2:
            raise ValueError(f"down-step magnitude t must be an integer >= 2, got {self.t}")
        object.__setattr__(self, "steps", tuple(self.steps))
        if any(not isinstance(s, Step) for s in self.steps):
            raise TypeError("steps must be Step members")

    @classmethod
    def from_string(cls, t: int, text: str) -> "SkewWord":
        try:
            return cls(t, tuple(Step(ch) for ch in text))
        except ValueError as exc:
            raise ValueError(f"bad step letter in {text!r}: {exc}") from None

    def __str__(self) -> str:
        return "".join(s.value for s in self.steps)

    def __len__(self) -> int:
        return len(self.steps)

    def levels(self) -> tuple[int, ...]:
        """Running level after each step."""
        out = []
        level = 0
        for s in self.steps:
            level += s.level_delta(self.t)
            out.append(level)
        return tuple(out)

    def final_level(self) -> int:
        return self.levels()[-1] if self.steps else 0


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    rule: str | None = None
    index: int | None = None

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "valid"
        return f"invalid: {self.rule} at index {self.index}"


def validate(word: SkewWord) -> ValidationResult:
    """Check the three word rules, reporting the first violation.

    Rules, by name: "first-step" (a nonempty word starts with U), "UL"
    and "LU" (the forbidden adjacent pairs, reported at the index of the
    pair's first step), and "below-axis" (a prefix dips under level 0).
    Invalid words are findings, not errors.
    """
    level = 0
    prev: Step | None = None
    for i, s in enumerate(word.steps):
        if i == 0 and s is not Step.U:
            return ValidationResult(False, "first-step", 0)
        if prev is Step.U and s is Step.L:
            return ValidationResult(False, "UL", i - 1)
        if prev is Step.L and s is Step.U:
            return ValidationResult(False, "LU", i - 1)
        level += s.level_delta(word.t)
        if level < 0:
            return ValidationResult(False, "below-axis", i)
        prev = s
    return ValidationResult(True)


def is_closed(word: SkewWord) -> bool:
    """True when the word ends back on the axis (empty word included)."""
    return word.final_level() == 0


def enumerate_words(
    t: int,
    n: int,
    closed_only: bool = True,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> list[SkewWord]:
    """All valid words of length n in lexicographic order (U < D < L).

    Exhaustive with pruning, so it doubles as the independent oracle for
    the counting table.  Lengths above ``cap`` (default 24) are refused:
    use the automaton counting table for totals at that size.
    """
    if t < 2:
        raise ValueError("t must be >= 2")
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > cap:
        raise ValueError(
            f"length {n} exceeds the exhaustive-enumeration cap ({cap}); "
            "use the automaton counting table (dp_counts/total) instead"
        )
    out: list[SkewWord] = []
    prefix: list[Step] = []

    def extend(level: int, last: Step | None) -> None:
        m = n - len(prefix)
        if m == 0:
            if not closed_only or level == 0:
                out.append(SkewWord(t, tuple(prefix)))
            return
        if closed_only:
            # reaching 0 needs a up-steps with a = (t*m - level)/(t+1)
            r = t * m - level
            if r < 0 or r % (t + 1):
                return
        for s in STEP_ORDER:
            if last is Step.U and s is Step.L:
                continue
            if last is Step.L and s is Step.U:
                continue
            new_level = level + s.level_delta(t)
            if new_level < 0:
                continue
            prefix.append(s)
            extend(new_level, s)
            prefix.pop()

    extend(0, None)
    return out


@dataclass(frozen=True)
class PathGeometry:
    """Stretched polyline realization of a word.

    Segments are ((x0, y0), (x1, y1)) integer pairs; colors tag each
    segment "black" (U, D) or "red" (L).  Consecutive segments chain:
    each starts where the previous one ended, beginning at the origin.
    """

    segments: tuple[tuple[tuple[int, int], tuple[int, int]], ...]
    colors: tuple[str, ...]

    def points(self) -> tuple[tuple[int, int], ...]:
        if not self.segments:
            return ((0, 0),)
        return (self.segments[0][0],) + tuple(seg[1] for seg in self.segments)


def realize(word: SkewWord, mode: str = "red-overlay") -> PathGeometry:
    """Geometry of a valid word.

    ``mode="left"`` draws L as a true left step (-2, -t); the default
    "red-overlay" keeps L pointing forward (+2, -t) and relies on the
    red tag, matching the customary figures.
    """
    if mode not in GEOMETRY_MODES:
        raise ValueError(f"mode must be one of {GEOMETRY_MODES}, got {mode!r}")
    check = validate(word)
    if not check:
        raise ValueError(f"cannot realize an invalid word ({check})")
    x, y = 0, 0
    segments = []
    colors = []
    for s in word.steps:
        if s is Step.U:
            dx, dy = 1, 1
        elif s is Step.D:
            dx, dy = 2, -word.t
        else:
            dx = -2 if mode == "left" else 2
            dy = -word.t
        segments.append(((x, y), (x + dx, y + dy)))
        colors.append("red" if s is Step.L else "black")
        x, y = x + dx, y + dy
    return PathGeometry(tuple(segments), tuple(colors))


def _collinear_overlap(seg_a, seg_b) -> bool:
    """Do two segments lie on one line and share more than a point?"""
    (ax0, ay0), (ax1, ay1) = seg_a
    (bx0, by0), (bx1, by1) = seg_b
    dax, day = ax1 - ax0, ay1 - ay0
    dbx, dby = bx1 - bx0, by1 - by0
    if dax * dby - day * dbx != 0:
        return False
    if dax * (by0 - ay0) - day * (bx0 - ax0) != 0:
        return False
    # project b's endpoints onto a's direction; overlap needs an interval
    ta0 = 0
    ta1 = dax * dax + day * day
    tb0 = dax * (bx0 - ax0) + day * (by0 - ay0)
    tb1 = dax * (bx1 - ax0) + day * (by1 - ay0)
    lo = max(min(ta0, ta1), min(tb0, tb1))
    hi = min(max(ta0, ta1), max(tb0, tb1))
    return hi > lo


def overlap_diagnostic(word: SkewWord) -> list[tuple[int, int]]:
    """Pairs of segment indices that overlap in left-step geometry.

    Collinear segments sharing a whole subsegment are flagged; touching
    endpoints (every consecutive pair) are not.  Empirically this comes
    back empty for every closed word checked, but that observation is
    recorded by the diagnostic rather than assumed.
    """
    geo = realize(word, mode="left")
    segs = geo.segments
    hits = []
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            if _collinear_overlap(segs[i], segs[j]):
                hits.append((i, j))
    return hits
