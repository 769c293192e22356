"""Figure emitters: diagram counts, red marks, golden structure."""

import pytest

from skewdyck.paths import Step, enumerate_words
from skewdyck.render import render_document, words_for_mode

GOLDEN_TIKZ_N3 = """\\begin{tikzpicture}[scale=0.2]
\t\\draw[help lines] (0,0) grid (4,2);
\t\\draw[thick] (0,0) -- (1,1) -- (2,2) -- (4,0);
\\end{tikzpicture}
"""

GOLDEN_SVG_N3 = """<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="100" height="60" viewBox="0 0 100 60">
  <g class="diagram" transform="translate(10,10)">
    <path class="grid" d="M0 0V40 M20 0V40 M40 0V40 M60 0V40 M80 0V40 M0 0H80 M0 20H80 M0 40H80" stroke="#cccccc" stroke-width="0.5" fill="none"/>
    <polyline class="path" points="0,40 20,20 40,0 80,40" stroke="black" stroke-width="2" fill="none"/>
  </g>
</svg>
"""


class TestWordSelection:
    def test_plain_mode_drops_marked_words(self):
        words = words_for_mode(2, 9, "plain")
        assert len(words) == 12
        assert all(Step.L not in w.steps for w in words)

    def test_skew_mode_keeps_all(self):
        assert len(words_for_mode(2, 9, "skew")) == 19

    def test_bad_mode(self):
        with pytest.raises(ValueError, match="mode"):
            words_for_mode(2, 9, "fancy")


class TestSvg:
    def test_diagram_counts(self):
        plain = render_document(2, 9, mode="plain", fmt="svg")
        skew = render_document(2, 9, mode="skew", fmt="svg")
        assert plain.count('class="diagram"') == 12
        assert skew.count('class="diagram"') == 19

    def test_red_segment_count_matches_marked_steps(self):
        skew = render_document(2, 9, mode="skew", fmt="svg")
        marked = sum(
            1 for w in enumerate_words(2, 9) for s in w.steps if s is Step.L
        )
        assert marked == 8
        assert skew.count('class="skew"') == marked

    def test_plain_has_no_red(self):
        plain = render_document(2, 9, mode="plain", fmt="svg")
        assert 'stroke="red"' not in plain

    def test_golden_n3(self):
        assert render_document(2, 3, mode="skew", fmt="svg") == GOLDEN_SVG_N3

    def test_left_style_emits_per_segment_lines(self):
        doc = render_document(2, 6, mode="skew", style="left", fmt="svg")
        assert "polyline" not in doc
        assert 'stroke="red"' in doc

    def test_mirrored_flips_x(self):
        doc = render_document(2, 3, mode="skew", mirrored=True, fmt="svg")
        assert 'points="80,40 60,20 40,0 0,40"' in doc

    def test_deterministic(self):
        a = render_document(2, 9, mode="skew", fmt="svg")
        b = render_document(2, 9, mode="skew", fmt="svg")
        assert a == b


class TestTikz:
    def test_diagram_counts(self):
        plain = render_document(2, 9, mode="plain", fmt="tikz")
        skew = render_document(2, 9, mode="skew", fmt="tikz")
        assert plain.count("\\begin{tikzpicture}") == 12
        assert skew.count("\\begin{tikzpicture}") == 19

    def test_golden_n3(self):
        assert render_document(2, 3, mode="skew", fmt="tikz") == GOLDEN_TIKZ_N3

    def test_overlay_marks_use_quarter_offsets(self):
        # UUUUDL's marked step runs (6,2) -> (8,0); its red copy is nudged
        doc = render_document(2, 6, mode="skew", fmt="tikz")
        assert "\\draw[thick,red] (6.25,2) -- (8,0.25);" in doc

    def test_mirrored_wraps_in_scope(self):
        doc = render_document(2, 3, mode="skew", mirrored=True, fmt="tikz")
        assert "\\begin{scope}[xscale=-1,yscale=1]" in doc
        assert "\\end{scope}" in doc

    def test_grid_is_shared_across_document(self):
        doc = render_document(2, 9, mode="skew", fmt="tikz")
        grids = {line.strip() for line in doc.splitlines() if "grid" in line}
        assert len(grids) == 1

    def test_bad_format(self):
        with pytest.raises(ValueError, match="format"):
            render_document(2, 3, fmt="png")
