"""Coefficient formulas for the length-3n totals and their cross-checks.

The candidate generating function for closed skew 2-Dyck paths of length
3n is

    R(z) = 1/(6z) + 1/3 - sqrt(1 - 8z + 4z^2) / (6z),

whose coefficients reduce, through a Lagrange-inversion step, to the
weighted Narayana sum (1/n) * sum(3^i C(n,i) C(n,i+1), i < n).  The
counting table disagrees with R from n = 5 on, so nothing here is taken
as ground truth: the report lays the four computations side by side and
lets the table adjudicate.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import kernel
from .automaton import CountTable, dp_counts
from .series import Series


def r_series(order: int = 32) -> Series:
    """Expand R(z); the 1/z poles cancel, leaving integer coefficients."""
    work = order + 2
    root = Series.poly({0: 1, 1: -8, 2: 4}, work).sqrt()
    numerator = Series.poly({0: 1, 1: 2}, work) - root
    r = numerator.shift(-1) / 6
    assert r.valuation >= 0, "pole cancellation failed in R(z)"
    return r.truncate(order)


def r_coefficient(n: int) -> int:
    """Exact integer [z^n] R(z)."""
    c = r_series(n + 1).coeff(n)
    assert c.denominator == 1
    return c.numerator


def narayana_sum(n: int) -> int:
    """(1/n) * sum(3^i * C(n,i) * C(n,i+1) for i < n), exactly.

    The products C(n,i) C(n,i+1) / n are n times the Narayana numbers,
    so the division is always exact; that is asserted, not rounded.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    s = sum(3**i * comb(n, i) * comb(n, i + 1) for i in range(n))
    assert s % n == 0, f"weighted Narayana sum not divisible by n={n}"
    return s // n


def lagrange_identity_check(n: int) -> bool:
    """Coefficient identity behind the Narayana form of [z^n] R.

    Verifies  sum 3^i C(n-1,i) C(n+1,i+1)  -  sum 3^i C(n,i) C(n,i+1)
    equals (1/n) sum 3^i C(n,i) C(n,i+1), all in exact integers.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    a = sum(3**i * comb(n - 1, i) * comb(n + 1, i + 1) for i in range(n + 1))
    b = sum(3**i * comb(n, i) * comb(n, i + 1) for i in range(n))
    return b % n == 0 and a - b == b // n


@dataclass(frozen=True)
class CoeffReport:
    """One comparison row for the length-3n closed-path count."""

    n: int
    r_coeff: int
    narayana_value: int
    kernel_total: int
    dp_total: int

    @property
    def narayana_matches_r(self) -> bool:
        return self.narayana_value == self.r_coeff

    @property
    def kernel_matches_dp(self) -> bool:
        return self.kernel_total == self.dp_total

    @property
    def r_matches_dp(self) -> bool:
        return self.r_coeff == self.dp_total


def discrepancy_report(
    n_max: int,
    table: CountTable | None = None,
    solution: kernel.KernelSolution | None = None,
) -> list[CoeffReport]:
    """Side-by-side [z^n]R, Narayana sum, kernel total, and table count.

    Agreement of the first two is a theorem (and tested as one); the
    others are findings.  None of the columns is hard-coded: whichever
    printed value the table confirms, the report simply shows it.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    r = r_series(n_max + 1)
    if solution is None or solution.order < 3 * n_max + 1:
        solution = kernel.solve_t2(3 * n_max + 1)
    if table is None or table.n_max < 3 * n_max:
        table = dp_counts(2, 3 * n_max, k_max=0)
    rows = []
    for n in range(1, n_max + 1):
        rc = r.coeff(n)
        kc = solution.total.coeff(3 * n)
        assert rc.denominator == 1 and kc.denominator == 1
        rows.append(
            CoeffReport(
                n=n,
                r_coeff=rc.numerator,
                narayana_value=narayana_sum(n),
                kernel_total=kc.numerator,
                dp_total=table.closed_count(3 * n),
            )
        )
    return rows


def report_markdown(rows: list[CoeffReport]) -> str:
    lines = [
        "| n | length | [z^n] R | Narayana sum | kernel total | table count | R = table | kernel = table |",
        "|---|--------|---------|--------------|--------------|-------------|-----------|----------------|",
    ]
    for row in rows:
        lines.append(
            f"| {row.n} | {3 * row.n} | {row.r_coeff} | {row.narayana_value} "
            f"| {row.kernel_total} | {row.dp_total} "
            f"| {'yes' if row.r_matches_dp else 'NO'} "
            f"| {'yes' if row.kernel_matches_dp else 'NO'} |"
        )
    return "\n".join(lines) + "\n"


def report_json(rows: list[CoeffReport]) -> str:
    return json.dumps(
        [
            {
                "n": row.n,
                "length": 3 * row.n,
                "r_coeff": str(row.r_coeff),
                "narayana_value": str(row.narayana_value),
                "kernel_total": str(row.kernel_total),
                "dp_total": str(row.dp_total),
                "narayana_matches_r": row.narayana_matches_r,
                "kernel_matches_dp": row.kernel_matches_dp,
                "r_matches_dp": row.r_matches_dp,
            }
            for row in rows
        ],
        indent=2,
    )
