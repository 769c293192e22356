"""The full cross-validation suite behind the `verify` command.

Every closed form is measured against the exhaustive enumerator or the
counting table; every root is measured against its kernel; and the one
place the literature disagrees with itself (the length-15 count) gets a
single adjudication line computed fresh on every run.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from . import closed_form, kernel, reverse
from .automaton import Layer, dp_counts, verify_functional_equations
from .paths import Step, enumerate_words
from .series import Series


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    order: int
    t_list: tuple[int, ...]
    checks: list[CheckResult] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_text(self) -> str:
        lines = [f"verification (order={self.order}, t={','.join(map(str, self.t_list))})"]
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            detail = f"  [{c.detail}]" if c.detail else ""
            lines.append(f"  {status}  {c.name}{detail}")
        for note in self.notes:
            lines.append(f"  note: {note}")
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps(
            {
                "order": self.order,
                "t_list": list(self.t_list),
                "passed": self.passed,
                "checks": [
                    {"name": c.name, "passed": c.passed, "detail": c.detail}
                    for c in self.checks
                ],
                "notes": self.notes,
            },
            indent=2,
        )


def _word_layer(word) -> Layer:
    if not word.steps:
        return Layer.F
    last = word.steps[-1]
    return {Step.U: Layer.F, Step.D: Layer.G, Step.L: Layer.H}[last]


def run_verification(order: int = 64, t_list: tuple[int, ...] = (2, 3)) -> VerificationReport:
    """Run every suite at the given series order.

    Orders below 32 shrink some comparison windows; the report says so
    in a note rather than silently testing less.
    """
    if order < 8:
        raise ValueError("order must be >= 8")
    report = VerificationReport(order=order, t_list=tuple(t_list))
    add = report.checks.append

    def guard(name: str, fn) -> None:
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failure, not a stop
            ok, detail = False, f"error: {exc}"
        add(CheckResult(name, ok, detail))

    if order < 32:
        report.notes.append(
            f"order {order} < 32: comparison windows are reduced accordingly"
        )

    # enumeration vs table, closed counts and per-cell, small lengths
    for t in t_list:
        def enum_check(t=t):
            n_hi = min(12, order - 1)
            table = dp_counts(t, n_hi)
            for n in range(n_hi + 1):
                words = enumerate_words(t, n, closed_only=False)
                cells: dict[tuple[int, Layer], int] = {}
                for w in words:
                    key = (w.final_level(), _word_layer(w))
                    cells[key] = cells.get(key, 0) + 1
                for k in range(n + 1):
                    for layer in Layer:
                        if table.count(n, k, layer) != cells.get((k, layer), 0):
                            return False, f"cell mismatch at n={n}, k={k}, {layer.value}"
            return True, f"all cells match exhaustive enumeration, n <= {n_hi}"
        guard(f"enumeration-vs-table t={t}", enum_check)

    # functional equations
    z_ord = min(20, order - 1)
    for t in t_list:
        guard(
            f"functional-equations LR t={t}",
            lambda t=t: (verify_functional_equations(t, 8, z_ord, "LR").all_hold, ""),
        )
    guard(
        "functional-equations RL t=2",
        lambda: (verify_functional_equations(2, 8, z_ord, "RL").all_hold, ""),
    )

    # kernel roots: residuals and published expansions
    roots = {t: kernel.good_root(t, order) for t in set(t_list) | {2}}
    for t, s in sorted(roots.items()):
        guard(
            f"good-root residual t={t}",
            lambda t=t, s=s: (
                kernel.kernel_residual(kernel.kernel_poly(t), s)
                .truncate(order - 2 * t)
                .is_zero(),
                f"zero through z^{order - 2 * t - 1}",
            ),
        )

    s4_published = {
        -1: 1, 2: -1, 5: -2, 8: -8, 11: -39, 14: -210,
        17: -1203, 20: -7192, 23: -44362, 26: -280250,
    }
    def s4_check():
        window = {e: c for e, c in s4_published.items() if e < order}
        rows = kernel.compare_with_published(roots[2], window)
        bad = [r for r in rows if not r["matches"]]
        return not bad, f"{len(rows)} published coefficients checked"
    guard("good-root published coefficients t=2", s4_check)

    if 3 in t_list:
        def s6_check():
            window = {e: c for e, c in kernel.S6_PUBLISHED.items() if e < order}
            rows = kernel.compare_with_published(roots[3], window)
            diverging = [
                f"z^{r['exponent']}: computed {r['computed']} vs published {r['published']}"
                for r in rows
                if not r["matches"]
            ]
            detail = (
                "matches the published expansion"
                if not diverging
                else "published-value divergences (reported, not failures): "
                + "; ".join(diverging)
            )
            return True, detail
        guard("good-root published comparison t=3", s6_check)

    # t=2 closed forms against the table
    sol = kernel.solve_t2(order)
    def totals_check():
        n_hi = min(60, sol.total.frontier - 1)
        table = dp_counts(2, n_hi, k_max=0)
        for n in range(n_hi + 1):
            if sol.total.coeff(n) != Fraction(table.closed_count(n)):
                return False, f"first mismatch at length {n}"
        return True, f"exact match for all lengths <= {n_hi}"
    guard("kernel total vs table t=2", totals_check)

    def identities_check():
        w = order - 2
        one_ok = ((sol.s.shift(1)) * (sol.g0 + 1) - 1).truncate(w).is_zero()
        diff_ok = (
            ((sol.g0 - sol.h0) - (sol.g0 + 1).shift(2) * sol.s.reciprocal())
            .truncate(w)
            .is_zero()
        )
        return one_ok and diff_ok, f"z*s*(1+g0)=1 and g0-h0=z^2(1+g0)/s through z^{w - 1}"
    guard("internal identities t=2", identities_check)

    def prefix_check():
        n_hi = max(4, min(24, order - 12))
        table = dp_counts(2, n_hi, k_max=8)
        for layer in Layer:
            for k in range(9):
                ser = kernel.prefix_series_t2(layer, k, n_hi + 1, sol)
                for n in range(n_hi + 1):
                    if ser.coeff(n) != Fraction(table.count(n, k, layer)):
                        return False, f"{layer.value}_{k} differs at z^{n}"
        return True, f"closed forms match the table for k <= 8, n <= {n_hi}"
    guard("prefix closed forms vs table t=2", prefix_check)

    def recurrence_all():
        ord_rec = max(2, min(30, order - 13))
        for layer in Layer:
            if not kernel.recurrence_check(layer, 6, ord_rec, sol).all_hold:
                return False, f"layer {layer.value}"
        return True, f"order-4 level recurrence holds through z^{ord_rec}, k <= 6"
    guard("level recurrence t=2", recurrence_all)

    for t in sorted(set(t_list) | {2, 4}):
        guard(
            f"geometric ratio t={t}",
            lambda t=t: (
                kernel.ratio_property(t, 4, min(20, order - 4)).all_hold,
                "column k = column k+1 * root, k <= 4",
            ),
        )

    # coefficient formulas
    def narayana_check():
        r = closed_form.r_series(41)
        for n in range(1, 41):
            if Fraction(closed_form.narayana_sum(n)) != r.coeff(n):
                return False, f"n={n}"
        return True, "narayana sum equals [z^n] R for n <= 40"
    guard("narayana vs R", narayana_check)

    def r_published_check():
        expected = [1, 1, 4, 19, 100, 562, 3304, 20071]
        got = [closed_form.r_coefficient(n) for n in range(8)]
        return got == expected, f"first coefficients {got}"
    guard("R published coefficients", r_published_check)

    guard(
        "lagrange identity",
        lambda: (
            all(closed_form.lagrange_identity_check(n) for n in range(1, 41)),
            "n <= 40",
        ),
    )

    def r_quadratic_check():
        r = closed_form.r_series(order)
        lhs = (r.shift(1) * 6 - 1 - Series.poly({1: 2}, order + 2)) ** 2
        rhs = Series.poly({0: 1, 1: -8, 2: 4}, order + 2)
        return (lhs - rhs).truncate(order).is_zero(), "(6zR - 1 - 2z)^2 = 1 - 8z + 4z^2"
    guard("R defining quadratic", r_quadratic_check)

    # right-to-left route
    rl = reverse.solve_rl(order)
    def s1_check():
        window = {e: c for e, c in reverse.S1_PUBLISHED.items() if e < order}
        rows = kernel.compare_with_published(rl.s1, window)
        bad = [r for r in rows if not r["matches"]]
        return not bad, f"{len(rows)} published coefficients checked"
    guard("valuation-2 root published coefficients", s1_check)

    def rl_root_checks():
        w = order - 6
        quartic_ok = (
            kernel.kernel_residual(kernel.kernel_poly(2), rl.s1).truncate(w).is_zero()
        )
        reflected_ok = (
            kernel.eval_poly_at_series(reverse.RECIPROCAL_KERNEL, rl.t1)
            .truncate(w)
            .is_zero()
        )
        recip_ok = (
            kernel.eval_poly_at_series(
                reverse.RECIPROCAL_KERNEL, rl.s1.reciprocal()
            )
            .truncate(order - 12)
            .is_zero()
        )
        inverse_ok = (rl.t1 * roots[2] - 1).truncate(order - 2).is_zero()
        return (
            quartic_ok and reflected_ok and recip_ok and inverse_ok,
            "roots satisfy both kernels; t1 inverts the surviving root",
        )
    guard("reflected-kernel consistency", rl_root_checks)

    def rl_g0_check():
        hi = min(order, sol.total.frontier, rl.g0.frontier)
        forms_ok = rl.g0.agrees(reverse.rl_g0_rational(order), upto=hi)
        total_ok = rl.g0.agrees(sol.total, upto=hi)
        return forms_ok and total_ok, f"both forms equal the LR total through z^{hi - 1}"
    guard("reflected closed form", rl_g0_check)

    def mirror_check():
        n_hi = 30
        lr = dp_counts(2, n_hi, k_max=0)
        rlt = dp_counts(2, n_hi, k_max=0, direction="RL")
        for n in range(n_hi + 1):
            if lr.closed_count(n) != rlt.closed_count(n):
                return False, f"first mismatch at length {n}"
        return True, f"table totals agree both directions, lengths <= {n_hi}"
    guard("mirror consistency", mirror_check)

    # the single adjudication line for the diverging length-15 value
    def adjudication():
        dp15 = dp_counts(2, 15, k_max=0).closed_count(15)
        r5 = closed_form.r_coefficient(5)
        total15 = sol.total if sol.total.frontier > 15 else kernel.solve_t2(16).total
        k15 = total15.coeff(15)
        assert k15.denominator == 1
        k15 = k15.numerator
        sides = []
        if dp15 == k15:
            sides.append(f"kernel-method value {k15}")
        if dp15 == r5:
            sides.append(f"closed-form R value {r5}")
        matched = " and ".join(sides) if sides else "neither published value"
        return True, (
            f"table count of closed length-15 words is {dp15}; it matches the "
            f"{matched} (kernel series gives {k15}, R gives {r5})"
        )
    guard("length-15 adjudication", adjudication)

    return report
