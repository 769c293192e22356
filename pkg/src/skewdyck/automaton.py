"""Exact integer counting over the three-layer path automaton.

States are (level k, layer), where the layer records the last step
consumed: F for U (and the empty word), G for D, H for L.  Left-to-right
transitions, for down-step size t:

    U: (k, F|G)   -> (k+1, F)      (U never follows L)
    D: (k+t, F|G|H) -> (k, G)
    L: (k+t, G|H)   -> (k, H)      (L never follows U)

The right-to-left table walks the same graph with every arrow reversed.
Nonempty reversed scans start from the level-0 D- and L-states; the
level-0 F cell is pinned to zero (a reversed scan stops at the origin
rather than walking past it) and the empty word is carried by the
G and H seeds, counted once via the G column.

This table is the oracle the closed forms are measured against, so the
arithmetic is plain Python integers end to end: no modulus, no floats,
no overflow.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .series import Series


class Layer(Enum):
    F = "F"  # last step U, or the empty word
    G = "G"  # last step D
    H = "H"  # last step L


_LIDX = {Layer.F: 0, Layer.G: 1, Layer.H: 2}

DIRECTIONS = ("LR", "RL")


class CountTable:
    """Immutable grid of exact counts indexed by (steps n, level k, layer)."""

    def __init__(self, t: int, n_max: int, k_max: int, direction: str, grid):
        self.t = t
        self.n_max = n_max
        self.k_max = k_max
        self.direction = direction
        self._grid = grid  # grid[n][k][layer-index], k up to the storage bound
        self._k_store = len(grid[0]) - 1 if grid and grid[0] else -1

    def count(self, n: int, k: int, layer: Layer) -> int:
        if not (0 <= n <= self.n_max and 0 <= k <= self.k_max):
            raise ValueError(
                f"cell (n={n}, k={k}) outside the table bounds "
                f"(n<={self.n_max}, k<={self.k_max})"
            )
        if k > self._k_store:
            return 0
        return self._grid[n][k][_LIDX[layer]]

    def level_total(self, n: int, k: int) -> int:
        return sum(self.count(n, k, layer) for layer in Layer)

    def closed_count(self, n: int) -> int:
        """Closed words of length n.

        Left-to-right this sums the three level-0 layers.  Right-to-left
        the G column alone carries the closed total (its seed counts the
        empty word exactly once; the H seed would double-count it).
        """
        if self.direction == "LR":
            return self.level_total(n, 0)
        return self.count(n, 0, Layer.G)

    def column(self, layer: Layer, k: int) -> list[int]:
        """Counts for a fixed (layer, level) across n = 0..n_max."""
        return [self.count(n, k, layer) for n in range(self.n_max + 1)]

    def column_series(self, layer: Layer, k: int) -> Series:
        """The same column as an exact series in z, known to O(z^(n_max+1))."""
        return Series(0, [Fraction(c) for c in self.column(layer, k)])

    def to_csv(self) -> str:
        lines = ["n,k,layer,count"]
        for n in range(self.n_max + 1):
            for k in range(self.k_max + 1):
                for layer in Layer:
                    lines.append(f"{n},{k},{layer.value},{self.count(n, k, layer)}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        cells = [
            {"n": n, "k": k, "layer": layer.value, "count": str(self.count(n, k, layer))}
            for n in range(self.n_max + 1)
            for k in range(self.k_max + 1)
            for layer in Layer
        ]
        return json.dumps(
            {
                "t": self.t,
                "direction": self.direction,
                "n_max": self.n_max,
                "k_max": self.k_max,
                "counts": cells,
            },
            indent=2,
        )


def dp_counts(t: int, n_max: int, k_max: int | None = None, direction: str = "LR") -> CountTable:
    """Build the counting table for down-step size t.

    ``k_max`` bounds the exposed levels and defaults to n_max (no word
    outlevels its step count going left to right).  Internally the grid
    is sized to cover every reachable level for the chosen direction, so
    all exposed cells are exact.
    """
    if t < 2:
        raise ValueError("t must be >= 2")
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if k_max is None:
        k_max = n_max
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    if direction not in DIRECTIONS:
        raise ValueError(f"direction must be one of {DIRECTIONS}")

    # reachable levels: <= n going LR (all-U), <= t*n going RL (all rev-down)
    k_store = max(k_max, n_max if direction == "LR" else t * n_max)
    width = k_store + 1
    grid = [[[0, 0, 0] for _ in range(width)] for _ in range(n_max + 1)]

    iF, iG, iH = 0, 1, 2
    if direction == "LR":
        grid[0][0][iF] = 1
    else:
        grid[0][0][iG] = 1
        grid[0][0][iH] = 1

    def cell(n, k, idx):
        if 0 <= k <= k_store:
            return grid[n][k][idx]
        return 0

    for n in range(1, n_max + 1):
        p = n - 1
        for k in range(width):
            if direction == "LR":
                if k >= 1:
                    grid[n][k][iF] = cell(p, k - 1, iF) + cell(p, k - 1, iG)
                grid[n][k][iG] = cell(p, k + t, iF) + cell(p, k + t, iG) + cell(p, k + t, iH)
                grid[n][k][iH] = cell(p, k + t, iG) + cell(p, k + t, iH)
            else:
                if k >= 1:
                    grid[n][k][iF] = cell(p, k + 1, iF) + (cell(p, k - t, iG) if k >= t else 0)
                grid[n][k][iG] = cell(p, k + 1, iF) + (
                    cell(p, k - t, iG) + cell(p, k - t, iH) if k >= t else 0
                )
                if k >= t:
                    grid[n][k][iH] = cell(p, k - t, iG) + cell(p, k - t, iH)

    return CountTable(t, n_max, k_max, direction, grid)


def total(t: int, n: int) -> int:
    """Closed words of length n, left to right.

    Zero whenever n is not a multiple of t+1 (every closed word balances
    t up-steps against each down-step); the table yields that for free.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    return dp_counts(t, n, k_max=0).closed_count(n)


def prefix_count(t: int, layer: Layer, k: int, n: int, direction: str = "LR") -> int:
    """Single cell: words of length n ending at level k in the given layer."""
    return dp_counts(t, n, k_max=k, direction=direction).count(n, k, layer)


# -- functional-equation verification ---------------------------------------
#
# The layer generating functions F(u), G(u), H(u) (coefficient of u^k is
# the level-k column) satisfy, left to right for general t:
#
#     F - 1   = u z (F + G)
#     u^t G   = z (F - lowF) + z (G - lowG) + z (H - lowH)
#     u^t H   = z (G - lowG) + z (H - lowH)
#
# where lowX truncates the terms below u^t.  Right to left (t = 2):
#
#     u (F - u f1)        = u^3 z G + z (F - u f1 - u^2 f2)
#     u (G - g0 - u g1)   = z (F - u f1 - u^2 f2) + u^3 z G + u^3 z H
#     H - 1               = u^2 z G + u^2 z H
#
# The u-polynomials below carry Series coefficients from the table, so
# the check confirms the summed equations exactly on the truncation.


def _up_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for j, s in b.items():
        out[j] = out[j] + s if j in out else s
    return out


def _up_neg(a: dict) -> dict:
    return {j: -s for j, s in a.items()}

def _up_zscale(a: dict, shift: int = 1) -> dict:
    """Multiply every coefficient by z**shift."""
    return {j: s.shift(shift) for j, s in a.items()}


def _up_ushift(a: dict, m: int) -> dict:
    return {j + m: s for j, s in a.items()}


def _up_trunc(a: dict, deg: int) -> dict:
    return {j: s for j, s in a.items() if j <= deg}


def _up_low(a: dict, below: int) -> dict:
    return {j: s for j, s in a.items() if j < below}


def _residual_ok(resid: dict, z_order: int) -> tuple[bool, str | None]:
    for j in sorted(resid):
        r = resid[j].truncate(z_order + 1)
        if not r.is_zero():
            e, c = next(r.terms())
            return False, f"u^{j} z^{e} term {c}"
    return True, None


@dataclass(frozen=True)
class EquationReport:
    t: int
    direction: str
    u_degree: int
    z_order: int
    results: tuple[tuple[str, bool, str | None], ...]

    @property
    def all_hold(self) -> bool:
        return all(ok for _, ok, _ in self.results)

    def __str__(self) -> str:
        lines = [
            f"functional equations ({self.direction}, t={self.t}, "
            f"u<= {self.u_degree}, z<= {self.z_order}):"
        ]
        for name, ok, bad in self.results:
            lines.append(f"  {name}: {'ok' if ok else 'VIOLATED at ' + bad}")
        return "\n".join(lines)


def verify_functional_equations(
    t: int,
    u_degree: int = 8,
    z_order: int = 20,
    direction: str = "LR",
    table: CountTable | None = None,
) -> EquationReport:
    """Check the summed layer equations on DP-derived truncations.

    Coefficients above ``u_degree`` are truncation artifacts of the
    finite u-window and are excluded; everything kept must vanish
    identically through ``z_order``.  Right-to-left equations are only
    on record for t = 2.
    """
    if direction == "RL" and t != 2:
        raise ValueError("right-to-left equations are only established for t=2")
    if table is None:
        table = dp_counts(t, z_order, k_max=u_degree, direction=direction)
    if table.n_max < z_order or table.k_max < u_degree or table.direction != direction:
        raise ValueError("table too small for the requested verification")

    F = {k: table.column_series(Layer.F, k) for k in range(u_degree + 1)}
    G = {k: table.column_series(Layer.G, k) for k in range(u_degree + 1)}
    H = {k: table.column_series(Layer.H, k) for k in range(u_degree + 1)}
    one = {0: Series.one(z_order + 2)}

    checks = []
    if direction == "LR":
        fg = _up_add(F, G)
        r1 = _up_add(F, _up_neg(_up_add(one, _up_ushift(_up_zscale(fg), 1))))
        checks.append(("layer-F", r1))
        for name, lhs_col, rhs_cols in (
            ("layer-G", G, (F, G, H)),
            ("layer-H", H, (G, H)),
        ):
            resid = _up_ushift(lhs_col, t)
            for col in rhs_cols:
                tail = _up_add(col, _up_neg(_up_low(col, t)))
                resid = _up_add(resid, _up_neg(_up_zscale(tail)))
            checks.append((name, resid))
    else:
        f1, f2 = F[1], F[2]
        g0, g1 = G[0], G[1]
        f_tail = _up_add(F, _up_neg({1: f1, 2: f2}))  # F - u f1 - u^2 f2
        r1 = _up_add(
            _up_ushift(_up_add(F, _up_neg({1: f1})), 1),
            _up_neg(_up_add(_up_ushift(_up_zscale(G), 3), _up_zscale(f_tail))),
        )
        checks.append(("layer-F", r1))
        g_head = _up_add(G, _up_neg({0: g0, 1: g1}))
        r2 = _up_add(
            _up_ushift(g_head, 1),
            _up_neg(
                _up_add(
                    _up_zscale(f_tail),
                    _up_add(_up_ushift(_up_zscale(G), 3), _up_ushift(_up_zscale(H), 3)),
                )
            ),
        )
        checks.append(("layer-G", r2))
        r3 = _up_add(
            _up_add(H, _up_neg(one)),
            _up_neg(_up_add(_up_ushift(_up_zscale(G), 2), _up_ushift(_up_zscale(H), 2))),
        )
        checks.append(("layer-H", r3))

    results = []
    for name, resid in checks:
        ok, bad = _residual_ok(_up_trunc(resid, u_degree), z_order)
        results.append((name, ok, bad))
    return EquationReport(t, direction, u_degree, z_order, tuple(results))
