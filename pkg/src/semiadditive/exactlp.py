"""Exact linear feasibility for small dense systems.

Decides existence of x >= 0 with A x = b over the rationals, by a phase-one
simplex on `fractions.Fraction` entries with Bland's rule (no cycling, no
tolerances). When the system is infeasible the final multipliers give a
Farkas certificate: y with y.A <= 0 componentwise and y.b > 0.

Intended scale is tiny (ten-ish rows, under a hundred columns), so the
tableau is recomputed naively and nothing is sparse.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class FeasibilityResult:
    """Outcome of a feasibility solve.

    Exactly one of `solution` (x >= 0 with A x = b) and `certificate`
    (y with y.A <= 0 and y.b > 0) is set.
    """

    feasible: bool
    solution: tuple[Fraction, ...] | None
    certificate: tuple[Fraction, ...] | None


def solve_eq_nonneg(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> FeasibilityResult:
    m = len(rows)
    n = len(rows[0]) if m else 0
    if any(len(r) != n for r in rows) or len(rhs) != m:
        raise ValueError("ragged system")

    # Sign-normalize so the right-hand side is nonnegative, remembering flips
    # so the certificate can be mapped back to the original row orientation.
    signs = [-_ONE if rhs[i] < 0 else _ONE for i in range(m)]
    tableau = [
        [signs[i] * Fraction(rows[i][j]) for j in range(n)]
        + [_ONE if k == i else _ZERO for k in range(m)]
        + [signs[i] * Fraction(rhs[i])]
        for i in range(m)
    ]
    basis = list(range(n, n + m))
    total = n + m

    def reduced_cost(j: int) -> Fraction:
        # cost is 0 on original columns, 1 on artificials
        r = _ONE if j >= n else _ZERO
        for i in range(m):
            if basis[i] >= n and tableau[i][j] != 0:
                r -= tableau[i][j]
        return r

    while True:
        entering = -1
        for j in range(total):
            if j not in basis and reduced_cost(j) < 0:
                entering = j  # Bland: smallest eligible index
                break
        if entering < 0:
            break
        leaving = -1
        best: Fraction | None = None
        for i in range(m):
            coeff = tableau[i][entering]
            if coeff > 0:
                ratio = tableau[i][-1] / coeff
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leaving]):
                    best = ratio
                    leaving = i
        if leaving < 0:
            raise AssertionError("phase-one objective is bounded below; no unbounded ray exists")
        pivot = tableau[leaving][entering]
        tableau[leaving] = [v / pivot for v in tableau[leaving]]
        for i in range(m):
            if i != leaving and tableau[i][entering] != 0:
                factor = tableau[i][entering]
                row_l = tableau[leaving]
                tableau[i] = [v - factor * w for v, w in zip(tableau[i], row_l)]
        basis[leaving] = entering

    objective = sum((tableau[i][-1] for i in range(m) if basis[i] >= n), _ZERO)
    if objective == 0:
        x = [_ZERO] * n
        for i in range(m):
            if basis[i] < n:
                x[basis[i]] = tableau[i][-1]
        return FeasibilityResult(True, tuple(x), None)

    # y = c_B B^{-1}; the artificial block of the tableau is B^{-1} itself.
    y = []
    for i in range(m):
        yi = sum((tableau[k][n + i] for k in range(m) if basis[k] >= n), _ZERO)
        y.append(signs[i] * yi)
    return FeasibilityResult(False, None, tuple(y))
