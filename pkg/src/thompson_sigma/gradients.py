"""Gradient series along chains of finite-index subgroups.

For a chain (H_s) the rank gradient compares d(H_s) - 1 to the index,
the deficiency gradient compares def(H_s) to the index, and the chi_m
gradient compares the partial Euler characteristic to the index.  Exact
values of d and def are out of reach, so every row carries a certified
rational interval [lower, upper]; all three gradients vanish whenever the
index tends to infinity, which shows up as interval widths shrinking like
1/index and is what `certify_convergence` checks exactly.

All arithmetic is rational; no floating point anywhere.  The s = 0 row of
a nested chain is the whole group, which contributes its own exact data:
d = n minimal generators and, for n = 2, the classical complex with two
cells in every positive dimension.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .complexes import (
    cells_for_subgroup_F,
    chi_m,
    classical_f_cells,
    d_bound,
    deficiency_bounds,
)
from .errors import DomainError
from .lattices import ChainSpec, chain

RANK = "rank"
DEFICIENCY = "deficiency"
CHI = "chi"


@dataclass(frozen=True)
class GradientRow:
    s: int
    index: int
    lower: Fraction
    upper: Fraction | None  # None when the bound is symbolic in d0
    upper_symbolic: str | None = None


@dataclass(frozen=True)
class GradientSeries:
    kind: str
    arity: int
    m: int | None
    rows: tuple[GradientRow, ...]


def _chain_terms(spec: ChainSpec, n: int, steps: int):
    count = steps if steps is not None else spec.length
    if count is None or count < 1:
        raise ValueError("need a positive number of chain steps")
    for s in range(count):
        lat = chain(spec, s, n)
        yield s, lat, lat.index()


def rank_gradient_series(
    spec: ChainSpec,
    n: int,
    steps: int | None = None,
    *,
    d0_override: int | None = None,
) -> GradientSeries:
    """Rows (d(H_s) - 1) / [G : H_s], bounded above via the cell calculus.

    The lower value is 0 (infinite groups need at least one generator).
    For n >= 3 the generic upper bound is symbolic in d0 unless a numeric
    override is supplied.
    """
    rows = []
    for s, lat, idx in _chain_terms(spec, n, steps):
        if idx == 1:
            upper, symbolic = Fraction(n - 1, 1), None
        else:
            report = d_bound(lat, d0_override=d0_override, chi_upto=0)
            if report.d_upper is not None:
                upper, symbolic = Fraction(report.d_upper - 1, idx), None
            else:
                upper, symbolic = None, f"({n + 1}+d0)/{idx}"
        rows.append(GradientRow(s, idx, Fraction(0), upper, symbolic))
    return GradientSeries(RANK, n, None, tuple(rows))


def _subgroup_cells(lat, idx):
    if idx == 1:
        return classical_f_cells()
    return cells_for_subgroup_F(lat)[0]


def deficiency_gradient_series(
    spec: ChainSpec, n: int = 2, steps: int | None = None
) -> GradientSeries:
    """Rows [def_lower, def_upper] / [G : H_s]; needs the n = 2 cell counts."""
    if n != 2:
        raise DomainError("deficiency gradient needs the n = 2 cell counts")
    rows = []
    for s, lat, idx in _chain_terms(spec, n, steps):
        lower, upper = deficiency_bounds(_subgroup_cells(lat, idx), n)
        rows.append(
            GradientRow(s, idx, Fraction(lower, idx), Fraction(upper, idx))
        )
    return GradientSeries(DEFICIENCY, n, None, tuple(rows))


def chi_m_gradient_series(
    spec: ChainSpec, m: int, n: int = 2, steps: int | None = None
) -> GradientSeries:
    """Rows chi_m(H_s) / [G : H_s]; nonnegative, so the lower value is 0."""
    if n != 2:
        raise DomainError("chi_m gradient needs the n = 2 cell counts")
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    rows = []
    for s, lat, idx in _chain_terms(spec, n, steps):
        value = chi_m(_subgroup_cells(lat, idx), m)
        rows.append(GradientRow(s, idx, Fraction(0), Fraction(value, idx)))
    return GradientSeries(CHI, n, m, tuple(rows))


def certify_convergence(
    series: GradientSeries, eps: Fraction
) -> tuple[bool, int | None]:
    """Does some tail of the series stay within eps of zero?

    Returns (certified, s of the first row from which every later row has
    max(|lower|, |upper|) <= eps).  Exact comparison; symbolic rows cannot
    be certified.
    """
    if not series.rows:
        raise DomainError("series too short to certify")
    first = None
    for row in series.rows:
        if row.upper is None:
            raise DomainError("cannot certify a series with symbolic bounds")
        if max(abs(row.lower), abs(row.upper)) <= eps:
            if first is None:
                first = row.s
        else:
            first = None
    return (first is not None), first
