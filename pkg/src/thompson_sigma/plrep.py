"""Exact piecewise-linear homeomorphisms of [0,1] realizing F_{n,infinity}.

Every map is stored as its full breakpoint list: a strictly increasing
sequence of (input, output) pairs from (0,0) to (1,1) with linear
interpolation in between, all coordinates exact `fractions.Fraction`
values.  For generator words the slopes are integer powers of n and the
breakpoint coordinates are n-adic rationals.

Generators come from pairs of subdivisions of [0,1] induced by "right
vines": a vine with k carets repeatedly cuts the last subinterval into n
equal parts, k times.  Writing ell_0, ell_1, ... for the resulting leaf
intervals in order, the generator x_i maps the (q+2)-caret vine
subdivision onto the (q+1)-caret vine subdivision with leaf ell_i cut
into n equal parts, where i = q(n-1) + r.  Words evaluate with the
leftmost letter outermost: W(l_1 ... l_k) = M_{l_1} o ... o M_{l_k}, and
under this convention the defining relations x_j^-1 x_i x_j = x_{i+n-1}
(i > j) hold exactly; the relation suite in the tests is the contract
for this choice.

Breakpoint lists are minimized after every operation (collinear interior
points dropped), so two maps are equal as functions iff their breakpoint
tuples are equal.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import ArityMismatchError
from .words import GroupWord

Breakpoint = tuple[Fraction, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _minimized(points: list[Breakpoint]) -> tuple[Breakpoint, ...]:
    out = [points[0]]
    for k in range(1, len(points) - 1):
        x0, y0 = out[-1]
        x1, y1 = points[k]
        x2, y2 = points[k + 1]
        if (y1 - y0) * (x2 - x1) == (y2 - y1) * (x1 - x0):
            continue  # collinear, drop
        out.append(points[k])
    out.append(points[-1])
    return tuple(out)


@dataclass(frozen=True)
class PLMap:
    """An increasing PL bijection of [0,1] with exact rational breakpoints."""

    arity: int
    breakpoints: tuple[Breakpoint, ...]

    def __post_init__(self):
        bps = self.breakpoints
        if bps[0] != (_ZERO, _ZERO) or bps[-1] != (_ONE, _ONE):
            raise ValueError("breakpoints must run from (0,0) to (1,1)")
        for k in range(len(bps) - 1):
            if not (bps[k][0] < bps[k + 1][0] and bps[k][1] < bps[k + 1][1]):
                raise ValueError("breakpoints must be strictly increasing")

    def __call__(self, t: Fraction) -> Fraction:
        return evaluate_at(self, t)

    def slopes(self) -> tuple[Fraction, ...]:
        bps = self.breakpoints
        return tuple(
            (bps[k + 1][1] - bps[k][1]) / (bps[k + 1][0] - bps[k][0])
            for k in range(len(bps) - 1)
        )

    def to_quadruples(self) -> list[list[str]]:
        """Serialize as [num, den, num, den] quadruples of decimal strings."""
        return [
            [str(x.numerator), str(x.denominator), str(y.numerator), str(y.denominator)]
            for x, y in self.breakpoints
        ]


def plmap(arity: int, points: list[Breakpoint]) -> PLMap:
    return PLMap(arity, _minimized(points))


def identity_map(arity: int) -> PLMap:
    return PLMap(arity, ((_ZERO, _ZERO), (_ONE, _ONE)))


def evaluate_at(f: PLMap, t: Fraction) -> Fraction:
    if not (_ZERO <= t <= _ONE):
        raise ValueError(f"point {t} outside [0,1]")
    bps = f.breakpoints
    k = bisect_right([x for x, _ in bps], t) - 1
    if k == len(bps) - 1:
        return bps[-1][1]
    x0, y0 = bps[k]
    x1, y1 = bps[k + 1]
    return y0 + (y1 - y0) * (t - x0) / (x1 - x0)


def invert_map(f: PLMap) -> PLMap:
    """Swap input and output of every breakpoint."""
    return PLMap(f.arity, tuple((y, x) for x, y in f.breakpoints))


def compose(f: PLMap, g: PLMap) -> PLMap:
    """Exact composition f o g (apply g first), minimized."""
    if f.arity != g.arity:
        raise ArityMismatchError(f"arity {f.arity} vs {g.arity}")
    ginv = invert_map(g)
    xs = {x for x, _ in g.breakpoints}
    xs.update(evaluate_at(ginv, x) for x, _ in f.breakpoints)
    points = [(x, evaluate_at(f, evaluate_at(g, x))) for x in sorted(xs)]
    return plmap(f.arity, points)


def _vine_points(n: int, carets: int) -> list[Fraction]:
    """Breakpoints of the subdivision cut by a right vine with `carets` carets."""
    points = [_ZERO]
    lo, hi = _ZERO, _ONE
    for _ in range(carets):
        step = (hi - lo) / n
        points.extend(lo + r * step for r in range(1, n))
        lo = hi - step
    points.append(_ONE)
    return points


@lru_cache(maxsize=None)
def generator_map(n: int, i: int) -> PLMap:
    """The PL realization of the generator x_i, any i >= 0.

    The construction is uniform in i; in particular it satisfies
    x_i = x_0^-1 x_{i-(n-1)} x_0 for i >= n (tested, not assumed).
    """
    if n < 2:
        raise ValueError(f"arity must be >= 2, got {n}")
    if i < 0:
        raise ValueError(f"generator index must be >= 0, got {i}")
    q, _ = divmod(i, n - 1)
    domain = _vine_points(n, q + 2)
    rng = _vine_points(n, q + 1)
    a, b = rng[i], rng[i + 1]
    step = (b - a) / n
    rng = sorted(set(rng) | {a + t * step for t in range(1, n)})
    return plmap(n, list(zip(domain, rng)))


def evaluate_word(w: GroupWord) -> PLMap:
    """Image of a word under the representation; empty word -> identity."""
    acc = identity_map(w.arity)
    for let in w.letters:
        m = generator_map(w.arity, let.index)
        if let.exponent == -1:
            m = invert_map(m)
        acc = compose(acc, m)
    return acc


def maps_equal(f: PLMap, g: PLMap) -> bool:
    """Exact equality; breakpoint lists are already canonical."""
    return f.arity == g.arity and f.breakpoints == g.breakpoints


def is_power_of(q: Fraction, n: int) -> bool:
    """Is q an integer power n**k, k in Z?  (Test helper for slope closure.)"""
    if q <= 0:
        return False
    while q < 1:
        q *= n
    while q > 1:
        q /= n
    return q == 1
