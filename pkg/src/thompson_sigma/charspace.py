"""Character space of F_{n,infinity} and Sigma-invariant membership.

A character is a homomorphism chi : G -> R; it factors through the
abelianization Z^n, so it is stored as the rational value vector
(chi(x_0), ..., chi(x_{n-1})).  Higher generators are implied by the
folding rule chi(x_i) = values[1 + (i-1) mod (n-1)] and never stored.

The character sphere S(G) identifies positive rational multiples; the
canonical representative divides by |first nonzero coordinate|.  Exactly
two sphere points lie outside Sigma^1:

    chi1 = (-1, 0, ..., 0)      chi2 = (1, 1, ..., 1)

and for m >= 2 the complement of Sigma^m is the wedge of nonnegative
combinations r1*chi1 + r2*chi2, i.e. vectors (r2 - r1, r2, ..., r2).
That closed form is unconditional for m = 2 (any n) and for every m when
n = 2; for n >= 3 and m >= 3 it is conjectural and callers must pass
assume_conjecture=True.

`kernel_finiteness` classifies the finiteness type of the subgroup
N >= G' whose image in Z^n is a given integer lattice L: N has type F_m
iff no nonzero rational vector annihilating L falls outside Sigma^m,
which reduces to exact linear algebra against the wedge.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._linalg import rational_nullspace, rational_rank
from .errors import ArityMismatchError, ConjectureRequiredError, ParseError, ZeroCharacterError
from .words import GroupWord, abelianize

RationalVector = tuple[Fraction, ...]


@dataclass(frozen=True)
class Character:
    """Rational character of F_{n,infinity}, stored on x_0..x_{n-1}."""

    arity: int
    values: RationalVector

    def __post_init__(self):
        if self.arity < 2:
            raise ValueError(f"arity must be >= 2, got {self.arity}")
        if len(self.values) != self.arity:
            raise ValueError(
                f"expected {self.arity} values, got {len(self.values)}"
            )

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values)

    def value_at(self, i: int) -> Fraction:
        """chi(x_i) for any i >= 0, via the folding rule."""
        if i == 0:
            return self.values[0]
        return self.values[1 + (i - 1) % (self.arity - 1)]


@dataclass(frozen=True)
class SpherePoint:
    """A character up to positive scaling, canonically normalized."""

    arity: int
    values: RationalVector


@dataclass(frozen=True)
class FinitenessReport:
    """Classification of the finiteness type of a subgroup above G'."""

    is_finitely_generated: bool
    max_certified_f_type: int | str  # integer m, or "infinity"
    witness: Character | None  # a vanishing character outside the certified Sigma^m
    assumed_conjecture: bool


def character(arity: int, values) -> Character:
    return Character(arity, tuple(Fraction(v) for v in values))


def parse_character(arity: int, text: str) -> Character:
    """Parse a comma-separated rational vector like `-1,0` or `1/2,3`."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != arity:
        raise ParseError(f"expected {arity} comma-separated values, got {len(parts)}")
    try:
        return Character(arity, tuple(Fraction(p) for p in parts))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational vector {text!r}: {exc}") from exc


def chi1(n: int) -> Character:
    """The character with chi(x_0) = -1 and chi(x_i) = 0 for i >= 1."""
    return Character(n, (Fraction(-1),) + (Fraction(0),) * (n - 1))


def chi2(n: int) -> Character:
    """The character with chi(x_i) = 1 for all i."""
    return Character(n, (Fraction(1),) * n)


def sphere_point(chi: Character) -> SpherePoint:
    """Canonical positive-scaling representative of a nonzero character."""
    if chi.is_zero():
        raise ZeroCharacterError("zero character has no sphere point")
    lead = next(v for v in chi.values if v != 0)
    scale = abs(lead)
    return SpherePoint(chi.arity, tuple(v / scale for v in chi.values))


def evaluate(chi: Character, w: GroupWord) -> Fraction:
    """chi(w), i.e. the scalar product of the value vector with abelianize(w)."""
    if chi.arity != w.arity:
        raise ArityMismatchError(f"arity {chi.arity} vs {w.arity}")
    return sum(
        (v * a for v, a in zip(chi.values, abelianize(w))), start=Fraction(0)
    )


def in_sigma1(chi: Character) -> bool:
    """Membership of [chi] in Sigma^1: everything except [chi1] and [chi2]."""
    p = sphere_point(chi)
    return p != sphere_point(chi1(chi.arity)) and p != sphere_point(chi2(chi.arity))


def _in_complement_wedge(values: RationalVector) -> bool:
    # the wedge {(r2-r1, r2, ..., r2) : r1, r2 >= 0, not both 0}
    v0, tail = values[0], values[1:]
    return all(v == tail[0] for v in tail) and tail[0] >= 0 and v0 <= tail[0]


def in_sigma_m(
    chi: Character, m: int, *, assume_conjecture: bool = False
) -> bool:
    """Membership of [chi] in Sigma^m.

    Raises ConjectureRequiredError when n >= 3, m >= 3 and the caller has
    not opted into the conjectural description.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if chi.is_zero():
        raise ZeroCharacterError("zero character has no Sigma membership")
    if m == 1:
        return in_sigma1(chi)
    if chi.arity >= 3 and m >= 3 and not assume_conjecture:
        raise ConjectureRequiredError(
            f"Sigma^{m} for n = {chi.arity} needs assume_conjecture=True"
        )
    return not _in_complement_wedge(chi.values)


def _wedge_meet(n: int, basis_rows: list[list[Fraction]]) -> RationalVector | None:
    """Nonzero annihilator vector inside the complement wedge, if any.

    basis_rows generate the lattice L; the annihilator is V = {v : L.v = 0}.
    The wedge lives in the plane P = {(a, b, ..., b)}; V intersect P is cut
    out by one linear constraint per generator: a*u_0 + b*sum(u_1..) = 0.
    """
    constraints = []
    for row in basis_rows:
        c = row[0]
        d = sum(row[1:], start=Fraction(0))
        if c != 0 or d != 0:
            constraints.append((c, d))
    if not constraints:
        # V contains the whole plane; chi1 is a wedge point
        return chi1(n).values
    c0, d0 = constraints[0]
    if any(c * d0 != d * c0 for c, d in constraints[1:]):
        return None  # constraints of rank 2: V meets P trivially
    a, b = -d0, c0
    for sa, sb in ((a, b), (-a, -b)):
        if sb >= 0 and sa <= sb and (sa, sb) != (0, 0):
            return (sa,) + (sb,) * (n - 1)
    return None


def kernel_finiteness(
    lattice_rows: list[list[int]],
    *,
    m_max: int = 16,
    assume_conjecture: bool = False,
) -> FinitenessReport:
    """Finiteness type of N = (preimage in G of the lattice L), G' <= N.

    `lattice_rows` are integer generators of L inside Z^n (any rank).  The
    decision is exact: the rational annihilator V of L is intersected with
    the Sigma^1 complement {[chi1], [chi2]} and with the Sigma^m complement
    wedge.  "infinity" is certified when V misses the wedge entirely --
    unconditionally for n = 2, under the conjecture flag for n >= 3
    (without the flag the certified type stops at 2).
    """
    if not lattice_rows:
        raise ValueError("need at least one lattice generator")
    n = len(lattice_rows[0])
    if n < 2 or any(len(r) != n for r in lattice_rows):
        raise ValueError("lattice rows must all have length n >= 2")
    rows = [[Fraction(x) for x in r] for r in lattice_rows]

    if rational_rank(rows) == n:
        return FinitenessReport(True, "infinity", None, False)

    # not finitely generated iff chi1 or chi2 annihilates L
    for bad in (chi1(n), chi2(n)):
        if all(
            sum((u * v for u, v in zip(row, bad.values)), start=Fraction(0)) == 0
            for row in rows
        ):
            return FinitenessReport(False, 0, bad, False)

    wedge_vec = _wedge_meet(n, rows)
    if wedge_vec is not None:
        # finitely generated, but some vanishing character leaves Sigma^2
        return FinitenessReport(True, min(1, m_max), Character(n, wedge_vec), False)

    if n == 2:
        return FinitenessReport(True, "infinity", None, False)
    if assume_conjecture:
        return FinitenessReport(True, "infinity", None, True)
    return FinitenessReport(True, min(2, m_max), None, False)


def annihilator_basis(lattice_rows: list[list[int]]) -> list[RationalVector]:
    """Rational basis of the space of characters vanishing on the lattice."""
    rows = [[Fraction(x) for x in r] for r in lattice_rows]
    return [tuple(v) for v in rational_nullspace(rows)]
