"""The shift and flip automorphisms acting on characters of F_{n,infinity}.

The shift phi fixes x_0 and sends x_i to x_{i+1} for i >= 1; on the
abelianization it fixes coordinate 0 and cycles coordinates 1, ..., n-1.
The flip mu inverts x_0 and permutes the higher generators through the
involution delta (which swaps i with n-i-2 for 1 <= i <= n-3 and swaps
n-1 with n-2), each multiplied by x_0^-1.  Acting on character value
vectors these give integer matrices

    (A v)_0 = v_0,  (A v)_i = v_{rho0(i)}       rho0 = cycle (1 ... n-1)
    (C v)_0 = -v_0, (C v)_i = v_{delta(i)} - v_0

C has order 2 and swaps the two exceptional characters chi1 <-> chi2; A
has order n - 1 (the computed order of the displayed matrix; callers
comparing against the claimed order n should use `order_of`, which
reports the computed value).  The group they generate permutes the
character sphere preserving the Sigma complements; `d_orbit` explores
those orbits.

mu is not implemented on words: expressing mu(x_i) needs negative powers
of phi on low-index generators, which the presentation does not supply.
Only the abelianization-level matrix C is ever needed downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .charspace import Character, SpherePoint, sphere_point
from .errors import DomainError, InvariantViolationError, ResourceLimitError
from .words import GeneratorLetter, GroupWord

IntMatrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class CharacterMatrix:
    """Integer matrix acting on character value vectors (det +-1)."""

    arity: int
    entries: IntMatrix

    def __post_init__(self):
        n = self.arity
        if len(self.entries) != n or any(len(r) != n for r in self.entries):
            raise ValueError(f"expected a {n}x{n} matrix")


def delta_involution(n: int) -> dict[int, int]:
    """The index swap underlying the flip, on {1, ..., n-1}.

    Fixed point for n = 2; for n >= 3 it swaps i <-> n-i-2 in the low
    range and n-2 <-> n-1 at the top.
    """
    if n == 2:
        return {1: 1}
    out = {}
    for i in range(1, n - 2):
        out[i] = n - i - 2
    out[n - 2] = n - 1
    out[n - 1] = n - 2
    return out


def rho0_cycle_power(n: int, i: int, k: int) -> int:
    """rho0^k(i) for the cycle (1, 2, ..., n-1), any integer k."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"index {i} outside 1..{n - 1}")
    return 1 + (i - 1 + k) % (n - 1)


def matrix_A(n: int) -> CharacterMatrix:
    """Action of the shift on value vectors: fixes slot 0, cycles the rest."""
    if n < 2:
        raise ValueError(f"arity must be >= 2, got {n}")
    rows = [[1 if j == 0 else 0 for j in range(n)]]
    for i in range(1, n):
        target = rho0_cycle_power(n, i, 1)
        rows.append([1 if j == target else 0 for j in range(n)])
    return CharacterMatrix(n, tuple(tuple(r) for r in rows))


def matrix_C(n: int) -> CharacterMatrix:
    """Action of the flip: (C v)_0 = -v_0, (C v)_i = v_{delta(i)} - v_0."""
    if n < 2:
        raise ValueError(f"arity must be >= 2, got {n}")
    delta = delta_involution(n)
    rows = [[-1 if j == 0 else 0 for j in range(n)]]
    for i in range(1, n):
        row = [0] * n
        row[0] = -1
        row[delta[i]] += 1
        rows.append(row)
    return CharacterMatrix(n, tuple(tuple(r) for r in rows))


def identity_matrix(n: int) -> CharacterMatrix:
    return CharacterMatrix(
        n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    )


def mat_mul(a: CharacterMatrix, b: CharacterMatrix) -> CharacterMatrix:
    if a.arity != b.arity:
        raise DomainError(f"matrix sizes {a.arity} vs {b.arity}")
    n = a.arity
    rows = tuple(
        tuple(sum(a.entries[i][k] * b.entries[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )
    return CharacterMatrix(n, rows)


def mat_pow(mat: CharacterMatrix, k: int) -> CharacterMatrix:
    if k < 0:
        raise ValueError(f"power must be >= 0, got {k}")
    acc = identity_matrix(mat.arity)
    for _ in range(k):
        acc = mat_mul(acc, mat)
    return acc


def apply(mat: CharacterMatrix, chi: Character) -> Character:
    """Matrix-vector product on the character's value vector."""
    if mat.arity != chi.arity:
        raise DomainError(f"matrix arity {mat.arity} vs character {chi.arity}")
    n = mat.arity
    values = tuple(
        sum((mat.entries[i][j] * chi.values[j] for j in range(n)), start=Fraction(0))
        for i in range(n)
    )
    return Character(n, values)


def order_of(mat: CharacterMatrix, cap: int = 64) -> int | None:
    """Least k >= 1 with mat^k = identity, or None past the cap."""
    if cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")
    ident = identity_matrix(mat.arity)
    acc = mat
    for k in range(1, cap + 1):
        if acc == ident:
            return k
        acc = mat_mul(acc, mat)
    return None


def phi_on_word(w: GroupWord, k: int = 1) -> GroupWord:
    """Apply the shift k >= 0 times: indices >= 1 move up by k, x_0 is fixed."""
    if k < 0:
        raise DomainError("only nonnegative shift powers act on words")
    letters = tuple(
        GeneratorLetter(l.index + k if l.index >= 1 else 0, l.exponent)
        for l in w.letters
    )
    return GroupWord(w.arity, letters)


def reduction_identity_check(n: int, rho: Character) -> Character:
    """A^(n-3) C applied to a character with rho(x_0) = rho(x_{n-1}).

    Returns rho0 and checks the structural identity rho0(x_1) = 0 used to
    step the generator-bound recursion down one rank.
    """
    if n < 3:
        raise DomainError(f"the reduction needs n >= 3, got {n}")
    if rho.arity != n:
        raise DomainError(f"character arity {rho.arity} != {n}")
    if rho.values[0] != rho.values[n - 1]:
        raise DomainError("need rho(x_0) = rho(x_{n-1})")
    rho0 = apply(mat_mul(mat_pow(matrix_A(n), n - 3), matrix_C(n)), rho)
    if rho0.values[1] != 0:
        raise InvariantViolationError(
            f"reduction produced rho0(x_1) = {rho0.values[1]} != 0"
        )
    return rho0


def d_orbit(point: SpherePoint, cap: int = 1024) -> frozenset[SpherePoint]:
    """Orbit of a sphere point under the shift and flip matrices.

    Both generators have finite order, so closing under them alone closes
    under the full group; the cap guards against runaway exploration.
    """
    n = point.arity
    gens = (matrix_A(n), matrix_C(n))
    seen = {point}
    frontier = [point]
    while frontier:
        current = frontier.pop()
        chi = Character(n, current.values)
        for g in gens:
            image = sphere_point(apply(g, chi))
            if image not in seen:
                if len(seen) >= cap:
                    raise ResourceLimitError(f"orbit exceeds cap {cap}")
                seen.add(image)
                frontier.append(image)
    return frozenset(seen)
