"""Finite-index subgroups of F_{n,infinity} as integer lattices.

Every finite-index subgroup H contains the commutator subgroup G', so it
is determined by its image L in the abelianization Z^n: a full-rank
integer sublattice with [G : H] = [Z^n : L] = |det L|.  Lattices are kept
in a canonical Hermite normal form with rows as generators:

    * row i has its pivot on the diagonal and zeros to the right,
    * pivots are positive,
    * entries below a pivot are reduced into [0, pivot).

With this orientation the pivot of coordinate 0 is exactly the smallest
alpha > 0 with x_0^alpha in H, which feeds the HNN decomposition
machinery: `intersect_with_M` computes the image of H intersect M for
M = <x_1, ..., x_n> (the preimage under the fold x_n -> x_1), and
`theta_shift` transports it back to G-coordinates along the isomorphism
theta : M -> G, x_i -> x_{i-1}.  `restrict_character` is the companion
move on characters.

`enumerate_subgroups` lists all subgroups up to a given index exactly
once, and `ChainSpec`/`chain` generate the subgroup chains the gradient
series are evaluated on.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from ._linalg import integer_kernel
from .charspace import Character
from .errors import DomainError, RankDeficientError, ResourceLimitError, ZeroCharacterError

IntRows = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class SubgroupLattice:
    """Full-rank sublattice of Z^n in canonical (lower-triangular) HNF."""

    arity: int
    basis: IntRows

    def index(self) -> int:
        return prod(self.basis[i][i] for i in range(self.arity))

    def contains(self, vector) -> bool:
        return member(self, vector)


def hnf(rows, arity: int | None = None) -> SubgroupLattice:
    """Canonical HNF lattice spanned by integer rows.

    Raises RankDeficientError unless the rows span a full-rank sublattice.
    """
    work = [list(map(int, r)) for r in rows]
    if not work:
        raise RankDeficientError("no generators")
    n = len(work[0]) if arity is None else arity
    if n < 2 or any(len(r) != n for r in work):
        raise ValueError("rows must all have length n >= 2")

    pivot_rows: dict[int, list[int]] = {}
    for col in range(n - 1, -1, -1):
        while True:
            live = [i for i in range(len(work)) if work[i][col] != 0]
            if len(live) <= 1:
                break
            live.sort(key=lambda i: abs(work[i][col]))
            base = work[live[0]]
            for i in live[1:]:
                q = work[i][col] // base[col]
                work[i] = [a - q * b for a, b in zip(work[i], base)]
        live = [i for i in range(len(work)) if work[i][col] != 0]
        if not live:
            raise RankDeficientError(f"rows do not span coordinate {col}")
        pivot_rows[col] = work.pop(live[0])

    basis = [pivot_rows[c] for c in range(n)]
    for i in range(n):
        if basis[i][i] < 0:
            basis[i] = [-x for x in basis[i]]
    # reduce entries below each pivot, rightmost column first so earlier
    # reductions are not disturbed
    for k in range(n):
        for i in range(k - 1, -1, -1):
            q = basis[k][i] // basis[i][i]
            if q:
                basis[k] = [a - q * b for a, b in zip(basis[k], basis[i])]
    return SubgroupLattice(n, tuple(tuple(r) for r in basis))


def full_lattice(n: int) -> SubgroupLattice:
    return hnf([[1 if i == j else 0 for j in range(n)] for i in range(n)])


def index(lat: SubgroupLattice) -> int:
    """[Z^n : L] = |det|, the product of the HNF pivots."""
    return lat.index()


def alpha(lat: SubgroupLattice) -> int:
    """Least alpha > 0 with alpha * e_0 in L; the coordinate-0 pivot."""
    return lat.basis[0][0]


def member(lat: SubgroupLattice, vector) -> bool:
    """Is the integer vector in the lattice?  Back-substitution on the HNF."""
    v = list(map(int, vector))
    if len(v) != lat.arity:
        raise ValueError(f"vector length {len(v)} != arity {lat.arity}")
    for i in range(lat.arity - 1, -1, -1):
        c, rem = divmod(v[i], lat.basis[i][i])
        if rem:
            return False
        if c:
            v = [a - c * b for a, b in zip(v, lat.basis[i])]
    return True


def _fold_matrix(n: int) -> list[list[int]]:
    # psi : Z^n (M-basis xbar_1..xbar_n) -> Z^n (G-basis xbar_0..xbar_{n-1});
    # xbar_j -> e_j for j <= n-1, xbar_n -> e_1 (x_n is conjugate to x_1)
    rows = []
    for i in range(n):
        j = i + 1
        target = j if j <= n - 1 else 1
        rows.append([1 if c == target else 0 for c in range(n)])
    return rows


def intersect_with_M(lat: SubgroupLattice) -> SubgroupLattice:
    """Image of H intersect M in M-coordinates: the psi-preimage of L.

    Coordinates of the result are xbar_1, ..., xbar_n of M (stored in tuple
    slots 0..n-1).  Computed as the projection of the integer kernel of
    (v, w) -> v*psi - w*basis.
    """
    n = lat.arity
    stacked = _fold_matrix(n) + [[-x for x in row] for row in lat.basis]
    kernel = integer_kernel(stacked)
    projections = [k[:n] for k in kernel]
    return hnf(projections, arity=n)


def theta_shift(lat_m: SubgroupLattice) -> SubgroupLattice:
    """Transport an M-coordinate lattice to G-coordinates along theta.

    theta sends x_i to x_{i-1}, so M-slot i (holding xbar_{i+1}) becomes
    G-slot i: the basis is unchanged and only re-canonicalized.
    """
    return hnf(lat_m.basis, arity=lat_m.arity)


def restrict_character(chi: Character) -> Character:
    """rho = (chi restricted to M) composed with theta^-1.

    rho(x_i) = chi(x_{i+1}); the fold chi(x_n) = chi(x_1) forces
    rho(x_0) = rho(x_{n-1}).
    """
    if chi.is_zero():
        raise ZeroCharacterError("cannot restrict the zero character")
    n = chi.arity
    return Character(n, tuple(chi.value_at(i + 1) for i in range(n)))


def _diagonals(n: int, max_index: int):
    # all positive diagonal tuples with product <= max_index, lexicographic
    def rec(prefix, budget):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for d in range(1, budget + 1):
            yield from rec(prefix + [d], budget // d)

    yield from rec([], max_index)


def enumerate_subgroups(
    n: int, max_index: int, *, cap: int | None = None
) -> list[SubgroupLattice]:
    """All HNF lattices of index <= max_index, each exactly once.

    Sorted by (index, basis) for stable output.  `cap` bounds the number
    of lattices produced (ResourceLimitError beyond it).
    """
    if n < 2:
        raise ValueError(f"arity must be >= 2, got {n}")
    if max_index < 1:
        raise ValueError(f"max_index must be >= 1, got {max_index}")
    found: list[SubgroupLattice] = []
    for diag in _diagonals(n, max_index):
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = diag[i]

        def fill(k: int, i: int):
            # below-pivot slots (k, i), i < k, values in [0, diag[i])
            if k == n:
                if cap is not None and len(found) >= cap:
                    raise ResourceLimitError(
                        f"enumeration exceeds cap of {cap} lattices"
                    )
                found.append(
                    SubgroupLattice(n, tuple(tuple(r) for r in rows))
                )
                return
            if i == k:
                fill(k + 1, 0)
                return
            for v in range(diag[i]):
                rows[k][i] = v
                fill(k, i + 1)
            rows[k][i] = 0

        fill(1, 0)
    found.sort(key=lambda lat: (lat.index(), lat.basis))
    return found


@dataclass(frozen=True)
class ChainSpec:
    """Recipe for a sequence of finite-index subgroups.

    kind "scaling":    L_s = p^s * Z^n            (index p^(s n), nested)
    kind "coordinate": L_s = p^s Z + Z^(n-1)      (index p^s, nested)
    kind "explicit":   a stored list of lattices; need not be nested.
    """

    kind: str
    p: int | None = None
    length: int | None = None
    terms: tuple[SubgroupLattice, ...] | None = None

    def __post_init__(self):
        if self.kind in ("scaling", "coordinate"):
            if self.p is None or self.p < 2:
                raise ValueError(f"{self.kind} chain needs p >= 2")
        elif self.kind == "explicit":
            if not self.terms:
                raise ValueError("explicit chain needs at least one term")
        else:
            raise ValueError(f"unknown chain kind {self.kind!r}")


def chain(spec: ChainSpec, s: int, n: int) -> SubgroupLattice:
    """The s-th term of the chain, s >= 0."""
    if s < 0:
        raise ValueError(f"chain position must be >= 0, got {s}")
    if spec.kind == "scaling":
        return hnf([[spec.p**s if i == j else 0 for j in range(n)] for i in range(n)])
    if spec.kind == "coordinate":
        rows = [[0] * n for _ in range(n)]
        rows[0][0] = spec.p**s
        for i in range(1, n):
            rows[i][i] = 1
        return hnf(rows)
    if s >= len(spec.terms):
        raise DomainError(f"explicit chain has only {len(spec.terms)} terms")
    term = spec.terms[s]
    if term.arity != n:
        raise DomainError(f"chain term arity {term.arity} != {n}")
    return term


def brute_force_index_count(n: int, k: int) -> int:
    """Independent count of index-k sublattices via HNF diagonal sums.

    For each diagonal (d_0, ..., d_{n-1}) with product k there are
    prod d_i^(n-1-i) below-pivot fillings.
    """
    total = 0
    for diag in _diagonals(n, k):
        if prod(diag) == k:
            total += prod(d ** (n - 1 - i) for i, d in enumerate(diag))
    return total


def divisor_sum(k: int) -> int:
    """sigma(k), the sum of divisors; counts index-k sublattices of Z^2."""
    return sum(d for d in range(1, k + 1) if k % d == 0)


def abelianization_in_lattice(lat: SubgroupLattice, abelianized: tuple[int, ...]) -> bool:
    """Membership of a word's abelianization; realizes `w in H` for H >= G'."""
    return member(lat, abelianized)
