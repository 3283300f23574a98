"""Word arithmetic in the generalized Thompson group F_{n,infinity}.

The group is presented by generators x_0, x_1, x_2, ... subject to
x_j^-1 x_i x_j = x_{i+n-1} whenever i > j >= 0, where n >= 2 is the family
parameter.  Orienting the relations so that smaller indices move left gives
four rewriting rules:

    x_i      x_j      ->  x_j      x_{i+n-1}        (i > j)
    x_i^-1   x_j      ->  x_j      x_{i+n-1}^-1     (i > j)
    x_i^-1   x_j      ->  x_{j+n-1}      x_i^-1     (i < j)
    x_i^-1   x_j^-1   ->  x_{j+n-1}^-1   x_i^-1     (i < j)

together with free cancellation x_i x_i^-1 -> 1 and x_i^-1 x_i -> 1.
Exhaustive application yields a *seminormal form*: a positive part with
non-decreasing indices followed by an inverse part with non-increasing
indices.  Seminormal forms are not unique; `normal_form` additionally
removes every matched pair x_i ... x_i^-1 straddling the middle whenever no
letter with index in {i+1, ..., i+n-1} lies between them (shifting the
enclosed indices down by n-1), which produces a canonical representative.
Canonicity is certified against the exact piecewise-linear representation
(`thompson_sigma.plrep`) rather than proved here.

Index bumping can in principle grow without bound, so every rewriting entry
point takes an `index_cap` (default 2**16) and raises ResourceLimitError
beyond it.  All values are immutable; operations return fresh objects.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import ArityMismatchError, ParseError, ResourceLimitError

DEFAULT_INDEX_CAP = 1 << 16

_TOKEN_RE = re.compile(r"^x(\d+)(?:\^(-?\d+))?$")


class GeneratorLetter(NamedTuple):
    """One letter x_index^exponent with exponent +1 or -1."""

    index: int
    exponent: int


@dataclass(frozen=True)
class GroupWord:
    """A finite word in the generators of F_{n,infinity}.

    The empty word is the identity.  Words are plain syntactic objects;
    use `rewrite_to_seminormal` / `are_equal` for group-level questions.
    """

    arity: int
    letters: tuple[GeneratorLetter, ...]

    def __post_init__(self):
        if self.arity < 2:
            raise ValueError(f"arity must be >= 2, got {self.arity}")
        coerced = tuple(
            let if isinstance(let, GeneratorLetter) else GeneratorLetter(*let)
            for let in self.letters
        )
        object.__setattr__(self, "letters", coerced)
        for let in coerced:
            if let.index < 0:
                raise ValueError(f"negative generator index {let.index}")
            if let.exponent not in (1, -1):
                raise ValueError(f"letter exponent must be +-1, got {let.exponent}")

    def __len__(self):
        return len(self.letters)

    def is_identity_word(self) -> bool:
        return not self.letters


@dataclass(frozen=True)
class SeminormalForm:
    """Positive part (non-decreasing) times inverse part (non-increasing).

    Represents (prod_i x_{positive[i]}) * (prod_j x_{negative[j]}^-1) where
    `negative` is read left to right.
    """

    arity: int
    positive: tuple[int, ...]
    negative: tuple[int, ...]

    def __post_init__(self):
        p, q = self.positive, self.negative
        if any(p[i] > p[i + 1] for i in range(len(p) - 1)):
            raise ValueError(f"positive part not sorted: {p}")
        if any(q[i] < q[i + 1] for i in range(len(q) - 1)):
            raise ValueError(f"negative part not sorted: {q}")

    def is_identity(self) -> bool:
        return not self.positive and not self.negative

    def to_word(self) -> GroupWord:
        letters = [GeneratorLetter(i, 1) for i in self.positive]
        letters += [GeneratorLetter(i, -1) for i in self.negative]
        return GroupWord(self.arity, tuple(letters))


def word(arity: int, letters: Iterable[tuple[int, int]]) -> GroupWord:
    """Build a GroupWord from (index, exponent) pairs."""
    return GroupWord(arity, tuple(GeneratorLetter(i, e) for i, e in letters))


def identity_word(arity: int) -> GroupWord:
    return GroupWord(arity, ())


def parse_word(arity: int, text: str) -> GroupWord:
    """Parse whitespace-separated tokens `x<k>`, `x<k>^-1`, `x<k>^<e>`.

    Integer exponents expand to |e| letters of the matching sign; e = 0
    contributes nothing.  The empty string is the identity.
    """
    letters: list[GeneratorLetter] = []
    for token in text.split():
        m = _TOKEN_RE.match(token)
        if not m:
            raise ParseError(f"bad word token {token!r}")
        index = int(m.group(1))
        exp = 1 if m.group(2) is None else int(m.group(2))
        sign = 1 if exp >= 0 else -1
        letters.extend(GeneratorLetter(index, sign) for _ in range(abs(exp)))
    return GroupWord(arity, tuple(letters))


def format_word(w: GroupWord) -> str:
    """Inverse of `parse_word`, one token per letter."""
    return " ".join(
        f"x{let.index}" if let.exponent == 1 else f"x{let.index}^-1"
        for let in w.letters
    )


def invert(w: GroupWord) -> GroupWord:
    """Reverse the letter sequence and negate exponents."""
    return GroupWord(
        w.arity,
        tuple(GeneratorLetter(l.index, -l.exponent) for l in reversed(w.letters)),
    )


def concat(u: GroupWord, v: GroupWord) -> GroupWord:
    if u.arity != v.arity:
        raise ArityMismatchError(f"arity {u.arity} vs {v.arity}")
    return GroupWord(u.arity, u.letters + v.letters)


def _check_cap(index: int, cap: int) -> int:
    if index > cap:
        raise ResourceLimitError(
            f"generator index {index} exceeds rewriting cap {cap}"
        )
    return index


def _push_positive(pos: list[int], neg: list[int], k: int, n: int, cap: int):
    # Move x_k left through the inverse tail, bumping per the mixed rules,
    # then insert into the positive part by bubbling (rule x_i x_j with i > j).
    j = len(neg) - 1
    while j >= 0:
        q = neg[j]
        if q == k:
            del neg[j]
            return
        if q > k:
            neg[j] = _check_cap(q + n - 1, cap)
        else:
            k = _check_cap(k + n - 1, cap)
        j -= 1
    pos.append(k)
    p = len(pos) - 1
    while p > 0 and pos[p - 1] > pos[p]:
        pos[p - 1], pos[p] = pos[p], _check_cap(pos[p - 1] + n - 1, cap)
        p -= 1


def _push_negative(pos: list[int], neg: list[int], k: int, n: int, cap: int):
    if not neg and pos and pos[-1] == k:
        pos.pop()
        return
    neg.append(k)
    p = len(neg) - 1
    while p > 0 and neg[p - 1] < neg[p]:
        neg[p - 1], neg[p] = _check_cap(neg[p] + n - 1, cap), neg[p - 1]
        p -= 1


def rewrite_to_seminormal(
    w: GroupWord, *, index_cap: int = DEFAULT_INDEX_CAP
) -> SeminormalForm:
    """Apply the oriented rules exhaustively; always terminates.

    Each letter insertion moves strictly left, so the loop is O(len^2)
    swaps; indices beyond `index_cap` raise ResourceLimitError.
    """
    pos: list[int] = []
    neg: list[int] = []
    n = w.arity
    for let in w.letters:
        if let.exponent == 1:
            _push_positive(pos, neg, let.index, n, index_cap)
        else:
            _push_negative(pos, neg, let.index, n, index_cap)
    return SeminormalForm(w.arity, tuple(pos), tuple(neg))


def multiply(
    u: SeminormalForm, v: SeminormalForm, *, index_cap: int = DEFAULT_INDEX_CAP
) -> SeminormalForm:
    """Product of two seminormal forms, again in seminormal form."""
    if u.arity != v.arity:
        raise ArityMismatchError(f"arity {u.arity} vs {v.arity}")
    pos, neg = list(u.positive), list(u.negative)
    n = u.arity
    for k in v.positive:
        _push_positive(pos, neg, k, n, index_cap)
    for k in v.negative:
        _push_negative(pos, neg, k, n, index_cap)
    return SeminormalForm(u.arity, tuple(pos), tuple(neg))


def _reduce(pos: list[int], neg: list[int], n: int):
    # Remove innermost matched pairs x_i ... x_i^-1 whose enclosed letters
    # all avoid {i+1, ..., i+n-1}; the enclosed block then conjugates down
    # by n-1.  Loop to a fixpoint; sortedness is preserved throughout.
    changed = True
    while changed:
        changed = False
        for i in sorted(set(pos) & set(neg)):
            a = max(k for k, v in enumerate(pos) if v == i)
            b = min(k for k, v in enumerate(neg) if v == i)
            enclosed = pos[a + 1 :] + neg[:b]
            if any(i + 1 <= v <= i + n - 1 for v in enclosed):
                continue
            pos[a:] = [v - (n - 1) for v in pos[a + 1 :]]
            neg[: b + 1] = [v - (n - 1) for v in neg[:b]]
            changed = True
            break


def normal_form(
    w: GroupWord, *, index_cap: int = DEFAULT_INDEX_CAP
) -> SeminormalForm:
    """Seminormal form plus the matched-pair reduction; canonical per element."""
    sn = rewrite_to_seminormal(w, index_cap=index_cap)
    pos, neg = list(sn.positive), list(sn.negative)
    _reduce(pos, neg, w.arity)
    return SeminormalForm(w.arity, tuple(pos), tuple(neg))


def are_equal(
    u: GroupWord, v: GroupWord, *, index_cap: int = DEFAULT_INDEX_CAP
) -> bool:
    """Word problem: do u and v represent the same element of F_{n,infinity}?

    Decided by reducing u * v^-1 to normal form and checking emptiness;
    agreement with the PL-map oracle is part of the acceptance suite.
    """
    if u.arity != v.arity:
        raise ArityMismatchError(f"arity {u.arity} vs {v.arity}")
    return normal_form(concat(u, invert(v)), index_cap=index_cap).is_identity()


def abelianize(w: GroupWord) -> tuple[int, ...]:
    """Exponent-sum vector in Z^n = G/G'.

    A letter x_i with i >= 1 lands in coordinate 1 + ((i-1) mod (n-1))
    because x_{i+n-1} is a conjugate of x_i; x_0 is coordinate 0.
    """
    n = w.arity
    out = [0] * n
    for let in w.letters:
        coord = 0 if let.index == 0 else 1 + (let.index - 1) % (n - 1)
        out[coord] += let.exponent
    return tuple(out)
