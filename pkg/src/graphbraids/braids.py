"""Braid words with an exact word-problem decision via Garside normal form.

A braid on n strands is a word in the Artin generators s1..s(n-1). Its left
(greedy) normal form is D^k p_1 ... p_m where D is the half twist, each p_i a
permutation braid (positive braid where every pair of strands crosses at most
once, identified with its permutation), k maximal, no p_i trivial or equal to
D, and each adjacent pair left-weighted: the finishing set of p_i contains
the starting set of p_{i+1}. Equal braids get identical normal forms, which
is the only identity test used anywhere (no linear representations).

Permutations are tuples mapping start position to end position, 0-indexed;
products read left to right.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import WordFormatError

Perm = tuple[int, ...]


@dataclass(frozen=True)
class BraidWord:
    """Signed Artin letters: +i is s<i>, -i its inverse, 1 <= i <= strands-1."""

    strands: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.strands < 1:
            raise WordFormatError(f"strand count must be >= 1, got {self.strands}")
        for x in self.letters:
            if x == 0 or abs(x) > self.strands - 1:
                raise WordFormatError(
                    f"generator s{abs(x)} out of range for {self.strands} strands"
                )

    def __len__(self) -> int:
        return len(self.letters)


_TOKEN = re.compile(r"^s(\d+)(\^(-?\d+))?$")


def parse_braid(text: str, n: int) -> BraidWord:
    """Parse whitespace-separated tokens s<i>, s<i>^-1 or s<i>^<e>."""
    letters: list[int] = []
    for token in text.split():
        m = _TOKEN.match(token)
        if not m:
            raise WordFormatError(f"bad token {token!r}")
        i = int(m.group(1))
        if not 1 <= i <= n - 1:
            raise WordFormatError(f"generator {token!r} out of range for {n} strands")
        exp = int(m.group(3)) if m.group(3) is not None else 1
        letters.extend([i if exp > 0 else -i] * abs(exp))
    return BraidWord(n, tuple(letters))


def braid_to_text(w: BraidWord) -> str:
    return " ".join(f"s{x}" if x > 0 else f"s{-x}^-1" for x in w.letters)


def concat(*words: BraidWord) -> BraidWord:
    n = words[0].strands
    letters: list[int] = []
    for w in words:
        assert w.strands == n, "braids on different strand counts"
        letters.extend(w.letters)
    return BraidWord(n, tuple(letters))


def inverse(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(-x for x in reversed(w.letters)))


def commutator(u: BraidWord, v: BraidWord) -> BraidWord:
    return concat(u, v, inverse(u), inverse(v))


def psi(i: int, n: int) -> BraidWord:
    """The squared generator s<i>^2, a pure braid."""
    if not 1 <= i <= n - 1:
        raise WordFormatError(f"psi index {i} out of range for {n} strands")
    return BraidWord(n, (i, i))


def _identity(n: int) -> Perm:
    return tuple(range(n))


def _transposition(n: int, i: int) -> Perm:
    p = list(range(n))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def _half_twist(n: int) -> Perm:
    return tuple(n - 1 - k for k in range(n))


def _compose(a: Perm, b: Perm) -> Perm:
    """a then b."""
    return tuple(b[x] for x in a)


def _invert(p: Perm) -> Perm:
    q = [0] * len(p)
    for k, v in enumerate(p):
        q[v] = k
    return tuple(q)


def _starting_set(p: Perm) -> set[int]:
    """Generators s<i> that can begin the permutation braid of p."""
    return {i for i in range(1, len(p)) if p[i - 1] > p[i]}


def _finishing_set(p: Perm) -> set[int]:
    return _starting_set(_invert(p))


def permutation_image(w: BraidWord) -> Perm:
    """Image in the symmetric group; s<i> goes to the transposition (i, i+1)."""
    p = _identity(w.strands)
    for x in w.letters:
        p = _compose(p, _transposition(w.strands, abs(x)))
    return p


@dataclass(frozen=True)
class GarsideNormalForm:
    strands: int
    delta_power: int
    factors: tuple[Perm, ...]

    def is_identity(self) -> bool:
        return self.delta_power == 0 and not self.factors

    def canonical_length(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        parts = [f"D^{self.delta_power}"]
        for f in self.factors:
            parts.append(" ".join(str(x + 1) for x in f))
        return " | ".join(parts)


def _left_weight_pair(n: int, a: Perm, b: Perm) -> tuple[Perm, Perm]:
    """Move head letters of b onto a until S(b) is contained in F(a)."""
    while True:
        movable = _starting_set(b) - _finishing_set(a)
        if not movable:
            return a, b
        i = min(movable)
        t = _transposition(n, i)
        a = _compose(a, t)
        b = _compose(t, b)


def _normalize_factors(n: int, factors: list[Perm]) -> tuple[int, list[Perm]]:
    ident = _identity(n)
    delta = _half_twist(n)
    factors = [f for f in factors if f != ident]
    changed = True
    while changed:
        changed = False
        for i in range(len(factors) - 1):
            a, b = _left_weight_pair(n, factors[i], factors[i + 1])
            if (a, b) != (factors[i], factors[i + 1]):
                factors[i], factors[i + 1] = a, b
                changed = True
        if changed:
            factors = [f for f in factors if f != ident]
    power = 0
    while factors and factors[0] == delta:
        power += 1
        factors.pop(0)
    return power, factors


def normal_form(w: BraidWord) -> GarsideNormalForm:
    """Left-greedy normal form; canonical on the braid group element.

    Negative letters are rewritten s<i>^-1 = D^-1 (D s<i>^-1) with the second
    factor a permutation braid; the accumulated D powers commute to the front
    through the half-twist conjugation, and the remaining positive factors
    are combed into left-weighted order.
    """
    n = w.strands
    if n == 1:
        return GarsideNormalForm(1, 0, ())
    delta = _half_twist(n)
    factors: list[Perm] = []
    delta_pows: list[int] = []
    for x in w.letters:
        t = _transposition(n, abs(x))
        if x > 0:
            factors.append(t)
            delta_pows.append(0)
        else:
            factors.append(_compose(delta, t))
            delta_pows.append(-1)
    power = 0
    for i in range(len(factors) - 1, -1, -1):
        if power % 2:
            factors[i] = _compose(_compose(delta, factors[i]), delta)
        power += delta_pows[i]
    extra, normalized = _normalize_factors(n, factors)
    return GarsideNormalForm(n, power + extra, tuple(normalized))


def is_identity(w: BraidWord) -> bool:
    return normal_form(w).is_identity()


def is_pure(w: BraidWord) -> bool:
    """Whether the induced permutation of strand endpoints is trivial."""
    return permutation_image(w) == _identity(w.strands)
