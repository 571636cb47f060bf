"""Monomial ideals in k[x, y, z]: minimal generators, colon, sum, Hilbert
functions and socle degrees.

Everything is finite staircase combinatorics at desk scale, so Hilbert
functions are computed by direct enumeration of degree-d monomials and the
socle search stops at the sum of the pure-power exponents.  Generators are
kept as a divisibility antichain sorted lex-descending (x > y > z), which
makes every report byte-reproducible.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import NotArtinian, TrivialIdeal

VARS = ("x", "y", "z")


@dataclass(frozen=True)
class Monomial:
    ex: int = 0
    ey: int = 0
    ez: int = 0

    def __post_init__(self):
        if self.ex < 0 or self.ey < 0 or self.ez < 0:
            raise ValueError("negative exponent")

    @property
    def degree(self) -> int:
        return self.ex + self.ey + self.ez

    def exponents(self):
        return (self.ex, self.ey, self.ez)

    def divides(self, other: "Monomial") -> bool:
        return self.ex <= other.ex and self.ey <= other.ey and self.ez <= other.ez

    def times(self, other: "Monomial") -> "Monomial":
        return Monomial(self.ex + other.ex, self.ey + other.ey, self.ez + other.ez)

    def colon_factor(self, m: "Monomial") -> "Monomial":
        """self / gcd(self, m): componentwise truncated subtraction."""
        return Monomial(max(self.ex - m.ex, 0), max(self.ey - m.ey, 0), max(self.ez - m.ez, 0))

    def render(self) -> str:
        parts = []
        for name, e in zip(VARS, self.exponents()):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return " ".join(parts) if parts else "1"

    def __str__(self) -> str:
        return self.render()


ONE = Monomial(0, 0, 0)


def lex_key(m: Monomial):
    return m.exponents()


def mono_lcm(m1: Monomial, m2: Monomial) -> Monomial:
    return Monomial(max(m1.ex, m2.ex), max(m1.ey, m2.ey), max(m1.ez, m2.ez))


@dataclass(frozen=True)
class MonomialIdeal:
    """Finite divisibility antichain of monomials, lex-descending."""

    gens: tuple[Monomial, ...]

    def __post_init__(self):
        for a, b in itertools.combinations(self.gens, 2):
            if a.divides(b) or b.divides(a):
                raise ValueError("generators are not an antichain")
        if list(self.gens) != sorted(self.gens, key=lex_key, reverse=True):
            raise ValueError("generators not in canonical lex-descending order")

    @classmethod
    def of(cls, monomials) -> "MonomialIdeal":
        return minimalize(monomials)

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.gens)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_trivial(self) -> bool:
        return self.gens == (ONE,)

    def render(self) -> str:
        return "<" + ", ".join(g.render() for g in self.gens) + ">"

    def __str__(self) -> str:
        return self.render()


def minimalize(monomials) -> MonomialIdeal:
    """Divisibility antichain of the given monomials; generated ideal unchanged."""
    ms = sorted(set(monomials), key=lambda m: (m.degree,) + lex_key(m))
    keep: list[Monomial] = []
    for m in ms:
        if not any(k.divides(m) for k in keep):
            keep.append(m)
    keep.sort(key=lex_key, reverse=True)
    return MonomialIdeal(tuple(keep))


def ideal_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    return minimalize(a.gens + b.gens)


def colon_by_monomial(i: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    return minimalize(g.colon_factor(m) for g in i.gens)


def monomials_of_degree(d: int):
    """Degree-d monomials in lex-descending order (x > y > z)."""
    for ex in range(d, -1, -1):
        for ey in range(d - ex, -1, -1):
            yield Monomial(ex, ey, d - ex - ey)


def count_degree(d: int) -> int:
    """dim S_d = C(d+2, 2); zero for negative d."""
    return (d + 2) * (d + 1) // 2 if d >= 0 else 0


def hilbert_function(i: MonomialIdeal, d: int) -> int:
    """dim (S/I)_d by direct enumeration."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    return sum(1 for m in monomials_of_degree(d) if not i.contains(m))


def _pure_power(i: MonomialIdeal, axis: int):
    for g in i.gens:
        e = g.exponents()
        if e[axis] > 0 and all(e[j] == 0 for j in range(3) if j != axis):
            return e[axis]
    return None


def is_artinian(i: MonomialIdeal) -> bool:
    """True iff the generators contain a pure power of each variable."""
    if i.is_trivial:
        return True
    return all(_pure_power(i, axis) is not None for axis in range(3))


def max_socle_degree(i: MonomialIdeal) -> int:
    """Largest d with (S/I)_d != 0; needs I Artinian so the search terminates
    at the sum of the pure-power exponents."""
    if i.is_trivial:
        raise TrivialIdeal("unit ideal: quotient is the zero module")
    if not is_artinian(i):
        raise NotArtinian(f"no pure power of every variable in {i.render()}")
    bound = sum(_pure_power(i, axis) for axis in range(3))
    top = None
    for d in range(bound + 1):
        if hilbert_function(i, d) != 0:
            top = d
    assert top is not None  # 1 is never in a proper ideal
    return top
