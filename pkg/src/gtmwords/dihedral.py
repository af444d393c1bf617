"""The dihedral group D_m of letter maps acting on words over Z_m.

The group consists of m morphisms (shift every letter by x, keep the
order) and m antimorphisms (send k to x - k and reverse the order); it is
isomorphic to the dihedral group of order 2m.  Elements are plain values,
so comparing, hashing and composing them is exact, which the richness
criterion relies on.  For m = 1 the group degenerates to {identity,
reversal} and everything below still applies.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, unique

from .wordgen import Word


@unique
class Kind(Enum):
    MORPHISM = "Pi"
    ANTIMORPHISM = "Psi"


@dataclass(frozen=True)
class GroupElement:
    """One element of D_m; renders as Pi_x (morphism) or Psi_x (antimorphism)."""

    kind: Kind
    shift: int
    m: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"modulus m must be at least 1, got {self.m}")
        object.__setattr__(self, "shift", self.shift % self.m)

    @property
    def is_antimorphism(self) -> bool:
        return self.kind is Kind.ANTIMORPHISM

    @property
    def is_identity(self) -> bool:
        return self.kind is Kind.MORPHISM and self.shift == 0

    def apply_letter(self, k: int) -> int:
        if self.is_antimorphism:
            return (self.shift - k) % self.m
        return (self.shift + k) % self.m

    def apply(self, word: Word) -> Word:
        """Act on a word; input letters are reduced mod m."""
        x, m = self.shift, self.m
        if self.is_antimorphism:
            return tuple((x - k) % m for k in reversed(word))
        return tuple((x + k) % m for k in word)

    def compose(self, other: GroupElement) -> GroupElement:
        """The element acting as self-after-other on any word."""
        if self.m != other.m:
            raise ValueError(
                f"cannot compose elements over Z_{self.m} and Z_{other.m}"
            )
        if self.is_antimorphism:
            shift = self.shift - other.shift
            anti = not other.is_antimorphism
        else:
            shift = self.shift + other.shift
            anti = other.is_antimorphism
        return GroupElement(Kind.ANTIMORPHISM if anti else Kind.MORPHISM, shift, self.m)

    __mul__ = compose

    def inverse(self) -> GroupElement:
        if self.is_antimorphism:
            return self
        return GroupElement(Kind.MORPHISM, -self.shift, self.m)

    def __str__(self) -> str:
        return f"{self.kind.value}_{self.shift}"


def morphism(shift: int, m: int) -> GroupElement:
    return GroupElement(Kind.MORPHISM, shift, m)


def antimorphism(shift: int, m: int) -> GroupElement:
    return GroupElement(Kind.ANTIMORPHISM, shift, m)


def identity(m: int) -> GroupElement:
    return morphism(0, m)


def all_elements(m: int) -> list[GroupElement]:
    """The 2m distinct elements: morphisms first, each batch by ascending shift."""
    return [morphism(x, m) for x in range(m)] + [antimorphism(x, m) for x in range(m)]


def antimorphisms(m: int) -> list[GroupElement]:
    return [antimorphism(x, m) for x in range(m)]


def involutive_antimorphisms(m: int) -> list[GroupElement]:
    """Antimorphisms that square to the identity; in D_m that is all of them."""
    return [e for e in antimorphisms(m) if e.compose(e).is_identity]


def conjugate_antimorphism(nu: GroupElement, theta: GroupElement) -> GroupElement:
    """nu . theta . nu^-1, which is again an antimorphism."""
    if not theta.is_antimorphism:
        raise ValueError(f"{theta} is not an antimorphism")
    return nu.compose(theta).compose(nu.inverse())
