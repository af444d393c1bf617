"""Palindromic structure with respect to the m reflection antimorphisms.

A word is a theta-palindrome when the antimorphism theta fixes it.  Counts
are obtained by filtering the exact language levels rather than by any
incremental closure; the levels are memoised and shared, and the filter is
obviously correct.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .dihedral import GroupElement, antimorphisms
from .language import get_language
from .wordgen import Params, Word


def is_theta_palindrome(word: Word, theta: GroupElement) -> bool:
    """Whether theta fixes the word; theta must be an antimorphism."""
    if not theta.is_antimorphism:
        raise ValueError(f"{theta} is not an antimorphism")
    return theta.apply(word) == word


def fixing_antimorphisms(word: Word, m: int) -> list[GroupElement]:
    """All antimorphisms of D_m fixing the word.

    A non-empty word is fixed by at most one of them (the outer letters
    force the shift, and words of length 1 or 2 always have that one);
    the empty word is fixed by all m.
    """
    return [e for e in antimorphisms(m) if e.apply(word) == word]


def palindromic_complexity(params: Params, theta: GroupElement, n: int) -> int:
    """Number of theta-palindromic factors of length n."""
    return len(get_language(params).theta_palindromes(theta, n))


def palindromic_extensions(
    params: Params, word: Word, theta: GroupElement
) -> frozenset[tuple[int, int]]:
    """Pairs (a, theta(a)) with a + word + theta(a) again a factor.

    The left letter alone determines the extension; the pair is kept for
    rendering the extended word.
    """
    return get_language(params).palindromic_extensions(word, theta)


@dataclass(frozen=True)
class PalindromeTable:
    """Per-antimorphism palindromic factors of one length."""

    n: int
    palindromes: Mapping[GroupElement, frozenset[Word]]

    def count(self, theta: GroupElement) -> int:
        return len(self.palindromes[theta])

    @property
    def total(self) -> int:
        return sum(len(words) for words in self.palindromes.values())


def palindrome_table(params: Params, n: int) -> PalindromeTable:
    lang = get_language(params)
    return PalindromeTable(
        n,
        {theta: lang.theta_palindromes(theta, n) for theta in antimorphisms(params.m)},
    )
