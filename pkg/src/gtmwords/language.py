"""Exact factor language of a generalized Thue-Morse word, level by level.

The engine computes the set of length-n factors exactly, with no sliding
window over a finite prefix and therefore no unproven prefix bound.  The
fixed point is invariant under its substitution, so every length-n factor
occurs inside the image of some factor of length ceil(n/b) + 1; conversely
every window of the image of a factor is itself a factor.  When that
source length is shorter than n, one pass over the source level is exact.
For the few lengths where it is not (length 2 always, length 3 when b = 2)
the level is instead grown from the windows of the previous level's images
until it stops growing; both halves of the argument above still apply, so
the fixed point of that iteration is again the exact level.

Levels are memoised per engine and may be persisted through an optional
on-disk cache.  Engines are shared per (b, m) via :func:`get_language`.
All published values are immutable; concurrent cache misses can duplicate
work but converge to identical sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping

from . import cache as _cache
from .dihedral import GroupElement, antimorphism
from .wordgen import Params, Word, substitution_apply


class NotAFactorError(ValueError):
    """A queried word is not a factor of the word under study."""


@dataclass(frozen=True)
class Extensions:
    """Left, right and two-sided extension letters of one factor."""

    lext: frozenset[int]
    rext: frozenset[int]
    bext: frozenset[tuple[int, int]]

    @property
    def bilateral_order(self) -> int:
        return len(self.bext) - len(self.lext) - len(self.rext) + 1

    @property
    def is_bispecial(self) -> bool:
        return len(self.lext) >= 2 and len(self.rext) >= 2


@dataclass(frozen=True)
class BispecialRecord:
    """A bispecial factor with its bilateral order and palindromic data.

    theta is the unique antimorphism fixing the factor, or None when no
    antimorphism fixes it; pext_count is the number of theta-palindromic
    extensions (None when theta is None).
    """

    word: Word
    bilateral_order: int
    theta: GroupElement | None
    pext_count: int | None


@dataclass(frozen=True)
class SecondDifference:
    """Second difference of the complexity against the bilateral-order sum."""

    n: int
    lhs: int
    rhs: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def __bool__(self) -> bool:
        return self.equal


@dataclass(frozen=True)
class LanguageLevel:
    """All factors of one length together with their extension data."""

    n: int
    factors: frozenset[Word]
    extensions: Mapping[Word, Extensions]


def _occurs(needle: Word, haystack: Word) -> bool:
    span = len(haystack) - len(needle)
    return any(haystack[i : i + len(needle)] == needle for i in range(span + 1))


class FactorLanguage:
    """Level-by-level view of the factor language for fixed parameters."""

    def __init__(self, params: Params, cache_dir: Path | str | None = None):
        self.params = params
        self.cache_dir = Path(cache_dir) if cache_dir is not None else None
        self._levels: dict[int, frozenset[Word]] = {
            0: frozenset({()}),
            1: frozenset((k,) for k in params.letters),
        }

    # -- levels ---------------------------------------------------------

    def level(self, n: int) -> frozenset[Word]:
        """The exact set of factors of length n."""
        if n < 0:
            raise ValueError(f"length must be non-negative, got {n}")
        found = self._levels.get(n)
        if found is not None:
            return found
        words = None
        if self.cache_dir is not None:
            words = _cache.load_level(self.cache_dir, self.params, n)
        if words is None:
            words = self._compute_level(n)
            if self.cache_dir is not None:
                _cache.store_level(self.cache_dir, self.params, n, words)
        self._levels[n] = words
        return words

    def _compute_level(self, n: int) -> frozenset[Word]:
        b = self.params.b
        source_len = (n + b - 1) // b + 1
        if source_len < n:
            return frozenset(self._windows(self.level(source_len), n))
        # n == 2, or n == 3 with b == 2: close a same-length seed under the
        # substitution until no new factors appear.
        current = frozenset(self._windows(self.level(n - 1), n))
        while True:
            grown = current | self._windows(current, n)
            if grown == current:
                return current
            current = grown

    def _windows(self, sources: Iterable[Word], n: int) -> set[Word]:
        out: set[Word] = set()
        for v in sources:
            image = substitution_apply(v, self.params)
            out.update(image[i : i + n] for i in range(len(image) - n + 1))
        return out

    def complexity(self, n: int) -> int:
        return len(self.level(n))

    def is_factor(self, word: Word) -> bool:
        return word in self.level(len(word))

    # -- extensions and special factors ---------------------------------

    def extensions(self, word: Word) -> Extensions:
        n = len(word)
        if not self.is_factor(word):
            raise NotAFactorError(f"{word!r} is not a factor")
        letters = self.params.letters
        longer = self.level(n + 1)
        lext = frozenset(a for a in letters if (a, *word) in longer)
        rext = frozenset(c for c in letters if (*word, c) in longer)
        longest = self.level(n + 2)
        bext = frozenset(
            (a, c) for a in lext for c in rext if (a, *word, c) in longest
        )
        return Extensions(lext, rext, bext)

    def bilateral_order(self, word: Word) -> int:
        return self.extensions(word).bilateral_order

    def _fixing_antimorphism(self, word: Word) -> GroupElement | None:
        # the shift of a fixing antimorphism is forced by the outer letters
        candidate = antimorphism(word[0] + word[-1], self.params.m)
        return candidate if candidate.apply(word) == word else None

    def bispecials(self, n: int) -> list[BispecialRecord]:
        """All bispecial factors of length n, in lexicographic order."""
        if n < 1:
            raise ValueError(f"length must be at least 1, got {n}")
        records = []
        for word in sorted(self.level(n)):
            ext = self.extensions(word)
            if not ext.is_bispecial:
                continue
            theta = self._fixing_antimorphism(word)
            pext = (
                None
                if theta is None
                else len(self.palindromic_extensions(word, theta))
            )
            records.append(BispecialRecord(word, ext.bilateral_order, theta, pext))
        return records

    def ancestors(self, word: Word) -> list[Word]:
        """Factors whose image covers the word but whose trimmings do not.

        An occurrence of the word inside an image spans at most
        ceil(|word|/b) + 1 source letters, so only two source lengths can
        carry ancestors; both are scanned, and no uniqueness is assumed.
        """
        if not self.is_factor(word):
            raise NotAFactorError(f"{word!r} is not a factor")
        b = self.params.b
        shortest = (len(word) + b - 1) // b
        out = []
        for s in (shortest, shortest + 1):
            for v in sorted(self.level(s)):
                if not _occurs(word, substitution_apply(v, self.params)):
                    continue
                if _occurs(word, substitution_apply(v[1:], self.params)):
                    continue
                if _occurs(word, substitution_apply(v[:-1], self.params)):
                    continue
                out.append(v)
        return out

    def second_difference(self, n: int) -> SecondDifference:
        lhs = self.complexity(n + 2) - 2 * self.complexity(n + 1) + self.complexity(n)
        rhs = sum(self.bilateral_order(w) for w in self.level(n))
        return SecondDifference(n, lhs, rhs)

    # -- palindromic queries --------------------------------------------

    def theta_palindromes(self, theta: GroupElement, n: int) -> frozenset[Word]:
        if not theta.is_antimorphism:
            raise ValueError(f"{theta} is not an antimorphism")
        return frozenset(w for w in self.level(n) if theta.apply(w) == w)

    def palindromic_extensions(
        self, word: Word, theta: GroupElement
    ) -> frozenset[tuple[int, int]]:
        """Pairs (a, theta(a)) such that a + word + theta(a) is a factor."""
        if not theta.is_antimorphism:
            raise ValueError(f"{theta} is not an antimorphism")
        if theta.apply(word) != word:
            raise ValueError(f"{word!r} is not fixed by {theta}")
        if not self.is_factor(word):
            raise NotAFactorError(f"{word!r} is not a factor")
        longest = self.level(len(word) + 2)
        return frozenset(
            (a, theta.apply_letter(a))
            for a in self.params.letters
            if (a, *word, theta.apply_letter(a)) in longest
        )


# -- shared engines ------------------------------------------------------

_LANGUAGES: dict[tuple[int, int], FactorLanguage] = {}


def get_language(params: Params, cache_dir: Path | str | None = None) -> FactorLanguage:
    """Shared engine for (b, m); cache_dir only matters on first creation."""
    key = (params.b, params.m)
    found = _LANGUAGES.get(key)
    if found is None:
        found = _LANGUAGES.setdefault(key, FactorLanguage(params, cache_dir=cache_dir))
    return found


def reset_languages() -> None:
    """Drop all shared engines (used by the CLI and by tests)."""
    _LANGUAGES.clear()


# -- functional surface over the shared engines ---------------------------


def language_level(params: Params, n: int) -> LanguageLevel:
    """Factors of length n with the full extension data per factor."""
    lang = get_language(params)
    factors = lang.level(n)
    extensions = {w: lang.extensions(w) for w in sorted(factors)}
    return LanguageLevel(n, factors, extensions)


def complexity(params: Params, n: int) -> int:
    return get_language(params).complexity(n)


def extensions(params: Params, word: Word) -> Extensions:
    return get_language(params).extensions(word)


def bilateral_order(params: Params, word: Word) -> int:
    return get_language(params).bilateral_order(word)


def bispecials(params: Params, n: int) -> list[BispecialRecord]:
    return get_language(params).bispecials(n)


def ancestors(params: Params, word: Word) -> list[Word]:
    return get_language(params).ancestors(word)


def second_difference_identity_check(params: Params, n: int) -> SecondDifference:
    return get_language(params).second_difference(n)
