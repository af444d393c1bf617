"""Generalized Thue-Morse words over the alphabet Z_m.

The word for parameters (b, m) has n-th letter s_b(n) mod m, where s_b is
the base-b digit sum.  It is equally the fixed point, starting with 0, of
the uniform substitution that sends each letter k to the ascending block
k, k+1, ..., k+b-1 (mod m).  Both generators are implemented here and kept
independent of each other so that they can cross-check.

Letters are plain ints in range(m); words are tuples of letters, reduced
mod m at construction time so that word equality and hashing are canonical.
All functions are pure and the values immutable, so everything is safe to
share between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import chain

Word = tuple[int, ...]

EMPTY_WORD: Word = ()


@dataclass(frozen=True)
class Params:
    """Problem parameters (b, m) plus the constants derived from them.

    q is the order of the letter shift k -> k + (b - 1): the smallest
    positive integer such that q * (b - 1) is divisible by m.  The word is
    purely periodic exactly when b = 1 (mod m), which is the same as q = 1.
    m = 1 is allowed and gives the constant word over a single letter.
    """

    b: int
    m: int

    def __post_init__(self) -> None:
        if self.b < 2:
            raise ValueError(f"base b must be at least 2, got {self.b}")
        if self.m < 1:
            raise ValueError(f"modulus m must be at least 1, got {self.m}")

    @property
    def q(self) -> int:
        return self.m // math.gcd(self.b - 1, self.m)

    @property
    def periodic(self) -> bool:
        return (self.b - 1) % self.m == 0

    @property
    def letters(self) -> range:
        return range(self.m)


def digit_sum(n: int, b: int) -> int:
    """Sum of the digits of n written in base b."""
    if b < 2:
        raise ValueError(f"base b must be at least 2, got {b}")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    total = 0
    while n:
        n, digit = divmod(n, b)
        total += digit
    return total


def gtm_letter(n: int, params: Params) -> int:
    """Letter at position n: the base-b digit sum of n, reduced mod m."""
    return digit_sum(n, params.b) % params.m


def gtm_prefix(params: Params, length: int) -> Word:
    """First `length` letters, computed by direct digit counting.

    Keeps the base-b digits of the running position and updates their sum
    on every increment, so the whole prefix costs O(length) digit steps
    instead of O(length * log length) independent digit sums.
    """
    if length < 0:
        raise ValueError(f"length must be non-negative, got {length}")
    m = params.m
    top = params.b - 1
    digits = [0]
    total = 0
    out = []
    for _ in range(length):
        out.append(total % m)
        i = 0
        while True:
            if i == len(digits):
                digits.append(0)
            if digits[i] == top:
                digits[i] = 0
                total -= top
                i += 1
            else:
                digits[i] += 1
                total += 1
                break
    return tuple(out)


@lru_cache(maxsize=None)
def _images(params: Params) -> tuple[Word, ...]:
    return tuple(
        tuple((k + i) % params.m for i in range(params.b)) for k in params.letters
    )


def substitution_image(k: int, params: Params) -> Word:
    """Image of one letter: the length-b block k, k+1, ..., k+b-1 (mod m)."""
    if not 0 <= k < params.m:
        raise ValueError(f"letter {k} is not in range(0, {params.m})")
    return _images(params)[k]


def substitution_apply(word: Word, params: Params) -> Word:
    """Image of a word: letter images concatenated in order, length b*|word|."""
    if word and (min(word) < 0 or max(word) >= params.m):
        raise ValueError(f"word has letters outside range(0, {params.m})")
    images = _images(params)
    return tuple(chain.from_iterable(images[k] for k in word))


def fixed_point_prefix(params: Params, length: int) -> Word:
    """First `length` letters of the substitution fixed point starting with 0.

    Re-applies the substitution to the previous image until enough letters
    exist, then truncates; each pass multiplies the length by b, so the
    total work is O(length).
    """
    if length < 0:
        raise ValueError(f"length must be non-negative, got {length}")
    if length == 0:
        return EMPTY_WORD
    images = _images(params)
    word: Word = (0,)
    while len(word) < length:
        word = tuple(chain.from_iterable(images[k] for k in word))
    return word[:length]
