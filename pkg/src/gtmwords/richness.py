"""Dihedral richness verification.

An infinite word whose language is closed under the whole group is rich in
the dihedral sense when distinct group elements act injectively on its
non-empty factors and, for every n >= 1,

    deltaC(n) + 2m  =  sum over the m antimorphisms of  P(n) + P(n+1),

where deltaC is the first difference of the factor complexity and P counts
the palindromic factors of the given antimorphism.  The sum ranges over
all m antimorphisms: each one is involutive, so none is excluded.  This
module evaluates the defect (left side minus right side) per n, checks
closure and injectivity with witnesses, and bundles everything into a
report.  Everything is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dihedral import GroupElement, all_elements, antimorphisms
from .language import FactorLanguage, get_language
from .wordgen import Params, Word


@dataclass(frozen=True)
class ClosureCheck:
    ok: bool
    witness: tuple[Word, GroupElement] | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class InjectivityCheck:
    ok: bool
    witness: tuple[Word, GroupElement, GroupElement] | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class RichnessRow:
    n: int
    lhs: int
    rhs: int

    @property
    def defect(self) -> int:
        return self.lhs - self.rhs


@dataclass(frozen=True)
class TelescopeCheck:
    """One telescoping step of the richness equality, fully expanded.

    delta_diff is deltaC(n+1) - deltaC(n); pal_diff is the summed
    palindromic-complexity difference P(n+2) - P(n); bilateral_sum expands
    the left side through the second-difference identity; per_theta_ok
    records whether each antimorphism's difference equals the sum of its
    palindromic-extension surpluses over length-n palindromes.
    """

    n: int
    delta_diff: int
    pal_diff: int
    bilateral_sum: int
    per_theta_ok: bool

    @property
    def ok(self) -> bool:
        return (
            self.delta_diff == self.pal_diff
            and self.delta_diff == self.bilateral_sum
            and self.per_theta_ok
        )

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class RichnessReport:
    params: Params
    n_max: int
    rows: tuple[RichnessRow, ...]
    closure: ClosureCheck
    injectivity: InjectivityCheck

    @property
    def closure_ok(self) -> bool:
        return self.closure.ok

    @property
    def injectivity_ok(self) -> bool:
        return self.injectivity.ok

    @property
    def all_defects_zero(self) -> bool:
        return all(row.defect == 0 for row in self.rows)

    @property
    def ok(self) -> bool:
        return self.closure_ok and self.injectivity_ok and self.all_defects_zero

    @property
    def verdict(self) -> str:
        if self.ok:
            return f"criterion satisfied up to n={self.n_max}"
        reasons = []
        if not self.closure_ok:
            reasons.append("closure fails")
        if not self.injectivity_ok:
            reasons.append("injectivity fails")
        bad = [row.n for row in self.rows if row.defect != 0]
        if bad:
            reasons.append(f"nonzero defect at n={bad[0]}")
        return "criterion not satisfied: " + ", ".join(reasons)


def closure_check(params: Params, n_max: int) -> ClosureCheck:
    """Whether every group element maps every factor up to n_max to a factor."""
    if n_max < 1:
        raise ValueError(f"n_max must be at least 1, got {n_max}")
    lang = get_language(params)
    elements = all_elements(params.m)
    for n in range(1, n_max + 1):
        level = lang.level(n)
        for word in sorted(level):
            for element in elements:
                if element.apply(word) not in level:
                    return ClosureCheck(False, (word, element))
    return ClosureCheck(True)


def injectivity_check(params: Params, n_max: int) -> InjectivityCheck:
    """Distinct morphisms, and distinct antimorphisms, act distinctly on
    every non-empty factor up to n_max."""
    if n_max < 1:
        raise ValueError(f"n_max must be at least 1, got {n_max}")
    lang = get_language(params)
    groups = (
        [e for e in all_elements(params.m) if not e.is_antimorphism],
        antimorphisms(params.m),
    )
    for n in range(1, n_max + 1):
        for word in sorted(lang.level(n)):
            for batch in groups:
                seen: dict[Word, GroupElement] = {}
                for element in batch:
                    image = element.apply(word)
                    if image in seen:
                        return InjectivityCheck(False, (word, seen[image], element))
                    seen[image] = element
    return InjectivityCheck(True)


def _pal_count(lang: FactorLanguage, theta: GroupElement, n: int) -> int:
    return len(lang.theta_palindromes(theta, n))


def richness_defect(params: Params, n: int) -> int:
    """deltaC(n) + 2m minus the summed palindromic complexities P(n) + P(n+1)."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    lang = get_language(params)
    lhs = lang.complexity(n + 1) - lang.complexity(n) + 2 * params.m
    rhs = sum(
        _pal_count(lang, theta, n) + _pal_count(lang, theta, n + 1)
        for theta in antimorphisms(params.m)
    )
    return lhs - rhs


def telescoped_identity_check(params: Params, n: int) -> TelescopeCheck:
    """Check one telescoping step of the richness equality and its expansions."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    lang = get_language(params)
    c = lang.complexity
    delta_diff = c(n + 2) - 2 * c(n + 1) + c(n)
    pal_diff = 0
    per_theta_ok = True
    for theta in antimorphisms(params.m):
        diff = _pal_count(lang, theta, n + 2) - _pal_count(lang, theta, n)
        pal_diff += diff
        surplus = sum(
            len(lang.palindromic_extensions(word, theta)) - 1
            for word in lang.theta_palindromes(theta, n)
        )
        if diff != surplus:
            per_theta_ok = False
    bilateral_sum = lang.second_difference(n).rhs
    return TelescopeCheck(n, delta_diff, pal_diff, bilateral_sum, per_theta_ok)


def richness_report(params: Params, n_max: int) -> RichnessReport:
    """Defects for n = 1..n_max together with closure and injectivity."""
    if n_max < 1:
        raise ValueError(f"n_max must be at least 1, got {n_max}")
    lang = get_language(params)
    rows = []
    for n in range(1, n_max + 1):
        lhs = lang.complexity(n + 1) - lang.complexity(n) + 2 * params.m
        rhs = sum(
            _pal_count(lang, theta, n) + _pal_count(lang, theta, n + 1)
            for theta in antimorphisms(params.m)
        )
        rows.append(RichnessRow(n, lhs, rhs))
    return RichnessReport(
        params,
        n_max,
        tuple(rows),
        closure_check(params, n_max),
        injectivity_check(params, n_max),
    )
