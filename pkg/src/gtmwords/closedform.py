"""Closed-form factor complexity and its first difference.

In the aperiodic case the positive integers split into an initial range
and, for every exponent k >= 1, a high-growth window (b^k, (2b-1)b^(k-1)]
where deltaC(n) = qm and a low-growth window ((2b-1)b^(k-1), b^(k+1)]
where deltaC(n) = qm - m.  The periodic case is flat: C(n) = m for all
n >= 1.  Branch resolution is exact integer arithmetic throughout; Python
ints make the powers safe at any n.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, unique

from .language import get_language
from .wordgen import Params


@unique
class Branch(Enum):
    ZERO = "zero"
    ONE = "one"
    LOW_RANGE = "low_range"
    PLATEAU_HIGH = "plateau_high"
    PLATEAU_LOW = "plateau_low"
    PERIODIC = "periodic"


@dataclass(frozen=True)
class ComplexityFormulaResult:
    n: int
    branch: Branch
    delta_c: int
    c: int
    k: int | None = None
    ell: int | None = None


@dataclass(frozen=True)
class CrossValidation:
    ok: bool
    # (n, quantity, formula value, enumerated value) for the first mismatch
    mismatch: tuple[int, str, int, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


def formula_complexity(params: Params, n: int) -> ComplexityFormulaResult:
    """C(n) and deltaC(n) from the closed form, with the matched branch."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    b, m, q = params.b, params.m, params.q
    if n == 0:
        return ComplexityFormulaResult(0, Branch.ZERO, m - 1, 1)
    if params.periodic:
        return ComplexityFormulaResult(n, Branch.PERIODIC, 0, m)
    if n == 1:
        return ComplexityFormulaResult(1, Branch.ONE, q * m - m, m)
    if n <= b:
        return ComplexityFormulaResult(
            n, Branch.LOW_RANGE, q * m - m, q * m * (n - 1) - m * (n - 2)
        )
    k = 1
    while b ** (k + 1) < n:
        k += 1
    # b^k < n <= b^(k+1)
    split = (2 * b - 1) * b ** (k - 1)
    if n <= split:
        ell = n - b**k - 1
        return ComplexityFormulaResult(
            n,
            Branch.PLATEAU_HIGH,
            q * m,
            q * m * (n - 1) - m * (b**k - b ** (k - 1)),
            k,
            ell,
        )
    ell = n - split - 1
    return ComplexityFormulaResult(
        n,
        Branch.PLATEAU_LOW,
        q * m - m,
        q * m * (n - 1) - m * (b**k - b ** (k - 1) + ell),
        k,
        ell,
    )


def formula_delta(params: Params, n: int) -> int:
    """deltaC(n) of the matched branch."""
    return formula_complexity(params, n).delta_c


def cross_validate(params: Params, n_max: int) -> CrossValidation:
    """Compare the closed form against exact enumeration for n = 0..n_max."""
    if n_max < 1:
        raise ValueError(f"n_max must be at least 1, got {n_max}")
    lang = get_language(params)
    for n in range(n_max + 1):
        result = formula_complexity(params, n)
        counted = lang.complexity(n)
        if result.c != counted:
            return CrossValidation(False, (n, "complexity", result.c, counted))
        delta = lang.complexity(n + 1) - counted
        if result.delta_c != delta:
            return CrossValidation(False, (n, "delta", result.delta_c, delta))
    return CrossValidation(True)
