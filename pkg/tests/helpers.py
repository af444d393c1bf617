"""Shared test fixtures: parameter pairs and the sliding-window oracle.

The oracle builds language levels as windows of a long digit-sum prefix,
a path fully independent of the substitution-closure engine under test.
"""

from gtmwords import Params, gtm_prefix

# the standing set of parameter pairs exercised across the suite
ALL_PAIRS = [(2, 2), (2, 3), (2, 4), (3, 2), (3, 4), (3, 5), (4, 3), (5, 2), (2, 1)]
APERIODIC_PAIRS = [p for p in ALL_PAIRS if not Params(*p).periodic]
PERIODIC_PAIRS = [p for p in ALL_PAIRS if Params(*p).periodic]


def oracle_prefix_length(b: int, n: int) -> int:
    exponent = 0
    while b**exponent < max(n, 1):
        exponent += 1
    return 2 * (2 * b) ** (exponent + 2)


def window_level(params: Params, n: int) -> set:
    """Length-n windows of a long prefix generated purely from digit sums."""
    if n == 0:
        return {()}
    prefix = gtm_prefix(params, oracle_prefix_length(params.b, n))
    return {prefix[i : i + n] for i in range(len(prefix) - n + 1)}


def window_complexity(params: Params, n: int) -> int:
    return len(window_level(params, n))
