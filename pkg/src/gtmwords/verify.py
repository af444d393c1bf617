"""Desk-scale verification suite for the structural facts the package rests on.

Each check exhaustively tests one statement over a bounded slice of the
language and reports pass/fail with a witness on failure.  Statements that
hold only in the aperiodic case are reported as skipped when b = 1 (mod m).
The bounds are arguments with defaults chosen so the whole suite stays in
the seconds range at typical parameters.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .dihedral import all_elements, antimorphism, conjugate_antimorphism, morphism
from .language import FactorLanguage, get_language
from .palcomplexity import fixing_antimorphisms
from .wordgen import Params, Word, substitution_apply, substitution_image


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str

    def __bool__(self) -> bool:
        return self.ok


def _word_str(word: Word) -> str:
    return "".join(map(str, word)) if word else "(empty)"


def _passed(name: str, detail: str) -> CheckResult:
    return CheckResult(name, True, detail)


def _failed(name: str, detail: str) -> CheckResult:
    return CheckResult(name, False, detail)


def _skipped(name: str) -> CheckResult:
    return CheckResult(name, True, "skipped: periodic case, statement not applicable")


def expected_short_bispecial(b: int, length: int) -> tuple[int, int] | None:
    """Expected (bilateral order, palindromic extension count) of a bispecial
    factor of the given length in the aperiodic case; None beyond 2b - 1."""
    if 1 <= length <= b - 1:
        return (0, 1)
    if length == b:
        return (1, 2)
    if b + 1 <= length <= 2 * b - 2:
        return (0, 1)
    if length == 2 * b - 1:
        return (-1, 0)
    return None


def check_substitution_group_commutation(
    params: Params, lang: FactorLanguage | None = None, max_len: int = 8
) -> CheckResult:
    """Morphisms commute with the substitution; an antimorphism with shift
    x + b - 1 applied after the substitution equals the substitution applied
    after the antimorphism with shift x."""
    name = "substitution_group_commutation"
    lang = lang or get_language(params)
    m, b = params.m, params.b
    count = 0
    for n in range(max_len + 1):
        for word in sorted(lang.level(n)):
            image = substitution_apply(word, params)
            for x in range(m):
                rot = morphism(x, m)
                if rot.apply(image) != substitution_apply(rot.apply(word), params):
                    return _failed(name, f"morphism shift {x} on {_word_str(word)}")
                outer = antimorphism(x + b - 1, m)
                inner = antimorphism(x, m)
                if outer.apply(image) != substitution_apply(inner.apply(word), params):
                    return _failed(
                        name, f"antimorphism shift {x} on {_word_str(word)}"
                    )
                count += 2
    return _passed(name, f"{count} identities on factors up to length {max_len}")


def check_substitution_uniform(params: Params, lang=None) -> CheckResult:
    name = "substitution_uniform"
    for k in params.letters:
        if len(substitution_image(k, params)) != params.b:
            return _failed(name, f"image of {k} does not have length {params.b}")
    return _passed(name, f"all {params.m} letter images have length {params.b}")


def check_substitution_bifix_free(params: Params, lang=None) -> CheckResult:
    name = "substitution_bifix_free"
    firsts = {substitution_image(k, params)[0] for k in params.letters}
    lasts = {substitution_image(k, params)[-1] for k in params.letters}
    if len(firsts) != params.m:
        return _failed(name, "first letters of letter images collide")
    if len(lasts) != params.m:
        return _failed(name, "last letters of letter images collide")
    return _passed(name, f"first and last letter maps injective on {params.m} letters")


def check_length2_language_formula(
    params: Params, lang: FactorLanguage | None = None
) -> CheckResult:
    """Length-2 factors are exactly the shifted descents: the pairs obtained
    from (r-1, r) by advancing the left letter k*(b-1) steps, k < q."""
    name = "length2_language_formula"
    lang = lang or get_language(params)
    m, d, q = params.m, params.b - 1, params.q
    expected = {
        ((r - 1 + k * d) % m, r) for r in range(m) for k in range(q)
    }
    actual = set(lang.level(2))
    if expected != actual:
        return _failed(
            name,
            f"difference {sorted(expected ^ actual)[:4]} between formula and level",
        )
    return _passed(name, f"{len(actual)} factors of length 2 match the formula")


def check_length3_language_formula(
    params: Params, lang: FactorLanguage | None = None
) -> CheckResult:
    """Length-3 factors are the two families with a shifted first or third
    letter around an ascending middle pair."""
    name = "length3_language_formula"
    lang = lang or get_language(params)
    m, d, q = params.m, params.b - 1, params.q
    first_shifted = {
        ((t - 1 + k * d) % m, t, (t + 1) % m) for t in range(m) for k in range(q)
    }
    last_shifted = {
        ((t - 1) % m, t, (t + 1 - k * d) % m) for t in range(m) for k in range(q)
    }
    expected = first_shifted | last_shifted
    actual = set(lang.level(3))
    if expected != actual:
        return _failed(
            name,
            f"difference {sorted(expected ^ actual)[:4]} between formula and level",
        )
    return _passed(name, f"{len(actual)} factors of length 3 match the formula")


def check_unique_fixing_antimorphism(params: Params, lang=None) -> CheckResult:
    """Every word of length 1 or 2 over Z_m has exactly one fixing antimorphism."""
    name = "unique_fixing_antimorphism_short_words"
    m = params.m
    count = 0
    for length in (1, 2):
        for word in product(range(m), repeat=length):
            fixers = fixing_antimorphisms(word, m)
            if len(fixers) != 1:
                return _failed(name, f"{_word_str(word)} fixed by {len(fixers)}")
            count += 1
    return _passed(name, f"all {count} words of length 1 and 2 have one fixer")


def check_palindrome_image_shift(
    params: Params, lang: FactorLanguage | None = None, max_len: int = 12
) -> CheckResult:
    """The image of a palindromic factor fixed by the shift-x antimorphism is
    fixed by the shift-(x + b - 1) antimorphism, and by no other."""
    name = "palindrome_image_shift"
    lang = lang or get_language(params)
    m, b = params.m, params.b
    count = 0
    for n in range(1, max_len + 1):
        for word in sorted(lang.level(n)):
            fixers = fixing_antimorphisms(word, m)
            if not fixers:
                continue
            (theta,) = fixers
            image = substitution_apply(word, params)
            expected = antimorphism(theta.shift + b - 1, m)
            if fixing_antimorphisms(image, m) != [expected]:
                return _failed(
                    name,
                    f"image of {_word_str(word)} not fixed exactly by {expected}",
                )
            count += 1
    return _passed(name, f"{count} palindromic factors up to length {max_len}")


def check_group_action_preserves_bispecials(
    params: Params, lang: FactorLanguage | None = None, max_len: int | None = None
) -> CheckResult:
    """Group images of bispecial factors are bispecial with equal bilateral
    order, and conjugation transports the fixing antimorphism."""
    name = "group_action_preserves_bispecials"
    lang = lang or get_language(params)
    m = params.m
    max_len = max_len if max_len is not None else 4 * params.b
    elements = all_elements(m)
    count = 0
    for n in range(1, max_len + 1):
        orders = {rec.word: rec.bilateral_order for rec in lang.bispecials(n)}
        for word, order in orders.items():
            for nu in elements:
                image = nu.apply(word)
                if image not in orders or orders[image] != order:
                    return _failed(
                        name, f"{nu} breaks bispeciality of {_word_str(word)}"
                    )
                count += 1
    conj_len = min(max_len, 8)
    for n in range(1, conj_len + 1):
        for word in sorted(lang.level(n)):
            for theta in fixing_antimorphisms(word, m):
                for nu in elements:
                    moved = conjugate_antimorphism(nu, theta)
                    if moved.apply(nu.apply(word)) != nu.apply(word):
                        return _failed(
                            name,
                            f"conjugate of {theta} by {nu} misses {_word_str(word)}",
                        )
    return _passed(name, f"{count} image checks on bispecials up to length {max_len}")


def check_broken_run_unique_ancestor(
    params: Params, lang: FactorLanguage | None = None, max_len: int | None = None
) -> CheckResult:
    """A factor with some step other than +1 has exactly one ancestor."""
    name = "broken_run_unique_ancestor"
    lang = lang or get_language(params)
    m = params.m
    max_len = max_len if max_len is not None else 2 * params.b + 2
    count = 0
    for n in range(2, max_len + 1):
        for word in sorted(lang.level(n)):
            if all(word[i + 1] == (word[i] + 1) % m for i in range(n - 1)):
                continue
            found = lang.ancestors(word)
            if len(found) != 1:
                return _failed(
                    name, f"{_word_str(word)} has {len(found)} ancestors"
                )
            count += 1
    return _passed(name, f"{count} broken-run factors up to length {max_len}")


def check_long_factor_unique_ancestor(
    params: Params, lang: FactorLanguage | None = None, max_len: int | None = None
) -> CheckResult:
    """Aperiodic case: every factor longer than 2b has exactly one ancestor."""
    name = "long_factor_unique_ancestor"
    if params.periodic:
        return _skipped(name)
    lang = lang or get_language(params)
    b = params.b
    max_len = max_len if max_len is not None else 4 * b
    count = 0
    for n in range(2 * b + 1, max_len + 1):
        for word in sorted(lang.level(n)):
            found = lang.ancestors(word)
            if len(found) != 1:
                return _failed(name, f"{_word_str(word)} has {len(found)} ancestors")
            count += 1
    return _passed(name, f"{count} factors with lengths in ({2*b}, {max_len}]")


def check_bispecial_block_alignment(
    params: Params, lang: FactorLanguage | None = None, max_len: int | None = None
) -> CheckResult:
    """A bispecial factor of length at least b starts with some letter image
    and ends with some letter image."""
    name = "bispecial_block_alignment"
    lang = lang or get_language(params)
    b = params.b
    max_len = max_len if max_len is not None else 4 * b
    images = [substitution_image(k, params) for k in params.letters]
    count = 0
    for n in range(b, max_len + 1):
        for rec in lang.bispecials(n):
            word = rec.word
            if not any(word[:b] == img for img in images):
                return _failed(name, f"{_word_str(word)} has no image prefix")
            if not any(word[-b:] == img for img in images):
                return _failed(name, f"{_word_str(word)} has no image suffix")
            count += 1
    return _passed(name, f"{count} bispecials with lengths in [{b}, {max_len}]")


def check_second_difference_identity(
    params: Params, lang: FactorLanguage | None = None, n_max: int = 40
) -> CheckResult:
    """Second difference of the complexity equals the bilateral-order sum."""
    name = "second_difference_identity"
    lang = lang or get_language(params)
    for n in range(n_max + 1):
        result = lang.second_difference(n)
        if not result.equal:
            return _failed(name, f"n={n}: {result.lhs} != {result.rhs}")
    return _passed(name, f"identity holds for n = 0..{n_max}")


def check_short_bispecial_classification(
    params: Params, lang: FactorLanguage | None = None
) -> CheckResult:
    """Aperiodic case: bispecial factors shorter than 2b carry the expected
    (bilateral order, palindromic extension count) for their length class."""
    name = "short_bispecial_classification"
    if params.periodic:
        return _skipped(name)
    lang = lang or get_language(params)
    count = 0
    for length in range(1, 2 * params.b):
        expected = expected_short_bispecial(params.b, length)
        records = lang.bispecials(length)
        if not records:
            return _failed(name, f"no bispecial factors of length {length}")
        for rec in records:
            if rec.theta is None:
                return _failed(name, f"{_word_str(rec.word)} has no fixing antimorphism")
            if (rec.bilateral_order, rec.pext_count) != expected:
                return _failed(
                    name,
                    f"{_word_str(rec.word)}: got "
                    f"({rec.bilateral_order}, {rec.pext_count}), want {expected}",
                )
            count += 1
    return _passed(name, f"{count} bispecials of length < {2*params.b} classified")


def check_bilateral_order_vs_palindrome_extensions(
    params: Params, lang: FactorLanguage | None = None, max_len: int | None = None
) -> CheckResult:
    """Aperiodic case: a non-empty bispecial factor has exactly one fixing
    antimorphism and bilateral order = palindromic extensions - 1."""
    name = "bilateral_order_vs_palindrome_extensions"
    if params.periodic:
        return _skipped(name)
    lang = lang or get_language(params)
    max_len = max_len if max_len is not None else 4 * params.b
    count = 0
    for n in range(1, max_len + 1):
        for rec in lang.bispecials(n):
            fixers = fixing_antimorphisms(rec.word, params.m)
            if len(fixers) != 1:
                return _failed(
                    name, f"{_word_str(rec.word)} fixed by {len(fixers)} antimorphisms"
                )
            if rec.bilateral_order != rec.pext_count - 1:
                return _failed(
                    name,
                    f"{_word_str(rec.word)}: order {rec.bilateral_order}, "
                    f"extensions {rec.pext_count}",
                )
            count += 1
    return _passed(name, f"{count} bispecials up to length {max_len}")


def check_long_bispecial_transfer(
    params: Params, lang: FactorLanguage | None = None, max_len: int | None = None
) -> CheckResult:
    """Aperiodic case: a bispecial factor of length >= 2b is the exact image
    of its unique ancestor, which is bispecial with the same bilateral order;
    the fixing antimorphism shift advances by b - 1 and the palindromic
    extension counts agree."""
    name = "long_bispecial_transfer"
    if params.periodic:
        return _skipped(name)
    lang = lang or get_language(params)
    b, m = params.b, params.m
    max_len = max_len if max_len is not None else 4 * b * b
    count = 0
    for n in range(2 * b, max_len + 1):
        for rec in lang.bispecials(n):
            word = rec.word
            found = lang.ancestors(word)
            if len(found) != 1:
                return _failed(name, f"{_word_str(word)} has {len(found)} ancestors")
            (v,) = found
            if substitution_apply(v, params) != word:
                return _failed(name, f"ancestor image of {_word_str(word)} differs")
            v_ext = lang.extensions(v)
            if not v_ext.is_bispecial:
                return _failed(name, f"ancestor {_word_str(v)} is not bispecial")
            if v_ext.bilateral_order != rec.bilateral_order:
                return _failed(
                    name,
                    f"orders differ: {_word_str(word)} vs ancestor {_word_str(v)}",
                )
            theta_v = fixing_antimorphisms(v, m)
            theta_w = fixing_antimorphisms(word, m)
            if len(theta_v) != 1 or len(theta_w) != 1:
                return _failed(name, f"fixing antimorphism not unique at {_word_str(word)}")
            if theta_w[0].shift != (theta_v[0].shift + b - 1) % m:
                return _failed(
                    name, f"fixing shift does not advance by b-1 at {_word_str(word)}"
                )
            pext_v = len(lang.palindromic_extensions(v, theta_v[0]))
            if pext_v != rec.pext_count:
                return _failed(
                    name,
                    f"extension counts differ: {rec.pext_count} vs {pext_v} "
                    f"at {_word_str(word)}",
                )
            count += 1
    if count == 0:
        return _failed(name, f"no bispecial factors with length in [{2*b}, {max_len}]")
    return _passed(name, f"{count} bispecials with lengths in [{2*b}, {max_len}]")


def check_nonbispecial_palindrome_extension(
    params: Params, lang: FactorLanguage | None = None, max_len: int = 30
) -> CheckResult:
    """A palindromic factor that is not bispecial has exactly one palindromic
    extension for its fixing antimorphism."""
    name = "nonbispecial_palindrome_single_extension"
    lang = lang or get_language(params)
    m = params.m
    count = 0
    for n in range(max_len + 1):
        for word in sorted(lang.level(n)):
            fixers = fixing_antimorphisms(word, m)
            if not fixers:
                continue
            if lang.extensions(word).is_bispecial:
                continue
            for theta in fixers:
                found = len(lang.palindromic_extensions(word, theta))
                if found != 1:
                    return _failed(
                        name, f"{_word_str(word)} has {found} extensions for {theta}"
                    )
                count += 1
    return _passed(name, f"{count} non-bispecial palindromes up to length {max_len}")


def run_property_suite(
    params: Params,
    *,
    commutation_len: int = 8,
    pal_shift_len: int = 12,
    action_len: int | None = None,
    ancestor_len: int | None = None,
    eq_n_max: int = 40,
    corollary_len: int | None = None,
    lemma_len: int | None = None,
    pal_ext_len: int = 30,
) -> list[CheckResult]:
    """Run every check against one parameter pair, in a stable order."""
    lang = get_language(params)
    return [
        check_substitution_group_commutation(params, lang, commutation_len),
        check_substitution_uniform(params, lang),
        check_substitution_bifix_free(params, lang),
        check_length2_language_formula(params, lang),
        check_length3_language_formula(params, lang),
        check_unique_fixing_antimorphism(params, lang),
        check_palindrome_image_shift(params, lang, pal_shift_len),
        check_group_action_preserves_bispecials(params, lang, action_len),
        check_broken_run_unique_ancestor(params, lang, ancestor_len),
        check_long_factor_unique_ancestor(params, lang),
        check_bispecial_block_alignment(params, lang),
        check_second_difference_identity(params, lang, eq_n_max),
        check_short_bispecial_classification(params, lang),
        check_bilateral_order_vs_palindrome_extensions(params, lang, corollary_len),
        check_long_bispecial_transfer(params, lang, lemma_len),
        check_nonbispecial_palindrome_extension(params, lang, pal_ext_len),
    ]
