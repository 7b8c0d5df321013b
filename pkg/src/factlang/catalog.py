"""Named factor constructors and the built-in combiner fixtures.

The five fixtures (``example1`` .. ``example5``) cover the four dispatch
cases of the combiner: incomparable extension alphabets, equal alphabets
with plain boundary factors, an equal boundary star factor on either
side, and the strict-inclusion case driven by a residual chain.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import automata as fa
from . import expressions as ex
from .decomposition import Attestation, Decomposition, Factor
from .factorial import FactorialLanguage, factorial_closure


def sigma_star(gamma, sigma=None) -> Factor:
    """The factor ``gamma*``, machine-verified indecomposable.

    ``sigma`` is the session alphabet; it defaults to ``gamma`` itself.
    """
    gamma = frozenset(gamma)
    if not gamma:
        raise ValueError("the unit language is not a valid standalone factor")
    sig = tuple(sorted(gamma if sigma is None else set(sigma)))
    lang = FactorialLanguage._trusted(fa.subalphabet_star(sig, gamma))
    if len(gamma) == 1:
        expr = f"{next(iter(gamma))}*"
    else:
        expr = "{" + ",".join(sorted(gamma)) + "}*"
    return Factor(lang, Attestation.verified_sigma_star(), expr)


def fac_word_star(words, sigma=None) -> Factor:
    """Factor closure of the star of a finite word set, attested as
    asserted-indecomposable."""
    words = tuple(words)
    if not words:
        raise ValueError("the word set must be nonempty")
    sig = tuple(sorted({c for w in words for c in w} if sigma is None else set(sigma)))
    lang = factorial_closure(fa.star(fa.from_words(sig, words)))
    expr = "Fac({" + ",".join(words) + "}*)"
    return Factor(lang, Attestation.asserted("finite word-set star closure"), expr)


@dataclass(frozen=True)
class Fixture:
    name: str
    sigma: tuple[str, ...]
    a_decomp: Decomposition
    b_decomp: Decomposition
    expected: Decomposition
    case_id: int


def _alternating_block(sigma) -> Factor:
    lang = FactorialLanguage(fa.build(ex.parse_expression("a*+b*", sigma), sigma))
    return Factor(lang, Attestation.asserted("alternating star block"), "a*+b*")


def example_fixture(n: int, k: int = 1) -> Fixture:
    """The built-in fixtures; ``k`` is the repetition parameter of
    ``example5`` and must be at least 1."""
    if n == 5 and k < 1:
        raise ValueError("the repetition parameter must be at least 1")
    if n == 1:
        sigma = ("a", "b", "c")
        a = Decomposition([sigma_star("ab", sigma)])
        b = Decomposition([sigma_star("ac", sigma)])
        expected = Decomposition(a.factors + b.factors)
        return Fixture("example1", sigma, a, b, expected, 1)
    if n == 2:
        sigma = ("a", "b", "c")
        a = Decomposition([fac_word_star(("a", "ab"), sigma)])
        b = Decomposition([fac_word_star(("a", "ac"), sigma)])
        expected = Decomposition(a.factors + b.factors)
        return Fixture("example2", sigma, a, b, expected, 2)
    if n == 3:
        sigma = ("a", "b")
        a = Decomposition([sigma_star("a", sigma)])
        b = Decomposition([fac_word_star(("a", "ab"), sigma)])
        expected = Decomposition(b.factors)
        return Fixture("example3", sigma, a, b, expected, 3)
    if n == 4:
        sigma = ("a", "b")
        a_star = sigma_star("a", sigma)
        b_star = sigma_star("b", sigma)
        a = Decomposition([a_star, b_star])
        b = Decomposition([b_star, a_star])
        expected = Decomposition([a_star, b_star, a_star])
        return Fixture("example4", sigma, a, b, expected, 3)
    if n == 5:
        sigma = ("a", "b")
        block = _alternating_block(sigma)
        a_star = sigma_star("a", sigma)
        b_star = sigma_star("b", sigma)
        a = Decomposition([block] * (2 * k))
        b = Decomposition([a_star])
        expected = Decomposition([a_star, b_star] * k + [a_star])
        return Fixture("example5", sigma, a, b, expected, 4)
    raise ValueError(f"no fixture number {n}; valid numbers are 1..5")
