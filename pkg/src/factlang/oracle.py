"""Independent verification machinery.

Nothing in here reuses the lemma-based decision procedures it checks:
bounded product comparison catenates word sets combinatorially, and the
minimality search looks for an excludable word instead of computing
minimal replacement factors.  Both are exact on their stated bounds.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import automata as fa
from .automata import Nfa
from .decomposition import Decomposition
from .errors import GenerationError
from .factorial import FactorialLanguage, factorial_closure


@dataclass(frozen=True)
class TruncatedLanguage:
    bound: int
    words: tuple[str, ...]


def truncate(l: FactorialLanguage, n: int) -> TruncatedLanguage:
    """The length-at-most-n slice, in length-then-lex order."""
    return TruncatedLanguage(n, tuple(fa.enumerate_up_to(l.lang, n)))


def bounded_product_equal(d: Decomposition, l: FactorialLanguage, n: int) -> bool:
    """Whether the product of ``d`` and ``l`` agree on all words of length
    at most ``n``.

    The product slice is assembled by catenating the factor slices as word
    sets; since every factor contains the empty word, the slice at budget
    ``n`` is exact for words of length up to ``n``.
    """
    acc = {""}
    for factor in d.factors:
        piece = truncate(factor.lang, n).words
        acc = {u + v for u in acc for v in piece if len(u) + len(v) <= n}
    return acc == set(truncate(l, n).words)


def _exclude(lang: FactorialLanguage, word: str) -> FactorialLanguage:
    """The maximal factorial subset of ``lang`` omitting ``word``: all its
    words avoiding ``word`` as a factor."""
    sigma = lang.sigma
    anywhere = fa.concat(fa.concat(fa.subalphabet_star(sigma, frozenset(sigma)),
                                   fa.from_words(sigma, [word])),
                         fa.subalphabet_star(sigma, frozenset(sigma)))
    return FactorialLanguage(fa.difference(lang.lang, anywhere))


def bounded_minimality_search(d: Decomposition, n: int):
    """Search for a witness of non-minimality among the words of length at
    most ``n`` of each factor.

    Returns ``(position, word)`` if excluding ``word`` from the factor at
    1-based ``position`` preserves the exact product, else ``None``.  Any
    proper factorial subset of a factor omits some word and sits inside
    the corresponding exclusion, so a minimal decomposition never yields a
    witness, at any bound.
    """
    if d.is_unit():
        return None
    langs = [f.lang.lang for f in d.factors]
    whole = langs[0]
    for lang in langs[1:]:
        whole = fa.concat(whole, lang)
    for i, factor in enumerate(d.factors, start=1):
        for word in truncate(factor.lang, n).words:
            if not word:
                continue
            smaller = _exclude(factor.lang, word).lang
            pieces = langs[:i - 1] + [smaller] + langs[i:]
            replaced = pieces[0]
            for lang in pieces[1:]:
                replaced = fa.concat(replaced, lang)
            if replaced == whole:
                return i, word
    return None


@dataclass(frozen=True)
class GeneratorConfig:
    alphabet: tuple[str, ...]
    max_states: int = 4
    transition_density: float = 0.5
    seed: int = 0

    def __post_init__(self):
        if self.max_states < 1:
            raise ValueError("max_states must be at least 1")
        if not 0.0 <= self.transition_density <= 1.0:
            raise ValueError("transition_density must lie in [0, 1]")


def random_factorial(cfg: GeneratorConfig) -> FactorialLanguage:
    """A random factorial language: factor closure of a random acceptor.

    Deterministic for a given config; retries fresh draws when the
    acceptor is empty, up to 100 times.
    """
    rng = random.Random(cfg.seed)
    sigma = tuple(sorted(set(cfg.alphabet)))
    for _ in range(100):
        n = rng.randint(1, cfg.max_states)
        nfa = Nfa(sigma)
        for _ in range(n):
            nfa.add_state()
        nfa.initials = {0}
        for p in range(n):
            for c in sigma:
                if rng.random() < cfg.transition_density:
                    nfa.add_edge(p, c, rng.randrange(n))
        nfa.acceptings = {q for q in range(n) if rng.random() < 0.5}
        lang = fa.canonicalize(nfa)
        if lang.is_empty():
            continue
        return factorial_closure(lang)
    raise GenerationError("random generation produced only empty languages")
