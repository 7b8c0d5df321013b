"""Factor-closed languages and their extension subalphabets.

A factorial language is a nonempty language equal to the set of all
factors of its own words; it therefore contains the empty word.  This
module wraps such languages in :class:`FactorialLanguage` (validated at
construction) and provides the two extension subalphabets and the two
residual operators that drive the decomposition calculus:

* ``pi_alphabet(L)``    -- symbols a with L.a contained in L
* ``delta_alphabet(L)`` -- symbols a with a.L contained in L
* ``r_delta(A, D)``     -- factors of the words of A not ending in D
* ``l_pi(B, P)``        -- factors of the words of B not starting in P
"""

from __future__ import annotations

from functools import lru_cache

from . import automata as fa
from .automata import Language
from .errors import AlphabetError, EmptyLanguageError, NotFactorialError


class FactorialLanguage:
    """A verified factor-closed, nonempty regular language.

    Construction re-checks both invariants, so values coming from an
    untrusted source (an automaton file, arbitrary expressions) cannot
    smuggle in a non-factorial carrier.
    """

    __slots__ = ("lang",)

    def __init__(self, lang: Language):
        if lang.is_empty():
            raise EmptyLanguageError("a factorial language must be nonempty")
        if fa.subword_closure(lang) != lang:
            raise NotFactorialError("language is not closed under taking factors")
        self.lang = lang

    @classmethod
    def _trusted(cls, lang: Language) -> "FactorialLanguage":
        # for results of operations that provably preserve factoriality
        out = object.__new__(cls)
        out.lang = lang
        return out

    @property
    def sigma(self) -> tuple[str, ...]:
        return self.lang.sigma

    def __eq__(self, other) -> bool:
        if not isinstance(other, FactorialLanguage):
            return NotImplemented
        return self.lang == other.lang

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self) -> int:
        return hash(("factorial", self.lang))

    def __repr__(self) -> str:
        return f"<FactorialLanguage over {''.join(self.sigma)}: {self.lang.n} states>"

    def is_epsilon_only(self) -> bool:
        return self.lang == fa.epsilon_language(self.sigma)


def epsilon_factorial(sigma) -> FactorialLanguage:
    """The unit language {empty word}, the smallest factorial language."""
    return FactorialLanguage(fa.epsilon_language(tuple(sorted(set(sigma)))))


def factorial_closure(x: Language) -> FactorialLanguage:
    """Factor closure of a nonempty language; idempotent."""
    if x.is_empty():
        raise EmptyLanguageError("the empty language has no factorial closure")
    return FactorialLanguage(fa.subword_closure(x))


def is_factorial(x: Language) -> bool:
    return not x.is_empty() and fa.subword_closure(x) == x


def _check_subalphabet(sigma: tuple[str, ...], sub: frozenset[str]) -> frozenset[str]:
    extra = sub - set(sigma)
    if extra:
        raise AlphabetError(f"symbols {sorted(extra)} are not in the session alphabet")
    return sub


@lru_cache(maxsize=65536)
def _pi(lang: Language) -> frozenset[str]:
    # a extends on the right iff every accepting state steps to an
    # accepting state on a; all states of the canonical DFA are reachable.
    out = []
    for i, c in enumerate(lang.sigma):
        if all(lang.delta[q][i] in lang.accepting for q in lang.accepting):
            out.append(c)
    return frozenset(out)


@lru_cache(maxsize=65536)
def _delta(lang: Language) -> frozenset[str]:
    # a extends on the left iff the language is contained in its own
    # left quotient by a, i.e. L(start) is a subset of L(delta(start, a)).
    out = []
    nsym = len(lang.sigma)
    for i, c in enumerate(lang.sigma):
        seen = {(0, lang.delta[0][i])}
        stack = [(0, lang.delta[0][i])]
        ok = True
        while stack and ok:
            p, q = stack.pop()
            if p in lang.accepting and q not in lang.accepting:
                ok = False
                break
            for k in range(nsym):
                tgt = (lang.delta[p][k], lang.delta[q][k])
                if tgt not in seen:
                    seen.add(tgt)
                    stack.append(tgt)
        if ok:
            out.append(c)
    return frozenset(out)


def pi_alphabet(l: FactorialLanguage) -> frozenset[str]:
    """Right-extension subalphabet: symbols a with ``l . a`` inside ``l``."""
    return _pi(l.lang)


def delta_alphabet(l: FactorialLanguage) -> frozenset[str]:
    """Left-extension subalphabet: symbols a with ``a . l`` inside ``l``."""
    return _delta(l.lang)


def concat_factorial(x: FactorialLanguage, y: FactorialLanguage) -> FactorialLanguage:
    """Catenation; factorial languages are closed under it."""
    return FactorialLanguage._trusted(fa.concat(x.lang, y.lang))


@lru_cache(maxsize=65536)
def _residual(lang: Language, sub: frozenset[str], side: str) -> Language:
    sigma = lang.sigma
    if not sub:
        return lang
    if fa.is_subset(lang, fa.subalphabet_star(sigma, sub)):
        return fa.epsilon_language(sigma)
    letters = fa.from_words(sigma, sorted(sub))
    if side == "right":
        removed = fa.concat(lang, letters)
    else:
        removed = fa.concat(letters, lang)
    return fa.subword_closure(fa.difference(lang, removed))


def r_delta(a: FactorialLanguage, delta) -> FactorialLanguage:
    """Factors of the words of ``a`` that do not end with a ``delta`` letter."""
    sub = _check_subalphabet(a.sigma, frozenset(delta))
    return FactorialLanguage._trusted(_residual(a.lang, sub, "right"))


def l_pi(b: FactorialLanguage, pi) -> FactorialLanguage:
    """Factors of the words of ``b`` that do not start with a ``pi`` letter."""
    sub = _check_subalphabet(b.sigma, frozenset(pi))
    return FactorialLanguage._trusted(_residual(b.lang, sub, "left"))
