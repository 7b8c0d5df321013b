"""Decompositions of factorial languages and the four-case combiner.

A :class:`Decomposition` is a nonempty sequence of factors, each a
factorial language together with an attestation of why it is believed
indecomposable.  The only machine-checkable indecomposability class is
``gamma*`` for a subalphabet gamma; everything else is either asserted
by the caller or left unverified.

``catenate_canonical`` computes the canonical decomposition of the
catenation of two canonically-decomposed languages by case analysis on
the right-extension alphabet of the left operand and the left-extension
alphabet of the right operand; the two residual chain procedures handle
the strict-inclusion cases factor by factor.  ``audit_minimality`` is an
exact decision procedure for the minimality of a decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import automata as fa
from . import expressions as ex
from .automata import Language
from .errors import AlphabetError, CanonicityError
from .factorial import (
    FactorialLanguage,
    concat_factorial,
    delta_alphabet,
    epsilon_factorial,
    l_pi,
    pi_alphabet,
    r_delta,
)

SIGMA_STAR = "sigma-star"
ASSERTED = "asserted"
UNVERIFIED = "unverified"


@dataclass(frozen=True)
class Attestation:
    """Why a factor is believed indecomposable."""

    kind: str
    source: str | None = None

    @classmethod
    def verified_sigma_star(cls) -> "Attestation":
        return cls(SIGMA_STAR)

    @classmethod
    def asserted(cls, source: str) -> "Attestation":
        return cls(ASSERTED, source)

    @classmethod
    def unverified(cls) -> "Attestation":
        return cls(UNVERIFIED)


@dataclass(frozen=True)
class Factor:
    """One entry of a decomposition.

    ``expr`` optionally records the expression the factor came from, for
    display; it plays no role in equality or in the calculus.
    """

    lang: FactorialLanguage
    attestation: Attestation
    expr: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.attestation.kind == SIGMA_STAR:
            if fa.sigma_star_alphabet(self.lang.lang) is None:
                raise ValueError(
                    "sigma-star attestation on a factor that is not a subalphabet star")

    def render(self) -> str:
        """Parseable expression text for this factor."""
        if self.attestation.kind == SIGMA_STAR:
            gamma = fa.sigma_star_alphabet(self.lang.lang)
            node: ex.Node
            if not gamma:
                node = ex.Epsilon()
            elif len(gamma) == 1:
                node = ex.Star(ex.Letter(next(iter(gamma))))
            else:
                node = ex.Star(ex.WordSet(tuple(sorted(gamma))))
            return ex.format_expression(node)
        if self.expr is not None:
            return self.expr
        return fa.to_expression(self.lang.lang)


def make_factor(lang: FactorialLanguage, expr: str | None = None,
                asserted_source: str | None = None) -> Factor:
    """Wrap a factorial language as a factor, upgrading the attestation to
    the machine-verified subalphabet-star class when it applies."""
    if fa.sigma_star_alphabet(lang.lang) is not None:
        return Factor(lang, Attestation.verified_sigma_star(), expr)
    if asserted_source is not None:
        return Factor(lang, Attestation.asserted(asserted_source), expr)
    return Factor(lang, Attestation.unverified(), expr)


class Decomposition:
    """A word over the alphabet of (attested) indecomposable factorial
    languages.  The unit language may only appear as the sole factor."""

    __slots__ = ("factors",)

    def __init__(self, factors):
        factors = tuple(factors)
        if not factors:
            raise ValueError("a decomposition needs at least one factor")
        sigma = factors[0].lang.sigma
        for f in factors[1:]:
            if f.lang.sigma != sigma:
                raise AlphabetError("decomposition factors carry different session alphabets")
        if len(factors) > 1 and any(f.lang.is_epsilon_only() for f in factors):
            raise CanonicityError(
                "the unit language may only appear as the sole factor of a decomposition")
        self.factors = factors

    @property
    def sigma(self) -> tuple[str, ...]:
        return self.factors[0].lang.sigma

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __repr__(self) -> str:
        return f"<Decomposition of {len(self.factors)} factors>"

    def is_unit(self) -> bool:
        return len(self.factors) == 1 and self.factors[0].lang.is_epsilon_only()

    @property
    def conditional(self) -> bool:
        """True when canonicity rests on at least one unverified attestation."""
        return any(f.attestation.kind == UNVERIFIED for f in self.factors)

    def render(self) -> str:
        return " . ".join(f.render() for f in self.factors)


def unit_decomposition(sigma) -> Decomposition:
    lam = epsilon_factorial(sigma)
    return Decomposition([Factor(lam, Attestation.verified_sigma_star())])


def product(d: Decomposition) -> FactorialLanguage:
    """Left-to-right catenation of all factors."""
    acc = d.factors[0].lang
    for f in d.factors[1:]:
        acc = concat_factorial(acc, f.lang)
    return acc


def decomp_equal(d1: Decomposition, d2: Decomposition) -> bool:
    """Equality as words over the factor alphabet; attestations ignored."""
    if len(d1.factors) != len(d2.factors):
        return False
    return all(f1.lang == f2.lang for f1, f2 in zip(d1.factors, d2.factors))


def from_text(text: str, sigma) -> Decomposition:
    """Parse the textual decomposition form: factor expressions joined by
    ``" . "``.  Every factor is treated as asserted-indecomposable unless
    it is a machine-verifiable subalphabet star."""
    parts = [p.strip() for p in text.split(" . ")]
    factors = []
    for part in parts:
        ast = ex.parse_expression(part, sigma)
        lang = FactorialLanguage(fa.build(ast, sigma))
        factors.append(make_factor(lang, expr=part,
                                   asserted_source="declared indecomposable by input"))
    return Decomposition(factors)


# --------------------------------------------------------------------------
# Minimal boundary factors

def minimal_left_factor(a: FactorialLanguage, b: FactorialLanguage) -> FactorialLanguage:
    """The unique smallest factorial X with ``X . b`` equal to ``a . b``."""
    return r_delta(a, delta_alphabet(b))


def minimal_right_factor(a: FactorialLanguage, b: FactorialLanguage) -> FactorialLanguage:
    """The unique smallest factorial Y with ``a . Y`` equal to ``a . b``."""
    return l_pi(b, pi_alphabet(a))


# --------------------------------------------------------------------------
# Residual chains

@dataclass(frozen=True)
class ChainStep:
    index: int
    subalphabet: frozenset[str]
    factor: FactorialLanguage
    collapsed: bool


@dataclass(frozen=True)
class ChainTrace:
    direction: str  # "right_residual" | "left_residual"
    steps: tuple[ChainStep, ...]


def _reattest(original: Factor, shrunk: FactorialLanguage) -> Factor:
    if shrunk == original.lang:
        return original
    if fa.sigma_star_alphabet(shrunk.lang) is not None:
        return Factor(shrunk, Attestation.verified_sigma_star())
    return Factor(shrunk, Attestation.unverified())


def r_delta_chain(a_decomp: Decomposition, delta) -> tuple[Decomposition, ChainTrace]:
    """Decomposition of the right residual of the product of ``a_decomp``,
    obtained factor by factor from the last entry to the first.

    At each step the current factor either collapses to the unit language
    (when it sits inside the current subalphabet's star) or is replaced by
    its right residual, whose left-extension alphabet drives the next step.
    Unit entries are deleted from the result.
    """
    sub = frozenset(delta)
    steps: list[ChainStep] = []
    kept: list[Factor] = []
    for i in range(len(a_decomp.factors), 0, -1):
        factor = a_decomp.factors[i - 1]
        if fa.is_subset(factor.lang.lang, fa.subalphabet_star(a_decomp.sigma, sub)):
            steps.append(ChainStep(i, sub, epsilon_factorial(a_decomp.sigma), True))
        else:
            shrunk = r_delta(factor.lang, sub)
            steps.append(ChainStep(i, sub, shrunk, False))
            kept.append(_reattest(factor, shrunk))
            sub = delta_alphabet(shrunk)
    kept.reverse()
    result = Decomposition(kept) if kept else unit_decomposition(a_decomp.sigma)
    return result, ChainTrace("right_residual", tuple(steps))


def l_pi_chain(b_decomp: Decomposition, pi) -> tuple[Decomposition, ChainTrace]:
    """Mirror of :func:`r_delta_chain`, scanning from the first entry to the
    last with the right-extension alphabet driving each step."""
    sub = frozenset(pi)
    steps: list[ChainStep] = []
    kept: list[Factor] = []
    for j in range(1, len(b_decomp.factors) + 1):
        factor = b_decomp.factors[j - 1]
        if fa.is_subset(factor.lang.lang, fa.subalphabet_star(b_decomp.sigma, sub)):
            steps.append(ChainStep(j, sub, epsilon_factorial(b_decomp.sigma), True))
        else:
            shrunk = l_pi(factor.lang, sub)
            steps.append(ChainStep(j, sub, shrunk, False))
            kept.append(_reattest(factor, shrunk))
            sub = pi_alphabet(shrunk)
    result = Decomposition(kept) if kept else unit_decomposition(b_decomp.sigma)
    return result, ChainTrace("left_residual", tuple(steps))


# --------------------------------------------------------------------------
# Minimality audit

def audit_minimality(d: Decomposition):
    """Exact minimality decision.

    For each position, the smallest product-preserving replacement of the
    factor is the left residual (by the suffix's left-extension alphabet)
    followed by the right's mirror; the factor is replaceable iff that
    candidate is a proper subset.  Returns ``(True, None)`` or
    ``(False, (position, replacement))`` with 1-based position; positions
    are scanned from the last factor to the first.
    """
    factors = d.factors
    n = len(factors)
    if d.is_unit():
        return True, None
    sigma = d.sigma
    unit = epsilon_factorial(sigma)

    prefixes: list[FactorialLanguage] = [unit]
    for f in factors:
        prefixes.append(concat_factorial(prefixes[-1], f.lang))
    suffixes: list[FactorialLanguage] = [unit] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffixes[i] = concat_factorial(factors[i].lang, suffixes[i + 1])
    whole = prefixes[n].lang

    for i in range(n, 0, -1):
        before = prefixes[i - 1]
        after = suffixes[i]
        d_after = delta_alphabet(after)
        current = factors[i - 1].lang
        if fa.is_subset(current.lang, fa.subalphabet_star(sigma, d_after)):
            return False, (i, unit)
        candidate = l_pi(r_delta(current, d_after), pi_alphabet(before))
        if candidate.lang != current.lang and fa.is_subset(candidate.lang, current.lang):
            replaced = fa.concat(before.lang, fa.concat(candidate.lang, after.lang))
            if replaced == whole:
                return False, (i, candidate)
    return True, None


# --------------------------------------------------------------------------
# The four-case combiner

@dataclass(frozen=True)
class CombineResult:
    decomposition: Decomposition
    case_id: int  # 0 = unit shortcut, otherwise 1..4
    variant: str | None  # "left"/"right" for cases 3 and 4, unit side for 0
    pi: frozenset[str]
    delta: frozenset[str]
    trace: ChainTrace | None


def combine_details(a_decomp: Decomposition, b_decomp: Decomposition) -> CombineResult:
    """Canonical decomposition of the catenation of two canonically
    decomposed factorial languages, with full case/trace information.

    Dispatch compares the right-extension alphabet of the last factor of
    the left operand with the left-extension alphabet of the first factor
    of the right operand (these equal the products' own extension
    alphabets).  Incomparable or equal-with-plain-boundaries alphabets
    concatenate as-is; an equal boundary star factor is dropped (left side
    preferred); strict inclusion triggers the matching residual chain.
    """
    if a_decomp.sigma != b_decomp.sigma:
        raise AlphabetError("operands carry different session alphabets")
    for side, dec in (("left", a_decomp), ("right", b_decomp)):
        ok, witness = audit_minimality(dec)
        if not ok:
            pos = witness[0]
            raise CanonicityError(
                f"{side} operand is not canonical: factor {pos} is replaceable")

    pi = pi_alphabet(a_decomp.factors[-1].lang)
    delta = delta_alphabet(b_decomp.factors[0].lang)

    if a_decomp.is_unit():
        return CombineResult(b_decomp, 0, "left-unit", pi, delta, None)
    if b_decomp.is_unit():
        return CombineResult(a_decomp, 0, "right-unit", pi, delta, None)

    sigma = a_decomp.sigma
    if (delta - pi) and (pi - delta):
        result = Decomposition(a_decomp.factors + b_decomp.factors)
        return CombineResult(result, 1, None, pi, delta, None)

    if pi == delta:
        boundary_star = fa.subalphabet_star(sigma, delta)
        if a_decomp.factors[-1].lang.lang == boundary_star:
            rest = a_decomp.factors[:-1]
            result = Decomposition(rest + b_decomp.factors)
            return CombineResult(result, 3, "left", pi, delta, None)
        if b_decomp.factors[0].lang.lang == boundary_star:
            rest = b_decomp.factors[1:]
            result = Decomposition(a_decomp.factors + rest)
            return CombineResult(result, 3, "right", pi, delta, None)
        result = Decomposition(a_decomp.factors + b_decomp.factors)
        return CombineResult(result, 2, None, pi, delta, None)

    if pi < delta:
        chained, trace = r_delta_chain(a_decomp, delta)
        left = () if chained.is_unit() else chained.factors
        result = Decomposition(left + b_decomp.factors)
        return CombineResult(result, 4, "left", pi, delta, trace)

    # delta < pi
    chained, trace = l_pi_chain(b_decomp, pi)
    right = () if chained.is_unit() else chained.factors
    result = Decomposition(a_decomp.factors + right)
    return CombineResult(result, 4, "right", pi, delta, trace)


def catenate_canonical(a_decomp: Decomposition, b_decomp: Decomposition) -> Decomposition:
    """The canonical decomposition of the catenation; see
    :func:`combine_details` for the case analysis and traces."""
    return combine_details(a_decomp, b_decomp).decomposition
