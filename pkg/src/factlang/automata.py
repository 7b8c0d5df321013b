"""Exact engine for regular languages over a fixed session alphabet.

A :class:`Language` is the minimal complete deterministic acceptor of a
regular language, with states renumbered in breadth-first order from the
initial state following alphabet order.  That canonical form makes
language equality a plain structural comparison, and it is what every
operation here returns.

Construction goes through a small NFA layer (:class:`Nfa`) followed by
subset construction, Hopcroft minimization and the breadth-first
renumbering.  All values are immutable once built and safe to share.
"""

from __future__ import annotations

import json
from functools import lru_cache

from . import expressions as ex
from .errors import AlphabetError, StateLimitError

DEFAULT_STATE_LIMIT = 1_000_000


# --------------------------------------------------------------------------
# NFA builder

class Nfa:
    """Mutable nondeterministic acceptor used as a construction scratchpad
    and as the carrier of the JSON interchange format."""

    def __init__(self, sigma):
        self.sigma = tuple(sorted(set(sigma)))
        self.n = 0
        self.edges: dict[tuple[int, str], set[int]] = {}
        self.eps: dict[int, set[int]] = {}
        self.initials: set[int] = set()
        self.acceptings: set[int] = set()

    def add_state(self) -> int:
        self.n += 1
        return self.n - 1

    def add_edge(self, p: int, symbol: str, q: int) -> None:
        if symbol not in self.sigma:
            raise AlphabetError(f"symbol {symbol!r} is not in the session alphabet")
        self.edges.setdefault((p, symbol), set()).add(q)

    def add_eps(self, p: int, q: int) -> None:
        self.eps.setdefault(p, set()).add(q)

    def merge(self, other: "Nfa") -> int:
        """Copy ``other``'s states into self; returns the state offset."""
        off = self.n
        self.n += other.n
        for (p, c), qs in other.edges.items():
            self.edges.setdefault((p + off, c), set()).update(q + off for q in qs)
        for p, qs in other.eps.items():
            self.eps.setdefault(p + off, set()).update(q + off for q in qs)
        return off

    def _closure(self, states) -> frozenset[int]:
        seen = set(states)
        stack = list(states)
        while stack:
            q = stack.pop()
            for r in self.eps.get(q, ()):
                if r not in seen:
                    seen.add(r)
                    stack.append(r)
        return frozenset(seen)

    def useful_states(self) -> set[int]:
        """States lying on some accepting path (reachable and co-reachable)."""
        fwd: dict[int, set[int]] = {q: set() for q in range(self.n)}
        back: dict[int, set[int]] = {q: set() for q in range(self.n)}
        for (p, _c), qs in self.edges.items():
            fwd[p].update(qs)
            for q in qs:
                back[q].add(p)
        for p, qs in self.eps.items():
            fwd[p].update(qs)
            for q in qs:
                back[q].add(p)

        def explore(seeds, adj):
            seen = set(seeds)
            stack = list(seeds)
            while stack:
                q = stack.pop()
                for r in adj[q]:
                    if r not in seen:
                        seen.add(r)
                        stack.append(r)
            return seen

        reach = explore(self.initials, fwd)
        coreach = explore(self.acceptings, back)
        return reach & coreach

    def restrict(self, keep: set[int]) -> "Nfa":
        """The sub-automaton induced by ``keep``, states renumbered densely."""
        out = Nfa(self.sigma)
        order = sorted(keep)
        remap = {q: i for i, q in enumerate(order)}
        out.n = len(order)
        for (p, c), qs in self.edges.items():
            if p in keep:
                for q in qs:
                    if q in keep:
                        out.add_edge(remap[p], c, remap[q])
        for p, qs in self.eps.items():
            if p in keep:
                for q in qs:
                    if q in keep:
                        out.add_eps(remap[p], remap[q])
        out.initials = {remap[q] for q in self.initials if q in keep}
        out.acceptings = {remap[q] for q in self.acceptings if q in keep}
        return out


# --------------------------------------------------------------------------
# Canonical DFA

class Language:
    """A regular language in minimal complete deterministic canonical form.

    ``delta[q][i]`` is the successor of state ``q`` on ``sigma[i]``; the
    initial state is always 0.  Two Language values over the same alphabet
    are equal iff they denote the same set of words.
    """

    __slots__ = ("sigma", "n", "accepting", "delta", "_hash")

    def __init__(self, sigma: tuple[str, ...], n: int, accepting: frozenset[int],
                 delta: tuple[tuple[int, ...], ...]):
        self.sigma = sigma
        self.n = n
        self.accepting = accepting
        self.delta = delta
        self._hash = hash((sigma, n, accepting, delta))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Language):
            return NotImplemented
        return (self.sigma == other.sigma and self.n == other.n
                and self.accepting == other.accepting and self.delta == other.delta)

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"<Language over {''.join(self.sigma)}: {self.n} states>"

    # -- basic queries ------------------------------------------------------

    def is_empty(self) -> bool:
        return not self.accepting

    def accepts(self, word: str) -> bool:
        q = 0
        index = {c: i for i, c in enumerate(self.sigma)}
        for c in word:
            if c not in index:
                raise AlphabetError(f"symbol {c!r} is not in the session alphabet")
            q = self.delta[q][index[c]]
        return q in self.accepting

    def coreachable(self) -> frozenset[int]:
        """States from which some accepting state can be reached."""
        back: dict[int, set[int]] = {q: set() for q in range(self.n)}
        for p in range(self.n):
            for q in self.delta[p]:
                back[q].add(p)
        seen = set(self.accepting)
        stack = list(self.accepting)
        while stack:
            q = stack.pop()
            for r in back[q]:
                if r not in seen:
                    seen.add(r)
                    stack.append(r)
        return frozenset(seen)

    def to_nfa(self, trim: bool = True) -> Nfa:
        nfa = Nfa(self.sigma)
        nfa.n = self.n
        for p in range(self.n):
            for i, c in enumerate(self.sigma):
                nfa.add_edge(p, c, self.delta[p][i])
        nfa.initials = {0}
        nfa.acceptings = set(self.accepting)
        if trim:
            keep = nfa.useful_states()
            nfa = nfa.restrict(keep)
        return nfa


def _require_same_sigma(*langs: Language) -> tuple[str, ...]:
    sigma = langs[0].sigma
    for l in langs[1:]:
        if l.sigma != sigma:
            raise AlphabetError(
                f"operands carry different session alphabets: {sigma} vs {l.sigma}")
    return sigma


# --------------------------------------------------------------------------
# Determinization, minimization, canonical renumbering

def determinize(nfa: Nfa, state_limit: int = DEFAULT_STATE_LIMIT):
    """Subset construction; returns (n, accepting, delta) of a complete DFA
    whose states are all reachable, numbered in discovery order."""
    sigma = nfa.sigma
    move: dict[tuple[int, str], set[int]] = nfa.edges
    start = nfa._closure(nfa.initials)
    index: dict[frozenset[int], int] = {start: 0}
    queue = [start]
    delta_rows: list[list[int]] = []
    accepting: set[int] = set()
    head = 0
    while head < len(queue):
        subset = queue[head]
        head += 1
        if subset & nfa.acceptings:
            accepting.add(index[subset])
        row = []
        for c in sigma:
            nxt = set()
            for q in subset:
                nxt.update(move.get((q, c), ()))
            target = nfa._closure(nxt)
            if target not in index:
                if len(index) >= state_limit:
                    raise StateLimitError(
                        f"determinization exceeded {state_limit} states")
                index[target] = len(queue)
                queue.append(target)
            row.append(index[target])
        delta_rows.append(row)
    return len(queue), frozenset(accepting), tuple(tuple(r) for r in delta_rows)


def _minimize(n, nsym, delta, accepting):
    """Hopcroft partition refinement on a complete, reachable DFA."""
    inv: list[list[list[int]]] = [[[] for _ in range(nsym)] for _ in range(n)]
    for p in range(n):
        for c in range(nsym):
            inv[delta[p][c]][c].append(p)

    blocks: list[set[int]] = []
    block_of = [0] * n
    for group in (set(accepting), set(range(n)) - set(accepting)):
        if group:
            idx = len(blocks)
            blocks.append(group)
            for q in group:
                block_of[q] = idx
    work: set[int] = set(range(len(blocks)))
    snapshots: dict[int, frozenset[int]] = {i: frozenset(blocks[i]) for i in work}

    while work:
        a_idx = work.pop()
        splitter = snapshots.pop(a_idx)
        for c in range(nsym):
            preimage: set[int] = set()
            for q in splitter:
                preimage.update(inv[q][c])
            touched: dict[int, set[int]] = {}
            for p in preimage:
                touched.setdefault(block_of[p], set()).add(p)
            for b_idx, inter in touched.items():
                block = blocks[b_idx]
                if len(inter) == len(block):
                    continue
                rest = block - inter
                blocks[b_idx] = rest
                new_idx = len(blocks)
                blocks.append(inter)
                for q in inter:
                    block_of[q] = new_idx
                if b_idx in work:
                    work.add(new_idx)
                    snapshots[new_idx] = frozenset(inter)
                else:
                    smaller = new_idx if len(inter) <= len(rest) else b_idx
                    work.add(smaller)
                    snapshots[smaller] = frozenset(blocks[smaller])

    n2 = len(blocks)
    reps = [min(b) for b in blocks]
    delta2 = tuple(tuple(block_of[delta[reps[b]][c]] for c in range(nsym))
                   for b in range(n2))
    accepting2 = frozenset(b for b in range(n2) if reps[b] in accepting)
    return n2, block_of[0], accepting2, delta2


def _bfs_renumber(n, initial, accepting, delta, nsym):
    order = [initial]
    seen = {initial}
    head = 0
    while head < len(order):
        q = order[head]
        head += 1
        for c in range(nsym):
            r = delta[q][c]
            if r not in seen:
                seen.add(r)
                order.append(r)
    remap = {q: i for i, q in enumerate(order)}
    delta2 = tuple(tuple(remap[delta[q][c]] for c in range(nsym)) for q in order)
    accepting2 = frozenset(remap[q] for q in accepting if q in remap)
    return len(order), accepting2, delta2


def canonicalize(nfa: Nfa, state_limit: int = DEFAULT_STATE_LIMIT) -> Language:
    """Determinize, minimize and renumber, yielding the canonical form."""
    n, accepting, delta = determinize(nfa, state_limit)
    nsym = len(nfa.sigma)
    n, initial, accepting, delta = _minimize(n, nsym, delta, accepting)
    n, accepting, delta = _bfs_renumber(n, initial, accepting, delta, nsym)
    return Language(nfa.sigma, n, accepting, delta)


# --------------------------------------------------------------------------
# Elementary languages

def _as_sigma(sigma) -> tuple[str, ...]:
    out = tuple(sorted(set(sigma)))
    for c in out:
        if len(c) != 1 or not c.isprintable():
            raise AlphabetError(f"alphabet symbols must be single printable characters, got {c!r}")
    return out


@lru_cache(maxsize=None)
def empty_language(sigma: tuple[str, ...]) -> Language:
    nfa = Nfa(sigma)
    nfa.add_state()
    nfa.initials = {0}
    return canonicalize(nfa)


@lru_cache(maxsize=None)
def epsilon_language(sigma: tuple[str, ...]) -> Language:
    nfa = Nfa(sigma)
    nfa.add_state()
    nfa.initials = {0}
    nfa.acceptings = {0}
    return canonicalize(nfa)


@lru_cache(maxsize=None)
def subalphabet_star(sigma: tuple[str, ...], gamma: frozenset[str]) -> Language:
    """The language gamma* inside the session alphabet sigma."""
    unknown = gamma - set(sigma)
    if unknown:
        raise AlphabetError(f"symbols {sorted(unknown)} are not in the session alphabet")
    nfa = Nfa(sigma)
    s = nfa.add_state()
    for c in gamma:
        nfa.add_edge(s, c, s)
    nfa.initials = {s}
    nfa.acceptings = {s}
    return canonicalize(nfa)


def word_language(sigma, word: str) -> Language:
    return from_words(sigma, [word])


def from_words(sigma, words) -> Language:
    """The finite language consisting exactly of ``words``."""
    sig = _as_sigma(sigma)
    nfa = Nfa(sig)
    start = nfa.add_state()
    nfa.initials = {start}
    for w in words:
        q = start
        for c in w:
            r = nfa.add_state()
            nfa.add_edge(q, c, r)
            q = r
        nfa.acceptings.add(q)
    return canonicalize(nfa)


# --------------------------------------------------------------------------
# Regular operations

@lru_cache(maxsize=65536)
def _product(x: Language, y: Language, mode: str) -> Language:
    sigma = _require_same_sigma(x, y)
    nsym = len(sigma)
    if mode == "union":
        keep = lambda a, b: a or b
    elif mode == "intersection":
        keep = lambda a, b: a and b
    else:  # difference
        keep = lambda a, b: a and not b
    index = {(0, 0): 0}
    queue = [(0, 0)]
    rows = []
    accepting = set()
    head = 0
    while head < len(queue):
        p, q = queue[head]
        head += 1
        if keep(p in x.accepting, q in y.accepting):
            accepting.add(index[(p, q)])
        row = []
        for c in range(nsym):
            tgt = (x.delta[p][c], y.delta[q][c])
            if tgt not in index:
                index[tgt] = len(queue)
                queue.append(tgt)
            row.append(index[tgt])
        rows.append(tuple(row))
    n, initial, acc, delta = _minimize(len(queue), nsym, tuple(rows), frozenset(accepting))
    n, acc, delta = _bfs_renumber(n, initial, acc, delta, nsym)
    return Language(sigma, n, acc, delta)


def union(x: Language, y: Language) -> Language:
    return _product(x, y, "union")


def intersection(x: Language, y: Language) -> Language:
    return _product(x, y, "intersection")


def difference(x: Language, y: Language) -> Language:
    return _product(x, y, "difference")


def complement(x: Language) -> Language:
    # Complement of a minimal complete DFA is minimal with the same
    # reachability structure, so the canonical numbering carries over.
    return Language(x.sigma, x.n, frozenset(range(x.n)) - x.accepting, x.delta)


@lru_cache(maxsize=65536)
def concat(x: Language, y: Language) -> Language:
    sigma = _require_same_sigma(x, y)
    xn = x.to_nfa()
    yn = y.to_nfa()
    nfa = Nfa(sigma)
    xoff = nfa.merge(xn)
    yoff = nfa.merge(yn)
    nfa.initials = {q + xoff for q in xn.initials}
    nfa.acceptings = {q + yoff for q in yn.acceptings}
    for f in xn.acceptings:
        for i in yn.initials:
            nfa.add_eps(f + xoff, i + yoff)
    return canonicalize(nfa)


@lru_cache(maxsize=65536)
def star(x: Language) -> Language:
    xn = x.to_nfa()
    nfa = Nfa(x.sigma)
    off = nfa.merge(xn)
    s = nfa.add_state()
    nfa.initials = {s}
    nfa.acceptings = {q + off for q in xn.acceptings} | {s}
    for i in xn.initials:
        nfa.add_eps(s, i + off)
        for f in xn.acceptings:
            nfa.add_eps(f + off, i + off)
    return canonicalize(nfa)


def boolean(op: str, x: Language, y: Language | None = None) -> Language:
    """Dispatcher over the set-theoretic operations."""
    if op == "complement":
        if y is not None:
            raise ValueError("complement takes a single operand")
        return complement(x)
    if y is None:
        raise ValueError(f"{op} takes two operands")
    if op == "union":
        return union(x, y)
    if op == "intersection":
        return intersection(x, y)
    if op == "difference":
        return difference(x, y)
    raise ValueError(f"unknown boolean operation {op!r}")


def is_subset(x: Language, y: Language) -> bool:
    """Exact inclusion test by product reachability (no construction)."""
    _require_same_sigma(x, y)
    nsym = len(x.sigma)
    seen = {(0, 0)}
    stack = [(0, 0)]
    while stack:
        p, q = stack.pop()
        if p in x.accepting and q not in y.accepting:
            return False
        for c in range(nsym):
            tgt = (x.delta[p][c], y.delta[q][c])
            if tgt not in seen:
                seen.add(tgt)
                stack.append(tgt)
    return True


def compare(rel: str, x: Language, y: Language) -> bool:
    if rel == "equal":
        _require_same_sigma(x, y)
        return x == y
    if rel == "subset":
        return is_subset(x, y)
    if rel == "proper_subset":
        return is_subset(x, y) and x != y
    raise ValueError(f"unknown relation {rel!r}")


def enumerate_up_to(x: Language, n: int) -> list[str]:
    """All members of ``x`` of length <= n, in length-then-lex order."""
    if n < 0:
        raise ValueError("length bound must be nonnegative")
    live = x.coreachable()
    if 0 not in live:
        return []
    out = []
    frontier: list[tuple[str, int]] = [("", 0)]
    for length in range(n + 1):
        out.extend(w for w, q in frontier if q in x.accepting)
        if length == n:
            break
        nxt = []
        for w, q in frontier:
            for i, c in enumerate(x.sigma):
                r = x.delta[q][i]
                if r in live:
                    nxt.append((w + c, r))
        frontier = nxt
    return out


def subword_closure(x: Language) -> Language:
    """All factors of all words of ``x``.

    Trims the acceptor to states on some accepting path, then admits every
    surviving state as both initial and accepting.  Yields the empty
    language only for empty input.
    """
    nfa = x.to_nfa(trim=True)
    nfa.initials = set(range(nfa.n))
    nfa.acceptings = set(range(nfa.n))
    return canonicalize(nfa)


def used_symbols(x: Language) -> frozenset[str]:
    """Symbols occurring in at least one word of ``x``."""
    live = x.coreachable()
    return frozenset(c for i, c in enumerate(x.sigma)
                     for p in range(x.n) if x.delta[p][i] in live and p in live)


def sigma_star_alphabet(x: Language) -> frozenset[str] | None:
    """If ``x`` equals gamma* for some subalphabet gamma, return gamma."""
    gamma = used_symbols(x)
    if x == subalphabet_star(x.sigma, gamma):
        return gamma
    return None


# --------------------------------------------------------------------------
# Expression compilation

def _compile(node: ex.Node, sigma: tuple[str, ...]) -> Nfa:
    if isinstance(node, ex.Letter):
        nfa = Nfa(sigma)
        a = nfa.add_state()
        b = nfa.add_state()
        nfa.add_edge(a, node.symbol, b)
        nfa.initials = {a}
        nfa.acceptings = {b}
        return nfa
    if isinstance(node, ex.Epsilon):
        nfa = Nfa(sigma)
        a = nfa.add_state()
        nfa.initials = {a}
        nfa.acceptings = {a}
        return nfa
    if isinstance(node, ex.Empty):
        nfa = Nfa(sigma)
        nfa.add_state()
        nfa.initials = {0}
        return nfa
    if isinstance(node, ex.Union):
        nfa = Nfa(sigma)
        for part in node.parts:
            sub = _compile(part, sigma)
            off = nfa.merge(sub)
            nfa.initials.update(q + off for q in sub.initials)
            nfa.acceptings.update(q + off for q in sub.acceptings)
        return nfa
    if isinstance(node, ex.Concat):
        parts = [_compile(p, sigma) for p in node.parts]
        nfa = Nfa(sigma)
        offs = [nfa.merge(p) for p in parts]
        nfa.initials = {q + offs[0] for q in parts[0].initials}
        nfa.acceptings = {q + offs[-1] for q in parts[-1].acceptings}
        for k in range(len(parts) - 1):
            for f in parts[k].acceptings:
                for i in parts[k + 1].initials:
                    nfa.add_eps(f + offs[k], i + offs[k + 1])
        return nfa
    if isinstance(node, ex.Star):
        sub = _compile(node.child, sigma)
        nfa = Nfa(sigma)
        off = nfa.merge(sub)
        s = nfa.add_state()
        nfa.initials = {s}
        nfa.acceptings = {q + off for q in sub.acceptings} | {s}
        for i in sub.initials:
            nfa.add_eps(s, i + off)
            for f in sub.acceptings:
                nfa.add_eps(f + off, i + off)
        return nfa
    if isinstance(node, ex.Power):
        if node.exponent == 0:
            return _compile(ex.Epsilon(), sigma)
        return _compile(ex.Concat(tuple([node.child] * node.exponent)), sigma)
    if isinstance(node, ex.Fac):
        sub = _compile(node.child, sigma)
        sub = sub.restrict(sub.useful_states())
        sub.initials = set(range(sub.n))
        sub.acceptings = set(range(sub.n))
        return sub
    if isinstance(node, ex.WordSet):
        nfa = Nfa(sigma)
        start = nfa.add_state()
        nfa.initials = {start}
        for w in node.words:
            q = start
            for c in w:
                r = nfa.add_state()
                nfa.add_edge(q, c, r)
                q = r
            nfa.acceptings.add(q)
        return nfa
    raise TypeError(f"not an expression node: {node!r}")


def _check_symbols(node: ex.Node, sigma: frozenset[str]) -> None:
    if isinstance(node, ex.Letter):
        if node.symbol not in sigma:
            raise AlphabetError(f"symbol {node.symbol!r} is not in the session alphabet")
    elif isinstance(node, (ex.Union, ex.Concat)):
        for p in node.parts:
            _check_symbols(p, sigma)
    elif isinstance(node, (ex.Star, ex.Fac)):
        _check_symbols(node.child, sigma)
    elif isinstance(node, ex.Power):
        _check_symbols(node.child, sigma)
    elif isinstance(node, ex.WordSet):
        for w in node.words:
            for c in w:
                if c not in sigma:
                    raise AlphabetError(f"symbol {c!r} is not in the session alphabet")


def build(ast: ex.Node, sigma, state_limit: int = DEFAULT_STATE_LIMIT) -> Language:
    """Compile an expression AST to its canonical Language over ``sigma``."""
    sig = _as_sigma(sigma)
    _check_symbols(ast, frozenset(sig))
    return canonicalize(_compile(ast, sig), state_limit)


# --------------------------------------------------------------------------
# Expression synthesis (canonical DFA -> parseable expression text)

def _acyclic(x: Language, live: frozenset[int]) -> bool:
    color = {}  # 0 in progress, 1 done

    def visit(q: int) -> bool:
        color[q] = 0
        for i in range(len(x.sigma)):
            r = x.delta[q][i]
            if r not in live:
                continue
            if color.get(r) == 0:
                return False
            if r not in color and not visit(r):
                return False
        color[q] = 1
        return True

    return all(visit(q) for q in live if q not in color)


def to_expression_ast(x: Language) -> ex.Node:
    """An expression AST denoting exactly ``x``; deterministic output."""
    if x.is_empty():
        return ex.Empty()
    gamma = sigma_star_alphabet(x)
    if gamma is not None:
        if not gamma:
            return ex.Epsilon()
        if len(gamma) == 1:
            return ex.Star(ex.Letter(next(iter(gamma))))
        return ex.Star(ex.WordSet(tuple(sorted(gamma))))
    live = x.coreachable()
    if _acyclic(x, live):
        words = enumerate_up_to(x, x.n)
        parts: list[ex.Node] = []
        for w in words:
            if w == "":
                parts.append(ex.Epsilon())
            else:
                parts.append(ex.concat_node([ex.Letter(c) for c in w]))
        return ex.union_node(parts)

    # state elimination over the live subgraph
    edges: dict[tuple[int, int], ex.Node] = {}
    START, END = -1, -2
    for p in live:
        for i, c in enumerate(x.sigma):
            q = x.delta[p][i]
            if q in live:
                key = (p, q)
                edges[key] = ex.union_node([edges.get(key, ex.Empty()), ex.Letter(c)])
    edges[(START, 0)] = ex.Epsilon()
    for f in x.accepting:
        edges[(f, END)] = ex.Epsilon()
    for s in sorted(live):
        loop = edges.pop((s, s), None)
        loop_star = ex.star_node(loop) if loop is not None else ex.Epsilon()
        ins = sorted(((p, r) for (p, q), r in edges.items() if q == s),
                     key=lambda t: t[0])
        outs = sorted(((q, r) for (p, q), r in edges.items() if p == s),
                      key=lambda t: t[0])
        for p, rin in ins:
            for q, rout in outs:
                path = ex.concat_node([rin, loop_star, rout])
                edges[(p, q)] = ex.union_node([edges.get((p, q), ex.Empty()), path])
        edges = {k: v for k, v in edges.items() if s not in k}
    return edges.get((START, END), ex.Empty())


def to_expression(x: Language) -> str:
    node = to_expression_ast(x)
    if isinstance(node, ex.Empty):
        raise ValueError("the empty language has no expression form")
    return ex.format_expression(node)


# --------------------------------------------------------------------------
# JSON interchange

def to_json(x: Language) -> str:
    """Serialize the canonical acceptor; stable bytes for equal languages."""
    transitions = sorted(
        [p, c, x.delta[p][i]]
        for p in range(x.n) for i, c in enumerate(x.sigma)
    )
    doc = {
        "alphabet": list(x.sigma),
        "states": x.n,
        "initial": [0],
        "accepting": sorted(x.accepting),
        "transitions": transitions,
    }
    return json.dumps(doc, separators=(",", ":"))


def from_json(text: str) -> Language:
    """Read any automaton instance (possibly nondeterministic or unnormalized)
    and canonicalize it."""
    doc = json.loads(text)
    for key in ("alphabet", "states", "initial", "accepting", "transitions"):
        if key not in doc:
            raise ValueError(f"automaton document is missing {key!r}")
    sigma = _as_sigma(doc["alphabet"])
    n = doc["states"]
    if not isinstance(n, int) or n < 0:
        raise ValueError("state count must be a nonnegative integer")
    nfa = Nfa(sigma)
    nfa.n = n
    for group in ("initial", "accepting"):
        for q in doc[group]:
            if not isinstance(q, int) or not 0 <= q < n:
                raise ValueError(f"{group} state {q!r} out of range")
    nfa.initials = set(doc["initial"])
    nfa.acceptings = set(doc["accepting"])
    for item in doc["transitions"]:
        if len(item) != 3:
            raise ValueError(f"malformed transition {item!r}")
        p, c, q = item
        if not (isinstance(p, int) and 0 <= p < n and isinstance(q, int) and 0 <= q < n):
            raise ValueError(f"transition endpoint out of range in {item!r}")
        nfa.add_edge(p, c, q)
    return canonicalize(nfa)
