"""Forbidden-factor patterns, the automaton of normal words, word counts and growth classification."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterator
from dataclasses import dataclass

from ._graphs import condensation, max_weight_path
from .digraph import Digraph
from .words import GenOrder, Word

DEFAULT_ENUMERATION_CAP = 100_000


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Pattern:
    """The language ``first <inner>* last``: first, any word over ``inner``, then last."""

    family: str
    first: int
    inner: frozenset[int]
    last: int

    def matches(self, w: Word) -> bool:
        return (
            len(w) >= 2
            and w[0] == self.first
            and w[-1] == self.last
            and all(x in self.inner for x in w[1:-1])
        )


@dataclass(frozen=True)
class ForbiddenPatternSet:
    n: int
    patterns: tuple[Pattern, ...]

    def family(self, name: str) -> list[Pattern]:
        return [p for p in self.patterns if p.family == name]

    def contains(self, w: Word) -> bool:
        """Whether ``w`` itself (not merely a factor) is a leading term."""
        return any(p.matches(w) for p in self.patterns)


def leading_term_language(g: Digraph, order: GenOrder | None = None) -> ForbiddenPatternSet:
    order = order or GenOrder.identity(g.n)
    V = list(g.vertices)
    pats: list[Pattern] = []
    for t in V:
        ys = frozenset(z for z in V if z != t and not g.has_arrow(z, t))
        pats.append(Pattern("i", t, ys, t))
    for t in V:
        zs = frozenset(z for z in V if z != t and not g.has_arrow(t, z))
        pats.append(Pattern("ii", t, zs, t))
    for x in V:
        xs = frozenset(y for y in V if y != x and not g.connected(x, y))
        for z in V:
            if order.rank(x) < order.rank(z) and not g.connected(x, z):
                pats.append(Pattern("iii", z, xs, x))
    return ForbiddenPatternSet(g.n, tuple(pats))


@dataclass(frozen=True)
class NormalWordDfa:
    """Complete DFA over letters 1..n. State ``dead`` is the only rejecting state.

    ``delta[q][x - 1]`` is the successor of state ``q`` on letter ``x``.
    """

    n: int
    delta: tuple[tuple[int, ...], ...]
    start: int
    dead: int

    @property
    def num_states(self) -> int:
        return len(self.delta)

    def step(self, q: int, x: int) -> int:
        return self.delta[q][x - 1]

    def run(self, w: Word) -> int:
        q = self.start
        for x in w:
            q = self.delta[q][x - 1]
        return q

    def accepts(self, w: Word) -> bool:
        return self.run(w) != self.dead

    def live_states(self) -> list[int]:
        return [q for q in range(self.num_states) if q != self.dead]

    def to_dot(self) -> str:
        out = ["digraph dfa {", "  rankdir=LR;", '  init [shape=point];', f"  init -> {self.start};"]
        for q in range(self.num_states):
            shape = "box" if q == self.dead else "doublecircle"
            out.append(f"  {q} [shape={shape}];")
        for q in range(self.num_states):
            by_target: dict[int, list[int]] = {}
            for x, r in enumerate(self.delta[q], start=1):
                by_target.setdefault(r, []).append(x)
            for r, xs in sorted(by_target.items()):
                label = ",".join(str(x) for x in xs)
                out.append(f'  {q} -> {r} [label="{label}"];')
        out.append("}")
        return "\n".join(out) + "\n"


def build_normal_dfa(p: ForbiddenPatternSet, minimize: bool = True) -> NormalWordDfa:
    """Subset construction over pattern progress.

    A state is the set of patterns whose first letter has been seen with only
    inner letters since. Reading a pattern's last letter while it is active
    means the word contains a forbidden factor.
    """
    n = p.n
    pats = p.patterns
    DEAD = None
    start: frozenset[int] = frozenset()
    ids: dict[frozenset[int] | None, int] = {start: 0}
    order: list[frozenset[int] | None] = [start]
    rows: list[list[int]] = []
    queue = deque([start])
    while queue:
        active = queue.popleft()
        row = []
        for x in range(1, n + 1):
            nxt: frozenset[int] | None
            if any(pats[k].last == x for k in active):
                nxt = DEAD
            else:
                nxt = frozenset(
                    k for k, pat in enumerate(pats) if (k in active and x in pat.inner) or pat.first == x
                )
            if nxt not in ids:
                ids[nxt] = len(order)
                order.append(nxt)
                if nxt is not DEAD:
                    queue.append(nxt)
            row.append(ids[nxt])
        rows.append(row)
    if DEAD not in ids:
        ids[DEAD] = len(order)
        order.append(DEAD)
    dead = ids[DEAD]
    # rows are appended in dequeue order, which equals id order for live states.
    delta = [None] * len(order)
    live = [k for k in order if k is not DEAD]
    for k, row in zip(live, rows):
        delta[ids[k]] = tuple(row)
    delta[dead] = tuple([dead] * n)
    dfa = NormalWordDfa(n, tuple(delta), 0, dead)
    return minimize_dfa(dfa) if minimize else dfa


def minimize_dfa(dfa: NormalWordDfa) -> NormalWordDfa:
    """Moore partition refinement, then renumber states in BFS order from the start."""
    m, n = dfa.num_states, dfa.n
    block = [0 if q == dfa.dead else 1 for q in range(m)]
    while True:
        sig = {}
        new = []
        for q in range(m):
            key = (block[q],) + tuple(block[r] for r in dfa.delta[q])
            new.append(sig.setdefault(key, len(sig)))
        if len(sig) == len(set(block)):
            break
        block = new
    # canonical numbering
    rep = {}
    for q in range(m):
        rep.setdefault(block[q], q)
    ids = {block[dfa.start]: 0}
    queue = deque([block[dfa.start]])
    while queue:
        b = queue.popleft()
        for r in dfa.delta[rep[b]]:
            if block[r] not in ids:
                ids[block[r]] = len(ids)
                queue.append(block[r])
    dead_b = block[dfa.dead]
    if dead_b not in ids:
        ids[dead_b] = len(ids)
    delta = [None] * len(ids)
    for b, i in ids.items():
        delta[i] = tuple(ids[block[r]] for r in dfa.delta[rep[b]])
    return NormalWordDfa(n, tuple(delta), 0, ids[dead_b])


def normal_dfa(g: Digraph, order: GenOrder | None = None) -> NormalWordDfa:
    return build_normal_dfa(leading_term_language(g, order))


def count_normal_words(dfa: NormalWordDfa, L: int) -> list[int]:
    """Accepted words of each length 0..L, by pushing a state-occupancy vector."""
    if L < 0:
        raise ValueError("L must be non-negative")
    vec = [0] * dfa.num_states
    vec[dfa.start] = 1
    counts = []
    for _ in range(L + 1):
        counts.append(sum(c for q, c in enumerate(vec) if q != dfa.dead))
        nxt = [0] * dfa.num_states
        for q, c in enumerate(vec):
            if c and q != dfa.dead:
                for r in dfa.delta[q]:
                    nxt[r] += c
        vec = nxt
    return counts


FINITE = "finite"
POLYNOMIAL = "polynomial"
EXPONENTIAL = "exponential"


@dataclass(frozen=True)
class GrowthReport:
    counts: tuple[int, ...]
    classification: str
    gk: int | None = None

    @property
    def label(self) -> str:
        if self.classification == POLYNOMIAL:
            return f"gk={self.gk}"
        return self.classification

    @property
    def cumulative(self) -> list[int]:
        out, total = [], 0
        for c in self.counts:
            total += c
            out.append(total)
        return out


def classify_growth(dfa: NormalWordDfa) -> tuple[str, int | None]:
    """Finite, exponential, or polynomial with its integer degree, read off the live part's SCCs.

    Every live state is reachable (construction trims) and accepting, so the
    live subgraph is already trim. Parallel transitions count as separate
    edges: two letters between the same states are two distinct cycles.
    """
    live = dfa.live_states()
    edges = [(q, r) for q in live for r in dfa.delta[q] if r != dfa.dead]
    comps, _, internal, dag = condensation(live, edges)
    cyclic = [internal[c] > 0 for c in range(len(comps))]
    if not any(cyclic):
        return FINITE, None
    if any(internal[c] > len(comps[c]) for c in range(len(comps))):
        return EXPONENTIAL, None
    return POLYNOMIAL, max_weight_path([int(c) for c in cyclic], dag)


def growth_report(dfa: NormalWordDfa, L: int) -> GrowthReport:
    kind, gk = classify_growth(dfa)
    return GrowthReport(tuple(count_normal_words(dfa, L)), kind, gk)


def enumerate_normal_words(dfa: NormalWordDfa, L: int, cap: int = DEFAULT_ENUMERATION_CAP) -> list[Word]:
    """Accepted words of length <= L, shorter first, each length in lexicographic order."""
    total = sum(count_normal_words(dfa, L))
    if total > cap:
        raise BudgetExceeded(f"{total} normal words up to length {L} exceeds cap {cap}")
    return list(iter_normal_words(dfa, L))


def iter_normal_words(dfa: NormalWordDfa, L: int) -> Iterator[Word]:
    """Length-by-length generator of accepted words, each length in lexicographic order."""
    layer: list[tuple[Word, int]] = [((), dfa.start)]
    for length in range(L + 1):
        for w, _q in layer:
            yield w
        if length == L:
            return
        layer = [
            (w + (x,), r)
            for w, q in layer
            for x in range(1, dfa.n + 1)
            if (r := dfa.delta[q][x - 1]) != dfa.dead
        ]


def minimal_forbidden_words(g: Digraph, order: GenOrder | None, L: int) -> list[Word]:
    """Leading terms of length <= L with no proper factor that is itself a leading term.

    Sorted deg-lex under the generator order.
    """
    order = order or GenOrder.identity(g.n)
    pset = leading_term_language(g, order)
    dfa = build_normal_dfa(pset)
    found: set[Word] = set()
    for pat in pset.patterns:
        # grow first + v while it stays normal; close with last when the suffix is normal too
        stack: list[Word] = [(pat.first,)]
        while stack:
            prefix = stack.pop()
            if len(prefix) + 1 <= L:
                cand = prefix + (pat.last,)
                if dfa.accepts(cand[1:]):
                    found.add(cand)
            if len(prefix) + 2 <= L:
                for y in sorted(pat.inner):
                    nxt = prefix + (y,)
                    if dfa.accepts(nxt):
                        stack.append(nxt)
    return sorted(found, key=order.key)
