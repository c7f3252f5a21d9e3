"""Reduction systems as executable matchers, normal forms and the empirical diamond-lemma check.

A :class:`RuleSystem` is a list of rule families. Each family's matcher,
given a word and a start position, yields every match whose leading term
begins there, shortest first. The deterministic strategy always rewrites the
leftmost, then shortest, then highest-precedence match.
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from .digraph import Digraph
from .words import GenOrder, Word

Matcher = Callable[["RuleSystem", Word, int], Iterator["Match"]]


@dataclass(frozen=True)
class Match:
    kind: str
    start: int
    end: int  # exclusive
    replacement: Word
    anchors: tuple[int, ...] = ()

    @property
    def length(self) -> int:
        return self.end - self.start


@dataclass(frozen=True)
class RuleFamily:
    kind: str
    matcher: Matcher = field(compare=False, repr=False)


@dataclass(frozen=True, eq=False)
class RuleSystem:
    name: str
    graph: Digraph
    order: GenOrder
    families: tuple[RuleFamily, ...]

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def kinds(self) -> tuple[str, ...]:
        return tuple(f.kind for f in self.families)

    def without(self, *kinds: str) -> RuleSystem:
        """Copy with some families dropped (used to build deliberately broken systems)."""
        fams = tuple(f for f in self.families if f.kind not in kinds)
        return RuleSystem(f"{self.name}-minus-{'-'.join(kinds)}", self.graph, self.order, fams)

    # Bit masks over generators: bit x set means generator x is in the set.
    @cached_property
    def into_mask(self) -> tuple[int, ...]:
        masks = [0] * (self.n + 1)
        for i, j in self.graph.arrows:
            masks[j] |= 1 << i
        return tuple(masks)

    @cached_property
    def from_mask(self) -> tuple[int, ...]:
        masks = [0] * (self.n + 1)
        for i, j in self.graph.arrows:
            masks[i] |= 1 << j
        return tuple(masks)

    @cached_property
    def full_mask(self) -> int:
        return sum(1 << x for x in range(1, self.n + 1))

    @cached_property
    def disconnected_mask(self) -> tuple[int, ...]:
        """Letters y != x with no arrow either way between x and y."""
        return (0,) + tuple(
            self.full_mask & ~(1 << x) & ~self.into_mask[x] & ~self.from_mask[x]
            for x in range(1, self.n + 1)
        )

    @cached_property
    def _nf_cache(self) -> dict[Word, Word]:
        return {}


def _mask(letters: Sequence[int]) -> int:
    m = 0
    for x in letters:
        m |= 1 << x
    return m


def _next_occurrence(w: Word, s: int) -> int:
    t = w[s]
    for e in range(s + 1, len(w)):
        if w[e] == t:
            return e
    return -1


# -- the general system T -------------------------------------------------------


def _match_t_i(sys: RuleSystem, w: Word, s: int) -> Iterator[Match]:
    # (t w t, t w) with w -/-> t. The inner word avoids t, so only the next
    # occurrence of t can close the factor.
    e = _next_occurrence(w, s)
    if e < 0:
        return
    t = w[s]
    allowed = sys.full_mask & ~(1 << t) & ~sys.into_mask[t]
    inner = w[s + 1 : e]
    if _mask(inner) & ~allowed == 0:
        yield Match("T-i", s, e + 1, w[s:e], (t,))


def _match_t_ii(sys: RuleSystem, w: Word, s: int) -> Iterator[Match]:
    # (t w t, w t) with t -/-> w.
    e = _next_occurrence(w, s)
    if e < 0:
        return
    t = w[s]
    allowed = sys.full_mask & ~(1 << t) & ~sys.from_mask[t]
    inner = w[s + 1 : e]
    if _mask(inner) & ~allowed == 0:
        yield Match("T-ii", s, e + 1, w[s + 1 : e + 1], (t,))


def _match_t_iii(sys: RuleSystem, w: Word, s: int) -> Iterator[Match]:
    # (t1 w t2, t2 t1 w) with t1 > t2 and t2 disconnected from t1 w.
    t1 = w[s]
    rank = sys.order.rank
    r1 = rank(t1)
    disc = sys.disconnected_mask
    allowed = disc[t1]
    for e in range(s + 1, len(w)):
        if not allowed:
            return
        t2 = w[e]
        if allowed >> t2 & 1 and rank(t2) < r1:
            yield Match("T-iii", s, e + 1, (t2, t1) + w[s + 1 : e], (t1, t2))
        allowed &= disc[t2]


T_FAMILIES = (
    RuleFamily("T-i", _match_t_i),
    RuleFamily("T-ii", _match_t_ii),
    RuleFamily("T-iii", _match_t_iii),
)


def t_system(g: Digraph, order: GenOrder | None = None) -> RuleSystem:
    """The general reduction system for the Hecke-Kiselman monoid of ``g``."""
    return RuleSystem("T", g, order or GenOrder.identity(g.n), T_FAMILIES)


# -- matching and rewriting ----------------------------------------------------------


def find_matches(sys: RuleSystem, w: Word) -> list[Match]:
    """All matches, sorted by (start, length, family precedence)."""
    out = []
    for s in range(len(w)):
        here = []
        for prec, fam in enumerate(sys.families):
            here.extend((m.end, prec, m) for m in fam.matcher(sys, w, s))
        here.sort(key=lambda item: item[:2])
        out.extend(m for _, _, m in here)
    return out


def first_match(sys: RuleSystem, w: Word) -> Match | None:
    for s in range(len(w)):
        best = None
        for prec, fam in enumerate(sys.families):
            m = next(fam.matcher(sys, w, s), None)
            if m is not None and (best is None or m.end < best[0]):
                best = (m.end, prec, m)
        if best is not None:
            return best[2]
    return None


def apply_match(w: Word, m: Match) -> Word:
    if not 0 <= m.start < m.end <= len(w):
        raise IndexError(f"match span {m.start}..{m.end} outside word of length {len(w)}")
    return w[: m.start] + m.replacement + w[m.end :]


def normal_form(sys: RuleSystem, w: Sequence[int]) -> Word:
    """Reduced form under the deterministic leftmost-shortest strategy."""
    w = tuple(w)
    cache = sys._nf_cache
    chain = []
    while w not in cache:
        m = first_match(sys, w)
        if m is None:
            cache[w] = w
            break
        chain.append(w)
        w = apply_match(w, m)
    result = cache[w]
    for v in chain:
        cache[v] = result
    return result


def normal_form_random(sys: RuleSystem, w: Sequence[int], rng: random.Random) -> Word:
    """Reduce by choosing a uniformly random match at every step (no caching)."""
    w = tuple(w)
    while True:
        ms = find_matches(sys, w)
        if not ms:
            return w
        w = apply_match(w, rng.choice(ms))


def is_reduced(sys: RuleSystem, w: Sequence[int]) -> bool:
    return first_match(sys, tuple(w)) is None


def equal_in_monoid(g: Digraph, u: Sequence[int], v: Sequence[int], order: GenOrder | None = None) -> bool:
    sys = t_system(g, order)
    return normal_form(sys, u) == normal_form(sys, v)


def one_step_reducts(sys: RuleSystem, w: Sequence[int]) -> set[Word]:
    w = tuple(w)
    return {apply_match(w, m) for m in find_matches(sys, w)}


def all_words(n: int, max_len: int, min_len: int = 0) -> Iterator[Word]:
    """Words over 1..n in deg-lex order (identity generator order)."""
    letters = range(1, n + 1)
    for length in range(min_len, max_len + 1):
        yield from itertools.product(letters, repeat=length)


@dataclass
class ConfluenceReport:
    system: str
    max_len: int
    words_checked: int = 0
    ambiguous_words: int = 0
    failures: int = 0
    counterexamples: list[tuple[Word, dict[Word, Word]]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failures == 0


def check_local_confluence(sys: RuleSystem, max_len: int, limit: int | None = None) -> ConfluenceReport:
    """Check, for every word up to ``max_len``, that all one-step reducts share one normal form.

    ``limit`` caps how many counterexamples are stored; the scan stops at the
    first failure past the cap.
    """
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    report = ConfluenceReport(sys.name, max_len)
    for w in all_words(sys.n, max_len):
        report.words_checked += 1
        reducts = one_step_reducts(sys, w)
        if len(reducts) < 2:
            continue
        report.ambiguous_words += 1
        nfs = {r: normal_form(sys, r) for r in reducts}
        if len(set(nfs.values())) > 1:
            report.failures += 1
            if limit is None or len(report.counterexamples) < limit:
                report.counterexamples.append((w, nfs))
            elif limit is not None:
                break
    return report
