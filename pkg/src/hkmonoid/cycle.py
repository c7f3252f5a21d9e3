"""Reduction systems S and S' for the oriented cycle C_n, block decompositions, and the finite rule list.

Generators are ordered naturally here (``x_1 < ... < x_n``); indices wrap
modulo n only where a rule family says so.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache

from .digraph import cycle_graph
from .rewriting import Match, RuleFamily, RuleSystem, _next_occurrence
from .words import GenOrder, Word

DEFAULT_ENUMERATION_CAP = 8


class CycleError(ValueError):
    pass


@dataclass(frozen=True)
class Block:
    start: int
    end: int

    @property
    def kind(self) -> str:
        if self.start == self.end:
            return "singleton"
        return "increasing" if self.start < self.end else "decreasing"

    def letters(self) -> Word:
        step = 1 if self.end >= self.start else -1
        return tuple(range(self.start, self.end + step, step))


def block_decompose(w: Word) -> list[Block]:
    """Greedy left-to-right split into maximal runs stepping by +1 or -1."""
    blocks: list[Block] = []
    i = 0
    while i < len(w):
        j = i
        if i + 1 < len(w) and abs(w[i + 1] - w[i]) == 1:
            step = w[i + 1] - w[i]
            j = i + 1
            while j + 1 < len(w) and w[j + 1] - w[j] == step:
                j += 1
        blocks.append(Block(w[i], w[j]))
        i = j + 1
    return blocks


def _monotone(blocks: list[Block]) -> bool:
    return all(a.start < b.start and a.end < b.end for a, b in zip(blocks, blocks[1:]))


def is_formp(w: Word, n: int) -> bool:
    """Whether ``w`` is a product of blocks with strictly increasing starts and strictly increasing ends.

    Only defined for words avoiding ``x_n``.
    """
    if n in w:
        raise CycleError(f"is_formp requires |w|_x{n} = 0, got {w}")
    return _monotone(block_decompose(w))


def has_block_form(w: Word) -> bool:
    """Whether *some* factorization of ``w`` into +-1 runs has strictly increasing starts and ends.

    The greedy decomposition of :func:`block_decompose` answers the same
    question (see the tests); this version searches all factorizations.
    """

    @lru_cache(maxsize=None)
    def ok(pos: int, prev_start: int, prev_end: int) -> bool:
        if pos == len(w):
            return True
        first = w[pos]
        if first <= prev_start:
            return False
        end = pos
        step = 0
        while True:
            if w[end] > prev_end and ok(end + 1, first, w[end]):
                return True
            if end + 1 >= len(w):
                return False
            d = w[end + 1] - w[end]
            if abs(d) != 1 or (step and d != step):
                return False
            step = d
            end += 1

    return ok(0, 0, 0)


# -- matchers ------------------------------------------------------------------------


def _pred(i: int, n: int) -> int:
    return n if i == 1 else i - 1


def _succ(i: int, n: int) -> int:
    return 1 if i == n else i + 1


def _match_s1(sys: RuleSystem, w: Word, s: int) -> Iterator[Match]:
    if s + 1 < len(w) and w[s] == w[s + 1]:
        yield Match("S-1", s, s + 2, (w[s],), (w[s],))


def _match_s2(sys: RuleSystem, w: Word, s: int) -> Iterator[Match]:
    n = sys.n
    if s + 1 < len(w):
        j, i = w[s], w[s + 1]
        if 1 < j - i < n - 1:
            yield Match("S-2", s, s + 2, (i, j), (j, i))


def _match_s3(sys: RuleSystem, w: Word, s: int) -> Iterator[Match]:
    # x_n (x_1 ... x_i) x_j  ->  x_j x_n (x_1 ... x_i),  i + 1 < j < n - 1
    n = sys.n
    if w[s] != n:
        return
    i = 0
    while s + i + 1 < len(w) and w[s + i + 1] == i + 1:
        i += 1
    if i >= 1 and s + i + 1 < len(w):
        j = w[s + i + 1]
        if i + 1 < j < n - 1:
            yield Match("S-3", s, s + i + 2, (j, n) + tuple(range(1, i + 1)), (i, j))


def _type4(sys: RuleSystem, w: Word, s: int) -> tuple[int, Word] | None:
    e = _next_occurrence(w, s)
    if e < s + 2:
        return None
    inner = w[s + 1 : e]
    if _pred(w[s], sys.n) in inner:
        return None
    return e, inner


def _type5(sys: RuleSystem, w: Word, s: int) -> tuple[int, Word] | None:
    e = _next_occurrence(w, s)
    if e < s + 2:
        return None
    inner = w[s + 1 : e]
    if _succ(w[s], sys.n) in inner:
        return None
    return e, inner


def _match_s4(sys: RuleSystem, w: Word, s: int) -> Iterator[Match]:
    hit = _type4(sys, w, s)
    if hit:
        e, inner = hit
        yield Match("S-4", s, e + 1, (w[s],) + inner, (w[s],))


def _match_s5(sys: RuleSystem, w: Word, s: int) -> Iterator[Match]:
    hit = _type5(sys, w, s)
    if hit:
        e, inner = hit
        yield Match("S-5", s, e + 1, inner + (w[s],), (w[s],))


def _match_s4p(sys: RuleSystem, w: Word, s: int) -> Iterator[Match]:
    hit = _type4(sys, w, s)
    if hit and len(set(hit[1])) == len(hit[1]):
        e, inner = hit
        yield Match("S'-4'", s, e + 1, (w[s],) + inner, (w[s],))


def _match_s5p(sys: RuleSystem, w: Word, s: int) -> Iterator[Match]:
    hit = _type5(sys, w, s)
    if hit and len(set(hit[1])) == len(hit[1]):
        e, inner = hit
        yield Match("S'-5'", s, e + 1, inner + (w[s],), (w[s],))


def _match_s5pp(sys: RuleSystem, w: Word, s: int) -> Iterator[Match]:
    # x_i B x_n x_1 ... x_{i-1} x_i  ->  B x_n x_1 ... x_i, with B in block form, avoiding x_n.
    n = sys.n
    i = w[s]
    if i >= n:
        return
    hit = _type5(sys, w, s)
    if not hit:
        return
    e, inner = hit
    tail = (n,) + tuple(range(1, i))
    body = inner[: len(inner) - len(tail)]
    if len(body) < 1 or inner[len(body) :] != tail or n in body:
        return
    if _monotone(block_decompose(body)):
        yield Match("S'-5''", s, e + 1, inner + (i,), (i,))


S_FAMILIES = (
    RuleFamily("S-1", _match_s1),
    RuleFamily("S-2", _match_s2),
    RuleFamily("S-3", _match_s3),
    RuleFamily("S-4", _match_s4),
    RuleFamily("S-5", _match_s5),
)

SPRIME_FAMILIES = (
    RuleFamily("S-1", _match_s1),
    RuleFamily("S-2", _match_s2),
    RuleFamily("S-3", _match_s3),
    RuleFamily("S'-4'", _match_s4p),
    RuleFamily("S'-5'", _match_s5p),
    RuleFamily("S'-5''", _match_s5pp),
)


def build_S(n: int) -> RuleSystem:
    if n < 3:
        raise CycleError(f"cycle systems need n >= 3, got {n}")
    return RuleSystem("S", cycle_graph(n), GenOrder.identity(n), S_FAMILIES)


def build_Sprime(n: int) -> RuleSystem:
    if n < 3:
        raise CycleError(f"cycle systems need n >= 3, got {n}")
    return RuleSystem("Sprime", cycle_graph(n), GenOrder.identity(n), SPRIME_FAMILIES)


# -- explicit finite rule list ------------------------------------------------------


@dataclass(frozen=True)
class Rule:
    kind: str
    lead: Word
    replacement: Word


def _distinct_words(letters: list[int]) -> Iterator[Word]:
    for k in range(1, len(letters) + 1):
        yield from itertools.permutations(letters, k)


def _block_form_words(letters: frozenset[int]) -> set[Word]:
    """Nonempty concatenations of runs over ``letters`` with strictly increasing starts and ends."""
    runs = []
    for a in letters:
        for b in letters:
            blk = Block(a, b)
            if set(blk.letters()) <= letters:
                runs.append(blk)
    runs.sort(key=lambda b: (b.start, b.end))
    out: set[Word] = set()

    def extend(prefix: Word, last: Block | None) -> None:
        for blk in runs:
            if last is None or (blk.start > last.start and blk.end > last.end):
                word = prefix + blk.letters()
                out.add(word)
                extend(word, blk)

    extend((), None)
    return out


def enumerate_Sprime_rules(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> list[Rule]:
    """Every reduction of S' for C_n, sorted by family then deg-lex leading term."""
    if n < 3:
        raise CycleError(f"cycle systems need n >= 3, got {n}")
    if n > cap:
        raise CycleError(f"n = {n} exceeds the enumeration cap {cap}")
    rules: list[Rule] = []
    gens = range(1, n + 1)
    rules += [Rule("S-1", (i, i), (i,)) for i in gens]
    rules += [Rule("S-2", (j, i), (i, j)) for i in gens for j in gens if 1 < j - i < n - 1]
    for i in gens:
        for j in gens:
            if i + 1 < j < n - 1:
                run = tuple(range(1, i + 1))
                rules.append(Rule("S-3", (n,) + run + (j,), (j, n) + run))
    for i in gens:
        rest = [x for x in gens if x not in (i, _pred(i, n))]
        rules += [Rule("S'-4'", (i,) + u + (i,), (i,) + u) for u in _distinct_words(rest)]
    for i in gens:
        rest = [x for x in gens if x not in (i, _succ(i, n))]
        rules += [Rule("S'-5'", (i,) + v + (i,), v + (i,)) for v in _distinct_words(rest)]
    for i in range(1, n - 1):
        letters = frozenset(range(1, n)) - {i, i + 1}
        tail = (n,) + tuple(range(1, i))
        for body in _block_form_words(letters):
            z = body + tail
            rules.append(Rule("S'-5''", (i,) + z + (i,), z + (i,)))
    order = {f.kind: k for k, f in enumerate(SPRIME_FAMILIES)}
    rules.sort(key=lambda r: (order[r.kind], len(r.lead), r.lead))
    return rules


def t_schema_lines() -> list[str]:
    """Human-readable description of the general pattern families."""
    return [
        "T-i    t w t -> t w      when w avoids t and no letter of w has an arrow into t",
        "T-ii   t w t -> w t      when w avoids t and t has no arrow into a letter of w",
        "T-iii  t1 w t2 -> t2 t1 w  when t1 > t2, t2 not in t1 w, no arrow between t2 and t1 w",
    ]
