"""Brute-force congruence closure of the defining relations on bounded-length words.

Nothing here touches the reduction systems: classes are built from the
monoid relations alone, so comparing them with normal forms is a genuine
cross-check.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from .automaton import BudgetExceeded, count_normal_words, normal_dfa
from .digraph import Digraph
from .rewriting import all_words, is_reduced, normal_form, t_system
from .words import GenOrder, Word

DEFAULT_BUDGET = 2_000_000
DEFAULT_SLACK = 2


def defining_relations(g: Digraph) -> list[tuple[Word, Word]]:
    """Relation pairs of the presentation (idempotents, braid-like arrows, commuting non-edges)."""
    rels: list[tuple[Word, Word]] = [((i, i), (i,)) for i in g.vertices]
    for i, j in g.sorted_arrows():
        rels += [((i, j, i), (i, j)), ((j, i, j), (i, j))]
    for i in g.vertices:
        for j in g.vertices:
            if i < j and not g.connected(i, j):
                rels.append(((i, j), (j, i)))
    return rels


@dataclass
class CongruenceTable:
    n: int
    max_len: int
    slack: int
    words: list[Word]
    class_id: list[int]
    boundary_touched: dict[int, bool]

    @property
    def ceiling(self) -> int:
        return self.max_len + self.slack

    def index(self, w: Word) -> int:
        # words are stored in deg-lex order, so the position is computable
        n, pos = self.n, 0
        for length in range(len(w)):
            pos += n**length
        rank = 0
        for x in w:
            rank = rank * n + (x - 1)
        return pos + rank

    def cls(self, w: Word) -> int:
        return self.class_id[self.index(w)]

    def same(self, u: Word, v: Word) -> bool:
        return self.cls(u) == self.cls(v)

    def classes(self, max_len: int | None = None) -> dict[int, list[Word]]:
        """Class id -> members of length <= max_len (default: the core length), deg-lex sorted."""
        cap = self.max_len if max_len is None else max_len
        out: dict[int, list[Word]] = defaultdict(list)
        for w, c in zip(self.words, self.class_id):
            if len(w) > cap:
                break
            out[c].append(w)
        return dict(out)


def congruence_closure(g: Digraph, L: int, slack: int = DEFAULT_SLACK, budget: int = DEFAULT_BUDGET) -> CongruenceTable:
    """Union-find over all words up to ``L + slack`` joined by single relation applications."""
    n, top = g.n, L + slack
    size = sum(n**k for k in range(top + 1))
    if size > budget:
        raise BudgetExceeded(f"{size} words up to length {top} over {n} letters exceeds budget {budget}")
    words = list(all_words(n, top))
    index = {w: k for k, w in enumerate(words)}
    parent = list(range(len(words)))

    def find(a: int) -> int:
        root = a
        while parent[root] != root:
            root = parent[root]
        while parent[a] != root:
            parent[a], a = root, parent[a]
        return root

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            # the smaller index (deg-lex least word) stays the root
            if rb < ra:
                ra, rb = rb, ra
            parent[rb] = ra

    rels = defining_relations(g)
    by_len: dict[int, list[tuple[Word, Word]]] = defaultdict(list)
    for lhs, rhs in rels:
        by_len[len(lhs)].append((lhs, rhs))
    for k, w in enumerate(words):
        for length, pairs in by_len.items():
            for p in range(len(w) - length + 1):
                factor = w[p : p + length]
                for lhs, rhs in pairs:
                    if factor == lhs:
                        union(k, index[w[:p] + rhs + w[p + length :]])
    class_id = [find(k) for k in range(len(words))]
    touched: dict[int, bool] = defaultdict(bool)
    for w, c in zip(words, class_id):
        touched[c] = touched[c] or len(w) == top
    return CongruenceTable(n, L, slack, words, class_id, dict(touched))


@dataclass
class CrosscheckReport:
    graph: Digraph
    max_len: int
    slack: int
    classes: int = 0
    flagged_classes: int = 0
    class_counts: list[int] = field(default_factory=list)
    automaton_counts: list[int] = field(default_factory=list)
    violations: list[str] = field(default_factory=list)
    unverified: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.unverified


def crosscheck(g: Digraph, L: int, slack: int = DEFAULT_SLACK, budget: int = DEFAULT_BUDGET) -> CrosscheckReport:
    """Compare the congruence table with T-normal forms and with the automaton counts, on words up to ``L``.

    Problems that could be caused by the length ceiling (a true class split in
    two because the joining chain needs longer words) are listed as
    ``unverified`` when the class touched the ceiling; everything else is a
    violation.
    """
    table = congruence_closure(g, L, slack, budget)
    sys = t_system(g, GenOrder.identity(g.n))
    report = CrosscheckReport(g, L, slack)
    classes = table.classes()
    report.classes = len(classes)
    report.flagged_classes = sum(1 for c in classes if table.boundary_touched[c])

    def complain(c: int, msg: str) -> None:
        (report.unverified if table.boundary_touched[c] else report.violations).append(msg)

    nf_owner: dict[Word, int] = {}
    for c, members in sorted(classes.items()):
        nfs = {normal_form(sys, w) for w in members}
        if len(nfs) > 1:
            report.violations.append(f"class of {members[0]} holds several normal forms {sorted(nfs)}")
        for nf in nfs:
            other = nf_owner.setdefault(nf, c)
            if other != c:
                complain(c, f"normal form {nf} spread over classes of {classes[other][0]} and {members[0]}")
        reduced = [w for w in members if is_reduced(sys, w)]
        if len(reduced) > 1:
            report.violations.append(f"class of {members[0]} has {len(reduced)} reduced members")
        elif not reduced:
            complain(c, f"class of {members[0]} has no reduced member")
        elif reduced[0] != members[0]:
            report.violations.append(f"reduced member {reduced[0]} is not the least member {members[0]}")

    cumulative = [0] * (L + 1)
    for members in classes.values():
        cumulative[len(members[0])] += 1
    for k in range(1, L + 1):
        cumulative[k] += cumulative[k - 1]
    auto = count_normal_words(normal_dfa(g), L)
    auto_cum = [sum(auto[: k + 1]) for k in range(L + 1)]
    report.class_counts, report.automaton_counts = cumulative, auto_cum
    if cumulative != auto_cum:
        report.violations.append(f"cumulative class counts {cumulative} != automaton {auto_cum}")
    return report


def enumerate_monoid(g: Digraph, max_nodes: int = 200_000) -> list[Word]:
    """Todd-Coxeter enumeration of the (finite) monoid from its defining relations.

    Builds the right Cayley graph: node 0 is the identity, and every relation
    ``u = v`` is imposed at every node. Returns one defining word per element.
    Raises :class:`BudgetExceeded` when more than ``max_nodes`` nodes are
    needed, which is what happens for infinite monoids.
    """
    n = g.n
    rels = defining_relations(g)
    table: list[list[int | None]] = [[None] * n]
    word: list[Word] = [()]
    parent = [0]

    def find(a: int) -> int:
        root = a
        while parent[root] != root:
            root = parent[root]
        while parent[a] != root:
            parent[a], a = root, parent[a]
        return root

    def new_node(src: int, x: int) -> int:
        if len(table) >= max_nodes:
            raise BudgetExceeded(f"monoid enumeration needs more than {max_nodes} nodes")
        k = len(table)
        table.append([None] * n)
        word.append(word[src] + (x,))
        parent.append(k)
        table[src][x - 1] = k
        return k

    def trace(c: int, w: Word) -> int:
        for x in w:
            c = find(c)
            nxt = table[c][x - 1]
            c = new_node(c, x) if nxt is None else find(nxt)
        return find(c)

    def coincide(a: int, b: int) -> None:
        queue = [(a, b)]
        while queue:
            a, b = (find(v) for v in queue.pop())
            if a == b:
                continue
            if b < a:
                a, b = b, a
            parent[b] = a
            for k in range(n):
                tb = table[b][k]
                if tb is None:
                    continue
                ta = table[a][k]
                if ta is None:
                    table[a][k] = tb
                else:
                    queue.append((ta, tb))

    changed = True
    while changed:
        changed = False
        c = 0
        while c < len(table):
            if find(c) == c:
                for lhs, rhs in rels:
                    a, b = trace(c, lhs), trace(c, rhs)
                    if a != b:
                        coincide(a, b)
                        changed = True
                    if find(c) != c:
                        break
                else:
                    for x in range(1, n + 1):
                        if table[c][x - 1] is None:
                            new_node(c, x)
                            changed = True
            c += 1
    return [word[c] for c in range(len(table)) if find(c) == c]
