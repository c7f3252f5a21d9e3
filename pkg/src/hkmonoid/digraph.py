"""Finite simple oriented digraphs and the cycle criteria used for growth."""

from __future__ import annotations

import itertools
import random
import re
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

from ._graphs import condensation, max_weight_path


class DigraphError(ValueError):
    """Raised for malformed graph files or graphs violating the oriented-simple invariants."""


@dataclass(frozen=True)
class Digraph:
    """Oriented simple graph on vertices ``1..n``.

    ``arrows`` holds ordered pairs ``(i, j)`` meaning ``i -> j``. Construction
    validates: no loops, no anti-parallel pairs, all indices in range.
    """

    n: int
    arrows: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DigraphError(f"vertex count must be positive, got {self.n}")
        arrows = frozenset(self.arrows)
        object.__setattr__(self, "arrows", arrows)
        for i, j in arrows:
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise DigraphError(f"arrow {i}->{j} out of range 1..{self.n}")
            if i == j:
                raise DigraphError(f"loop at vertex {i}")
            if (j, i) in arrows:
                raise DigraphError(f"anti-parallel pair {i}->{j} and {j}->{i}")

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_arrow(self, i: int, j: int) -> bool:
        return (i, j) in self.arrows

    def connected(self, i: int, j: int) -> bool:
        return (i, j) in self.arrows or (j, i) in self.arrows

    def successors(self, i: int) -> list[int]:
        return sorted(j for a, j in self.arrows if a == i)

    def predecessors(self, j: int) -> list[int]:
        return sorted(i for i, b in self.arrows if b == j)

    def sorted_arrows(self) -> list[tuple[int, int]]:
        return sorted(self.arrows)

    def serialize(self) -> str:
        lines = [f"n={self.n}"] + [f"{i}->{j}" for i, j in self.sorted_arrows()]
        return "\n".join(lines) + "\n"

    def to_dot(self, labels: dict[int, str] | None = None) -> str:
        def name(v: int) -> str:
            return labels[v] if labels else f"x{v}"

        out = ["digraph G {"]
        out += [f'  {v} [label="{name(v)}"];' for v in self.vertices]
        out += [f"  {i} -> {j};" for i, j in self.sorted_arrows()]
        out.append("}")
        return "\n".join(out) + "\n"


_HEADER = re.compile(r"^n\s*=\s*(\d+)$")
_ARROW = re.compile(r"^(\d+)\s*->\s*(\d+)$")


def parse_digraph(text: str) -> Digraph:
    """Parse the line-oriented graph format (``n=<int>`` then ``i->j`` lines, ``#`` comments)."""
    n: int | None = None
    arrows: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            m = _HEADER.match(line)
            if not m:
                raise DigraphError(f"line {lineno}: expected 'n=<int>', got {raw!r}")
            n = int(m.group(1))
            if n < 1:
                raise DigraphError(f"line {lineno}: vertex count must be positive")
            continue
        m = _ARROW.match(line)
        if not m:
            raise DigraphError(f"line {lineno}: malformed arrow {raw!r}")
        i, j = int(m.group(1)), int(m.group(2))
        if not (1 <= i <= n and 1 <= j <= n):
            raise DigraphError(f"line {lineno}: vertex index out of range 1..{n}")
        if i == j:
            raise DigraphError(f"line {lineno}: loop at vertex {i}")
        if (i, j) in arrows:
            raise DigraphError(f"line {lineno}: duplicate arrow {i}->{j}")
        if (j, i) in arrows:
            raise DigraphError(f"line {lineno}: anti-parallel pair {i}->{j} / {j}->{i}")
        arrows.add((i, j))
    if n is None:
        raise DigraphError("missing 'n=<int>' header")
    return Digraph(n, frozenset(arrows))


def cycle_graph(n: int) -> Digraph:
    """Oriented cycle ``1 -> 2 -> ... -> n -> 1``."""
    if n < 3:
        raise DigraphError(f"a cycle needs at least 3 vertices, got {n}")
    return Digraph(n, frozenset((i, i % n + 1) for i in range(1, n + 1)))


def path_graph(n: int) -> Digraph:
    return Digraph(n, frozenset((i, i + 1) for i in range(1, n)))


def example_s4() -> Digraph:
    """C_3 on a, b, c with an extra arrow a -> d (labels a..d are vertices 1..4)."""
    return Digraph(4, frozenset({(1, 2), (2, 3), (3, 1), (1, 4)}))


def all_digraphs(n: int) -> Iterator[Digraph]:
    """Every oriented simple digraph on ``1..n``: each vertex pair is absent, ``i->j`` or ``j->i``."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for choice in itertools.product((0, 1, 2), repeat=len(pairs)):
        arrows = set()
        for (i, j), c in zip(pairs, choice):
            if c == 1:
                arrows.add((i, j))
            elif c == 2:
                arrows.add((j, i))
        yield Digraph(n, frozenset(arrows))


def random_digraph(n: int, rng: random.Random, density: float | None = None) -> Digraph:
    """Random oriented simple digraph; ``density`` is the chance a pair gets an arrow."""
    p = rng.uniform(0.2, 0.8) if density is None else density
    arrows = set()
    for i, j in itertools.combinations(range(1, n + 1), 2):
        if rng.random() < p:
            arrows.add((i, j) if rng.random() < 0.5 else (j, i))
    return Digraph(n, frozenset(arrows))


def _components(g: Digraph):
    return condensation(list(g.vertices), g.sorted_arrows())


def is_acyclic(g: Digraph) -> bool:
    comps, _, _, _ = _components(g)
    return all(len(c) == 1 for c in comps)


def has_two_connected_cycles(g: Digraph) -> bool:
    """True iff two distinct oriented cycles are joined by an oriented path.

    A path of length zero counts, so two cycles sharing a vertex qualify; that
    case is exactly a strongly connected component with more arrows than vertices.
    """
    comps, _, internal, dag = _components(g)
    cyclic = [len(c) > 1 for c in comps]
    if any(cyc and internal[ci] > len(comps[ci]) for ci, cyc in enumerate(cyclic)):
        return True
    return max_weight_path([int(c) for c in cyclic], dag) >= 2

