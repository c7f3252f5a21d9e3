"""Words of the free monoid, deg-lex order and the arrow predicates between words and generators.

A word is a plain tuple of 1-based generator indices; the empty tuple is the
identity. The alphabet size is passed alongside rather than stored.
"""

from __future__ import annotations

import enum
import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .digraph import Digraph

Word = tuple[int, ...]

EMPTY_WORD_TOKEN = "-"


class WordError(ValueError):
    pass


class Cmp(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class GenOrder:
    """Total order on generators, listed smallest first. Default is ``x_1 < ... < x_n``."""

    sequence: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.sequence) != list(range(1, len(self.sequence) + 1)):
            raise WordError(f"not a permutation of 1..{len(self.sequence)}: {self.sequence}")
        rank = [0] * (len(self.sequence) + 1)
        for pos, x in enumerate(self.sequence):
            rank[x] = pos
        object.__setattr__(self, "_rank", tuple(rank))

    @classmethod
    def identity(cls, n: int) -> GenOrder:
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.sequence)

    def rank(self, x: int) -> int:
        return self._rank[x]

    def key(self, w: Sequence[int]) -> tuple:
        """Sort key realizing deg-lex."""
        r = self._rank
        return (len(w), tuple(r[x] for x in w))

    def is_identity(self) -> bool:
        return self.sequence == tuple(range(1, self.n + 1))


def deglex_compare(u: Sequence[int], v: Sequence[int], order: GenOrder) -> Cmp:
    ku, kv = order.key(u), order.key(v)
    if ku < kv:
        return Cmp.LESS
    if ku > kv:
        return Cmp.GREATER
    return Cmp.EQUAL


def occurrences(w: Sequence[int], x: int) -> int:
    return sum(1 for y in w if y == x)


def support(w: Iterable[int]) -> frozenset[int]:
    return frozenset(w)


def not_to(w: Sequence[int], t: int, g: Digraph) -> bool:
    """``w -/-> t``: t does not occur in w and no letter of w has an arrow into t."""
    return all(x != t and not g.has_arrow(x, t) for x in w)


def not_from(t: int, w: Sequence[int], g: Digraph) -> bool:
    """``t -/-> w``: t does not occur in w and t has no arrow into a letter of w."""
    return all(y != t and not g.has_arrow(t, y) for y in w)


def disconnected(t: int, w: Sequence[int], g: Digraph) -> bool:
    return not_to(w, t, g) and not_from(t, w, g)


def check_word(w: Sequence[int], n: int) -> Word:
    w = tuple(w)
    for x in w:
        if not 1 <= x <= n:
            raise WordError(f"letter {x} outside alphabet 1..{n}")
    return w


_SEPARATED = re.compile(r"[\s.]+")


def parse_word(text: str, n: int | None = None) -> Word:
    """Parse a word literal.

    Accepted: ``-`` or the empty string for the identity, separated indices
    (``1 2 1`` or ``1.2.1``), undelimited digits (``121``, one letter per
    digit), or letters ``a..z`` standing for 1..26 (``aba``).
    """
    s = text.strip()
    if s in ("", EMPTY_WORD_TOKEN):
        w: Word = ()
    elif _SEPARATED.search(s):
        parts = [p for p in _SEPARATED.split(s) if p]
        if not all(p.isdigit() for p in parts):
            raise WordError(f"bad word literal {text!r}")
        w = tuple(int(p) for p in parts)
    elif s.isdigit():
        w = tuple(int(c) for c in s)
    elif s.isalpha() and s.isascii() and s.islower():
        w = tuple(ord(c) - ord("a") + 1 for c in s)
    else:
        raise WordError(f"bad word literal {text!r}")
    if any(x < 1 for x in w):
        raise WordError(f"generator indices start at 1: {text!r}")
    return check_word(w, n) if n is not None else w


def format_word(w: Sequence[int], style: str = "letters") -> str:
    """Inverse of :func:`parse_word`; ``letters`` falls back to dotted indices past 26."""
    if not w:
        return EMPTY_WORD_TOKEN
    if style == "letters" and max(w) <= 26:
        return "".join(chr(ord("a") + x - 1) for x in w)
    text = ".".join(str(x) for x in w)
    # a lone multi-digit index would otherwise read back as undelimited digits
    return text + "." if len(w) == 1 and w[0] >= 10 else text
