"""Cobweb posets built from natural-number sequences.

Level ``s`` holds ``F_s`` vertices ``(j, s)`` with ``1 <= j <= F_s``. Every
vertex of a level lies below every vertex of all higher levels, so the Hasse
diagram is a chain of complete bipartite layers ("di-bicliques").

Vertices of a truncation are indexed level-major, column-ascending; that
indexing coincides with the chain X, which is therefore the identity
permutation.
"""
from __future__ import annotations

import functools
from collections.abc import Iterable
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple

import numpy as np

from .digraph import (
    Chain,
    Digraph,
    Relation,
    chain_intersection,
    hasse_from_relation,
)
from .errors import (
    BudgetExceeded,
    ConsistencyFailure,
    ForeignArc,
    InvalidSequence,
    InvalidVertex,
    LevelOutOfRange,
    ParseError,
)

DEFAULT_VERTEX_BUDGET = 100_000


class Vertex(NamedTuple):
    """Cobweb vertex ``(j, s)``: 1-based column j on 0-based level s."""

    column: int
    level: int

    def label(self) -> str:
        return f"{self.column},{self.level}"


@functools.lru_cache(maxsize=None)
def _fib(s: int) -> int:
    a, b = 0, 1
    for _ in range(s):
        a, b = b, a + b
    return a


@dataclass(frozen=True)
class LevelSequence:
    """A rule giving the vertex count ``F_s`` of every level ``s``.

    ``kind`` is one of ``fib``, ``const``, ``nat`` or ``custom``. For
    Fibonacci the exceptional ``F_0 = 0`` is replaced by 1, giving
    1, 1, 1, 2, 3, 5, 8, ...
    """

    kind: str
    constant: int = 1
    values: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in ("fib", "const", "nat", "custom"):
            raise InvalidSequence(f"unknown sequence kind {self.kind!r}")
        if self.kind == "const" and self.constant < 1:
            raise InvalidSequence(f"constant level size must be >= 1, got {self.constant}")
        if self.kind == "custom":
            if not self.values:
                raise InvalidSequence("custom sequence has no values")
            bad = [v for v in self.values if v < 1]
            if bad:
                raise InvalidSequence(f"level sizes must be >= 1, got {bad[0]}")

    @classmethod
    def fibonacci(cls) -> LevelSequence:
        return cls("fib")

    @classmethod
    def const(cls, k: int) -> LevelSequence:
        return cls("const", constant=k)

    @classmethod
    def natural(cls) -> LevelSequence:
        return cls("nat")

    @classmethod
    def custom(cls, values: Iterable[int]) -> LevelSequence:
        return cls("custom", values=tuple(int(v) for v in values))

    def __call__(self, s: int) -> int:
        if s < 0:
            raise LevelOutOfRange(f"negative level {s}")
        if self.kind == "fib":
            return _fib(s) if s > 0 else 1
        if self.kind == "const":
            return self.constant
        if self.kind == "nat":
            return s + 1
        if s >= len(self.values):
            raise LevelOutOfRange(f"custom sequence defines levels 0..{len(self.values) - 1}, not {s}")
        return self.values[s]

    def prefix(self, max_level: int) -> tuple[int, ...]:
        return tuple(self(s) for s in range(max_level + 1))

    def spec(self) -> str:
        if self.kind == "const":
            return f"const:{self.constant}"
        if self.kind == "custom":
            return "custom:" + ",".join(map(str, self.values))
        return self.kind


def sequence_parse(spec: str) -> LevelSequence:
    """Parse ``fib``, ``nat``, ``const:<k>`` or ``file:<path>``."""
    spec = spec.strip()
    if spec == "fib":
        return LevelSequence.fibonacci()
    if spec == "nat":
        return LevelSequence.natural()
    kind, sep, arg = spec.partition(":")
    if not sep:
        raise ParseError(f"unrecognised sequence spec {spec!r}")
    if kind == "const":
        try:
            k = int(arg)
        except ValueError:
            raise ParseError(f"const needs an integer, got {arg!r}") from None
        return LevelSequence.const(k)
    if kind == "file":
        try:
            text = Path(arg).read_text()
        except OSError as exc:
            raise ParseError(f"cannot read sequence file {arg!r}: {exc}") from None
        try:
            values = [int(tok) for tok in text.split()]
        except ValueError:
            raise ParseError(f"sequence file {arg!r} holds a non-integer token") from None
        return LevelSequence.custom(values)
    raise ParseError(f"unrecognised sequence spec {spec!r}")


@dataclass(frozen=True)
class CobwebTruncation:
    """Levels ``0..max_level`` of the cobweb poset of ``sequence``."""

    sequence: LevelSequence
    max_level: int
    sizes: tuple[int, ...]
    vertices: tuple[Vertex, ...]

    @functools.cached_property
    def _index(self) -> dict[Vertex, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def index(self, v: tuple[int, int]) -> int:
        try:
            return self._index[Vertex(*v)]
        except (KeyError, TypeError):
            raise InvalidVertex(f"{v} is not a vertex of this truncation") from None

    def vertex(self, i: int) -> Vertex:
        return self.vertices[i]

    def contains(self, v: tuple[int, int]) -> bool:
        return Vertex(*v) in self._index

    def level_indices(self, s: int) -> range:
        start = sum(self.sizes[:s])
        return range(start, start + self.sizes[s])

    def labels(self, chain: Chain) -> list[Vertex]:
        return [self.vertices[i] for i in chain.order]


def build_truncation(
    f: LevelSequence, max_level: int, budget: int = DEFAULT_VERTEX_BUDGET
) -> CobwebTruncation:
    if max_level < 0:
        raise LevelOutOfRange(f"max_level must be >= 0, got {max_level}")
    sizes = []
    total = 0
    for s in range(max_level + 1):
        size = f(s)
        if size < 1:
            raise InvalidSequence(f"F_{s} = {size} is not positive")
        total += size
        if total > budget:
            raise BudgetExceeded(f"truncation needs more than {budget} vertices")
        sizes.append(size)
    vertices = tuple(Vertex(j, s) for s, size in enumerate(sizes) for j in range(1, size + 1))
    return CobwebTruncation(f, max_level, tuple(sizes), vertices)


def _biclique_arcs(t: CobwebTruncation, p: int) -> set[tuple[int, int]]:
    lower, upper = t.level_indices(p), t.level_indices(p + 1)
    return {(u, v) for u in lower for v in upper}


def di_biclique(t: CobwebTruncation, p: int) -> Digraph:
    """Complete one-direction bipartite digraph from level p to level p+1."""
    if not 0 <= p < t.max_level:
        raise LevelOutOfRange(f"level {p} has no successor level in 0..{t.max_level}")
    return Digraph(t.vertex_count, frozenset(_biclique_arcs(t, p)))


def cobweb_edges(t: CobwebTruncation) -> Digraph:
    arcs: set[tuple[int, int]] = set()
    for p in range(t.max_level):
        arcs |= _biclique_arcs(t, p)
    return Digraph(t.vertex_count, frozenset(arcs))


def delete_arcs(t: CobwebTruncation, removed: Iterable[tuple[int, int]]) -> Digraph:
    """Sub-digraph of the cobweb with ``removed`` arcs (vertex indices) deleted.

    Any chain of relations between consecutive levels arises this way.
    """
    full = cobweb_edges(t).arcs
    removed = {(int(u), int(v)) for u, v in removed}
    foreign = removed - full
    if foreign:
        raise ForeignArc(f"arc {min(foreign)} is not a cobweb arc")
    return Digraph(t.vertex_count, full - removed)


def poset_leq(x: tuple[int, int], y: tuple[int, int], t: CobwebTruncation | None = None) -> bool:
    """Cobweb order on ``(column, level)`` pairs: strictly lower level, or the same vertex."""
    if t is not None:
        for v in (x, y):
            if not t.contains(v):
                raise InvalidVertex(f"{v} is not a vertex of this truncation")
    (s, lt), (u, lv) = x, y
    return lt < lv or (lt == lv and s == u)


def poset_matrix(t: CobwebTruncation) -> Relation:
    vs = t.vertices
    leq = np.array([[poset_leq(a, b) for b in vs] for a in vs], dtype=bool).reshape(
        t.vertex_count, t.vertex_count
    )
    return Relation(t.vertex_count, leq)


def chain_x(t: CobwebTruncation) -> Chain:
    """Level ascending, column ascending within a level."""
    order = sorted(range(t.vertex_count), key=lambda i: (t.vertices[i].level, t.vertices[i].column))
    return Chain(tuple(order))


def chain_y(t: CobwebTruncation) -> Chain:
    """Level ascending, column descending within a level."""
    order = sorted(range(t.vertex_count), key=lambda i: (t.vertices[i].level, -t.vertices[i].column))
    return Chain(tuple(order))


def realizer(t: CobwebTruncation) -> tuple[Chain, Chain, Relation]:
    """The chains X, Y and their intersection, checked against the cobweb order.

    Raises ConsistencyFailure if the intersection differs from the cobweb
    order on any pair or its Hasse diagram differs from the cobweb edges.
    """
    x, y = chain_x(t), chain_y(t)
    r = chain_intersection(x, y)
    expected = poset_matrix(t)
    if r != expected:
        u, v = map(int, np.argwhere(r.leq != expected.leq)[0])
        raise ConsistencyFailure(
            f"X and Y disagree with the cobweb order at {t.vertex(u)}, {t.vertex(v)}"
        )
    if hasse_from_relation(r).arcs != cobweb_edges(t).arcs:
        raise ConsistencyFailure("Hasse diagram of X and Y differs from the cobweb edges")
    return x, y, r
