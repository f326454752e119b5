"""Brute-force reference implementations for desk-scale cross-checks.

Everything here uses plain Python loops and full enumeration. Only the
definitional helpers ``chain_intersection`` and ``hasse_from_relation`` are
shared with the main code path.
"""
from __future__ import annotations

import itertools
import json
from collections.abc import Iterator
from dataclasses import asdict, dataclass, field

import numpy as np

from .digraph import (
    Chain,
    Digraph,
    Relation,
    chain_intersection,
    enumerate_linear_extensions,
    hasse_from_relation,
    is_admissible,
    is_regular,
)
from .errors import NotAcyclic, SearchBoundExceeded

CATALOG_MAX_VERTICES = 5
DIM2_MAX_VERTICES = 5
THEOREM1_MAX_VERTICES = 4


def _paths_from(succ: list[list[int]], start: int) -> set[int]:
    """Vertices reachable from ``start`` by one or more arcs (iterative DFS)."""
    seen: set[int] = set()
    stack = list(succ[start])
    while stack:
        v = stack.pop()
        if v not in seen:
            seen.add(v)
            stack.extend(succ[v])
    return seen


def _succ(g: Digraph) -> list[list[int]]:
    succ: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for u, v in g.arcs:
        succ[u].append(v)
    return succ


def naive_is_acyclic(g: Digraph) -> bool:
    succ = _succ(g)
    return all(v not in _paths_from(succ, v) for v in range(g.vertex_count))


class DagCatalog:
    """All labeled DAGs on ``n`` vertices, each exactly once.

    Every unordered vertex pair gets no arc, a forward arc or a backward arc;
    the cyclic choices are dropped.
    """

    def __init__(self, n: int):
        if not 0 <= n <= CATALOG_MAX_VERTICES:
            raise SearchBoundExceeded(f"catalog supports 0..{CATALOG_MAX_VERTICES} vertices, got {n}")
        self.vertex_count = n

    def __iter__(self) -> Iterator[Digraph]:
        n = self.vertex_count
        pairs = list(itertools.combinations(range(n), 2))
        for choice in itertools.product((0, 1, 2), repeat=len(pairs)):
            arcs = set()
            for (u, v), c in zip(pairs, choice):
                if c == 1:
                    arcs.add((u, v))
                elif c == 2:
                    arcs.add((v, u))
            g = Digraph(n, frozenset(arcs))
            if naive_is_acyclic(g):
                yield g


def brute_force_order(g: Digraph) -> Relation:
    """Reflexive closure of the path relation, by one DFS per vertex."""
    if not naive_is_acyclic(g):
        raise NotAcyclic("digraph contains a directed cycle")
    n = g.vertex_count
    succ = _succ(g)
    leq = np.zeros((n, n), dtype=bool)
    for u in range(n):
        leq[u, u] = True
        for v in _paths_from(succ, u):
            leq[u, v] = True
    return Relation(n, leq)


def brute_force_transitive_reduction(g: Digraph) -> Digraph:
    """Keep an arc iff its endpoints are disconnected once the arc is removed."""
    kept = set()
    for arc in g.arcs:
        rest = Digraph(g.vertex_count, g.arcs - {arc})
        if arc[1] not in _paths_from(_succ(rest), arc[0]):
            kept.add(arc)
    return Digraph(g.vertex_count, frozenset(kept))


def _naive_extensions(order: Relation) -> list[Chain]:
    n = order.vertex_count
    out = []
    for perm in itertools.permutations(range(n)):
        if all(not order(perm[j], perm[i]) for i in range(n) for j in range(i + 1, n)):
            out.append(Chain(perm))
    return out


def find_dim2_realizer(g: Digraph) -> tuple[Chain, Chain] | None:
    """A pair of linear extensions realising a poset whose Hasse diagram is g."""
    if g.vertex_count > DIM2_MAX_VERTICES:
        raise SearchBoundExceeded(f"brute force supports up to {DIM2_MAX_VERTICES} vertices")
    order = brute_force_order(g)
    if hasse_from_relation(order).arcs != g.arcs:
        return None
    exts = _naive_extensions(order)
    for a, b in itertools.combinations_with_replacement(exts, 2):
        if chain_intersection(a, b) == order:
            return a, b
    return None


def brute_force_dim2(g: Digraph) -> bool:
    return find_dim2_realizer(g) is not None


@dataclass
class Theorem1Report:
    n: int
    dags_checked: int = 0
    counterexamples: list[dict] = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def verify_theorem1(n: int) -> Theorem1Report:
    """Compare the brute-force dim-2 test with "regular and admissible chain
    exists" on every labeled DAG with ``n`` vertices."""
    if not 0 <= n <= THEOREM1_MAX_VERTICES:
        raise SearchBoundExceeded(f"verify_theorem1 supports 0..{THEOREM1_MAX_VERTICES} vertices")
    report = Theorem1Report(n)
    for g in DagCatalog(n):
        report.dags_checked += 1
        brute = brute_force_dim2(g)
        criterion = is_regular(g) and any(
            is_admissible(c, g) for c in enumerate_linear_extensions(g, cap=10**6)
        )
        if brute != criterion:
            report.counterexamples.append(
                {"arcs": [list(a) for a in g.sorted_arcs()], "brute_force": brute, "criterion": criterion}
            )
    return report
