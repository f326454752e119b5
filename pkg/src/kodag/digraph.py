"""Finite digraph machinery: reachability, regularity, linear extensions,
admissible chains, conjugate chains and the dim-2 (oDAG) decision.

Vertices are dense integer indices ``0..n-1``. Boolean matrices are numpy
arrays of dtype ``bool`` and are made read-only once built.
"""
from __future__ import annotations

import enum
import graphlib
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    ConsistencyFailure,
    LengthMismatch,
    NotAcyclic,
    NotLinearExtension,
    NotPartialOrder,
    NotTotalOrder,
    SearchBoundExceeded,
)

DEFAULT_SEARCH_BOUND = 12

Arc = tuple[int, int]


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=bool)
    a.setflags(write=False)
    return a


def _bool_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # int64 accumulation: uint8 would overflow past 255 vertices
    return (a.astype(np.int64) @ b.astype(np.int64)) > 0


@dataclass(frozen=True)
class Digraph:
    """A loopless digraph on vertices ``0..vertex_count-1``."""

    vertex_count: int
    arcs: frozenset[Arc] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        n = self.vertex_count
        for u, v in arcs:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) out of range for {n} vertices")
        object.__setattr__(self, "arcs", arcs)

    @classmethod
    def from_arcs(cls, vertex_count: int, arcs: Iterable[Arc]) -> Digraph:
        return cls(vertex_count, frozenset(arcs))

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)

    def adjacency(self) -> np.ndarray:
        adj = np.zeros((self.vertex_count, self.vertex_count), dtype=bool)
        for u, v in self.arcs:
            adj[u, v] = True
        return _frozen(adj)

    def successors(self) -> list[list[int]]:
        succ: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.sorted_arcs():
            succ[u].append(v)
        return succ

    def relabel(self, perm) -> Digraph:
        """Rename vertex ``v`` to ``perm[v]``."""
        return Digraph(self.vertex_count, frozenset((perm[u], perm[v]) for u, v in self.arcs))


@dataclass(frozen=True, eq=False)
class ReachMatrix:
    """``reach[u, v]`` is true iff a path of one or more arcs leads from u to v."""

    vertex_count: int
    reach: np.ndarray

    def __call__(self, u: int, v: int) -> bool:
        return bool(self.reach[u, v])

    def __eq__(self, other):
        if not isinstance(other, ReachMatrix):
            return NotImplemented
        return self.vertex_count == other.vertex_count and np.array_equal(self.reach, other.reach)


@dataclass(frozen=True)
class Chain:
    """A total order stored as a list of vertices; list position is rank."""

    order: tuple[int, ...]

    def __post_init__(self):
        order = tuple(int(v) for v in self.order)
        if sorted(order) != list(range(len(order))):
            raise ValueError(f"chain is not a permutation of 0..{len(order) - 1}: {order}")
        object.__setattr__(self, "order", order)

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self) -> Iterator[int]:
        return iter(self.order)

    def positions(self) -> np.ndarray:
        pos = np.empty(len(self.order), dtype=np.int64)
        pos[list(self.order)] = np.arange(len(self.order))
        return pos

    def position(self, v: int) -> int:
        return self.order.index(v)


@dataclass(frozen=True, eq=False)
class Relation:
    """A binary relation as a boolean pair matrix ``leq[u, v]``."""

    vertex_count: int
    leq: np.ndarray

    def __post_init__(self):
        leq = _frozen(self.leq)
        if leq.shape != (self.vertex_count, self.vertex_count):
            raise ValueError(f"matrix shape {leq.shape} does not match {self.vertex_count} vertices")
        object.__setattr__(self, "leq", leq)

    def __eq__(self, other):
        if not isinstance(other, Relation):
            return NotImplemented
        return self.vertex_count == other.vertex_count and np.array_equal(self.leq, other.leq)

    def __call__(self, u: int, v: int) -> bool:
        return bool(self.leq[u, v])

    def order_axiom_violations(self) -> list[str]:
        leq = self.leq
        problems = []
        if not leq.diagonal().all():
            problems.append("not reflexive")
        both = leq & leq.T
        if (both & ~np.eye(self.vertex_count, dtype=bool)).any():
            problems.append("not antisymmetric")
        if (_bool_matmul(leq, leq) & ~leq).any():
            problems.append("not transitive")
        return problems

    def is_partial_order(self) -> bool:
        return not self.order_axiom_violations()


class FailureReason(str, enum.Enum):
    NOT_ACYCLIC = "NotAcyclic"
    NOT_REGULAR = "NotRegular"
    NO_ADMISSIBLE_CHAIN = "NoAdmissibleChain"


@dataclass(frozen=True)
class OdagResult:
    representable: bool
    witness_x: Chain | None = None
    witness_y: Chain | None = None
    failure_reason: FailureReason | None = None

    def to_dict(self) -> dict:
        return {
            "representable": self.representable,
            "failure_reason": self.failure_reason.value if self.failure_reason else None,
            "witness_x": list(self.witness_x.order) if self.witness_x is not None else None,
            "witness_y": list(self.witness_y.order) if self.witness_y is not None else None,
        }


def is_dag(g: Digraph) -> bool:
    sorter = graphlib.TopologicalSorter({v: () for v in range(g.vertex_count)})
    for u, v in g.arcs:
        sorter.add(v, u)
    try:
        sorter.prepare()
    except graphlib.CycleError:
        return False
    return True


def _require_dag(g: Digraph) -> None:
    if not is_dag(g):
        raise NotAcyclic("digraph contains a directed cycle")


def reachability(g: Digraph) -> ReachMatrix:
    """Transitive closure by Warshall's algorithm, one vectorised sweep per pivot."""
    reach = g.adjacency().copy()
    for k in range(g.vertex_count):
        reach |= reach[:, k, None] & reach[None, k, :]
    return ReachMatrix(g.vertex_count, _frozen(reach))


def _long_paths(reach: ReachMatrix) -> np.ndarray:
    # paths of length >= 2 are exactly compositions of two nonempty paths
    return _bool_matmul(reach.reach, reach.reach)


def is_regular(g: Digraph) -> bool:
    """True iff no arc (u, v) is shadowed by a longer directed path u -> v."""
    _require_dag(g)
    longer = _long_paths(reachability(g))
    return not any(longer[u, v] for u, v in g.arcs)


def transitive_reduction(g: Digraph) -> Digraph:
    _require_dag(g)
    longer = _long_paths(reachability(g))
    return Digraph(g.vertex_count, frozenset(a for a in g.arcs if not longer[a]))


def _check_chain(c: Chain, g: Digraph) -> None:
    if len(c) != g.vertex_count:
        raise LengthMismatch(f"chain has {len(c)} vertices, digraph has {g.vertex_count}")


def is_linear_extension(c: Chain, g: Digraph) -> bool:
    _check_chain(c, g)
    pos = c.positions()
    return all(pos[u] < pos[v] for u, v in g.arcs)


def _bad_triples(order: tuple[int, ...], reach: ReachMatrix) -> np.ndarray:
    """Matrix over chain positions: entry (i, k) true iff some j with i < j < k
    has no path v_i -> v_j, no path v_j -> v_k, but a path v_i -> v_k."""
    idx = list(order)
    a = reach.reach[np.ix_(idx, idx)]
    gap = np.triu(~a, k=1)
    return _bool_matmul(gap, gap) & a


def is_admissible(c: Chain, g: Digraph) -> bool:
    if not is_linear_extension(c, g):
        raise NotLinearExtension("chain is not a linear extension of the digraph")
    return not _bad_triples(c.order, reachability(g)).any()


def _conjugate(x: Chain, reach: ReachMatrix) -> Chain:
    n = reach.vertex_count
    r = reach.reach
    pos = x.positions()
    unordered = ~(r | r.T)
    # before[u, v]: u precedes v in the conjugate tournament
    before = r | (unordered & (pos[None, :] < pos[:, None]))
    np.fill_diagonal(before, False)
    # an acyclic tournament is sorted by descending out-degree
    out_deg = before.sum(axis=1)
    order = sorted(range(n), key=lambda v: -out_deg[v])
    y = Chain(tuple(order))
    ypos = y.positions()
    if not np.array_equal(before, ypos[:, None] < ypos[None, :]):
        raise NotTotalOrder("conjugate relation has a cycle; the chain is not admissible")
    return y


def conjugate_chain(x: Chain, g: Digraph) -> Chain:
    """Keep x's order on pairs comparable in g and invert it on all other pairs."""
    _require_dag(g)
    if not is_linear_extension(x, g):
        raise NotLinearExtension("chain is not a linear extension of the digraph")
    y = _conjugate(x, reachability(g))
    if not is_linear_extension(y, g):
        raise ConsistencyFailure("conjugate chain violates an arc of the digraph")
    return y


def chain_intersection(x: Chain, y: Chain) -> Relation:
    if len(x) != len(y):
        raise LengthMismatch(f"chains have lengths {len(x)} and {len(y)}")
    px, py = x.positions(), y.positions()
    leq = (px[:, None] <= px[None, :]) & (py[:, None] <= py[None, :])
    return Relation(len(x), leq)


def chain_order(x: Chain) -> Relation:
    """The total order induced by a single chain."""
    return chain_intersection(x, x)


def reflexive_closure(reach: ReachMatrix) -> Relation:
    return Relation(reach.vertex_count, reach.reach | np.eye(reach.vertex_count, dtype=bool))


def hasse_from_relation(r: Relation) -> Digraph:
    problems = r.order_axiom_violations()
    if problems:
        raise NotPartialOrder(", ".join(problems))
    strict = r.leq & ~np.eye(r.vertex_count, dtype=bool)
    covers = strict & ~_bool_matmul(strict, strict)
    us, vs = np.nonzero(covers)
    return Digraph(r.vertex_count, frozenset(zip(us.tolist(), vs.tolist())))


def _check_bound(g: Digraph, bound: int) -> None:
    if g.vertex_count > bound:
        raise SearchBoundExceeded(
            f"{g.vertex_count} vertices exceeds search bound {bound}; raise the bound explicitly"
        )


def _extensions(g: Digraph, reach: ReachMatrix | None = None) -> Iterator[tuple[int, ...]]:
    """Linear extensions in lexicographic order.

    With ``reach`` given, prefixes that already hold a bad triple are pruned,
    so only admissible extensions come out, still in lexicographic order.
    """
    n = g.vertex_count
    succ = g.successors()
    indeg = [0] * n
    for _, v in g.arcs:
        indeg[v] += 1
    placed: list[int] = []
    used = [False] * n
    r = reach.reach if reach is not None else None

    def closes_bad_triple(k: int) -> bool:
        # k as the last element of a triple (i, j, k) over the placed prefix
        m = len(placed)
        for jj in range(1, m):
            j = placed[jj]
            if r[j, k]:
                continue
            for ii in range(jj):
                i = placed[ii]
                if r[i, k] and not r[i, j]:
                    return True
        return False

    def rec() -> Iterator[tuple[int, ...]]:
        if len(placed) == n:
            yield tuple(placed)
            return
        for v in range(n):
            if used[v] or indeg[v]:
                continue
            if reach is not None and closes_bad_triple(v):
                continue
            used[v] = True
            placed.append(v)
            for w in succ[v]:
                indeg[w] -= 1
            yield from rec()
            for w in succ[v]:
                indeg[w] += 1
            placed.pop()
            used[v] = False

    yield from rec()


def enumerate_linear_extensions(
    g: Digraph, cap: int, search_bound: int = DEFAULT_SEARCH_BOUND
) -> list[Chain]:
    """Up to ``cap`` linear extensions of ``g``, lexicographic by vertex index."""
    if cap < 1:
        raise ValueError("cap must be positive")
    _check_bound(g, search_bound)
    _require_dag(g)
    out = []
    for order in _extensions(g):
        out.append(Chain(order))
        if len(out) >= cap:
            break
    return out


def is_odag(g: Digraph, search_bound: int = DEFAULT_SEARCH_BOUND) -> OdagResult:
    """Decide whether ``g`` is the Hasse diagram of a poset of dimension at most 2.

    The digraph qualifies iff it is acyclic, regular, and has an admissible
    linear extension. The first admissible extension in lexicographic order is
    returned as ``witness_x`` together with its conjugate chain.
    """
    _check_bound(g, search_bound)
    if not is_dag(g):
        return OdagResult(False, failure_reason=FailureReason.NOT_ACYCLIC)
    if not is_regular(g):
        return OdagResult(False, failure_reason=FailureReason.NOT_REGULAR)
    reach = reachability(g)
    first = next(_extensions(g, reach), None)
    if first is None:
        return OdagResult(False, failure_reason=FailureReason.NO_ADMISSIBLE_CHAIN)
    x = Chain(first)
    try:
        y = _conjugate(x, reach)
    except NotTotalOrder as exc:
        raise ConsistencyFailure(f"admissible chain {x.order} has no conjugate") from exc
    if hasse_from_relation(chain_intersection(x, y)).arcs != g.arcs:
        raise ConsistencyFailure(
            f"realizer ({x.order}, {y.order}) does not reproduce the input digraph"
        )
    return OdagResult(True, witness_x=x, witness_y=y)
