"""Plain-text and JSON serialisation of digraphs, chains, relations and
cobweb vertices."""
from __future__ import annotations

import json

import numpy as np

from .cobweb import CobwebTruncation, cobweb_edges
from .digraph import Chain, Digraph, Relation
from .errors import ParseError


def format_digraph(g: Digraph) -> str:
    lines = [f"{g.vertex_count} {len(g.arcs)}"]
    lines += [f"{u} {v}" for u, v in g.sorted_arcs()]
    return "\n".join(lines) + "\n"


def _ints(line: str, lineno: int, count: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise ParseError(f"line {lineno}: expected {count} integers, got {line!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"line {lineno}: non-integer token in {line!r}") from None


def parse_digraph(text: str) -> Digraph:
    """Read ``n m`` followed by ``m`` lines ``u v`` (0-based)."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty digraph file")
    n, m = _ints(lines[0], 1, 2)
    if n < 0 or m < 0:
        raise ParseError("vertex and arc counts must be non-negative")
    if len(lines) - 1 != m:
        raise ParseError(f"header announces {m} arcs, file holds {len(lines) - 1}")
    arcs = []
    for lineno, line in enumerate(lines[1:], start=2):
        u, v = _ints(line, lineno, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {lineno}: vertex out of range 0..{n - 1}")
        if u == v:
            raise ParseError(f"line {lineno}: loop at vertex {u}")
        arcs.append((u, v))
    if len(set(arcs)) != len(arcs):
        raise ParseError("duplicate arc")
    return Digraph(n, frozenset(arcs))


def format_chain(c: Chain) -> str:
    return " ".join(map(str, c.order))


def parse_chain(text: str) -> Chain:
    try:
        return Chain(tuple(int(tok) for tok in text.split()))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_relation(r: Relation) -> str:
    return "".join("".join("1" if b else "0" for b in row) + "\n" for row in r.leq)


def parse_relation(text: str) -> Relation:
    rows = [ln.strip() for ln in text.splitlines() if ln.strip()]
    n = len(rows)
    if any(len(row) != n or set(row) - {"0", "1"} for row in rows):
        raise ParseError("relation must be n lines of n characters from {0, 1}")
    leq = np.array([[ch == "1" for ch in row] for row in rows], dtype=bool).reshape(n, n)
    return Relation(n, leq)


def chain_pairs(t: CobwebTruncation, c: Chain) -> list[list[int]]:
    return [[v.column, v.level] for v in t.labels(c)]


def vertex_table_json(t: CobwebTruncation) -> str:
    """JSON array whose i-th entry is the ``[j, s]`` pair of vertex index i."""
    return json.dumps([[v.column, v.level] for v in t.vertices])


def cobweb_dot(t: CobwebTruncation, g: Digraph | None = None) -> str:
    """Layered DOT drawing: one same-rank group per level, level 0 at the bottom."""
    g = cobweb_edges(t) if g is None else g
    seq = t.sequence.spec()
    out = [f'digraph "cobweb {seq} L={t.max_level}" {{', "  rankdir=BT;", "  node [shape=circle];"]
    for s in range(t.max_level + 1):
        nodes = " ".join(f'v{i} [label="{t.vertex(i).label()}"];' for i in t.level_indices(s))
        out.append(f"  {{ rank=same; {nodes} }}")
    out += [f"  v{u} -> v{v};" for u, v in g.sorted_arcs()]
    out.append("}")
    return "\n".join(out) + "\n"
