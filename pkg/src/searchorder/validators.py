"""Membership tests for vertex orderings in each search paradigm.

BFS, DFS, LexBFS, LexDFS and MNS are decided by their three-point
characterizations (plus the generic prefix condition); generic search by
the prefix condition alone; MCS, which has no point condition here, by
step-by-step simulation.  These validators are the oracles every
executor in this package is tested against, so they stay as direct
triple scans over adjacency bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .graphs import Graph, VertexOrdering, require_connected
from .searches import SearchKind


@dataclass(frozen=True)
class PointViolation:
    """A triple a <s b <s c with ac an edge, ab a non-edge, and no vertex d
    satisfying the paradigm's clause."""

    a: int
    b: int
    c: int
    kind: SearchKind
    reason: str

    def to_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "c": self.c,
                "kind": self.kind.value, "reason": self.reason}


Witness = Union[PointViolation, int, None]


def _as_ordering(g: Graph, sigma: Union[VertexOrdering, Sequence[int]]) -> VertexOrdering:
    if not isinstance(sigma, VertexOrdering):
        sigma = VertexOrdering(sigma)
    if len(sigma) != g.n:
        raise ValueError(f"ordering length {len(sigma)} != vertex count {g.n}")
    return sigma


def is_generic_order(g: Graph, sigma) -> tuple[bool, Optional[int]]:
    """Every non-first vertex must have an earlier neighbor.

    Returns (verdict, first offending vertex or None).
    """
    sigma = _as_ordering(g, sigma)
    seen = 0
    for i, v in enumerate(sigma):
        if i > 0 and not g.adj[v] & seen:
            return False, v
        seen |= 1 << v
    return True, None


# Clause of the point condition per kind, given prefix masks:
#   before_a = vertices strictly before a, between = strictly between a and b,
#   before_b = vertices strictly before b.
_POINT_KINDS = (SearchKind.BFS, SearchKind.DFS, SearchKind.LEXBFS,
                SearchKind.LEXDFS, SearchKind.MNS)

_CLAUSE_TEXT = {
    SearchKind.BFS: "no d before a with db an edge",
    SearchKind.DFS: "no d between a and b with db an edge",
    SearchKind.LEXBFS: "no d before a with db an edge and dc a non-edge",
    SearchKind.LEXDFS: "no d between a and b with db an edge and dc a non-edge",
    SearchKind.MNS: "no d before b with db an edge and dc a non-edge",
}


def check_point_condition(g: Graph, sigma,
                          kind: SearchKind) -> tuple[bool, Optional[PointViolation]]:
    """Scan all position triples i < j < k for a violation of the kind's
    three-point condition.  The first violation in (pos a, pos b, pos c)
    order is reported."""
    if kind not in _POINT_KINDS:
        raise ValueError(f"{kind} has no point condition; use is_search_ordering")
    sigma = _as_ordering(g, sigma)
    order = sigma.order
    n = g.n
    adj = g.adj
    # prefix[i] = bitmask of the first i vertices of sigma
    prefix = [0] * (n + 1)
    for i, v in enumerate(order):
        prefix[i + 1] = prefix[i] | 1 << v
    for i in range(n):
        a = order[i]
        before_a = prefix[i]
        for j in range(i + 1, n):
            b = order[j]
            if adj[a] >> b & 1:
                continue
            nb = adj[b]
            between = prefix[j] & ~prefix[i + 1]
            for k in range(j + 1, n):
                c = order[k]
                if not adj[a] >> c & 1:
                    continue
                if kind is SearchKind.BFS:
                    ok = nb & before_a
                elif kind is SearchKind.DFS:
                    ok = nb & between
                elif kind is SearchKind.LEXBFS:
                    ok = nb & before_a & ~adj[c]
                elif kind is SearchKind.LEXDFS:
                    ok = nb & between & ~adj[c]
                else:  # MNS
                    ok = nb & prefix[j] & ~adj[c]
                if not ok:
                    return False, PointViolation(a, b, c, kind, _CLAUSE_TEXT[kind])
    return True, None


def _is_mcs_order(g: Graph, sigma: VertexOrdering) -> tuple[bool, Optional[int]]:
    """Simulate maximum-cardinality selection; witness is the first vertex
    chosen while another unvisited vertex had strictly more visited
    neighbors."""
    order = sigma.order
    visited = 0
    unvisited = set(range(g.n))
    for v in order:
        count = (g.adj[v] & visited).bit_count()
        best = max((g.adj[u] & visited).bit_count() for u in unvisited)
        if count < best:
            return False, v
        visited |= 1 << v
        unvisited.remove(v)
    return True, None


def is_search_ordering(g: Graph, sigma,
                       kind: SearchKind) -> tuple[bool, Witness]:
    """Decide membership of sigma in the paradigm's set of orderings."""
    require_connected(g)
    sigma = _as_ordering(g, sigma)
    generic_ok, offender = is_generic_order(g, sigma)
    if kind is SearchKind.GENERIC:
        return generic_ok, offender
    if not generic_ok:
        return False, offender
    if kind is SearchKind.MCS:
        return _is_mcs_order(g, sigma)
    return check_point_condition(g, sigma, kind)
