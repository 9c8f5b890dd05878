"""Forbidden-subgraph detectors and structural class recognition.

Detectors enumerate vertex subsets directly (trivial at n <= 12 and
obviously correct); the structural recognizers are independent of them,
and the test suite cross-checks the two paths exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Optional

from .graphs import Graph, DisconnectedGraphError, is_connected

P4 = "P4"
C4 = "C4"
PAW = "paw"
DIAMOND = "diamond"
PAN = "pan"

# Edge sets on canonical positions 0..3.  Paw: triangle 0,1,2 with the
# pendant 3 hanging off 2.  Diamond: 4-cycle 0-1-2-3 plus chord 0-2.
_SMALL_PATTERN_EDGES = {
    P4: frozenset({(0, 1), (1, 2), (2, 3)}),
    C4: frozenset({(0, 1), (1, 2), (2, 3), (0, 3)}),
    PAW: frozenset({(0, 1), (1, 2), (0, 2), (2, 3)}),
    DIAMOND: frozenset({(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)}),
}


@dataclass(frozen=True)
class PatternHit:
    """An induced embedding; vertices are listed in canonical pattern order
    (for a k-pan: cycle in cyclic order starting at the attachment vertex,
    then the pendant)."""

    pattern: str
    vertices: tuple[int, ...]
    k: Optional[int] = None  # cycle length, pans only

    def to_dict(self) -> dict:
        d = {"pattern": self.pattern, "vertices": list(self.vertices)}
        if self.k is not None:
            d["k"] = self.k
        return d


def find_induced_small(g: Graph, pattern: str) -> Optional[PatternHit]:
    """Lexicographically first induced embedding of a 4-vertex pattern."""
    try:
        target = _SMALL_PATTERN_EDGES[pattern]
    except KeyError:
        raise ValueError(f"unknown 4-vertex pattern {pattern!r}") from None
    for subset in combinations(range(g.n), 4):
        for mapped in permutations(subset):
            if all(g.has_edge(mapped[i], mapped[j]) == ((i, j) in target)
                   for i, j in combinations(range(4), 2)):
                return PatternHit(pattern, mapped)
    return None


def _induced_cycles(g: Graph):
    """Yield chordless cycles (length >= 3) as vertex tuples in cyclic order.

    Each cycle appears once: it starts at its smallest vertex and its
    second vertex is smaller than its last.
    """
    n = g.n
    adj = g.adj
    for s in range(n):
        path = [s]

        def extend(path_mask: int):
            last = path[-1]
            for w in range(s + 1, n):
                bit = 1 << w
                if path_mask & bit or not adj[last] >> w & 1:
                    continue
                # w may touch the path only at `last`, plus s when closing
                others = adj[w] & path_mask & ~(1 << last)
                if others & ~(1 << s):
                    continue  # chord to an interior path vertex
                if others:
                    # w closes the cycle; one orientation per cycle
                    if path[1] < w:
                        yield tuple(path) + (w,)
                    continue  # extending past w would leave the sw chord
                path.append(w)
                yield from extend(path_mask | bit)
                path.pop()

        yield from extend(1 << s)


def find_induced_pan(g: Graph) -> Optional[PatternHit]:
    """Some induced k-pan (k >= 3) if one exists: a chordless cycle plus a
    vertex adjacent to exactly one cycle vertex."""
    best = None
    for cycle in _induced_cycles(g):
        k = len(cycle)
        cycle_mask = 0
        for v in cycle:
            cycle_mask |= 1 << v
        for p in range(g.n):
            if cycle_mask >> p & 1:
                continue
            touched = g.adj[p] & cycle_mask
            if touched.bit_count() != 1:
                continue
            attach = touched.bit_length() - 1
            i = cycle.index(attach)
            rotated = cycle[i:] + cycle[:i]
            hit = PatternHit(PAN, rotated + (p,), k=k)
            if best is None or (hit.k, hit.vertices) < (best.k, best.vertices):
                best = hit
    return best


# -- structural recognizers --------------------------------------------

@dataclass(frozen=True)
class ClassLabel:
    """Structural flags; the class-* flags require connectivity and are
    None for disconnected input."""

    star: Optional[bool]
    clique: Optional[bool]
    cycle_ge4: Optional[bool]
    tree: Optional[bool]
    forest: bool
    complete_bipartite: Optional[bool]
    complete_multipartite: Optional[bool]
    triangle_free: bool
    trivially_perfect: Optional[bool]
    class_a: Optional[bool]
    class_b: Optional[bool]
    class_c: Optional[bool]

    def to_dict(self) -> dict:
        return {
            "star": self.star, "clique": self.clique,
            "cycle_ge4": self.cycle_ge4, "tree": self.tree,
            "forest": self.forest,
            "complete_bipartite": self.complete_bipartite,
            "complete_multipartite": self.complete_multipartite,
            "triangle_free": self.triangle_free,
            "trivially_perfect": self.trivially_perfect,
            "class_a": self.class_a, "class_b": self.class_b,
            "class_c": self.class_c,
        }


def _is_clique_mask(g: Graph, mask: int) -> bool:
    m = mask
    while m:
        low = m & -m
        v = low.bit_length() - 1
        if (g.adj[v] & mask) != mask & ~low:
            return False
        m ^= low
    return True


def is_star(g: Graph) -> bool:
    if g.n <= 2:
        return True
    centers = [v for v in range(g.n) if g.degree(v) == g.n - 1]
    return (len(centers) == 1
            and g.edge_count == g.n - 1)


def is_clique(g: Graph) -> bool:
    return all(g.degree(v) == g.n - 1 for v in range(g.n))


def is_cycle_ge4(g: Graph) -> bool:
    return (g.n >= 4 and is_connected(g)
            and all(g.degree(v) == 2 for v in range(g.n)))


def is_forest(g: Graph) -> bool:
    # acyclic iff every component has |edges| = |vertices| - 1
    return g.edge_count == g.n - _component_count(g)


def _component_count(g: Graph) -> int:
    seen = 0
    count = 0
    for v in range(g.n):
        if seen >> v & 1:
            continue
        count += 1
        frontier = 1 << v
        seen |= frontier
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= g.adj[low.bit_length() - 1]
                m ^= low
            frontier = nxt & ~seen
            seen |= frontier
    return count


def is_complete_bipartite(g: Graph) -> bool:
    """Connected graphs only: 2-colorable and all cross pairs are edges."""
    if g.n == 0:
        return True
    color = [-1] * g.n
    color[0] = 0
    queue = [0]
    while queue:
        u = queue.pop()
        for v in range(g.n):
            if g.adj[u] >> v & 1:
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return False
    if -1 in color:
        return False  # disconnected; caller guards anyway
    a = sum(1 for c in color if c == 0)
    return g.edge_count == a * (g.n - a)


def is_complete_multipartite(g: Graph) -> bool:
    """Complement is a disjoint union of cliques."""
    comp = g.complement()
    seen = 0
    for v in range(comp.n):
        if seen >> v & 1:
            continue
        mask = 1 << v
        frontier = mask
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= comp.adj[low.bit_length() - 1]
                m ^= low
            frontier = nxt & ~mask
            mask |= frontier
        if not _is_clique_mask(comp, mask):
            return False
        seen |= mask
    return True


def is_triangle_free(g: Graph) -> bool:
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.adj[u] >> v & 1 and g.adj[u] & g.adj[v]:
                return False
    return True


def is_trivially_perfect(g: Graph) -> bool:
    """Universal-vertex peeling: every connected induced piece must have a
    universal vertex."""

    def peel(mask: int) -> bool:
        # split into components first
        rest = mask
        while rest:
            low = rest & -rest
            comp = low
            frontier = low
            while frontier:
                nxt = 0
                m = frontier
                while m:
                    b = m & -m
                    nxt |= g.adj[b.bit_length() - 1]
                    m ^= b
                frontier = nxt & mask & ~comp
                comp |= frontier
            if comp.bit_count() > 1:
                universal = 0
                m = comp
                while m:
                    b = m & -m
                    v = b.bit_length() - 1
                    if (g.adj[v] & comp) == comp & ~b:
                        universal = b
                        break
                    m ^= b
                if not universal:
                    return False
                if not peel(comp & ~universal):
                    return False
            rest &= ~comp
        return True

    return peel((1 << g.n) - 1)


def recognize_structure(g: Graph) -> ClassLabel:
    """All structural flags at once; connectivity-dependent flags are None
    on disconnected input."""
    connected = is_connected(g)
    forest = is_forest(g)
    triangle_free = is_triangle_free(g)
    if not connected:
        return ClassLabel(star=None, clique=None, cycle_ge4=None, tree=None,
                          forest=forest, complete_bipartite=None,
                          complete_multipartite=None,
                          triangle_free=triangle_free,
                          trivially_perfect=None, class_a=None, class_b=None,
                          class_c=None)
    star = is_star(g)
    clique = is_clique(g)
    cycle = is_cycle_ge4(g)
    tree = forest
    bipartite = is_complete_bipartite(g)
    multipartite = is_complete_multipartite(g)
    tp = is_trivially_perfect(g)
    return ClassLabel(
        star=star, clique=clique, cycle_ge4=cycle, tree=tree, forest=forest,
        complete_bipartite=bipartite, complete_multipartite=multipartite,
        triangle_free=triangle_free, trivially_perfect=tp,
        class_a=star or clique,
        class_b=tree or cycle or clique or bipartite,
        class_c=tp,
    )


@dataclass(frozen=True)
class PawFreeVerdict:
    verdict: str  # "triangle-free" | "complete-multipartite" | "contains-paw"
    hit: Optional[PatternHit] = None


def paw_free_decomposition(g: Graph) -> PawFreeVerdict:
    """Olariu's trichotomy for connected graphs."""
    if not is_connected(g):
        raise DisconnectedGraphError("paw_free_decomposition requires a connected graph")
    hit = find_induced_small(g, PAW)
    if hit is not None:
        return PawFreeVerdict("contains-paw", hit)
    if is_triangle_free(g):
        return PawFreeVerdict("triangle-free")
    if not is_complete_multipartite(g):
        raise AssertionError("paw-free graph neither triangle-free nor "
                             "complete multipartite; recognizer bug")
    return PawFreeVerdict("complete-multipartite")
