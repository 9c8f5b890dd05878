"""Inclusion/equality of ordering sets between search kinds, and the
per-graph theorem checks that compare structural prediction with
enumerated behavior.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .graphs import Graph, VertexOrdering, require_connected
from .searches import SearchKind, enumerate_orderings, DEFAULT_CAP
from .validators import PointViolation, is_search_ordering
from .patterns import recognize_structure


class SizeGuardError(ValueError):
    pass


def _guard(g: Graph, max_n: int, allow_large: bool) -> None:
    require_connected(g)
    if g.n > max_n and not allow_large:
        raise SizeGuardError(
            f"n={g.n} exceeds the size guard ({max_n}); pass allow_large=True "
            "to override")


@dataclass(frozen=True)
class EquivalenceReport:
    kind_x: SearchKind
    kind_y: SearchKind
    relation: str  # "subset" | "equal"
    verdict: bool
    witness_ordering: Optional[tuple[int, ...]] = None
    witness_violation: Optional[PointViolation] = None
    witness_vertex: Optional[int] = None  # generic/MCS failures
    truncated: bool = False

    def to_dict(self) -> dict:
        return {
            "kind_x": self.kind_x.value,
            "kind_y": self.kind_y.value,
            "relation": self.relation,
            "verdict": self.verdict,
            "witness_ordering": (list(self.witness_ordering)
                                 if self.witness_ordering else None),
            "witness_violation": (self.witness_violation.to_dict()
                                  if self.witness_violation else None),
            "witness_vertex": self.witness_vertex,
            "truncated": self.truncated,
        }


def _one_direction(g: Graph, kind_x: SearchKind, kind_y: SearchKind,
                   relation: str, cap: int) -> EquivalenceReport:
    """Enumerate kind_x orderings and validate each against kind_y; a failing
    ordering comes with its violating triple for free."""
    enum = enumerate_orderings(g, kind_x, cap=cap)
    for ordering in enum.orderings:  # already lexicographically sorted
        ok, witness = is_search_ordering(g, ordering, kind_y)
        if not ok:
            violation = witness if isinstance(witness, PointViolation) else None
            vertex = witness if isinstance(witness, int) else None
            return EquivalenceReport(kind_x, kind_y, relation, False,
                                     witness_ordering=ordering,
                                     witness_violation=violation,
                                     witness_vertex=vertex,
                                     truncated=enum.truncated)
    return EquivalenceReport(kind_x, kind_y, relation, True,
                             truncated=enum.truncated)


def orderings_subset(g: Graph, kind_x: SearchKind, kind_y: SearchKind,
                     cap: int = DEFAULT_CAP, max_n: int = 8,
                     allow_large: bool = False) -> EquivalenceReport:
    """Is every kind_x ordering of g a kind_y ordering?"""
    _guard(g, max_n, allow_large)
    return _one_direction(g, kind_x, kind_y, "subset", cap)


def orderings_equal(g: Graph, kind_x: SearchKind, kind_y: SearchKind,
                    cap: int = DEFAULT_CAP, max_n: int = 8,
                    allow_large: bool = False) -> EquivalenceReport:
    """Do kind_x and kind_y produce identical ordering sets on g?"""
    _guard(g, max_n, allow_large)
    forward = _one_direction(g, kind_x, kind_y, "equal", cap)
    if not forward.verdict:
        return forward
    backward = _one_direction(g, kind_y, kind_x, "equal", cap)
    if not backward.verdict:
        return backward
    return EquivalenceReport(kind_x, kind_y, "equal", True,
                             truncated=forward.truncated or backward.truncated)


# -- theorem checks ----------------------------------------------------

THEOREM_A = "A"
THEOREM_B = "B"
THEOREM_C = "C"
COROLLARY_A5A6 = "corollary"

# item label -> (kind_x, kind_y, relation)
_THEOREM_ITEMS = {
    THEOREM_A: [
        ("A2: generic subset-of dfs", SearchKind.GENERIC, SearchKind.DFS, "subset"),
        ("A3: generic subset-of bfs", SearchKind.GENERIC, SearchKind.BFS, "subset"),
        ("A4: bfs equals dfs", SearchKind.BFS, SearchKind.DFS, "equal"),
    ],
    THEOREM_B: [
        ("B2: dfs subset-of lexdfs", SearchKind.DFS, SearchKind.LEXDFS, "subset"),
        ("B3: bfs subset-of lexbfs", SearchKind.BFS, SearchKind.LEXBFS, "subset"),
        ("B4: generic subset-of mns", SearchKind.GENERIC, SearchKind.MNS, "subset"),
    ],
    THEOREM_C: [
        ("C2: mns subset-of lexdfs", SearchKind.MNS, SearchKind.LEXDFS, "subset"),
        ("C3: mns subset-of lexbfs", SearchKind.MNS, SearchKind.LEXBFS, "subset"),
    ],
    COROLLARY_A5A6: [
        ("A5: generic subset-of lexdfs", SearchKind.GENERIC, SearchKind.LEXDFS, "subset"),
        ("A6: generic subset-of lexbfs", SearchKind.GENERIC, SearchKind.LEXBFS, "subset"),
    ],
}

_THEOREM_PREDICTION_FLAG = {
    THEOREM_A: "class_a",
    THEOREM_B: "class_b",
    THEOREM_C: "class_c",
    COROLLARY_A5A6: "class_a",
}

THEOREMS = tuple(_THEOREM_ITEMS)


@dataclass(frozen=True)
class TheoremReport:
    theorem: str
    structural_prediction: bool
    items: tuple[tuple[str, bool], ...]
    reports: tuple[EquivalenceReport, ...] = field(repr=False, default=())

    @property
    def consistent(self) -> bool:
        return all(value == self.structural_prediction for _, value in self.items)

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "structural_prediction": self.structural_prediction,
            "items": [{"item": name, "holds": value} for name, value in self.items],
            "consistent": self.consistent,
        }


def check_theorem(g: Graph, theorem: str, cap: int = DEFAULT_CAP,
                  max_n: int = 8, allow_large: bool = False) -> TheoremReport:
    """Compare a theorem's structural class prediction against the
    enumerated behavior of every numbered item."""
    if theorem not in _THEOREM_ITEMS:
        raise ValueError(f"unknown theorem {theorem!r}; one of {THEOREMS}")
    _guard(g, max_n, allow_large)
    label = recognize_structure(g)
    prediction = bool(getattr(label, _THEOREM_PREDICTION_FLAG[theorem]))
    items = []
    reports = []
    for name, kx, ky, relation in _THEOREM_ITEMS[theorem]:
        if relation == "subset":
            report = _one_direction(g, kx, ky, relation, cap)
        else:
            report = orderings_equal(g, kx, ky, cap=cap, max_n=max_n,
                                     allow_large=True)
        items.append((name, report.verdict))
        reports.append(report)
    return TheoremReport(theorem, prediction, tuple(items), tuple(reports))


def find_mns_not_mcs(g: Graph, cap: int = DEFAULT_CAP, max_n: int = 8,
                     allow_large: bool = False) -> Optional[VertexOrdering]:
    """Lexicographically first ordering that is MNS-valid but MCS-invalid."""
    _guard(g, max_n, allow_large)
    enum = enumerate_orderings(g, SearchKind.MNS, cap=cap)
    for ordering in enum.orderings:
        ok, _ = is_search_ordering(g, ordering, SearchKind.MCS)
        if not ok:
            return VertexOrdering(ordering)
    return None
