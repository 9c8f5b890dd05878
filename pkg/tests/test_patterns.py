import pytest

from searchorder import (
    C4,
    DIAMOND,
    DisconnectedGraphError,
    Graph,
    P4,
    PAN,
    PAW,
    find_induced_pan,
    find_induced_small,
    induced_subgraph,
    paw_free_decomposition,
    recognize_structure,
)
from smallgraphs import (
    complete,
    complete_bipartite,
    complete_multipartite,
    cycle,
    diamond,
    pan,
    path,
    paw,
    sixcycle_with_handle,
    star,
)

PATTERN_BUILDERS = {P4: path(4), C4: cycle(4), PAW: paw(), DIAMOND: diamond()}


class TestSmallPatternDetector:
    @pytest.mark.parametrize("pattern", [P4, C4, PAW, DIAMOND])
    def test_identity_embedding(self, pattern):
        hit = find_induced_small(PATTERN_BUILDERS[pattern], pattern)
        assert hit is not None
        assert sorted(hit.vertices) == [0, 1, 2, 3]

    def test_c5_contains_p4(self):
        hit = find_induced_small(cycle(5), P4)
        assert hit is not None
        a, b, c, d = hit.vertices
        g = cycle(5)
        assert g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d)
        assert not (g.has_edge(a, c) or g.has_edge(a, d) or g.has_edge(b, d))

    def test_k4_has_no_diamond(self):
        assert find_induced_small(complete(4), DIAMOND) is None

    def test_c4_has_no_p4(self):
        assert find_induced_small(cycle(4), P4) is None

    def test_unknown_pattern_rejected(self):
        with pytest.raises(ValueError):
            find_induced_small(cycle(4), "house")

    @pytest.mark.parametrize("pattern", [P4, C4, PAW, DIAMOND])
    def test_hits_induce_the_pattern(self, pattern, graphs_upto_6):
        """Every reported embedding really induces the named pattern."""
        reference = PATTERN_BUILDERS[pattern]
        for g in graphs_upto_6:
            hit = find_induced_small(g, pattern)
            if hit is None:
                continue
            sub, mapping = induced_subgraph(g, hit.vertices)
            relabeled = {tuple(sorted((mapping[hit.vertices[i]],
                                       mapping[hit.vertices[j]])))
                         for i, j in reference.edges()}
            assert {tuple(e) for e in sub.edges()} == relabeled


class TestPanDetector:
    def test_paw_is_a_3_pan(self):
        hit = find_induced_pan(paw())
        assert hit is not None
        assert hit.pattern == PAN
        assert hit.k == 3

    def test_6_pan(self):
        hit = find_induced_pan(pan(6))
        assert hit is not None and hit.k == 6

    def test_handle_graph_minus_u_is_a_6_pan(self):
        g, _ = induced_subgraph(sixcycle_with_handle(), [0, 1, 2, 3, 4, 5, 7])
        hit = find_induced_pan(g)
        assert hit is not None and hit.k == 6

    def test_plain_cycle_has_no_pan(self):
        assert find_induced_pan(cycle(6)) is None

    def test_hit_shape(self):
        g = pan(5)
        hit = find_induced_pan(g)
        cycle_part, pendant = hit.vertices[:-1], hit.vertices[-1]
        assert len(cycle_part) == hit.k
        # cyclic order with the pendant attached to the first cycle vertex
        for i, v in enumerate(cycle_part):
            assert g.has_edge(v, cycle_part[(i + 1) % hit.k])
        assert g.has_edge(pendant, cycle_part[0])
        assert sum(g.has_edge(pendant, v) for v in cycle_part) == 1


class TestRecognizers:
    def test_star(self):
        label = recognize_structure(star(3))
        assert label.star and label.tree and not label.clique
        assert label.class_a and label.class_b and label.class_c

    def test_clique(self):
        label = recognize_structure(complete(5))
        assert label.clique and label.class_a and label.class_b and label.class_c

    def test_c6(self):
        label = recognize_structure(cycle(6))
        assert label.cycle_ge4 and label.class_b
        assert not label.class_a and not label.class_c

    def test_c4(self):
        label = recognize_structure(cycle(4))
        assert label.complete_bipartite and label.class_b
        assert not label.class_c and not label.class_a

    def test_6_pan(self):
        label = recognize_structure(pan(6))
        assert not label.class_b

    def test_complete_multipartite(self):
        octahedron = complete_multipartite(2, 2, 2)
        label = recognize_structure(octahedron)
        assert label.complete_multipartite
        assert not label.complete_bipartite

    def test_trivially_perfect_peeling(self):
        # universal vertex over (K1 + P3): peels to a disconnected P3+K1
        g = Graph(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3)])
        assert recognize_structure(g).trivially_perfect

    def test_disconnected_flags_unavailable(self):
        label = recognize_structure(Graph(4, [(0, 1), (2, 3)]))
        assert label.class_a is None and label.class_b is None
        assert label.class_c is None and label.star is None
        assert label.forest is True

    def test_class_a_implies_class_b_and_c(self, graphs_upto_7):
        for g in graphs_upto_7:
            label = recognize_structure(g)
            if label.class_a:
                assert label.class_b and label.class_c, g


class TestStructuralAgainstDetectors:
    """The structural recognizers and the brute-force detectors are
    independent paths to the same classes; they must agree exhaustively."""

    def test_class_a_is_p4_c4_paw_diamond_free(self, graphs_upto_7):
        for g in graphs_upto_7:
            free = all(find_induced_small(g, p) is None
                       for p in (P4, C4, PAW, DIAMOND))
            assert free == recognize_structure(g).class_a, g

    def test_class_b_is_pan_diamond_free(self, graphs_upto_7):
        for g in graphs_upto_7:
            free = (find_induced_pan(g) is None
                    and find_induced_small(g, DIAMOND) is None)
            assert free == recognize_structure(g).class_b, g

    def test_class_c_is_p4_c4_free(self, graphs_upto_7):
        for g in graphs_upto_7:
            free = (find_induced_small(g, P4) is None
                    and find_induced_small(g, C4) is None)
            assert free == recognize_structure(g).trivially_perfect, g

    def test_paw_free_trichotomy(self, graphs_upto_7):
        for g in graphs_upto_7:
            verdict = paw_free_decomposition(g)
            if verdict.verdict == "contains-paw":
                assert verdict.hit is not None
                assert find_induced_small(g, PAW) is not None
            else:
                assert find_induced_small(g, PAW) is None


class TestPawFreeDecomposition:
    def test_c5_triangle_free(self):
        assert paw_free_decomposition(cycle(5)).verdict == "triangle-free"

    def test_octahedron_complete_multipartite(self):
        verdict = paw_free_decomposition(complete_multipartite(2, 2, 2))
        assert verdict.verdict == "complete-multipartite"

    def test_paw_contains_paw(self):
        verdict = paw_free_decomposition(paw())
        assert verdict.verdict == "contains-paw"
        assert sorted(verdict.hit.vertices) == [0, 1, 2, 3]

    def test_rejects_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            paw_free_decomposition(Graph(2))


def test_complete_bipartite_recognizer(graphs_upto_6):
    """Independent oracle for connected graphs: vertex 0's non-neighbors
    (plus 0 itself) must form one independent side, the neighbors the
    other, with every cross pair an edge."""
    from searchorder.patterns import is_complete_bipartite
    for g in graphs_upto_6:
        if g.n == 1:
            continue
        side0 = {0} | {v for v in range(1, g.n) if not g.has_edge(0, v)}
        side1 = set(range(g.n)) - side0
        expected = (
            all(not g.has_edge(u, v) for u in side0 for v in side0 if u < v)
            and all(not g.has_edge(u, v) for u in side1 for v in side1 if u < v)
            and all(g.has_edge(u, v) for u in side0 for v in side1))
        assert is_complete_bipartite(g) == expected, g
