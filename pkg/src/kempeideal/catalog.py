"""Named graphs and colorings used by the CLI and the regression suite."""
from .graph import (Coloring, Graph, complete_bipartite_graph, complete_graph, cycle_graph,
                    path_graph)


def prism() -> Graph:
    """Triangular prism: triangles 1-2-3 and 4-5-6 joined by 1-4, 2-5, 3-6."""
    return Graph.from_edges(6, [(1, 2), (2, 3), (1, 3), (1, 4), (2, 5), (3, 6),
                                (4, 5), (4, 6), (5, 6)])


def prism_minus_edge() -> Graph:
    """The prism without the edge 1-3."""
    return Graph.from_edges(6, [(1, 2), (2, 3), (1, 4), (2, 5), (3, 6),
                                (4, 5), (4, 6), (5, 6)])


def twelve_vertex_graph() -> Graph:
    """Two triangles joined by three disjoint paths of length three (12 vertices)."""
    # left triangle 1,2,3; right triangle 10,11,12; paths 1-4-7-10, 2-5-8-11, 3-6-9-12
    edges = [(1, 2), (2, 3), (1, 3), (10, 11), (11, 12), (10, 12)]
    for a in (1, 2, 3):
        edges += [(a, a + 3), (a + 3, a + 6), (a + 6, a + 9)]
    return Graph.from_edges(12, edges)


GRAPHS = {
    "prism": prism,
    "prism-minus-edge": prism_minus_edge,
    "K4": lambda: complete_graph(4),
    "K33": lambda: complete_bipartite_graph(3, 3),
    "P3": lambda: path_graph(3),
    "P4": lambda: path_graph(4),
    "C6": lambda: cycle_graph(6),
    "co-C6": lambda: cycle_graph(6).complement(),
    "twelve": twelve_vertex_graph,
}

# f ~ g on prism_minus_edge, f !~ g' on prism
F = Coloring.of([1, 5], [2, 6], [3, 4])
G_EQUIVALENT = Coloring.of([1, 3, 5], [2, 6], [4])
G_INEQUIVALENT = Coloring.of([1, 6], [2, 4], [3, 5])
