import os
from itertools import combinations

import pytest
from hypothesis import settings, strategies as st

from kempeideal.graph import Coloring, Graph

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


def pytest_collection_modifyitems(config, items):
    if os.environ.get("KEMPE_SLOW") == "1":
        return
    skip = pytest.mark.skip(reason="slow; set KEMPE_SLOW=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def labeled_graphs(d: int):
    """Every simple graph on vertices 1..d (2^(d choose 2) of them)."""
    pairs = list(combinations(range(1, d + 1), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(d, [p for i, p in enumerate(pairs) if bits >> i & 1])


@st.composite
def graphs(draw, min_d=1, max_d=5):
    d = draw(st.integers(min_d, max_d))
    pairs = list(combinations(range(1, d + 1), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(d, [p for p, keep in zip(pairs, chosen) if keep])


@st.composite
def graph_and_coloring(draw, min_d=1, max_d=5, max_k=4):
    """A graph with a proper coloring, built greedily from a random vertex order and palette."""
    G = draw(graphs(min_d, max_d))
    k = draw(st.integers(1, max_k))
    colors = {}
    for v in draw(st.permutations(list(G.vertices))):
        free = [c for c in range(k) if all(colors.get(u) != c for u in G.adjacency[v])]
        if not free:
            # leave v uncolored; the coloring then lives on an induced subgraph
            continue
        colors[v] = draw(st.sampled_from(free))
    return G, Coloring.from_map(colors, k)


# criterion number -> (passed, description); filled by the acceptance suite
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, text = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {text}")
