"""Regression items for ``kempeideal paper-suite``.

Each item recomputes a published worked example and compares it to the
frozen value below.
"""
from __future__ import annotations

from itertools import combinations

from . import catalog, oracle
from .errors import DomainError
from .graph import Coloring, induced_subgraph
from .ideals import classify_chain, stable_table
from .kempe import are_equivalent, class_count, hilbert, hilbert_series, representative_system

PRISM_STABLE_SETS = [
    (), (1,), (2,), (3,), (4,), (5,), (6,),
    (1, 5), (1, 6), (2, 4), (2, 6), (3, 4), (3, 5),
]
PRISM_HILBERT = [1, 13, 49, 65, 64, 64]
PRISM_FULL_REPS = {Coloring.of([1, 5], [2, 6], [3, 4]), Coloring.of([1, 6], [2, 4], [3, 5])}
CHAIN_EXPECTED = {"K4": "(i)", "K33": "(ii)", "P4": "(iii)", "co-C6": "(iv)", "C6": "(v)"}


def _stable_sets():
    got = list(stable_table(catalog.prism()))
    return got == PRISM_STABLE_SETS, f"{len(got)} stable sets"


def _equiv():
    a = are_equivalent(catalog.prism_minus_edge(), catalog.F, catalog.G_EQUIVALENT)
    b = are_equivalent(catalog.prism(), catalog.F, catalog.G_INEQUIVALENT)
    return a and not b, f"equivalent pair -> {a}, inequivalent pair -> {b}"


def _reps():
    all_reps, full = representative_system(catalog.prism(), 3)
    return len(all_reps) == 65 and set(full) == PRISM_FULL_REPS, \
        f"{len(all_reps)} standard monomials, {len(full)} covering all vertices"


def _hilbert():
    got = hilbert_series(catalog.prism(), 5)
    return got == PRISM_HILBERT, f"{got}"


def _induced_hilbert():
    G = catalog.prism()
    got = [hilbert(induced_subgraph(G, W)[0], 3) for W in combinations(G.vertices, 5)]
    return got == [32] * 6, f"{got}"


def _classes():
    G = catalog.prism()
    got = {(k, m): class_count(G, k, method=m) for k in (3, 4, 5) for m in "ab"}
    brute = len(oracle.classes_bruteforce(G, 3))
    ok = brute == 2 and all(v == (2 if k == 3 else 1) for (k, _), v in got.items())
    return ok, f"k=3: {got[3, 'a']}/{got[3, 'b']}/oracle {brute}; k=4: {got[4, 'a']}; k=5: {got[5, 'a']}"


def _chain():
    got = {name: classify_chain(catalog.GRAPHS[name]()) for name in CHAIN_EXPECTED}
    return got == CHAIN_EXPECTED, ", ".join(f"{n} {c}" for n, c in got.items())


ITEMS = {
    "stable-sets": _stable_sets,
    "equiv": _equiv,
    "reps": _reps,
    "hilbert": _hilbert,
    "induced-hilbert": _induced_hilbert,
    "classes": _classes,
    "chain": _chain,
}


def run_suite(only=None) -> list:
    names = list(ITEMS) if not only else list(dict.fromkeys(only))
    unknown = [n for n in names if n not in ITEMS]
    if unknown:
        raise DomainError(f"unknown suite item(s) {', '.join(unknown)}; choose from {', '.join(ITEMS)}")
    out = []
    for name in names:
        ok, detail = ITEMS[name]()
        out.append({"name": name, "passed": bool(ok), "detail": detail})
    return out
