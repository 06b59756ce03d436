"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 resource cap hit, 3 internal
inconsistency (including a failing ``paper-suite`` item).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import catalog
from .errors import DomainError, KempeError
from .graph import Coloring, Graph
from .ideals import (IDEAL_NAMES, algorithm1_K, groebner, ideal_spec, order_from_spec,
                     stable_table)
from .kempe import (FIBER_NODE_CAP, are_equivalent, class_count, enumerate_class, hilbert_series,
                    kempe_basis, kempe_groebner, representative_system, switching_sequence)
from . import oracle
from .polyring import GroebnerBasis


# --- input -----------------------------------------------------------------

def _load_json(source: str, what: str):
    text = source
    if not source.lstrip().startswith(("{", "[")):
        try:
            text = Path(source).read_text(encoding="utf-8")
        except OSError as exc:
            raise DomainError(f"cannot read {what} file {source!r}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"malformed JSON in {what} at line {exc.lineno}, column {exc.colno}: "
                          f"{exc.msg}") from None


def parse_graph(source: str) -> Graph:
    if source in catalog.GRAPHS:
        return catalog.GRAPHS[source]()
    data = _load_json(source, "graph")
    if not isinstance(data, dict) or "vertices" not in data:
        raise DomainError('graph JSON must be an object with "vertices" and "edges"')
    d = data["vertices"]
    edges = data.get("edges", [])
    if not isinstance(d, int) or not isinstance(edges, list):
        raise DomainError('"vertices" must be an integer and "edges" a list')
    pairs = []
    for i, e in enumerate(edges):
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(v, int) for v in e)):
            raise DomainError(f"edges[{i}] must be a pair of integers")
        pairs.append(tuple(e))
    return Graph.from_edges(d, pairs)


def coloring_from_json(data, where: str = "coloring") -> Coloring:
    if not isinstance(data, dict) or not isinstance(data.get("classes"), list):
        raise DomainError(f'{where} must be an object with a "classes" list')
    classes = []
    for i, c in enumerate(data["classes"]):
        if not (isinstance(c, list) and all(isinstance(v, int) for v in c)):
            raise DomainError(f"{where}.classes[{i}] must be a list of integers")
        classes.append(tuple(c))
    return Coloring(tuple(classes))


def parse_coloring(source: str, G: Graph) -> Coloring:
    return coloring_from_json(_load_json(source, "coloring")).validate(G)


def parse_order(G: Graph, spec: str):
    table = stable_table(G)
    if spec == "bysize":
        return order_from_spec(table)
    data = _load_json(spec, "order")
    if not isinstance(data, list):
        raise DomainError("order must be a JSON list of stable sets, smallest variable first")
    return order_from_spec(table, [tuple(s) for s in data])


# --- output ----------------------------------------------------------------

def _set_label(S) -> str:
    return "{" + ",".join(map(str, S)) + "}"


def _poly_out(G: Graph, basis_order, polys) -> list:
    table = stable_table(G)
    return [{"text": p.to_text(basis_order, table.label),
             "terms": p.to_json(basis_order, lambda i: list(table[i]))} for p in polys]


def _coloring_out(f: Coloring) -> dict:
    return f.to_json()


def _emit(result: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(result, indent=2) + "\n")
        return
    for key, value in result.items():
        if isinstance(value, list) and value and isinstance(value[0], dict) and "text" in value[0]:
            out.write(f"{key}:\n")
            for item in value:
                out.write(f"  {item['text']}\n")
        elif isinstance(value, list) and value and isinstance(value[0], dict) and "classes" in value[0]:
            out.write(f"{key}:\n")
            for item in value:
                out.write("  " + " ".join(_set_label(c) for c in item["classes"]) + "\n")
        elif isinstance(value, list) and value and isinstance(value[0], dict) and "passed" in value[0]:
            for item in value:
                out.write(f"{'PASS' if item['passed'] else 'FAIL'} {item['name']}: {item['detail']}\n")
        elif isinstance(value, dict) and "classes" in value:
            out.write(f"{key}: " + " ".join(_set_label(c) for c in value["classes"]) + "\n")
        else:
            out.write(f"{key}: {json.dumps(value)}\n")


# --- subcommands -----------------------------------------------------------

def _basis(args, G: Graph) -> GroebnerBasis:
    return kempe_groebner(G, parse_order(G, args.order))


def cmd_stable_sets(args) -> dict:
    G = parse_graph(args.graph)
    table = stable_table(G)
    return {"count": len(table), "stable_sets": [list(S) for S in table]}


def cmd_ideal(args) -> dict:
    G = parse_graph(args.graph)
    order = parse_order(G, args.order)
    spec = ideal_spec(G, args.which)
    result = {"ideal": args.which, "generators": _poly_out(G, order, spec.generators)}
    if args.groebner:
        result["groebner"] = _poly_out(G, order, groebner(G, args.which, order).elements)
    return result


def cmd_groebner(args) -> dict:
    G = parse_graph(args.graph)
    order = parse_order(G, args.order)
    if args.method == "algorithm1":
        if args.which != "K":
            raise DomainError("--method algorithm1 only computes the Kempe ideal K")
        basis = algorithm1_K(G, order)
    else:
        basis = groebner(G, args.which, order)
    return {"ideal": args.which, "size": len(basis), "groebner": _poly_out(G, order, basis.elements)}


def cmd_equiv(args) -> dict:
    G = parse_graph(args.graph)
    f, g = parse_coloring(args.f, G), parse_coloring(args.g, G)
    return {"equivalent": are_equivalent(G, f, g, _basis(args, G))}


def cmd_reps(args) -> dict:
    G = parse_graph(args.graph)
    all_reps, full = representative_system(G, args.k, _basis(args, G))
    return {"k": args.k, "standard_monomials": len(all_reps),
            "all_reps": [_coloring_out(f) for f in all_reps],
            "full_reps": [_coloring_out(f) for f in full]}


def cmd_hilbert(args) -> dict:
    G = parse_graph(args.graph)
    return {"max_k": args.max_k, "hilbert": hilbert_series(G, args.max_k, _basis(args, G))}


def cmd_classes(args) -> dict:
    G = parse_graph(args.graph)
    basis = _basis(args, G)
    _, full = representative_system(G, args.k, basis)
    return {"k": args.k, "method": args.method, "count": class_count(G, args.k, basis, args.method),
            "representatives": [_coloring_out(f) for f in full]}


def cmd_class_of(args) -> dict:
    G = parse_graph(args.graph)
    f = parse_coloring(args.coloring, G)
    if args.k is not None and args.k != f.k:
        raise DomainError(f"coloring has {f.k} classes, --k says {args.k}")
    members = sorted(enumerate_class(G, f, _basis(args, G)), key=lambda c: c.classes)
    return {"k": f.k, "size": len(members), "class": [_coloring_out(c) for c in members]}


def cmd_kempe_basis(args) -> dict:
    G = parse_graph(args.graph)
    basis = _basis(args, G)
    kb = kempe_basis(G, basis, node_cap=args.fiber_cap)
    table = stable_table(G)
    return {"entries": [{"binomial": e.binomial.to_text(basis.order, table.label),
                         "sequence": [_coloring_out(c) for c in e.sequence]} for e in kb]}


def cmd_sequence(args) -> dict:
    G = parse_graph(args.graph)
    f, g = parse_coloring(args.f, G), parse_coloring(args.g, G)
    if args.k is not None and args.k != f.k:
        raise DomainError(f"colorings have {f.k} classes, --k says {args.k}")
    basis = _basis(args, G)
    kb = None
    if f != g and are_equivalent(G, f, g, basis):
        kb = kempe_basis(G, basis, node_cap=args.fiber_cap)
    seq = switching_sequence(G, f, g, basis, kb)
    if seq is None:
        return {"equivalent": False, "sequence": None}
    return {"equivalent": True, "length": len(seq), "sequence": [_coloring_out(c) for c in seq]}


def _caps(args) -> dict:
    return {"max_vertices": args.oracle_max_vertices, "max_colors": args.oracle_max_colors}


def cmd_oracle_classes(args) -> dict:
    G = parse_graph(args.graph)
    kg = oracle.classes_bruteforce(G, args.k, **_caps(args))
    return {"k": args.k, "colorings": len(kg.nodes), "count": len(kg),
            "classes": [[_coloring_out(c) for c in comp] for comp in kg.components]}


def cmd_oracle_equiv(args) -> dict:
    G = parse_graph(args.graph)
    f, g = parse_coloring(args.f, G), parse_coloring(args.g, G)
    oracle.all_colorings(G, f.k, f.support, **_caps(args))  # enforce the caps up front
    return {"equivalent": oracle.are_equivalent_bruteforce(G, f, g)}


def cmd_oracle_verify(args) -> dict:
    G = parse_graph(args.graph)
    data = _load_json(args.seq, "sequence")
    if not isinstance(data, list):
        raise DomainError("sequence file must be a JSON array of colorings")
    seq = [coloring_from_json(c, f"sequence[{i}]") for i, c in enumerate(data)]
    ok, index = oracle.verify_sequence(G, seq)
    return {"valid": ok, "first_failure": index}


def cmd_suite(args) -> dict:
    from .suite import run_suite
    items = run_suite(args.only)
    return {"passed": all(i["passed"] for i in items), "items": items}


# --- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--order", default="bysize",
                        help='"bysize" or a JSON list (inline or file) of stable sets, smallest first')
    common.add_argument("--fiber-cap", type=int, default=FIBER_NODE_CAP)
    common.add_argument("--oracle-max-vertices", type=int, default=oracle.MAX_VERTICES)
    common.add_argument("--oracle-max-colors", type=int, default=oracle.MAX_COLORS)

    parser = argparse.ArgumentParser(prog="kempeideal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, func, help_, graph=True):
        p = sub.add_parser(name, parents=[common], help=help_)
        if graph:
            p.add_argument("--graph", required=True,
                           help="graph JSON (file or inline) or a catalog name such as 'prism'")
        p.set_defaults(func=func)
        return p

    cmd("stable-sets", cmd_stable_sets, "list the stable sets (the ring variables)")
    p = cmd("ideal", cmd_ideal, "generators of L, J, M, K, Q2 or I")
    p.add_argument("--which", choices=IDEAL_NAMES, required=True)
    p.add_argument("--groebner", action="store_true", help="also print the reduced Gröbner basis")
    p = cmd("groebner", cmd_groebner, "reduced Gröbner basis of an ideal")
    p.add_argument("--which", choices=IDEAL_NAMES, default="K")
    p.add_argument("--method", choices=("direct", "algorithm1"), default="direct")
    p = cmd("equiv", cmd_equiv, "decide Kempe equivalence of two colorings")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p = cmd("reps", cmd_reps, "complete representative system for k colors")
    p.add_argument("--k", type=int, required=True)
    p = cmd("hilbert", cmd_hilbert, "Hilbert function of R/K for k = 0..max-k")
    p.add_argument("--max-k", type=int, required=True)
    p = cmd("classes", cmd_classes, "number of Kempe classes")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=("a", "b"), default="a")
    p = cmd("class-of", cmd_class_of, "all colorings in the Kempe class of one coloring")
    p.add_argument("--coloring", required=True)
    p.add_argument("--k", type=int)
    cmd("kempe-basis", cmd_kempe_basis, "switching sequence for every binomial of the basis")
    p = cmd("sequence", cmd_sequence, "explicit Kempe switchings between two colorings")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--k", type=int)

    po = sub.add_parser("oracle", help="brute-force ground truth")
    osub = po.add_subparsers(dest="oracle_command", required=True)
    for name, func, help_ in (("classes", cmd_oracle_classes, "Kempe classes by exhaustive search"),
                              ("equiv", cmd_oracle_equiv, "equivalence by breadth-first search"),
                              ("verify", cmd_oracle_verify, "check a switching sequence")):
        p = osub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--graph", required=True)
        p.set_defaults(func=func)
        if name == "classes":
            p.add_argument("--k", type=int, required=True)
        elif name == "equiv":
            p.add_argument("--f", required=True)
            p.add_argument("--g", required=True)
        else:
            p.add_argument("--seq", required=True)

    p = cmd("paper-suite", cmd_suite, "run the bundled regression items", graph=False)
    p.add_argument("--only", action="append", help="run only this item (repeatable)")
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except KempeError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return exc.exit_code
    _emit(result, args.format, out)
    if args.command == "paper-suite" and not result["passed"]:
        return 3
    return 0


def main() -> None:
    sys.exit(run())
