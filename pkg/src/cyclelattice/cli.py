"""Command-line surface: analyze, basis, verify, extend, hull, gen.

Exit codes: 0 ok, 1 usage, 2 input-structure problem, 3 verification
failure.  Determinants are serialized as decimal strings so arbitrary
precision survives JSON.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .cycle_structure import (
    bridges_and_series_classes,
    cosimplify,
    is_simple_cycle,
    is_three_edge_connected,
)
from .errors import (
    ArgumentError,
    CapacityError,
    CycleLatticeError,
    ParseError,
    PreconditionError,
    StructureError,
)
from .lattice_basis import (
    CycleBasis,
    Provenance,
    indicator_matrix,
    lift_basis,
    semi_fundamental_basis,
    simple_basis,
    spanning_forest,
)
from .linear_hull import AbelianGroupSpec, FieldSpec, hull_report
from .multigraph import (
    Multigraph,
    component_subgraphs,
    connected_components,
    format_edge_list,
    is_connected,
    parse_edge_list,
)
from .oracle import (
    IntegerMatrix,
    enumerate_cycles,
    exact_determinant,
    group_span_size,
    hermite_normal_form,
    hnf_lattices_equal,
    rank_mod_p,
)
from .topo_extension import compatible_chain, gen

HNF_ORACLE_EDGE_LIMIT = 14


@dataclass(frozen=True)
class RunConfig:
    """Parsed invocation; method applies to `basis`, seed to `gen`."""

    command: str
    input_path: str | None = None
    basis_path: str | None = None
    method: str = "semi-fundamental"
    characteristic: int | None = None
    group: str | None = None
    steps: int = 8
    seed: int = 0
    count: int = 1
    max_vertices: int | None = None
    tree_seed: str | None = None
    output: str = "json"
    verify_flag: bool = False


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> _Parser:
    parser = _Parser(prog="cyclelattice")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="bridges, series classes, connectivity")
    p.add_argument("input")
    p.add_argument("--output", choices=["json", "text"], default="json")

    p = sub.add_parser("basis", help="construct a lattice cycle basis")
    p.add_argument("input")
    p.add_argument(
        "--method",
        choices=["simple", "semi-fundamental", "topological"],
        default="semi-fundamental",
    )
    p.add_argument("--tree-seed", default=None, help="preferred spanning-tree root")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--output", choices=["json", "text"], default="json")

    p = sub.add_parser("verify", help="check a candidate basis document")
    p.add_argument("input")
    p.add_argument("basis")
    p.add_argument("--output", choices=["json", "text"], default="json")

    p = sub.add_parser("extend", help="extension sequence and compatible chain")
    p.add_argument("input")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--output", choices=["json", "text"], default="json")

    p = sub.add_parser("hull", help="linear hull dimensions / group structure")
    p.add_argument("input")
    p.add_argument("--char", type=int, default=None)
    p.add_argument("--group", default=None)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--output", choices=["json", "text"], default="json")

    p = sub.add_parser("gen", help="random 3-edge-connected instances")
    p.add_argument("--steps", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--max-vertices", type=int, default=None)
    p.add_argument("--output", choices=["json", "text"], default="text")
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        input_path=getattr(args, "input", None),
        basis_path=getattr(args, "basis", None),
        method=getattr(args, "method", "semi-fundamental"),
        characteristic=getattr(args, "char", None),
        group=getattr(args, "group", None),
        steps=getattr(args, "steps", 8),
        seed=getattr(args, "seed", 0),
        count=getattr(args, "count", 1),
        max_vertices=getattr(args, "max_vertices", None),
        tree_seed=getattr(args, "tree_seed", None),
        output=getattr(args, "output", "json"),
        verify_flag=getattr(args, "verify", False),
    )


def _emit(doc: dict, config: RunConfig):
    if config.output == "json":
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for line in _as_text(doc):
            print(line)


def _as_text(doc: dict, prefix: str = ""):
    for key in sorted(doc):
        value = doc[key]
        if isinstance(value, dict):
            yield f"{prefix}{key}:"
            yield from _as_text(value, prefix + "  ")
        elif isinstance(value, list) and value and isinstance(value[0], (dict, list)):
            yield f"{prefix}{key}: ({len(value)} entries)"
            for item in value:
                if isinstance(item, dict):
                    yield from _as_text(item, prefix + "  ")
                else:
                    yield f"{prefix}  {item}"
        else:
            yield f"{prefix}{key}: {value}"


def _load_graph(path: str) -> Multigraph:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_edge_list(handle.read())


def _resolve_vertex(G: Multigraph, token: str) -> int:
    if G.labels:
        for v, label in G.labels.items():
            if label == token:
                return v
    try:
        v = int(token)
    except ValueError:
        raise ArgumentError(f"unknown vertex token {token!r}") from None
    if v not in set(G.vertices):
        raise ArgumentError(f"unknown vertex {token!r}")
    return v


def _require_connected(G: Multigraph):
    if not is_connected(G):
        comps = connected_components(G)
        listing = "; ".join(
            "{" + ",".join(G.label_of(v) for v in vs) + "}" for vs, _ in comps
        )
        raise StructureError(f"graph is disconnected: components {listing}")


# ---------------------------------------------------------------------------
# basis construction and certification shared by basis/verify/extend
# ---------------------------------------------------------------------------


def _vector_entries_of_basis(basis: CycleBasis) -> list[dict]:
    return [
        {"edges": sorted(cycle), "provenance": tag.label()}
        for cycle, tag in zip(basis.cycles, basis.provenance)
    ]


def _entry_vector(entry: dict) -> dict[int, int]:
    mult = entry.get("multiplier", 1)
    return {e: mult for e in entry["edges"]}


def _project_vectors_to_hat(G: Multigraph, vectors: list[dict[int, int]]):
    """Project vectors through the cosimplification; None when impossible."""
    cos = cosimplify(G)
    partition = bridges_and_series_classes(G)
    projected: list[dict[int, int]] = []
    for vec in vectors:
        for e in partition.bridges:
            if vec.get(e, 0) != 0:
                return None, cos
        proj: dict[int, int] = {}
        ok = True
        for cls in partition.classes:
            values = {vec.get(e, 0) for e in cls}
            if len(values) != 1:
                ok = False
                break
            value = values.pop()
            if value:
                rep = cos.projection[next(iter(cls))]
                proj[rep] = value
        if not ok:
            return None, cos
        projected.append(proj)
    return projected, cos


def _component_determinants(
    hat: Multigraph, vectors: list[dict[int, int]]
) -> tuple[list[tuple[int, int, bool]], bool]:
    """Per-component (det, expected, ok) over the cosimplified graph."""
    results = []
    all_ok = True
    comps = component_subgraphs(hat)
    for comp in comps:
        comp_edges = set(comp.edges)
        comp_vecs = [v for v in vectors if v and set(v) <= comp_edges]
        expected = 2 ** (comp.n - 1)
        if len(comp_vecs) != comp.m:
            results.append((0, expected, False))
            all_ok = False
            continue
        M = IntegerMatrix.from_vectors(comp_vecs, list(comp.sorted_edges))
        det = abs(exact_determinant(M))
        ok = det == expected
        results.append((det, expected, ok))
        all_ok = all_ok and ok
    return results, all_ok


def _certify_vectors(G: Multigraph, vectors: list[dict[int, int]]):
    """Determinant certification of basis vectors, via the cosimplification.

    Returns (determinant_string, ok).  For a 3-edge-connected graph this is
    the exact m x m determinant against 2^(n-1); otherwise the vectors are
    projected to the cosimplification and certified per component.
    """
    if is_three_edge_connected(G):
        if len(vectors) != G.m:
            return "0", False
        M = IntegerMatrix.from_vectors(vectors, list(G.sorted_edges))
        det = abs(exact_determinant(M))
        return str(det), det == 2 ** (G.n - 1)
    projected, cos = _project_vectors_to_hat(G, vectors)
    if projected is None:
        return "0", False
    results, all_ok = _component_determinants(cos.hat_graph, projected)
    total = 1
    for det, _expected, _ok in results:
        total *= det
    return str(total), all_ok


def _build_basis(G: Multigraph, config: RunConfig) -> tuple[list[dict], CycleBasis | None]:
    """Entries for the JSON document plus the CycleBasis when cycles-only."""
    root = _resolve_vertex(G, config.tree_seed) if config.tree_seed else None
    T = spanning_forest(G, prefer_root=root)
    if config.method == "simple":
        if is_three_edge_connected(G):
            sb = simple_basis(G, T)
            entries = [
                {"edges": [t], "provenance": Provenance("doubled", t=t).label(), "multiplier": 2}
                for t in sb.doubled_part
            ]
            entries.extend(
                {"edges": sorted(cyc), "provenance": Provenance("fundamental", e=e).label()}
                for e, cyc in sb.cycle_part
            )
            return entries, None
        cos = cosimplify(G, forest=T)
        comps = component_subgraphs(cos.hat_graph)
        entries = []
        for comp in comps:
            comp_T = spanning_forest(comp)
            sb = simple_basis(comp, comp_T)
            for t in sb.doubled_part:
                entries.append(
                    {
                        "edges": sorted(cos.section[t]),
                        "provenance": Provenance("doubled", t=t).label(),
                        "multiplier": 2,
                    }
                )
            for e, cyc in sb.cycle_part:
                entries.append(
                    {
                        "edges": sorted(cos.lift_edges(cyc)),
                        "provenance": "lifted",
                    }
                )
        return entries, None
    if config.method == "semi-fundamental":
        basis, _triples = semi_fundamental_basis(G, T)
        return _vector_entries_of_basis(basis), basis
    # topological
    if is_three_edge_connected(G):
        basis = compatible_chain(G, keep_prefixes=False).final_basis
        return _vector_entries_of_basis(basis), basis
    cos = cosimplify(G, forest=T)
    comps = component_subgraphs(cos.hat_graph)
    comp_bases = [
        compatible_chain(comp, keep_prefixes=False).final_basis for comp in comps
    ]
    basis = lift_basis(cos, comp_bases)
    return _vector_entries_of_basis(basis), basis


def cmd_basis(config: RunConfig) -> int:
    G = _load_graph(config.input_path)
    _require_connected(G)
    root = _resolve_vertex(G, config.tree_seed) if config.tree_seed else None
    T = spanning_forest(G, prefer_root=root)
    entries, _basis = _build_basis(G, config)
    vectors = [_entry_vector(entry) for entry in entries]
    det, certified = _certify_vectors(G, vectors)
    doc = {
        "graph": format_edge_list(G),
        "tree": sorted(T.tree_edges),
        "cycles": entries,
        "determinant": det,
        "certified": certified,
    }
    if config.verify_flag and G.m <= HNF_ORACLE_EDGE_LIMIT:
        all_cycles = enumerate_cycles(G)
        A = indicator_matrix(G, all_cycles)
        B = IntegerMatrix.from_vectors(vectors, list(G.sorted_edges))
        doc["hnf_equal"] = hnf_lattices_equal(A, B)
        certified = certified and doc["hnf_equal"]
        doc["certified"] = certified
    _emit(doc, config)
    if config.verify_flag and not certified:
        return 3
    return 0


def cmd_verify(config: RunConfig) -> int:
    G = _load_graph(config.input_path)
    _require_connected(G)
    with open(config.basis_path, "r", encoding="utf-8") as handle:
        candidate = json.load(handle)
    entries = candidate.get("cycles", [])
    checks = []

    def check(name, passed, detail):
        checks.append({"name": name, "passed": bool(passed), "detail": detail})
        return passed

    valid_entries = True
    for idx, entry in enumerate(entries):
        edges = entry.get("edges", [])
        mult = entry.get("multiplier", 1)
        if mult == 1:
            if not is_simple_cycle(G, set(edges)):
                valid_entries = False
                check("entries-are-cycles", False, f"entry {idx} is not a cycle")
                break
        elif not (mult == 2 and len(edges) >= 1):
            valid_entries = False
            check("entries-are-cycles", False, f"entry {idx} has unsupported multiplier")
            break
    if valid_entries:
        check("entries-are-cycles", True, f"{len(entries)} entries")

    vectors = [_entry_vector(entry) for entry in entries]
    projected, cos = _project_vectors_to_hat(G, vectors)
    if projected is None:
        check("rational-cycle-space", False, "entry violates bridge/series structure")
        accepted = False
    else:
        expected_count = cos.hat_graph.m
        count_ok = check(
            "cardinality",
            len(entries) == expected_count,
            f"{len(entries)} entries, expected {expected_count}",
        )
        results, det_ok = _component_determinants(cos.hat_graph, projected)
        check(
            "determinant",
            det_ok,
            "; ".join(f"|det|={d} expected {x}" for d, x, _ in results) or "no components",
        )
        hnf_ok = True
        if G.m <= HNF_ORACLE_EDGE_LIMIT:
            all_cycles = enumerate_cycles(G)
            A = indicator_matrix(G, all_cycles)
            B = IntegerMatrix.from_vectors(vectors, list(G.sorted_edges))
            hnf_ok = check("hnf-lattice-equality", hnf_lattices_equal(A, B), "exact")
        accepted = bool(valid_entries and count_ok and det_ok and hnf_ok)
    doc = {"accepted": accepted, "checks": checks}
    _emit(doc, config)
    return 0 if accepted else 3


def cmd_analyze(config: RunConfig) -> int:
    G = _load_graph(config.input_path)
    partition = bridges_and_series_classes(G)
    cos = cosimplify(G)
    comps = component_subgraphs(cos.hat_graph)
    doc = {
        "n": G.n,
        "m": G.m,
        "connected": is_connected(G),
        "three_edge_connected": is_three_edge_connected(G),
        "bridges": sorted(partition.bridges),
        "nontrivial_series_classes": sorted(
            [sorted(cls) for cls in partition.nontrivial_classes]
        ),
        "series_class_count": len(partition.classes),
        "cosimplification": {
            "n": cos.hat_graph.n,
            "m": cos.hat_graph.m,
            "components": len(comps),
            "components_three_edge_connected": all(
                is_three_edge_connected(c) for c in comps
            ),
        },
    }
    _emit(doc, config)
    return 0


def cmd_extend(config: RunConfig) -> int:
    G = _load_graph(config.input_path)
    _require_connected(G)
    chain = compatible_chain(G, keep_prefixes=True)
    seq = chain.sequence
    prefix_docs = []
    for basis in chain.bases:
        prefix_docs.append([sorted(c) for c in basis.cycles])
    det, certified = _certify_vectors(
        G, [{e: 1 for e in c} for c in chain.final_basis.cycles]
    )
    doc = {
        "sequence": seq.to_json(),
        "chain": {
            "bases": prefix_docs,
            "final_basis": _vector_entries_of_basis(chain.final_basis),
            "determinant": det,
            "certified": certified,
        },
    }
    if config.verify_flag:
        ok = certified
        graphs = chain.graphs or ()
        for H, basis in zip(graphs, chain.bases):
            if len(basis.cycles) != H.m:
                ok = False
                break
            M = IntegerMatrix.from_vectors(
                [{e: 1 for e in c} for c in basis.cycles], list(H.sorted_edges)
            )
            if abs(exact_determinant(M)) != 2 ** (H.n - 1):
                ok = False
                break
        doc["chain"]["prefixes_certified"] = ok
        certified = ok
        doc["chain"]["certified"] = certified
    _emit(doc, config)
    if config.verify_flag and not certified:
        return 3
    return 0


def cmd_hull(config: RunConfig) -> int:
    G = _load_graph(config.input_path)
    _require_connected(G)
    if (config.characteristic is None) == (config.group is None):
        raise ArgumentError("hull needs exactly one of --char or --group")
    K = FieldSpec(config.characteristic) if config.characteristic is not None else None
    A = AbelianGroupSpec.parse(config.group) if config.group is not None else None
    doc = hull_report(G, K, A)
    verified = False
    if config.verify_flag:
        if K is not None and G.m <= HNF_ORACLE_EDGE_LIMIT:
            all_cycles = enumerate_cycles(G)
            M = indicator_matrix(G, all_cycles)
            if K.characteristic == 0:
                rank = hermite_normal_form(M).cols
            else:
                rank = rank_mod_p(M, K.characteristic)
            verified = rank == doc["dimension"]
        elif A is not None:
            try:
                all_cycles = enumerate_cycles(G)
                size = group_span_size(
                    [{e: 1 for e in c} for c in all_cycles],
                    list(A.cyclic_factors),
                    list(G.sorted_edges),
                )
                verified = str(size) == doc["order"]
            except CapacityError:
                verified = False
    doc["verified"] = verified
    _emit(doc, config)
    if config.verify_flag and not verified:
        return 3
    return 0


def cmd_gen(config: RunConfig) -> int:
    graphs = []
    for index in range(config.count):
        derived_seed = config.seed * 1_000_003 + index
        graphs.append(
            gen(config.steps, derived_seed, max_vertices=config.max_vertices)
        )
    if config.output == "json":
        print(
            json.dumps(
                {"graphs": [format_edge_list(G) for G in graphs]},
                indent=2,
                sort_keys=True,
            )
        )
    else:
        for index, G in enumerate(graphs):
            print(f"# graph {index} (seed {config.seed}, steps {config.steps})")
            sys.stdout.write(format_edge_list(G))
    return 0


_COMMANDS = {
    "analyze": cmd_analyze,
    "basis": cmd_basis,
    "verify": cmd_verify,
    "extend": cmd_extend,
    "hull": cmd_hull,
    "gen": cmd_gen,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    config = _config_from_args(args)
    try:
        return _COMMANDS[config.command](config)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ParseError, StructureError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CycleLatticeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
