"""Cycle-lattice bases: construction, membership, coordinates, certification.

The lattice in question is the set of integer combinations of 0/1 indicator
vectors of cycles, sitting inside Z^E.  For a 3-edge-connected graph it is
full-dimensional with determinant 2^(n-1), and it admits bases consisting
of cycles only; this module builds them and certifies them exactly.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .cycle_structure import (
    Cosimplification,
    bridges_and_series_classes,
    cosimplify,
    fundamental_cycle_matrix,
    is_simple_cycle,
    three_edge_connectivity_witness,
)
from .errors import (
    ArgumentError,
    InternalError,
    MembershipError,
    PreconditionError,
    StructureError,
)
from .multigraph import (
    EdgeId,
    Multigraph,
    SpanningForest,
    VertexId,
    component_subgraphs,
    edge_disjoint_paths,
    is_connected,
    minor,
    spanning_forest,
)
from .oracle import IntegerMatrix, enumerate_cycles, exact_determinant, hnf_lattices_equal


@dataclass(frozen=True, eq=False)
class EdgeVector:
    """Integer vector indexed by the edge ids of one graph."""

    graph: Multigraph
    coords: dict[EdgeId, int]

    def __post_init__(self):
        unknown = set(self.coords) - set(self.graph.edges)
        if unknown:
            raise ArgumentError(f"coordinates on unknown edges {sorted(unknown)}")
        full = {e: int(self.coords.get(e, 0)) for e in self.graph.edges}
        object.__setattr__(self, "coords", full)

    @classmethod
    def zero(cls, G: Multigraph) -> "EdgeVector":
        return cls(graph=G, coords={})

    @classmethod
    def indicator(cls, G: Multigraph, edges) -> "EdgeVector":
        return cls(graph=G, coords={e: 1 for e in edges})

    def __add__(self, other: "EdgeVector") -> "EdgeVector":
        self._check_universe(other)
        return EdgeVector(
            graph=self.graph,
            coords={e: self.coords[e] + other.coords[e] for e in self.coords},
        )

    def __sub__(self, other: "EdgeVector") -> "EdgeVector":
        self._check_universe(other)
        return EdgeVector(
            graph=self.graph,
            coords={e: self.coords[e] - other.coords[e] for e in self.coords},
        )

    def __rmul__(self, k: int) -> "EdgeVector":
        return EdgeVector(graph=self.graph, coords={e: k * c for e, c in self.coords.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, EdgeVector) and self.coords == other.coords

    def __hash__(self):
        return hash(tuple(sorted(self.coords.items())))

    def _check_universe(self, other: "EdgeVector"):
        if set(self.coords) != set(other.coords):
            raise ArgumentError("vectors indexed by different edge universes")

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords.values())


@dataclass(frozen=True)
class Provenance:
    """How a basis element was obtained."""

    kind: str  # fundamental | semi-fundamental | extension | lifted | doubled
    e: EdgeId | None = None
    f: EdgeId | None = None
    t: EdgeId | None = None
    step: int | None = None
    case: str | None = None

    def label(self) -> str:
        if self.kind == "fundamental" and self.e is not None:
            return f"fundamental(e={self.e})"
        if self.kind == "semi-fundamental":
            return f"semi-fundamental(e={self.e},f={self.f},t={self.t})"
        if self.kind == "extension":
            return f"extension(step={self.step},kind={self.case})"
        if self.kind == "doubled" and self.t is not None:
            return f"doubled(t={self.t})"
        return self.kind


@dataclass(frozen=True, eq=False)
class SimpleBasis:
    """Fundamental cycles plus doubled tree edges (the non-cycle basis)."""

    tree: SpanningForest
    cycle_part: tuple[tuple[EdgeId, frozenset[EdgeId]], ...]
    doubled_part: tuple[EdgeId, ...]

    def vectors(self) -> list[dict[EdgeId, int]]:
        """Column vectors, doubled tree edges first."""
        out: list[dict[EdgeId, int]] = [{t: 2} for t in self.doubled_part]
        out.extend({e: 1 for e in cyc} for _, cyc in self.cycle_part)
        return out


@dataclass(frozen=True, eq=False)
class CycleBasis:
    """Ordered list of cycles with provenance; certified means size m."""

    cycles: tuple[frozenset[EdgeId], ...]
    provenance: tuple[Provenance, ...]
    tree: SpanningForest | None = None

    def __post_init__(self):
        if len(self.cycles) != len(self.provenance):
            raise ArgumentError("provenance list must match cycles")

    def vectors(self) -> list[dict[EdgeId, int]]:
        return [{e: 1 for e in cyc} for cyc in self.cycles]


@dataclass(frozen=True, eq=False)
class MembershipResult:
    """Decision plus certificate (odd part as disjoint cycles, even rest)."""

    is_member: bool
    reason: str | None = None
    odd_cycles: tuple[frozenset[EdgeId], ...] | None = None
    even_remainder: dict[EdgeId, int] | None = None

    def __bool__(self) -> bool:
        return self.is_member


def require_three_edge_connected(G: Multigraph):
    witness = three_edge_connectivity_witness(G)
    if witness is None:
        return
    kind, detail = witness
    if kind == "bridge":
        raise PreconditionError(f"not 3-edge-connected: bridge edge {detail}")
    if kind == "series":
        raise PreconditionError(
            f"not 3-edge-connected: nontrivial series class {sorted(detail)}"
        )
    raise PreconditionError(f"not 3-edge-connected: graph has {detail} components")


def simple_basis(G: Multigraph, T: SpanningForest | None = None) -> SimpleBasis:
    """Basis from fundamental cycles plus 2*chi_t for every tree edge.

    Under a tree-first edge ordering its column matrix is block triangular
    [[2I, A], [0, I]], so the determinant is 2^(n-1) by inspection.
    """
    require_three_edge_connected(G)
    if T is None:
        T = spanning_forest(G)
    fcm = fundamental_cycle_matrix(G, T)
    cycle_part = tuple((e, fcm.cycle_edges(e)) for e in sorted(fcm.columns))
    doubled_part = tuple(sorted(T.tree_edges))
    return SimpleBasis(tree=T, cycle_part=cycle_part, doubled_part=doubled_part)


def lattice_determinant(G: Multigraph) -> int:
    """Closed form 2^(n-1) for 3-edge-connected graphs."""
    require_three_edge_connected(G)
    return 2 ** (G.n - 1)


def is_lattice_member(G: Multigraph, p: EdgeVector) -> MembershipResult:
    """Structural membership test with a decomposition certificate.

    Membership holds exactly when p vanishes on bridges, is constant on each
    series class, and has even incidence sum at every vertex (loops counting
    twice).  On success the odd-support edges split into disjoint cycles and
    the remainder is even.
    """
    if set(p.coords) != set(G.edges):
        raise ArgumentError("vector does not match the graph's edge set")
    partition = bridges_and_series_classes(G)
    for e in sorted(partition.bridges):
        if p.coords[e] != 0:
            return MembershipResult(False, reason=f"nonzero on bridge edge {e}")
    for cls in partition.classes:
        values = {p.coords[e] for e in cls}
        if len(values) > 1:
            return MembershipResult(
                False, reason=f"unequal values on series class {sorted(cls)}"
            )
    for v in G.vertices:
        s = sum(2 * p.coords[e] if w == v else p.coords[e] for e, w in G.incidence[v])
        if s % 2 != 0:
            return MembershipResult(False, reason=f"odd incidence sum at vertex {v}")

    odd = {e for e, c in p.coords.items() if c % 2 != 0}
    loops = sorted(e for e in odd if G.is_loop(e))
    cycles: list[frozenset[EdgeId]] = [frozenset({e}) for e in loops]
    cycles.extend(_decompose_even_edge_set(G, odd - set(loops)))
    remainder = dict(p.coords)
    for cyc in cycles:
        for e in cyc:
            remainder[e] -= 1
    if any(c % 2 for c in remainder.values()):
        raise InternalError("odd remainder after removing odd-support cycles")
    return MembershipResult(
        True, odd_cycles=tuple(cycles), even_remainder=remainder
    )


def _decompose_even_edge_set(
    G: Multigraph, edges: set[EdgeId]
) -> list[frozenset[EdgeId]]:
    """Split a loop-free edge set with all-even degrees into disjoint cycles."""
    remaining = set(edges)
    incident: dict[VertexId, list[EdgeId]] = {}
    for e in sorted(remaining):
        u, v = G.edges[e]
        incident.setdefault(u, []).append(e)
        incident.setdefault(v, []).append(e)
    ptr = {v: 0 for v in incident}

    def next_unused(x: VertexId) -> EdgeId | None:
        lst = incident.get(x, ())
        i = ptr.get(x, 0)
        while i < len(lst) and lst[i] not in remaining:
            i += 1
        ptr[x] = i
        return lst[i] if i < len(lst) else None

    cycles: list[frozenset[EdgeId]] = []
    while remaining:
        e0 = min(remaining)
        start = G.edges[e0][0]
        walk_vertices = [start]
        walk_edges: list[EdgeId] = []
        index = {start: 0}
        x = start
        while True:
            e = next_unused(x)
            if e is None:
                if walk_edges:
                    raise InternalError("stuck on a vertex of odd remaining degree")
                break
            remaining.discard(e)
            y = G.other_end(e, x)
            if y in index:
                j = index[y]
                cycles.append(frozenset(walk_edges[j:] + [e]))
                for w in walk_vertices[j + 1 :]:
                    del index[w]
                del walk_vertices[j + 1 :]
                del walk_edges[j:]
            else:
                walk_edges.append(e)
                walk_vertices.append(y)
                index[y] = len(walk_vertices) - 1
            x = y
            if not walk_edges and next_unused(x) is None:
                break
    return cycles


def express_in_simple_basis(
    G: Multigraph, T: SpanningForest, p: EdgeVector
) -> tuple[dict[EdgeId, int], dict[EdgeId, int]]:
    """Coefficients of p over the simple basis.

    Returns (cycle_coeffs, doubled_coeffs): the fundamental cycle of non-tree
    edge e carries coefficient p_e, and the doubled tree edge t carries
    (p_t - S_t)/2 where S_t sums p over the fundamental cut of t minus t;
    cut parity of lattice members makes the division exact.
    """
    require_three_edge_connected(G)
    member = is_lattice_member(G, p)
    if not member:
        raise MembershipError(member.reason or "not a lattice member")
    fcm = fundamental_cycle_matrix(G, T)
    cycle_coeffs = {e: p.coords[e] for e in fcm.columns}
    cut_sum = {t: 0 for t in T.tree_edges}
    for e, col in fcm.columns.items():
        pe = p.coords[e]
        if pe:
            for t in col:
                cut_sum[t] += pe
    doubled_coeffs = {}
    for t in sorted(T.tree_edges):
        diff = p.coords[t] - cut_sum[t]
        if diff % 2 != 0:
            raise InternalError(f"odd cut balance at tree edge {t}")
        doubled_coeffs[t] = diff // 2

    rebuilt = {e: 0 for e in G.edges}
    for e, coef in cycle_coeffs.items():
        if coef:
            for x in fcm.cycle_edges(e):
                rebuilt[x] += coef
    for t, coef in doubled_coeffs.items():
        rebuilt[t] += 2 * coef
    if rebuilt != p.coords:
        raise InternalError("simple-basis coefficients do not reassemble the input")
    return cycle_coeffs, doubled_coeffs


def double_edge_combination(
    G: Multigraph, e: EdgeId
) -> list[tuple[int, frozenset[EdgeId]]]:
    """Signed cycles summing to 2*chi_e.

    Two edge-disjoint paths P, Q joining the endpoints of e (avoiding e)
    give +1 on P+e and Q+e; the union P+Q is Eulerian and its disjoint
    cycles enter with -1.  A loop contributes itself with coefficient 2.
    """
    require_three_edge_connected(G)
    if e not in G.edges:
        raise ArgumentError(f"unknown edge id {e}")
    if G.is_loop(e):
        return [(2, frozenset({e}))]
    u, v = G.edges[e]
    without_e = minor(G, delete={e}, contract=set()).result
    paths = edge_disjoint_paths(without_e, u, v, 2)
    if len(paths) < 2:
        raise InternalError("3-edge-connected graph lost 2-connectivity after one deletion")
    P, Q = (set(p) for p in paths[:2])
    combo: list[tuple[int, frozenset[EdgeId]]] = [
        (1, frozenset(P | {e})),
        (1, frozenset(Q | {e})),
    ]
    for cyc in _decompose_even_edge_set(G, P | Q):
        combo.append((-1, cyc))

    check = {x: 0 for x in G.edges}
    for coef, cyc in combo:
        for x in cyc:
            check[x] += coef
    expected = {x: (2 if x == e else 0) for x in G.edges}
    if check != expected:
        raise InternalError("signed combination does not sum to 2*chi_e")
    return combo


# ---------------------------------------------------------------------------
# semi-fundamental construction
# ---------------------------------------------------------------------------


class _ContractionState:
    """Current contracted graph, its tree, and path machinery."""

    def __init__(self, G: Multigraph, tree_edges: set[EdgeId]):
        self.graph = G
        self.tree_edges = set(tree_edges)
        self._rebuild()

    def _rebuild(self):
        G = self.graph
        adj: dict[VertexId, list[tuple[EdgeId, VertexId]]] = {v: [] for v in G.vertices}
        for e in sorted(self.tree_edges):
            a, b = G.edges[e]
            adj[a].append((e, b))
            adj[b].append((e, a))
        parent: dict[VertexId, tuple[VertexId, EdgeId] | None] = {}
        depth: dict[VertexId, int] = {}
        for r in G.vertices:
            if r in parent:
                continue
            parent[r] = None
            depth[r] = 0
            queue = deque([r])
            while queue:
                x = queue.popleft()
                for e, y in adj[x]:
                    if y not in parent:
                        parent[y] = (x, e)
                        depth[y] = depth[x] + 1
                        queue.append(y)
        self.parent = parent
        self.depth = depth

    def contract(self, t: EdgeId):
        self.graph = minor(self.graph, delete=set(), contract={t}).result
        self.tree_edges.discard(t)
        self._rebuild()

    def tree_path(self, u: VertexId, v: VertexId) -> set[EdgeId]:
        parent, depth = self.parent, self.depth
        out: set[EdgeId] = set()
        while depth[u] > depth[v]:
            u, e = parent[u]
            out.add(e)
        while depth[v] > depth[u]:
            v, e = parent[v]
            out.add(e)
        while u != v:
            u, e = parent[u]
            out.add(e)
            v, f = parent[v]
            out.add(f)
        return out

    def fundamental_cycle(self, e: EdgeId) -> set[EdgeId]:
        u, v = self.graph.edges[e]
        if u == v:
            return {e}
        path = self.tree_path(u, v)
        path.add(e)
        return path

    def non_tree_edges(self) -> list[EdgeId]:
        return [e for e in self.graph.sorted_edges if e not in self.tree_edges]

    def forest_sides(self, removed: set[EdgeId]) -> dict[VertexId, int]:
        """Component labels of the forest after removing some tree edges."""
        G = self.graph
        adj: dict[VertexId, list[VertexId]] = {v: [] for v in G.vertices}
        for e in self.tree_edges:
            if e in removed:
                continue
            a, b = G.edges[e]
            adj[a].append(b)
            adj[b].append(a)
        label: dict[VertexId, int] = {}
        counter = 0
        for r in G.vertices:
            if r in label:
                continue
            label[r] = counter
            queue = deque([r])
            while queue:
                x = queue.popleft()
                for y in adj[x]:
                    if y not in label:
                        label[y] = counter
                        queue.append(y)
            counter += 1
        return label


def _cycle_edge_at(
    G: Multigraph, cycle: set[EdgeId], v: VertexId, excluding: EdgeId
) -> EdgeId:
    for e in cycle:
        if e == excluding:
            continue
        a, b = G.edges[e]
        if v in (a, b):
            return e
    raise InternalError(f"cycle has no second edge at vertex {v}")


def _path_end_data(
    G: Multigraph, path_edges: set[EdgeId]
) -> tuple[VertexId, VertexId, EdgeId, EdgeId]:
    """Endpoints of a tree path and its two end edges, least endpoint first."""
    deg: dict[VertexId, list[EdgeId]] = {}
    for e in path_edges:
        a, b = G.edges[e]
        deg.setdefault(a, []).append(e)
        deg.setdefault(b, []).append(e)
    ends = sorted(v for v, es in deg.items() if len(es) == 1)
    if len(ends) != 2:
        raise InternalError("edge set is not a simple path")
    v0, vk = ends[0], ends[1]
    return v0, vk, deg[v0][0], deg[vk][0]


def _shrink_pair(
    state: _ContractionState, e: EdgeId, f: EdgeId, inter: set[EdgeId]
) -> tuple[EdgeId, EdgeId, set[EdgeId]]:
    """One cycle exchange: replace (e, f) so the tree intersection shrinks."""
    G = state.graph
    v0, vk, a, a_prime = _path_end_data(G, inter)
    sides = state.forest_sides({a, a_prime})
    side_h, side_hprime = sides[v0], sides[vk]
    # the middle component holds the interior endpoint of a
    side_hp = sides[G.other_end(a, v0)]

    x_found = None
    for x in state.non_tree_edges():
        p, q = G.edges[x]
        if p == q:
            continue
        sp, sq = sides[p], sides[q]
        if {sp, sq} == {side_hp, side_h} or {sp, sq} == {side_hp, side_hprime}:
            x_found = x
            anchor_vertex = v0 if side_h in (sp, sq) else vk
            anchor_edge = a if anchor_vertex == v0 else a_prime
            break
    if x_found is None:
        raise StructureError(
            "no reconnecting non-tree edge: graph is not 3-edge-connected"
        )

    cyc_e = state.fundamental_cycle(e)
    cyc_f = state.fundamental_cycle(f)
    cyc_x = state.fundamental_cycle(x_found)
    at_x = _cycle_edge_at(G, cyc_x, anchor_vertex, anchor_edge)
    diverges_e = _cycle_edge_at(G, cyc_e, anchor_vertex, anchor_edge) != at_x
    diverges_f = _cycle_edge_at(G, cyc_f, anchor_vertex, anchor_edge) != at_x
    if diverges_e and diverges_f:
        keep = max(e, f)  # replace the cycle with the smaller non-tree id
    elif diverges_e:
        keep = e
    elif diverges_f:
        keep = f
    else:
        raise InternalError("neither cycle diverges from the exchange cycle")
    kept_cycle = cyc_e if keep == e else cyc_f
    new_inter = (kept_cycle & cyc_x) & state.tree_edges
    if not new_inter or not new_inter < inter:
        raise InternalError("cycle exchange failed to shrink the intersection")
    return keep, x_found, new_inter


def _seed_pair(state: _ContractionState) -> tuple[EdgeId, EdgeId, set[EdgeId]]:
    """Two fundamental cycles through the least remaining tree edge."""
    t = min(state.tree_edges)
    sides = state.forest_sides({t})
    a, b = state.graph.edges[t]
    crossing = []
    for x in state.non_tree_edges():
        p, q = state.graph.edges[x]
        if p != q and {sides[p], sides[q]} == {sides[a], sides[b]}:
            crossing.append(x)
            if len(crossing) == 2:
                break
    if len(crossing) < 2:
        raise StructureError(
            f"fundamental cut of tree edge {t} has fewer than two non-tree edges; "
            "graph is not 3-edge-connected"
        )
    e, f = crossing
    inter = state.fundamental_cycle(e) & state.fundamental_cycle(f) & state.tree_edges
    if t not in inter:
        raise InternalError("seed pair does not share the seeding tree edge")
    return e, f, inter


def _semi_fundamental_3ec(
    G: Multigraph, T: SpanningForest
) -> tuple[CycleBasis, list[tuple[EdgeId, EdgeId, EdgeId]]]:
    fcm = fundamental_cycle_matrix(G, T)
    fund_cycles = {e: set(fcm.cycle_edges(e)) for e in fcm.columns}

    cycles: list[frozenset[EdgeId]] = []
    tags: list[Provenance] = []
    for e in sorted(fund_cycles):
        cycles.append(frozenset(fund_cycles[e]))
        tags.append(Provenance(kind="fundamental", e=e))

    state = _ContractionState(G, set(T.tree_edges))
    stack: list[tuple[EdgeId, EdgeId, set[EdgeId]]] = []
    triples: list[tuple[EdgeId, EdgeId, EdgeId]] = []
    while state.tree_edges:
        if not stack:
            stack.append(_seed_pair(state))
        e, f, inter = stack[-1]
        while len(inter) > 1:
            e, f, inter = _shrink_pair(state, e, f, inter)
            stack.append((e, f, inter))
        (t,) = inter
        triples.append((t, e, f))
        semi = frozenset(fund_cycles[e] ^ fund_cycles[f])
        cycles.append(semi)
        tags.append(Provenance(kind="semi-fundamental", e=e, f=f, t=t))
        state.contract(t)
        stack.pop()
        pruned: list[tuple[EdgeId, EdgeId, set[EdgeId]]] = []
        for pe, pf, pinter in stack:
            pinter.discard(t)
            if pinter:
                pruned.append((pe, pf, pinter))
        stack = pruned
    return CycleBasis(cycles=tuple(cycles), provenance=tuple(tags), tree=T), triples


def semi_fundamental_basis(
    G: Multigraph, T: SpanningForest | None = None
) -> tuple[CycleBasis, list[tuple[EdgeId, EdgeId, EdgeId]]]:
    """Lattice cycle basis: all fundamental cycles plus n-1 semi-fundamental.

    The semi-fundamental cycles come from pairs of fundamental cycles whose
    intersection shrinks to a single tree edge inside successive tree-edge
    contractions; the recorded triples (t_k, e_k, f_k) witness this.  A graph
    that is connected but not 3-edge-connected is handled by cosimplifying
    (contracting tree edges only) and lifting the component bases back.
    """
    if not is_connected(G):
        raise StructureError("graph is not connected")
    if T is None:
        T = spanning_forest(G)
    if three_edge_connectivity_witness(G) is None:
        return _semi_fundamental_3ec(G, T)

    cos = cosimplify(G, forest=T)
    comps = component_subgraphs(cos.hat_graph)
    comp_bases: list[CycleBasis] = []
    triples: list[tuple[EdgeId, EdgeId, EdgeId]] = []
    for comp in comps:
        tree_edges = frozenset(T.tree_edges & set(comp.edges))
        comp_T = SpanningForest(
            parent_graph=comp,
            tree_edges=tree_edges,
            component_roots=(min(comp.vertices),),
        )
        basis_c, triples_c = _semi_fundamental_3ec(comp, comp_T)
        comp_bases.append(basis_c)
        triples.extend(triples_c)
    lifted = lift_basis(cos, comp_bases)
    return CycleBasis(cycles=lifted.cycles, provenance=lifted.provenance, tree=T), triples


def lift_basis(cos: Cosimplification, component_bases: list[CycleBasis]) -> CycleBasis:
    """Lift component bases of the cosimplification back to the parent graph.

    Every representative edge in a cycle is replaced by its full series
    class; bridges never occur in cycles, so the lift is total.
    """
    comps = component_subgraphs(cos.hat_graph)
    if len(component_bases) != len(comps):
        raise ArgumentError(
            f"expected {len(comps)} component bases, got {len(component_bases)}"
        )
    cycles: list[frozenset[EdgeId]] = []
    tags: list[Provenance] = []
    for comp, basis in zip(comps, component_bases):
        comp_edges = set(comp.edges)
        for cyc in basis.cycles:
            if not set(cyc) <= comp_edges:
                raise ArgumentError("component basis uses edges outside its component")
            lifted = cos.lift_edges(cyc)
            if not is_simple_cycle(cos.parent, lifted):
                raise InternalError("lifted edge set is not a simple cycle")
            cycles.append(lifted)
            tags.append(Provenance(kind="lifted"))
    return CycleBasis(cycles=tuple(cycles), provenance=tuple(tags), tree=None)


# ---------------------------------------------------------------------------
# certification helpers
# ---------------------------------------------------------------------------


def indicator_matrix(G: Multigraph, cycles) -> IntegerMatrix:
    """Edge-by-cycle 0/1 matrix in sorted edge order."""
    order = list(G.sorted_edges)
    return IntegerMatrix.from_vectors([{e: 1 for e in c} for c in cycles], order)


def certify_cycle_basis(G: Multigraph, basis: CycleBasis) -> tuple[int, bool]:
    """Exact determinant of the basis matrix and whether it equals 2^(n-1).

    Only meaningful for 3-edge-connected graphs, where the lattice is
    full-dimensional; a non-square system certifies as (0, False).
    """
    if len(basis.cycles) != G.m:
        return 0, False
    if not all(is_simple_cycle(G, c) for c in basis.cycles):
        return 0, False
    det = exact_determinant(indicator_matrix(G, basis.cycles))
    return det, abs(det) == 2 ** (G.n - 1)


def matches_all_cycles_lattice(G: Multigraph, cycles, limit: int = 100_000) -> bool:
    """HNF equality of the given cycles against every enumerated cycle of G."""
    all_cycles = enumerate_cycles(G, limit=limit)
    A = indicator_matrix(G, all_cycles)
    B = indicator_matrix(G, cycles)
    return hnf_lattices_equal(A, B)
