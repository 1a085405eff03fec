"""Fundamental cycles and cuts, bridges, series classes, cosimplification.

Everything here works per connected component, so disconnected graphs are
accepted; operations that genuinely need connectivity say so in their name
or raise explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import ArgumentError, StructureError
from .multigraph import (
    EdgeId,
    Multigraph,
    SpanningForest,
    VertexId,
    connected_components,
    is_connected,
    minor,
    spanning_forest,
)


@dataclass(frozen=True, eq=False)
class FundamentalCycleMatrix:
    """Binary incidence of tree edges in fundamental cycles.

    columns[e] lists the tree edges of the cycle closed by non-tree edge e;
    a loop closes the empty set.  By cycle/cut duality the row of a tree
    edge t is exactly the fundamental cut of t minus t itself.
    """

    tree: SpanningForest
    columns: dict[EdgeId, frozenset[EdgeId]]

    @cached_property
    def rows(self) -> dict[EdgeId, frozenset[EdgeId]]:
        row: dict[EdgeId, set[EdgeId]] = {t: set() for t in self.tree.tree_edges}
        for e, col in self.columns.items():
            for t in col:
                row[t].add(e)
        return {t: frozenset(s) for t, s in row.items()}

    def cycle_edges(self, e: EdgeId) -> frozenset[EdgeId]:
        """Full edge set of the fundamental cycle of non-tree edge e."""
        return self.columns[e] | {e}

    def cut_edges(self, t: EdgeId) -> frozenset[EdgeId]:
        """Full edge set of the fundamental cut of tree edge t."""
        return self.rows[t] | {t}


@dataclass(frozen=True, eq=False)
class SeriesPartition:
    """Bridges plus the partition of non-bridge edges into series classes."""

    bridges: frozenset[EdgeId]
    classes: tuple[frozenset[EdgeId], ...]

    def class_of(self, e: EdgeId) -> frozenset[EdgeId]:
        for cls in self.classes:
            if e in cls:
                return cls
        raise ArgumentError(f"edge {e} is a bridge or unknown")

    @property
    def nontrivial_classes(self) -> tuple[frozenset[EdgeId], ...]:
        return tuple(c for c in self.classes if len(c) > 1)


@dataclass(frozen=True, eq=False)
class Cosimplification:
    """Minor with bridges deleted and series classes collapsed to one edge.

    projection sends every edge of the parent to its class representative,
    or to None for bridges; section inverts it class-wise.
    """

    parent: Multigraph
    hat_graph: Multigraph
    projection: dict[EdgeId, EdgeId | None]
    section: dict[EdgeId, frozenset[EdgeId]]

    def lift_edges(self, edges: frozenset[EdgeId]) -> frozenset[EdgeId]:
        out: set[EdgeId] = set()
        for e in edges:
            out |= self.section[e]
        return frozenset(out)


def fundamental_cycle_matrix(G: Multigraph, T: SpanningForest) -> FundamentalCycleMatrix:
    """Root-path construction of the fundamental cycle matrix.

    For each non-tree edge with endpoints v, v', the column holds the edges
    of the root paths of v and v' past their first divergence.
    """
    parent, _depth, root_of = T._bfs_maps
    # root path of v as a tuple of edge ids, root end first
    path_cache: dict[VertexId, tuple[EdgeId, ...]] = {r: () for r in T.component_roots}

    def root_path(v: VertexId) -> tuple[EdgeId, ...]:
        chain: list[tuple[VertexId, EdgeId]] = []
        x = v
        while x not in path_cache:
            p, e = parent[x]
            chain.append((x, e))
            x = p
        acc = list(path_cache[x])
        for w, e in reversed(chain):
            acc.append(e)
            path_cache[w] = tuple(acc)
        return path_cache[v]
    columns: dict[EdgeId, frozenset[EdgeId]] = {}
    for e in G.sorted_edges:
        if e in T.tree_edges:
            continue
        u, v = G.edges[e]
        if u == v:
            columns[e] = frozenset()
            continue
        if root_of.get(u) != root_of.get(v):
            raise StructureError(
                f"non-tree edge {e} joins different forest components"
            )
        pu, pv = root_path(u), root_path(v)
        i = 0
        limit = min(len(pu), len(pv))
        while i < limit and pu[i] == pv[i]:
            i += 1
        columns[e] = frozenset(pu[i:]) | frozenset(pv[i:])
    return FundamentalCycleMatrix(tree=T, columns=columns)


def bridges_and_series_classes(
    G: Multigraph, T: SpanningForest | None = None
) -> SeriesPartition:
    """Bridges and series classes from fundamental-cycle refinement.

    Bridges are the edges missing from every fundamental cycle; the series
    classes are the blocks of the common refinement of the cycle/co-cycle
    splits over all fundamental cycles.
    """
    if T is None:
        T = spanning_forest(G)
    fcm = fundamental_cycle_matrix(G, T)
    signature: dict[EdgeId, int] = {e: 0 for e in G.edges}
    for i, e in enumerate(sorted(fcm.columns)):
        bit = 1 << i
        signature[e] |= bit
        for t in fcm.columns[e]:
            signature[t] |= bit
    bridges = frozenset(e for e, sig in signature.items() if sig == 0)
    groups: dict[int, list[EdgeId]] = {}
    for e, sig in signature.items():
        if sig:
            groups.setdefault(sig, []).append(e)
    classes = tuple(
        frozenset(members)
        for _, members in sorted(groups.items(), key=lambda kv: min(kv[1]))
    )
    return SeriesPartition(bridges=bridges, classes=classes)


def cosimplify(G: Multigraph, forest: SpanningForest | None = None) -> Cosimplification:
    """Delete bridges, contract all but one edge of each nontrivial class.

    With a forest supplied, only forest edges are contracted (every
    nontrivial class has at most one non-forest edge) and the representative
    is the class's non-forest edge when there is one, else its least forest
    edge.  Without a forest the representative is the least edge id.
    """
    T = forest if forest is not None else spanning_forest(G)
    partition = bridges_and_series_classes(G, T)
    to_contract: set[EdgeId] = set()
    rep_of_class: dict[frozenset[EdgeId], EdgeId] = {}
    for cls in partition.classes:
        if len(cls) == 1:
            (rep,) = cls
        elif forest is not None:
            non_tree = sorted(cls - T.tree_edges)
            rep = non_tree[0] if non_tree else min(cls)
        else:
            rep = min(cls)
        rep_of_class[cls] = rep
        to_contract |= cls - {rep}
    inner = minor(G, delete=set(partition.bridges), contract=set())
    mm = minor(inner.result, delete=set(), contract=to_contract)
    hat = mm.result

    projection: dict[EdgeId, EdgeId | None] = {}
    section: dict[EdgeId, frozenset[EdgeId]] = {}
    for cls, rep in rep_of_class.items():
        section[rep] = cls
        for e in cls:
            projection[e] = rep
    for e in partition.bridges:
        projection[e] = None
    return Cosimplification(parent=G, hat_graph=hat, projection=projection, section=section)


def three_edge_connectivity_witness(G: Multigraph) -> tuple[str, object] | None:
    """None when 3-edge-connected, else (kind, witness) naming the failure.

    kind is "disconnected" (witness: component count), "bridge" (witness:
    edge id) or "series" (witness: a nontrivial class).  Single-vertex
    graphs, with or without loops, count as 3-edge-connected.
    """
    if G.n > 1 and not is_connected(G):
        return ("disconnected", len(connected_components(G)))
    partition = bridges_and_series_classes(G)
    if partition.bridges:
        return ("bridge", min(partition.bridges))
    nontrivial = partition.nontrivial_classes
    if nontrivial:
        return ("series", min(nontrivial, key=min))
    return None


def is_three_edge_connected(G: Multigraph) -> bool:
    return three_edge_connectivity_witness(G) is None


def is_simple_cycle(G: Multigraph, edges: frozenset[EdgeId] | set[EdgeId]) -> bool:
    """True when the edge set induces a connected subgraph with all degrees 2.

    A loop alone is a cycle of length 1; a pair of parallel edges is a cycle
    of length 2.
    """
    edges = set(edges)
    if not edges:
        return False
    for e in edges:
        if e not in G.edges:
            return False
    deg: dict[VertexId, int] = {}
    for e in edges:
        u, v = G.edges[e]
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    if any(d != 2 for d in deg.values()):
        return False
    # connectivity over the touched vertices
    verts = list(deg)
    adj: dict[VertexId, list[VertexId]] = {v: [] for v in verts}
    for e in edges:
        u, v = G.edges[e]
        if u != v:
            adj[u].append(v)
            adj[v].append(u)
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(verts)
