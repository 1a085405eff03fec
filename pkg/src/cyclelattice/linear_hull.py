"""Linear hulls of cycles over prime fields and finite Abelian groups.

Over a coefficient field of characteristic other than 2 the cycles span all
of K^E for a 3-edge-connected graph; over characteristic 2 they span the
classical binary cycle space of dimension m-n+1.  Over a finite Abelian
group A the hull is (2A)^(n-1) + A^(m-n+1).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .cycle_structure import (
    cosimplify,
    fundamental_cycle_matrix,
    three_edge_connectivity_witness,
)
from .errors import ArgumentError, InternalError
from .lattice_basis import CycleBasis, SimpleBasis, require_three_edge_connected
from .multigraph import Multigraph, component_subgraphs, spanning_forest
from .oracle import IntegerMatrix, _is_prime, rank_mod_p


@dataclass(frozen=True)
class FieldSpec:
    """A field identified by its characteristic: a prime, or 0 for Q."""

    characteristic: int

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and not _is_prime(p):
            raise ArgumentError(f"characteristic must be 0 or prime, got {p}")


@dataclass(frozen=True)
class AbelianGroupSpec:
    """Finite Abelian group as its primary decomposition (prime powers)."""

    cyclic_factors: tuple[int, ...]

    def __post_init__(self):
        for q in self.cyclic_factors:
            if q < 2 or not _is_prime_power(q):
                raise ArgumentError(f"factor {q} is not a prime power > 1")
        object.__setattr__(
            self, "cyclic_factors", tuple(sorted(self.cyclic_factors))
        )

    @property
    def order(self) -> int:
        return reduce(lambda a, b: a * b, self.cyclic_factors, 1)

    @classmethod
    def parse(cls, text: str) -> "AbelianGroupSpec":
        """Parse factor lists like "4,3" or "2^2,3"."""
        factors = []
        for tok in text.split(","):
            tok = tok.strip()
            if not tok:
                continue
            if "^" in tok:
                base, exp = tok.split("^", 1)
                factors.append(int(base) ** int(exp))
            else:
                factors.append(int(tok))
        if not factors:
            raise ArgumentError("empty group specification")
        return cls(cyclic_factors=tuple(factors))

    def describe(self) -> list[str]:
        return [_factor_label(q) for q in self.cyclic_factors]


def _is_prime_power(q: int) -> bool:
    for p in range(2, q + 1):
        if _is_prime(p) and q % p == 0:
            while q % p == 0:
                q //= p
            return q == 1
    return False


def _factor_label(q: int) -> str:
    p = next(p for p in range(2, q + 1) if _is_prime(p) and q % p == 0)
    k = 0
    while q % p == 0:
        q //= p
        k += 1
    return f"{p}^{k}" if k > 1 else str(p)


def hull_dimension(G: Multigraph, K: FieldSpec) -> int:
    """Dimension of the K-span of cycle vectors: m, or m-n+1 when char 2."""
    require_three_edge_connected(G)
    if K.characteristic == 2:
        return G.m - G.n + 1
    return G.m


def hull_group_structure(G: Multigraph, A: AbelianGroupSpec) -> AbelianGroupSpec:
    """Primary decomposition of the A-span of cycle vectors.

    Each odd-primary factor contributes m copies of itself; each factor of
    order 2^k contributes m-n+1 copies of 2^k and n-1 copies of 2^(k-1),
    the trivial factors being dropped.
    """
    require_three_edge_connected(G)
    m, n = G.m, G.n
    out: list[int] = []
    for q in A.cyclic_factors:
        if q % 2 == 0:
            out.extend([q] * (m - n + 1))
            if q // 2 > 1:
                out.extend([q // 2] * (n - 1))
        else:
            out.extend([q] * m)
    return AbelianGroupSpec(cyclic_factors=tuple(out))


def hull_basis_mod_p(
    G: Multigraph, K: FieldSpec, source: CycleBasis | SimpleBasis
) -> list[dict[int, int]]:
    """Reduce a lattice basis to a linear basis of the hull over GF(p).

    For p != 2 every basis vector survives reduction; for p = 2 only the
    fundamental cycles do (the rest of the lattice collapses), so the
    source must carry a spanning tree.
    """
    require_three_edge_connected(G)
    p = K.characteristic
    if p == 0:
        raise ArgumentError("reduction needs a positive characteristic")
    if p != 2:
        if isinstance(source, SimpleBasis):
            vectors = [{e: c % p for e, c in vec.items()} for vec in source.vectors()]
        else:
            vectors = [dict(vec) for vec in source.vectors()]
        expected = hull_dimension(G, K)
    else:
        tree = source.tree
        if tree is None:
            raise ArgumentError("characteristic-2 reduction needs a tree-based source")
        fcm = fundamental_cycle_matrix(G, tree)
        vectors = [{e: 1 for e in fcm.cycle_edges(x)} for x in sorted(fcm.columns)]
        expected = hull_dimension(G, K)
    order = list(G.sorted_edges)
    rank = rank_mod_p(IntegerMatrix.from_vectors(vectors, order), p)
    if rank != expected:
        raise InternalError(
            f"reduced basis has rank {rank}, expected {expected}: source basis is broken"
        )
    return vectors


def hull_report(G: Multigraph, K: FieldSpec | None, A: AbelianGroupSpec | None) -> dict:
    """Hull summary for a connected graph, cosimplifying when necessary.

    The closed-form dimensions assume a 3-edge-connected graph; anything
    else is reduced through its cosimplification (a lattice isomorphism)
    and the report is flagged as derived.
    """
    direct = three_edge_connectivity_witness(G) is None
    if direct:
        parts = [G]
    else:
        cos = cosimplify(G, forest=spanning_forest(G))
        parts = component_subgraphs(cos.hat_graph)
    report: dict = {"derived": not direct}
    if K is not None:
        dim = sum(hull_dimension(H, K) for H in parts)
        report["characteristic"] = K.characteristic
        report["dimension"] = dim
    if A is not None:
        factors: list[int] = []
        for H in parts:
            factors.extend(hull_group_structure(H, A).cyclic_factors)
        spec = (
            AbelianGroupSpec(cyclic_factors=tuple(factors))
            if factors
            else AbelianGroupSpec(cyclic_factors=())
        )
        report["group"] = ",".join(A.describe())
        report["factors"] = spec.describe()
        report["order"] = str(spec.order)
    return report
