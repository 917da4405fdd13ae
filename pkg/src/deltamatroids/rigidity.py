"""Multigraphs, cycle matroids, 2D generic rigidity via (2,3)-sparsity
counts, the rigidity feasible family, and the cone construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from .core import GroundSet, InputError, SetFamily, Subset, _maximal_masks
from .matroids import Matroid


@dataclass(frozen=True)
class Multigraph:
    """Labeled vertices and labeled edges; parallel edges and loops allowed.

    Edge labels form the ground set of every matroid derived from the graph.
    """

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, tuple[str, str]], ...]  # (edge label, (end, end))

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(
            self, "edges", tuple((e, (u, v)) for e, (u, v) in self.edges)
        )
        if len(set(self.vertices)) != len(self.vertices):
            raise InputError("duplicate vertex labels")
        labels = [e for e, _ in self.edges]
        if len(set(labels)) != len(labels):
            raise InputError("duplicate edge labels")
        vset = set(self.vertices)
        for e, (u, v) in self.edges:
            if u not in vset or v not in vset:
                raise InputError(f"edge {e!r} has an endpoint outside the vertex set")

    @classmethod
    def build(cls, vertices: Iterable[str], edges: Iterable[tuple[str, str, str]]) -> "Multigraph":
        """Edges given as (label, end, end) triples."""
        return cls(tuple(vertices), tuple((e, (u, v)) for e, u, v in edges))

    @cached_property
    def ground(self) -> GroundSet:
        return GroundSet(tuple(e for e, _ in self.edges))

    @cached_property
    def _vertex_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def _edge_vertex_masks(self) -> tuple[int, ...]:
        vi = self._vertex_index
        return tuple((1 << vi[u]) | (1 << vi[v]) for _, (u, v) in self.edges)

    def edge_subset(self, labels: Iterable[str]) -> Subset:
        return self.ground.subset(labels)

    def has_loop(self) -> bool:
        return any(u == v for _, (u, v) in self.edges)

    def has_parallel(self) -> bool:
        seen = set()
        for _, (u, v) in self.edges:
            key = frozenset((u, v))
            if key in seen:
                return True
            seen.add(key)
        return False

    def is_simple(self) -> bool:
        return not self.has_loop() and not self.has_parallel()

    def _components(self, edge_mask: int) -> int:
        """Number of connected components of (V, F) including isolated vertices."""
        parent = list(range(len(self.vertices)))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        vi = self._vertex_index
        for i, (_, (u, v)) in enumerate(self.edges):
            if edge_mask >> i & 1:
                ra, rb = find(vi[u]), find(vi[v])
                if ra != rb:
                    parent[ra] = rb
        return len({find(i) for i in range(len(self.vertices))})

    def is_forest(self, edge_mask: int) -> bool:
        """True iff the edge set contains no cycle (loops and parallel pairs count)."""
        parent = list(range(len(self.vertices)))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        vi = self._vertex_index
        for i, (_, (u, v)) in enumerate(self.edges):
            if edge_mask >> i & 1:
                ra, rb = find(vi[u]), find(vi[v])
                if ra == rb:
                    return False
                parent[ra] = rb
        return True

    def is_connected_spanning(self, edge_mask: int) -> bool:
        """True iff (V, F) is connected over *all* vertices of the graph."""
        return self._components(edge_mask) == 1

    def is_connected(self) -> bool:
        return self.is_connected_spanning(self.ground.full_mask)


def cycle_matroid(g: Multigraph) -> Matroid:
    """Connectivity matroid on the edge labels: independents are forests."""
    forests = [m for m in g.ground.all_masks() if g.is_forest(m)]
    return Matroid._trusted(g.ground, _maximal_masks(forests))


def _sparse_count_ok(g: Multigraph, mask: int) -> bool:
    """Check the single count |F| <= 2|V(F)| - 3 for one nonempty edge set."""
    vmask = 0
    for i in range(len(g.edges)):
        if mask >> i & 1:
            vmask |= g._edge_vertex_masks[i]
    return mask.bit_count() <= 2 * vmask.bit_count() - 3


def is_sparse_23(g: Multigraph, f: Subset) -> bool:
    """(2,3)-sparsity: every nonempty subset F' of f obeys |F'| <= 2|V(F')| - 3.

    The empty set is vacuously sparse.  A loop or a parallel pair always
    violates the count, so graphs containing either are overbraced.
    """
    if f.ground != g.ground:
        raise InputError("edge subset over a different ground set")
    s = f.mask
    while s:
        if not _sparse_count_ok(g, s):
            return False
        s = (s - 1) & f.mask
    return True


def rigidity_matroid(g: Multigraph) -> Matroid:
    """2D generic rigidity matroid: independents are the (2,3)-sparse sets."""
    sparse = [m for m in g.ground.all_masks() if is_sparse_23(g, Subset(g.ground, m))]
    return Matroid.certify(SetFamily(g.ground, _maximal_masks(sparse)))


def rigidity_feasible_family(g: Multigraph) -> SetFamily:
    """Edge sets inducing a connected spanning subgraph that is not overbraced.

    Defined for connected simple graphs; this family satisfies symmetric
    exchange, with upper matroid the spanning-connected part of the rigidity
    matroid and lower matroid the cycle matroid.
    """
    if not g.is_simple():
        raise InputError("rigidity feasible family requires a simple graph")
    if not g.is_connected():
        raise InputError("rigidity feasible family requires a connected graph")
    members = [
        m
        for m in g.ground.all_masks()
        if g.is_connected_spanning(m) and is_sparse_23(g, Subset(g.ground, m))
    ]
    return SetFamily(g.ground, tuple(members))


@dataclass(frozen=True)
class ConeResult:
    """A graph with one new apex vertex joined to every old vertex, plus the
    subset of new edges inside the enlarged edge ground set."""

    cone_graph: Multigraph
    cone_edges: Subset


def cone(g: Multigraph) -> ConeResult:
    """Add an apex vertex adjacent to every vertex of g.

    New labels are deterministic: the apex is "x0" (primed until fresh) and
    each new edge is "<apex>-<vertex>".  New edges come after the old ones,
    so the original edge order is preserved in the enlarged ground set.
    """
    apex = "x0"
    while apex in g.vertices:
        apex += "'"
    new_edges = []
    for v in g.vertices:
        label = f"{apex}-{v}"
        while label in (e for e, _ in g.edges):
            label += "'"
        new_edges.append((label, (apex, v)))
    cg = Multigraph(g.vertices + (apex,), g.edges + tuple(new_edges))
    return ConeResult(cg, cg.ground.subset(e for e, _ in new_edges))


@dataclass(frozen=True)
class ConeQuotientReport:
    """Per-identity verdicts for the cone realization of the quotient:
    rigidity of g equals rigidity of the cone with the new edges deleted,
    and the cycle matroid of g equals the same with the new edges contracted."""

    deletion_identity: bool
    contraction_identity: bool

    @property
    def both_hold(self) -> bool:
        return self.deletion_identity and self.contraction_identity

    def to_json(self) -> dict:
        return {
            "deletion_identity": self.deletion_identity,
            "contraction_identity": self.contraction_identity,
        }


def verify_cone_quotient(g: Multigraph) -> ConeQuotientReport:
    """Compare both sides of the cone identities by basis-family equality."""
    result = cone(g)
    mr_cone = rigidity_matroid(result.cone_graph)
    deleted = mr_cone.delete(result.cone_edges)
    contracted = mr_cone.contract(result.cone_edges)
    mr = rigidity_matroid(g)
    mc = cycle_matroid(g)
    # deletion/contraction keep the original edge order, so grounds line up
    assert deleted.ground == g.ground and contracted.ground == g.ground
    return ConeQuotientReport(
        deletion_identity=deleted.bases.masks == mr.bases.masks,
        contraction_identity=contracted.bases.masks == mc.bases.masks,
    )


def _corpus() -> dict[str, Multigraph]:
    tri = Multigraph.build("uvw", [("e1", "u", "v"), ("e2", "v", "w"), ("e3", "u", "w")])
    p3 = Multigraph.build("uvw", [("e1", "u", "v"), ("e2", "v", "w")])
    k4 = Multigraph.build(
        "tuvw",
        [
            ("e1", "t", "u"),
            ("e2", "t", "v"),
            ("e3", "t", "w"),
            ("e4", "u", "v"),
            ("e5", "u", "w"),
            ("e6", "v", "w"),
        ],
    )
    k4_minus = Multigraph.build(
        "tuvw",
        [
            ("e1", "t", "u"),
            ("e2", "t", "v"),
            ("e3", "t", "w"),
            ("e4", "u", "v"),
            ("e5", "u", "w"),
        ],
    )
    bowtie = Multigraph.build(
        "stuvw",
        [
            ("e1", "s", "t"),
            ("e2", "t", "u"),
            ("e3", "s", "u"),
            ("e4", "u", "v"),
            ("e5", "v", "w"),
            ("e6", "u", "w"),
        ],
    )
    c5 = Multigraph.build(
        "stuvw",
        [
            ("e1", "s", "t"),
            ("e2", "t", "u"),
            ("e3", "u", "v"),
            ("e4", "v", "w"),
            ("e5", "w", "s"),
        ],
    )
    chordal_c4 = Multigraph.build(
        "tuvw",
        [
            ("e1", "t", "u"),
            ("e2", "u", "v"),
            ("e3", "v", "w"),
            ("e4", "w", "t"),
            ("e5", "t", "v"),
        ],
    )
    return {
        "triangle": tri,
        "path_p3": p3,
        "k4": k4,
        "k4_minus_edge": k4_minus,
        "two_triangles": bowtie,
        "c5": c5,
        "c4_with_chord": chordal_c4,
    }


#: Fixed graph corpus used by the batch verification suites.
CORPUS: dict[str, Multigraph] = _corpus()
