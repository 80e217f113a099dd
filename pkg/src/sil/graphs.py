"""Edge-weighted graphs and the standard-gradedness classification.

A codimension-2 unmixed ideal that is generically a complete intersection
is the intersection of ideals (x_i^{a_ij}, x_j^{a_ji}) over the edges of
a uniquely determined simple graph, with one positive weight per edge
endpoint.  The classifier decides standard gradedness of the symbolic
power algebra through that graph: it holds exactly when the graph is
bipartite and the weight at each vertex is constant across its edges
(so the ideal is a plain variable substitution of a vertex cover ideal).
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .decompose import Decomposition
from .monomials import Monomial, MonomialIdeal, SubstitutionVector, VariableContext
from .symbolic import symbolic_witness


class StructureError(ValueError):
    """The ideal or graph does not have the shape an operation requires."""


@dataclass(frozen=True)
class WeightedEdge:
    """Edge {i, j} with i < j and one positive weight per endpoint."""

    i: int
    j: int
    weight_i: int
    weight_j: int

    def __post_init__(self) -> None:
        if self.i >= self.j:
            raise ValueError(f"edge endpoints must satisfy i < j, got ({self.i}, {self.j})")
        if self.weight_i < 1 or self.weight_j < 1:
            raise ValueError(f"edge weights must be positive: {self}")

    def weight_at(self, v: int) -> int:
        if v == self.i:
            return self.weight_i
        if v == self.j:
            return self.weight_j
        raise ValueError(f"vertex {v} is not an endpoint of edge ({self.i}, {self.j})")


@dataclass(frozen=True)
class EdgeWeightedGraph:
    """Simple graph on vertices 0..n-1 with two weights per edge."""

    vertex_count: int
    edges: tuple[WeightedEdge, ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "edges", tuple(sorted(self.edges, key=lambda e: (e.i, e.j)))
        )
        if self.vertex_count < 1:
            raise ValueError("a graph needs at least one vertex")
        seen = set()
        for e in self.edges:
            if e.j >= self.vertex_count:
                raise ValueError(f"edge ({e.i}, {e.j}) exceeds vertex count {self.vertex_count}")
            if (e.i, e.j) in seen:
                raise ValueError(f"duplicate edge ({e.i}, {e.j})")
            seen.add((e.i, e.j))

    @classmethod
    def from_tuples(
        cls, vertex_count: int, items: list[tuple[int, int, int, int]]
    ) -> EdgeWeightedGraph:
        """Build from (i, j, weight at i, weight at j) tuples, any orientation."""
        edges = []
        for i, j, wi, wj in items:
            if i > j:
                i, j, wi, wj = j, i, wj, wi
            edges.append(WeightedEdge(i, j, wi, wj))
        return cls(vertex_count, tuple(edges))

    def incident(self, v: int) -> list[tuple[WeightedEdge, int]]:
        """Edges at v, each with the weight at v."""
        return [(e, e.weight_at(v)) for e in self.edges if v in (e.i, e.j)]

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for e in self.edges:
            adj[e.i].append(e.j)
            adj[e.j].append(e.i)
        return adj


@dataclass(frozen=True)
class BipartiteCertificate:
    """2-coloring when bipartite, an odd cycle (vertex list) when not."""

    is_bipartite: bool
    coloring: tuple[int, ...] | None
    odd_cycle: tuple[int, ...] | None


@dataclass(frozen=True)
class ClassificationResult:
    standard_graded: bool
    bipartite: bool
    trivial_modification: SubstitutionVector | None
    witness: Monomial | None


def graph_from_ideal(dec: Decomposition) -> EdgeWeightedGraph:
    """Read the edge-weighted graph off a codim-2 unmixed gci decomposition."""
    if dec.codimension() != 2:
        raise StructureError(
            f"not codimension 2: codimension is {dec.codimension()}"
        )
    if not dec.is_unmixed():
        heights = sorted({c.height for c in dec.irreducibles})
        raise StructureError(f"not unmixed: components of heights {heights}")
    if not dec.is_generically_ci():
        raise StructureError(
            "not generically a complete intersection: a minimal support carries several components"
        )
    items = []
    for comp in dec.irreducibles:
        i, j = comp.support()
        items.append((i, j, comp.a[i], comp.a[j]))
    return EdgeWeightedGraph.from_tuples(dec.context.n, items)


def _default_context(vertex_count: int) -> VariableContext:
    return VariableContext(tuple(f"x{i + 1}" for i in range(vertex_count)))


def ideal_from_graph(
    graph: EdgeWeightedGraph, context: VariableContext | None = None
) -> MonomialIdeal:
    """Intersect (x_i^{w_i}, x_j^{w_j}) over the edges.

    An edgeless graph gives the unit ideal (empty intersection).
    """
    ctx = context if context is not None else _default_context(graph.vertex_count)
    if ctx.n != graph.vertex_count:
        raise ValueError(
            f"context has {ctx.n} variables, graph has {graph.vertex_count} vertices"
        )
    result = MonomialIdeal.unit(ctx)
    for e in graph.edges:
        edge_ideal = MonomialIdeal._from_vectors(
            [
                tuple(e.weight_i if v == e.i else 0 for v in range(ctx.n)),
                tuple(e.weight_j if v == e.j else 0 for v in range(ctx.n)),
            ],
            ctx,
        )
        result = result.intersect(edge_ideal)
    return result


def vertex_cover_ideal(
    graph: EdgeWeightedGraph, context: VariableContext | None = None
) -> MonomialIdeal:
    """The all-weights-1 ideal; generators correspond to vertex covers."""
    stripped = EdgeWeightedGraph(
        graph.vertex_count,
        tuple(WeightedEdge(e.i, e.j, 1, 1) for e in graph.edges),
    )
    return ideal_from_graph(stripped, context)


def is_bipartite(graph: EdgeWeightedGraph) -> BipartiteCertificate:
    """Breadth-first 2-coloring with a certificate either way.

    Vertices are visited in index order, so the certificate is
    deterministic.  Isolated vertices are colored 0.
    """
    n = graph.vertex_count
    adj = graph.adjacency()
    color = [-1] * n
    parent = [-1] * n
    for start in range(n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    parent[v] = u
                    queue.append(v)
                elif color[v] == color[u]:
                    return BipartiteCertificate(False, None, _odd_cycle(u, v, parent))
    return BipartiteCertificate(True, tuple(color), None)


def _odd_cycle(u: int, v: int, parent: list[int]) -> tuple[int, ...]:
    def ancestors(x: int) -> list[int]:
        path = [x]
        while parent[path[-1]] != -1:
            path.append(parent[path[-1]])
        return path

    pu, pv = ancestors(u), ancestors(v)
    common = set(pu) & set(pv)
    trimmed_u = []
    for x in pu:
        trimmed_u.append(x)
        if x in common:
            break
    trimmed_v = []
    for x in pv:
        if x in common:
            break
        trimmed_v.append(x)
    return tuple(trimmed_u + list(reversed(trimmed_v)))


def trivial_modification_of(graph: EdgeWeightedGraph) -> SubstitutionVector | None:
    """The substitution making the graph's ideal a scaled vertex cover ideal.

    Exists exactly when the weight at each vertex is constant across its
    incident edges; isolated vertices contribute 1.
    """
    c = [1] * graph.vertex_count
    for v in range(graph.vertex_count):
        weights = {w for _, w in graph.incident(v)}
        if len(weights) > 1:
            return None
        if weights:
            c[v] = weights.pop()
    return SubstitutionVector(tuple(c))


def classify_standard_graded(dec: Decomposition) -> ClassificationResult:
    """Decide standard gradedness via the graph criterion.

    The graph test is cheap; the symbolic comparison is used only to
    produce a concrete witness in I^(2) \\ I^2 when the answer is no.
    """
    graph = graph_from_ideal(dec)
    certificate = is_bipartite(graph)
    trivial = trivial_modification_of(graph)
    standard = certificate.is_bipartite and trivial is not None
    witness = None if standard else symbolic_witness(dec, 2)
    return ClassificationResult(
        standard_graded=standard,
        bipartite=certificate.is_bipartite,
        trivial_modification=trivial,
        witness=witness,
    )


def bipartite_lower_bound(graph: EdgeWeightedGraph) -> int:
    """Largest weight ratio a/gcd(a, b) over edge pairs at a common vertex.

    Both bipartition sides are covered by ranging over all vertices.
    Always at least 1.
    """
    certificate = is_bipartite(graph)
    if not certificate.is_bipartite:
        raise StructureError("graph is not bipartite")
    best = 1
    for v in range(graph.vertex_count):
        weights = [w for _, w in graph.incident(v)]
        for a in weights:
            for b in weights:
                best = max(best, a // math.gcd(a, b))
    return best
