"""Immutable small simple graphs over bitmask adjacency.

Vertices are labelled 0..n-1 and each adjacency row is a single int used
as a bitset, so every graph fits in a handful of machine words.  The hard
cap of 32 vertices is deliberate: all solvers built on top of this module
are exponential, and 32 is already far beyond their feasible range.

All values are immutable after construction and all operations are pure,
so graphs can be shared freely between concurrent workers.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator

MAX_VERTICES = 32

CANONICAL_CAP = 8
ISOMORPHISM_CAP = 10


class CapacityError(ValueError):
    """A size cap was exceeded (caps are hard errors, never silent fallbacks)."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph on vertices 0..n-1, adjacency as bitmasks.

    Construction validates symmetry, irreflexivity and label range; use
    :func:`from_edge_list` or the named constructors rather than building
    adjacency rows by hand.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Iterable[int]):
        if not 1 <= n <= MAX_VERTICES:
            raise CapacityError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        rows = tuple(adj)
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"adjacency of vertex {v} mentions labels >= {n}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
        for v, row in enumerate(rows):
            for u in bits(row):
                if not rows[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph, (self.n, self.adj))

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def max_degree(self) -> int:
        return max(self.adj[v].bit_count() for v in range(self.n))

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, lexicographically sorted."""
        out = []
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def vertex_set(self) -> frozenset[int]:
        return frozenset(range(self.n))


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicates collapse, order ignored.

    Rejects loops, endpoints outside 0..n-1, and n outside 1..32.
    """
    if not 1 <= n <= MAX_VERTICES:
        raise CapacityError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop ({u},{v}) rejected")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint copies of g1 and g2 plus all cross edges."""
    n1, n2 = g1.n, g2.n
    if n1 + n2 > MAX_VERTICES:
        raise CapacityError(f"join of {n1}+{n2} vertices exceeds {MAX_VERTICES}")
    other1 = ((1 << n2) - 1) << n1
    other2 = (1 << n1) - 1
    rows = [g1.adj[v] | other1 for v in range(n1)]
    rows += [g2.adj[v] << n1 | other2 for v in range(n2)]
    return Graph(n1 + n2, rows)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint copies of g1 and g2, no cross edges."""
    n1, n2 = g1.n, g2.n
    if n1 + n2 > MAX_VERTICES:
        raise CapacityError(f"union of {n1}+{n2} vertices exceeds {MAX_VERTICES}")
    rows = list(g1.adj) + [g2.adj[v] << n1 for v in range(n2)]
    return Graph(n1 + n2, rows)


def complement(g: Graph) -> Graph:
    """Edge present iff absent in g; an involution."""
    full = (1 << g.n) - 1
    return Graph(g.n, (full & ~g.adj[v] & ~(1 << v) for v in range(g.n)))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on ``vertices``, relabelled to 0..k-1 in ascending order."""
    members = sorted(set(vertices))
    if not members:
        raise ValueError("induced subgraph on the empty set is undefined")
    if members[0] < 0 or members[-1] >= g.n:
        raise ValueError(f"vertices {members} not within 0..{g.n - 1}")
    index = {v: i for i, v in enumerate(members)}
    rows = [0] * len(members)
    for v in members:
        for u in bits(g.adj[v]):
            if u in index:
                rows[index[v]] |= 1 << index[u]
    return Graph(len(members), rows)


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Partition of the vertex set into components, ordered by smallest member."""
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        out.append(frozenset(bits(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def universal_vertices(g: Graph) -> frozenset[int]:
    """All vertices adjacent to every other vertex (degree n-1)."""
    return frozenset(v for v in range(g.n) if g.adj[v].bit_count() == g.n - 1)


def diameter(g: Graph) -> int | float:
    """Max shortest-path distance; math.inf when g is disconnected."""
    best = 0
    full = (1 << g.n) - 1
    for v in range(g.n):
        reached = 1 << v
        frontier = reached
        dist = 0
        while reached != full:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~reached
            if not frontier:
                return math.inf
            reached |= frontier
            dist += 1
        best = max(best, dist)
    return best


# ---------------------------------------------------------------------------
# Named constructions
# ---------------------------------------------------------------------------


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty_graph(n: int) -> Graph:
    return from_edge_list(n, [])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("both parts must be nonempty")
    return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def k44_c7_graph() -> Graph:
    """K4,4 and C7 glued along one shared edge: 13 vertices, 22 edges.

    Parts {0..3} and {4..7} form the K4,4; the 7-cycle is
    0-4-8-9-10-11-12-0, sharing the edge 0-4 with the K4,4.  All five
    coloring invariants take distinct values (2,3,4,5,6) on this graph.
    Which K4,4 edge is shared is immaterial up to isomorphism because
    K4,4 is edge-transitive.
    """
    edges = [(i, 4 + j) for i in range(4) for j in range(4)]
    ring = [0, 4, 8, 9, 10, 11, 12]
    edges += [(ring[i], ring[(i + 1) % 7]) for i in range(1, 7)]
    return from_edge_list(13, edges)


# ---------------------------------------------------------------------------
# Isomorphism and canonical labelling
# ---------------------------------------------------------------------------


def _refine_ranks(g: Graph) -> list[int]:
    """Iterated degree refinement; rank values are isomorphism-invariant."""
    ranks = [g.adj[v].bit_count() for v in range(g.n)]
    for _ in range(g.n):
        sigs = [
            (ranks[v], tuple(sorted(ranks[u] for u in bits(g.adj[v]))))
            for v in range(g.n)
        ]
        order = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [order[s] for s in sigs]
        if new == ranks:
            break
        ranks = new
    return ranks


def canonical_form(g: Graph) -> bytes:
    """Canonical byte-string: equal for two graphs iff they are isomorphic.

    Minimum column-major adjacency code over all vertex orderings that
    place refinement classes in ascending rank order (an isomorphism-
    invariant family, so equality still characterizes isomorphism).
    Exhaustive within that family with prefix pruning; capped at 8
    vertices where the worst case (40320 orderings) is still instant.
    """
    n = g.n
    if n > CANONICAL_CAP:
        raise CapacityError(f"canonical_form capped at {CANONICAL_CAP} vertices, got {n}")
    adj = g.adj
    ranks = _refine_ranks(g)
    # Class of the vertex occupying each position is forced: classes are
    # exhausted in ascending rank order.
    by_rank: dict[int, list[int]] = {}
    for v in range(n):
        by_rank.setdefault(ranks[v], []).append(v)
    groups = [by_rank[r] for r in sorted(by_rank)]
    group_at = [grp for grp in groups for _ in grp]
    big = 1 << (n + 1)
    best = [big] * n
    placed: list[int] = []
    placed_mask = 0

    def place(depth: int) -> None:
        nonlocal placed_mask
        if depth == n:
            return
        for v in group_at[depth]:
            if placed_mask >> v & 1:
                continue
            col = 0
            row = adj[v]
            for u in placed:
                col = col << 1 | (row >> u & 1)
            if col > best[depth]:
                continue
            if col < best[depth]:
                best[depth] = col
                for i in range(depth + 1, n):
                    best[i] = big
            placed.append(v)
            placed_mask |= 1 << v
            place(depth + 1)
            placed.pop()
            placed_mask &= ~(1 << v)

    place(0)
    code = 0
    for depth in range(1, n):
        code = code << depth | best[depth]
    nbits = n * (n - 1) // 2
    return bytes([n]) + code.to_bytes((nbits + 7) // 8 or 1, "big")


def _mapping_exists(g1: Graph, g2: Graph, ranks1: list[int], ranks2: list[int]) -> bool:
    """Backtracking search for an adjacency-preserving bijection g1 -> g2."""
    n = g1.n
    image = [-1] * n
    used = 0

    def extend(v: int) -> bool:
        nonlocal used
        if v == n:
            return True
        row = g1.adj[v]
        for w in range(n):
            if used >> w & 1 or ranks1[v] != ranks2[w]:
                continue
            ok = True
            for u in range(v):
                if (row >> u & 1) != (g2.adj[w] >> image[u] & 1):
                    ok = False
                    break
            if not ok:
                continue
            image[v] = w
            used |= 1 << w
            if extend(v + 1):
                return True
            used &= ~(1 << w)
        image[v] = -1
        return False

    return extend(0)


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Exact isomorphism test via invariant screening plus backtracking."""
    if max(g1.n, g2.n) > ISOMORPHISM_CAP:
        raise CapacityError(
            f"is_isomorphic capped at {ISOMORPHISM_CAP} vertices, "
            f"got {g1.n} and {g2.n}"
        )
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return False
    ranks1, ranks2 = _refine_ranks(g1), _refine_ranks(g2)
    if sorted(ranks1) != sorted(ranks2):
        return False
    return _mapping_exists(g1, g2, ranks1, ranks2)
