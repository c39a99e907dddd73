"""Fixed pattern library and induced-subgraph detection.

Detection is plain subset enumeration plus an isomorphism check against
the pattern: hosts here have at most 13 vertices and patterns at most 8,
so C(13,6) ~ 1716 subsets is negligible and the approach is transparent.
Witnesses are the lexicographically smallest hitting subset, which makes
every report deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import (
    Graph,
    complement,
    complete_graph,
    cycle_graph,
    disjoint_union,
    induced_subgraph,
    is_isomorphic,
    path_graph,
)

PATTERN_CAP = 8


@dataclass(frozen=True)
class Pattern:
    """A named forbidden graph of order at most 8."""

    name: str
    graph: Graph

    def __post_init__(self):
        if self.graph.n > PATTERN_CAP:
            raise ValueError(f"pattern {self.name!r} exceeds {PATTERN_CAP} vertices")


def _p3_plus_k2() -> Graph:
    return disjoint_union(path_graph(3), complete_graph(2))


def _three_k2() -> Graph:
    g = complete_graph(2)
    return disjoint_union(disjoint_union(g, g), g)


PATTERNS: dict[str, Pattern] = {
    "C4": Pattern("C4", cycle_graph(4)),
    "P4": Pattern("P4", path_graph(4)),
    "P3+K2": Pattern("P3+K2", _p3_plus_k2()),
    "3K2": Pattern("3K2", _three_k2()),
}

# Finite families scan their members in the listed order.
FAMILIES: dict[str, tuple[str, ...]] = {
    "omega_psi_quartet": ("C4", "P4", "P3+K2", "3K2"),
    "p4_only": ("P4",),
    "achro_triple": ("P4", "P3+K2", "3K2"),
    "odd_holes_and_antiholes": ("C2k+1", "co-C2k+1"),
}


@dataclass(frozen=True)
class FreeReport:
    """Outcome of scanning one forbidden family over a host graph."""

    family: tuple[str, ...]
    witness: tuple[str, frozenset[int]] | None

    @property
    def free(self) -> bool:
        return self.witness is None

    def to_dict(self) -> dict:
        out: dict = {"family": list(self.family), "free": self.free}
        if self.witness is None:
            out["witness"] = None
        else:
            name, vertices = self.witness
            out["witness"] = {"pattern": name, "vertices": sorted(vertices)}
        return out


def contains_induced(g: Graph, pattern: Pattern) -> frozenset[int] | None:
    """Lexicographically smallest vertex subset inducing ``pattern``, if any."""
    p = pattern.graph
    if p.n > g.n:
        return None
    target_degrees = sorted(p.adj[v].bit_count() for v in range(p.n))
    target_edges = p.edge_count()
    for subset in combinations(range(g.n), p.n):
        sub = induced_subgraph(g, subset)
        if sub.edge_count() != target_edges:
            continue
        if sorted(sub.adj[v].bit_count() for v in range(sub.n)) != target_degrees:
            continue
        if is_isomorphic(sub, p):
            return frozenset(subset)
    return None


def _odd_hole_scan(g: Graph) -> tuple[str, frozenset[int]] | None:
    """First induced odd cycle of length >= 5 in g or in its complement.

    Scan order: ascending length, hole before antihole at each length.
    """
    co = complement(g)
    for length in range(5, g.n + 1, 2):
        pattern = Pattern("C2k+1", cycle_graph(length))
        hit = contains_induced(g, pattern)
        if hit is not None:
            return ("C2k+1", hit)
        hit = contains_induced(co, pattern)
        if hit is not None:
            return ("co-C2k+1", hit)
    return None


def family_check(g: Graph, family: str) -> FreeReport:
    """Scan one named family, reporting the first witness in family order."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}, expected one of {sorted(FAMILIES)}")
    members = FAMILIES[family]
    if family == "odd_holes_and_antiholes":
        return FreeReport(members, _odd_hole_scan(g))
    for name in members:
        hit = contains_induced(g, PATTERNS[name])
        if hit is not None:
            return FreeReport(members, (name, hit))
    return FreeReport(members, None)


def is_family_free(g: Graph, family: str) -> bool:
    return family_check(g, family).free
