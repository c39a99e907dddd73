"""Exact solvers for the five coloring invariants of small graphs.

clique number      -- branch and bound over adjacency bitsets
chromatic number   -- iterative deepening k-colorability from the clique bound
Grundy number      -- memoized chains of maximal independent sets
achromatic and pseudoachromatic numbers
                   -- backtracking over canonically-ordered set partitions
                      with an uncovered-pairs vs. remaining-edges prune

Every cap below is a hard error, never a silent fallback: an approximate
answer would poison the theorem sweeps built on these solvers.  Search
order is fixed (vertices ascending, colors ascending, independent sets in
ascending bit order) so witnesses are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .colorings import Coloring
from .graphs import CapacityError, Graph, bits

CHROMATIC_CAP = 16
GRUNDY_CAP = 13
ACHROMATIC_CAP = 13
PSEUDOACHROMATIC_CAP = 13
PROFILE_CAP = 13

COLORING_MODES = ("complete", "proper_complete", "grundy")


@dataclass(frozen=True)
class ParameterProfile:
    """The 5-tuple of invariants for one graph.

    The constructor enforces the universal chain
    omega <= chi <= gamma <= alpha <= psi; a violation can only mean a
    solver bug, so it is a hard error.
    """

    omega: int
    chi: int
    gamma: int
    alpha: int
    psi: int

    def __post_init__(self):
        chain = (self.omega, self.chi, self.gamma, self.alpha, self.psi)
        if any(x < 1 for x in chain) or any(
            a > b for a, b in zip(chain, chain[1:])
        ):
            raise ValueError(f"invariant chain violated: {chain}")

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.omega, self.chi, self.gamma, self.alpha, self.psi)

    def to_dict(self) -> dict[str, int]:
        return {
            "omega": self.omega,
            "chi": self.chi,
            "gamma": self.gamma,
            "alpha": self.alpha,
            "psi": self.psi,
        }


# ---------------------------------------------------------------------------
# Clique number
# ---------------------------------------------------------------------------


def clique_number(g: Graph, witness: bool = False) -> int | tuple[int, frozenset[int]]:
    """Size of a maximum clique, optionally with one witness vertex set."""
    adj = g.adj
    best_size = 0
    best_mask = 0

    def expand(clique: int, size: int, cand: int) -> None:
        nonlocal best_size, best_mask
        if size > best_size:
            best_size, best_mask = size, clique
        while cand:
            if size + cand.bit_count() <= best_size:
                return
            low = cand & -cand
            cand ^= low
            expand(clique | low, size + 1, cand & adj[low.bit_length() - 1])

    expand(0, 0, (1 << g.n) - 1)
    if witness:
        return best_size, frozenset(bits(best_mask))
    return best_size


# ---------------------------------------------------------------------------
# Chromatic number
# ---------------------------------------------------------------------------


def _proper_k_coloring(g: Graph, k: int) -> list[int] | None:
    """First proper coloring with at most k colors in canonical order."""
    n, adj = g.n, g.adj
    color = [0] * n
    class_masks = [0] * (k + 1)

    def assign(v: int, used: int) -> bool:
        if v == n:
            return True
        row = adj[v]
        for c in range(1, min(k, used + 1) + 1):
            if class_masks[c] & row:
                continue
            color[v] = c
            class_masks[c] |= 1 << v
            if assign(v + 1, max(used, c)):
                return True
            class_masks[c] &= ~(1 << v)
        color[v] = 0
        return False

    return color if assign(0, 0) else None


def chromatic_number(g: Graph, witness: bool = False) -> int | tuple[int, Coloring]:
    """Least number of colors in a proper coloring."""
    if g.n > CHROMATIC_CAP:
        raise CapacityError(f"chromatic_number capped at {CHROMATIC_CAP} vertices, got {g.n}")
    k = clique_number(g)
    while True:
        found = _proper_k_coloring(g, k)
        if found is not None:
            # The first success sits exactly at chi, so all k colors appear.
            return (k, Coloring(tuple(found))) if witness else k
        k += 1


# ---------------------------------------------------------------------------
# Grundy number
# ---------------------------------------------------------------------------


def _maximal_independent_sets(adj: tuple[int, ...], universe: int) -> list[int]:
    """Masks of all maximal independent sets of the subgraph on ``universe``.

    Bron-Kerbosch with pivoting on the complement; deterministic order.
    """
    out: list[int] = []

    def nonadj(v: int) -> int:
        return universe & ~adj[v] & ~(1 << v)

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot, pivot_cnt = -1, -1
        for u in bits(p | x):
            cnt = (p & nonadj(u)).bit_count()
            if cnt > pivot_cnt:
                pivot, pivot_cnt = u, cnt
        for v in bits(p & ~nonadj(pivot)):
            nv = nonadj(v)
            bk(r | (1 << v), p & nv, x & nv)
            p &= ~(1 << v)
            x |= 1 << v

    bk(0, universe, 0)
    return out


def _grundy_reachable(g: Graph) -> dict[int, frozenset[int]]:
    """For each reachable vertex mask, the set of feasible Grundy color counts.

    A coloring is Grundy with first class C1 exactly when C1 is a maximal
    independent set and the rest is Grundy on the remainder, so feasible
    counts satisfy counts(S) = {1 + t : M maximal independent in S,
    t in counts(S minus M)}.
    """
    adj = g.adj
    memo: dict[int, frozenset[int]] = {0: frozenset({0})}

    def reach(mask: int) -> frozenset[int]:
        got = memo.get(mask)
        if got is not None:
            return got
        vals: set[int] = set()
        for s in _maximal_independent_sets(adj, mask):
            vals.update(t + 1 for t in reach(mask & ~s))
        out = frozenset(vals)
        memo[mask] = out
        return out

    reach((1 << g.n) - 1)
    return memo


def grundy_number(g: Graph, witness: bool = False) -> int | tuple[int, Coloring]:
    """Largest number of colors in a Grundy coloring."""
    if g.n > GRUNDY_CAP:
        raise CapacityError(f"grundy_number capped at {GRUNDY_CAP} vertices, got {g.n}")
    memo = _grundy_reachable(g)
    full = (1 << g.n) - 1
    value = max(memo[full])
    if not witness:
        return value
    color = [0] * g.n
    mask, need = full, value
    level = 0
    while mask:
        level += 1
        for s in _maximal_independent_sets(g.adj, mask):
            if need - 1 in memo[mask & ~s]:
                for v in bits(s):
                    color[v] = level
                mask &= ~s
                need -= 1
                break
    return value, Coloring(tuple(color))


# ---------------------------------------------------------------------------
# Complete colorings (achromatic / pseudoachromatic)
# ---------------------------------------------------------------------------


def _complete_partition(g: Graph, k: int, proper: bool) -> list[int] | None:
    """First assignment into exactly k classes forming a complete coloring.

    Classes are canonically ordered (a new color may open only after all
    smaller ones), which both breaks the k! color symmetry and makes the
    returned witness the normalized one.  Prunes on: properness, classes
    that can no longer all open, and uncovered color pairs exceeding the
    edges that still have an unassigned endpoint.
    """
    n, adj = g.n, g.adj
    m = g.edge_count()
    if k > n or k * (k - 1) // 2 > m:
        return None
    color = [0] * n
    class_masks = [0] * (k + 1)
    total_pairs = k * (k - 1) // 2

    def pair_bit(a: int, b: int) -> int:
        return 1 << ((b - 1) * (b - 2) // 2 + (a - 1))

    def assign(v: int, used: int, covered: int, uncovered: int,
               assigned_mask: int, future_edges: int) -> bool:
        if v == n:
            return uncovered == 0 and used == k
        if k - used > n - v:
            return False
        row = adj[v]
        nbrs = row & assigned_mask
        future_after = future_edges - nbrs.bit_count()
        for c in range(1, min(k, used + 1) + 1):
            if proper and class_masks[c] & row:
                continue
            new_pairs = 0
            for u in bits(nbrs):
                cu = color[u]
                if cu != c:
                    new_pairs |= pair_bit(min(cu, c), max(cu, c))
            new_pairs &= ~covered
            uncovered_after = uncovered - new_pairs.bit_count()
            if uncovered_after > future_after:
                continue
            color[v] = c
            class_masks[c] |= 1 << v
            if assign(v + 1, max(used, c), covered | new_pairs,
                      uncovered_after, assigned_mask | 1 << v, future_after):
                return True
            class_masks[c] &= ~(1 << v)
        color[v] = 0
        return False

    return color if assign(0, 0, 0, total_pairs, 0, m) else None


def _max_pair_bound(g: Graph) -> int:
    """Largest k with k*(k-1)/2 <= |E|, capped by n (distinct pairs need edges)."""
    m = g.edge_count()
    k = 1
    while (k + 1) * k // 2 <= m:
        k += 1
    return min(k, g.n)


def pseudoachromatic_number(g: Graph, witness: bool = False) -> int | tuple[int, Coloring]:
    """Largest number of colors in a complete coloring (properness not required)."""
    if g.n > PSEUDOACHROMATIC_CAP:
        raise CapacityError(
            f"pseudoachromatic_number capped at {PSEUDOACHROMATIC_CAP} vertices, got {g.n}"
        )
    for k in range(_max_pair_bound(g), 0, -1):
        found = _complete_partition(g, k, proper=False)
        if found is not None:
            return (k, Coloring(tuple(found))) if witness else k
    raise AssertionError("unreachable: k=1 is always a complete coloring")


def achromatic_number(g: Graph, witness: bool = False) -> int | tuple[int, Coloring]:
    """Largest number of colors in a proper complete coloring."""
    if g.n > ACHROMATIC_CAP:
        raise CapacityError(
            f"achromatic_number capped at {ACHROMATIC_CAP} vertices, got {g.n}"
        )
    for k in range(_max_pair_bound(g), 0, -1):
        found = _complete_partition(g, k, proper=True)
        if found is not None:
            return (k, Coloring(tuple(found))) if witness else k
    raise AssertionError("unreachable: an optimal proper coloring is complete")


# ---------------------------------------------------------------------------
# Decision procedure and profile
# ---------------------------------------------------------------------------


def has_coloring(g: Graph, k: int, mode: str) -> bool:
    """Does a coloring with exactly k colors of the given mode exist?"""
    if mode not in COLORING_MODES:
        raise ValueError(f"unknown mode {mode!r}, expected one of {COLORING_MODES}")
    if not 1 <= k <= g.n:
        raise ValueError(f"color count must be in 1..{g.n}, got {k}")
    if mode == "grundy":
        if g.n > GRUNDY_CAP:
            raise CapacityError(f"grundy colorings capped at {GRUNDY_CAP} vertices, got {g.n}")
        memo = _grundy_reachable(g)
        return k in memo[(1 << g.n) - 1]
    if mode == "proper_complete":
        if g.n > ACHROMATIC_CAP:
            raise CapacityError(
                f"proper complete colorings capped at {ACHROMATIC_CAP} vertices, got {g.n}"
            )
        return _complete_partition(g, k, proper=True) is not None
    if g.n > PSEUDOACHROMATIC_CAP:
        raise CapacityError(
            f"complete colorings capped at {PSEUDOACHROMATIC_CAP} vertices, got {g.n}"
        )
    return _complete_partition(g, k, proper=False) is not None


def psi_edge_bound_holds(g: Graph) -> bool:
    """Post-hoc soundness check: psi*(psi-1)/2 can never exceed the edge count."""
    psi = pseudoachromatic_number(g)
    return psi * (psi - 1) // 2 <= g.edge_count()


def profile(g: Graph) -> ParameterProfile:
    """All five invariants; the chain inequality is asserted on construction."""
    if g.n > PROFILE_CAP:
        raise CapacityError(f"profile capped at {PROFILE_CAP} vertices, got {g.n}")
    return ParameterProfile(
        omega=clique_number(g),
        chi=chromatic_number(g),
        gamma=grundy_number(g),
        alpha=achromatic_number(g),
        psi=pseudoachromatic_number(g),
    )
