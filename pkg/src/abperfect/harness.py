"""Small-graph enumeration, theorem sweep drivers, and report emission.

Canonical enumeration extends each (n-1)-vertex representative by one
new vertex with every possible neighborhood and dedups by canonical
form.  Every isomorphism class on n vertices arises this way: delete any
vertex of a member, map the rest onto its class representative, and the
deleted vertex's neighborhood gives the extension mask.

Sweeps stream graphs, stop collecting after 100 violations, and are
deterministic: identical reports (elapsed time aside) across runs and
across worker counts.
"""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from pathlib import Path
from typing import Callable, Iterable, Iterator

from .forbidden import PATTERNS, contains_induced, family_check
from .graph6 import parse_graph6_lines, to_graph6
from .graphs import (
    CapacityError,
    Graph,
    bits,
    canonical_form,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_edge_list,
    is_connected,
    path_graph,
    universal_vertices,
)
from .perfectness import is_ab_perfect, verify_equivalence
from .solvers import (
    achromatic_number,
    chromatic_number,
    clique_number,
    grundy_number,
    has_coloring,
    pseudoachromatic_number,
)

LABELED_CAP = 7
CANONICAL_ENUM_CAP = 8
VIOLATION_LIMIT = 100


@lru_cache(maxsize=None)
def _canonical_level(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (empty_graph(1),)
    seen: dict[bytes, Graph] = {}
    for parent in _canonical_level(n - 1):
        base = list(parent.adj) + [0]
        for mask in range(1 << (n - 1)):
            rows = list(base)
            rows[n - 1] = mask
            for u in bits(mask):
                rows[u] |= 1 << (n - 1)
            g = Graph(n, rows)
            key = canonical_form(g)
            if key not in seen:
                seen[key] = g
    return tuple(seen.values())


def enumerate_graphs(n: int, mode: str = "canonical") -> Iterator[Graph]:
    """Stream all graphs on n vertices, labeled or one per isomorphism class."""
    if mode == "labeled":
        if not 1 <= n <= LABELED_CAP:
            raise CapacityError(f"labeled enumeration capped at {LABELED_CAP} vertices, got {n}")
        pairs = list(combinations(range(n), 2))
        for code in range(1 << len(pairs)):
            yield from_edge_list(n, [pairs[i] for i in bits(code)])
    elif mode == "canonical":
        if not 1 <= n <= CANONICAL_ENUM_CAP:
            raise CapacityError(
                f"canonical enumeration capped at {CANONICAL_ENUM_CAP} vertices, got {n}"
            )
        yield from _canonical_level(n)
    else:
        raise ValueError(f"unknown mode {mode!r}, expected 'labeled' or 'canonical'")


# ---------------------------------------------------------------------------
# Theorem checkers (one per sweep id); each returns a detail string on
# violation and None on success.
# ---------------------------------------------------------------------------


def _check_eq1_chain(g: Graph) -> str | None:
    values = (
        clique_number(g),
        chromatic_number(g),
        grundy_number(g),
        achromatic_number(g),
        pseudoachromatic_number(g),
    )
    if any(a > b for a, b in zip(values, values[1:])):
        names = ("omega", "chi", "gamma", "alpha", "psi")
        joined = " ".join(f"{k}={v}" for k, v in zip(names, values))
        return f"chain violated: {joined}"
    return None


def _check_theorem4(g: Graph) -> str | None:
    record = verify_equivalence(g)
    if not record.all_equal:
        return (
            "equivalence broken: "
            f"omega_psi={record.omega_psi_perfect} "
            f"chi_psi={record.chi_psi_perfect} "
            f"quartet_free={record.quartet_free} "
            f"structure={record.structure_accepted}"
        )
    return None


def _check_theorem1_cs(g: Graph) -> str | None:
    p_og = is_ab_perfect(g, "omega", "gamma").perfect
    p_cg = is_ab_perfect(g, "chi", "gamma").perfect
    free = family_check(g, "p4_only").free
    if not p_og == p_cg == free:
        return f"omega_gamma={p_og} chi_gamma={p_cg} p4_free={free}"
    return None


def _check_theorem2_cs(g: Graph) -> str | None:
    p_oa = is_ab_perfect(g, "omega", "alpha").perfect
    p_ca = is_ab_perfect(g, "chi", "alpha").perfect
    free = family_check(g, "achro_triple").free
    if not p_oa == p_ca == free:
        return f"omega_alpha={p_oa} chi_alpha={p_ca} triple_free={free}"
    return None


def _is_c4_p4_free(g: Graph) -> bool:
    return (
        contains_induced(g, PATTERNS["C4"]) is None
        and contains_induced(g, PATTERNS["P4"]) is None
    )


def _lemma1_filter(g: Graph) -> bool:
    return is_connected(g) and _is_c4_p4_free(g)


def _check_lemma1(g: Graph) -> str | None:
    if not universal_vertices(g):
        return "connected (C4,P4)-free graph without a universal vertex"
    return None


def _check_interpolation_hhp(g: Graph) -> str | None:
    chi = chromatic_number(g)
    alpha = achromatic_number(g)
    for a in range(chi, alpha + 1):
        if not has_coloring(g, a, "proper_complete"):
            return f"no proper complete coloring with {a} colors (chi={chi}, alpha={alpha})"
    return None


def _check_interpolation_grundy(g: Graph) -> str | None:
    chi = chromatic_number(g)
    gamma = grundy_number(g)
    for b in range(chi, gamma + 1):
        if not has_coloring(g, b, "grundy"):
            return f"no Grundy coloring with {b} colors (chi={chi}, gamma={gamma})"
    return None


def _check_figure3_implications(g: Graph) -> str | None:
    chain = [
        is_ab_perfect(g, "omega", "psi").perfect,
        is_ab_perfect(g, "omega", "alpha").perfect,
        is_ab_perfect(g, "omega", "gamma").perfect,
        is_ab_perfect(g, "omega", "chi").perfect,
    ]
    # omega_psi implies omega_alpha implies omega_gamma implies omega_chi
    for stronger, weaker, label in (
        (chain[0], chain[1], "omega_psi -> omega_alpha"),
        (chain[1], chain[2], "omega_alpha -> omega_gamma"),
        (chain[2], chain[3], "omega_gamma -> omega_chi"),
    ):
        if stronger and not weaker:
            return f"inclusion {label} violated"
    return None


# Witnesses that the inclusions between perfectness classes are strict:
# each graph is perfect for the first pair and imperfect for the second.
SEPARATION_WITNESSES: tuple[tuple[str, Callable[[], Graph], tuple[str, str], tuple[str, str]], ...] = (
    ("P4", lambda: path_graph(4), ("omega", "chi"), ("omega", "gamma")),
    ("C4", lambda: cycle_graph(4), ("omega", "alpha"), ("omega", "psi")),
    ("C5", lambda: cycle_graph(5), ("alpha", "psi"), ("omega", "chi")),
    (
        "P3+K2",
        lambda: disjoint_union(path_graph(3), complete_graph(2)),
        ("omega", "gamma"),
        ("omega", "alpha"),
    ),
)


@dataclass(frozen=True)
class _Target:
    checker: Callable[[Graph], str | None]
    cap: int
    hypothesis: Callable[[Graph], bool] | None = None


_TARGETS: dict[str, _Target] = {
    "eq1_chain": _Target(_check_eq1_chain, CANONICAL_ENUM_CAP),
    "theorem4": _Target(_check_theorem4, CANONICAL_ENUM_CAP),
    "theorem1_cs": _Target(_check_theorem1_cs, CANONICAL_ENUM_CAP),
    "theorem2_cs": _Target(_check_theorem2_cs, CANONICAL_ENUM_CAP),
    "lemma1": _Target(_check_lemma1, CANONICAL_ENUM_CAP, hypothesis=_lemma1_filter),
    "interpolation_hhp": _Target(_check_interpolation_hhp, CANONICAL_ENUM_CAP),
    "interpolation_grundy": _Target(_check_interpolation_grundy, CANONICAL_ENUM_CAP),
    "figure3_inclusions": _Target(_check_figure3_implications, CANONICAL_ENUM_CAP),
}

LEMMA2_CAP = 13

THEOREM_IDS = tuple(sorted(_TARGETS)) + ("lemma2",)


@dataclass
class SweepReport:
    """Outcome of one theorem sweep."""

    theorem: str
    n_max: int
    checked: int
    violations: list[tuple[str, str]]
    elapsed_ms: int

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "n_max": self.n_max,
            "checked": self.checked,
            "violations": [
                {"graph6": g6, "detail": detail} for g6, detail in self.violations
            ],
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["graph6", "detail"])
        for g6, detail in self.violations:
            writer.writerow([g6, detail])
        return buf.getvalue()

    def to_text(self) -> str:
        status = "pass" if self.passed else f"{len(self.violations)} violation(s)"
        lines = [
            f"{self.theorem}: checked {self.checked} graphs up to n={self.n_max}: "
            f"{status} [{self.elapsed_ms} ms]"
        ]
        lines.extend(f"  {g6}  {detail}" for g6, detail in self.violations)
        return "\n".join(lines)


def _evaluate(theorem: str, g6: str) -> str | None:
    """Worker body: parse one graph6 line and run the theorem checker."""
    target = _TARGETS[theorem]
    g = next(parse_graph6_lines([g6]))
    if target.hypothesis is not None and not target.hypothesis(g):
        return "__skipped__"
    return target.checker(g)


def _sweep_lemma2(n_max: int) -> tuple[int, list[tuple[str, str]]]:
    """Two complete components plus isolated vertices keep omega = psi.

    Grid: component sizes 1..5 each, 0..3 isolated vertices, restricted
    to total order <= n_max.
    """
    checked = 0
    violations: list[tuple[str, str]] = []
    for m1 in range(1, 6):
        for m2 in range(1, 6):
            for t in range(4):
                if m1 + m2 + t > n_max:
                    continue
                g = disjoint_union(complete_graph(m1), complete_graph(m2))
                if t:
                    g = disjoint_union(g, empty_graph(t))
                checked += 1
                expected = max(m1, m2)
                omega = clique_number(g)
                psi = pseudoachromatic_number(g)
                if not omega == psi == expected:
                    violations.append(
                        (
                            to_graph6(g),
                            f"m1={m1} m2={m2} t={t}: omega={omega} psi={psi} "
                            f"expected {expected}",
                        )
                    )
    return checked, violations


def _sweep_figure3_witnesses(violations: list[tuple[str, str]]) -> int:
    checked = 0
    for name, make, perfect_pair, imperfect_pair in SEPARATION_WITNESSES:
        g = make()
        checked += 1
        got_perfect = is_ab_perfect(g, *perfect_pair).perfect
        got_imperfect = is_ab_perfect(g, *imperfect_pair).perfect
        if not got_perfect:
            violations.append(
                (to_graph6(g), f"witness {name} not {perfect_pair[0]}-{perfect_pair[1]}-perfect")
            )
        if got_imperfect:
            violations.append(
                (
                    to_graph6(g),
                    f"witness {name} unexpectedly {imperfect_pair[0]}-{imperfect_pair[1]}-perfect",
                )
            )
    return checked


def sweep(theorem: str, n_max: int, jobs: int = 1) -> SweepReport:
    """Run one theorem check over every canonical graph with at most n_max vertices.

    ``jobs`` > 1 fans the per-graph work out to a process pool; reports are
    reduced in enumeration order, so the outcome is identical for any count.
    """
    start = time.monotonic()
    if theorem == "lemma2":
        if not 1 <= n_max <= LEMMA2_CAP:
            raise CapacityError(f"lemma2 sweep capped at total order {LEMMA2_CAP}")
        checked, violations = _sweep_lemma2(n_max)
        elapsed = int((time.monotonic() - start) * 1000)
        return SweepReport("lemma2", n_max, checked, violations[:VIOLATION_LIMIT], elapsed)
    if theorem not in _TARGETS:
        raise ValueError(f"unknown theorem {theorem!r}, expected one of {THEOREM_IDS}")
    target = _TARGETS[theorem]
    if not 1 <= n_max <= target.cap:
        raise CapacityError(f"{theorem} sweep capped at n={target.cap}, got {n_max}")
    checked = 0
    violations: list[tuple[str, str]] = []

    def source() -> Iterator[str]:
        for n in range(1, n_max + 1):
            for g in enumerate_graphs(n, "canonical"):
                yield to_graph6(g)

    if jobs <= 1:
        results: Iterable[tuple[str, str | None]] = (
            (g6, _evaluate(theorem, g6)) for g6 in source()
        )
    else:
        def parallel() -> Iterator[tuple[str, str | None]]:
            lines = list(source())
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                outcomes = pool.map(
                    _evaluate, [theorem] * len(lines), lines, chunksize=16
                )
                yield from zip(lines, outcomes)

        results = parallel()

    for g6, outcome in results:
        if outcome == "__skipped__":
            continue
        checked += 1
        if outcome is not None and len(violations) < VIOLATION_LIMIT:
            violations.append((g6, outcome))
    if theorem == "figure3_inclusions":
        checked += _sweep_figure3_witnesses(violations)
    elapsed = int((time.monotonic() - start) * 1000)
    return SweepReport(theorem, n_max, checked, violations[:VIOLATION_LIMIT], elapsed)


# ---------------------------------------------------------------------------
# Cycle table
# ---------------------------------------------------------------------------

CYCLE_CAP = 12


def _alpha_psi_split_predicted(n: int) -> bool:
    """n values of the form 2x^2 + x + 1 (x >= 1) are exactly where alpha < psi."""
    x = 1
    while 2 * x * x + x + 1 <= n:
        if 2 * x * x + x + 1 == n:
            return True
        x += 1
    return False


def cycle_alpha_psi(n_max: int) -> list[dict]:
    """Achromatic vs pseudoachromatic numbers of cycles up to n_max vertices."""
    if not 3 <= n_max <= CYCLE_CAP:
        raise CapacityError(f"cycle table covers n in 3..{CYCLE_CAP}, got {n_max}")
    rows = []
    for n in range(3, n_max + 1):
        g = cycle_graph(n)
        alpha = achromatic_number(g)
        psi = pseudoachromatic_number(g)
        predicted_equal = not _alpha_psi_split_predicted(n)
        rows.append(
            {
                "n": n,
                "alpha": alpha,
                "psi": psi,
                "predicted_equal": predicted_equal,
                "equal": alpha == psi,
            }
        )
    return rows


# ---------------------------------------------------------------------------
# Corpus ingestion and generic reports
# ---------------------------------------------------------------------------


def ingest(source) -> Iterator[Graph]:
    """Stream graphs from a path, file object, or iterable of graph6 lines.

    Order-preserving; an unparsable line raises with its line number.
    """
    if isinstance(source, (str, Path)):
        def from_path() -> Iterator[Graph]:
            with open(source, "r", encoding="ascii") as handle:
                yield from parse_graph6_lines(handle)

        return from_path()
    return parse_graph6_lines(source)


def report(results: Iterable, fmt: str = "text") -> str:
    """Render a list of dict-like results deterministically."""
    rows = [r.to_dict() if hasattr(r, "to_dict") else dict(r) for r in results]
    if fmt == "json":
        return json.dumps(rows)
    if fmt == "csv":
        if not rows:
            return ""
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    if fmt == "text":
        lines = []
        for row in rows:
            lines.append("  ".join(f"{key}={value}" for key, value in row.items()))
        return "\n".join(lines)
    raise ValueError(f"unknown format {fmt!r}, expected json, csv, or text")
