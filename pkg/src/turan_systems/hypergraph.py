"""Uniform hypergraph data model and the Turán covering verifier.

A Turán (n,s,r)-system is an r-graph on n vertices in which every s-subset
of the vertices contains at least one edge.  The verifier here decides that
property exhaustively (colex order, deterministic first witness) or by
seeded uniform sampling for large n.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Iterable

from .combinatorics import (
    binomial,
    check_subset,
    enumerate_subsets,
    rank_colex,
    unrank_colex,
)

DEFAULT_EXHAUSTIVE_BUDGET = 10**9


class BudgetExceededError(RuntimeError):
    """Raised when an exhaustive pass would exceed the configured budget."""


def _colex_key(edge: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(reversed(edge))


@dataclass(frozen=True)
class UniformHypergraph:
    """An r-graph on vertex set {0, ..., n-1}; edges kept in colex order.

    Immutable after construction; edge bitmasks are precomputed because
    mask inclusion is the hot path of exhaustive verification.
    """

    n: int
    r: int
    edges: tuple[tuple[int, ...], ...]
    masks: tuple[int, ...] = field(repr=False, compare=False, default=())

    @staticmethod
    def from_edges(
        n: int, r: int, edges: Iterable[Iterable[int]]
    ) -> "UniformHypergraph":
        if n < 0 or r < 1:
            raise ValueError(f"need n >= 0 and r >= 1, got n={n}, r={r}")
        normalized = {tuple(sorted(e)) for e in edges}
        for e in normalized:
            check_subset(e, n, r)
        ordered = tuple(sorted(normalized, key=_colex_key))
        masks = tuple(_mask(e) for e in ordered)
        return UniformHypergraph(n=n, r=r, edges=ordered, masks=masks)

    def __len__(self) -> int:
        return len(self.edges)

    def edge_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.edges)

    # --- serialization (canonical formats) ---

    def to_json_dict(self) -> dict:
        return {"n": self.n, "r": self.r, "edges": [list(e) for e in self.edges]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @staticmethod
    def from_json_dict(obj: dict) -> "UniformHypergraph":
        return UniformHypergraph.from_edges(int(obj["n"]), int(obj["r"]), obj["edges"])

    @staticmethod
    def from_json(text: str) -> "UniformHypergraph":
        return UniformHypergraph.from_json_dict(json.loads(text))

    def to_text(self) -> str:
        """Plain-text format: one edge per line, ascending vertices."""
        return "".join(" ".join(str(v) for v in e) + "\n" for e in self.edges)

    @staticmethod
    def from_text(text: str, n: int, r: int) -> "UniformHypergraph":
        edges = [
            tuple(int(tok) for tok in line.split())
            for line in text.splitlines()
            if line.strip()
        ]
        return UniformHypergraph.from_edges(n, r, edges)


def _mask(elements: tuple[int, ...]) -> int:
    m = 0
    for v in elements:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of a Turán-system check."""

    is_turan: bool
    witness: tuple[int, ...] | None
    sets_checked: int
    mode: str  # "exhaustive" | "sampled"
    s: int
    trials: int | None = None
    seed: int | None = None

    def to_json_dict(self) -> dict:
        return {
            "is_turan": self.is_turan,
            "witness": list(self.witness) if self.witness is not None else None,
            "sets_checked": self.sets_checked,
            "mode": self.mode,
            "s": self.s,
            "trials": self.trials,
            "seed": self.seed,
        }


def contains_edge(H: UniformHypergraph, S: tuple[int, ...]) -> bool:
    """True iff some edge of H is a subset of S (bitmask inclusion)."""
    check_subset(tuple(S), H.n)
    if len(S) < H.r:
        raise ValueError(f"set of size {len(S)} cannot contain an {H.r}-edge")
    smask = _mask(tuple(S))
    for em in H.masks:
        if em & smask == em:
            return True
    return False


def is_turan_system(
    H: UniformHypergraph, s: int, budget: int = DEFAULT_EXHAUSTIVE_BUDGET
) -> VerifyReport:
    """Exhaustively decide whether H is a Turán (n,s,r)-system.

    Iterates s-sets in colex order; the witness, if any, is the colex-least
    uncovered s-set, so failure reports are reproducible.
    """
    if not (H.r < s <= H.n):
        raise ValueError(f"need r < s <= n, got r={H.r}, s={s}, n={H.n}")
    total = binomial(H.n, s)
    if total > budget:
        raise BudgetExceededError(
            f"C({H.n},{s}) = {total} exceeds exhaustive budget {budget}; "
            "use sample_verify instead"
        )
    # Two strategies with identical reports: scanning s-sets against the
    # edge list, or marking the supersets of every edge.  Marking wins for
    # dense systems with small s - r (e.g. blowups).
    cost_scan = total * max(len(H.edges), 1)
    cost_mark = len(H.edges) * binomial(H.n - H.r, s - H.r) * s
    if H.edges and cost_mark * 4 < cost_scan:
        return _verify_by_marking(H, s, total)
    masks = H.masks
    checked = 0
    for S in enumerate_subsets(H.n, s):
        checked += 1
        smask = _mask(S)
        for em in masks:
            if em & smask == em:
                break
        else:
            return VerifyReport(False, S, checked, "exhaustive", s)
    return VerifyReport(True, None, checked, "exhaustive", s)


def _verify_by_marking(H: UniformHypergraph, s: int, total: int) -> VerifyReport:
    """Mark the colex rank of every s-superset of every edge."""
    covered = bytearray(total)
    for e in H.edges:
        others = [v for v in range(H.n) if v not in e]
        for extra in enumerate_subsets(len(others), s - H.r):
            S = tuple(sorted(e + tuple(others[i] for i in extra)))
            covered[rank_colex(S)] = 1
    try:
        least = covered.index(0)
    except ValueError:
        return VerifyReport(True, None, total, "exhaustive", s)
    return VerifyReport(False, unrank_colex(least, s, H.n), least + 1, "exhaustive", s)


def sample_verify(
    H: UniformHypergraph, s: int, trials: int, seed: int
) -> VerifyReport:
    """Monte Carlo screen: uniform s-sets via unranking of uniform ranks."""
    if not (H.r < s <= H.n):
        raise ValueError(f"need r < s <= n, got r={H.r}, s={s}, n={H.n}")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    total = binomial(H.n, s)
    rng = random.Random(seed)
    for t in range(trials):
        S = unrank_colex(rng.randrange(total), s, H.n)
        if not contains_edge(H, S):
            return VerifyReport(False, S, t + 1, "sampled", s, trials=trials, seed=seed)
    return VerifyReport(True, None, trials, "sampled", s, trials=trials, seed=seed)


def density(H: UniformHypergraph) -> tuple[int, int, float]:
    """Edge density |H| / C(n,r) as an exact pair and as a float."""
    denom = binomial(H.n, H.r)
    return len(H.edges), denom, len(H.edges) / denom


def counting_lower_bound(n: int, s: int, r: int) -> int:
    """ceil(C(n,r)/C(s,r)): each r-set covers C(n-r,s-r) of the C(n,s) s-sets."""
    return -(-binomial(n, r) // binomial(s, r))


def verify_report_sound(H: UniformHypergraph, report: VerifyReport) -> bool:
    """Soundness gate: a present witness must really be uncovered."""
    if report.witness is None:
        return True
    return not contains_edge(H, report.witness)


__all__ = [
    "BudgetExceededError",
    "UniformHypergraph",
    "VerifyReport",
    "contains_edge",
    "counting_lower_bound",
    "density",
    "is_turan_system",
    "sample_verify",
    "verify_report_sound",
    "DEFAULT_EXHAUSTIVE_BUDGET",
]
