"""Undirected graphs with integer labels 1..n: generators, exact density,
brute-force densest-subgraph verdicts, and min-degree peeling.

All densities are exact Fractions; floats appear only in reports.  Graphs
are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional

from .errors import DegenerateGraphError, BudgetError, FormatError, ParameterError
from .seeds import GRAPH_STREAM, rng_for


def _norm_edge(u: int, v: int) -> tuple:
    if u == v:
        raise ParameterError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset

    def __post_init__(self):
        if self.n < 1:
            raise ParameterError("graph needs at least one vertex")
        for u, v in self.edges:
            if not (1 <= u < v <= self.n):
                raise ParameterError(f"edge ({u},{v}) outside vertex range 1..{self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> "Graph":
        return cls(n, frozenset(_norm_edge(u, v) for u, v in edges))

    @cached_property
    def adjacency(self) -> dict:
        adj = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(s) for v, s in adj.items()}

    def neighbors_below(self, v: int) -> tuple:
        return tuple(sorted(u for u in self.adjacency[v] if u < v))

    def neighbors_above(self, v: int) -> tuple:
        return tuple(sorted(u for u in self.adjacency[v] if u > v))

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges


@dataclass(frozen=True)
class DksVerdict:
    kind: str  # YES | NO | UNDECIDED
    witness: Optional[tuple]
    best_density: Fraction


def density(g: Graph) -> Fraction:
    """Edge density 2|E| / (n^2 - n); exact."""
    if g.n < 2:
        raise DegenerateGraphError("density undefined for graphs with fewer than 2 vertices")
    return Fraction(2 * len(g.edges), g.n * g.n - g.n)


def subset_density(g: Graph, vertices) -> Fraction:
    """Density of the subgraph induced by ``vertices``."""
    vs = sorted(set(vertices))
    if len(vs) < 2:
        raise DegenerateGraphError("induced density needs at least 2 vertices")
    e = sum(1 for u, v in itertools.combinations(vs, 2) if g.has_edge(u, v))
    return Fraction(2 * e, len(vs) * len(vs) - len(vs))


def induced(g: Graph, vertices) -> Graph:
    """Induced subgraph relabeled to 1..|vertices| (label order preserved)."""
    vs = sorted(set(vertices))
    relab = {v: i + 1 for i, v in enumerate(vs)}
    edges = [
        (relab[u], relab[v])
        for u, v in itertools.combinations(vs, 2)
        if g.has_edge(u, v)
    ]
    return Graph.from_edges(len(vs), edges)


def dks_brute_force(
    g: Graph, k: int, gamma_sq_over_4: Fraction, budget: int = 2_000_000
) -> DksVerdict:
    """Exhaustive densest-k-subgraph gap verdict.

    YES iff some k-subset induces a clique; NO iff every k-subset has
    density <= gamma_sq_over_4; UNDECIDED in between (the gap problem is a
    promise problem, so the oracle must not guess there).
    """
    if k < 2 or k > g.n:
        raise ParameterError(f"need 2 <= k <= n, got k={k}, n={g.n}")
    total = 1
    for i in range(k):
        total = total * (g.n - i) // (i + 1)
    if total > budget:
        raise BudgetError(f"C({g.n},{k}) = {total} subsets exceeds budget {budget}")
    denom = k * k - k
    best = Fraction(0)
    best_witness = None
    clique_edges = denom // 2
    for subset in itertools.combinations(range(1, g.n + 1), k):
        e = sum(1 for u, v in itertools.combinations(subset, 2) if g.has_edge(u, v))
        d = Fraction(2 * e, denom)
        if d > best or best_witness is None:
            best = d
            best_witness = subset
        if e == clique_edges:
            return DksVerdict("YES", subset, Fraction(1))
    if best <= gamma_sq_over_4:
        return DksVerdict("NO", None, best)
    return DksVerdict("UNDECIDED", best_witness, best)


def plant_clique(n: int, k: int, edge_prob: float, seed: int):
    """Random graph with an embedded k-clique.

    The clique vertices are drawn from the (seed, GRAPH_STREAM) stream,
    every other pair appears independently with ``edge_prob``.
    Returns (graph, clique vertex tuple); deterministic for a fixed seed.
    """
    if not (1 <= k <= n):
        raise ParameterError(f"need 1 <= k <= n, got k={k}, n={n}")
    if not (0.0 <= edge_prob <= 1.0):
        raise ParameterError("edge_prob must lie in [0, 1]")
    rng = rng_for(seed, GRAPH_STREAM)
    clique = tuple(sorted(int(v) + 1 for v in rng.choice(n, size=k, replace=False)))
    in_clique = set(clique)
    edges = set(itertools.combinations(clique, 2))
    for u, v in itertools.combinations(range(1, n + 1), 2):
        if u in in_clique and v in in_clique:
            continue
        if rng.random() < edge_prob:
            edges.add((u, v))
    return Graph.from_edges(n, edges), clique


def erdos_renyi(n: int, edge_prob: float, seed: int) -> Graph:
    """G(n, p) from the (seed, GRAPH_STREAM) stream."""
    if n < 1:
        raise ParameterError("need n >= 1")
    if not (0.0 <= edge_prob <= 1.0):
        raise ParameterError("edge_prob must lie in [0, 1]")
    rng = rng_for(seed, GRAPH_STREAM)
    edges = [
        (u, v)
        for u, v in itertools.combinations(range(1, n + 1), 2)
        if rng.random() < edge_prob
    ]
    return Graph.from_edges(n, edges)


def dense_subgraph_peel(g: Graph, k: int) -> tuple:
    """Remove a minimum-degree vertex (smallest label on ties) until k remain.

    Each removal can only keep the density of the survivor set at or above
    the previous value, so the result's induced density is >= density(g).
    """
    if k < 2 or k > g.n:
        raise ParameterError(f"need 2 <= k <= n, got k={k}, n={g.n}")
    alive = set(range(1, g.n + 1))
    deg = {v: len(g.adjacency[v]) for v in alive}
    while len(alive) > k:
        victim = min(alive, key=lambda v: (deg[v], v))
        alive.remove(victim)
        for u in g.adjacency[victim]:
            if u in alive:
                deg[u] -= 1
    return tuple(sorted(alive))


# ---------------------------------------------------------------------------
# graph file format: "p <n> <m>" then one "e <u> <v>" per edge, u < v,
# 1-indexed, edges sorted lexicographically.  Round trips are byte-exact.
# ---------------------------------------------------------------------------

def format_graph(g: Graph) -> str:
    lines = [f"p {g.n} {len(g.edges)}"]
    lines.extend(f"e {u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("p "):
        raise FormatError("graph file must start with a 'p <n> <m>' line")
    try:
        _, n_s, m_s = lines[0].split()
        n, m = int(n_s), int(m_s)
    except ValueError as exc:
        raise FormatError(f"bad header {lines[0]!r}") from exc
    edges = []
    seen = set()
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3 or parts[0] != "e":
            raise FormatError(f"bad edge line {ln!r}")
        u, v = int(parts[1]), int(parts[2])
        if u >= v:
            raise FormatError(f"edge line {ln!r} must have u < v")
        if (u, v) in seen:
            raise FormatError(f"duplicate edge ({u},{v})")
        seen.add((u, v))
        edges.append((u, v))
    if len(edges) != m:
        raise FormatError(f"header promises {m} edges, file has {len(edges)}")
    try:
        return Graph.from_edges(n, edges)
    except ParameterError as exc:
        raise FormatError(str(exc)) from exc


def write_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_graph(g))


def read_graph(path) -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        return parse_graph(fh.read())
