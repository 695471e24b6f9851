"""Asynchronous label-propagation engines.

All three engines share a skeleton: start with every node labeled by its own
id, then sweep the nodes in a fresh uniform random order, each node
immediately adopting the most frequent label among its voting neighbors (the
node's own current label does not vote, and updates are asynchronous, so later
nodes in the sweep see earlier adoptions). They differ in who votes and how
frequency ties break:

* ``lpa``: all neighbors vote; ties break uniformly at random.

* ``lpa_leb``: each iteration is two sweeps over independently shuffled
  orders. Sweep A restricts voting to the floor(degree/2)+1 neighbors whose
  connecting edges carry the smallest betweenness scores (ties at the cut
  boundary resolved by ascending neighbor id); frequency ties break uniformly
  at random. Sweep B lets all neighbors vote; tied labels are ranked by the
  minimum betweenness among the edges supporting each label, smallest wins,
  residual exact ties uniformly at random. Low-betweenness edges tend to sit
  inside communities, so sweep A seeds labels locally and sweep B consolidates.

* ``lpac``: like ``lpa``, but tied labels are ranked by the maximum edge
  clustering coefficient among their supporting edges, largest wins, residual
  ties uniformly at random.

An engine stops when every node's label is among the most frequent labels of
its full neighborhood (checked after each iteration; for ``lpa_leb`` after
sweep B) or when the iteration cap is reached. Isolated nodes keep their
initial label and are converged by definition.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .betweenness import DEFAULT_DEPTH, EdgeScores, local_edge_betweenness, normalize_depth
from .graph import Graph
from .partition import Partition

ALGORITHMS = ("lpa", "lpa-leb", "lpac")

#: Tie-break sentinel for edges whose clustering coefficient denominator is
#: zero (a pendant endpoint); such edges are maximally preferred.
ECC_MAX = math.inf


@dataclass(frozen=True)
class AlgorithmConfig:
    """Shared engine knobs.

    ``depth`` only matters for engines that consume betweenness scores; the
    4-iteration variants studied in the benchmarks just set
    ``max_iterations=4``.
    """

    max_iterations: int = 50
    rng_seed: int = 0
    depth: int | str = DEFAULT_DEPTH

    def __post_init__(self):
        if self.max_iterations < 1:
            raise ValueError(f"max_iterations must be >= 1, got {self.max_iterations}")


def lpa(g: Graph, cfg: AlgorithmConfig) -> Partition:
    """Plain label propagation with uniform random tie-breaks."""
    labels, _ = _run_single_sweep(g, cfg, tie_scores=None, prefer_larger=False)
    return Partition.from_labels(labels)


def lpac(g: Graph, cfg: AlgorithmConfig) -> Partition:
    """Label propagation preferring tied labels behind high edge clustering.

    The edge clustering coefficient is high for intra-community edges, so on
    a frequency tie the label reachable through the most clustered edge wins.
    """
    ecc = [edge_clustering_coefficient(g, eid) for eid in range(g.edge_count)]
    labels, _ = _run_single_sweep(g, cfg, tie_scores=ecc, prefer_larger=True)
    return Partition.from_labels(labels)


def lpa_leb(g: Graph, leb: EdgeScores, cfg: AlgorithmConfig) -> Partition:
    """Label propagation constrained by per-edge betweenness scores.

    ``leb`` must hold one score per edge id of ``g`` (normally
    ``local_edge_betweenness(g, cfg.depth)``).
    """
    labels, _ = _run_two_sweep(g, leb, cfg)
    return Partition.from_labels(labels)


def detect(g: Graph, algo: str, cfg: AlgorithmConfig) -> Partition:
    """Run one engine by name, computing betweenness scores when needed."""
    if algo == "lpa":
        return lpa(g, cfg)
    if algo == "lpac":
        return lpac(g, cfg)
    if algo == "lpa-leb":
        scores = local_edge_betweenness(g, cfg.depth)
        return lpa_leb(g, scores, cfg)
    raise ValueError(f"unknown algorithm {algo!r}, expected one of {ALGORITHMS}")


def edge_clustering_coefficient(g: Graph, edge_id: int) -> float:
    """(triangles through the edge + 1) / min(deg(u) - 1, deg(v) - 1).

    Returns :data:`ECC_MAX` when the denominator is zero: a pendant edge
    trivially belongs with its only neighbor.
    """
    u, v = g.edges[edge_id]
    du, dv = len(g.adjacency[u]), len(g.adjacency[v])
    denominator = min(du, dv) - 1
    if denominator <= 0:
        return ECC_MAX
    if du > dv:
        u, v = v, u  # intersect from the smaller side
    neighbors_v = {w for w, _ in g.adjacency[v]}
    triangles = sum(1 for w, _ in g.adjacency[u] if w in neighbors_v)
    return (triangles + 1) / denominator


def smallest_betweenness_neighbors(g: Graph, leb: EdgeScores) -> list[list[int]]:
    """Per-node sweep-A electorate: the floor(degree/2)+1 neighbors reached
    through the lowest-scoring edges, boundary ties by ascending neighbor id."""
    candidates: list[list[int]] = []
    for node in range(g.node_count):
        row = g.adjacency[node]
        if not row:
            candidates.append([])
            continue
        ranked = sorted(row, key=lambda pair: (leb[pair[1]], pair[0]))
        keep = len(row) // 2 + 1
        candidates.append([v for v, _ in ranked[:keep]])
    return candidates


def _run_single_sweep(
    g: Graph,
    cfg: AlgorithmConfig,
    tie_scores: EdgeScores | None,
    prefer_larger: bool,
) -> tuple[list[int], int]:
    """LPA skeleton. Returns (labels, iterations executed).

    ``tie_scores`` of None means uniform random tie-breaks; otherwise ties are
    ranked by the per-label extreme of the supporting edges' scores
    (max if ``prefer_larger`` else min) before falling back to random.
    """
    rng = random.Random(cfg.rng_seed)
    n = g.node_count
    adjacency = g.adjacency
    neighbor_ids = g.neighbor_lists()
    labels = list(range(n))
    order = list(range(n))
    iterations = 0
    for _ in range(cfg.max_iterations):
        iterations += 1
        rng.shuffle(order)
        for x in order:
            nbrs = neighbor_ids[x]
            if not nbrs:
                continue
            counts: dict[int, int] = {}
            for y in nbrs:
                ly = labels[y]
                counts[ly] = counts.get(ly, 0) + 1
            best = max(counts.values())
            tied = [l for l, c in counts.items() if c == best]
            if len(tied) == 1:
                labels[x] = tied[0]
            elif tie_scores is None:
                labels[x] = rng.choice(sorted(tied))
            else:
                labels[x] = _break_tie_by_edge_score(
                    adjacency[x], labels, counts, best, tie_scores, prefer_larger, rng
                )
        if _is_stable(neighbor_ids, labels):
            break
    return labels, iterations


def _run_two_sweep(g: Graph, leb: EdgeScores, cfg: AlgorithmConfig) -> tuple[list[int], int]:
    """LPA-LEB skeleton. Returns (labels, iterations executed)."""
    if len(leb) != g.edge_count:
        raise ValueError(f"expected {g.edge_count} edge scores, got {len(leb)}")
    rng = random.Random(cfg.rng_seed)
    n = g.node_count
    adjacency = g.adjacency
    neighbor_ids = g.neighbor_lists()
    electorate = smallest_betweenness_neighbors(g, leb)
    labels = list(range(n))
    order = list(range(n))
    iterations = 0
    for _ in range(cfg.max_iterations):
        iterations += 1
        # Sweep A: restricted electorate, random tie-breaks.
        rng.shuffle(order)
        for x in order:
            voters = electorate[x]
            if not voters:
                continue
            counts: dict[int, int] = {}
            for y in voters:
                ly = labels[y]
                counts[ly] = counts.get(ly, 0) + 1
            best = max(counts.values())
            tied = [l for l, c in counts.items() if c == best]
            labels[x] = tied[0] if len(tied) == 1 else rng.choice(sorted(tied))
        # Sweep B: full neighborhood, smallest-betweenness tie-breaks.
        rng.shuffle(order)
        for x in order:
            nbrs = neighbor_ids[x]
            if not nbrs:
                continue
            counts = {}
            for y in nbrs:
                ly = labels[y]
                counts[ly] = counts.get(ly, 0) + 1
            best = max(counts.values())
            tied = [l for l, c in counts.items() if c == best]
            if len(tied) == 1:
                labels[x] = tied[0]
            else:
                labels[x] = _break_tie_by_edge_score(
                    adjacency[x], labels, counts, best, leb, False, rng
                )
        if _is_stable(neighbor_ids, labels):
            break
    return labels, iterations


def _break_tie_by_edge_score(
    adjacency_row: tuple[tuple[int, int], ...],
    labels: list[int],
    counts: dict[int, int],
    best: int,
    scores: EdgeScores,
    prefer_larger: bool,
    rng: random.Random,
) -> int:
    """Pick among maximum-frequency labels by their supporting edges' scores.

    Each tied label is summarized by the extreme score over the edges leading
    to neighbors that carry it; the winning extreme (largest or smallest) takes
    the label, residual exact ties are broken uniformly at random.
    """
    extreme: dict[int, float] = {}
    for y, eid in adjacency_row:
        ly = labels[y]
        if counts.get(ly) != best:
            continue
        s = scores[eid]
        current = extreme.get(ly)
        if current is None or (s > current if prefer_larger else s < current):
            extreme[ly] = s
    target = max(extreme.values()) if prefer_larger else min(extreme.values())
    finalists = sorted(l for l, s in extreme.items() if s == target)
    return finalists[0] if len(finalists) == 1 else rng.choice(finalists)


def _is_stable(neighbor_ids: list[list[int]], labels: list[int]) -> bool:
    """True when every node's label is among its neighborhood's most frequent."""
    for x, nbrs in enumerate(neighbor_ids):
        if not nbrs:
            continue
        counts: dict[int, int] = {}
        for y in nbrs:
            ly = labels[y]
            counts[ly] = counts.get(ly, 0) + 1
        if counts.get(labels[x], 0) != max(counts.values()):
            return False
    return True
