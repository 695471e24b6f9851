"""Synthetic planted-partition graphs with known ground truth.

Nodes split into equal-size blocks; each intra-block pair becomes an edge with
probability ``p_in`` and each inter-block pair with probability ``p_out``.
The model is the equal-block stand-in this toolkit uses for mixing-parameter
sweeps: ``mixing_probabilities`` converts a target average degree and a mixing
level (expected fraction of a node's edges leaving its block) into the two
probabilities.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterator

from .graph import Graph, from_edges
from .partition import Partition


class ConfigError(ValueError):
    """Invalid generator parameters."""


@dataclass(frozen=True)
class PlantedPartitionParams:
    n: int
    communities: int
    p_in: float
    p_out: float
    rng_seed: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ConfigError(f"n must be >= 1, got {self.n}")
        if self.communities < 1:
            raise ConfigError(f"communities must be >= 1, got {self.communities}")
        if self.n % self.communities != 0:
            raise ConfigError(
                f"n={self.n} is not divisible into {self.communities} equal blocks"
            )
        for name, p in (("p_in", self.p_in), ("p_out", self.p_out)):
            if not 0.0 <= p <= 1.0:
                raise ConfigError(f"{name} must be in [0, 1], got {p}")

    @property
    def block_size(self) -> int:
        return self.n // self.communities

    @property
    def expected_average_degree(self) -> float:
        intra = self.p_in * (self.block_size - 1)
        inter = self.p_out * (self.n - self.block_size)
        return intra + inter


def generate_planted_partition(params: PlantedPartitionParams) -> tuple[Graph, Partition]:
    """Sample a graph and its ground-truth block partition.

    Isolated nodes are legal output; the graph keeps all ``n`` nodes either
    way. Deterministic for a given parameter set.
    """
    rng = random.Random(params.rng_seed)
    n, c, b = params.n, params.communities, params.block_size
    edges: list[tuple[int, int]] = []
    for block in range(c):
        lo = block * b
        for i, j in _triangular_pairs(rng, b, params.p_in):
            edges.append((lo + i, lo + j))
    for block_a in range(c):
        lo_a = block_a * b
        for block_b in range(block_a + 1, c):
            lo_b = block_b * b
            for k in _bernoulli_indices(rng, b * b, params.p_out):
                edges.append((lo_a + k // b, lo_b + k % b))
    graph = from_edges(edges, node_count=n)
    truth = Partition.from_labels([node // b for node in range(n)])
    return graph, truth


def mixing_probabilities(
    n: int, communities: int, average_degree: float, mixing: float
) -> tuple[float, float]:
    """Solve (p_in, p_out) so the expected degree and mixing level hit targets.

    ``mixing`` is the expected fraction of a node's edges that leave its
    block. Raises :class:`ConfigError` when the targets are infeasible for the
    block structure (probability outside [0, 1], or inter-block edges
    requested with a single block).
    """
    if not 0.0 <= mixing < 1.0:
        raise ConfigError(f"mixing must be in [0, 1), got {mixing}")
    if average_degree <= 0:
        raise ConfigError(f"average_degree must be positive, got {average_degree}")
    if n % communities != 0:
        raise ConfigError(f"n={n} not divisible into {communities} equal blocks")
    block = n // communities
    if block < 2:
        raise ConfigError("blocks need at least 2 nodes for intra-block edges")
    p_in = (1.0 - mixing) * average_degree / (block - 1)
    if mixing == 0.0:
        p_out = 0.0
    else:
        if communities < 2:
            raise ConfigError("mixing > 0 requires at least 2 blocks")
        p_out = mixing * average_degree / (n - block)
    for name, p in (("p_in", p_in), ("p_out", p_out)):
        if p > 1.0:
            raise ConfigError(
                f"infeasible targets: {name}={p:.4f} exceeds 1 "
                f"(n={n}, communities={communities}, degree={average_degree}, mixing={mixing})"
            )
    return p_in, p_out


def _bernoulli_indices(rng: random.Random, count: int, p: float) -> Iterator[int]:
    """Indices in ``range(count)`` kept independently with probability ``p``,
    via geometric gap sampling (O(successes) draws instead of O(count))."""
    if p <= 0.0:
        return
    if p >= 1.0:
        yield from range(count)
        return
    log_q = math.log(1.0 - p)
    i = -1
    while True:
        gap = int(math.log(1.0 - rng.random()) / log_q)
        i += gap + 1
        if i >= count:
            return
        yield i


def _triangular_pairs(rng: random.Random, size: int, p: float) -> Iterator[tuple[int, int]]:
    """Sampled pairs (i, j), i < j < size, decoded from a linear index over
    the upper triangle row by row."""
    total = size * (size - 1) // 2
    row = 0
    row_start = 0
    row_len = size - 1
    for k in _bernoulli_indices(rng, total, p):
        while k >= row_start + row_len:
            row_start += row_len
            row += 1
            row_len = size - 1 - row
        yield row, row + 1 + (k - row_start)
