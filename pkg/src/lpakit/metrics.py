"""Partition quality measures: Newman-Girvan modularity and disjoint NMI."""

from __future__ import annotations

import math

from .graph import Graph
from .partition import Partition


class UndefinedMetricError(ValueError):
    """The metric is undefined for the given input (e.g. an edgeless graph)."""


def modularity(g: Graph, p: Partition) -> float:
    """Q = sum over communities of [e_c/m - (d_c/(2m))^2].

    ``e_c`` counts intra-community edges, ``d_c`` sums member degrees. The
    all-in-one partition scores exactly 0; the range is [-0.5, 1).
    """
    m = g.edge_count
    if m == 0:
        raise UndefinedMetricError("modularity is undefined for a graph with no edges")
    if p.node_count != g.node_count:
        raise ValueError(
            f"partition covers {p.node_count} nodes, graph has {g.node_count}"
        )
    membership = p.membership
    intra = [0] * p.community_count
    degree_sum = [0] * p.community_count
    for u, v in g.edges:
        if membership[u] == membership[v]:
            intra[membership[u]] += 1
    for node in range(g.node_count):
        degree_sum[membership[node]] += len(g.adjacency[node])
    two_m = 2.0 * m
    q = 0.0
    for c in range(p.community_count):
        q += intra[c] / m - (degree_sum[c] / two_m) ** 2
    return q


def nmi(a: Partition, b: Partition) -> float:
    """Normalized mutual information, 2*I(A;B) / (H(A)+H(B)), natural logs.

    1.0 for identical partitions (including the degenerate case where both
    are a single block, taken as 1.0 by convention), 0.0 for independent
    ones. Requires both partitions to cover the same node set.
    """
    if a.node_count != b.node_count:
        raise ValueError(
            f"partitions cover different node sets ({a.node_count} vs {b.node_count} nodes)"
        )
    n = a.node_count
    if n == 0:
        return 1.0
    sizes_a = [len(c) for c in a.communities]
    sizes_b = [len(c) for c in b.communities]
    joint: dict[tuple[int, int], int] = {}
    for ca, cb in zip(a.membership, b.membership):
        key = (ca, cb)
        joint[key] = joint.get(key, 0) + 1
    h_a = -sum((s / n) * math.log(s / n) for s in sizes_a)
    h_b = -sum((s / n) * math.log(s / n) for s in sizes_b)
    if h_a + h_b == 0.0:
        return 1.0
    info = 0.0
    for (ca, cb), nij in joint.items():
        info += (nij / n) * math.log(nij * n / (sizes_a[ca] * sizes_b[cb]))
    return 2.0 * info / (h_a + h_b)
