"""Disjoint node partitions and the ``node,community`` CSV format."""

from __future__ import annotations

import io
from dataclasses import dataclass
from typing import IO, Sequence


class CommunityFileError(ValueError):
    """A community CSV file is malformed or does not cover the node range."""


@dataclass(frozen=True)
class Partition:
    """Disjoint communities covering nodes ``0..n-1``.

    Community indices are dense from 0 and assigned in order of each
    community's smallest member node, so two runs that group the nodes the
    same way compare equal no matter which raw labels produced them.
    Ground-truth assignments use this same type.
    """

    membership: tuple[int, ...]
    communities: tuple[tuple[int, ...], ...]

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "Partition":
        """Canonicalize an arbitrary per-node label assignment."""
        index: dict[int, int] = {}
        membership: list[int] = []
        members: list[list[int]] = []
        for node, label in enumerate(labels):
            i = index.get(label)
            if i is None:
                i = len(members)
                index[label] = i
                members.append([])
            membership.append(i)
            members[i].append(node)
        return cls(
            membership=tuple(membership),
            communities=tuple(tuple(m) for m in members),
        )

    @property
    def node_count(self) -> int:
        return len(self.membership)

    @property
    def community_count(self) -> int:
        return len(self.communities)


def read_community_csv(stream: IO[str]) -> Partition:
    """Read ``node,community`` rows (header optional, any node order).

    Nodes must cover 0..max exactly once.
    """
    assignments: dict[int, int] = {}
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line:
            continue
        tokens = [t.strip() for t in line.split(",")]
        if len(tokens) != 2:
            raise CommunityFileError(f"line {lineno}: expected 'node,community', got {line!r}")
        if lineno == 1 and not (tokens[0].lstrip("-").isdigit()):
            continue  # header row
        try:
            node, community = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise CommunityFileError(f"line {lineno}: non-integer field in {line!r}") from None
        if node < 0:
            raise CommunityFileError(f"line {lineno}: negative node id {node}")
        if node in assignments:
            raise CommunityFileError(f"line {lineno}: node {node} assigned twice")
        assignments[node] = community
    if not assignments:
        return Partition(membership=(), communities=())
    n = max(assignments) + 1
    missing = [x for x in range(n) if x not in assignments]
    if missing:
        raise CommunityFileError(f"nodes not covered: {missing[:10]} (of {len(missing)})")
    return Partition.from_labels([assignments[x] for x in range(n)])


def parse_community_csv(text: str) -> Partition:
    return read_community_csv(io.StringIO(text))


def write_community_csv(p: Partition, stream: IO[str]) -> None:
    stream.write("node,community\n")
    for node, community in enumerate(p.membership):
        stream.write(f"{node},{community}\n")


def dumps_community_csv(p: Partition) -> str:
    buf = io.StringIO()
    write_community_csv(p, buf)
    return buf.getvalue()
