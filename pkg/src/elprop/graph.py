"""Immutable undirected graph: edge-list ingestion and structural primitives."""

from __future__ import annotations

from dataclasses import dataclass, field


class GraphFormatError(ValueError):
    """Raised for unreadable edge-list or label-file input."""


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph with dense internal indices 0..N-1.

    External node ids are arbitrary strings, assigned indices in first
    appearance order. Adjacency is a sorted neighbor tuple per node.
    Self-loops and duplicate edges seen by the loader are dropped but
    counted.
    """

    labels: tuple[str, ...]
    adjacency: tuple[tuple[int, ...], ...]
    edge_count: int
    dropped_self_loops: int = 0
    dropped_duplicates: int = 0
    _index: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        self._index.update({lab: i for i, lab in enumerate(self.labels)})

    @property
    def node_count(self) -> int:
        return len(self.labels)

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown node {label!r}") from None

    def label_of(self, i: int) -> str:
        return self.labels[i]

    def neighbors(self, i: int) -> tuple[int, ...]:
        return self.adjacency[i]

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]


def from_edges(edges, isolated=()) -> Graph:
    """Build a Graph from (u, v) label pairs; handy in tests and demos.

    `isolated` adds extra nodes with no incident edges.
    """
    labels = []
    seen = set()
    for u, v in edges:
        for t in (str(u), str(v)):
            if t not in seen:
                seen.add(t)
                labels.append(t)
    for t in isolated:
        t = str(t)
        if t not in seen:
            seen.add(t)
            labels.append(t)
    return _build(labels, [(str(u), str(v)) for u, v in edges], 0)


def load_edge_list(lines) -> Graph:
    """Parse whitespace-separated 'u v' lines into a Graph.

    Lines starting with '#' or '%' and blank lines are ignored. Duplicate
    edges and self-loops are dropped (counted on the returned Graph).

    Parameters
    ----------
    lines : iterable of str, or str path, or open text file

    Raises
    ------
    GraphFormatError
        On a line with other than two tokens (the message names the line
        number) or when no nodes at all are found.
    """
    if isinstance(lines, str):
        with open(lines) as fh:
            return load_edge_list(fh)
    labels: list[str] = []
    seen: set[str] = set()
    pairs: list[tuple[str, str]] = []
    self_loops = 0
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith(("#", "%")):
            continue
        toks = line.split()
        if len(toks) != 2:
            raise GraphFormatError(
                f"line {lineno}: expected two node tokens, got {len(toks)}: {line!r}")
        u, v = toks
        for t in (u, v):
            if t not in seen:
                seen.add(t)
                labels.append(t)
        if u == v:
            self_loops += 1
            continue
        pairs.append((u, v))
    if not labels:
        raise GraphFormatError("empty graph: no nodes found")
    return _build(labels, pairs, self_loops)


def _build(labels, pairs, self_loops) -> Graph:
    index = {lab: i for i, lab in enumerate(labels)}
    edge_set: set[tuple[int, int]] = set()
    duplicates = 0
    for u, v in pairs:
        i, j = index[u], index[v]
        key = (i, j) if i < j else (j, i)
        if key in edge_set:
            duplicates += 1
        else:
            edge_set.add(key)
    adj: list[list[int]] = [[] for _ in labels]
    for i, j in edge_set:
        adj[i].append(j)
        adj[j].append(i)
    return Graph(
        labels=tuple(labels),
        adjacency=tuple(tuple(sorted(a)) for a in adj),
        edge_count=len(edge_set),
        dropped_self_loops=self_loops,
        dropped_duplicates=duplicates,
    )


def load_labels(lines) -> dict[str, str]:
    """Parse a ground-truth file of 'node_token label_token' lines."""
    if isinstance(lines, str):
        with open(lines) as fh:
            return load_labels(fh)
    out: dict[str, str] = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith(("#", "%")):
            continue
        toks = line.split()
        if len(toks) != 2:
            raise GraphFormatError(
                f"line {lineno}: expected 'node label', got {line!r}")
        node, lab = toks
        if node in out and out[node] != lab:
            raise GraphFormatError(f"line {lineno}: conflicting label for node {node!r}")
        out[node] = lab
    if not out:
        raise GraphFormatError("empty label file")
    return out


def local_density(g: Graph, i: int) -> float:
    """Degree of node i divided by N-1; undefined for a 1-node graph."""
    n = g.node_count
    if n < 2:
        raise ValueError("local density is undefined for a single-node graph")
    return g.degree(i) / (n - 1)


def jaccard(g: Graph, u: int, v: int) -> float:
    """Jaccard similarity of the open neighborhoods of u and v.

    The nodes themselves are excluded from their own neighborhoods, so
    two adjacent nodes with no common neighbor score 0 even though they
    touch. Returns 0 when both neighborhoods are empty.
    """
    if u == v:
        raise ValueError("jaccard similarity needs two distinct nodes")
    nu, nv = set(g.adjacency[u]), set(g.adjacency[v])
    union = len(nu | nv)
    if union == 0:
        return 0.0
    return len(nu & nv) / union
