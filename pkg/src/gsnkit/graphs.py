"""Immutable simple-graph data model plus graph6 and JSON ingestion."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

GRAPH6_HEADER = b">>graph6<<"
DEFAULT_N_CAP = 100_000


class GraphError(ValueError):
    """Raised for invalid graph construction or malformed input files."""


# ──────────────────────────────────────────────────────────────────────
# Core data model
# ──────────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``edges`` is normalized to a sorted tuple of (u, v) pairs with u < v.
    Optional ``vertex_labels`` (length n) and ``edge_labels`` (map from
    normalized edge to int) carry categorical attributes.  Instances are
    immutable and safe to share across worker processes.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    vertex_labels: tuple[int, ...] | None = None
    edge_labels: tuple[tuple[tuple[int, int], int], ...] | None = None
    name: str | None = field(default=None, compare=False)
    # Derived adjacency structures, filled in __post_init__.
    adj: tuple[int, ...] = field(init=False, repr=False, compare=False)
    neighbors: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"vertex count must be >= 0, got {self.n}")
        seen: set[tuple[int, int]] = set()
        normalized = []
        for e in self.edges:
            u, v = e
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {e} has endpoint outside [0, {self.n})")
            if u == v:
                raise GraphError(f"self-loop ({u}, {v}) not allowed")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise GraphError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            normalized.append((u, v))
        normalized.sort()
        object.__setattr__(self, "edges", tuple(normalized))

        if self.vertex_labels is not None:
            labels = tuple(int(x) for x in self.vertex_labels)
            if len(labels) != self.n:
                raise GraphError(
                    f"vertex_labels has length {len(labels)}, expected {self.n}"
                )
            object.__setattr__(self, "vertex_labels", labels)

        if self.edge_labels is not None:
            norm_el = {}
            for (u, v), lab in dict(self.edge_labels).items():
                if u > v:
                    u, v = v, u
                if (u, v) not in seen:
                    raise GraphError(f"edge_labels refers to missing edge ({u}, {v})")
                norm_el[(u, v)] = int(lab)
            object.__setattr__(
                self, "edge_labels", tuple(sorted(norm_el.items()))
            )

        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        object.__setattr__(self, "adj", tuple(masks))
        nbrs = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "neighbors", tuple(tuple(x) for x in nbrs))

    # -- basic queries ---------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edge_label_map(self) -> dict[tuple[int, int], int]:
        return dict(self.edge_labels) if self.edge_labels else {}

    def edge_label(self, u: int, v: int) -> int | None:
        if self.edge_labels is None:
            return None
        key = (u, v) if u < v else (v, u)
        return dict(self.edge_labels).get(key)

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = 1
        stack = [0]
        count = 1
        while stack:
            v = stack.pop()
            rest = self.adj[v] & ~seen
            while rest:
                bit = rest & -rest
                rest ^= bit
                seen |= bit
                count += 1
                stack.append(bit.bit_length() - 1)
        return count == self.n

    # -- derived graphs ----------------------------------------------------

    def permute(self, perm: list[int] | tuple[int, ...]) -> Graph:
        """Relabel: vertex v becomes perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("perm is not a permutation of range(n)")
        edges = [(perm[u], perm[v]) for u, v in self.edges]
        vl = None
        if self.vertex_labels is not None:
            vl = [0] * self.n
            for v, lab in enumerate(self.vertex_labels):
                vl[perm[v]] = lab
            vl = tuple(vl)
        el = None
        if self.edge_labels is not None:
            el = {
                tuple(sorted((perm[u], perm[v]))): lab
                for (u, v), lab in self.edge_labels
            }
            el = tuple(sorted(el.items()))
        return Graph(self.n, tuple(edges), vl, el, self.name)

    def complement(self) -> Graph:
        edges = [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if not self.has_edge(u, v)
        ]
        return Graph(self.n, tuple(edges), self.vertex_labels, None, self.name)

    def induced_subgraph(self, vertices: list[int] | tuple[int, ...]) -> Graph:
        """Subgraph induced on ``vertices`` (relabeled 0..len-1 in given order)."""
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise GraphError("duplicate vertices in induced_subgraph")
        edges = [
            (index[u], index[v])
            for u, v in self.edges
            if u in index and v in index
        ]
        vl = None
        if self.vertex_labels is not None:
            vl = tuple(self.vertex_labels[v] for v in vertices)
        return Graph(len(vertices), tuple(edges), vl)

    def delete_vertex(self, v: int) -> Graph:
        keep = [u for u in range(self.n) if u != v]
        return self.induced_subgraph(keep)


def graph_from_edges(n: int, edges, vertex_labels=None, edge_labels=None,
                     name: str | None = None) -> Graph:
    """Convenience constructor accepting any iterable of edge pairs."""
    el = tuple(dict(edge_labels).items()) if edge_labels else None
    vl = tuple(vertex_labels) if vertex_labels is not None else None
    return Graph(int(n), tuple((int(u), int(v)) for u, v in edges), vl, el, name)


# ──────────────────────────────────────────────────────────────────────
# graph6 (McKay's 6-bit printable encoding of the upper triangle)
# ──────────────────────────────────────────────────────────────────────

def _decode_graph6_size(record: bytes, lineno: int) -> tuple[int, int]:
    """Return (n, offset of first adjacency byte)."""
    if not record:
        raise GraphError(f"line {lineno}: empty graph6 record")
    b0 = record[0]
    if b0 == 126:  # '~' prefix: 18-bit or 36-bit size
        if len(record) >= 2 and record[1] == 126:
            if len(record) < 8:
                raise GraphError(f"line {lineno}: truncated graph6 size field")
            chunk, offset = record[2:8], 8
        else:
            if len(record) < 4:
                raise GraphError(f"line {lineno}: truncated graph6 size field")
            chunk, offset = record[1:4], 4
        n = 0
        for byte in chunk:
            if not 63 <= byte <= 126:
                raise GraphError(f"line {lineno}: bad graph6 size byte {byte}")
            n = (n << 6) | (byte - 63)
        return n, offset
    if not 63 <= b0 <= 126:
        raise GraphError(f"line {lineno}: bad graph6 byte {b0}")
    return b0 - 63, 1


def _parse_graph6_record(record: bytes, lineno: int, n_cap: int) -> Graph:
    n, offset = _decode_graph6_size(record, lineno)
    if n > n_cap:
        raise GraphError(f"line {lineno}: n={n} exceeds cap {n_cap}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = record[offset:]
    if len(body) < nbytes:
        raise GraphError(
            f"line {lineno}: truncated graph6 record (need {nbytes} "
            f"adjacency bytes, got {len(body)})"
        )
    if len(body) > nbytes:
        raise GraphError(f"line {lineno}: trailing bytes in graph6 record")
    edges = []
    bitpos = 0
    # Upper-triangle bits in column order: (0,1), (0,2), (1,2), (0,3), ...
    for col in range(1, n):
        for row in range(col):
            byte = body[bitpos // 6]
            if not 63 <= byte <= 126:
                raise GraphError(f"line {lineno}: bad graph6 byte {byte}")
            if (byte - 63) >> (5 - bitpos % 6) & 1:
                edges.append((row, col))
            bitpos += 1
    return Graph(n, tuple(edges))


def parse_graph6(data: bytes | str, n_cap: int = DEFAULT_N_CAP) -> list[Graph]:
    """Parse one graph per line; optional ``>>graph6<<`` header tolerated."""
    if isinstance(data, str):
        data = data.encode("ascii")
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    graphs = []
    for lineno, line in enumerate(data.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        if line.startswith(GRAPH6_HEADER):
            line = line[len(GRAPH6_HEADER):]
            if not line:
                continue
        graphs.append(_parse_graph6_record(line, lineno, n_cap))
    return graphs


def parse_graph6_file(path, n_cap: int = DEFAULT_N_CAP) -> list[Graph]:
    raw = Path(path).read_bytes()
    graphs = parse_graph6(raw, n_cap=n_cap)
    stem = Path(path).stem
    return [
        Graph(g.n, g.edges, name=f"{stem}#{i}") for i, g in enumerate(graphs)
    ]


def encode_graph6(G: Graph) -> str:
    """Encode a graph as a single graph6 record (no header, no newline)."""
    n = G.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126, (n >> 12) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    else:
        raise GraphError(f"n={n} too large for this encoder")
    bits = []
    for col in range(1, n):
        for row in range(col):
            bits.append(1 if G.has_edge(row, col) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for i in range(0, len(bits), 6):
        value = 0
        for b in bits[i:i + 6]:
            value = value << 1 | b
        body.append(value + 63)
    return bytes(head + body).decode("ascii")


# ──────────────────────────────────────────────────────────────────────
# JSON graph format
# ──────────────────────────────────────────────────────────────────────
#
# Schema: {"n": int, "edges": [[u, v], ...],
#          "vertex_labels": [int, ...]?          (length n)
#          "edge_labels": [[u, v, label], ...]?  (each [u,v] must be an edge)
#          "name": str?}

def parse_json_graph(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid JSON: {exc}") from exc
    return graph_from_json_obj(obj)


def graph_from_json_obj(obj) -> Graph:
    if not isinstance(obj, dict):
        raise GraphError("JSON graph must be an object")
    if "n" not in obj or "edges" not in obj:
        raise GraphError('JSON graph requires "n" and "edges" fields')
    n = obj["n"]
    if not isinstance(n, int) or n < 0:
        raise GraphError(f'"n" must be a nonnegative integer, got {n!r}')
    edges = []
    for e in obj["edges"]:
        if not (isinstance(e, (list, tuple)) and len(e) == 2):
            raise GraphError(f"edge entry {e!r} is not a 2-element array")
        edges.append((int(e[0]), int(e[1])))
    vl = obj.get("vertex_labels")
    el = None
    if obj.get("edge_labels") is not None:
        el = {}
        for entry in obj["edge_labels"]:
            if not (isinstance(entry, (list, tuple)) and len(entry) == 3):
                raise GraphError(
                    f"edge_labels entry {entry!r} is not [u, v, label]"
                )
            u, v, lab = entry
            el[(int(u), int(v))] = int(lab)
    return graph_from_edges(n, edges, vl, el, obj.get("name"))


def graph_to_json_obj(G: Graph) -> dict:
    obj: dict = {"n": G.n, "edges": [list(e) for e in G.edges]}
    if G.vertex_labels is not None:
        obj["vertex_labels"] = list(G.vertex_labels)
    if G.edge_labels is not None:
        obj["edge_labels"] = [[u, v, lab] for (u, v), lab in G.edge_labels]
    if G.name is not None:
        obj["name"] = G.name
    return obj


def graph_to_json(G: Graph) -> str:
    return json.dumps(graph_to_json_obj(G))


def parse_json_graphs(text: str) -> list[Graph]:
    """Parse either a single JSON graph object or a JSON array of them."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid JSON: {exc}") from exc
    if isinstance(obj, list):
        return [graph_from_json_obj(item) for item in obj]
    return [graph_from_json_obj(obj)]


# ──────────────────────────────────────────────────────────────────────
# Strong regularity
# ──────────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class SRParameters:
    """SR(n, d, lam, mu): degree d, lam/mu common neighbors of adjacent /
    non-adjacent pairs."""

    n: int
    d: int
    lam: int
    mu: int

    def __str__(self) -> str:
        return f"SR({self.n},{self.d},{self.lam},{self.mu})"


def check_strongly_regular(G: Graph) -> SRParameters | None:
    """Return SR parameters if G is strongly regular, else None.

    Degenerate cases with no adjacent (or no non-adjacent) pairs report
    lam = 0 (or mu = 0).
    """
    if G.n == 0:
        return None
    degs = {G.degree(v) for v in range(G.n)}
    if len(degs) != 1:
        return None
    d = degs.pop()
    lam = mu = None
    for u in range(G.n):
        for v in range(u + 1, G.n):
            common = (G.adj[u] & G.adj[v]).bit_count()
            if G.has_edge(u, v):
                if lam is None:
                    lam = common
                elif lam != common:
                    return None
            else:
                if mu is None:
                    mu = common
                elif mu != common:
                    return None
    return SRParameters(G.n, d, lam or 0, mu or 0)
