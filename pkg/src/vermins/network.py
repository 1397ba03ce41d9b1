"""Network data model, connectivity matrix and the canonical JSON file format."""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable, Mapping, Sequence

import numpy as np

from .geometry import Point

COORDINATES = "coordinates"
EXPLICIT = "explicit"


class NetworkError(ValueError):
    """Base class for every network construction or parsing failure."""


class MixedProvenanceError(NetworkError):
    """Some nodes carry coordinates and others explicit weights."""


class NodeIndexError(NetworkError):
    """A node, edge endpoint, source or sink index is out of range."""


class SourceSinkError(NetworkError):
    """Source and sink designate the same node."""


class DegenerateGeometryError(NetworkError):
    """Coordinates are inconsistent or the ideal route has zero length."""


class SelfLoopError(NetworkError):
    pass


class DuplicateEdgeError(NetworkError):
    pass


class DuplicateNodeError(NetworkError):
    pass


class InvalidWeightError(NetworkError):
    pass


class NetworkParseError(NetworkError):
    """The file is not a well-formed canonical network document."""


@dataclass(frozen=True)
class NodeRecord:
    id: int
    point: Point | None = None
    explicit_weight: float | None = None


@dataclass(frozen=True)
class Network:
    """Immutable, validated network. Build it with :func:`build_network`."""

    nodes: tuple[NodeRecord, ...]
    edges: frozenset[tuple[int, int]]
    directed: bool
    source: int
    sink: int
    _adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @property
    def n(self) -> int:
        return len(self.nodes)

    @property
    def mode(self) -> str:
        return COORDINATES if self.nodes[0].point is not None else EXPLICIT

    @property
    def dim(self) -> int | None:
        p = self.nodes[0].point
        return None if p is None else p.dim

    def point(self, i: int) -> Point:
        p = self.nodes[i].point
        if p is None:
            raise DegenerateGeometryError("network has explicit weights, not coordinates")
        return p

    def neighbors(self, i: int) -> tuple[int, ...]:
        """Nodes reachable from ``i`` in one step, ascending."""
        return self._adjacency[i]

    def has_edge(self, i: int, j: int) -> bool:
        if self.directed:
            return (i, j) in self.edges
        return (min(i, j), max(i, j)) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def _node_from_mapping(raw: Any) -> NodeRecord:
    if isinstance(raw, NodeRecord):
        return raw
    if not isinstance(raw, Mapping):
        raise NetworkParseError(f"node entry must be an object, got {raw!r}")
    keys = set(raw)
    if "id" not in keys:
        raise NetworkParseError(f"node entry missing 'id': {dict(raw)!r}")
    extra = keys - {"id", "coords", "weight"}
    if extra:
        raise NetworkParseError(f"unknown node keys {sorted(extra)}")
    if "coords" in keys and "weight" in keys:
        raise MixedProvenanceError(f"node {raw['id']} has both coords and weight")
    if "coords" not in keys and "weight" not in keys:
        raise NetworkParseError(f"node {raw['id']} has neither coords nor weight")
    node_id = _as_int(raw["id"], "node id")
    if "coords" in keys:
        coords = raw["coords"]
        if not isinstance(coords, (list, tuple)) or not all(_is_real(c) for c in coords):
            raise NetworkParseError(f"node {node_id} coords must be a list of numbers")
        try:
            return NodeRecord(node_id, point=Point(coords))
        except ValueError as exc:
            raise DegenerateGeometryError(f"node {node_id}: {exc}") from exc
    if not _is_real(raw["weight"]):
        raise NetworkParseError(f"node {node_id} weight must be a number")
    return NodeRecord(node_id, explicit_weight=float(raw["weight"]))


def _is_real(x: Any) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool)


def _as_int(x: Any, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, (int, np.integer)):
        raise NetworkParseError(f"{what} must be an integer, got {x!r}")
    return int(x)


def build_network(
    nodes: Iterable[NodeRecord | Mapping[str, Any]],
    edges: Iterable[Sequence[int]],
    directed: bool,
    source: int,
    sink: int,
) -> Network:
    """Validate inputs and return an immutable :class:`Network`.

    ``nodes`` may be :class:`NodeRecord` instances or file-style mappings
    (``{"id": 0, "coords": [...]}`` / ``{"id": 0, "weight": 1.5}``). Ids must
    be exactly ``0..m`` in some order.
    """
    records = [_node_from_mapping(raw) for raw in nodes]
    if not records:
        raise NetworkError("a network needs at least two nodes")
    ids = [r.id for r in records]
    if len(set(ids)) != len(ids):
        dupes = sorted({i for i in ids if ids.count(i) > 1})
        raise DuplicateNodeError(f"duplicate node ids {dupes}")
    n = len(records)
    if sorted(ids) != list(range(n)):
        raise NodeIndexError(f"node ids must be dense 0..{n - 1}, got {sorted(ids)}")
    records.sort(key=lambda r: r.id)

    with_points = [r for r in records if r.point is not None]
    with_weights = [r for r in records if r.explicit_weight is not None]
    if with_points and with_weights:
        raise MixedProvenanceError("nodes mix coordinates and explicit weights")
    if len(with_points) + len(with_weights) != n:
        raise NetworkError("every node needs coordinates or an explicit weight")
    for r in with_weights:
        w = r.explicit_weight
        if not math.isfinite(w) or w < 0:
            raise InvalidWeightError(f"node {r.id} weight must be finite and >= 0, got {w}")

    source = _as_int(source, "source")
    sink = _as_int(sink, "sink")
    for label, idx in (("source", source), ("sink", sink)):
        if not 0 <= idx < n:
            raise NodeIndexError(f"{label} index {idx} out of range 0..{n - 1}")
    if source == sink:
        raise SourceSinkError(f"source and sink are both node {source}")

    if with_points:
        dims = {r.point.dim for r in records}
        if len(dims) != 1:
            raise DegenerateGeometryError(f"mixed point dimensions {sorted(dims)}")
        if records[source].point == records[sink].point:
            raise DegenerateGeometryError("source and sink points coincide")

    edge_set: set[tuple[int, int]] = set()
    for raw in edges:
        if len(raw) != 2:
            raise NetworkParseError(f"edge must be a pair, got {raw!r}")
        i, j = (_as_int(x, "edge endpoint") for x in raw)
        for idx in (i, j):
            if not 0 <= idx < n:
                raise NodeIndexError(f"edge ({i}, {j}) references missing node {idx}")
        if i == j:
            raise SelfLoopError(f"self-loop on node {i}")
        key = (i, j) if directed else (min(i, j), max(i, j))
        if key in edge_set:
            raise DuplicateEdgeError(f"duplicate edge ({i}, {j})")
        edge_set.add(key)

    adjacency: list[set[int]] = [set() for _ in range(n)]
    for i, j in edge_set:
        adjacency[i].add(j)
        if not directed:
            adjacency[j].add(i)

    return Network(
        nodes=tuple(records),
        edges=frozenset(edge_set),
        directed=bool(directed),
        source=source,
        sink=sink,
        _adjacency=tuple(tuple(sorted(a)) for a in adjacency),
    )


def with_direction(network: Network, directed: bool) -> Network:
    """Reinterpret the edge set as directed or undirected.

    Going undirected merges antiparallel pairs into one edge.
    """
    if network.directed == directed:
        return network
    edges = network.edges
    if not directed:
        edges = {(min(i, j), max(i, j)) for i, j in edges}
    return build_network(network.nodes, sorted(edges), directed, network.source, network.sink)


def connectivity_matrix(network: Network, symmetric: bool = False) -> np.ndarray:
    """Binary matrix with ones on the diagonal and ``R[i, j] = 1`` per edge.

    Directed networks fill only ``R[i, j]`` for an edge ``i -> j`` unless
    ``symmetric`` is set, in which case the undirected rendering is returned.
    """
    m = np.eye(network.n, dtype=np.int8)
    for i, j in network.edges:
        m[i, j] = 1
        if symmetric or not network.directed:
            m[j, i] = 1
    return m


def format_matrix(matrix: np.ndarray) -> str:
    return "\n".join(" ".join(str(int(v)) for v in row) for row in matrix) + "\n"


# --- canonical file format -------------------------------------------------

_TOP_KEYS = ("directed", "source", "sink", "nodes", "edges")


def _reject_duplicate_keys(pairs: list[tuple[str, Any]]) -> dict[str, Any]:
    out: dict[str, Any] = {}
    for k, v in pairs:
        if k in out:
            raise NetworkParseError(f"duplicate key {k!r}")
        out[k] = v
    return out


def network_from_dict(doc: Any) -> Network:
    if not isinstance(doc, Mapping):
        raise NetworkParseError("network document must be an object")
    extra = set(doc) - set(_TOP_KEYS)
    if extra:
        raise NetworkParseError(f"unknown keys {sorted(extra)}")
    missing = [k for k in _TOP_KEYS if k not in doc]
    if missing:
        raise NetworkParseError(f"missing keys {missing}")
    if not isinstance(doc["directed"], bool):
        raise NetworkParseError("'directed' must be a boolean")
    if not isinstance(doc["nodes"], list) or not isinstance(doc["edges"], list):
        raise NetworkParseError("'nodes' and 'edges' must be lists")
    for e in doc["edges"]:
        if not isinstance(e, list):
            raise NetworkParseError(f"edge must be a two-element list, got {e!r}")
    return build_network(doc["nodes"], doc["edges"], doc["directed"], doc["source"], doc["sink"])


def parse_network(text: str) -> Network:
    try:
        doc = json.loads(text, object_pairs_hook=_reject_duplicate_keys)
    except json.JSONDecodeError as exc:
        raise NetworkParseError(f"invalid JSON: {exc}") from exc
    return network_from_dict(doc)


def load_network(path: str | Path) -> Network:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise NetworkParseError(f"cannot read {path}: {exc}") from exc
    return parse_network(text)


def network_to_dict(network: Network) -> dict[str, Any]:
    nodes: list[dict[str, Any]] = []
    for r in network.nodes:
        if r.point is not None:
            nodes.append({"id": r.id, "coords": list(r.point.coords)})
        else:
            nodes.append({"id": r.id, "weight": r.explicit_weight})
    return {
        "directed": network.directed,
        "source": network.source,
        "sink": network.sink,
        "nodes": nodes,
        "edges": [list(e) for e in network.sorted_edges()],
    }


def serialize_network(network: Network) -> str:
    """Canonical byte-stable text: fixed key order, ids ascending, edges sorted."""
    doc = network_to_dict(network)
    lines = ["{"]
    lines.append(f'  "directed": {json.dumps(doc["directed"])},')
    lines.append(f'  "source": {doc["source"]},')
    lines.append(f'  "sink": {doc["sink"]},')
    lines.append('  "nodes": [')
    node_lines = [f"    {json.dumps(node)}" for node in doc["nodes"]]
    lines.append(",\n".join(node_lines))
    lines.append("  ],")
    if doc["edges"]:
        lines.append('  "edges": [')
        lines.append(",\n".join(f"    {json.dumps(e)}" for e in doc["edges"]))
        lines.append("  ]")
    else:
        lines.append('  "edges": []')
    lines.append("}")
    return "\n".join(lines) + "\n"


def save_network(network: Network, path: str | Path) -> None:
    Path(path).write_text(serialize_network(network), encoding="utf-8")


def network_digest(network: Network) -> str:
    return hashlib.sha256(serialize_network(network).encode("utf-8")).hexdigest()
