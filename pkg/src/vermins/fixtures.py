"""Reference networks used by the tests and shipped as JSON under ``fixtures/``."""

from __future__ import annotations

from .network import Network, NodeRecord, build_network
from .geometry import Point

# successor lists and node offsets from the worked ten-node example
PAPER_SUCCESSORS = {
    0: (1, 2, 3),
    1: (4, 7),
    2: (4, 5, 6),
    3: (6, 8),
    4: (7,),
    5: (7, 8),
    6: (8,),
    7: (9,),
    8: (9,),
    9: (),
}
PAPER_WEIGHTS = (0, 3, 0, 3, 2, 0, 1, 5, 6, 0)

# the connectivity matrix exactly as printed alongside the example
PAPER_PRINTED_MATRIX = (
    (1, 1, 1, 1, 0, 0, 0, 0, 0, 0),
    (1, 1, 0, 0, 1, 0, 0, 1, 0, 0),
    (1, 0, 1, 0, 1, 1, 1, 0, 0, 0),
    (1, 0, 0, 1, 0, 0, 1, 0, 1, 0),
    (0, 1, 0, 0, 1, 0, 0, 1, 0, 0),
    (0, 0, 1, 0, 0, 1, 0, 1, 1, 0),
    (0, 0, 1, 1, 0, 0, 1, 0, 1, 0),
    (0, 1, 0, 0, 1, 1, 0, 1, 0, 1),
    (0, 0, 0, 1, 0, 1, 1, 0, 1, 0),
    (0, 0, 0, 0, 0, 0, 0, 1, 1, 1),
)

PAPER_ROUTE_VECTORS = (
    (1, 1, 0, 0, 1, 0, 0, 1, 0, 1),
    (1, 1, 0, 0, 0, 0, 0, 1, 0, 1),
    (1, 0, 1, 0, 1, 0, 0, 1, 0, 1),
    (1, 0, 1, 0, 0, 1, 0, 1, 0, 1),
    (1, 0, 1, 0, 0, 1, 0, 0, 1, 1),
    (1, 0, 1, 0, 0, 0, 1, 0, 1, 1),
    (1, 0, 0, 1, 0, 0, 1, 0, 1, 1),
    (1, 0, 0, 1, 0, 0, 0, 0, 1, 1),
)


def paper_network() -> Network:
    edges = [(i, j) for i, succ in PAPER_SUCCESSORS.items() for j in succ]
    nodes = [NodeRecord(i, explicit_weight=float(w)) for i, w in enumerate(PAPER_WEIGHTS)]
    return build_network(nodes, edges, directed=True, source=0, sink=9)


def _coords(*points, edges, directed=True, source=0, sink=None) -> Network:
    nodes = [NodeRecord(i, point=Point(p)) for i, p in enumerate(points)]
    return build_network(
        nodes, edges, directed, source, len(points) - 1 if sink is None else sink
    )


def two_node_network() -> Network:
    return _coords((0.0, 0.0), (10.0, 0.0), edges=[(0, 1)], directed=False)


def triangle_network() -> Network:
    """Source (0,0), detour (1,1), sink (2,0); the direct edge wins."""
    return _coords((0.0, 0.0), (1.0, 1.0), (2.0, 0.0), edges=[(0, 1), (1, 2), (0, 2)], directed=False)


def backtracking_network() -> Network:
    """Collinear back-and-forth route with zero offset versus a short bent one.

    Nodes: 0 source (0,0), 1 (8,0), 2 (2,0), 3 (5,1), 4 sink (10,0).
    """
    return _coords(
        (0.0, 0.0),
        (8.0, 0.0),
        (2.0, 0.0),
        (5.0, 1.0),
        (10.0, 0.0),
        edges=[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)],
    )


def disconnected_network() -> Network:
    return _coords((0.0, 0.0), (1.0, 0.0), (2.0, 0.0), edges=[(0, 1)])


def edgeless_three_network() -> Network:
    return _coords((0.0, 0.0), (1.0, 0.0), (2.0, 0.0), edges=[])


FIXTURES = {
    "paper": paper_network,
    "two_node": two_node_network,
    "triangle": triangle_network,
    "backtracking": backtracking_network,
    "disconnected": disconnected_network,
    "edgeless3": edgeless_three_network,
}
