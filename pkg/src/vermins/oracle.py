"""Exact Euclidean shortest routes: Dijkstra plus a brute-force cross-check."""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Sequence

from .engine import (
    DEFAULT_MAX_ROUTES,
    NoEffectiveRouteError,
    Route,
    enumerate_routes,
    validate_route,
)
from .geometry import euclidean_distance
from .network import COORDINATES, Network

DIJKSTRA = "dijkstra"
BRUTE_FORCE = "brute_force"

# equal-length alternatives during relaxation are resolved by path order
RELAX_TOLERANCE = 1e-12


class OracleRequiresCoordinatesError(ValueError):
    def __init__(self):
        super().__init__("oracle requires coordinates; network has explicit weights only")


@dataclass(frozen=True)
class ExactResult:
    route: Route
    length: float
    method: str


def _require_coordinates(network: Network) -> None:
    if network.mode != COORDINATES:
        raise OracleRequiresCoordinatesError()


def _edge_length(network: Network, i: int, j: int) -> float:
    return euclidean_distance(network.point(i), network.point(j))


def route_length(route: Route | Sequence[int], network: Network) -> float:
    _require_coordinates(network)
    path = route.path if isinstance(route, Route) else tuple(route)
    validate_route(path, network)
    return _path_length(path, network)


def _path_length(path: Sequence[int], network: Network) -> float:
    return math.fsum(_edge_length(network, a, b) for a, b in zip(path, path[1:]))


def exact_shortest_route(network: Network) -> ExactResult:
    """Dijkstra over Euclidean edge lengths.

    Labels carry the full path so that among equal-length routes the
    lexicographically smallest one is kept.
    """
    _require_coordinates(network)
    source, sink = network.source, network.sink
    dist: dict[int, float] = {source: 0.0}
    best_path: dict[int, tuple[int, ...]] = {source: (source,)}
    settled: set[int] = set()
    heap: list[tuple[float, tuple[int, ...], int]] = [(0.0, (source,), source)]
    while heap:
        d, path, u = heapq.heappop(heap)
        if u in settled or path != best_path[u]:
            continue
        settled.add(u)
        if u == sink:
            break
        for v in network.neighbors(u):
            if v in settled:
                continue
            nd = d + _edge_length(network, u, v)
            npath = path + (v,)
            old = dist.get(v)
            if (
                old is None
                or nd < old - RELAX_TOLERANCE
                or (abs(nd - old) <= RELAX_TOLERANCE and npath < best_path[v])
            ):
                dist[v] = nd
                best_path[v] = npath
                heapq.heappush(heap, (nd, npath, v))
    if sink not in settled:
        raise NoEffectiveRouteError(source, sink)
    route = Route(best_path[sink])
    return ExactResult(route, route_length(route, network), DIJKSTRA)


def brute_force_shortest(network: Network, max_routes: int = DEFAULT_MAX_ROUTES) -> ExactResult:
    _require_coordinates(network)
    best: tuple[float, tuple[int, ...]] | None = None
    for route in enumerate_routes(network, max_routes):
        length = _path_length(route.path, network)
        if (
            best is None
            or length < best[0] - RELAX_TOLERANCE
            or (abs(length - best[0]) <= RELAX_TOLERANCE and route.path < best[1])
        ):
            best = (length, route.path)
    assert best is not None
    return ExactResult(Route(best[1]), best[0], BRUTE_FORCE)
