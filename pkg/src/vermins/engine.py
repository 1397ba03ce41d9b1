"""The VeRMinS heuristic.

Every simple source-to-sink route is turned into a binary incidence vector
over the nodes. Vectors whose node set strictly contains another vector's
node set are discarded (Euclidean dominance). Each survivor is scored by the
dot product of its incidence vector with the per-node offsets from the
straight source-sink line, and the smallest score wins.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .geometry import perpendicular_distance
from .network import EXPLICIT, Network

DEFAULT_MAX_ROUTES = 1_000_000
TIE_TOLERANCE = 1e-9


class RouteError(ValueError):
    pass


class NoEffectiveRouteError(RouteError):
    """Source and sink are not connected."""

    def __init__(self, source: int, sink: int):
        super().__init__(f"no effective route from node {source} to node {sink}")


class RouteBudgetExceededError(RouteError):
    def __init__(self, max_routes: int):
        self.max_routes = max_routes
        super().__init__(f"route enumeration exceeded max_routes={max_routes}")


class InvalidRouteError(RouteError):
    pass


class LengthMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class Route:
    path: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "path", tuple(int(i) for i in self.path))


@dataclass(frozen=True)
class RouteVector:
    incidence: tuple[int, ...]
    route: Route

    @classmethod
    def from_path(cls, path: Sequence[int], n: int) -> "RouteVector":
        incidence = [0] * n
        for i in path:
            incidence[i] = 1
        return cls(tuple(incidence), Route(tuple(path)))

    @property
    def path(self) -> tuple[int, ...]:
        return self.route.path

    @property
    def support(self) -> frozenset[int]:
        return frozenset(j for j, k in enumerate(self.incidence) if k)


@dataclass(frozen=True)
class WeightVector:
    weights: tuple[float, ...]

    def __len__(self) -> int:
        return len(self.weights)


@dataclass(frozen=True)
class VerminsResult:
    winner: RouteVector
    criterion_value: float
    q: int
    h: int
    survivors: tuple[tuple[RouteVector, float], ...]
    eliminated: tuple[RouteVector, ...]
    ties: tuple[RouteVector, ...]
    weights: WeightVector


def validate_route(path: Sequence[int], network: Network) -> Route:
    """Check endpoints, simplicity and connectivity without trusting the enumerator."""
    path = tuple(path)
    if len(path) < 2:
        raise InvalidRouteError(f"route {list(path)} is too short")
    if any(not 0 <= i < network.n for i in path):
        raise InvalidRouteError(f"route {list(path)} references a missing node")
    if path[0] != network.source or path[-1] != network.sink:
        raise InvalidRouteError(
            f"route {list(path)} must run from {network.source} to {network.sink}"
        )
    if len(set(path)) != len(path):
        raise InvalidRouteError(f"route {list(path)} repeats a node")
    for a, b in zip(path, path[1:]):
        if not network.has_edge(a, b):
            raise InvalidRouteError(f"route {list(path)} uses missing edge ({a}, {b})")
    return Route(path)


def weight_vector(network: Network) -> WeightVector:
    if network.mode == EXPLICIT:
        weights = [r.explicit_weight for r in network.nodes]
    else:
        s, t = network.point(network.source), network.point(network.sink)
        weights = [perpendicular_distance(r.point, s, t) for r in network.nodes]
    weights[network.source] = 0.0
    weights[network.sink] = 0.0
    return WeightVector(tuple(float(w) for w in weights))


def enumerate_routes(network: Network, max_routes: int = DEFAULT_MAX_ROUTES) -> list[Route]:
    """All simple source-to-sink paths in DFS order, neighbours ascending."""
    if max_routes < 1:
        raise ValueError("max_routes must be positive")
    source, sink = network.source, network.sink
    routes: list[Route] = []
    path = [source]
    on_path = [False] * network.n
    on_path[source] = True
    stack = [iter(network.neighbors(source))]
    while stack:
        nxt = next(stack[-1], None)
        if nxt is None:
            stack.pop()
            on_path[path.pop()] = False
            continue
        if on_path[nxt]:
            continue
        if nxt == sink:
            if len(routes) == max_routes:
                raise RouteBudgetExceededError(max_routes)
            routes.append(Route(tuple(path) + (sink,)))
            continue
        path.append(nxt)
        on_path[nxt] = True
        stack.append(iter(network.neighbors(nxt)))
    if not routes:
        raise NoEffectiveRouteError(source, sink)
    return routes


def enumerate_route_vectors(
    network: Network, max_routes: int = DEFAULT_MAX_ROUTES
) -> list[RouteVector]:
    return [RouteVector.from_path(r.path, network.n) for r in enumerate_routes(network, max_routes)]


def _check_lengths(a: Sequence, b: Sequence) -> None:
    if len(a) != len(b):
        raise LengthMismatchError(f"vector lengths differ: {len(a)} vs {len(b)}")


def dominates(a: RouteVector, b: RouteVector) -> bool:
    """True iff ``a``'s node set is a strict subset of ``b``'s."""
    _check_lengths(a.incidence, b.incidence)
    strictly_smaller = False
    for x, y in zip(a.incidence, b.incidence):
        if x and not y:
            return False
        if y and not x:
            strictly_smaller = True
    return strictly_smaller


def _mask(v: RouteVector) -> int:
    m = 0
    for j, k in enumerate(v.incidence):
        if k:
            m |= 1 << j
    return m


def prune_dominated(vectors: Sequence[RouteVector]) -> tuple[list[RouteVector], int]:
    """Drop every vector dominated by another; survivors keep input order."""
    if vectors:
        n = len(vectors[0].incidence)
        for v in vectors:
            if len(v.incidence) != n:
                raise LengthMismatchError("route vectors have differing lengths")
    masks = [_mask(v) for v in vectors]
    distinct = sorted(set(masks), key=int.bit_count)
    minimal: list[int] = []
    minimal_set: set[int] = set()
    # a mask is dominated iff some strictly smaller mask is a subset; checking
    # against minimal masks suffices because dominance is transitive
    for m in distinct:
        if not any(s & ~m == 0 for s in minimal):
            minimal.append(m)
            minimal_set.add(m)
    survivors = [v for v, m in zip(vectors, masks) if m in minimal_set]
    return survivors, len(vectors) - len(survivors)


def criterion(p: RouteVector, w: WeightVector) -> float:
    _check_lengths(p.incidence, w.weights)
    return math.fsum(k * x for k, x in zip(p.incidence, w.weights))


def vermins_solve(network: Network, max_routes: int = DEFAULT_MAX_ROUTES) -> VerminsResult:
    w = weight_vector(network)
    vectors = enumerate_route_vectors(network, max_routes)
    survivors, h = prune_dominated(vectors)
    kept = {id(v) for v in survivors}
    eliminated = tuple(v for v in vectors if id(v) not in kept)
    scored = tuple((v, criterion(v, w)) for v in survivors)
    best = min(value for _, value in scored)
    ties = tuple(
        sorted((v for v, value in scored if value - best <= TIE_TOLERANCE), key=lambda v: v.path)
    )
    return VerminsResult(
        winner=ties[0],
        criterion_value=best,
        q=len(vectors),
        h=h,
        survivors=scored,
        eliminated=eliminated,
        ties=ties,
        weights=w,
    )
