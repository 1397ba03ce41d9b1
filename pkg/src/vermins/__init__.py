"""Shortest-route heuristic on Euclidean networks, with an exact oracle and a counterexample lab."""

from .engine import (
    DEFAULT_MAX_ROUTES,
    NoEffectiveRouteError,
    Route,
    RouteBudgetExceededError,
    RouteVector,
    VerminsResult,
    WeightVector,
    criterion,
    dominates,
    enumerate_route_vectors,
    prune_dominated,
    validate_route,
    vermins_solve,
    weight_vector,
)
from .geometry import Point, euclidean_distance, perpendicular_distance
from .lab import (
    ComparisonRecord,
    GeneratorConfig,
    SearchReport,
    compare,
    random_geometric_network,
    search_counterexamples,
)
from .network import (
    Network,
    NodeRecord,
    build_network,
    connectivity_matrix,
    load_network,
    parse_network,
    serialize_network,
)
from .oracle import ExactResult, brute_force_shortest, exact_shortest_route, route_length

__version__ = "0.1.0"
