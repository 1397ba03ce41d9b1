"""Randomised search for networks where the heuristic misses the true shortest route."""

from __future__ import annotations

import json
import math
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any

import numpy as np

from .engine import DEFAULT_MAX_ROUTES, RouteBudgetExceededError, RouteError, Route, vermins_solve
from .geometry import Point, euclidean_distance
from .network import Network, NetworkError, NodeRecord, build_network, network_digest
from .oracle import exact_shortest_route, route_length

GAP_TOLERANCE = 1e-9
MAX_GENERATION_RETRIES = 100
SEED_MODULUS = 2**64


def real(x: float) -> float:
    """Round to 12 significant digits for structured output."""
    return float(f"{x:.12g}")


class GenerationError(RuntimeError):
    pass


@dataclass(frozen=True)
class GeneratorConfig:
    n: int
    dim: int
    connect_radius: float
    directed_layered: bool = False
    seed: int = 0

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"n must be >= 2, got {self.n}")
        if self.dim < 1:
            raise ValueError(f"dim must be >= 1, got {self.dim}")
        if not self.connect_radius > 0:
            raise ValueError(f"connect_radius must be > 0, got {self.connect_radius}")
        if not 0 <= self.seed < SEED_MODULUS:
            raise ValueError("seed must be a 64-bit unsigned integer")

    def with_seed(self, seed: int) -> "GeneratorConfig":
        return GeneratorConfig(self.n, self.dim, self.connect_radius, self.directed_layered, seed)


def _reachable(network: Network) -> bool:
    seen = {network.source}
    queue = deque([network.source])
    while queue:
        u = queue.popleft()
        if u == network.sink:
            return True
        for v in network.neighbors(u):
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return False


def _geometric_edges(
    points: list[Point], radius: float, layered: bool, source: int, sink: int
) -> list[tuple[int, int]]:
    n = len(points)
    if layered:
        s, t = points[source].coords, points[sink].coords
        axis = [b - a for a, b in zip(s, t)]
        proj = [math.fsum(ai * (x - si) for ai, x, si in zip(axis, p.coords, s)) for p in points]
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if euclidean_distance(points[i], points[j]) > radius:
                continue
            if layered and (proj[j], j) < (proj[i], i):
                edges.append((j, i))
            else:
                edges.append((i, j))
    return edges


def random_geometric_network(
    config: GeneratorConfig, max_retries: int = MAX_GENERATION_RETRIES
) -> Network:
    """Uniform points in the unit hypercube joined when within ``connect_radius``.

    Source is the point with the smallest first coordinate, sink the largest.
    Resamples from the same seeded stream until the two are connected.
    """
    rng = np.random.default_rng(config.seed)
    for _ in range(max_retries):
        raw = rng.random((config.n, config.dim))
        points = [Point(row.tolist()) for row in raw]
        first = [p.coords[0] for p in points]
        source = min(range(config.n), key=lambda i: (first[i], i))
        sink = max(range(config.n), key=lambda i: (first[i], -i))
        if source == sink or points[source] == points[sink]:
            continue
        edges = _geometric_edges(points, config.connect_radius, config.directed_layered, source, sink)
        network = build_network(
            [NodeRecord(i, point=p) for i, p in enumerate(points)],
            edges,
            directed=config.directed_layered,
            source=source,
            sink=sink,
        )
        if _reachable(network):
            return network
    raise GenerationError(
        f"source and sink stayed disconnected after {max_retries} draws "
        f"(n={config.n}, radius={config.connect_radius}); try a larger connect_radius"
    )


@dataclass(frozen=True)
class ComparisonRecord:
    network_digest: str
    heuristic_route: Route
    heuristic_length: float
    heuristic_criterion: float
    exact_route: Route
    exact_length: float
    agree: bool
    gap: float

    def to_dict(self) -> dict[str, Any]:
        return {
            "network_digest": self.network_digest,
            "heuristic_route": list(self.heuristic_route.path),
            "heuristic_length": real(self.heuristic_length),
            "heuristic_criterion": real(self.heuristic_criterion),
            "exact_route": list(self.exact_route.path),
            "exact_length": real(self.exact_length),
            "agree": self.agree,
            "gap": real(self.gap),
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "ComparisonRecord":
        return cls(
            network_digest=d["network_digest"],
            heuristic_route=Route(tuple(d["heuristic_route"])),
            heuristic_length=float(d["heuristic_length"]),
            heuristic_criterion=float(d["heuristic_criterion"]),
            exact_route=Route(tuple(d["exact_route"])),
            exact_length=float(d["exact_length"]),
            agree=bool(d["agree"]),
            gap=float(d["gap"]),
        )


def compare(network: Network, max_routes: int = DEFAULT_MAX_ROUTES) -> ComparisonRecord:
    heuristic = vermins_solve(network, max_routes)
    exact = exact_shortest_route(network)
    h_len = route_length(heuristic.winner.route, network)
    gap = h_len - exact.length
    return ComparisonRecord(
        network_digest=network_digest(network),
        heuristic_route=heuristic.winner.route,
        heuristic_length=h_len,
        heuristic_criterion=heuristic.criterion_value,
        exact_route=exact.route,
        exact_length=exact.length,
        agree=gap <= GAP_TOLERANCE,
        gap=gap,
    )


@dataclass
class SearchReport:
    config: GeneratorConfig
    trials: int
    counterexamples: int = 0
    compared: int = 0
    mean_gap: float = 0.0
    max_gap: float = 0.0
    seeds_of_failures: list[int] = field(default_factory=list)
    failures: list[ComparisonRecord] = field(default_factory=list)
    skipped: list[dict[str, Any]] = field(default_factory=list)

    @property
    def first_counterexample(self) -> tuple[ComparisonRecord, GeneratorConfig] | None:
        if not self.failures:
            return None
        return self.failures[0], self.config.with_seed(self.seeds_of_failures[0])

    def to_dict(self) -> dict[str, Any]:
        first = self.first_counterexample
        return {
            "config": asdict(self.config),
            "trials": self.trials,
            "compared": self.compared,
            "counterexamples": self.counterexamples,
            "skipped": self.skipped,
            "mean_gap": real(self.mean_gap),
            "max_gap": real(self.max_gap),
            "seeds_of_failures": self.seeds_of_failures,
            "first_counterexample": None
            if first is None
            else {"record": first[0].to_dict(), "config": asdict(first[1])},
            "failures": [
                {"seed": s, "record": r.to_dict()}
                for s, r in zip(self.seeds_of_failures, self.failures)
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "SearchReport":
        failures = d["failures"]
        return cls(
            config=GeneratorConfig(**d["config"]),
            trials=d["trials"],
            counterexamples=d["counterexamples"],
            compared=d["compared"],
            mean_gap=float(d["mean_gap"]),
            max_gap=float(d["max_gap"]),
            seeds_of_failures=list(d["seeds_of_failures"]),
            failures=[ComparisonRecord.from_dict(f["record"]) for f in failures],
            skipped=list(d["skipped"]),
        )

    def summary(self) -> str:
        return (
            f"trials={self.trials} counterexamples={self.counterexamples} "
            f"max_gap={real(self.max_gap):.12g}"
        )


def load_report(path: str | Path) -> SearchReport:
    return SearchReport.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


def run_trial(config: GeneratorConfig, max_routes: int) -> tuple[ComparisonRecord | None, str | None]:
    """One seeded trial; returns ``(record, None)`` or ``(None, skip_reason)``."""
    try:
        network = random_geometric_network(config)
        return compare(network, max_routes), None
    except RouteBudgetExceededError as exc:
        return None, f"budget_exceeded: {exc}"
    except (GenerationError, RouteError, NetworkError) as exc:
        return None, f"{type(exc).__name__}: {exc}"


def _trial_args(base: GeneratorConfig, trials: int) -> list[GeneratorConfig]:
    return [base.with_seed((base.seed + k) % SEED_MODULUS) for k in range(trials)]


def _run_star(args: tuple[GeneratorConfig, int]):
    return run_trial(*args)


def search_counterexamples(
    base_config: GeneratorConfig,
    trials: int,
    max_routes: int = DEFAULT_MAX_ROUTES,
    workers: int = 1,
) -> SearchReport:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    configs = _trial_args(base_config, trials)
    jobs = [(c, max_routes) for c in configs]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_run_star, jobs, chunksize=64))
    else:
        outcomes = [_run_star(j) for j in jobs]

    report = SearchReport(config=base_config, trials=trials)
    gaps: list[float] = []
    for config, (record, reason) in zip(configs, outcomes):
        if record is None:
            report.skipped.append({"seed": config.seed, "reason": reason})
            continue
        gaps.append(record.gap)
        if not record.agree:
            report.seeds_of_failures.append(config.seed)
            report.failures.append(record)
    report.compared = len(gaps)
    report.counterexamples = len(report.failures)
    if gaps:
        report.mean_gap = math.fsum(gaps) / len(gaps)
        report.max_gap = max(gaps)
    return report
