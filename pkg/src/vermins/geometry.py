"""Euclidean primitives in arbitrary dimension."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence


class GeometryError(ValueError):
    """Base class for geometric input errors."""


class DimensionMismatchError(GeometryError):
    pass


class DegenerateLineError(GeometryError):
    """Raised when the reference line has coincident endpoints."""


@dataclass(frozen=True)
class Point:
    coords: tuple[float, ...]

    def __init__(self, coords: Iterable[float]):
        values = tuple(float(c) for c in coords)
        if not values:
            raise GeometryError("a point needs at least one coordinate")
        if not all(math.isfinite(c) for c in values):
            raise GeometryError(f"non-finite coordinate in {values!r}")
        object.__setattr__(self, "coords", values)

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __len__(self) -> int:
        return len(self.coords)


def _as_point(p: Point | Sequence[float]) -> Point:
    return p if isinstance(p, Point) else Point(p)


def _check_dims(*points: Point) -> int:
    dims = {p.dim for p in points}
    if len(dims) != 1:
        raise DimensionMismatchError(f"points have differing dimensions {sorted(dims)}")
    return dims.pop()


def euclidean_distance(a: Point | Sequence[float], b: Point | Sequence[float]) -> float:
    if not isinstance(a, Point):
        a = Point(a)
    if not isinstance(b, Point):
        b = Point(b)
    if len(a.coords) != len(b.coords):
        raise DimensionMismatchError(f"points have differing dimensions {a.dim} and {b.dim}")
    return math.dist(a.coords, b.coords)


def perpendicular_distance(
    p: Point | Sequence[float],
    source: Point | Sequence[float],
    sink: Point | Sequence[float],
) -> float:
    """Distance from ``p`` to the infinite line through ``source`` and ``sink``.

    Points whose projection falls outside the source-sink segment are still
    measured against the line, not the segment endpoints.
    """
    p, source, sink = _as_point(p), _as_point(source), _as_point(sink)
    _check_dims(p, source, sink)
    length = euclidean_distance(source, sink)
    if length == 0.0:
        raise DegenerateLineError("source and sink coincide; the ideal route is undefined")
    u = [(t - s) / length for s, t in zip(source.coords, sink.coords)]
    v = [x - s for x, s in zip(p.coords, source.coords)]
    along = math.fsum(vi * ui for vi, ui in zip(v, u))
    residual = [vi - along * ui for vi, ui in zip(v, u)]
    return math.sqrt(math.fsum(r * r for r in residual))
