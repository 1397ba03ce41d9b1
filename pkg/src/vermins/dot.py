"""Graphviz DOT export with optional route highlighting."""

from __future__ import annotations

from typing import Sequence

from .engine import validate_route
from .network import COORDINATES, Network

HIGHLIGHT = 'color="red", penwidth=2.5'


def _num(x: float) -> str:
    return f"{x:.12g}"


def to_dot(network: Network, route: Sequence[int] | None = None, name: str = "network") -> str:
    """Render ``network`` as DOT text.

    If ``route`` is given it is validated first and its edges get the
    highlight attribute. Positions are pinned from the first two coordinates.
    """
    highlighted: set[tuple[int, int]] = set()
    if route is not None:
        path = validate_route(route, network).path
        for a, b in zip(path, path[1:]):
            highlighted.add((a, b) if network.directed else (min(a, b), max(a, b)))

    kind, arrow = ("digraph", "->") if network.directed else ("graph", "--")
    lines = [f"{kind} {name} {{", "  node [shape=circle];"]
    on_route = set(route or ())
    for r in network.nodes:
        attrs = [f'label="{r.id}"']
        if network.mode == COORDINATES:
            c = r.point.coords
            y = c[1] if len(c) > 1 else 0.0
            attrs.append(f'pos="{_num(c[0])},{_num(y)}!"')
        else:
            attrs.append(f'xlabel="w={_num(r.explicit_weight)}"')
        if r.id in (network.source, network.sink):
            attrs.append("shape=doublecircle")
        if r.id in on_route:
            attrs.append('color="red"')
        lines.append(f"  {r.id} [{', '.join(attrs)}];")
    for i, j in network.sorted_edges():
        suffix = f" [{HIGHLIGHT}]" if (i, j) in highlighted else ""
        lines.append(f"  {i} {arrow} {j}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"
