"""Input coercion for the estimator front-end."""

from __future__ import annotations

from typing import Any

from .digraph import RootedDigraph, build_digraph


def check_digraph(D: Any) -> RootedDigraph:
    """Accept a digraph, its JSON object form, or a ``(vertices, edges, root)`` triple."""
    if isinstance(D, RootedDigraph):
        return D
    if isinstance(D, dict):
        from .io import digraph_from_obj

        return digraph_from_obj(D)
    if isinstance(D, (tuple, list)) and len(D) == 3:
        vertices, edges, root = D
        return build_digraph(vertices, [tuple(e) for e in edges], root)
    raise TypeError(f"cannot interpret {type(D).__name__} as a rooted digraph")


def check_order(D: RootedDigraph, order: Any) -> list[str] | None:
    if order is None:
        return None
    order = [str(v) for v in order]
    if sorted(order) != list(D.non_root()):
        raise ValueError("order must list every non-root vertex exactly once")
    return order
