"""Small canonical digraphs used by the examples and the test-suite."""

from __future__ import annotations

from .digraph import RootedDigraph, build_digraph

# Hosts the crossing pair of paths; "r" is an isolated dummy root.
CROSS_X = frozenset({"x1", "x2"})
CROSS_Y = frozenset({"y1", "y2"})


def star() -> RootedDigraph:
    return build_digraph(["r", "a", "b"], [("r", "a"), ("r", "b")], "r")


def chain() -> RootedDigraph:
    return build_digraph(["r", "x", "y", "t"], [("r", "x"), ("x", "y"), ("y", "t")], "r")


def chainz() -> RootedDigraph:
    return build_digraph(
        ["r", "x", "y", "t", "z"],
        [("r", "x"), ("x", "y"), ("y", "t"), ("y", "z")],
        "r",
    )


def diamond() -> RootedDigraph:
    return build_digraph(
        ["r", "a", "b", "t"], [("r", "a"), ("r", "b"), ("a", "t"), ("b", "t")], "r"
    )


def extra() -> RootedDigraph:
    return build_digraph(
        ["r", "a", "b", "t"], [("r", "a"), ("a", "b"), ("b", "t"), ("a", "t")], "r"
    )


def cross() -> RootedDigraph:
    return build_digraph(
        ["r", "x1", "x2", "a", "y1", "y2"],
        [("x1", "a"), ("x2", "a"), ("a", "y1"), ("a", "y2")],
        "r",
    )


ALL = {
    "star": star,
    "chain": chain,
    "chainz": chainz,
    "diamond": diamond,
    "extra": extra,
    "cross": cross,
}
