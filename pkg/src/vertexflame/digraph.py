"""Rooted digraphs, paths and path systems.

Vertex ids are opaque strings. The string order on ids is the global order
used for every iteration, so all results downstream are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .exceptions import (
    DuplicateEdge,
    DuplicateVertex,
    EdgeNotIngoing,
    LoopEdge,
    ModeViolation,
    NotAPath,
    RootHasInEdge,
    RootInSet,
    TrivialPathError,
    UnknownEndpoint,
)

Edge = tuple[str, str]
Path = tuple[str, ...]

DISJOINT = "disjoint"
INTERNALLY_DISJOINT = "internally-disjoint"
ROOT_SHARED = "root-shared"
MODES = (DISJOINT, INTERNALLY_DISJOINT, ROOT_SHARED)


class RootedDigraph:
    """A simple digraph with a distinguished root that has no in-edges.

    Instances are immutable; every modifying operation returns a new digraph.
    Use :func:`build_digraph` to construct one from untrusted data.
    """

    __slots__ = ("_root", "_vertices", "_edges", "_in", "_out", "_hash")

    def __init__(self, vertices: Iterable[str], edges: Iterable[Edge], root: str):
        # trusted constructor: callers guarantee the invariants
        self._root = root
        self._vertices = tuple(sorted(vertices))
        self._edges = frozenset(edges)
        ins: dict[str, list[str]] = {v: [] for v in self._vertices}
        outs: dict[str, list[str]] = {v: [] for v in self._vertices}
        for u, v in self._edges:
            outs[u].append(v)
            ins[v].append(u)
        self._in = {v: tuple(sorted(us)) for v, us in ins.items()}
        self._out = {u: tuple(sorted(vs)) for u, vs in outs.items()}
        self._hash = None

    @property
    def root(self) -> str:
        return self._root

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self._edges))

    @property
    def edge_set(self) -> frozenset[Edge]:
        return self._edges

    def non_root(self) -> tuple[str, ...]:
        return tuple(v for v in self._vertices if v != self._root)

    def __contains__(self, v: object) -> bool:
        return v in self._in

    def has_edge(self, u: str, v: str) -> bool:
        return (u, v) in self._edges

    def in_neighbors(self, v: str) -> tuple[str, ...]:
        return self._in[v]

    def out_neighbors(self, u: str) -> tuple[str, ...]:
        return self._out[u]

    def in_edges(self, v: str) -> tuple[Edge, ...]:
        return tuple((u, v) for u in self._in[v])

    def out_edges(self, u: str) -> tuple[Edge, ...]:
        return tuple((u, v) for v in self._out[u])

    def indegree(self, v: str) -> int:
        return len(self._in[v])

    @property
    def num_vertices(self) -> int:
        return len(self._vertices)

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    def delete_edges(self, edges: Iterable[Edge]) -> RootedDigraph:
        """Return a copy without ``edges``; edges not present are ignored."""
        drop = set(edges)
        if not drop & self._edges:
            return self
        return RootedDigraph(self._vertices, self._edges - drop, self._root)

    def without_root_edge(self, v: str) -> RootedDigraph:
        """``D - rv``."""
        return self.delete_edges([(self._root, v)])

    def induced(self, keep: Iterable[str]) -> RootedDigraph:
        """``D[U]`` hosted with the root kept as an isolated vertex when absent."""
        keep = set(keep)
        edges = {(u, v) for u, v in self._edges if u in keep and v in keep}
        return RootedDigraph(keep | {self._root}, edges, self._root)

    def restrict_in(self, v: str, allowed: Iterable[Edge]) -> RootedDigraph:
        return restrict_in(self, v, allowed)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RootedDigraph):
            return NotImplemented
        return (
            self._root == other._root
            and self._vertices == other._vertices
            and self._edges == other._edges
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._root, self._vertices, self._edges))
        return self._hash

    def __repr__(self) -> str:
        return (
            f"RootedDigraph(root={self._root!r}, n={len(self._vertices)}, "
            f"edges={list(self.edges)!r})"
        )


def build_digraph(
    vertices: Iterable[str], edges: Iterable[Sequence[str]], root: str
) -> RootedDigraph:
    """Validate raw data and return a :class:`RootedDigraph`.

    Raises:
        DuplicateVertex, DuplicateEdge, LoopEdge, RootHasInEdge, UnknownEndpoint
    """
    vlist = list(vertices)
    for v in vlist:
        if not isinstance(v, str):
            raise TypeError(f"vertex ids must be strings, got {v!r}")
    vset = set(vlist)
    if len(vset) != len(vlist):
        dup = sorted(v for v in vset if vlist.count(v) > 1)
        raise DuplicateVertex(f"duplicate vertices: {dup}")
    if root not in vset:
        raise UnknownEndpoint(f"root {root!r} is not a vertex")
    seen: set[Edge] = set()
    for raw in edges:
        if len(raw) != 2:
            raise ValueError(f"edge must be a pair, got {raw!r}")
        u, v = raw
        e = (u, v)
        if u not in vset or v not in vset:
            missing = u if u not in vset else v
            raise UnknownEndpoint(f"edge {e} uses unknown vertex {missing!r}")
        if u == v:
            raise LoopEdge(f"loop at {u!r}")
        if v == root:
            raise RootHasInEdge(f"edge {e} enters the root")
        if e in seen:
            raise DuplicateEdge(f"edge {e} listed twice")
        seen.add(e)
    return RootedDigraph(vset, seen, root)


def restrict_in(D: RootedDigraph, v: str, allowed: Iterable[Edge]) -> RootedDigraph:
    """``D↾_v I``: keep only the in-edges of ``v`` in ``I``, plus ``rv``.

    Raises:
        EdgeNotIngoing: if some edge of ``allowed`` is not an in-edge of ``v``.
    """
    if v == D.root:
        raise EdgeNotIngoing("the root has no in-edges to restrict")
    keep = set(allowed)
    incoming = set(D.in_edges(v))
    stray = keep - incoming
    if stray:
        raise EdgeNotIngoing(f"not in-edges of {v!r}: {sorted(stray)}")
    keep.add((D.root, v))
    return D.delete_edges(incoming - keep)


def boundary(D: RootedDigraph, X: Iterable[str]) -> tuple[frozenset[str], frozenset[str]]:
    """Split ``X`` into its entrance and interior with respect to ``D``."""
    X = frozenset(X)
    if D.root in X:
        raise RootInSet("the root cannot belong to the set")
    ent = frozenset(v for v in X if any(u not in X for u in D.in_neighbors(v)))
    return ent, X - ent


def entrance(D: RootedDigraph, X: Iterable[str]) -> frozenset[str]:
    return boundary(D, X)[0]


def interior(D: RootedDigraph, X: Iterable[str]) -> frozenset[str]:
    return boundary(D, X)[1]


def path_edges(p: Path) -> list[Edge]:
    return list(zip(p, p[1:]))


def is_path_in(D: RootedDigraph, p: Path) -> bool:
    if not p or len(set(p)) != len(p) or any(v not in D for v in p):
        return False
    return all(D.has_edge(u, v) for u, v in zip(p, p[1:]))


def concat_paths(P: Sequence[str], Q: Sequence[str], v: str) -> Path:
    """``PvQ``: the initial segment of ``P`` up to ``v`` then ``Q`` from ``v``."""
    P, Q = tuple(P), tuple(Q)
    if v not in P or v not in Q:
        raise NotAPath(f"{v!r} is not on both paths")
    head = P[: P.index(v) + 1]
    tail = Q[Q.index(v) + 1 :]
    if set(head) & set(tail):
        raise NotAPath(f"segments meet outside {v!r}")
    return head + tail


@dataclass(frozen=True)
class PathSystem:
    """A set of paths together with the disjointness mode they obey.

    ``root`` only matters for the root-shared mode, where two paths may meet
    in the root and in their common last vertex.
    """

    paths: tuple[Path, ...] = ()
    mode: str = INTERNALLY_DISJOINT
    root: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        norm = tuple(sorted({tuple(p) for p in self.paths}))
        for p in norm:
            if not p:
                raise NotAPath("empty path")
            if len(set(p)) != len(p):
                raise NotAPath(f"repeated vertex in {p}")
        object.__setattr__(self, "paths", norm)
        bad = self.violation()
        if bad is not None:
            raise ModeViolation(f"{self.mode} system violated by {bad[0]} and {bad[1]}")

    def violation(self) -> tuple[Path, Path] | None:
        for p, q in combinations(self.paths, 2):
            common = set(p) & set(q)
            if self.mode == DISJOINT:
                allowed: set[str] = set()
            elif self.mode == INTERNALLY_DISJOINT:
                allowed = {p[0], p[-1]} & {q[0], q[-1]}
                if set(p[1:-1]) & set(q) or set(q[1:-1]) & set(p):
                    return p, q
            else:
                allowed = {self.root} | ({p[-1]} if p[-1] == q[-1] else set())
            if common - allowed:
                return p, q
        return None

    def __len__(self) -> int:
        return len(self.paths)

    def __iter__(self) -> Iterator[Path]:
        return iter(self.paths)

    def __contains__(self, p: object) -> bool:
        return tuple(p) in self.paths  # type: ignore[arg-type]

    def has_trivial(self) -> bool:
        return any(len(p) == 1 for p in self.paths)

    def first_vertices(self) -> frozenset[str]:
        return frozenset(p[0] for p in self.paths)

    def last_vertices(self) -> frozenset[str]:
        return frozenset(p[-1] for p in self.paths)

    def first_edges(self) -> frozenset[Edge]:
        if self.has_trivial():
            raise TrivialPathError("E⁻ is undefined with trivial paths present")
        return frozenset((p[0], p[1]) for p in self.paths)

    def last_edges(self) -> frozenset[Edge]:
        if self.has_trivial():
            raise TrivialPathError("E⁺ is undefined with trivial paths present")
        return frozenset((p[-2], p[-1]) for p in self.paths)

    def vertices(self) -> frozenset[str]:
        return frozenset(v for p in self.paths for v in p)

    def edges(self) -> frozenset[Edge]:
        return frozenset(e for p in self.paths for e in path_edges(p))

    def in_edges(self, v: str) -> frozenset[Edge]:
        return frozenset(e for e in self.edges() if e[1] == v)

    def lies_in(self, D: RootedDigraph) -> bool:
        return all(is_path_in(D, p) for p in self.paths)

    def check_in(self, D: RootedDigraph) -> None:
        for p in self.paths:
            if not is_path_in(D, p):
                raise NotAPath(f"{p} is not a path of the digraph")

    def is_fan(self, v: str) -> bool:
        return all(p[0] == v for p in self.paths) and _meet_only_at(self.paths, 0)

    def is_infan(self, v: str) -> bool:
        return all(p[-1] == v for p in self.paths) and _meet_only_at(self.paths, -1)

    def with_mode(self, mode: str, root: str | None = None) -> PathSystem:
        return PathSystem(self.paths, mode, root if root is not None else self.root)

    def __repr__(self) -> str:
        shown = ", ".join("→".join(p) for p in self.paths)
        return f"PathSystem([{shown}], {self.mode})"


def _meet_only_at(paths: Sequence[Path], pos: int) -> bool:
    for p, q in combinations(paths, 2):
        if set(p) & set(q) != {p[pos]}:
            return False
    return True


def path_system(paths: Iterable[Sequence[str]], mode: str = INTERNALLY_DISJOINT,
                root: str | None = None) -> PathSystem:
    return PathSystem(tuple(tuple(p) for p in paths), mode, root)
