"""Unit vertex-capacity max-flow by vertex splitting.

Every vertex ``w`` becomes an arc ``w_in -> w_out`` of capacity one (or
unbounded for terminals); every digraph edge ``uw`` becomes an unbounded arc
``u_out -> w_in``.  Augmentation is breadth-first with neighbours scanned in
the global vertex order, so path systems are reproducible.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable

from .digraph import Edge, Path, RootedDigraph


class SplitNetwork:
    """Residual network for vertex-disjoint path problems.

    Args:
        D: host digraph.
        sources: vertices feeding the super source. A single uncapacitated
            source vertex is used directly (``r`` for root-rooted problems).
        sink: target vertex (its in-copy is the sink) or ``None`` to route
            ``targets`` into a super sink through unit arcs.
        targets: vertices attached to the super sink when ``sink`` is None.
        free: vertices whose splitting arc is unbounded.
        allowed: restrict the network to these vertices (default: all).
        skip: edges of ``D`` left out of the network.
        cut_entries: drop every edge entering a source vertex.
    """

    def __init__(
        self,
        D: RootedDigraph,
        sources: Iterable[str],
        sink: str | None = None,
        *,
        targets: Iterable[str] = (),
        free: Iterable[str] = (),
        allowed: Iterable[str] | None = None,
        skip: Iterable[Edge] = (),
        cut_entries: bool = False,
    ):
        verts = D.vertices if allowed is None else tuple(sorted(set(allowed)))
        self.index = {v: i for i, v in enumerate(verts)}
        self.names = verts
        n = len(verts)
        self.S = 2 * n
        self.T = 2 * n + 1
        self.head: list[int] = []
        self.cap: list[int] = []
        self.orig: list[int] = []
        self.adj: list[list[int]] = [[] for _ in range(2 * n + 2)]
        big = n + 2
        free = set(free)
        sources = [s for s in sorted(set(sources)) if s in self.index]
        source_set = set(sources)
        skip = set(skip)
        for v in verts:
            i = self.index[v]
            self._arc(2 * i, 2 * i + 1, big if v in free else 1)
        for u in verts:
            iu = self.index[u]
            for w in D.out_neighbors(u):
                if w not in self.index or (u, w) in skip:
                    continue
                if cut_entries and w in source_set:
                    continue
                self._arc(2 * iu + 1, 2 * self.index[w], big)
        for s in sources:
            self._arc(self.S, 2 * self.index[s], big)
        if sink is not None:
            self._arc(2 * self.index[sink], self.T, big)
        for t in sorted(set(targets)):
            if t in self.index:
                self._arc(2 * self.index[t] + 1, self.T, 1)
        self.value = 0

    def _arc(self, a: int, b: int, c: int) -> None:
        self.adj[a].append(len(self.head))
        self.head.append(b)
        self.cap.append(c)
        self.orig.append(c)
        self.adj[b].append(len(self.head))
        self.head.append(a)
        self.cap.append(0)
        self.orig.append(0)

    # -- flow manipulation -------------------------------------------------

    def _push_along(self, nodes: list[int]) -> None:
        for a, b in zip(nodes, nodes[1:]):
            for e in self.adj[a]:
                if self.head[e] == b and self.orig[e] > 0 and self.cap[e] > 0:
                    self.cap[e] -= 1
                    self.cap[e ^ 1] += 1
                    break
            else:
                raise ValueError("preloaded path leaves the network")
        self.value += 1

    def preload(self, path: Path) -> None:
        """Route one unit along ``path`` (first vertex fed by the super source)."""
        ids = [self.index[v] for v in path]
        nodes = [self.S]
        for i in ids:
            nodes += [2 * i, 2 * i + 1]
        if path[-1] in self.index and self._sink_is(path[-1]):
            nodes = nodes[:-1]
        nodes.append(self.T)
        self._push_along(nodes)

    def _sink_is(self, v: str) -> bool:
        i = 2 * self.index[v]
        return any(self.head[e] == self.T and self.orig[e] > 0 for e in self.adj[i])

    def augment(self) -> bool:
        prev = [-1] * len(self.adj)
        prev[self.S] = -2
        queue = deque([self.S])
        head, cap, adj = self.head, self.cap, self.adj
        while queue:
            a = queue.popleft()
            for e in adj[a]:
                b = head[e]
                if cap[e] > 0 and prev[b] == -1:
                    prev[b] = e
                    if b == self.T:
                        queue.clear()
                        break
                    queue.append(b)
        if prev[self.T] == -1:
            return False
        b = self.T
        while b != self.S:
            e = prev[b]
            cap[e] -= 1
            cap[e ^ 1] += 1
            b = head[e ^ 1]
        self.value += 1
        return True

    def run(self, limit: int | None = None) -> int:
        while (limit is None or self.value < limit) and self.augment():
            pass
        return self.value

    # -- read-out ----------------------------------------------------------

    def reachable(self) -> set[int]:
        seen = {self.S}
        queue = deque([self.S])
        while queue:
            a = queue.popleft()
            for e in self.adj[a]:
                b = self.head[e]
                if self.cap[e] > 0 and b not in seen:
                    seen.add(b)
                    queue.append(b)
        return seen

    def coreachable(self) -> set[int]:
        seen = {self.T}
        queue = deque([self.T])
        while queue:
            b = queue.popleft()
            for e in self.adj[b]:
                a = self.head[e]
                # arc e^1 goes a -> b
                if self.cap[e ^ 1] > 0 and a not in seen:
                    seen.add(a)
                    queue.append(a)
        return seen

    def cut_near_source(self) -> frozenset[str]:
        R = self.reachable()
        return frozenset(
            v for v, i in self.index.items() if 2 * i in R and 2 * i + 1 not in R
        )

    def cut_near_sink(self) -> frozenset[str]:
        R = self.coreachable()
        return frozenset(
            v for v, i in self.index.items() if 2 * i + 1 in R and 2 * i not in R
        )

    def source_side(self) -> frozenset[str]:
        """Vertices whose out-copy is residual-reachable from the source."""
        R = self.reachable()
        return frozenset(v for v, i in self.index.items() if 2 * i + 1 in R)

    def paths(self) -> list[Path]:
        flow = [self.orig[e] - self.cap[e] if self.orig[e] > 0 else 0
                for e in range(len(self.head))]
        out: list[Path] = []
        while True:
            a = self.S
            walk: list[int] = []
            while a != self.T:
                for e in self.adj[a]:
                    if flow[e] > 0:
                        flow[e] -= 1
                        a = self.head[e]
                        break
                else:
                    return out
                if a < self.S:
                    walk.append(a)
            verts: list[str] = []
            for node in walk:
                name = self.names[node // 2]
                if verts and verts[-1] == name:
                    continue
                if name in verts:
                    # erase a circulation picked up on the way
                    del verts[verts.index(name) + 1:]
                else:
                    verts.append(name)
            out.append(tuple(verts))
