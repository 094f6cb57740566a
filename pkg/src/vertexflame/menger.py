"""Internally disjoint path systems, Menger separators and linkage tests.

All separator work happens in ``D - rv``: the edge from the root straight to
the target is a path of its own and is never cut.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping

from ._flow import SplitNetwork
from .digraph import (
    INTERNALLY_DISJOINT,
    Path,
    PathSystem,
    RootedDigraph,
    restrict_in,
)
from .exceptions import InvariantError, NotAnEMSeparation, PreconditionViolated


@dataclass(frozen=True)
class Separation:
    """A vertex set separating the root from ``target`` in ``D - rv``."""

    target: str
    vertices: frozenset[str]
    witness: PathSystem | None = field(default=None, compare=False)

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class MengerResult:
    kappa: int
    system: PathSystem
    near_root: frozenset[str]
    near_sink: frozenset[str]


@dataclass(frozen=True)
class MengerDeficiency:
    """Proof that a requested linkage does not exist.

    Every path from the relevant side to ``deficient`` meets ``cut`` and
    ``len(cut) < len(deficient)``.
    """

    deficient: frozenset[str]
    cut: frozenset[str]
    value: int


@dataclass(frozen=True)
class AugmentingWalk:
    """Outcome of one augmenting-walk attempt.

    Exactly one of ``system`` (successful case) and ``choice`` (unsuccessful
    case, one vertex per old path) is set.
    """

    successful: bool
    system: PathSystem | None = None
    choice: Mapping[Path, str] | None = None

    @property
    def separator(self) -> frozenset[str]:
        return frozenset(self.choice.values()) if self.choice is not None else frozenset()


class SeparationOrder(str, Enum):
    LESS = "S<=T"
    GREATER = "T<=S"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def _root_net(D: RootedDigraph, v: str) -> SplitNetwork:
    return SplitNetwork(D, [D.root], v, free=[D.root], skip=[(D.root, v)])


def _require_target(D: RootedDigraph, v: str) -> None:
    if v not in D:
        raise PreconditionViolated(f"unknown vertex {v!r}")
    if v == D.root:
        raise PreconditionViolated("the target must differ from the root")


def max_system(D: RootedDigraph, v: str) -> PathSystem:
    """A maximum internally disjoint ``r -> v`` system of ``D - rv``."""
    _require_target(D, v)
    net = _root_net(D, v)
    net.run()
    return PathSystem(tuple(net.paths()), INTERNALLY_DISJOINT)


def kappa(D: RootedDigraph, v: str) -> int:
    """``κ_D(r, v)``, counting the single-edge path ``rv`` when present."""
    _require_target(D, v)
    return _root_net(D, v).run() + D.has_edge(D.root, v)


def kappa_vector(D: RootedDigraph) -> dict[str, int]:
    return {v: kappa(D, v) for v in D.non_root()}


def kappa_and_system(D: RootedDigraph, v: str) -> MengerResult:
    _require_target(D, v)
    net = _root_net(D, v)
    value = net.run()
    paths = net.paths()
    if D.has_edge(D.root, v):
        paths.append((D.root, v))
    system = PathSystem(tuple(paths), INTERNALLY_DISJOINT)
    near_root, near_sink = net.cut_near_source(), net.cut_near_sink()
    if not len(near_root) == len(near_sink) == value:
        raise InvariantError("Menger equality failed")
    return MengerResult(len(system), system, near_root, near_sink)


def reachable(
    D: RootedDigraph,
    start: str,
    *,
    avoid: Iterable[str] = (),
    skip: Iterable[tuple[str, str]] = (),
) -> dict[str, str | None]:
    """Breadth-first reachability; returns a parent map of reached vertices."""
    avoid = set(avoid)
    skip = set(skip)
    parent: dict[str, str | None] = {start: None}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in D.out_neighbors(u):
            if w in parent or w in avoid or (u, w) in skip:
                continue
            parent[w] = u
            queue.append(w)
    return parent


def uncut_path(D: RootedDigraph, v: str, S: Iterable[str]) -> Path | None:
    """An ``r -> v`` path of ``D - rv`` avoiding ``S``, or ``None``."""
    S = set(S)
    if v in S:
        return None
    parent = reachable(D, D.root, avoid=S, skip=[(D.root, v)])
    if v not in parent:
        return None
    out = [v]
    while parent[out[-1]] is not None:
        out.append(parent[out[-1]])  # type: ignore[arg-type]
    return tuple(reversed(out))


def separates(D: RootedDigraph, v: str, S: Iterable[str]) -> bool:
    """Whether every ``r -> v`` path of ``D - rv`` meets ``S``."""
    return uncut_path(D, v, S) is None


def is_em_separation(D: RootedDigraph, v: str, S: Iterable[str]) -> bool:
    S = frozenset(S)
    if D.root in S or v in S or not S <= set(D.vertices):
        return False
    return separates(D, v, S) and len(S) == _root_net(D, v).run()


def extreme_separations(D: RootedDigraph, v: str) -> tuple[Separation, Separation]:
    """The separations nearest the root and nearest ``v``, with a shared witness."""
    _require_target(D, v)
    net = _root_net(D, v)
    net.run()
    witness = PathSystem(tuple(net.paths()), INTERNALLY_DISJOINT)
    return (
        Separation(v, net.cut_near_source(), witness),
        Separation(v, net.cut_near_sink(), witness),
    )


def smallest_separation(D: RootedDigraph, v: str) -> frozenset[str]:
    return extreme_separations(D, v)[0].vertices


def orthogonal_system(D: RootedDigraph, v: str, S: Iterable[str]) -> PathSystem:
    """A maximum system of ``D - rv`` each of whose paths meets ``S`` once.

    Raises:
        NotAnEMSeparation: if ``S`` is not a minimum ``r``-``v`` separator.
    """
    _require_target(D, v)
    S = frozenset(S)
    if D.root in S or v in S or not S <= set(D.vertices):
        raise NotAnEMSeparation(f"{sorted(S)} is not a subset of V - r - v")
    if not separates(D, v, S):
        raise NotAnEMSeparation(f"{sorted(S)} does not separate r from {v!r}")
    system = max_system(D, v)
    if len(system) != len(S):
        raise NotAnEMSeparation(
            f"|S| = {len(S)} differs from the connectivity {len(system)}"
        )
    for p in system:
        if len(S.intersection(p[1:-1])) != 1:
            raise InvariantError(f"{p} is not orthogonal to {sorted(S)}")
    return system


def _check_em(D: RootedDigraph, v: str, S: frozenset[str]) -> None:
    if not is_em_separation(D, v, S):
        raise NotAnEMSeparation(f"{sorted(S)} is not an Erdős–Menger separation of {v!r}")


def separates_from_root(D: RootedDigraph, v: str, S: Iterable[str], T: Iterable[str]) -> bool:
    """Whether ``S`` separates ``T`` from the root in ``D - rv``."""
    S, T = set(S), set(T)
    reached = reachable(D, D.root, avoid=S, skip=[(D.root, v)])
    return not any(t in reached for t in T - S)


def classify_separation(
    D: RootedDigraph, v: str, S: Iterable[str], T: Iterable[str]
) -> SeparationOrder:
    S, T = frozenset(S), frozenset(T)
    _check_em(D, v, S)
    _check_em(D, v, T)
    le = separates_from_root(D, v, S, T)
    ge = separates_from_root(D, v, T, S)
    if le and ge:
        return SeparationOrder.EQUAL
    if le:
        return SeparationOrder.LESS
    if ge:
        return SeparationOrder.GREATER
    return SeparationOrder.INCOMPARABLE


def _check_infan(D: RootedDigraph, X: frozenset[str], v: str, infan: PathSystem) -> None:
    if v in X:
        raise PreconditionViolated(f"{v!r} lies in the source set")
    if not infan.is_infan(v):
        raise PreconditionViolated("the path system is not an infan")
    if not infan.lies_in(D):
        raise PreconditionViolated("the infan does not lie in the digraph")
    if infan.vertices() & X != infan.first_vertices():
        raise PreconditionViolated("the infan touches the source set internally")


def augmenting_step(
    D: RootedDigraph, X: Iterable[str], v: str, infan: PathSystem
) -> AugmentingWalk:
    """Either enlarge an infan from ``X`` by one path or choose a separator on it."""
    X = frozenset(X)
    _check_infan(D, X, v, infan)
    net = SplitNetwork(D, X, v, cut_entries=True)
    for p in infan:
        net.preload(p)
    if net.augment():
        system = PathSystem(tuple(net.paths()), INTERNALLY_DISJOINT)
        if len(system) != len(infan) + 1 or not system.first_vertices() >= infan.first_vertices():
            raise InvariantError("augmentation lost a source")
        return AugmentingWalk(True, system=system)
    cut = net.cut_near_source()
    choice: dict[Path, str] = {}
    for p in infan:
        hit = [w for w in p[:-1] if w in cut]
        if len(hit) != 1:
            raise InvariantError(f"{p} does not cross the cut exactly once")
        choice[p] = hit[0]
    return AugmentingWalk(False, choice=choice)


def linked_from_root(D: RootedDigraph, U: Iterable[str]) -> PathSystem | MengerDeficiency:
    """An ``r``-fan ending exactly in ``U``, or a deficiency certificate."""
    U = frozenset(U)
    if D.root in U:
        raise PreconditionViolated("the root cannot be a fan target")
    net = SplitNetwork(D, [D.root], None, targets=U, free=[D.root])
    value = net.run()
    if value == len(U):
        return PathSystem(tuple(net.paths()), INTERNALLY_DISJOINT)
    R = net.reachable()
    W = frozenset(u for u in U if 2 * net.index[u] + 1 not in R)
    return MengerDeficiency(W, net.cut_near_source(), value)


def link_set_to_vertex(
    D: RootedDigraph, X: Iterable[str], v: str, *, allowed: Iterable[str] | None = None
) -> PathSystem | MengerDeficiency:
    """A ``v``-infan starting exactly in ``X``, or a deficiency certificate.

    ``allowed`` confines the paths to an induced subdigraph.
    """
    X = frozenset(X)
    if v in X:
        raise PreconditionViolated(f"{v!r} lies in the source set")
    if not X:
        return PathSystem()
    net = SplitNetwork(D, X, v, cut_entries=True, allowed=allowed)
    value = net.run()
    if value == len(X):
        return PathSystem(tuple(net.paths()), INTERNALLY_DISJOINT)
    return MengerDeficiency(X, net.cut_near_source(), value)


def realize_last_edges(
    D: RootedDigraph, v: str, I: Iterable[tuple[str, str]]
) -> PathSystem | MengerDeficiency:
    """An internally disjoint ``r -> v`` system whose last edges are exactly ``I``.

    The deficiency, when returned, is computed in ``D↾_v(I - rv)`` without ``rv``.
    """
    _require_target(D, v)
    I = frozenset(I)
    r = D.root
    H = restrict_in(D, v, I).without_root_edge(v)
    net = _root_net(H, v)
    value = net.run()
    wanted = I - {(r, v)}
    if value < len(wanted):
        tails = frozenset(u for u, _ in wanted)
        return MengerDeficiency(tails, net.cut_near_source(), value)
    paths = net.paths()
    if (r, v) in I:
        paths.append((r, v))
    return PathSystem(tuple(paths), INTERNALLY_DISJOINT)
