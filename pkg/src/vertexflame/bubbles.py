"""Bubbles, anti-bubbles and the regions cut off by separations."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .digraph import INTERNALLY_DISJOINT, PathSystem, RootedDigraph, entrance, interior
from .exceptions import (
    ChainConditionViolated,
    InvariantError,
    PreconditionViolated,
    RootInSet,
    TooLarge,
)
from .menger import (
    MengerDeficiency,
    Separation,
    extreme_separations,
    link_set_to_vertex,
    linked_from_root,
    orthogonal_system,
    reachable,
)

BUBBLE = "bubble"
ANTI_BUBBLE = "anti-bubble"


@dataclass(frozen=True)
class RegionWitness:
    """A vertex set together with the path system proving its kind.

    For a bubble the witness is an infan into ``target`` inside the induced
    subdigraph, starting at every entrance vertex (the trivial path
    ``(target,)`` stands for the target itself). For an anti-bubble it is a
    root fan onto the entrance.
    """

    kind: str
    vertices: frozenset[str]
    witness: PathSystem
    target: str | None = None

    def __contains__(self, v: object) -> bool:
        return v in self.vertices

    def __len__(self) -> int:
        return len(self.vertices)


def _as_set(S: Separation | Iterable[str]) -> frozenset[str]:
    return S.vertices if isinstance(S, Separation) else frozenset(S)


def _check_region(D: RootedDigraph, X: frozenset[str]) -> None:
    if D.root in X:
        raise RootInSet("regions never contain the root")
    unknown = X - set(D.vertices)
    if unknown:
        raise PreconditionViolated(f"unknown vertices {sorted(unknown)}")


def is_bubble(D: RootedDigraph, v: str, B: Iterable[str]) -> RegionWitness | MengerDeficiency:
    B = frozenset(B)
    _check_region(D, B)
    if v not in B:
        raise PreconditionViolated(f"{v!r} is not in the candidate bubble")
    ent = entrance(D, B)
    found = link_set_to_vertex(D, ent - {v}, v, allowed=B)
    if isinstance(found, MengerDeficiency):
        return found
    paths = found.paths + (((v,),) if v in ent else ())
    return RegionWitness(BUBBLE, B, PathSystem(paths, INTERNALLY_DISJOINT), v)


def cut_side(D: RootedDigraph, v: str, S: Separation | Iterable[str]) -> RegionWitness:
    """The vertices separated from the root by ``S`` in ``D - rv``, as a bubble."""
    S = _as_set(S)
    system = orthogonal_system(D, v, S)
    reached = reachable(D, D.root, avoid=S, skip=[(D.root, v)])
    B = frozenset(u for u in D.vertices if u not in reached) | S
    tails = [p[next(i for i, w in enumerate(p) if w in S):] for p in system]
    if D.has_edge(D.root, v):
        tails.append((v,))
    return RegionWitness(BUBBLE, B, PathSystem(tuple(tails), INTERNALLY_DISJOINT), v)


def largest_bubble(D: RootedDigraph, v: str) -> RegionWitness:
    near_root, _ = extreme_separations(D, v)
    return cut_side(D, v, near_root)


def unite_bubbles(
    D: RootedDigraph, chain: Sequence[tuple[Iterable[str], str]]
) -> RegionWitness:
    """Merge a chain of bubbles into one bubble of the first target.

    Each later target must equal the first one or lie in the interior of the
    union of its predecessors.
    """
    if not chain:
        raise PreconditionViolated("the chain is empty")
    v0 = chain[0][1]
    union: frozenset[str] = frozenset()
    for i, (B, v) in enumerate(chain):
        B = frozenset(B)
        if i > 0 and v != v0 and v not in interior(D, union):
            raise ChainConditionViolated(i)
        if isinstance(is_bubble(D, v, B), MengerDeficiency):
            raise PreconditionViolated(f"member {i} is not a {v!r}-bubble")
        union |= B
    merged = is_bubble(D, v0, union)
    if isinstance(merged, MengerDeficiency):
        raise InvariantError("the union of a bubble chain is not a bubble")
    return merged


def is_anti_bubble(D: RootedDigraph, A: Iterable[str]) -> RegionWitness | MengerDeficiency:
    A = frozenset(A)
    _check_region(D, A)
    found = linked_from_root(D, entrance(D, A))
    if isinstance(found, MengerDeficiency):
        return found
    return RegionWitness(ANTI_BUBBLE, A, found)


def anti_bubble_seed(D: RootedDigraph, v: str) -> frozenset[str]:
    """``{v}`` together with the in-neighbours of ``v`` other than the root."""
    return frozenset(u for u in D.in_neighbors(v) if u != D.root) | {v}


def _backward_closure(D: RootedDigraph, v: str, stop: frozenset[str]) -> frozenset[str]:
    seen = {v}
    queue = deque([v])
    while queue:
        w = queue.popleft()
        if w in stop:
            continue
        for u in D.in_neighbors(w):
            if u == D.root or u in seen:
                continue
            seen.add(u)
            queue.append(u)
    return frozenset(seen)


def smallest_anti_bubble(D: RootedDigraph, v: str, method: str = "closure") -> RegionWitness:
    """The intersection of all anti-bubbles containing ``v`` and its in-neighbours.

    ``closure`` collects everything that reaches ``v`` backwards without
    crossing the separation nearest ``v``. ``greedy`` peels single vertices
    off the region behind that separation and falls back to an exact search
    when peeling stalls above the minimum.
    """
    _, near_sink = extreme_separations(D, v)
    T = near_sink.vertices
    exact = _backward_closure(D, v, T)
    if method == "closure":
        A = exact
    elif method == "greedy":
        A = _greedy_anti_bubble(D, v, T)
        if A != exact:
            A = _exhaustive_anti_bubble(D, v, A)
    else:
        raise ValueError(f"unknown method {method!r}")
    found = is_anti_bubble(D, A)
    if isinstance(found, MengerDeficiency):
        raise InvariantError(f"{sorted(A)} is not an anti-bubble")
    return found


def _greedy_anti_bubble(D: RootedDigraph, v: str, T: frozenset[str]) -> frozenset[str]:
    current = cut_side(D, v, T).vertices
    keep = anti_bubble_seed(D, v) | T
    progress = True
    while progress:
        progress = False
        for w in sorted(current - keep):
            candidate = current - {w}
            if not isinstance(is_anti_bubble(D, candidate), MengerDeficiency):
                current = candidate
                progress = True
                break
    return current


def _exhaustive_anti_bubble(
    D: RootedDigraph, v: str, upper: frozenset[str], limit: int = 16
) -> frozenset[str]:
    seed = anti_bubble_seed(D, v)
    free = sorted(upper - seed)
    if len(free) > limit:
        raise TooLarge(f"{len(free)} optional vertices exceed the exhaustive limit {limit}")
    for size in range(len(free) + 1):
        for extra in combinations(free, size):
            A = seed | frozenset(extra)
            if not isinstance(is_anti_bubble(D, A), MengerDeficiency):
                # intersection-closed family: the first hit by size is the minimum
                return A
    return upper
