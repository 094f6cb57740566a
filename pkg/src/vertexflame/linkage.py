"""Pym-style rerouting of two path systems into one.

Every path produced here is either an input path or a single splice
``P v Q``: the initial segment of a first-system path followed by the
terminal segment of a second-system path.
"""

from __future__ import annotations

from itertools import combinations
from typing import Hashable, Iterable, NamedTuple, Sequence

from .digraph import (
    DISJOINT,
    INTERNALLY_DISJOINT,
    ROOT_SHARED,
    Edge,
    PathSystem,
    RootedDigraph,
)
from .exceptions import (
    InvariantError,
    NotDisjoint,
    NotInG,
    NotXYPaths,
    PreconditionViolated,
)
from .menger import (
    MengerDeficiency,
    Separation,
    orthogonal_system,
    realize_last_edges,
)

Walk = tuple[Hashable, ...]


class _Copy(NamedTuple):
    """A clone of ``vertex`` attached to the single edge towards/from ``via``."""

    vertex: str
    via: str


def _sort_key(p: Walk) -> tuple:
    return tuple(str(x) for x in p)


def _reroute(P: Sequence[Walk], Q: Sequence[Walk]) -> list[Walk]:
    """Splice ``P`` onto ``Q`` so that all starts of ``P`` and ends of ``Q`` survive.

    Each ``Q`` path keeps a switch pointer that only moves forward; a
    ``P`` path whose first contact with the current ``Q``-tails lies beyond
    a pointer drags that pointer to the contact vertex.
    """
    P = sorted(P, key=_sort_key)
    Q = sorted(Q, key=_sort_key)
    ptr = [0] * len(Q)
    owner: dict[Hashable, tuple[int, int]] = {}
    for j, q in enumerate(Q):
        for i, w in enumerate(q):
            owner[w] = (j, i)

    def first_hit(p: Walk) -> Hashable | None:
        return next((w for w in p if w in owner), None)

    moved = True
    while moved:
        moved = False
        for p in P:
            h = first_hit(p)
            if h is None:
                continue
            j, i = owner[h]
            if i > ptr[j]:
                for w in Q[j][ptr[j]:i]:
                    del owner[w]
                ptr[j] = i
                moved = True

    out: list[Walk] = []
    hit_tails: set[int] = set()
    for p in P:
        h = first_hit(p)
        if h is None:
            out.append(p)
            continue
        j, i = owner[h]
        hit_tails.add(j)
        out.append(p[: p.index(h)] + Q[j][i:])
    for j, q in enumerate(Q):
        if j not in hit_tails:
            out.append(q[ptr[j]:])
    return out


def _is_xy(p: Walk, X: frozenset, Y: frozenset) -> bool:
    return p[0] in X and p[-1] in Y and not X.intersection(p[1:]) and not Y.intersection(p[:-1])


def _disjoint(paths: Sequence[Walk]) -> bool:
    seen: set = set()
    for p in paths:
        if seen.intersection(p):
            return False
        seen.update(p)
    return True


def splice_of(r: Walk, P: Iterable[Walk], Q: Iterable[Walk]) -> bool:
    """Whether ``r`` is a member of ``P`` or ``Q`` or a single splice ``P v Q``."""
    P, Q = list(P), list(Q)
    if r in P or r in Q:
        return True
    for p in P:
        for q in Q:
            for k, w in enumerate(r):
                if p[: k + 1] == r[: k + 1] and w in q and q[q.index(w):] == r[k:]:
                    return True
    return False


def merge_violation(
    R: Sequence[Walk], P: Sequence[Walk], Q: Sequence[Walk], X: frozenset, Y: frozenset
) -> str | None:
    """Why ``R`` is not an admissible merge of ``P`` and ``Q``, or ``None``."""
    if not _disjoint(R):
        return "paths are not disjoint"
    for r in R:
        if not _is_xy(r, X, Y):
            return f"{r} is not an X->Y path"
        if not splice_of(r, P, Q):
            return f"{r} is neither an input path nor a splice"
    starts = {r[0] for r in R}
    ends = {r[-1] for r in R}
    if not {p[0] for p in P} <= starts:
        return "a start of the first system is lost"
    if not {q[-1] for q in Q} <= ends:
        return "an end of the second system is lost"
    return None


def _merge(P: Sequence[Walk], Q: Sequence[Walk], X: frozenset, Y: frozenset) -> list[Walk]:
    R = _reroute(P, Q)
    if merge_violation(R, P, Q, X, Y) is None:
        return R
    from .oracle import exhaustive_merge

    found = exhaustive_merge(P, Q, X, Y)
    if found is None:
        raise PreconditionViolated("no admissible merge exists for these systems")
    return found


def _check_xy_system(D: RootedDigraph, S: PathSystem, X: frozenset, Y: frozenset) -> None:
    if not _disjoint(S.paths):
        raise NotDisjoint(f"{S} is not a disjoint system")
    for p in S:
        if not _is_xy(p, X, Y):
            raise NotXYPaths(f"{p} is not an X->Y path")
    if not S.lies_in(D):
        raise PreconditionViolated(f"{S} does not lie in the digraph")


def pym_merge(
    D: RootedDigraph, P: PathSystem, Q: PathSystem, X: Iterable[str], Y: Iterable[str]
) -> PathSystem:
    """Disjoint ``X -> Y`` paths covering the starts of ``P`` and the ends of ``Q``."""
    X, Y = frozenset(X), frozenset(Y)
    _check_xy_system(D, P, X, Y)
    _check_xy_system(D, Q, X, Y)
    R = _merge(P.paths, Q.paths, X, Y)
    return PathSystem(tuple(R), DISJOINT)


def _split_ends(paths: Iterable[Walk], v: str) -> list[Walk]:
    return [p[:-1] + (_Copy(v, p[-2]),) for p in paths]


def _split_starts(paths: Iterable[Walk], r: str) -> list[Walk]:
    return [((_Copy(r, p[1]),) + p[1:]) if p[0] == r else p for p in paths]


def _unsplit(p: Walk) -> tuple[str, ...]:
    return tuple(w.vertex if isinstance(w, _Copy) else w for w in p)


def _check_infan_inputs(D: RootedDigraph, Q: PathSystem, v: str, S: frozenset) -> None:
    if v in S:
        raise PreconditionViolated(f"{v!r} must not belong to the start set")
    if Q.has_trivial() or not Q.is_infan(v):
        raise PreconditionViolated("the second system must be a nontrivial infan")
    if not Q.lies_in(D):
        raise PreconditionViolated("the second system does not lie in the digraph")
    for q in Q:
        if S.intersection(q[1:]):
            raise PreconditionViolated(f"{q} meets the start set after its first vertex")


def pym_infan(
    D: RootedDigraph, P: PathSystem, Q: PathSystem, v: str, S: Iterable[str]
) -> PathSystem:
    """A ``v``-infan starting exactly in ``S`` that covers the last edges of ``Q``.

    ``P`` must link ``S`` to ``v``.
    """
    S = frozenset(S)
    _check_infan_inputs(D, Q, v, S)
    if P.has_trivial() or not P.is_infan(v) or P.first_vertices() != S or not P.lies_in(D):
        raise PreconditionViolated("the first system must link the start set to the target")
    if not Q:
        return P
    Ps, Qs = _split_ends(P.paths, v), _split_ends(Q.paths, v)
    Y = frozenset(p[-1] for p in Ps + Qs)
    R = _merge(Ps, Qs, S, Y)
    out = PathSystem(tuple(_unsplit(r) for r in R), INTERNALLY_DISJOINT)
    if out.first_vertices() != S or not out.last_edges() >= Q.last_edges():
        raise InvariantError("infan merge lost coverage")
    return out


def pym_rooted(
    D: RootedDigraph, P: PathSystem, Q: PathSystem, S: Iterable[str], v: str
) -> PathSystem:
    """Like :func:`pym_infan` but paths starting at the root may share it."""
    S = frozenset(S)
    r = D.root
    _check_infan_inputs(D, Q, v, S)
    if P.has_trivial() or not P.lies_in(D) or any(p[-1] != v for p in P):
        raise PreconditionViolated("the first system must consist of paths into the target")
    for p in P:
        if p[0] not in S or S.intersection(p[1:]):
            raise PreconditionViolated(f"{p} is not an S->v path")
    for p, q in combinations(P.paths, 2):
        if (set(p) & set(q)) - {v, r}:
            raise PreconditionViolated(f"{p} and {q} share more than the root and the target")
    if not Q:
        return P.with_mode(ROOT_SHARED, r)
    Ps = _split_ends(_split_starts(P.paths, r), v)
    Qs = _split_ends(_split_starts(Q.paths, r), v)
    X = frozenset(S - {r}) | {p[0] for p in Ps + Qs if isinstance(p[0], _Copy)}
    Y = frozenset(p[-1] for p in Ps + Qs)
    R = _merge(Ps, Qs, X, Y)
    out = PathSystem(tuple(_unsplit(w) for w in R), ROOT_SHARED, r)
    if not out.first_vertices() >= P.first_vertices() or not out.last_edges() >= Q.last_edges():
        raise InvariantError("rooted merge lost coverage")
    return out


def is_orthogonal(D: RootedDigraph, v: str, S: frozenset[str], R: PathSystem) -> bool:
    """Whether ``R`` is an internally disjoint ``r -> v`` system of ``D - rv``
    choosing each vertex of ``S`` from exactly one path."""
    r = D.root
    if R.mode != INTERNALLY_DISJOINT or R.violation() is not None:
        return False
    if not R.lies_in(D.without_root_edge(v)):
        return False
    hits = []
    for p in R:
        if p[0] != r or p[-1] != v:
            return False
        inner = S.intersection(p[1:-1])
        if len(inner) != 1:
            return False
        hits.extend(inner)
    return len(hits) == len(S) and set(hits) == S


def cover_extension(
    D: RootedDigraph,
    v: str,
    S: Separation | Iterable[str],
    I: Iterable[Edge],
    witness: PathSystem | None = None,
) -> PathSystem:
    """An orthogonal system for ``S`` whose last edges contain ``I - rv``.

    ``witness`` may supply a path system realising ``I`` exactly; otherwise
    one is computed.
    """
    S = S.vertices if isinstance(S, Separation) else frozenset(S)
    I = frozenset(I)
    r = D.root
    base = orthogonal_system(D, v, S)
    if witness is None:
        found = realize_last_edges(D, v, I)
        if isinstance(found, MengerDeficiency):
            raise NotInG(f"{sorted(I)} cannot be realised as last edges at {v!r}")
        witness = found
    elif not witness.lies_in(D) or witness.has_trivial() or witness.last_edges() != I:
        raise NotInG("the supplied witness does not realise the edge set")
    Qw = PathSystem(tuple(p for p in witness if p != (r, v)), INTERNALLY_DISJOINT)
    wanted = I - {(r, v)}

    if len(Qw) == len(S):
        # already maximum, hence orthogonal to every minimum separator
        R = Qw
    else:
        tails = []
        for q in Qw:
            last = max(i for i, w in enumerate(q) if w in S)
            tails.append(q[last:])
        heads: dict[str, tuple[str, ...]] = {}
        segs = []
        for p in base:
            i = next(i for i, w in enumerate(p) if w in S)
            heads[p[i]] = p[:i]
            segs.append(p[i:])
        merged = pym_infan(
            D,
            PathSystem(tuple(segs), INTERNALLY_DISJOINT),
            PathSystem(tuple(tails), INTERNALLY_DISJOINT),
            v,
            S,
        )
        R = PathSystem(tuple(heads[p[0]] + p for p in merged), INTERNALLY_DISJOINT)
    if not is_orthogonal(D, v, S, R) or not R.last_edges() >= wanted:
        raise InvariantError("cover extension produced an invalid system")
    return R


def is_splice_shaped(R: PathSystem, P: PathSystem, Q: PathSystem) -> bool:
    return all(splice_of(p, P.paths, Q.paths) for p in R)


__all__ = [
    "cover_extension",
    "is_orthogonal",
    "is_splice_shaped",
    "merge_violation",
    "pym_infan",
    "pym_merge",
    "pym_rooted",
    "splice_of",
]
