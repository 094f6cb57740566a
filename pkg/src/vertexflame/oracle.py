"""Exponential-time reference implementations and lemma checkers.

Nothing here calls the flow code: linkages are decided by exhaustive
path-system search with memoisation on the set of used vertices, and
separations by plain reachability.  Size guards raise instead of
truncating.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Hashable, Iterable, Iterator, Mapping, Sequence

from .digraph import Edge, Path, PathSystem, RootedDigraph, build_digraph, entrance, interior, restrict_in
from .exceptions import HypothesisViolated, InvariantError, TooLarge

MAX_REGION_VERTICES = 16
MAX_G_INDEGREE = 8
MAX_G_VERTICES = 12

Walk = tuple[Hashable, ...]


# -- exhaustive path-system search ---------------------------------------------


@dataclass(frozen=True)
class Request:
    """One path to route: through ``ways`` in order, then append ``tail``."""

    ways: tuple[str, ...]
    blocked: frozenset[str] = frozenset()
    tail: tuple[str, ...] = ()


def _routes(
    D: RootedDigraph,
    req: Request,
    bad: set[str],
    allowed: frozenset[str] | None,
    skip: frozenset[Edge],
) -> Iterator[tuple[str, ...]]:
    ways = req.ways
    waypoints = set(ways)
    path = [ways[0]]
    seen = {ways[0]}

    def rec(i: int) -> Iterator[tuple[str, ...]]:
        # ``i`` indexes the next waypoint to reach
        if i == len(ways):
            yield tuple(path)
            return
        u = path[-1]
        for w in D.out_neighbors(u):
            if w in seen or w in bad or (u, w) in skip:
                continue
            if allowed is not None and w not in allowed:
                continue
            if w in waypoints and w != ways[i]:
                continue
            path.append(w)
            seen.add(w)
            yield from rec(i + 1 if w == ways[i] else i)
            path.pop()
            seen.discard(w)

    yield from rec(1)


def find_system(
    D: RootedDigraph,
    requests: Sequence[Request],
    *,
    shared: Iterable[str] = (),
    allowed: Iterable[str] | None = None,
    skip: Iterable[Edge] = (),
) -> list[Path] | None:
    """Paths serving every request, pairwise meeting only in ``shared``."""
    shared = frozenset(shared)
    allowed = None if allowed is None else frozenset(allowed)
    skip = frozenset(skip)
    owner: dict[str, int] = {}
    for k, req in enumerate(requests):
        if allowed is not None and not set(req.ways + req.tail) <= allowed:
            return None
        for w in req.ways + req.tail:
            if w in shared:
                continue
            if owner.setdefault(w, k) != k:
                return None
    failed: set[tuple[int, frozenset[str]]] = set()

    def solve(k: int, used: frozenset[str]) -> list[Path] | None:
        if k == len(requests):
            return []
        if (k, used) in failed:
            return None
        req = requests[k]
        bad = set(used) | set(req.blocked) | {w for w, j in owner.items() if j != k}
        bad -= shared
        bad.difference_update(req.tail)
        for p in _routes(D, req, bad, allowed, skip):
            full = p + req.tail
            if len(set(full)) != len(full):
                continue
            rest = solve(k + 1, used | (frozenset(full) - shared))
            if rest is not None:
                return [full] + rest
        failed.add((k, used))
        return None

    return solve(0, frozenset())


def linked_from(D: RootedDigraph, U: Iterable[str]) -> list[Path] | None:
    """An ``r``-fan ending exactly in ``U``."""
    r = D.root
    return find_system(D, [Request((r, u)) for u in sorted(U)], shared=[r])


def linked_to(
    D: RootedDigraph,
    X: Iterable[str],
    v: str,
    allowed: Iterable[str] | None = None,
    blocked: Iterable[str] = (),
) -> list[Path] | None:
    """A ``v``-infan starting exactly in ``X`` and avoiding ``blocked`` otherwise."""
    blocked = frozenset(blocked)
    reqs = [Request((x,) if x == v else (x, v), blocked - {x}) for x in sorted(X)]
    return find_system(D, reqs, shared=[v], allowed=allowed)


def _last_edge_requests(D: RootedDigraph, v: str, I: Iterable[Edge]) -> list[Request]:
    r = D.root
    return [Request((u,) if u == r else (r, u), frozenset([v]), (v,)) for u, _ in sorted(I)]


def realizes(D: RootedDigraph, v: str, I: Iterable[Edge]) -> list[Path] | None:
    """An internally disjoint ``r -> v`` system with exactly ``I`` as last edges."""
    r = D.root
    return find_system(D, _last_edge_requests(D, v, I), shared=[r, v])


# -- brute references ----------------------------------------------------------


def _guard_regions(D: RootedDigraph) -> None:
    if D.num_vertices - 1 > MAX_REGION_VERTICES:
        raise TooLarge(f"{D.num_vertices - 1} non-root vertices exceed {MAX_REGION_VERTICES}")


def _reach(D: RootedDigraph, avoid: Iterable[str], skip: Edge | None) -> set[str]:
    avoid = set(avoid)
    seen = {D.root}
    queue = deque([D.root])
    while queue:
        u = queue.popleft()
        for w in D.out_neighbors(u):
            if w not in seen and w not in avoid and (u, w) != skip:
                seen.add(w)
                queue.append(w)
    return seen


def brute_kappa(D: RootedDigraph, v: str) -> int:
    """Largest number of internally disjoint ``r -> v`` paths, by search."""
    r = D.root
    heads = [e for e in D.in_edges(v) if e[0] != r]
    best = 0
    for k in range(1, len(heads) + 1):
        if not any(realizes(D, v, I) is not None for I in combinations(heads, k)):
            break
        best = k
    return best + D.has_edge(r, v)


@dataclass(frozen=True)
class BruteSeparations:
    target: str
    all: frozenset[frozenset[str]]
    minimum: frozenset[str]
    maximum: frozenset[str]


def _separates_from_root(D: RootedDigraph, v: str, S: frozenset[str], T: frozenset[str]) -> bool:
    reached = _reach(D, S, (D.root, v))
    return not (T - S) & reached


def brute_separations(D: RootedDigraph, v: str) -> BruteSeparations:
    """Every separator of ``D - rv`` admitting an orthogonal path system."""
    _guard_regions(D)
    r = D.root
    rest = [u for u in D.non_root() if u != v]
    found = []
    for k in range(len(rest) + 1):
        for S in combinations(rest, k):
            S = frozenset(S)
            if v in _reach(D, S, (r, v)):
                continue
            if any(v not in _reach(D, S - {s}, (r, v)) for s in S):
                continue
            reqs = [Request((r, s, v), S - {s}) for s in sorted(S)]
            if find_system(D, reqs, shared=[r, v], skip=[(r, v)]) is not None:
                found.append(S)
    lows = [S for S in found if all(_separates_from_root(D, v, S, T) for T in found)]
    highs = [T for T in found if all(_separates_from_root(D, v, S, T) for S in found)]
    if len(lows) != 1 or len(highs) != 1:
        raise InvariantError(f"separations of {v!r} lack unique extremes")
    return BruteSeparations(v, frozenset(found), lows[0], highs[0])


@dataclass(frozen=True)
class BruteRegions:
    target: str
    bubbles: frozenset[frozenset[str]]
    anti_bubbles: frozenset[frozenset[str]]
    largest_bubble: frozenset[str]
    smallest_anti_bubble: frozenset[str]


def brute_is_bubble(D: RootedDigraph, v: str, B: frozenset[str]) -> bool:
    return linked_to(D, entrance(D, B) - {v}, v, allowed=B) is not None


def brute_is_anti_bubble(D: RootedDigraph, A: frozenset[str]) -> bool:
    return linked_from(D, entrance(D, A)) is not None


def brute_regions(D: RootedDigraph, v: str) -> BruteRegions:
    _guard_regions(D)
    r = D.root
    others = [u for u in D.non_root() if u != v]
    subsets = [frozenset(c) for k in range(len(others) + 1) for c in combinations(others, k)]
    bubbles = frozenset(B | {v} for B in subsets if brute_is_bubble(D, v, B | {v}))
    antis = frozenset(
        A for A in subsets + [B | {v} for B in subsets] if brute_is_anti_bubble(D, A)
    )
    top = frozenset().union(*bubbles)
    if top not in bubbles:
        raise InvariantError("the union of all bubbles is not a bubble")
    seed = frozenset(u for u in D.in_neighbors(v) if u != r) | {v}
    low = frozenset(D.non_root())
    for A in antis:
        if seed <= A:
            low &= A
    return BruteRegions(v, bubbles, antis, top, low)


def brute_g(D: RootedDigraph, v: str) -> frozenset[frozenset[Edge]]:
    """Every in-edge set of ``v`` realisable as exact last edges."""
    ins = D.in_edges(v)
    if len(ins) > MAX_G_INDEGREE or D.num_vertices > MAX_G_VERTICES:
        raise TooLarge(f"in-degree {len(ins)} or order {D.num_vertices} beyond the guard")
    family = frozenset(
        frozenset(I)
        for k in range(len(ins) + 1)
        for I in combinations(ins, k)
        if realizes(D, v, I) is not None
    )
    for I in family:
        for e in I:
            if I - {e} not in family:
                raise InvariantError(f"realisable sets at {v!r} are not closed under subsets")
    return family


def brute_is_flame(D: RootedDigraph) -> bool:
    return all(realizes(D, v, D.in_edges(v)) is not None for v in D.non_root())


# -- exhaustive merge ------------------------------------------------------------


def _simple(p: Walk) -> bool:
    return len(set(p)) == len(p)


def _xy(p: Walk, X: frozenset, Y: frozenset) -> bool:
    return p[0] in X and p[-1] in Y and not X.intersection(p[1:]) and not Y.intersection(p[:-1])


def exhaustive_merge(
    P: Sequence[Walk], Q: Sequence[Walk], X: Iterable, Y: Iterable
) -> list[Walk] | None:
    """Search all splice assignments for a disjoint ``X -> Y`` system covering
    the starts of ``P`` and the ends of ``Q``."""
    X, Y = frozenset(X), frozenset(Y)
    cands: list[Walk] = list(P) + list(Q)
    for p in P:
        for q in Q:
            for i, w in enumerate(p):
                if w in q:
                    cands.append(p[:i] + q[q.index(w):])
    cands = list(dict.fromkeys(c for c in cands if _simple(c) and _xy(c, X, Y)))
    needs = [("start", p[0]) for p in P] + [("end", q[-1]) for q in Q]
    needs = list(dict.fromkeys(needs))

    def covers(c: Walk, need) -> bool:
        kind, w = need
        return c[0] == w if kind == "start" else c[-1] == w

    def solve(chosen: list[Walk], used: set) -> list[Walk] | None:
        pending = [n for n in needs if not any(covers(c, n) for c in chosen)]
        if not pending:
            return list(chosen)
        need = pending[0]
        for c in cands:
            if covers(c, need) and not used.intersection(c):
                chosen.append(c)
                found = solve(chosen, used | set(c))
                if found is not None:
                    return found
                chosen.pop()
        return None

    return solve([], set())


# -- random instances ------------------------------------------------------------


def vertex_names(n: int) -> list[str]:
    width = max(2, len(str(n - 1)))
    return ["r"] + [f"v{i:0{width}d}" for i in range(1, n)]


def gen_random(n: int, p: float, seed: int) -> RootedDigraph:
    """A seeded simple digraph on ``n`` vertices rooted at ``r``."""
    if n < 1 or not 0 <= p <= 1:
        raise ValueError("need n >= 1 and 0 <= p <= 1")
    rng = random.Random(seed)
    names = vertex_names(n)
    edges = [(a, b) for a in names for b in names[1:] if a != b and rng.random() < p]
    return build_digraph(names, edges, "r")


def random_large_subgraph(D: RootedDigraph, rng: random.Random) -> RootedDigraph:
    """Delete random non-root edges while every connectivity survives."""
    target = {v: brute_kappa(D, v) for v in D.non_root()}
    L = D
    edges = [e for e in D.edges if e[0] != D.root]
    rng.shuffle(edges)
    for e in edges:
        trial = L.delete_edges([e])
        if all(brute_kappa(trial, v) == k for v, k in target.items()):
            L = trial
    return L


def _random_path(
    D: RootedDigraph, start: str, ends: frozenset[str], avoid: set, rng: random.Random
) -> Path | None:
    """A random simple path from ``start`` to a vertex of ``ends`` avoiding ``avoid``."""
    for _ in range(20):
        path = [start]
        seen = {start}
        while path[-1] not in ends or len(path) == 1 and start not in ends:
            nxt = [w for w in D.out_neighbors(path[-1]) if w not in seen and w not in avoid]
            if not nxt:
                break
            w = rng.choice(nxt)
            path.append(w)
            seen.add(w)
        if path[-1] in ends and len(path) > 1:
            return tuple(path)
    return None


def _random_disjoint_xy(
    D: RootedDigraph, X: frozenset[str], Y: frozenset[str], rng: random.Random, k: int
) -> list[Path]:
    out: list[Path] = []
    used: set[str] = set()
    starts = sorted(X)
    rng.shuffle(starts)
    for x in starts:
        if len(out) == k:
            break
        if x in used:
            continue
        p = _random_path(D, x, Y, used | (X - {x}), rng)
        if p is not None and not (Y.intersection(p[:-1])):
            out.append(p)
            used.update(p)
    return out


# -- lemma checks ----------------------------------------------------------------

LEMMAS = (
    "no_collapse",
    "bubble_unite",
    "pym_shape",
    "aug_walk",
    "g_quasi_add_one",
    "linked_preserved",
    "quasi_preserved",
    "largest_emsep",
)


@dataclass(frozen=True)
class LemmaInstance:
    lemma: str
    digraph: RootedDigraph
    params: Mapping[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class LemmaResult:
    lemma: str
    passed: bool
    counterexample: dict | None = None

    def __bool__(self) -> bool:
        return self.passed


def _fail(inst: LemmaInstance, note: str, **extra: Any) -> LemmaResult:
    from .io import digraph_to_obj

    payload = {"digraph": digraph_to_obj(inst.digraph), "note": note}
    payload["params"] = {k: _plain(v) for k, v in {**inst.params, **extra}.items()}
    return LemmaResult(inst.lemma, False, payload)


def _plain(x: Any) -> Any:
    if isinstance(x, RootedDigraph):
        from .io import digraph_to_obj

        return digraph_to_obj(x)
    if isinstance(x, PathSystem):
        return [list(p) for p in x]
    if isinstance(x, (set, frozenset)):
        return sorted((_plain(y) for y in x), key=repr)
    if isinstance(x, (list, tuple)):
        return [_plain(y) for y in x]
    return x


def _check_no_collapse(inst: LemmaInstance) -> LemmaResult:
    from .flame import no_collapse_step

    L, v = inst.digraph, inst.params["v"]
    if v not in L.non_root():
        raise HypothesisViolated(f"{v!r} is not a non-root vertex")
    L2, Q = no_collapse_step(L, v)
    for u in L.non_root():
        before = brute_separations(L, u).minimum
        after = brute_separations(L2, u).minimum
        if before != after:
            return _fail(inst, f"smallest separation of {u} moved", before=before, after=after)
        if brute_kappa(L2, u) != brute_kappa(L, u):
            return _fail(inst, f"connectivity of {u} dropped", reduced=L2)
    S = brute_separations(L, v).minimum
    hits = [S.intersection(p[1:-1]) for p in Q]
    if any(len(h) != 1 for h in hits) or set().union(*hits, set()) != S:
        return _fail(inst, "thinning system is not orthogonal", system=Q)
    return LemmaResult(inst.lemma, True)


def _check_bubble_unite(inst: LemmaInstance) -> LemmaResult:
    from .bubbles import unite_bubbles

    D, chain = inst.digraph, [(frozenset(B), v) for B, v in inst.params["chain"]]
    union: frozenset[str] = frozenset()
    for i, (B, v) in enumerate(chain):
        if not brute_is_bubble(D, v, B):
            raise HypothesisViolated(f"member {i} is not a bubble")
        if i and v != chain[0][1] and v not in interior(D, union):
            raise HypothesisViolated(f"member {i} breaks the chain condition")
        union |= B
    if not brute_is_bubble(D, chain[0][1], union):
        return _fail(inst, "union is not a bubble")
    merged = unite_bubbles(D, chain)
    if merged.vertices != union:
        return _fail(inst, "fast union differs", merged=merged.vertices)
    return LemmaResult(inst.lemma, True)


def _check_pym_shape(inst: LemmaInstance) -> LemmaResult:
    from .digraph import DISJOINT
    from .linkage import merge_violation, pym_merge

    D = inst.digraph
    X, Y = frozenset(inst.params["X"]), frozenset(inst.params["Y"])
    P = [tuple(p) for p in inst.params["P"]]
    Q = [tuple(q) for q in inst.params["Q"]]
    for sys in (P, Q):
        if not all(_xy(p, X, Y) and _simple(p) for p in sys) or len(set().union(*map(set, sys), set())) != sum(map(len, sys)):
            raise HypothesisViolated("inputs must be disjoint X->Y systems")
    R = pym_merge(D, PathSystem(tuple(P), DISJOINT), PathSystem(tuple(Q), DISJOINT), X, Y)
    why = merge_violation(R.paths, P, Q, X, Y)
    if why is not None:
        return _fail(inst, why, result=R)
    if not R.lies_in(D):
        return _fail(inst, "merged system leaves the digraph", result=R)
    if exhaustive_merge(P, Q, X, Y) is None:
        return _fail(inst, "exhaustive search finds no merge although one was produced")
    return LemmaResult(inst.lemma, True)


def _check_aug_walk(inst: LemmaInstance) -> LemmaResult:
    from .menger import augmenting_step

    D, v = inst.digraph, inst.params["v"]
    X = frozenset(inst.params["X"])
    infan = [tuple(p) for p in inst.params["infan"]]
    starts = {p[0] for p in infan}
    used = set().union(*map(set, infan), set())
    if v in X or not all(p[-1] == v and _simple(p) for p in infan) or used & X != starts:
        raise HypothesisViolated("not an infan from X meeting X only at its starts")
    step = augmenting_step(D, X, v, PathSystem(tuple(infan)))
    # a larger infan exists iff augmentation must succeed
    bigger = any(
        linked_to(D, T, v, blocked=X) is not None
        for T in combinations(sorted(X), len(infan) + 1)
        if set(T) >= starts
    )
    if step.successful != bigger:
        return _fail(inst, f"augmentation reported {step.successful}, search found {bigger}")
    if step.successful:
        new = step.system
        if len(new) != len(infan) + 1 or not new.first_vertices() >= starts:
            return _fail(inst, "augmented infan lost a start", result=new)
        if linked_to(D, new.first_vertices(), v, blocked=X) is None:
            return _fail(inst, "augmented start set is not linked", result=new)
    else:
        choice = step.choice
        if sorted(choice) != sorted(infan) or any(choice[p] not in p[:-1] for p in infan):
            return _fail(inst, "separator does not pick one vertex per path")
        S = set(choice.values())
        for x in X - S:
            seen, queue = {x}, deque([x])
            while queue:
                u = queue.popleft()
                for w in D.out_neighbors(u):
                    if w not in seen and w not in S and w not in X:
                        seen.add(w)
                        queue.append(w)
            if v in seen:
                return _fail(inst, f"separator misses a path from {x}", separator=S)
    return LemmaResult(inst.lemma, True)


def _separates_set(D: RootedDigraph, S: frozenset[str], targets: frozenset[str]) -> bool:
    reached = _reach(D, S, None)
    return not (targets - S - {D.root}) & reached


def _check_g_quasi_add_one(inst: LemmaInstance) -> LemmaResult:
    D, w = inst.digraph, inst.params["w"]
    u, v = inst.params["edge"]
    r = D.root
    if u == r or v == w or not D.has_edge(u, v):
        raise HypothesisViolated("need an edge uv with u != r and v != w")
    if realizes(D, w, D.in_edges(w)) is None:
        raise HypothesisViolated(f"in-edges of {w} are not realisable")
    if realizes(D.delete_edges([(u, v)]), w, D.in_edges(w)) is not None:
        raise HypothesisViolated("deleting the edge does not destroy realisability")
    _guard_regions(D)
    near = frozenset(D.in_neighbors(v)) - {u}
    others = [x for x in D.non_root() if x not in (u, v)]
    for k in range(len(others) + 1):
        for extra in combinations(others, k):
            S = frozenset(extra) | {v}
            if not _separates_set(D, S, near):
                continue
            reqs = [Request((r, s)) for s in sorted(S - {v})]
            reqs.append(Request((r, u) if u != r else (r,), frozenset([v]), (v,)))
            if find_system(D, reqs, shared=[r]) is not None:
                return LemmaResult(inst.lemma, True)
    return _fail(inst, "no linked separating set with the edge as last edge")


def _check_linked_preserved(inst: LemmaInstance) -> LemmaResult:
    from .menger import MengerDeficiency, linked_from_root

    D, L = inst.digraph, inst.params["large"]
    U = frozenset(inst.params["U"])
    if linked_from(D, U) is None:
        raise HypothesisViolated("U is not linked from the root")
    if any(brute_kappa(D, v) != brute_kappa(L, v) for v in D.non_root()):
        raise HypothesisViolated("the subdigraph is not large")
    if linked_from(L, U) is None:
        return _fail(inst, "U lost its linkage")
    if isinstance(linked_from_root(L, U), MengerDeficiency):
        return _fail(inst, "fast linkage test disagrees")
    return LemmaResult(inst.lemma, True)


def _check_quasi_preserved(inst: LemmaInstance) -> LemmaResult:
    from .flame import flame_check

    D, L = inst.digraph, inst.params["large"]
    if not brute_is_flame(D):
        raise HypothesisViolated("the digraph is not a flame")
    if any(brute_kappa(D, v) != brute_kappa(L, v) for v in D.non_root()):
        raise HypothesisViolated("the subdigraph is not large")
    if not brute_is_flame(L):
        return _fail(inst, "large subdigraph is not a flame")
    if not flame_check(L).is_flame:
        return _fail(inst, "fast flame test disagrees")
    return LemmaResult(inst.lemma, True)


def _check_largest_emsep(inst: LemmaInstance) -> LemmaResult:
    D, v = inst.digraph, inst.params["v"]
    I = frozenset(tuple(e) for e in inst.params["I"])
    if not I <= set(D.in_edges(v)):
        raise HypothesisViolated("I must consist of in-edges of v")
    D2 = restrict_in(D, v, I)
    T = brute_separations(D, v).maximum
    if linked_to(D2, T, v) is None:
        raise HypothesisViolated("the largest separation is not linked in the restriction")
    for u in D.non_root():
        for S in brute_separations(D, u).all:
            if linked_to(D2, S, u) is None:
                return _fail(inst, f"{sorted(S)} lost its linkage to {u}", u=u, S=S)
    return LemmaResult(inst.lemma, True)


_CHECKERS = {
    "no_collapse": _check_no_collapse,
    "bubble_unite": _check_bubble_unite,
    "pym_shape": _check_pym_shape,
    "aug_walk": _check_aug_walk,
    "g_quasi_add_one": _check_g_quasi_add_one,
    "linked_preserved": _check_linked_preserved,
    "quasi_preserved": _check_quasi_preserved,
    "largest_emsep": _check_largest_emsep,
}


def lemma_check(instance: LemmaInstance) -> LemmaResult:
    """Verify the lemma's conclusion on ``instance`` by exhaustive search."""
    try:
        check = _CHECKERS[instance.lemma]
    except KeyError:
        raise ValueError(f"unknown lemma id {instance.lemma!r}") from None
    return check(instance)


# -- instance generation ---------------------------------------------------------


def _gen_no_collapse(n: int, rng: random.Random) -> LemmaInstance | None:
    from .flame import lovasz_reduce

    D = gen_random(n, rng.choice([0.3, 0.5]), rng.randrange(2**31))
    if D.num_vertices < 2:
        return None
    # reduced inputs are fixed points, raw ones exercise real deletions
    L = lovasz_reduce(D) if rng.random() < 0.5 else D
    return LemmaInstance("no_collapse", L, {"v": rng.choice(L.non_root())})


def _gen_bubble_unite(n: int, rng: random.Random) -> LemmaInstance | None:
    D = gen_random(n, rng.choice([0.3, 0.5]), rng.randrange(2**31))
    if D.num_vertices < 2:
        return None
    v0 = rng.choice(D.non_root())
    chain = [(rng.choice(sorted(brute_regions(D, v0).bubbles, key=sorted)), v0)]
    union = chain[0][0]
    for _ in range(rng.randint(1, 3)):
        inner = sorted(interior(D, union)) + [v0]
        v = rng.choice(inner)
        B = rng.choice(sorted(brute_regions(D, v).bubbles, key=sorted))
        chain.append((B, v))
        union |= B
    return LemmaInstance("bubble_unite", D, {"chain": [(sorted(B), v) for B, v in chain]})


def _gen_pym_shape(n: int, rng: random.Random) -> LemmaInstance | None:
    D = gen_random(n, rng.choice([0.3, 0.5]), rng.randrange(2**31))
    rest = list(D.non_root())
    if len(rest) < 3:
        return None
    rng.shuffle(rest)
    cut = rng.randint(1, len(rest) - 1)
    X = frozenset(rest[:cut] + ([D.root] if rng.random() < 0.5 else []))
    Y = frozenset(rest[cut:])
    P = _random_disjoint_xy(D, X, Y, rng, rng.randint(1, 4))
    Q = _random_disjoint_xy(D, X, Y, rng, rng.randint(1, 4))
    if not P or not Q:
        return None
    return LemmaInstance("pym_shape", D, {"X": sorted(X), "Y": sorted(Y), "P": P, "Q": Q})


def _gen_aug_walk(n: int, rng: random.Random) -> LemmaInstance | None:
    D = gen_random(n, rng.choice([0.3, 0.5]), rng.randrange(2**31))
    rest = list(D.vertices)
    if len(rest) < 3:
        return None
    v = rng.choice(rest)
    others = [u for u in rest if u != v]
    X = frozenset(rng.sample(others, rng.randint(1, len(others))))
    infan: list[Path] = []
    used: set[str] = {v}
    for x in sorted(X):
        if rng.random() < 0.2:
            continue
        p = _random_path(D, x, frozenset([v]), (used - {v}) | (X - {x}), rng)
        if p is not None and not set(p[:-1]) & used:
            infan.append(p)
            used.update(p[:-1])
    return LemmaInstance("aug_walk", D, {"v": v, "X": sorted(X), "infan": infan})


def _gen_g_quasi_add_one(n: int, rng: random.Random) -> LemmaInstance | None:
    D = gen_random(n, rng.choice([0.3, 0.5, 0.7]), rng.randrange(2**31))
    r = D.root
    options = []
    for w in D.non_root():
        if realizes(D, w, D.in_edges(w)) is None:
            continue
        for u, v in D.edges:
            if u == r or v == w:
                continue
            if realizes(D.delete_edges([(u, v)]), w, D.in_edges(w)) is None:
                options.append((w, (u, v)))
    if not options:
        return None
    w, e = rng.choice(options)
    return LemmaInstance("g_quasi_add_one", D, {"w": w, "edge": e})


def _gen_linked_preserved(n: int, rng: random.Random) -> LemmaInstance | None:
    D = gen_random(n, rng.choice([0.3, 0.5]), rng.randrange(2**31))
    rest = list(D.non_root())
    if not rest:
        return None
    U = rng.sample(rest, rng.randint(1, min(4, len(rest))))
    if linked_from(D, U) is None:
        return None
    L = random_large_subgraph(D, rng)
    return LemmaInstance("linked_preserved", D, {"U": sorted(U), "large": L})


def _gen_quasi_preserved(n: int, rng: random.Random) -> LemmaInstance | None:
    # finite flames have in-degree equal to connectivity, so reduce a random host
    from .flame import lovasz_reduce

    D = lovasz_reduce(gen_random(n, rng.choice([0.3, 0.5]), rng.randrange(2**31)))
    if not brute_is_flame(D):
        return None
    return LemmaInstance("quasi_preserved", D, {"large": random_large_subgraph(D, rng)})


def _gen_largest_emsep(n: int, rng: random.Random) -> LemmaInstance | None:
    D = gen_random(n, rng.choice([0.3, 0.5]), rng.randrange(2**31))
    if D.num_vertices < 2:
        return None
    v = rng.choice(D.non_root())
    T = brute_separations(D, v).maximum
    ins = list(D.in_edges(v))
    for _ in range(10):
        I = [e for e in ins if rng.random() < 0.5]
        if linked_to(restrict_in(D, v, I), T, v) is not None:
            return LemmaInstance("largest_emsep", D, {"v": v, "I": sorted(I)})
    return None


_GENERATORS = {
    "no_collapse": _gen_no_collapse,
    "bubble_unite": _gen_bubble_unite,
    "pym_shape": _gen_pym_shape,
    "aug_walk": _gen_aug_walk,
    "g_quasi_add_one": _gen_g_quasi_add_one,
    "linked_preserved": _gen_linked_preserved,
    "quasi_preserved": _gen_quasi_preserved,
    "largest_emsep": _gen_largest_emsep,
}


def random_instance(lemma: str, n: int, seed: int, attempts: int = 200) -> LemmaInstance:
    """A seeded instance of ``lemma`` on at most ``n`` vertices meeting its hypotheses."""
    if lemma not in _GENERATORS:
        raise ValueError(f"unknown lemma id {lemma!r}")
    rng = random.Random(f"{lemma}:{n}:{seed}")
    for _ in range(attempts):
        inst = _GENERATORS[lemma](rng.randint(max(2, (n + 1) // 2), n), rng)
        if inst is not None:
            return inst
    raise HypothesisViolated(f"no {lemma} instance found in {attempts} attempts")
