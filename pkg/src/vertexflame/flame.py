"""Vertex-flames: membership tests, large-flame constructors and certificates."""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .bubbles import largest_bubble
from .digraph import Edge, Path, PathSystem, RootedDigraph, restrict_in
from .exceptions import (
    EdgeNotIngoing,
    InvariantError,
    LedgerNotInG,
    NotAFlame,
    NotLarge,
    NotSpanning,
    PreconditionViolated,
)
from .linkage import cover_extension
from .menger import (
    MengerDeficiency,
    extreme_separations,
    kappa,
    kappa_vector,
    max_system,
    realize_last_edges,
    separates,
)


def g_membership(D: RootedDigraph, v: str, I: Iterable[Edge]) -> PathSystem | MengerDeficiency:
    """A system realising ``I`` as its exact set of last edges, or a deficiency."""
    I = frozenset(I)
    stray = I - set(D.in_edges(v))
    if stray:
        raise EdgeNotIngoing(f"not in-edges of {v!r}: {sorted(stray)}")
    return realize_last_edges(D, v, I)


@dataclass(frozen=True)
class VertexFlameStatus:
    vertex: str
    flame: bool
    witness: PathSystem | None = None
    deficiency: MengerDeficiency | None = None


@dataclass(frozen=True)
class FlameReport:
    statuses: Mapping[str, VertexFlameStatus]

    @property
    def is_flame(self) -> bool:
        return all(s.flame for s in self.statuses.values())

    @property
    def is_quasi_flame(self) -> bool:
        # finite in-degrees: every finite subset condition reduces to the full set
        return self.is_flame

    def failing(self) -> list[str]:
        return [v for v, s in self.statuses.items() if not s.flame]


def flame_check(D: RootedDigraph) -> FlameReport:
    statuses = {}
    for v in D.non_root():
        found = realize_last_edges(D, v, D.in_edges(v))
        if isinstance(found, MengerDeficiency):
            statuses[v] = VertexFlameStatus(v, False, deficiency=found)
        else:
            statuses[v] = VertexFlameStatus(v, True, witness=found)
    return FlameReport(statuses)


def is_flame(D: RootedDigraph) -> bool:
    return flame_check(D).is_flame


@dataclass(frozen=True)
class LargenessReport:
    large: bool
    root_edges_kept: bool
    kappa_base: Mapping[str, int]
    kappa_sub: Mapping[str, int]
    bubble_criterion: bool
    offending_edges: tuple[Edge, ...] = ()

    def deficient(self) -> list[str]:
        return [v for v, k in self.kappa_base.items() if self.kappa_sub[v] != k]


def _check_spanning(D: RootedDigraph, L: RootedDigraph) -> None:
    if L.root != D.root or L.vertices != D.vertices:
        raise NotSpanning("vertex sets or roots differ")
    if not L.edge_set <= D.edge_set:
        extra = sorted(L.edge_set - D.edge_set)
        raise NotSpanning(f"edges outside the host digraph: {extra[:5]}")


def largeness_check(D: RootedDigraph, L: RootedDigraph) -> LargenessReport:
    """Compare local connectivities and cross-check with the bubble criterion."""
    _check_spanning(D, L)
    r = D.root
    root_kept = set(D.out_edges(r)) <= L.edge_set
    kD = kappa_vector(D)
    kL = kappa_vector(L)
    verdict = root_kept and kD == kL
    deleted = sorted(D.edge_set - L.edge_set)
    bubbles: dict[str, frozenset[str]] = {}
    offending = []
    for u, v in deleted:
        if v not in bubbles:
            bubbles[v] = largest_bubble(L, v).vertices
        if u not in bubbles[v]:
            offending.append((u, v))
    criterion = not offending
    if criterion != verdict:
        raise InvariantError("connectivity and bubble criteria disagree on largeness")
    return LargenessReport(verdict, root_kept, kD, kL, criterion, tuple(offending))


def is_large(D: RootedDigraph, L: RootedDigraph) -> bool:
    return largeness_check(D, L).large


def _order(D: RootedDigraph, order: Sequence[str] | None) -> list[str]:
    rest = list(D.non_root())
    if order is None:
        return rest
    order = list(order)
    if sorted(order) != rest:
        raise PreconditionViolated("the order must list every non-root vertex exactly once")
    return order


def lovasz_reduce(
    D: RootedDigraph, strategy: str = "sweep", order: Sequence[str] | None = None
) -> RootedDigraph:
    """A spanning subdigraph where in-degree and both connectivities agree.

    ``sweep`` visits every vertex once and keeps only the last edges of a
    maximum system towards it, which never lowers any connectivity.
    ``greedy`` deletes one redundant in-edge at a time, re-checking every
    connectivity; it is quadratic in the edge count and meant for small inputs.
    """
    if strategy == "sweep":
        L = D
        for v in _order(D, order):
            L = restrict_in(L, v, max_system(L, v).last_edges())
        return L
    if strategy == "greedy":
        return _greedy_reduce(D, _order(D, order))
    raise ValueError(f"unknown strategy {strategy!r}")


def _greedy_reduce(D: RootedDigraph, order: list[str]) -> RootedDigraph:
    target = kappa_vector(D)
    L = D
    progress = True
    while progress:
        progress = False
        for v in order:
            if L.indegree(v) <= kappa(L, v):
                continue
            for e in L.in_edges(v):
                if e[0] == L.root:
                    continue
                trial = L.delete_edges([e])
                if all(kappa(trial, u) == k for u, k in target.items()):
                    L = trial
                    progress = True
                    break
            if progress:
                break
    return L


def no_collapse_step(L: RootedDigraph, v: str) -> tuple[RootedDigraph, PathSystem]:
    """Thin the in-edges of ``v`` to the last edges of a system orthogonal to
    the separation nearest the root; all nearest-root separations survive."""
    if v == L.root or v not in L:
        raise PreconditionViolated(f"{v!r} is not a non-root vertex")
    before = {u: extreme_separations(L, u)[0].vertices for u in L.non_root()}
    S = before[v]
    Q = cover_extension(L, v, S, ())
    L2 = restrict_in(L, v, Q.last_edges())
    if kappa_vector(L2) != kappa_vector(L):
        raise InvariantError(f"thinning {v!r} lowered a connectivity")
    for u in L.non_root():
        if extreme_separations(L2, u)[0].vertices != before[u]:
            raise InvariantError(f"the nearest-root separation of {u!r} moved")
    return L2, Q


@dataclass(frozen=True)
class CertificateEntry:
    vertex: str
    separator: frozenset[str]
    paths: PathSystem
    rv: bool


@dataclass(frozen=True)
class FlameCertificate:
    """Per-vertex separators and covering path systems for a flame ``L`` of ``D``."""

    base: RootedDigraph
    flame: RootedDigraph
    entries: Mapping[str, CertificateEntry]

    def __iter__(self):
        return iter(self.entries[v] for v in sorted(self.entries))


@dataclass(frozen=True)
class OmegaStep:
    index: int
    vertex: str
    separator: frozenset[str]
    system: PathSystem
    protected: frozenset[Edge]


@dataclass
class OmegaRecursionState:
    """Bookkeeping of the incremental construction."""

    steps: list[OmegaStep] = field(default_factory=list)
    ledger: dict[str, set[Edge]] = field(default_factory=lambda: defaultdict(set))
    digraph: RootedDigraph | None = None

    @property
    def n(self) -> int:
        return len(self.steps)

    def certificate(self, base: RootedDigraph) -> FlameCertificate:
        L = self.digraph
        entries = {
            s.vertex: CertificateEntry(s.vertex, s.separator, s.system, L.has_edge(L.root, s.vertex))
            for s in self.steps
        }
        return FlameCertificate(base, L, entries)


def omega_construct(
    D: RootedDigraph, order: Sequence[str] | None = None, *, require_flame: bool = True
) -> tuple[RootedDigraph, OmegaRecursionState]:
    """Fix one witness system per vertex in ``order`` without breaking earlier ones.

    At each step the in-edges that earlier witnesses use at the current
    vertex are protected: the new witness must end in all of them.
    """
    if require_flame and not flame_check(D).is_flame:
        raise NotAFlame("the input is not a vertex-flame")
    state = OmegaRecursionState()
    L = D
    for n, v in enumerate(_order(D, order)):
        F = frozenset(state.ledger.get(v, ()))
        if not F <= set(L.in_edges(v)):
            raise InvariantError(f"protected edges at {v!r} were deleted")
        S = extreme_separations(L, v)[0]
        witness = realize_last_edges(L, v, F)
        if isinstance(witness, MengerDeficiency):
            raise LedgerNotInG(f"protected edges at {v!r} cannot be realised")
        Q = cover_extension(L, v, S, F, witness=witness)
        if not F - {(L.root, v)} <= Q.last_edges():
            raise InvariantError("a protected edge was dropped")
        L = restrict_in(L, v, Q.last_edges())
        for a, b in Q.edges():
            if b != v:
                state.ledger[b].add((a, b))
        state.steps.append(OmegaStep(n, v, S.vertices, Q, F))
    state.digraph = L
    for step in state.steps:
        if not step.system.lies_in(L):
            raise InvariantError(f"the witness of {step.vertex!r} was broken")
    return L, state


def certify(D: RootedDigraph, L: RootedDigraph) -> FlameCertificate:
    report = largeness_check(D, L)
    if not report.large:
        raise NotLarge(f"connectivity drops at {report.deficient()[:5]}")
    flames = flame_check(L)
    if not flames.is_flame:
        raise NotAFlame(f"flame property fails at {flames.failing()[:5]}")
    r = L.root
    entries = {}
    for v in L.non_root():
        S = extreme_separations(L, v)[0].vertices
        P = cover_extension(L, v, S, L.in_edges(v), witness=flames.statuses[v].witness)
        if not separates(D, v, S):
            raise InvariantError(f"the separator of {v!r} leaks in the host digraph")
        entries[v] = CertificateEntry(v, S, P, L.has_edge(r, v))
    return FlameCertificate(D, L, entries)


@dataclass(frozen=True)
class VertexVerdict:
    vertex: str
    failures: tuple[tuple[str, object], ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures

    def reasons(self) -> list[str]:
        return [reason for reason, _ in self.failures]


@dataclass(frozen=True)
class VerificationReport:
    verdicts: Mapping[str, VertexVerdict]

    @property
    def ok(self) -> bool:
        return all(v.ok for v in self.verdicts.values())

    def failing(self) -> list[VertexVerdict]:
        return [v for v in self.verdicts.values() if not v.ok]


def _find_uncut(D: RootedDigraph, v: str, S: frozenset[str]) -> Path | None:
    r = D.root
    if v in S:
        return None
    parent: dict[str, str | None] = {r: None}
    queue = deque([r])
    while queue:
        u = queue.popleft()
        for w in D.out_neighbors(u):
            if w in parent or w in S or (u == r and w == v):
                continue
            parent[w] = u
            if w == v:
                out = [v]
                while parent[out[-1]] is not None:
                    out.append(parent[out[-1]])
                return tuple(reversed(out))
            queue.append(w)
    return None


def _verify_entry(D: RootedDigraph, L: RootedDigraph, v: str, entry: CertificateEntry | None):
    r = L.root
    if entry is None:
        return (("missing entry", None),)
    failures: list[tuple[str, object]] = []
    paths = list(entry.paths)
    for p in paths:
        ok = (
            len(p) >= 2
            and p[0] == r
            and p[-1] == v
            and len(set(p)) == len(p)
            and all(L.has_edge(a, b) for a, b in zip(p, p[1:]))
        )
        if not ok:
            failures.append(("path validity", p))
        if p == (r, v):
            failures.append(("root edge listed as a path", p))
    inner: dict[str, Path] = {}
    for p in paths:
        for w in p[1:-1]:
            if w in inner:
                failures.append(("internal disjointness", (inner[w], p)))
            inner[w] = p
    last = {(p[-2], p[-1]) for p in paths if len(p) >= 2}
    if last != set(L.in_edges(v)) - {(r, v)}:
        failures.append(("E+ coverage", sorted(set(L.in_edges(v)) - {(r, v)} - last)))
    if entry.rv != L.has_edge(r, v):
        failures.append(("root edge flag", entry.rv))
    if D.has_edge(r, v) and not L.has_edge(r, v):
        failures.append(("root edge dropped", (r, v)))
    S = frozenset(entry.separator)
    hits = []
    for p in paths:
        h = S.intersection(p[1:-1])
        if len(h) != 1:
            failures.append(("orthogonality", p))
        hits.extend(h)
    if len(hits) != len(S) or set(hits) != S:
        failures.append(("orthogonality bijection", sorted(S)))
    leak = _find_uncut(D, v, S)
    if leak is not None:
        failures.append(("separation", leak))
    return tuple(failures)


def verify_certificate(cert: FlameCertificate) -> VerificationReport:
    """Re-check every certificate claim from scratch against both digraphs."""
    D, L = cert.base, cert.flame
    verdicts = {}
    structural = L.root == D.root and L.vertices == D.vertices and L.edge_set <= D.edge_set
    for v in D.non_root():
        failures = _verify_entry(D, L, v, cert.entries.get(v))
        if not structural:
            failures = (("not a spanning subdigraph", None),) + failures
        verdicts[v] = VertexVerdict(v, failures)
    return VerificationReport(verdicts)
