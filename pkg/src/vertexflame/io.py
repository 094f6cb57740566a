"""Reading and writing digraphs, certificates and run reports."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any, Mapping

from .digraph import INTERNALLY_DISJOINT, PathSystem, RootedDigraph, build_digraph
from .exceptions import ParseError
from .flame import CertificateEntry, FlameCertificate

FORMATS = ("json", "edgelist")

PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
    "#17becf", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22",
)


def _dumps(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def digraph_to_obj(D: RootedDigraph) -> dict:
    return {"root": D.root, "vertices": list(D.vertices), "edges": [list(e) for e in D.edges]}


def digraph_from_obj(obj: Any) -> RootedDigraph:
    if not isinstance(obj, dict):
        raise ParseError("expected a JSON object")
    missing = {"root", "vertices", "edges"} - obj.keys()
    if missing:
        raise ParseError(f"missing keys: {sorted(missing)}")
    edges = obj["edges"]
    if not isinstance(edges, list) or not all(isinstance(e, list) and len(e) == 2 for e in edges):
        raise ParseError("edges must be a list of [tail, head] pairs")
    if not isinstance(obj["vertices"], list):
        raise ParseError("vertices must be a list")
    return build_digraph(obj["vertices"], [tuple(e) for e in edges], obj["root"])


def _decode(data: bytes | str) -> str:
    if isinstance(data, bytes):
        try:
            return data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError("input is not UTF-8", offset=exc.start) from None
    return data


def _load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, offset=exc.colno) from None


def parse_edgelist(text: str) -> RootedDigraph:
    """``root <id>`` on the first content line, then ``u v`` edges.

    A line holding a single id declares an isolated vertex; blank lines
    and ``#`` comments are ignored.
    """
    root = None
    vertices: list[str] = []
    edges: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if root is None:
            if len(parts) != 2 or parts[0] != "root":
                raise ParseError("first line must be 'root <id>'", line=lineno, offset=1)
            root = parts[1]
            vertices.append(root)
            continue
        if len(parts) == 1:
            vertices.append(parts[0])
        elif len(parts) == 2:
            edges.append((parts[0], parts[1]))
            vertices.extend(parts)
        else:
            col = raw.index(parts[2]) + 1
            raise ParseError("expected 'u v' or a single vertex", line=lineno, offset=col)
    if root is None:
        raise ParseError("empty input", line=1, offset=1)
    return build_digraph(dict.fromkeys(vertices), edges, root)


def parse(data: bytes | str, format: str = "json") -> RootedDigraph:
    text = _decode(data)
    if format == "json":
        return digraph_from_obj(_load_json(text))
    if format == "edgelist":
        return parse_edgelist(text)
    raise ValueError(f"unknown format {format!r}")


def serialize(D: RootedDigraph, format: str = "json") -> bytes:
    if format == "json":
        return _dumps(digraph_to_obj(D)).encode()
    if format == "edgelist":
        lines = [f"root {D.root}"]
        touched = {w for e in D.edges for w in e}
        lines += [v for v in D.non_root() if v not in touched]
        lines += [f"{u} {v}" for u, v in D.edges]
        return ("\n".join(lines) + "\n").encode()
    raise ValueError(f"unknown format {format!r}")


def guess_format(name: str) -> str:
    return "json" if name.endswith(".json") else "edgelist"


# -- certificates ----------------------------------------------------------------


def entry_to_obj(entry: CertificateEntry) -> dict:
    return {
        "vertex": entry.vertex,
        "separator": sorted(entry.separator),
        "rv": entry.rv,
        "paths": [list(p) for p in entry.paths],
    }


def certificate_to_obj(cert: FlameCertificate) -> dict:
    return {
        "flame": digraph_to_obj(cert.flame),
        "entries": [entry_to_obj(e) for e in cert],
    }


def certificate_from_obj(obj: Any, base: RootedDigraph) -> FlameCertificate:
    try:
        flame = digraph_from_obj(obj["flame"])
        entries = {}
        for e in obj["entries"]:
            paths = PathSystem(tuple(tuple(p) for p in e["paths"]), INTERNALLY_DISJOINT)
            entries[e["vertex"]] = CertificateEntry(
                e["vertex"], frozenset(e["separator"]), paths, bool(e["rv"])
            )
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed certificate: {exc}") from None
    return FlameCertificate(base, flame, entries)


def export_certificate(cert: FlameCertificate) -> bytes:
    return _dumps(certificate_to_obj(cert)).encode()


def load_certificate(data: bytes | str, base: RootedDigraph) -> FlameCertificate:
    return certificate_from_obj(_load_json(_decode(data)), base)


# -- reports ---------------------------------------------------------------------


@dataclass
class RunReport:
    n: int
    m: int
    kappa: Mapping[str, int]
    edges_kept: int
    edges_deleted: int
    sum_kappa: int
    certificate: Mapping[str, bool] = field(default_factory=dict)
    timing: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self):
        if self.edges_kept + self.edges_deleted != self.m:
            raise ValueError("kept and deleted edges must add up to the edge count")

    def to_json(self) -> bytes:
        obj = asdict(self)
        obj["kappa"] = dict(sorted(self.kappa.items()))
        obj["certificate"] = dict(sorted(self.certificate.items()))
        obj["timing"] = {k: round(t, 6) for k, t in self.timing.items()}
        return json.dumps(obj, indent=2).encode()


# -- DOT -------------------------------------------------------------------------


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(
    D: RootedDigraph,
    *,
    kept: RootedDigraph | None = None,
    certificate: FlameCertificate | None = None,
) -> bytes:
    """Graphviz source; edges missing from ``kept`` are dashed and certificate
    paths take one colour per target vertex."""
    colour: dict[tuple[str, str], tuple[str, str]] = {}
    if certificate is not None:
        for i, entry in enumerate(certificate):
            c = PALETTE[i % len(PALETTE)]
            for p in entry.paths:
                for e in zip(p, p[1:]):
                    colour.setdefault(e, (c, entry.vertex))
    lines = ["digraph G {", f"  {_q(D.root)} [shape=doublecircle];"]
    lines += [f"  {_q(v)};" for v in D.non_root()]
    for u, v in D.edges:
        attrs = []
        if kept is not None and not kept.has_edge(u, v):
            attrs.append("style=dashed")
        if (u, v) in colour:
            c, owner = colour[(u, v)]
            attrs.append(f"color={_q(c)}")
            attrs.append(f"class={_q('cert-' + owner)}")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {_q(u)} -> {_q(v)}{suffix};")
    lines.append("}")
    return ("\n".join(lines) + "\n").encode()


def export(obj: Any, format: str = "json", **kwargs: Any) -> bytes:
    """Serialise a digraph, certificate or run report."""
    if isinstance(obj, RootedDigraph):
        return to_dot(obj, **kwargs) if format == "dot" else serialize(obj, "json")
    if isinstance(obj, FlameCertificate):
        if format == "dot":
            return to_dot(obj.base, kept=obj.flame, certificate=obj)
        return export_certificate(obj)
    if isinstance(obj, RunReport):
        if format != "json":
            raise ValueError("run reports export to JSON only")
        return obj.to_json()
    raise TypeError(f"cannot export {type(obj).__name__}")
