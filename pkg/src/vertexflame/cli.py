"""Command-line entry point."""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from pathlib import Path
from typing import Sequence

from . import io
from .bubbles import largest_bubble, smallest_anti_bubble
from .exceptions import FlameError, ParseError
from .flame import certify, lovasz_reduce, omega_construct, verify_certificate
from .menger import extreme_separations, kappa_vector
from .oracle import LEMMAS, gen_random, lemma_check, random_instance

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _fmt(vs) -> str:
    return "{" + ",".join(sorted(vs)) + "}"


def _read(path: str, fmt: str | None):
    data = Path(path).read_bytes()
    return io.parse(data, fmt or io.guess_format(path))


def _resolve_order(text: str | None, D) -> list[str] | None:
    if text is None:
        return None
    if text.startswith("seed:"):
        order = list(D.non_root())
        random.Random(int(text[5:])).shuffle(order)
        return order
    return [v for v in text.split(",") if v]


def cmd_flame_build(args) -> int:
    t0 = time.perf_counter()
    D = _read(args.input, args.format)
    timing = {"parse": time.perf_counter() - t0}

    t = time.perf_counter()
    F = lovasz_reduce(D)
    timing["reduce"] = time.perf_counter() - t
    t = time.perf_counter()
    L, _ = omega_construct(F, _resolve_order(args.order, D))
    timing["construct"] = time.perf_counter() - t
    t = time.perf_counter()
    cert = certify(D, L)
    verdict = verify_certificate(cert)
    timing["certify"] = time.perf_counter() - t

    kappa = {v: len(e.paths) + e.rv for v, e in cert.entries.items()}
    report = io.RunReport(
        n=D.num_vertices,
        m=D.num_edges,
        kappa=kappa,
        edges_kept=L.num_edges,
        edges_deleted=D.num_edges - L.num_edges,
        sum_kappa=sum(kappa.values()),
        certificate={v: verdict.verdicts[v].ok for v in verdict.verdicts},
        timing=timing,
    )
    if args.emit_cert:
        Path(args.emit_cert).write_bytes(io.export(cert, "json"))
    if args.emit_dot:
        Path(args.emit_dot).write_bytes(io.export(cert, "dot"))
    sys.stdout.write(report.to_json().decode() + "\n")
    return EXIT_OK if verdict.ok else EXIT_FAIL


def cmd_flame_verify(args) -> int:
    D = _read(args.input, args.format)
    cert = io.load_certificate(Path(args.cert).read_bytes(), D)
    report = verify_certificate(cert)
    for v, verdict in sorted(report.verdicts.items()):
        if verdict.ok:
            print(f"{v}: ok")
        else:
            reason, evidence = verdict.failures[0]
            print(f"{v}: FAIL {reason} {evidence}")
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_analyze_seps(args) -> int:
    D = _read(args.input, args.format)
    S, T = extreme_separations(D, args.vertex)
    print(f"kappa={kappa_vector(D)[args.vertex]}")
    print(f"S={_fmt(S.vertices)}")
    print(f"T={_fmt(T.vertices)}")
    return EXIT_OK


def cmd_analyze_bubbles(args) -> int:
    D = _read(args.input, args.format)
    print(f"B={_fmt(largest_bubble(D, args.vertex).vertices)}")
    print(f"A={_fmt(smallest_anti_bubble(D, args.vertex).vertices)}")
    return EXIT_OK


def cmd_gen_random(args) -> int:
    D = gen_random(args.n, args.p, args.seed)
    sys.stdout.write(io.serialize(D, args.format or "json").decode())
    if (args.format or "json") == "json":
        sys.stdout.write("\n")
    return EXIT_OK


def cmd_oracle_check(args) -> int:
    lemmas = LEMMAS if args.lemma == "all" else (args.lemma,)
    failures = 0
    for lemma in lemmas:
        passed = 0
        for seed in range(args.seeds):
            result = lemma_check(random_instance(lemma, args.n, seed))
            if result.passed:
                passed += 1
            else:
                failures += 1
                print(json.dumps(result.counterexample), file=sys.stderr)
        print(f"{lemma}: {passed}/{args.seeds} passed")
    return EXIT_OK if failures == 0 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vertexflame", description=__doc__)
    parser.add_argument("--format", choices=io.FORMATS, help="input/output format (default: by extension)")
    top = parser.add_subparsers(dest="group", required=True)

    flame = top.add_parser("flame", help="build or verify large flames").add_subparsers(
        dest="action", required=True
    )
    build = flame.add_parser("build", help="reduce, construct and certify")
    build.add_argument("input")
    build.add_argument("--order", help="comma-separated vertex order or seed:N for a shuffle")
    build.add_argument("--emit-cert", metavar="PATH")
    build.add_argument("--emit-dot", metavar="PATH")
    build.set_defaults(func=cmd_flame_build)
    verify = flame.add_parser("verify", help="check a certificate against a digraph")
    verify.add_argument("input")
    verify.add_argument("cert")
    verify.set_defaults(func=cmd_flame_verify)

    analyze = top.add_parser("analyze", help="inspect one vertex").add_subparsers(
        dest="action", required=True
    )
    seps = analyze.add_parser("seps", help="extreme separations")
    seps.add_argument("input")
    seps.add_argument("vertex")
    seps.set_defaults(func=cmd_analyze_seps)
    bub = analyze.add_parser("bubbles", help="largest bubble and smallest anti-bubble")
    bub.add_argument("input")
    bub.add_argument("vertex")
    bub.set_defaults(func=cmd_analyze_bubbles)

    gen = top.add_parser("gen", help="instance generators").add_subparsers(
        dest="action", required=True
    )
    rnd = gen.add_parser("random", help="seeded random rooted digraph")
    rnd.add_argument("--n", type=int, required=True)
    rnd.add_argument("--p", type=float, required=True)
    rnd.add_argument("--seed", type=int, default=0)
    rnd.set_defaults(func=cmd_gen_random)

    oracle = top.add_parser("oracle", help="brute-force lemma checks").add_subparsers(
        dest="action", required=True
    )
    check = oracle.add_parser("check")
    check.add_argument("--lemma", choices=LEMMAS + ("all",), required=True)
    check.add_argument("--n", type=int, default=7)
    check.add_argument("--seeds", type=int, default=10)
    check.set_defaults(func=cmd_oracle_check)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError, FlameError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
