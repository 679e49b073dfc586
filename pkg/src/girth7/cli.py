"""Command-line front end: ``girth7 {build,certify,export,report,selftest}``.

Exit status is 0 on success, 1 when a certification claim fails and 2 for
usage errors (bad parameters, unreadable or malformed input).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import acceptance
from .constructions import CONSTRUCTIONS, build, validate_request
from .errors import CertificationFailed, Girth7Error, InvalidParams, KEqualsQUnsupported, MalformedInput
from .formats import FORMATS, export, guess_format, import_graph
from .verify import Certificate, cage_gap_report, certify, certify_graph, format_report

EXIT_OK, EXIT_CERT, EXIT_USAGE = 0, 1, 2

log = logging.getLogger("girth7")


class UsageError(Exception):
    pass


def _add_construction_args(p, required=True):
    p.add_argument("--construction", "-c", choices=sorted(CONSTRUCTIONS), required=required)
    p.add_argument("--q", type=int, help="field order")
    p.add_argument("--k", type=int, help="degree (thm-even-k only)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="girth7", description="Build and certify small regular graphs of girth 7.")
    parser.add_argument("-v", "--verbose", action="store_true")
    parser.add_argument("--threads", type=int, help="BFS workers (default: $GIRTH7_THREADS or 1)")
    parser.add_argument("--backend", choices=("numba", "numpy"), help="girth kernel")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="run a construction and write the graph")
    _add_construction_args(p)
    p.add_argument("--out", "-o", help="graph output path (stdout if omitted)")
    p.add_argument("--format", "-f", choices=FORMATS, help="default: from --out suffix, else graph6")
    p.add_argument("--certify", action="store_true", help="certify and write a certificate")
    p.add_argument("--cert", help="certificate path (default: <out>.cert.json, or stdout)")

    p = sub.add_parser("certify", help="certify a graph file")
    p.add_argument("--in", dest="inp", required=True, help="graph file ('-' for stdin)")
    p.add_argument("--format", "-f", choices=FORMATS)
    p.add_argument("--expect-degree", type=int)
    p.add_argument("--expect-girth", type=int)
    p.add_argument("--expect-order", type=int)
    p.add_argument("--cert", help="certificate path (default: stdout)")

    p = sub.add_parser("export", help="write a construction or convert a graph file")
    _add_construction_args(p, required=False)
    p.add_argument("--in", dest="inp", help="convert this graph file instead of building")
    p.add_argument("--in-format", choices=FORMATS)
    p.add_argument("--format", "-f", choices=FORMATS, required=True)
    p.add_argument("--out", "-o")

    p = sub.add_parser("report", help="compare with the Moore bound and earlier constructions")
    _add_construction_args(p, required=False)
    p.add_argument("--cert", help="read a certificate instead of building")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("selftest", help="run the acceptance table")
    p.add_argument("--only", type=int, nargs="+", metavar="N", help="criterion numbers")
    return parser


def _write(path: str | None, data: bytes):
    if path is None or path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        Path(path).write_bytes(data)


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _build(args):
    validate_request(args.construction, q=args.q, k=args.k)
    return build(args.construction, q=args.q, k=args.k)


def cmd_build(args) -> int:
    b = _build(args)
    fmt = args.format or (guess_format(args.out) if args.out else "graph6")
    _write(args.out, export(b.graph, fmt))
    for line in b.provenance:
        log.info(line)
    if not args.certify:
        return EXIT_OK
    cert_path = args.cert or (f"{args.out}.cert.json" if args.out and args.out != "-" else None)
    try:
        cert = certify(b)
    except CertificationFailed as exc:
        failed = {"construction": b.construction, "q": b.q, "k": b.k, "n": b.graph.n, "failed": exc.claim, "detail": str(exc)}
        _write(cert_path, (json.dumps(failed, indent=2) + "\n").encode())
        raise
    _write(cert_path, (cert.dumps() + "\n").encode())
    print(f"{b.construction} q={b.q}: n={cert.n} k={cert.k} girth={cert.girth}", file=sys.stderr)
    return EXIT_OK


def cmd_certify(args) -> int:
    fmt = args.format or guess_format(args.inp)
    g = import_graph(_read(args.inp), fmt)
    cert = certify_graph(g, k=args.expect_degree, expect_girth=args.expect_girth, expect_order=args.expect_order)
    _write(args.cert, (cert.dumps() + "\n").encode())
    return EXIT_OK


def cmd_export(args) -> int:
    if args.inp:
        g = import_graph(_read(args.inp), args.in_format or guess_format(args.inp))
    elif args.construction:
        g = _build(args).graph
    else:
        raise UsageError("export needs --construction or --in")
    _write(args.out, export(g, args.format))
    return EXIT_OK


def cmd_report(args) -> int:
    if args.cert:
        try:
            cert = Certificate.from_json(json.loads(_read(args.cert)))
        except (json.JSONDecodeError, KeyError) as exc:
            raise UsageError(f"{args.cert} is not a certificate: {exc}") from None
    elif args.construction:
        cert = certify(_build(args))
    else:
        raise UsageError("report needs --construction or --cert")
    rep = cage_gap_report(cert)
    print(json.dumps(rep, indent=2) if args.json else format_report(rep))
    return EXIT_OK


def cmd_selftest(args) -> int:
    outcomes = acceptance.run_all(set(args.only) if args.only else None)
    for o in outcomes:
        print(o.line())
    passed = sum(o.passed for o in outcomes)
    print(f"{passed}/{len(outcomes)} criteria passed")
    return EXIT_OK if passed == len(outcomes) else EXIT_CERT


COMMANDS = {
    "build": cmd_build,
    "certify": cmd_certify,
    "export": cmd_export,
    "report": cmd_report,
    "selftest": cmd_selftest,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    saved = {key: os.environ.get(key) for key in ("GIRTH7_THREADS", "GIRTH7_BACKEND")}
    if args.threads is not None:
        os.environ["GIRTH7_THREADS"] = str(args.threads)
    if args.backend:
        os.environ["GIRTH7_BACKEND"] = args.backend
    try:
        return COMMANDS[args.command](args)
    except CertificationFailed as exc:
        print(f"girth7: certification failed: {exc}", file=sys.stderr)
        return EXIT_CERT
    except (InvalidParams, KEqualsQUnsupported) as exc:
        print(f"girth7: invalid parameters: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MalformedInput as exc:
        print(f"girth7: malformed input: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, Girth7Error, OSError) as exc:
        print(f"girth7: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        for key, val in saved.items():
            if val is None:
                os.environ.pop(key, None)
            else:
                os.environ[key] = val


def main():
    sys.exit(run())
