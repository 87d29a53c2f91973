"""Command line interface.

A thin client over the report layer: by default every subcommand computes
in process, with --url the same request is POSTed to a running service and
the response relayed, so payloads and exit codes agree either way.

Exit codes: 0 success, 2 parse error, 3 domain error, 1 transport trouble.
Errors go to stderr as single-line JSON {"error": ..., "detail": ...}.
"""

from __future__ import annotations

import argparse
import json
import sys
import urllib.error
import urllib.request

from .errors import DomainError, ParseError
from .reports import (run_braid_info, run_dbc, run_pants, run_plumb, run_snf,
                      to_json)

EXIT_OK = 0
EXIT_TRANSPORT = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3


class _TransportError(RuntimeError):
    pass


def _add_output_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true",
                       help="compact single-line JSON output (default)")
    group.add_argument("--pretty", action="store_true",
                       help="indented JSON output")
    parser.add_argument("--url", metavar="URL",
                        help="send the request to a running service at URL "
                             "instead of computing in process")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bookgenus",
        description="Classify 3-manifolds given by small open book "
                    "decompositions, exactly.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "pants",
        help="classify the pants open book with boundary twists r1,r2,r3")
    p.add_argument("exponents", help='twist exponents, e.g. "2,-2,0"')
    _add_output_options(p)

    p = sub.add_parser(
        "dbc",
        help="double cover of S^3 branched over a braid closure")
    p.add_argument("word", help='braid word, e.g. "1 1 -2"')
    p.add_argument("--strands", type=int, default=None,
                   help="strand count (default: inferred from the word)")
    p.add_argument("--classify", action=argparse.BooleanOptionalAction,
                   default=None,
                   help="force or skip classification "
                        "(default: classify when strands <= 3)")
    _add_output_options(p)

    p = sub.add_parser("plumb", help="plumb pages and report genus bounds")
    p.add_argument("pages",
                   help='comma-separated page descriptors: disk, annulus, '
                        'pants, torus, or gXbY (e.g. "annulus,annulus")')
    _add_output_options(p)

    p = sub.add_parser("snf",
                       help="Smith normal form and cokernel of an integer matrix")
    p.add_argument("matrix", help='matrix as JSON rows or "1 2; 3 4"')
    _add_output_options(p)

    p = sub.add_parser("braid-info",
                       help="closure and Burau data of a braid word")
    p.add_argument("word", help='braid word, e.g. "1 2 1 2"')
    p.add_argument("--strands", type=int, default=None,
                   help="strand count (default: inferred from the word)")
    _add_output_options(p)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _request_payload(args: argparse.Namespace) -> tuple[str, dict]:
    if args.command == "pants":
        return "/pants", {"exponents": args.exponents}
    if args.command == "dbc":
        payload: dict = {"word": args.word}
        if args.strands is not None:
            payload["strands"] = args.strands
        if args.classify is not None:
            payload["classify"] = args.classify
        return "/dbc", payload
    if args.command == "plumb":
        return "/plumb", {"pages": args.pages}
    if args.command == "snf":
        return "/snf", {"matrix": args.matrix}
    payload = {"word": args.word}
    if args.strands is not None:
        payload["strands"] = args.strands
    return "/braid-info", payload


def _run_local(args: argparse.Namespace) -> dict:
    if args.command == "pants":
        return run_pants(args.exponents)
    if args.command == "dbc":
        return run_dbc(args.word, strands=args.strands, classify=args.classify)
    if args.command == "plumb":
        return run_plumb(args.pages)
    if args.command == "snf":
        return run_snf(args.matrix)
    return run_braid_info(args.word, strands=args.strands)


def _run_remote(args: argparse.Namespace) -> dict:
    path, payload = _request_payload(args)
    url = args.url.rstrip("/") + path
    request = urllib.request.Request(
        url, data=json.dumps(payload).encode(),
        headers={"Content-Type": "application/json"})
    try:
        with urllib.request.urlopen(request) as response:
            return json.loads(response.read())
    except urllib.error.HTTPError as exc:
        body = exc.read().decode(errors="replace")
        try:
            detail = json.loads(body).get("detail", body)
        except json.JSONDecodeError:
            detail = body.strip()
        if exc.code == 400:
            raise ParseError(detail) from None
        if exc.code == 422:
            raise DomainError(detail) from None
        raise _TransportError(f"HTTP {exc.code}: {detail}") from None
    except urllib.error.URLError as exc:
        raise _TransportError(f"service unreachable: {exc.reason}") from None


def _emit_error(kind: str, exc: Exception) -> None:
    line = json.dumps({"error": kind, "detail": str(exc)},
                      separators=(",", ":"))
    print(line, file=sys.stderr)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "serve":
        import uvicorn

        from .service.app import create_app

        uvicorn.run(create_app(), host=args.host, port=args.port)
        return EXIT_OK
    try:
        if args.url:
            report = _run_remote(args)
        else:
            report = _run_local(args)
    except ParseError as exc:
        _emit_error("parse", exc)
        return EXIT_PARSE
    except DomainError as exc:
        _emit_error("domain", exc)
        return EXIT_DOMAIN
    except _TransportError as exc:
        _emit_error("transport", exc)
        return EXIT_TRANSPORT
    print(to_json(report, pretty=args.pretty))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
