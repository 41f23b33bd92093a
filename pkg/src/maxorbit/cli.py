"""Command-line front end: a thin client of the HTTP service.

By default requests are served in process through the ASGI app, so no server
needs to be running; ``--server URL`` switches to a live instance.  Output is
either human text or the service's JSON, and exit codes follow the usual
convention: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

import httpx

from .oracle import audit_summary_text, verify_report_text


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maxorbit",
        description="Maximal Jordan types of commuting nilpotent matrices.",
    )
    parser.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    parser.add_argument(
        "--server",
        metavar="URL",
        help="send requests to a running service instead of computing in process",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def partition_cmd(name, help_text, runs_flag=False):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("partition", help='partition, e.g. "5,4,3,3,2,1" or "5 4 3^2"')
        if runs_flag:
            sp.add_argument(
                "--runs", action="store_true", help="print partitions in exponent form"
            )
        return sp

    partition_cmd("q", "maximal commuting Jordan type Q(B)", runs_flag=True)
    partition_cmd("omega", "generic nilpotency index (first part of Q)")
    partition_cmd("hat", "one reduction step and its window", runs_flag=True)
    partition_cmd("chain", "full reduction chain down to the empty partition", runs_flag=True)
    partition_cmd("graph", "leveled basis graph")
    partition_cmd("dims", "free-parameter counts of the structured subalgebras")

    sp = sub.add_parser("dominance", help="compare two partitions of equal weight")
    sp.add_argument("a")
    sp.add_argument("b")

    sp = sub.add_parser("verify", help="sampling oracle for one partition")
    sp.add_argument("partition")
    sp.add_argument("--prime", type=int, default=10007)
    sp.add_argument("--samples", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("audit", help="structural invariant sweep up to a weight")
    sp.add_argument("n_max", type=int)
    sp.add_argument(
        "--sample-upto",
        type=int,
        default=0,
        metavar="M",
        help="also run the sampling oracle for partitions of weight <= M",
    )
    sp.add_argument("--prime", type=int, default=10007)
    sp.add_argument("--samples", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    return parser


def _client(server: str | None) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server, timeout=600.0)
    import warnings

    with warnings.catch_warnings():
        # some starlette versions warn about their httpx backing at import time
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from .service import app

    return TestClient(app)


def _fmt(parts: list[int], runs: bool = False) -> str:
    if not runs:
        return ",".join(str(x) for x in parts)
    from .partitions import Partition, format_partition

    return format_partition(Partition(parts), exponents=True)


def _render_text(command: str, data: dict, args) -> str:
    runs = bool(getattr(args, "runs", False))
    if command == "q":
        return _fmt(data["result"], runs)
    if command == "omega":
        return str(data["omega1"])
    if command == "hat":
        return "\n".join(
            [
                "hat = " + _fmt(data["hat"], runs),
                f"i_tilde = {data['i_tilde']}",
                f"s = {data['s']}",
                f"cardinality = {data['cardinality']}",
            ]
        )
    if command == "chain":
        lines = []
        for k, st in enumerate(data["steps"], start=1):
            lines.append(
                f"step {k}: B = {_fmt(st['partition'], runs)}  "
                f"omega1 = {st['omega1']}  (i_tilde={st['i_tilde']}, s={st['s']})"
            )
        lines.append("Q = " + _fmt(data["result"], runs))
        return "\n".join(lines)
    if command == "graph":
        return data["table"]
    if command == "dims":
        return "\n".join(f"{name} = {count}" for name, count in data["counts"].items())
    if command == "dominance":
        return data["ordering"]
    if command == "verify":
        return verify_report_text(data)
    if command == "audit":
        return audit_summary_text(data)
    raise AssertionError(command)


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)

    if args.command == "dominance":
        path, payload = "/dominance", {"a": args.a, "b": args.b}
    elif args.command == "verify":
        path = "/verify"
        payload = {
            "partition": args.partition,
            "prime": args.prime,
            "samples": args.samples,
            "seed": args.seed,
        }
    elif args.command == "audit":
        path = "/audit"
        payload = {
            "n_max": args.n_max,
            "sample_upto": args.sample_upto,
            "prime": args.prime,
            "samples": args.samples,
            "seed": args.seed,
        }
    else:
        path, payload = f"/{args.command}", {"partition": args.partition}

    try:
        with _client(args.server) as client:
            resp = client.post(path, json=payload)
    except httpx.HTTPError as e:
        print(f"error: cannot reach service: {e}", file=sys.stderr)
        return 2
    if resp.status_code >= 400:
        try:
            detail = resp.json().get("detail")
        except ValueError:
            detail = resp.text
        print(f"error: {detail}", file=sys.stderr)
        return 2

    data = resp.json()
    if args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        print(_render_text(args.command, data, args))

    if args.command == "verify":
        return 0 if data["verdict"] == "Confirmed" else 1
    if args.command == "audit":
        return 0 if data["total_failures"] == 0 else 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
