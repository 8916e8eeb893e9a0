"""Command-line client for the invariants service.

Every subcommand builds a request, sends it to the service - in process
through an ASGI transport by default, or to a running instance named with
--server - and renders the JSON reply.  All computation happens on the
service side; this module only parses arguments and formats output.

Exit codes: 0 success, 2 usage or parse errors, 3 unsupported domain,
4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import asyncio
import csv
import io
import json
import os
import sys
from typing import Any

import httpx

SEED_ENV = "HOLOINV_SEED"
_FORMATS_TABULAR = ("csv", "json", "svg")

USAGE_EXIT = 2
UNSUPPORTED_EXIT = 3
INVARIANT_EXIT = 4


def _fmt(x: float) -> str:
    return f"{float(x):.12g}"


async def _asgi_request(method: str, path: str, payload: dict | None) -> tuple[int, Any]:
    from .service import create_app

    transport = httpx.ASGITransport(app=create_app())
    async with httpx.AsyncClient(
        transport=transport, base_url="http://holoinv.internal"
    ) as client:
        resp = await client.request(method, path, json=payload)
        try:
            return resp.status_code, resp.json()
        except ValueError:
            return resp.status_code, None


def _request(server: str | None, method: str, path: str, payload: dict | None) -> tuple[int, Any]:
    if server:
        with httpx.Client(base_url=server, timeout=300.0) as client:
            resp = client.request(method, path, json=payload)
            try:
                return resp.status_code, resp.json()
            except ValueError:
                return resp.status_code, None
    return asyncio.run(_asgi_request(method, path, payload))


def _exit_code(status: int, data: Any) -> int:
    if status == 200:
        return 0
    if status == 422:  # request model validation
        return USAGE_EXIT
    error = (data or {}).get("error", "") if isinstance(data, dict) else ""
    if error in ("parse", "domain"):
        return USAGE_EXIT
    if error == "unsupported":
        return UNSUPPORTED_EXIT
    if error == "invariant":
        return INVARIANT_EXIT
    return 1


def _report_error(status: int, data: Any) -> int:
    if isinstance(data, dict) and "message" in data:
        print(f"error ({data.get('error', status)}): {data['message']}", file=sys.stderr)
    elif isinstance(data, dict) and "detail" in data:
        print(f"error: {data['detail']}", file=sys.stderr)
    else:
        print(f"error: HTTP {status}", file=sys.stderr)
    return _exit_code(status, data)


def _seed(args: argparse.Namespace) -> int:
    if getattr(args, "seed", None) is not None:
        return args.seed
    raw = os.environ.get(SEED_ENV, "0")
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"{SEED_ENV} must be an integer, got {raw!r}")


def _read_constants(path: str | None) -> str | None:
    if path is None:
        return None
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        print(f"error: cannot read constants file: {exc}", file=sys.stderr)
        raise SystemExit(USAGE_EXIT)


def _write_output(content: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(content)
    else:
        sys.stdout.write(content)
        if not content.endswith("\n"):
            sys.stdout.write("\n")


def _interval_line(iv: dict) -> str:
    lo = "absent" if iv["lower"] is None else _fmt(iv["lower"])
    hi = "absent" if iv["upper"] is None else _fmt(iv["upper"])
    tag = " exact" if iv["exact"] else ""
    return f"[{lo}, {hi}]{tag}"


def cmd_eval(args: argparse.Namespace) -> int:
    payload = {
        "domain": args.domain,
        "point": args.point,
        "explain": bool(args.explain),
        "seed": _seed(args),
    }
    constants = _read_constants(args.constants)
    if constants is not None:
        payload["constants"] = constants
    status, data = _request(args.server, "POST", "/api/eval", payload)
    if status != 200:
        return _report_error(status, data)
    for note in data.get("warnings", []):
        print(f"warning: {note}", file=sys.stderr)
    if args.format == "json":
        _write_output(json.dumps(data, indent=2), args.output)
        return 0
    if args.format == "csv":
        header = "domain,point,sLower,sUpper,eLower,eUpper,mLower,mUpper"
        cells = [data["domain"], data["point"]]
        for key in ("squeezing", "fridman", "quotient"):
            iv = data[key]
            cells.append("" if iv["lower"] is None else _fmt(iv["lower"]))
            cells.append("" if iv["upper"] is None else _fmt(iv["upper"]))
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header.split(","))
        writer.writerow(cells)
        _write_output(buf.getvalue(), args.output)
        return 0
    lines = [
        f"domain: {data['domain']}",
        f"point: {data['point']}",
        f"s: {_interval_line(data['squeezing'])}",
        f"e: {_interval_line(data['fridman'])}",
        f"m: {_interval_line(data['quotient'])}",
    ]
    if data.get("explain"):
        lines.append("")
        lines.append(data["explain"])
    _write_output("\n".join(lines) + "\n", args.output)
    return 0


def _sweep_payload(args: argparse.Namespace, fmt: str) -> dict:
    return {
        "a_start": args.a_start,
        "a_stop": args.a_stop,
        "step": args.step,
        "format": fmt,
        "jobs": args.jobs,
        "seed": _seed(args),
    }


def cmd_sweep(args: argparse.Namespace) -> int:
    status, data = _request(
        args.server, "POST", "/api/sweep", _sweep_payload(args, args.format)
    )
    if status != 200:
        return _report_error(status, data)
    _write_output(data["content"], args.output)
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    status, data = _request(args.server, "POST", "/api/sweep", _sweep_payload(args, "json"))
    if status != 200:
        return _report_error(status, data)
    headers = ("A", "a", "sExact", "eLower", "mUpper")
    rows = [
        (_fmt(r["A"]), _fmt(r["a"]), _fmt(r["s_exact"]), _fmt(r["e_lower"]), _fmt(r["m_upper"]))
        for r in data["rows"]
    ]
    widths = [
        max(len(h), *(len(row[i]) for row in rows)) if rows else len(h)
        for i, h in enumerate(headers)
    ]
    lines = ["  ".join(h.rjust(w) for h, w in zip(headers, widths))]
    for row in rows:
        lines.append("  ".join(c.rjust(w) for c, w in zip(row, widths)))
    _write_output("\n".join(lines) + "\n", args.output)
    return 0


def cmd_plot(args: argparse.Namespace) -> int:
    status, data = _request(args.server, "POST", "/api/sweep", _sweep_payload(args, "svg"))
    if status != 200:
        return _report_error(status, data)
    _write_output(data["content"], args.output)
    return 0


def cmd_stability(args: argparse.Namespace) -> int:
    payload = {
        "z0": args.z0,
        "r1": args.r1,
        "floor": args.floor,
        "s_upper": args.s_upper,
        "format": args.format,
        "seed": _seed(args),
    }
    status, data = _request(args.server, "POST", "/api/stability", payload)
    if status != 200:
        return _report_error(status, data)
    verdicts = []
    if data.get("rotation"):
        verdicts.append(
            f"rotation reduction: bounds computed for |z0|, arg z0 = {_fmt(data['rotation'])} recorded"
        )
    verdicts += [
        f"s trajectory: limit {_fmt(data['s_limit'])}, converged = {data['s_converged']}",
        f"e trajectory: stable = {data['e_stable']}",
        data["annulus"]["text"],
    ]
    _write_output(data["content"], args.output)
    stream = sys.stdout if args.output else sys.stderr
    for line in verdicts:
        print(line, file=stream)
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port, log_level="info")
    return 0


def _add_common(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--seed", type=int, default=None, help=f"sampling seed (default ${SEED_ENV} or 0)")
    sp.add_argument("--output", help="write the result to this file instead of stdout")


def _add_sweep_args(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--a-start", type=float, required=True, help="first A value (A = -log a)")
    sp.add_argument("--a-stop", type=float, required=True, help="last A value")
    sp.add_argument("--step", type=float, required=True, help="grid step in A")
    sp.add_argument("--jobs", type=int, default=1, help="parallel workers on the service side")
    _add_common(sp)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="holoinv",
        description="Certified bounds for the squeezing function, the Fridman "
        "invariant, and their quotient on model domains.",
    )
    p.add_argument(
        "--server",
        help="base URL of a running service (default: run the service in process)",
    )
    sub = p.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", help="evaluate s, e, m at a point of a domain")
    pe.add_argument("--domain", required=True, help="domain spec, e.g. polydisk:2 or annulus:0.1")
    pe.add_argument("--point", required=True, help="comma-separated coordinates, e.g. 0.1+0.2i,0.3")
    pe.add_argument("--explain", action="store_true", help="print certificate chains")
    pe.add_argument("--format", choices=("text", "json", "csv"), default="text")
    pe.add_argument("--constants", help="path to a constants table for named factors")
    _add_common(pe)
    pe.set_defaults(func=cmd_eval)

    ps = sub.add_parser("sweep", help="punctured-disk bounds over a grid of A = -log a")
    _add_sweep_args(ps)
    ps.add_argument("--format", choices=_FORMATS_TABULAR, default="csv")
    ps.set_defaults(func=cmd_sweep)

    pt = sub.add_parser("table", help="sweep rendered as an aligned text table")
    _add_sweep_args(pt)
    pt.set_defaults(func=cmd_table)

    pp = sub.add_parser("plot", help="sweep rendered as an SVG plot")
    _add_sweep_args(pp)
    pp.set_defaults(func=cmd_plot)

    pst = sub.add_parser("stability", help="bounds along an annulus exhaustion of the punctured disk")
    pst.add_argument("--z0", required=True, help="base point in the punctured disk")
    pst.add_argument("--r1", type=float, default=None, help="first inner radius (default |z0|/2)")
    pst.add_argument("--floor", type=float, default=1e-6, help="smallest inner radius")
    pst.add_argument("--s-upper", dest="s_upper", type=float, default=None,
                     help="externally supplied squeezing upper bound for the first annulus")
    pst.add_argument("--format", choices=_FORMATS_TABULAR, default="csv")
    _add_common(pst)
    pst.set_defaults(func=cmd_stability)

    pv = sub.add_parser("serve", help="run the HTTP service")
    pv.add_argument("--host", default="127.0.0.1")
    pv.add_argument("--port", type=int, default=8000)
    pv.set_defaults(func=cmd_serve)

    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_EXIT
    if getattr(args, "command", None) == "plot" and not args.output:
        print("error: plot requires --output FILE", file=sys.stderr)
        return USAGE_EXIT
    try:
        return args.func(args)
    except SystemExit as exc:
        if isinstance(exc.code, int):
            return exc.code
        if exc.code is not None:
            print(f"holoinv: {exc.code}", file=sys.stderr)
        return USAGE_EXIT
    except httpx.HTTPError as exc:
        print(f"error: cannot reach the service: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
