"""Thin command-line client for the su3spectra service.

Every subcommand marshals its flags into a request to the HTTP API and
writes the returned artifacts to disk verbatim.  By default the service
runs in-process (no daemon needed); pass --server URL to talk to a remote
instance instead.

A config file (--config FILE) holds key=value lines mirroring the long
flag names, e.g. ``weight = 8,8``; command-line flags win over the file.

Exit codes: 0 success, 2 configuration error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

import httpx

from .errors import ConfigError, NumericalError


def _conv_weight(text: str) -> list[int]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 2:
        raise ConfigError(f"weight must be L1,L2 with two labels, got {text!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ConfigError(f"weight labels must be integers, got {text!r}") from None


def _conv_int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ConfigError(f"expected an integer, got {text!r}") from None


def _conv_float(text: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise ConfigError(f"expected a number, got {text!r}") from None


def _conv_str(text: str) -> str:
    return text


def _conv_list(text: str) -> list[str]:
    items = [p.strip() for p in text.split(",") if p.strip()]
    if not items:
        raise ConfigError(f"expected a comma-separated list, got {text!r}")
    return items


@dataclass
class Opt:
    flag: str
    conv: Callable[[str], object]
    default: object = None
    required: bool = False
    help: str = ""

    @property
    def dest(self) -> str:
        return self.flag.replace("-", "_")


_WEIGHT = Opt("weight", _conv_weight, required=True, help="highest weight L1,L2")
_EXPR = Opt("expr", _conv_str, required=True, help="operator expression, e.g. '1*T3 + 1*S12^2'")
_OUT = Opt("out", _conv_str, help="output file (default: stdout)")
_DIM_CAP = Opt("dim-cap", _conv_int, default=5000, help="largest allowed representation dimension")

COMMANDS: dict[str, list[Opt]] = {
    "dim": [_WEIGHT],
    "basis": [_WEIGHT, _OUT],
    "matrix": [
        _WEIGHT,
        _EXPR,
        Opt("format", _conv_str, default="json", help="output format: json or mm"),
        _OUT,
    ],
    "spectrum": [_WEIGHT, _EXPR, _OUT],
    "ray-study": [
        _WEIGHT,
        _EXPR,
        Opt("kmin", _conv_int, default=1, help="first ray parameter"),
        Opt("kmax", _conv_int, required=True, help="last ray parameter"),
        Opt("scaling", _conv_str, default="none",
            help="rescaling scheme: none|parameter|dimension|power:P"),
        Opt("distinct-tol", _conv_float, default=1e-9,
            help="relative tolerance for counting distinct eigenvalues"),
        _DIM_CAP,
        _OUT,
    ],
    "rescaling-study": [
        _WEIGHT,
        _EXPR,
        Opt("kmin", _conv_int, default=1, help="first ray parameter"),
        Opt("kmax", _conv_int, required=True, help="last ray parameter"),
        Opt("scalings", _conv_list, default=["parameter", "dimension"],
            help="comma-separated scaling schemes to compare"),
        _DIM_CAP,
        _OUT,
    ],
    "lipkin": [
        _WEIGHT,
        Opt("a", _conv_float, default=1.0, help="coefficient of T3"),
        Opt("b", _conv_float, default=1.0, help="coefficient of the S_ij^2 sum"),
        Opt("bins", _conv_float, default=0.1, help="histogram bin width"),
        Opt("max-s", _conv_float, default=4.0, help="histogram range"),
        Opt("scaling", _conv_str, default="none",
            help="optional rescaling scheme applied at k = gcd(L1, L2)"),
        _DIM_CAP,
        Opt("out-dir", _conv_str, required=True, help="directory for the artifacts"),
    ],
    "norm-study": [
        _WEIGHT,
        _EXPR,
        Opt("kmax", _conv_int, required=True, help="last ray parameter"),
        _DIM_CAP,
        _OUT,
    ],
    "commutativity-study": [
        _WEIGHT,
        Opt("expr1", _conv_str, required=True, help="first degree-1 operator"),
        Opt("expr2", _conv_str, required=True, help="second degree-1 operator"),
        Opt("kmax", _conv_int, required=True, help="last ray parameter"),
        _DIM_CAP,
        _OUT,
    ],
    "serve": [
        Opt("host", _conv_str, default="127.0.0.1", help="bind address"),
        Opt("port", _conv_int, default=8000, help="bind port"),
    ],
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="su3spectra",
        description="SU(3) representation spectra and nearest-neighbour statistics",
    )
    parser.add_argument("--server", help="base URL of a running service "
                        "(default: run the service in-process)")
    parser.add_argument("--config", help="key=value file mirroring the flags")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, opts in COMMANDS.items():
        p = sub.add_parser(name, help=f"{name} command")
        for opt in opts:
            p.add_argument(f"--{opt.flag}", dest=opt.dest, help=opt.help)
    return parser


def load_config_file(path: str) -> dict[str, str]:
    """Parse key=value lines; '#' starts a comment, quotes are optional."""
    values: dict[str, str] = {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path!r}: {exc}") from exc
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, _, value = line.partition("=")
        value = value.strip()
        if len(value) >= 2 and value[0] == value[-1] and value[0] in "\"'":
            value = value[1:-1]
        values[key.strip().replace("-", "_")] = value
    return values


def resolve_options(args: argparse.Namespace, config: dict[str, str]) -> dict:
    """Merge flag values, config-file values and defaults (flags win)."""
    resolved = {}
    for opt in COMMANDS[args.command]:
        raw = getattr(args, opt.dest, None)
        if raw is None and opt.dest in config:
            raw = config[opt.dest]
        if raw is None:
            if opt.required:
                raise ConfigError(f"missing required option --{opt.flag}")
            resolved[opt.dest] = opt.default
        else:
            resolved[opt.dest] = opt.conv(raw)
    return resolved


def make_client(server: str | None) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server, timeout=600.0)
    import warnings

    with warnings.catch_warnings():
        # the in-process test client emits an import-time deprecation notice
        warnings.simplefilter("ignore", DeprecationWarning)
        from fastapi.testclient import TestClient

    from .webapp import app

    return TestClient(app)


def call(client: httpx.Client, path: str, payload: dict) -> dict:
    try:
        response = client.post(path, json=payload)
    except httpx.HTTPError as exc:
        raise ConfigError(f"cannot reach service: {exc}") from exc
    if response.status_code == 200:
        return response.json()
    try:
        detail = response.json().get("detail")
    except ValueError:
        detail = response.text
    if isinstance(detail, dict):
        kind = detail.get("kind", "config")
        message = detail.get("message", str(detail))
    else:
        kind = "config" if response.status_code in (400, 422) else "numerical"
        message = str(detail)
    if kind == "numerical":
        raise NumericalError(message)
    raise ConfigError(message)


def write_artifact(text: str, out: str | None) -> None:
    if out:
        Path(out).write_bytes(text.encode("utf-8"))
    else:
        sys.stdout.write(text)


def run_command(args: argparse.Namespace, opts: dict) -> int:
    if args.command == "serve":
        import uvicorn

        from .webapp import app

        uvicorn.run(app, host=opts["host"], port=opts["port"])
        return 0

    with make_client(args.server) as client:
        if args.command == "dim":
            data = call(client, "/dim", {"weight": opts["weight"]})
            print(data["dim"])
        elif args.command == "basis":
            data = call(client, "/basis", {"weight": opts["weight"]})
            write_artifact(data["basis_json"] + "\n", opts["out"])
        elif args.command == "matrix":
            data = call(client, "/matrix", {
                "weight": opts["weight"],
                "expr": opts["expr"],
                "format": opts["format"],
            })
            suffix = "" if data["content"].endswith("\n") else "\n"
            write_artifact(data["content"] + suffix, opts["out"])
        elif args.command == "spectrum":
            data = call(client, "/spectrum", {
                "weight": opts["weight"],
                "expr": opts["expr"],
            })
            write_artifact(data["csv"], opts["out"])
        elif args.command == "ray-study":
            data = call(client, "/ray-study", {
                "weight": opts["weight"],
                "expr": opts["expr"],
                "k_min": opts["kmin"],
                "k_max": opts["kmax"],
                "scaling": opts["scaling"],
                "dim_cap": opts["dim_cap"],
                "distinct_tol": opts["distinct_tol"],
            })
            write_artifact(data["csv"], opts["out"])
        elif args.command == "rescaling-study":
            data = call(client, "/rescaling-study", {
                "weight": opts["weight"],
                "expr": opts["expr"],
                "k_min": opts["kmin"],
                "k_max": opts["kmax"],
                "scalings": opts["scalings"],
                "dim_cap": opts["dim_cap"],
            })
            write_artifact(data["csv"], opts["out"])
        elif args.command == "lipkin":
            data = call(client, "/lipkin", {
                "weight": opts["weight"],
                "a": opts["a"],
                "b": opts["b"],
                "bin_width": opts["bins"],
                "max_s": opts["max_s"],
                "scaling": opts["scaling"],
                "dim_cap": opts["dim_cap"],
            })
            out_dir = Path(opts["out_dir"])
            out_dir.mkdir(parents=True, exist_ok=True)
            (out_dir / "spectrum.csv").write_bytes(data["spectrum_csv"].encode())
            (out_dir / "spacing.csv").write_bytes(data["spacing_csv"].encode())
            (out_dir / "histogram.csv").write_bytes(data["histogram_csv"].encode())
            (out_dir / "sparsity.json").write_bytes(data["sparsity_json"].encode())
            print(
                f"dim={data['dim']} "
                f"max_nnz_per_column={data['sparsity']['max_nonzeros_per_column']} "
                f"artifacts in {out_dir}"
            )
        elif args.command == "norm-study":
            data = call(client, "/norm-study", {
                "weight": opts["weight"],
                "expr": opts["expr"],
                "k_max": opts["kmax"],
                "dim_cap": opts["dim_cap"],
            })
            write_artifact(data["csv"], opts["out"])
            print(f"slope={data['slope']:.6g}", file=sys.stderr)
        elif args.command == "commutativity-study":
            data = call(client, "/commutativity-study", {
                "weight": opts["weight"],
                "expr1": opts["expr1"],
                "expr2": opts["expr2"],
                "k_max": opts["kmax"],
                "dim_cap": opts["dim_cap"],
            })
            write_artifact(data["csv"], opts["out"])
        else:  # pragma: no cover - argparse restricts the choices
            raise ConfigError(f"unknown command {args.command!r}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config_file(args.config) if args.config else {}
        opts = resolve_options(args, config)
        return run_command(args, opts)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
