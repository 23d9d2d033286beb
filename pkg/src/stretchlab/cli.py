"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

import numpy as np

from .hexagon import canonical_disk_embedding, from_half_long, theta1
from .hplane import DomainError
from .pants import double, stretch_pants
from .render import render_svg
from .teich import asymmetry_report, canonical_graph, report_csv, stretch_line, stretch_point
from .verify import SUITES, run_suite


@dataclass
class RunConfig:
    command: str
    params: dict = field(default_factory=dict)
    output_format: str = "json"
    output_path: str | None = None


def _positive(text: str) -> float:
    x = float(text)
    if not np.isfinite(x) or x <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return x


def _float_list(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text}")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="stretchlab", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hexagon", help="symmetric hexagon data for a half-long length L")
    p.add_argument("--L", type=_positive, required=True)
    p.add_argument("--embedding", action="store_true", help="include the canonical disk vertices")
    p.add_argument("--tol", type=float, default=1e-6, help="tolerance of the self-symmetric flag")

    p = sub.add_parser("verify", help="run an invariant suite")
    p.add_argument("--suite", required=True, help="one of " + ", ".join(SUITES + ("all",)))
    p.add_argument("--L", type=_positive)
    p.add_argument("--k", type=_positive)
    p.add_argument("--grid", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--kgrid", type=_float_list)

    p = sub.add_parser("line", help="forward/backward distances along a stretch line (CSV)")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--L", type=_positive, required=True)
    p.add_argument("--tmin", type=float, default=0.0)
    p.add_argument("--tmax", type=float, required=True)
    p.add_argument("--steps", type=int, default=12)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("pants", help="cuffs and seams of the symmetric pants P_k")
    p.add_argument("--L", type=_positive, required=True)
    p.add_argument("--k", type=_positive, default=1.0)

    p = sub.add_parser("surface", help="Fenchel-Nielsen point S(t) of the (g, b) stretch line")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--L", type=_positive, required=True)
    p.add_argument("--t", type=float, default=0.0)

    p = sub.add_parser("render", help="SVG of the foliated hexagon")
    p.add_argument("--L", type=_positive, required=True)
    p.add_argument("--k", type=_positive, default=1.0)
    p.add_argument("--leaves", type=int, default=8)

    for p in sub.choices.values():
        p.add_argument("--out", help="write to this path instead of stdout")
    return ap


def config_from_args(args: argparse.Namespace) -> RunConfig:
    params = {k: v for k, v in vars(args).items() if k not in ("command", "out", "format")}
    fmt = {"render": "svg", "line": getattr(args, "format", "csv")}.get(args.command, "json")
    return RunConfig(args.command, params, fmt, args.out)


def validate(cfg: RunConfig) -> None:
    p = cfg.params
    if cfg.command == "verify":
        if p["suite"] not in SUITES + ("all",):
            raise DomainError(f"unknown suite {p['suite']!r}")
        if p.get("grid") is not None and p["grid"] < 2:
            raise DomainError("--grid must be at least 2")
        if p.get("samples") is not None and p["samples"] < 1:
            raise DomainError("--samples must be positive")
        if p.get("k") is not None and p["k"] < 1:
            raise DomainError("--k must be at least 1 for verification")
    elif cfg.command in ("line", "surface"):
        canonical_graph(p["g"], p["b"])
        if cfg.command == "line" and (p["steps"] < 1 or p["tmax"] <= p["tmin"]):
            raise DomainError("need --steps >= 1 and --tmax > --tmin")
    elif cfg.command == "render" and p["leaves"] < 1:
        raise DomainError("--leaves must be positive")


def cmd_hexagon(cfg: RunConfig) -> tuple[str, int]:
    p = cfg.params
    H = from_half_long(p["L"])
    out = {"L": H.L, "l": H.l, "theta1": theta1(H), "relation_residual": H.relation_residual,
           "self_symmetric": bool(abs(H.l - H.L) <= p["tol"])}
    if p["embedding"]:
        out["embedding"] = [[q.u, q.v] for q in canonical_disk_embedding(H)]
    return json.dumps(out, indent=2) + "\n", 0


def cmd_verify(cfg: RunConfig) -> tuple[str, int]:
    p = dict(cfg.params)
    suite = p.pop("suite")
    report = run_suite(suite, **p)
    return json.dumps(report, indent=2) + "\n", 0 if report["pass"] else 1


def cmd_line(cfg: RunConfig) -> tuple[str, int]:
    p = cfg.params
    t_grid = np.linspace(p["tmin"], p["tmax"], p["steps"] + 1)
    rows = asymmetry_report(p["L"], t_grid)
    if cfg.output_format == "json":
        return json.dumps({"graph": canonical_graph(p["g"], p["b"]).to_dict(), "rows": rows},
                          indent=2) + "\n", 0
    return report_csv(rows), 0


def cmd_pants(cfg: RunConfig) -> tuple[str, int]:
    P = stretch_pants(double(from_half_long(cfg.params["L"])), cfg.params["k"])
    return json.dumps(P.to_dict()) + "\n", 0


def cmd_surface(cfg: RunConfig) -> tuple[str, int]:
    p = cfg.params
    return stretch_point(stretch_line(p["g"], p["b"], p["L"]), p["t"]).to_json() + "\n", 0


def cmd_render(cfg: RunConfig) -> tuple[str, int]:
    p = cfg.params
    return render_svg(from_half_long(p["L"]), p["k"], p["leaves"]), 0


COMMANDS = {
    "hexagon": cmd_hexagon,
    "verify": cmd_verify,
    "line": cmd_line,
    "pants": cmd_pants,
    "surface": cmd_surface,
    "render": cmd_render,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = config_from_args(args)
    try:
        validate(cfg)
        text, code = COMMANDS[cfg.command](cfg)
    except DomainError as exc:
        print(f"stretchlab {cfg.command}: {exc}", file=sys.stderr)
        return 2
    if cfg.output_path:
        with open(cfg.output_path, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
