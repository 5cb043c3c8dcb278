"""Command-line front end: ``fszego {eval,bound,verify,region}``.

Exit codes: 0 success, 1 violations found by ``verify``, 2 usage or
parameter errors.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

import numpy as np

from . import __version__
from . import bounds as bd
from . import region as rg
from . import verify as vf
from .errors import ParameterError
from .families import Family, build
from .functional import FunctionalParams, fekete_szego_gen, lemma1_residual, trimble_slack

OUTPUT_DIR_ENV = "FSZEGO_OUTPUT_DIR"

FAMILY_NAMES = {
    "koebe": Family.KOEBE_ROTATION,
    "twoparam": Family.TWO_PARAM,
    "zeroa2": Family.ZERO_A2,
    "lowerextremal": Family.LOWER_EXTREMAL,
    "convexalpha": Family.CONVEX_ALPHA,
}

SUITES = ("consistency", "sharpness", "dominance", "aux", "boundary", "envelope")


class UsageError(Exception):
    pass


# --- deterministic serialization ---------------------------------------------

def _num(x: float) -> str:
    if not math.isfinite(x):
        return "null"
    return format(x, ".17g")


def to_json(obj, indent: int = 2, _level: int = 0) -> str:
    """JSON with sorted keys and every float at 17 significant digits."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, bool) or obj is None:
        return {True: "true", False: "false", None: "null"}[obj]
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _num(float(obj))
    if isinstance(obj, complex):
        return to_json({"re": obj.real, "im": obj.imag}, indent, _level)
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{to_json(str(k))}: {to_json(obj[k], indent, _level + 1)}" for k in sorted(obj, key=str)]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [f"{pad}{to_json(v, indent, _level + 1)}" for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    if hasattr(obj, "value"):
        return to_json(obj.value, indent, _level)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _flatten(obj, prefix: str = ""):
    if isinstance(obj, complex):
        obj = {"re": obj.real, "im": obj.imag}
    if isinstance(obj, dict):
        for k in sorted(obj, key=str):
            yield from _flatten(obj[k], f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(obj, (list, tuple)):
        for i, v in enumerate(obj):
            yield from _flatten(v, f"{prefix}.{i}")
    else:
        yield prefix, obj


def _csv_cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return _num(v)
    s = "" if v is None else str(v)
    return f'"{s}"' if ("," in s or '"' in s) else s


def envelope(command: str, inputs: dict, results) -> dict:
    return {"artifact_version": __version__, "command": command, "inputs": inputs, "results": results}


def emit(env: dict, fmt: str, stream=None) -> None:
    stream = stream or sys.stdout
    if fmt == "csv":
        stream.write("key,value\n")
        for k, v in _flatten(env):
            stream.write(f"{k},{_csv_cell(v)}\n")
    else:
        stream.write(to_json(env) + "\n")


# --- commands ----------------------------------------------------------------

def _params(args) -> FunctionalParams:
    return FunctionalParams(complex(args.lam, args.lam_im), args.mu)


def _zeta(args) -> complex:
    return complex(math.cos(args.zeta_arg), math.sin(args.zeta_arg))


def cmd_eval(args) -> tuple[dict, int]:
    fam = FAMILY_NAMES[args.family]
    kw = {
        Family.KOEBE_ROTATION: lambda: {"theta": args.theta},
        Family.TWO_PARAM: lambda: {"b": complex(args.b, args.b_im), "zeta": _zeta(args)},
        Family.ZERO_A2: lambda: {"zeta": _zeta(args)},
        Family.LOWER_EXTREMAL: lambda: {"lam": complex(args.ext_lam, args.ext_lam_im), "zeta": _zeta(args)},
        Family.CONVEX_ALPHA: lambda: {"alpha": args.alpha},
    }[fam]()
    member = build(fam, **kw)
    params = _params(args)
    pair = member.pair
    results = {
        "family": fam.value,
        "family_params": {k: (complex(v) if isinstance(v, complex) else float(v)) for k, v in member.params.items()},
        "a2": complex(pair.a2),
        "a3": complex(pair.a3),
        "F": fekete_szego_gen(pair, params),
        "lemma1_residual": lemma1_residual(pair),
        "trimble_slack": trimble_slack(pair),
    }
    inputs = {"family": args.family, "lambda": params.lam, "mu": params.mu, **kw}
    return envelope("eval", inputs, results), 0


def cmd_bound(args) -> tuple[dict, int]:
    params = _params(args)
    report = bd.bound(params, args.side, args.function_class)
    results = report.to_dict()
    if report.function_class is bd.FunctionClass.K and report.side is bd.Side.LOWER and params.mu > 2 / 3:
        results["t0"] = bd.lower_K_t0(params.dist, params.mu)
    inputs = {"class": args.function_class, "side": args.side, "lambda": params.lam, "mu": params.mu}
    return envelope("bound", inputs, results), 0


def run_suites(names, args) -> dict:
    cfg = vf.default_config(args.lambda_steps, args.mu_steps, args.family_resolution, args.tolerance)
    out = {}
    for name in names:
        if name == "consistency":
            for side in bd.Side:
                for cls in bd.FunctionClass:
                    r = vf.check_bound_consistency(cfg, side, cls)
                    out[r.name] = r
        elif name == "sharpness":
            out["sharpness"] = vf.check_sharpness(cfg)
        elif name == "dominance":
            lams = np.linspace(-1.0, 1.0, args.lambda_steps, endpoint=False)
            mus = np.linspace(0.02, 4.0, args.mu_steps)
            out["dominance"] = vf.remark1_dominance(lams, mus)
        elif name == "aux":
            out["aux"] = vf.aux_inequality_check(args.tmax, args.resolution)
        elif name == "boundary":
            out["boundary"] = vf.boundary_continuity_check(cfg.mu_grid)
        elif name == "envelope":
            out["envelope"] = vf.envelope_cross_check(cfg)
    return out


def cmd_verify(args) -> tuple[dict, int]:
    names = SUITES if args.suite == "all" else (args.suite,)
    reports = run_suites(names, args)
    results = {k: r.to_dict() for k, r in reports.items()}
    ok = all(r.passed for r in reports.values())
    results["all_passed"] = ok
    inputs = {"suite": args.suite, "lambda_steps": args.lambda_steps, "mu_steps": args.mu_steps,
              "family_resolution": args.family_resolution, "tolerance": args.tolerance,
              "tmax": args.tmax, "resolution": args.resolution}
    return envelope("verify", inputs, results), 0 if ok else 1


def _resolve_out(path: str) -> Path:
    p = Path(path)
    base = os.environ.get(OUTPUT_DIR_ENV)
    if not p.is_absolute() and base:
        p = Path(base) / p
    return p


def _write(path: Path, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc}") from exc


def cmd_region(args) -> tuple[dict, int]:
    spec = rg.RegionSpec.default(args.rho, args.resolution)
    grid = rg.grid_region(spec)
    results = {
        "member_count": grid.member_count,
        "samples": grid.member.size,
        "bounding_box": None if grid.bounding_box is None else dict(
            zip(("lambda_min", "lambda_max", "mu_min", "mu_max"), grid.bounding_box)),
        "lambda_range": list(spec.lambda_range),
        "mu_range": list(spec.mu_range),
        "strictness": {"mu": "open (2/3, rho)", "lambda_band": "closed"},
    }
    if args.out:
        p = _resolve_out(args.out)
        _write(p, grid.to_csv())
        results["csv"] = str(p)
    if args.svg:
        p = _resolve_out(args.svg)
        _write(p, rg.to_svg(grid))
        results["svg"] = str(p)
    inputs = {"rho": args.rho, "resolution": args.resolution, "out": args.out, "svg": args.svg}
    return envelope("region", inputs, results), 0


# --- parser ------------------------------------------------------------------

def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--tolerance", type=float, default=vf.DEFAULT_TOLERANCE)


def _add_lambda_mu(p: argparse.ArgumentParser) -> None:
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--lambda-im", dest="lam_im", type=float, default=0.0)
    p.add_argument("--mu", type=float, required=True)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fszego", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate the functional on a family member")
    p.add_argument("--family", choices=sorted(FAMILY_NAMES), required=True)
    p.add_argument("--theta", type=float, default=0.0)
    p.add_argument("--b", type=float, default=0.0)
    p.add_argument("--b-im", type=float, default=0.0)
    p.add_argument("--zeta-arg", type=float, default=0.0)
    p.add_argument("--alpha", type=float, default=0.0)
    p.add_argument("--ext-lambda", dest="ext_lam", type=float, default=0.0,
                   help="lambda parametrizing the lowerextremal family")
    p.add_argument("--ext-lambda-im", dest="ext_lam_im", type=float, default=0.0)
    _add_lambda_mu(p)
    _add_common(p)

    p = sub.add_parser("bound", help="evaluate a sharp bound with regime and extremal")
    p.add_argument("--class", dest="function_class", choices=("S", "K"), required=True)
    p.add_argument("--side", choices=("upper", "lower"), required=True)
    _add_lambda_mu(p)
    _add_common(p)

    p = sub.add_parser("verify", help="run certification sweeps")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--lambda-steps", type=int, default=40)
    p.add_argument("--mu-steps", type=int, default=13)
    p.add_argument("--family-resolution", type=int, default=32)
    p.add_argument("--tmax", type=float, default=50.0)
    p.add_argument("--resolution", type=int, default=10_000)
    _add_common(p)

    p = sub.add_parser("region", help="export the D_rho membership grid")
    p.add_argument("--rho", type=float, required=True)
    p.add_argument("--resolution", type=int, default=400)
    p.add_argument("--out", help="CSV path (relative paths honour $%s)" % OUTPUT_DIR_ENV)
    p.add_argument("--svg", help="optional SVG path")
    _add_common(p)
    return ap


COMMANDS = {"eval": cmd_eval, "bound": cmd_bound, "verify": cmd_verify, "region": cmd_region}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        env, code = COMMANDS[args.command](args)
    except (ParameterError, UsageError, ValueError, KeyError) as exc:
        print(f"fszego {args.command}: error: {exc}", file=sys.stderr)
        return 2
    emit(env, args.format)
    return code


if __name__ == "__main__":
    sys.exit(main())
