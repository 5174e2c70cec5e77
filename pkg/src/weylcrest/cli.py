"""Command line front end: ``weylcrest <subcommand> --type A2 --lambda 1,1 ...``.

Exit status 0 on success, 1 when the mathematics rejects the input
(bad weight, unsupported module, failed precondition), 2 on usage errors.
Defaults can be overridden by a key=value file named in WEYLCREST_CONFIG.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .chains import find_chain
from .faces import CoeffGroup, face_interval, faces_equal, is_weak_face
from .hwmodule import (
    HWModuleDesc, InvalidDescriptor, PreconditionError, UnsupportedModule, fernando_parabolic,
    module_offsets, module_weights, negative_simple_nodes, parse_family, truncated_character, wt_J,
)
from .polyhedron import NotAVertex, UnboundedError, enumerate_faces, hull_of_module, stabilizer_parabolic
from .rootsys import OrbitTooLarge, RootSystemError, parse_type
from .weightlat import WeightError, j_lambda, parse_rational, parse_weight

DOMAIN_ERRORS = (RootSystemError, WeightError, InvalidDescriptor, UnsupportedModule, PreconditionError,
                 UnboundedError, NotAVertex, OrbitTooLarge)

DEFAULTS = {"depth": "8", "bound": "6", "coeff": "int", "format": "json", "family": "verma"}
WEAK_FACE_LIMIT = 20


class UsageError(Exception):
    pass


def load_config(env=os.environ) -> dict:
    cfg = dict(DEFAULTS)
    path = env.get("WEYLCREST_CONFIG")
    if not path:
        return cfg
    try:
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.split("#", 1)[0].strip()
                if not line:
                    continue
                key, sep, value = line.partition("=")
                if not sep:
                    raise UsageError(f"{path}:{lineno}: expected key=value")
                key = key.strip().lower()
                if key not in DEFAULTS:
                    raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
                cfg[key] = value.strip()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    return cfg


def _index_set(text: str | None) -> frozenset:
    if not text:
        return frozenset()
    try:
        return frozenset(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise UsageError(f"index set must look like '1,2', got {text!r}") from None


def build_parser(cfg: dict) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", help="root system, e.g. A2, B3, G2")
    common.add_argument("--lambda", dest="lam", help="highest weight in fundamental coordinates, e.g. '1,1/2'")
    common.add_argument("--family", default=cfg["family"], help="verma | simple | parabolic:J | generic:J")
    common.add_argument("--depth", type=int, default=int(cfg["depth"]))
    common.add_argument("--coeff", default=cfg["coeff"], help="int | rat | scaled:a | real")
    common.add_argument("--bound", type=int, default=int(cfg["bound"]))
    common.add_argument("--format", choices=("json", "text"), default=cfg["format"])

    parser = argparse.ArgumentParser(prog="weylcrest", description="Weights, hulls and faces of highest weight modules.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("describe", parents=[common], help="root system data, and the module if --lambda is given")
    sub.add_parser("weights", parents=[common], help="weights down to --depth")
    sub.add_parser("hull", parents=[common], help="vertices, cone and stabilizer of the convex hull")
    sub.add_parser("faces", parents=[common], help="all faces as canonical (w, J) pairs")
    p = sub.add_parser("face-eq", parents=[common], help="compare wt_J V and wt_J2 V")
    p.add_argument("--J", dest="J1", required=True)
    p.add_argument("--J2", required=True)
    sub.add_parser("character", parents=[common], help="truncated formal character")
    p = sub.add_parser("chain", parents=[common], help="saturated chain between two weights")
    p.add_argument("--mu", required=True)
    p.add_argument("--mu-prime", dest="mu_prime", required=True)
    p = sub.add_parser("verify", parents=[common],
                       help="consistency checks on one module, or on a grid when --type is omitted")
    p.add_argument("--max-rank", dest="max_rank", type=int, default=2)
    return parser


def _rs(args):
    if not args.type:
        raise UsageError("--type is required for this subcommand")
    return parse_type(args.type)


def _module(args) -> HWModuleDesc:
    rs = _rs(args)
    if args.lam is None:
        raise UsageError("--lambda is required for this subcommand")
    lam = parse_weight(rs, args.lam)
    return parse_family(lam, args.family)


def run(args) -> object:
    cmd = args.command
    if args.depth < 0 or args.bound < 1:
        raise UsageError("--depth must be >= 0 and --bound >= 1")
    if cmd == "verify" and not args.type:
        return verify_grid(args.max_rank, args.depth, CoeffGroup.parse(args.coeff), args.bound)
    if cmd == "describe":
        rs = _rs(args)
        out = {"root_system": rs.to_json()}
        if args.lam is not None:
            out["module"] = _module(args).to_json()
        return out
    desc = _module(args)
    if cmd == "weights":
        ws = module_weights(desc, args.depth)
        try:
            ch = truncated_character(desc, args.depth)
            mult = lambda mu: ch[mu]  # noqa: E731
        except UnsupportedModule:
            mult = lambda mu: None  # noqa: E731
        return [{"weight": mu.to_json(), "multiplicity": mult(mu)} for mu in ws]
    if cmd == "hull":
        return hull_of_module(desc).to_json(stabilizer=stabilizer_parabolic(desc)[0])
    if cmd == "faces":
        return [{"w": list(w.word), "J": sorted(J)} for w, J in enumerate_faces(desc)]
    if cmd == "face-eq":
        J1, J2 = _index_set(args.J1), _index_set(args.J2)
        for J in (J1, J2):
            desc.rs._check_J(J)
        # the plain support rule misses the shift along nodes outside J(V);
        # the adjacent rule is the one that matches the weight sets
        lo, hi = face_interval(desc, J1, "adjacent")
        return {"result": faces_equal(desc, J1, J2, "adjacent"), "bound": None,
                "stated_criterion": faces_equal(desc, J1, J2, "stated"),
                "interval": {"J_min": sorted(lo), "J_max": sorted(hi)}}
    if cmd == "character":
        return truncated_character(desc, args.depth).to_json()
    if cmd == "chain":
        mu = parse_weight(desc.rs, args.mu)
        mup = parse_weight(desc.rs, args.mu_prime)
        return find_chain(desc, mu, mup).to_json()
    if cmd == "verify":
        return verify(desc, args.depth, CoeffGroup.parse(args.coeff), args.bound)
    raise UsageError(f"unknown command {cmd}")


def verify(desc: HWModuleDesc, depth: int, group: CoeffGroup, bound: int) -> dict:
    checks = {}
    sets = [module_offsets(desc, depth, f) for f in "abc"]
    checks["weight_formulas_agree"] = sets[0] == sets[1] == sets[2]
    J, _ = stabilizer_parabolic(desc)
    checks["stabilizer_is_J_V"] = J == desc.J_V
    checks["fernando_negative_part"] = negative_simple_nodes(fernando_parabolic(desc), desc.rs.rank) == desc.J_V
    X = list(module_weights(desc, depth))
    if len(X) <= WEAK_FACE_LIMIT:
        verdicts = {}
        for mask in range(1 << desc.rs.rank):
            sub = frozenset(i for i in desc.rs.I if mask >> (i - 1) & 1)
            Y = [mu for mu in wt_J(desc, sub, depth) if mu in set(X)]
            verdicts[",".join(map(str, sorted(sub))) or "-"] = bool(is_weak_face(X, Y, group, bound))
        checks["wt_J_are_weak_faces"] = all(verdicts.values())
    else:
        checks["wt_J_are_weak_faces"] = None
    return {"result": all(v is not False for v in checks.values()), "bound": bound, "checks": checks}


GRID_TYPES = ("A1", "A2", "B2", "G2", "A3", "B3", "C3", "A4", "B4", "C4", "D4", "F4")


def _grid_lambdas(rs):
    n = rs.rank
    rows = [[1] * n, [0] * n, ["1/2"] * n, [-1] + [1] * (n - 1), [2] + [0] * (n - 1)]
    return [rs.weight([parse_rational(str(c)) for c in row]) for row in rows]


def verify_grid(max_rank: int, depth: int, group: CoeffGroup, bound: int) -> dict:
    """Run ``verify`` on every covered module over a small grid of weights."""
    if max_rank < 1:
        raise UsageError("--max-rank must be >= 1")
    cases, failed = 0, []
    systems = [t for t in GRID_TYPES if int(t[1:]) <= max_rank]
    for name in systems:
        rs = parse_type(name)
        for lam in _grid_lambdas(rs):
            jl = sorted(j_lambda(lam))
            descs = [HWModuleDesc.verma(lam), HWModuleDesc.simple(lam)]
            descs += [HWModuleDesc.parabolic(lam, [j]) for j in jl]
            for desc in descs:
                cases += 1
                rep = verify(desc, depth, group, bound)
                if not rep["result"]:
                    failed.append({"module": desc.to_json(), "checks": rep["checks"]})
    return {"result": not failed, "bound": bound, "systems": systems, "modules_checked": cases,
            "failures": failed}


def render_text(obj, indent: int = 0) -> str:
    """Plain indented rendering of the JSON result; weights print as tuples."""
    pad = "  " * indent
    if isinstance(obj, dict) and set(obj) == {"fw"}:
        return "(" + ", ".join(obj["fw"]) + ")"
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            body = render_text(v, indent + 1)
            if "\n" in body or (isinstance(v, (dict, list)) and body.startswith("  ")):
                lines.append(f"{pad}{k}:\n{body}")
            else:
                lines.append(f"{pad}{k}: {body.strip()}")
        return "\n".join(lines)
    if isinstance(obj, list):
        if all(not isinstance(x, (dict, list)) for x in obj):
            return "[" + ", ".join(render_text(x) for x in obj) + "]"
        return "\n".join(pad + "- " + render_text(x, indent + 1).strip() for x in obj)
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    return str(obj)


def main(argv: Sequence[str] | None = None) -> int:
    try:
        cfg = load_config()
    except UsageError as exc:
        print(f"weylcrest: {exc}", file=sys.stderr)
        return 2
    parser = build_parser(cfg)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = run(args)
    except UsageError as exc:
        print(f"weylcrest: {exc}", file=sys.stderr)
        return 2
    except DOMAIN_ERRORS as exc:
        print(f"weylcrest: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"weylcrest: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(json.dumps(result, indent=2, sort_keys=False))
    else:
        print(render_text(result))
    return 0


if __name__ == "__main__":
    sys.exit(main())
