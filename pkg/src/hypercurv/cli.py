"""Command line entry point.

Subcommands
-----------
point      full pointwise report (curvature pack, norms, classification,
           integrands, Bach tensor and Bochner residuals when derivative
           data or the parallel flag make them available)
classify   spectrum classification report only
bounds     global threshold report from --chi/--vol/--S/--weyl-l2/...
integrate  quadrature of a functional over a catalog geometry; --dump
           writes a CSV with one row per product node, columns are the
           chart angles in order, then "integrand", then "weight"
verify     exact polynomial certification of the identity registry

Exit codes: 0 success, 1 assertion or bound violation (failed identity,
violated applicable bound), 2 input error (bad schema, unknown names).

Point input is a JSON object (inline, a file path, or '-' for stdin)
with fields n, c, and exactly one of "lambda" or "A", plus optional
"nablaA" (for n = 4 a flat 20-vector over the lexicographic i<=j<=k
component order), "hessS", "parallel". A JSON array of such objects is
processed as a batch with output order preserved. Output is
deterministic: identical input yields byte-identical JSON.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import bounds as bounds_mod
from . import classify as classify_mod
from . import extrinsic, immersions, polyverify
from .tolerances import CLUSTER_TOL, EQUALITY_TOL, ENV_VAR

_EXIT_OK = 0
_EXIT_VIOLATION = 1
_EXIT_INPUT = 2


class _InputError(Exception):
    pass


def _json_default(obj):
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError(f"not JSON serializable: {type(obj).__name__}")


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True, default=_json_default))


def _load_point_payload(raw: str):
    if raw == "-":
        text = sys.stdin.read()
    elif os.path.exists(raw):
        with open(raw) as fh:
            text = fh.read()
    else:
        text = raw
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise _InputError(f"input is neither an existing file nor valid JSON: {exc}") from exc


def _point_report(data: dict, tol: float, cluster_tol: float) -> dict:
    try:
        state = extrinsic.PointState.from_dict(data)
    except ValueError as exc:
        raise _InputError(str(exc)) from exc
    pack = extrinsic.gauss_equations(state)
    report: dict = {
        "n": state.n,
        "c": state.c,
        "H": state.H,
        "S": state.S,
        "minimal": state.minimal,
        "scal": pack.scal,
        "ric": pack.ric.tolist(),
        "ricTF": pack.ricTF.tolist(),
    }
    if state.n == 4:
        norms = extrinsic.closed_form_norms(state)
        report["norms"] = {
            "S": norms.S, "A2sq": norms.A2sq, "trA3": norms.trA3,
            "trA5": norms.trA5, "trA6": norms.trA6,
            "Wsq": norms.Wsq, "Wpmsq": norms.Wpmsq, "RicTFsq": norms.RicTFsq,
        }
        report["spectrum"] = classify_mod.spectrum_report(state, tol=cluster_tol).to_dict()
        report["cgb_integrand"] = extrinsic.cgb_integrand(state)
        report["signature_integrand"] = extrinsic.signature_integrand(state)
        has_derivatives = state.parallel or (state.nablaA is not None
                                             and state.hessS is not None)
        if state.minimal and has_derivatives:
            report["bach"] = extrinsic.bach_tensor(state).tolist()
        else:
            report["bach"] = None
        report["bochner"] = extrinsic.bochner_residuals(state)
    return report


def _cmd_point(args) -> int:
    payload = _load_point_payload(args.input)
    cluster_tol = args.tol if args.tol is not None else CLUSTER_TOL
    tol = args.tol if args.tol is not None else EQUALITY_TOL
    if isinstance(payload, list):
        _emit([_point_report(item, tol, cluster_tol) for item in payload])
    else:
        _emit(_point_report(payload, tol, cluster_tol))
    return _EXIT_OK


def _cmd_classify(args) -> int:
    payload = _load_point_payload(args.input)
    cluster_tol = args.tol if args.tol is not None else CLUSTER_TOL

    def one(data):
        try:
            state = extrinsic.PointState.from_dict(data)
            return classify_mod.spectrum_report(state, tol=cluster_tol).to_dict()
        except ValueError as exc:
            raise _InputError(str(exc)) from exc

    if isinstance(payload, list):
        _emit([one(item) for item in payload])
    else:
        _emit(one(payload))
    return _EXIT_OK


def _cmd_bounds(args) -> int:
    tol = args.tol if args.tol is not None else CLUSTER_TOL
    try:
        data = bounds_mod.GlobalData(
            chi=args.chi, vol=args.vol, S=args.S, weylL2=args.weyl_l2,
            c=args.c, A2avg=args.a2avg, scalSign=args.scal_sign)
    except ValueError as exc:
        raise _InputError(str(exc)) from exc
    report: dict = {"thresholds": bounds_mod.weyl_threshold_report(data, tol=tol)}
    report["f_lower_bound"] = bounds_mod.f_lower_bound(data.chi / data.vol)
    if data.S is not None:
        low, high = bounds_mod.euler_integrand_bounds(data.S)
        report["euler_integrand_bounds"] = {"low": low, "high": high}
    if args.chi % 2 == 0:
        vb = bounds_mod.volume_hypothesis_bounds(args.chi)
        report["volume_hypothesis"] = {
            "bound": vb.bound, "exceeds_16_3": vb.exceeds_16_3, "note": vb.note}
    if data.A2avg is not None:
        try:
            quad = bounds_mod.s_quadratic(data.c, data.chi, data.vol, data.A2avg)
            report["s_quadratic"] = {
                "s": quad.s, "s_minus": quad.s_minus,
                "discriminant": quad.discriminant,
                "warnings": list(quad.warnings),
            }
        except ValueError as exc:
            report["s_quadratic"] = {"error": str(exc)}
    _emit(report)
    violated = any(
        entry["applicable"] and entry["holds"] is False
        for entry in report["thresholds"].values())
    return _EXIT_VIOLATION if violated else _EXIT_OK


def _cmd_integrate(args) -> int:
    try:
        imm = immersions.get_immersion(args.geometry)
    except ValueError as exc:
        raise _InputError(str(exc)) from exc
    try:
        value = immersions.integrate(imm, args.functional, res=args.res, dump=args.dump)
    except ValueError as exc:
        raise _InputError(str(exc)) from exc
    _emit({
        "geometry": imm.label,
        "functional": args.functional,
        "res": args.res,
        "value": value,
        "dump": args.dump,
    })
    return _EXIT_OK


def _cmd_verify(args) -> int:
    if not args.all and args.identity is None:
        raise _InputError("verify needs --identity NAME or --all")
    try:
        if args.all:
            results = polyverify.verify_all()
        else:
            results = [polyverify.verify_identity(args.identity)]
    except ValueError as exc:
        raise _InputError(str(exc)) from exc
    report = [{
        "name": r.name,
        "passed": r.passed,
        "components": r.components,
        "witness": r.witness,
        "detail": r.detail,
    } for r in results]
    _emit({"identities": report, "all_passed": all(r.passed for r in results)})
    return _EXIT_OK if all(r.passed for r in results) else _EXIT_VIOLATION


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypercurv",
        description="Curvature invariants of 4-dimensional hypersurfaces in space forms")
    parser.add_argument("--tol", type=float, default=None,
                        help=f"override all module tolerances (default: env {ENV_VAR} "
                             "or per-module defaults)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("point", help="full pointwise curvature report")
    p.add_argument("input", help="JSON object/array, a file path, or '-' for stdin")
    p.set_defaults(func=_cmd_point)

    p = sub.add_parser("classify", help="spectrum classification report")
    p.add_argument("input", help="JSON object/array, a file path, or '-' for stdin")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("bounds", help="global threshold report")
    p.add_argument("--chi", type=int, required=True, help="Euler characteristic")
    p.add_argument("--vol", type=float, required=True, help="volume (positive)")
    p.add_argument("--S", type=float, default=None, help="constant |A|^2 if known")
    p.add_argument("--weyl-l2", type=float, default=None, help="integral of |W|^2")
    p.add_argument("--c", type=float, default=1.0, help="ambient curvature")
    p.add_argument("--a2avg", type=float, default=None,
                   help="volume-averaged |A^2|^2; enables the S quadratic")
    p.add_argument("--scal-sign", default="unknown",
                   choices=("positive", "zero", "negative", "unknown"),
                   help="sign of the (constant) scalar curvature if known")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("integrate", help="quadrature of a functional over a geometry")
    p.add_argument("--geometry", required=True,
                   help="clifford:4:K (K = 1, 2, 3) or geodesic:4")
    p.add_argument("--functional", default="cgbEuler",
                   help="cgbEuler | weylFunctional | signature | volume "
                        "(aliases: cgb, weyl)")
    p.add_argument("--res", type=int, default=64, help="nodes per chart angle")
    p.add_argument("--dump", default=None, metavar="CSV",
                   help="write per-node rows: chart angles..., integrand, weight")
    p.set_defaults(func=_cmd_integrate)

    p = sub.add_parser("verify", help="certify registered identities exactly")
    p.add_argument("--identity", default=None, help="single identity name")
    p.add_argument("--all", action="store_true", help="verify the whole registry")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.tol is None:
        env = os.environ.get(ENV_VAR)
        if env is not None:
            try:
                args.tol = float(env)
            except ValueError:
                print(f"error: {ENV_VAR} must be a float, got {env!r}", file=sys.stderr)
                return _EXIT_INPUT
    if args.tol is not None and args.tol <= 0.0:
        print(f"error: --tol must be positive, got {args.tol}", file=sys.stderr)
        return _EXIT_INPUT
    try:
        return args.func(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_INPUT
    except np.linalg.LinAlgError as exc:
        print(f"error: linear algebra failure: {exc}", file=sys.stderr)
        return _EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
