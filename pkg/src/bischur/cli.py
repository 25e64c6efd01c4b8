"""Command-line front end: JSON in, JSON/CSV reports out.

Subcommands: ``analyze`` (carapoint/slope analysis of a colligation),
``synth`` (build a Schur function from a slope measure, optionally fitting a
colligation), ``nevrep`` (extract the two-variable resolvent representation)
and ``verify`` (seeded random property suites).

Exit codes: 0 success, 2 malformed input, 3 failed precondition (not a
carapoint), 4 numeric failure, 5 verification failure, 6 obstruction
(boundary value 1).  Reports are deterministic for fixed inputs, seed and
tolerances once ``--no-timestamp`` is passed.  The environment variable
``BISCHUR_TOLERANCES`` may hold a JSON object overriding default tolerances;
it is echoed into every report.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from datetime import datetime, timezone

import numpy as np

from . import __version__
from . import boundary, nev2d, representations, slope as slope_mod, synthesis
from .colligation import eval_phi, model_residual, phi_evaluator
from .desingularize import desingularize, eval_I, eval_phi_gen, phi_gen_evaluator, u_vector
from .errors import (
    BischurError,
    DivergenceError,
    IllConditionedError,
    InternalInconsistencyError,
    InvalidInputError,
    NoLimitError,
    ObstructionError,
    PreconditionError,
    SchemaError,
)
from .generate import (
    random_colligation,
    random_colligation_with_kernel,
    random_interior_point,
    random_inward_direction,
    random_measure,
    random_nev_rep,
    random_torus_point,
)
from .linalg import Tolerances
from .points import require_torus
from .serialization import (
    colligation_from_json,
    colligation_to_json,
    complex_to_json,
    detect_payload_kind,
    generalized_to_json,
    measure_from_json,
    measure_to_json,
    nevanlinna_to_json,
    rep_to_json,
    tolerances_from_json,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_PRECONDITION = 3
EXIT_NUMERIC = 4
EXIT_VERIFY = 5
EXIT_OBSTRUCTION = 6

TOLERANCES_ENV = "BISCHUR_TOLERANCES"

SLOPE_SAMPLE_POINTS = (0.1, 0.5, 1.0, 2.0, 10.0, 1j, 1 + 1j, 2j, -1 + 1j)

_CSV_RADII = (0.25, 0.55, 0.85)
_CSV_ANGLES = tuple(2.0 * np.pi * k / 4 for k in range(4))


def parse_complex(text: str) -> complex:
    """Parse a complex scalar, accepting i or j for the imaginary unit."""
    raw = text.strip().lower().replace(" ", "").replace("i", "j")
    if raw in ("j", "+j"):
        return 1j
    if raw == "-j":
        return -1j
    for candidate in (raw, raw.replace("+j", "+1j").replace("-j", "-1j")):
        try:
            return complex(candidate)
        except ValueError:
            continue
    raise SchemaError(f"cannot parse complex number from {text!r}")


def parse_point(text: str) -> tuple[complex, complex]:
    parts = text.split(",")
    if len(parts) != 2:
        raise SchemaError(f"expected two comma-separated coordinates, got {text!r}")
    return parse_complex(parts[0]), parse_complex(parts[1])


def _parse_tolerance_payload(text, where):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{where}: malformed JSON ({exc})") from exc


def _resolve_tolerances(flag_value: str | None):
    source = ["default"]
    tol = Tolerances()
    env = os.environ.get(TOLERANCES_ENV)
    if env:
        tol = tolerances_from_json(_parse_tolerance_payload(env, TOLERANCES_ENV), tol)
        source.append("env")
    if flag_value:
        tol = tolerances_from_json(_parse_tolerance_payload(flag_value, "--tolerances"), tol)
        source.append("flag")
    return tol, source


def _base_report(args, tol, source):
    report = {
        "tool": {"name": "bischur", "version": __version__},
        "tolerances": {
            "rank_rel": tol.rank_rel,
            "structural": tol.structural,
            "solve_cond_max": tol.solve_cond_max,
        },
        "tolerances_source": source,
    }
    if not args.no_timestamp:
        report["timestamp"] = datetime.now(timezone.utc).isoformat()
    return report


def _json_default(obj):
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return complex_to_json(obj)
    raise TypeError(f"not JSON serializable: {type(obj)}")


def _emit(report, out_path=None):
    text = json.dumps(report, sort_keys=True, indent=2, allow_nan=False,
                      default=_json_default)
    print(text)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")


def _fail(args, tol, source, code, kind, message):
    report = _base_report(args, tol, source)
    report["error"] = {"kind": kind, "message": message}
    report["exit_code"] = code
    _emit(report)
    return code


def _load_json(path):
    with open(path) as fh:
        return json.load(fh)


# ---------------------------------------------------------------- analyze


def _derivative_checks(c, tau, phi_tau, pair, rng, n_directions, tol):
    phi = phi_evaluator(c, tol)
    checks = []
    for _ in range(n_directions):
        delta = random_inward_direction(rng, tau)
        numeric, report = slope_mod.directional_derivative_numeric(
            phi, tau, delta, phi_tau=phi_tau
        )
        analytic = slope_mod.directional_derivative_analytic(phi_tau, tau, delta, pair)
        checks.append({
            "delta": [complex_to_json(delta[0]), complex_to_json(delta[1])],
            "numeric": complex_to_json(numeric),
            "analytic": complex_to_json(analytic),
            "abs_err": abs(numeric - analytic),
            "rel_err": abs(numeric - analytic) / (1.0 + abs(analytic)),
            "converged": report.converged,
        })
    return checks


def _generalized_verification(c, g, rng, tol):
    """Residual maxima for the generalized model of a desingularization."""
    phi_gen = phi_gen_evaluator(g, tol)
    model_max = 0.0
    agree_max = 0.0
    for _ in range(10):
        lam = random_interior_point(rng, 0.85)
        mu = random_interior_point(rng, 0.85)
        p_lam, p_mu = phi_gen(lam), phi_gen(mu)
        u_lam = u_vector(g, lam, tol)
        u_mu = u_vector(g, mu, tol)
        I_lam = eval_I(g, lam, tol)
        I_mu = eval_I(g, mu, tol)
        lhs = 1.0 - np.conj(p_mu) * p_lam
        rhs = np.vdot(u_mu, u_lam) - np.vdot(I_mu @ u_mu, I_lam @ u_lam)
        model_max = max(model_max, abs(lhs - rhs))
        agree_max = max(agree_max, abs(p_lam - eval_phi(c, lam, tol)))
    inner_max = 0.0
    eye = np.eye(g.dim)
    for _ in range(10):
        lam = random_torus_point(rng)
        if min(abs(lam[0] - g.tau[0]), abs(lam[1] - g.tau[1])) < 0.2:
            continue
        I_lam = eval_I(g, lam, tol)
        inner_max = max(inner_max, float(np.linalg.norm(I_lam.conj().T @ I_lam - eye, 2)))
    return {
        "model_residual_max": model_max,
        "phi_agreement_max": agree_max,
        "inner_residual_max": inner_max,
        "pass": bool(model_max < 1e-9 and agree_max < 1e-9 and inner_max < 1e-9),
    }


def cmd_analyze(args) -> int:
    tol, source = _resolve_tolerances(args.tolerances)
    try:
        payload = _load_json(args.colligation)
        c = colligation_from_json(payload)
        c.validate(tol)
        tau = require_torus(parse_point(args.tau))
    except (OSError, json.JSONDecodeError, SchemaError, InvalidInputError) as exc:
        return _fail(args, tol, source, EXIT_INPUT, "input", str(exc))

    report = _base_report(args, tol, source)
    report["input"] = {"colligation": payload, "tau": [complex_to_json(t) for t in tau]}
    report["seed"] = args.seed

    ok, witness = boundary.is_carapoint(c, tau, tol)
    if not ok:
        report["carapoint"] = {"is_carapoint": False}
        report["error"] = {
            "kind": "precondition",
            "message": "no carapoint evidence: gamma is outside ran(1 - D tau)",
        }
        report["exit_code"] = EXIT_PRECONDITION
        _emit(report, args.out)
        return EXIT_PRECONDITION

    try:
        g = desingularize(c, tau, tol)
        pair = slope_mod.SlopePair.from_realization(g)
        nu = slope_mod.slope_measure(pair)
        nd = representations.nevanlinna_from_measure(nu)
        phi = phi_evaluator(c, tol)
        path = boundary.ApproachPath.radial(tau)
        liminf = boundary.radial_liminf(phi, path)
        phi_tau = boundary.nontangential_value(phi, path).estimate
        rng = np.random.default_rng(args.seed)
        checks = _derivative_checks(c, tau, phi_tau, pair, rng, 4, tol)
        verification = _generalized_verification(c, g, rng, tol)
        h1 = slope_mod.slope_eval(pair, 1.0)
        samples = [
            {"z": complex_to_json(z), "h": complex_to_json(slope_mod.slope_eval(pair, z))}
            for z in SLOPE_SAMPLE_POINTS
        ]
    except (IllConditionedError, InternalInconsistencyError, DivergenceError,
            NoLimitError, PreconditionError) as exc:
        return _fail(args, tol, source, EXIT_NUMERIC, "numeric", str(exc))

    witness_norm_sq = float(np.linalg.norm(witness) ** 2)
    report["carapoint"] = {
        "is_carapoint": True,
        "witness_norm_sq": witness_norm_sq,
        "kernel_dim": g.kernel_dim,
        "model_dim": g.dim,
        "regular_point": g.kernel_dim == 0,
        "notes": list(g.notes),
    }
    report["boundary_value"] = complex_to_json(phi_tau)
    report["julia_liminf"] = {
        "estimate": float(liminf.estimate.real),
        "converged": liminf.converged,
        "matches_witness_norm_sq": abs(liminf.estimate.real - witness_norm_sq),
        "matches_minus_h1": abs(liminf.estimate.real + h1.real),
    }
    report["slope_measure"] = measure_to_json(nu)
    report["nevanlinna"] = nevanlinna_to_json(nd)
    report["slope_samples"] = samples
    report["derivative_checks"] = checks
    report["verification"] = verification
    report["exit_code"] = EXIT_OK if verification["pass"] else EXIT_NUMERIC

    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["z_re", "z_im", "h_re", "h_im"])
            for entry in samples:
                writer.writerow([*entry["z"], *entry["h"]])
    _emit(report, args.out)
    return report["exit_code"]


# ------------------------------------------------------------------ synth


def _verify_directions(tau):
    base = ((1, 1), (1, 2), (2, 1), (1 + 0.5j, 1), (1, 1 - 0.3j), (0.7, 1.4))
    return tuple((tau[0] * d1, tau[1] * d2) for d1, d2 in base)


def cmd_synth(args) -> int:
    tol, source = _resolve_tolerances(args.tolerances)
    try:
        nu = measure_from_json(_load_json(args.measure))
        if not nu.atoms:
            raise SchemaError("measure must carry at least one atom")
        tau = parse_point(args.tau) if args.tau else (1.0 + 0j, 1.0 + 0j)
        omega = parse_complex(args.omega) if args.omega else 1.0 + 0j
        syn = synthesis.SynthesizedSchur(nu, tau, omega)
    except (OSError, json.JSONDecodeError, SchemaError, InvalidInputError) as exc:
        return _fail(args, tol, source, EXIT_INPUT, "input", str(exc))

    report = _base_report(args, tol, source)
    report["input"] = {
        "measure": measure_to_json(nu),
        "tau": [complex_to_json(t) for t in syn.tau],
        "omega": complex_to_json(syn.omega),
    }
    report["seed"] = args.seed

    try:
        if args.out and args.out.endswith(".csv"):
            rows = []
            for r1 in _CSV_RADII:
                for a1 in _CSV_ANGLES:
                    for r2 in _CSV_RADII:
                        for a2 in _CSV_ANGLES:
                            lam = (r1 * np.exp(1j * a1), r2 * np.exp(1j * a2))
                            value = synthesis.synth_eval(syn, lam)
                            rows.append([lam[0].real, lam[0].imag,
                                         lam[1].real, lam[1].imag,
                                         value.real, value.imag])
            with open(args.out, "w", newline="") as fh:
                writer = csv.writer(fh)
                writer.writerow(["l1_re", "l1_im", "l2_re", "l2_im", "phi_re", "phi_im"])
                writer.writerows(rows)
            report["output"] = {"kind": "samples_csv", "path": args.out, "rows": len(rows)}
        elif args.out:
            fitted = synthesis.fit_colligation(syn, seed=args.seed, tol=tol)
            with open(args.out, "w") as fh:
                json.dump(colligation_to_json(fitted), fh, sort_keys=True, indent=2)
                fh.write("\n")
            report["output"] = {
                "kind": "colligation_json",
                "path": args.out,
                "model_dim": fitted.dim,
            }
        if args.verify:
            slope_report = synthesis.verify_slope(syn, _verify_directions(syn.tau))
            cara_report = synthesis.verify_carapoint(syn)
            report["verification"] = {
                "slope": {
                    "max_rel_err": slope_report.max_rel_err,
                    "pass": slope_report.passed,
                },
                "carapoint": {
                    "liminf": cara_report.liminf,
                    "expected_mass": cara_report.expected_mass,
                    "boundary_value": complex_to_json(cara_report.boundary_value),
                    "omega": complex_to_json(cara_report.omega),
                    "pass": cara_report.passed,
                },
            }
            if not (slope_report.passed and cara_report.passed):
                report["exit_code"] = EXIT_VERIFY
                _emit(report)
                return EXIT_VERIFY
    except (IllConditionedError, InternalInconsistencyError, DivergenceError,
            NoLimitError) as exc:
        return _fail(args, tol, source, EXIT_NUMERIC, "numeric", str(exc))

    report["exit_code"] = EXIT_OK
    _emit(report)
    return EXIT_OK


# ----------------------------------------------------------------- nevrep


def cmd_nevrep(args) -> int:
    tol, source = _resolve_tolerances(args.tolerances)
    chi = (1.0 + 0j, 1.0 + 0j)
    try:
        payload = _load_json(args.input)
        kind = detect_payload_kind(payload)
        if kind == "colligation":
            c = colligation_from_json(payload)
            c.validate(tol)
        elif kind == "measure":
            nu = measure_from_json(payload)
            omega = parse_complex(args.omega) if args.omega else 1.0 + 0j
            syn = synthesis.SynthesizedSchur(nu, chi, omega)
            c = synthesis.fit_colligation(syn, seed=args.seed, tol=tol)
        else:
            raise SchemaError(f"nevrep needs a colligation or a measure, got {kind}")
    except (OSError, json.JSONDecodeError, SchemaError, InvalidInputError) as exc:
        return _fail(args, tol, source, EXIT_INPUT, "input", str(exc))

    report = _base_report(args, tol, source)
    report["input"] = {"kind": kind}
    report["seed"] = args.seed

    ok, _ = boundary.is_carapoint(c, chi, tol)
    if not ok:
        return _fail(args, tol, source, EXIT_PRECONDITION, "precondition",
                     "(1, 1) is not a carapoint of the realized function")
    try:
        g = desingularize(c, chi, tol)
        rep = nev2d.rep_from_schur(g, tol)
        infinity = nev2d.carapoint_at_infinity(nev2d.h2_evaluator(rep, tol))
    except ObstructionError as exc:
        return _fail(args, tol, source, EXIT_OBSTRUCTION, "obstruction", str(exc))
    except (IllConditionedError, InternalInconsistencyError, DivergenceError,
            PreconditionError) as exc:
        return _fail(args, tol, source, EXIT_NUMERIC, "numeric", str(exc))

    alpha_norm_sq = float(np.linalg.norm(rep.alpha) ** 2)
    report["rep"] = rep_to_json(rep)
    report["generalized"] = generalized_to_json(g)
    report["carapoint_at_infinity"] = {
        "finite": infinity.finite,
        "limit": infinity.limit,
        "value": complex_to_json(infinity.value) if infinity.value is not None else None,
        "alpha_norm_sq": alpha_norm_sq,
        "limit_matches_alpha": (
            abs(infinity.limit - alpha_norm_sq) if infinity.limit is not None else None
        ),
    }
    report["exit_code"] = EXIT_OK
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(rep_to_json(rep), fh, sort_keys=True, indent=2)
            fh.write("\n")
    _emit(report)
    return EXIT_OK


# ----------------------------------------------------------------- verify


def _suite_colligations(rng, n, tol):
    worst_schur = 0.0
    worst_model = 0.0
    for _ in range(n):
        c = random_colligation(rng, int(rng.integers(2, 6)))
        for _ in range(4):
            lam = random_interior_point(rng)
            worst_schur = max(worst_schur, abs(eval_phi(c, lam, tol)) - 1.0)
        for _ in range(3):
            worst_model = max(worst_model, model_residual(
                c, random_interior_point(rng, 0.85), random_interior_point(rng, 0.85), tol
            ))
    return {
        "schur_bound_excess_max": worst_schur,
        "model_residual_max": worst_model,
        "pass": bool(worst_schur <= 1e-9 and worst_model < 1e-9),
    }


def _suite_desingularization(rng, n, tol):
    worst = {"model_residual": 0.0, "inner": 0.0, "radial_inner": 0.0,
             "slope_liminf": 0.0}
    for _ in range(n):
        tau = random_torus_point(rng)
        c = random_colligation_with_kernel(rng, int(rng.integers(2, 5)),
                                           int(rng.integers(1, 3)), tau)
        g = desingularize(c, tau, tol)
        eye = np.eye(g.dim)
        for _ in range(3):
            lam = random_interior_point(rng, 0.85)
            mu = random_interior_point(rng, 0.85)
            p_lam = eval_phi_gen(g, lam, tol)
            p_mu = eval_phi_gen(g, mu, tol)
            u_lam = u_vector(g, lam, tol)
            u_mu = u_vector(g, mu, tol)
            I_lam = eval_I(g, lam, tol)
            I_mu = eval_I(g, mu, tol)
            lhs = 1.0 - np.conj(p_mu) * p_lam
            rhs = np.vdot(u_mu, u_lam) - np.vdot(I_mu @ u_mu, I_lam @ u_lam)
            worst["model_residual"] = max(worst["model_residual"], abs(lhs - rhs))
        for _ in range(3):
            lam = random_torus_point(rng)
            if min(abs(lam[0] - tau[0]), abs(lam[1] - tau[1])) < 0.2:
                continue
            I_lam = eval_I(g, lam, tol)
            worst["inner"] = max(worst["inner"], float(
                np.linalg.norm(I_lam.conj().T @ I_lam - eye, 2)))
        for t in (0.5, 0.125, 2.0 ** -6):
            lam = (1 - t) * np.asarray(tau)
            I_lam = eval_I(g, tuple(lam), tol)
            worst["radial_inner"] = max(worst["radial_inner"], float(
                np.abs(I_lam - (1 - t) * eye).max()))
        pair = slope_mod.SlopePair.from_realization(g)
        liminf = boundary.radial_liminf(
            phi_evaluator(c, tol), boundary.ApproachPath.radial(tau)).estimate.real
        worst["slope_liminf"] = max(worst["slope_liminf"], abs(
            liminf + slope_mod.slope_eval(pair, 1.0).real))
    return {
        **worst,
        "pass": bool(worst["model_residual"] < 1e-9 and worst["inner"] < 1e-9
                     and worst["radial_inner"] < 1e-11
                     and worst["slope_liminf"] < 1e-6),
    }


def _suite_measures(rng, n, tol):
    worst_round = 0.0
    worst_equiv = 0.0
    min_im = np.inf
    min_im_zh = np.inf
    grid = [complex(rng.uniform(-3, 3), rng.uniform(0.05, 3.0)) for _ in range(25)]
    for _ in range(n):
        nu = random_measure(rng)
        nd = representations.nevanlinna_from_measure(nu)
        back = representations.measure_from_nevanlinna(nd)
        if len(back.atoms) != len(nu.atoms):
            worst_round = np.inf
        else:
            for (s1, w1), (s2, w2) in zip(nu.atoms, back.atoms):
                worst_round = max(worst_round, abs(s1 - s2), abs(w1 - w2))
        for z in grid[:8]:
            worst_equiv = max(worst_equiv, abs(
                representations.h_from_measure(nu, z)
                - representations.h_from_nevanlinna(nd, z)))
        check = slope_mod.pick_check(representations.measure_evaluator(nu), grid)
        min_im = min(min_im, check.min_im_h)
        min_im_zh = min(min_im_zh, check.min_im_neg_zh)
    return {
        "round_trip_max": worst_round,
        "evaluation_equivalence_max": worst_equiv,
        "min_im_h": float(min_im),
        "min_im_neg_zh": float(min_im_zh),
        "pass": bool(worst_round < 1e-12 and worst_equiv < 1e-10
                     and min_im >= -1e-12 and min_im_zh >= -1e-12),
    }


def _suite_reps(rng, n, tol):
    min_im = np.inf
    worst_limit = 0.0
    for _ in range(n):
        rep = random_nev_rep(rng, int(rng.integers(1, 5)))
        h = nev2d.h2_evaluator(rep, tol)
        for _ in range(10):
            z = (complex(rng.uniform(-3, 3), rng.uniform(0.05, 3.0)),
                 complex(rng.uniform(-3, 3), rng.uniform(0.05, 3.0)))
            min_im = min(min_im, complex(h(z)).imag)
        infinity = nev2d.carapoint_at_infinity(h)
        if not infinity.finite:
            worst_limit = np.inf
        else:
            worst_limit = max(worst_limit, abs(
                infinity.limit - float(np.linalg.norm(rep.alpha) ** 2)))
    return {
        "min_im_h2": float(min_im),
        "infinity_limit_err_max": worst_limit,
        "pass": bool(min_im >= -1e-12 and worst_limit < 1e-6),
    }


def cmd_verify(args) -> int:
    tol, source = _resolve_tolerances(args.tolerances)
    rng = np.random.default_rng(args.seed)
    n = args.random
    suites = {
        "colligations": _suite_colligations(rng, n, tol),
        "desingularization": _suite_desingularization(rng, max(1, n // 2), tol),
        "measures": _suite_measures(rng, n, tol),
        "reps": _suite_reps(rng, max(1, n // 2), tol),
    }
    report = _base_report(args, tol, source)
    report["seed"] = args.seed
    report["random"] = n
    report["suites"] = suites
    all_pass = all(s["pass"] for s in suites.values())
    report["exit_code"] = EXIT_OK if all_pass else EXIT_VERIFY
    for name, suite in suites.items():
        detail = " ".join(
            f"{k}={v:.3e}" for k, v in suite.items()
            if k != "pass" and isinstance(v, float)
        )
        print(f"{'PASS' if suite['pass'] else 'FAIL'} {name}: {detail}",
              file=sys.stderr)
    _emit(report)
    return report["exit_code"]


# ------------------------------------------------------------------- main


def _add_common(parser):
    parser.add_argument("--seed", type=int, default=20120326,
                        help="seed for sampled checks (echoed into the report)")
    parser.add_argument("--tolerances", default=None,
                        help="JSON object overriding tolerance defaults")
    parser.add_argument("--no-timestamp", action="store_true",
                        help="omit the timestamp so reports are byte-identical")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bischur",
        description="Boundary analysis of two-variable Schur functions",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="carapoint and slope analysis of a colligation")
    p.add_argument("colligation", help="colligation JSON file")
    p.add_argument("--tau", required=True, help="torus point, e.g. '1,1' or '-1,i'")
    p.add_argument("--out", default=None, help="also write the report JSON here")
    p.add_argument("--csv", default=None, help="write slope samples as CSV")
    _add_common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("synth", help="synthesize a Schur function from a slope measure")
    p.add_argument("measure", help="measure JSON file")
    p.add_argument("--tau", default=None, help="carapoint to prescribe (default 1,1)")
    p.add_argument("--omega", default=None, help="boundary value to prescribe (default 1)")
    p.add_argument("--out", default=None,
                   help="output path: .json fits a colligation, .csv writes samples")
    p.add_argument("--verify", action="store_true",
                   help="verify the slope and carapoint prescriptions")
    _add_common(p)
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("nevrep", help="two-variable resolvent representation")
    p.add_argument("input", help="colligation JSON or measure JSON")
    p.add_argument("--omega", default=None,
                   help="boundary value when synthesizing from a measure")
    p.add_argument("--out", default=None, help="write the representation JSON here")
    _add_common(p)
    p.set_defaults(func=cmd_nevrep)

    p = sub.add_parser("verify", help="seeded random property suites")
    p.add_argument("--random", type=int, default=20, help="instances per suite")
    _add_common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SchemaError as exc:
        print(json.dumps({"error": {"kind": "input", "message": str(exc)}},
                         indent=2, sort_keys=True))
        return EXIT_INPUT
    except BischurError as exc:
        print(json.dumps({"error": {"kind": type(exc).__name__, "message": str(exc)}},
                         indent=2, sort_keys=True))
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
