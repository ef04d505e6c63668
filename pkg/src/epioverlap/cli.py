"""Command-line entry point.

One binary with subcommands; every run stamps the package version and the
seed it used, writes canonical JSON (sorted keys, 17 significant digits)
either to stdout or atomically to --out, and prints a short human-readable
summary to stderr. Identical flags and seed give byte-identical JSON.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__, bounds, d3cert, expsim, json_io, mub, ontomodel
from .qstate import (
    basis_measurement,
    quantum_overlap,
    random_state,
    random_unitary,
    state_from_obj,
)
from .triples import find_conjugate_basis, pp_incompatible, triple_overlaps

DEFAULT_SEED = 1234


def _complex_rows(vectors) -> list:
    return [[[float(a.real), float(a.imag)] for a in v.amplitudes] for v in vectors]


# ---------------------------------------------------------------------------
# Handlers: each returns (payload, summary_lines)
# ---------------------------------------------------------------------------

def _cmd_mub(args):
    family = mub.generate_mub(args.dim)
    check = mub.verify_mub(family)
    payload = {
        "family": mub.family_to_obj(family),
        "verification": {
            "max_cross_deviation": check.max_cross_deviation,
            "orthonormality_deviation": check.orthonormality_deviation,
        },
    }
    summary = [
        f"mutually unbiased bases   dim {args.dim}: {family.count} bases",
        f"max cross-fidelity deviation from 1/{args.dim}: {check.max_cross_deviation:.3e}",
        f"orthonormality deviation: {check.orthonormality_deviation:.3e}",
    ]
    return payload, summary


def _cmd_pp_check(args):
    with open(args.states) as fh:
        doc = json.load(fh)
    states = [state_from_obj(s) for s in doc["states"]]
    if len(states) != 3:
        raise ValueError(f"expected exactly 3 states, got {len(states)}")
    a, b, c = states
    x = triple_overlaps(a, b, c)
    verdict = pp_incompatible(x)
    result = find_conjugate_basis(a, b, c, restarts=args.restarts, seed=args.seed)
    payload = {
        "x1": x.x1, "x2": x.x2, "x3": x.x3,
        "pp_incompatible": verdict,
        "epsilon": result.epsilon,
        "triple_sum": result.triple_sum,
        "converged": result.converged,
        "restarts_used": result.restarts_used,
        "basis": _complex_rows(result.basis.vectors[:3]),
    }
    summary = [
        f"pairwise fidelities: x1={x.x1:.6f} x2={x.x2:.6f} x3={x.x3:.6f}",
        f"algebraic PP-incompatibility: {verdict}",
        f"minimized misfire average: {result.epsilon:.3e} "
        f"(converged={result.converged}, restarts={result.restarts_used})",
    ]
    return payload, summary


def _cmd_bound(args):
    if args.threshold:
        value = bounds.noise_threshold(args.dim)
        payload = {"report": {"dim": args.dim, "threshold": value}}
        summary = [f"symmetric noise threshold at dim {args.dim}: {value:.6f}"]
        return payload, summary
    rep = bounds.noiseless_bound(args.dim)
    report = {
        "dim": rep.dim,
        "subdim": rep.subdim,
        "exact_bound": rep.exact_bound,
        "coarse_two_over_subdim": rep.coarse_two_over_subdim,
        "coarse_four_over_dim_minus_one": rep.coarse_four_over_dim_minus_one,
        "noise_adjusted": None,
        "noise_adjusted_coarse": None,
        "threshold_ok": None,
    }
    summary = [
        f"overlap-ratio bound at dim {rep.dim} (prime-power subdim {rep.subdim}):",
        f"  exact bound     (1/d')(1+sqrt(1-1/d')): {rep.exact_bound:.12f}",
        f"  coarse bound    2/d':                   {rep.coarse_two_over_subdim:.12f}",
        f"  coarse bound    4/(d-1):                {rep.coarse_four_over_dim_minus_one:.12f}",
    ]
    if args.eps1 is not None or args.eps2 is not None:
        e1 = args.eps1 or 0.0
        e2 = args.eps2 or 0.0
        noisy = bounds.noisy_bound(args.dim, e1, e2)
        budget = bounds.noise_budget(noisy.subdim)
        report["noise_adjusted"] = noisy.tight
        report["noise_adjusted_coarse"] = noisy.coarse
        report["threshold_ok"] = bool(3 * noisy.subdim * e1 + 2 * e2 < budget)
        summary.append(f"  noise-adjusted  eps1={e1} eps2={e2}: tight {noisy.tight:.12f}, "
                       f"coarse {noisy.coarse:.12f}, within budget: {report['threshold_ok']}")
    return {"report": report}, summary


def _cmd_d3(args):
    report = d3cert.run_certificate(restarts=args.restarts, seed=args.seed)
    entries = []
    for (alpha, i, beta, j), entry in report.entries.items():
        entries.append({
            "alpha": alpha, "i": i, "beta": beta, "j": j,
            "epsilon": entry.epsilon,
            "triple_sum": entry.triple_sum,
            "converged": entry.result.converged,
            "restarts_used": entry.result.restarts_used,
            "basis": _complex_rows(entry.result.basis.vectors[:3]),
        })
    payload = {
        "restarts": args.restarts,
        "entries": entries,
        "family_sums": {f"{a},{b}": v for (a, b), v in report.family_sums.items()},
        "grand_noise_sum": report.grand_noise_sum,
        "overlap_weight_sum": report.overlap_weight_sum,
        "k_bound": report.k_bound,
    }
    summary = [
        "three-dimensional certificate:",
        *(f"  family ({a},{b}) noise sum: {v:.6f}"
          for (a, b), v in report.family_sums.items()),
        f"  grand noise sum:    {report.grand_noise_sum:.6f}",
        f"  overlap weight sum: {report.overlap_weight_sum:.6f}",
        f"  k bound:            {report.k_bound:.6f}",
    ]
    if args.csv:
        json_io.write_atomic(args.csv, _d3_csv(entries))
        summary.append(f"  per-triple table written to {args.csv}")
    return payload, summary


def _d3_csv(entries) -> str:
    header = ["alpha", "i", "beta", "j", "epsilon", "triple_sum", "converged"]
    for f in (1, 2, 3):
        for comp in (1, 2, 3):
            header += [f"f{f}_{comp}_re", f"f{f}_{comp}_im"]
    rows = [",".join(header)]
    for e in entries:
        row = [str(e["alpha"]), str(e["i"]), str(e["beta"]), str(e["j"]),
               format(e["epsilon"], ".17g"), format(e["triple_sum"], ".17g"),
               str(e["converged"]).lower()]
        for vec in e["basis"]:
            for re_im in vec:
                row += [format(re_im[0], ".17g"), format(re_im[1], ".17g")]
        rows.append(",".join(row))
    return "\n".join(rows) + "\n"


def _cmd_model(args):
    if args.model == "ks2":
        model = ontomodel.ks_model_d2()
        born_worst = 0.0
        overlap_worst = 0.0
        pairs = []
        for k in range(args.pairs):
            psi = random_state(2, (args.seed, 2 * k))
            phi = random_state(2, (args.seed, 2 * k + 1))
            meas = basis_measurement(random_unitary(2, (args.seed, k, 99)))
            born_worst = max(born_worst, ontomodel.born_check(model, psi, meas))
            overlap_worst = max(overlap_worst, abs(
                ontomodel.overlap_pair(model, psi, phi) - quantum_overlap(psi, phi)))
            pairs.append((psi, phi))
        overlap_inequality_worst = ontomodel.verify_overlap_inequality(model, pairs)
        payload = {
            "model": "ks2",
            "pairs": args.pairs,
            "born_worst": born_worst,
            "overlap_worst": overlap_worst,
            "overlap_inequality_worst": overlap_inequality_worst,
        }
        summary = [
            f"sphere qubit model over {args.pairs} seeded pairs:",
            f"  worst Born residual:                {born_worst:.3e}",
            f"  worst |overlap - quantum overlap|:  {overlap_worst:.3e}",
            f"  worst overlap-inequality violation: {overlap_inequality_worst:.3e}",
        ]
        return payload, summary
    with open(args.model) as fh:
        doc = json.load(fh)
    model = ontomodel.abstract_model_from_obj(doc)
    structure = model.verify()
    payload = {"model": args.model, "structure": structure}
    summary = [
        f"discrete model from {args.model}: {structure['points']} ontic points",
        f"  values in range: {structure['values_in_range']}",
        f"  worst state normalization residual: "
        f"{max(structure['state_normalization_residuals'].values(), default=0.0):.3e}",
    ]
    return payload, summary


def _cmd_simulate(args):
    channel = expsim.parse_channel(args.noise)
    if args.dim == 3:
        design = expsim.design_from_d3(d3cert.canonical_states(),
                                       restarts=args.restarts, seed=args.seed)
    else:
        family = mub.generate_mub(args.dim)
        design = expsim.design_from_mubs(family, restarts=args.restarts, seed=args.seed)
    noise = expsim.NoiseConfig(channel=channel, shots=args.shots, seed=args.seed)
    table = expsim.run_experiment(design, noise)
    summary_stats = expsim.aggregate_eps(table, design)

    frequencies: dict = {}
    for (mlabel, prep), outcomes in table.entries.items():
        frequencies.setdefault(mlabel, {})[prep] = dict(outcomes)
    f4_mass: dict = {}
    for (mlabel, prep), mass in table.f4_mass.items():
        f4_mass.setdefault(mlabel, {})[prep] = mass

    k_bound = None
    budget_ok = None
    if design.dim >= 4:
        k_bound = expsim.experimental_k_bound(summary_stats)
        budget = bounds.noise_budget(design.dim)
        budget_ok = bool(3 * design.dim * summary_stats.eps1
                         + 2 * summary_stats.eps2 < budget)
    parameter = getattr(channel, "p", getattr(channel, "sigma", None))
    payload = {
        "dim": design.dim,
        "shots": args.shots,
        "noise": {"channel": channel.kind, "parameter": parameter},
        "frequencies": frequencies,
        "f4_mass": f4_mass,
        "per_triple": {f"{a},{i},{b},{j}": v
                       for (a, i, b, j), v in summary_stats.per_triple.items()},
        "per_pair": {f"{a},{i},{j}": v
                     for (a, i, j), v in summary_stats.per_pair.items()},
        "eps1": summary_stats.eps1,
        "eps2": summary_stats.eps2,
        "k_bound": k_bound,
        "noise_budget_ok": budget_ok,
    }
    summary = [
        f"simulated experiment  dim {design.dim}, {len(design.settings)} settings, "
        f"{args.shots} shots each, channel {channel.kind}",
        f"  eps1 (triple average): {summary_stats.eps1:.6e}",
        f"  eps2 (pair average):   {summary_stats.eps2:.6e}",
    ]
    if k_bound is not None:
        summary.append(f"  noise within budget:   {budget_ok}")
        summary.append(f"  experimental k bound:  {k_bound:.6f}")
    return payload, summary


def _cmd_bonferroni(args):
    rng = np.random.default_rng(args.seed)
    min_slack = float("inf")
    violations = 0
    for _ in range(args.trials):
        ref = rng.dirichlet(np.ones(args.points))
        labeled = {
            (alpha, i): rng.dirichlet(np.ones(args.points))
            for alpha in (1, 2) for i in (1, 2, 3)
        }
        slack = ontomodel.bonferroni_check(ref, labeled)
        min_slack = min(min_slack, slack)
        if slack < -1e-9:
            violations += 1
    payload = {
        "trials": args.trials,
        "points": args.points,
        "min_slack": min_slack,
        "violations": violations,
    }
    summary = [
        f"union-bound slack over {args.trials} random discrete families "
        f"({args.points} points):",
        f"  minimum slack: {min_slack:.6e}   violations: {violations}",
    ]
    return payload, summary


# ---------------------------------------------------------------------------
# Parser and dispatch
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="epioverlap",
        description="Overlap bounds for epistemic models of quantum states.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, seed=True):
        p.add_argument("--out", help="write JSON here (atomic); default stdout")
        if seed:
            p.add_argument("--seed", type=int, default=DEFAULT_SEED,
                           help=f"random seed (default {DEFAULT_SEED}; stamped in output)")

    p = sub.add_parser("mub", help="construct and verify mutually unbiased bases")
    p.add_argument("--dim", type=int, required=True)
    common(p)
    p.set_defaults(handler=_cmd_mub)

    p = sub.add_parser("pp-check", help="PP-incompatibility report for a state triple")
    p.add_argument("--states", required=True, help="JSON file with three states")
    p.add_argument("--restarts", type=int, default=32)
    common(p)
    p.set_defaults(handler=_cmd_pp_check)

    p = sub.add_parser("bound", help="closed-form overlap-ratio bounds")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--eps1", type=float, default=None)
    p.add_argument("--eps2", type=float, default=None)
    p.add_argument("--threshold", action="store_true",
                   help="report the symmetric noise threshold instead")
    common(p)
    p.set_defaults(handler=_cmd_bound)

    p = sub.add_parser("d3", help="run the three-dimensional certificate")
    p.add_argument("--restarts", type=int, default=64)
    p.add_argument("--csv", help="also write the per-triple table as CSV")
    common(p)
    p.set_defaults(handler=_cmd_d3)

    p = sub.add_parser("model", help="verify an ontological model")
    msub = p.add_subparsers(dest="model_command", required=True)
    v = msub.add_parser("verify")
    v.add_argument("--model", required=True, help='"ks2" or a JSON model file')
    v.add_argument("--pairs", type=int, default=20)
    common(v)
    v.set_defaults(handler=_cmd_model)

    p = sub.add_parser("simulate", help="simulate the noisy experiment")
    p.add_argument("--dim", type=int, default=4)
    p.add_argument("--noise", default="none",
                   help='"none", "depolarizing:p", or "misalignment:sigma"')
    p.add_argument("--shots", type=int, default=100000)
    p.add_argument("--restarts", type=int, default=24,
                   help="restarts per conjugate-basis search when building the design")
    common(p)
    p.set_defaults(handler=_cmd_simulate)

    p = sub.add_parser("bonferroni", help="union-bound slack on random families")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--points", type=int, default=50)
    common(p)
    p.set_defaults(handler=_cmd_bonferroni)

    return parser


def report(payload: dict, summary_lines) -> str:
    """Human-readable summary block for a command payload."""
    head = f"[epioverlap {payload.get('version', __version__)}] {payload.get('command', '')}"
    return "\n".join([head, *summary_lines])


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, summary = args.handler(args)
    except (FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, RuntimeError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    payload = {
        "command": args.command,
        "version": __version__,
        "seed": getattr(args, "seed", None),
        **payload,
    }
    text = json_io.dumps(payload)
    if getattr(args, "out", None):
        json_io.write_atomic(args.out, text)
    else:
        print(text)
    print(report(payload, summary), file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
