"""Batch front-end: parse descriptor files, dispatch operations, emit CSV/SVG.

Exit codes: 0 success, 2 validation findings (tree-validate violations or
failed acceptance criteria), 1 errors (bad schema/arguments, reported as a
JSON object on standard error).  A fixed seed yields byte-identical CSV
artifacts.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from . import acceptance, fileio, graphs, growth, svg, trees
from .cones import cross_section_spectrum

__all__ = ["main", "build_parser"]


def _emit(args, header, rows) -> None:
    if getattr(args, "out", None):
        fileio.write_csv(args.out, header, rows)
    else:
        fileio.write_csv(sys.stdout, header, rows)


def _point(text: str) -> tuple[float, ...]:
    return tuple(float(v) for v in text.split(","))


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------


def cmd_spectrum(args) -> int:
    cone = fileio.load_cone(args.cone)
    ladder = cross_section_spectrum(cone, args.mu_max)
    rows = [
        [j, e.mu, e.multiplicity, e.gamma_plus, e.gamma_minus, e.resonant]
        for j, e in enumerate(ladder.entries, start=1)
    ]
    _emit(args, ["j", "mu", "mult", "gamma_plus", "gamma_minus", "resonant"], rows)
    return 0


def cmd_growth_check(args) -> int:
    cone = fileio.load_cone(args.cone)
    ladder = cross_section_spectrum(cone, args.mu_max)
    coeffs = fileio.load_coefficients(args.coeffs, ladder)
    lhs, strict = growth.three_scale_check(coeffs, args.gamma, args.K, sigma=args.sigma)
    j_vals = [
        growth.growth_functional(coeffs, growth.GrowthWindow(K=args.K, gamma=args.gamma, r=r))
        for r in (args.K**-2, args.K**-1, 1.0)
    ]
    rows = [[args.gamma, args.K, j_vals[2], j_vals[1], j_vals[0], lhs, strict]]
    _emit(args, ["gamma", "K", "J_at_1", "J_at_Kinv", "J_at_Kinv2", "second_difference", "strict"], rows)
    return 0


def cmd_k_search(args) -> int:
    grid = fileio.load_threshold_grid(args.grid)
    result = growth.find_threshold_K(args.sigma, args.branch, grid)
    rows = [
        [
            result.sigma,
            result.branch,
            result.k_star,
            result.witness_alpha,
            result.witness_beta,
            result.max_discriminant,
        ]
    ]
    _emit(args, ["sigma", "branch", "K_star", "witness_alpha", "witness_beta", "max_discriminant"], rows)
    if args.svg:
        ks = list(grid.k_ladder)
        if args.branch == "power":
            worst = [
                max(
                    growth.discriminant_power(k, a, b)
                    for a in grid.exponents
                    for b in grid.exponents
                    if a > b
                    and abs(a - b) > 1e-12
                    and min(abs(a), abs(b), abs(a + b)) >= args.sigma - 1e-12
                )
                for k in ks
            ]
        else:
            worst = [
                max(growth.discriminant_log(k, 2 * a) for a in grid.exponents if abs(a) >= args.sigma - 1e-12)
                for k in ks
            ]
        svg.write_line_svg(
            args.svg,
            {"max discriminant": (ks, worst)},
            title=f"discriminant vs K ({args.branch}, sigma={args.sigma})",
            xlabel="K",
            ylabel="max discriminant over grid",
        )
    return 0


def cmd_rate_estimate(args) -> int:
    with open(args.samples, "r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        samples = [(float(row["s"]), float(row["annulus_l2"])) for row in reader]
    rate = growth.estimate_rate_from_samples(samples, args.n)
    _emit(args, ["n", "rate"], [[args.n, rate]])
    if args.svg:
        xs = [s for s, _ in samples]
        ys = [m for _, m in samples]
        svg.write_line_svg(
            args.svg,
            {"annulus mass": (xs, ys)},
            title=f"rate fit: {rate:.6g}",
            xlabel="s",
            ylabel="mass",
            logx=True,
            logy=True,
        )
    return 0


def cmd_ode_solve(args) -> int:
    problem = growth.PerturbedRadialProblem(
        mu=args.mu, n=args.n, b0_scale=args.b0, b1_scale=args.b1, perturbation_profile=args.profile
    )
    profile = growth.solve_radial_jacobi(problem, (args.v0, args.dv0), args.r_min, num_samples=args.samples)
    rows = [[r, v, dv] for r, v, dv in zip(profile.r, profile.v, profile.dv)]
    _emit(args, ["r", "v", "dv"], rows)
    return 0


def cmd_linearize(args) -> int:
    rows_out = []
    data, slope = graphs.linearization_order_study(args.n, args.res, joint=True)
    rows_out += [["joint", eps, norm, slope] for eps, norm in data]
    data_u, slope_u = graphs.linearization_order_study(args.n, args.res, eps_ladder=(args.eps, args.eps / 2, args.eps / 4), joint=False)
    rows_out += [["graph-only", eps, norm, slope_u] for eps, norm in data_u]
    coef = graphs.conformal_coefficient_fit(args.n, args.res)
    rows_out.append(["conformal-coefficient", 0.0, coef, 0.0])
    if args.report:
        fileio.write_csv(args.report, ["case", "eps", "residual_norm", "fitted_order"], rows_out)
    else:
        fileio.write_csv(sys.stdout, ["case", "eps", "residual_norm", "fitted_order"], rows_out)
    if args.svg:
        svg.write_line_svg(
            args.svg,
            {
                "joint": ([e for _, e, _, _ in rows_out[:3]], [n for _, _, n, _ in rows_out[:3]]),
                "graph-only": ([e for _, e, _, _ in rows_out[3:6]], [n for _, _, n, _ in rows_out[3:6]]),
            },
            title="linearization residual vs eps",
            xlabel="eps",
            ylabel="residual sup norm",
            logx=True,
            logy=True,
        )
    return 0


def cmd_tree_validate(args) -> int:
    root, models, _ = fileio.load_tree_file(args.tree)
    violations = trees.validate_tree(root, args.beta, models)
    rows = [[v.path, v.message] for v in violations]
    _emit(args, ["path", "violation"], rows)
    return 2 if violations else 0


def cmd_tree_close(args) -> int:
    root_a, models_a, table_a = fileio.load_tree_file(args.tree_a)
    root_b, models_b, table_b = fileio.load_tree_file(args.tree_b)
    models = {**models_b, **models_a}

    def metric(x: str, y: str) -> float:
        try:
            return table_a(x, y)
        except ValueError:
            return table_b(x, y)

    verdict = trees.gamma_close(root_a, root_b, args.gamma, metric, models)
    rows = [[bool(verdict), verdict.failure_kind, verdict.failure_path, verdict.detail]]
    _emit(args, ["close", "failure_kind", "failure_path", "detail"], rows)
    return 0


def cmd_cover_index(args) -> int:
    cover = trees.CubeBallCover(dim=args.dim, half_width=args.half_width)
    x = _point(args.x)
    if args.kind == "II":
        k, ball = trees.covering_cell_type2(x, args.R, args.gamma, args.r0, cover)
        rows = [["II", "", k, "-".join(map(str, ball))]]
        _emit(args, ["kind", "net_index", "interval", "ball"], rows)
        return 0
    if not args.cone or not args.net:
        raise ValueError("type-I indexing needs --cone and --net")
    entries = []
    if args.metric_file:
        entries = [(a, b, float(d)) for a, b, d in json.loads(Path(args.metric_file).read_text())]
    scheme = trees.Type1CoverScheme(
        cone_net=tuple(args.net.split(",")),
        cone_metric=trees.ConeDistanceTable(entries),
        cube=cover,
        r_cap=args.r_cap,
    )
    net_i, slot, k_prime, ball = trees.covering_cell_type1(args.cone, x, args.R, args.rho, args.gamma, scheme)
    rows = [["I", net_i, f"{slot}:{k_prime}", "-".join(map(str, ball))]]
    _emit(args, ["kind", "net_index", "interval", "ball"], rows)
    return 0


def cmd_scap(args) -> int:
    dag = fileio.load_dag(args.dag)
    cones_list, one_sided = fileio.load_surface(args.surface)
    value = trees.scap_surface(cones_list, one_sided, dag)
    _emit(args, ["one_sided", "num_singular_points", "scap"], [[one_sided, len(cones_list), value]])
    return 0


def cmd_accept(args) -> int:
    results = acceptance.run_criteria(args.suite, args.seed)
    rows = [[r.cid, "PASS" if r.passed else "FAIL", r.measured, r.tolerance] for r in results]
    _emit(args, ["id", "status", "measured", "tolerance"], rows)
    return 2 if any(not r.passed for r in results) else 0


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hypercone-lab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="cross-section spectrum and exponents as CSV")
    p.add_argument("--cone", required=True)
    p.add_argument("--mu-max", dest="mu_max", type=float, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("growth-check", help="three-scale growth check for a coefficient file")
    p.add_argument("--cone", required=True)
    p.add_argument("--coeffs", required=True)
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--K", type=float, required=True)
    p.add_argument("--mu-max", dest="mu_max", type=float, default=40.0)
    p.add_argument("--sigma", type=float, default=None)
    p.add_argument("--out")
    p.set_defaults(func=cmd_growth_check)

    p = sub.add_parser("k-search", help="grid-certified three-scale threshold")
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--branch", choices=("power", "log"), required=True)
    p.add_argument("--grid", required=True)
    p.add_argument("--out")
    p.add_argument("--svg")
    p.set_defaults(func=cmd_k_search)

    p = sub.add_parser("rate-estimate", help="log-log asymptotic rate fit from annulus samples")
    p.add_argument("--samples", required=True, help="CSV with columns s, annulus_l2")
    p.add_argument("--n", type=int, default=7)
    p.add_argument("--out")
    p.add_argument("--svg")
    p.set_defaults(func=cmd_rate_estimate)

    p = sub.add_parser("ode-solve", help="integrate the radial mode equation")
    p.add_argument("--mu", type=float, required=True)
    p.add_argument("--n", type=int, default=7)
    p.add_argument("--v0", type=float, required=True)
    p.add_argument("--dv0", type=float, required=True)
    p.add_argument("--r-min", dest="r_min", type=float, required=True)
    p.add_argument("--b0", type=float, default=0.0)
    p.add_argument("--b1", type=float, default=0.0)
    p.add_argument("--profile", default="bump")
    p.add_argument("--samples", type=int, default=2049)
    p.add_argument("--out")
    p.set_defaults(func=cmd_ode_solve)

    p = sub.add_parser("linearize", help="graph-operator linearization study")
    p.add_argument("--n", type=int, default=7)
    p.add_argument("--res", type=float, required=True)
    p.add_argument("--eps", type=float, default=1e-2)
    p.add_argument("--report")
    p.add_argument("--svg")
    p.set_defaults(func=cmd_linearize)

    p = sub.add_parser("tree-validate", help="structural checks for a decomposition tree")
    p.add_argument("tree")
    p.add_argument("--beta", type=float, default=0.01)
    p.add_argument("--out")
    p.set_defaults(func=cmd_tree_validate)

    p = sub.add_parser("tree-close", help="gamma-closeness of two decomposition trees")
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("tree_a")
    p.add_argument("tree_b")
    p.add_argument("--out")
    p.set_defaults(func=cmd_tree_close)

    p = sub.add_parser("cover-index", help="countable-cover cell of a node parameter tuple")
    p.add_argument("--kind", choices=("I", "II"), required=True)
    p.add_argument("--x", required=True, help="comma-separated coordinates")
    p.add_argument("--R", type=float, required=True)
    p.add_argument("--rho", type=float, default=0.0)
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--r0", type=float, default=0.5)
    p.add_argument("--cone")
    p.add_argument("--net", help="comma-separated cone-net ids")
    p.add_argument("--metric-file", dest="metric_file")
    p.add_argument("--dim", type=int, default=8)
    p.add_argument("--half-width", dest="half_width", type=float, default=1.0)
    p.add_argument("--r-cap", dest="r_cap", type=float, default=1.0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_cover_index)

    p = sub.add_parser("scap", help="singular capacity of a surface over a degeneration DAG")
    p.add_argument("--dag", required=True)
    p.add_argument("--surface", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_scap)

    p = sub.add_parser("accept", help="run acceptance criteria")
    p.add_argument("--suite", default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_accept)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError, ArithmeticError, json.JSONDecodeError) as exc:
        report = {"error": str(exc), "kind": type(exc).__name__}
        print(json.dumps(report, sort_keys=True), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
