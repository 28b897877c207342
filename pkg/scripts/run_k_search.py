#!/usr/bin/env python3
"""Sweep grid-certified three-scale thresholds over sigma for both branches.

Emits the threshold CSV (sigma, branch, K_star, witness, max discriminant)
and an optional SVG of K_star against sigma.
"""

import argparse

from hypercone_lab.fileio import write_csv
from hypercone_lab.growth import ThresholdGrid, find_threshold_K
from hypercone_lab.svg import write_line_svg


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sigmas", default="0.5,0.75,1.0,1.5,2.0")
    parser.add_argument("--exp-range", type=float, default=4.0)
    parser.add_argument("--exp-step", type=float, default=0.25)
    parser.add_argument("--k-max", type=float, default=50.0)
    parser.add_argument("--k-step", type=float, default=0.5)
    parser.add_argument("--out", default="k_thresholds.csv")
    parser.add_argument("--svg", default=None)
    args = parser.parse_args()

    grid = ThresholdGrid.from_ranges(-args.exp_range, args.exp_range, args.exp_step, 2.5, args.k_max, args.k_step)
    sigmas = [float(s) for s in args.sigmas.split(",")]
    rows = []
    curves: dict[str, tuple[list[float], list[float]]] = {"power": ([], []), "log": ([], [])}
    for branch in ("power", "log"):
        for sigma in sigmas:
            res = find_threshold_K(sigma, branch, grid)
            rows.append(
                [res.sigma, res.branch, res.k_star, res.witness_alpha, res.witness_beta, res.max_discriminant]
            )
            curves[branch][0].append(sigma)
            curves[branch][1].append(res.k_star)
            print(f"{branch:5s} sigma={sigma:<5g} K*={res.k_star:<6g} witness=({res.witness_alpha}, {res.witness_beta})")
    write_csv(args.out, ["sigma", "branch", "K_star", "witness_alpha", "witness_beta", "max_discriminant"], rows)
    print(f"wrote {args.out}")
    if args.svg:
        write_line_svg(
            args.svg,
            {name: data for name, data in curves.items()},
            title="certified threshold vs sigma",
            xlabel="sigma",
            ylabel="K_star",
        )
        print(f"wrote {args.svg}")


if __name__ == "__main__":
    main()
