#!/usr/bin/env python3
"""Convergence study for the graph-operator linearization on the flat model.

Runs the joint (graph + conformal factor) and graph-only epsilon ladders at
several resolutions, fits the decay orders, and verifies the conformal-term
coefficient against n/2.
"""

import argparse

from hypercone_lab.fileio import write_csv
from hypercone_lab.graphs import conformal_coefficient_fit, linearization_order_study
from hypercone_lab.svg import write_line_svg


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=7)
    parser.add_argument("--resolutions", default="16,32")
    parser.add_argument("--eps", type=float, default=1e-2)
    parser.add_argument("--out", default="linearize_study.csv")
    parser.add_argument("--svg", default=None)
    args = parser.parse_args()

    ladder = (args.eps, args.eps / 2.0, args.eps / 4.0)
    rows = []
    series: dict[str, tuple[list[float], list[float]]] = {}
    for res in (int(r) for r in args.resolutions.split(",")):
        h = 1.0 / res
        for joint in (True, False):
            case = f"{'joint' if joint else 'graph-only'}@1/{res}"
            data, slope = linearization_order_study(args.n, h, eps_ladder=ladder, joint=joint)
            rows += [[case, eps, norm, slope] for eps, norm in data]
            series[case] = ([eps for eps, _ in data], [norm for _, norm in data])
            print(f"{case:18s} fitted order {slope:.3f}")
        coef = conformal_coefficient_fit(args.n, h)
        rows.append([f"conformal@1/{res}", 0.0, coef, 0.0])
        print(f"conformal@1/{res}    coefficient {coef:.6f} (target {args.n / 2})")
    write_csv(args.out, ["case", "eps", "residual_norm", "fitted_order"], rows)
    print(f"wrote {args.out}")
    if args.svg:
        write_line_svg(
            args.svg,
            series,
            title="linearization residual decay",
            xlabel="eps",
            ylabel="interior sup norm",
            logx=True,
            logy=True,
        )
        print(f"wrote {args.svg}")


if __name__ == "__main__":
    main()
