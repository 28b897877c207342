"""Descriptor file formats (JSON), CSV emission and grid-field dumps.

Formats:
  cone file      {"label": str, "kind": "product_sphere"|"custom",
                  "p": int, "q": int | "n": int, "entries": [[mu, mult], ...],
                  "density": number?}
  coeffs file    [[j, c_plus, c_minus], ...]            (j 1-based)
  tree file      either a bare node record or a wrapper
                 {"root": node, "models": [...], "cone_metric": [[a,b,d], ...]},
                 node = {"kind": "I"|"II", "cone": id?, "density": num?,
                         "m": int?, "model": id?, "x": [...], "R": num,
                         "rho": num?, "children": [...]}
  dag file       {"cones": [{"id", "density"}], "scenarios":
                  [{"parent", "children": [ids]}]}
  surface file   {"one_sided": bool, "singular_points": [{"cone": id}, ...]}
  grid file      {"exponents": {"min","max","step"} | [values],
                  "k_ladder": {"min","max","step"} | [values]}
  field dump     first line a JSON header {"n","h","extent","shape"},
                 then one CSV row of the flattened values.
"""

from __future__ import annotations

import csv
import io
import json
import math
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from .cones import ConeDescriptor, CustomSpectrum, ProductSphere
from .growth import JacobiCoefficients, ModeCoefficient, ThresholdGrid
from .trees import (
    ConeDistanceTable,
    DegenerationDag,
    InnerBall,
    SmoothModelMeta,
    TreeNode,
    TypeINode,
    TypeIINode,
)

__all__ = [
    "load_cone",
    "dump_cone",
    "load_coefficients",
    "dump_coefficients",
    "load_tree_file",
    "dump_tree_file",
    "load_dag",
    "dump_dag",
    "load_surface",
    "load_threshold_grid",
    "write_csv",
    "save_field",
    "load_field",
]


def _read_json(path: str | Path) -> Any:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _write_json(path: str | Path, payload: Any) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


# --------------------------------------------------------------------------
# cones and coefficients
# --------------------------------------------------------------------------


def cone_from_dict(data: dict) -> ConeDescriptor:
    kind = data.get("kind")
    label = data.get("label", "")
    if kind == "product_sphere":
        return ProductSphere(p=int(data["p"]), q=int(data["q"]), label=label)
    if kind == "custom":
        entries = tuple((float(mu), int(mult)) for mu, mult in data["entries"])
        density = data.get("density")
        return CustomSpectrum(
            n=int(data["n"]),
            entries=entries,
            density=None if density is None else float(density),
            label=label,
        )
    raise ValueError(f"unknown cone kind {kind!r}")


def cone_to_dict(cone: ConeDescriptor) -> dict:
    if isinstance(cone, ProductSphere):
        return {"label": cone.label, "kind": "product_sphere", "p": cone.p, "q": cone.q}
    out: dict[str, Any] = {
        "label": cone.label,
        "kind": "custom",
        "n": cone.n,
        "entries": [[mu, mult] for mu, mult in cone.entries],
    }
    if cone.density is not None:
        out["density"] = cone.density
    return out


def load_cone(path: str | Path) -> ConeDescriptor:
    return cone_from_dict(_read_json(path))


def dump_cone(cone: ConeDescriptor, path: str | Path) -> None:
    _write_json(path, cone_to_dict(cone))


def load_coefficients(path: str | Path, ladder) -> JacobiCoefficients:
    rows = _read_json(path)
    terms = tuple(ModeCoefficient(j=int(j), c_plus=float(cp), c_minus=float(cm)) for j, cp, cm in rows)
    return JacobiCoefficients(ladder=ladder, terms=terms)


def dump_coefficients(coeffs: JacobiCoefficients, path: str | Path) -> None:
    _write_json(path, [[t.j, t.c_plus, t.c_minus] for t in coeffs.terms])


# --------------------------------------------------------------------------
# trees, models, DAGs
# --------------------------------------------------------------------------


def node_from_dict(data: dict) -> TreeNode:
    kids = tuple(node_from_dict(c) for c in data.get("children", []))
    x = tuple(float(v) for v in data["x"])
    if data["kind"] == "I":
        return TypeINode(
            cone_class=str(data["cone"]),
            density=float(data["density"]),
            m=int(data.get("m", 1)),
            x=x,
            R=float(data["R"]),
            rho=float(data.get("rho", 0.0)),
            children=kids,
        )
    if data["kind"] == "II":
        return TypeIINode(model=str(data["model"]), x=x, R=float(data["R"]), children=kids)
    raise ValueError(f"unknown node kind {data.get('kind')!r}")


def node_to_dict(node: TreeNode) -> dict:
    kids = [node_to_dict(c) for c in node.children]
    if isinstance(node, TypeINode):
        return {
            "kind": "I",
            "cone": node.cone_class,
            "density": node.density,
            "m": node.m,
            "x": list(node.x),
            "R": node.R,
            "rho": node.rho,
            "children": kids,
        }
    return {"kind": "II", "model": node.model, "x": list(node.x), "R": node.R, "children": kids}


def _model_from_dict(data: dict) -> SmoothModelMeta:
    balls = tuple(
        InnerBall(
            y=tuple(float(v) for v in b["y"]),
            r=float(b["r"]),
            cone_class=str(b["cone_class"]),
            multiplicity=int(b.get("multiplicity", 1)),
        )
        for b in data.get("inner_balls", [])
    )
    return SmoothModelMeta(
        id=str(data["id"]),
        density_at_infinity=float(data["density_at_infinity"]),
        outer_cone=str(data["outer_cone"]),
        inner_balls=balls,
        sigma=float(data.get("sigma", 0.1)),
    )


def _model_to_dict(meta: SmoothModelMeta) -> dict:
    return {
        "id": meta.id,
        "density_at_infinity": meta.density_at_infinity,
        "outer_cone": meta.outer_cone,
        "sigma": meta.sigma,
        "inner_balls": [
            {"y": list(b.y), "r": b.r, "cone_class": b.cone_class, "multiplicity": b.multiplicity}
            for b in meta.inner_balls
        ],
    }


def load_tree_file(path: str | Path) -> tuple[TreeNode, dict[str, SmoothModelMeta], ConeDistanceTable]:
    data = _read_json(path)
    if "kind" in data:
        return node_from_dict(data), {}, ConeDistanceTable()
    root = node_from_dict(data["root"])
    models = {m["id"]: _model_from_dict(m) for m in data.get("models", [])}
    table = ConeDistanceTable((a, b, float(d)) for a, b, d in data.get("cone_metric", []))
    return root, models, table


def dump_tree_file(
    path: str | Path,
    root: TreeNode,
    models: Sequence[SmoothModelMeta] = (),
    cone_metric: Sequence[tuple[str, str, float]] = (),
) -> None:
    payload: dict[str, Any] = {"root": node_to_dict(root)}
    if models:
        payload["models"] = [_model_to_dict(m) for m in models]
    if cone_metric:
        payload["cone_metric"] = [[a, b, d] for a, b, d in cone_metric]
    _write_json(path, payload)


def load_dag(path: str | Path) -> DegenerationDag:
    data = _read_json(path)
    densities = {str(c["id"]): float(c["density"]) for c in data["cones"]}
    scenarios: dict[str, tuple[tuple[str, ...], ...]] = {}
    for scen in data.get("scenarios", []):
        parent = str(scen["parent"])
        scenarios[parent] = scenarios.get(parent, ()) + (tuple(str(c) for c in scen["children"]),)
    return DegenerationDag(densities=densities, scenarios=scenarios)


def dump_dag(dag: DegenerationDag, path: str | Path) -> None:
    payload = {
        "cones": [{"id": cid, "density": dens} for cid, dens in sorted(dag.densities.items())],
        "scenarios": [
            {"parent": parent, "children": list(scen)}
            for parent in sorted(dag.scenarios)
            for scen in dag.scenarios[parent]
        ],
    }
    _write_json(path, payload)


def load_surface(path: str | Path) -> tuple[list[str], bool]:
    data = _read_json(path)
    cones = [str(p["cone"]) for p in data.get("singular_points", [])]
    return cones, bool(data.get("one_sided", False))


def load_threshold_grid(path: str | Path) -> ThresholdGrid:
    data = _read_json(path)

    def expand(part) -> tuple[float, ...]:
        if isinstance(part, list):
            return tuple(float(v) for v in part)
        count = round((part["max"] - part["min"]) / part["step"])
        return tuple(part["min"] + i * part["step"] for i in range(count + 1))

    return ThresholdGrid(exponents=expand(data["exponents"]), k_ladder=expand(data["k_ladder"]))


# --------------------------------------------------------------------------
# CSV and field dumps
# --------------------------------------------------------------------------


def format_cell(value: Any) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, np.integer):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return repr(value)
    return str(value)


def write_csv(path_or_handle, header: Sequence[str], rows: Sequence[Sequence[Any]]) -> None:
    """RFC-4180 CSV with a mandatory header and '.' decimal floats."""

    def emit(handle) -> None:
        writer = csv.writer(handle, lineterminator="\r\n")
        writer.writerow(list(header))
        for row in rows:
            writer.writerow([format_cell(v) for v in row])

    if isinstance(path_or_handle, (str, Path)):
        with open(path_or_handle, "w", encoding="utf-8", newline="") as fh:
            emit(fh)
    else:
        emit(path_or_handle)


def csv_text(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buf = io.StringIO()
    write_csv(buf, header, rows)
    return buf.getvalue()


def save_field(path: str | Path, values: np.ndarray, n: int, h: float, extent: float = 1.0) -> None:
    header = {"n": n, "h": h, "extent": extent, "shape": list(values.shape)}
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(json.dumps(header, sort_keys=True) + "\n")
        fh.write(",".join(repr(float(v)) for v in values.ravel()) + "\n")


def load_field(path: str | Path) -> tuple[np.ndarray, dict]:
    with open(path, "r", encoding="utf-8") as fh:
        header = json.loads(fh.readline())
        row = fh.readline().strip()
    flat = np.array([float(v) for v in row.split(",")]) if row else np.array([])
    return flat.reshape(header["shape"]), header
