"""CSV, JSON and SVG writers.

Floats are written with ``repr``, the shortest decimal that parses back to
the same double, so CSV and JSON round-trips are bit-exact.
"""
from __future__ import annotations

import contextlib
import csv
import io
import json
import math
import xml.etree.ElementTree as ET
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .curve_model import UnitSpeedCurve
from .errors import IoError, UsageError
from .frenet import FrenetApparatus

CSV_HEADER = (
    "s", "x1", "x2", "x3", "T1", "T2", "T3", "N1", "N2", "N3",
    "B1", "B2", "B3", "kappa", "tau", "eps_T", "eps_N", "eps_B",
)
SCHEMA_VERSION = "1"
PLANES = {"x1x2": (0, 1), "x1x3": (0, 2), "x2x3": (1, 2)}


@contextlib.contextmanager
def writable(path):
    """Yield ``path`` as a Path; OS errors inside the block become IoError."""
    try:
        yield Path(path)
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc.strerror or exc}") from exc


def csv_rows(curve: UnitSpeedCurve, app: FrenetApparatus):
    eps = [str(e) for e in app.curve_type.signs]
    for k in range(len(curve.s)):
        vals = [curve.s[k], *curve.positions[k], *app.T[k], *app.N[k], *app.B[k], app.kappa[k], app.tau[k]]
        yield [repr(float(v)) for v in vals] + eps


def csv_text(curve: UnitSpeedCurve, app: FrenetApparatus) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    w.writerows(csv_rows(curve, app))
    return buf.getvalue()


def export_csv(curve: UnitSpeedCurve, app: FrenetApparatus, path) -> Path:
    with writable(path) as p, p.open("w", newline="", encoding="ascii") as fh:
        fh.write(csv_text(curve, app))
    return p


def read_csv(path) -> dict[str, np.ndarray]:
    with Path(path).open(newline="", encoding="ascii") as fh:
        r = csv.reader(fh)
        header = next(r)
        if tuple(header) != CSV_HEADER:
            raise ValueError(f"unexpected header {header}")
        rows = [[float(x) for x in row] for row in r]
    a = np.array(rows, dtype=float).reshape(-1, len(CSV_HEADER))
    return {name: a[:, j] for j, name in enumerate(CSV_HEADER)}


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, (float, np.floating)):
        x = float(x)
        return x if math.isfinite(x) else None
    if isinstance(x, np.ndarray):
        return _jsonable(x.tolist())
    return x


def report_json(report: dict) -> str:
    body = {"schema_version": SCHEMA_VERSION, **report}
    return json.dumps(_jsonable(body), sort_keys=True, indent=2, allow_nan=False) + "\n"


def export_report_json(report: dict, path) -> Path:
    with writable(path) as p:
        p.write_text(report_json(report), encoding="utf-8")
    return p


# --- SVG ---------------------------------------------------------------------

@dataclass(frozen=True)
class SvgFit:
    """Affine map from data coordinates to SVG user units (y axis flipped)."""

    xmin: float
    ymax: float
    scale: float
    pad: float

    def to_svg(self, xy: np.ndarray) -> np.ndarray:
        xy = np.asarray(xy, float)
        return np.stack([(xy[:, 0] - self.xmin) * self.scale + self.pad,
                         (self.ymax - xy[:, 1]) * self.scale + self.pad], axis=-1)

    def from_svg(self, uv: np.ndarray) -> np.ndarray:
        uv = np.asarray(uv, float)
        return np.stack([(uv[:, 0] - self.pad) / self.scale + self.xmin,
                         self.ymax - (uv[:, 1] - self.pad) / self.scale], axis=-1)


STYLES = {"donor": ("#1f4e9c", "none"), "partner": ("#c2410c", "6 3")}
SVG_WIDTH = 800.0


def export_svg(curves: Sequence[tuple[str, np.ndarray, str]], path, plane: str = "x2x3") -> SvgFit:
    """Write one polyline per ``(label, positions, role)``; role is "donor"
    or "partner". Excised (NaN) points break the polyline."""
    if not curves:
        raise UsageError("export_svg needs at least one curve")
    if plane not in PLANES:
        raise UsageError(f"plane must be one of {sorted(PLANES)}, got {plane!r}")
    i, j = PLANES[plane]
    projected = [(label, np.asarray(p, float)[:, [i, j]], role) for label, p, role in curves]
    allpts = np.concatenate([p for _, p, _ in projected])
    allpts = allpts[np.all(np.isfinite(allpts), axis=1)]
    lo, hi = allpts.min(axis=0), allpts.max(axis=0)
    span = float(max(hi[0] - lo[0], hi[1] - lo[1], 1e-12))
    inner = SVG_WIDTH / 1.1
    fit = SvgFit(float(lo[0]), float(hi[1]), inner / span, 0.05 * inner)
    w = (hi[0] - lo[0]) * fit.scale + 2 * fit.pad
    h = (hi[1] - lo[1]) * fit.scale + 2 * fit.pad

    ET.register_namespace("", "http://www.w3.org/2000/svg")
    svg = ET.Element("svg", {
        "xmlns": "http://www.w3.org/2000/svg", "version": "1.1",
        "viewBox": f"0 0 {_f(w)} {_f(h)}",
        "data-fit": json.dumps([fit.xmin, fit.ymax, fit.scale, fit.pad]),
        "data-plane": plane,
    })
    ax_x, ax_y = plane[:2], plane[2:]
    for label, pts, role in projected:
        color, dash = STYLES.get(role, STYLES["partner"])
        g = ET.SubElement(svg, "g", {"id": label, "class": role})
        finite = np.all(np.isfinite(pts), axis=1)
        for a, b in _runs(finite):
            uv = fit.to_svg(pts[a:b])
            attrs = {"fill": "none", "stroke": color, "stroke-width": "1.5",
                     "points": " ".join(f"{_f(u)},{_f(v)}" for u, v in uv)}
            if dash != "none":
                attrs["stroke-dasharray"] = dash
            ET.SubElement(g, "polyline", attrs)
    font = {"font-family": "sans-serif", "font-size": "14"}
    ET.SubElement(svg, "text", {"x": _f(w / 2), "y": _f(h - 4), "text-anchor": "middle", **font}).text = ax_x
    ET.SubElement(svg, "text", {"x": "4", "y": _f(h / 2), **font}).text = ax_y
    with writable(path) as p:
        ET.ElementTree(svg).write(p, encoding="utf-8", xml_declaration=True)
    return fit


def _f(x) -> str:
    return repr(float(x))


def _runs(mask: np.ndarray):
    edges = np.flatnonzero(np.diff(np.concatenate([[0], mask.astype(int), [0]])))
    return [(a, b) for a, b in zip(edges[::2], edges[1::2]) if b - a >= 2]


def read_svg(path) -> dict[str, list[np.ndarray]]:
    """Polylines per curve id, mapped back to data coordinates."""
    root = ET.parse(Path(path)).getroot()
    fit = SvgFit(*json.loads(root.get("data-fit")))
    ns = {"svg": "http://www.w3.org/2000/svg"}
    out: dict[str, list[np.ndarray]] = {}
    for g in root.findall("svg:g", ns):
        lines = []
        for pl in g.findall("svg:polyline", ns):
            uv = np.array([[float(c) for c in p.split(",")] for p in pl.get("points").split()])
            lines.append(fit.from_svg(uv))
        out[g.get("id")] = lines
    return out
