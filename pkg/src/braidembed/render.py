"""ASCII and SVG drawings of embeddings."""
from __future__ import annotations

import colorsys
import warnings
import xml.etree.ElementTree as ET

from .model import Embedding

__all__ = ["label_char", "render_ascii", "render_svg"]

_ALPHABET = "0123456789abcdefghijklmnopqrstuvwxyz"
_ASCII_BUDGET = 40


def label_char(v: int) -> str:
    """Single-character cell symbol: base-36 digit, or ``?`` from 36 upwards."""
    return _ALPHABET[v] if 0 <= v < len(_ALPHABET) else "?"


def render_ascii(e: Embedding) -> str:
    """One text line per grid row; empty cells print as ``.``.

    Vertices numbered 36 and above print as ``?``, and a legend listing
    their cells is appended after a blank line.
    """
    rows, cols = e.dims.rows, e.dims.cols
    if rows > _ASCII_BUDGET or cols > _ASCII_BUDGET:
        warnings.warn(f"ASCII rendering of a {e.dims} grid exceeds {_ASCII_BUDGET}x{_ASCII_BUDGET}",
                      stacklevel=2)
    grid = [["."] * cols for _ in range(rows)]
    for c, v in e.labelling.items():
        if e.dims.contains(c):
            grid[c[0] - 1][c[1] - 1] = label_char(v)
    lines = ["".join(r) for r in grid]
    overflow = [v for v in e.islands if label_char(v) == "?"]
    if overflow:
        lines.append("")
        for v in overflow:
            where = " ".join(f"({r},{c})" for r, c in e.islands[v].cells)
            lines.append(f"? {v}: {where}")
    return "\n".join(lines) + "\n"


def _colour(v: int) -> str:
    hue = (v * 0.618033988749895) % 1.0
    r, g, b = colorsys.hsv_to_rgb(hue, 0.65, 0.85)
    return f"#{round(r * 255):02x}{round(g * 255):02x}{round(b * 255):02x}"


def render_svg(e: Embedding, spacing: int = 40, radius: int = 9) -> str:
    """Standalone SVG of the lattice, islands, chain edges and bridges.

    Each island is a ``<g class="island-<v>">`` holding its chain segments
    (class ``chain``) and cell circles; bridges follow in one
    ``<g class="bridges">`` as segments of class ``bridge``.  Unoccupied
    lattice points are drawn as small dots without the circle class.
    """
    pad = spacing
    width = (e.dims.cols - 1) * spacing + 2 * pad
    height = (e.dims.rows - 1) * spacing + 2 * pad

    def xy(c):
        return str(pad + (c[1] - 1) * spacing), str(pad + (c[0] - 1) * spacing)

    svg = ET.Element("svg", {
        "xmlns": "http://www.w3.org/2000/svg",
        "width": str(width),
        "height": str(height),
        "viewBox": f"0 0 {width} {height}",
    })
    lattice = ET.SubElement(svg, "g", {"class": "lattice", "fill": "#cccccc"})
    occupied = e.labelling
    for r in range(1, e.dims.rows + 1):
        for c in range(1, e.dims.cols + 1):
            if (r, c) not in occupied:
                x, y = xy((r, c))
                ET.SubElement(lattice, "rect", {"x": str(int(x) - 2), "y": str(int(y) - 2),
                                                "width": "4", "height": "4"})
    for v, isl in e.islands.items():
        colour = _colour(v)
        grp = ET.SubElement(svg, "g", {"class": f"island-{v}", "stroke": colour, "fill": colour})
        for a, b in sorted(isl.chain_edges):
            (x1, y1), (x2, y2) = xy(a), xy(b)
            ET.SubElement(grp, "line", {"class": "chain", "x1": x1, "y1": y1, "x2": x2, "y2": y2,
                                        "stroke-width": "4"})
        for c in isl.cells:
            x, y = xy(c)
            ET.SubElement(grp, "circle", {"cx": x, "cy": y, "r": str(radius)})
    bgrp = ET.SubElement(svg, "g", {"class": "bridges", "stroke": "#000000"})
    for b in e.bridges:
        (x1, y1), (x2, y2) = xy(b.endpoints[0]), xy(b.endpoints[1])
        ET.SubElement(bgrp, "line", {"class": "bridge", "x1": x1, "y1": y1, "x2": x2, "y2": y2,
                                     "stroke-width": "2", "stroke-dasharray": "4 2"})
    ET.indent(svg)
    return ET.tostring(svg, encoding="unicode") + "\n"
