"""Minimal hand-built SVG rendering of the crossover curve.

Two plot groups are emitted: the normalized energy on log-log axes with
the London and Casimir-Polder asymptotes dashed, and its logarithmic
slope against log r.
"""
from __future__ import annotations

import math
import xml.etree.ElementTree as ET

import numpy as np

PANEL_W, PANEL_H = 420, 300
MARGIN = 55
_NS = "http://www.w3.org/2000/svg"


def _fmt(v):
    return f"{v:.2f}"


class _Axes:
    def __init__(self, parent, x0, y0, xlim, ylim, xlog, ylog):
        self.group = parent
        self.x0, self.y0 = x0, y0
        self.xlog, self.ylog = xlog, ylog
        self.xlim = tuple(math.log10(v) if xlog else v for v in xlim)
        self.ylim = tuple(math.log10(v) if ylog else v for v in ylim)

    def _map(self, x, y):
        x = np.log10(x) if self.xlog else np.asarray(x, dtype=float)
        y = np.log10(y) if self.ylog else np.asarray(y, dtype=float)
        (a, b), (c, d) = self.xlim, self.ylim
        px = self.x0 + MARGIN + (x - a) / (b - a) * (PANEL_W - 2 * MARGIN)
        py = self.y0 + PANEL_H - MARGIN - (y - c) / (d - c) * (PANEL_H - 2 * MARGIN)
        return px, py

    def polyline(self, x, y, **attrs):
        px, py = self._map(x, y)
        points = " ".join(f"{_fmt(a)},{_fmt(b)}" for a, b in zip(np.atleast_1d(px), np.atleast_1d(py)))
        el = ET.SubElement(self.group, "polyline", points=points, fill="none")
        for key, value in attrs.items():
            el.set(key.replace("_", "-"), str(value))
        return el

    def frame(self, xlabel, ylabel, title):
        left, top = self.x0 + MARGIN, self.y0 + MARGIN
        w, h = PANEL_W - 2 * MARGIN, PANEL_H - 2 * MARGIN
        ET.SubElement(self.group, "rect", x=_fmt(left), y=_fmt(top), width=_fmt(w), height=_fmt(h),
                      fill="none", stroke="black")
        for text, x, y, extra in (
            (xlabel, left + w / 2, top + h + 35, {}),
            (title, left + w / 2, top - 15, {"font-weight": "bold"}),
        ):
            el = ET.SubElement(self.group, "text", x=_fmt(x), y=_fmt(y), attrib={"text-anchor": "middle", **extra})
            el.text = text
        el = ET.SubElement(
            self.group, "text", x=_fmt(self.x0 + 15), y=_fmt(top + h / 2),
            transform=f"rotate(-90 {_fmt(self.x0 + 15)} {_fmt(top + h / 2)})",
            attrib={"text-anchor": "middle"},
        )
        el.text = ylabel
        self._ticks()

    def _ticks(self):
        (a, b), (c, d) = self.xlim, self.ylim
        for value in _tick_values(a, b):
            px, py = self._map(10**value if self.xlog else value, 10**c if self.ylog else c)
            label = f"1e{int(value)}" if self.xlog else f"{value:g}"
            el = ET.SubElement(self.group, "text", x=_fmt(float(px)), y=_fmt(float(py) + 15),
                               attrib={"text-anchor": "middle", "font-size": "10"})
            el.text = label
        for value in _tick_values(c, d):
            px, py = self._map(10**a if self.xlog else a, 10**value if self.ylog else value)
            label = f"1e{int(value)}" if self.ylog else f"{value:g}"
            el = ET.SubElement(self.group, "text", x=_fmt(float(px) - 5), y=_fmt(float(py) + 4),
                               attrib={"text-anchor": "end", "font-size": "10"})
            el.text = label


def _tick_values(lo, hi):
    span = hi - lo
    step = 10 ** math.floor(math.log10(span)) if span > 0 else 1.0
    if span / step < 3:
        step /= 4
    first = math.ceil(lo / step - 1e-9) * step
    values = []
    v = first
    while v <= hi + 1e-9 * step:
        values.append(round(v, 10))
        v += step
    return values


def crossover_svg(r, energy, slope, london, cp_constant) -> str:
    """Render the two crossover panels; ``slope`` may be None."""
    r = np.asarray(r, dtype=float)
    energy = np.asarray(energy, dtype=float)
    root = ET.Element("svg", xmlns=_NS, width=str(2 * PANEL_W), height=str(PANEL_H),
                      viewBox=f"0 0 {2 * PANEL_W} {PANEL_H}", version="1.1")
    ET.SubElement(root, "rect", width="100%", height="100%", fill="white")

    lo, hi = float(r.min()), float(r.max())
    if hi <= lo:
        lo, hi = lo / 2, hi * 2
    cp = cp_constant / r
    ymin = float(min(energy.min(), cp.min(), london))
    ymax = float(max(energy.max(), london))
    ylim = (10 ** math.floor(math.log10(ymin)), 10 ** math.ceil(math.log10(ymax) + 1e-12))

    g1 = ET.SubElement(root, "g", attrib={"class": "plot", "id": "energy"})
    ax = _Axes(g1, 0, 0, (lo, hi), ylim, True, True)
    ax.frame("r = Omega R / c", "-E r^6 / A^2", "Normalized fourth-order energy")
    ax.polyline([lo, hi], [london, london], stroke="gray", stroke_dasharray="6,4")
    # dashed r**-1 line only where it lies inside the frame
    cp_lo = max(lo, cp_constant / ylim[1])
    if cp_lo < hi:
        ax.polyline([cp_lo, hi], [cp_constant / cp_lo, cp_constant / hi], stroke="gray",
                    stroke_dasharray="6,4")
    ax.polyline(r, energy, stroke="black", stroke_width="2.5")

    g2 = ET.SubElement(root, "g", attrib={"class": "plot", "id": "slope"})
    ax2 = _Axes(g2, PANEL_W, 0, (lo, hi), (-1.1, 0.1), True, False)
    ax2.frame("r = Omega R / c", "d log(-E r^6) / d log r", "Logarithmic slope")
    ax2.polyline([lo, hi], [0.0, 0.0], stroke="gray", stroke_dasharray="6,4")
    ax2.polyline([lo, hi], [-1.0, -1.0], stroke="gray", stroke_dasharray="6,4")
    if slope is not None:
        ax2.polyline(r, np.asarray(slope, dtype=float), stroke="black", stroke_width="2.5")

    ET.indent(root)
    return ET.tostring(root, encoding="unicode", xml_declaration=True) + "\n"
