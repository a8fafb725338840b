"""Minimal SVG 1.1 writer for parameter nets, rectangles, and diagonals.

Geometry is collected in data coordinates (mathematical y-up frame) and
mapped through a uniform viewport transform at render time; 3-D data is
expected to be projected before it gets here.  Output is deterministic;
the generation-time comment can be suppressed for byte-identical files.
"""

from __future__ import annotations

import datetime
from dataclasses import dataclass, field


def _fmt(value: float) -> str:
    return format(float(value), ".6f").rstrip("0").rstrip(".") or "0"


@dataclass
class SvgCanvas:
    width: int = 800
    height: int = 600
    margin: float = 40.0
    _polylines: list = field(default_factory=list)
    _captions: list = field(default_factory=list)

    def polyline(self, points, stroke: str = "#606060", stroke_width: float = 1.0,
                 dash: str | None = None):
        pts = [(float(x), float(y)) for x, y in points]
        if len(pts) >= 2:
            self._polylines.append((pts, stroke, stroke_width, dash))

    def caption(self, text: str):
        self._captions.append(str(text))

    def _viewport(self):
        xs = [x for pts, *_ in self._polylines for x, _ in pts]
        ys = [y for pts, *_ in self._polylines for _, y in pts]
        if not xs:
            return lambda x, y: (self.margin, self.margin)
        x_lo, x_hi = min(xs), max(xs)
        y_lo, y_hi = min(ys), max(ys)
        span_x = max(x_hi - x_lo, 1e-12)
        span_y = max(y_hi - y_lo, 1e-12)
        scale = min((self.width - 2 * self.margin) / span_x,
                    (self.height - 2 * self.margin) / span_y)
        off_x = 0.5 * (self.width - scale * span_x)
        off_y = 0.5 * (self.height - scale * span_y)

        def map_point(x, y):
            # y-up data frame onto y-down screen frame
            return (off_x + scale * (x - x_lo),
                    self.height - off_y - scale * (y - y_lo))

        return map_point

    def render(self, timestamp: bool = True) -> str:
        mapper = self._viewport()
        lines = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{self.width}" height="{self.height}" '
            f'viewBox="0 0 {self.width} {self.height}">',
        ]
        if timestamp:
            stamp = datetime.datetime.now(datetime.timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")
            lines.append(f"<!-- generated {stamp} -->")
        lines.append(f'<rect width="{self.width}" height="{self.height}" fill="white"/>')
        for pts, stroke, width, dash in self._polylines:
            coords = " ".join(f"{_fmt(px)},{_fmt(py)}" for px, py in (mapper(x, y) for x, y in pts))
            dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
            lines.append(f'<polyline points="{coords}" fill="none" '
                         f'stroke="{stroke}" stroke-width="{_fmt(width)}"{dash_attr}/>')
        for i, text in enumerate(self._captions):
            y = 16 + 16 * i
            safe = (text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;"))
            lines.append(f'<text x="8" y="{y}" font-family="monospace" '
                         f'font-size="12" fill="black">{safe}</text>')
        lines.append("</svg>")
        return "\n".join(lines) + "\n"
