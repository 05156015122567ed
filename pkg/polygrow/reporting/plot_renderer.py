"""
Plot Renderer
Draws (b(2P), i(2P)) scatter plots and single polygons as PNG images
"""

import os
from typing import Any, Dict, Iterable, List, Optional, Tuple

from PIL import Image, ImageDraw

from polygrow.core.geometry import RationalPolygon, lattice_points, scaled_points
from polygrow.utils.helpers import ensure_directory_exists
from polygrow.utils.logger import Logger

BACKGROUND = (255, 255, 255)
GRID = (225, 225, 225)
AXIS = (60, 60, 60)
FINITE = (200, 30, 30)
INFINITE = (30, 30, 200)
BOUND = (120, 120, 120)


class PlotRenderer:
    def __init__(self, config: Dict[str, Any]):
        """Initialize Plot Renderer"""
        self.config = config
        self.logger = Logger()
        self.plot_dir = config.get('reporting', {}).get('plot_directory', './plots')
        self.cell = 24
        self.margin = 30

    def _sanitize_filename(self, name: str) -> str:
        safe = "".join(c if c.isalnum() or c in "-_." else "_" for c in name)
        return safe.strip("_") or "plot"

    def default_path(self, name: str) -> str:
        ensure_directory_exists(self.plot_dir)
        return os.path.join(self.plot_dir, f"{self._sanitize_filename(name)}.png")

    def _dotted_line(self, draw: ImageDraw.ImageDraw, start: Tuple[float, float], end: Tuple[float, float]):
        steps = int(max(abs(end[0] - start[0]), abs(end[1] - start[1])) // 4) or 1
        for i in range(0, steps, 2):
            t0, t1 = i / steps, (i + 1) / steps
            draw.line([
                (start[0] + (end[0] - start[0]) * t0, start[1] + (end[1] - start[1]) * t0),
                (start[0] + (end[0] - start[0]) * t1, start[1] + (end[1] - start[1]) * t1),
            ], fill=BOUND, width=1)

    def render_tuple_scatter(self, finite: Iterable[Tuple[int, int]], b1: int, i1: int,
                             filepath: Optional[str] = None,
                             infinite: Iterable[Tuple[int, int]] = ()) -> str:
        """Scatter of (b2, i2) with the bound lines for a fixed (b(P), i(P))"""
        try:
            finite = sorted(set(finite))
            infinite = sorted(set(infinite))
            points = finite + infinite
            max_b2 = max([b2 for b2, _ in points] + [2 * b1 + 6 * i1 + 8, 4])
            max_i2 = max([i2 for _, i2 in points] + [2 * b1 + 6 * i1 + 8, 4])

            width = 2 * self.margin + max_b2 * self.cell
            height = 2 * self.margin + max_i2 * self.cell
            image = Image.new("RGB", (width, height), BACKGROUND)
            draw = ImageDraw.Draw(image)

            def at(b2: float, i2: float) -> Tuple[float, float]:
                return self.margin + b2 * self.cell, height - self.margin - i2 * self.cell

            for b2 in range(max_b2 + 1):
                draw.line([at(b2, 0), at(b2, max_i2)], fill=GRID)
            for i2 in range(max_i2 + 1):
                draw.line([at(0, i2), at(max_b2, i2)], fill=GRID)
            draw.line([at(0, 0), at(max_b2, 0)], fill=AXIS, width=2)
            draw.line([at(0, 0), at(0, max_i2)], fill=AXIS, width=2)

            floor_b2 = max(3, 2 * b1)
            self._dotted_line(draw, at(floor_b2, 0), at(floor_b2, max_i2))
            diagonal = 2 * b1 + 6 * i1 + 7
            self._dotted_line(draw, at(0, diagonal), at(diagonal, 0))
            if i1 > 0:
                floor_i2 = b1 + 2 * i1 - 1
                self._dotted_line(draw, at(0, floor_i2), at(max_b2, floor_i2))

            radius = self.cell // 4
            for b2, i2 in finite:
                x, y = at(b2, i2)
                draw.ellipse([x - radius, y - radius, x + radius, y + radius], fill=FINITE)
            for b2, i2 in infinite:
                x, y = at(b2, i2)
                draw.line([x - radius, y - radius, x + radius, y + radius], fill=INFINITE, width=2)
                draw.line([x - radius, y + radius, x + radius, y - radius], fill=INFINITE, width=2)

            filepath = filepath or self.default_path(f"{b1}_boundary_{i1}_interior")
            image.save(filepath)
            self.logger.info(f"Scatter plot saved: {filepath}")
            return filepath
        except Exception as e:
            self.logger.error(f"Failed to render scatter plot for b1={b1}, i1={i1}: {str(e)}")
            raise

    def render_polygon(self, polygon: RationalPolygon, filepath: Optional[str] = None) -> str:
        """Draw P on its (1/r)-grid; lattice points of P are filled"""
        try:
            r = polygon.denominator
            xs = [x for x, _ in polygon.vertices]
            ys = [y for _, y in polygon.vertices]
            x0, y0 = min(xs) - 1, min(ys) - 1
            width = 2 * self.margin + (max(xs) + 1 - x0) * self.cell
            height = 2 * self.margin + (max(ys) + 1 - y0) * self.cell
            image = Image.new("RGB", (width, height), BACKGROUND)
            draw = ImageDraw.Draw(image)

            def at(x: int, y: int) -> Tuple[float, float]:
                return self.margin + (x - x0) * self.cell, height - self.margin - (y - y0) * self.cell

            outline: List[Tuple[float, float]] = [at(x, y) for x, y in polygon.vertices]
            draw.polygon(outline, outline=AXIS, fill=(235, 240, 250))

            for x in range(x0, max(xs) + 2):
                for y in range(y0, max(ys) + 2):
                    px, py = at(x, y)
                    draw.point((px, py), fill=GRID if (x % r or y % r) else AXIS)

            radius = self.cell // 5
            integral = {(x * r, y * r) for x, y in lattice_points(polygon)}
            for x, y in scaled_points(polygon):
                px, py = at(x, y)
                colour = FINITE if (x, y) in integral else INFINITE
                draw.ellipse([px - radius, py - radius, px + radius, py + radius], fill=colour)

            filepath = filepath or self.default_path(f"polygon_r{r}_" + "_".join(f"{x}_{y}" for x, y in polygon.vertices))
            image.save(filepath)
            self.logger.debug(f"Polygon image saved: {filepath}")
            return filepath
        except Exception as e:
            self.logger.error(f"Failed to render polygon {list(polygon.vertices)}: {str(e)}")
            raise
