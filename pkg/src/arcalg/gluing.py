"""Stacking a reflected cup diagram on another and reading off its circles."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import _kernels
from .diagrams import CupDiagram, extend, lambda_pairs

BLACK, GREEN, RED = "B", "G", "R"


@dataclass(frozen=True)
class GluedDiagram:
    """Circles of W(top)bottom, ordered by their smallest point.

    ``colors`` is filled only for glued extended diagrams (4n points).
    """

    top: CupDiagram
    bottom: CupDiagram
    circles: tuple[tuple[int, ...], ...]
    colors: tuple[str, ...] | None = None
    n: int | None = None

    @property
    def npoints(self) -> int:
        return self.top.npoints

    def circle_of_point(self, point: int) -> int:
        for k, circ in enumerate(self.circles):
            if point in circ:
                return k
        raise ValueError(f"point {point} not on any circle")

    def count(self, color: str) -> int:
        if self.colors is None:
            raise ValueError("diagram has not been colored")
        return self.colors.count(color)

    @property
    def black(self) -> int:
        return self.count(BLACK)

    @property
    def green(self) -> int:
        return self.count(GREEN)

    @property
    def red(self) -> int:
        return self.count(RED)

    def indices(self, color: str) -> tuple[int, ...]:
        return tuple(k for k, c in enumerate(self.colors or ()) if c == color)


def circles_from_labels(labels: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    groups: dict[int, list[int]] = {}
    for pos, lab in enumerate(labels, start=1):
        groups.setdefault(int(lab), []).append(pos)
    return tuple(tuple(groups[k]) for k in sorted(groups))


def glue(b: CupDiagram, a: CupDiagram) -> GluedDiagram:
    """Circles of W(b)a: components of the union of both matchings."""
    if b.npoints != a.npoints:
        raise ValueError("cup diagrams on different numbers of points")
    return _glue_cached(b, a)


@lru_cache(maxsize=None)
def _glue_cached(b: CupDiagram, a: CupDiagram) -> GluedDiagram:
    top = np.array([b.partner], dtype=np.int64)
    bottom = np.array([a.partner], dtype=np.int64)
    labels = _kernels.circle_labels(top, bottom)[0]
    return GluedDiagram(b, a, circles_from_labels(labels))


def glue_many(pairs: Sequence[tuple[CupDiagram, CupDiagram]]) -> list[GluedDiagram]:
    """Batch version of :func:`glue` running one kernel call for all pairs."""
    if not pairs:
        return []
    size = pairs[0][0].npoints
    if any(b.npoints != size or a.npoints != size for b, a in pairs):
        raise ValueError("all diagrams must have the same number of points")
    top = np.array([b.partner for b, _ in pairs], dtype=np.int64)
    bottom = np.array([a.partner for _, a in pairs], dtype=np.int64)
    labels = _kernels.circle_labels(top, bottom)
    return [GluedDiagram(b, a, circles_from_labels(row)) for (b, a), row in zip(pairs, labels)]


def circle_color(circle: Sequence[int], n: int) -> str:
    left = sum(1 for p in circle if p <= n)
    right = sum(1 for p in circle if p > 3 * n)
    if left == 0 and right == 0:
        return BLACK
    if left <= 1 and right <= 1:
        return GREEN
    return RED


def classify_colors(g: GluedDiagram, n: int | None = None) -> GluedDiagram:
    """Color circles of a glued extended diagram; inner points are n+1..3n."""
    if n is None:
        if g.npoints % 4:
            raise ValueError("coloring needs a diagram on 4n points")
        n = g.npoints // 4
    if g.npoints != 4 * n:
        raise ValueError(f"diagram has {g.npoints} points, expected {4 * n}")
    colors = tuple(circle_color(c, n) for c in g.circles)
    return GluedDiagram(g.top, g.bottom, g.circles, colors, n)


@lru_cache(maxsize=None)
def ext_diagram(a: str) -> CupDiagram:
    return lambda_pairs(extend(a))


@lru_cache(maxsize=None)
def glue_extended(b: str, a: str) -> GluedDiagram:
    """Colored W(ext b) ext a for two sequences of the same length."""
    return classify_colors(glue(ext_diagram(b), ext_diagram(a)))


def circle_of_arc(g: GluedDiagram, arc) -> int:
    arc = (min(arc), max(arc))
    if arc not in g.top.arcs and arc not in g.bottom.arcs:
        raise ValueError(f"{arc} is not an arc of either diagram")
    return g.circle_of_point(arc[0])
