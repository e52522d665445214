"""ASCII pictures of cup diagrams and glued diagrams."""
from __future__ import annotations

from .diagrams import CupDiagram
from .gluing import GluedDiagram

SPACING = 3


def _levels(d: CupDiagram) -> dict[tuple[int, int], int]:
    """Nesting height of every arc (1 for arcs with nothing inside)."""
    level = {}
    for i, j in sorted(d.arcs, key=lambda a: a[1] - a[0]):
        inside = [level[a] for a in level if i < a[0] and a[1] < j]
        level[(i, j)] = 1 + max(inside, default=0)
    return level


def _arc_rows(d: CupDiagram, width: int) -> list[str]:
    level = _levels(d)
    depth = max(level.values(), default=0)
    rows = [[" "] * width for _ in range(depth)]
    for (i, j), lev in level.items():
        ci, cj = SPACING * (i - 1), SPACING * (j - 1)
        for r in range(lev - 1):
            rows[r][ci] = rows[r][cj] = "|"
        row = rows[lev - 1]
        row[ci] = row[cj] = "+"
        for c in range(ci + 1, cj):
            row[c] = "-"
    return ["".join(r).rstrip() for r in rows]


def _header(npoints: int, width: int) -> str:
    chars = [" "] * (width + 2)
    for p in range(1, npoints + 1):
        s = str(p)
        c = SPACING * (p - 1)
        chars[c:c + len(s)] = s
    return "".join(chars).rstrip()


def render_cups(d: CupDiagram) -> str:
    width = SPACING * (d.npoints - 1) + 1
    points = "".join("o".ljust(SPACING) for _ in range(d.npoints)).rstrip()
    return "\n".join([_header(d.npoints, width), points] + _arc_rows(d, width))


def render_glued(g: GluedDiagram) -> str:
    """Caps of the top diagram above the points, cups of the bottom one below.

    Each point shows the color letter of its circle (o when uncolored); a legend
    lists the circles in canonical order.
    """
    width = SPACING * (g.npoints - 1) + 1
    marks = []
    for p in range(1, g.npoints + 1):
        k = g.circle_of_point(p)
        marks.append((g.colors[k] if g.colors else "o").ljust(SPACING))
    lines = [_header(g.npoints, width)]
    lines += list(reversed(_arc_rows(g.top, width)))
    lines.append("".join(marks).rstrip())
    lines += _arc_rows(g.bottom, width)
    legend = []
    for k, circ in enumerate(g.circles):
        color = g.colors[k] if g.colors else "o"
        legend.append(f"{k}:{color}{{{','.join(map(str, circ))}}}")
    lines.append("circles " + " ".join(legend))
    return "\n".join(lines)


def render(x) -> str:
    if isinstance(x, GluedDiagram):
        return render_glued(x)
    return render_cups(x)
