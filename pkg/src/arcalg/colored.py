"""The colored algebra K^n built on extended cup diagrams.

Basis vectors of ``b K a`` label only the black circles of W(ext b) ext a;
green circles carry the unit and a red circle kills the whole space.
Products are computed in H^{2n}: lift (green circles get 1), multiply, then
project (green X becomes 0, green 1 becomes 1, red targets vanish).
"""
from __future__ import annotations

from functools import lru_cache

from .algebra import AlgElem, FiniteAlgebra, Key, popcount
from .arc_algebra import LABEL_NAMES, arc_algebra, run_plan, surgery_plan
from .diagrams import HalfIndex, SignSeq, enumerate_sequences
from .gluing import BLACK, GREEN, GluedDiagram, ext_diagram, glue_extended


def embed_mask(mask: int, g: GluedDiagram) -> int:
    """Black-circle mask to a mask over all circles (green circles get 1)."""
    out = 0
    for k, idx in enumerate(g.indices(BLACK)):
        if (mask >> k) & 1:
            out |= 1 << idx
    return out


def project_mask(mask: int, g: GluedDiagram) -> int | None:
    """Inverse direction; None when the image is zero."""
    if g.red:
        return None
    for idx in g.indices(GREEN):
        if (mask >> idx) & 1:
            return None
    out = 0
    for k, idx in enumerate(g.indices(BLACK)):
        if (mask >> idx) & 1:
            out |= 1 << k
    return out


class ColoredAlgebra(FiniteAlgebra):
    """K^n with idempotents labelled by balanced sequences of length 2n."""

    name = "K"

    def __init__(self, n: int):
        super().__init__()
        if n < 1:
            raise ValueError("n must be positive")
        self.n = n
        self.big = arc_algebra(2 * n)
        self._labels = enumerate_sequences(n)

    def labels(self) -> list[SignSeq]:
        return self._labels

    def glued(self, b: str, a: str) -> GluedDiagram:
        return glue_extended(b, a)

    def space(self, b: str, a: str) -> list[int]:
        g = glue_extended(b, a)
        if g.red:
            return []
        return list(range(2 ** g.black))

    def degree(self, key: Key) -> int:
        b, a, mask = key
        g = glue_extended(b, a)
        return 2 * popcount(mask) - len(g.circles) + 2 * self.n

    def _compute_block(self, c, b, a):
        gcb, gba, gca = glue_extended(c, b), glue_extended(b, a), glue_extended(c, a)
        fm = self.space(c, b)
        gm = self.space(b, a)
        if not fm or not gm:
            return {}
        plan = surgery_plan(ext_diagram(c), ext_diagram(b), ext_diagram(a))
        big = run_plan(plan, [embed_mask(m, gcb) for m in fm], [embed_mask(m, gba) for m in gm])
        back_f = {embed_mask(m, gcb): m for m in fm}
        back_g = {embed_mask(m, gba): m for m in gm}
        out = {}
        for (bf, bg), terms in big.items():
            proj = {}
            for m, v in terms.items():
                pm = project_mask(m, gca)
                if pm is not None:
                    proj[pm] = proj.get(pm, 0) + v
            proj = {m: v for m, v in proj.items() if v}
            if proj:
                out[(back_f[bf], back_g[bg])] = proj
        return out

    # -- the can maps ----------------------------------------------------
    def can_up(self, v) -> AlgElem:
        """Lift a K element (or basis key) to H^{2n}."""
        elem = v if isinstance(v, AlgElem) else self.vector(v)
        terms = {}
        for (b, a, m), c in elem.terms.items():
            key = (ext_diagram(b), ext_diagram(a), embed_mask(m, glue_extended(b, a)))
            terms[key] = c
        return AlgElem(self.big, terms)

    def can_down(self, w, target: tuple[str, str] | None = None) -> AlgElem:
        """Project an H^{2n} element (or basis key) living on extended diagrams."""
        elem = w if isinstance(w, AlgElem) else AlgElem(self.big, {w: 1})
        labels = {ext_diagram(s): s for s in self._labels}
        out: dict[Key, object] = {}
        for (tb, ta, m), c in elem.terms.items():
            if tb not in labels or ta not in labels:
                raise ValueError("basis vector does not live on extended diagrams")
            b, a = labels[tb], labels[ta]
            if target is not None and (b, a) != tuple(target):
                raise ValueError("pair mismatch")
            pm = project_mask(m, glue_extended(b, a))
            if pm is not None:
                k = (b, a, pm)
                out[k] = out.get(k, 0) + c
        return AlgElem(self, out)

    # -- distinguished elements ------------------------------------------
    def x_at(self, b: str, a: str, position: int) -> AlgElem:
        """X on the circle of W(ext b) ext a through an extended position."""
        g = glue_extended(b, a)
        if g.red:
            return self.zero()
        k = g.circle_of_point(position)
        if g.colors[k] != BLACK:
            return self.zero()
        blacks = g.indices(BLACK)
        return self.vector((b, a, 1 << blacks.index(k)))

    def ones(self, b: str, a: str) -> AlgElem:
        """The all-One labeling of a nonzero space (zero if the space is zero)."""
        if not self.space(b, a):
            return self.zero()
        return self.vector((b, a, 0))

    def label_str(self, label: str) -> str:
        return str(label)

    def mask_str(self, key: Key) -> str:
        g = glue_extended(key[0], key[1])
        black = [LABEL_NAMES[(key[2] >> k) & 1] for k in range(g.black)]
        return "⊗".join(black + ["1"] * g.green)


@lru_cache(maxsize=None)
def colored_algebra(n: int) -> ColoredAlgebra:
    return ColoredAlgebra(n)


def k_space(b: str, a: str) -> list[Key]:
    b, a = SignSeq(b), SignSeq(a)
    if b.n != a.n:
        raise ValueError("sequences of different length")
    return [(b, a, m) for m in colored_algebra(b.n).space(b, a)]


def k_multiply(f: AlgElem, g: AlgElem) -> AlgElem:
    return f * g


def k_idempotent(a: str) -> Key:
    return (SignSeq(a), SignSeq(a), 0)


def k_unit(n: int) -> AlgElem:
    return colored_algebra(n).unit()


def x_alpha(b: str, a: str, alpha) -> AlgElem:
    """X_alpha(b, a): X on the circle through the lambda-pair with left end alpha.

    ``alpha`` is a HalfIndex or an extended position; it has to be the left
    endpoint of a cup of ext a or ext b.
    """
    b, a = SignSeq(b), SignSeq(a)
    pos = alpha.i if isinstance(alpha, HalfIndex) else int(alpha)
    lefts = {i for i, _ in ext_diagram(a).arcs} | {i for i, _ in ext_diagram(b).arcs}
    if pos not in lefts:
        raise ValueError(f"position {pos} is not the left end of a lambda-pair")
    return colored_algebra(a.n).x_at(b, a, pos)


def star(x: AlgElem, y: AlgElem) -> AlgElem:
    """Componentwise product of two elements of the same block."""
    pairs = {(k[0], k[1]) for k in x.terms} | {(k[0], k[1]) for k in y.terms}
    if len(pairs) > 1:
        raise ValueError("star needs elements of one space")
    out: dict[Key, object] = {}
    for (b, a, m1), c1 in x.terms.items():
        for (_, _, m2), c2 in y.terms.items():
            if m1 & m2:
                continue
            k = (b, a, m1 | m2)
            out[k] = out.get(k, 0) + c1 * c2
    return AlgElem(x.algebra, out)
