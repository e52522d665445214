"""The dual numbers R = Q[X]/(X^2) as a Frobenius algebra, and the arc algebra H^m.

Labelings of circles are bitmasks over the circles of a glued diagram in
their canonical order (bit k set means circle k carries X).
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import _kernels
from .algebra import AlgElem, FiniteAlgebra, Key, popcount
from .diagrams import CupDiagram, cup_diagrams
from .gluing import glue

ONE = 0
X = 1
LABEL_NAMES = {ONE: "1", X: "X"}


# ---------------------------------------------------------------------------
# Frobenius structure on R, labels are ONE and X


def frob_mult(x: int, y: int) -> dict[int, int]:
    if x == X and y == X:
        return {}
    return {x | y: 1}


def frob_comult(x: int) -> dict[tuple[int, int], int]:
    if x == X:
        return {(X, X): 1}
    return {(X, ONE): 1, (ONE, X): 1}


def frob_unit() -> dict[int, int]:
    return {ONE: 1}


def frob_counit(x: int) -> int:
    return 1 if x == X else 0


def frobenius(op: str, *args):
    table = {"mult": frob_mult, "comult": frob_comult, "unit": frob_unit, "counit": frob_counit}
    if op not in table:
        raise ValueError(f"unknown Frobenius operation {op!r}")
    return table[op](*args)


# ---------------------------------------------------------------------------
# surgery plans


@dataclass(frozen=True)
class SurgeryPlan:
    """Merge/split steps turning W(c)b next to W(b)a into W(c)a.

    Before the first step the circles of W(b)a come first, then those of W(c)b,
    each group in canonical order; after the last step the circles are in the
    canonical order of W(c)a.
    """

    kinds: np.ndarray
    in0: np.ndarray
    in1: np.ndarray
    out0: np.ndarray
    out1: np.ndarray
    remap: np.ndarray
    n_old: np.ndarray
    n_lower: int
    n_final: int


def _components(nbr: list[list[int]]) -> list[int]:
    lab = [-1] * len(nbr)
    k = 0
    for s in range(len(nbr)):
        if lab[s] >= 0:
            continue
        stack = [s]
        lab[s] = k
        while stack:
            v = stack.pop()
            for w in nbr[v]:
                if lab[w] < 0:
                    lab[w] = k
                    stack.append(w)
        k += 1
    return lab


def surgery_plan(c: CupDiagram, b: CupDiagram, a: CupDiagram,
                 order: Sequence[int] | None = None) -> SurgeryPlan:
    """Plan for _cH_b x _bH_a; ``order`` permutes the cups of b (default left to right)."""
    if not (c.npoints == b.npoints == a.npoints):
        raise ValueError("diagrams of different sizes")
    return _plan(c, b, a, tuple(order) if order is not None else None)


@lru_cache(maxsize=None)
def _plan(c: CupDiagram, b: CupDiagram, a: CupDiagram, order) -> SurgeryPlan:
    npts = a.npoints
    nbr: list[list[int]] = [[] for _ in range(2 * npts)]

    def link(u, v):
        nbr[u].append(v)
        nbr[v].append(u)

    # lower points 0..npts-1 carry a and the mirror of b; upper points carry b and c
    for i, j in a.arcs:
        link(i - 1, j - 1)
    for i, j in b.arcs:
        link(i - 1, j - 1)
        link(npts + i - 1, npts + j - 1)
    for i, j in c.arcs:
        link(npts + i - 1, npts + j - 1)

    lab = _components(nbr)
    n_lower = len(set(lab[:npts]))
    cups = list(b.arcs) if order is None else [b.arcs[k] for k in order]
    steps = []
    for i, j in cups:
        pi, pj, qi, qj = i - 1, j - 1, npts + i - 1, npts + j - 1
        old = lab
        n_old = max(old) + 1
        reps = {}
        for node, c_ in enumerate(old):
            reps.setdefault(c_, node)
        nbr[pi].remove(pj)
        nbr[pj].remove(pi)
        nbr[qi].remove(qj)
        nbr[qj].remove(qi)
        link(pi, qi)
        link(pj, qj)
        lab = _components(nbr)
        ci, cq = old[pi], old[qi]
        remap = [-1] * n_old
        for c_ in range(n_old):
            if c_ not in (ci, cq):
                remap[c_] = lab[reps[c_]]
        if ci != cq:
            steps.append((_kernels.MERGE, ci, cq, lab[pi], -1, remap, n_old))
        else:
            if lab[pi] == lab[pj]:
                raise RuntimeError("surgery neither merged nor split circles")
            steps.append((_kernels.SPLIT, ci, -1, lab[pi], lab[pj], remap, n_old))
    width = max([s[6] for s in steps] + [1])
    remap_arr = np.full((len(steps), width), -1, dtype=np.int64)
    for k, s in enumerate(steps):
        remap_arr[k, :s[6]] = s[5]

    def col(idx):
        return np.array([s[idx] for s in steps], dtype=np.int64)

    return SurgeryPlan(col(0), col(1), col(2), col(3), col(4), remap_arr, col(6),
                       n_lower, max(lab) + 1)


def run_plan(plan: SurgeryPlan, fmasks: Sequence[int], gmasks: Sequence[int]
             ) -> dict[tuple[int, int], dict[int, int]]:
    """Products of every labeling in ``fmasks`` (on W(c)b) with every one in ``gmasks`` (on W(b)a)."""
    fm = np.asarray(fmasks, dtype=np.int64)
    gm = np.asarray(gmasks, dtype=np.int64)
    if fm.size == 0 or gm.size == 0:
        return {}
    masks = (gm[None, :] | (fm[:, None] << plan.n_lower)).ravel()
    src = np.arange(masks.size, dtype=np.int64)
    coeffs = np.ones(masks.size, dtype=np.int64)
    masks, coeffs, src = _kernels.apply_surgeries(
        masks, coeffs, src, plan.kinds, plan.in0, plan.in1, plan.out0, plan.out1,
        plan.remap, plan.n_old)
    out: dict[tuple[int, int], dict[int, int]] = {}
    ng = gm.size
    acc: dict[tuple[int, int], defaultdict] = defaultdict(lambda: defaultdict(int))
    for m, cf, s in zip(masks.tolist(), coeffs.tolist(), src.tolist()):
        acc[(int(fm[s // ng]), int(gm[s % ng]))][m] += cf
    for key, terms in acc.items():
        terms = {m: v for m, v in terms.items() if v}
        if terms:
            out[key] = terms
    return out


# ---------------------------------------------------------------------------
# the arc algebra


class ArcAlgebra(FiniteAlgebra):
    """H^m with idempotents labelled by Cup(m)."""

    name = "H"

    def __init__(self, m: int):
        super().__init__()
        if m < 1:
            raise ValueError("m must be positive")
        self.m = m
        self._labels = None

    def labels(self) -> list[CupDiagram]:
        if self._labels is None:
            self._labels = cup_diagrams(self.m)
        return self._labels

    def circles(self, b: CupDiagram, a: CupDiagram) -> int:
        return len(glue(b, a).circles)

    def space(self, b: CupDiagram, a: CupDiagram) -> list[int]:
        return list(range(2 ** self.circles(b, a)))

    def degree(self, key: Key) -> int:
        b, a, mask = key
        k = self.circles(b, a)
        x = popcount(mask)
        return x - (k - x) + self.m

    def _compute_block(self, c, b, a):
        plan = surgery_plan(c, b, a)
        return run_plan(plan, self.space(c, b), self.space(b, a))

    def product_with_order(self, f: Key, g: Key, order: Sequence[int]) -> dict[Key, int]:
        if f[1] != g[0]:
            return {}
        plan = surgery_plan(f[0], f[1], g[1], order)
        terms = run_plan(plan, [f[2]], [g[2]]).get((f[2], g[2]), {})
        return {(f[0], g[1], m): v for m, v in terms.items()}

    def label_str(self, label: CupDiagram) -> str:
        return str(label)

    def mask_str(self, key: Key) -> str:
        k = self.circles(key[0], key[1])
        return "⊗".join(LABEL_NAMES[(key[2] >> i) & 1] for i in range(k))


@lru_cache(maxsize=None)
def arc_algebra(m: int) -> ArcAlgebra:
    return ArcAlgebra(m)


def h_multiply(f: AlgElem, g: AlgElem) -> AlgElem:
    return f * g


def h_degree(key: Key, algebra: ArcAlgebra) -> int:
    return algebra.degree(key)


def h_basis(m: int) -> list[Key]:
    return arc_algebra(m).basis()


def h_dim(m: int) -> int:
    return arc_algebra(m).dim()
