"""Centers, commutator quotients, dimension tables and the cup-sequence corner."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .algebra import AlgElem, FiniteAlgebra
from .arc_algebra import arc_algebra
from .colored import colored_algebra
from .diagrams import PLUS, MINUS, cup_sequences, enumerate_sequences, lambda_pairs
from .gluing import BLACK, glue, glue_extended


@dataclass
class CenterBasis:
    algebra: str
    basis: list[AlgElem]
    graded: dict[int, int] = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return len(self.basis)


def _central_rows(alg: FiniteAlgebra, unknowns: list) -> list[dict[int, Fraction]]:
    """Rows of z v - v z = 0 for z in span(unknowns) and v running over the basis."""
    col = {k: i for i, k in enumerate(unknowns)}
    by_label = defaultdict(list)
    for k in unknowns:
        by_label[k[0]].append(k)
    rows: dict[tuple, dict[int, Fraction]] = defaultdict(lambda: defaultdict(Fraction))
    labs = alg.labels()
    for b in labs:
        for a in labs:
            space = alg.space(b, a)
            if not space:
                continue
            left_tab = alg.block(b, b, a) if by_label[b] else {}
            right_tab = alg.block(b, a, a) if by_label[a] else {}
            for mv in space:
                for z in by_label[b]:
                    for out, c in left_tab.get((z[2], mv), {}).items():
                        rows[(b, a, mv, out)][col[z]] += c
                for z in by_label[a]:
                    for out, c in right_tab.get((mv, z[2]), {}).items():
                        rows[(b, a, mv, out)][col[z]] -= c
    return [dict(r) for r in rows.values() if any(r.values())]


def center(alg: FiniteAlgebra, cross_check: bool = False) -> CenterBasis:
    """Basis of the center, computed degree by degree.

    A central z satisfies e_b z e_a = e_b e_a z = 0 for b != a, so only the
    diagonal blocks carry unknowns.  Homogeneous components of a central
    element are central, so each degree is solved separately.
    """
    labs = alg.labels()
    diag = [(a, a, m) for a in labs for m in alg.space(a, a)]
    by_degree = defaultdict(list)
    for k in diag:
        by_degree[alg.degree(k)].append(k)
    basis = []
    graded = {}
    for d in sorted(by_degree):
        unknowns = by_degree[d]
        rows = _central_rows(alg, unknowns)
        null = linalg.nullspace(rows, len(unknowns))
        if cross_check:
            r_p = linalg.rank_mod_p(rows, len(unknowns))
            if len(unknowns) - r_p != len(null):
                raise ArithmeticError(f"modular rank disagrees in degree {d}")
        if null:
            graded[d] = len(null)
        for vec in null:
            basis.append(AlgElem(alg, {unknowns[j]: c for j, c in vec.items()}))
    return CenterBasis(alg.name, basis, graded)


def top_degree(c: CenterBasis) -> tuple[int, int]:
    d = max(c.graded)
    return d, c.graded[d]


def commutator_quotient_dim(alg: FiniteAlgebra) -> int:
    """dim A - dim span{vw - wv} over basis pairs."""
    basis = alg.basis()
    col = {k: i for i, k in enumerate(basis)}
    labs = alg.labels()
    rows = []
    for x in labs:
        for y in labs:
            vs = alg.space(x, y)
            if not vs:
                continue
            for z in labs:
                ws = alg.space(y, z)
                if not ws:
                    continue
                fwd = alg.block(x, y, z)
                back = alg.block(y, x, y) if z == x else {}
                for mv in vs:
                    for mw in ws:
                        row = defaultdict(int)
                        for out, c in fwd.get((mv, mw), {}).items():
                            row[col[(x, z, out)]] += c
                        for out, c in back.get((mw, mv), {}).items():
                            row[col[(y, y, out)]] -= c
                        row = {j: v for j, v in row.items() if v}
                        if row:
                            rows.append(row)
    return len(basis) - linalg.rank(rows, len(basis))


def dim_table(n: int) -> list[list[int]]:
    """Entry [i][j] = dim of b K a for b, a the i-th and j-th sequences."""
    seqs = enumerate_sequences(n)
    table = []
    for b in seqs:
        row = []
        for a in seqs:
            g = glue_extended(b, a)
            row.append(0 if g.red else 2 ** g.black)
        table.append(row)
    return table


def dominant_sequence(n: int) -> str:
    return PLUS * n + MINUS * n


def brenti_columns(n: int) -> set[str]:
    """Sequences of the shape +^r -^s +^s -^r with r + s = n."""
    return {PLUS * r + MINUS * (n - r) + PLUS * (n - r) + MINUS * r for r in range(n + 1)}


def graded_dims(alg: FiniteAlgebra) -> dict[int, int]:
    out = defaultdict(int)
    for k in alg.basis():
        out[alg.degree(k)] += 1
    return dict(sorted(out.items()))


@dataclass
class CornerReport:
    n: int
    dims_match: bool
    circles_match: bool
    structure_match: bool | None
    degrees_match: bool
    end_dims: dict[str, int]
    corner_dim: int
    h_dim: int
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (self.dims_match and self.circles_match and self.degrees_match
                and self.structure_match is not False
                and all(v == 2 ** self.n for v in self.end_dims.values()))


def corner_isomorphism_check(n: int, structure: bool | None = None) -> CornerReport:
    """Compare the cup-sequence corner of K^n with H^n.

    The corner idempotent a corresponds to the cup diagram of its lambda-pairs;
    black circles of W(ext b) ext a correspond to circles of W(c_b) c_a shifted
    by n, both in order of smallest point.
    """
    if structure is None:
        structure = n <= 2
    K = colored_algebra(n)
    H = arc_algebra(n)
    corner = cup_sequences(n)
    cup = {a: lambda_pairs(a) for a in corner}
    dims_ok = circles_ok = deg_ok = True
    mismatches = []
    corner_dim = 0
    for b in corner:
        for a in corner:
            g = glue_extended(b, a)
            inner = glue(cup[b], cup[a])
            kdim = len(K.space(b, a))
            corner_dim += kdim
            if g.red or kdim != 2 ** len(inner.circles):
                dims_ok = False
                mismatches.append(("dim", b, a))
                continue
            blacks = [tuple(p - n for p in g.circles[i]) for i in g.indices(BLACK)]
            if blacks != list(inner.circles):
                circles_ok = False
                mismatches.append(("circles", b, a))
            for m in K.space(b, a):
                if K.degree((b, a, m)) != H.degree((cup[b], cup[a], m)):
                    deg_ok = False
                    mismatches.append(("degree", b, a, m))
    struct_ok = None
    if structure and dims_ok and circles_ok:
        struct_ok = True
        for c in corner:
            for b in corner:
                for a in corner:
                    if K.block(c, b, a) != H.block(cup[c], cup[b], cup[a]):
                        struct_ok = False
                        mismatches.append(("structure", c, b, a))
    end_dims = {a: len(K.space(a, a)) for a in corner}
    return CornerReport(n, dims_ok, circles_ok, struct_ok, deg_ok, end_dims,
                        corner_dim, H.dim(), mismatches)
