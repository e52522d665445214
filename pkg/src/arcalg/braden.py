"""Braden's generators evaluated in K^n, relation checks, regraded generators.

Idempotent labels are extended sequences (length 4n).  Generators are sent
into K^n as follows, where lam -> nu flips the lambda-pair (alpha, beta)
whose parent is (alpha', beta'):

* e_lam           -> e_a
* t_{alpha,lam}   -> e_lam + eta(beta) X_alpha
* t_{beta,lam}    -> e_lam - eta(beta) X_alpha
* p(nu, lam)      -> 1 + X_alpha / 2          in  b K a
* p(lam, nu)      -> 1 + X_alpha' / 2         in  a K b
* mu(x, y)        -> e_x + p(x, y) p(y, x)

and for lam -> nu the closed form e + X_alpha + X_alpha' + X_alpha * X_alpha'
of mu(lam, nu) is checked against the last line.
"""
from __future__ import annotations

from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .algebra import AlgElem
from .colored import ColoredAlgebra, colored_algebra, star
from .diagrams import (ExtSeq, arrow, diamonds, enumerate_sequences, eta_at, extend,
                       lambda_pairs, linked, padded_pairs, parent)

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class BradenGen:
    kind: str
    lam: str
    nu: str | None = None
    pos: int | None = None

    def __post_init__(self):
        if self.kind not in ("e", "t", "p", "mu"):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        ExtSeq(self.lam)
        if self.kind in ("p", "mu"):
            if self.nu is None or not linked(self.lam, self.nu):
                raise ValueError(f"{self.kind} needs linked sequences")
            ExtSeq(self.nu)
        if self.kind == "t" and not (self.pos and 1 <= self.pos <= len(self.lam)):
            raise ValueError("t needs a position inside the window")


def ext_labels(n: int) -> list[ExtSeq]:
    return [extend(a) for a in enumerate_sequences(n)]


def inner_label(lam: str) -> str:
    return ExtSeq(lam).inner


def edges(n: int) -> list[tuple[str, str, tuple[int, int]]]:
    """All arrows lam -> nu between in-box sequences with the flipped pair."""
    out = []
    for lam in ext_labels(n):
        for nu in ext_labels(n):
            pair = arrow(lam, nu)
            if pair is not None:
                out.append((str(lam), str(nu), pair))
    return out


def parent_pair(lam: str, pair: tuple[int, int]) -> tuple[int, int] | None:
    return parent(lambda_pairs(lam), pair)


class Evaluator:
    """The map from Braden's generators into K^n, with memoised images."""

    def __init__(self, n: int):
        self.n = n
        self.K: ColoredAlgebra = colored_algebra(n)
        self._cache: dict[BradenGen, AlgElem] = {}

    def X(self, lam: str, nu: str, pos: int | None) -> AlgElem:
        if pos is None:
            return self.K.zero()
        return self.K.x_at(inner_label(lam), inner_label(nu), pos)

    def e(self, lam: str) -> AlgElem:
        return self.K.idempotent(inner_label(lam))

    def __call__(self, g: BradenGen) -> AlgElem:
        img = self._cache.get(g)
        if img is None:
            img = self._eval(g)
            self._cache[g] = img
        return img

    def _eval(self, g: BradenGen) -> AlgElem:
        K = self.K
        if g.kind == "e":
            return self.e(g.lam)
        if g.kind == "t":
            p, q = lambda_pairs(g.lam).arc_at(g.pos)
            sign = eta_at(q) if g.pos == p else -eta_at(q)
            return self.e(g.lam) + sign * self.X(g.lam, g.lam, p)
        if g.kind == "p":
            x, y = g.lam, g.nu
            fwd = arrow(x, y)
            if fwd is not None:
                # generator p(lam, nu) with lam -> nu, image in a K b
                par = parent_pair(x, fwd)
                return K.ones(inner_label(x), inner_label(y)) + HALF * self.X(x, y, par and par[0])
            pair = arrow(y, x)
            return K.ones(inner_label(x), inner_label(y)) + HALF * self.X(x, y, pair[0])
        # mu(x, y) through e_x + p(x, y) p(y, x)
        return self.e(g.lam) + self(BradenGen("p", g.lam, g.nu)) * self(BradenGen("p", g.nu, g.lam))

    def t(self, lam: str, pos: int) -> AlgElem:
        return self(BradenGen("t", lam, pos=pos))

    def p(self, x: str, y: str) -> AlgElem:
        return self(BradenGen("p", x, y))

    def mu(self, x: str, y: str) -> AlgElem:
        return self(BradenGen("mu", x, y))

    def mu_closed_form(self, lam: str, nu: str) -> AlgElem:
        pair = arrow(lam, nu)
        if pair is None:
            raise ValueError("closed form needs lam -> nu")
        par = parent_pair(lam, pair)
        xa = self.X(lam, lam, pair[0])
        xp = self.X(lam, lam, par and par[0])
        return self.e(lam) + xa + xp + star(xa, xp)


def eval_E(g: BradenGen) -> AlgElem:
    return _evaluator(len(g.lam) // 4)(g)


@lru_cache(maxsize=None)
def _evaluator(n: int) -> Evaluator:
    return Evaluator(n)


# ---------------------------------------------------------------------------
# unipotent calculus


def nilpotent_powers(y: AlgElem, bound: int = 64) -> list[AlgElem]:
    """[y, y^2, ...] up to the last nonzero power."""
    out = []
    cur = y
    while cur:
        out.append(cur)
        if len(out) > bound:
            raise ArithmeticError("element is not nilpotent within the bound")
        cur = cur * y
    return out


def unipotent_log(u: AlgElem, e: AlgElem) -> AlgElem:
    """ln(e + y) = y - y^2/2 + y^3/3 - ... for nilpotent y = u - e."""
    out = u.algebra.zero()
    for k, yk in enumerate(nilpotent_powers(u - e), start=1):
        out = out + Fraction((-1) ** (k + 1), k) * yk
    return out


def unipotent_inverse(u: AlgElem, e: AlgElem) -> AlgElem:
    out = e
    for k, yk in enumerate(nilpotent_powers(u - e), start=1):
        out = out + (-1) ** k * yk
    return out


def ck_table(depth: int) -> list[Fraction]:
    """c_0 = 1, c_k = ((-1)^k/(k+1) - sum_{l+m=k, 0<l,m<k} c_l c_m) / 2."""
    c = [Fraction(1)]
    for k in range(1, depth + 1):
        s = sum((c[l] * c[k - l] for l in range(1, k)), Fraction(0))
        c.append((Fraction((-1) ** k, k + 1) - s) / 2)
    return c


# ---------------------------------------------------------------------------
# relation checks


@dataclass
class FamilyResult:
    instances: int = 0
    failures: list = field(default_factory=list)

    def record(self, ok: bool, info) -> None:
        self.instances += 1
        if not ok:
            self.failures.append(info)


FAMILIES = ("i", "ii", "iii", "iv", "v", "vi", "vi'", "vii", "viii", "ix", "zero")


def _check_family(n: int, fam: str) -> tuple[FamilyResult, dict]:
    E = _evaluator(n)
    K = E.K
    labs = [str(x) for x in ext_labels(n)]
    positions = range(1, 4 * n + 1)
    res = FamilyResult()
    extra: dict = {}
    arrows = edges(n)
    if fam == "i":
        total = K.zero()
        for lam in labs:
            total = total + E.e(lam)
        res.record(total == K.unit(), "sum of idempotents")
    elif fam == "ii":
        for lam, nu in product(labs, repeat=2):
            lhs = E.e(lam) * E.e(nu)
            rhs = E.e(lam) if lam == nu else K.zero()
            res.record(lhs == rhs, (lam, nu))
    elif fam == "iii":
        for lam, nu, _ in arrows:
            res.record(E.mu_closed_form(lam, nu) == E.e(lam) + E.p(lam, nu) * E.p(nu, lam), (lam, nu))
    elif fam == "iv":
        for lam, nu, _ in arrows:
            for x, y in ((lam, nu), (nu, lam)):
                for pos in positions:
                    lhs = E.t(x, pos) * E.p(x, y)
                    rhs = E.p(x, y) * E.t(y, pos)
                    res.record(lhs == rhs, (x, y, pos))
    elif fam == "v":
        for lam, nu in product(labs, repeat=2):
            if lam == nu:
                continue
            for a, b in product(positions, repeat=2):
                res.record((E.t(lam, a) * E.t(nu, b)).is_zero(), (lam, nu, a, b))
    elif fam == "vi":
        for lam in labs:
            for a, b in product(positions, repeat=2):
                res.record(E.t(lam, a) * E.t(lam, b) == E.t(lam, b) * E.t(lam, a), (lam, a, b))
    elif fam == "vi'":
        for lam in labs:
            for p, q in lambda_pairs(lam).arcs:
                res.record(E.t(lam, p) * E.t(lam, q) == E.e(lam), (lam, p, q))
    elif fam == "vii":
        for lam in labs:
            for pos in positions:
                if pos <= n or pos > 3 * n:
                    res.record(E.t(lam, pos) == E.e(lam), (lam, pos))
    elif fam == "viii":
        for lam, nu, (a, b) in arrows:
            par = parent_pair(lam, (a, b))
            if par is None:
                res.record(False, (lam, nu, "no parent"))
                continue
            bp = par[1]
            for x, y in ((nu, lam), (lam, nu)):
                m = E.mu(x, y)
                lhs = m if eta_at(b) == 1 else unipotent_inverse(m, E.e(x))
                rhs = E.t(x, a) * E.t(x, bp)
                res.record(lhs == rhs, (x, y, a, bp))
    elif fam == "ix":
        for d in diamonds(n):
            if not d.in_box:
                continue
            v = d.vertices
            for s in range(4):
                start, mid1, end, mid2 = v[s], v[(s + 1) % 4], v[(s + 2) % 4], v[(s + 3) % 4]
                lhs = E.p(end, mid1) * E.p(mid1, start)
                rhs = E.p(end, mid2) * E.p(mid2, start)
                res.record(lhs == rhs, (start, end, mid1, mid2))
    elif fam == "zero":
        # lam3 is outside the box; lam1 is the in-box vertex opposite it
        compositions = defaultdict(lambda: [0, 0])
        for d in diamonds(n):
            if d.in_box:
                continue
            lam, lam1, lam2 = d.lam, d.lam1, d.lam2
            paths = {
                "p(lam,lam1)p(lam1,lam2)": E.p(lam, lam1) * E.p(lam1, lam2),
                "p(lam2,lam1)p(lam1,lam)": E.p(lam2, lam1) * E.p(lam1, lam),
            }
            loops = {
                "p(lam,lam1)p(lam1,lam)": E.p(lam, lam1) * E.p(lam1, lam),
                "p(lam2,lam1)p(lam1,lam2)": E.p(lam2, lam1) * E.p(lam1, lam2),
            }
            for name, val in paths.items():
                res.record(val.is_zero(), (lam, lam1, lam2, name))
            for name, val in {**paths, **loops}.items():
                compositions[name][0] += 1
                compositions[name][1] += int(val.is_zero())
        extra["zero_case_compositions"] = {k: {"instances": v[0], "vanishing": v[1]}
                                           for k, v in compositions.items()}
    else:
        raise ValueError(f"unknown relation family {fam!r}")
    return res, extra


def _run_family(args):
    n, fam = args
    res, extra = _check_family(n, fam)
    return fam, res, extra


def check_relations(n: int, workers: int = 1) -> dict:
    """Evaluate every relation instance through the map into K^n.

    Returns {family: {"instances": int, "failures": [...]}} plus, under the
    key "notes", which directed compositions vanish around out-of-box diamonds.
    """
    tasks = [(n, fam) for fam in FAMILIES]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_family, tasks))
    else:
        results = [_run_family(t) for t in tasks]
    report: dict = {}
    notes: dict = {}
    for fam, res, extra in sorted(results, key=lambda r: FAMILIES.index(r[0])):
        failures = [list(map(str, f)) if isinstance(f, tuple) else str(f) for f in res.failures]
        report[fam] = {"instances": res.instances, "failures": failures}
        notes.update(extra)
    report["notes"] = notes
    return report


def relations_ok(report: dict) -> bool:
    return all(not v["failures"] for k, v in report.items() if k != "notes")


def parentswap_holds(lam: str, nu: str) -> bool:
    """The flipped pair and its parent become two adjacent pairs of nu, with opposite eta."""
    pair = arrow(lam, nu)
    if pair is None:
        raise ValueError("needs lam -> nu")
    a, b = pair
    par = parent_pair(lam, pair)
    if par is None:
        return False
    ap, bp = par
    pairs_nu = padded_pairs(nu)
    return (pairs_nu.get(a) == (ap, a) and pairs_nu.get(b) == (b, bp)
            and eta_at(b) == -eta_at(bp))


# ---------------------------------------------------------------------------
# regraded generators


@dataclass
class RegradedEdge:
    lam: str
    nu: str
    p_tilde: AlgElem
    q_tilde: AlgElem
    ln_mu_nu_lam: AlgElem
    ln_mu_lam_nu: AlgElem
    product_ok: bool
    reverse_ok: bool


@dataclass
class RegradedReport:
    n: int
    ck: list[Fraction]
    ln_t: dict
    edges: list[RegradedEdge]
    degrees: dict[str, set]

    @property
    def ok(self) -> bool:
        want = {"e": {0}, "ln_t": {2}, "p_tilde": {1}, "ln_mu": {2}}
        return (all(self.degrees[k] == want[k] for k in want)
                and all(e.product_ok and e.reverse_ok for e in self.edges))


def regraded_generators(n: int) -> RegradedReport:
    E = _evaluator(n)
    labs = [str(x) for x in ext_labels(n)]
    degrees: dict[str, set] = {"e": set(), "ln_t": set(), "p_tilde": set(), "ln_mu": set()}

    def note(kind, elem):
        if elem.is_zero():
            return
        d = elem.homogeneous_degree()
        degrees[kind].add(d if d is not None else "mixed")

    ln_t = {}
    for lam in labs:
        note("e", E.e(lam))
        for pos in range(1, 4 * n + 1):
            val = unipotent_log(E.t(lam, pos), E.e(lam))
            ln_t[(lam, pos)] = val
            note("ln_t", val)
    # nilpotency of x = qp bounds the series; 4n + 2 terms is ample and checked below
    ck = ck_table(4 * n + 2)
    out = []
    for lam, nu, _ in edges(n):
        p = E.p(nu, lam)
        q = E.p(lam, nu)
        x = q * p
        xs = nilpotent_powers(x)
        if len(xs) >= len(ck):
            raise ArithmeticError("c_k table too short for the nilpotency index")
        p_tilde = p
        q_tilde = q
        for k, xk in enumerate(xs, start=1):
            p_tilde = p_tilde + ck[k] * (p * xk)
            q_tilde = q_tilde + ck[k] * (xk * q)
        ln_nl = unipotent_log(E.mu(nu, lam), E.e(nu))
        ln_ln = unipotent_log(E.mu(lam, nu), E.e(lam))
        note("p_tilde", p_tilde)
        note("p_tilde", q_tilde)
        note("ln_mu", ln_nl)
        note("ln_mu", ln_ln)
        out.append(RegradedEdge(lam, nu, p_tilde, q_tilde, ln_nl, ln_ln,
                                p_tilde * q_tilde == ln_nl, q_tilde * p_tilde == ln_ln))
    return RegradedReport(n, ck, ln_t, out, degrees)


# ---------------------------------------------------------------------------
# quiver and generation


def ext_quiver(n: int) -> list[list[int]]:
    labs = [str(x) for x in ext_labels(n)]
    return [[int(linked(x, y)) for y in labs] for x in labs]


def degree_one_dims(n: int) -> list[list[int]]:
    K = colored_algebra(n)
    labs = K.labels()
    return [[sum(1 for m in K.space(b, a) if K.degree((b, a, m)) == 1) for a in labs] for b in labs]


def all_generators(n: int) -> list[AlgElem]:
    E = _evaluator(n)
    labs = [str(x) for x in ext_labels(n)]
    gens = [E.e(lam) for lam in labs]
    gens += [E.t(lam, pos) for lam in labs for pos in range(1, 4 * n + 1)]
    for lam, nu, _ in edges(n):
        gens += [E.p(lam, nu), E.p(nu, lam), E.mu(lam, nu), E.mu(nu, lam)]
    return gens


def _independent(cols: list[AlgElem], index: dict) -> list[int]:
    """Indices of a maximal independent subset, earlier vectors preferred."""
    data = defaultdict(dict)
    for j, v in enumerate(cols):
        for k, c in v.terms.items():
            data[index[k]][j] = QQ(c.numerator, c.denominator)
    M = DomainMatrix(dict(data), (len(index), len(cols)), QQ)
    _, pivots = M.rref()
    return list(pivots)


def generation_check(n: int) -> tuple[bool, int, int]:
    """Close the generator images under left multiplication by generators.

    Returns (spans everything, span dimension, dim K^n).
    """
    K = colored_algebra(n)
    index = {k: i for i, k in enumerate(K.basis())}
    gens = all_generators(n)
    span: list[AlgElem] = []
    fresh = [g for g in gens if g]
    while fresh:
        cand = span + fresh
        keep = _independent(cand, index)
        new = [cand[j] for j in keep if j >= len(span)]
        span = [cand[j] for j in keep]
        fresh = []
        for g in gens:
            for v in new:
                w = g * v
                if w:
                    fresh.append(w)
        if len(span) == len(index):
            break
    return len(span) == len(index), len(span), len(index)
