"""Tanisaki ideals, the f_{k,l} long-division construction, graded quotient dims.

Polynomials are sympy ``Poly`` objects over QQ (lexicographic monomial order
on the generators x1..xN, y1..yr).  Quotient dimensions come from exact
linear algebra on each degree slice: the slice of the ideal in degree d is
spanned by monomial * generator products.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from math import factorial, prod

import sympy
from sympy import QQ, Poly

from . import linalg

log = logging.getLogger(__name__)


def x_symbols(N: int) -> tuple[sympy.Symbol, ...]:
    return sympy.symbols(f"x1:{N + 1}")


def y_symbols(r: int) -> tuple[sympy.Symbol, ...]:
    return sympy.symbols(f"y1:{r + 1}")


def dual_partition(mu) -> tuple[int, ...]:
    parts = sorted((int(p) for p in mu), reverse=True)
    if not parts or any(p <= 0 for p in parts):
        raise ValueError("composition needs positive parts")
    return tuple(sum(1 for p in parts if p >= i) for i in range(1, parts[0] + 1))


def elementary(l: int, subset, N: int) -> dict[tuple[int, ...], int]:
    """e_l of the variables indexed by ``subset`` (0-based), as exponent dict."""
    out = {}
    for chosen in combinations(sorted(subset), l):
        exp = [0] * N
        for i in chosen:
            exp[i] = 1
        out[tuple(exp)] = 1
    return out


@dataclass(frozen=True)
class Generator:
    k: int
    l: int
    subset: tuple[int, ...]
    terms: dict

    def poly(self, N: int) -> Poly:
        return Poly.from_dict(self.terms, *x_symbols(N), domain=QQ)


@dataclass
class IdealBasis:
    mu: tuple[int, ...]
    dual: tuple[int, ...]
    N: int
    generators: list[Generator]


def allowed_l(k: int, mu, N: int) -> range:
    """l with k >= l > k - (mu'_{N-k+1} + ... + mu'_{r'})."""
    dual = dual_partition(mu)
    tail = sum(dual[N - k:])  # 1-based index N-k+1 onwards
    return range(max(k - tail + 1, 1), k + 1)


def tanisaki_generators(mu, N: int | None = None) -> IdealBasis:
    mu = tuple(int(p) for p in mu)
    total = sum(mu)
    if N is None:
        N = total
    if N != total:
        raise ValueError("N must equal the sum of the composition")
    gens = []
    for k in range(1, N + 1):
        for l in allowed_l(k, mu, N):
            for subset in combinations(range(N), k):
                gens.append(Generator(k, l, subset, elementary(l, subset, N)))
    return IdealBasis(mu, dual_partition(mu), N, gens)


def monomials(N: int, d: int) -> list[tuple[int, ...]]:
    out = []
    for combo in combinations_with_replacement(range(N), d):
        exp = [0] * N
        for i in combo:
            exp[i] += 1
        out.append(tuple(exp))
    return sorted(out, reverse=True)


@dataclass
class QuotientDims:
    hilbert: list[int]
    total: int
    top: int


def ideal_slice_rows(I: IdealBasis, d: int, col: dict) -> list[dict[int, int]]:
    rows = []
    for g in I.generators:
        if g.l > d:
            continue
        for m in monomials(I.N, d - g.l):
            rows.append({col[tuple(a + b for a, b in zip(e, m))]: c for e, c in g.terms.items()})
    return rows


def graded_quotient_dims(I: IdealBasis, degree_cutoff: int) -> QuotientDims:
    """Hilbert vector of S/I up to the cutoff; the last computed slice must vanish."""
    hilbert = []
    for d in range(degree_cutoff + 1):
        mons = monomials(I.N, d)
        col = {m: i for i, m in enumerate(mons)}
        rank = linalg.rank(ideal_slice_rows(I, d, col), len(mons))
        hilbert.append(len(mons) - rank)
    if hilbert[-1] != 0:
        raise ValueError(f"nonzero tail: degree {degree_cutoff} still has dimension {hilbert[-1]}")
    # a zero slice forces all higher slices to vanish (S_1 * I_d lies in I_{d+1})
    while len(hilbert) > 1 and hilbert[-1] == 0:
        hilbert.pop()
    return QuotientDims(hilbert, sum(hilbert), len(hilbert) - 1)


def expected_total(mu) -> int:
    return factorial(sum(mu)) // prod(factorial(p) for p in mu)


# ---------------------------------------------------------------------------
# the f_{k,l} polynomials


def f_construction(k: int, l: int, mu) -> Poly:
    """Remainder coefficient r_{k-l} of prod(t + x_i, i <= k) divided by prod(t + y_i)^{m_i}."""
    mu = tuple(int(p) for p in mu)
    N = sum(mu)
    r = len(mu)
    xs, ys = x_symbols(N), y_symbols(r)
    gens = xs + ys
    if not 1 <= l <= k <= N:
        raise ValueError("need 1 <= l <= k <= N")
    m = [max(p - N + k, 0) for p in mu]
    d = sum(m)
    if d == 0:
        log.warning("f_%d,%d for %s: divisor is 1, returning e_l directly", k, l, mu)
        return Poly(Poly.from_dict(elementary(l, range(k), N), *xs, domain=QQ).as_expr(), *gens, domain=QQ)
    if l <= k - d:
        raise ValueError(f"l = {l} outside the allowed range for k = {k}")
    t = sympy.Symbol("t")
    ring = QQ[gens]
    P = Poly(prod((t + xs[i] for i in range(k)), start=sympy.Integer(1)), t, domain=ring)
    Q = Poly(prod(((t + ys[i]) ** m[i] for i in range(r)), start=sympy.Integer(1)), t, domain=ring)
    coeff = P.rem(Q).coeff_monomial(t ** (k - l))
    return Poly(ring.to_sympy(coeff), *gens, domain=QQ)


def f_property_one(k: int, l: int, mu) -> bool:
    mu = tuple(mu)
    N, r = sum(mu), len(mu)
    f = f_construction(k, l, mu)
    zero = f.as_expr().subs({y: 0 for y in y_symbols(r)})
    want = Poly.from_dict(elementary(l, range(k), N), *x_symbols(N), domain=QQ).as_expr()
    return sympy.expand(zero - want) == 0


def patterned_points(mu, count: int, seed: int = 0, low: int = -20, high: int = 20):
    """Random (b, a): a has distinct entries, b lists a_i exactly mu_i times in random order."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        a = rng.sample(range(low, high + 1), len(mu))
        b = [ai for ai, p in zip(a, mu) for _ in range(p)]
        rng.shuffle(b)
        out.append((tuple(b), tuple(a)))
    return out


def f_property_two(k: int, l: int, mu, count: int = 100, seed: int = 0) -> bool:
    mu = tuple(mu)
    N, r = sum(mu), len(mu)
    f = f_construction(k, l, mu)
    for b, a in patterned_points(mu, count, seed):
        if f.eval(dict(zip(x_symbols(N) + y_symbols(r), b + a))) != 0:
            return False
    return True


def is_homogeneous(f: Poly, degree: int) -> bool:
    return all(sum(m) == degree for m in f.monoms()) if not f.is_zero else True
