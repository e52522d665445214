"""Finite-dimensional algebras with idempotent-indexed blocks, and their elements.

A basis vector is a key ``(left, right, mask)``: it lives in the block
``left A right`` and ``mask`` records which circles carry X.  A product
``f * g`` is nonzero only when ``f``'s right label equals ``g``'s left label.
"""
from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Hashable, Iterable, Mapping

Key = tuple[Hashable, Hashable, int]


def popcount(x: int) -> int:
    return bin(x).count("1")


def frac_str(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


class FiniteAlgebra:
    """Shared machinery; subclasses provide labels, spaces, degrees and block tables."""

    name = "algebra"

    def __init__(self):
        self._blocks: dict[tuple, dict] = {}

    # -- to be provided by subclasses ------------------------------------
    def labels(self) -> list:
        raise NotImplementedError

    def space(self, left, right) -> list[int]:
        raise NotImplementedError

    def degree(self, key: Key) -> int:
        raise NotImplementedError

    def _compute_block(self, left, mid, right) -> dict[tuple[int, int], dict[int, int]]:
        raise NotImplementedError

    def label_str(self, label) -> str:
        return str(label)

    def mask_str(self, key: Key) -> str:
        return format(key[2], "b")

    # -- derived ---------------------------------------------------------
    def block(self, left, mid, right) -> dict[tuple[int, int], dict[int, int]]:
        """Structure constants for ``left A mid`` times ``mid A right``."""
        k = (left, mid, right)
        tab = self._blocks.get(k)
        if tab is None:
            tab = self._compute_block(left, mid, right)
            self._blocks[k] = tab
        return tab

    def basis(self) -> list[Key]:
        labs = self.labels()
        return [(b, a, m) for b in labs for a in labs for m in self.space(b, a)]

    def dim(self) -> int:
        labs = self.labels()
        return sum(len(self.space(b, a)) for b in labs for a in labs)

    def zero(self) -> "AlgElem":
        return AlgElem(self, {})

    def vector(self, key: Key, coeff=1) -> "AlgElem":
        return AlgElem(self, {key: Fraction(coeff)})

    def idempotent(self, label) -> "AlgElem":
        return self.vector((label, label, 0))

    def unit(self) -> "AlgElem":
        return AlgElem(self, {(a, a, 0): Fraction(1) for a in self.labels()})

    def mul_basis(self, f: Key, g: Key) -> dict[Key, int]:
        if f[1] != g[0]:
            return {}
        terms = self.block(f[0], f[1], g[1]).get((f[2], g[2]), {})
        return {(f[0], g[1], m): c for m, c in terms.items()}

    def multiply(self, f: "AlgElem", g: "AlgElem") -> "AlgElem":
        by_left = defaultdict(list)
        for (l, r, m), c in g.terms.items():
            by_left[l].append((r, m, c))
        out: dict[Key, Fraction] = defaultdict(Fraction)
        for (fl, fr, fm), fc in f.terms.items():
            for gr, gm, gc in by_left.get(fr, ()):
                terms = self.block(fl, fr, gr).get((fm, gm))
                if not terms:
                    continue
                c = fc * gc
                for m, k in terms.items():
                    out[(fl, gr, m)] += c * k
        return AlgElem(self, out)


class AlgElem:
    """Sparse exact linear combination of basis vectors of one algebra."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: FiniteAlgebra, terms: Mapping[Key, Fraction] | Iterable = ()):
        self.algebra = algebra
        items = terms.items() if isinstance(terms, Mapping) else terms
        self.terms = {k: Fraction(v) for k, v in items if v != 0}

    def _check(self, other: "AlgElem"):
        if other.algebra is not self.algebra:
            raise ValueError("elements of different algebras")

    def __add__(self, other: "AlgElem") -> "AlgElem":
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return AlgElem(self.algebra, out)

    def __neg__(self) -> "AlgElem":
        return AlgElem(self.algebra, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "AlgElem") -> "AlgElem":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, AlgElem):
            self._check(other)
            return self.algebra.multiply(self, other)
        c = Fraction(other)
        return AlgElem(self.algebra, {k: v * c for k, v in self.terms.items()})

    def __rmul__(self, other):
        c = Fraction(other)
        return AlgElem(self.algebra, {k: c * v for k, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, AlgElem):
            return self.algebra is other.algebra and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __pow__(self, k: int) -> "AlgElem":
        if k < 0:
            raise ValueError("negative powers need an inverse")
        out = None
        for _ in range(k):
            out = self if out is None else out * self
        if out is None:
            raise ValueError("zeroth power needs a block context")
        return out

    def degrees(self) -> set[int]:
        return {self.algebra.degree(k) for k in self.terms}

    def homogeneous_degree(self) -> int | None:
        """The common degree of all terms, or None if mixed or zero."""
        ds = self.degrees()
        return ds.pop() if len(ds) == 1 else None

    def component(self, degree: int) -> "AlgElem":
        return AlgElem(self.algebra, {k: v for k, v in self.terms.items()
                                      if self.algebra.degree(k) == degree})

    def to_json(self) -> dict[str, str]:
        alg = self.algebra
        return {f"{alg.label_str(l)}|{alg.label_str(r)}|{alg.mask_str((l, r, m))}": frac_str(c)
                for (l, r, m), c in sorted(self.terms.items(), key=lambda kv: _sort_key(kv[0]))}

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        alg = self.algebra
        parts = []
        for (l, r, m), c in sorted(self.terms.items(), key=lambda kv: _sort_key(kv[0])):
            head = "" if c == 1 else f"{c}*"
            parts.append(f"{head}{alg.label_str(l)}|{alg.label_str(r)}|{alg.mask_str((l, r, m))}")
        return " + ".join(parts)


def _sort_key(key: Key):
    return (str(key[0]), str(key[1]), key[2])
