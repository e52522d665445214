"""Exact rank and nullspace of sparse rational matrices.

Rows are dicts ``{column: coefficient}``.  The heavy lifting is done by
sympy's sparse ``DomainMatrix`` over QQ; :func:`rank_mod_p` gives an
independent integer cross-check through the compiled kernels.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from . import _kernels

Row = Mapping[int, object]


def _qq(x) -> object:
    x = Fraction(x)
    return QQ(x.numerator, x.denominator)


def _matrix(rows: Sequence[Row], ncols: int) -> DomainMatrix:
    data = {}
    for i, row in enumerate(rows):
        clean = {int(j): _qq(v) for j, v in row.items() if v != 0}
        if clean:
            data[i] = clean
    return DomainMatrix(data, (max(len(rows), 1), ncols), QQ)


def rank(rows: Sequence[Row], ncols: int) -> int:
    if ncols == 0 or not rows:
        return 0
    return int(_matrix(rows, ncols).rank())


def nullspace(rows: Sequence[Row], ncols: int) -> list[dict[int, Fraction]]:
    """Basis of {v : row . v = 0 for all rows}, as sparse dicts."""
    if ncols == 0:
        return []
    if not rows:
        return [{j: Fraction(1)} for j in range(ncols)]
    ns = _matrix(rows, ncols).nullspace().to_sdm()
    out = []
    for _, vec in sorted(ns.items()):
        out.append({j: Fraction(int(v.numerator), int(v.denominator)) for j, v in vec.items()})
    return out


def rank_mod_p(rows: Sequence[Row], ncols: int, p: int = _kernels.PRIME) -> int:
    """Rank over GF(p) of a matrix with integer entries (a lower bound for the rank over Q)."""
    if ncols == 0 or not rows:
        return 0
    dense = np.zeros((len(rows), ncols), dtype=np.int64)
    for i, row in enumerate(rows):
        for j, v in row.items():
            v = Fraction(v)
            if v.denominator != 1:
                raise ValueError("modular rank needs integer entries")
            dense[i, j] = int(v.numerator) % p
    return _kernels.rank_mod_p(dense, p)
