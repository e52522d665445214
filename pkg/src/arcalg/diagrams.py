"""Sign sequences, partitions in a box, cup diagrams and the bijections among them.

Positions are 1-based integers.  On an extended sequence of length 4n the
position ``i`` stands for the half-integer ``i - 2n - 1/2``; see
:class:`HalfIndex`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Sequence

MINUS = "-"
PLUS = "+"

_UNICODE_SIGNS = str.maketrans({"−": "-", "–": "-"})


def _clean(signs) -> str:
    if isinstance(signs, str):
        text = signs.translate(_UNICODE_SIGNS).replace(",", "").replace(" ", "")
        text = text.strip("()[]")
    else:
        text = "".join("-" if s in ("-", -1, "−") else "+" if s in ("+", 1) else "?" for s in signs)
    if any(ch not in "+-" for ch in text):
        raise ValueError(f"not a sign sequence: {signs!r}")
    return text


class SignSeq(str):
    """Balanced string over ``+``/``-`` with n of each."""

    def __new__(cls, signs):
        text = _clean(signs)
        if not text or len(text) % 2 or text.count(PLUS) != len(text) // 2:
            raise ValueError(f"sequence {text!r} is not balanced")
        return super().__new__(cls, text)

    @property
    def n(self) -> int:
        return len(self) // 2


class ExtSeq(str):
    """Length-4n sequence: n minuses, a balanced middle part, n pluses."""

    def __new__(cls, signs):
        text = _clean(signs)
        if len(text) % 4:
            raise ValueError(f"extended sequence must have length divisible by 4: {text!r}")
        n = len(text) // 4
        if n == 0 or not in_box(text, n):
            raise ValueError(f"{text!r} violates the box constraint")
        return super().__new__(cls, text)

    @property
    def n(self) -> int:
        return len(self) // 4

    @property
    def inner(self) -> SignSeq:
        n = self.n
        return SignSeq(self[n:3 * n])


def in_box(signs: str, n: int) -> bool:
    """True when a length-4n sequence is the extension of some sequence in S(n)."""
    if len(signs) != 4 * n:
        return False
    return (signs[:n] == MINUS * n and signs[3 * n:] == PLUS * n
            and signs[n:3 * n].count(PLUS) == n)


@dataclass(frozen=True)
class HalfIndex:
    """Position ``i`` in 1..4n standing for the half-integer i - 2n - 1/2."""

    i: int
    n: int

    def __post_init__(self):
        if not 1 <= self.i <= 4 * self.n:
            raise ValueError(f"position {self.i} outside 1..{4 * self.n}")

    @property
    def alpha(self) -> Fraction:
        return Fraction(2 * (self.i - 2 * self.n) - 1, 2)

    @classmethod
    def from_alpha(cls, alpha, n: int) -> "HalfIndex":
        alpha = Fraction(alpha)
        if (alpha + Fraction(1, 2)).denominator != 1:
            raise ValueError(f"{alpha} is not a half-integer")
        return cls(int(alpha + Fraction(1, 2)) + 2 * n, n)

    def __str__(self) -> str:
        a = self.alpha
        return f"{a.numerator}/{a.denominator}"


def eta(alpha) -> int:
    """(-1)^(alpha + 1/2) for a half-integer alpha (or a HalfIndex)."""
    if isinstance(alpha, HalfIndex):
        alpha = alpha.alpha
    k = Fraction(alpha) + Fraction(1, 2)
    if k.denominator != 1:
        raise ValueError(f"{alpha} is not a half-integer")
    return -1 if int(k) % 2 else 1


def eta_at(position: int) -> int:
    """eta of an extended position; 4n is even so the parity of i decides."""
    return -1 if position % 2 else 1


# ---------------------------------------------------------------------------
# enumeration and Young diagrams


def enumerate_sequences(n: int) -> list[SignSeq]:
    """All balanced sequences of length 2n, lexicographic with - before +."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    for plus_positions in combinations(range(2 * n), n):
        chars = [MINUS] * (2 * n)
        for p in plus_positions:
            chars[p] = PLUS
        out.append("".join(chars))
    out.sort(key=lambda s: s.replace(MINUS, "0").replace(PLUS, "1"))
    return [SignSeq(s) for s in out]


@dataclass(frozen=True)
class BoxPartition:
    parts: tuple[int, ...]
    n: int

    def __post_init__(self):
        parts = tuple(p for p in self.parts if p)
        object.__setattr__(self, "parts", parts)
        if len(parts) > self.n or any(p > self.n or p < 0 for p in parts):
            raise ValueError(f"{parts} does not fit in a {self.n}x{self.n} box")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"{parts} is not weakly decreasing")

    @property
    def upper(self) -> bool:
        return all(p <= self.n - i for i, p in enumerate(self.parts, start=1))

    def part(self, i: int) -> int:
        return self.parts[i - 1] if i <= len(self.parts) else 0


def sequence_of_partition(d: BoxPartition) -> SignSeq:
    # walk from the bottom-left corner: right for +, up for -
    signs = []
    x = 0
    for i in range(d.n, 0, -1):
        row = d.part(i)
        signs.extend(PLUS * (row - x))
        x = row
        signs.append(MINUS)
    signs.extend(PLUS * (d.n - x))
    return SignSeq("".join(signs))


def partition_of_sequence(s: SignSeq) -> BoxPartition:
    n = s.n
    rows = []
    x = 0
    for ch in s:
        if ch == PLUS:
            x += 1
        else:
            rows.append(x)
    return BoxPartition(tuple(reversed(rows)), n)


def seq_young_bijection(x):
    if isinstance(x, BoxPartition):
        return sequence_of_partition(x)
    return partition_of_sequence(SignSeq(x))


def extend(a) -> ExtSeq:
    a = SignSeq(a)
    return ExtSeq(MINUS * a.n + a + PLUS * a.n)


# ---------------------------------------------------------------------------
# cup diagrams


@dataclass(frozen=True)
class CupDiagram:
    """Non-crossing perfect matching on points 1..2m, arcs sorted by left end."""

    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        arcs = tuple(sorted((min(a), max(a)) for a in self.arcs))
        object.__setattr__(self, "arcs", arcs)
        pts = sorted(p for a in arcs for p in a)
        if pts != list(range(1, 2 * len(arcs) + 1)):
            raise ValueError(f"arcs {arcs} are not a perfect matching of 1..{2 * len(arcs)}")
        for (i, j), (k, l) in combinations(arcs, 2):
            if i < k < j < l or k < i < l < j:
                raise ValueError(f"arcs {(i, j)} and {(k, l)} cross")

    @property
    def m(self) -> int:
        return len(self.arcs)

    @property
    def npoints(self) -> int:
        return 2 * len(self.arcs)

    @cached_property
    def partner(self) -> tuple[int, ...]:
        """0-based partner array."""
        out = [0] * self.npoints
        for i, j in self.arcs:
            out[i - 1] = j - 1
            out[j - 1] = i - 1
        return tuple(out)

    def arc_at(self, point: int) -> tuple[int, int]:
        q = self.partner[point - 1] + 1
        return (min(point, q), max(point, q))

    def to_json(self) -> list[list[int]]:
        return [list(a) for a in self.arcs]

    @classmethod
    def from_json(cls, data: Iterable[Sequence[int]]) -> "CupDiagram":
        return cls(tuple((int(a), int(b)) for a, b in data))

    def __str__(self) -> str:
        return " ".join(f"({i},{j})" for i, j in self.arcs)


def _match(signs: str) -> tuple[list[tuple[int, int]], list[int]]:
    """Stack matching of - with the next balancing +; returns arcs and unmatched points."""
    stack: list[int] = []
    arcs = []
    loose = []
    for pos, ch in enumerate(signs, start=1):
        if ch == MINUS:
            stack.append(pos)
        elif stack:
            arcs.append((stack.pop(), pos))
        else:
            loose.append(pos)
    return arcs, loose + stack


def lambda_pairs(s) -> CupDiagram:
    """The lambda-pairs of a sequence as a cup diagram; the sequence must close up."""
    arcs, loose = _match(_clean(s))
    if loose:
        raise ValueError(f"sequence {s!r} is not closable: unmatched points {sorted(loose)}")
    return CupDiagram(tuple(arcs))


def padded_pairs(signs: str) -> dict[int, tuple[int, int]]:
    """Lambda-pairs of a windowed sequence continued by - on the left and + on the right.

    Returns a map from each window position to its pair; partners outside the
    window get positions <= 0 or > len(signs).
    """
    w = len(signs)
    pad = w + 1
    arcs, _ = _match(MINUS * pad + signs + PLUS * pad)
    out = {}
    for i, j in arcs:
        i -= pad
        j -= pad
        pair = (i, j)
        if 1 <= i <= w:
            out[i] = pair
        if 1 <= j <= w:
            out[j] = pair
    return out


def parent(d: CupDiagram, arc) -> tuple[int, int] | None:
    arc = (min(arc), max(arc))
    if arc not in d.arcs:
        raise ValueError(f"{arc} is not an arc of {d}")
    best = None
    for i, j in d.arcs:
        if i < arc[0] and j > arc[1] and (best is None or i > best[0]):
            best = (i, j)
    return best


def is_cup_sequence(a) -> bool:
    balance = 0
    for ch in _clean(a):
        if ch == PLUS:
            if balance <= 0:
                return False
            balance -= 1
        else:
            balance += 1
    return True


def cup_sequences(n: int) -> list[SignSeq]:
    return [a for a in enumerate_sequences(n) if is_cup_sequence(a)]


def cup_diagrams(m: int) -> list[CupDiagram]:
    """Cup(m) in the order of their sequences."""
    return [lambda_pairs(a) for a in cup_sequences(m)]


def sequence_of_cup_diagram(d: CupDiagram) -> SignSeq:
    chars = [PLUS] * d.npoints
    for i, _ in d.arcs:
        chars[i - 1] = MINUS
    return SignSeq("".join(chars))


# ---------------------------------------------------------------------------
# arrows and diamonds


def arrow(lam: str, nu: str) -> tuple[int, int] | None:
    """The lambda-pair (p, q) with lam -> nu, or None.

    Both inputs are windowed sequences of equal length; ``nu`` may leave the box.
    Pairs are computed with the infinite - / + continuation outside the window.
    """
    lam = _clean(lam)
    nu = _clean(nu)
    if len(lam) != len(nu):
        raise ValueError("sequences of different length")
    diff = [i for i, (x, y) in enumerate(zip(lam, nu), start=1) if x != y]
    if len(diff) != 2:
        return None
    p, q = diff
    if lam[p - 1] != MINUS or nu[p - 1] != PLUS:
        return None
    if padded_pairs(lam).get(p) != (p, q):
        return None
    return (p, q)


def linked(x: str, y: str) -> bool:
    return arrow(x, y) is not None or arrow(y, x) is not None


def neighbours(signs: str) -> list[str]:
    """All sequences linked to ``signs`` by flipping two window positions."""
    signs = _clean(signs)
    w = len(signs)
    out = []
    pairs = padded_pairs(signs)
    # forward: flip a lambda-pair inside the window
    for i, j in set(pairs.values()):
        if 1 <= i and j <= w:
            chars = list(signs)
            chars[i - 1], chars[j - 1] = PLUS, MINUS
            out.append("".join(chars))
    # backward: signs is the target of an arrow
    for i in range(1, w + 1):
        if signs[i - 1] != PLUS:
            continue
        for j in range(i + 1, w + 1):
            if signs[j - 1] != MINUS:
                continue
            chars = list(signs)
            chars[i - 1], chars[j - 1] = MINUS, PLUS
            cand = "".join(chars)
            if arrow(cand, signs) == (i, j):
                out.append(cand)
    return sorted(set(out))


@dataclass(frozen=True)
class Diamond:
    """A 4-cycle lam - lam1 - lam2 - lam3 - lam; only lam3 may leave the box."""

    lam: str
    lam1: str
    lam2: str
    lam3: str
    in_box: bool

    @property
    def vertices(self) -> tuple[str, str, str, str]:
        return (self.lam, self.lam1, self.lam2, self.lam3)


@lru_cache(maxsize=None)
def diamonds(n: int) -> tuple[Diamond, ...]:
    """4-cycles under the link relation with at least three vertices in the box."""
    if n < 1:
        raise ValueError("n must be positive")
    verts = [extend(a) for a in enumerate_sequences(n)]
    inbox = set(verts)
    nbrs: dict[str, set[str]] = {}

    def nb(x):
        if x not in nbrs:
            nbrs[x] = set(neighbours(x))
        return nbrs[x]

    seen = set()
    out = []
    for x, z in combinations(verts, 2):
        common = sorted(nb(x) & nb(z))
        for y, w in combinations(common, 2):
            if y not in inbox and w not in inbox:
                continue
            if w in inbox and y not in inbox:
                y, w = w, y
            key = frozenset([frozenset([x, z]), frozenset([y, w])])
            if key in seen:
                continue
            seen.add(key)
            # lam1 is opposite the vertex that may leave the box
            out.append(Diamond(str(x), str(y), str(z), str(w), w in inbox))
    return tuple(out)


def diamond_support(d: Diamond) -> list[int]:
    """Positions where the four sequences are not all equal."""
    vs = d.vertices
    return [i for i in range(1, len(d.lam) + 1) if len({v[i - 1] for v in vs}) > 1]


# ---------------------------------------------------------------------------
# two-row tableaux


@dataclass(frozen=True)
class TwoRowTableau:
    """Standard tableau with entries decreasing along rows and down columns."""

    top: tuple[int, ...]
    bottom: tuple[int, ...]

    def __post_init__(self):
        top, bottom = tuple(self.top), tuple(self.bottom)
        object.__setattr__(self, "top", top)
        object.__setattr__(self, "bottom", bottom)
        n = len(top)
        if len(bottom) != n or sorted(top + bottom) != list(range(1, 2 * n + 1)):
            raise ValueError("rows must partition 1..2n into two rows of length n")
        for row in (top, bottom):
            if any(row[i] <= row[i + 1] for i in range(n - 1)):
                raise ValueError(f"row {row} is not decreasing")
        if any(t <= b for t, b in zip(top, bottom)):
            raise ValueError("columns must decrease from top to bottom")


def tableau_to_cups(t: TwoRowTableau) -> CupDiagram:
    chars = [PLUS] * (2 * len(t.top))
    for b in t.bottom:
        chars[b - 1] = MINUS
    return lambda_pairs("".join(chars))


def cups_to_tableau(d: CupDiagram) -> TwoRowTableau:
    lefts = sorted((i for i, _ in d.arcs), reverse=True)
    rights = sorted((j for _, j in d.arcs), reverse=True)
    return TwoRowTableau(tuple(rights), tuple(lefts))


def tableau_cup_bijection(x):
    if isinstance(x, TwoRowTableau):
        return tableau_to_cups(x)
    return cups_to_tableau(x)


def standard_tableaux(n: int) -> list[TwoRowTableau]:
    """Brute force over all splits of 1..2n (used as an independent count)."""
    out = []
    for bottom in combinations(range(1, 2 * n + 1), n):
        top = sorted(set(range(1, 2 * n + 1)) - set(bottom), reverse=True)
        try:
            out.append(TwoRowTableau(tuple(top), tuple(sorted(bottom, reverse=True))))
        except ValueError:
            continue
    return out
