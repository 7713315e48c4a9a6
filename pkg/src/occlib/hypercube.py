"""Exact p-biased Fourier analysis on the cube of graphs on n labelled
vertices, and the shift-averaging tensor operators acting there.

Values live in the quadratic extension Q[sqrt(p(1-p))], so every transform,
inner product and quadratic form is exact.  When sqrt(p(1-p)) is itself
rational (p = 1/2 gives 1/2) elements fold to plain rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, Optional, Sequence

from .graph import Graph, all_masks

__all__ = [
    "QuadExt",
    "FunctionOnCube",
    "TensorOperator",
    "character",
    "walsh_matrix",
    "inverse_walsh_matrix",
    "apply_shift",
    "apply_shift_averaged",
    "quadratic_form",
    "walk_step",
]

F = Fraction

_MAX_COORDS = 15  # cube dimension bound: 2^15 exact values is the ceiling


def _rational_sqrt(f: Fraction) -> Optional[Fraction]:
    if f < 0:
        return None
    rn, rd = isqrt(f.numerator), isqrt(f.denominator)
    if rn * rn == f.numerator and rd * rd == f.denominator:
        return F(rn, rd)
    return None


@dataclass(frozen=True)
class QuadExt:
    """a + b*sqrt(d) with rational a, b and fixed square-free-ish radicand d.

    Construction folds b into a when sqrt(d) is rational, so equality and
    is_rational behave the same whether a value was built folded or not.
    """

    a: Fraction
    b: Fraction
    d: Fraction

    def __init__(self, a, b=0, d=0):
        a, b, d = F(a), F(b), F(d)
        if d < 0:
            raise ValueError("negative radicand")
        if b != 0:
            root = _rational_sqrt(d)
            if root is not None:
                a, b = a + b * root, F(0)
        if b == 0:
            d = F(0)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    @staticmethod
    def sqrt(d) -> "QuadExt":
        return QuadExt(0, 1, d)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def to_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"irrational value {self!r}")
        return self.a

    def _join(self, other: "QuadExt") -> Fraction:
        # a common radicand for a binary operation; zero marks "rational"
        if self.d and other.d and self.d != other.d:
            raise ValueError("mixed radicands")
        return self.d or other.d

    def __add__(self, other) -> "QuadExt":
        other = _as_quad(other)
        return QuadExt(self.a + other.a, self.b + other.b, self._join(other))

    __radd__ = __add__

    def __neg__(self) -> "QuadExt":
        return QuadExt(-self.a, -self.b, self.d)

    def __sub__(self, other) -> "QuadExt":
        return self + (-_as_quad(other))

    def __rsub__(self, other) -> "QuadExt":
        return _as_quad(other) - self

    def __mul__(self, other) -> "QuadExt":
        other = _as_quad(other)
        d = self._join(other)
        return QuadExt(self.a * other.a + self.b * other.b * d,
                       self.a * other.b + self.b * other.a, d)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "QuadExt":
        other = _as_quad(other)
        norm = other.a * other.a - other.b * other.b * other.d
        if norm == 0:
            raise ZeroDivisionError("division by zero element")
        conj = QuadExt(other.a, -other.b, other.d)
        prod = self * conj
        return QuadExt(prod.a / norm, prod.b / norm, prod.d)

    def __rtruediv__(self, other) -> "QuadExt":
        return _as_quad(other) / self

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = _as_quad(other)
        if not isinstance(other, QuadExt):
            return NotImplemented
        if self.a != other.a or self.b != other.b:
            return False
        return self.b == 0 or self.d == other.d

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.d))

    def __repr__(self) -> str:
        if self.b == 0:
            return f"QuadExt({self.a})"
        return f"QuadExt({self.a} + {self.b}*sqrt({self.d}))"


def _as_quad(v) -> QuadExt:
    if isinstance(v, QuadExt):
        return v
    return QuadExt(F(v))


def walsh_matrix(p: Fraction) -> tuple[tuple[QuadExt, ...], ...]:
    """Per-coordinate analysis butterfly; rows = (e not in S, e in S),
    columns = (edge absent, edge present)."""
    p = F(p)
    root = QuadExt.sqrt(p * (1 - p))
    return ((QuadExt(1 - p), QuadExt(p)), (root, -root))


def inverse_walsh_matrix(p: Fraction) -> tuple[tuple[QuadExt, ...], ...]:
    p = F(p)
    root = QuadExt.sqrt(p * (1 - p))
    return ((QuadExt(1), root / (1 - p)), (QuadExt(1), -(root / p)))


class FunctionOnCube:
    """A function on all 2^C(n,2) graphs on n labelled vertices, stored
    densely by edge mask with exact QuadExt values."""

    __slots__ = ("n", "p", "values", "_dim")

    def __init__(self, n: int, p: Fraction, values: Sequence):
        e = n * (n - 1) // 2
        if e > _MAX_COORDS:
            raise ValueError(f"cube dimension {e} exceeds {_MAX_COORDS}")
        p = F(p)
        if not 0 < p < 1:
            raise ValueError("need 0 < p < 1")
        vals = [_as_quad(v) for v in values]
        if len(vals) != 1 << e:
            raise ValueError(f"expected {1 << e} values, got {len(vals)}")
        self.n, self.p, self.values, self._dim = n, p, vals, e

    @staticmethod
    def indicator(n: int, p: Fraction, members: Iterable[int]) -> "FunctionOnCube":
        e = n * (n - 1) // 2
        vals = [F(0)] * (1 << e)
        for mask in members:
            vals[mask] = F(1)
        return FunctionOnCube(n, p, vals)

    @staticmethod
    def from_graph_values(n: int, p: Fraction, fn) -> "FunctionOnCube":
        return FunctionOnCube(n, p, [fn(m) for m in all_masks(n)])

    def measure_of_mask(self, mask: int) -> Fraction:
        k = mask.bit_count()
        return self.p ** k * (1 - self.p) ** (self._dim - k)

    def expectation(self) -> QuadExt:
        total = QuadExt(0)
        for mask, v in enumerate(self.values):
            total = total + v * self.measure_of_mask(mask)
        return total

    def inner(self, other: "FunctionOnCube") -> QuadExt:
        if (self.n, self.p) != (other.n, other.p):
            raise ValueError("mismatched cubes")
        total = QuadExt(0)
        for mask, (u, v) in enumerate(zip(self.values, other.values)):
            total = total + u * v * self.measure_of_mask(mask)
        return total

    def _butterfly(self, matrix, coords: int) -> "FunctionOnCube":
        vals = list(self.values)
        for i in range(self._dim):
            if not (coords >> i) & 1:
                continue
            bit = 1 << i
            for mask in range(1 << self._dim):
                if mask & bit:
                    continue
                lo, hi = vals[mask], vals[mask | bit]
                vals[mask] = matrix[0][0] * lo + matrix[0][1] * hi
                vals[mask | bit] = matrix[1][0] * lo + matrix[1][1] * hi
        out = FunctionOnCube.__new__(FunctionOnCube)
        out.n, out.p, out.values, out._dim = self.n, self.p, vals, self._dim
        return out

    def walsh(self) -> "FunctionOnCube":
        """Fourier coefficients indexed by the character's edge set."""
        full = (1 << self._dim) - 1
        return self._butterfly(walsh_matrix(self.p), full)

    def inverse_walsh(self) -> "FunctionOnCube":
        full = (1 << self._dim) - 1
        return self._butterfly(inverse_walsh_matrix(self.p), full)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FunctionOnCube):
            return NotImplemented
        return (self.n, self.p) == (other.n, other.p) and self.values == other.values


def character(n: int, p: Fraction, s_mask: int) -> FunctionOnCube:
    """The biased character indexed by edge set S, as an explicit function."""
    p = F(p)
    root = QuadExt.sqrt(p * (1 - p))
    present = -(root / p)
    absent = root / (1 - p)
    e = n * (n - 1) // 2
    vals = []
    for mask in range(1 << e):
        v = QuadExt(1)
        s = s_mask
        while s:
            low = s & -s
            v = v * (present if mask & low else absent)
            s ^= low
        vals.append(v)
    return FunctionOnCube(n, p, vals)


def apply_shift(f: FunctionOnCube, b_mask: int) -> FunctionOnCube:
    """Uniform-measure shift: g(G) = f(G xor complement(B)).

    Only measure-preserving at p = 1/2, so that is required.
    """
    if f.p != F(1, 2):
        raise ValueError("shift operators act on the uniform cube")
    full = (1 << f._dim) - 1
    flip = full & ~b_mask
    vals = [f.values[mask ^ flip] for mask in range(1 << f._dim)]
    return FunctionOnCube(f.n, f.p, vals)


def apply_shift_averaged(f: FunctionOnCube, b_masks: Sequence[int]) -> FunctionOnCube:
    """Average of apply_shift over a collection of edge sets, exactly."""
    if not b_masks:
        raise ValueError("empty shift collection")
    acc = [QuadExt(0)] * len(f.values)
    for b in b_masks:
        shifted = apply_shift(f, b)
        acc = [x + y for x, y in zip(acc, shifted.values)]
    w = F(1, len(b_masks))
    return FunctionOnCube(f.n, f.p, [x * w for x in acc])


class TensorOperator:
    """Product operator acting on one edge coordinate at a time.

    On every edge outside B it applies M = [[(1-2p)/(1-p), p/(1-p)], [1, 0]]
    (rows and columns indexed absent, present); edges of B are left alone.
    The (present, present) entry is zero, which is the whole point: the matrix
    entry between two graphs vanishes exactly when they share an edge off B.
    Characters are eigenvectors with eigenvalue (-p/(1-p))^(|S| off B).
    """

    def __init__(self, n: int, p: Fraction, b_mask: int = 0):
        p = F(p)
        if not 0 < p <= F(1, 2):
            raise ValueError("row-stochastic only for 0 < p <= 1/2")
        self.n, self.p, self.b_mask = n, p, b_mask
        self.dim = n * (n - 1) // 2
        self.matrix = ((F(1 - 2 * p) / (1 - p), p / (1 - p)), (F(1), F(0)))
        assert self.matrix[1][1] == 0
        assert all(sum(row) == 1 for row in self.matrix)

    def _active(self) -> int:
        return ((1 << self.dim) - 1) & ~self.b_mask

    def apply(self, f: FunctionOnCube) -> FunctionOnCube:
        if (f.n, f.p) != (self.n, self.p):
            raise ValueError("mismatched cube")
        m = self.matrix
        quad = ((QuadExt(m[0][0]), QuadExt(m[0][1])), (QuadExt(m[1][0]), QuadExt(m[1][1])))
        return f._butterfly(quad, self._active())

    def apply_transpose(self, f: FunctionOnCube) -> FunctionOnCube:
        m = self.matrix
        quad = ((QuadExt(m[0][0]), QuadExt(m[1][0])), (QuadExt(m[0][1]), QuadExt(m[1][1])))
        return f._butterfly(quad, self._active())

    def entry(self, g_mask: int, h_mask: int) -> Fraction:
        """Matrix entry between two graphs: product of per-edge entries."""
        out = F(1)
        for i in range(self.dim):
            bit = 1 << i
            if self.b_mask & bit:
                if (g_mask & bit) != (h_mask & bit):
                    return F(0)
                continue
            out *= self.matrix[(g_mask >> i) & 1][(h_mask >> i) & 1]
            if out == 0:
                return F(0)
        return out

    def eigenvalue(self, s_mask: int) -> Fraction:
        k = (s_mask & self._active()).bit_count()
        return (-self.p / (1 - self.p)) ** k


def quadratic_form(f: FunctionOnCube, lambda_by_mask: dict) -> QuadExt:
    """Sum over characters of lambda(S) * fhat(S)^2."""
    fhat = f.walsh()
    total = QuadExt(0)
    for mask, v in enumerate(fhat.values):
        total = total + v * v * lambda_by_mask[mask]
    return total


def walk_step(g: Graph, b_mask: int, p: Fraction, rng) -> Graph:
    """One step of the chain whose kernel is the tensor operator: edges off B
    are dropped when present and added with probability p/(1-p) when absent."""
    p = F(p)
    if not 0 < p <= F(1, 2):
        raise ValueError("need 0 < p <= 1/2")
    dim = g.n * (g.n - 1) // 2
    add_prob = p / (1 - p)
    mask = g.mask
    for i in range(dim):
        bit = 1 << i
        if b_mask & bit:
            continue
        if mask & bit:
            mask &= ~bit
        elif rng.random() < add_prob:
            mask |= bit
    return Graph(g.n, mask)
