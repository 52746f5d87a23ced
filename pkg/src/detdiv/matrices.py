"""Dense square matrices over the ring backends and their divisor invariants:
determinants, minor (compound) matrices, determinantal and elementary
divisor chains, rank, and the column class.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .rings import (
    Z,
    ZSQRT5,
    FracIdeal,
    Ideal,
    IdealClass,
    RingElem,
    RingMismatchError,
    ideal_class,
    ideal_from_generators,
)

QUAD_DET_CAP = 6


class DimensionMismatchError(ValueError):
    """Raised when two matrices of different sizes are combined."""


class DimensionCapError(ValueError):
    """Raised when a Z[sqrt(-5)] determinant exceeds the supported size."""


class Matrix:
    """An immutable n x n matrix of RingElem values sharing one ring tag."""

    __slots__ = ("ring", "n", "rows")

    def __init__(self, ring: str, rows):
        rows = tuple(tuple(RingElem.of(ring, e) for e in row) for row in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("matrix must be square and nonempty")
        self.ring = ring
        self.n = n
        self.rows = rows

    @classmethod
    def identity(cls, ring: str, n: int) -> "Matrix":
        return cls(ring, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, ring: str, n: int) -> "Matrix":
        return cls(ring, [[0] * n for _ in range(n)])

    @classmethod
    def diagonal(cls, ring: str, entries) -> "Matrix":
        entries = [RingElem.of(ring, e) for e in entries]
        n = len(entries)
        return cls(ring, [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, ij) -> RingElem:
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ring != other.ring:
            raise RingMismatchError(f"ring mismatch: {self.ring} vs {other.ring}")
        if self.n != other.n:
            raise DimensionMismatchError(f"size mismatch: {self.n} vs {other.n}")
        n = self.n
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = RingElem(self.ring, 0)
                for k in range(n):
                    acc = acc + self.rows[i][k] * other.rows[k][j]
                row.append(acc)
            out.append(row)
        return Matrix(self.ring, out)

    def transpose(self) -> "Matrix":
        return Matrix(self.ring, list(zip(*self.rows)))

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.rows for e in row)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.ring == other.ring and self.rows == other.rows

    def __hash__(self):
        return hash((self.ring, self.rows))

    def __repr__(self):
        body = "; ".join(
            " ".join(f"{e.a}" if self.ring == Z else f"({e.a},{e.b})" for e in row)
            for row in self.rows
        )
        return f"Matrix({self.ring!r}, [{body}])"


def _bareiss_det(rows: list[list[int]]) -> int:
    """Fraction-free elimination determinant for integer matrices."""
    n = len(rows)
    a = [row[:] for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _minor_det(m: Matrix, rows: tuple[int, ...], cols: tuple[int, ...], memo: dict) -> RingElem:
    """Determinant of the submatrix on the given index tuples, expanding
    along the last selected row with shared memoization."""
    key = (rows, cols)
    got = memo.get(key)
    if got is not None:
        return got
    if len(rows) == 1:
        val = m.rows[rows[0]][cols[0]]
    else:
        r = rows[-1]
        sub_rows = rows[:-1]
        val = RingElem(m.ring, 0)
        sign = 1 if len(cols) % 2 else -1
        for idx, c in enumerate(cols):
            e = m.rows[r][c]
            if not e.is_zero():
                sub = _minor_det(m, sub_rows, cols[:idx] + cols[idx + 1:], memo)
                term = e * sub
                val = val + term if sign > 0 else val - term
            sign = -sign
    memo[key] = val
    return val


def det(m: Matrix) -> RingElem:
    """Exact determinant: fraction-free elimination over Z, cofactor
    expansion over Z[sqrt(-5)] (size capped at QUAD_DET_CAP)."""
    if m.ring == Z:
        return RingElem(Z, _bareiss_det([[e.a for e in row] for row in m.rows]))
    if m.n > QUAD_DET_CAP:
        raise DimensionCapError(
            f"determinants over {ZSQRT5} are supported up to n = {QUAD_DET_CAP}, got {m.n}"
        )
    idx = tuple(range(m.n))
    return _minor_det(m, idx, idx, {})


def subset_enumeration(n: int, k: int) -> list[tuple[int, ...]]:
    """All k-element subsets of {1, ..., n} as sorted tuples in
    lexicographic order; this fixed enumeration indexes compound matrices."""
    if not 1 <= k <= n:
        raise ValueError(f"k must satisfy 1 <= k <= n, got k={k}, n={n}")
    return [tuple(c) for c in combinations(range(1, n + 1), k)]


def compound(m: Matrix, k: int, _memo: dict | None = None) -> Matrix:
    """The matrix of all k x k minors, rows and columns indexed by the fixed
    subset enumeration; compound(m, 1) == m and compound(m, n) == [[det m]]."""
    if not 1 <= k <= m.n:
        raise ValueError(f"k must satisfy 1 <= k <= n, got k={k}, n={m.n}")
    memo = {} if _memo is None else _memo
    subsets = [tuple(i - 1 for i in s) for s in subset_enumeration(m.n, k)]
    entries = [[_minor_det(m, rs, cs, memo) for cs in subsets] for rs in subsets]
    return Matrix(m.ring, entries)


def det_divisor(m: Matrix, k: int, _memo: dict | None = None) -> Ideal:
    """The k-th determinantal divisor: the ideal generated by all k x k
    minors, with the conventions unit ideal for k <= 0 and zero ideal for
    k > n."""
    if k <= 0:
        return Ideal.unit(m.ring)
    if k > m.n:
        return Ideal.zero(m.ring)
    memo = {} if _memo is None else _memo
    subsets = list(combinations(range(m.n), k))
    acc = Ideal.zero(m.ring)
    for rs in subsets:
        for cs in subsets:
            d = _minor_det(m, rs, cs, memo)
            if not d.is_zero():
                acc = acc + Ideal.principal(d)
                if acc.is_unit_ideal():
                    return acc
    return acc


def elem_divisor(m: Matrix, k: int, _memo: dict | None = None) -> Ideal:
    """The k-th elementary divisor d_k / d_{k-1}, zero when d_k is zero."""
    if k < 1:
        raise ValueError("elementary divisors are indexed from 1")
    dk = det_divisor(m, k, _memo)
    if dk.is_zero():
        return dk
    prev = det_divisor(m, k - 1, _memo)
    q = FracIdeal(dk) * FracIdeal(prev).inverse()
    return q.as_ideal()


def rank(m: Matrix) -> int:
    """Largest r with a nonzero r x r minor, via fraction-free elimination
    with full pivoting (exact division is available in both backends)."""
    n = m.n
    a = [list(row) for row in m.rows]
    prev = RingElem(m.ring, 1)
    r = 0
    for s in range(n):
        pivot = None
        for i in range(s, n):
            for j in range(s, n):
                if not a[i][j].is_zero():
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        pi, pj = pivot
        if pi != s:
            a[s], a[pi] = a[pi], a[s]
        if pj != s:
            for row in a:
                row[s], row[pj] = row[pj], row[s]
        r += 1
        for i in range(s + 1, n):
            for j in range(s + 1, n):
                a[i][j] = (a[s][s] * a[i][j] - a[i][s] * a[s][j]).exact_div(prev)
        prev = a[s][s]
    return r


def column_class(m: Matrix) -> IdealClass:
    """Ideal class of the gcd of a nonzero column of the rank-th compound;
    checked to agree across every nonzero column."""
    r = rank(m)
    if r == 0:
        raise ValueError("the zero matrix has no column class")
    comp = compound(m, r)
    classes = []
    for j in range(comp.n):
        col = [comp.rows[i][j] for i in range(comp.n)]
        if all(e.is_zero() for e in col):
            continue
        classes.append(ideal_class(ideal_from_generators(col)))
    assert classes and all(c == classes[0] for c in classes), \
        "column class must not depend on the chosen column"
    return classes[0]


@dataclass(frozen=True)
class DivisorChain:
    """The list d_1, ..., d_n of determinantal divisors of one matrix,
    with the derived elementary divisors e_k = d_k / d_{k-1}."""

    ring: str
    d: tuple[Ideal, ...]

    def __post_init__(self):
        if not self.d:
            raise ValueError("a divisor chain needs length >= 1")
        for ideal in self.d:
            if ideal.ring != self.ring:
                raise RingMismatchError("chain entries must share the ring tag")

    @property
    def n(self) -> int:
        return len(self.d)

    @cached_property
    def elementary(self) -> tuple[Ideal, ...] | None:
        """Elementary divisors, or None when some quotient d_k / d_{k-1}
        is not integral (possible only for externally supplied chains)."""
        out = []
        prev = Ideal.unit(self.ring)
        for dk in self.d:
            if dk.is_zero():
                out.append(Ideal.zero(self.ring))
                prev = dk
                continue
            if prev.is_zero():
                return None
            q = FracIdeal(dk) * FracIdeal(prev).inverse()
            if not q.is_integral():
                return None
            out.append(q.num)
            prev = dk
        return tuple(out)

    @classmethod
    def from_divisors(cls, ideals) -> "DivisorChain":
        ideals = tuple(ideals)
        return cls(ideals[0].ring, ideals)

    @classmethod
    def from_elementary(cls, ideals) -> "DivisorChain":
        ideals = tuple(ideals)
        ring = ideals[0].ring
        d = []
        acc = Ideal.unit(ring)
        for e in ideals:
            acc = acc * e
            d.append(acc)
        return cls(ring, tuple(d))


def divisor_chain(m: Matrix) -> DivisorChain:
    """All determinantal divisors of m.  Divisors above the rank are zero
    without scanning their (all-vanishing) minors; the ones at or below the
    rank share one minor memo across k."""
    r = rank(m)
    memo: dict = {}
    d = []
    for k in range(1, m.n + 1):
        if k > r:
            d.append(Ideal.zero(m.ring))
            continue
        dk = det_divisor(m, k, memo)
        assert not dk.is_zero()
        d.append(dk)
    chain = DivisorChain(m.ring, tuple(d))
    assert chain.elementary is not None
    return chain
