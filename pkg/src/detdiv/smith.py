"""Smith normal form over Z with unimodular transform certificates,
unimodular-equivalence decisions, the doubled-size block normal form, and
the block-diagonal divisor check used over both ring backends.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matrices import (
    DimensionMismatchError,
    Matrix,
    column_class,
    det,
    det_divisor,
    divisor_chain,
    rank,
)
from .rings import Z, Ideal, IdealClass, RingElem, RingMismatchError


class SingularMatrixError(ValueError):
    """Raised when an operation requires a nonzero determinant."""


def is_unimodular(m: Matrix) -> bool:
    """True iff det(m) is a unit of the ring (norm 1, i.e. +-1 here)."""
    return det(m).norm() == 1


@dataclass(frozen=True)
class SmithDecomposition:
    """Certificate P @ A @ Q == D with P, Q unimodular and D diagonal with
    a nonnegative divisibility chain (zeros last)."""

    P: Matrix
    D: Matrix
    Q: Matrix
    diagonal: tuple[int, ...]


def _require_ring_z(m: Matrix, what: str):
    if m.ring != Z:
        raise RingMismatchError(f"{what} is implemented over Z only")


def smith_normal_form(m: Matrix) -> SmithDecomposition:
    """Diagonalize an integer matrix by gcd-driven row/column elimination,
    accumulating the unimodular transforms; the result is verified exactly
    before returning."""
    _require_ring_z(m, "smith_normal_form")
    n = m.n
    a = [[e.a for e in row] for row in m.rows]
    p = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    q = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        p[i], p[j] = p[j], p[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in q:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, factor):
        a[dst] = [x + factor * y for x, y in zip(a[dst], a[src])]
        p[dst] = [x + factor * y for x, y in zip(p[dst], p[src])]

    def add_col(src, dst, factor):
        for row in a:
            row[dst] += factor * row[src]
        for row in q:
            row[dst] += factor * row[src]

    for s in range(n):
        if all(a[i][j] == 0 for i in range(s, n) for j in range(s, n)):
            break
        while True:
            # smallest nonzero entry of the trailing block becomes the pivot
            best = None
            for i in range(s, n):
                for j in range(s, n):
                    v = abs(a[i][j])
                    if v and (best is None or v < best[0]):
                        best = (v, i, j)
            _, bi, bj = best
            if bi != s:
                swap_rows(s, bi)
            if bj != s:
                swap_cols(s, bj)
            if a[s][s] < 0:
                a[s] = [-x for x in a[s]]
                p[s] = [-x for x in p[s]]
            pivot = a[s][s]
            dirty = False
            for i in range(s + 1, n):
                if a[i][s]:
                    add_row(s, i, -(a[i][s] // pivot))
                    if a[i][s]:
                        dirty = True
            for j in range(s + 1, n):
                if a[s][j]:
                    add_col(s, j, -(a[s][j] // pivot))
                    if a[s][j]:
                        dirty = True
            if dirty:
                continue
            # pivot must divide the rest of the block for the chain to hold
            stuck = next(
                ((i, j) for i in range(s + 1, n) for j in range(s + 1, n)
                 if a[i][j] % pivot),
                None,
            )
            if stuck is None:
                break
            add_row(stuck[0], s, 1)

    diag = tuple(a[i][i] for i in range(n))
    P = Matrix(Z, p)
    D = Matrix(Z, a)
    Q = Matrix(Z, q)
    assert P @ m @ Q == D
    assert abs(det(P).a) == 1 and abs(det(Q).a) == 1
    for k in range(n - 1):
        assert diag[k + 1] % diag[k] == 0 if diag[k] else diag[k + 1] == 0
    return SmithDecomposition(P, D, Q, diag)


def _unimodular_inverse(m: Matrix) -> Matrix:
    """Exact inverse of a unimodular integer matrix via the adjugate."""
    _require_ring_z(m, "_unimodular_inverse")
    d = det(m).a
    if abs(d) != 1:
        raise ValueError("matrix is not unimodular")
    n = m.n
    grid = [[e.a for e in row] for row in m.rows]
    if n == 1:
        inv = Matrix(Z, [[d]])
    else:
        from .matrices import _bareiss_det

        adj = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                sub = [
                    [grid[r][c] for c in range(n) if c != i]
                    for r in range(n) if r != j
                ]
                cof = _bareiss_det(sub)
                adj[i][j] = cof if (i + j) % 2 == 0 else -cof
        inv = Matrix(Z, [[x * d for x in row] for row in adj])
    assert m @ inv == Matrix.identity(Z, n)
    return inv


def equivalent(a: Matrix, b: Matrix) -> bool:
    """Decide whether b = P a Q for some unimodular P, Q: the divisor
    chains must agree, and for nonzero matrices so must the column classes."""
    if a.ring != b.ring:
        raise RingMismatchError(f"ring mismatch: {a.ring} vs {b.ring}")
    if a.n != b.n:
        raise DimensionMismatchError(f"size mismatch: {a.n} vs {b.n}")
    za, zb = a.is_zero(), b.is_zero()
    if za or zb:
        return za and zb
    if divisor_chain(a) != divisor_chain(b):
        return False
    return column_class(a) == column_class(b)


def transform_certificate(a: Matrix, b: Matrix) -> tuple[Matrix, Matrix] | None:
    """Unimodular (P, Q) with b == P @ a @ Q, composed from the two Smith
    certificates; None when the matrices are not equivalent.  Z only."""
    _require_ring_z(a, "transform_certificate")
    _require_ring_z(b, "transform_certificate")
    if not equivalent(a, b):
        return None
    sa = smith_normal_form(a)
    sb = smith_normal_form(b)
    assert sa.D == sb.D, "equal chains must give equal Smith diagonals"
    p = _unimodular_inverse(sb.P) @ sa.P
    q = sa.Q @ _unimodular_inverse(sb.Q)
    assert p @ a @ q == b
    return p, q


@dataclass(frozen=True)
class BlockNormalForm:
    """n two-by-two blocks with zero second column, together with the
    unimodular (2n x 2n) transforms taking [[A, 0], [0, 0]] to their
    block-diagonal assembly."""

    blocks: tuple[Matrix, ...]
    P: Matrix
    Q: Matrix


def _embed_padded(m: Matrix) -> Matrix:
    """[[m, 0], [0, 0]] of doubled size."""
    n = m.n
    zero = RingElem(m.ring, 0)
    rows = []
    for i in range(n):
        rows.append(list(m.rows[i]) + [zero] * n)
    for _ in range(n):
        rows.append([zero] * (2 * n))
    return Matrix(m.ring, rows)


def block_diagonal(blocks) -> Matrix:
    blocks = list(blocks)
    ring = blocks[0].ring
    size = sum(b.n for b in blocks)
    zero = RingElem(ring, 0)
    rows = [[zero] * size for _ in range(size)]
    off = 0
    for b in blocks:
        for i in range(b.n):
            for j in range(b.n):
                rows[off + i][off + j] = b.rows[i][j]
        off += b.n
    return Matrix(ring, rows)


def block_normal_form(m: Matrix) -> BlockNormalForm:
    """Turn a nonsingular integer matrix A into n blocks (e_k 0 / 0 0) by
    padding [[A, 0], [0, 0]], applying the Smith transforms on the top-left
    quadrant, and interleaving rows and columns so block k carries the k-th
    invariant factor; the identity P @ A' @ Q == blockdiag is verified."""
    _require_ring_z(m, "block_normal_form")
    if det(m).is_zero():
        raise SingularMatrixError("block normal form requires a nonzero determinant")
    n = m.n
    snf = smith_normal_form(m)
    blocks = tuple(Matrix(Z, [[ak, 0], [0, 0]]) for ak in snf.diagonal)

    def embed_transform(t: Matrix) -> list[list[int]]:
        big = [[1 if i == j else 0 for j in range(2 * n)] for i in range(2 * n)]
        for i in range(n):
            for j in range(n):
                big[i][j] = t.rows[i][j].a
        return big

    # interleaving permutations: diagonal slot k moves to position 2k
    perm_rows = [[0] * (2 * n) for _ in range(2 * n)]
    perm_cols = [[0] * (2 * n) for _ in range(2 * n)]
    for k in range(n):
        perm_rows[2 * k][k] = 1
        perm_rows[2 * k + 1][n + k] = 1
        perm_cols[k][2 * k] = 1
        perm_cols[n + k][2 * k + 1] = 1

    p = Matrix(Z, perm_rows) @ Matrix(Z, embed_transform(snf.P))
    q = Matrix(Z, embed_transform(snf.Q)) @ Matrix(Z, perm_cols)
    assert is_unimodular(p) and is_unimodular(q)
    assert p @ _embed_padded(m) @ q == block_diagonal(blocks)
    return BlockNormalForm(blocks, p, q)


@dataclass(frozen=True)
class BlockLemmaReport:
    """Outcome of checking a block-diagonal assembly of rank-1 blocks:
    the k-th elementary divisor of the assembly against d_1 of block k,
    and the column class against the product of the block classes."""

    expected_elementary: tuple[Ideal, ...]
    actual_elementary: tuple[Ideal, ...]
    elementary_ok: tuple[bool, ...]
    block_class_product: IdealClass
    assembled_class: IdealClass

    @property
    def class_ok(self) -> bool:
        return self.block_class_product == self.assembled_class

    @property
    def passed(self) -> bool:
        return all(self.elementary_ok) and self.class_ok


def verify_block_lemma(blocks) -> BlockLemmaReport:
    """Assemble rank-1 two-by-two blocks (with d_1 divisibility down the
    list) into a block-diagonal matrix and check both claimed identities
    through the generic divisor machinery."""
    blocks = list(blocks)
    if not blocks:
        raise ValueError("need at least one block")
    ring = blocks[0].ring
    firsts = []
    for blk in blocks:
        if blk.ring != ring:
            raise RingMismatchError("blocks must share one ring")
        if blk.n != 2:
            raise ValueError("blocks must be 2 x 2")
        if rank(blk) != 1:
            raise ValueError("blocks must have rank exactly 1")
        firsts.append(det_divisor(blk, 1))
    for prev, nxt in zip(firsts, firsts[1:]):
        if not prev.divides(nxt):
            raise ValueError("block d_1 values must form a divisibility chain")

    assembled = block_diagonal(blocks)
    chain = divisor_chain(assembled)
    es = chain.elementary
    actual = tuple(es[k] for k in range(len(blocks)))
    ok = tuple(x == y for x, y in zip(firsts, actual))

    cls = column_class(blocks[0])
    for blk in blocks[1:]:
        cls = cls * column_class(blk)
    return BlockLemmaReport(
        expected_elementary=tuple(firsts),
        actual_elementary=actual,
        elementary_ok=ok,
        block_class_product=cls,
        assembled_class=column_class(assembled),
    )
