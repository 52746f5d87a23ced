"""Decisions and constructions for divisor-chain realizability: validity of
a single chain, matrices realizing a chain, the six necessary conditions on
a (chain(A), chain(B), chain(AB)) triple, the product-chain construction,
and the complete 2 x 2 decision over Z with explicit witnesses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product as iter_product

from .matrices import DivisorChain, Matrix, divisor_chain
from .rings import Z, ZSQRT5, Ideal, RingElem, is_principal

REALIZABLE = "Realizable"
NOT_REALIZABLE = "NotRealizable"
UNKNOWN = "Unknown"

SEARCH_RADII = (3, 6, 12, 24, 48)
MAX_PRODUCT_CANDIDATES = 200


class InvalidChainError(ValueError):
    """The ideal list cannot be the divisor chain of any matrix."""


class UnsupportedConstructionError(ValueError):
    """A witness exists but constructing one is outside this package's scope
    (quadratic backend beyond 2 x 2)."""


class SearchExhaustedError(RuntimeError):
    """The bounded coordinate search ran out of radius without a witness."""


@dataclass(frozen=True)
class Triple:
    """Three equal-length nonzero divisor chains over one ring, in the
    order (chain of A, chain of B, chain of A @ B)."""

    a: DivisorChain
    b: DivisorChain
    c: DivisorChain

    def __post_init__(self):
        if not (self.a.ring == self.b.ring == self.c.ring):
            raise ValueError("triple chains must share one ring")
        if not (self.a.n == self.b.n == self.c.n):
            raise ValueError("triple chains must share one length")
        for chain in (self.a, self.b, self.c):
            if any(ideal.is_zero() for ideal in chain.d):
                raise ValueError("triple chains must have nonzero entries")

    @property
    def ring(self) -> str:
        return self.a.ring

    @property
    def n(self) -> int:
        return self.a.n


@dataclass(frozen=True)
class Verdict:
    """Outcome of a realizability decision.  NotRealizable carries the id
    (1..6) of the violated necessary condition; Realizable carries a
    verified witness pair whenever a construction is in scope."""

    outcome: str
    violated_condition: int | None = None
    witness: tuple[Matrix, Matrix] | None = None
    rationale: str = ""


def check_chain(chain: DivisorChain) -> bool:
    """A chain is realizable by a single matrix iff consecutive elementary
    divisors divide each other and their product (the top divisor) is
    principal; the zero ideal is allowed and absorbs the tail."""
    es = chain.elementary
    if es is None:
        return False
    for ek, ek1 in zip(es, es[1:]):
        if not ek.divides(ek1):
            return False
    return is_principal(chain.d[-1]) is not None


def _lattice_points(ideal: Ideal, radius: int) -> list[RingElem]:
    """Elements of the ideal with both coordinates in [-radius, radius],
    in lexicographic coordinate order (zero included)."""
    pts = []
    for a in range(-radius, radius + 1):
        for b in range(-radius, radius + 1):
            x = RingElem(ZSQRT5, a, b)
            if ideal.contains(x):
                pts.append(x)
    return pts


def _search_quadratic_2x2(d1: Ideal, d2: Ideal):
    """Yield 2 x 2 matrices over Z[sqrt(-5)] with determinantal divisors
    exactly (d1, d2), layered by growing coordinate radius and ordered
    lexicographically inside each layer."""
    target_norm = d2.norm()
    prev = 0
    for radius in SEARCH_RADII:
        entries = _lattice_points(d1, radius)
        for quad in iter_product(entries, repeat=4):
            if prev and all(max(abs(e.a), abs(e.b)) <= prev for e in quad):
                continue
            x, y, z, w = quad
            d = x * w - y * z
            if d2.is_zero():
                if not d.is_zero():
                    continue
            else:
                if d.norm() != target_norm or not d2.contains(d):
                    continue
            m = Matrix(ZSQRT5, [[x, y], [z, w]])
            got = divisor_chain(m)
            if got.d == (d1, d2):
                yield m
        prev = radius


def construct_from_elementary(elementary) -> Matrix:
    """A matrix whose elementary divisors are the given valid chain: the
    diagonal of generators over Z, a bounded coordinate search over
    Z[sqrt(-5)] (n <= 2)."""
    es = tuple(elementary)
    chain = DivisorChain.from_elementary(es)
    if not check_chain(chain):
        raise InvalidChainError(f"{es!r} is not a valid elementary divisor chain")
    ring = chain.ring
    if ring == Z:
        return Matrix.diagonal(Z, [e.g for e in es])
    if chain.n == 1:
        return Matrix(ZSQRT5, [[is_principal(es[0])]])
    if chain.n > 2:
        raise UnsupportedConstructionError(
            "constructions over Z[sqrt(-5)] are supported up to n = 2"
        )
    for m in _search_quadratic_2x2(chain.d[0], chain.d[1]):
        return m
    raise SearchExhaustedError(
        f"no witness with coordinates up to {SEARCH_RADII[-1]} for {es!r}"
    )


def realize_product_equal(a: DivisorChain, b: DivisorChain) -> tuple[Matrix, Matrix]:
    """Matrices (A, B) with chains a and b whose product realizes the
    entrywise product chain a*b; verified by recomputation before return."""
    if not check_chain(a):
        raise InvalidChainError("first chain is not realizable")
    if not check_chain(b):
        raise InvalidChainError("second chain is not realizable")
    ring = a.ring
    target = tuple(x * y for x, y in zip(a.d, b.d))
    if ring == Z:
        ma = Matrix.diagonal(Z, [e.g for e in a.elementary])
        mb = Matrix.diagonal(Z, [e.g for e in b.elementary])
        assert divisor_chain(ma @ mb).d == target
        return ma, mb
    if a.n == 1:
        ma = Matrix(ZSQRT5, [[is_principal(a.d[0])]])
        mb = Matrix(ZSQRT5, [[is_principal(b.d[0])]])
        return ma, mb
    if a.n > 2:
        raise UnsupportedConstructionError(
            "constructions over Z[sqrt(-5)] are supported up to n = 2"
        )
    # lazy nested sweep: candidates for the second chain are cached as they
    # are discovered so the inner brute-force sweep runs at most once
    cache_b: list[Matrix] = []
    iter_b = _search_quadratic_2x2(b.d[0], b.d[1])

    def candidates_b():
        yield from cache_b
        while len(cache_b) < MAX_PRODUCT_CANDIDATES:
            m = next(iter_b, None)
            if m is None:
                return
            cache_b.append(m)
            yield m

    for _, ma in zip(range(MAX_PRODUCT_CANDIDATES), _search_quadratic_2x2(a.d[0], a.d[1])):
        for mb in candidates_b():
            if divisor_chain(ma @ mb).d == target:
                return ma, mb
    raise SearchExhaustedError("no product witness within the candidate cap")


def realize_n2(a: tuple[Ideal, Ideal], b: tuple[Ideal, Ideal],
               c: tuple[Ideal, Ideal]) -> tuple[Matrix, Matrix] | None:
    """The complete 2 x 2 decision over Z.  When the three conditions hold
    (square steps inside each chain, multiplicative top divisors, and
    c_1 caught between a_1 b_1 and a_1 b_1 gcd(a_2/a_1^2, b_2/b_1^2)),
    returns the explicit verified witness pair; otherwise None."""
    for ideal in (*a, *b, *c):
        if ideal.ring != Z:
            raise ValueError("the 2 x 2 decision applies to Z chains only")
        if ideal.is_zero():
            raise ValueError("chains must be nonzero")
    a1, a2 = a[0].g, a[1].g
    b1, b2 = b[0].g, b[1].g
    c1, c2 = c[0].g, c[1].g
    if a2 % (a1 * a1) or b2 % (b1 * b1) or c2 % (c1 * c1):
        return None
    if a2 * b2 != c2:
        return None
    if c1 % (a1 * b1):
        return None
    g = math.gcd(a2 // (a1 * a1), b2 // (b1 * b1))
    if (a1 * b1 * g) % c1:
        return None
    d = c1 // (a1 * b1)
    wa = Matrix(Z, [[a1 * d, a1], [a2 // a1, 0]])
    wb = Matrix.diagonal(Z, [b1, b2 // b1])
    assert divisor_chain(wa).d == a
    assert divisor_chain(wb).d == b
    assert divisor_chain(wa @ wb).d == c
    return wa, wb


def _cond_square_step(chain: tuple[Ideal, ...]) -> bool:
    return (chain[0] * chain[0]).divides(chain[1])


def _cond_ratio_step(chain: tuple[Ideal, ...], k: int) -> bool:
    # monotone second differences, cleared of inverses:
    # d_{k-1}^2 | d_k * d_{k-2}   (1-based k >= 3)
    return (chain[k - 2] * chain[k - 2]).divides(chain[k - 1] * chain[k - 3])


def check_triple(t: Triple) -> Verdict:
    """Run the six necessary conditions in order, then the sufficient
    branches: the product-chain construction when c = a*b entrywise, and
    the complete 2 x 2 decision over Z.  Everything else is Unknown."""
    a, b, c = t.a.d, t.b.d, t.c.d
    n = t.n

    for chain in (a, b, c):
        if is_principal(chain[n - 1]) is None:
            return Verdict(NOT_REALIZABLE, violated_condition=1,
                           rationale="top divisor not principal")
    if n >= 2:
        for chain in (a, b, c):
            if not _cond_square_step(chain):
                return Verdict(NOT_REALIZABLE, violated_condition=2,
                               rationale="first square step fails")
        for chain in (a, b, c):
            for k in range(3, n + 1):
                if not _cond_ratio_step(chain, k):
                    return Verdict(NOT_REALIZABLE, violated_condition=3,
                                   rationale=f"step ratio fails at k={k}")
    if a[n - 1] * b[n - 1] != c[n - 1]:
        return Verdict(NOT_REALIZABLE, violated_condition=4,
                       rationale="top divisors are not multiplicative")
    for k in range(1, n):
        if not (a[k - 1] * b[k - 1]).divides(c[k - 1]):
            return Verdict(NOT_REALIZABLE, violated_condition=5,
                           rationale=f"lower product bound fails at k={k}")
    for k in range(1, n):
        lhs = c[k - 1] * a[n - k - 1] * b[n - k - 1]
        rhs = a[n - k - 1] * a[k - 1] * b[n - 1] + b[n - k - 1] * b[k - 1] * a[n - 1]
        if not lhs.divides(rhs):
            return Verdict(NOT_REALIZABLE, violated_condition=6,
                           rationale=f"upper bound fails at k={k}")

    if all(ck == ak * bk for ak, bk, ck in zip(a, b, c)):
        try:
            witness = realize_product_equal(t.a, t.b)
        except UnsupportedConstructionError:
            return Verdict(REALIZABLE, rationale="product chain (witness construction out of scope)")
        return Verdict(REALIZABLE, witness=witness, rationale="product chain")

    if n == 2 and t.ring == Z:
        witness = realize_n2((a[0], a[1]), (b[0], b[1]), (c[0], c[1]))
        assert witness is not None, "necessary conditions imply the 2 x 2 construction"
        return Verdict(REALIZABLE, witness=witness, rationale="complete 2 x 2 decision")

    return Verdict(UNKNOWN, rationale="no decision rule covers this case")
