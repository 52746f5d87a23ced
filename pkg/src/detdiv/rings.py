"""Exact arithmetic for the two ring backends: the rational integers Z and
the quadratic order Z[sqrt(-5)], together with their integral ideals,
fractional ideals, and ideal classes.

Elements are pairs of arbitrary-precision integers (a, b) meaning
a + b*sqrt(-5); over Z the second coordinate is forced to zero.  Ideals are
kept in a canonical form so that equality is structural: a nonnegative
generator over Z, a reduced row-style Hermite basis over Z[sqrt(-5)].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

Z = "Z"
ZSQRT5 = "ZSqrt-5"
RINGS = (Z, ZSQRT5)


class RingMismatchError(ValueError):
    """Raised when two operands live in different rings."""


def _same_ring(x, y) -> str:
    if x.ring != y.ring:
        raise RingMismatchError(f"ring mismatch: {x.ring} vs {y.ring}")
    return x.ring


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and g = a*x + b*y."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


class RingElem:
    """An exact element a + b*sqrt(-5) of the tagged ring (b = 0 over Z)."""

    __slots__ = ("ring", "a", "b")

    def __init__(self, ring: str, a: int, b: int = 0):
        if ring not in RINGS:
            raise ValueError(f"unknown ring tag {ring!r}")
        if ring == Z and b != 0:
            raise ValueError("elements of Z have no sqrt(-5) coordinate")
        self.ring = ring
        self.a = int(a)
        self.b = int(b)

    @classmethod
    def of(cls, ring: str, value) -> "RingElem":
        """Coerce an int, an (a, b) pair, or a RingElem into the given ring."""
        if isinstance(value, RingElem):
            if value.ring != ring:
                raise RingMismatchError(f"ring mismatch: {value.ring} vs {ring}")
            return value
        if isinstance(value, int):
            return cls(ring, value)
        a, b = value
        return cls(ring, a, b)

    def _coerce(self, other) -> "RingElem":
        if isinstance(other, RingElem):
            _same_ring(self, other)
            return other
        if isinstance(other, int):
            return RingElem(self.ring, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RingElem(self.ring, self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RingElem(self.ring, self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        # (a + b*s)(c + d*s) = ac - 5bd + (ad + bc)*s  with s^2 = -5
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RingElem(
            self.ring,
            self.a * other.a - 5 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return RingElem(self.ring, -self.a, -self.b)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.a == other and self.b == 0
        if not isinstance(other, RingElem):
            return NotImplemented
        return self.ring == other.ring and self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.ring, self.a, self.b))

    def __repr__(self):
        if self.ring == Z:
            return f"RingElem(Z, {self.a})"
        return f"RingElem({self.ring!r}, {self.a}, {self.b})"

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def norm(self) -> int:
        """Field norm a^2 + 5*b^2; nonnegative, zero only at zero, multiplicative."""
        return self.a * self.a + 5 * self.b * self.b

    def conj(self) -> "RingElem":
        return RingElem(self.ring, self.a, -self.b)

    def is_unit(self) -> bool:
        return self.norm() == 1

    def exact_div(self, other: "RingElem") -> "RingElem":
        """Exact quotient self / other; raises if other does not divide self."""
        other = self._coerce(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero ring element")
        num = self * other.conj()
        qa, ra = divmod(num.a, n)
        qb, rb = divmod(num.b, n)
        if ra or rb:
            raise ValueError(f"{other!r} does not divide {self!r}")
        return RingElem(self.ring, qa, qb)

    def divides(self, other: "RingElem") -> bool:
        other = self._coerce(other)
        n = self.norm()
        if n == 0:
            return other.is_zero()
        num = other * self.conj()
        return num.a % n == 0 and num.b % n == 0


def _hnf_rows(rows) -> tuple[int, int, int] | None:
    """Canonical row Hermite basis (a, b, c) of the Z-module spanned by the
    given (u, v) coordinate pairs, meaning basis rows (a, 0) and (b, c) with
    a > 0, c > 0, 0 <= b < a.  Returns None for the zero module.

    The module must have full rank 2 whenever some generator has a nonzero
    second coordinate path; rank-1 modules inside Z are reported as
    (a, 0, 0).
    """
    vecs = [(int(u), int(v)) for u, v in rows if u or v]
    if not vecs:
        return None
    # Combine generators until the second coordinate reaches its gcd.
    c = 0
    w1 = 0
    for u, v in vecs:
        if v == 0:
            continue
        if c == 0:
            c, w1 = (v, u) if v > 0 else (-v, -u)
        else:
            g, x, y = _xgcd(c, v)
            w1 = x * w1 + y * u
            c = g
    firsts = []
    for u, v in vecs:
        if c:
            u -= (v // c) * w1
        firsts.append(u)
    a = reduce(math.gcd, firsts, 0)
    if c == 0:
        return (a, 0, 0)
    if a == 0:
        raise ValueError("rank-1 module with nonzero second coordinate is not a lattice")
    b = w1 % a
    return (a, b, c)


def _lattice_contains(hnf: tuple[int, int, int], u: int, v: int) -> bool:
    a, b, c = hnf
    if v % c:
        return False
    y = v // c
    return (u - y * b) % a == 0


class Ideal:
    """An integral ideal in canonical form.

    Over Z the ideal is (g) with g >= 0 (g = 0 is the zero ideal).  Over
    Z[sqrt(-5)] a nonzero ideal is stored as the unique Hermite basis
    (a, 0), (b, c) of its coordinate lattice; the zero ideal has no basis.
    """

    __slots__ = ("ring", "g", "hnf")

    def __init__(self, ring: str, g: int = 0, hnf: tuple[int, int, int] | None = None):
        if ring not in RINGS:
            raise ValueError(f"unknown ring tag {ring!r}")
        self.ring = ring
        if ring == Z:
            self.g = abs(int(g))
            self.hnf = None
        else:
            self.g = 0
            self.hnf = tuple(int(x) for x in hnf) if hnf is not None else None
            if self.hnf is not None:
                a, b, c = self.hnf
                if a <= 0 or c <= 0 or not (0 <= b < a):
                    raise ValueError(f"basis {self.hnf} is not in reduced Hermite form")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, ring: str) -> "Ideal":
        return cls(ring)

    @classmethod
    def unit(cls, ring: str) -> "Ideal":
        if ring == Z:
            return cls(ring, 1)
        return cls(ring, hnf=(1, 0, 1))

    @classmethod
    def principal(cls, x: RingElem) -> "Ideal":
        return ideal_from_generators([x])

    @classmethod
    def from_int(cls, ring: str, n: int) -> "Ideal":
        """The principal ideal generated by the rational integer n."""
        n = abs(int(n))
        if ring == Z:
            return cls(ring, n)
        if n == 0:
            return cls.zero(ring)
        return cls(ring, hnf=(n, 0, n))

    # -- structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return self.g == 0 if self.ring == Z else self.hnf is None

    def is_unit_ideal(self) -> bool:
        if self.ring == Z:
            return self.g == 1
        return self.hnf == (1, 0, 1)

    def norm(self) -> int:
        """Module index [ring : ideal]; 0 for the zero ideal; multiplicative."""
        if self.ring == Z:
            return self.g
        if self.hnf is None:
            return 0
        a, _, c = self.hnf
        return a * c

    def basis_elements(self) -> list[RingElem]:
        if self.is_zero():
            return []
        if self.ring == Z:
            return [RingElem(Z, self.g)]
        a, b, c = self.hnf
        return [RingElem(ZSQRT5, a, 0), RingElem(ZSQRT5, b, c)]

    def contains(self, x: RingElem) -> bool:
        if x.ring != self.ring:
            raise RingMismatchError(f"ring mismatch: {x.ring} vs {self.ring}")
        if self.is_zero():
            return x.is_zero()
        if self.ring == Z:
            return x.a % self.g == 0
        return _lattice_contains(self.hnf, x.a, x.b)

    def is_closed_under_root(self) -> bool:
        """Check the ideal test: the lattice is stable under multiplication
        by sqrt(-5).  Always true for values built by this module; used to
        validate externally supplied bases."""
        if self.ring == Z or self.hnf is None:
            return True
        a, b, c = self.hnf
        return _lattice_contains(self.hnf, 0, a) and _lattice_contains(self.hnf, -5 * c, b)

    # -- arithmetic ---------------------------------------------------

    def __mul__(self, other: "Ideal") -> "Ideal":
        _same_ring(self, other)
        if self.is_zero() or other.is_zero():
            return Ideal.zero(self.ring)
        if self.ring == Z:
            return Ideal(Z, self.g * other.g)
        gens = [x * y for x in self.basis_elements() for y in other.basis_elements()]
        return ideal_from_generators(gens)

    def __add__(self, other: "Ideal") -> "Ideal":
        """Ideal sum, the gcd in the ideal-theoretic sense."""
        _same_ring(self, other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.ring == Z:
            return Ideal(Z, math.gcd(self.g, other.g))
        rows = [(e.a, e.b) for e in self.basis_elements() + other.basis_elements()]
        return Ideal(ZSQRT5, hnf=_hnf_rows(rows))

    def divides(self, other: "Ideal") -> bool:
        """True iff other is contained in self (to divide is to contain).

        The zero ideal divides only the zero ideal.
        """
        _same_ring(self, other)
        if self.is_zero():
            return other.is_zero()
        if other.is_zero():
            return True
        if self.ring == Z:
            return other.g % self.g == 0
        return all(_lattice_contains(self.hnf, e.a, e.b) for e in other.basis_elements())

    def scale(self, t: int) -> "Ideal":
        """The product of this ideal with the rational integer t > 0."""
        if t <= 0:
            raise ValueError("scale factor must be a positive integer")
        if self.is_zero():
            return self
        if self.ring == Z:
            return Ideal(Z, self.g * t)
        a, b, c = self.hnf
        return Ideal(ZSQRT5, hnf=(a * t, b * t, c * t))

    def content(self) -> int:
        """Largest rational integer dividing every element (0 for the zero ideal)."""
        if self.ring == Z:
            return self.g
        if self.hnf is None:
            return 0
        a, b, c = self.hnf
        return math.gcd(math.gcd(a, b), c)

    def divide_by_int(self, t: int) -> "Ideal":
        """Exact quotient by a positive rational integer dividing the content."""
        if t <= 0:
            raise ValueError("divisor must be a positive integer")
        if self.is_zero():
            return self
        if self.content() % t:
            raise ValueError(f"{t} does not divide the ideal elementwise")
        if self.ring == Z:
            return Ideal(Z, self.g // t)
        a, b, c = self.hnf
        return Ideal(ZSQRT5, hnf=(a // t, b // t, c // t))

    def conj(self) -> "Ideal":
        if self.ring == Z or self.hnf is None:
            return self
        a, b, c = self.hnf
        return Ideal(ZSQRT5, hnf=_hnf_rows([(a, 0), (b, -c)]))

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.g == other.g and self.hnf == other.hnf

    def __hash__(self):
        return hash((self.ring, self.g, self.hnf))

    def __repr__(self):
        if self.ring == Z:
            return f"Ideal(Z, {self.g})"
        return f"Ideal({self.ring!r}, hnf={self.hnf})"


def ideal_from_generators(elems) -> Ideal:
    """The ideal generated by the given elements (their ideal-theoretic gcd).

    Over Z[sqrt(-5)] this is the Hermite form of the module spanned by every
    generator together with its sqrt(-5) multiple, which forces the ideal
    closure property.
    """
    elems = list(elems)
    if not elems:
        raise ValueError("need at least one generator")
    ring = elems[0].ring
    for e in elems[1:]:
        _same_ring(elems[0], e)
    if ring == Z:
        g = reduce(math.gcd, (abs(e.a) for e in elems), 0)
        return Ideal(Z, g)
    root = RingElem(ZSQRT5, 0, 1)
    rows = []
    for e in elems:
        rows.append((e.a, e.b))
        re = e * root
        rows.append((re.a, re.b))
    hnf = _hnf_rows(rows)
    if hnf is None:
        return Ideal.zero(ZSQRT5)
    return Ideal(ZSQRT5, hnf=hnf)


def is_principal(X: Ideal) -> RingElem | None:
    """A generator if X is principal, else None.

    Over Z[sqrt(-5)] the search solves the norm form a^2 + 5*b^2 = norm(X)
    and tests membership; any member of matching norm generates the ideal.
    The zero ideal counts as principal with generator 0.
    """
    if X.is_zero():
        return RingElem(X.ring, 0)
    if X.ring == Z:
        return RingElem(Z, X.g)
    n = X.norm()
    for b in range(math.isqrt(n // 5) + 1):
        rest = n - 5 * b * b
        a = math.isqrt(rest)
        if a * a != rest:
            continue
        for cand in ((a, b), (-a, b)) if a and b else ((a, b),):
            x = RingElem(ZSQRT5, *cand)
            if X.contains(x):
                # norm equality makes (x) a full-index subideal, hence equal
                return x if (x.a > 0 or (x.a == 0 and x.b > 0)) else -x
    return None


@dataclass(frozen=True)
class IdealClass:
    """An ideal class: for these rings, just the principality bit with a
    canonical representative (class group of Z[sqrt(-5)] has order 2)."""

    ring: str
    principal: bool

    @property
    def representative(self) -> Ideal:
        if self.principal:
            return Ideal.unit(self.ring)
        return Ideal(ZSQRT5, hnf=(2, 1, 1))

    def __mul__(self, other: "IdealClass") -> "IdealClass":
        _same_ring(self, other)
        return IdealClass(self.ring, self.principal == other.principal)


def ideal_class(X: Ideal) -> IdealClass:
    if X.is_zero():
        raise ValueError("the zero ideal has no ideal class")
    return IdealClass(X.ring, is_principal(X) is not None)


class FracIdeal:
    """A fractional ideal num/den with a nonzero integral numerator and a
    positive rational-integer denominator, kept reduced (no integer > 1
    divides num elementwise while dividing den)."""

    __slots__ = ("num", "den")

    def __init__(self, num: Ideal, den: int = 1):
        if num.is_zero():
            raise ValueError("fractional ideals must be nonzero")
        den = int(den)
        if den <= 0:
            raise ValueError("denominator must be a positive integer")
        t = math.gcd(num.content(), den)
        if t > 1:
            num = num.divide_by_int(t)
            den //= t
        self.num = num
        self.den = den

    @property
    def ring(self) -> str:
        return self.num.ring

    def is_integral(self) -> bool:
        return self.den == 1

    def as_ideal(self) -> Ideal:
        if not self.is_integral():
            raise ValueError(f"{self!r} is not integral")
        return self.num

    def __mul__(self, other: "FracIdeal") -> "FracIdeal":
        _same_ring(self, other)
        return FracIdeal(self.num * other.num, self.den * other.den)

    def __add__(self, other: "FracIdeal") -> "FracIdeal":
        _same_ring(self, other)
        return FracIdeal(self.num.scale(other.den) + other.num.scale(self.den),
                         self.den * other.den)

    def inverse(self) -> "FracIdeal":
        if self.ring == Z:
            return FracIdeal(Ideal(Z, self.den), self.num.g)
        # num * conj(num) = (norm(num)) in the maximal order, so
        # (num/den)^-1 = den * conj(num) / norm(num).
        return FracIdeal(self.num.conj().scale(self.den), self.num.norm())

    def divides(self, other: "FracIdeal") -> bool:
        _same_ring(self, other)
        return (other * self.inverse()).is_integral()

    def __eq__(self, other):
        if not isinstance(other, FracIdeal):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"FracIdeal({self.num!r}, {self.den})"


def ideal_quotient_exact(X: Ideal, Y: Ideal) -> Ideal | None:
    """The integral ideal X * Y^-1, or None when Y does not divide X."""
    if X.is_zero():
        return Ideal.zero(X.ring)
    q = FracIdeal(X) * FracIdeal(Y).inverse()
    return q.num if q.is_integral() else None
