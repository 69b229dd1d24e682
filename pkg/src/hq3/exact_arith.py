"""Exact arithmetic: arbitrary-precision rationals and the quadratic extension Q(sqrt(D)).

Rationals are gmpy2 ``mpq`` values (always in lowest terms, positive
denominator).  ``QuadExt`` is the formal ring Q[x]/(x^2 - D): when D is not a
perfect square this is the field Q(sqrt(D)); when D is a square or negative the
arithmetic is still exact and all polynomial identities remain valid, which is
all the verification machinery needs.
"""

from __future__ import annotations

from fractions import Fraction

from gmpy2 import mpq

from .errors import DegenerateRoots, DivisionByZero, MismatchedDiscriminant, ZeroRoot

Rational = mpq

_SCALAR_TYPES = (int, type(mpq()), Fraction)

_HALF = mpq(1, 2)


def rat(value) -> mpq:
    """Parse an exact rational from an int, "n"/"n/d" string, Fraction or mpq."""
    if isinstance(value, float):
        raise TypeError(f"refusing float {value!r}; pass an int or a 'n/d' string")
    try:
        return mpq(value)
    except (ValueError, TypeError) as exc:
        raise ValueError(f"not a rational: {value!r}") from exc


def rat_str(value) -> str:
    """Render a rational as "n" or "n/d"."""
    return str(value)


class QuadExt:
    """Element a + b*sqrt(D) with exact rational components and fixed D.

    Values with different D never combine arithmetically.  Equality is
    structural on (a, b, D), except that rational-valued elements (b = 0)
    compare equal to plain rationals and to b = 0 elements of any D.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d):
        self.a = rat(a)
        self.b = rat(b)
        self.d = rat(d)

    @classmethod
    def from_rational(cls, value, d) -> QuadExt:
        return cls(value, 0, d)

    @classmethod
    def sqrt_disc(cls, d) -> QuadExt:
        """The generator sqrt(D) itself."""
        return cls(0, 1, d)

    def _coerce(self, other) -> QuadExt | None:
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise MismatchedDiscriminant(
                    f"cannot combine sqrt({self.d}) with sqrt({other.d})"
                )
            return other
        if isinstance(other, _SCALAR_TYPES):
            return QuadExt(other, 0, self.d)
        return None

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(o.a - self.a, o.b - self.b, self.d)

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __mul__(self, other):
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise MismatchedDiscriminant(
                    f"cannot combine sqrt({self.d}) with sqrt({other.d})"
                )
            a1, b1, a2, b2 = self.a, self.b, other.a, other.b
            return QuadExt(a1 * a2 + self.d * b1 * b2, a1 * b2 + b1 * a2, self.d)
        if isinstance(other, _SCALAR_TYPES):
            return QuadExt(self.a * other, self.b * other, self.d)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = QuadExt(1, 0, self.d)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def inverse(self) -> QuadExt:
        """Multiplicative inverse, computed as conjugate over norm."""
        nrm = self.norm()
        if nrm == 0:
            raise DivisionByZero(f"{self!r} has norm 0 and no inverse")
        return QuadExt(self.a / nrm, -self.b / nrm, self.d)

    # -- Galois structure ----------------------------------------------------

    def conjugate(self) -> QuadExt:
        """a + b*sqrt(D) -> a - b*sqrt(D); swaps the two characteristic roots."""
        return QuadExt(self.a, -self.b, self.d)

    def norm(self):
        """x * conj(x) = a^2 - D b^2, always rational."""
        return self.a * self.a - self.d * self.b * self.b

    def trace(self):
        """x + conj(x) = 2a, always rational."""
        return 2 * self.a

    # -- rationality ---------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_rational(self):
        if self.b != 0:
            raise ValueError(f"{self!r} has a nonzero sqrt({self.d}) part")
        return self.a

    # -- comparison / hashing -------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            if self.b == 0 and other.b == 0:
                return self.a == other.a
            return self.a == other.a and self.b == other.b and self.d == other.d
        if isinstance(other, _SCALAR_TYPES):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __repr__(self):
        return f"QuadExt({self.a!s}, {self.b!s}, d={self.d!s})"

    def __str__(self):
        return f"{self.a} + {self.b}*sqrt({self.d})"

    # -- serialization ---------------------------------------------------------

    def to_json(self) -> dict:
        return {"a": str(self.a), "b": str(self.b), "D": str(self.d)}

    @classmethod
    def from_json(cls, obj: dict) -> QuadExt:
        return cls(rat(obj["a"]), rat(obj["b"]), rat(obj["D"]))


def embed_roots(p, q) -> tuple[QuadExt, QuadExt, mpq]:
    """Roots alpha, beta of x^2 - p x + q inside Q(sqrt(D)), D = p^2 - 4q.

    Returns (alpha, beta, D) with alpha = (p + sqrt(D))/2, beta its conjugate,
    so that alpha + beta = p and alpha * beta = q.
    """
    p = rat(p)
    q = rat(q)
    if q == 0:
        raise ZeroRoot("q = 0: zero is a characteristic root")
    d = p * p - 4 * q
    if d == 0:
        raise DegenerateRoots("p^2 - 4q = 0: repeated characteristic root")
    alpha = QuadExt(p * _HALF, _HALF, d)
    return alpha, alpha.conjugate(), d
