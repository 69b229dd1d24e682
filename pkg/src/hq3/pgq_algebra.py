"""Three-parameter generalized quaternions over an exact coefficient field.

The basis 1, i, j, k multiplies by

    i^2 = -l1*l2    j^2 = -l1*l3    k^2 = -l2*l3
    ij = l1*k   ji = -l1*k   jk = l3*i   kj = -l3*i   ki = l2*j   ik = -l2*j

with (l1, l2, l3) = (1, 1, 1) giving Hamilton's quaternions.  Coefficients may
be rationals or QuadExt elements; the parameters are always rational.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MismatchedParams
from .exact_arith import QuadExt, Rational, rat


@dataclass(frozen=True)
class PgqParams:
    l1: Rational
    l2: Rational
    l3: Rational

    @classmethod
    def of(cls, l1, l2, l3) -> PgqParams:
        return cls(rat(l1), rat(l2), rat(l3))

    @classmethod
    def hamilton(cls) -> PgqParams:
        return cls.of(1, 1, 1)

    def as_tuple(self):
        return (self.l1, self.l2, self.l3)

    def to_json(self) -> list[str]:
        return [str(self.l1), str(self.l2), str(self.l3)]


HAMILTON = PgqParams.hamilton()


def _coeff(value):
    return value if isinstance(value, QuadExt) else rat(value)


class Quaternion:
    """x0 + x1 i + x2 j + x3 k with coefficients in Q or Q(sqrt(D))."""

    __slots__ = ("x0", "x1", "x2", "x3", "lam")

    def __init__(self, x0, x1, x2, x3, lam: PgqParams):
        self.x0 = _coeff(x0)
        self.x1 = _coeff(x1)
        self.x2 = _coeff(x2)
        self.x3 = _coeff(x3)
        self.lam = lam

    @classmethod
    def scalar(cls, value, lam: PgqParams) -> Quaternion:
        return cls(value, 0, 0, 0, lam)

    @classmethod
    def zero(cls, lam: PgqParams) -> Quaternion:
        return cls(0, 0, 0, 0, lam)

    @classmethod
    def basis(cls, lam: PgqParams) -> tuple[Quaternion, ...]:
        """The four units (1, i, j, k)."""
        return (
            cls(1, 0, 0, 0, lam),
            cls(0, 1, 0, 0, lam),
            cls(0, 0, 1, 0, lam),
            cls(0, 0, 0, 1, lam),
        )

    @property
    def coeffs(self):
        return (self.x0, self.x1, self.x2, self.x3)

    def _require_same(self, other: Quaternion):
        if self.lam != other.lam:
            raise MismatchedParams(
                f"cannot combine parameters {self.lam.as_tuple()} with {other.lam.as_tuple()}"
            )

    def __add__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        self._require_same(other)
        return Quaternion(
            self.x0 + other.x0,
            self.x1 + other.x1,
            self.x2 + other.x2,
            self.x3 + other.x3,
            self.lam,
        )

    def __sub__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        self._require_same(other)
        return Quaternion(
            self.x0 - other.x0,
            self.x1 - other.x1,
            self.x2 - other.x2,
            self.x3 - other.x3,
            self.lam,
        )

    def __neg__(self):
        return Quaternion(-self.x0, -self.x1, -self.x2, -self.x3, self.lam)

    def scale(self, c) -> Quaternion:
        """Multiply every coefficient by the (central) scalar c."""
        return Quaternion(c * self.x0, c * self.x1, c * self.x2, c * self.x3, self.lam)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            self._require_same(other)
            x0, x1, x2, x3 = self.x0, self.x1, self.x2, self.x3
            y0, y1, y2, y3 = other.x0, other.x1, other.x2, other.x3
            l1, l2, l3 = self.lam.l1, self.lam.l2, self.lam.l3
            return Quaternion(
                x0 * y0 - l1 * l2 * (x1 * y1) - l1 * l3 * (x2 * y2) - l2 * l3 * (x3 * y3),
                x0 * y1 + x1 * y0 + l3 * (x2 * y3 - x3 * y2),
                x0 * y2 + x2 * y0 + l2 * (x3 * y1 - x1 * y3),
                x0 * y3 + x3 * y0 + l1 * (x1 * y2 - x2 * y1),
                self.lam,
            )
        return self.scale(other)

    def __rmul__(self, other):
        # only scalars reach here; coefficient fields are commutative
        return self.scale(other)

    def conjugate(self) -> Quaternion:
        """Negate the vector part; (PQ)^dag = Q^dag P^dag."""
        return Quaternion(self.x0, -self.x1, -self.x2, -self.x3, self.lam)

    def norm(self):
        """Scalar of Q Q^dag: x0^2 + l1 l2 x1^2 + l1 l3 x2^2 + l2 l3 x3^2."""
        l1, l2, l3 = self.lam.l1, self.lam.l2, self.lam.l3
        return (
            self.x0 * self.x0
            + l1 * l2 * (self.x1 * self.x1)
            + l1 * l3 * (self.x2 * self.x2)
            + l2 * l3 * (self.x3 * self.x3)
        )

    def map_coeffs(self, fn) -> Quaternion:
        return Quaternion(fn(self.x0), fn(self.x1), fn(self.x2), fn(self.x3), self.lam)

    @property
    def is_rational(self) -> bool:
        return all(
            not isinstance(c, QuadExt) or c.is_rational for c in self.coeffs
        )

    def rationalized(self) -> Quaternion:
        """Coefficients as plain rationals; raises ValueError on a sqrt part."""
        return self.map_coeffs(
            lambda c: c.as_rational() if isinstance(c, QuadExt) else c
        )

    def __eq__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return self.lam == other.lam and (
            self.x0 == other.x0
            and self.x1 == other.x1
            and self.x2 == other.x2
            and self.x3 == other.x3
        )

    def __hash__(self):
        return hash((self.x0, self.x1, self.x2, self.x3, self.lam))

    def __bool__(self):
        return any(bool(c) for c in self.coeffs)

    def __repr__(self):
        return f"Quaternion({self.x0!s}, {self.x1!s}, {self.x2!s}, {self.x3!s}, lam={self.lam.as_tuple()})"

    def __str__(self):
        return f"{self.x0} + {self.x1} i + {self.x2} j + {self.x3} k"

    def to_json(self) -> dict:
        def enc(c):
            return c.to_json() if isinstance(c, QuadExt) else str(c)

        return {
            "x0": enc(self.x0),
            "x1": enc(self.x1),
            "x2": enc(self.x2),
            "x3": enc(self.x3),
            "lambda": self.lam.to_json(),
        }


def commutator(p: Quaternion, q: Quaternion) -> Quaternion:
    """[P, Q] = PQ - QP; always has zero scalar part."""
    return p * q - q * p
