"""Exact arithmetic in the real quadratic field Q(sqrt 5).

Root systems of the non-crystallographic types H3, H4 and I2(5) need the
golden ratio; everything else stays rational.  A scalar is stored as a pair
(a, b) of rationals meaning a + b*sqrt(5), so equality and sign tests are
exact and no rounding ever happens.
"""

from __future__ import annotations

from fractions import Fraction


class Sqrt5(object):
    """A number a + b*sqrt(5) with rational a, b.

    Immutable; supports +, -, *, /, exact comparison with other Sqrt5 values
    and with ints/Fractions.  `b` stays 0 for crystallographic input, so the
    same code path serves both kinds of root system.
    """

    __slots__ = ("a", "b", "_hash")

    def __init__(self, a=0, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self._hash = None

    # -- constructors ------------------------------------------------

    @staticmethod
    def golden():
        """The golden ratio (1 + sqrt 5)/2, a root of x^2 = x + 1."""
        return Sqrt5(Fraction(1, 2), Fraction(1, 2))

    def _coerce(self, other):
        if isinstance(other, Sqrt5):
            return other
        if isinstance(other, (int, Fraction)):
            return Sqrt5(other)
        return None

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Sqrt5(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Sqrt5(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Sqrt5(self.a * o.a + 5 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __neg__(self):
        return Sqrt5(-self.a, -self.b)

    def inverse(self):
        n = self.a * self.a - 5 * self.b * self.b
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt 5)")
        return Sqrt5(self.a / n, -self.b / n)

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

    # -- order --------------------------------------------------------

    def sign(self):
        """Exact sign of a + b*sqrt(5): -1, 0 or +1."""
        a, b = self.a, self.b
        if b == 0:
            return -1 if a < 0 else (0 if a == 0 else 1)
        if a == 0:
            return -1 if b < 0 else 1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare a^2 with 5 b^2
        d = a * a - 5 * b * b
        big_is_a = d > 0
        if a > 0:  # b < 0
            return 1 if big_is_a else (-1 if d < 0 else 0)
        return -1 if big_is_a else (1 if d < 0 else 0)

    def is_zero(self):
        return self.a == 0 and self.b == 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __le__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() <= 0

    def __gt__(self, other):
        return not self <= other

    def __ge__(self, other):
        return not self < other

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.a, self.b))
        return self._hash

    def __float__(self):
        return float(self.a) + float(self.b) * 5 ** 0.5

    def __repr__(self):
        if self.b == 0:
            return "Sqrt5(%s)" % (self.a,)
        return "Sqrt5(%s, %s)" % (self.a, self.b)


ZERO = Sqrt5(0)
ONE = Sqrt5(1)
PHI = Sqrt5.golden()
