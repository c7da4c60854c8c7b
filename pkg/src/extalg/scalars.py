"""Exact scalar fields.

Rationals are plain :class:`fractions.Fraction` (their ``conjugate`` is the
identity).  :class:`Gaussian` provides ``a + bi`` with rational parts for the
Hermitian case.
"""

from fractions import Fraction
from numbers import Rational


def as_scalar(x):
    """Coerce ints to ``Fraction``; leave other exact scalars alone."""
    if isinstance(x, Gaussian):
        return x
    if isinstance(x, Rational):
        return Fraction(x)
    if isinstance(x, complex):
        raise TypeError("floating complex numbers are not exact; use Gaussian")
    if isinstance(x, float):
        raise TypeError("floats are not exact; use Fraction")
    raise TypeError(f"not an exact scalar: {x!r}")


def conj(x):
    return x.conjugate()


class Gaussian:
    """Gaussian rational ``re + im*i``."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("Gaussian is immutable")

    @staticmethod
    def _coerce(other):
        if isinstance(other, Gaussian):
            return other
        if isinstance(other, Rational):
            return Gaussian(other, 0)
        return None

    def conjugate(self):
        return Gaussian(self.re, -self.im)

    def norm2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Gaussian(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Gaussian(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Gaussian(self.re * o.re - self.im * o.im,
                        self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = o.norm2()
        if d == 0:
            raise ZeroDivisionError("Gaussian division by zero")
        num = self * o.conjugate()
        return Gaussian(num.re / d, num.im / d)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return Gaussian(-self.re, -self.im)

    def __pos__(self):
        return self

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"Gaussian({self.re}, {self.im})"

    def __str__(self):
        sign = "-" if self.im < 0 else "+"
        return f"({self.re}{sign}{abs(self.im)}i)"


I = Gaussian(0, 1)
