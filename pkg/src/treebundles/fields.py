"""Exact coefficient fields: rationals (default) and odd prime fields.

Everything downstream is written against plain operator arithmetic, so an
element is either a fractions.Fraction or an FpElement; both support
+, -, *, /, ==, bool() (nonzero test) and never lose exactness.
"""
from __future__ import annotations

from fractions import Fraction


class FpElement:
    """Residue modulo a prime, with Fraction-like operator arithmetic."""

    __slots__ = ("val", "p")

    def __init__(self, val: int, p: int):
        self.val = val % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise ValueError("mixed moduli %d and %d" % (self.p, other.p))
            return other
        if isinstance(other, int):
            return FpElement(other, self.p)
        return None

    def __add__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else FpElement(self.val + o.val, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else FpElement(self.val - o.val, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else FpElement(o.val - self.val, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else FpElement(self.val * o.val, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.val == 0:
            raise ZeroDivisionError("division by zero mod %d" % self.p)
        return FpElement(self.val * pow(o.val, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else o.__truediv__(self)

    def __neg__(self):
        return FpElement(-self.val, self.p)

    def __eq__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else self.val == o.val

    def __hash__(self):
        return hash((self.val, self.p))

    def __bool__(self):
        return self.val != 0

    def __repr__(self):
        return "FpElement(%d, p=%d)" % (self.val, self.p)


def _is_prime(n: int) -> bool:
    # deterministic Miller-Rabin, exact for anything we will ever see
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class RationalField:
    """Exact rational numbers via fractions.Fraction."""

    name = "q"
    char = 0

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def of(self, n: int) -> Fraction:
        return Fraction(n)

    def parse(self, s: str) -> Fraction:
        try:
            return Fraction(s.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError("not a rational number: %r" % (s,)) from exc

    def to_str(self, x) -> str:
        # Fraction is already kept in lowest terms with positive denominator
        return str(x)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("q")

    def __repr__(self):
        return "RationalField()"


class PrimeField:
    """GF(p) for an odd prime p; p above 10**6 keeps random sampling honest."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError("%d is not prime" % p)
        self.p = p
        self.name = "p:%d" % p
        self.char = p

    @property
    def zero(self):
        return FpElement(0, self.p)

    @property
    def one(self):
        return FpElement(1, self.p)

    def of(self, n: int) -> FpElement:
        return FpElement(n, self.p)

    def parse(self, s: str) -> FpElement:
        s = s.strip()
        if "/" in s:
            num, _, den = s.partition("/")
            return self.of(int(num)) / self.of(int(den))
        return self.of(int(s))

    def to_str(self, x) -> str:
        return str(x.val)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("p", self.p))

    def __repr__(self):
        return "PrimeField(%d)" % self.p


def field_from_name(name: str):
    """Parse a --field style selector: "q" or "p:<prime>"."""
    name = name.strip()
    if name == "q":
        return RationalField()
    if name.startswith("p:"):
        return PrimeField(int(name[2:]))
    raise ValueError("unknown field %r (expected 'q' or 'p:<prime>')" % (name,))
