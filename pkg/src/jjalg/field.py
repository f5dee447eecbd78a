"""Exact coefficient fields: the rationals and prime fields F_p.

Scalars are stored as plain Python values in canonical form: a reduced
``fractions.Fraction`` over Q, an ``int`` in ``range(p)`` over F_p.  All
arithmetic goes through the field object, which keeps inner loops cheap::

    >>> F5 = GF(5)
    >>> F5.inv(2)
    3
    >>> QQ.add(QQ("1/2"), QQ("1/3"))
    Fraction(5, 6)

The :class:`Scalar` wrapper binds a value to its field for callers that want
operator syntax and mixed-field detection.
"""

from __future__ import annotations

from random import Random
from fractions import Fraction
from functools import lru_cache

from .errors import DivisionByZero, FieldMismatch, NonPrimeModulus, NotEnumerable


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class FieldSpec:
    """Common interface of :class:`Rationals` and :class:`PrimeField`."""

    kind: str
    modulus: int | None

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and self.kind == other.kind
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.kind, self.modulus))

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def is_zero(self, x) -> bool:
        return x == 0

    def eq(self, x, y) -> bool:
        return x == y

    def is_square(self, x) -> bool:
        raise NotImplementedError

    def vec(self, values):
        return tuple(self(v) for v in values)

    def zeros(self, n):
        return (self.zero,) * n

    def unit(self, n, i):
        return tuple(self.one if k == i else self.zero for k in range(n))

    def dot(self, u, v):
        raise NotImplementedError

    def nonzero_elements(self):
        return [x for x in self.elements() if x != 0]

    def enumerate(self):
        return tuple(self.elements())


class Rationals(FieldSpec):
    kind = "Q"
    modulus = None
    characteristic = 0

    def __call__(self, x):
        if isinstance(x, str):
            return self.parse(x)
        return Fraction(x)

    def add(self, x, y):
        return x + y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def inv(self, x):
        if x == 0:
            raise DivisionByZero("inverse of zero")
        return 1 / Fraction(x)

    def dot(self, u, v):
        return sum((a * b for a, b in zip(u, v) if a and b), Fraction(0))

    def parse(self, text: str):
        s = text.strip()
        try:
            if "/" in s:
                num, den = s.split("/")
                den_i = int(den)
                if den_i <= 0 or den.strip() != den:
                    raise ValueError
                return Fraction(int(num), den_i)
            return Fraction(int(s))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"not a rational scalar: {text!r}") from None

    def format(self, x) -> str:
        x = Fraction(x)
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"

    def elements(self):
        raise NotEnumerable("Q is infinite and cannot be enumerated")

    def random(self, rng: Random, bound: int = 9):
        num = rng.randint(-bound, bound)
        den = rng.randint(1, bound)
        return Fraction(num, den)

    def random_int(self, rng: Random, bound: int = 9):
        return Fraction(rng.randint(-bound, bound))

    def is_square(self, x) -> bool:
        x = Fraction(x)
        if x < 0:
            return False
        return _isqrt_exact(x.numerator) and _isqrt_exact(x.denominator)

    def __repr__(self):
        return "QQ"

    def __str__(self):
        return "Q"

    def header(self):
        return "Q"


class PrimeField(FieldSpec):
    kind = "Fp"

    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise NonPrimeModulus(f"modulus {p!r} is not prime")
        self.modulus = p
        self.characteristic = p

    def __call__(self, x):
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Fraction):
            if x.denominator % self.modulus == 0:
                raise DivisionByZero(f"{x} has no image in F_{self.modulus}")
            return x.numerator * pow(x.denominator, -1, self.modulus) % self.modulus
        return int(x) % self.modulus

    def add(self, x, y):
        return (x + y) % self.modulus

    def sub(self, x, y):
        return (x - y) % self.modulus

    def neg(self, x):
        return -x % self.modulus

    def mul(self, x, y):
        return x * y % self.modulus

    def inv(self, x):
        if x % self.modulus == 0:
            raise DivisionByZero("inverse of zero")
        return pow(x, -1, self.modulus)

    def dot(self, u, v):
        return sum(a * b for a, b in zip(u, v)) % self.modulus

    def parse(self, text: str):
        s = text.strip()
        try:
            return int(s) % self.modulus
        except ValueError:
            raise ValueError(f"not an F_{self.modulus} scalar: {text!r}") from None

    def format(self, x) -> str:
        return str(int(x) % self.modulus)

    def elements(self):
        return range(self.modulus)

    def random(self, rng: Random, bound: int | None = None):
        return rng.randrange(self.modulus)

    random_int = random

    def is_square(self, x) -> bool:
        x %= self.modulus
        if x == 0 or self.modulus == 2:
            return True
        return pow(x, (self.modulus - 1) // 2, self.modulus) == 1

    def __repr__(self):
        return f"GF({self.modulus})"

    def __str__(self):
        return f"F{self.modulus}"

    def header(self):
        return f"Fp {self.modulus}"


def _isqrt_exact(n: int) -> bool:
    from math import isqrt

    return isqrt(n) ** 2 == n


QQ = Rationals()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def parse_field(text: str) -> FieldSpec:
    """Parse ``Q``, ``Fp 5``, ``Fp5``, ``F5`` or ``GF(5)``."""
    s = text.strip().replace("(", " ").replace(")", " ")
    if s in ("Q", "QQ"):
        return QQ
    for prefix in ("Fp", "GF", "F"):
        if s.startswith(prefix):
            rest = s[len(prefix):].strip()
            try:
                p = int(rest)
            except ValueError:
                break
            return GF(p)
    raise ValueError(f"unknown field {text!r}")


def enumerate_field(spec: FieldSpec):
    """All elements of a prime field in the order 0, 1, ..., p-1."""
    return spec.enumerate()


class Scalar:
    """An exact field element bound to its field."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value):
        self.field = field
        self.value = field(value)

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        return self.field(other)

    def __add__(self, other):
        return Scalar(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return Scalar(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return Scalar(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return Scalar(self.field, self.field.div(self.value, self._other(other)))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def inverse(self):
        return Scalar(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return self.value == other.value
        try:
            return self.value == self.field(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"Scalar({self.field!r}, {self.field.format(self.value)})"

    @classmethod
    def parse(cls, field: FieldSpec, text: str) -> "Scalar":
        return cls(field, field.parse(text))


def arith(op: str, x: Scalar, y: Scalar | None = None):
    """Dispatch ``add``, ``mul``, ``neg``, ``inv`` or ``eq`` on scalars."""
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "neg":
        return -x
    if op == "inv":
        return x.inverse()
    if op == "eq":
        return x == y
    raise ValueError(f"unknown operation {op!r}")
