"""Exact arithmetic in the cyclotomic field Q(zeta_12).

Elements are written c0 + c1*z + c2*z^2 + c3*z^3 where z is a fixed
primitive 12th root of unity with minimal relation z^4 = z^2 - 1.  This is
the smallest field containing both i = z^3 and the primitive cube roots of
unity (zeta_3 = z^4 = z^2 - 1), i.e. every scalar the folding-map theorems
need.

Polynomial coefficients elsewhere in the package are plain ints / rationals
whenever they happen to lie on the rational line; CycloElem is the full
coefficient field those numbers embed into.  The helpers at the bottom
(coef_*) operate uniformly on either representation.
"""

from __future__ import annotations

import cmath

from .rationals import as_exact, is_rational, rat, rat_str

_HALF_PI_OVER_6 = cmath.pi / 6.0


class CycloElem:
    """An element of Q(zeta_12), reduced modulo z^4 - z^2 + 1."""

    __slots__ = ("c",)

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        self.c = (as_exact(c0), as_exact(c1), as_exact(c2), as_exact(c3))

    # -- constructors -------------------------------------------------

    @classmethod
    def from_coef(cls, value) -> "CycloElem":
        """Embed an int / rational, or pass a CycloElem through."""
        if isinstance(value, CycloElem):
            return value
        if is_rational(value):
            return cls(value)
        raise TypeError(f"cannot embed {type(value).__name__} in Q(zeta_12)")

    @classmethod
    def zeta_pow(cls, k: int) -> "CycloElem":
        """z^k for any integer k (reduced mod 12)."""
        return _ZETA_POWERS[k % 12]

    # -- predicates / accessors ---------------------------------------

    @property
    def components(self):
        return self.c

    def is_rational(self) -> bool:
        return self.c[1] == 0 and self.c[2] == 0 and self.c[3] == 0

    def rational_value(self):
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.c[0]

    def __bool__(self) -> bool:
        return self.c != (0, 0, 0, 0)

    # -- field operations ----------------------------------------------

    def __add__(self, other):
        if isinstance(other, CycloElem):
            a, b = self.c, other.c
            return CycloElem(a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])
        if is_rational(other):
            a = self.c
            return CycloElem(a[0] + other, a[1], a[2], a[3])
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        a = self.c
        return CycloElem(-a[0], -a[1], -a[2], -a[3])

    def __sub__(self, other):
        if isinstance(other, CycloElem):
            a, b = self.c, other.c
            return CycloElem(a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3])
        if is_rational(other):
            a = self.c
            return CycloElem(a[0] - other, a[1], a[2], a[3])
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, CycloElem):
            a, b = self.c, other.c
            # convolution up to z^6, then z^4 = z^2 - 1, z^5 = z^3 - z, z^6 = -1
            c0 = a[0] * b[0]
            c1 = a[0] * b[1] + a[1] * b[0]
            c2 = a[0] * b[2] + a[1] * b[1] + a[2] * b[0]
            c3 = a[0] * b[3] + a[1] * b[2] + a[2] * b[1] + a[3] * b[0]
            c4 = a[1] * b[3] + a[2] * b[2] + a[3] * b[1]
            c5 = a[2] * b[3] + a[3] * b[2]
            c6 = a[3] * b[3]
            return CycloElem(c0 - c4 - c6, c1 - c5, c2 + c4, c3 + c5)
        if is_rational(other):
            a = self.c
            return CycloElem(a[0] * other, a[1] * other, a[2] * other, a[3] * other)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "CycloElem":
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(zeta_12)")
        # product of the other Galois conjugates over the field norm
        cofactor = self.galois(5) * self.galois(7) * self.galois(11)
        norm = (self * cofactor).rational_value()
        return cofactor * _inv_rat(norm)

    def __truediv__(self, other):
        if isinstance(other, CycloElem):
            return self * other.inverse()
        if is_rational(other):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * _inv_rat(other)
        return NotImplemented

    def __rtruediv__(self, other):
        if is_rational(other):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- Galois action --------------------------------------------------

    def galois(self, k: int) -> "CycloElem":
        """The automorphism z -> z^k, for k coprime to 12 (1, 5, 7, 11)."""
        c0, c1, c2, c3 = self.c
        if k % 12 == 1:
            return self
        if k % 12 == 5:  # z^5 = z^3 - z, z^10 = 1 - z^2, z^15 = z^3
            return CycloElem(c0 + c2, -c1, -c2, c1 + c3)
        if k % 12 == 7:  # z^7 = -z
            return CycloElem(c0, -c1, c2, -c3)
        if k % 12 == 11:  # complex conjugation: z^11 = z - z^3
            return CycloElem(c0 + c2, c1, -c2, -c1 - c3)
        raise ValueError(f"z -> z^{k} is not a field automorphism")

    def conj(self) -> "CycloElem":
        """Complex conjugation (z -> z^11)."""
        return self.galois(11)

    # -- conversions -----------------------------------------------------

    def to_complex(self) -> complex:
        z = cmath.exp(1j * _HALF_PI_OVER_6)
        c0, c1, c2, c3 = self.c
        return float(c0) + float(c1) * z + float(c2) * z * z + float(c3) * z**3

    def __eq__(self, other):
        if isinstance(other, CycloElem):
            return self.c == other.c
        if is_rational(other):
            return self.is_rational() and self.c[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.c[0])
        return hash(self.c)

    def __repr__(self):
        return f"CycloElem({', '.join(rat_str(x) for x in self.c)})"

    def __str__(self):
        if self.is_rational():
            return rat_str(self.c[0])
        parts = []
        for value, name in zip(self.c, ("", "z", "z^2", "z^3")):
            if value == 0:
                continue
            text = rat_str(value)
            if name:
                text = f"{text}*{name}" if value not in (1, -1) else ("-" + name if value == -1 else name)
            parts.append(text)
        out = " + ".join(parts).replace("+ -", "- ")
        return out or "0"


def _inv_rat(value):
    return as_exact(rat(1, 1) / rat(value))


_ZETA_POWERS = (
    CycloElem(1, 0, 0, 0),
    CycloElem(0, 1, 0, 0),
    CycloElem(0, 0, 1, 0),
    CycloElem(0, 0, 0, 1),
    CycloElem(-1, 0, 1, 0),
    CycloElem(0, -1, 0, 1),
    CycloElem(-1, 0, 0, 0),
    CycloElem(0, -1, 0, 0),
    CycloElem(0, 0, -1, 0),
    CycloElem(0, 0, 0, -1),
    CycloElem(1, 0, -1, 0),
    CycloElem(0, 1, 0, -1),
)

ZERO = CycloElem(0)
ONE = CycloElem(1)
ZETA = CycloElem.zeta_pow(1)
I_UNIT = CycloElem.zeta_pow(3)
ZETA3 = CycloElem.zeta_pow(4)
SQRT3 = CycloElem(0, 2, 0, -1)  # z + z^11


def roots_of_unity(order: int):
    """All solutions of v^order = 1 in Q(zeta_12); requires order | 12."""
    if order <= 0 or 12 % order != 0:
        raise ValueError(f"mu_{order} does not lie in Q(zeta_12)")
    step = 12 // order
    return [CycloElem.zeta_pow(step * j) for j in range(order)]


def unity_order(value) -> int | None:
    """Multiplicative order of a root of unity, or None if not one."""
    elem = CycloElem.from_coef(value)
    if elem ** 12 != ONE:
        return None
    for d in (1, 2, 3, 4, 6, 12):
        if elem**d == ONE:
            return d
    return None


def cyclo_arith(a, b, kind: str):
    """Field arithmetic entry point: kind in {add, sub, mul, div}."""
    a = CycloElem.from_coef(a)
    b = CycloElem.from_coef(b)
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        if not b:
            raise ZeroDivisionError("cyclo_arith: division by zero")
        return a / b
    raise ValueError(f"unknown arithmetic kind {kind!r}")


# -- helpers over mixed coefficients (int | rational | CycloElem) --------


def coef_conj(c):
    return c.conj() if isinstance(c, CycloElem) else c


def coef_components(c):
    """The four rational coordinates of a coefficient in the zeta basis."""
    if isinstance(c, CycloElem):
        return c.c
    return (c, 0, 0, 0)


def coef_to_complex(c) -> complex:
    if isinstance(c, CycloElem):
        return c.to_complex()
    return complex(float(c))


def coef_div(a, b):
    """Exact division of mixed coefficients."""
    if isinstance(a, CycloElem) or isinstance(b, CycloElem):
        return CycloElem.from_coef(a) / CycloElem.from_coef(b)
    if b == 0:
        raise ZeroDivisionError("division by zero")
    return as_exact(rat(a) / rat(b))


def coef_simplify(c):
    """Collapse a CycloElem that happens to be rational to its plain form."""
    if isinstance(c, CycloElem) and c.is_rational():
        return c.c[0]
    return c
