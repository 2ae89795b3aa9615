"""Exact arithmetic in Q(zeta) for zeta a primitive 20th root of unity.

This degree-8 field contains every scalar the toolkit needs: the fifth and
tenth roots of unity eps5 = zeta^4 and eps10 = zeta^2, the imaginary unit
i = zeta^5, and sqrt(5) as the Gauss sum eps5 - eps5^2 - eps5^3 + eps5^4.
Elements are stored as 8 integer coordinates over a common positive
denominator in the power basis 1, zeta, ..., zeta^7, reduced modulo
x^8 - x^6 + x^4 - x^2 + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, cos, sin, pi


class UnsupportedOrderError(ValueError):
    """Requested root of unity whose order does not divide 20."""


class BadPrimeError(ArithmeticError):
    """A denominator is not invertible modulo the chosen prime."""


# Coefficients of zeta^k in the power basis, for k = 0..19.
# zeta^8 = zeta^6 - zeta^4 + zeta^2 - 1, applied repeatedly.
def _power_table():
    rows = [tuple(1 if i == k else 0 for i in range(8)) for k in range(8)]
    for _ in range(8, 20):
        prev = rows[-1]
        shifted = [0] + list(prev[:7])
        if prev[7]:
            c = prev[7]
            # zeta^8 row folded in
            shifted[0] -= c
            shifted[2] += c
            shifted[4] -= c
            shifted[6] += c
        rows.append(tuple(shifted))
    return tuple(rows)


_ZPOW = _power_table()
_GALOIS_UNITS = (3, 7, 9, 11, 13, 17, 19)


def _normalized(num, den):
    if den < 0:
        num = [-c for c in num]
        den = -den
    g = den
    for c in num:
        if c:
            g = gcd(g, c)
            if g == 1:
                break
    if g > 1:
        num = [c // g for c in num]
        den //= g
    return tuple(num), den


class CycNum:
    """An element of Q(zeta_20), immutable and hashable."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        num = list(num)
        if len(num) != 8:
            raise ValueError("need exactly 8 power-basis coordinates")
        if any(isinstance(c, Fraction) for c in num):
            fracs = [Fraction(c) for c in num]
            common = 1
            for f in fracs:
                common = common * f.denominator // gcd(common, f.denominator)
            num = [f.numerator * (common // f.denominator) for f in fracs]
            den = den * common
        self.num, self.den = _normalized(num, den)

    @staticmethod
    def _raw(num, den):
        obj = object.__new__(CycNum)
        obj.num, obj.den = _normalized(num, den)
        return obj

    @staticmethod
    def from_rational(value) -> "CycNum":
        f = Fraction(value)
        return CycNum._raw([f.numerator, 0, 0, 0, 0, 0, 0, 0], f.denominator)

    @property
    def coeffs(self):
        """The 8 power-basis coordinates as exact Fractions."""
        return tuple(Fraction(c, self.den) for c in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    def __bool__(self):
        return any(self.num)

    def __add__(self, other):
        other = as_cyc(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self, other
        if a.den == b.den:
            return CycNum._raw([x + y for x, y in zip(a.num, b.num)], a.den)
        return CycNum._raw(
            [x * b.den + y * a.den for x, y in zip(a.num, b.num)], a.den * b.den
        )

    __radd__ = __add__

    def __neg__(self):
        return CycNum._raw([-c for c in self.num], self.den)

    def __sub__(self, other):
        other = as_cyc(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = as_cyc(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = as_cyc(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.num, other.num
        conv = [0] * 15
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        out = conv[:8]
        for k in range(8, 15):
            ck = conv[k]
            if ck:
                row = _ZPOW[k]
                for i in range(8):
                    ri = row[i]
                    if ri:
                        out[i] += ck * ri
        return CycNum._raw(out, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = as_cyc(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = as_cyc(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ONE
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        other = as_cyc(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def galois(self, j: int) -> "CycNum":
        """Apply the field automorphism zeta -> zeta^j, gcd(j, 20) = 1."""
        if gcd(j, 20) != 1:
            raise ValueError("not a unit modulo 20")
        out = [0] * 8
        for i, c in enumerate(self.num):
            if c:
                row = _ZPOW[(i * j) % 20]
                for k in range(8):
                    rk = row[k]
                    if rk:
                        out[k] += c * rk
        return CycNum._raw(out, self.den)

    def conjugate(self) -> "CycNum":
        """Complex conjugation, zeta -> zeta^-1."""
        return self.galois(19)

    def norm(self) -> Fraction:
        """Product of all 8 Galois conjugates; a rational number."""
        prod = self
        for j in _GALOIS_UNITS:
            prod = prod * self.galois(j)
        return prod.as_rational()

    def inverse(self) -> "CycNum":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(zeta_20)")
        prod = ONE
        for j in _GALOIS_UNITS:
            prod = prod * self.galois(j)
        n = self * prod  # rational: the field norm, up to the denominators
        r = n.as_rational()
        return prod * CycNum._raw(
            [r.denominator, 0, 0, 0, 0, 0, 0, 0], r.numerator
        )

    def approx(self) -> complex:
        """Float image under zeta -> exp(2*pi*i/20). Diagnostics only."""
        total = 0j
        for k, c in enumerate(self.num):
            if c:
                total += c * complex(cos(2 * pi * k / 20), sin(2 * pi * k / 20))
        return total / self.den

    def to_text(self) -> str:
        return ",".join(f"{f.numerator}/{f.denominator}" for f in self.coeffs)

    @staticmethod
    def from_text(text: str) -> "CycNum":
        parts = text.split(",")
        if len(parts) != 8:
            raise ValueError("expected 8 comma-separated rationals")
        fracs = [Fraction(p.strip()) for p in parts]
        den = 1
        for f in fracs:
            den = den * f.denominator // gcd(den, f.denominator)
        return CycNum._raw([f.numerator * (den // f.denominator) for f in fracs], den)

    def __repr__(self):
        if self.is_rational():
            r = self.as_rational()
            return f"CycNum({r})"
        return f"CycNum({self.to_text()})"

    def __str__(self):
        return self.to_text()


def as_cyc(value):
    if isinstance(value, CycNum):
        return value
    if isinstance(value, (int, Fraction)):
        return CycNum.from_rational(value)
    return NotImplemented


ZERO = CycNum.from_rational(0)
ONE = CycNum.from_rational(1)
MINUS_ONE = CycNum.from_rational(-1)

#: zeta itself.
ZETA = CycNum._raw((0, 1, 0, 0, 0, 0, 0, 0), 1)

#: The imaginary unit i = zeta^5.
I_UNIT = CycNum._raw(_ZPOW[5], 1)


def zeta_power(k: int) -> CycNum:
    """zeta^k for any integer k."""
    return CycNum._raw(_ZPOW[k % 20], 1)


def root_of_unity(k: int, n: int) -> CycNum:
    """zeta^(20k/n); a primitive n-th root of unity when gcd(k, n) = 1."""
    if n <= 0 or 20 % n != 0:
        raise UnsupportedOrderError(f"order {n} does not divide 20")
    return zeta_power((20 // n) * k)


#: eps5 = primitive 5th root, eps10 = primitive 10th root.
EPS5 = root_of_unity(1, 5)
EPS10 = root_of_unity(1, 10)

#: sqrt(5) as the Gauss sum eps5 - eps5^2 - eps5^3 + eps5^4.
SQRT5 = EPS5 - EPS5 ** 2 - EPS5 ** 3 + EPS5 ** 4


@dataclass(frozen=True)
class FpNum:
    """A residue modulo a prime p = 1 (mod 20), for modular certificates."""

    value: int
    p: int

    def __post_init__(self):
        if not 0 <= self.value < self.p:
            object.__setattr__(self, "value", self.value % self.p)

    def __add__(self, other):
        return FpNum((self.value + _fp_val(other, self.p)) % self.p, self.p)

    def __mul__(self, other):
        return FpNum((self.value * _fp_val(other, self.p)) % self.p, self.p)

    def __pow__(self, e: int):
        return FpNum(pow(self.value, e, self.p), self.p)

    def __neg__(self):
        return FpNum(-self.value % self.p, self.p)


def _fp_val(other, p):
    if isinstance(other, FpNum):
        if other.p != p:
            raise ValueError("mixed moduli")
        return other.value
    return other % p


def is_prime(n: int) -> bool:
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


#: Default certificate prime and fallbacks; all = 1 (mod 20).
DEFAULT_PRIME = 41
FALLBACK_PRIMES = (41, 61, 101, 181)


@lru_cache(maxsize=None)
def choose_zeta_image(p: int) -> FpNum:
    """Smallest residue mod p that is a primitive 20th root of unity.

    Fixed per process for determinism.
    """
    if p % 20 != 1 or not is_prime(p):
        raise BadPrimeError(f"{p} is not a prime = 1 (mod 20)")
    for r in range(2, p):
        if pow(r, 20, p) == 1 and pow(r, 4, p) != 1 and pow(r, 10, p) != 1:
            return FpNum(r, p)
    raise BadPrimeError(f"no primitive 20th root mod {p}")  # pragma: no cover


def reduce_mod_p(a: CycNum, p: int, zeta_image: FpNum | None = None) -> FpNum:
    """Ring-homomorphism image of a in F_p, zeta mapped to zeta_image."""
    if zeta_image is None:
        zeta_image = choose_zeta_image(p)
    if zeta_image.p != p:
        raise ValueError("zeta image belongs to a different prime")
    if a.den % p == 0:
        raise BadPrimeError(f"denominator divisible by {p}")
    z = zeta_image.value
    total = 0
    zk = 1
    for c in a.num:
        if c:
            total = (total + c * zk) % p
        zk = zk * z % p
    total = total * pow(a.den, p - 2, p) % p
    return FpNum(total, p)


def approx_complex(a: CycNum) -> tuple[float, float]:
    """(real, imaginary) float pair; display and diagnostics only."""
    z = a.approx()
    return (z.real, z.imag)
