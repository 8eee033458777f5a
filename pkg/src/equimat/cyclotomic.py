"""Exact arithmetic in cyclotomic fields Q(zeta_N).

An element is a coefficient vector of length phi(N) in the power basis
1, zeta, ..., zeta^(phi(N)-1), reduced modulo the N-th cyclotomic
polynomial.  Elements of different conductors are compared and combined by
embedding both into Q(zeta_lcm), sending zeta_N to zeta_M^(M/N).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Mapping

from .errors import ValidationError


@lru_cache(maxsize=None)
def cyclotomic_polynomial(N: int) -> tuple:
    """Integer coefficients of Phi_N, lowest degree first."""
    if N < 1:
        raise ValidationError("conductor must be positive")
    # x^N - 1 divided by Phi_d for every proper divisor d
    num = [-1] + [0] * (N - 1) + [1]
    for d in range(1, N):
        if N % d == 0:
            num = _exact_div(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _exact_div(num: list, den: list) -> list:
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(q) - 1, -1, -1):
        c = num[k + len(den) - 1] // lead
        q[k] = c
        if c:
            for j, d in enumerate(den):
                num[k + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return q


def totient(N: int) -> int:
    return len(cyclotomic_polynomial(N)) - 1


def _reduce(N: int, poly: Mapping[int, Fraction]) -> tuple:
    """Reduce sum c_k x^k modulo Phi_N, first folding exponents mod N."""
    phi = cyclotomic_polynomial(N)
    deg = len(phi) - 1
    buf = [Fraction(0)] * N
    for k, c in poly.items():
        buf[k % N] += c
    for k in range(N - 1, deg - 1, -1):
        c = buf[k]
        if c:
            # phi is monic
            for j in range(deg):
                buf[k - deg + j] -= c * phi[j]
            buf[k] = Fraction(0)
    return tuple(buf[:deg])


class CyclotomicNumber:
    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != totient(conductor):
            raise ValidationError(f"need {totient(conductor)} coefficients for conductor {conductor}")
        self.conductor = conductor
        self.coeffs = coeffs

    @classmethod
    def from_exponents(cls, N: int, terms: Mapping[int, object]) -> "CyclotomicNumber":
        """sum c * zeta_N^k over ``terms = {k: c}``."""
        return cls(N, _reduce(N, {k: Fraction(c) for k, c in terms.items()}))

    @classmethod
    def rational(cls, x) -> "CyclotomicNumber":
        return cls(1, (Fraction(x),))

    @classmethod
    def zeta(cls, N: int, k: int = 1) -> "CyclotomicNumber":
        return cls.from_exponents(N, {k % N: 1})

    def embed(self, M: int) -> "CyclotomicNumber":
        N = self.conductor
        if M % N:
            raise ValidationError(f"cannot embed conductor {N} into {M}")
        if M == N:
            return self
        step = M // N
        return CyclotomicNumber.from_exponents(M, {k * step: c for k, c in enumerate(self.coeffs) if c})

    @staticmethod
    def _align(a, b):
        if not isinstance(b, CyclotomicNumber):
            b = CyclotomicNumber.rational(b)
        if a.conductor == b.conductor:
            return a, b
        M = lcm(a.conductor, b.conductor)
        return a.embed(M), b.embed(M)

    def __add__(self, other):
        a, b = self._align(self, other)
        return CyclotomicNumber(a.conductor, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.conductor, [-x for x in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, CyclotomicNumber) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, CyclotomicNumber):
            f = Fraction(other)
            return CyclotomicNumber(self.conductor, [x * f for x in self.coeffs])
        a, b = self._align(self, other)
        prod: dict[int, Fraction] = {}
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    prod[i + j] = prod.get(i + j, 0) + x * y
        return CyclotomicNumber.from_exponents(a.conductor, prod)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, CyclotomicNumber):
            if not other.is_rational():
                raise NotImplementedError("division by an irrational cyclotomic number")
            other = other.to_rational()
        return self * (1 / Fraction(other))

    def __pow__(self, k: int):
        if k < 0:
            raise NotImplementedError("negative powers")
        out = CyclotomicNumber.rational(1)
        for _ in range(k):
            out = out * self
        return out

    def conjugate(self) -> "CyclotomicNumber":
        N = self.conductor
        return CyclotomicNumber.from_exponents(N, {(-k) % N: c for k, c in enumerate(self.coeffs) if c})

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, (CyclotomicNumber, int, Fraction)):
            return NotImplemented
        a, b = self._align(self, other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        # equal values may carry different conductors
        return hash(self.coeffs[0]) if self.is_rational() else 0

    def __complex__(self):
        import cmath

        z = cmath.exp(2j * cmath.pi / self.conductor)
        return sum(complex(float(c)) * z**k for k, c in enumerate(self.coeffs))

    def __repr__(self):
        if self.is_rational():
            return str(self.coeffs[0])
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*z{self.conductor}^{k}")
        return " + ".join(terms)

    def to_json(self) -> dict:
        return {"conductor": self.conductor, "coeffs": [f"{c.numerator}/{c.denominator}" for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj) -> "CyclotomicNumber":
        if isinstance(obj, (int, str)):
            return cls.rational(Fraction(obj))
        return cls(int(obj["conductor"]), [Fraction(c) for c in obj["coeffs"]])
