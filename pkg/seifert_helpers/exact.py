# Copyright 2025, seifert-kappa contributors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Exact scalars: rationals and elements of cyclotomic fields Q(zeta_m).

A CyclotomicValue is stored as integer coefficients over the power basis
1, zeta, ..., zeta^(phi(m)-1) together with a positive common denominator, so
two values of the same modulus are equal exactly when their stored forms are
equal. The coefficients are a dense tuple up to SPARSE_MODULUS and a dict of
the nonzero exponents above it.
"""
import heapq
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict, Iterable, Mapping, Union

import mpmath
from ovos_utils.log import LOG
from sympy import Poly, Symbol, cyclotomic_poly, totient
from sympy.ntheory import mobius

from .util import NotRational, PoleError

Rational = Fraction
Scalar = Union[int, Fraction]

COT = "cot"
CSC = "csc"
CSC2 = "csc2"
COS = "cos"
SIN = "sin"
EXP_I_PI = "exp_i_pi"
TRIG_KINDS = (COT, CSC, CSC2, COS, SIN, EXP_I_PI)

SPARSE_MODULUS = 4096


def frac(x: Scalar) -> Fraction:
    """Fractional part {x} = x - floor(x)."""
    x = Fraction(x)
    return x - (x.numerator // x.denominator)


def sawtooth(x: Scalar) -> Fraction:
    """The sawtooth ((x)): {x} - 1/2 off the integers and 0 on them."""
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return frac(x) - Fraction(1, 2)


def delta(x: Scalar, n: int) -> int:
    """n if x is an integer divisible by n, else 0."""
    x = Fraction(x)
    if x.denominator == 1 and x.numerator % n == 0:
        return n
    return 0


def lcm(*values: int) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out


@lru_cache(maxsize=None)
def cyclotomic_coefficients(m: int) -> tuple:
    """Coefficients of the m-th cyclotomic polynomial, constant term first."""
    x = Symbol("x")
    coeffs = Poly(cyclotomic_poly(m, x), x).all_coeffs()
    return tuple(int(c) for c in reversed(coeffs))


@lru_cache(maxsize=None)
def _reducer(m: int):
    phi = cyclotomic_coefficients(m)
    degree = len(phi) - 1
    tail = tuple((j, c) for j, c in enumerate(phi[:-1]) if c)
    return degree, tail


@lru_cache(maxsize=None)
def _trace_weight(m: int, k: int) -> Fraction:
    # normalized trace of zeta_m^k is mu(m/g)/phi(m/g), g = gcd(k, m)
    order = m // gcd(k, m)
    return Fraction(int(mobius(order)), int(totient(order)))


def _reduce(m: int, coeffs: list) -> list:
    """Reduce an integer polynomial in zeta_m modulo the cyclotomic polynomial."""
    degree, tail = _reducer(m)
    for i in range(len(coeffs) - 1, degree - 1, -1):
        lead = coeffs[i]
        if lead:
            shift = i - degree
            for j, c in tail:
                coeffs[shift + j] -= lead * c
    out = coeffs[:degree]
    out.extend([0] * (degree - len(out)))
    return out


def _reduce_sparse(m: int, terms: Dict[int, int]) -> Dict[int, int]:
    """Sparse counterpart of _reduce, exponent -> coefficient with no zeros."""
    degree, tail = _reducer(m)
    terms = {k: c for k, c in terms.items() if c}
    pending = [-k for k in terms if k >= degree]
    heapq.heapify(pending)
    while pending:
        i = -heapq.heappop(pending)
        lead = terms.pop(i, 0)
        if not lead:
            continue
        shift = i - degree
        for j, c in tail:
            k = shift + j
            value = terms.get(k, 0) - lead * c
            if value:
                if k not in terms and k >= degree:
                    heapq.heappush(pending, -k)
                terms[k] = value
            else:
                terms.pop(k, None)
    return terms


def _canonical(m: int, coeffs):
    """Reduced storage for Q(zeta_m): a dense list, or a dict above SPARSE_MODULUS."""
    if m > SPARSE_MODULUS:
        items = coeffs.items() if isinstance(coeffs, dict) else enumerate(coeffs)
        return _reduce_sparse(m, {k: c for k, c in items if c})
    if isinstance(coeffs, dict):
        dense = [0] * (max(coeffs, default=0) + 1)
        for k, c in coeffs.items():
            dense[k] += c
        coeffs = dense
    return _reduce(m, list(coeffs))


class CyclotomicValue:
    """An exact element of the cyclotomic field Q(zeta_m), zeta_m = exp(2*pi*i/m).

    Args:
        m: the modulus of the field the value is written in
        coefficients: mapping exponent k -> rational coefficient of zeta_m^k,
            exponents are taken modulo m
    """

    __slots__ = ("_m", "_num", "_den", "_hash")

    def __init__(self, m: int, coefficients: Mapping[int, Scalar] = None):
        if m < 1:
            raise ValueError("invalid modulus")
        coefficients = coefficients or {}
        den = 1
        for c in coefficients.values():
            den = lcm(den, Fraction(c).denominator)
        folded = {}
        for k, c in coefficients.items():
            c = Fraction(c)
            folded[k % m] = folded.get(k % m, 0) + c.numerator * (den // c.denominator)
        self._set(m, _canonical(m, folded), den)

    def _set(self, m: int, num, den: int):
        values = num.values() if isinstance(num, dict) else num
        g = den
        for c in values:
            g = gcd(g, c)
            if g == 1:
                break
        self._m = m
        if m > SPARSE_MODULUS:
            items = num.items() if isinstance(num, dict) else enumerate(num)
            self._num = {k: c // g for k, c in items if c}
        else:
            self._num = tuple(c // g for c in num)
        self._den = den // g
        self._hash = None

    @classmethod
    def _from_reduced(cls, m: int, num, den: int) -> "CyclotomicValue":
        value = cls.__new__(cls)
        value._set(m, num, den)
        return value

    def _items(self):
        """Nonzero (exponent, integer coefficient) pairs of the stored form."""
        if self.is_sparse:
            return sorted(self._num.items())
        return [(k, c) for k, c in enumerate(self._num) if c]

    @classmethod
    def rational(cls, value: Scalar, m: int = 1) -> "CyclotomicValue":
        """Embed a rational number in Q(zeta_m)."""
        return cls(m, {0: value})

    @classmethod
    def root_of_unity(cls, k: int, m: int) -> "CyclotomicValue":
        """zeta_m^k"""
        return cls(m, {k: 1})

    @property
    def modulus(self) -> int:
        return self._m

    @property
    def degree(self) -> int:
        return _reducer(self._m)[0]

    @property
    def is_sparse(self) -> bool:
        return self._m > SPARSE_MODULUS

    @property
    def coefficients(self) -> Dict[int, Fraction]:
        """Nonzero coefficients of the canonical form, keyed by exponent."""
        return {k: Fraction(c, self._den) for k, c in self._items()}

    @property
    def is_rational(self) -> bool:
        if self.is_sparse:
            return all(k == 0 for k in self._num)
        return not any(self._num[1:])

    def as_rational(self) -> Fraction:
        """Return the value as a Fraction.

        Raises:
            NotRational: the canonical form has a nonconstant coefficient
        """
        if not self.is_rational:
            raise NotRational(self)
        if self.is_sparse:
            return Fraction(self._num.get(0, 0), self._den)
        return Fraction(self._num[0] if self._num else 0, self._den)

    def embed(self, m: int) -> "CyclotomicValue":
        """Rewrite the value in Q(zeta_m); the current modulus must divide m."""
        if m == self._m:
            return self
        if m % self._m:
            raise ValueError(f"cannot embed Q(zeta_{self._m}) in Q(zeta_{m})")
        step = m // self._m
        spread = {k * step: c for k, c in self._items()}
        return CyclotomicValue._from_reduced(m, _canonical(m, spread), self._den)

    def conjugate(self) -> "CyclotomicValue":
        """Complex conjugate, zeta^k -> zeta^(m-k)."""
        folded = {(-k) % self._m: c for k, c in self._items()}
        return CyclotomicValue._from_reduced(self._m, _canonical(self._m, folded), self._den)

    def to_mpc(self, dps: int = 100) -> mpmath.mpc:
        """Evaluate numerically with mpmath at the given decimal precision."""
        with mpmath.workdps(dps + 10):
            total = mpmath.mpc(0)
            for k, c in self._items():
                total += c * mpmath.expjpi(mpmath.mpf(2 * k) / self._m)
            return total / self._den

    def approximate(self, digits: int = 50) -> str:
        """A decimal approximation for display only."""
        value = self.to_mpc(digits)
        with mpmath.workdps(digits):
            if abs(value.imag) < mpmath.mpf(10) ** (-digits + 5):
                return mpmath.nstr(value.real, digits)
            return mpmath.nstr(value, digits)

    def to_json(self) -> dict:
        return {"m": self._m,
                "coeffs": [[k, str(c), str(self._den)] for k, c in self._items()]}

    @classmethod
    def from_json(cls, data: dict) -> "CyclotomicValue":
        return cls(int(data["m"]), {int(k): Fraction(int(num), int(den))
                                    for k, num, den in data["coeffs"]})

    # arithmetic
    @staticmethod
    def _coerce(other) -> "CyclotomicValue":
        if isinstance(other, CyclotomicValue):
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicValue.rational(other)
        return NotImplemented

    @staticmethod
    def _align(a: "CyclotomicValue", b: "CyclotomicValue"):
        m = lcm(a._m, b._m)
        return a.embed(m), b.embed(m), m

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, m = self._align(self, other)
        den = lcm(a._den, b._den)
        fa, fb = den // a._den, den // b._den
        if not a.is_sparse:
            num = [x * fa + y * fb for x, y in zip(a._num, b._num)]
            return CyclotomicValue._from_reduced(m, num, den)
        num = {k: c * fa for k, c in a._num.items()}
        for k, c in b._num.items():
            num[k] = num.get(k, 0) + c * fb
        return CyclotomicValue._from_reduced(m, num, den)

    __radd__ = __add__

    def __neg__(self):
        if self.is_sparse:
            return CyclotomicValue._from_reduced(
                self._m, {k: -c for k, c in self._num.items()}, self._den)
        return CyclotomicValue._from_reduced(self._m, [-c for c in self._num], self._den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if self.is_sparse:
                return CyclotomicValue._from_reduced(
                    self._m, {k: c * other.numerator for k, c in self._num.items()},
                    self._den * other.denominator)
            return CyclotomicValue._from_reduced(
                self._m, [c * other.numerator for c in self._num],
                self._den * other.denominator)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, m = self._align(self, other)
        if a.is_sparse:
            product = {}
            for i, x in a._num.items():
                for j, y in b._num.items():
                    product[i + j] = product.get(i + j, 0) + x * y
            return CyclotomicValue._from_reduced(m, _canonical(m, product), a._den * b._den)
        product = [0] * (2 * len(a._num) - 1)
        for i, x in enumerate(a._num):
            if x:
                for j, y in enumerate(b._num):
                    if y:
                        product[i + j] += x * y
        return CyclotomicValue._from_reduced(m, _reduce(m, product), a._den * b._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, CyclotomicValue):
            other = other.as_rational()
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("division by zero")
        return self * (1 / Fraction(other))

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = CyclotomicValue.rational(1, self._m)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self._m == other._m:
            return self._num == other._num and self._den == other._den
        a, b, _ = self._align(self, other)
        return a._num == b._num and a._den == b._den

    def __hash__(self):
        if self._hash is None:
            if self.is_rational:
                self._hash = hash(self.as_rational())
            else:
                trace = sum((_trace_weight(self._m, k) * c for k, c in self._items()),
                            Fraction(0))
                self._hash = hash(trace / self._den)
        return self._hash

    def __bool__(self):
        return bool(self._items())

    def __repr__(self):
        terms = " + ".join(f"({c}/{self._den})*z^{k}" for k, c in self._items()) or "0"
        return f"CyclotomicValue(m={self._m}: {terms})"


def as_rational(value: Union[CyclotomicValue, Scalar]) -> Fraction:
    """Collapse a value that must be rational; raise NotRational otherwise."""
    if isinstance(value, CyclotomicValue):
        return value.as_rational()
    return Fraction(value)


def total(values: Iterable, m: int = 1) -> CyclotomicValue:
    """Sum an iterable of exact scalars into a CyclotomicValue."""
    out = CyclotomicValue.rational(0, m)
    for v in values:
        out = out + v
    return out


I = CyclotomicValue.root_of_unity(1, 4)


@lru_cache(maxsize=4096)
def _trig(kind: str, a: int, b: int) -> CyclotomicValue:
    w = CyclotomicValue.root_of_unity(a, 2 * b)
    if kind == EXP_I_PI:
        return w
    if kind == COS:
        return (w + w.conjugate()) / 2
    if kind == SIN:
        return -I * (w - w.conjugate()) / 2
    g = gcd(a, b)
    n = b // g
    if n == 1:
        raise PoleError(f"{kind} has a pole at {a}*pi/{b}")
    # z = exp(2*pi*i*a/b) is a primitive n-th root, 1/(z-1) = (1/n) sum k z^k
    z_exp = (a // g) % n
    u = CyclotomicValue(n, {(k * z_exp) % n: Fraction(k, n) for k in range(1, n)})
    if kind == COT:
        return I * (1 + 2 * u)
    if kind == CSC:
        return 2 * I * w * u
    if kind == CSC2:
        return 1 - (1 + 2 * u) ** 2
    raise ValueError(f"invalid trig kind: {kind}")


def trig_value(kind: str, a: int, b: int) -> CyclotomicValue:
    """Exact value of cot, csc, csc^2, cos, sin or exp(i*pi*.) at pi*a/b.

    The result lives in Q(zeta_2b) for cos and exp_i_pi and in Q(zeta_lcm(4, 2b))
    when a factor of i is needed.

    Args:
        kind: one of TRIG_KINDS
        a: numerator of the angle as a multiple of pi
        b: positive denominator

    Raises:
        PoleError: cot, csc or csc2 at an integer multiple of pi
    """
    if b <= 0:
        raise ValueError("invalid denominator")
    if kind not in TRIG_KINDS:
        raise ValueError(f"invalid trig kind: {kind}")
    return _trig(kind, a % (2 * b), b)


def cot_value(x: Scalar) -> CyclotomicValue:
    """cot(pi*x) with the convention cot(pi*x) = 0 at integers."""
    x = Fraction(x)
    if x.denominator == 1:
        return CyclotomicValue.rational(0)
    return trig_value(COT, x.numerator, x.denominator)


def csc2_value(x: Scalar) -> CyclotomicValue:
    """csc^2(pi*x), with the value 1/3 at integers used by reciprocity."""
    x = Fraction(x)
    if x.denominator == 1:
        return CyclotomicValue.rational(Fraction(1, 3))
    return trig_value(CSC2, x.numerator, x.denominator)


def numerically_equal(a, b, dps: int = 100) -> bool:
    """Sanity check two exact values at dps digits with mpmath."""
    a = a if isinstance(a, CyclotomicValue) else CyclotomicValue.rational(a)
    b = b if isinstance(b, CyclotomicValue) else CyclotomicValue.rational(b)
    with mpmath.workdps(dps):
        diff = abs(a.to_mpc(dps) - b.to_mpc(dps))
        ok = diff < mpmath.mpf(10) ** (-dps + 10)
    if not ok:
        LOG.warning(f"numeric mismatch {diff} between {a!r} and {b!r}")
    return ok


def rational_to_json(value: Scalar) -> dict:
    value = Fraction(value)
    return {"num": str(value.numerator), "den": str(value.denominator)}


def rational_from_json(data: dict) -> Fraction:
    return Fraction(int(data["num"]), int(data["den"]))


def value_to_json(value) -> dict:
    """JSON form of a Rational or a CyclotomicValue."""
    if isinstance(value, CyclotomicValue):
        return value.to_json()
    return rational_to_json(value)


def value_from_json(data: dict):
    if "m" in data:
        return CyclotomicValue.from_json(data)
    return rational_from_json(data)
