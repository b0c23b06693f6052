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
"""Dedekind-type sums.

Four families are supported, each with a definitional (brute force)
evaluator and a Euclidean reciprocity evaluator:

    s(b,a)          Dedekind sum
    s(b,a;x,y)      Dedekind-Rademacher sum
    c(b,a;x,y)      Dedekind-Dieter cotangent sum
    S(q,r,p;eps)    Dedekind cosecant sum
"""
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, Optional, Tuple

from ovos_utils.log import LOG
from sympy import mod_inverse

from .exact import (
    CSC,
    CyclotomicValue,
    cot_value,
    csc2_value,
    frac,
    sawtooth,
    total,
    trig_value,
)
from .util import (
    NotCoprime,
    ParityObstruction,
    ReciprocityHypothesisViolated,
)

BRUTE = "brute"
RECIPROCITY = "reciprocity"
METHODS = (BRUTE, RECIPROCITY)

DEDEKIND = "dedekind"
RADEMACHER = "rademacher"
DIETER = "dieter"
COSECANT = "cosecant"
FAMILIES = (DEDEKIND, RADEMACHER, DIETER, COSECANT)


def bernoulli2(x) -> Fraction:
    """Periodic second Bernoulli function {x}^2 - {x} + 1/6."""
    f = frac(x)
    return f * f - f + Fraction(1, 6)


def _check_method(method: str):
    if method not in METHODS:
        raise ValueError(f"invalid method: {method}")


@dataclass(frozen=True)
class DedekindSpec:
    b: int
    a: int

    family = DEDEKIND


@dataclass(frozen=True)
class DedekindRademacherSpec:
    b: int
    a: int
    x: Fraction = Fraction(0)
    y: Fraction = Fraction(0)

    family = RADEMACHER


@dataclass(frozen=True)
class DedekindDieterSpec:
    b: int
    a: int
    x: Fraction = Fraction(0)
    y: Fraction = Fraction(0)

    family = DIETER


@dataclass(frozen=True)
class CosecantSumSpec:
    q: int
    r: int
    p: int
    eps: int = -1

    family = COSECANT


# Dedekind sums

def dedekind_sum_brute(b: int, a: int) -> Fraction:
    """s(b,a) straight from the definition, O(a)."""
    return sum((sawtooth(Fraction(b * k, a)) * sawtooth(Fraction(k, a))
                for k in range(a)), Fraction(0))


def dedekind_sum_reciprocity(b: int, a: int) -> Fraction:
    """s(b,a) by iterating the reciprocity law along the Euclidean algorithm."""
    result = Fraction(0)
    sign = 1
    b %= a
    while a > 1:
        # s(b,a) + s(a,b) = -1/4 + (a/b + b/a + 1/(ab))/12
        result += sign * (Fraction(-1, 4) +
                          (Fraction(a, b) + Fraction(b, a) + Fraction(1, a * b)) / 12)
        sign = -sign
        a, b = b, a % b
    return result


def dedekind_sum(b: int, a: int, method: str = RECIPROCITY) -> Fraction:
    """The Dedekind sum s(b,a).

    Args:
        b: any integer coprime to a
        a: positive modulus
        method: "brute" or "reciprocity"

    Raises:
        NotCoprime: gcd(b, a) != 1
    """
    _check_method(method)
    if a <= 0:
        raise ValueError("invalid modulus")
    if gcd(b, a) != 1:
        raise NotCoprime(f"s({b},{a}) needs coprime arguments")
    if method == BRUTE:
        return dedekind_sum_brute(b, a)
    return dedekind_sum_reciprocity(b, a)


# Dedekind-Rademacher sums

def rademacher_brute(b: int, a: int, x, y) -> Fraction:
    """s(b,a;x,y) = sum_{k=0}^{|a|-1} ((x + b(k+y)/a)) (((k+y)/a))"""
    if a == 0:
        raise ValueError("invalid modulus")
    x, y = Fraction(x), Fraction(y)
    out = Fraction(0)
    for k in range(abs(a)):
        t = (k + y) / a
        out += sawtooth(x + b * t) * sawtooth(t)
    return out


def _rademacher_euclid(b: int, a: int, x: Fraction, y: Fraction) -> Fraction:
    """Reciprocity evaluation for a > 0 and gcd(b, a) = 1, any rationals x, y."""
    result = Fraction(0)
    sign = 1
    while True:
        if a == 1:
            return result + sign * sawtooth(x + b * y) * sawtooth(y)
        # s(b,a;x,y) = s(b - ma, a; x + my, y)
        m = b // a
        b, x = b - m * a, x + m * y
        if x.denominator == 1 and y.denominator == 1:
            return result + sign * dedekind_sum_reciprocity(b, a)
        result += sign * (sawtooth(x) * sawtooth(y) + (
            Fraction(b, a) * bernoulli2(y) +
            Fraction(a, b) * bernoulli2(x) +
            bernoulli2(b * y + a * x) / (a * b)) / 2)
        sign = -sign
        b, a, x, y = a, b, y, x


def rademacher_sum(b: int, a: int, x, y) -> Fraction:
    """s(b,a;x,y) for a > 0 coprime to b, no restriction on x and y.

    Integer x and y fall back to the Dedekind sum; this is the evaluator the
    correction terms use.
    """
    if a <= 0 or gcd(b, a) != 1:
        raise NotCoprime(f"s({b},{a};x,y) needs a > 0 coprime to b")
    return _rademacher_euclid(b, a, Fraction(x), Fraction(y))


def dedekind_rademacher(spec: DedekindRademacherSpec, method: str = RECIPROCITY) -> Fraction:
    """Evaluate a Dedekind-Rademacher sum.

    The reciprocity path requires b, a > 0 coprime, x and y not both
    integers and a*x + b*y integral. Values 0 < b < a are shifted into
    (a, 2a) first, which preserves all of these conditions.

    Raises:
        ReciprocityHypothesisViolated: reciprocity requested outside its domain
    """
    _check_method(method)
    x, y = Fraction(spec.x), Fraction(spec.y)
    if method == BRUTE:
        return rademacher_brute(spec.b, spec.a, x, y)
    b, a = spec.b, spec.a
    if not (b > 0 and a > 0):
        raise ReciprocityHypothesisViolated("reciprocity needs b, a > 0")
    if gcd(b, a) != 1:
        raise ReciprocityHypothesisViolated(f"gcd({b},{a}) != 1")
    if x.denominator == 1 and y.denominator == 1:
        raise ReciprocityHypothesisViolated("x and y are both integers")
    if (a * x + b * y).denominator != 1:
        raise ReciprocityHypothesisViolated("a*x + b*y is not an integer")
    return _rademacher_euclid(b, a, x, y)


# Dedekind-Dieter cotangent sums

def dieter_brute(b: int, a: int, x, y) -> CyclotomicValue:
    """c(b,a;x,y) = (1/a) sum_{k=0}^{a-1} c(b(k+y)/a - x) c((k+y)/a)"""
    if a <= 0:
        raise ValueError("invalid modulus")
    x, y = Fraction(x), Fraction(y)
    terms = []
    for k in range(a):
        t = (k + y) / a
        terms.append(cot_value(b * t - x) * cot_value(t))
    return total(terms) / a


def dieter_shape(b: int, a: int, x, y) -> Optional[Fraction]:
    """Return t when (x, y) = (b*t, a*t), else None."""
    x, y = Fraction(x), Fraction(y)
    t = y / a
    if b * t != x:
        return None
    return t


def dieter_reciprocity(b: int, a: int, t) -> CyclotomicValue:
    """c(b,a;bt,at) along the Euclidean algorithm for a > b > 0 coprime.

    Writing t = q/r in lowest terms, r >= 2 must be prime to a. The formula
    for t = 1/r carries over to q/r through the Galois automorphism fixing
    zeta_a and sending zeta_r to zeta_r^q.

    Raises:
        ReciprocityHypothesisViolated: the arguments are outside that domain
    """
    t = Fraction(t)
    r = t.denominator
    if not (a > b > 0) or gcd(a, b) != 1:
        raise ReciprocityHypothesisViolated(f"need a > b > 0 coprime, got ({b},{a})")
    if r < 2 or gcd(a, r) != 1:
        raise ReciprocityHypothesisViolated(f"need t with denominator >= 2 prime to {a}")

    def divisible(n: int) -> bool:
        return n % r == 0

    # a_0 = a, a_1 = b, a_{j+1} = a_{j-1} - q_j a_j, ending at a_n = 1
    rems = [a, b]
    s_prev, s_cur = 0, 1
    while rems[-1] != 1:
        q = rems[-2] // rems[-1]
        rems.append(rems[-2] - q * rems[-1])
        s_prev, s_cur = s_cur, s_cur * q + s_prev
    n = len(rems) - 1
    LOG.debug(f"dieter reciprocity c({b},{a};t={t}) with {n} steps")

    out = CyclotomicValue.rational(0)
    for j in range(1, n + 1):
        prev, cur = rems[j - 1], rems[j]
        term = cot_value(prev * t) * cot_value(cur * t)
        if divisible(cur):
            term = term - Fraction(prev, cur) * csc2_value(prev * t)
        if divisible(prev):
            term = term - Fraction(cur, prev) * csc2_value(cur * t)
        out = out + term if j % 2 == 0 else out - term
    tail = Fraction(s_cur, a) * csc2_value(t)
    out = out + tail if (n - 1) % 2 == 0 else out - tail
    if n % 2:
        out = out - 1
    return out


def dedekind_dieter(spec: DedekindDieterSpec, method: str = RECIPROCITY) -> CyclotomicValue:
    """Evaluate a Dedekind-Dieter cotangent sum c(b,a;x,y)."""
    _check_method(method)
    if method == BRUTE:
        return dieter_brute(spec.b, spec.a, spec.x, spec.y)
    t = dieter_shape(spec.b, spec.a, spec.x, spec.y)
    if t is None:
        raise ReciprocityHypothesisViolated("(x, y) is not of the form (b*t, a*t)")
    return dieter_reciprocity(spec.b, spec.a, t)


# Dedekind cosecant sums

def cosecant_brute(q: int, r: int, p: int, eps: int) -> Fraction:
    """S(q,r,p;eps) evaluated term by term in Q(zeta_4p)."""
    n = abs(p)
    sign = 1 if p > 0 else -1
    terms = []
    for j in range(1, n):
        term = trig_value(CSC, sign * j * q, n) * trig_value(CSC, sign * j * r, n)
        terms.append(term if eps ** j == 1 else -term)
    return (total(terms) / p).as_rational()


def _index_shift(r: int, p: int) -> int:
    """r' with r' r = 1 + (r - 1) p (mod 2p)."""
    target = 1 + (r - 1) * p
    base = mod_inverse(r % p, p) if p > 1 else 0
    for candidate in (base, base + p):
        if (candidate * r - target) % (2 * p) == 0:
            return int(candidate)
    raise NotCoprime(f"no index shift for r={r}, p={p}")


def even_expansion(p: int, q: int) -> Tuple[list, list, list]:
    """Even-quotient expansion q_j = alpha_{j-1} q_{j-1} - q_{j-2}.

    Starts from q_0 = p, q_1 = q with p, q of opposite parity and |p| > |q|,
    and runs until |q_n| = 1. Each alpha is the even integer nearest to
    q_{j-2}/q_{j-1}.

    Returns:
        (qs, alphas, ss) where alphas[0] is alpha_1
    """
    qs = [p, q]
    alphas = []
    ss = [0, 1]
    while abs(qs[-1]) != 1:
        ratio = Fraction(qs[-2], qs[-1])
        alpha = 2 * round(ratio / 2)
        if alpha == 0 or abs(alpha * qs[-1] - qs[-2]) >= abs(qs[-1]):
            # adjacent even integer
            alpha += 2 if ratio > alpha else -2
        nxt = alpha * qs[-1] - qs[-2]
        if nxt == 0 or abs(nxt) >= abs(qs[-1]):
            raise ParityObstruction(f"no even expansion for ({p}, {q})")
        alphas.append(alpha)
        qs.append(nxt)
        ss.append(alpha * ss[-1] - ss[-2])
    return qs, alphas, ss


def cosecant_q1(q: int, p: int) -> Fraction:
    """S(q,1,p;-1) for p > |q| of opposite parity."""
    if abs(q) == 1:
        # S(1,1,p;-1) = (-p^2 - 2)/(6p)
        return q * Fraction(-p * p - 2, 6 * p)
    qs, alphas, ss = even_expansion(p, q)
    n = len(qs) - 1
    value = (-Fraction(qs[n] * (qs[n - 1] ** 2 + 2) + qs[n - 2], 6 * qs[n - 1])
             - Fraction(qs[1], 6 * qs[0])
             - Fraction(ss[n - 1], 6 * qs[0] * qs[n - 1])
             - Fraction(sum(alphas[:n - 2]), 6))
    return value


def vanishes_by_symmetry(q: int, r: int, p: int, eps: int) -> bool:
    """True when the j and p - j terms of S(q,r,p;eps) cancel pairwise,
    that is eps^p (-1)^(q+r) = -1."""
    return eps ** (abs(p) % 2) * (-1) ** ((q + r) % 2) == -1


def cosecant_reciprocity(q: int, r: int, p: int, eps: int) -> Fraction:
    """S(q,r,p;eps) through the index shift and the even expansion.

    Raises:
        ParityObstruction: after reduction q and p have the same parity
    """
    if p < 0:
        return -cosecant_reciprocity(q, r, -p, eps)
    if p == 1:
        return Fraction(0)
    # the j and p - j terms cancel
    if vanishes_by_symmetry(q, r, p, eps):
        return Fraction(0)
    # j -> r'j: S(q,r,p;eps) = S(r'q,1,p;eps^r' (-1)^(r-1))
    r_shift = _index_shift(r, p)
    eps = eps ** (r_shift % 2) * (-1) ** ((r - 1) % 2)
    q = r_shift * q
    # S(q + cp, 1, p; eps) = S(q, 1, p; (-1)^c eps)
    if eps == 1:
        q += p
    q = (q + p) % (2 * p) - p
    if (q - p) % 2 == 0:
        raise ParityObstruction(f"S({q},1,{p};-1) has q and p of equal parity")
    return cosecant_q1(q, p)


def cosecant_sum(spec: CosecantSumSpec, method: str = RECIPROCITY) -> Fraction:
    """Evaluate a Dedekind cosecant sum S(q,r,p;eps).

    Raises:
        NotCoprime: q or r shares a factor with p
        ParityObstruction: reciprocity does not apply, use the brute method
    """
    _check_method(method)
    q, r, p, eps = spec.q, spec.r, spec.p, spec.eps
    if p == 0:
        raise ValueError("invalid modulus")
    if eps not in (1, -1):
        raise ValueError("invalid sign character")
    if gcd(q, p) != 1 or gcd(r, p) != 1:
        raise NotCoprime(f"S({q},{r},{p}) needs q, r prime to p")
    if method == BRUTE:
        return cosecant_brute(q, r, p, eps)
    return cosecant_reciprocity(q, r, p, eps)


def cosecant_two_term(p: int, q: int) -> Fraction:
    """Right side of S(q,1,p;-1) + S(p,1,q;-1) for p, q of opposite parity."""
    return -Fraction(p, 6 * q) - Fraction(q, 6 * p) - Fraction(1, 6 * p * q)


# closed forms for S(q,r,p;-1) by residue of p:
# (q, r): (leading, constant, denominator, modulus, rows)
# a row ((residues...), c) reads: for sign s in (+1, -1), p = s*res (mod M)
# gives linear coefficient s*c; a negative residue stands for a flipped sign
COSECANT_TABLES: Dict[Tuple[int, int], tuple] = {
    (2, 3): (-1, -13, 36, 12, (((1,), 14), ((5,), -50))),
    (1, 2): (-1, -5, 12, 4, (((1,), 6),)),
    (-1, 10): (1, 101, 60, 20, (((1,), -102), ((3, 7), -90), ((9,), -198))),
    (-2, 3): (1, 13, 36, 12, (((1,), -14), ((5,), 50))),
    (-3, 4): (1, 25, 72, 24, (((1,), -26), ((5,), -10), ((7,), 154), ((11,), -118))),
    (-4, 5): (1, 41, 120, 40, (((1,), -42), ((3, -13), 90), ((7, -17), -150),
                               ((9,), 342), ((11,), -102), ((19,), 282))),
    (-5, 6): (1, 61, 180, 60, (((1,), -62), ((7, -17), 190), ((11,), 638),
                               ((13, -23), -350), ((19,), -98), ((29,), -478))),
    (-6, 7): (1, 85, 252, 84, (((1,), -86), ((5, 17), -22), ((11, 23), -202),
                               ((13,), 1066), ((19, 31), -554), ((25, 37), 778),
                               ((29,), -310), ((41,), 842))),
    (-7, 8): (1, 113, 336, 112, (((1,), -114), ((3, 19, -37, -53), 258),
                                 ((5, -11, 45, -51), 510), ((9, 25), 78),
                                 ((13, -43), -642), ((15,), 1650), ((17, 33), -498),
                                 ((23, 39), -846), ((27, -29), -894), ((31, 47), 1266),
                                 ((41,), -306), ((55,), -1230))),
    (-8, 9): (1, 145, 432, 144, (((1,), -146), ((5, 29, -43, -67), -34),
                                 ((7, -41), 466), ((11, -13, 59, -61), 290),
                                 ((17,), 2414), ((19, -53), -1118), ((23, -25), 722),
                                 ((31, -65), -1262), ((35, -37), 1442),
                                 ((47, -49), -1006), ((55,), -686), ((71,), 1874))),
    (-9, 10): (1, 181, 540, 180, (((1,), -182), ((7, 43, 67, -77), -650),
                                  ((11, -49), 758), ((13, -23, -47, -83), 970),
                                  ((17, 53), -790), ((19,), 3382), ((29, -31), -1078),
                                  ((37, 73), 2410), ((41, -79), -1942),
                                  ((59, -61), 1622), ((71,), -682), ((89,), -2518))),
}

# S_0 of the E8 # S2xS2 family for p >= 13, same layout
P_FAMILY_SIGMA0_TABLE = (1, 13, 18, 60, (((1, -11), -158), ((7, -17), -194),
                                         ((13, -23), 130), ((19, -29), 94)))


def _expand_rows(modulus: int, rows) -> Dict[int, int]:
    coefficients = {}
    for residues, c in rows:
        for s in (1, -1):
            for res in residues:
                coefficients[(s * res) % modulus] = s * c
    return coefficients


def _closed_form(table, p: int) -> Fraction:
    lead, const, den, modulus, rows = table
    coefficients = _expand_rows(modulus, rows)
    if p % modulus not in coefficients:
        raise KeyError(f"no closed form for p = {p} (mod {modulus})")
    linear = coefficients[p % modulus]
    return Fraction(lead * p * p + linear * p + const, den * p)


def cosecant_closed_form(q: int, r: int, p: int) -> Fraction:
    """Tabulated closed form of S(q,r,p;-1) by the residue of p.

    Raises:
        KeyError: (q, r) or the residue of p is not tabulated
    """
    return _closed_form(COSECANT_TABLES[(q, r)], p)


def p_family_sigma0_closed_form(p: int) -> Fraction:
    """Tabulated S_0 of the E8 # S2xS2 fixed-point data, p >= 13."""
    if p < 13:
        raise KeyError("closed form tabulated for p >= 13 only")
    return _closed_form(P_FAMILY_SIGMA0_TABLE, p)


def tabulated_residues(q: int, r: int) -> Tuple[int, list]:
    """(modulus, sorted residues) covered by a cosecant closed form."""
    _, _, _, modulus, rows = COSECANT_TABLES[(q, r)]
    return modulus, sorted(_expand_rows(modulus, rows))


def evaluate(spec, method: str = RECIPROCITY):
    """Dispatch a sum spec to its evaluator."""
    if isinstance(spec, DedekindSpec):
        return dedekind_sum(spec.b, spec.a, method)
    if isinstance(spec, DedekindRademacherSpec):
        return dedekind_rademacher(spec, method)
    if isinstance(spec, DedekindDieterSpec):
        return dedekind_dieter(spec, method)
    if isinstance(spec, CosecantSumSpec):
        return cosecant_sum(spec, method)
    raise ValueError(f"unknown sum spec: {spec!r}")
