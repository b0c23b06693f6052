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
"""Equivariant eta invariants, alpha-invariants of homology lens spaces and
the equivariant Dirac correction terms n_L of Seifert spheres."""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict, Tuple

from ovos_utils.log import LOG

from .exact import (
    COT,
    CSC2,
    EXP_I_PI,
    CyclotomicValue,
    as_rational,
    cot_value,
    delta,
    frac,
    sawtooth,
    total,
    trig_value,
)
from .seifert import SeifertData, derive_constants
from .sums import dedekind_sum, dieter_reciprocity, rademacher_sum
from .util import (
    IncompleteVector,
    InadmissibleL,
    NotCoprime,
    NotCoprimeToFibers,
)

# families of the n_{p/2} closed forms
N_FAMILY = "12pn-1"
P_FAMILY = "12pn-6p+1"


@dataclass(frozen=True)
class LensSpaceData:
    """L(p;a,b), stored in the canonical form of (a,b)~(b,a)~(-a,-b) mod p."""
    p: int
    a: int
    b: int

    def __post_init__(self):
        p = self.p
        if p < 2:
            raise ValueError("invalid lens space order")
        if gcd(self.a, p) != 1 or gcd(self.b, p) != 1:
            raise NotCoprime(f"L({p};{self.a},{self.b}) needs units mod {p}")
        a, b = self.a % p, self.b % p
        key = min((a, b), (b, a), ((-a) % p, (-b) % p), ((-b) % p, (-a) % p))
        object.__setattr__(self, "a", key[0])
        object.__setattr__(self, "b", key[1])

    def __str__(self):
        return f"L({self.p};{self.a},{self.b})"


@dataclass(frozen=True)
class CorrectionVector:
    """n_L for every admissible L of (Y, r), sorted by L."""
    Y: SeifertData
    r: int
    entries: Tuple[Tuple[Fraction, Fraction], ...]

    def as_dict(self) -> Dict[Fraction, Fraction]:
        return dict(self.entries)

    def __getitem__(self, L) -> Fraction:
        return self.as_dict()[Fraction(L)]

    def __len__(self):
        return len(self.entries)


def _check_fibers(Y: SeifertData, r: int):
    if r < 2:
        raise ValueError("invalid group order")
    if any(gcd(r, a) != 1 for a in Y.alphas):
        raise NotCoprimeToFibers(f"r={r} is not prime to the fibers of {Y}")


def eta_sign(Y: SeifertData, r: int, q: int) -> CyclotomicValue:
    """Equivariant eta invariant of the odd signature operator at g^q.

    eta = 1 - csc^2(q pi/r)/alpha - sum_i c(p_i, alpha_i; p_i q/r, alpha_i q/r)
    with p_i = -alpha/alpha_i (mod alpha_i).

    Raises:
        NotCoprimeToFibers: r shares a factor with a fiber order
    """
    _check_fibers(Y, r)
    if not 1 <= q <= r - 1:
        raise ValueError(f"invalid group element q={q} for r={r}")
    consts = derive_constants(Y, r)
    t = Fraction(q, r)
    out = 1 - trig_value(CSC2, q, r) / Y.alpha
    for p, a in zip(consts.p_small, Y.alphas):
        out = out - dieter_reciprocity(p, a, t)
    return out


def eta_sign_brute(Y: SeifertData, r: int, q: int) -> CyclotomicValue:
    """eta_sign from the orbifold G-signature sum over the cone points."""
    _check_fibers(Y, r)
    alpha = Y.alpha
    out = 1 - trig_value(CSC2, q, r) / alpha
    for a in Y.alphas:
        p = (-(alpha // a)) % a
        terms = [cot_value(Fraction(k * p, a)) * cot_value(Fraction(k, a) + Fraction(q, r))
                 for k in range(1, a)]
        out = out - total(terms) / a
    return out


def alpha_invariant_seifert(Y: SeifertData, r: int) -> CyclotomicValue:
    """alpha(Q(r; alpha_1, ..., alpha_n)) = -eta_sign^(1,r)(Y)"""
    return -eta_sign(Y, r, 1)


def alpha_invariant_lens(L: LensSpaceData) -> CyclotomicValue:
    """alpha(L(p;a,b)) = cot(a pi/p) cot(b pi/p)"""
    return trig_value(COT, L.a, L.p) * trig_value(COT, L.b, L.p)


def admissible_L(Y: SeifertData, r: int) -> Tuple[Fraction, ...]:
    """L in Z/2 with L = rho(Y) (mod 1) and 0 <= L <= r - 1/2."""
    return tuple(Y.rho + k for k in range(r))


def _check_L(Y: SeifertData, r: int, L: Fraction):
    if (2 * L).denominator != 1 or (L - Y.rho).denominator != 1 or \
            not 0 <= L <= r - Fraction(1, 2):
        raise InadmissibleL(f"L={L} is not admissible for {Y} and r={r}")


def _closing_terms(Y: SeifertData, r: int, L: Fraction) -> Fraction:
    alpha = Y.alpha
    return (-sum((Fraction(1, 2 * a) for a in Y.alphas), Fraction(0)) * sawtooth(L / r)
            + Fraction(r, 12 * alpha)
            + L * (L - r) / (2 * r * alpha)
            + Fraction(1, 24 * r * alpha)
            - Fraction(1, 8 * r))


@lru_cache(maxsize=4096)
def correction_term(Y: SeifertData, r: int, L, lift: bool = False) -> Fraction:
    """The character component n_L(Y, rho_r) of the equivariant correction term.

    Args:
        Y: the Seifert sphere
        r: order of the fiber rotation
        L: admissible character index
        lift: evaluate with the second admissible alpha'_i of the even fiber

    Raises:
        InadmissibleL: L is not in Z/2 with L = rho(Y) (mod 1), 0 <= L <= r - 1/2
        NotCoprimeToFibers: r shares a factor with a fiber order
    """
    L = Fraction(L)
    _check_fibers(Y, r)
    _check_L(Y, r, L)
    c = derive_constants(Y, r, lift)
    A_prime = c.A_prime(L)
    half = Fraction(1, 2)
    out = _closing_terms(Y, r, L)

    for a, b, g, p in zip(Y.alphas, c.beta, c.gamma, c.p_small):
        shift = g if c.rho == 0 else g + half * b
        out += rademacher_sum(r * b, a, Fraction(shift) / a, -L / r)
        out += dedekind_sum(b, a) / (2 * r)
        out += sawtooth((p * g + c.rho) / a) / (2 * r)

    if c.rho == 0:
        for ap in A_prime:
            out += (1 - 2 * frac(ap / r)) / 4
        return out

    for a, ai, ap in zip(Y.alphas, c.A, A_prime):
        x = frac(ap / r)
        if a % 2:
            out += half * frac(ap) * (1 - 2 * x)
            continue
        d = delta(ai - 2 * L, 2)
        if d:
            y = frac(Fraction(r, 2) * x)
            out += half * d * frac(ap - half) * (
                y - frac(Fraction(r, 2)) * x - 4 * frac(Fraction(r - 1, 2)) * y * x)
    return out


def correction_vector(Y: SeifertData, r: int, check_lifts: bool = False) -> CorrectionVector:
    """All r admissible correction terms of (Y, rho_r).

    With check_lifts the even-fiber alpha'_i is swapped for its other lift and
    every entry is recomputed and compared.
    """
    entries = []
    for L in admissible_L(Y, r):
        value = correction_term(Y, r, L)
        if check_lifts and any(a % 2 == 0 for a in Y.alphas):
            other = correction_term(Y, r, L, True)
            if other != value:
                raise AssertionError(f"n_{L}({Y}, r={r}) depends on the alpha' lift: "
                                     f"{value} != {other}")
        entries.append((L, value))
    LOG.debug(f"correction vector of {Y} at r={r}: {entries}")
    return CorrectionVector(Y, r, tuple(entries))


def dirac_eta_from_corrections(v: CorrectionVector) -> Tuple[Fraction, Dict[int, CyclotomicValue]]:
    """Invert the character transform of a correction vector.

    Returns:
        (n, etas) with n the non-equivariant correction term and etas[q] the
        equivariant Dirac eta invariant at g^q, 1 <= q <= r-1

    Raises:
        IncompleteVector: the vector does not hold every admissible L
    """
    r = v.r
    values = v.as_dict()
    if sorted(values) != list(admissible_L(v.Y, r)):
        raise IncompleteVector(f"need all {r} admissible entries, got {len(values)}")
    n_plain = sum(values.values(), Fraction(0))
    etas = {}
    for q in range(1, r):
        etas[q] = 2 * total((trig_value(EXP_I_PI, int(2 * q * L), r) * n
                             for L, n in values.items()))
    return n_plain, etas


def forward_corrections(n_plain, etas: Dict[int, CyclotomicValue], r: int,
                        rho=0) -> Dict[Fraction, Fraction]:
    """n_L = n/r + (1/2r) sum_q exp(-2 pi i q L/r) eta^(q)"""
    out = {}
    for k in range(r):
        L = Fraction(rho) + k
        value = total((trig_value(EXP_I_PI, int(-2 * q * L), r) * etas[q]
                       for q in range(1, r)))
        out[L] = as_rational(value / (2 * r) + Fraction(n_plain) / r)
    return out


def correction_closed_form(family: str, p: int) -> Fraction:
    """n_{p/2} of Sigma(2,3,12pn-1) or Sigma(2,3,12pn-6p+1) by the residue of p."""
    s = 1 if p % 12 in (1, 5) else -1
    if p % 12 in (1, 11):
        linear = -14 * s if family == N_FAMILY else 158 * s
    elif p % 12 in (5, 7):
        linear = 50 * s if family == N_FAMILY else 94 * s
    else:
        raise ValueError(f"invalid prime p={p}")
    if family == N_FAMILY:
        return Fraction(p * p + linear * p + 13, 144 * p)
    if family == P_FAMILY:
        return Fraction(-p * p + linear * p - 13, 144 * p)
    raise ValueError(f"invalid family: {family}")


def family_sphere(family: str, n: int, p: int) -> SeifertData:
    """Sigma(2,3,12pn-1) or Sigma(2,3,12pn-6p+1)."""
    if family == N_FAMILY:
        return SeifertData((2, 3, 12 * p * n - 1))
    if family == P_FAMILY:
        return SeifertData((2, 3, 12 * p * n - 6 * p + 1))
    raise ValueError(f"invalid family: {family}")
