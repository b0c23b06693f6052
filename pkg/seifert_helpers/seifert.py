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
"""Seifert fibered homology spheres, their arithmetic constants and the
rotation numbers of the Seiberg-Witten solutions over them."""
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import List, Tuple

from ovos_utils.log import LOG
from sympy import mod_inverse

from .exact import frac
from .util import (
    FAMILY_MINUS_1,
    FAMILY_MINUS_5,
    FAMILY_PLUS_1,
    FAMILY_PLUS_5,
    NotCoprimeToFibers,
    SignMismatch,
    UnsupportedFamily,
    family_member,
)

# rot of (0;0,0,k) on the family is -(12(n-k) - c)/2
ROTATION_OFFSETS = {
    FAMILY_PLUS_5: 1,
    FAMILY_MINUS_5: 11,
    FAMILY_MINUS_1: 7,
    FAMILY_PLUS_1: 5,
}


@dataclass(frozen=True)
class SeifertData:
    """Sigma(alpha_1, ..., alpha_n) with pairwise coprime fiber orders."""
    alphas: Tuple[int, ...]

    def __post_init__(self):
        alphas = tuple(int(a) for a in self.alphas)
        object.__setattr__(self, "alphas", alphas)
        if not alphas or any(a < 2 for a in alphas):
            raise ValueError(f"invalid seifert data: {alphas}")
        for i, a in enumerate(alphas):
            for b in alphas[i + 1:]:
                if gcd(a, b) != 1:
                    raise ValueError(f"invalid seifert data, {a} and {b} share a factor")

    @property
    def alpha(self) -> int:
        return reduce(lambda x, y: x * y, self.alphas, 1)

    @property
    def rho(self) -> Fraction:
        """1/2 when one of the fiber orders is even, else 0."""
        return Fraction(1, 2) if any(a % 2 == 0 for a in self.alphas) else Fraction(0)

    def __str__(self):
        return "Sigma(" + ",".join(str(a) for a in self.alphas) + ")"


@dataclass(frozen=True)
class SeifertConstants:
    """The per-fiber constants entering the equivariant eta formulas.

    alpha_prime is only meaningful for the order r it was derived for.
    """
    r: int
    rho: Fraction
    beta: Tuple[int, ...]
    gamma: Tuple[int, ...]
    p_small: Tuple[int, ...]
    alpha_prime: Tuple[int, ...]
    A: Tuple[int, ...]

    def A_prime(self, L) -> Tuple[Fraction, ...]:
        """A'_i = alpha'_i (A_i - 2L) / 2"""
        L = Fraction(L)
        return tuple(Fraction(ap, 2) * (a - 2 * L)
                     for ap, a in zip(self.alpha_prime, self.A))


@dataclass(frozen=True)
class SeifertFibration:
    genus: int
    degree: Fraction
    alphas: Tuple[int, ...]


@dataclass(frozen=True)
class LineBundleData:
    """Orbifold line bundle E = (e; eps_1, ..., eps_n)."""
    e: int
    epsilons: Tuple[int, ...]

    def __str__(self):
        return f"({self.e};" + ",".join(str(x) for x in self.epsilons) + ")"


def derive_constants(Y: SeifertData, r: int, lift: bool = False) -> SeifertConstants:
    """Solve the congruences defining beta_i, gamma_i, p_i, alpha'_i and A_i.

    Args:
        Y: the Seifert sphere
        r: order of the cyclic group acting in the fibers
        lift: use the other admissible alpha'_i for the even fiber, which
            differs from the default one by r

    Raises:
        NotCoprimeToFibers: r shares a factor with a fiber order
    """
    if r < 2:
        raise ValueError("invalid group order")
    if any(gcd(r, a) != 1 for a in Y.alphas):
        raise NotCoprimeToFibers(f"r={r} is not prime to the fibers of {Y}")
    alpha, rho = Y.alpha, Y.rho
    rhs = rho + sum((Fraction(alpha * (a - 1), 2 * a) for a in Y.alphas), Fraction(0))
    if rhs.denominator != 1:
        raise ValueError(f"non integral gamma congruence for {Y}")
    rhs = int(rhs)

    beta, gamma, p_small, alpha_prime, A = [], [], [], [], []
    for a in Y.alphas:
        inv = int(mod_inverse((alpha // a) % a, a))
        b = (-inv) % a
        g = (rhs * inv) % a
        p = int(mod_inverse(b, a))
        if (p + alpha // a) % a:
            raise ValueError(f"inconsistent p_i for fiber {a} of {Y}")
        if a % 2:
            ap = int(mod_inverse(a, 2 * r))
        else:
            ap = int(mod_inverse(a // 2, r))
            if lift:
                ap += r
        Ai = 2 * a * frac(Fraction(p * g, a) + rho / a) - a
        if Ai.denominator != 1:
            raise ValueError(f"non integral A_i for fiber {a} of {Y}")
        beta.append(b)
        gamma.append(g)
        p_small.append(p)
        alpha_prime.append(ap)
        A.append(int(Ai))
    LOG.debug(f"{Y} r={r}: beta={beta} gamma={gamma} p={p_small} "
              f"alpha'={alpha_prime} A={A}")
    return SeifertConstants(r, rho, tuple(beta), tuple(gamma), tuple(p_small),
                            tuple(alpha_prime), tuple(A))


def homology_sphere_fibration(Y: SeifertData) -> SeifertFibration:
    """Sigma(alpha_1, ..., alpha_n) as the circle bundle of genus 0 and degree -1/alpha."""
    return SeifertFibration(0, Fraction(-1, Y.alpha), Y.alphas)


def rotation_number(F: SeifertFibration, E: LineBundleData) -> Fraction:
    """rot(E) = (g - e + (n-2)/2 - sum (2 eps_i + 1)/(2 alpha_i)) / l"""
    if F.degree == 0:
        raise ValueError("invalid fibration degree")
    if len(E.epsilons) != len(F.alphas):
        raise ValueError("invalid bundle data, one epsilon per fiber is needed")
    n = len(F.alphas)
    total = (F.genus - E.e + Fraction(n - 2, 2) -
             sum((Fraction(2 * eps + 1, 2 * a) for eps, a in zip(E.epsilons, F.alphas)),
                 Fraction(0)))
    return total / F.degree


def brieskorn_components(family: str, n: int) -> List[Tuple[LineBundleData, Fraction]]:
    """Bundles (0;0,0,k), 0 <= k <= n-1, of the irreducible solutions on a
    Brieskorn family member, each with its rotation number.

    Raises:
        UnsupportedFamily: unknown family or n out of range
    """
    if family not in ROTATION_OFFSETS:
        raise UnsupportedFamily(f"unknown family: {family!r}")
    if n < 0 or (n == 0 and family != FAMILY_PLUS_5):
        raise UnsupportedFamily(f"n={n} is not allowed for {family}")
    F = homology_sphere_fibration(SeifertData(family_member(family, n)))
    out = []
    for k in range(n):
        E = LineBundleData(0, (0, 0, k))
        rot = rotation_number(F, E)
        expected = rotation_closed_form(family, n, k)
        if rot != expected or (2 * rot).denominator != 1:
            raise AssertionError(f"rotation of {E} on {family} n={n}: {rot} != {expected}")
        out.append((E, rot))
    return out


def rotation_closed_form(family: str, n: int, k: int) -> Fraction:
    """-(12(n-k) - c)/2, c the offset of the family, for the bundle (0;0,0,k)."""
    if family not in ROTATION_OFFSETS:
        raise UnsupportedFamily(f"unknown family: {family!r}")
    return Fraction(-(12 * (n - k) - ROTATION_OFFSETS[family]), 2)


def rotation_table(n_max: int) -> List[tuple]:
    """Rows (family, n, bundle, rot) for every family and 1 <= n <= n_max."""
    rows = []
    for family in (FAMILY_PLUS_5, FAMILY_MINUS_5, FAMILY_MINUS_1, FAMILY_PLUS_1):
        for n in range(1, n_max + 1):
            for E, rot in brieskorn_components(family, n):
                rows.append((family, n, E, rot))
    return rows


def csd_from_rotation(rot, ell) -> Fraction:
    """|CSD(E)| / (4 pi^2) = rot^2 |l| recovered from a rotation number.

    A nonzero rot must carry the sign of the degree l, the sign every
    homology sphere component shows in the rotation table.

    Raises:
        SignMismatch: rot and l have opposite signs
    """
    rot, ell = Fraction(rot), Fraction(ell)
    if ell == 0:
        raise ValueError("invalid fibration degree")
    if rot == 0:
        return Fraction(0)
    if (rot > 0) != (ell > 0):
        raise SignMismatch(f"rotation {rot} does not match the sign of degree {ell}")
    return rot * rot * abs(ell)
