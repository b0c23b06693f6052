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
"""Graded poset vectors and the equivariant kappa sets of the Brieskorn
families Sigma(2,3,12n+-1) and Sigma(2,3,12n+-5)."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple

from ovos_utils.log import LOG

from .eta import correction_vector
from .seifert import SeifertData
from .util import (
    FAMILY_MINUS_1,
    FAMILY_MINUS_5,
    FAMILY_PLUS_1,
    FAMILY_PLUS_5,
    FAMILIES,
    IndexOutOfRange,
    OutsideClassifiedRange,
    UnsupportedFamily,
    family_member,
)

EVEN = "even"
ODD = "odd"

SPLIT_FAMILIES = (FAMILY_PLUS_5, FAMILY_PLUS_1)

# Manolescu kappa of +-Sigma(2,3,12n+c) keyed by (sign, family)
MANOLESCU_KAPPA = {
    (1, FAMILY_MINUS_1): 2,
    (1, FAMILY_MINUS_5): 1,
    (1, FAMILY_PLUS_5): 1,
    (1, FAMILY_PLUS_1): 0,
    (-1, FAMILY_MINUS_1): 0,
    (-1, FAMILY_MINUS_5): 1,
}


@dataclass(frozen=True)
class PosetVector:
    """A vector of Q^dim with the product order and grading |v| = sum of entries."""
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(Fraction(x) for x in self.entries))

    @classmethod
    def zero(cls, dim: int) -> "PosetVector":
        return cls((0,) * dim)

    @classmethod
    def basis(cls, i: int, dim: int, scale=1) -> "PosetVector":
        if not 0 <= i < dim:
            raise IndexOutOfRange(f"e_{i} is not a basis vector of Q^{dim}")
        return cls(tuple(scale if j == i else 0 for j in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.entries)

    @property
    def grading(self) -> Fraction:
        return sum(self.entries, Fraction(0))

    def project(self) -> "PosetVector":
        """(a_0, a_1 + ... + a_{dim-1})"""
        return PosetVector((self.entries[0], sum(self.entries[1:], Fraction(0))))

    def dominates(self, other: "PosetVector") -> bool:
        """self >= other in the product order."""
        self._check_dim(other)
        return all(x >= y for x, y in zip(self.entries, other.entries))

    def _check_dim(self, other: "PosetVector"):
        if self.dim != other.dim:
            raise IndexOutOfRange(f"dimension mismatch {self.dim} != {other.dim}")

    def __add__(self, other: "PosetVector") -> "PosetVector":
        self._check_dim(other)
        return PosetVector(tuple(x + y for x, y in zip(self.entries, other.entries)))

    def __neg__(self) -> "PosetVector":
        return PosetVector(tuple(-x for x in self.entries))

    def __sub__(self, other: "PosetVector") -> "PosetVector":
        return self + (-other)

    def __mul__(self, scale) -> "PosetVector":
        return PosetVector(tuple(scale * x for x in self.entries))

    __rmul__ = __mul__

    def __str__(self):
        return "(" + ",".join(str(x) for x in self.entries) + ")"


@dataclass(frozen=True)
class KappaSet:
    """Representatives in Q^p and their projections to Q^2.

    For -Y families the representatives are one canonical slice element per
    projected element.
    """
    sign: int
    family: str
    n: int
    p: int
    representatives: Tuple[PosetVector, ...]
    projected: Tuple[PosetVector, ...]

    @property
    def gradings(self) -> Tuple[Fraction, ...]:
        return tuple(sorted({v.grading for v in self.projected}))

    def __len__(self):
        return len(self.projected)


def doubling_map(kind: str, v: PosetVector, p: int) -> PosetVector:
    """Move slot i to 2i (even) or 2i+1 (odd) modulo p.

    Odd slot i stands for the half-integer index (2i+1)/2.

    Raises:
        IndexOutOfRange: v does not have p slots
    """
    if kind not in (EVEN, ODD):
        raise ValueError(f"invalid doubling kind: {kind}")
    if v.dim != p:
        raise IndexOutOfRange(f"expected {p} slots, got {v.dim}")
    shift = 0 if kind == EVEN else 1
    out = [Fraction(0)] * p
    for i, x in enumerate(v.entries):
        out[(2 * i + shift) % p] += x
    return PosetVector(tuple(out))


def n_vector(Y: SeifertData, p: int, sign: int = 1) -> Tuple[PosetVector, PosetVector]:
    """(n(Y,p), its projection) from the correction vector of (Y, rho_p).

    sign=-1 gives the vector of -Y.
    """
    cv = correction_vector(Y, p)
    raw = PosetVector(tuple(value for _, value in cv.entries))
    full = doubling_map(EVEN if Y.rho == 0 else ODD, raw, p)
    if sign < 0:
        full = -full
    return full, full.project()


def count_A(n: int, p: int, j: int) -> int:
    """#{1 <= k <= n : 12k = 11 - j (mod p)}"""
    return sum(1 for k in range(1, n + 1) if (12 * k - 11 + j) % p == 0)


def count_B(n: int, p: int, j: int) -> int:
    """#{1 <= k <= n : 12k = 7 - j (mod p)}"""
    return sum(1 for k in range(1, n + 1) if (12 * k - 7 + j) % p == 0)


def _check_domain(sign: int, family: str, n: int, p: int):
    if sign not in (1, -1):
        raise ValueError("invalid orientation sign")
    if family not in FAMILIES:
        raise UnsupportedFamily(f"unknown family: {family!r}")
    if p < 3 or p % 2 == 0:
        raise OutsideClassifiedRange(f"p={p} is not an odd prime")
    if n < 0 or (n == 0 and family != FAMILY_PLUS_5):
        raise OutsideClassifiedRange(f"n={n} is outside the classification of {family}")


def doubled_rotations(family: str, n: int, p: int) -> Tuple[int, ...]:
    """2r_k (mod p) of the irreducible solutions, k = 1..n."""
    c = 11 if family == FAMILY_MINUS_5 else 7
    return tuple((-(12 * k - c)) % p for k in range(1, n + 1))


def _dagger(family: str, n: int, p: int) -> bool:
    rots = doubled_rotations(family, n, p)
    return all(r in (rots[0], (-rots[0]) % p) for r in rots)


def lower_bounds(family: str, n: int, p: int) -> Tuple[int, ...]:
    """(A or B)_{n,p,j} for j = 0..p-1."""
    count = count_A if family == FAMILY_MINUS_5 else count_B
    return tuple(count(n, p, j) for j in range(p))


def kappa_multiplicity(sign: int, family: str, n: int, p: int) -> int:
    """Number of elements of the projected kappa set, from the rotation data alone."""
    _check_domain(sign, family, n, p)
    if family in SPLIT_FAMILIES:
        return 1
    if sign > 0:
        rots = doubled_rotations(family, n, p)
        return 2 if _dagger(family, n, p) and rots[0] != 0 else 1
    return n - lower_bounds(family, n, p)[0] + 1


def has_multiple_elements(sign: int, family: str, n: int, p: int) -> bool:
    """Case table for the projected kappa set holding more than one element."""
    _check_domain(sign, family, n, p)
    if family in SPLIT_FAMILIES:
        return False
    if sign < 0:
        return family == FAMILY_MINUS_5 or (n, p) != (1, 5)
    if family == FAMILY_MINUS_5:
        return p == 3 or (p >= 5 and n == 1) or (n, p) == (2, 7)
    return p == 3 or (p >= 7 and n == 1) or (n, p) == (2, 11)


def graded_kappa(sign: int, family: str) -> int:
    """Manolescu's kappa of +-Sigma(2,3,12n+c)."""
    try:
        return MANOLESCU_KAPPA[(sign, family)]
    except KeyError:
        raise OutsideClassifiedRange(f"no kappa value for sign {sign} of {family}")


def gradings_match(K: KappaSet) -> bool:
    """Every projected element of K has grading kappa(Y)."""
    kappa = graded_kappa(K.sign, K.family)
    return all(g == kappa for g in K.gradings)


def _minus_slice(bounds: Tuple[int, ...], p: int) -> Iterable[PosetVector]:
    """a^(k) = k e_0 minus k spread greedily over slots j >= 1 within -bounds[j]."""
    for k in range(sum(bounds[1:]) + 1):
        a = [Fraction(0)] * p
        a[0] = Fraction(k)
        left = k
        for j in range(1, p):
            take = min(left, bounds[j])
            a[j] = Fraction(-take)
            left -= take
        yield PosetVector(tuple(a))


def _dedupe(vectors: Iterable[PosetVector]) -> Tuple[PosetVector, ...]:
    return tuple(sorted(set(vectors), key=lambda v: v.entries))


def kappa_set(sign: int, family: str, n: int, p: int) -> KappaSet:
    """The equivariant kappa set of +-Sigma(2,3,12n+c) with the action rho_p.

    Raises:
        OutsideClassifiedRange: (sign, family, n, p) is not classified
        NotCoprimeToFibers: p divides a fiber order
    """
    _check_domain(sign, family, n, p)
    Y = SeifertData(family_member(family, n))
    nvec, _ = n_vector(Y, p)

    if family in SPLIT_FAMILIES:
        reps = (-nvec,) if sign > 0 else (nvec,)
    elif sign > 0:
        rots = doubled_rotations(family, n, p)
        indices = {0}
        if _dagger(family, n, p):
            indices |= {rots[0], (-rots[0]) % p}
        reps = tuple(PosetVector.basis(i, p, 2) - nvec for i in sorted(indices))
    else:
        bounds = lower_bounds(family, n, p)
        reps = tuple(2 * a + nvec for a in _minus_slice(bounds, p))

    reps = _dedupe(reps)
    projected = _dedupe(v.project() for v in reps)
    LOG.debug(f"kappa set of {'+' if sign > 0 else '-'}{Y} at p={p}: "
              f"{[str(v) for v in projected]}")
    return KappaSet(sign, family, n, p, reps, projected)
