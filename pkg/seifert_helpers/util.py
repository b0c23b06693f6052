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
"""Errors and text parsers shared by the seifert helpers."""
import re
from fractions import Fraction
from typing import List, Tuple

FAMILY_PLUS_5 = "12n+5"
FAMILY_MINUS_5 = "12n-5"
FAMILY_MINUS_1 = "12n-1"
FAMILY_PLUS_1 = "12n+1"
FAMILIES = (FAMILY_PLUS_5, FAMILY_MINUS_5, FAMILY_MINUS_1, FAMILY_PLUS_1)

# offset c such that the family is Sigma(2, 3, 12n + c)
FAMILY_OFFSETS = {
    FAMILY_PLUS_5: 5,
    FAMILY_MINUS_5: -5,
    FAMILY_MINUS_1: -1,
    FAMILY_PLUS_1: 1,
}


class SeifertKappaError(ValueError):
    """Base class of every domain error raised by the seifert helpers."""
    pass


class PoleError(SeifertKappaError):
    """Raise when cot or csc is requested at an integer multiple of pi."""
    pass


class NotRational(SeifertKappaError):
    """Raise when a cyclotomic value expected to be rational is not."""

    def __init__(self, value):
        self.value = value
        super().__init__(f"value is not rational: {value!r}")


class NotCoprime(SeifertKappaError):
    """Raise when two arguments are required to be coprime and are not."""
    pass


class NotCoprimeToFibers(SeifertKappaError):
    """Raise when the group order shares a factor with a fiber order."""
    pass


class ReciprocityHypothesisViolated(SeifertKappaError):
    """Raise when a reciprocity evaluator is called outside its domain."""
    pass


class ParityObstruction(SeifertKappaError):
    """Raise when the even-quotient expansion of a cosecant sum does not apply."""
    pass


class UnsupportedFamily(SeifertKappaError):
    """Raise when Seifert data is not in one of the Brieskorn families."""
    pass


class SignMismatch(SeifertKappaError):
    """Raise when a rotation number has the wrong sign for the bundle degree."""
    pass


class InadmissibleL(SeifertKappaError):
    """Raise when a character index L is not admissible for the data."""
    pass


class IncompleteVector(SeifertKappaError):
    """Raise when a correction vector is missing entries."""
    pass


class IndexOutOfRange(SeifertKappaError):
    """Raise when a poset basis index is outside its range."""
    pass


class OutsideClassifiedRange(SeifertKappaError):
    """Raise when a kappa set is requested outside the classified cases."""
    pass


class SurfacesPresent(SeifertKappaError):
    """Raise when an operation requires pseudofree fixed-point data."""
    pass


class NoSuchFixedPoint(SeifertKappaError):
    """Raise when a stabilization point is not in the fixed-point data."""
    pass


class ParityHypothesisViolated(SeifertKappaError):
    """Raise when the nontrivial b2+ slots are not all even."""
    pass


class MissingCatalogData(SeifertKappaError):
    """Raise when a catalog entry lacks the values an operation needs."""
    pass


def parse_rational(text: str) -> Fraction:
    """Parse "5/2", "-3" or "0.5" into an exact Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"invalid rational: {text!r}") from e


def parse_int_list(text: str) -> List[int]:
    """Parse a comma separated list of integers such as "5,7,11"."""
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as e:
        raise ValueError(f"invalid integer list: {text!r}") from e


def parse_seifert(text: str) -> Tuple[int, ...]:
    """Parse Seifert data written as "2,3,59" or "sigma(2,3,59)".

    Args:
        text: the user supplied fiber orders

    Returns:
        the fiber orders as a tuple of integers
    """
    match = re.fullmatch(r"\s*(?:sigma|Sigma|Σ)?\s*\(?([-\d,\s]+)\)?\s*", text)
    if not match:
        raise ValueError(f"invalid seifert data: {text!r}")
    return tuple(parse_int_list(match.group(1)))


def parse_bundle(text: str) -> Tuple[int, Tuple[int, ...]]:
    """Parse line bundle Seifert data written as "(e;eps1,...,epsn)"."""
    match = re.fullmatch(r"\s*\(\s*(-?\d+)\s*;([-\d,\s]*)\)\s*", text)
    if not match:
        raise ValueError(f"invalid bundle data: {text!r}")
    return int(match.group(1)), tuple(parse_int_list(match.group(2)))


def parse_family(text: str) -> Tuple[int, str]:
    """Parse a signed Brieskorn family such as "12n-1", "+12n+5" or "-(12n-5)".

    Returns:
        (sign, family) where sign is +1 or -1
    """
    t = text.replace(" ", "")
    sign = 1
    if t[:2] in ("-(", "+(") and t.endswith(")"):
        sign = -1 if t[0] == "-" else 1
        t = t[2:-1]
    elif t[:1] in ("-", "+"):
        sign = -1 if t[0] == "-" else 1
        t = t[1:]
    if t not in FAMILIES:
        raise UnsupportedFamily(f"unknown family: {text!r}")
    return sign, t


def family_member(family: str, n: int) -> Tuple[int, int, int]:
    """Fiber orders of Sigma(2, 3, 12n + c) for a named family."""
    if family not in FAMILY_OFFSETS:
        raise UnsupportedFamily(f"unknown family: {family!r}")
    return 2, 3, 12 * n + FAMILY_OFFSETS[family]


def family_of(alphas) -> Tuple[str, int]:
    """Identify (family, n) of a Brieskorn sphere Sigma(2, 3, m)."""
    if len(alphas) != 3 or tuple(sorted(alphas))[:2] != (2, 3):
        raise UnsupportedFamily(f"not a Sigma(2,3,m) sphere: {alphas}")
    m = sorted(alphas)[2]
    for family, c in FAMILY_OFFSETS.items():
        if (m - c) % 12 == 0 and (m - c) // 12 >= 0:
            return family, (m - c) // 12
    raise UnsupportedFamily(f"not a Sigma(2,3,m) sphere: {alphas}")
