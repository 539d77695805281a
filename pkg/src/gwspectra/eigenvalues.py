"""Exact eigenvalue forms and multiset spectra.

Eigenvalues come in three exact shapes: plain integers, quadratic surds
(u + sign*sqrt(t))/2, and cosine terms c0 - 2*cos(2*pi*j/n).  The factory
functions normalize aggressively: a surd whose discriminant is a perfect
square collapses to an integer, and a cosine term collapses whenever the
cosine is rational (reduced denominator 1, 2, 3, 4 or 6 -- by Niven's
theorem there are no other rational values).  Spectra group eigenvalues by
structural equality of the normalized forms, so multiplicity counting never
touches floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

__all__ = [
    "IntegerValue",
    "Surd",
    "CosineTerm",
    "Eigenvalue",
    "Spectrum",
    "surd",
    "cosine_term",
    "numeric_value",
    "spectrum_of",
]


@dataclass(frozen=True)
class IntegerValue:
    value: int


@dataclass(frozen=True)
class Surd:
    """(u + sign*sqrt(t))/2 with t a non-square positive integer."""

    u: int
    t: int
    sign: int


@dataclass(frozen=True)
class CosineTerm:
    """c0 - 2*cos(2*pi*j/n), canonical: gcd(j, n) = 1 and 0 < j/n <= 1/2."""

    c0: int
    j: int
    n: int


Eigenvalue = Union[IntegerValue, Surd, CosineTerm]

# 2*cos(2*pi*j/n) for the reduced denominators n where it is an integer
# (j/n folded into (0, 1/2] plus the endpoint 0).
_INTEGER_COS = {1: 2, 2: -2, 3: -1, 4: 0, 6: 1}


def surd(u: int, t: int, sign: int) -> Eigenvalue:
    """Build (u + sign*sqrt(t))/2, collapsing perfect squares to integers.

    When t is a perfect square the numerator u + sign*sqrt(t) must be even;
    the spectra produced by this package guarantee that by a parity argument,
    so an odd numerator is rejected as a construction error.
    """
    if t < 0:
        raise ValueError(f"surd discriminant must be nonnegative, got {t}")
    if sign not in (1, -1):
        raise ValueError(f"surd sign must be +1 or -1, got {sign}")
    root = math.isqrt(t)
    if root * root == t:
        numerator = u + sign * root
        if numerator % 2 != 0:
            raise ValueError(
                f"surd ({u} {'+' if sign > 0 else '-'} sqrt({t}))/2 "
                "does not normalize to an integer"
            )
        return IntegerValue(numerator // 2)
    return Surd(u, t, sign)


def cosine_term(c0: int, j: int, n: int, sign: int = -1) -> Eigenvalue:
    """Build c0 + sign*2*cos(2*pi*j/n) in canonical form.

    The canonical shape is c0 - 2*cos(2*pi*j'/n') with j'/n' a reduced
    fraction in (0, 1/2]; a +cos term is folded in via cos(x + pi) = -cos(x),
    and cos(-x) = cos(x) folds the angle into the upper half turn.  Rational
    cosines collapse to IntegerValue, which is exactly what makes "every
    eigenvalue is an integer" decidable structurally.
    """
    if n < 1:
        raise ValueError(f"cosine denominator must be positive, got {n}")
    if sign not in (1, -1):
        raise ValueError(f"cosine sign must be +1 or -1, got {sign}")
    angle = Fraction(j, n)
    if sign == 1:
        angle += Fraction(1, 2)
    angle %= 1
    if angle > Fraction(1, 2):
        angle = 1 - angle
    if angle.denominator in _INTEGER_COS:
        return IntegerValue(c0 - _INTEGER_COS[angle.denominator])
    return CosineTerm(c0, angle.numerator, angle.denominator)


def _canonical(e: Eigenvalue) -> Eigenvalue:
    if isinstance(e, IntegerValue):
        return e
    if isinstance(e, Surd):
        return surd(e.u, e.t, e.sign)
    if isinstance(e, CosineTerm):
        return cosine_term(e.c0, e.j, e.n)
    raise TypeError(f"not an eigenvalue form: {e!r}")


def numeric_value(e: Eigenvalue) -> float:
    """Floating-point evaluation of the defining formula."""
    if isinstance(e, IntegerValue):
        return float(e.value)
    if isinstance(e, Surd):
        return (e.u + e.sign * math.sqrt(e.t)) / 2.0
    if isinstance(e, CosineTerm):
        return e.c0 - 2.0 * math.cos(2.0 * math.pi * e.j / e.n)
    raise TypeError(f"not an eigenvalue form: {e!r}")


def _form_rank(e: Eigenvalue) -> int:
    if isinstance(e, IntegerValue):
        return 0
    if isinstance(e, Surd):
        return 1
    return 2


def _sort_key(e: Eigenvalue):
    # Descending numeric value; ties broken integer < surd < cosine, then by
    # the structural fields so the ordering is fully deterministic.
    if isinstance(e, IntegerValue):
        fields = (e.value,)
    elif isinstance(e, Surd):
        fields = (e.u, e.t, e.sign)
    else:
        fields = (e.c0, e.n, e.j)
    return (-numeric_value(e), _form_rank(e), fields)


@dataclass(frozen=True)
class Spectrum:
    """Multiset of exact eigenvalues, sorted descending by numeric value."""

    items: tuple[tuple[Eigenvalue, int], ...]

    @property
    def order(self) -> int:
        return sum(mult for _, mult in self.items)

    def numeric_values(self) -> list[float]:
        """All eigenvalues with multiplicity, descending."""
        out: list[float] = []
        for eig, mult in self.items:
            out.extend([numeric_value(eig)] * mult)
        return out

    def is_integral(self) -> bool:
        return all(isinstance(eig, IntegerValue) for eig, _ in self.items)

    def multiplicity(self, e: Eigenvalue) -> int:
        target = _canonical(e)
        for eig, mult in self.items:
            if eig == target:
                return mult
        return 0

    def sum_numeric(self) -> float:
        return sum(numeric_value(eig) * mult for eig, mult in self.items)

    def exact_sum(self) -> int | None:
        """Exact integer eigenvalue sum, when structurally available.

        Works when every item is an integer or part of a matched +/- surd
        pair (each pair sums to u).  Returns None if cosine terms or
        unmatched surds are present.
        """
        total = 0
        unmatched: dict[tuple[int, int], int] = {}
        for eig, mult in self.items:
            if isinstance(eig, IntegerValue):
                total += eig.value * mult
            elif isinstance(eig, Surd):
                key = (eig.u, eig.t)
                unmatched[key] = unmatched.get(key, 0) + eig.sign * mult
                if eig.sign == 1:
                    total += eig.u * mult  # a matched pair sums to u
            else:
                return None
        if any(net != 0 for net in unmatched.values()):
            return None
        return total


def spectrum_of(pairs: Iterable[tuple[Eigenvalue, int]]) -> Spectrum:
    """Group eigenvalue/multiplicity pairs into a canonical Spectrum."""
    acc: dict[Eigenvalue, int] = {}
    for eig, mult in pairs:
        if mult <= 0:
            raise ValueError(f"multiplicity must be positive, got {mult}")
        key = _canonical(eig)
        acc[key] = acc.get(key, 0) + mult
    items = tuple(sorted(acc.items(), key=lambda item: _sort_key(item[0])))
    return Spectrum(items)
