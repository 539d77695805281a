"""Closed-form spectra for joins of regular graphs and generalized wheels.

For r_i-regular parts G_i on n_i vertices the join G_1 + G_2 has distance
signless Laplacian eigenvalues 2(n_i - 2) + n_other - r_i - lam for every
adjacency eigenvalue lam of G_i other than one copy of r_i, plus the pair

    [-8 + 5(n1 + n2) - 2(r1 + r2)]/2
        +/- sqrt((3(n1 - n2) - 2(r1 - r2))^2 + 4 n1 n2)/2,

and distance Laplacian eigenvalues 2 n_i + n_other - r_i + lam plus n1 + n2
and 0.  Wheels specialize these with the adjacency spectra of a*K_m
(m-1 and -1, multiplicities a and a(m-1)) and C_n (2*cos(2*pi*j/n)).

Note the second wheel D^Q family comes out as (2a-1)m + n - 2: substitute
lam = -1 into 2(am - 2) + n - (m - 1) - lam.  The verification suite checks
this family against the numeric eigensolver and rejects the +2 variant.
"""

from __future__ import annotations

from dataclasses import dataclass

from .eigenvalues import (
    CosineTerm,
    Eigenvalue,
    IntegerValue,
    Spectrum,
    Surd,
    cosine_term,
    spectrum_of,
    surd,
)
from .graphs import WheelParams

__all__ = [
    "InvalidRegularPartError",
    "RegularPart",
    "adjacency_spectrum_complete",
    "adjacency_spectrum_copies",
    "adjacency_spectrum_cycle",
    "complete_part",
    "cycle_part",
    "copies_part",
    "dq_join_spectrum",
    "dl_join_spectrum",
    "gw_dq_spectrum",
    "gw_dl_spectrum",
]


class InvalidRegularPartError(ValueError):
    """A regular part whose adjacency spectrum is inconsistent."""


def adjacency_spectrum_complete(m: int) -> Spectrum:
    """Adjacency spectrum of K_m: m-1 once, -1 with multiplicity m-1."""
    return adjacency_spectrum_copies(1, m)


def adjacency_spectrum_copies(a: int, m: int) -> Spectrum:
    """Adjacency spectrum of a disjoint copies of K_m."""
    if a < 1:
        raise ValueError(f"copy count must be >= 1, got {a}")
    if m < 1:
        raise ValueError(f"clique size must be >= 1, got {m}")
    pairs = [(IntegerValue(m - 1), a)]
    if m > 1:
        pairs.append((IntegerValue(-1), a * (m - 1)))
    return spectrum_of(pairs)


def adjacency_spectrum_cycle(n: int) -> Spectrum:
    """Adjacency spectrum of C_n: 2*cos(2*pi*j/n) for j = 0..n-1."""
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return spectrum_of((cosine_term(0, j, n, sign=1), 1) for j in range(n))


@dataclass(frozen=True)
class RegularPart:
    """A regular graph known by order, degree and exact adjacency spectrum."""

    order: int
    degree: int
    adjacency_spectrum: Spectrum

    def __post_init__(self):
        spec = self.adjacency_spectrum
        if spec.order != self.order:
            raise InvalidRegularPartError(
                f"spectrum covers {spec.order} eigenvalues, part has order {self.order}"
            )
        if spec.multiplicity(IntegerValue(self.degree)) < 1:
            raise InvalidRegularPartError(
                f"degree {self.degree} missing from the adjacency spectrum"
            )
        values = spec.numeric_values()
        if max(values) > self.degree + 1e-9:
            raise InvalidRegularPartError("adjacency eigenvalue exceeds the degree")
        if abs(sum(values)) > 1e-8:
            raise InvalidRegularPartError("adjacency eigenvalues do not sum to zero")


def complete_part(m: int) -> RegularPart:
    return RegularPart(m, m - 1, adjacency_spectrum_complete(m))


def cycle_part(n: int) -> RegularPart:
    return RegularPart(n, 2, adjacency_spectrum_cycle(n))


def copies_part(a: int, m: int) -> RegularPart:
    """a disjoint copies of K_m as a join factor ((m-1)-regular, order a*m)."""
    return RegularPart(a * m, m - 1, adjacency_spectrum_copies(a, m))


def _without_one_degree_copy(part: RegularPart) -> list[tuple[Eigenvalue, int]]:
    """The part's adjacency spectrum with a single copy of the degree removed."""
    degree = IntegerValue(part.degree)
    out = []
    removed = False
    for eig, mult in part.adjacency_spectrum.items:
        if not removed and eig == degree:
            removed = True
            if mult > 1:
                out.append((eig, mult - 1))
        else:
            out.append((eig, mult))
    if not removed:
        raise InvalidRegularPartError(
            f"degree {part.degree} missing from the adjacency spectrum"
        )
    return out


def _const_minus(const: int, e: Eigenvalue) -> Eigenvalue:
    if isinstance(e, IntegerValue):
        return IntegerValue(const - e.value)
    if isinstance(e, Surd):
        return surd(2 * const - e.u, e.t, -e.sign)
    if isinstance(e, CosineTerm):
        # const - (c0 - 2cos) = (const - c0) + 2cos
        return cosine_term(const - e.c0, e.j, e.n, sign=1)
    raise TypeError(f"not an eigenvalue form: {e!r}")


def _const_plus(const: int, e: Eigenvalue) -> Eigenvalue:
    if isinstance(e, IntegerValue):
        return IntegerValue(const + e.value)
    if isinstance(e, Surd):
        return surd(2 * const + e.u, e.t, e.sign)
    if isinstance(e, CosineTerm):
        return cosine_term(const + e.c0, e.j, e.n, sign=-1)
    raise TypeError(f"not an eigenvalue form: {e!r}")


def dq_join_spectrum(p1: RegularPart, p2: RegularPart) -> Spectrum:
    """Distance signless Laplacian spectrum of the join of two regular parts."""
    n1, r1 = p1.order, p1.degree
    n2, r2 = p2.order, p2.degree
    pairs: list[tuple[Eigenvalue, int]] = []
    for eig, mult in _without_one_degree_copy(p1):
        pairs.append((_const_minus(2 * (n1 - 2) + n2 - r1, eig), mult))
    for eig, mult in _without_one_degree_copy(p2):
        pairs.append((_const_minus(2 * (n2 - 2) + n1 - r2, eig), mult))
    u = -8 + 5 * (n1 + n2) - 2 * (r1 + r2)
    t = (3 * (n1 - n2) - 2 * (r1 - r2)) ** 2 + 4 * n1 * n2
    pairs.append((surd(u, t, 1), 1))
    pairs.append((surd(u, t, -1), 1))
    return spectrum_of(pairs)


def dl_join_spectrum(p1: RegularPart, p2: RegularPart) -> Spectrum:
    """Distance Laplacian spectrum of the join of two regular parts."""
    n1, r1 = p1.order, p1.degree
    n2, r2 = p2.order, p2.degree
    pairs: list[tuple[Eigenvalue, int]] = []
    for eig, mult in _without_one_degree_copy(p1):
        pairs.append((_const_plus(2 * n1 + n2 - r1, eig), mult))
    for eig, mult in _without_one_degree_copy(p2):
        pairs.append((_const_plus(2 * n2 + n1 - r2, eig), mult))
    pairs.append((IntegerValue(n1 + n2), 1))
    pairs.append((IntegerValue(0), 1))
    return spectrum_of(pairs)


def gw_dq_spectrum(params: WheelParams) -> Spectrum:
    """Distance signless Laplacian spectrum of the generalized wheel.

    Equivalent closed form: 2(a-1)m + n - 2 with multiplicity a-1,
    (2a-1)m + n - 2 with multiplicity a(m-1), am + 2n - 6 - 2cos(2 pi j/n)
    for j = 1..n-1, and the surd pair
    ((5a-2)m + 5n - 10)/2 +/- sqrt(((3a-2)m - 3n + 6)^2 + 4amn)/2.
    """
    a, m, n = params.a, params.m, params.n
    return dq_join_spectrum(copies_part(a, m), cycle_part(n))


def gw_dl_spectrum(params: WheelParams) -> Spectrum:
    """Distance Laplacian spectrum of the generalized wheel.

    Equivalent closed form: 2am + n with multiplicity a-1, (2a-1)m + n with
    multiplicity a(m-1), am + 2n - 2 + 2cos(2 pi j/n) for j = 1..n-1, plus
    am + n and 0.
    """
    a, m, n = params.a, params.m, params.n
    return dl_join_spectrum(copies_part(a, m), cycle_part(n))
