"""Exact integer-spectrum classification for generalized wheels.

The wheel's D^Q spectrum is integral exactly when n is 3, 4 or 6 (so the
cycle's cosine eigenvalues are integers) and the surd discriminant

    t(a, m, n) = ((3a-2)m - 3n + 6)^2 + 4amn

is a perfect square.  A parity argument guarantees the surd numerators are
then even, so no further condition is needed.  All arithmetic is on Python
ints, hence exact at any size.

For a >= 2 the perfect-square condition factorizes: writing t = c^2 and
(3a-2)^2 c^2 - p^2 = K(a, n) with alpha = (3a-2)c + p gives alpha | K/2, so
scanning divisors of K/2 recovers every admissible m from

    m = (+alpha^2 + B(a, n) alpha - K) / (2 alpha (3a-2)^2)      (plus family)
    m = (-alpha^2 + B(a, n) alpha + K) / (2 alpha (3a-2)^2)      (minus family)

with K = 72a(a-1), 32a(7a-6), 144a(5a-4) and B = 6(a-2), 4(5a-6), 48(a-1)
for n = 3, 4, 6.  The minus family additionally needs alpha below an upper
bound; we iterate the bound inclusively, where the endpoint only ever yields
m = 0 and is filtered out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .closed_forms import RegularPart
from .graphs import WheelParams

__all__ = [
    "DqWitness",
    "AlphaSolution",
    "ClassificationResult",
    "DqClassification",
    "FAMILY_LABEL",
    "isqrt",
    "is_perfect_square",
    "gcd",
    "dq_discriminant",
    "is_dq_integral",
    "parity_check",
    "is_gw_dl_integral",
    "is_join_dl_integral",
    "classify_gw1_dq",
    "m_upper_bound",
    "enumerate_alpha_solutions",
    "classify_all_dq",
]

# Label for the unbounded hub-clique family (a=1, n=3, every m).
FAMILY_LABEL = "a=1,n=3,m=*"

_M_BOUND = {3: 2, 4: 8, 6: 31}


def isqrt(v: int) -> int:
    """Floor of the square root of a nonnegative integer."""
    if v < 0:
        raise ValueError(f"isqrt needs a nonnegative argument, got {v}")
    return math.isqrt(v)


def is_perfect_square(v: int) -> bool:
    if v < 0:
        return False
    root = math.isqrt(v)
    return root * root == v


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def dq_discriminant(params: WheelParams) -> int:
    """((3a-2)m - 3n + 6)^2 + 4amn, the square under the wheel's surd pair."""
    a, m, n = params.a, params.m, params.n
    return ((3 * a - 2) * m - 3 * n + 6) ** 2 + 4 * a * m * n


@dataclass(frozen=True)
class DqWitness:
    """Outcome of the D^Q integrality test with its certificate."""

    t: int
    c: int | None
    n_ok: bool
    verdict: bool


def is_dq_integral(params: WheelParams) -> DqWitness:
    """Integral D^Q spectrum iff the discriminant is square and n in {3,4,6}."""
    t = dq_discriminant(params)
    root = math.isqrt(t)
    c = root if root * root == t else None
    n_ok = params.n in (3, 4, 6)
    return DqWitness(t=t, c=c, n_ok=n_ok, verdict=c is not None and n_ok)


def parity_check(a: int, m: int, n: int) -> bool:
    """(5a-2)m + 5n - 10 and the discriminant agree mod 2 (always true).

    This is what makes the surd pair collapse to integers, never
    half-integers, when the discriminant is a perfect square.
    """
    u = (5 * a - 2) * m + 5 * n - 10
    t = ((3 * a - 2) * m - 3 * n + 6) ** 2 + 4 * a * m * n
    return u % 2 == t % 2


def is_gw_dl_integral(params: WheelParams) -> bool:
    """The wheel's D^L spectrum is integral iff n is 3, 4 or 6."""
    return params.n in (3, 4, 6)


def is_join_dl_integral(p1: RegularPart, p2: RegularPart) -> bool:
    """A join of regular graphs is D^L-integral iff both parts are A-integral."""
    return p1.adjacency_spectrum.is_integral() and p2.adjacency_spectrum.is_integral()


@dataclass(frozen=True)
class ClassificationResult:
    params: WheelParams
    dq: DqWitness
    dl_verdict: bool
    matched_case: str | None

    def __post_init__(self):
        if self.dq.verdict != (self.matched_case is not None):
            raise ValueError("matched_case must be present exactly for integral triples")


def _label(params: WheelParams) -> str | None:
    if params.a == 1 and params.n == 3:
        return FAMILY_LABEL
    return f"sporadic ({params.a},{params.m},{params.n})"


def _classify(params: WheelParams) -> ClassificationResult:
    witness = is_dq_integral(params)
    return ClassificationResult(
        params=params,
        dq=witness,
        dl_verdict=is_gw_dl_integral(params),
        matched_case=_label(params) if witness.verdict else None,
    )


def classify_gw1_dq(m: int, n: int) -> ClassificationResult:
    """D^Q classification of the single-copy wheel K_m + C_n.

    Integral exactly for n=3 (every m) and the five sporadic values
    (m, n) in {(5,4), (5,6), (9,6), (16,6), (35,6)}.
    """
    return _classify(WheelParams(1, m, n))


def m_upper_bound(n: int) -> int:
    """Largest clique size admitting an integral wheel with a >= 2 copies."""
    if n not in _M_BOUND:
        raise ValueError(f"bound only defined for n in (3, 4, 6), got {n}")
    return _M_BOUND[n]


@dataclass(frozen=True)
class AlphaSolution:
    """One admissible clique size found by the divisor parametrization."""

    a: int
    n: int
    alpha: int
    family: str  # "plus" | "minus"
    m: int
    p: int
    c: int


def _alpha_constants(a: int, n: int) -> tuple[int, int, int]:
    """(K, B, minus-family upper bound) for the factorization at (a, n)."""
    if n == 3:
        return 72 * a * (a - 1), 6 * (a - 2), 12 * (a - 1)
    if n == 4:
        return 32 * a * (7 * a - 6), 4 * (5 * a - 6), 4 * (7 * a - 6)
    if n == 6:
        return 144 * a * (5 * a - 4), 48 * (a - 1), 12 * (5 * a - 4)
    raise ValueError(f"alpha parametrization only covers n in (3, 4, 6), got {n}")


def _divisors(v: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= v:
        if v % d == 0:
            small.append(d)
            if d * d != v:
                large.append(v // d)
        d += 1
    return small + large[::-1]


def enumerate_alpha_solutions(a: int, n: int) -> list[AlphaSolution]:
    """All integral clique sizes m for a >= 2 copies, via divisor scanning.

    Iterates alpha over the divisors of K/2 with alpha^2 >= K (both families)
    and alpha at most the minus-family bound (minus family only), keeping the
    m that come out as positive integers.
    """
    if a < 2:
        raise ValueError(f"the divisor parametrization needs a >= 2, got {a}")
    K, B, minus_upper = _alpha_constants(a, n)
    denominator_base = 2 * (3 * a - 2) ** 2
    solutions = []
    for alpha in _divisors(K // 2):
        if alpha * alpha < K:
            continue
        candidates = [("plus", alpha * alpha + B * alpha - K)]
        if alpha <= minus_upper:
            candidates.append(("minus", -alpha * alpha + B * alpha + K))
        for family, numerator in candidates:
            if numerator % (denominator_base * alpha) != 0:
                continue
            m = numerator // (denominator_base * alpha)
            if m < 1:
                continue
            p = (alpha * alpha - K) // (2 * alpha)
            c = (alpha * alpha + K) // (2 * (3 * a - 2) * alpha)
            solutions.append(
                AlphaSolution(a=a, n=n, alpha=alpha, family=family, m=m, p=p, c=c)
            )
    solutions.sort(key=lambda s: (s.m, s.family, s.alpha))
    return solutions


@dataclass(frozen=True)
class DqClassification:
    """Grid scan outcome: the unbounded family flag plus sporadic triples."""

    a_max: int
    m_max: int
    n_values: tuple[int, ...]
    has_infinite_family: bool
    sporadics: tuple[ClassificationResult, ...]


def classify_all_dq(a_max: int, m_max: int, n_values) -> DqClassification:
    """Exhaustive D^Q scan over a <= a_max, m <= m_max, n in n_values.

    The a=1, n=3 column is integral for every m and is reported as a flag
    rather than enumerated; everything else integral lands in `sporadics`.
    """
    if a_max < 1 or m_max < 1:
        raise ValueError("grid bounds must be >= 1")
    n_values = tuple(sorted(set(int(n) for n in n_values)))
    if any(n < 3 for n in n_values):
        raise ValueError("cycle lengths must be >= 3")
    sporadics = []
    for a in range(1, a_max + 1):
        for m in range(1, m_max + 1):
            for n in n_values:
                if a == 1 and n == 3:
                    continue
                result = _classify(WheelParams(a, m, n))
                if result.dq.verdict:
                    sporadics.append(result)
    sporadics.sort(key=lambda r: (r.params.a, r.params.m, r.params.n))
    return DqClassification(
        a_max=a_max,
        m_max=m_max,
        n_values=n_values,
        has_infinite_family=3 in n_values,
        sporadics=tuple(sporadics),
    )
