"""Structural consequences of the optimization problem.

Covers the degenerate families where B(n) = 2, the support-partition
conditions every feasible profile obeys, the case logic for minimal counts
3 and 4, conjecture screening against floor(n/2) + 1 and n + 1, and the
dimension-8 identity for the integral of c2^2.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Optional

from .model import InvalidDimensionError, ProblemInstance, ProfileLike, build_instance
from .solver import BoundCertificate, minimize


class Family(enum.Enum):
    EVEN_DEGENERATE = "EvenDegenerate"
    ODD_DEGENERATE = "OddDegenerate"
    IDENTITY_CONSTRAINT = "IdentityConstraint"
    GENERIC = "Generic"


@dataclass(frozen=True)
class ClassificationReport:
    n: int
    family: Family
    k: Optional[int] = None  # family parameter for the degenerate cases
    ell: Optional[int] = None  # threshold for Generic n

    @property
    def label(self) -> str:
        if self.family is Family.GENERIC:
            return f"Generic(ell={self.ell})"
        if self.k is not None:
            return f"{self.family.value}(k={self.k})"
        return self.family.value


def _even_ell(m: int) -> int:
    ell = isqrt(m // 6)
    while 6 * ell * ell > m:
        ell -= 1
    while 6 * (ell + 1) ** 2 <= m:
        ell += 1
    return ell


def _odd_ell(m: int) -> int:
    # floor((-3 + sqrt(6m + 3)) / 6): the largest ell with 6 ell (ell + 1) <= m - 1
    ell = max((isqrt(6 * m + 3) - 3) // 6, 0)
    while ell > 0 and 6 * ell * (ell + 1) > m - 1:
        ell -= 1
    while 6 * (ell + 1) * (ell + 2) <= m - 1:
        ell += 1
    return ell


def classify(n: int) -> ClassificationReport:
    if n < 3:
        raise InvalidDimensionError(n)
    if n == 3:
        return ClassificationReport(n, Family.IDENTITY_CONSTRAINT)
    if n % 2 == 0:
        m = n // 2
        if m % 6 == 0:
            k = isqrt(m // 6)
            if 6 * k * k == m:
                return ClassificationReport(n, Family.EVEN_DEGENERATE, k=k)
        return ClassificationReport(n, Family.GENERIC, ell=_even_ell(m))
    m = (n - 1) // 2
    if (m - 1) % 6 == 0:
        q = (m - 1) // 6
        k = isqrt(q)
        if k * (k + 1) == q:
            return ClassificationReport(n, Family.ODD_DEGENERATE, k=k)
    return ClassificationReport(n, Family.GENERIC, ell=_odd_ell(m))


def support_groups(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Variable indices j (of N_j) in the two groups that must both be occupied.

    Even n = 2m: {N_m, N_{m-1}, ..., N_{m-ell}} and {N_{m-ell-1}, ..., N_1}.
    Odd n = 2m + 1: {N_m, ..., N_{m-ell}} and {N_{m-ell}, ..., N_1}; the two
    ranges share N_{m-ell}.
    """
    report = classify(n)
    if report.family is not Family.GENERIC:
        raise ValueError(f"n={n} is {report.label}; support groups apply to Generic n only")
    ell = report.ell
    if n % 2 == 0:
        m = n // 2
        low = (m,) + tuple(m - k for k in range(1, ell + 1))
        high = tuple(m - k for k in range(ell + 1, m))
    else:
        m = (n - 1) // 2
        low = tuple(m - k for k in range(0, ell + 1))
        high = tuple(m - k for k in range(ell, m))
    return low, high


def check_support_partition(inst: ProblemInstance, p: ProfileLike) -> tuple[bool, bool]:
    """Whether each support group holds a positive entry of ``p``.

    Reports instead of asserting, so inputs outside the feasible set can be
    probed.
    """
    p = inst.check_length(p)
    low, high = support_groups(inst.n)
    return (any(p[j - 1] > 0 for j in low), any(p[j - 1] > 0 for j in high))


class Bound1Case(enum.Enum):
    ONE_A = "1a"  # even n: N_m > 0 or some high-group entry
    ONE_B = "1b"  # even n: some N_{m-k} with 1 <= k <= ell
    TWO = "2"  # odd n


_BOUND1_COUNTS = {Bound1Case.ONE_A: 3, Bound1Case.ONE_B: 4, Bound1Case.TWO: 4}


def min_count_given_support(n: int, case: Bound1Case) -> int:
    report = classify(n)
    if report.family is not Family.GENERIC:
        raise ValueError(f"n={n} is {report.label}; the case analysis needs Generic n")
    even = n % 2 == 0
    if even != (case in (Bound1Case.ONE_A, Bound1Case.ONE_B)):
        raise ValueError(f"case {case.value} does not apply to {'even' if even else 'odd'} n={n}")
    return _BOUND1_COUNTS[case]


@dataclass(frozen=True)
class ConjectureReport:
    n: int
    bound: int
    kosniowski_threshold: int
    frankel_threshold: int
    kosniowski_ok: bool
    frankel_ok: bool
    certificate: Optional[BoundCertificate] = None


def conjecture_report(n: int, certificate: Optional[BoundCertificate] = None) -> ConjectureReport:
    if certificate is None:
        certificate = minimize(build_instance(n))
    bound = certificate.bound
    kos = n // 2 + 1
    fra = n + 1
    return ConjectureReport(n, bound, kos, fra, bound >= kos, bound >= fra, certificate)


@dataclass(frozen=True)
class Chern8Result:
    value: Fraction
    warning: Optional[str] = None

    @property
    def integral(self) -> bool:
        return self.value.denominator == 1


def chern8_invariant(num_fixed_points: int) -> Chern8Result:
    """Integral of c2^2 on an 8-manifold with c1 = 0, from its fixed-point count.

    Only meaningful for n = 4 and a non-Hamiltonian action with c1 = 0,
    where the integral equals one third of the integral of c4.
    """
    if num_fixed_points < 1:
        raise ValueError("the number of fixed points must be positive")
    value = Fraction(num_fixed_points, 3)
    warning = None
    if value.denominator != 1:
        warning = (f"{num_fixed_points} fixed points give a non-integral value {value}; "
                   "no manifold in the hypothesis class has this count")
    return Chern8Result(value, warning)
