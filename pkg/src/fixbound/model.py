"""The integer program behind B(n), plus the profile types it acts on.

Variables are the counts N_1..N_m of fixed points with a given number of
negative weights. For n = 2m the objective and constraint are F1/G1, for
n = 2m + 1 they are F2/G2. Coefficient vectors are stored so that position
j - 1 holds the coefficient of N_j.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"


class InvalidDimensionError(ValueError):
    """Raised for n < 3; the construction needs dim(M) = 2n >= 6."""

    def __init__(self, n: int):
        self.n = n
        super().__init__(
            f"n={n} gives dim(M)=2n={2 * n}; the integer program requires "
            "2n = dim(M) >= 6, i.e. n >= 3"
        )


def _as_tuple(values: Iterable[int]) -> tuple[int, ...]:
    out = tuple(values)
    for v in out:
        if isinstance(v, bool) or not isinstance(v, int):
            raise TypeError(f"profile entries must be integers, got {v!r}")
    return out


@dataclass(frozen=True)
class ReducedProfile:
    """Nonnegative vector (N_1, ..., N_m). The zero profile is allowed."""

    values: tuple[int, ...]

    def __init__(self, values: Iterable[int]):
        vals = _as_tuple(values)
        if any(v < 0 for v in vals):
            raise ValueError(f"profile entries must be nonnegative: {vals}")
        object.__setattr__(self, "values", vals)

    @classmethod
    def _trusted(cls, values: tuple[int, ...]) -> "ReducedProfile":
        # skips validation; callers guarantee nonnegative ints
        obj = object.__new__(cls)
        object.__setattr__(obj, "values", values)
        return obj

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, j: int) -> int:
        return self.values[j]

    def is_zero(self) -> bool:
        return not any(self.values)

    def scaled(self, t: int) -> "ReducedProfile":
        return ReducedProfile(t * v for v in self.values)


@dataclass(frozen=True)
class FullProfile:
    """Vector (N_0, ..., N_n) with N_i = N_{n-i} and N_0 = N_n = 0."""

    values: tuple[int, ...]

    def __init__(self, values: Iterable[int]):
        vals = _as_tuple(values)
        if len(vals) < 2:
            raise ValueError("a full profile has n + 1 >= 2 entries")
        if any(v < 0 for v in vals):
            raise ValueError(f"profile entries must be nonnegative: {vals}")
        if vals != vals[::-1]:
            raise ValueError(f"profile violates N_i = N_(n-i): {vals}")
        if vals[0] != 0:
            raise ValueError(f"profile violates N_0 = N_n = 0: {vals}")
        object.__setattr__(self, "values", vals)

    @property
    def n(self) -> int:
        return len(self.values) - 1

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    def total(self) -> int:
        return sum(self.values)


ProfileLike = Union[ReducedProfile, Sequence[int]]


def _reduced(p: ProfileLike) -> ReducedProfile:
    return p if isinstance(p, ReducedProfile) else ReducedProfile(p)


@dataclass(frozen=True)
class ProblemInstance:
    n: int
    m: int
    parity: Parity
    objective: tuple[int, ...]
    constraint: tuple[int, ...]

    @property
    def dim(self) -> int:
        return 2 * self.n

    def check_length(self, p: ProfileLike) -> ReducedProfile:
        p = _reduced(p)
        if len(p) != self.m:
            raise ValueError(
                f"profile has length {len(p)}, instance n={self.n} needs m={self.m}"
            )
        return p


# Python ints are unbounded; this only documents the width the coefficients
# are guaranteed to fit in.
_COEFF_LIMIT = 1 << 127


def build_instance(n: int) -> ProblemInstance:
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"n must be an integer, got {n!r}")
    if n < 3:
        raise InvalidDimensionError(n)
    if n % 2 == 0:
        m = n // 2
        objective = (2,) * (m - 1) + (1,)
        constraint = tuple(2 * (6 * (m - j) ** 2 - m) for j in range(1, m)) + (-m,)
        parity = Parity.EVEN
    else:
        m = (n - 1) // 2
        objective = (2,) * m
        constraint = tuple(6 * (m - j) * (m - j + 1) - m + 1 for j in range(1, m + 1))
        parity = Parity.ODD
    assert all(abs(a) < _COEFF_LIMIT for a in constraint)
    return ProblemInstance(n, m, parity, objective, constraint)


def objective_value(inst: ProblemInstance, p: ProfileLike) -> int:
    """Total number of fixed points encoded by ``p``."""
    p = inst.check_length(p)
    return sum(c * v for c, v in zip(inst.objective, p))


def constraint_value(inst: ProblemInstance, p: ProfileLike) -> int:
    p = inst.check_length(p)
    return sum(a * v for a, v in zip(inst.constraint, p))


def g_integrand(p: int, n: int) -> int:
    """Weight of a fixed point with ``p`` negative weights in the c1*c_{n-1} sum."""
    if not 0 <= p <= n:
        raise ValueError(f"p={p} outside 0..n={n}")
    twice = 5 * n - 3 * n * n
    assert twice % 2 == 0, "5n - 3n^2 is always even"
    return 6 * p * (p - 1) + twice // 2


def _reduced_length(n: int) -> int:
    return n // 2 if n % 2 == 0 else (n - 1) // 2


def expand_profile(n: int, p: ProfileLike) -> FullProfile:
    p = _reduced(p)
    m = _reduced_length(n)
    if len(p) != m:
        raise ValueError(f"profile has length {len(p)}, n={n} needs m={m}")
    full = [0] * (n + 1)
    for j, v in enumerate(p, start=1):
        full[j] = v
        full[n - j] = v
    return FullProfile(full)


def localization_sum(n: int, f: Union[FullProfile, Sequence[int]]) -> int:
    """Sum of N_p * g(p, n) over p = 0..n.

    Accepts a raw sequence as well, so single-point probes such as
    (1, 0, ..., 0) can be evaluated without the symmetry checks.
    """
    values = tuple(f)
    if len(values) != n + 1:
        raise ValueError(f"full profile has length {len(values)}, expected n+1={n + 1}")
    return sum(v * g_integrand(p, n) for p, v in enumerate(values))
