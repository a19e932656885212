"""Exact minimization of the fixed-point count over the feasible profiles.

The feasible set is the nonzero nonnegative integer solutions of one
homogeneous equation sum_j a_j N_j = 0. Its minimal-support solutions
(unit vectors e_j where a_j = 0, and for a_i > 0 > a_j the vector with
N_i = |a_j| / g, N_j = a_i / g, g = gcd(a_i, |a_j|)) are always feasible,
but once one side of the equation has two or more coefficients the Hilbert
basis also contains elements of larger support (2x + 3y = 5z has (1, 1, 1)).
``minimize`` therefore uses the generators only as an upper bound and
settles the optimum with a level-by-level reachability computation over
the balanced value sum_{a_i > 0} a_i N_i = sum_{a_j < 0} |a_j| N_j.

``oracle_minimize`` reaches the same optimum by exhaustive search over
objective levels and shares none of this machinery.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd
from typing import Iterator, Optional

from .model import (
    ProblemInstance,
    ReducedProfile,
    constraint_value,
    expand_profile,
    localization_sum,
    objective_value,
)

DEFAULT_ORACLE_BUDGET = 1_000_000


class InternalConsistencyError(RuntimeError):
    """A result contradicted a property that holds for every valid instance."""


class OracleBudgetExceeded(RuntimeError):
    def __init__(self, n: int, budget: int):
        self.n = n
        self.budget = budget
        super().__init__(f"oracle budget exceeded for n={n} ({budget} search nodes)")


class GeneratorKind(enum.Enum):
    UNIT_VECTOR = "UnitVector"
    OPPOSITE_SIGN_PAIR = "OppositeSignPair"
    # An optimal solution with support > 2. Being optimal it cannot split
    # into two nonzero solutions, so it is a Hilbert basis element too.
    HILBERT_ELEMENT = "HilbertBasisElement"


@dataclass(frozen=True)
class Generator:
    kind: GeneratorKind
    support: tuple[int, ...]  # 1-based variable indices
    profile: ReducedProfile
    objective: int


@dataclass(frozen=True)
class BoundCertificate:
    n: int
    bound: int
    witness: ReducedProfile
    generator: Optional[Generator]  # None for oracle-produced certificates
    verified: bool = False


def _generator_specs(inst: ProblemInstance) -> Iterator[tuple]:
    # (kind, support, objective, {index: value}) in enumeration order:
    # units by index, then pairs lexicographically by (i, j)
    a, c, m = inst.constraint, inst.objective, inst.m
    for j in range(m):
        if a[j] == 0:
            yield GeneratorKind.UNIT_VECTOR, (j + 1,), c[j], {j: 1}
    pos = [i for i in range(m) if a[i] > 0]
    neg = [j for j in range(m) if a[j] < 0]
    for i in pos:
        for j in neg:
            g = gcd(a[i], -a[j])
            ni, nj = -a[j] // g, a[i] // g
            yield GeneratorKind.OPPOSITE_SIGN_PAIR, (i + 1, j + 1), c[i] * ni + c[j] * nj, {i: ni, j: nj}


def _materialize(m: int, spec: tuple) -> Generator:
    kind, support, objective, entries = spec
    vec = [0] * m
    for k, v in entries.items():
        vec[k] = v
    return Generator(kind, support, ReducedProfile._trusted(tuple(vec)), objective)


def enumerate_generators(inst: ProblemInstance) -> list[Generator]:
    return [_materialize(inst.m, spec) for spec in _generator_specs(inst)]


def verify_certificate(inst: ProblemInstance, cert: BoundCertificate) -> bool:
    """Check a certificate from scratch; never raises."""
    try:
        w = cert.witness
        if cert.n != inst.n or len(w) != inst.m:
            return False
        if any(v < 0 for v in w) or not any(w):
            return False
        if constraint_value(inst, w) != 0:
            return False
        if objective_value(inst, w) != cert.bound or cert.bound <= 0:
            return False
        return localization_sum(inst.n, expand_profile(inst.n, w)) == 0
    except (TypeError, ValueError):
        return False


def _certify(inst: ProblemInstance, bound: int, witness: ReducedProfile,
             generator: Optional[Generator]) -> BoundCertificate:
    cert = BoundCertificate(inst.n, bound, witness, generator)
    if not verify_certificate(inst, cert):
        raise InternalConsistencyError(f"certificate for n={inst.n} failed verification")
    return BoundCertificate(inst.n, bound, witness, generator, verified=True)


def _reach_levels(coins: list[tuple[int, int]], levels: int, mask: int) -> list[int]:
    # reach[t] has bit v set iff some nonnegative combination of the
    # (value, cost) coins has total value v and total cost exactly t.
    reach = [1] + [0] * levels
    for t in range(1, levels + 1):
        bits = 0
        for value, cost in coins:
            if cost <= t:
                bits |= reach[t - cost] << value
        reach[t] = bits & mask
    return reach


def _rebuild(reach: list[int], coins: list[tuple[int, int, int]], t: int, v: int,
             out: list[int]) -> None:
    while t > 0:
        for index, value, cost in coins:
            if cost <= t and value <= v and reach[t - cost] >> (v - value) & 1:
                out[index] += 1
                t -= cost
                v -= value
                break
        else:
            raise InternalConsistencyError("reachability table is inconsistent")
    if v:
        raise InternalConsistencyError("reachability table is inconsistent")


def _balanced_optimum(inst: ProblemInstance, below: int) -> Optional[ReducedProfile]:
    """Cheapest solution with positive balanced value and objective < ``below``."""
    a, c = inst.constraint, inst.objective
    limit = below - 1
    if limit < 2:
        return None
    pos = [(i, a[i], c[i]) for i in range(inst.m) if a[i] > 0]
    neg = [(j, -a[j], c[j]) for j in range(inst.m) if a[j] < 0]
    if not pos or not neg:
        return None
    # The balanced value of a solution with objective <= limit is at most
    # limit times the best value-per-cost ratio on either side.
    vmax = min(max(limit * v // w for _, v, w in pos), max(limit * v // w for _, v, w in neg))
    pos = [x for x in pos if x[1] <= vmax]
    neg = [x for x in neg if x[1] <= vmax]
    if not pos or not neg:
        return None
    mask = (1 << (vmax + 1)) - 1
    reach_pos = _reach_levels([(v, w) for _, v, w in pos], limit, mask)
    reach_neg = _reach_levels([(v, w) for _, v, w in neg], limit, mask)
    for total in range(2, limit + 1):
        for t_pos in range(1, total):
            common = reach_pos[t_pos] & reach_neg[total - t_pos]
            common >>= 1
            if common:
                v = (common & -common).bit_length()  # smallest positive value
                out = [0] * inst.m
                _rebuild(reach_pos, pos, t_pos, v, out)
                _rebuild(reach_neg, neg, total - t_pos, v, out)
                return ReducedProfile(out)
    return None


def minimize(inst: ProblemInstance) -> BoundCertificate:
    """B(n) with a witness.

    The earliest generator of least objective is returned unless a
    cheaper solution of larger support exists.
    """
    spec = min(_generator_specs(inst), key=lambda s: s[2], default=None)  # first of equals
    if spec is None:
        raise InternalConsistencyError(
            f"infeasible: G=0 has no nonzero nonnegative solution for n={inst.n}"
        )
    best = _materialize(inst.m, spec)
    better = _balanced_optimum(inst, best.objective)
    if better is not None:
        support = tuple(j + 1 for j, v in enumerate(better) if v)
        best = Generator(GeneratorKind.HILBERT_ELEMENT, support, better,
                         objective_value(inst, better))
    return _certify(inst, best.objective, best.profile, best)


def _search_ceiling(inst: ProblemInstance) -> int:
    # Any feasible point bounds the optimum. Built directly from the signs,
    # without reducing by the gcd.
    a, c = inst.constraint, inst.objective
    for j, aj in enumerate(a):
        if aj == 0:
            return c[j]
    i = next((k for k, ak in enumerate(a) if ak > 0), None)
    j = next((k for k, ak in enumerate(a) if ak < 0), None)
    if i is None or j is None:
        raise InternalConsistencyError(
            f"infeasible: constraint coefficients of n={inst.n} share one strict sign"
        )
    return c[i] * -a[j] + c[j] * a[i]


class _LevelSearch:
    """Depth-first lexicographic scan of all profiles with a fixed objective."""

    def __init__(self, inst: ProblemInstance, budget: int):
        self.a = inst.constraint
        self.c = inst.objective
        self.m = inst.m
        self.n = inst.n
        self.budget = budget
        self.nodes = 0
        # Per suffix start k: the variables with least and greatest
        # constraint-per-objective ratio a/c, as (a, c) pairs.
        lo, hi = [None] * self.m, [None] * self.m
        for k in range(self.m - 1, -1, -1):
            cur = (self.a[k], self.c[k])
            nxt_lo = lo[k + 1] if k + 1 < self.m else None
            nxt_hi = hi[k + 1] if k + 1 < self.m else None
            lo[k] = cur if nxt_lo is None or cur[0] * nxt_lo[1] < nxt_lo[0] * cur[1] else nxt_lo
            hi[k] = cur if nxt_hi is None or cur[0] * nxt_hi[1] > nxt_hi[0] * cur[1] else nxt_hi
        self.lo, self.hi = lo, hi

    def _reachable(self, k: int, remaining: int, s: int) -> bool:
        # With objective ``remaining`` spent on variables k.., the constraint
        # contribution lies in [remaining * min a/c, remaining * max a/c].
        # It has to cancel s.
        la, lc = self.lo[k]
        ha, hc = self.hi[k]
        return remaining * la <= -s * lc and -s * hc <= remaining * ha

    def first_hit(self, level: int) -> Optional[tuple[int, ...]]:
        vec = [0] * self.m
        return self._descend(0, level, 0, vec)

    def _descend(self, k: int, remaining: int, s: int, vec: list[int]) -> Optional[tuple[int, ...]]:
        self.nodes += 1
        if self.nodes > self.budget:
            raise OracleBudgetExceeded(self.n, self.budget)
        if k == self.m - 1:
            ck, ak = self.c[k], self.a[k]
            if remaining % ck:
                return None
            v = remaining // ck
            if s + ak * v != 0:
                return None
            vec[k] = v
            return tuple(vec)
        if not self._reachable(k, remaining, s):
            return None
        ck, ak = self.c[k], self.a[k]
        for v in range(remaining // ck + 1):
            vec[k] = v
            hit = self._descend(k + 1, remaining - ck * v, s + ak * v, vec)
            if hit is not None:
                return hit
        vec[k] = 0
        return None


def oracle_minimize(inst: ProblemInstance,
                    budget: int = DEFAULT_ORACLE_BUDGET) -> BoundCertificate:
    """Iterative deepening on the objective level t = 1, 2, ...

    Each level is scanned exhaustively in lexicographic order; pruning only
    discards partial profiles whose constraint can no longer reach zero.
    ``budget`` caps the total number of search nodes over all levels.
    """
    ceiling = _search_ceiling(inst)
    search = _LevelSearch(inst, budget)
    for level in range(1, ceiling + 1):
        hit = search.first_hit(level)
        if hit is not None:
            return _certify(inst, level, ReducedProfile(hit), None)
    raise InternalConsistencyError(
        f"oracle found no feasible profile up to objective {ceiling} for n={inst.n}"
    )
