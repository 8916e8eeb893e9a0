"""Exhaustion experiments: invariants along annuli shrinking to the
punctured disk.

The annuli A_r = { r < |z| < 1 } increase to the punctured disk as r drops
to 0.  Along any such exhaustion the certified squeezing lower bounds at a
fixed base point converge to the exact punctured-disk value |z0|, while the
Fridman lower bound is already stable: the slit-clearance certificate only
uses the inclusion A_r into the punctured disk and so does not move with r.
The two trajectories together show the quotient of the limit domain being
approached from inside, and annulus_quotient_report packages what can and
cannot be concluded about a single annulus from certified bounds alone.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .domains import DomainError, annulus
from .invariants import fridman_value, squeezing_value
from .metrics import slit_clearance

DEFAULT_FLOOR = 1e-6
CONVERGENCE_SLACK = 1e-15


@dataclass(frozen=True)
class TrajectoryPoint:
    k: int
    r: float
    bound: float
    certificate_kind: str


@dataclass(frozen=True)
class ExhaustionSequence:
    """Strictly shrinking inner radii, reaching a configured floor.

    The base point must lie inside every annulus of the sequence, and the
    last radius must have reached the floor so that the sequence is an
    honest stand-in for the union being the whole punctured disk.
    """

    base_point: complex
    radii: tuple[float, ...]
    floor: float = DEFAULT_FLOOR

    def __post_init__(self):
        z0 = complex(self.base_point)
        if not 0.0 < abs(z0) < 1.0:
            raise DomainError(f"base point must lie in the punctured disk, got {z0}")
        if not self.radii:
            raise DomainError("empty radius sequence")
        if self.floor <= 0.0:
            raise DomainError(f"floor must be positive, got {self.floor}")
        prev = None
        for r in self.radii:
            if not 0.0 < r < abs(z0):
                raise DomainError(
                    f"radius {r} does not keep the base point {z0} inside the annulus"
                )
            if prev is not None and r >= prev:
                raise DomainError("radii must be strictly decreasing")
            prev = r
        if self.radii[-1] > self.floor:
            raise DomainError(
                f"last radius {self.radii[-1]} has not reached the floor {self.floor}"
            )

    @classmethod
    def geometric(
        cls,
        base_point: complex,
        r1: float | None = None,
        floor: float = DEFAULT_FLOOR,
        ratio: float = 2.0,
    ) -> "ExhaustionSequence":
        """r_k = r1 / ratio^(k-1), stopping at the first radius <= floor."""
        z0 = complex(base_point)
        if ratio <= 1.0:
            raise DomainError(f"ratio must exceed 1, got {ratio}")
        if r1 is None:
            r1 = abs(z0) / 2.0
        if floor > r1:
            raise DomainError(f"floor {floor} exceeds the first radius {r1}")
        radii = [r1]
        while radii[-1] > floor:
            radii.append(radii[-1] / ratio)
        return cls(base_point=z0, radii=tuple(radii), floor=floor)


def s_lower_trajectory(seq: ExhaustionSequence) -> tuple[TrajectoryPoint, ...]:
    """Certified squeezing lower bounds along the exhaustion."""
    out = []
    for k, r in enumerate(seq.radii, start=1):
        s = squeezing_value(annulus(r), seq.base_point)
        assert s.lower is not None
        out.append(
            TrajectoryPoint(
                k=k, r=r, bound=s.lower, certificate_kind=s.certificates[0].kind
            )
        )
    return tuple(out)


def e_lower_trajectory(seq: ExhaustionSequence) -> tuple[TrajectoryPoint, ...]:
    """Certified Fridman lower bounds along the exhaustion (constant in r)."""
    out = []
    for k, r in enumerate(seq.radii, start=1):
        e = fridman_value(annulus(r), seq.base_point)
        assert e.lower is not None
        out.append(
            TrajectoryPoint(
                k=k, r=r, bound=e.lower, certificate_kind=e.certificates[0].kind
            )
        )
    return tuple(out)


def convergence_assert(
    values: Sequence[float], limit: float, tol: float
) -> bool:
    """Did the trajectory settle at the limit?

    True when the final value is within tol of the limit and the gap to the
    limit is nonincreasing (up to 1e-15 slack) over the trailing half of the
    trajectory.
    """
    vals = [float(v) for v in values]
    if not vals:
        raise DomainError("empty trajectory")
    if abs(vals[-1] - limit) > tol:
        return False
    gaps = [abs(v - limit) for v in vals]
    tail = gaps[len(gaps) // 2 :]
    return all(b <= a + CONVERGENCE_SLACK for a, b in zip(tail, tail[1:]))


@dataclass(frozen=True)
class AnnulusQuotientReport:
    """What certified bounds say about the quotient on one annulus.

    The library's own outputs are one-sided here: an exact squeezing value
    on the annulus is not available, so strict inequality of the quotient
    needs an externally supplied squeezing upper bound.  Such a bound is
    accepted only if it is consistent with the computed lower bound; with
    it, m <= s_upper / e_lower, and the verdict says whether that product
    certifies m < 1.  Without it the report is explicitly inconclusive and
    attaches the exhaustion trajectory as evidence that annuli with small
    quotient exist near the punctured-disk limit.
    """

    z0: complex
    inner_radius: float
    s_lower: float
    s_upper: float | None
    e_lower: float
    e_upper: float
    m_lower: float
    m_upper: float | None
    conclusive: bool
    verdict: str
    evidence: tuple[TrajectoryPoint, ...]
    evidence_limit: float
    evidence_converged: bool


def annulus_quotient_report(
    z0: complex, r: float, s_upper: float | None = None, floor: float = DEFAULT_FLOOR
) -> AnnulusQuotientReport:
    z0 = complex(z0)
    r = float(r)
    if not 0.0 < r < abs(z0) < 1.0:
        raise DomainError(
            f"need r < |z0| < 1 for a base point in the annulus, got r={r}, z0={z0}"
        )
    dom = annulus(r)
    s = squeezing_value(dom, z0)
    e = fridman_value(dom, z0)
    assert s.lower is not None and e.lower is not None and e.upper is not None
    if s_upper is not None:
        s_upper = float(s_upper)
        if s_upper < s.lower - 1e-12:
            raise DomainError(
                f"supplied squeezing upper bound {s_upper} undercuts the "
                f"computed lower bound {s.lower}"
            )
        if s_upper > 1.0:
            raise DomainError(f"squeezing upper bound must be <= 1, got {s_upper}")

    m_lower = s.lower / e.upper
    m_upper = None if s_upper is None else s_upper / e.lower
    if m_upper is not None and m_upper < 1.0:
        conclusive = True
        verdict = (
            f"quotient < 1 certified: s_upper/e_lower = {m_upper:.12g} "
            f"(externally supplied squeezing upper bound {s_upper:.12g})"
        )
    else:
        conclusive = False
        verdict = (
            "inconclusive for strict inequality at this radius; existence of "
            "annuli with quotient < 1 follows from the exhaustion-limit "
            "argument (see evidence trajectory)"
        )

    seq = ExhaustionSequence.geometric(z0, r1=r, floor=min(floor, r))
    evidence = s_lower_trajectory(seq)
    limit = abs(z0)
    converged = convergence_assert([p.bound for p in evidence], limit, tol=1e-3)
    return AnnulusQuotientReport(
        z0=z0,
        inner_radius=r,
        s_lower=s.lower,
        s_upper=s_upper,
        e_lower=e.lower,
        e_upper=e.upper,
        m_lower=m_lower,
        m_upper=m_upper,
        conclusive=conclusive,
        verdict=verdict,
        evidence=evidence,
        evidence_limit=limit,
        evidence_converged=converged,
    )


@dataclass(frozen=True)
class SweepRow:
    """Punctured-disk bounds at base point a = e^(-A).

    s_exact is |a| (exact); e_lower the slit clearance; m_upper their
    quotient, an upper bound for s/e that decays to 0 as A grows.
    """

    A: float
    a: float
    s_exact: float
    e_lower: float
    m_upper: float


def _sweep_row(A: float) -> SweepRow:
    a = math.exp(-A)
    if a <= 0.0:
        raise DomainError(f"A = {A} underflows the base point e^(-A)")
    clearance = slit_clearance(a)
    return SweepRow(
        A=A,
        a=a,
        s_exact=a,
        e_lower=clearance.tanh_clearance,
        m_upper=a / clearance.tanh_clearance,
    )


def slit_sweep(
    a_start: float, a_stop: float, step: float, jobs: int = 1
) -> tuple[SweepRow, ...]:
    """Sweep A over [a_start, a_stop] in the given step.

    The grid includes both endpoints up to floating slack; an empty grid
    (a_stop < a_start, or nonpositive step) is rejected.
    """
    if a_start <= 0.0:
        raise DomainError(f"sweep start must be positive, got {a_start}")
    if step <= 0.0:
        raise DomainError(f"sweep step must be positive, got {step}")
    if a_stop < a_start:
        raise DomainError(f"empty sweep grid: stop {a_stop} < start {a_start}")
    count = int(math.floor((a_stop - a_start) / step + 1e-9)) + 1
    grid = [a_start + i * step for i in range(count)]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return tuple(pool.map(_sweep_row, grid))
    return tuple(_sweep_row(A) for A in grid)
