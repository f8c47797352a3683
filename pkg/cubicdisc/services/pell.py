"""
Generalized Pell equations x^2 - D*y^2 = N.

For non-square D and 0 < |N| < sqrt(D), every positive primitive solution has
x/y a convergent of sqrt(D), and the values p_i^2 - D*q_i^2 = (-1)^(i+1) Q_(i+1)
are read off the PQa recurrence; they repeat with period dividing twice the
continued-fraction period, so two periods decide solvability.
"""
from __future__ import annotations

import logging
from itertools import count, islice
from typing import Iterator, Optional

from cubicdisc.model.errors import DomainError
from cubicdisc.model.models import ContinuedFraction, PellSolution
from cubicdisc.services.integer_kernel import divisors, gcd, is_perfect_square, isqrt

logger = logging.getLogger(__name__)


def _pqa(D: int, a0: int) -> Iterator[tuple[int, int]]:
    """Yield (a_i, Q_i) for i = 1, 2, ... of the expansion of sqrt(D)."""
    P, Q, a = 0, 1, a0
    while True:
        P = a * Q - P
        Q = (D - P * P) // Q
        a = (a0 + P) // Q
        yield a, Q


def _check_nonsquare(D: int) -> int:
    if D <= 0:
        raise DomainError(f"D must be positive, got {D}")
    a0 = isqrt(D)
    if a0 * a0 == D:
        raise DomainError(f"D = {D} is a perfect square")
    return a0


def cf_sqrt(D: int) -> ContinuedFraction:
    a0 = _check_nonsquare(D)
    period: list[int] = []
    for a, Q in _pqa(D, a0):
        period.append(a)
        if Q == 1:
            break
    logger.debug("sqrt(%d): a0=%d, period length %d", D, a0, len(period))
    return ContinuedFraction(D=D, a0=a0, period=tuple(period))


def convergents(cf: ContinuedFraction) -> Iterator[tuple[int, int]]:
    p_prev, q_prev = 1, 0
    p, q = cf.a0, 1
    yield p, q
    for i in count(1):
        a = cf.partial_quotient(i)
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
        yield p, q


def _norm_values(cf: ContinuedFraction) -> list[int]:
    """p_i^2 - D*q_i^2 for i in [0, 2L), without building the convergents."""
    L = cf.length
    qs = [Q for _, Q in islice(_pqa(cf.D, cf.a0), L)]
    return [(-1) ** (i + 1) * qs[i % L] for i in range(2 * L)]


def _convergent_at(cf: ContinuedFraction, index: int) -> tuple[int, int]:
    return next(islice(convergents(cf), index, None))


def fundamental_pell(D: int) -> PellSolution:
    cf = cf_sqrt(D)
    index = cf.length - 1 if cf.length % 2 == 0 else 2 * cf.length - 1
    x, y = _convergent_at(cf, index)
    return PellSolution(x=x, y=y, D=D, N=1)


def _in_convergent_regime(D: int, N: int) -> bool:
    return N != 0 and N * N < D


def _primitive_hits(cf: ContinuedFraction, N: int) -> list[int]:
    return [i for i, v in enumerate(_norm_values(cf)) if v == N]


def _square_solutions(D: int, N: int) -> list[PellSolution]:
    """(x - s*y)(x + s*y) = N with s = sqrt(D): finitely many factor pairs."""
    s = isqrt(D)
    if N == 0:
        return [PellSolution(x=s, y=1, D=D, N=0)]
    found: set[tuple[int, int]] = set()
    for u in divisors(abs(N)):
        for lo in (u, -u):
            hi = N // lo
            if (lo + hi) % 2 or (hi - lo) % (2 * s):
                continue
            x, y = (lo + hi) // 2, (hi - lo) // (2 * s)
            if y >= 1:
                found.add((abs(x), y))
    return [PellSolution(x=x, y=y, D=D, N=N) for x, y in sorted(found, key=lambda t: (t[1], t[0]))]


def solve_pell_like(D: int, N: int) -> Optional[PellSolution]:
    """
    The solution of x^2 - D*y^2 = N with the least y >= 1, or None.

    Non-square D needs 0 < |N| < sqrt(D); square D accepts any N.
    """
    if D <= 0:
        raise DomainError(f"D must be positive, got {D}")
    if is_perfect_square(D) is not None:
        logger.debug("x^2 - %dy^2 = %d: square D, factor-pair branch", D, N)
        sols = _square_solutions(D, N)
        return sols[0] if sols else None

    if not _in_convergent_regime(D, N):
        raise DomainError(f"|N| = {abs(N)} is outside 0 < |N| < sqrt({D}); use pell_oracle")

    cf = cf_sqrt(D)
    best: Optional[PellSolution] = None
    for g in divisors(abs(N)):
        if N % (g * g):
            continue
        reduced = N // (g * g)
        hits = _primitive_hits(cf, reduced)
        if not hits:
            continue
        x, y = _convergent_at(cf, hits[0])
        if best is None or g * y < best.y:
            best = PellSolution(x=g * x, y=g * y, D=D, N=N)
    return best


def iter_solutions(D: int, N: int) -> Iterator[PellSolution]:
    """Positive primitive solutions in increasing y."""
    if is_perfect_square(D) is not None:
        yield from (s for s in _square_solutions(D, N) if gcd(s.x, s.y) == 1)
        return
    if not _in_convergent_regime(D, N):
        raise DomainError(f"|N| = {abs(N)} is outside 0 < |N| < sqrt({D})")

    cf = cf_sqrt(D)
    values = _norm_values(cf)
    if N not in values:
        return
    span = len(values)
    for i, (x, y) in enumerate(convergents(cf)):
        if values[i % span] == N:
            yield PellSolution(x=x, y=y, D=D, N=N)


def class_bound(D: int, N: int) -> int:
    """
    Every solution class of x^2 - D*y^2 = N has a member with
    |y| <= y1*sqrt(|N|) / sqrt(2*(x1 + sign(N))), (x1, y1) the fundamental unit.
    """
    if N == 0:
        raise DomainError("class bound needs N != 0")
    unit = fundamental_pell(D)
    shift = 1 if N > 0 else -1
    return isqrt(unit.y * unit.y * abs(N) // (2 * (unit.x + shift)))


def solve_pell_general(D: int, N: int) -> Optional[PellSolution]:
    """solve_pell_like, extended to every N by a scan up to the class bound."""
    if D <= 0:
        raise DomainError(f"D must be positive, got {D}")
    if is_perfect_square(D) is not None or _in_convergent_regime(D, N):
        return solve_pell_like(D, N)
    if N == 0:
        return None
    bound = max(1, class_bound(D, N))
    logger.debug("x^2 - %dy^2 = %d outside convergent regime; scanning y <= %d", D, N, bound)
    sols = pell_oracle(D, N, bound)
    if sols:
        return sols[0]
    s = is_perfect_square(N)
    if s is not None:
        # the class of (s, 0) has no member with y in [1, bound]
        unit = fundamental_pell(D)
        return PellSolution(x=s * unit.x, y=s * unit.y, D=D, N=N)
    return None


def pell_oracle(D: int, N: int, y_max: int) -> list[PellSolution]:
    """Every solution with 1 <= y <= y_max, by testing D*y^2 + N for squareness."""
    if D <= 0 or y_max < 1:
        raise DomainError(f"pell_oracle needs D > 0 and y_max >= 1, got D={D}, y_max={y_max}")
    out: list[PellSolution] = []
    for y in range(1, y_max + 1):
        x = is_perfect_square(D * y * y + N)
        if x is not None:
            out.append(PellSolution(x=x, y=y, D=D, N=N))
    return out
