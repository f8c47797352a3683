"""
The numerical conditions on a discriminant d:

  (*)    d > 6 and d = 0 or 2 (mod 6)
  (**)   d is not divisible by 4, 9 or any odd prime p = 2 (mod 3)
  (***)  d = (2n^2 + 2n + 2) / a^2 for some integers n, a

(**) has three characterizations (prime factors, primitive norms of A2, divisors
of 2n^2+2n+2); each is computed independently and they are cross-checked.
"""
from __future__ import annotations

import logging
from itertools import islice
from typing import Optional

import gmpy2

from cubicdisc.model.errors import DomainError, TheoryViolation
from cubicdisc.model.models import ConditionReport
from cubicdisc.services import pell
from cubicdisc.services.integer_kernel import crt_all, factorize, gcd, is_perfect_square, isqrt, sqrt_mod_prime

logger = logging.getLogger(__name__)

PELL_N = -3


def _require_positive(d: int) -> None:
    if d < 1:
        raise DomainError(f"discriminant must be positive, got {d}")


def check_star(d: int) -> bool:
    return d > 6 and d % 6 in (0, 2)


def check_star_star_factor(d: int) -> bool:
    _require_positive(d)
    if d % 4 == 0 or d % 9 == 0:
        return False
    return not any(p % 2 and p % 3 == 2 for p in factorize(d).primes)


def check_star_star_a2(d: int, search_bound: Optional[int] = None) -> Optional[tuple[int, int]]:
    """
    A primitive (x, y) with 2x^2 - 2xy + 2y^2 = d and |x|, |y| <= search_bound.

    For fixed y the equation is quadratic in x with discriminant 4(2d - 3y^2),
    so each row of the box costs one square test.
    """
    if d < 1:
        return None
    bound = isqrt(d) if search_bound is None else search_bound
    for y in range(0, bound + 1):
        disc = 2 * d - 3 * y * y
        if disc < 0:
            break
        r = is_perfect_square(disc)
        if r is None or (y + r) % 2:
            continue
        for x in ((y + r) // 2, (y - r) // 2):
            if abs(x) <= bound and gcd(x, y) == 1:
                return x, y
    return None


def _roots_mod_prime_power(p: int, k: int) -> list[int]:
    """Roots of n^2 + n + 1 modulo p^k, p odd."""
    modulus = p**k
    if p == 3:
        return [n for n in range(modulus) if (n * n + n + 1) % modulus == 0]

    # n = (-1 +- s) / 2 with s^2 = -3 (mod p); f'(n) = 2n + 1 = +-s is a unit, so lifting is unique
    inv2 = (p + 1) // 2
    roots = [(-1 + s) * inv2 % p for s in sqrt_mod_prime(-3, p)]
    lifted = []
    for n in roots:
        mod = p
        for _ in range(1, k):
            mod *= p
            f = n * n + n + 1
            n = (n - f * int(gmpy2.invert(2 * n + 1, mod))) % mod
        lifted.append(n)
    return sorted(set(lifted))


def check_star_star_divisor(d: int) -> Optional[int]:
    """
    The least n in [0, d) with d | 2n^2 + 2n + 2.

    n^2 + n + 1 is odd, so this asks for 4 not dividing d and for the odd part
    of d to divide n^2 + n + 1; the roots modulo each prime power are combined by CRT.
    """
    _require_positive(d)
    if d % 4 == 0:
        return None
    odd = d // 2 if d % 2 == 0 else d
    if odd == 1:
        return 0

    root_sets, moduli = [], []
    for f in factorize(odd).factors:
        roots = _roots_mod_prime_power(f.prime, f.exponent)
        if not roots:
            return None
        root_sets.append(roots)
        moduli.append(f.prime**f.exponent)
    n = crt_all(root_sets, moduli)[0]
    if (2 * n * n + 2 * n + 2) % d:
        raise TheoryViolation(f"CRT root n={n} does not satisfy d={d} | 2n^2+2n+2")
    return n


def divisor_scan(d: int) -> Optional[int]:
    """Reference version of check_star_star_divisor: a literal scan of [0, d)."""
    _require_positive(d)
    return next((n for n in range(d) if (2 * n * n + 2 * n + 2) % d == 0), None)


def _certificate_from_pell(d: int, m: int, a: int) -> tuple[int, int]:
    if m % 2 == 0 or gcd(m, a) != 1:
        raise TheoryViolation(f"solution (m, a) = ({m}, {a}) of m^2 - {2 * d}a^2 = -3 is not odd and coprime")
    n = (m - 1) // 2 if m > 0 else (-m - 1) // 2
    return n, a


def check_star_star_star(d: int) -> Optional[tuple[int, int]]:
    """(n, a) with d*a^2 = 2n^2 + 2n + 2 and a minimal, via m^2 - 2d*a^2 = -3 and m = 2n + 1."""
    _require_positive(d)
    sol = pell.solve_pell_general(2 * d, PELL_N)
    if sol is None:
        return None
    return _certificate_from_pell(d, sol.x, sol.y)


def eisenstein_certificate(n: int, a: int) -> bool:
    """
    gcd(a, 6) = 1 and a | n^2 + n + 1.

    Any prime p | n^2+n+1 other than 3 has (2n+1)^2 = -3 (mod p), so p = 1 (mod 3);
    this proves the prime-factor property of a without factoring it.
    """
    return a >= 1 and gcd(a, 6) == 1 and (n * n + n + 1) % a == 0


def star_star_star_certificates(d: int, count: int = 5) -> list[tuple[int, int]]:
    """The first `count` certificates (n, a) in increasing a."""
    _require_positive(d)
    D = 2 * d
    if is_perfect_square(D) is None and PELL_N * PELL_N >= D:
        first = check_star_star_star(d)
        return [first] if first else []

    out = []
    for sol in islice(pell.iter_solutions(D, PELL_N), count):
        n, a = _certificate_from_pell(d, sol.x, sol.y)
        if not eisenstein_certificate(n, a):
            logger.warning("d=%d: certificate (n=%d, a=%d) has a prime factor of a not = 1 (mod 3)", d, n, a)
        out.append((n, a))
    return out


def full_report(d: int) -> ConditionReport:
    _require_positive(d)
    fac = factorize(d)
    by_factor = check_star_star_factor(d)
    a2 = check_star_star_a2(d)
    divisor_n = check_star_star_divisor(d)
    if by_factor != (divisor_n is not None) or (a2 is not None) != (by_factor and d % 2 == 0):
        raise TheoryViolation(
            f"d={d}: characterizations of (**) disagree "
            f"(factor={by_factor}, a2={a2}, divisor={divisor_n})"
        )

    cert_pell = check_star_star_star(d)
    if cert_pell is not None:
        n, a = cert_pell
        if not by_factor:
            raise TheoryViolation(f"d={d} satisfies (***) but not (**)")
        if not eisenstein_certificate(n, a):
            raise TheoryViolation(f"d={d}: minimal certificate a={a} has a prime factor not = 1 (mod 3)")

    return ConditionReport(
        d=d,
        star=check_star(d),
        star_star=by_factor,
        star_star_star=cert_pell is not None,
        cert_factorization=fac,
        cert_a2_vector=a2,
        cert_divisor_n=divisor_n,
        cert_pell=cert_pell,
    )
