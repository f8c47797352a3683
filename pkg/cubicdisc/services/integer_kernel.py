from __future__ import annotations

import logging
from itertools import product
from typing import Optional, Sequence

import gmpy2

from cubicdisc.config.settings import MILLER_RABIN_BASES, MILLER_RABIN_BOUND, TRIAL_DIVISION_LIMIT
from cubicdisc.model.errors import DomainError, TheoryViolation
from cubicdisc.model.models import Factorization, PrimePower

logger = logging.getLogger(__name__)

# Quadratic residues modulo a few small moduli, for cheap non-square rejection.
_SQUARES_MOD = {m: frozenset(i * i % m for i in range(m)) for m in (64, 63, 65, 11)}


def gcd(a: int, b: int) -> int:
    return int(gmpy2.gcd(a, b))


def isqrt(n: int) -> int:
    """floor(sqrt(n)) by Newton iteration on exact integers."""
    if n < 0:
        raise DomainError(f"isqrt of negative number {n}")
    if n < 2:
        return n
    x = 1 << ((n.bit_length() + 1) // 2)
    while True:
        y = (x + n // x) // 2
        if y >= x:
            return x
        x = y


def is_perfect_square(n: int) -> Optional[int]:
    if n < 0:
        return None
    for m, residues in _SQUARES_MOD.items():
        if n % m not in residues:
            return None
    r = isqrt(n)
    return r if r * r == n else None


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in MILLER_RABIN_BASES:
        if n % p == 0:
            return n == p
    if n >= MILLER_RABIN_BOUND:
        logger.debug("primality of %d decided probabilistically", n)
        return bool(gmpy2.is_prime(n, 50))

    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for base in MILLER_RABIN_BASES:
        x = gmpy2.powmod(base, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = gmpy2.powmod(x, 2, n)
            if x == n - 1:
                break
        else:
            return False
    return True


def pollard_rho(n: int, max_iterations: int = 10_000_000) -> int:
    """
    A nontrivial factor of the odd composite n (Brent's cycle detection).

    Increments c = 1, 2, ... are tried in turn, so the result is reproducible.
    """
    if n % 2 == 0:
        return 2
    if is_prime(n):
        raise DomainError(f"{n} is prime")

    for c in range(1, 64):
        x = y = 2
        g = 1
        power = lam = 1
        for _ in range(max_iterations):
            if power == lam:
                y = x
                power *= 2
                lam = 0
            x = (x * x + c) % n
            lam += 1
            g = int(gmpy2.gcd(abs(x - y), n))
            if g != 1:
                break
        if 1 < g < n:
            return g
        logger.debug("pollard rho cycle without factor for n=%d, c=%d", n, c)
    raise TheoryViolation(f"pollard rho found no factor of composite {n}")


def _split(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    f = pollard_rho(n)
    _split(f, out)
    _split(n // f, out)


def factorize(n: int) -> Factorization:
    if n == 0:
        raise DomainError("cannot factor 0")

    sign = -1 if n < 0 else 1
    rest = abs(n)
    found: dict[int, int] = {}

    for p in (2, 3):
        while rest % p == 0:
            found[p] = found.get(p, 0) + 1
            rest //= p

    # 6k +- 1 wheel
    p, step = 5, 2
    while p * p <= rest and p < TRIAL_DIVISION_LIMIT:
        while rest % p == 0:
            found[p] = found.get(p, 0) + 1
            rest //= p
        p += step
        step = 6 - step

    if rest > 1:
        if rest < p * p:
            found[rest] = found.get(rest, 0) + 1
        else:
            _split(rest, found)

    result = Factorization(
        n=n,
        sign=sign,
        factors=tuple(PrimePower(prime=q, exponent=e) for q, e in sorted(found.items())),
    )
    if not all(is_prime(q) for q in result.primes):
        raise TheoryViolation(f"factorization of {n} lists a composite: {result}")
    return result


def divisors(n: int) -> list[int]:
    fac = factorize(n)
    out = [1]
    for f in fac.factors:
        out = [d * f.prime**e for d in out for e in range(f.exponent + 1)]
    return sorted(out)


def sqrt_mod_prime(a: int, p: int) -> tuple[int, ...]:
    """All x in [0, p) with x^2 = a (mod p), p prime (Tonelli-Shanks)."""
    a %= p
    if p == 2 or a == 0:
        return (a,)
    if gmpy2.powmod(a, (p - 1) // 2, p) != 1:
        return ()

    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    if s == 1:
        r = int(gmpy2.powmod(a, (p + 1) // 4, p))
        return tuple(sorted({r, p - r}))

    z = next(k for k in range(2, p) if gmpy2.powmod(k, (p - 1) // 2, p) == p - 1)
    c = int(gmpy2.powmod(z, q, p))
    r = int(gmpy2.powmod(a, (q + 1) // 2, p))
    t = int(gmpy2.powmod(a, q, p))
    m = s
    while t != 1:
        i, x = 1, t * t % p
        while x != 1:
            x = x * x % p
            i += 1
        b = int(gmpy2.powmod(c, 1 << (m - i - 1), p))
        r = r * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return tuple(sorted({r, p - r}))


def crt(residues: Sequence[int], moduli: Sequence[int]) -> tuple[int, int]:
    """Combine x = r_i (mod m_i) for pairwise coprime m_i into x (mod prod m_i)."""
    x, modulus = 0, 1
    for r, m in zip(residues, moduli):
        if gcd(modulus, m) != 1:
            raise DomainError(f"moduli {modulus} and {m} are not coprime")
        t = (r - x) * int(gmpy2.invert(modulus, m)) % m
        x += modulus * t
        modulus *= m
    return x % modulus, modulus


def crt_all(root_sets: Sequence[Sequence[int]], moduli: Sequence[int]) -> list[int]:
    """Every CRT combination of one residue per modulus, sorted."""
    if not moduli:
        return [0]
    return sorted(crt(choice, moduli)[0] for choice in product(*root_sets))
