"""
The vector w = m*l1 + (2m+1)*l2 + a*tau with <l1, w> = 1 and <w, w> = 0,
built from a solution of d*a^2 = 2n^2 + 2n + 2, and the discriminant identities
of the span <l1, l2, w>.
"""
from __future__ import annotations

import logging
from typing import Optional

from cubicdisc.model.errors import DomainError, TheoryViolation
from cubicdisc.model.models import CanonicalForm, GramMatrix, HilbWitness, LatticeVector, SpanCheck
from cubicdisc.services import conditions, lattice
from cubicdisc.services.integer_kernel import factorize, is_perfect_square

logger = logging.getLogger(__name__)

L1 = LatticeVector.of(1, 0, 0)
L2 = LatticeVector.of(0, 1, 0)
IDENTITY = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def _case(d: int, n: int, a: int) -> tuple[int, int, int, int]:
    """(case_id, m, k, c) for n >= 0."""
    residue = n % 3
    if residue == 1:
        case_id, m_num, c = 1, n - 1, 0
    elif residue == 2:
        case_id, m_num, c = 2, a - n - 2, 1
    else:
        case_id, m_num, c = 3, a + n - 1, 1

    if m_num % 3:
        raise TheoryViolation(f"case {case_id}: m = {m_num}/3 is not an integer for d={d}, n={n}, a={a}")
    if (d - 2 * c) % 6:
        raise TheoryViolation(f"case {case_id} needs d = {2 * c} (mod 6), got d={d}")
    return case_id, m_num // 3, (d - 2 * c) // 6, c


def construct_hilb_witness(d: int, n: int, a: int) -> HilbWitness:
    if not conditions.check_star(d):
        raise DomainError(f"d={d} does not satisfy (*)")
    if a < 1:
        raise DomainError(f"a must be positive, got {a}")
    if n < 0:
        n = -n - 1
    if d * a * a != 2 * n * n + 2 * n + 2:
        raise DomainError(f"d*a^2 = {d * a * a} differs from 2n^2+2n+2 = {2 * n * n + 2 * n + 2}")
    if not conditions.eisenstein_certificate(n, a):
        raise TheoryViolation(f"a={a} has a prime factor not = 1 (mod 3)")

    case_id, m, k, c = _case(d, n, a)
    gram = lattice.canonical_gram(k, c)
    w = LatticeVector.of(m, 2 * m + 1, a)
    chi_l1_w = lattice.pairing(gram, L1, w)
    chi_w_w = lattice.pairing(gram, w, w)
    if (chi_l1_w, chi_w_w) != (1, 0):
        raise TheoryViolation(f"case {case_id} witness {w} has pairings ({chi_l1_w}, {chi_w_w}) for d={d}")

    logger.debug("d=%d n=%d a=%d: case %d, m=%d, w=%s", d, n, a, case_id, m, w)
    return HilbWitness(
        d=d,
        n=n,
        a=a,
        m=m,
        case_id=case_id,
        coords=w,
        canonical=CanonicalForm(gram=gram, k=k, c=c, transform=IDENTITY),
        chi_l1_w=chi_l1_w,
        chi_w_w=chi_w_w,
    )


def witness_for(d: int) -> Optional[HilbWitness]:
    """The witness from the minimal (***) certificate of d, or None if d fails (***)."""
    cert = conditions.check_star_star_star(d)
    if cert is None:
        return None
    return construct_hilb_witness(d, *cert)


def gram_of_span(n: int) -> GramMatrix:
    return GramMatrix.of(((-2, 1, 1), (1, -2, n), (1, n, 0)), even=True)


def saturation_index(disc_L: int, d: int) -> Optional[int]:
    """a with disc_L = a^2 * d, if any."""
    if disc_L < 1 or d < 1:
        raise DomainError(f"discriminants must be positive, got {disc_L} and {d}")
    if disc_L % d:
        return None
    return is_perfect_square(disc_L // d)


def prime_factor_property(a: int) -> bool:
    if a < 1:
        raise DomainError(f"a must be positive, got {a}")
    return all(p % 3 == 1 for p in factorize(a).primes)


def span_gram(witness: HilbWitness) -> GramMatrix:
    """The pairing on <l1, l2, w>."""
    T = [[1, 0, witness.m], [0, 1, 2 * witness.m + 1], [0, 0, witness.a]]
    return lattice.transform_gram(witness.canonical.gram, T)


def forward_identity(witness: HilbWitness) -> SpanCheck:
    span = span_gram(witness)
    n_span = lattice.pairing(witness.canonical.gram, L2, witness.coords)
    if span != gram_of_span(n_span):
        raise TheoryViolation(f"span of {witness.coords} has gram {span.entries}")

    disc = lattice.det(span)
    index = saturation_index(disc, witness.d)
    if disc != 2 * n_span * n_span + 2 * n_span + 2 or index != witness.a:
        raise TheoryViolation(f"disc(<l1, l2, w>) = {disc} is not a^2*d for a={witness.a}, d={witness.d}")
    return SpanCheck(n_span=n_span, disc=disc, index=index)


def hyperbolic_pair(witness: HilbWitness) -> tuple[LatticeVector, LatticeVector]:
    """(l1 + w, -w), which spans a hyperbolic plane once the pairing is negated."""
    twisted = lattice.twist(witness.canonical.gram)
    e, f = L1 + witness.coords, -witness.coords
    if (lattice.pairing(twisted, e, e), lattice.pairing(twisted, f, f), lattice.pairing(twisted, e, f)) != (0, 0, 1):
        raise TheoryViolation(f"({e}, {f}) does not span a hyperbolic plane for d={witness.d}")
    return e, f
