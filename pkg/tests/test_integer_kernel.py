import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from cubicdisc.model.errors import DomainError
from cubicdisc.services.integer_kernel import (
    crt,
    crt_all,
    divisors,
    factorize,
    gcd,
    is_perfect_square,
    is_prime,
    isqrt,
    pollard_rho,
    sqrt_mod_prime,
)


@pytest.mark.parametrize("a, b, expected", [(12, 18, 6), (0, 5, 5), (-49, 63, 7)])
def test_gcd(a, b, expected):
    assert gcd(a, b) == expected


def test_gcd_of_zeros():
    assert gcd(0, 0) == 0


@given(st.integers(min_value=-10**30, max_value=10**30), st.integers(min_value=-10**30, max_value=10**30))
def test_gcd_divides_both(a, b):
    g = gcd(a, b)
    assert g >= 0
    if g:
        assert a % g == 0 and b % g == 0
    else:
        assert a == b == 0


@given(
    st.integers(min_value=1, max_value=10**6),
    st.integers(min_value=-10**12, max_value=10**12),
    st.integers(min_value=-10**12, max_value=10**12),
)
def test_common_divisor_divides_gcd(c, a, b):
    assert gcd(c * a, c * b) % c == 0


@given(st.integers(min_value=1, max_value=3000), st.integers(min_value=1, max_value=3000))
def test_gcd_is_greatest_common_divisor(a, b):
    common = set(sympy.divisors(a)) & set(sympy.divisors(b))
    assert gcd(a, b) == max(common)
    assert all(gcd(a, b) % c == 0 for c in common)


@pytest.mark.parametrize("n, expected", [(0, 0), (15, 3), (16, 4), (10**40, 10**20), (10**40 - 1, 10**20 - 1)])
def test_isqrt(n, expected):
    assert isqrt(n) == expected


def test_isqrt_rejects_negative():
    with pytest.raises(DomainError):
        isqrt(-1)


@given(st.integers(min_value=0, max_value=10**60))
def test_isqrt_brackets(n):
    r = isqrt(n)
    assert r * r <= n < (r + 1) * (r + 1)


@pytest.mark.parametrize("n, expected", [(3721, 61), (676, 26), (73, None), (0, 0), (-4, None)])
def test_is_perfect_square(n, expected):
    assert is_perfect_square(n) == expected


@given(st.integers(min_value=0, max_value=10**30))
def test_is_perfect_square_of_squares(r):
    assert is_perfect_square(r * r) == r
    if r > 0:
        assert is_perfect_square(r * r + 1) is None


def test_is_prime_matches_sympy_below_5000():
    assert [n for n in range(5000) if is_prime(n)] == list(sympy.primerange(0, 5000))


@pytest.mark.parametrize("n", [561, 1105, 3215031751, 2**64 + 1])
def test_is_prime_rejects_pseudoprimes(n):
    assert not is_prime(n)


@given(st.integers(min_value=2, max_value=10**20))
@settings(max_examples=300)
def test_is_prime_matches_sympy(n):
    assert is_prime(n) == sympy.isprime(n)


def test_is_prime_large_mersenne():
    assert is_prime(2**127 - 1)


@pytest.mark.parametrize(
    "n, text",
    [(74, "2^1 * 37^1"), (200, "2^3 * 5^2"), (-9, "-1 * 3^2"), (1, "1")],
)
def test_factorize_examples(n, text):
    fac = factorize(n)
    assert str(fac) == text
    assert fac.value() == n


def test_factorize_negative_sign():
    fac = factorize(-9)
    assert fac.sign == -1
    assert fac.exponent_of(3) == 2


def test_factorize_zero():
    with pytest.raises(DomainError):
        factorize(0)


def test_factorize_beyond_trial_division():
    p = sympy.nextprime(10**6)
    q = sympy.nextprime(p)
    fac = factorize(p * q * 4)
    assert fac.primes == [2, p, q]
    assert fac.exponent_of(2) == 2


@pytest.mark.slow
@given(st.integers(min_value=1, max_value=10**12))
@settings(max_examples=200, deadline=None)
def test_factorize_matches_sympy(n):
    fac = factorize(n)
    assert {f.prime: f.exponent for f in fac.factors} == sympy.factorint(n)


def test_pollard_rho():
    assert pollard_rho(8051) in (83, 97)
    with pytest.raises(DomainError):
        pollard_rho(97)


def test_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]


@pytest.mark.parametrize("a, p, expected", [(-3, 7, (2, 5)), (2, 5, ()), (2, 17, (6, 11)), (0, 13, (0,))])
def test_sqrt_mod_prime(a, p, expected):
    assert sqrt_mod_prime(a, p) == expected


@given(st.sampled_from(list(sympy.primerange(3, 2000))), st.integers(min_value=0, max_value=10**6))
def test_sqrt_mod_prime_roots(p, a):
    roots = sqrt_mod_prime(a, p)
    assert all(r * r % p == a % p for r in roots)
    assert bool(roots) == (a % p == 0 or sympy.is_quad_residue(a, p))


def test_crt():
    assert crt([2, 3], [3, 5]) == (8, 15)
    assert crt_all([[1, 2], [0]], [3, 5]) == [5, 10]
    with pytest.raises(DomainError):
        crt([1, 1], [4, 6])
