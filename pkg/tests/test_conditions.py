import logging

import pytest

from cubicdisc.model.errors import DomainError
from cubicdisc.services import conditions
from cubicdisc.services.integer_kernel import factorize, gcd

STAR_STAR = {14, 26, 38, 42, 62, 74, 78, 86, 98, 114, 122, 134, 146, 158, 182, 186, 194}


@pytest.mark.parametrize("d, expected", [(6, False), (8, True), (15, False), (12, True), (-4, False)])
def test_check_star(d, expected):
    assert conditions.check_star(d) is expected


@pytest.mark.parametrize("d, expected", [(74, True), (30, False), (14, True), (36, False), (98, True), (1, True), (5, False)])
def test_check_star_star_factor(d, expected):
    assert conditions.check_star_star_factor(d) is expected


def test_check_star_star_factor_rejects_nonpositive():
    with pytest.raises(DomainError):
        conditions.check_star_star_factor(0)


@pytest.mark.parametrize("d, expected", [(14, (3, 1)), (8, None), (2, (1, 0)), (7, None)])
def test_check_star_star_a2(d, expected):
    assert conditions.check_star_star_a2(d) == expected


@pytest.mark.parametrize("d, expected", [(14, 2), (74, 10), (8, None), (1, 0), (3, 1)])
def test_check_star_star_divisor(d, expected):
    assert conditions.check_star_star_divisor(d) == expected


def test_divisor_matches_scan():
    for d in range(1, 3000):
        assert conditions.check_star_star_divisor(d) == conditions.divisor_scan(d), d


@pytest.mark.parametrize("d, expected", [(14, (2, 1)), (74, None), (38, (30, 7)), (26, (3, 1)), (2, (0, 1)), (1, None)])
def test_check_star_star_star(d, expected):
    assert conditions.check_star_star_star(d) == expected


def test_eisenstein_certificate():
    assert conditions.eisenstein_certificate(30, 7)
    assert conditions.eisenstein_certificate(2, 1)
    assert not conditions.eisenstein_certificate(1, 3)
    assert not conditions.eisenstein_certificate(5, 2)


def test_star_star_star_certificates_increase():
    certs = conditions.star_star_star_certificates(14, count=4)
    assert certs[0] == (2, 1)
    assert [a for _, a in certs] == sorted(a for _, a in certs)
    for n, a in certs:
        assert 14 * a * a == 2 * n * n + 2 * n + 2
        assert conditions.eisenstein_certificate(n, a)


def test_star_star_star_certificates_none_for_74():
    assert conditions.star_star_star_certificates(74) == []


def test_full_report_26():
    r = conditions.full_report(26)
    assert (r.star, r.star_star, r.star_star_star) == (True, True, True)
    assert r.cert_pell == (3, 1)


def test_full_report_12():
    r = conditions.full_report(12)
    assert (r.star, r.star_star, r.star_star_star) == (True, False, False)
    assert r.cert_a2_vector is None and r.cert_divisor_n is None and r.cert_pell is None


def test_full_report_5_is_raw():
    r = conditions.full_report(5)
    assert (r.star, r.star_star, r.star_star_star) == (False, False, False)


def test_full_report_74():
    r = conditions.full_report(74)
    assert (r.star, r.star_star, r.star_star_star) == (True, True, False)
    assert r.cert_divisor_n == 10
    assert r.cert_a2_vector == (7, 3)


def test_full_report_odd_d_has_no_a2_certificate():
    r = conditions.full_report(7)
    assert r.star_star and r.cert_divisor_n == 2 and r.cert_a2_vector is None


def test_table_rows_up_to_200():
    marked = {d for d in range(8, 201) if conditions.check_star(d) and conditions.full_report(d).star_star}
    assert marked == STAR_STAR


@pytest.mark.slow
def test_characterizations_agree():
    for d in range(1, 50_001):
        by_factor = conditions.check_star_star_factor(d)
        a2 = conditions.check_star_star_a2(d)
        divisor_n = conditions.check_star_star_divisor(d)
        assert by_factor == (divisor_n is not None), d
        assert (a2 is not None) == (by_factor and d % 2 == 0), d
        if a2 is not None:
            x, y = a2
            assert 2 * x * x - 2 * x * y + 2 * y * y == d and gcd(x, y) == 1
        if divisor_n is not None:
            assert (2 * divisor_n**2 + 2 * divisor_n + 2) % d == 0


@pytest.mark.slow
def test_star_star_star_implies_star_star():
    for d in range(1, 50_001):
        cert = conditions.check_star_star_star(d)
        if cert is None:
            continue
        n, a = cert
        assert d * a * a == 2 * n * n + 2 * n + 2
        assert conditions.check_star_star_factor(d), d
        assert conditions.eisenstein_certificate(n, a), d


@pytest.mark.parametrize("d", [14, 38, 42, 86, 122, 194])
def test_certificate_a_has_primes_one_mod_three(d):
    for n, a in conditions.star_star_star_certificates(d, count=3):
        assert all(p % 3 == 1 for p in factorize(a).primes)


def test_certificates_warning_is_not_raised(caplog):
    with caplog.at_level(logging.WARNING, logger="cubicdisc"):
        conditions.star_star_star_certificates(38, count=5)
    assert not [r for r in caplog.records if r.levelno >= logging.WARNING]
