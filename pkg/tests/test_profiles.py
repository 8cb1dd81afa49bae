import random

import pytest

from qresidue.arith import factorize
from qresidue.profiles import (
    QInput,
    ResidueProfile,
    TrivialCertificate,
    build_profile,
    hyperplanes_of,
    rad_q,
)


def test_qinput_validation():
    with pytest.raises(ValueError):
        QInput(2, (2, 3))
    with pytest.raises(ValueError):
        QInput(9, (2, 3))
    with pytest.raises(ValueError):
        QInput(3, ())
    with pytest.raises(ValueError):
        QInput(3, (2, 0))


def test_rad_q_reference_values():
    assert rad_q(24, 3) == 3
    assert rad_q(-104, 3) == 13
    assert rad_q(54, 3) == 2
    assert rad_q(8, 3) == 1


def test_rad_q_properties():
    rng = random.Random(21)
    for _ in range(200):
        q = rng.choice([3, 5])
        b = rng.randrange(2, 10**6)
        m = rng.randrange(1, 100)
        r = rad_q(b, q)
        assert all(1 <= e <= q - 1 for _, e in factorize(r).factors) or r == 1
        assert rad_q(b * m**q, q) == r
        assert rad_q(-b, q) == r


def test_build_profile_cube_family():
    profile = build_profile(QInput(3, (2, 3, 6, 12)))
    assert isinstance(profile, ResidueProfile)
    assert profile.support_primes == (2, 3)
    assert [profile.column(j) for j in range(4)] == [(1, 0), (0, 1), (1, 1), (2, 1)]
    assert profile.qfree_values == (2, 3, 6, 12)


def test_build_profile_trivial():
    cert = build_profile(QInput(3, (-8, 5)))
    assert isinstance(cert, TrivialCertificate)
    assert (cert.index, cert.root) == (0, -2)


def test_build_profile_quintic_family():
    profile = build_profile(QInput(5, (2, 21, 42, 84, 168, 336)))
    assert profile.support_primes == (2, 3, 7)
    assert profile.exponents == (
        (1, 0, 1, 2, 3, 4),
        (0, 1, 1, 1, 1, 1),
        (0, 1, 1, 1, 1, 1),
    )


def test_build_profile_dedupes_equal_qfree_parts():
    # 2, -2 and 54 = 2 * 27 all have q-free part 2 for q = 3
    profile = build_profile(QInput(3, (2, -2, 54, 3)))
    values = profile.qfree_values
    assert len(values) == len(set(values))
    assert profile.provenance[0] == 2


def test_hyperplanes_of():
    profile = build_profile(QInput(3, (2, 3, 6, 12)))
    normals = {h.normal for h in hyperplanes_of(profile)}
    assert normals == {(1, 0), (0, 1), (1, 1), (2, 1)}
    profile = build_profile(QInput(3, (2, 3, 6)))
    assert {h.normal for h in hyperplanes_of(profile)} == {(1, 0), (0, 1), (1, 1)}
    profile = build_profile(QInput(3, (2,)))
    hs = hyperplanes_of(profile)
    assert len(hs) == 1 and hs[0].normal == (1,)


def test_profile_invariants_random():
    rng = random.Random(33)
    for _ in range(200):
        q = rng.choice([3, 5])
        elems = tuple(
            rng.choice([-1, 1]) * rng.randrange(2, 5000) for _ in range(rng.randint(1, 5))
        )
        try:
            qinput = QInput(q, elems)
        except ValueError:
            continue
        profile = build_profile(qinput)
        if isinstance(profile, TrivialCertificate):
            assert profile.root ** q == qinput.elements[profile.index]
            continue
        for j in range(profile.l):
            col = profile.column(j)
            assert any(col)  # no zero columns
            value = 1
            for p, e in zip(profile.support_primes, col):
                value *= p**e
            assert value == profile.qfree_values[j]
        for p in profile.support_primes:
            assert any(v % p == 0 for v in profile.qfree_values)
