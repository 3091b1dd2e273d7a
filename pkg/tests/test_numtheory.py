from fractions import Fraction as F

import pytest

from linfweak.enclosure import sin_of_pi_multiple
from linfweak.numtheory import (dyadic_divisibility_subsequence, lcm_list,
                                nested_midpoint, prime_power_nondivisor)


def test_lcm():
    assert lcm_list([4, 6]) == 12
    assert lcm_list([2, 4, 8, 16]) == 16
    with pytest.raises(ValueError):
        lcm_list([])


def naive_nondivisor(ks):
    """Trial-division oracle: scan prime-power values in increasing order."""
    def is_prime_power(v):
        for p in range(2, v + 1):
            if v % p == 0:
                m = 0
                while v % p == 0:
                    v //= p
                    m += 1
                return (p, m) if v == 1 else None
        return None
    v = 2
    while True:
        pm = is_prime_power(v)
        if pm is not None and all(k % v != 0 for k in ks):
            return pm
        v += 1


@pytest.mark.parametrize("ks", [
    [2, 4, 8], [2, 4, 8, 16], [6, 12, 18], [1], [30], [5, 7, 11], [9, 27, 81],
    [2, 3, 4, 5, 6, 7, 8, 9, 10],
])
def test_nondivisor_matches_trial_division(ks):
    assert prime_power_nondivisor(ks) == naive_nondivisor(ks)


def test_nondivisor_examples():
    assert prime_power_nondivisor([2, 4, 8]) == (3, 1)
    # 4 divides 12, so (2,2) is not a nondivisor for this list; the smallest
    # prime power dividing none of 6, 12, 18 is 5
    assert prime_power_nondivisor([6, 12, 18]) == (5, 1)


def test_nondivisor_really_divides_none():
    for ks in ([2, 4, 8, 16], [6, 12, 18], [10, 20, 40]):
        p, m = prime_power_nondivisor(ks)
        assert all(k % (p ** m) != 0 for k in ks)


def test_dyadic_chain_shape():
    ks = dyadic_divisibility_subsequence(1, 4)
    assert ks == [1, 4, 32, 512, 16384]
    for j in range(len(ks) - 1):
        assert ks[j + 1] % (2 ** (j + 2) * ks[j]) == 0


def test_nested_midpoint_value():
    ks = dyadic_divisibility_subsequence(1, 4)
    assert nested_midpoint(ks) == F(15835, 2)


def test_nested_midpoint_modular_window():
    """(m0 mod k_j)/k_j lies in [1/4, 1/2] for every j >= 1, which is what
    forces |sin(m0 pi / k_j)| >= sin(pi/4)."""
    for seed, depth in ((1, 4), (1, 5), (3, 4)):
        ks = dyadic_divisibility_subsequence(seed, depth)
        m0 = nested_midpoint(ks)
        for k in ks[1:]:
            frac = (m0 - (m0.numerator // (k * m0.denominator)) * k) / k
            assert F(1, 4) <= frac <= F(1, 2)


def test_nested_midpoint_sin_floor():
    ks = dyadic_divisibility_subsequence(1, 5)
    m0 = nested_midpoint(ks)
    floor = sin_of_pi_multiple(F(1, 4), F(1, 10 ** 9)).lo
    for k in ks[1:]:
        enc = sin_of_pi_multiple(m0 / k, F(1, 10 ** 9)).abs()
        assert enc.lo >= floor


def test_rejects_non_chain():
    with pytest.raises(ValueError):
        nested_midpoint([1, 3, 9])
