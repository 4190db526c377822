import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from primepairs import (
    MulCounter,
    Residue,
    double_factorial_odd_mod,
    factorial_mod,
    mul_mod,
    pow_mod,
    sign_pow,
)

moduli = st.integers(min_value=2, max_value=10**9)


def test_mul_mod_examples():
    assert mul_mod(3, 4, 5).value == 2
    assert mul_mod(0, 987654321, 17).value == 0
    assert mul_mod(1, 987654321, 17).value == 987654321 % 17
    r = mul_mod(10**40, 10**40 + 3, 999999937)
    assert r.value == (10**40 * (10**40 + 3)) % 999999937


def test_factorial_mod_examples():
    assert factorial_mod(0, 7).value == 1
    assert factorial_mod(4, 5).value == 4
    assert factorial_mod(6, 7).value == 6  # 720 = 7*102 + 6


def test_double_factorial_examples():
    assert double_factorial_odd_mod(0, 11).value == 1
    assert double_factorial_odd_mod(2, 100).value == 3
    assert double_factorial_odd_mod(3, 7).value == 1  # 1*3*5 = 15


def test_pow_mod_examples():
    assert pow_mod(4, 0, 9).value == 1
    assert pow_mod(4, 2, 35).value == 16
    assert pow_mod(2, 10, 1000).value == 24


def test_sign_pow_examples():
    assert sign_pow(0, 13).value == 1
    assert sign_pow(3, 13).value == 12
    assert sign_pow(4, 35).value == 1
    assert sign_pow(1, 2).value == 1  # -1 and 1 coincide mod 2


@pytest.mark.parametrize("bad", [1, 0, -5])
def test_small_modulus_rejected(bad):
    for fn in (
        lambda: mul_mod(1, 1, bad),
        lambda: factorial_mod(3, bad),
        lambda: double_factorial_odd_mod(3, bad),
        lambda: pow_mod(2, 3, bad),
        lambda: sign_pow(2, bad),
    ):
        with pytest.raises(ValueError):
            fn()


def test_negative_arguments_rejected():
    with pytest.raises(ValueError):
        factorial_mod(-1, 7)
    with pytest.raises(ValueError):
        double_factorial_odd_mod(-2, 7)
    with pytest.raises(ValueError):
        pow_mod(2, -1, 7)


def test_residue_must_be_canonical():
    with pytest.raises(ValueError):
        Residue(5, 5)
    with pytest.raises(ValueError):
        Residue(-1, 5)
    with pytest.raises(ValueError):
        Residue(0, 1)


def test_counter_conventions():
    c = MulCounter()
    mul_mod(3, 4, 5, c)
    assert c.count == 1
    c.reset()
    factorial_mod(10, 7, c)
    assert c.count == 10
    c.reset()
    factorial_mod(0, 7, c)
    assert c.count == 0
    c.reset()
    double_factorial_odd_mod(6, 11, c)
    assert c.count == 6
    c.reset()
    pow_mod(4, 1, 35, c)
    assert c.count == 0
    c.reset()
    pow_mod(4, 2, 35, c)
    assert c.count == 1
    c.reset()
    pow_mod(2, 10, 1000, c)  # 1010b: 3 squarings + 1 multiply
    assert c.count == 4


def test_counter_accumulates_monotonically():
    c = MulCounter()
    seen = []
    for n in (3, 5, 0, 7):
        factorial_mod(n, 101, c)
        seen.append(c.count)
    assert seen == sorted(seen) and seen[-1] == 15


def test_factorial_brute_force_grid():
    # exhaustive agreement with exact big-integer factorial for n, m <= 200
    for m in range(2, 201):
        acc = 1
        for n in range(0, 201):
            if n:
                acc *= n
            assert factorial_mod(n, m).value == acc % m


@settings(max_examples=200)
@given(n=st.integers(min_value=1, max_value=400), m=moduli)
def test_factorial_recurrence(n, m):
    prev = factorial_mod(n - 1, m).value
    assert factorial_mod(n, m) == mul_mod(prev, n % m, m)


@settings(max_examples=100)
@given(n=st.integers(min_value=0, max_value=300), data=st.data(), m=moduli)
def test_factorial_split_product(n, data, m):
    split = data.draw(st.integers(min_value=0, max_value=n))
    acc = factorial_mod(split, m).value
    for i in range(split + 1, n + 1):
        acc = mul_mod(acc, i % m, m).value
    assert acc == factorial_mod(n, m).value


@settings(max_examples=200)
@given(e=st.integers(min_value=0, max_value=500), m=moduli)
def test_sign_pow_self_inverse(e, m):
    s = sign_pow(e, m).value
    assert mul_mod(s, s, m).value == 1


@settings(max_examples=200)
@given(k=st.integers(min_value=0, max_value=64), m=moduli)
def test_pow_four_is_square_of_pow_two(k, m):
    two = pow_mod(2, k, m).value
    assert pow_mod(4, k, m) == mul_mod(two, two, m)


@settings(max_examples=200)
@given(
    b=st.integers(min_value=0, max_value=10**12),
    e=st.integers(min_value=0, max_value=10**6),
    m=moduli,
)
def test_pow_matches_builtin(b, e, m):
    assert pow_mod(b, e, m).value == pow(b, e, m)


@settings(max_examples=100)
@given(k=st.integers(min_value=0, max_value=200), m=moduli)
def test_double_factorial_matches_exact(k, m):
    exact = math.prod(range(1, 2 * k, 2))
    assert double_factorial_odd_mod(k, m).value == exact % m
