import pytest

from primepairs import build_sieve


def trial_is_prime(n: int) -> bool:
    """Independent primality oracle: plain 6k+-1 trial division."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


@pytest.fixture(scope="session")
def sieve10k():
    """One sieve big enough for every desk-scale sweep in the suite."""
    return build_sieve(10_100)
