"""Arbitrary-precision modular arithmetic kernels.

Everything here works on plain Python ints (so operands of any width are
fine) and reduces into canonical residues 0 <= value < modulus.  An optional
MulCounter tallies modular multiplications so that callers can compare the
step counts of different primality tests; the counting conventions are
documented on each function and are part of the contract.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class Residue:
    """A canonical residue: 0 <= value < modulus, modulus >= 2."""

    value: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        if not 0 <= self.value < self.modulus:
            raise ValueError(
                f"residue {self.value} not canonical for modulus {self.modulus}"
            )


class MulCounter:
    """Counts modular multiplications.  Owned by one computation at a time."""

    __slots__ = ("count",)

    def __init__(self) -> None:
        self.count = 0

    def add(self, n: int = 1) -> None:
        self.count += n

    def reset(self) -> None:
        self.count = 0

    def __repr__(self) -> str:
        return f"MulCounter(count={self.count})"


def _check_modulus(m: int) -> None:
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")


def mul_mod(a: int, b: int, m: int, counter: MulCounter | None = None) -> Residue:
    """(a*b) mod m.  Counts as exactly one multiplication."""
    _check_modulus(m)
    if counter is not None:
        counter.add(1)
    return Residue(a * b % m, m)


def factorial_mod(n: int, m: int, counter: MulCounter | None = None) -> Residue:
    """n! mod m, by running the product 1*1*2*...*n mod m.

    Counting convention: exactly n multiplications (the accumulator starts
    at 1 and is multiplied by each of 1..n).  n = 0 is the empty product.
    """
    _check_modulus(m)
    if n < 0:
        raise ValueError(f"factorial argument must be >= 0, got {n}")
    acc = 1
    for i in range(1, n + 1):
        acc = acc * i % m
    if counter is not None:
        counter.add(n)
    return Residue(acc, m)


def double_factorial_odd_mod(k: int, m: int, counter: MulCounter | None = None) -> Residue:
    """(2k-1)!! mod m: the product of the first k odd numbers, reduced mod m.

    Counting convention: exactly k multiplications; k = 0 is the empty product.
    """
    _check_modulus(m)
    if k < 0:
        raise ValueError(f"double factorial index must be >= 0, got {k}")
    acc = 1
    for i in range(1, k + 1):
        acc = acc * (2 * i - 1) % m
    if counter is not None:
        counter.add(k)
    return Residue(acc, m)


def pow_mod(b: int, e: int, m: int, counter: MulCounter | None = None) -> Residue:
    """b**e mod m by left-to-right square-and-multiply.

    Counting convention: 0 multiplications for e <= 1, otherwise
    (e.bit_length() - 1) squarings plus (popcount(e) - 1) extra multiplies.
    """
    _check_modulus(m)
    if e < 0:
        raise ValueError(f"exponent must be >= 0, got {e}")
    if e == 0:
        return Residue(1, m)
    base = b % m
    acc = base
    mults = 0
    for bit in bin(e)[3:]:  # remaining bits after the leading one
        acc = acc * acc % m
        mults += 1
        if bit == "1":
            acc = acc * base % m
            mults += 1
    if counter is not None:
        counter.add(mults)
    return Residue(acc, m)


def sign_pow(e: int, m: int) -> Residue:
    """Canonical residue of (-1)**e: 1 for even e, m-1 for odd e.

    A table lookup, not a multiplication; never counted.
    """
    _check_modulus(m)
    if e < 0:
        raise ValueError(f"exponent must be >= 0, got {e}")
    return Residue(1 if e % 2 == 0 else m - 1, m)
