"""Solver for combining two congruences into one composite-modulus congruence.

Given
    f1(p) + C1 ≡ 0 (mod p)        and        g*f1(p) + C2 ≡ 0 (mod p+L)
with gcd(g, p(p+L)) = 1, multipliers X and Y chosen so that

    X*g*C1 = X*C2 + Y*L          (the selection identity)

and gcd(X, p) = gcd(X, p+L) = 1 merge the two into the single congruence

    X*g*f1(p) + Y*p + X*C2 + Y*L ≡ 0 (mod p(p+L)).

solve_coefficients() finds the minimal positive X for any inputs;
derive_scheme_t3 / derive_scheme_t7 instantiate the two coefficient families
used by the factorial and half-factorial pair tests for arbitrary gap 2k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .modmath import Residue, double_factorial_odd_mod, factorial_mod


class CoprimalityError(ValueError):
    """A combine() precondition gcd turned out different from 1."""


@dataclass(frozen=True, slots=True)
class CombinationScheme:
    """The (offset, g, C1, C2, X, Y) data of one congruence combination.

    offset is the gap L between the two moduli (2k for prime-pair tests).
    C1, C2 and Y are signed; X is positive.  The selection identity
    X*g*C1 == X*C2 + Y*offset holds exactly over the integers.
    """

    offset: int
    g: int
    c1: int
    c2: int
    x: int
    y: int

    def __post_init__(self) -> None:
        if self.offset < 1:
            raise ValueError(f"offset must be >= 1, got {self.offset}")
        if self.x < 1:
            raise ValueError(f"X must be >= 1, got {self.x}")
        if self.x * self.g * self.c1 != self.x * self.c2 + self.y * self.offset:
            raise ValueError(
                f"selection identity violated: {self.x}*{self.g}*{self.c1} != "
                f"{self.x}*{self.c2} + {self.y}*{self.offset}"
            )

    def scaled(self, factor: int) -> "CombinationScheme":
        """Same scheme with X and Y multiplied by factor.

        The identity is linear in (X, Y), so any positive factor preserves
        it; modulo p(p+offset) the combined congruence changes only by that
        factor, leaving the zero set intact whenever the factor is a unit.
        """
        if factor < 1:
            raise ValueError(f"scale factor must be >= 1, got {factor}")
        return CombinationScheme(
            self.offset, self.g, self.c1, self.c2, self.x * factor, self.y * factor
        )


def solve_coefficients(offset: int, g: int, c1: int, c2: int) -> CombinationScheme:
    """Minimal-X solution of the selection identity.

    The identity rearranges to X*(g*C1 - C2) = Y*offset, so Y is integral
    exactly when offset divides X*(g*C1 - C2); the minimal positive X is
    offset / gcd(offset, g*C1 - C2), and g*C1 = C2 degenerates to X=1, Y=0.
    """
    if offset < 1:
        raise ValueError(f"offset must be >= 1, got {offset}")
    d = g * c1 - c2
    if d == 0:
        return CombinationScheme(offset, g, c1, c2, 1, 0)
    x = offset // math.gcd(offset, d)
    return CombinationScheme(offset, g, c1, c2, x, x * d // offset)


def combine(scheme: CombinationScheme, f1_residue: int, p: int) -> Residue:
    """Evaluate the combined congruence at p: X*g*f1 + Y*p + X*C2 + Y*offset mod p(p+offset).

    f1_residue is the value of f1(p) (reduced or not; it is reduced here).
    Raises CoprimalityError naming the offending gcd when X is not coprime
    to both moduli or g is not coprime to their product.
    """
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    q = p + scheme.offset
    m = p * q
    for label, a, b in (("gcd(X, p)", scheme.x, p), ("gcd(X, p+offset)", scheme.x, q)):
        got = math.gcd(a, b)
        if got != 1:
            raise CoprimalityError(f"{label} = {got}, must be 1")
    got = math.gcd(scheme.g, m)
    if got != 1:
        raise CoprimalityError(f"gcd(g, p(p+offset)) = {got}, must be 1")
    value = (
        scheme.x * scheme.g * f1_residue
        + scheme.y * p
        + scheme.x * scheme.c2
        + scheme.y * scheme.offset
    ) % m
    return Residue(value, m)


def derive_scheme_t3(k: int) -> CombinationScheme:
    """Coefficients of the factorial pair test for gap 2k.

    Combines (p-1)! + 1 ≡ 0 (mod p) with (2k)!(p-1)! + 1 ≡ 0 (mod p+2k):
    offset 2k, g = (2k)!, C1 = C2 = 1.  The minimal solution is always
    X = 2k, Y = (2k)! - 1 because (2k)! - 1 is coprime to 2k.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    fact = math.factorial(2 * k)
    scheme = solve_coefficients(2 * k, fact, 1, 1)
    assert scheme.x == 2 * k and scheme.y == fact - 1
    return scheme


def derive_scheme_t7(k: int, s: int, scaled: bool = False) -> CombinationScheme:
    """Coefficients of the half-factorial pair test for gap 2k.

    With h(p) = [((p-1)/2)!]^2 and s = (-1)^((p-1)/2) in {+1, -1}, combines
    h(p) + s ≡ 0 (mod p) with ((2k-1)!!)^2 h(p) + 4^k s (-1)^k ≡ 0 (mod p+2k):
    offset 2k, g = ((2k-1)!!)^2, C1 = s, C2 = 4^k s (-1)^k.  The minimal
    solution is X = 2k, Y = s[((2k-1)!!)^2 - 4^k (-1)^k], which yields the
    closed-form congruence evaluated by polignac_half().

    scaled=True multiplies X and Y by 4^k.  That variant matches the account
    that sets X = 4^k(2k) directly; only with Y scaled alongside does the
    selection identity hold, and modulo the odd moduli 4^k is a unit, so the
    two variants have the same zero set and differ only by that factor.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if s not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {s}")
    g = math.prod(range(1, 2 * k, 2)) ** 2
    scheme = solve_coefficients(2 * k, g, s, 4**k * s * (-1) ** k)
    assert scheme.x == 2 * k and scheme.y == s * (g - 4**k * (-1) ** k)
    return scheme.scaled(4**k) if scaled else scheme


def combine_factorial(k: int, p: int) -> Residue:
    """Run the derived gap-2k factorial scheme at p with f1 = (p-1)! mod p(p+2k)."""
    scheme = derive_scheme_t3(k)
    f1 = factorial_mod(p - 1, p * (p + scheme.offset))
    return combine(scheme, f1.value, p)


def combine_half_factorial(k: int, p: int) -> Residue:
    """Run the derived gap-2k half-factorial scheme at p with f1 = [((p-1)/2)!]^2."""
    if p % 2 == 0:
        raise ValueError(f"needs odd p, got {p}")
    s = 1 if ((p - 1) // 2) % 2 == 0 else -1
    scheme = derive_scheme_t7(k, s)
    m = p * (p + scheme.offset)
    h = factorial_mod((p - 1) // 2, m)
    return combine(scheme, h.value * h.value % m, p)
