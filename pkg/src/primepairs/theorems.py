"""Congruence characterizations of primes and prime pairs.

Every test is normalized to the form LHS ≡ 0 (mod M) and returns a
TestVerdict carrying the evaluated canonical residual, so two runs (or two
implementations) can be compared on exact values rather than booleans.
Inputs that violate a test's hypotheses yield a PreconditionViolated
verdict instead of a bogus evaluation; malformed arguments (out-of-range
indices and the like) raise ValueError.

The congruences:

  wilson               (p-1)! + 1                        ≡ 0 (mod p)        iff p prime
  clement              4[(p-1)!+1] + p                   ≡ 0 (mod p(p+2))   iff p, p+2 prime
  polignac_factorial   2k(2k)![(p-1)!+1] + [(2k)!-1]p    ≡ 0 (mod p(p+2k))  iff p, p+2k prime
  simionov             (k-1)!(p-k)! - (-1)^k             ≡ 0 (mod p)        iff p prime
  half_wilson          [((p-1)/2)!]^2 - (-1)^((p+1)/2)   ≡ 0 (mod p)        iff p odd prime
  twin_half            2[((p-1)/2)!]^2
                         + (-1)^((p-1)/2) (5p+2)         ≡ 0 (mod p(p+2))   iff p, p+2 prime
  polignac_half        2k((2k-1)!!)^2 [((p-1)/2)!]^2
                         + (-1)^((p-1)/2) [((2k-1)!!)^2 (p+2k)
                                           + 4^k (-1)^(k+1) p]
                                                         ≡ 0 (mod p(p+2k))  iff p, p+2k prime
  goldbach_corollary   (p-p1)!(p-p2)! + 1                ≡ 0 (mod p)        iff p prime
  dual_index_corollary k1!k2!(p-k1-1)!(p-k2-1)! + 1      ≡ 0 (mod p)        if  p prime (one way!)
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .modmath import MulCounter, Residue, double_factorial_odd_mod, factorial_mod, mul_mod, pow_mod
from .oracle import SieveOracle, is_prime


class VerdictKind(Enum):
    SATISFIED = "Satisfied"
    NOT_SATISFIED = "NotSatisfied"
    PRECONDITION_VIOLATED = "PreconditionViolated"


@dataclass(frozen=True, slots=True)
class TestVerdict:
    """Outcome of one congruence test.

    Satisfied and NotSatisfied carry the evaluated residual (Satisfied
    exactly when it is zero); PreconditionViolated carries a reason and no
    residual.
    """

    kind: VerdictKind
    reason: str | None = None
    residual: Residue | None = None

    @classmethod
    def from_residual(cls, residual: Residue) -> "TestVerdict":
        kind = VerdictKind.SATISFIED if residual.value == 0 else VerdictKind.NOT_SATISFIED
        return cls(kind=kind, residual=residual)

    @classmethod
    def precondition(cls, reason: str) -> "TestVerdict":
        return cls(kind=VerdictKind.PRECONDITION_VIOLATED, reason=reason)

    @property
    def satisfied(self) -> bool:
        return self.kind is VerdictKind.SATISFIED

    @property
    def precondition_violated(self) -> bool:
        return self.kind is VerdictKind.PRECONDITION_VIOLATED


class TheoremId(Enum):
    """Identifiers for the implemented tests, with claim metadata."""

    WILSON = "Wilson"
    CLEMENT = "Clement"
    POLIGNAC_FACTORIAL = "PolignacFactorial"
    SIMIONOV = "Simionov"
    HALF_WILSON = "HalfWilson"
    TWIN_HALF = "TwinHalf"
    POLIGNAC_HALF = "PolignacHalf"
    GOLDBACH_COROLLARY = "GoldbachCorollary"
    DUAL_INDEX_COROLLARY = "DualIndexCorollary"

    @property
    def pair_claim(self) -> bool:
        """True when the test characterizes "p and p+2k both prime"."""
        return self in _PAIR_CLAIMS

    @property
    def forward_only(self) -> bool:
        """True when only "p prime => Satisfied" is claimed.

        For such a test a Satisfied verdict proves nothing about p; only
        NotSatisfied is conclusive (it certifies compositeness).
        """
        return self is TheoremId.DUAL_INDEX_COROLLARY

    @property
    def needs_k(self) -> bool:
        return self in (TheoremId.POLIGNAC_FACTORIAL, TheoremId.SIMIONOV, TheoremId.POLIGNAC_HALF)


_PAIR_CLAIMS = frozenset(
    {
        TheoremId.CLEMENT,
        TheoremId.POLIGNAC_FACTORIAL,
        TheoremId.TWIN_HALF,
        TheoremId.POLIGNAC_HALF,
    }
)


def _require_odd(p: int) -> str | None:
    if p < 3 or p % 2 == 0:
        return f"p must be odd and >= 3, got {p}"
    return None


def wilson(p: int, counter: MulCounter | None = None) -> TestVerdict:
    """(p-1)! + 1 ≡ 0 (mod p), satisfied exactly for prime p."""
    if p < 2:
        raise ValueError(f"wilson needs p >= 2, got {p}")
    f = factorial_mod(p - 1, p, counter)
    return TestVerdict.from_residual(Residue((f.value + 1) % p, p))


def clement(p: int, counter: MulCounter | None = None) -> TestVerdict:
    """4[(p-1)!+1] + p ≡ 0 (mod p(p+2)), satisfied exactly when p and p+2 are prime.

    p = 2 is excluded by hypothesis (2+2 is not prime), as are even p in
    general: evaluating the congruence there would be meaningless, so the
    verdict is PreconditionViolated.
    """
    reason = _require_odd(p)
    if reason:
        return TestVerdict.precondition(reason)
    m = p * (p + 2)
    f = factorial_mod(p - 1, m, counter)
    t = mul_mod(4, f.value + 1, m, counter)
    return TestVerdict.from_residual(Residue((t.value + p) % m, m))


def polignac_factorial(p: int, k: int, counter: MulCounter | None = None) -> TestVerdict:
    """2k(2k)![(p-1)!+1] + [(2k)!-1]p ≡ 0 (mod p(p+2k)) for gap-2k prime pairs.

    Requires p odd and p not dividing 2k(2k)!; k=1 reproduces clement()
    exactly (coefficients 4 and 1).
    """
    if k < 1:
        raise ValueError(f"pair offset k must be >= 1, got {k}")
    reason = _require_odd(p)
    if reason:
        return TestVerdict.precondition(reason)
    # Divisibility check mod p; precondition work is never counted.
    if 2 * k * factorial_mod(2 * k, p).value % p == 0:
        return TestVerdict.precondition(f"p={p} divides 2k(2k)! for k={k}")
    m = p * (p + 2 * k)
    f = factorial_mod(p - 1, m, counter)
    t = factorial_mod(2 * k, m, counter)
    coeff = mul_mod(2 * k, t.value, m, counter)
    lead = mul_mod(coeff.value, f.value + 1, m, counter)
    tail = mul_mod(t.value - 1, p, m, counter)
    return TestVerdict.from_residual(Residue((lead.value + tail.value) % m, m))


def simionov(p: int, k: int, counter: MulCounter | None = None) -> TestVerdict:
    """(k-1)!(p-k)! ≡ (-1)^k (mod p), satisfied exactly for prime p, any k in [1, p]."""
    if p < 2:
        raise ValueError(f"simionov needs p >= 2, got {p}")
    if not 1 <= k <= p:
        raise ValueError(f"index k must lie in [1, p] = [1, {p}], got {k}")
    a = factorial_mod(k - 1, p, counter)
    b = factorial_mod(p - k, p, counter)
    prod = mul_mod(a.value, b.value, p, counter)
    sign = 1 if k % 2 == 0 else -1
    return TestVerdict.from_residual(Residue((prod.value - sign) % p, p))


def half_wilson(p: int, counter: MulCounter | None = None) -> TestVerdict:
    """[((p-1)/2)!]^2 ≡ (-1)^((p+1)/2) (mod p), satisfied exactly for odd prime p.

    Simionov at k = (p+1)/2; halves the multiplication count of wilson().
    """
    reason = _require_odd(p)
    if reason:
        return TestVerdict.precondition(reason)
    h = factorial_mod((p - 1) // 2, p, counter)
    sq = mul_mod(h.value, h.value, p, counter)
    sign = 1 if ((p + 1) // 2) % 2 == 0 else -1
    return TestVerdict.from_residual(Residue((sq.value - sign) % p, p))


def twin_half(p: int, counter: MulCounter | None = None) -> TestVerdict:
    """2[((p-1)/2)!]^2 + (-1)^((p-1)/2) (5p+2) ≡ 0 (mod p(p+2)) for twin primes."""
    reason = _require_odd(p)
    if reason:
        return TestVerdict.precondition(reason)
    m = p * (p + 2)
    h = factorial_mod((p - 1) // 2, m, counter)
    sq = mul_mod(h.value, h.value, m, counter)
    lead = mul_mod(2, sq.value, m, counter)
    sign = 1 if ((p - 1) // 2) % 2 == 0 else -1
    return TestVerdict.from_residual(Residue((lead.value + sign * (5 * p + 2)) % m, m))


def polignac_half(p: int, k: int, counter: MulCounter | None = None) -> TestVerdict:
    """Half-factorial test for gap-2k prime pairs.

    2k((2k-1)!!)^2 [((p-1)/2)!]^2
        + (-1)^((p-1)/2) [((2k-1)!!)^2 (p+2k) + 4^k (-1)^(k+1) p] ≡ 0 (mod p(p+2k))

    Requires p odd and p not dividing 2k((2k-1)!!)^2.  That hypothesis is
    deliberately stronger than p not dividing ((2k-1)!!)^2 alone: the
    combination argument behind the equivalence needs the factorial
    coefficient 2k((2k-1)!!)^2 to be invertible mod both p and p+2k, and for
    odd p the strengthening only additionally excludes p | k.  k=1
    reproduces twin_half() exactly.
    """
    if k < 1:
        raise ValueError(f"pair offset k must be >= 1, got {k}")
    reason = _require_odd(p)
    if reason:
        return TestVerdict.precondition(reason)
    dbl = double_factorial_odd_mod(k, p)
    if 2 * k * dbl.value * dbl.value % p == 0:
        return TestVerdict.precondition(f"p={p} divides 2k((2k-1)!!)^2 for k={k}")
    m = p * (p + 2 * k)
    h = factorial_mod((p - 1) // 2, m, counter)
    hsq = mul_mod(h.value, h.value, m, counter)
    d = double_factorial_odd_mod(k, m, counter)
    dsq = mul_mod(d.value, d.value, m, counter)
    coeff = mul_mod(2 * k, dsq.value, m, counter)
    lead = mul_mod(coeff.value, hsq.value, m, counter)
    four_k = pow_mod(4, k, m, counter)
    b1 = mul_mod(dsq.value, p + 2 * k, m, counter)
    b2 = mul_mod(four_k.value, p, m, counter)
    ksign = 1 if (k + 1) % 2 == 0 else -1
    bracket = (b1.value + ksign * b2.value) % m
    psign = 1 if ((p - 1) // 2) % 2 == 0 else -1
    return TestVerdict.from_residual(Residue((lead.value + psign * bracket) % m, m))


def goldbach_corollary(
    p: int,
    p1: int,
    p2: int,
    counter: MulCounter | None = None,
    oracle: SieveOracle | None = None,
) -> TestVerdict:
    """(p-p1)!(p-p2)! + 1 ≡ 0 (mod p), satisfied exactly for prime p.

    p1 and p2 must be distinct odd primes with p1 + p2 = p + 1 (so this only
    applies to p whose successor splits Goldbach-style).  Primality of the
    parts is checked against the given oracle, or by trial division when no
    oracle is supplied.
    """
    prime = oracle.is_prime if oracle is not None else is_prime
    if p1 == p2:
        return TestVerdict.precondition(f"p1 and p2 must be distinct, got {p1} twice")
    for name, q in (("p1", p1), ("p2", p2)):
        if q % 2 == 0 or not prime(q):
            return TestVerdict.precondition(f"{name}={q} is not an odd prime")
    if p1 + p2 != p + 1:
        return TestVerdict.precondition(f"p1 + p2 = {p1 + p2} but p + 1 = {p + 1}")
    a = factorial_mod(p - p1, p, counter)
    b = factorial_mod(p - p2, p, counter)
    prod = mul_mod(a.value, b.value, p, counter)
    return TestVerdict.from_residual(Residue((prod.value + 1) % p, p))


def dual_index_corollary(
    p: int, k1: int, k2: int, counter: MulCounter | None = None
) -> TestVerdict:
    """k1! k2! (p-k1-1)! (p-k2-1)! + 1 ≡ 0 (mod p) whenever p is prime.

    Forward-only: primality of p guarantees Satisfied, and NotSatisfied
    certifies compositeness, but Satisfied alone is not evidence that p is
    prime.  Requires 0 <= k1 < k2 < p with k2 - k1 odd.
    """
    if not 0 <= k1 < k2 < p:
        raise ValueError(f"need 0 <= k1 < k2 < p, got k1={k1}, k2={k2}, p={p}")
    if (k2 - k1) % 2 == 0:
        raise ValueError(f"k2 - k1 must be odd, got {k2 - k1}")
    acc = factorial_mod(k1, p, counter)
    for n in (k2, p - k1 - 1, p - k2 - 1):
        f = factorial_mod(n, p, counter)
        acc = mul_mod(acc.value, f.value, p, counter)
    return TestVerdict.from_residual(Residue((acc.value + 1) % p, p))
