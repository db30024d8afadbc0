"""Reduction of p-integral rationals modulo odd prime powers."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .rational import RationalLike, as_rational

# Deterministic Miller-Rabin for n < 3.3 * 10**24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


class NotPIntegralError(ValueError):
    def __init__(self, value: Fraction, p: int):
        super().__init__(f"{value} is not {p}-integral")
        self.value = value
        self.p = p


class NonInvertibleError(ValueError):
    def __init__(self, a: int, m: int, g: int):
        super().__init__(f"{a} is not invertible mod {m} (gcd {g})")
        self.a = a
        self.m = m
        self.gcd = g


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _check_odd_prime(p: int) -> None:
    if not isinstance(p, int) or p < 3 or not is_prime(p):
        raise ValueError(f"{p!r} is not an odd prime")


@dataclass(frozen=True)
class PrimePower:
    p: int
    k: int = 1
    modulus: int = field(init=False)

    def __post_init__(self):
        _check_odd_prime(self.p)
        if self.k < 1:
            raise ValueError("prime-power exponent must be >= 1")
        object.__setattr__(self, "modulus", self.p**self.k)

    def __str__(self) -> str:
        return f"{self.p}^{self.k}"


@dataclass(frozen=True)
class ResidueClass:
    value: int
    pk: PrimePower = field(compare=False)

    def __post_init__(self):
        if not 0 <= self.value < self.pk.modulus:
            raise ValueError(f"{self.value} out of range for mod {self.pk}")

    @property
    def modulus(self) -> int:
        return self.pk.modulus

    def __eq__(self, other):
        if not isinstance(other, ResidueClass):
            return NotImplemented
        return self.value == other.value and self.pk.modulus == other.pk.modulus

    def __hash__(self):
        return hash((self.value, self.pk.modulus))

    def __add__(self, other: "ResidueClass") -> "ResidueClass":
        self._same_ring(other)
        return ResidueClass((self.value + other.value) % self.modulus, self.pk)

    def __mul__(self, other: "ResidueClass") -> "ResidueClass":
        self._same_ring(other)
        return ResidueClass(self.value * other.value % self.modulus, self.pk)

    def __neg__(self) -> "ResidueClass":
        return ResidueClass(-self.value % self.modulus, self.pk)

    def _same_ring(self, other):
        if self.pk.modulus != other.pk.modulus:
            raise ValueError("residues live in different rings")

    def __str__(self) -> str:
        return f"{self.value} (mod {self.pk})"


def valuation(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of zero is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def is_p_integral(r: RationalLike, p: int) -> bool:
    return as_rational(r).denominator % p != 0


def mod_inverse(a: int, m: int) -> int:
    """Inverse of a modulo m in [0, m); raises NonInvertibleError if gcd(a, m) > 1."""
    g = math.gcd(a, m)
    if g != 1:
        raise NonInvertibleError(a, m, g)
    return pow(a, -1, m)


def reduce_mod(r: RationalLike, pk: PrimePower) -> ResidueClass:
    r = as_rational(r)
    if not is_p_integral(r, pk.p):
        raise NotPIntegralError(r, pk.p)
    m = pk.modulus
    return ResidueClass(r.numerator * mod_inverse(r.denominator, m) % m, pk)


def reduce_int(r: RationalLike, modulus: int) -> int:
    """Same as reduce_mod but on a bare modulus; used by hot loops."""
    r = as_rational(r)
    return r.numerator * pow(r.denominator, -1, modulus) % modulus


def least_nonneg_residue(r: RationalLike, p: int) -> int:
    """{r}_p: the integer in [0, p) congruent to r modulo p."""
    return reduce_mod(r, PrimePower(p, 1)).value


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) by Euler's criterion."""
    _check_odd_prime(p)
    t = pow(a % p, (p - 1) // 2, p)
    return -1 if t == p - 1 else t


def lift_sign(sign: int, pk: PrimePower) -> ResidueClass:
    """Map -1/0/+1 into the residue ring mod p^k."""
    if sign not in (-1, 0, 1):
        raise ValueError("sign must be -1, 0 or 1")
    return ResidueClass(sign % pk.modulus, pk)
