"""Truncated hypergeometric series, exactly and modulo prime powers."""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from .padic import PrimePower, ResidueClass, mod_inverse, valuation
from .rational import RationalLike, as_rational, format_rational, parse_rational, rising_factorial
from .report import CheckReport, make_report


class ZeroLowerPochhammerError(ValueError):
    def __init__(self, parameter: Fraction, k: int):
        super().__init__(f"lower parameter {parameter} gives (b)_{k} = 0")
        self.parameter = parameter
        self.k = k


class NonIntegralTermError(ValueError):
    def __init__(self, k: int, p: int):
        super().__init__(f"term k={k} is not {p}-integral")
        self.k = k
        self.p = p


class NonTerminatingError(ValueError):
    pass


@dataclass(frozen=True)
class SeriesSpec:
    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]
    argument: Fraction = Fraction(1)
    truncation: int = 1

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(as_rational(a) for a in self.upper))
        object.__setattr__(self, "lower", tuple(as_rational(b) for b in self.lower))
        object.__setattr__(self, "argument", as_rational(self.argument))
        if not isinstance(self.truncation, int) or self.truncation < 1:
            raise ValueError("truncation must be a positive integer")

    def to_text(self) -> str:
        up = ",".join(map(format_rational, self.upper))
        lo = ",".join(map(format_rational, self.lower))
        return (
            f"{len(self.upper)}F{len(self.lower)}"
            f"[{up};{lo};{format_rational(self.argument)};{self.truncation}]"
        )

    @classmethod
    def from_text(cls, text: str) -> "SeriesSpec":
        m = _SPEC_RE.match(text)
        if not m:
            raise ValueError(f"malformed series spec {text!r}")
        p, q, up, lo, x, n = m.groups()
        upper = [parse_rational(t) for t in up.split(",")] if up else []
        lower = [parse_rational(t) for t in lo.split(",")] if lo else []
        if len(upper) != int(p) or len(lower) != int(q):
            raise ValueError(f"parameter counts disagree with {p}F{q}")
        return cls(tuple(upper), tuple(lower), parse_rational(x), int(n))

    def __str__(self) -> str:
        return self.to_text()


_SPEC_RE = re.compile(r"^(\d+)F(\d+)\[([^;\]]*);([^;\]]*);([^;\]]+);(\d+)\]$")


def iter_terms(spec: SeriesSpec, count: int | None = None) -> Iterator[Fraction]:
    """Yield terms k = 0, 1, ... (``count`` of them, default the truncation).

    Terms are built by the ratio recurrence. Once an upper parameter
    terminates the series every later term is exactly zero, but lower
    parameters are still checked for poles.
    """
    count = spec.truncation if count is None else count
    term = Fraction(1)
    for k in range(count):
        yield term
        if k == count - 1:
            break
        for b in spec.lower:
            if b + k == 0:
                raise ZeroLowerPochhammerError(b, k + 1)
        if term == 0:
            continue
        num = spec.argument
        for a in spec.upper:
            num *= a + k
        if num == 0:
            term = Fraction(0)
            continue
        den = Fraction(k + 1)
        for b in spec.lower:
            den *= b + k
        term = term * num / den


def series_term(spec: SeriesSpec, k: int) -> Fraction:
    if k < 0:
        raise ValueError("term index must be >= 0")
    for term in iter_terms(spec, k + 1):
        pass
    return term


def truncated_pFq_exact(spec: SeriesSpec) -> Fraction:
    return sum(iter_terms(spec), Fraction(0))


def _split(f: Fraction, p: int, m: int) -> tuple[int, int]:
    """Write nonzero f as p^v * unit; return (v, unit mod m)."""
    num, den = f.numerator, f.denominator
    vn = valuation(num, p)
    vd = valuation(den, p)
    unit = (num // p**vn) * mod_inverse(den // p**vd, m) % m
    return vn - vd, unit


def truncated_pFq_mod(spec: SeriesSpec, pk: PrimePower) -> ResidueClass:
    """Sum the truncated series in Z/p^kZ, reducing term by term.

    Each term is carried as p^v * unit so that factors divisible by p in the
    lower parameters cancel against the upper ones without leaving the ring.
    """
    p, m, e = pk.p, pk.modulus, pk.k
    zero = False
    v, unit = 0, 1
    total = 0
    n = spec.truncation
    for k in range(n):
        if not zero:
            if v < 0:
                raise NonIntegralTermError(k, p)
            if v < e:
                total = (total + p**v * unit) % m
        if k == n - 1:
            break
        for b in spec.lower:
            if b + k == 0:
                raise ZeroLowerPochhammerError(b, k + 1)
        if zero:
            continue
        for f in (spec.argument, *(a + k for a in spec.upper)):
            if f == 0:
                zero = True
                break
            dv, du = _split(f, p, m)
            v += dv
            unit = unit * du % m
        if zero:
            continue
        for f in (Fraction(k + 1), *(b + k for b in spec.lower)):
            dv, du = _split(f, p, m)
            v -= dv
            unit = unit * mod_inverse(du, m) % m
    return ResidueClass(total, pk)


def batch_unit_series_mod(uppers: Sequence[np.ndarray], lower_count: int, n: int, modulus: int) -> np.ndarray:
    """Vectorized sum_{k<n} prod_i (u_i)_k / (k!)^(lower_count+1) mod modulus.

    ``uppers`` are integer residue arrays of equal shape. This is the series
    with every lower parameter equal to 1 and argument 1; it needs k! to be
    invertible for k < n, and modulus**2 to fit in int64.
    """
    if modulus * modulus >= 2**63:
        raise OverflowError("modulus too large for the int64 kernel")
    ups = [np.asarray(u, dtype=np.int64) % modulus for u in uppers]
    shape = ups[0].shape
    num = np.ones(shape, dtype=np.int64)
    total = np.zeros(shape, dtype=np.int64)
    fact = 1
    for k in range(n):
        inv = pow(pow(fact, lower_count + 1, modulus), -1, modulus)
        total = (total + num * inv) % modulus
        for u in ups:
            num = num * ((u + k) % modulus) % modulus
        fact = fact * (k + 1) % modulus
    return total


def saalschutz_closed_form(a: RationalLike, b: RationalLike, c: RationalLike, d: RationalLike) -> Fraction:
    """Closed form of the balanced terminating 3F2[a,b,c; d,e | 1], e = a+b+c+1-d."""
    a, b, c, d = map(as_rational, (a, b, c, d))
    if c.denominator != 1 or c > 0:
        raise NonTerminatingError(f"c = {c} is not a non-positive integer")
    m = int(-c)
    den = rising_factorial(d, m) * rising_factorial(d - a - b, m)
    if den == 0:
        raise ZeroDivisionError(f"denominator Pochhammer vanishes for d={d}, d-a-b={d - a - b}, |c|={m}")
    return rising_factorial(d - a, m) * rising_factorial(d - b, m) / den


def verify_saalschutz(a: RationalLike, b: RationalLike, c: RationalLike, d: RationalLike) -> CheckReport:
    a, b, c, d = map(as_rational, (a, b, c, d))
    closed = saalschutz_closed_form(a, b, c, d)
    e = a + b + c + 1 - d
    spec = SeriesSpec((a, b, c), (d, e), Fraction(1), int(-c) + 1)
    direct = truncated_pFq_exact(spec)
    return make_report(
        "saalschutz",
        {"a": a, "b": b, "c": c, "d": d},
        direct,
        closed,
        direct == closed,
    )
