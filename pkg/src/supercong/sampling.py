"""Seeded samplers for the identity checks.

Every family draws from its own ``random.Random`` seeded with the string
``"<seed>:<family>"``, so adding a family or changing one sample count does
not perturb the other streams.
"""
from __future__ import annotations

import random
from fractions import Fraction

from .congruences import abn_has_pole
from .hypergeom import SeriesSpec, iter_terms, saalschutz_closed_form, series_term
from .padic import is_p_integral


def family_rng(seed: int, family: str) -> random.Random:
    return random.Random(f"{seed}:{family}")


def random_rational(rng: random.Random, numer: int = 30, denom: int = 6) -> Fraction:
    return Fraction(rng.randint(-numer, numer), rng.randint(1, denom))


def _unique(draw, count: int, max_tries: int | None = None) -> list:
    seen, out = set(), []
    tries = max_tries or 50 * count
    for _ in range(tries):
        if len(out) == count:
            break
        item = draw()
        if item is None or item in seen:
            continue
        seen.add(item)
        out.append(item)
    return out


def sample_lemma1(seed: int, count: int, a_max: int = 40) -> list[tuple[int, int]]:
    rng = family_rng(seed, "lemma1")

    def draw():
        a = rng.randint(1, a_max)
        return a, rng.randint(1, a)

    return _unique(draw, count)


def sample_abb_recurrence(seed: int, count: int, a_max: int = 25) -> list[tuple[int, int]]:
    rng = family_rng(seed, "abb_recurrence")

    def draw():
        a = rng.randint(2, a_max)
        return a, rng.randint(2, a)

    return _unique(draw, count)


def sample_abb_term(seed: int, count: int) -> list[tuple[Fraction, Fraction, int]]:
    rng = family_rng(seed, "abb_term")

    def draw():
        alpha, beta, j = random_rational(rng), random_rational(rng), rng.randint(0, 12)
        if alpha == 0 or j + 1 + alpha - beta == 0:
            return None
        return alpha, beta, j

    return _unique(draw, count)


def sample_abn(seed: int, count: int, n: int) -> list[Fraction]:
    rng = family_rng(seed, f"abn:{n}")

    def draw():
        alpha = random_rational(rng, numer=60, denom=8)
        return None if abn_has_pole(n, alpha) else alpha

    return _unique(draw, count)


def sample_double_sum_swap(seed: int, count: int, a_max: int = 12) -> list[tuple[int, int]]:
    rng = family_rng(seed, "double_sum_swap")
    return _unique(lambda: (rng.randint(1, a_max), rng.randint(1, a_max)), count)


def sample_binomial_square(seed: int, count: int, a_max: int = 30) -> list[tuple[int, int]]:
    rng = family_rng(seed, "binomial_square")
    return _unique(lambda: (rng.randint(1, a_max), rng.randint(1, a_max)), count)


def saalschutz_admissible(a: Fraction, b: Fraction, c: Fraction, d: Fraction) -> bool:
    """Closed form defined and every direct-sum term finite."""
    try:
        saalschutz_closed_form(a, b, c, d)
        e = a + b + c + 1 - d
        series_term(SeriesSpec((a, b, c), (d, e), 1, 1), int(-c))
    except (ValueError, ZeroDivisionError):
        return False
    return True


def sample_saalschutz(seed: int, count: int) -> list[tuple[Fraction, Fraction, Fraction, Fraction]]:
    rng = family_rng(seed, "saalschutz")

    def draw():
        a, b, d = (random_rational(rng, numer=20, denom=5) for _ in range(3))
        c = Fraction(-rng.randint(0, 6))
        return (a, b, c, d) if saalschutz_admissible(a, b, c, d) else None

    return _unique(draw, count)


def sample_series_specs(seed: int, count: int, primes: list[int]) -> list[tuple[SeriesSpec, int]]:
    """Random (spec, p) with p-integral parameters and truncation <= p."""
    rng = family_rng(seed, "series")
    out = []
    while len(out) < count:
        p = rng.choice(primes)
        nu, nl = rng.randint(1, 4), rng.randint(0, 3)

        def pint():
            while True:
                r = random_rational(rng, numer=40, denom=9)
                if is_p_integral(r, p):
                    return r

        upper = tuple(pint() for _ in range(nu))
        lower = tuple(pint() for _ in range(nl))
        spec = SeriesSpec(upper, lower, pint(), rng.randint(1, p))
        # a lower parameter hitting a non-positive integer is a pole
        if any(b.denominator == 1 and -spec.truncation < b <= 0 for b in lower):
            continue
        # p-integral parameters do not make (b)_k a p-adic unit
        if not all(is_p_integral(t, p) for t in iter_terms(spec)):
            continue
        out.append((spec, p))
    return out
