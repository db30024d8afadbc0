"""Verifiers for the 3F2 divisibility theorem, its proof steps, and the
2F1 congruences it generalizes.

Congruence verifiers return a not-applicable report (``passed is None``)
when the inputs fall outside the statement's hypothesis. Exact-identity
verifiers raise ValueError on inadmissible inputs instead.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb

from .hypergeom import SeriesSpec, truncated_pFq_exact, truncated_pFq_mod
from .padic import (
    PrimePower,
    ResidueClass,
    is_p_integral,
    least_nonneg_residue,
    legendre,
    lift_sign,
    reduce_mod,
)
from .rational import RationalLike, as_rational, binomial_general as C
from .report import NOT_APPLICABLE, CheckReport, make_report

# (upper parameters, a) with 2F1[u1, u2; 1 | 1]_p = (a/p) mod p^2
MORTENSON_FORMS = (
    ((Fraction(1, 2), Fraction(1, 2)), -1),
    ((Fraction(1, 3), Fraction(2, 3)), -3),
    ((Fraction(1, 4), Fraction(3, 4)), -2),
    ((Fraction(1, 6), Fraction(5, 6)), -1),
)


def _exact(check, inputs, lhs, rhs) -> CheckReport:
    return make_report(check, inputs, lhs, rhs, lhs == rhs)


def _congruent(check, inputs, lhs: ResidueClass, rhs: ResidueClass) -> CheckReport:
    return make_report(check, inputs, lhs, rhs, lhs == rhs)


def _na(check, inputs, reason, computed="") -> CheckReport:
    return make_report(check, inputs, computed, NOT_APPLICABLE, None, note=reason)


def theorem_hypothesis(alpha: Fraction, beta: Fraction, p: int) -> str | None:
    """Return None if the theorem applies to (alpha, beta, p), else the reason."""
    if not (is_p_integral(alpha, p) and is_p_integral(beta, p)):
        return "parameters not p-integral"
    ra, rb = least_nonneg_residue(alpha, p), least_nonneg_residue(beta, p)
    if ra < 1 or rb < 1:
        return "zero residue"
    if ra + rb > p:
        return f"{{alpha}}+{{beta}} = {ra + rb} > p"
    return None


def main_theorem_series(alpha: RationalLike, beta: RationalLike, p: int) -> SeriesSpec:
    alpha, beta = as_rational(alpha), as_rational(beta)
    return SeriesSpec((alpha, beta, 1 - alpha - beta), (1, 1), 1, p)


def verify_main_theorem(alpha: RationalLike, beta: RationalLike, p: int, exponent: int = 2) -> CheckReport:
    """3F2[alpha, beta, 1-alpha-beta; 1, 1 | 1]_p == 0 mod p^exponent."""
    alpha, beta = as_rational(alpha), as_rational(beta)
    pk = PrimePower(p, exponent)
    inputs = {"p": p, "alpha": alpha, "beta": beta}
    reason = theorem_hypothesis(alpha, beta, p)
    if reason == "parameters not p-integral":
        return _na("theorem", inputs, reason)
    value = truncated_pFq_mod(main_theorem_series(alpha, beta, p), pk)
    if reason:
        return _na("theorem", inputs, reason, value)
    return _congruent("theorem", inputs, value, ResidueClass(0, pk))


def alternating_binomial_sum(a: Fraction, b: Fraction, p: int, pk: PrimePower) -> ResidueClass:
    """sum_{k<p} (-1)^k C(a,k) C(b,k) C(-1-a-b,k), reduced term by term."""
    c = -1 - a - b
    ca = cb = cc = Fraction(1)
    total = ResidueClass(0, pk)
    for k in range(p):
        term = ca * cb * cc
        total = total + reduce_mod(-term if k % 2 else term, pk)
        ca = ca * (a - k) / (k + 1)
        cb = cb * (b - k) / (k + 1)
        cc = cc * (c - k) / (k + 1)
    return total


def verify_alt_form(a: RationalLike, b: RationalLike, p: int, exponent: int = 2) -> CheckReport:
    a, b = as_rational(a), as_rational(b)
    pk = PrimePower(p, exponent)
    inputs = {"p": p, "a": a, "b": b}
    if not (is_p_integral(a, p) and is_p_integral(b, p)):
        return _na("alt_form", inputs, "parameters not p-integral")
    value = alternating_binomial_sum(a, b, p, pk)
    s = least_nonneg_residue(a, p) + least_nonneg_residue(b, p)
    if s < p:
        return _na("alt_form", inputs, f"{{a}}+{{b}} = {s} < p", value)
    return _congruent("alt_form", inputs, value, ResidueClass(0, pk))


def binomial_square_identity(a: int, b: int) -> CheckReport:
    if a < 1 or b < 1:
        raise ValueError("binomial_square_identity needs a, b >= 1")
    lhs = truncated_pFq_exact(SeriesSpec((-a, -b, 1 + a + b), (1, 1), 1, a + 1))
    return _exact("binomial_square", {"a": a, "b": b}, lhs, Fraction(comb(a + b, a) ** 2))


def verify_shift_congruence(alpha: int, k: int, s: int, p: int) -> CheckReport:
    """C(alpha+sp, k) == C(alpha, k) + sp * sum_j C(alpha, k-j)(-1)^(j-1)/j mod p^2."""
    if not (0 <= alpha < p and 0 <= k < p):
        raise ValueError("shift congruence needs 0 <= alpha, k <= p-1")
    pk = PrimePower(p, 2)
    lhs = C(alpha + s * p, k)
    tail = sum((C(alpha, k - j) * Fraction((-1) ** (j - 1), j) for j in range(1, k + 1)), Fraction(0))
    rhs = C(alpha, k) + s * p * tail
    return _congruent(
        "shift_congruence", {"p": p, "alpha": alpha, "k": k, "s": s}, reduce_mod(lhs, pk), reduce_mod(rhs, pk)
    )


def verify_shift_invariance(alpha: int, beta: int, s: int, p: int) -> CheckReport:
    pk = PrimePower(p, 2)
    inputs = {"p": p, "alpha": alpha, "beta": beta, "s": s}
    if not (0 <= alpha < p and 0 <= beta < p):
        return _na("shift_invariance", inputs, "alpha, beta outside [0, p-1]")
    if alpha + beta < p:
        return _na("shift_invariance", inputs, "alpha + beta < p")
    a, b = Fraction(alpha), Fraction(beta)
    # the shifted sum is the same alternating sum with beta -> beta + sp
    lhs = alternating_binomial_sum(a, b, p, pk)
    rhs = alternating_binomial_sum(a, b + s * p, p, pk)
    return _congruent("shift_invariance", inputs, lhs, rhs)


def double_sum_kernel(a: int, b: int) -> Fraction:
    """sum_{j=1}^a (1/j) sum_{k=j}^a (-1)^(k-j) C(a,k) C(-1-a-b,k) C(b,k-j)."""
    c = -1 - a - b
    return sum(
        (
            Fraction(1, j)
            * sum(((-1) ** (k - j) * C(a, k) * C(c, k) * C(b, k - j) for k in range(j, a + 1)), Fraction(0))
            for j in range(1, a + 1)
        ),
        Fraction(0),
    )


def double_sum_kernel_swapped(a: int, b: int) -> Fraction:
    """Same kernel with the roles of C(b, .) and C(-1-a-b, .) exchanged."""
    c = -1 - a - b
    return sum(
        (
            Fraction(1, j)
            * sum(((-1) ** (k - j) * C(a, k) * C(b, k) * C(c, k - j) for k in range(j, a + 1)), Fraction(0))
            for j in range(1, a + 1)
        ),
        Fraction(0),
    )


def double_sum_swap(a: int, b: int) -> CheckReport:
    if a < 1 or b < 1:
        raise ValueError("double_sum_swap needs a, b >= 1")
    lhs = double_sum_kernel(a, b)
    rhs = sum((Fraction((-1) ** b, j) * C(-a - 1, j + b) * C(a + b, j + b) for j in range(1, a + 1)), Fraction(0))
    return _exact("double_sum_swap", {"a": a, "b": b}, lhs, rhs)


def _chain_hypothesis(a: int, b: int, p: int) -> str | None:
    if not (1 <= a <= p - 1 and 1 <= b <= p - 1):
        return "a, b outside [1, p-1]"
    if a + b < p:
        return "a + b < p"
    return None


def wraparound_reduction(a: int, b: int, p: int) -> CheckReport:
    """Checks, mod p,

        sum_{j=b+1}^{a+b} (-1)^b/(j-b) C(-a-1,j) C(a+b,j)
          == sum_{j=0}^{a+b-p} (-1)^b/(j+p-b) C(-a-1,j) C(a+b-p,j).

    As stated this fails for most admissible (a, b): lifting j -> j-p turns
    C(-a-1, j) into -C(-a-1, j-p) mod p, so the two sides differ by a sign.
    """
    inputs = {"p": p, "a": a, "b": b}
    reason = _chain_hypothesis(a, b, p)
    if reason:
        return _na("wraparound", inputs, reason)
    pk = PrimePower(p, 1)
    sign = (-1) ** b
    lhs = sum((Fraction(sign, j - b) * C(-a - 1, j) * C(a + b, j) for j in range(b + 1, a + b + 1)), Fraction(0))
    r = a + b - p
    rhs = sum((Fraction(sign, j + p - b) * C(-a - 1, j) * C(r, j) for j in range(r + 1)), Fraction(0))
    return _congruent("wraparound", inputs, reduce_mod(lhs, pk), reduce_mod(rhs, pk))


def lemma1_sides(a: int, b: int) -> tuple[Fraction, Fraction]:
    lhs = sum((Fraction(1, j + b) * C(-a - 1, j) * C(a - b, j) for j in range(a - b + 1)), Fraction(0))
    rhs = sum(
        (Fraction((-1) ** (1 + a), j + 1 + a - b) * C(-a - 1, j) * C(b - 1, j) for j in range(b)), Fraction(0)
    )
    return lhs, rhs


def lemma1_identity(a: int, b: int) -> CheckReport:
    if not 1 <= b <= a:
        raise ValueError("lemma1_identity needs a >= b >= 1")
    lhs, rhs = lemma1_sides(a, b)
    return _exact("lemma1", {"a": a, "b": b}, lhs, rhs)


def abb_term_sides(alpha: Fraction, beta: Fraction, j: int) -> tuple[Fraction, Fraction]:
    pole = 1 / (j + 1 + alpha - beta)
    lhs = pole * C(-alpha - 1, j) * C(beta - 1, j)
    rhs = (alpha + beta - 1) / alpha**2 * C(-alpha, j) * C(beta - 1, j) + (
        (beta - 1) ** 2 / alpha**2 * pole * C(-alpha, j) * C(beta - 2, j)
    )
    return lhs, rhs


def abb_term_identity(alpha: RationalLike, beta: RationalLike, j: int) -> CheckReport:
    alpha, beta = as_rational(alpha), as_rational(beta)
    if alpha == 0:
        raise ValueError("abb_term_identity needs alpha != 0")
    if j + 1 + alpha - beta == 0:
        raise ValueError("pole: j + 1 + alpha - beta = 0")
    lhs, rhs = abb_term_sides(alpha, beta, j)
    return _exact("abb_term", {"alpha": alpha, "beta": beta, "j": j}, lhs, rhs)


def abb_recurrence(a: int, b: int) -> CheckReport:
    if not 2 <= b <= a:
        raise ValueError("abb_recurrence needs a >= b >= 2")
    lhs = sum((Fraction(1, j + 1 + a - b) * C(-a - 1, j) * C(b - 1, j) for j in range(b)), Fraction(0))
    tail = sum((Fraction(1, j + 1 + a - b) * C(-a, j) * C(b - 2, j) for j in range(b - 1)), Fraction(0))
    rhs = C(b - 1 - a, b - 1) * Fraction(a + b - 1, a * a) + Fraction((b - 1) ** 2, a * a) * tail
    return _exact("abb_recurrence", {"a": a, "b": b}, lhs, rhs)


def abn_has_pole(n: int, alpha: Fraction) -> bool:
    return any(j + alpha - n - 1 == 0 or j + alpha - n == 0 for j in range(n + 1))


def abn_identity(n: int, alpha: RationalLike) -> CheckReport:
    alpha = as_rational(alpha)
    if n < 0:
        raise ValueError("abn_identity needs n >= 0")
    if abn_has_pole(n, alpha):
        raise ValueError(f"pole in abn_identity at n={n}, alpha={alpha}")
    lhs = sum(
        (
            C(n, j)
            * ((alpha - n - 1) ** 2 / (j + alpha - n - 1) * C(-alpha, j) + alpha**2 / (j + alpha - n) * C(-alpha - 1, j))
            for j in range(n + 1)
        ),
        Fraction(0),
    )
    rhs = (-1) ** n * (2 * alpha - n - 1) * C(alpha - 1, n)
    return _exact("abn", {"n": n, "alpha": alpha}, lhs, rhs)


def kernel_congruence(a: int, b: int, p: int) -> CheckReport:
    inputs = {"p": p, "a": a, "b": b}
    reason = _chain_hypothesis(a, b, p)
    if reason:
        return _na("kernel", inputs, reason)
    pk = PrimePower(p, 1)
    return _congruent(
        "kernel", inputs, reduce_mod(double_sum_kernel(a, b), pk), reduce_mod(double_sum_kernel_swapped(a, b), pk)
    )


def verify_mortenson(p: int) -> list[CheckReport]:
    if p < 5:
        raise ValueError("Mortenson's congruences need p >= 5")
    pk = PrimePower(p, 2)
    out = []
    for upper, a in MORTENSON_FORMS:
        value = truncated_pFq_mod(SeriesSpec(upper, (1,), 1, p), pk)
        expected = lift_sign(legendre(a, p), pk)
        inputs = {"p": p, "upper": ",".join(map(str, upper)), "legendre_of": a}
        out.append(_congruent("mortenson", inputs, value, expected))
    return out


def verify_sun(alpha: RationalLike, p: int, exponent: int = 2) -> CheckReport:
    """2F1[alpha, 1-alpha; 1 | 1]_p == (-1)^({alpha}_p - 1) mod p^2."""
    alpha = as_rational(alpha)
    pk = PrimePower(p, exponent)
    inputs = {"p": p, "alpha": alpha}
    if not is_p_integral(alpha, p):
        return _na("sun", inputs, "alpha not p-integral")
    r = least_nonneg_residue(alpha, p)
    value = truncated_pFq_mod(SeriesSpec((alpha, 1 - alpha), (1,), 1, p), pk)
    if r == 0:
        return _na("sun", inputs, "{alpha}_p = 0", value)
    return _congruent("sun", inputs, value, lift_sign((-1) ** (r - 1), pk))
