"""Symmetric-function layer.

Provides the elementary symmetric functions eps_k, power sums p_a, the
symmetric polynomials q_a defined by

    prod_i (1 + u_i t)/(1 - u_i t) = sum_{a>=0} q_a(u) t^a

(the Schur q-functions), the integer combinations

    eta_a^{+-}(u) = q_{a+1}(u) +- (-1)^(r-1)/2 q_a(u) + 1/2 delta_{a,0},

and the universal polynomials H_a obtained by solving the admissibility
relations as a unitriangular linear system.  Everything is computed exactly;
eta and H have integer coefficients, which is asserted rather than assumed.

All builders accept either MPoly variables (symbolic mode) or field elements
(evaluated mode).  Symbolic results are cached and must not be mutated.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .mpoly import MPoly
from .univar import Series

SYMBOLIC_R_CAP = 6
SYMBOLIC_A_CAP = 24


def set_symbolic_caps(r_cap=None, a_cap=None):
    """Raise or lower the symbolic-mode size guards (polynomials grow fast)."""
    global SYMBOLIC_R_CAP, SYMBOLIC_A_CAP
    if r_cap is not None:
        SYMBOLIC_R_CAP = r_cap
    if a_cap is not None:
        SYMBOLIC_A_CAP = a_cap


class IntegralityError(ArithmeticError):
    """A value certified integral by theory came out non-integral."""


def _one_like(x):
    if isinstance(x, MPoly):
        return MPoly.const(x.nvars, 1)
    return x.field.one


def _is_symbolic(xs):
    return bool(xs) and isinstance(xs[0], MPoly)


def elem_sym(k, xs):
    """Elementary symmetric function eps_k of the given ring elements."""
    r = len(xs)
    if not 0 <= k <= r:
        raise IndexError(f"eps_{k} undefined for {r} variables")
    if r == 0:
        raise ValueError("need at least one variable")
    one = _one_like(xs[0])
    zero = one * 0
    dp = [one] + [zero] * k
    for x in xs:
        for j in range(k, 0, -1):
            dp[j] = dp[j] + dp[j - 1] * x
    return dp[k]


def power_sum(a, xs):
    """Power sum p_a = sum x^a; p_0 = r."""
    if a == 0:
        return _one_like(xs[0]) * len(xs)
    acc = xs[0] ** a
    for x in xs[1:]:
        acc = acc + x ** a
    return acc


def char_poly_coeffs(xs):
    """Coefficients a_0..a_r of prod (y - x_j), ascending, with a_r = 1.

    a_j = (-1)^(r-j) eps_{r-j}(x), the signed elementary symmetric functions.
    """
    one = _one_like(xs[0])
    coeffs = [one]
    for x in xs:
        nxt = [-(coeffs[0] * x)]
        for j in range(1, len(coeffs)):
            nxt.append(coeffs[j - 1] - coeffs[j] * x)
        nxt.append(coeffs[-1])
        coeffs = nxt
    return coeffs


def _poly_from_negated_roots(xs):
    """Ascending coefficients of prod (y + x_j)."""
    one = _one_like(xs[0])
    coeffs = [one]
    for x in xs:
        nxt = [coeffs[0] * x]
        for j in range(1, len(coeffs)):
            nxt.append(coeffs[j - 1] + coeffs[j] * x)
        nxt.append(coeffs[-1])
        coeffs = nxt
    return coeffs


def schur_q_series(xs, order) -> Series:
    """Truncated series sum_{a<=order} q_a(x) t^a.

    Each factor (1 + x t)/(1 - x t) expands as 1 + 2xt + 2x^2 t^2 + ...;
    the product is carried out by exact truncated multiplication.
    """
    one = _one_like(xs[0])
    acc = Series([one] + [one * 0] * order)
    for x in xs:
        factor = [one]
        pw = one
        for _ in range(order):
            pw = pw * x
            factor.append(pw + pw)
        acc = acc * Series(factor)
    return acc


def schur_q(a, xs):
    """q_a; q_0 = 1."""
    if a < 0:
        raise IndexError("q_a needs a >= 0")
    return schur_q_series(xs, a)[a]


@lru_cache(maxsize=None)
def schur_q_poly(a: int, r: int) -> MPoly:
    _check_caps(max(a - 1, 0), r)  # eta at the cap needs q one index above
    return schur_q(a, MPoly.variables(r))


@lru_cache(maxsize=None)
def half_q_poly(a: int, r: int) -> MPoly:
    """The integer polynomial q_a / 2, defined for a >= 1."""
    if a < 1:
        raise IndexError("q_0 / 2 = 1/2 is not an integer polynomial")
    _check_caps(a, r)
    return schur_q_poly(a, r).exact_div(2)


def half_q(a, xs):
    """q_a / 2 as an integer polynomial, evaluated at xs if scalars are given.

    Evaluation goes through the integer polynomial, so it is meaningful even
    in characteristic 2 where q_a itself vanishes for a >= 1.
    """
    if _is_symbolic(xs):
        return half_q_poly(a, len(xs))
    return half_q_poly(a, len(xs)).evaluate(xs[0].field, xs)


@lru_cache(maxsize=None)
def eta_poly(sign: int, a: int, r: int) -> MPoly:
    """eta_a^{+-} as an integer polynomial in r variables.

    Computed over Q[u] from the definition and certified integral.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if a < 0:
        raise IndexError("eta_a needs a >= 0")
    _check_caps(a, r)
    half = Fraction(1, 2)
    val = schur_q_poly(a + 1, r) \
        + schur_q_poly(a, r).scaled(sign * (-1) ** (r - 1) * half)
    if a == 0:
        val = val + half
    if not val.is_integral():
        raise IntegralityError(f"eta_{a}^{'+' if sign > 0 else '-'} "
                               f"for r={r} is not integral: {val!r}")
    return val


def _check_caps(a, r):
    if r > SYMBOLIC_R_CAP or a > SYMBOLIC_A_CAP:
        raise ValueError(
            f"symbolic mode capped at r <= {SYMBOLIC_R_CAP}, a <= {SYMBOLIC_A_CAP}")


def eta(sign, a, xs):
    """eta_a^{+-}, symbolic for MPoly variables, evaluated for scalars."""
    if _is_symbolic(xs):
        return eta_poly(sign, a, len(xs))
    return eta_values(sign, xs, a)[a]


def eta_values(sign, us, order):
    """The list eta_0^{+-}(u) .. eta_order^{+-}(u) in the field of the u's.

    In characteristic != 2 this evaluates the defining series directly; in
    characteristic 2 it evaluates the cached integer polynomials, which is
    where the integrality of eta earns its keep.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    field = us[0].field
    r = len(us)
    if field.char == 2:
        return [eta_poly(sign, a, r).evaluate(field, us)
                for a in range(order + 1)]
    half = field(Fraction(1, 2))
    c = half if (r - 1) % 2 == 0 else -half
    if sign < 0:
        c = -c
    qs = schur_q_series(us, order + 1)
    out = [qs[1] + c * qs[0] + half]
    for a in range(1, order + 1):
        out.append(qs[a + 1] + c * qs[a])
    return out


@lru_cache(maxsize=None)
def universal_H(a: int, r: int) -> MPoly:
    """The universal polynomial H_a with omega_a = H_a(u) for admissible data.

    For a < r these come from solving the admissibility relations

        sum_{mu=0}^{r-j-1} omega_mu a_{mu+j+1}
            = -2 [r-j odd] a_j + [j even] a_{j+1},   0 <= j <= r-1,

    in reverse order j = r-1, ..., 0; listed that way the system is
    unitriangular in omega_0, ..., omega_{r-1}.  For a >= r the recursion
    sum_j a_j omega_{j+m} = 0 extends the solution.
    """
    _check_caps(a, r)
    return _universal_H_list(a, r)[a]


@lru_cache(maxsize=None)
def _universal_H_list(upto: int, r: int):
    acoeffs = char_poly_coeffs(MPoly.variables(r))  # a_0..a_r, a_r = 1
    count = max(upto + 1, r)
    w = [None] * count
    for j in range(r - 1, -1, -1):
        rhs = MPoly.zero(r)
        if (r - j) % 2 == 1:
            rhs = rhs - acoeffs[j].scaled(2)
        if j % 2 == 0:
            rhs = rhs + acoeffs[j + 1]
        for mu in range(r - j - 1):
            rhs = rhs - w[mu] * acoeffs[mu + j + 1]
        w[r - j - 1] = rhs  # the diagonal coefficient is a_r = 1
    for m in range(count - r):
        acc = MPoly.zero(r)
        for j in range(r):
            acc = acc - acoeffs[j] * w[j + m]
        w[r + m] = acc
    return tuple(w)


def eta_generating_series(sign, xs, order) -> Series:
    """Closed generating form of the eta's, expanded to the given order:

        sum_a eta_a^{+-} t^{-a}
            = (1/2 - t) + (t +- (-1)^(r-1)/2) prod_i (t + u_i)/(t - u_i).

    The product is expanded by long division of prod (t+u_i) by the monic
    prod (t-u_i) in descending powers of t, an independent route from the
    definitional one through the q_a.  Needs 1/2, hence characteristic != 2
    (or symbolic mode).
    """
    r = len(xs)
    if _is_symbolic(xs):
        half = Fraction(1, 2)
    else:
        if xs[0].field.char == 2:
            raise ValueError("closed generating form needs 1/2 in the ring")
        half = xs[0].field(Fraction(1, 2))
    num = _poly_from_negated_roots(xs)
    den = char_poly_coeffs(xs)
    g = _descending_division(num, den, order + 1)
    c = half * ((1 if (r - 1) % 2 == 0 else -1) * (1 if sign > 0 else -1))
    out = []
    for a in range(order + 1):
        val = g[a + 1] + g[a] * c
        if a == 0:
            val = val + half
        out.append(val)
    return Series(out)


def _descending_division(num, den, order):
    """Coefficients of t^{-k}, k = 0..order, of num/den at t = infinity.

    num and den are ascending coefficient lists with den monic of degree
    >= deg num, so no coefficient division occurs and the computation is
    exact over any coefficient ring.
    """
    deg = len(den) - 1
    zero = den[-1] * 0
    rem = {i: c for i, c in enumerate(num)}
    out = []
    for k in range(order + 1):
        c = rem.pop(deg - k, zero)
        out.append(c)
        if c != zero:
            for j in range(deg):
                idx = j - k
                rem[idx] = rem.get(idx, zero) - c * den[j]
    return out
