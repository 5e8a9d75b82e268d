import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from bmwparam.fields import QQ, BinaryField, PrimeField
from bmwparam.univar import (PoleAtInfinityError, Poly, RatFunc, Series,
                             SplitError, poly_gcd, series_expand,
                             substitute_inverse_t)


# ---------------------------------------------------------------- oracle
def oracle_series_at_infinity(num, den, order):
    """Independent long division over Fraction lists (ascending coeffs)."""
    b = len(den) - 1
    a = len(num) - 1
    assert a <= b and den[b] != 0
    num_s = [Fraction(0)] * (b - a) + list(reversed(num))
    den_s = list(reversed(den))
    rem = list(num_s) + [Fraction(0)] * (order + 1)
    out = []
    for k in range(order + 1):
        c = rem[k] / den_s[0]
        out.append(c)
        for j, d in enumerate(den_s):
            if k + j < len(rem):
                rem[k + j] -= c * d
    return out


def ratfunc(num, den, field=QQ):
    return RatFunc(Poly(field, num), Poly(field, den))


# ---------------------------------------------------------------- series
def test_series_geometric():
    # t/(t-u) = 1 + u/t + u^2/t^2 + ...
    f = ratfunc([0, 1], [-2, 1])
    assert series_expand(f, 3).coeffs == (QQ(1), QQ(2), QQ(4), QQ(8))


def test_series_even_denominator():
    # frozen from the long-division oracle: t^2/(t^2-1) -> 1 + t^-2 + t^-4
    f = ratfunc([0, 0, 1], [-1, 0, 1])
    expected = oracle_series_at_infinity([Fraction(0), Fraction(0), Fraction(1)],
                                         [Fraction(-1), Fraction(0), Fraction(1)], 4)
    assert expected == [1, 0, 1, 0, 1]
    assert [c.raw for c in series_expand(f, 4).coeffs] == expected


def test_series_b_function_leading_coefficient():
    # B(t) = (t+q)(t-q^{-1}) / ((q-q^{-1})(t^2-1)) at q=2: value at
    # infinity is (q-q^{-1})^{-1} = 2/3
    q = Fraction(2)
    num = [Fraction(-1), q - 1 / q, Fraction(1)]       # (t+q)(t-1/q)
    den = [-(q - 1 / q), Fraction(0), q - 1 / q]       # (q-1/q)(t^2-1)
    f = ratfunc(num, den)
    assert series_expand(f, 0)[0] == QQ(Fraction(2, 3))
    assert oracle_series_at_infinity(num, den, 0)[0] == Fraction(2, 3)


def test_series_pole_at_infinity_rejected():
    f = ratfunc([0, 0, 1], [1, 1])
    with pytest.raises(PoleAtInfinityError):
        series_expand(f, 3)


def test_series_against_oracle_random():
    rng = random.Random(7)
    for _ in range(40):
        db = rng.randint(1, 4)
        da = rng.randint(0, db)
        num = [Fraction(rng.randint(-4, 4)) for _ in range(da)] + [Fraction(rng.randint(1, 4))]
        den = [Fraction(rng.randint(-4, 4)) for _ in range(db)] + [Fraction(rng.randint(1, 4))]
        f = ratfunc(num, den)
        got = series_expand(f, 6)
        want = oracle_series_at_infinity(num, den, 6)
        assert [c.raw for c in got.coeffs] == want


def test_series_multiplicativity():
    rng = random.Random(11)
    for _ in range(25):
        def rand_ratfunc():
            db = rng.randint(1, 3)
            num = [QQ(rng.randint(-3, 3)) for _ in range(db)] + [QQ(rng.randint(1, 3))]
            den = [QQ(rng.randint(-3, 3)) for _ in range(db)] + [QQ(rng.randint(1, 3))]
            return ratfunc(num, den)
        f, g = rand_ratfunc(), rand_ratfunc()
        assert series_expand(f * g, 5) == series_expand(f, 5) * series_expand(g, 5)


def test_series_round_trips_finite_field():
    F5 = PrimeField(5)
    f = RatFunc(Poly(F5, (0, 1)), Poly(F5, (-2, 1)))
    assert [c.raw for c in f.series_at_infinity(4).coeffs] == [1, 2, 4, 3, 1]


# ------------------------------------------------------- t -> 1/t
def test_substitute_inverse_basic():
    t = RatFunc.t(QQ)
    assert substitute_inverse_t(t) == 1 / t
    f = ratfunc([0, 0, 1], [-1, 0, 1])  # t^2/(t^2-1)
    g = substitute_inverse_t(f)
    assert g == ratfunc([1], [1, 0, -1])  # 1/(1-t^2)


@settings(max_examples=60)
@given(st.lists(st.integers(-4, 4), min_size=1, max_size=4),
       st.lists(st.integers(-4, 4), min_size=1, max_size=4))
def test_substitute_inverse_involution(nums, dens):
    num = Poly(QQ, nums)
    den = Poly(QQ, dens)
    if num.is_zero() or den.is_zero():
        return
    f = RatFunc(num, den)
    assert f.substitute_inverse_t().substitute_inverse_t() == f


def test_substitute_inverse_respects_products():
    rng = random.Random(5)
    for _ in range(20):
        f = ratfunc([rng.randint(1, 5), rng.randint(1, 5)], [rng.randint(1, 5), 0, 1])
        g = ratfunc([0, rng.randint(1, 5)], [1, rng.randint(1, 5)])
        assert (f * g).substitute_inverse_t() == \
            f.substitute_inverse_t() * g.substitute_inverse_t()


# ------------------------------------------------------- ratfunc algebra
def test_ratfunc_normalization_unique():
    f = ratfunc([2, 2], [0, 4, 4])        # (2t+2)/(4t^2+4t) = 1/(2t)
    assert f.num == Poly(QQ, (QQ(Fraction(1, 2)),))
    assert f.den == Poly(QQ, (0, 1))
    assert f == ratfunc([1], [0, 2])


def test_ratfunc_field_axioms_random():
    rng = random.Random(13)
    for _ in range(20):
        def rnd():
            return ratfunc([rng.randint(-3, 3), rng.randint(1, 3)],
                           [rng.randint(-3, 3), rng.randint(1, 3)])
        a, b, c = rnd(), rnd(), rnd()
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        assert a - a == RatFunc.constant(QQ, 0)
        if not b.is_zero():
            assert (a / b) * b == a


def test_poly_divmod_and_gcd():
    rng = random.Random(17)
    for _ in range(30):
        a = Poly(QQ, [rng.randint(-4, 4) for _ in range(rng.randint(1, 5))])
        b = Poly(QQ, [rng.randint(-4, 4) for _ in range(rng.randint(1, 4))])
        if b.is_zero():
            continue
        quot, rem = divmod(a, b)
        assert quot * b + rem == a
        assert rem.is_zero() or rem.degree < b.degree
        g = poly_gcd(a, b)
        if not g.is_zero():
            assert (a % g).is_zero() and (b % g).is_zero()


def test_roots_rational():
    p = Poly.from_roots(QQ, [QQ(2), QQ(Fraction(-1, 3)), QQ(2)])
    roots = p.roots_with_multiplicity()
    assert sorted(r.raw for r in roots) == [Fraction(-1, 3), 2, 2]
    with pytest.raises(SplitError):
        Poly(QQ, (1, 0, 1)).roots_with_multiplicity()  # t^2 + 1


def test_roots_finite_fields():
    F5 = PrimeField(5)
    assert sorted(r.raw for r in Poly(F5, (1, 0, 1)).roots_with_multiplicity()) == [2, 3]
    F4 = BinaryField(2)
    x = F4.gen()
    p = Poly.from_roots(F4, [x, x + F4.one])
    assert set(p.roots_with_multiplicity()) == {x, x + F4.one}
    with pytest.raises(SplitError):
        # x^2 + x + 1 is the defining irreducible of GF(4), so it has no
        # roots over GF(2)
        Poly(PrimeField(2), (1, 1, 1)).roots_with_multiplicity()


def test_poly_eval_and_shift():
    p = Poly(QQ, (1, 2, 1))
    assert p(QQ(3)) == QQ(16)
    assert p.shift(2).degree == 4
    assert p.reversed() == Poly(QQ, (1, 2, 1))
    q = Poly(QQ, (0, 0, 3, 5))
    assert q.reversed() == Poly(QQ, (5, 3))
