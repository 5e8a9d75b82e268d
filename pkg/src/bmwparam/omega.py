"""Omega-sequences and parameter bundles.

An omega-sequence is the two-sided family (omega_a) of contraction scalars of
a (degenerate) cyclotomic BMW algebra: a finite nonnegative prefix, an
optional monic linear recursion closing it for all integer indices, and an
optional negative-index prefix.  A :class:`ParamSet` bundles the sequence with
the cyclotomic roots u_1..u_r and, in the non-degenerate case, the invertible
scalars rho and q, which must satisfy

    rho^{-1} - rho = (q^{-1} - q)(omega_0 - 1).

Generation routes:

* degenerate: omega_a = eta_a^+(u_1, ..., u_r),
* non-degenerate: (q - q^{-1}) sum omega_a t^{-a} = Z(t; u, rho, q), with
  Z built from G(t) = prod (t - u_l)/(t u_l - 1) and the odd/even branch A(t).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Tuple

from . import symfun
from .fields import Field, FieldElement
from .report import AdmissibilityReport, Witness, single
from .univar import Poly, RatFunc, Series


class ParameterError(ValueError):
    """Parameter data violating a structural precondition."""


@dataclass(frozen=True)
class OmegaSeq:
    """Prefix omega_0..omega_N, optional recursion closure, negative prefix.

    The closure records monic recursion coefficients (a_0, ..., a_{r-1}): the
    sequence satisfies omega_{r+l} + sum_j a_j omega_{j+l} = 0.  On
    construction the recursion is verified across the stored prefix, so a
    sequence carrying a closure really is closed.
    """

    field: Field
    prefix: Tuple[FieldElement, ...]
    closure: Optional[Tuple[FieldElement, ...]] = None
    negative: Tuple[FieldElement, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "prefix",
                           tuple(self.field(c) for c in self.prefix))
        if self.closure is not None:
            object.__setattr__(self, "closure",
                               tuple(self.field(c) for c in self.closure))
        object.__setattr__(self, "negative",
                           tuple(self.field(c) for c in self.negative))
        if self.closure is not None:
            r = len(self.closure)
            for ell in range(len(self.prefix) - r):
                acc = self.prefix[r + ell]
                for j, aj in enumerate(self.closure):
                    acc = acc + aj * self.prefix[j + ell]
                if acc:
                    raise ParameterError(
                        f"closure violated at l={ell}: residue {acc}")

    @property
    def order(self) -> Optional[int]:
        """Order of the recursion closure, if any."""
        return None if self.closure is None else len(self.closure)

    def __len__(self):
        return len(self.prefix)

    def omega(self, a: int) -> FieldElement:
        """omega_a for any stored or closure-reachable index."""
        if a >= 0:
            if a < len(self.prefix):
                return self.prefix[a]
            if self.closure is not None:
                return self.extended(a).prefix[a]
            raise IndexError(f"omega_{a} not stored and no closure")
        if -a <= len(self.negative):
            return self.negative[-a - 1]
        if self.closure is not None and self.closure[0]:
            return self._backward(-a)[-a - 1]
        raise IndexError(f"omega_{a} not stored; closure absent or a_0 = 0")

    def extended(self, upto: int) -> "OmegaSeq":
        """Extend the prefix through index upto using the closure."""
        if self.closure is None:
            raise ParameterError("cannot extend a sequence without closure")
        r = len(self.closure)
        if len(self.prefix) < r:
            raise ParameterError(
                f"prefix of length {len(self.prefix)} cannot seed an order-{r} recursion")
        vals = list(self.prefix)
        while len(vals) <= upto:
            acc = self.field.zero
            ell = len(vals) - r
            for j, aj in enumerate(self.closure):
                acc = acc - aj * vals[j + ell]
            vals.append(acc)
        return OmegaSeq(self.field, tuple(vals), self.closure, self.negative)

    def _backward(self, upto: int):
        """omega_{-1}..omega_{-upto} by running the closure backwards."""
        a0inv = self.closure[0].inverse()
        r = len(self.closure)
        vals = {a: c for a, c in enumerate(self.prefix)}
        for a in range(-1, -upto - 1, -1):
            # omega_a = -a_0^{-1} (omega_{a+r} + sum_{j>=1} a_j omega_{a+j})
            acc = vals[a + r]
            for j in range(1, r):
                acc = acc + self.closure[j] * vals[a + j]
            vals[a] = -(a0inv * acc)
        return tuple(vals[-k] for k in range(1, upto + 1))

    def with_negative(self, negative) -> "OmegaSeq":
        return OmegaSeq(self.field, self.prefix, self.closure, tuple(negative))


@dataclass(frozen=True)
class ParamSet:
    """Parameter bundle for a cyclotomic or degenerate cyclotomic algebra."""

    kind: str
    field: Field
    u: Tuple[FieldElement, ...]
    omega: OmegaSeq
    rho: Optional[FieldElement] = None
    q: Optional[FieldElement] = None

    def __post_init__(self):
        if self.kind not in ("degenerate", "nondegenerate"):
            raise ParameterError(f"unknown kind {self.kind!r}")
        object.__setattr__(self, "u", tuple(self.field(x) for x in self.u))
        if self.kind == "degenerate":
            if self.rho is not None or self.q is not None:
                raise ParameterError("degenerate parameters carry no rho, q")
            return
        if self.rho is None or self.q is None:
            raise ParameterError("non-degenerate parameters need rho and q")
        object.__setattr__(self, "rho", self.field(self.rho))
        object.__setattr__(self, "q", self.field(self.q))
        if not self.rho or not self.q:
            raise ParameterError("rho and q must be invertible")
        for x in self.u:
            if not x:
                raise ParameterError("cyclotomic roots must be invertible")
        if len(self.omega.prefix) > 0:
            om0 = self.omega.prefix[0]
            lhs = self.rho.inverse() - self.rho
            rhs = (self.q.inverse() - self.q) * (om0 - self.field.one)
            if lhs != rhs:
                raise ParameterError(
                    "ground-ring relation rho^-1 - rho = (q^-1 - q)(omega_0 - 1) "
                    f"violated: {lhs} != {rhs}")

    @property
    def r(self) -> int:
        return len(self.u)

    def q_minus_qinv(self) -> FieldElement:
        return self.q - self.q.inverse()


DEFAULT_ORDER_MARGIN = 8


def default_order(r: int) -> int:
    return 2 * r + DEFAULT_ORDER_MARGIN


def degenerate_params(field, u, order=None) -> ParamSet:
    """Parameters with omega_a = eta_a^+(u) for a <= order, closed by
    the coefficients of prod (y - u_j)."""
    u = tuple(field(x) for x in u)
    if not u:
        raise ParameterError("need at least one root")
    if order is None:
        order = default_order(len(u))
    prefix = symfun.eta_values(+1, u, order)
    closure = tuple(symfun.char_poly_coeffs(u)[:len(u)])
    seq = OmegaSeq(field, tuple(prefix), closure)
    return ParamSet("degenerate", field, u, seq)


class RXFunctions(NamedTuple):
    """The generating-function data (G, A, Z) of the u-admissibility criterion."""

    G: RatFunc
    A: RatFunc
    Z: RatFunc


def rx_functions(field, u, rho, q) -> RXFunctions:
    """G(t) = prod (t - u_l)/(t u_l - 1); Z(t) = -rho^{-1}
    + (q - q^{-1}) t^2/(t^2-1) + A(t) G(t^{-1}), with the odd/even branch

        A(t) = rho^{-1} p + (q - q^{-1}) t/(t^2-1)      (r odd)
        A(t) = rho^{-1} p - (q - q^{-1}) t^2/(t^2-1)    (r even)

    where p = prod u_j."""
    u = [field(x) for x in u]
    rho, q = field(rho), field(q)
    t = RatFunc.t(field)
    one = RatFunc.constant(field, 1)
    num = Poly.one(field)
    den = Poly.one(field)
    for ul in u:
        num = num * Poly(field, (-ul, field.one))
        den = den * Poly(field, (-field.one, ul))
    G = RatFunc(num, den)
    ginv = G.substitute_inverse_t()
    delta = q - q.inverse()
    tt = t * t
    prod_u = field.one
    for ul in u:
        prod_u = prod_u * ul
    base = RatFunc.constant(field, rho.inverse() * prod_u)
    if len(u) % 2 == 1:
        A = base + t * delta / (tt - one)
    else:
        A = base - tt * delta / (tt - one)
    Z = RatFunc.constant(field, -rho.inverse()) + tt * delta / (tt - one) + A * ginv
    return RXFunctions(G, A, Z)


def check_rho_constraint(field, u, rho, q) -> Optional[str]:
    """The constraint forced on rho by u-admissibility: rho = +-p for odd r,
    rho in {q^{-1} p, -q p} for even r, with p = prod u_j.  Returns a
    diagnostic string if violated, else None."""
    u = [field(x) for x in u]
    rho, q = field(rho), field(q)
    p = field.one
    for x in u:
        p = p * x
    if len(u) % 2 == 1:
        if rho != p and rho != -p:
            return (f"r = {len(u)} odd needs rho = +-(u_1...u_r); "
                    f"got rho = {rho}, product = {p}")
    else:
        if rho != q.inverse() * p and rho != -(q * p):
            return (f"r = {len(u)} even needs rho in {{q^-1 p, -q p}}; "
                    f"got rho = {rho}, q^-1 p = {q.inverse() * p}, -q p = {-(q * p)}")
    return None


def nondegenerate_params(field, u, rho, q, order=None) -> ParamSet:
    """Parameters with (q - q^{-1}) sum omega_a t^{-a} = Z(t; u, rho, q).

    Rejects q = +-1 (so q - q^{-1} = 0) and any rho violating the constraint
    forced by the ground-ring relation.
    """
    u = tuple(field(x) for x in u)
    if not u:
        raise ParameterError("need at least one root")
    rho, q = field(rho), field(q)
    if not q or not rho:
        raise ParameterError("rho and q must be invertible")
    if not (q - q.inverse()):
        raise ParameterError("q - q^{-1} = 0 is outside this criterion")
    diag = check_rho_constraint(field, u, rho, q)
    if diag is not None:
        raise ParameterError(diag)
    if order is None:
        order = default_order(len(u))
    Z = rx_functions(field, u, rho, q).Z
    delta_inv = (q - q.inverse()).inverse()
    series = Z.series_at_infinity(order)
    prefix = tuple(c * delta_inv for c in series.coeffs)
    closure = tuple(symfun.char_poly_coeffs(u)[:len(u)])
    seq = OmegaSeq(field, prefix, closure)
    return ParamSet("nondegenerate", field, u, seq, rho=rho, q=q)


def extend_by_recursion(seq: OmegaSeq, coeffs, upto: int) -> OmegaSeq:
    """Extend the prefix to index upto with the monic recursion given by
    coeffs = (a_0..a_{r-1}); the closure is recorded on the result."""
    coeffs = tuple(seq.field(c) for c in coeffs)
    if len(seq.prefix) < len(coeffs):
        raise ParameterError(
            f"prefix length {len(seq.prefix)} < recursion order {len(coeffs)}")
    base = OmegaSeq(seq.field, seq.prefix, coeffs, seq.negative)
    return base.extended(upto)


def omega_negative(params: ParamSet, count: int) -> OmegaSeq:
    """Solve for omega_{-1}..omega_{-count} from the two-sided relation

        -omega_a + omega_{-a}
            + rho (q - q^{-1}) sum_{i=1}^a (omega_{a-i} omega_{-i} - omega_{a-2i}) = 0.

    At each step the unknown omega_{-a} carries the coefficient
    1 + rho (q - q^{-1})(omega_0 - 1) = rho^2, invertible by construction, so
    the triangular solve never branches.
    """
    if params.kind != "nondegenerate":
        raise ParameterError("negative indices need non-degenerate parameters")
    if len(params.omega) <= count:
        raise ParameterError(f"prefix too short for {count} negative terms")
    field = params.field
    rho, q = params.rho, params.q
    om = params.omega.prefix
    factor = rho * (q - q.inverse())
    rho2_inv = (rho * rho).inverse()
    neg = {}

    def get(k):
        return om[k] if k >= 0 else neg[-k]

    for a in range(1, count + 1):
        # gather every term not involving the unknown omega_{-a}
        known = -om[a]
        for i in range(1, a + 1):
            if i != a:
                known = known + factor * om[a - i] * neg[i]
            if a - 2 * i >= 0:
                known = known - factor * om[a - 2 * i]
            elif 2 * i - a != a:
                known = known - factor * neg[2 * i - a]
        # unknown coefficient: 1 (standalone) + factor*omega_0 (i = a term)
        # - factor (the omega_{a-2i} term at i = a); total rho^2
        neg[a] = -(known * rho2_inv)
    return params.omega.with_negative(tuple(neg[k] for k in range(1, count + 1)))


def wplus_ratfunc(seq: OmegaSeq) -> RatFunc:
    """w^+(t) = sum_{a>=0} omega_a t^{-a} as an exact rational function.

    With p(t) the monic closure polynomial, p(t) w^+(t) is the polynomial
    whose t^k coefficient is sum_{j=k}^r a_j omega_{j-k}; the constant term
    vanishes by the recursion, so w^+(0) = 0 and w^+(infinity) = omega_0.
    """
    if seq.closure is None:
        raise ParameterError("w^+ needs a recursion closure")
    field = seq.field
    r = len(seq.closure)
    if len(seq.prefix) < r:
        raise ParameterError("prefix shorter than closure order")
    acoeffs = list(seq.closure) + [field.one]
    den = Poly(field, acoeffs)
    num = [field.zero]
    for k in range(1, r + 1):
        acc = field.zero
        for j in range(k, r + 1):
            acc = acc + acoeffs[j] * seq.prefix[j - k]
        num.append(acc)
    return RatFunc(Poly(field, num), den)


def wminus_ratfunc(seq: OmegaSeq) -> RatFunc:
    """w^-(t) = -w^+(1/t), the generating function of the negative indices."""
    return (-wplus_ratfunc(seq)).substitute_inverse_t()


def _pm_factors_rat(params: ParamSet):
    field = params.field
    delta_inv = (params.q - params.q.inverse()).inverse()
    rinv = params.rho.inverse()
    t = RatFunc.t(field)
    one = RatFunc.constant(field, 1)
    tt = t * t
    denom = tt - one
    left_shift = -(tt / denom) + RatFunc.constant(field, rinv * delta_inv)
    right_shift = -(one / denom) - RatFunc.constant(field, rinv * delta_inv)
    rhs = tt / (denom * denom) - RatFunc.constant(field, delta_inv * delta_inv)
    return left_shift, right_shift, rhs


def verify_pm_identity(params: ParamSet, bound: int = None) -> AdmissibilityReport:
    """Check the two-factor identity

        [w^+ - t^2/(t^2-1) + rho^{-1}/(q-q^{-1})]
        [w^- - 1/(t^2-1) - rho^{-1}/(q-q^{-1})]
            = t^2/(t^2-1)^2 - 1/(q-q^{-1})^2,

    exactly as rational functions when the closure is present, otherwise
    coefficientwise to the given truncation order.
    """
    if params.kind != "nondegenerate":
        raise ParameterError("the identity concerns non-degenerate parameters")
    if not params.q_minus_qinv():
        raise ParameterError("q - q^{-1} = 0 is outside this identity")
    name = "wplus-wminus-identity"
    left_shift, right_shift, rhs = _pm_factors_rat(params)
    if params.omega.closure is not None:
        wp = wplus_ratfunc(params.omega)
        wm = wminus_ratfunc(params.omega)
        lhs = (wp + left_shift) * (wm + right_shift)
        if lhs == rhs:
            return single(name, True)
        order = bound if bound is not None else default_order(params.r)
        lhs_series = lhs.series_at_infinity(order)
        rhs_series = rhs.series_at_infinity(order)
        idx = lhs_series.first_disagreement(rhs_series)
        if idx is None:
            witness = Witness(name, f"beyond order {order}", lhs, rhs)
        else:
            witness = Witness(name, idx, lhs_series[idx], rhs_series[idx])
        return single(name, False, witness)
    if bound is None:
        bound = len(params.omega) - 1
    seq = params.omega
    if len(seq.negative) < bound:
        seq = omega_negative(params, bound)
    wp_series = Series(params.omega.prefix[:bound + 1])
    wm_series = Series((params.field.zero,) + seq.negative[:bound])
    lhs = (wp_series + left_shift.series_at_infinity(bound)) \
        * (wm_series + right_shift.series_at_infinity(bound))
    rhs_series = rhs.series_at_infinity(bound)
    idx = lhs.first_disagreement(rhs_series)
    if idx is None:
        return single(name, True)
    return single(name, False, Witness(name, idx, lhs[idx], rhs_series[idx]))
