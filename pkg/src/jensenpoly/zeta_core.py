"""High-precision Taylor coefficients of the completed Riemann zeta function.

The completed zeta function  Lambda(s) = pi^(-s/2) Gamma(s/2) zeta(s)  is
symmetric about s = 1/2, and the even Taylor coefficients gamma(n) of
(-1 + 4 z^2) Lambda(1/2 + z) = sum_n gamma(n) z^(2n) / n!  control the
real-rootedness questions handled by the ``jensen`` module.  Everything here
reduces to the classical theta-integral representation on (1, oo):

    theta0(t)        = sum_{k >= 1} exp(-pi k^2 t)                    (t >= 1)
    F(n)             = int_1^oo (log t)^n t^(-3/4) theta0(t) dt       (n >= 0)
    Lambda^(n)(1/2)  = -2^(n+2) n!  +  F(n) / 2^(n-1)                 (n even)
    gamma(n)         = (n!/(2n)!) (32 C(2n,2) F(2n-2) - F(2n)) / 2^(2n-1)

After u = log t the F-integrand becomes  u^n e^(u/4) theta0(e^u),  a sharply
peaked unimodal bump whose maximum sits near the saddle point u = L(n), the
positive root of  n = L (pi e^L + 3/4)  (solved in :mod:`.asymptotics`).  Two
quadrature back ends share a certified peak window:

* tanh-sinh quadrature (``mpmath.mp.quad``) on [u_lo, L, u_hi] — the general
  path, used for real n and small integers;
* a doubling-refinement trapezoid rule on [0, u_hi] — used for integer
  n >= 64, where periodic-grade convergence makes it 5-10x faster; two
  successive refinements must agree to 2^-(prec+5) relative.

All public operations take an explicit binary precision ``prec`` (>= 64) and
return :class:`BigReal` / :class:`GammaValue` values that are correctly
rounded *results of the requested precision*, independent of the working
precision used internally.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Dict, Tuple, Union

import mpmath
from mpmath import mp, mpf, workprec

__all__ = [
    "MIN_PREC",
    "BigReal",
    "GammaValue",
    "DomainError",
    "PrecisionFailure",
    "theta0",
    "F_exact",
    "lambda_deriv",
    "lambda_deriv_or_zero",
    "gamma_exact",
    "clear_f_memo",
]

log = logging.getLogger("jensenpoly.zeta_core")

#: Minimum accepted binary working precision for every public operation.
MIN_PREC = 64

#: ln 2, used to convert bit counts into natural-log thresholds.
_LN2_FLOAT = 0.6931471805599453

#: Trapezoid fast path kicks in for integer exponents >= this (below it the
#: rule converges only like h^(n+2) and tanh-sinh wins).
_TRAPEZOID_MIN_N = 64


class DomainError(ValueError):
    """An argument lies outside the operation's documented domain."""


class PrecisionFailure(ArithmeticError):
    """The adaptive precision ladder was exhausted without stabilizing."""


Number = Union[int, float, mpf]


@dataclass(frozen=True)
class BigReal:
    """An arbitrary-precision real paired with its binary precision.

    ``value`` is an ``mpmath.mpf`` correctly rounded to ``prec_bits``
    significant bits; re-evaluating the producing operation at
    ``prec_bits + 64`` moves the result by a relative amount below
    ``2**(16 - prec_bits)``.
    """

    value: mpf
    prec_bits: int

    def __post_init__(self) -> None:
        if self.prec_bits < MIN_PREC:
            raise DomainError(
                f"prec_bits={self.prec_bits} below the minimum {MIN_PREC}"
            )

    def __float__(self) -> float:
        return float(self.value)

    def __str__(self) -> str:
        digits = max(1, int(self.prec_bits * 0.30103))
        return mpmath.nstr(self.value, digits)


@dataclass(frozen=True)
class GammaValue:
    """One Taylor coefficient gamma(n) with provenance.

    ``source`` is ``"exact_integral"`` (quadrature of F) or ``"asymptotic"``
    (saddle-point approximation).  ``cancel_bits`` records the exponent gap
    swallowed by the subtraction ``32 C(2n,2) F(2n-2) - F(2n)``; the working
    precision was escalated until at least ``value.prec_bits`` bits survive.
    """

    n: int
    value: BigReal
    source: str
    cancel_bits: int = 0


def _require_prec(prec: int) -> None:
    if not isinstance(prec, int) or prec < MIN_PREC:
        raise DomainError(f"prec must be an integer >= {MIN_PREC}, got {prec!r}")


# ---------------------------------------------------------------------------
# theta0
# ---------------------------------------------------------------------------


def _theta0_raw(t: mpf, prec: int) -> mpf:
    """Sum exp(-pi k^2 t) for k >= 1 with relative truncation error 2^-(prec+15).

    The cutoff is taken *relative to the leading term*: terms are added while
    pi (k^2 - 1) t <= (prec + 16) ln 2, so that the discarded tail is below
    2 e^(-pi t) 2^-(prec+16) — a relative bound that stays valid when
    e^(-pi t) itself is tiny (large t is exactly where the F integrand peaks).
    """
    with workprec(prec + 10):
        t = mpf(t)
        first = mpmath.exp(-mpmath.pi * t)
        total = first
        cut = mpf(prec + 16) * _LN2_FLOAT
        k = 2
        while mpmath.pi * (k * k - 1) * t <= cut:
            total += mpmath.exp(-mpmath.pi * (k * k) * t)
            k += 1
        return +total


def theta0(t: Number, prec: int) -> BigReal:
    """Jacobi-type theta sum  sum_{k>=1} exp(-pi k^2 t)  for t >= 1.

    Raises :class:`DomainError` for t < 1; the functional-equation branch for
    small t is out of scope (the F integral only needs t >= 1).
    """
    _require_prec(prec)
    with workprec(prec + 16):
        tv = mpf(t)
        if tv < 1:
            raise DomainError(f"theta0 requires t >= 1, got {t!r}")
        raw = _theta0_raw(tv, prec)
    with workprec(prec):
        return BigReal(+raw, prec)


# ---------------------------------------------------------------------------
# F(n) quadrature
# ---------------------------------------------------------------------------

#: process-local memo for integer-n F values: {(n, wp): mpf}
_F_MEMO: Dict[Tuple[int, int], mpf] = {}


def clear_f_memo() -> None:
    """Drop the process-local F(n) memo (mainly for tests)."""
    _F_MEMO.clear()


def _saddle_log(n: Number, prec: int) -> mpf:
    """Positive root L of n = L (pi e^L + 3/4); lazy import breaks the cycle."""
    from .asymptotics import _solve_L_raw

    return _solve_L_raw(n, prec)


def _make_integrand(n: Number, wp: int):
    """Return g(u) = u^n e^(u/4) theta0(e^u) evaluated at working precision."""
    n_int = int(n) if (isinstance(n, int) or float(n).is_integer()) else None
    n_mp = mpf(n)

    def g(u: mpf) -> mpf:
        if u <= 0:
            # u^n -> 0 for n > 0; for n == 0 the limit is theta0(1).
            if n_int == 0 or n_mp == 0:
                return _theta0_raw(mpf(1), wp) * mpmath.exp(u / 4) if u == 0 else mpf(0)
            return mpf(0)
        power = u ** n_int if n_int is not None else u ** n_mp
        return power * mpmath.exp(u / 4) * _theta0_raw(mpmath.exp(u), wp)

    return g


def _peak_window(g, n: Number, wp: int, tail_bits: int) -> Tuple[mpf, mpf, mpf]:
    """Window [u_lo, u_peak, u_hi] outside which g < 2^-tail_bits * peak."""
    if mpf(n) > 0:
        u_peak = _saddle_log(n, wp)
    else:
        u_peak = mpf(0)
    peak = g(max(u_peak, mpf("1e-3"))) if u_peak == 0 else g(u_peak)
    if peak <= 0:
        raise PrecisionFailure(f"integrand peak underflowed for n={n}")
    target = peak * mpf(2) ** (-tail_bits)

    step = max(u_peak, mpf(1)) / 4
    u_hi = max(u_peak, mpf(1))
    while g(u_hi) > target:
        u_hi += step

    if mpf(n) > 0 and u_peak > 0:
        lo, hi = mpf(0), u_peak
        for _ in range(60):
            mid = (lo + hi) / 2
            if g(mid) > target:
                hi = mid
            else:
                lo = mid
        u_lo = lo
    else:
        u_lo = mpf(0)
    return u_lo, u_peak, u_hi


def _F_tanh_sinh(n: Number, prec: int) -> mpf:
    """General-path F(n): tanh-sinh quadrature over the certified window."""
    wp = prec + 40
    with workprec(wp):
        g = _make_integrand(n, wp)
        u_lo, u_peak, u_hi = _peak_window(g, n, wp, prec + 30)
        points = [u_lo, u_peak, u_hi] if u_lo < u_peak < u_hi else [u_lo, u_hi]
        value = mp.quad(g, points)
        if value <= 0 or not mpmath.isfinite(value):
            raise PrecisionFailure(f"tanh-sinh quadrature failed for n={n}")
        return +value


def _F_trapezoid(n: int, prec: int) -> mpf:
    """Fast-path F(n) for integer n >= 64: doubling trapezoid on [0, u_hi].

    The integrand vanishes to order n at 0 and decays doubly-exponentially at
    the right cutoff, so for large n the trapezoid converges spectrally; each
    doubling halves h and only the new midpoints are evaluated.  Acceptance
    requires two successive refinements to agree to 2^-(prec+5) relative.
    """
    wp = prec + 40
    with workprec(wp):
        g = _make_integrand(n, wp)
        u_lo, u_peak, u_hi = _peak_window(g, n, wp, prec + 30)
        # Gaussian width of the bump: sigma = L / sqrt(C), C = (e+e^2)n - 3/4.
        eps = 1 / u_peak
        c_curv = (eps + eps * eps) * n - mpf(3) / 4
        sigma = u_peak / mpmath.sqrt(c_curv)
        n0 = max(16, int(u_hi / (sigma / 3)) + 1)

        h = u_hi / n0
        total = (g(mpf(0)) + g(u_hi)) / 2
        for i in range(1, n0):
            total += g(i * h)
        estimate = total * h

        tol = mpf(2) ** (-(prec + 5))
        for _doubling in range(14):
            mids = mpf(0)
            m = n0  # number of new midpoints at this level
            for i in range(m):
                mids += g((i + mpf(1) / 2) * h)
            h /= 2
            n0 *= 2
            total += mids
            new_estimate = total * h
            if abs(new_estimate - estimate) <= abs(new_estimate) * tol:
                return +new_estimate
            estimate = new_estimate
        raise PrecisionFailure(
            f"trapezoid refinement did not stabilize for F({n}) at {prec} bits"
        )


def _normalize_exponent(n: Number) -> Number:
    """Collapse integer-valued floats/mpfs to int so the fast path can fire."""
    if isinstance(n, int):
        return n
    if isinstance(n, float) and n.is_integer():
        return int(n)
    if isinstance(n, mpf) and mpmath.isint(n):
        return int(n)
    return n


def _F_raw(n: Number, prec: int) -> mpf:
    """Dispatch to the right quadrature; memoize integer-n results."""
    n = _normalize_exponent(n)
    key = None
    if isinstance(n, int):
        key = (n, prec)
        hit = _F_MEMO.get(key)
        if hit is not None:
            return hit
    if isinstance(n, int) and n >= _TRAPEZOID_MIN_N:
        value = _F_trapezoid(n, prec)
    else:
        value = _F_tanh_sinh(n, prec)
    if key is not None:
        _F_MEMO[key] = value
    return value


def F_exact(n: Number, prec: int) -> BigReal:
    """F(n) = int_1^oo (log t)^n t^(-3/4) theta0(t) dt, relative error < 2^(16-prec).

    Accepts any real n >= 0 (the suite itself only exercises even integers).
    """
    _require_prec(prec)
    with workprec(prec + 16):
        if mpf(n) < 0:
            raise DomainError(f"F_exact requires n >= 0, got {n!r}")
    raw = _F_raw(n, prec)
    with workprec(prec):
        return BigReal(+raw, prec)


# ---------------------------------------------------------------------------
# Lambda derivatives and gamma(n)
# ---------------------------------------------------------------------------


def _check_even_positive(n: int) -> None:
    if not isinstance(n, int) or n <= 0:
        raise DomainError(f"lambda_deriv requires a positive integer n, got {n!r}")
    if n % 2:
        raise DomainError(
            f"lambda_deriv requires even n (odd derivatives vanish); got {n}; "
            "use lambda_deriv_or_zero for the zero-returning convenience path"
        )


def lambda_deriv(n: int, prec: int) -> BigReal:
    """n-th derivative of the completed zeta function at 1/2 (n even, > 0).

    Computes  -2^(n+2) n!  +  F(n) / 2^(n-1)  with the factorial part exact
    and the working precision escalated until the subtraction keeps ``prec``
    significant bits.
    """
    _check_even_positive(n)
    _require_prec(prec)

    const_term = -(1 << (n + 2)) * math.factorial(n)  # exact integer
    gap_guess = 8
    for _attempt in range(6):
        wp = prec + 24 + gap_guess
        with workprec(wp + 16):
            f_val = _F_raw(n, wp)
            term2 = f_val / mpf(2) ** (n - 1)
            total = mpf(const_term) + term2
            if total == 0:
                gap_guess *= 2
                continue
            gap = max(mpmath.mag(term2), mpmath.mag(const_term)) - mpmath.mag(total)
        if gap <= gap_guess:
            with workprec(prec):
                return BigReal(+total, prec)
        gap_guess = max(gap + 8, gap_guess * 2)
    raise PrecisionFailure(f"lambda_deriv({n}) cancellation exceeded the ladder")


def lambda_deriv_or_zero(n: int, prec: int) -> BigReal:
    """Convenience path: exact zero for odd n > 0, else :func:`lambda_deriv`."""
    if isinstance(n, int) and n > 0 and n % 2 == 1:
        return BigReal(mpf(0), prec)
    return lambda_deriv(n, prec)


def gamma_exact(n: int, prec: int) -> GammaValue:
    """Taylor coefficient gamma(n) via the stable F-only formula.

    gamma(n) = (n!/(2n)!) * (32 C(2n,2) F(2n-2) - F(2n)) / 2^(2n-1); the
    integer prefactors are exact, and the working precision is escalated
    until the subtraction's measured exponent gap is covered with ``prec``
    surviving bits.  The recorded gap lands in ``cancel_bits``.
    """
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"gamma_exact requires an integer n >= 1, got {n!r}")
    _require_prec(prec)

    weight = 32 * math.comb(2 * n, 2)  # exact integer
    # (2n)!/n! * 2^(2n-1): exact integer denominator of the prefactor.
    denom = (math.factorial(2 * n) // math.factorial(n)) << (2 * n - 1)

    gap_guess = 4
    for _attempt in range(6):
        wp = prec + 24 + gap_guess
        with workprec(wp + 16):
            f1 = _F_raw(2 * n - 2, wp)
            f2 = _F_raw(2 * n, wp)
            term1 = weight * f1
            diff = term1 - f2
            if diff <= 0:
                raise PrecisionFailure(
                    f"gamma_exact({n}): positivity lost in the subtraction"
                )
            gap = mpmath.mag(term1) - mpmath.mag(diff)
        if gap <= gap_guess:
            with workprec(wp + 16):
                value = diff / mpf(denom)
            with workprec(prec):
                rounded = +value
            if rounded <= 0:
                raise PrecisionFailure(f"gamma_exact({n}) lost positivity")
            return GammaValue(
                n=n,
                value=BigReal(rounded, prec),
                source="exact_integral",
                cancel_bits=int(gap),
            )
        gap_guess = max(gap + 8, gap_guess * 2)
    raise PrecisionFailure(f"gamma_exact({n}) cancellation exceeded the ladder")
