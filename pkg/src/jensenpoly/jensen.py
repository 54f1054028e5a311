"""Jensen polynomials, Hermite targets, renormalization, and hyperbolicity.

The pipeline this module implements:

* ``jensen_poly``        — J^{d,n}(X) = sum_j binom(d,j) alpha(n+j) X^j,
                           exact rationals when the sequence is exact.
* ``hermite``            — H_d(X) from H_{d+1} = X H_d - 2d H_{d-1}
                           (generating function e^{-t^2 + Xt}).
* ``generalized_hermite``— H_{F,m}(X) = m! sum_k (-1)^(m-k) c_{m-k} X^k / k!.
* ``renormalize``        — hat J^{d,n}(X) = (delta^-d / alpha(n)) *
                           J^{d,n}((delta X - 1) / e^A), by exact binomial
                           expansion of the affine substitution.
* ``is_hyperbolic``      — certified real-rootedness via the Hankel matrix of
                           Newton power sums: exact integer minors
                           (fraction-free) on rational input, interval
                           arithmetic on floating input, Sturm fallback for
                           degenerate exact chains.
* ``find_N``             — least N with every shift in [N, n_max] hyperbolic.
* ``convergence_report`` / ``effective_check_d4`` — table diagnostics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, Union

import mpmath
from mpmath import mpf, workprec

from .asymptotics import zeta_A_delta
from .zeta_core import MIN_PREC, BigReal, DomainError, PrecisionFailure
from .sequences import SequenceProvider

__all__ = [
    "ConvergenceRow",
    "DegenerateChainError",
    "EffectiveReport",
    "EffectiveRow",
    "FindNResult",
    "HyperbolicityCertificate",
    "Poly",
    "RationalPoly",
    "cauchy_bound",
    "certify_renormalized",
    "convergence_report",
    "effective_check_d4",
    "find_N",
    "generalized_hermite",
    "hermite",
    "is_hyperbolic",
    "jensen_poly",
    "poly_from_rational",
    "renormalize",
    "squarefree_part",
    "sturm_count",
]

DEFAULT_LADDER: Tuple[int, ...] = (128, 256, 512, 1024)


class DegenerateChainError(ArithmeticError):
    """A Sturm remainder vanished identically (non-squarefree input)."""


# ---------------------------------------------------------------------------
# Polynomial containers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Poly:
    """Dense real-coefficient polynomial; coeffs[i] multiplies X^i."""

    coeffs: Tuple[mpf, ...]
    prec_bits: int

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("Poly needs at least one coefficient")
        if self.prec_bits < MIN_PREC:
            raise ValueError(f"prec_bits must be >= {MIN_PREC}")
        if len(self.coeffs) > 1 and self.coeffs[-1] == 0:
            raise ValueError("leading coefficient is zero; normalize the degree first")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x) -> mpf:
        acc = mpf(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


@dataclass(frozen=True)
class RationalPoly:
    """Exact-rational polynomial; coeffs[i] multiplies X^i."""

    coeffs: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("RationalPoly needs at least one coefficient")
        if len(self.coeffs) > 1 and self.coeffs[-1] == 0:
            raise ValueError("leading coefficient is zero; normalize the degree first")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def _trim(coeffs: Sequence) -> list:
    out = list(coeffs)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def make_poly(coeffs: Sequence, prec_bits: int) -> Poly:
    """Normalize (trim zero leading coefficients) and build a Poly."""
    with workprec(prec_bits):
        vals = tuple(+mpf(c) if not isinstance(c, mpf) else +c for c in coeffs)
    return Poly(coeffs=tuple(_trim(vals)), prec_bits=prec_bits)


def make_rational_poly(coeffs: Sequence) -> RationalPoly:
    return RationalPoly(coeffs=tuple(_trim([Fraction(c) for c in coeffs])))


def poly_from_rational(rp: RationalPoly, prec: int) -> Poly:
    """Round an exact polynomial to a Poly at ``prec`` bits."""
    with workprec(prec):
        vals = [+(mpf(c.numerator) / c.denominator) for c in rp.coeffs]
    return Poly(coeffs=tuple(vals), prec_bits=prec)


def _mpf_to_fraction(x: mpf) -> Fraction:
    """Exact dyadic value of an mpf."""
    sign, man, exp, _bc = x._mpf_
    man = int(man)
    if man == 0:
        return Fraction(0)
    val = Fraction(man, 1) * (Fraction(2) ** exp)
    return -val if sign else val


def rational_from_poly(p: Poly) -> RationalPoly:
    """Exact dyadic rational lift of a Poly (mpf coefficients are exact binary)."""
    return make_rational_poly([_mpf_to_fraction(c) for c in p.coeffs])


# ---------------------------------------------------------------------------
# Jensen polynomial and Hermite targets
# ---------------------------------------------------------------------------


def jensen_poly(
    seq: SequenceProvider, d: int, n: int, prec: Optional[int] = None
) -> Union[Poly, RationalPoly]:
    """J^{d,n}(X) = sum_{j=0}^{d} binom(d,j) alpha(n+j) X^j.

    Returns a :class:`RationalPoly` when the sequence has an exact-integer
    path, otherwise a :class:`Poly` at ``prec`` bits (default 192).
    """
    if d < 1:
        raise DomainError(f"jensen_poly requires degree d >= 1, got {d}")
    if n < 0:
        raise DomainError(f"jensen_poly requires shift n >= 0, got {n}")
    if seq.exact_at is not None:
        coeffs = [Fraction(math.comb(d, j) * seq.exact_at(n + j)) for j in range(d + 1)]
        return RationalPoly(coeffs=tuple(coeffs))
    wp = prec if prec is not None else 192
    with workprec(wp + 8):
        vals = [seq.value_at(n + j, wp + 8).value * math.comb(d, j) for j in range(d + 1)]
    with workprec(wp):
        return Poly(coeffs=tuple(+v for v in vals), prec_bits=wp)


def hermite(d: int) -> RationalPoly:
    """H_d(X) with exact integer coefficients via H_{d+1} = X H_d - 2d H_{d-1}."""
    if d < 0:
        raise DomainError(f"hermite requires d >= 0, got {d}")
    h_prev = [Fraction(1)]            # H_0
    if d == 0:
        return RationalPoly(coeffs=(Fraction(1),))
    h_cur = [Fraction(0), Fraction(1)]  # H_1 = X
    for k in range(1, d):
        nxt = [Fraction(0)] + h_cur                      # X * H_k
        for i, c in enumerate(h_prev):                   # - 2k H_{k-1}
            nxt[i] -= 2 * k * c
        h_prev, h_cur = h_cur, nxt
    return RationalPoly(coeffs=tuple(h_cur))


def generalized_hermite(c: Sequence, m: int) -> Union[RationalPoly, Poly]:
    """H_{F,m}(X) = m! * sum_{k=0}^{m} (-1)^(m-k) c_{m-k} X^k / k!.

    ``c`` are the Taylor coefficients of the generating weight F; exact input
    (ints/Fractions) yields a RationalPoly, floats an mpf Poly at 128 bits.
    """
    if m < 0:
        raise DomainError(f"generalized_hermite requires m >= 0, got {m}")
    if len(c) < m + 1:
        raise DomainError(
            f"generalized_hermite needs at least m+1={m + 1} coefficients, got {len(c)}"
        )
    exact = all(isinstance(x, (int, Fraction)) for x in c[: m + 1])
    fact_m = math.factorial(m)
    if exact:
        coeffs = [
            Fraction((-1) ** (m - k) * fact_m, math.factorial(k)) * Fraction(c[m - k])
            for k in range(m + 1)
        ]
        return make_rational_poly(coeffs)
    prec = 128
    with workprec(prec):
        coeffs_f = [
            mpf((-1) ** (m - k)) * fact_m / math.factorial(k) * mpf(c[m - k])
            for k in range(m + 1)
        ]
    return make_poly(coeffs_f, prec)


# ---------------------------------------------------------------------------
# Renormalization
# ---------------------------------------------------------------------------


def renormalize(seq: SequenceProvider, d: int, n: int, prec: int = 192) -> Poly:
    """hat J^{d,n}(X) = (delta(n)^-d / alpha(n)) * J^{d,n}((delta(n) X - 1)/e^{A(n)}).

    The affine substitution is expanded exactly with binomial coefficients
    (no sampling/refitting), at a working precision padded by d*|log2 delta|
    to absorb the alternating cancellation near X = 0.
    """
    if seq.params is None:
        raise DomainError(
            f"sequence {seq.label!r} has no growth parameters; supply AsymParams"
        )
    params = seq.params
    if n < params.n_min:
        raise DomainError(
            f"renormalize needs n >= {params.n_min} for {seq.label!r}, got {n}"
        )
    if d < 1:
        raise DomainError(f"renormalize requires degree d >= 1, got {d}")

    probe = params.delta_of_n(n, 64)
    pad = d * max(0, -int(mpmath.mag(probe))) + 48
    wp = prec + pad
    with workprec(wp):
        a_val = params.A_of_n(n, wp)
        delta = params.delta_of_n(n, wp)
        if seq.exact_at is not None:
            alpha = [mpf(seq.exact_at(n + j)) for j in range(d + 1)]
        else:
            alpha = [seq.value_at(n + j, wp).value for j in range(d + 1)]
        e_neg_a = mpmath.exp(-a_val)
        # J((delta X - 1)/e^A) = sum_j c_j e^{-Aj} (delta X - 1)^j with
        # c_j = binom(d,j) alpha(n+j); expand (delta X - 1)^j binomially.
        out = [mpf(0)] * (d + 1)
        ea_pow = mpf(1)
        for j in range(d + 1):
            cj = alpha[j] * math.comb(d, j) * ea_pow
            dpow = mpf(1)
            for i in range(j + 1):
                term = cj * math.comb(j, i) * dpow
                if (j - i) % 2:
                    term = -term
                out[i] += term
                dpow *= delta
            ea_pow *= e_neg_a
        scale = delta ** (-d) / alpha[0]
        coeffs = [scale * v for v in out]
    with workprec(prec):
        return Poly(coeffs=tuple(+c for c in coeffs), prec_bits=prec)


# ---------------------------------------------------------------------------
# Hyperbolicity certification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HyperbolicityCertificate:
    """Outcome of a real-rootedness check.

    margin: the smallest certified leading principal minor (positive when
    hyperbolic, the negative witness otherwise, 0 for degenerate/Sturm
    decisions), as a low-precision BigReal for reporting.
    """

    verdict: str  # hyperbolic | not_hyperbolic | indeterminate
    method: str   # hermite_hankel_exact | hermite_hankel_interval | sturm
    margin: BigReal
    degree: int

    _VERDICTS = ("hyperbolic", "not_hyperbolic", "indeterminate")
    _METHODS = ("hermite_hankel_exact", "hermite_hankel_interval", "sturm")

    def __post_init__(self) -> None:
        if self.verdict not in self._VERDICTS:
            raise ValueError(f"bad verdict {self.verdict!r}")
        if self.method not in self._METHODS:
            raise ValueError(f"bad method {self.method!r}")
        if self.verdict == "indeterminate" and self.method != "hermite_hankel_interval":
            raise ValueError("only the interval method may return indeterminate")


def _margin_big(x, prec: int = MIN_PREC) -> BigReal:
    with workprec(prec):
        return BigReal(+mpf(x), prec)


def _int_coeffs(rp: RationalPoly) -> List[int]:
    """Clear denominators and content; hyperbolicity is scale-invariant."""
    den_lcm = 1
    for c in rp.coeffs:
        den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    ints = [int(c * den_lcm) for c in rp.coeffs]
    g = 0
    for v in ints:
        g = math.gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def _scaled_power_sums(a: List[int], count: int) -> List[int]:
    """t_k = s_k * a_d^k for k = 0..count-1, exact integers via Newton.

    a: integer coefficients, a[i] multiplies X^i, a[-1] != 0.
    """
    d = len(a) - 1
    ad = a[d]
    t = [d]  # t_0 = s_0 = d
    ad_pows = [1]
    for _ in range(count):
        ad_pows.append(ad_pows[-1] * ad)
    for k in range(1, count):
        if k <= d:
            acc = k * a[d - k] * ad_pows[k - 1]
            for i in range(1, k):
                acc += a[d - i] * ad_pows[i - 1] * t[k - i]
            t.append(-acc)
        else:
            acc = 0
            for i in range(1, d + 1):
                acc += a[d - i] * ad_pows[i - 1] * t[k - i]
            t.append(-acc)
    return t


def _leading_minors_int(t: List[int], d: int) -> List[int]:
    """Leading principal minors of the d x d Hankel (t_{i+j}) via Bareiss.

    Stops early after a non-positive pivot (the corresponding minor value is
    still returned as the last element).
    """
    M = [[t[i + j] for j in range(d)] for i in range(d)]
    minors: List[int] = []
    prev = 1
    for k in range(d):
        pivot = M[k][k]
        minors.append(pivot)
        if pivot <= 0:
            break
        for i in range(k + 1, d):
            for j in range(k + 1, d):
                M[i][j] = (M[i][j] * pivot - M[i][k] * M[k][j]) // prev
        prev = pivot
    return minors


def _poly_derivative_frac(c: List[Fraction]) -> List[Fraction]:
    return [c[i] * i for i in range(1, len(c))] or [Fraction(0)]


def _poly_divmod_frac(
    num: List[Fraction], den: List[Fraction]
) -> Tuple[List[Fraction], List[Fraction]]:
    num = num[:]
    d_deg = len(den) - 1
    lead = den[-1]
    if lead == 0:
        raise ZeroDivisionError("division by zero polynomial")
    q = [Fraction(0)] * max(1, len(num) - d_deg)
    while len(num) - 1 >= d_deg and any(num):
        shift = len(num) - 1 - d_deg
        factor = num[-1] / lead
        q[shift] = factor
        for i in range(d_deg + 1):
            num[shift + i] -= factor * den[i]
        num = _trim(num)
        if len(num) == 1 and num[0] == 0:
            break
    return _trim(q), _trim(num)


def _poly_gcd_frac(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    a, b = _trim(a), _trim(b)
    while not (len(b) == 1 and b[0] == 0):
        _, r = _poly_divmod_frac(a, b)
        a, b = b, r
    if a[-1] != 0:
        a = [c / a[-1] for c in a]  # monic for determinism
    return a


def squarefree_part(p: Union[RationalPoly, Poly]) -> RationalPoly:
    """p / gcd(p, p') — same root set, all roots simple (exact arithmetic)."""
    rp = p if isinstance(p, RationalPoly) else rational_from_poly(p)
    c = list(rp.coeffs)
    if len(c) <= 2:
        return make_rational_poly(c)
    g = _poly_gcd_frac(c, _poly_derivative_frac(c))
    if len(g) == 1:
        return make_rational_poly(c)
    q, r = _poly_divmod_frac(c, g)
    assert len(r) == 1 and r[0] == 0, "gcd division must be exact"
    return make_rational_poly(q)


def cauchy_bound(p: Union[RationalPoly, Poly]) -> Fraction:
    """1 + max |a_i / a_d|: all real roots lie in (-B, B]."""
    rp = p if isinstance(p, RationalPoly) else rational_from_poly(p)
    lead = rp.coeffs[-1]
    if lead == 0:
        raise ValueError("zero leading coefficient")
    m = max((abs(c / lead) for c in rp.coeffs[:-1]), default=Fraction(0))
    return 1 + m


def sturm_count(p: Union[RationalPoly, Poly], lo, hi) -> int:
    """Number of distinct real roots of squarefree ``p`` in (lo, hi].

    Exact rational Sturm chain.  Raises :class:`DegenerateChainError` when a
    remainder vanishes identically (input not squarefree); callers deflate
    with :func:`squarefree_part` first.
    """
    rp = p if isinstance(p, RationalPoly) else rational_from_poly(p)
    lo, hi = Fraction(lo), Fraction(hi)
    if lo >= hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    chain: List[List[Fraction]] = [list(rp.coeffs)]
    if rp.degree >= 1:
        chain.append(_poly_derivative_frac(list(rp.coeffs)))
        while len(chain[-1]) > 1:
            _, r = _poly_divmod_frac(chain[-2], chain[-1])
            if len(r) == 1 and r[0] == 0:
                raise DegenerateChainError(
                    "Sturm remainder vanished identically; input has repeated roots"
                )
            chain.append([-c for c in r])

    def _eval(c: List[Fraction], x: Fraction) -> Fraction:
        acc = Fraction(0)
        for v in reversed(c):
            acc = acc * x + v
        return acc

    def _variations(x: Fraction) -> int:
        signs = []
        for c in chain:
            v = _eval(c, x)
            if v != 0:
                signs.append(1 if v > 0 else -1)
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    if _eval(list(rp.coeffs), lo) == 0 or _eval(list(rp.coeffs), hi) == 0:
        raise ValueError("interval endpoints must not be roots")
    return _variations(lo) - _variations(hi)


def _exact_certificate(rp: RationalPoly) -> HyperbolicityCertificate:
    d = rp.degree
    if d == 0:
        return HyperbolicityCertificate("hyperbolic", "hermite_hankel_exact",
                                        _margin_big(1), 0)
    a = _int_coeffs(rp)
    t = _scaled_power_sums(a, 2 * d - 1)
    minors = _leading_minors_int(t, d)
    if all(m > 0 for m in minors) and len(minors) == d:
        return HyperbolicityCertificate(
            "hyperbolic", "hermite_hankel_exact", _margin_big(min(minors)), d
        )
    last = minors[-1]
    if last < 0:
        return HyperbolicityCertificate(
            "not_hyperbolic", "hermite_hankel_exact", _margin_big(last), d
        )
    # A zero minor: decide on the squarefree part via an exact Sturm count.
    q = squarefree_part(rp)
    if q.degree == d:
        # squarefree and Hankel not positive definite => a non-real root
        return HyperbolicityCertificate(
            "not_hyperbolic", "hermite_hankel_exact", _margin_big(0), d
        )
    bound = cauchy_bound(q)
    real_roots = sturm_count(q, -bound, bound)
    verdict = "hyperbolic" if real_roots == q.degree else "not_hyperbolic"
    return HyperbolicityCertificate(verdict, "sturm", _margin_big(0), d)


def _interval_certificate(p: Poly) -> HyperbolicityCertificate:
    d = p.degree
    if d == 0:
        return HyperbolicityCertificate("hyperbolic", "hermite_hankel_interval",
                                        _margin_big(1), 0)
    iv = mpmath.iv
    saved = iv.prec
    try:
        iv.prec = p.prec_bits + 32
        a = [iv.mpf(c) for c in p.coeffs]  # exact point intervals
        ad = a[d]
        if 0 in ad:
            return HyperbolicityCertificate(
                "indeterminate", "hermite_hankel_interval", _margin_big(0), d
            )
        count = 2 * d - 1
        ad_pows = [iv.mpf(1)]
        for _ in range(count):
            ad_pows.append(ad_pows[-1] * ad)
        t = [iv.mpf(d)]
        for k in range(1, count):
            if k <= d:
                acc = k * a[d - k] * ad_pows[k - 1]
                for i in range(1, k):
                    acc += a[d - i] * ad_pows[i - 1] * t[k - i]
            else:
                acc = iv.mpf(0)
                for i in range(1, d + 1):
                    acc += a[d - i] * ad_pows[i - 1] * t[k - i]
            t.append(-acc)
        # Gaussian elimination; minors are products of accepted pivots.
        M = [[t[i + j] for j in range(d)] for i in range(d)]
        minor = iv.mpf(1)
        margin: Optional[mpf] = None
        for k in range(d):
            pivot = M[k][k]
            minor = minor * pivot
            if minor.a > 0:
                m_lo = mpf(minor.a)
                if margin is None or m_lo < margin:
                    margin = m_lo
            elif minor.b < 0:
                return HyperbolicityCertificate(
                    "not_hyperbolic", "hermite_hankel_interval",
                    _margin_big(mpf(minor.b)), d,
                )
            else:
                return HyperbolicityCertificate(
                    "indeterminate", "hermite_hankel_interval", _margin_big(0), d
                )
            if pivot.a <= 0:  # minor certified positive requires pivot > 0 too
                return HyperbolicityCertificate(
                    "indeterminate", "hermite_hankel_interval", _margin_big(0), d
                )
            for i in range(k + 1, d):
                factor = M[i][k] / pivot
                for j in range(k, d):
                    M[i][j] = M[i][j] - factor * M[k][j]
        return HyperbolicityCertificate(
            "hyperbolic", "hermite_hankel_interval",
            _margin_big(margin if margin is not None else mpf(1)), d,
        )
    finally:
        iv.prec = saved


def is_hyperbolic(p: Union[Poly, RationalPoly]) -> HyperbolicityCertificate:
    """Certified test that every root of p is real.

    Hermite's criterion: p (degree d) is real-rooted iff the d x d Hankel
    matrix of Newton power sums is positive semidefinite.  Exact input gets
    integer fraction-free minors (definitive verdict, Sturm fallback for
    degenerate chains); floating input gets interval-certified minors and may
    return ``indeterminate``, in which case callers escalate precision.
    """
    if isinstance(p, RationalPoly):
        return _exact_certificate(p)
    if isinstance(p, Poly):
        return _interval_certificate(p)
    raise TypeError(f"is_hyperbolic expects Poly or RationalPoly, got {type(p)!r}")


def certify_renormalized(
    seq: SequenceProvider,
    d: int,
    n: int,
    ladder: Sequence[int] = DEFAULT_LADDER,
) -> HyperbolicityCertificate:
    """Certify hat J^{d,n}; on indeterminate, rebuild at the next ladder precision."""
    cert: Optional[HyperbolicityCertificate] = None
    for prec in ladder:
        cert = is_hyperbolic(renormalize(seq, d, n, prec))
        if cert.verdict != "indeterminate":
            return cert
    assert cert is not None
    return cert


# ---------------------------------------------------------------------------
# Threshold search and reports
# ---------------------------------------------------------------------------


class FindNResult(int):
    """Smallest N with every shift in [N, n_max] hyperbolic; int-compatible.

    ``last_failing`` is the largest non-hyperbolic shift (None when all
    shifts scanned were hyperbolic).
    """

    last_failing: Optional[int]
    n_max: int

    def __new__(cls, value: int, last_failing: Optional[int], n_max: int):
        obj = super().__new__(cls, value)
        obj.last_failing = last_failing
        obj.n_max = n_max
        return obj

    def __repr__(self) -> str:
        return (f"FindNResult({int(self)}, last_failing={self.last_failing}, "
                f"n_max={self.n_max})")


def find_N(
    seq: SequenceProvider,
    d: int,
    n_max: int,
    ladder: Sequence[int] = DEFAULT_LADDER,
) -> FindNResult:
    """Scan n = 0..n_max; return the least N with [N, n_max] all hyperbolic.

    Uses the exact-rational path whenever the sequence is exact; an
    indeterminate verdict after the full ladder raises
    :class:`~jensenpoly.zeta_core.PrecisionFailure`.
    """
    if d < 1:
        raise DomainError(f"find_N requires d >= 1, got {d}")
    if n_max < 0:
        raise DomainError(f"find_N requires n_max >= 0, got {n_max}")
    last_failing: Optional[int] = None
    for n in range(n_max + 1):
        if seq.exact_at is not None:
            cert = is_hyperbolic(jensen_poly(seq, d, n))
        else:
            cert = certify_renormalized(seq, d, n, ladder) if (
                seq.params is not None and n >= seq.params.n_min
            ) else is_hyperbolic(jensen_poly(seq, d, n, prec=ladder[-1]))
        if cert.verdict == "indeterminate":
            raise PrecisionFailure(
                f"find_N: indeterminate at d={d}, n={n} after ladder {tuple(ladder)}"
            )
        if cert.verdict == "not_hyperbolic":
            last_failing = n
    return FindNResult(0 if last_failing is None else last_failing + 1,
                       last_failing, n_max)


@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    coeffs: Tuple[mpf, ...]
    sup_distance: mpf


def convergence_report(
    seq: SequenceProvider, d: int, n_list: Iterable[int], prec: int = 192
) -> List[ConvergenceRow]:
    """Renormalized coefficients and sup-distance to the degree-d Hermite target."""
    target = hermite(d)
    h = [mpf(c.numerator) / c.denominator for c in target.coeffs]
    rows: List[ConvergenceRow] = []
    for n in n_list:
        poly = renormalize(seq, d, n, prec)
        with workprec(prec):
            cs = list(poly.coeffs) + [mpf(0)] * (d + 1 - len(poly.coeffs))
            dist = max(abs(cs[i] - h[i]) for i in range(d + 1))
        rows.append(ConvergenceRow(n=n, coeffs=tuple(cs), sup_distance=dist))
    return rows


@dataclass(frozen=True)
class EffectiveRow:
    n: int
    beta: Tuple[mpf, ...]  # beta_0 .. beta_4
    delta: mpf
    checks: Tuple[bool, ...]  # the five printed inequalities, beta_3/1/4/2/0 order

    @property
    def all_hold(self) -> bool:
        return all(self.checks)


@dataclass(frozen=True)
class EffectiveReport:
    rows: Tuple[EffectiveRow, ...]
    first_all_hold: Optional[int]


_D4_CONSTS = ("28", "145.70", "16.05", "16.20", "16.01")


def effective_check_d4(
    n_values: Iterable[int],
    seq: Optional[SequenceProvider] = None,
    prec: int = 192,
) -> EffectiveReport:
    """Check the degree-4 inequality template on the zeta sequence.

    For each n >= 100 verifies, with beta_k the coefficients of hat J^{4,n}
    and delta = delta(n):

        0 < beta_3 < 28 delta          -145.70 delta < beta_1 < 0
        1 - 16.05 delta^2 < beta_4 < 1
        -12 < beta_2 < -12 + 16.20 delta
        12 - 16.01 delta < beta_0 < 12
    """
    if seq is None:
        from .sequences import zeta_gamma_provider

        seq = zeta_gamma_provider(None)
    if seq.params is None:
        raise DomainError(f"sequence {seq.label!r} has no growth parameters")
    c28, c1457, c1605, c1620, c1601 = (mpf(s) for s in _D4_CONSTS)
    rows: List[EffectiveRow] = []
    for n in n_values:
        if n < 100:
            raise DomainError(f"effective_check_d4 is stated for n >= 100, got {n}")
        poly = renormalize(seq, 4, n, prec)
        with workprec(prec):
            delta = seq.params.delta_of_n(n, prec)
            b = list(poly.coeffs)
            checks = (
                bool(0 < b[3] < c28 * delta),
                bool(-c1457 * delta < b[1] < 0),
                bool(1 - c1605 * delta**2 < b[4] < 1),
                bool(-12 < b[2] < -12 + c1620 * delta),
                bool(12 - c1601 * delta < b[0] < 12),
            )
        rows.append(EffectiveRow(n=n, beta=tuple(b), delta=delta, checks=checks))
    # first n starting the trailing run where every row holds
    first_suffix: Optional[int] = None
    for row in rows:
        if row.all_hold:
            if first_suffix is None:
                first_suffix = row.n
        else:
            first_suffix = None
    return EffectiveReport(rows=tuple(rows), first_all_hold=first_suffix)
