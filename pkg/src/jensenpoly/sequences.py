"""Sequence providers and the persistent value cache.

This module gives every sequence the suite studies a uniform face —
``SequenceProvider`` — carrying a positive-value accessor at arbitrary
precision, an optional exact-integer fast path, and the growth parameters
(A(n), delta(n)) used by the renormalization step:

* ``zeta_gamma_provider``: Taylor coefficients of the completed zeta
  function, backed by an on-disk decimal cache (they are expensive).
* ``partition_provider``: exact p(n) via Euler's pentagonal recurrence.
* ``load_sequence``: user-supplied (n, value) files in CSV or JSON.

The cache is a line-oriented text file, one record per line:

    n=<int> prec=<int> src=<tag> val=<sign><digits>e<exp>

where the value is an integer mantissa scaled by a power of ten, carrying
enough digits that parsing it back at ``prec`` bits is bit-exact.
"""

from __future__ import annotations

import json
import os
import random
import re
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

import mpmath
from mpmath import mpf, workprec

from .asymptotics import AsymParams, partition_params, zeta_params
from .zeta_core import MIN_PREC, BigReal, DomainError, gamma_exact

__all__ = [
    "CacheError",
    "CacheFormatError",
    "CacheRecord",
    "FitResult",
    "GammaCache",
    "SequenceDataError",
    "SequenceProvider",
    "decimal_mantissa",
    "fit_growth_params",
    "load_sequence",
    "partition",
    "partition_provider",
    "render_record",
    "parse_record",
    "zeta_gamma_provider",
]


class CacheError(OSError):
    """Cache file could not be read or written."""


class CacheFormatError(ValueError):
    """A cache line failed to parse; reported with file path and line number."""


class SequenceDataError(ValueError):
    """A sequence file violated the contiguity or positivity contract."""


# ---------------------------------------------------------------------------
# Exact decimal codec
# ---------------------------------------------------------------------------


def _sig_digits_for(prec: int) -> int:
    """Decimal digits that guarantee a bit-exact round trip at ``prec`` bits.

    prec * log10(2) digits identify the value; +8 guard digits make the
    decimal-to-binary correctly-rounded parse land on the original bits.
    """
    return (prec * 30103 + 99999) // 100000 + 8


def _round_div(a: int, b: int) -> int:
    """round(a / b) for integers, b > 0, ties away from zero."""
    if a >= 0:
        return (2 * a + b) // (2 * b)
    return -((-2 * a + b) // (2 * b))


def _trunc_div(a: int, b: int) -> int:
    """a / b truncated toward zero, b > 0."""
    if a >= 0:
        return a // b
    return -((-a) // b)


def decimal_mantissa(x: mpf, digits: int, mode: str = "round") -> Tuple[str, str, int]:
    """Render ``x`` as (sign, mantissa-digits, exponent-of-ten).

    The triple means ``int(mantissa) * 10**exponent`` ~ x, correct to within
    half a unit in the last mantissa digit (``mode="round"``) or truncated
    toward zero (``mode="trunc"``, matching printed-table digit conventions).
    Exact for x = 0 (returns ("+", "0", 0)).
    """
    if digits < 1:
        raise ValueError(f"digits must be >= 1, got {digits}")
    if x == 0:
        return "+", "0", 0
    if hasattr(x, "_mpf_"):
        tup = x._mpf_
    else:
        # exact conversions only: never round through the global context
        if isinstance(x, float):
            tup = mpmath.mpf(x)._mpf_  # binary floats convert exactly
        elif isinstance(x, int):
            with workprec(max(MIN_PREC, x.bit_length() + 8)):
                tup = mpmath.mpf(x)._mpf_
        else:
            raise TypeError(f"decimal_mantissa expects mpf/float/int, got {type(x)!r}")
    sign_bit, man, exp, bc = tup
    man = int(man)  # gmpy2 mpz -> int for uniform bigint arithmetic
    sign = "-" if sign_bit else "+"
    if mode not in ("round", "trunc"):
        raise ValueError(f"mode must be 'round' or 'trunc', got {mode!r}")
    div = _round_div if mode == "round" else _trunc_div
    # x = man * 2^exp with man in [2^(bc-1), 2^bc); choose k with
    # man * 2^exp * 10^k in [10^(digits-1), 10^digits).
    t = bc + exp  # 2^(t-1) <= |x| < 2^t
    k = digits - 1 - ((t - 1) * 30103) // 100000
    for _ in range(3):  # the log10 estimate is off by at most one
        num = man * (10**k if k >= 0 else 1)
        den = 1 if k >= 0 else 10**-k
        if exp >= 0:
            num <<= exp
        else:
            den <<= -exp
        m = div(num, den)
        if m >= 10**digits:
            k -= 1
        elif m < 10 ** (digits - 1):
            k += 1
        else:
            return sign, str(m), -k
    raise ArithmeticError(f"decimal rendering did not settle for {x!r}")


def _parse_decimal(sign: str, mantissa: str, exp10: int, prec: int) -> mpf:
    """Parse the codec triple back to an mpf at ``prec`` bits (correctly rounded)."""
    with workprec(prec):
        return +mpmath.mpf(f"{sign}{mantissa}e{exp10}")


# ---------------------------------------------------------------------------
# Cache records
# ---------------------------------------------------------------------------

_SOURCES = ("exact", "asymptotic", "file")

_RECORD_RE = re.compile(
    r"^n=(\d+) prec=(\d+) src=([a-z_]+) val=([+-])(\d+)e(-?\d+)$"
)


@dataclass(frozen=True)
class CacheRecord:
    """One cached sequence value: index, decimal rendering, precision, origin."""

    n: int
    prec_bits: int
    source: str
    decimal_value: str  # "<sign><digits>e<exp>"

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"CacheRecord.n must be >= 0, got {self.n}")
        if self.prec_bits < MIN_PREC:
            raise ValueError(
                f"CacheRecord.prec_bits must be >= {MIN_PREC}, got {self.prec_bits}"
            )
        if self.source not in _SOURCES:
            raise ValueError(f"CacheRecord.source must be one of {_SOURCES}")
        if not re.match(r"^[+-]\d+e-?\d+$", self.decimal_value):
            raise ValueError(f"malformed decimal_value {self.decimal_value!r}")

    def to_mpf(self, prec: Optional[int] = None) -> mpf:
        m = re.match(r"^([+-])(\d+)e(-?\d+)$", self.decimal_value)
        assert m is not None  # guarded by __post_init__
        return _parse_decimal(m.group(1), m.group(2), int(m.group(3)),
                              prec if prec is not None else self.prec_bits)

    @staticmethod
    def from_value(n: int, value: mpf, prec_bits: int, source: str) -> "CacheRecord":
        sign, digits, exp10 = decimal_mantissa(value, _sig_digits_for(prec_bits))
        return CacheRecord(n=n, prec_bits=prec_bits, source=source,
                           decimal_value=f"{sign}{digits}e{exp10}")


def render_record(record: CacheRecord) -> str:
    """One cache line (no trailing newline)."""
    return (f"n={record.n} prec={record.prec_bits} "
            f"src={record.source} val={record.decimal_value}")


def parse_record(line: str, path: str = "<memory>", lineno: int = 0) -> CacheRecord:
    """Parse one cache line; raise :class:`CacheFormatError` with location on failure."""
    m = _RECORD_RE.match(line.rstrip("\n"))
    if m is None:
        raise CacheFormatError(
            f"{path}:{lineno}: unparseable cache record: {line.rstrip()!r}"
        )
    n, prec, src = int(m.group(1)), int(m.group(2)), m.group(3)
    val = f"{m.group(4)}{m.group(5)}e{m.group(6)}"
    try:
        return CacheRecord(n=n, prec_bits=prec, source=src, decimal_value=val)
    except ValueError as exc:
        raise CacheFormatError(f"{path}:{lineno}: {exc}") from exc


# ---------------------------------------------------------------------------
# Persistent cache
# ---------------------------------------------------------------------------


class GammaCache:
    """Append-only decimal cache for expensive sequence values.

    Concurrency contract: many readers may load the file; all writes go
    through one owning process.  ``put`` appends a single line and flushes;
    ``compact``/``clear`` rewrite atomically via a temp file + rename.
    """

    FILENAME = "zeta_gamma.cache"

    def __init__(self, cache_dir: Union[str, os.PathLike]) -> None:
        self.dir = Path(cache_dir)
        self.path = self.dir / self.FILENAME
        self._records: Dict[int, List[CacheRecord]] = {}
        self._loaded = False
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    # -- loading ------------------------------------------------------------

    def _ensure_loaded(self) -> None:
        if self._loaded:
            return
        self._records = {}
        if self.path.exists():
            try:
                text = self.path.read_text(encoding="ascii")
            except OSError as exc:
                raise CacheError(f"cannot read cache file {self.path}: {exc}") from exc
            for i, line in enumerate(text.splitlines(), start=1):
                if not line.strip():
                    continue
                rec = parse_record(line, path=str(self.path), lineno=i)
                self._records.setdefault(rec.n, []).append(rec)
        self._loaded = True

    # -- queries ------------------------------------------------------------

    def get(self, n: int, prec: int) -> Optional[BigReal]:
        """Serve n at ``prec`` bits from any stored record with prec_bits >= prec.

        The stored decimal is re-parsed at the requested precision (decimal
        parsing is correctly rounded, so down-conversion is deterministic).
        Picks the tightest adequate record for reproducibility.
        """
        with self._lock:
            self._ensure_loaded()
            candidates = [r for r in self._records.get(n, ()) if r.prec_bits >= prec]
            if not candidates:
                self.misses += 1
                return None
            best = min(candidates, key=lambda r: r.prec_bits)
            self.hits += 1
        return BigReal(best.to_mpf(prec), prec)

    def entries(self) -> List[CacheRecord]:
        with self._lock:
            self._ensure_loaded()
            out: List[CacheRecord] = []
            for n in sorted(self._records):
                out.extend(self._records[n])
            return out

    # -- writes -------------------------------------------------------------

    def put(self, record: CacheRecord) -> None:
        """Append one record (single-writer contract; line write + flush)."""
        with self._lock:
            self._ensure_loaded()
            known = self._records.setdefault(record.n, [])
            if record in known:
                return
            known.append(record)
            try:
                self.dir.mkdir(parents=True, exist_ok=True)
                with open(self.path, "a", encoding="ascii") as fh:
                    fh.write(render_record(record) + "\n")
                    fh.flush()
            except OSError as exc:
                raise CacheError(f"cannot append to cache file {self.path}: {exc}") from exc

    def put_value(self, n: int, value: BigReal, source: str = "exact") -> CacheRecord:
        rec = CacheRecord.from_value(n, value.value, value.prec_bits, source)
        self.put(rec)
        return rec

    def compact(self) -> None:
        """Rewrite the file deduplicated and sorted (atomic rename)."""
        with self._lock:
            self._ensure_loaded()
            tmp = self.path.with_suffix(".tmp")
            try:
                self.dir.mkdir(parents=True, exist_ok=True)
                with open(tmp, "w", encoding="ascii") as fh:
                    for n in sorted(self._records):
                        for rec in self._records[n]:
                            fh.write(render_record(rec) + "\n")
                os.replace(tmp, self.path)
            except OSError as exc:
                raise CacheError(f"cannot rewrite cache file {self.path}: {exc}") from exc

    def clear(self) -> None:
        with self._lock:
            self._records = {}
            self._loaded = True
            try:
                if self.path.exists():
                    self.path.unlink()
            except OSError as exc:
                raise CacheError(f"cannot remove cache file {self.path}: {exc}") from exc


# ---------------------------------------------------------------------------
# Providers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SequenceProvider:
    """Uniform accessor for a positive sequence plus its growth parameters.

    ``value_at(n, prec)`` returns the value as a BigReal; ``exact_at`` (when
    present) returns the exact integer and enables the exact-rational
    certification path.  ``params`` carries the (A, delta) formulas used by
    renormalization, or None when unknown (user files without parameters).
    """

    kind: str  # zeta_gamma | partition | modular_file | user_file
    value_at: Callable[[int, int], BigReal]
    exact_at: Optional[Callable[[int], int]]
    params: Optional[AsymParams]
    label: str

    _KINDS = ("zeta_gamma", "partition", "modular_file", "user_file")

    def __post_init__(self) -> None:
        if self.kind not in self._KINDS:
            raise ValueError(f"kind must be one of {self._KINDS}, got {self.kind!r}")


# -- partition numbers ------------------------------------------------------

_PARTITIONS: List[int] = [1]  # p(0) = 1; grown on demand, guarded by a lock
_PARTITIONS_LOCK = threading.Lock()


def partition(n: int) -> int:
    """Exact partition number p(n) by Euler's pentagonal-number recurrence.

    p(n) = sum_{k>=1} (-1)^(k-1) [ p(n - k(3k-1)/2) + p(n - k(3k+1)/2) ].
    """
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"partition requires an integer n >= 0, got {n!r}")
    with _PARTITIONS_LOCK:
        while len(_PARTITIONS) <= n:
            m = len(_PARTITIONS)
            total = 0
            k = 1
            while True:
                g1 = k * (3 * k - 1) // 2
                if g1 > m:
                    break
                sign = 1 if k % 2 == 1 else -1
                total += sign * _PARTITIONS[m - g1]
                g2 = k * (3 * k + 1) // 2
                if g2 <= m:
                    total += sign * _PARTITIONS[m - g2]
                k += 1
            _PARTITIONS.append(total)
        return _PARTITIONS[n]


def _int_to_bigreal(value: int, prec: int) -> BigReal:
    with workprec(prec):
        return BigReal(+mpf(value), prec)


def partition_provider() -> SequenceProvider:
    """Provider for p(n): exact integers plus the two-term growth parameters."""
    return SequenceProvider(
        kind="partition",
        value_at=lambda n, prec: _int_to_bigreal(partition(n), prec),
        exact_at=partition,
        params=partition_params(),
        label="partition",
    )


# -- zeta Taylor coefficients -----------------------------------------------


def zeta_gamma_provider(
    cache_dir: Optional[Union[str, os.PathLike]] = None,
) -> SequenceProvider:
    """Provider for the xi Taylor coefficients gamma(n), cache-backed.

    ``value_at`` consults the cache first, computes via
    :func:`jensenpoly.zeta_core.gamma_exact` on a miss, and stores the result.
    With ``cache_dir=None`` values are computed fresh each call (the in-process
    quadrature memo still applies).
    """
    cache = GammaCache(cache_dir) if cache_dir is not None else None

    def value_at(n: int, prec: int) -> BigReal:
        if cache is not None:
            hit = cache.get(n, prec)
            if hit is not None:
                return hit
        value = gamma_exact(n, prec).value
        if cache is not None:
            cache.put_value(n, value, source="exact")
        return value

    provider = SequenceProvider(
        kind="zeta_gamma",
        value_at=value_at,
        exact_at=None,
        params=zeta_params(),
        label="zeta-gamma",
    )
    # expose the cache for stats/maintenance without widening the dataclass
    object.__setattr__(provider, "cache", cache)
    return provider


# -- user-supplied sequences --------------------------------------------------


def _read_pairs_csv(path: Path) -> List[Tuple[int, str]]:
    import csv as _csv

    pairs: List[Tuple[int, str]] = []
    with open(path, newline="", encoding="utf-8") as fh:
        for i, row in enumerate(_csv.reader(fh), start=1):
            if not row or all(not c.strip() for c in row):
                continue
            if len(row) != 2:
                raise SequenceDataError(
                    f"{path}:{i}: expected two columns (n,value), got {len(row)}"
                )
            a, b = row[0].strip(), row[1].strip()
            if i == 1 and not a.lstrip("+-").isdigit():
                continue  # header row
            try:
                pairs.append((int(a), b))
            except ValueError as exc:
                raise SequenceDataError(f"{path}:{i}: bad index {a!r}") from exc
    return pairs


def _read_pairs_json(path: Path) -> List[Tuple[int, str]]:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, list):
        raise SequenceDataError(f"{path}: expected a JSON array of [n, value] pairs")
    pairs: List[Tuple[int, str]] = []
    for i, item in enumerate(data):
        if not (isinstance(item, (list, tuple)) and len(item) == 2):
            raise SequenceDataError(f"{path}: element {i} is not an [n, value] pair")
        n, v = item
        if not isinstance(n, int):
            raise SequenceDataError(f"{path}: element {i} has non-integer index {n!r}")
        pairs.append((n, repr(v) if isinstance(v, (int, float)) else str(v)))
    return pairs


def load_sequence(
    path: Union[str, os.PathLike],
    fmt: str = "csv",
    params: Optional[AsymParams] = None,
    kind: str = "user_file",
) -> SequenceProvider:
    """Load a positive sequence from a file of (n, value) records.

    Indices must be contiguous from the smallest supplied n; every value must
    be positive.  ``params`` (growth data for renormalization) may be supplied
    by the caller, e.g. from :func:`jensenpoly.asymptotics.modular_params`.
    """
    p = Path(path)
    if fmt == "csv":
        pairs = _read_pairs_csv(p)
    elif fmt == "json":
        pairs = _read_pairs_json(p)
    else:
        raise ValueError(f"fmt must be 'csv' or 'json', got {fmt!r}")
    if not pairs:
        raise SequenceDataError(f"{p}: no records")

    pairs.sort(key=lambda t: t[0])
    n0 = pairs[0][0]
    values: Dict[int, str] = {}
    for offset, (n, text) in enumerate(pairs):
        if n != n0 + offset:
            raise SequenceDataError(
                f"{p}: index gap — expected n={n0 + offset}, found n={n}"
            )
        try:
            frac = Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise SequenceDataError(f"{p}: unparseable value at n={n}: {text!r}") from exc
        if frac <= 0:
            raise SequenceDataError(
                f"{p}: non-positive value at n={n}: {text} (sequence must be positive)"
            )
        values[n] = text
    n_hi = n0 + len(pairs) - 1

    all_int = all(Fraction(t).denominator == 1 for t in values.values())
    exact_at: Optional[Callable[[int], int]] = None
    if all_int:
        ints = {n: int(Fraction(t)) for n, t in values.items()}

        def exact_at(n: int) -> int:
            if n not in ints:
                raise DomainError(f"sequence defined on [{n0}, {n_hi}], got n={n}")
            return ints[n]

    def value_at(n: int, prec: int) -> BigReal:
        if n not in values:
            raise DomainError(f"sequence defined on [{n0}, {n_hi}], got n={n}")
        with workprec(prec):
            frac = Fraction(values[n])
            return BigReal(mpf(frac.numerator) / frac.denominator, prec)

    return SequenceProvider(
        kind=kind,
        value_at=value_at,
        exact_at=exact_at,
        params=params,
        label=p.name,
    )


# ---------------------------------------------------------------------------
# Growth-parameter fit (diagnostics for user sequences)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FitResult:
    """Least-squares fit of log(alpha(n+j)/alpha(n)) ~ A j - delta^2 j^2.

    Diagnostics only: a fit proves nothing about the sequence's asymptotics.
    ``hypotheses_evident`` is False when the fitted delta^2 is not positive.
    """

    A: float
    delta_sq: float
    delta: Optional[float]
    rms_residual: float
    hypotheses_evident: bool


def fit_growth_params(
    seq: SequenceProvider, n: int, prec: int = 128, j_max: int = 8
) -> FitResult:
    """Fit empirical (A, delta) at shift n from the next ``j_max`` ratios."""
    import numpy as np

    if j_max < 2:
        raise ValueError("need at least two ratio points to fit two parameters")
    with workprec(prec + 16):
        base = seq.value_at(n, prec + 16).value
        ys = []
        for j in range(1, j_max + 1):
            ratio = seq.value_at(n + j, prec + 16).value / base
            ys.append(float(mpmath.log(ratio)))
    js = np.arange(1, j_max + 1, dtype=float)
    design = np.column_stack([js, -(js**2)])
    coef, *_ = np.linalg.lstsq(design, np.array(ys), rcond=None)
    a_fit, delta_sq = float(coef[0]), float(coef[1])
    resid = np.array(ys) - design @ coef
    rms = float(np.sqrt(np.mean(resid**2)))
    positive = delta_sq > 0
    return FitResult(
        A=a_fit,
        delta_sq=delta_sq,
        delta=float(delta_sq**0.5) if positive else None,
        rms_residual=rms,
        hypotheses_evident=positive,
    )
