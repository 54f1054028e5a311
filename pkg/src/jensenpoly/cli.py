"""Command-line interface.

Subcommands
-----------
gamma      exact and asymptotic Taylor-coefficient values and their ratio
jensen     raw or renormalized Jensen polynomial coefficients
sweep      certified hyperbolicity sweep over (degree, shift) ranges
find-n     least shift threshold N(d) for the partition sequence
effective  degree-4 inequality template report (zeta sequence, n >= 100)
tables     reproduce the reference tables (gamma / jensen / N(d) groups)
cache      inspect or clear the persistent value cache

Global flags (accepted before or after the subcommand; the later wins):
``--prec <bits>``, ``--format table|csv|json``, ``--cache-dir <path>``,
``--jobs <k>``.  The cache directory may also come from the environment
variable ``JENSENPOLY_CACHE_DIR``.

Exit codes: 0 success / all certified hyperbolic; 1 counterexample found;
2 indeterminate or precision failure; 3 usage error.
"""

from __future__ import annotations

import argparse
import csv as _csv
import io
import json
import os
import sys
import tempfile
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import mpmath
from mpmath import mpf, workprec

from . import __version__
from .asymptotics import gamma_hat
from .jensen import (
    DEFAULT_LADDER,
    HyperbolicityCertificate,
    certify_renormalized,
    effective_check_d4,
    find_N,
    is_hyperbolic,
    jensen_poly,
    renormalize,
)
from .sequences import (
    CacheRecord,
    GammaCache,
    decimal_mantissa,
    partition_provider,
    zeta_gamma_provider,
)
from .zeta_core import (
    MIN_PREC,
    DomainError,
    PrecisionFailure,
    gamma_exact,
)

__all__ = ["main", "RunConfig"]

ENV_CACHE_DIR = "JENSENPOLY_CACHE_DIR"

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_INDETERMINATE = 2
EXIT_USAGE = 3


@dataclass(frozen=True)
class RunConfig:
    """Resolved invocation settings shared by all subcommands."""

    precision_bits: int
    cache_dir: Optional[str]
    output_format: str
    parallelism: int

    def __post_init__(self) -> None:
        if self.precision_bits < MIN_PREC:
            raise ValueError(f"precision must be >= {MIN_PREC} bits")
        if self.parallelism < 1:
            raise ValueError("parallelism must be >= 1")
        if self.output_format not in ("table", "csv", "json"):
            raise ValueError(f"unknown output format {self.output_format!r}")


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures mapped to exit code 3."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


# ---------------------------------------------------------------------------
# Formatting helpers (displayed digits are truncated, matching the reference
# tables, so repeated runs diff cleanly against them)
# ---------------------------------------------------------------------------


def _sci_trunc(x: mpf, sig: int) -> str:
    """Scientific notation with ``sig`` significant digits, truncated."""
    if x == 0:
        return "0." + "0" * (sig - 1) + "e0"
    sign, digits, exp10 = decimal_mantissa(x, sig, mode="trunc")
    e = exp10 + len(digits) - 1
    body = digits[0] + "." + digits[1:] if len(digits) > 1 else digits[0]
    return f"{'-' if sign == '-' else ''}{body}e{e}"


def _fixed_trunc(x: mpf, places: int) -> str:
    """Fixed-point with ``places`` decimals, truncated toward zero."""
    sign_bit, man, exp, _bc = x._mpf_
    man = int(man)
    if man == 0:
        return "0." + "0" * places
    num = man * 10**places
    scaled = (num << exp) if exp >= 0 else (num >> -exp)  # floor; man > 0
    s = str(scaled).rjust(places + 1, "0")
    body = f"{s[:-places]}.{s[-places:]}" if places else s
    return ("-" if sign_bit else "") + body


def _json_number(x: mpf, prec: int) -> str:
    """Full-precision decimal string for JSON payloads."""
    sign, digits, exp10 = decimal_mantissa(x, max(17, (prec * 30103) // 100000 + 2))
    return f"{sign if sign == '-' else ''}{digits}e{exp10}"


def _poly_str(coeffs_desc: Sequence[str], degree: int) -> str:
    """Human form 'c_d X^d + ... + c_0' from truncated coefficient strings."""
    parts: List[str] = []
    for i, c in enumerate(coeffs_desc):
        power = degree - i
        mono = "" if power == 0 else ("X" if power == 1 else f"X^{power}")
        if i == 0:
            parts.append(f"{c}{mono}")
        else:
            sign = "-" if c.startswith("-") else "+"
            parts.append(f" {sign} {c.lstrip('-')}{mono}")
    return "".join(parts)


def _emit(
    rows: List[Dict[str, str]],
    columns: Sequence[str],
    cfg: RunConfig,
    meta: Dict[str, object],
    out: io.TextIOBase,
) -> None:
    """Render rows in the configured format with deterministic ordering."""
    if cfg.output_format == "csv":
        writer = _csv.writer(out, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([row.get(c, "") for c in columns])
    elif cfg.output_format == "json":
        payload = {"meta": dict(meta), "rows": rows}
        json.dump(payload, out, indent=2)
        out.write("\n")
    else:
        widths = [
            max(len(c), *(len(str(r.get(c, ""))) for r in rows)) if rows else len(c)
            for c in columns
        ]
        header = "  ".join(c.ljust(w) for c, w in zip(columns, widths))
        out.write(header.rstrip() + "\n")
        for row in rows:
            line = "  ".join(str(row.get(c, "")).ljust(w) for c, w in zip(columns, widths))
            out.write(line.rstrip() + "\n")


def _parse_range(text: str, what: str, parser: _Parser) -> List[int]:
    """'A..B' (inclusive, possibly empty when A > B) or a single integer."""
    try:
        if ".." in text:
            lo_s, hi_s = text.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError:
        parser.error(f"bad {what} range {text!r} (use N or A..B)")
        raise AssertionError("unreachable")


# ---------------------------------------------------------------------------
# gamma warm-up (the only parallel phase; parent is the single cache writer)
# ---------------------------------------------------------------------------


def _gamma_worker(task: Tuple[int, int]) -> Tuple[int, int, str]:
    n, prec = task
    value = gamma_exact(n, prec).value
    rec = CacheRecord.from_value(n, value.value, prec, "exact")
    return n, prec, rec.decimal_value


def _warm_gamma(provider, ns: Iterable[int], prec: int, jobs: int) -> None:
    cache: Optional[GammaCache] = getattr(provider, "cache", None)
    need = sorted(
        n for n in set(ns) if cache is None or cache.get(n, prec) is None
    )
    if not need:
        return
    if jobs <= 1 or cache is None or len(need) < 4:
        for n in need:
            provider.value_at(n, prec)
        return
    import multiprocessing as mp_proc

    with mp_proc.Pool(processes=jobs) as pool:
        results = pool.map(_gamma_worker, [(n, prec) for n in need])
    for n, p, decimal_value in sorted(results):  # merge in n-order
        cache.put(CacheRecord(n=n, prec_bits=p, source="exact",
                              decimal_value=decimal_value))


def _provider_for(cfg: RunConfig, name: str):
    if name == "partition":
        return partition_provider()
    if name == "zeta":
        cache_dir = cfg.cache_dir
        if cache_dir is None and cfg.parallelism > 1:
            cache_dir = tempfile.mkdtemp(prefix="jensenpoly-cache-")
        return zeta_gamma_provider(cache_dir)
    raise ValueError(f"unknown sequence {name!r}")


def _certify_shift(seq, d: int, n: int, ladder: Sequence[int]) -> HyperbolicityCertificate:
    """Exact path when available; renormalized ladder otherwise; raw-poly fallback."""
    if seq.exact_at is not None:
        return is_hyperbolic(jensen_poly(seq, d, n))
    if seq.params is not None and n >= seq.params.n_min:
        return certify_renormalized(seq, d, n, ladder)
    cert: Optional[HyperbolicityCertificate] = None
    for prec in ladder:
        cert = is_hyperbolic(jensen_poly(seq, d, n, prec=prec))
        if cert.verdict != "indeterminate":
            return cert
    assert cert is not None
    return cert


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _cmd_gamma(args: argparse.Namespace, cfg: RunConfig, parser: _Parser) -> int:
    mode = "compare"
    if args.exact:
        mode = "exact"
    elif args.asymptotic:
        mode = "asymptotic"
    min_n = 1 if mode == "exact" else 2  # the asymptotic form needs n >= 2
    for n in args.n:
        if n < min_n:
            parser.error(f"gamma {mode} requires n >= {min_n}, got {n}")
    provider = _provider_for(cfg, "zeta")
    if mode != "asymptotic":
        _warm_gamma(provider, args.n, cfg.precision_bits, cfg.parallelism)

    rows: List[Dict[str, str]] = []
    try:
        for n in sorted(set(args.n)):
            row: Dict[str, str] = {"n": str(n)}
            if mode in ("exact", "compare"):
                g = provider.value_at(n, cfg.precision_bits).value
                row["gamma"] = _sci_trunc(g, 11)
            if mode in ("asymptotic", "compare"):
                gh = gamma_hat(n, cfg.precision_bits).value.value
                row["gamma_hat"] = _sci_trunc(gh, 11)
            if mode == "compare":
                with workprec(cfg.precision_bits):
                    row["ratio"] = _fixed_trunc(g / gh, 9)
            rows.append(row)
    except PrecisionFailure as exc:
        print(f"precision failure: {exc}", file=sys.stderr)
        return EXIT_INDETERMINATE
    columns = {
        "exact": ["n", "gamma"],
        "asymptotic": ["n", "gamma_hat"],
        "compare": ["n", "gamma_hat", "gamma", "ratio"],
    }[mode]
    meta = {"command": "gamma", "mode": mode, "prec_bits": cfg.precision_bits,
            "version": __version__}
    _emit(rows, columns, cfg, meta, sys.stdout)
    return EXIT_OK


def _cmd_jensen(args: argparse.Namespace, cfg: RunConfig, parser: _Parser) -> int:
    seq = _provider_for(cfg, args.seq)
    d, n = args.d, args.n
    if d < 1:
        parser.error(f"degree must be >= 1, got {d}")
    if n < 0:
        parser.error(f"shift must be >= 0, got {n}")
    try:
        if args.renormalized:
            if seq.params is None or n < seq.params.n_min:
                parser.error(
                    f"renormalization for {args.seq} needs n >= "
                    f"{seq.params.n_min if seq.params else '?'}, got {n}"
                )
            poly = renormalize(seq, d, n, cfg.precision_bits)
            places = 3 if d >= 6 else 4
            coeff_strs = [_fixed_trunc(c, places) for c in reversed(poly.coeffs)]
            kindrow = "renormalized"
        else:
            poly = jensen_poly(seq, d, n, prec=cfg.precision_bits)
            if hasattr(poly.coeffs[0], "denominator"):  # exact path
                coeff_strs = [str(c.numerator) if c.denominator == 1 else str(c)
                              for c in reversed(poly.coeffs)]
            else:
                coeff_strs = [_sci_trunc(c, 11) for c in reversed(poly.coeffs)]
            kindrow = "raw"
    except (DomainError, PrecisionFailure) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INDETERMINATE if isinstance(exc, PrecisionFailure) else EXIT_USAGE

    rows = [
        {"seq": args.seq, "kind": kindrow, "d": str(d), "n": str(n),
         "power": str(poly.degree - i), "coefficient": c}
        for i, c in enumerate(coeff_strs)
    ]
    meta = {"command": "jensen", "prec_bits": cfg.precision_bits,
            "version": __version__}
    if cfg.output_format == "table":
        print(f"J[{args.seq}] d={d} n={n} ({kindrow})")
        print(_poly_str(coeff_strs, poly.degree))
    else:
        _emit(rows, ["seq", "kind", "d", "n", "power", "coefficient"],
              cfg, meta, sys.stdout)
    return EXIT_OK


def _cmd_sweep(args: argparse.Namespace, cfg: RunConfig, parser: _Parser) -> int:
    seq = _provider_for(cfg, args.seq)
    d_values = _parse_range(args.d_range, "degree", parser)
    n_values = _parse_range(args.n_range, "shift", parser)
    for d in d_values:
        if d < 1:
            parser.error(f"degrees must be >= 1, got {d}")
    for n in n_values:
        if n < 0:
            parser.error(f"shifts must be >= 0, got {n}")

    ladder = [cfg.precision_bits] + [p for p in DEFAULT_LADDER if p > cfg.precision_bits]
    if seq.exact_at is None and d_values and n_values:
        d_max = max(d_values)
        warm_prec = ladder[0] + 8 * d_max + 96  # covers renormalize's padding
        _warm_gamma(seq, [n + j for n in n_values for j in range(d_max + 1)],
                    warm_prec, cfg.parallelism)

    rows: List[Dict[str, str]] = []
    n_bad = 0
    n_indet = 0
    try:
        for d in d_values:
            for n in n_values:
                cert = _certify_shift(seq, d, n, ladder)
                if cert.verdict == "not_hyperbolic":
                    n_bad += 1
                elif cert.verdict == "indeterminate":
                    n_indet += 1
                rows.append({
                    "seq": args.seq, "d": str(d), "n": str(n),
                    "verdict": cert.verdict, "method": cert.method,
                    "margin": mpmath.nstr(cert.margin.value, 6),
                })
    except (DomainError, PrecisionFailure) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INDETERMINATE

    meta = {"command": "sweep", "seq": args.seq, "prec_bits": cfg.precision_bits,
            "ladder": list(ladder), "version": __version__}
    if cfg.output_format == "table":
        total = len(rows)
        print(f"sweep {args.seq}: {total} certificates; "
              f"{total - n_bad - n_indet} hyperbolic, {n_bad} not, {n_indet} indeterminate")
        for row in rows:
            if row["verdict"] != "hyperbolic":
                print(f"  d={row['d']} n={row['n']}: {row['verdict']} ({row['method']})")
    else:
        _emit(rows, ["seq", "d", "n", "verdict", "method", "margin"],
              cfg, meta, sys.stdout)
    if n_indet:
        return EXIT_INDETERMINATE
    if n_bad:
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def _cmd_find_n(args: argparse.Namespace, cfg: RunConfig, parser: _Parser) -> int:
    if args.d < 1:
        parser.error(f"degree must be >= 1, got {args.d}")
    if args.max < 0:
        parser.error(f"--max must be >= 0, got {args.max}")
    seq = partition_provider()
    try:
        result = find_N(seq, args.d, args.max)
    except PrecisionFailure as exc:
        print(f"precision failure: {exc}", file=sys.stderr)
        return EXIT_INDETERMINATE
    rows = [{
        "d": str(args.d),
        "N": str(int(result)),
        "last_failing": "" if result.last_failing is None else str(result.last_failing),
        "n_max": str(args.max),
    }]
    meta = {"command": "find-n", "prec_bits": cfg.precision_bits,
            "version": __version__}
    _emit(rows, ["d", "N", "last_failing", "n_max"], cfg, meta, sys.stdout)
    return EXIT_OK


_D4_CHECK_NAMES = ("beta3_in_band", "beta1_in_band", "beta4_in_band",
                   "beta2_in_band", "beta0_in_band")


def _cmd_effective(args: argparse.Namespace, cfg: RunConfig, parser: _Parser) -> int:
    n_values = _parse_range(args.n_range, "shift", parser)
    valid = [n for n in n_values if n >= 100]
    dropped = [n for n in n_values if n < 100]
    if dropped:
        print(
            f"warning: the degree-4 template is stated for n >= 100; "
            f"dropping {len(dropped)} value(s) below 100",
            file=sys.stderr,
        )
    if n_values and not valid:
        parser.error("no shifts >= 100 in range (template is stated for n >= 100)")
    seq = _provider_for(cfg, "zeta")
    if valid:
        _warm_gamma(seq, [n + j for n in valid for j in range(5)],
                    cfg.precision_bits + 88, cfg.parallelism)
    report = effective_check_d4(valid, seq=seq, prec=cfg.precision_bits)

    rows: List[Dict[str, str]] = []
    for row in report.rows:
        entry: Dict[str, str] = {"n": str(row.n), "delta": _fixed_trunc(row.delta, 8)}
        for k, b in enumerate(row.beta):
            entry[f"beta{k}"] = _fixed_trunc(b, 6)
        for name, ok in zip(_D4_CHECK_NAMES, row.checks):
            entry[name] = "pass" if ok else "FAIL"
        entry["all_hold"] = "pass" if row.all_hold else "FAIL"
        rows.append(entry)
    columns = (["n", "delta"] + [f"beta{k}" for k in range(5)]
               + list(_D4_CHECK_NAMES) + ["all_hold"])
    meta = {"command": "effective", "prec_bits": cfg.precision_bits,
            "first_all_hold": report.first_all_hold, "version": __version__}
    _emit(rows, columns, cfg, meta, sys.stdout)
    if cfg.output_format == "table":
        print(f"first n with every inequality holding: {report.first_all_hold}")
    return EXIT_OK


_TABLE_GROUPS = ("gamma", "partition-jensen", "zeta-jensen", "zeta-jensen-6", "nd")


def _cmd_tables(args: argparse.Namespace, cfg: RunConfig, parser: _Parser) -> int:
    groups = list(_TABLE_GROUPS) if args.group == "all" else [args.group]
    rows: List[Dict[str, str]] = []
    zeta = _provider_for(cfg, "zeta")
    part = partition_provider()

    if "gamma" in groups:
        ns = [10, 100, 1000]
        _warm_gamma(zeta, ns, cfg.precision_bits, cfg.parallelism)
        for n in ns:
            g = zeta.value_at(n, cfg.precision_bits).value
            gh = gamma_hat(n, cfg.precision_bits).value.value
            with workprec(cfg.precision_bits):
                ratio = g / gh
            rows.append({
                "group": "gamma", "n": str(n), "d": "", "entry": "",
                "value": f"{_sci_trunc(gh, 11)} | {_sci_trunc(g, 11)} | {_fixed_trunc(ratio, 9)}",
            })

    def _jensen_rows(group: str, seq, d: int, places: int) -> None:
        shifts = [100, 200, 300, 400]
        if seq.exact_at is None:
            _warm_gamma(seq, [n + j for n in shifts for j in range(d + 1)],
                        cfg.precision_bits + 88, cfg.parallelism)
        for n in shifts:
            poly = renormalize(seq, d, n, cfg.precision_bits)
            cs = [_fixed_trunc(c, places) for c in reversed(poly.coeffs)]
            rows.append({
                "group": group, "n": str(n), "d": str(d), "entry": "",
                "value": _poly_str(cs, poly.degree),
            })

    if "partition-jensen" in groups:
        _jensen_rows("partition-jensen", part, 2, 4)
        _jensen_rows("partition-jensen", part, 3, 4)
    if "zeta-jensen" in groups:
        _jensen_rows("zeta-jensen", zeta, 2, 4)
        _jensen_rows("zeta-jensen", zeta, 3, 4)
    if "zeta-jensen-6" in groups:
        _jensen_rows("zeta-jensen-6", zeta, 6, 3)
    if "nd" in groups:
        for d in (2, 3, 4, 5):
            result = find_N(part, d, 2000)
            rows.append({
                "group": "nd", "n": "", "d": str(d),
                "entry": f"last_failing={result.last_failing}",
                "value": str(int(result)),
            })

    meta = {"command": "tables", "groups": groups,
            "prec_bits": cfg.precision_bits, "version": __version__}
    _emit(rows, ["group", "n", "d", "entry", "value"], cfg, meta, sys.stdout)
    return EXIT_OK


def _cmd_cache(args: argparse.Namespace, cfg: RunConfig, parser: _Parser) -> int:
    if cfg.cache_dir is None:
        parser.error(
            f"no cache directory set (use --cache-dir or ${ENV_CACHE_DIR})"
        )
    cache = GammaCache(cfg.cache_dir)
    if args.action == "clear":
        n_before = len(cache.entries())
        cache.clear()
        print(f"cleared {n_before} record(s) from {cache.path}")
        return EXIT_OK
    entries = cache.entries()
    rows = [
        {"n": str(r.n), "prec_bits": str(r.prec_bits), "src": r.source,
         "value": (r.decimal_value[:24] + "...") if len(r.decimal_value) > 27
                  else r.decimal_value}
        for r in entries
    ]
    meta = {"command": "cache", "path": str(cache.path),
            "records": len(entries), "version": __version__}
    _emit(rows, ["n", "prec_bits", "src", "value"], cfg, meta, sys.stdout)
    if cfg.output_format == "table":
        print(f"{len(entries)} record(s) in {cache.path}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser wiring
# ---------------------------------------------------------------------------


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--prec", type=int, default=None, metavar="BITS",
                        help="working precision in bits (default 192)")
    parser.add_argument("--format", choices=("table", "csv", "json"),
                        default=None, help="output format (default table)")
    parser.add_argument("--cache-dir", default=None, metavar="PATH",
                        help=f"persistent cache directory (or ${ENV_CACHE_DIR})")
    parser.add_argument("--jobs", type=int, default=None, metavar="K",
                        help="parallel workers for value computation (default 1)")


def _build_parser() -> _Parser:
    parser = _Parser(prog="jensenpoly",
                     description="High-precision Jensen polynomial toolkit")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    _add_common(parser)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    p = sub.add_parser("gamma", help="Taylor coefficient values and ratios")
    p.add_argument("n", type=int, nargs="+")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--exact", action="store_true")
    g.add_argument("--asymptotic", action="store_true")
    g.add_argument("--compare", action="store_true")
    _add_common(p)
    p.set_defaults(func=_cmd_gamma)

    p = sub.add_parser("jensen", help="Jensen polynomial coefficients")
    p.add_argument("seq", choices=("zeta", "partition"))
    p.add_argument("d", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--renormalized", action="store_true")
    _add_common(p)
    p.set_defaults(func=_cmd_jensen)

    p = sub.add_parser("sweep", help="certified hyperbolicity sweep")
    p.add_argument("seq", choices=("zeta", "partition"))
    p.add_argument("d_range", metavar="D_RANGE", help="e.g. 2 or 1..8")
    p.add_argument("n_range", metavar="N_RANGE", help="e.g. 100 or 7..2000")
    _add_common(p)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("find-n", help="least all-hyperbolic shift threshold")
    p.add_argument("d", type=int)
    p.add_argument("--max", type=int, required=True, metavar="N_MAX")
    _add_common(p)
    p.set_defaults(func=_cmd_find_n)

    p = sub.add_parser("effective", help="degree-4 inequality template report")
    p.add_argument("n_range", metavar="N_RANGE", help="e.g. 104 or 100..500")
    _add_common(p)
    p.set_defaults(func=_cmd_effective)

    p = sub.add_parser("tables", help="reproduce the reference tables")
    p.add_argument("group", nargs="?", default="all",
                   choices=_TABLE_GROUPS + ("all",))
    _add_common(p)
    p.set_defaults(func=_cmd_tables)

    p = sub.add_parser("cache", help="inspect or clear the value cache")
    p.add_argument("action", nargs="?", default="inspect",
                   choices=("inspect", "clear"))
    _add_common(p)
    p.set_defaults(func=_cmd_cache)

    return parser


def _resolve_config(args: argparse.Namespace, parser: _Parser) -> RunConfig:
    prec = args.prec if args.prec is not None else 192
    fmt = args.format if args.format is not None else "table"
    cache_dir = args.cache_dir
    if cache_dir is None:
        cache_dir = os.environ.get(ENV_CACHE_DIR) or None
    jobs = args.jobs if args.jobs is not None else 1
    try:
        return RunConfig(precision_bits=prec, cache_dir=cache_dir,
                         output_format=fmt, parallelism=jobs)
    except ValueError as exc:
        parser.error(str(exc))
        raise AssertionError("unreachable")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "command", None) is None:
        parser.print_help(sys.stderr)
        return EXIT_USAGE
    cfg = _resolve_config(args, parser)
    try:
        return args.func(args, cfg, parser)
    except SystemExit:
        raise
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PrecisionFailure as exc:
        print(f"precision failure: {exc}", file=sys.stderr)
        return EXIT_INDETERMINATE


def _entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    _entry()
