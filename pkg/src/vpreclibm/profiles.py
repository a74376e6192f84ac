"""Profile and precision-config file formats.

Both are line-oriented text files with a version header and space-separated
``key=value`` fields, one record per line.  Floating-point endpoints are
written as hexadecimal floats so serialization is bit-exact and locale
independent.  An interval that never saw a finite value serializes as the
inverted pair ``inf:-inf`` (the min/max accumulation identity) and parses
back as empty.

Profile record line::

    func=<name> id=<hex64> calls=<u64> nan=<u64> inf=<u64>
    in0=<hexfloat>:<hexfloat> [in1=<hexfloat>:<hexfloat>] out=<hexfloat>:<hexfloat>

Config lines::

    default p=<0..52> r=<1..11>
    site id=<hex64> func=<name> p=<0..52> r=<1..11> mode=<vprec|passthrough>
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Iterable, TextIO

from .extmath import FUNCTIONS
from .formats import FloatFormat

__all__ = [
    "PROFILE_HEADER",
    "CONFIG_HEADER",
    "EMPTY_INTERVAL",
    "CallSiteRecord",
    "ConfigEntry",
    "PrecisionConfig",
    "ProfileFormatError",
    "format_hex",
    "parse_float_token",
    "interval_union",
    "interval_is_empty",
    "merge_records",
    "write_profile",
    "parse_profile",
    "write_config",
    "parse_config",
    "initial_config",
    "derive_range_bits",
]

PROFILE_HEADER = "#vprec-libm-profile v1"
CONFIG_HEADER = "#vprec-libm-config v1"

Interval = tuple[float, float]
EMPTY_INTERVAL: Interval = (math.inf, -math.inf)


class ProfileFormatError(ValueError):
    """Malformed profile or config file; message names the offending line."""


def format_hex(x: float) -> str:
    """C-style %a rendering: trailing zeros trimmed, so 3.25 -> 0x1.ap+1."""
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    s = float.hex(x)
    head, _, exp = s.partition("p")
    if "." in head:
        head = head.rstrip("0").rstrip(".")
    return f"{head}p{exp}"


def parse_float_token(tok: str) -> float:
    try:
        return float.fromhex(tok)
    except ValueError:
        return float(tok)  # plain decimal fallback; raises ValueError itself


def interval_is_empty(iv: Interval) -> bool:
    return iv[0] > iv[1]


def interval_union(a: Interval, b: Interval) -> Interval:
    return min(a[0], b[0]), max(a[1], b[1])


@dataclass(frozen=True)
class CallSiteRecord:
    """Aggregated profile of one call-site of one function."""

    func: str
    site_id: int
    calls: int
    nan_count: int = 0
    inf_count: int = 0
    in0: Interval = EMPTY_INTERVAL
    in1: Interval | None = None  # present iff the function is binary
    out: Interval = EMPTY_INTERVAL

    def __post_init__(self):
        if self.func not in FUNCTIONS:
            raise ValueError(f"unknown function {self.func!r}")
        binary = FUNCTIONS[self.func].arity == 2
        if binary != (self.in1 is not None):
            raise ValueError(f"{self.func}: in1 must be {'present' if binary else 'absent'}")


def merge_records(a: CallSiteRecord, b: CallSiteRecord) -> CallSiteRecord:
    """Union of two observations of the same site (commutative, associative)."""
    if (a.site_id, a.func) != (b.site_id, b.func):
        raise ValueError("cannot merge records of different sites")
    in1 = None
    if a.in1 is not None:
        in1 = interval_union(a.in1, b.in1)
    return replace(
        a,
        calls=a.calls + b.calls,
        nan_count=a.nan_count + b.nan_count,
        inf_count=a.inf_count + b.inf_count,
        in0=interval_union(a.in0, b.in0),
        in1=in1,
        out=interval_union(a.out, b.out),
    )


def _record_sort_key(r: CallSiteRecord):
    return (-r.calls, r.site_id)


def _fields(line: str, lineno: int) -> dict[str, str]:
    out: dict[str, str] = {}
    for tok in line.split():
        key, sep, val = tok.partition("=")
        if not sep or not key:
            raise ProfileFormatError(f"line {lineno}: malformed field {tok!r}")
        if key in out:
            raise ProfileFormatError(f"line {lineno}: duplicate field {key!r}")
        out[key] = val
    return out


def _parse_interval(val: str, lineno: int) -> Interval:
    lo, sep, hi = val.partition(":")
    if not sep:
        raise ProfileFormatError(f"line {lineno}: interval needs lo:hi, got {val!r}")
    try:
        iv = (parse_float_token(lo), parse_float_token(hi))
    except ValueError as e:
        raise ProfileFormatError(f"line {lineno}: bad interval endpoint: {e}") from None
    if math.isnan(iv[0]) or math.isnan(iv[1]):
        raise ProfileFormatError(f"line {lineno}: NaN interval endpoint")
    if iv[0] > iv[1] and iv != EMPTY_INTERVAL:
        raise ProfileFormatError(f"line {lineno}: inverted interval {val!r}")
    return iv


def _parse_id(val: str, lineno: int) -> int:
    try:
        site_id = int(val, 16)
    except ValueError:
        raise ProfileFormatError(f"line {lineno}: bad id {val!r}") from None
    if not 0 <= site_id < 1 << 64:
        raise ProfileFormatError(f"line {lineno}: id out of 64-bit range")
    return site_id


def _interval_str(iv: Interval) -> str:
    return f"{format_hex(iv[0])}:{format_hex(iv[1])}"


def write_profile(records: Iterable[CallSiteRecord], fp: TextIO) -> None:
    """Write records sorted by descending call count, ties by id ascending."""
    fp.write(PROFILE_HEADER + "\n")
    for r in sorted(records, key=_record_sort_key):
        parts = [
            f"func={r.func}",
            f"id=0x{r.site_id:x}",
            f"calls={r.calls}",
            f"nan={r.nan_count}",
            f"inf={r.inf_count}",
            f"in0={_interval_str(r.in0)}",
        ]
        if r.in1 is not None:
            parts.append(f"in1={_interval_str(r.in1)}")
        parts.append(f"out={_interval_str(r.out)}")
        fp.write(" ".join(parts) + "\n")


_PROFILE_KEYS = {"func", "id", "calls", "nan", "inf", "in0", "in1", "out"}


def parse_profile(fp: TextIO) -> list[CallSiteRecord]:
    header = fp.readline().rstrip("\n")
    if header != PROFILE_HEADER:
        raise ProfileFormatError(f"line 1: expected {PROFILE_HEADER!r}, got {header!r}")
    records = []
    for lineno, line in enumerate(fp, start=2):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        f = _fields(line, lineno)
        unknown = set(f) - _PROFILE_KEYS
        if unknown:
            raise ProfileFormatError(f"line {lineno}: unknown keys {sorted(unknown)}")
        missing = {"func", "id", "calls", "nan", "inf", "in0", "out"} - set(f)
        if missing:
            raise ProfileFormatError(f"line {lineno}: missing keys {sorted(missing)}")
        func = f["func"]
        if func not in FUNCTIONS:
            raise ProfileFormatError(f"line {lineno}: unknown function {func!r}")
        binary = FUNCTIONS[func].arity == 2
        if binary != ("in1" in f):
            raise ProfileFormatError(f"line {lineno}: in1 mismatch for {func}")
        try:
            calls = int(f["calls"])
            nan_count = int(f["nan"])
            inf_count = int(f["inf"])
        except ValueError as e:
            raise ProfileFormatError(f"line {lineno}: bad counter: {e}") from None
        if calls < 1:
            raise ProfileFormatError(f"line {lineno}: calls must be >= 1")
        if min(nan_count, inf_count) < 0 or nan_count > calls:
            raise ProfileFormatError(f"line {lineno}: inconsistent special counters")
        records.append(
            CallSiteRecord(
                func=func,
                site_id=_parse_id(f["id"], lineno),
                calls=calls,
                nan_count=nan_count,
                inf_count=inf_count,
                in0=_parse_interval(f["in0"], lineno),
                in1=_parse_interval(f["in1"], lineno) if binary else None,
                out=_parse_interval(f["out"], lineno),
            )
        )
    return records


@dataclass(frozen=True)
class ConfigEntry:
    site_id: int
    func: str
    fmt: FloatFormat
    mode: str = "vprec"  # or "passthrough"

    def __post_init__(self):
        if self.func not in FUNCTIONS:
            raise ValueError(f"unknown function {self.func!r}")
        if self.mode not in ("vprec", "passthrough"):
            raise ValueError(f"bad mode {self.mode!r}")


@dataclass
class PrecisionConfig:
    default_format: FloatFormat = field(default_factory=lambda: FloatFormat(11, 52))
    entries: list[ConfigEntry] = field(default_factory=list)

    def __post_init__(self):
        ids = [e.site_id for e in self.entries]
        if len(ids) != len(set(ids)):
            raise ValueError("duplicate site ids in config")

    def entry_for(self, site_id: int) -> ConfigEntry | None:
        for e in self.entries:
            if e.site_id == site_id:
                return e
        return None

    def with_entry(self, entry: ConfigEntry) -> "PrecisionConfig":
        rest = [e for e in self.entries if e.site_id != entry.site_id]
        return PrecisionConfig(self.default_format, rest + [entry])


def write_config(config: PrecisionConfig, fp: TextIO) -> None:
    fp.write(CONFIG_HEADER + "\n")
    d = config.default_format
    fp.write(f"default p={d.precision_bits} r={d.exponent_bits}\n")
    for e in config.entries:
        fp.write(
            f"site id=0x{e.site_id:x} func={e.func} "
            f"p={e.fmt.precision_bits} r={e.fmt.exponent_bits} mode={e.mode}\n"
        )


def _parse_format(f: dict[str, str], lineno: int, label: str) -> FloatFormat:
    try:
        p = int(f["p"])
        r = int(f["r"])
    except (KeyError, ValueError):
        raise ProfileFormatError(f"line {lineno}: {label}: p and r required") from None
    try:
        return FloatFormat(exponent_bits=r, precision_bits=p)
    except ValueError as e:
        raise ProfileFormatError(f"line {lineno}: {label}: {e}") from None


def parse_config(fp: TextIO) -> PrecisionConfig:
    header = fp.readline().rstrip("\n")
    if header != CONFIG_HEADER:
        raise ProfileFormatError(f"line 1: expected {CONFIG_HEADER!r}, got {header!r}")
    default: FloatFormat | None = None
    entries: list[ConfigEntry] = []
    seen: set[int] = set()
    for lineno, line in enumerate(fp, start=2):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        kind, _, rest = line.partition(" ")
        f = _fields(rest, lineno)
        if kind == "default":
            if default is not None:
                raise ProfileFormatError(f"line {lineno}: duplicate default")
            if set(f) != {"p", "r"}:
                raise ProfileFormatError(f"line {lineno}: default takes exactly p and r")
            default = _parse_format(f, lineno, "default")
        elif kind == "site":
            if set(f) != {"id", "func", "p", "r", "mode"}:
                raise ProfileFormatError(f"line {lineno}: site needs id func p r mode")
            site_id = _parse_id(f["id"], lineno)
            if site_id in seen:
                raise ProfileFormatError(f"line {lineno}: duplicate id 0x{site_id:x}")
            seen.add(site_id)
            if f["func"] not in FUNCTIONS:
                raise ProfileFormatError(f"line {lineno}: unknown function {f['func']!r}")
            if f["mode"] not in ("vprec", "passthrough"):
                raise ProfileFormatError(f"line {lineno}: bad mode {f['mode']!r}")
            entries.append(
                ConfigEntry(site_id, f["func"], _parse_format(f, lineno, f"site 0x{site_id:x}"), f["mode"])
            )
        else:
            raise ProfileFormatError(f"line {lineno}: unknown directive {kind!r}")
    if default is None:
        raise ProfileFormatError("config has no default line")
    return PrecisionConfig(default_format=default, entries=entries)


def initial_config(records: Iterable[CallSiteRecord]) -> PrecisionConfig:
    """Full-precision starting config: one (p=52, r=11) entry per unique site.

    Records sharing an id are merged first (interval union, count sums).
    """
    merged: dict[int, CallSiteRecord] = {}
    for r in records:
        merged[r.site_id] = merge_records(merged[r.site_id], r) if r.site_id in merged else r
    full = FloatFormat(11, 52)
    entries = [
        ConfigEntry(r.site_id, r.func, full, "vprec")
        for r in sorted(merged.values(), key=_record_sort_key)
    ]
    return PrecisionConfig(default_format=full, entries=entries)


def derive_range_bits(record: CallSiteRecord) -> int:
    """Minimal exponent width covering the observed output magnitudes.

    Picks the smallest r in [1, 11] whose normal range [2^e_min, Omega]
    contains every magnitude the output interval may have held (Omega
    evaluated at p=52, since range derivation precedes the precision
    choice); 11 if none smaller suffices, 1 for an all-zero or empty
    interval.  An interval that touches or crosses zero bounds only the
    largest magnitude: arbitrarily small observations are consistent with
    it, and flushing those to zero would corrupt execution, so such sites
    keep the full width.
    """
    lo, hi = record.out
    if interval_is_empty(record.out) or (lo == 0.0 and hi == 0.0):
        return 1
    if lo <= 0.0 <= hi:
        return 11
    lo_mag, hi_mag = sorted([abs(lo), abs(hi)])
    for r in range(1, 12):
        fmt = FloatFormat(r, 52)
        if fmt.min_normal <= lo_mag and hi_mag <= fmt.max_magnitude:
            return r
    return 11
