"""Reduced floating-point target formats and rounding into them.

A target format lives inside a binary64 container and is described by the
bit width of its pseudo-exponent ``r`` (1..11) and pseudo-mantissa ``p``
(0..52, explicit fraction bits).  Rounding adds half a unit in the last
place at precision ``p`` to the magnitude and truncates, i.e. rounds half
away from zero; magnitudes that land outside the format's normal range map
to signed infinity (overflow) or signed zero (underflow — no subnormals).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

__all__ = [
    "FloatFormat",
    "RoundFlag",
    "RoundedResult",
    "round_to_format",
    "is_representable",
    "BINARY64",
    "BINARY32",
]


@dataclass(frozen=True)
class FloatFormat:
    """A target output format: ``exponent_bits`` (r) and ``precision_bits`` (p)."""

    exponent_bits: int
    precision_bits: int

    def __post_init__(self) -> None:
        r, p = self.exponent_bits, self.precision_bits
        if not isinstance(r, int) or not isinstance(p, int):
            raise TypeError("exponent_bits and precision_bits must be integers")
        if not 1 <= r <= 11:
            raise ValueError(f"exponent_bits must be in [1, 11], got {r}")
        if not 0 <= p <= 52:
            raise ValueError(f"precision_bits must be in [0, 52], got {p}")

    @property
    def bias(self) -> int:
        return (1 << (self.exponent_bits - 1)) - 1

    @property
    def e_max(self) -> int:
        return self.bias

    @property
    def e_min(self) -> int:
        # r=1 gives bias 0 and an inverted 1-bias..bias range; pinned to exponent 0.
        if self.exponent_bits == 1:
            return 0
        return 1 - self.bias

    @property
    def max_magnitude(self) -> float:
        """Largest finite magnitude: (2 - 2^-p) * 2^e_max."""
        return math.ldexp(2.0 - math.ldexp(1.0, -self.precision_bits), self.e_max)

    @property
    def min_normal(self) -> float:
        """Smallest normal magnitude: 2^e_min."""
        return math.ldexp(1.0, self.e_min)

    def __str__(self) -> str:
        return f"(r={self.exponent_bits}, p={self.precision_bits})"


BINARY64 = FloatFormat(exponent_bits=11, precision_bits=52)
BINARY32 = FloatFormat(exponent_bits=8, precision_bits=23)


class RoundFlag(str, Enum):
    EXACT = "exact"
    INEXACT = "inexact"
    OVERFLOW = "overflow"
    UNDERFLOW = "underflow"
    SPECIAL = "special"


@dataclass(frozen=True)
class RoundedResult:
    value: float
    flag: RoundFlag


def _decompose(x: float) -> tuple[int, int]:
    """Exact (significand, exponent) of a finite nonzero float: x == m * 2^e."""
    fr, ex = math.frexp(x)
    return int(math.ldexp(fr, 53)), ex - 53


def _round_magnitude(msig: int, mexp: int, p: int) -> tuple[int, int, bool]:
    """Round the positive value msig*2^mexp half-away at p fraction bits.

    Returns (rsig, rexp, exact) with the result equal to rsig*2^rexp and
    rsig.bit_length() <= p + 2 (p+2 only on a carry into the next binade).
    """
    e_z = mexp + msig.bit_length() - 1
    shift = e_z - p - mexp  # bits below the target quantum 2^(e_z - p)
    if shift <= 0:
        return msig, mexp, True
    half = 1 << (shift - 1)
    rsig = (msig + half) >> shift
    exact = (rsig << shift) == msig
    return rsig, mexp + shift, exact


def round_to_format(z, fmt: FloatFormat) -> RoundedResult:
    """Round an extended value (or float) into ``fmt``.

    NaN and infinities pass through with flag ``special``.  Otherwise the
    magnitude is rounded by adding 2^(e_z - p - 1) and truncating to p
    fraction bits, the sign is restored, and the post-rounding magnitude is
    checked against the format's range: above the largest finite magnitude
    gives signed infinity (overflow), below 2^e_min gives signed zero
    (underflow).  The returned value is one of the two adjacent p-precision
    numbers (faithful), within half an ulp at precision p of the input.
    """
    hi, lo = _split_input(z)
    if math.isnan(hi):
        return RoundedResult(hi, RoundFlag.SPECIAL)
    if math.isinf(hi):
        return RoundedResult(hi, RoundFlag.SPECIAL)
    if hi == 0.0 and lo == 0.0:
        return RoundedResult(math.copysign(0.0, hi), RoundFlag.EXACT)

    sign = math.copysign(1.0, hi)
    if lo == 0.0:
        msig, mexp = _decompose(abs(hi))
    else:
        # Exact two-word sum: align both significands on a common exponent.
        hsig, hexp = _decompose(hi)
        lsig, lexp = _decompose(lo)
        mexp = min(hexp, lexp)
        msig = (hsig << (hexp - mexp)) + (lsig << (lexp - mexp))
        if msig == 0:
            return RoundedResult(math.copysign(0.0, hi), RoundFlag.EXACT)
        sign = math.copysign(1.0, msig)
        msig = abs(msig)

    rsig, rexp, exact = _round_magnitude(msig, mexp, fmt.precision_bits)
    e_r = rexp + rsig.bit_length() - 1
    if e_r > fmt.e_max:
        return RoundedResult(math.copysign(math.inf, sign), RoundFlag.OVERFLOW)
    if e_r < fmt.e_min:
        return RoundedResult(math.copysign(0.0, sign), RoundFlag.UNDERFLOW)
    value = math.copysign(math.ldexp(float(rsig), rexp), sign)
    return RoundedResult(value, RoundFlag.EXACT if exact else RoundFlag.INEXACT)


def _split_input(z) -> tuple[float, float]:
    if isinstance(z, tuple):  # ExtendedValue is a NamedTuple (hi, lo)
        return float(z[0]), float(z[1])
    return float(z), 0.0


def is_representable(x: float, fmt: FloatFormat) -> bool:
    """True iff x is +-0 or finite with <= p+1 significant bits and exponent
    within [e_min, e_max]."""
    if math.isnan(x) or math.isinf(x):
        return False
    if x == 0.0:
        return True
    msig, mexp = _decompose(abs(x))
    # strip trailing zero bits to count significant bits
    tz = (msig & -msig).bit_length() - 1
    sig_bits = msig.bit_length() - tz
    e_z = mexp + msig.bit_length() - 1
    return sig_bits <= fmt.precision_bits + 1 and fmt.e_min <= e_z <= fmt.e_max
