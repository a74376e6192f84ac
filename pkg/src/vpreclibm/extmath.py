"""Extended-precision evaluation of elementary functions.

Results are double-double pairs (an unevaluated ``hi + lo`` sum of two
binary64 words, ~106 significand bits) built from correctly rounded binary64
primitives.  The contract downstream rounding relies on: relative error at
most 2^-64 versus the exact mathematical value for finite nonzero results of
transcendental functions, exact results for fabs/floor/ceil/fmod, and host
C-library conventions for special values (NaN propagation, domain errors as
NaN, poles as signed infinity).

Trigonometric argument reduction is performed with exact big-integer
arithmetic against a 1400-bit table of 2/pi, so accuracy holds for the full
binary64 range, including arguments adjacent to multiples of pi/2.

The 2^-64 bound applies to results of magnitude at least 2^-1010: below
that, the low word of any binary64 pair runs into the subnormal floor and
no two-word representation can carry 64 significand bits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

__all__ = ["ExtendedValue", "MathFunction", "FUNCTIONS", "FUNCTION_NAMES", "eval_extended"]


class ExtendedValue(NamedTuple):
    """Unevaluated two-word sum; |lo| <= 1/2 ulp(hi), lo = 0 for 0/inf/NaN hi."""

    hi: float
    lo: float

    def to_float(self) -> float:
        return self.hi + self.lo


@dataclass(frozen=True)
class MathFunction:
    name: str
    arity: int
    outputs: int = 1


FUNCTIONS: dict[str, MathFunction] = {
    f.name: f
    for f in (
        MathFunction("sin", 1),
        MathFunction("cos", 1),
        MathFunction("tan", 1),
        MathFunction("asin", 1),
        MathFunction("acos", 1),
        MathFunction("atan", 1),
        MathFunction("atan2", 2),
        MathFunction("exp", 1),
        MathFunction("log", 1),
        MathFunction("log2", 1),
        MathFunction("log10", 1),
        MathFunction("pow", 2),
        MathFunction("sqrt", 1),
        MathFunction("cbrt", 1),
        MathFunction("hypot", 2),
        MathFunction("fmod", 2),
        MathFunction("floor", 1),
        MathFunction("ceil", 1),
        MathFunction("fabs", 1),
        MathFunction("sincos", 1, outputs=2),
    )
}

FUNCTION_NAMES: tuple[str, ...] = tuple(FUNCTIONS)

_INF = math.inf
_NAN = math.nan

# ---------------------------------------------------------------------------
# double-double primitives (Dekker / Knuth; see Hida, Li & Bailey's QD)
# ---------------------------------------------------------------------------

_SPLITTER = 134217729.0  # 2^27 + 1
_SPLIT_THRESH = 6.69692879491417e299  # 2^996


def _two_sum(a: float, b: float) -> tuple[float, float]:
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _quick_two_sum(a: float, b: float) -> tuple[float, float]:
    # requires |a| >= |b|
    s = a + b
    return s, b - (s - a)


def _split(a: float) -> tuple[float, float]:
    if a > _SPLIT_THRESH or a < -_SPLIT_THRESH:
        a *= 3.7252902984619140625e-09  # 2^-28
        t = _SPLITTER * a
        hi = t - (t - a)
        return hi * 268435456.0, (a - hi) * 268435456.0
    t = _SPLITTER * a
    hi = t - (t - a)
    return hi, a - hi


def _two_prod(a: float, b: float) -> tuple[float, float]:
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def _dd_add(a: tuple[float, float], b: tuple[float, float]) -> tuple[float, float]:
    s1, s2 = _two_sum(a[0], b[0])
    t1, t2 = _two_sum(a[1], b[1])
    s2 += t1
    s1, s2 = _quick_two_sum(s1, s2)
    s2 += t2
    return _quick_two_sum(s1, s2)


def _dd_add_d(a: tuple[float, float], b: float) -> tuple[float, float]:
    s1, s2 = _two_sum(a[0], b)
    s2 += a[1]
    return _quick_two_sum(s1, s2)


def _dd_neg(a: tuple[float, float]) -> tuple[float, float]:
    return -a[0], -a[1]


def _dd_sub(a: tuple[float, float], b: tuple[float, float]) -> tuple[float, float]:
    return _dd_add(a, (-b[0], -b[1]))


def _dd_mul(a: tuple[float, float], b: tuple[float, float]) -> tuple[float, float]:
    p1, p2 = _two_prod(a[0], b[0])
    p2 += a[0] * b[1] + a[1] * b[0]
    return _quick_two_sum(p1, p2)


def _dd_mul_d(a: tuple[float, float], b: float) -> tuple[float, float]:
    p1, p2 = _two_prod(a[0], b)
    p2 += a[1] * b
    return _quick_two_sum(p1, p2)


def _dd_sqr(a: tuple[float, float]) -> tuple[float, float]:
    p1, p2 = _two_prod(a[0], a[0])
    p2 += 2.0 * a[0] * a[1]
    return _quick_two_sum(p1, p2)


def _dd_div(a: tuple[float, float], b: tuple[float, float]) -> tuple[float, float]:
    q1 = a[0] / b[0]
    r = _dd_sub(a, _dd_mul_d(b, q1))
    q2 = r[0] / b[0]
    r = _dd_sub(r, _dd_mul_d(b, q2))
    q3 = r[0] / b[0]
    s, e = _quick_two_sum(q1, q2)
    return _dd_add_d((s, e), q3)


def _dd_sqrt(v: tuple[float, float]) -> tuple[float, float]:
    # v > 0 finite; Newton refinement of the correctly rounded seed
    s = math.sqrt(v[0])
    p, e = _two_prod(s, s)
    d = _dd_add(v, (-p, -e))
    return _quick_two_sum(s, d[0] / (2.0 * s))


def _dd_from_fraction(f: Fraction) -> tuple[float, float]:
    hi = float(f)
    lo = float(f - Fraction(hi))
    return hi, lo


def _int_to_dd(n: int, e2: int) -> tuple[float, float]:
    """Round the exact value n * 2^e2 (n >= 0) to a double-double."""
    if n == 0:
        return 0.0, 0.0
    b = n.bit_length()
    sh = b - 53
    if sh <= 0:
        return math.ldexp(float(n), e2), 0.0
    top = n >> sh
    hi = math.ldexp(float(top), e2 + sh)
    rem = n - (top << sh)
    if rem == 0:
        return hi, 0.0
    b2 = rem.bit_length()
    sh2 = b2 - 53
    if sh2 <= 0:
        lo = math.ldexp(float(rem), e2)
    else:
        lo = math.ldexp(float(rem >> sh2), e2 + sh2)
    return _quick_two_sum(hi, lo)


# ---------------------------------------------------------------------------
# frozen constants (verified against the multiprecision oracle in the tests)
# ---------------------------------------------------------------------------

_TWO_OVER_PI_1400 = int(
    "0xa2f9836e4e441529fc2757d1f534ddc0db6295993c439041fe5163abdebbc561b7246e3a"
    "424dd2e006492eea09d1921cfe1deb1cb129a73ee88235f52ebb4484e99c7026b45f7e4139"
    "91d639835339f49c845f8bbdf9283b1ff897ffde05980fef2f118b5a0a6d1f6d367ecf27cb"
    "09b74f463f669e5fea2d7527bac7ebe5f17b3d0739f78a5292ea6bfb5fb11f8d5d0856033"
    "046fc7b6babf0cfbc209af4361da9e391615ee61b086599855f14a068",
    16,
)
_PI_HALF_250 = int(
    "0x6487ed5110b4611a62633145c06e0e68948127044533e63a0105df531d89cd9", 16
)
_LN2_320 = int(
    "0xb17217f7d1cf79abc9e3b39803f2f6af40f343267298b62d8a0d175b8baafa2be7b876206debac98", 16
)
_LN10_320 = int(
    "0x24d763776aaa2b05ba95b58ae0b4c28a38a3fb3e76977e43a0f187a0807c0b5ca58bc0b5ec6a04173", 16
)
_PI_320 = int(
    "0x3243f6a8885a308d313198a2e03707344a4093822299f31d0082efa98ec4e6c89452821e638d01377", 16
)

_PI_DD = _int_to_dd(_PI_320, -320)
_PI_HALF_DD = _int_to_dd(_PI_320, -321)
_PI_QUARTER_DD = _int_to_dd(_PI_320, -322)
_THREE_PI_QUARTER_DD = _int_to_dd(3 * _PI_320, -322)
_LN2_DD = _int_to_dd(_LN2_320, -320)
_LN10_DD = _int_to_dd(_LN10_320, -320)

_PI_4 = 0.7853981633974483  # float(pi/4), reduction fast-path cutoff
_INV_LN2 = 1.4426950408889634

# Cody-Waite split of ln2: L1/L2 carry 38 bits each, so k*L1 and k*L2 are
# exact for |k| <= 2^15; L3 mops up the tail.
_EXP_L1 = math.ldexp(float(_LN2_320 >> (320 - 38)), -38)
_EXP_L2 = math.ldexp(float((_LN2_320 >> (320 - 76)) & ((1 << 38) - 1)), -76)
_EXP_L3 = float(
    Fraction(_LN2_320, 1 << 320) - Fraction(_EXP_L1) - Fraction(_EXP_L2)
)

_FACT = [1]
for _k in range(1, 40):
    _FACT.append(_FACT[-1] * _k)

# sin(r)/r and cos(r) Taylor coefficients in s = r^2, |r| <= pi/4
_SIN_COEFS = [_dd_from_fraction(Fraction((-1) ** k, _FACT[2 * k + 1])) for k in range(16)]
_COS_COEFS = [_dd_from_fraction(Fraction((-1) ** k, _FACT[2 * k])) for k in range(16)]
# exp(r) Taylor coefficients, |r| <= ln2/2
_EXP_COEFS = [_dd_from_fraction(Fraction(1, _FACT[k])) for k in range(24)]
# log(1+u)/u Taylor coefficients, |u| <= 2^-10
_LOG_COEFS = [_dd_from_fraction(Fraction((-1) ** k, k + 1)) for k in range(12)]

_LOG_NEAR_ONE = 0.0009765625  # 2^-10
_SQRT2 = 1.4142135623730951


def _poly_dd(coefs: list[tuple[float, float]], s: tuple[float, float]) -> tuple[float, float]:
    acc = coefs[-1]
    for c in reversed(coefs[:-1]):
        acc = _dd_add(c, _dd_mul(s, acc))
    return acc


# ---------------------------------------------------------------------------
# trigonometric kernel
# ---------------------------------------------------------------------------


def _reduce_pi_half(x: float) -> tuple[int, tuple[float, float]]:
    """Split finite x as k*(pi/2) + r with |r| <= pi/4, r a double-double.

    The reduction multiplies the 53-bit significand of x against a 1400-bit
    integer table of 2/pi, keeping the quotient exact far beyond the worst
    binary64 cancellation, then rebuilds r = frac * pi/2 in integer arithmetic.
    """
    ax = abs(x)
    if ax <= _PI_4:
        return 0, (x, 0.0)
    fr, ex = math.frexp(ax)
    m = int(math.ldexp(fr, 53))
    e2 = ex - 53
    g = m * _TWO_OVER_PI_1400  # ax * 2/pi == g * 2^(e2 - 1400)
    fb = 1400 - e2
    ipart = g >> fb
    frac = g - (ipart << fb)
    if frac >> (fb - 1):
        ipart += 1
        frac -= 1 << fb
    k = ipart & 3
    neg_r = frac < 0
    r = _int_to_dd(abs(frac) * _PI_HALF_250, -(fb + 250))
    if neg_r:
        r = (-r[0], -r[1])
    if x < 0.0:
        k = (-k) & 3
        r = (-r[0], -r[1])
    return k, r


def _sincos_taylor(r: tuple[float, float]) -> tuple[tuple[float, float], tuple[float, float]]:
    s = _dd_sqr(r)
    sin_r = _dd_mul(r, _poly_dd(_SIN_COEFS, s))
    cos_r = _poly_dd(_COS_COEFS, s)
    return sin_r, cos_r


def _sincos_core(x: float) -> tuple[tuple[float, float], tuple[float, float]]:
    k, r = _reduce_pi_half(x)
    sin_r, cos_r = _sincos_taylor(r)
    if k == 0:
        return sin_r, cos_r
    if k == 1:
        return cos_r, _dd_neg(sin_r)
    if k == 2:
        return _dd_neg(sin_r), _dd_neg(cos_r)
    return _dd_neg(cos_r), sin_r


def _sin(x: float) -> tuple[float, float]:
    if x == 0.0:
        return x, 0.0
    if not math.isfinite(x):
        return _NAN, 0.0
    return _sincos_core(x)[0]


def _cos(x: float) -> tuple[float, float]:
    if x == 0.0:
        return 1.0, 0.0
    if not math.isfinite(x):
        return _NAN, 0.0
    return _sincos_core(x)[1]


def _tan(x: float) -> tuple[float, float]:
    if x == 0.0:
        return x, 0.0
    if not math.isfinite(x):
        return _NAN, 0.0
    s, c = _sincos_core(x)
    return _dd_div(s, c)


def _sincos(x: float) -> tuple[tuple[float, float], tuple[float, float]]:
    if x == 0.0:
        return (x, 0.0), (1.0, 0.0)
    if not math.isfinite(x):
        return (_NAN, 0.0), (_NAN, 0.0)
    return _sincos_core(x)


# ---------------------------------------------------------------------------
# exponential / logarithm kernel
# ---------------------------------------------------------------------------


def _exp_of_dd(x: tuple[float, float]) -> tuple[float, float]:
    """exp() of a double-double argument; used by exp and pow."""
    hi = x[0]
    if math.isnan(hi):
        return _NAN, 0.0
    if hi > 709.8:
        return _INF, 0.0
    if hi < -745.2:
        return 0.0, 0.0
    k = int(math.floor(hi * _INV_LN2 + 0.5))
    fk = float(k)
    # r = x - k*ln2; k*L1 and k*L2 are exact, hi - k*L1 is exact (Sterbenz)
    t = hi - fk * _EXP_L1
    r = _dd_add_d((t, 0.0), x[1])
    r = _dd_add_d(r, -fk * _EXP_L2)
    r = _dd_add_d(r, -fk * _EXP_L3)
    v = _poly_dd(_EXP_COEFS, r)
    try:
        out_hi = math.ldexp(v[0], k)
    except OverflowError:  # C ldexp semantics: saturate to infinity
        return _INF, 0.0
    if math.isinf(out_hi):
        return out_hi, 0.0
    return out_hi, math.ldexp(v[1], k)


def _exp(x: float) -> tuple[float, float]:
    if math.isinf(x):
        return (_INF, 0.0) if x > 0 else (0.0, 0.0)
    if math.isnan(x):
        return _NAN, 0.0
    if x == 0.0:
        return 1.0, 0.0
    return _exp_of_dd((x, 0.0))


def _log_parts(x: float) -> tuple[int, tuple[float, float]]:
    """Finite positive x as k*ln2 + lnm, returning (k, lnm as double-double).

    Arguments within 2^-10 of 1 take a Taylor path on x-1 so that the tiny
    logarithm keeps full relative accuracy; elsewhere one Newton step against
    the extended exp refines the native seed.
    """
    if 1.0 - _LOG_NEAR_ONE < x < 1.0 + _LOG_NEAR_ONE:
        u = x - 1.0  # exact (Sterbenz)
        if u == 0.0:
            return 0, (0.0, 0.0)
        q = _poly_dd(_LOG_COEFS, (u, 0.0))
        return 0, _dd_mul_d(q, u)
    fr, ex = math.frexp(x)
    m = 2.0 * fr
    k = ex - 1
    if m > _SQRT2:
        m *= 0.5
        k += 1
    y0 = math.log(m)
    p = _dd_mul_d(_exp_of_dd((-y0, 0.0)), m)
    lnm = _dd_add_d(_dd_add_d(p, -1.0), y0)
    return k, lnm


def _log(x: float) -> tuple[float, float]:
    if math.isnan(x):
        return _NAN, 0.0
    if x == 0.0:
        return -_INF, 0.0
    if x < 0.0:
        return _NAN, 0.0
    if math.isinf(x):
        return _INF, 0.0
    k, lnm = _log_parts(x)
    if k == 0:
        return lnm
    return _dd_add(_dd_mul_d(_LN2_DD, float(k)), lnm)


def _log2(x: float) -> tuple[float, float]:
    if math.isnan(x):
        return _NAN, 0.0
    if x == 0.0:
        return -_INF, 0.0
    if x < 0.0:
        return _NAN, 0.0
    if math.isinf(x):
        return _INF, 0.0
    k, lnm = _log_parts(x)
    q = _dd_div(lnm, _LN2_DD)
    if k == 0:
        return q
    return _dd_add_d(q, float(k))


def _log10(x: float) -> tuple[float, float]:
    if math.isnan(x):
        return _NAN, 0.0
    if x == 0.0:
        return -_INF, 0.0
    if x < 0.0:
        return _NAN, 0.0
    if math.isinf(x):
        return _INF, 0.0
    k, lnm = _log_parts(x)
    if k == 0:
        lnx = lnm
    else:
        lnx = _dd_add(_dd_mul_d(_LN2_DD, float(k)), lnm)
    return _dd_div(lnx, _LN10_DD)


def _pow(x: float, y: float) -> tuple[float, float]:
    # C99/IEEE special-case table
    if y == 0.0:
        return 1.0, 0.0
    if x == 1.0:
        return 1.0, 0.0
    if math.isnan(x) or math.isnan(y):
        return _NAN, 0.0
    y_int = y == math.floor(y) if math.isfinite(y) else False
    y_odd = y_int and math.fmod(abs(y), 2.0) == 1.0
    if math.isinf(y):
        ax = abs(x)
        if ax == 1.0:
            return 1.0, 0.0
        if (ax < 1.0) == (y < 0.0):
            return _INF, 0.0
        return 0.0, 0.0
    if x == 0.0:
        neg = math.copysign(1.0, x) < 0 and y_odd
        if y > 0.0:
            return (-0.0 if neg else 0.0), 0.0
        return (-_INF if neg else _INF), 0.0
    if math.isinf(x):
        if x > 0.0:
            return (_INF, 0.0) if y > 0.0 else (0.0, 0.0)
        if y > 0.0:
            return (-_INF if y_odd else _INF), 0.0
        return (-0.0 if y_odd else 0.0), 0.0
    if x < 0.0:
        if not y_int:
            return _NAN, 0.0
        v = _pow_finite(-x, y)
        return _dd_neg(v) if y_odd else v
    return _pow_finite(x, y)


def _pow_finite(x: float, y: float) -> tuple[float, float]:
    k, lnm = _log_parts(x)
    lnx = lnm if k == 0 else _dd_add(_dd_mul_d(_LN2_DD, float(k)), lnm)
    w = _dd_mul_d(lnx, y)
    if math.isnan(w[0]) and lnx[0] != 0.0:
        # the y*ln(x) product overflowed inside the pair arithmetic; its sign
        # decides saturation to exp(+inf)=inf or exp(-inf)=0
        sign = math.copysign(1.0, y) * math.copysign(1.0, lnx[0])
        w = (math.copysign(_INF, sign), 0.0)
    return _exp_of_dd(w)


# ---------------------------------------------------------------------------
# inverse trigonometric kernel
# ---------------------------------------------------------------------------


def _atan2_core(y: tuple[float, float], x: tuple[float, float]) -> tuple[float, float]:
    """atan2 of double-double coordinates; both finite, not both zero."""
    z0 = math.atan2(y[0], x[0])
    rr = _dd_sqrt(_dd_add(_dd_sqr(x), _dd_sqr(y)))
    xn = _dd_div(x, rr)
    yn = _dd_div(y, rr)
    sin_z, cos_z = _sincos_core(z0)
    if abs(xn[0]) > abs(yn[0]):
        corr = _dd_div(_dd_sub(yn, sin_z), cos_z)
        return _dd_add_d(corr, z0)
    corr = _dd_div(_dd_sub(xn, cos_z), sin_z)
    return _dd_add_d(_dd_neg(corr), z0)


def _atan2(y: float, x: float) -> tuple[float, float]:
    if math.isnan(x) or math.isnan(y):
        return _NAN, 0.0
    if y == 0.0:
        neg_y = math.copysign(1.0, y) < 0
        if x > 0.0 or (x == 0.0 and math.copysign(1.0, x) > 0):
            return math.copysign(0.0, y), 0.0
        pi = _PI_DD
        return ((-pi[0], -pi[1]) if neg_y else pi)
    if x == 0.0:
        h = _PI_HALF_DD
        return ((-h[0], -h[1]) if y < 0 else h)
    if math.isinf(y):
        if math.isinf(x):
            base = _PI_QUARTER_DD if x > 0 else _THREE_PI_QUARTER_DD
        else:
            base = _PI_HALF_DD
        return ((-base[0], -base[1]) if y < 0 else base)
    if math.isinf(x):
        if x > 0:
            return math.copysign(0.0, y), 0.0
        pi = _PI_DD
        return ((-pi[0], -pi[1]) if y < 0 else pi)
    my, ey = math.frexp(y)
    mx, ex = math.frexp(x)
    if x > 0.0 and ey - ex < -55:
        # atan(t) == t to beyond double-double precision here; divide the
        # mantissas so no intermediate touches the subnormal range
        q = _dd_div((my, 0.0), (mx, 0.0))
        return math.ldexp(q[0], ey - ex), math.ldexp(q[1], ey - ex)
    # scale both by a common power of two; atan2 is scale-invariant
    k = max(ex, ey)
    ys = math.ldexp(y, -k)
    xs = math.ldexp(x, -k)
    return _atan2_core((ys, 0.0), (xs, 0.0))


def _atan(x: float) -> tuple[float, float]:
    if math.isnan(x):
        return _NAN, 0.0
    if x == 0.0:
        return x, 0.0
    if math.isinf(x):
        h = _PI_HALF_DD
        return ((-h[0], -h[1]) if x < 0 else h)
    return _atan2(x, 1.0)


def _asin(x: float) -> tuple[float, float]:
    if math.isnan(x):
        return _NAN, 0.0
    if x == 0.0:
        return x, 0.0
    ax = abs(x)
    if ax > 1.0:
        return _NAN, 0.0
    if ax == 1.0:
        h = _PI_HALF_DD
        return ((-h[0], -h[1]) if x < 0 else h)
    s = _dd_sqrt(_dd_sub((1.0, 0.0), _dd_sqr((x, 0.0))))
    return _atan2_core((x, 0.0), s)


def _acos(x: float) -> tuple[float, float]:
    if math.isnan(x):
        return _NAN, 0.0
    ax = abs(x)
    if ax > 1.0:
        return _NAN, 0.0
    if x == 1.0:
        return 0.0, 0.0
    if x == -1.0:
        return _PI_DD
    if x == 0.0:
        return _PI_HALF_DD
    s = _dd_sqrt(_dd_sub((1.0, 0.0), _dd_sqr((x, 0.0))))
    return _atan2_core(s, (x, 0.0))


# ---------------------------------------------------------------------------
# roots and remainders
# ---------------------------------------------------------------------------


def _sqrt(x: float) -> tuple[float, float]:
    if x == 0.0:
        return x, 0.0
    if math.isnan(x) or x < 0.0:
        return _NAN, 0.0
    if math.isinf(x):
        return _INF, 0.0
    # scale by a power of four so the kernel runs far from under/overflow
    fr, ex = math.frexp(x)
    e2 = ex - 1
    t, odd = divmod(e2, 2)
    xs = math.ldexp(fr, 1 + odd)  # in [1, 4)
    s = _dd_sqrt((xs, 0.0))
    return math.ldexp(s[0], t), math.ldexp(s[1], t)


def _cbrt(x: float) -> tuple[float, float]:
    if x == 0.0 or math.isnan(x) or math.isinf(x):
        return x, 0.0
    sign = -1.0 if x < 0.0 else 1.0
    ax = abs(x)
    fr, ex = math.frexp(ax)
    t = (ex - 1) // 3
    m = math.ldexp(ax, -3 * t)  # in [1, 8)
    c: tuple[float, float] = (m ** (1.0 / 3.0), 0.0)
    for _ in range(2):
        c2 = _dd_sqr(c)
        num = _dd_add_d(_dd_mul(c2, c), -m)
        c = _dd_sub(c, _dd_div(num, _dd_mul_d(c2, 3.0)))
    return sign * math.ldexp(c[0], t), sign * math.ldexp(c[1], t)


def _hypot(x: float, y: float) -> tuple[float, float]:
    if math.isinf(x) or math.isinf(y):
        return _INF, 0.0
    if math.isnan(x) or math.isnan(y):
        return _NAN, 0.0
    if x == 0.0 and y == 0.0:
        return 0.0, 0.0
    k = max(math.frexp(x)[1], math.frexp(y)[1])
    xs = math.ldexp(x, -k)
    ys = math.ldexp(y, -k)
    s = _dd_sqrt(_dd_add(_dd_sqr((xs, 0.0)), _dd_sqr((ys, 0.0))))
    return math.ldexp(s[0], k), math.ldexp(s[1], k)


def _fmod(x: float, y: float) -> tuple[float, float]:
    if math.isnan(x) or math.isnan(y) or math.isinf(x) or y == 0.0:
        return _NAN, 0.0
    if math.isinf(y) or x == 0.0:
        return x, 0.0
    return math.fmod(x, y), 0.0


def _floor(x: float) -> tuple[float, float]:
    if not math.isfinite(x):
        return x, 0.0
    v = float(math.floor(x))
    if v == 0.0:
        v = math.copysign(0.0, x)
    return v, 0.0


def _ceil(x: float) -> tuple[float, float]:
    if not math.isfinite(x):
        return x, 0.0
    v = float(math.ceil(x))
    if v == 0.0:
        v = math.copysign(0.0, x)
    return v, 0.0


def _fabs(x: float) -> tuple[float, float]:
    return math.fabs(x), 0.0


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

_UNARY = {
    "sin": _sin,
    "cos": _cos,
    "tan": _tan,
    "asin": _asin,
    "acos": _acos,
    "atan": _atan,
    "exp": _exp,
    "log": _log,
    "log2": _log2,
    "log10": _log10,
    "sqrt": _sqrt,
    "cbrt": _cbrt,
    "floor": _floor,
    "ceil": _ceil,
    "fabs": _fabs,
}

_BINARY = {
    "atan2": _atan2,
    "pow": _pow,
    "hypot": _hypot,
    "fmod": _fmod,
}


def _ev(pair: tuple[float, float]) -> ExtendedValue:
    hi, lo = pair
    if hi == 0.0 or not math.isfinite(hi):
        return ExtendedValue(hi, 0.0)
    return ExtendedValue(hi, lo)


def eval_extended(func, x: float, y: float | None = None):
    """Evaluate a supported function to extended precision.

    ``func`` is a :class:`MathFunction` or its name.  Returns an
    :class:`ExtendedValue`, or a pair of them for ``sincos``.  A second
    argument is required exactly for the two-argument functions.
    """
    name = func.name if isinstance(func, MathFunction) else func
    if name not in FUNCTIONS:
        raise ValueError(f"unsupported function {name!r}")
    arity = FUNCTIONS[name].arity
    if (y is not None) != (arity == 2):
        raise TypeError(f"{name} takes {arity} argument(s)")
    x = float(x)
    if name == "sincos":
        s, c = _sincos(x)
        return _ev(s), _ev(c)
    if arity == 1:
        return _ev(_UNARY[name](x))
    return _ev(_BINARY[name](x, float(y)))
