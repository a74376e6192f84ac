#!/usr/bin/env python3
"""Regenerate tests/data/extended_references.py from a multiprecision oracle.

The reference values are computed with mpmath at 220 bits and frozen as
hi/lo hex pairs (hi = nearest binary64, lo = nearest binary64 of the
remainder).  The test suite treats the frozen file as the oracle; this
script only exists so a reviewer can re-derive it.
"""

import math
import os

import mpmath as mp

mp.mp.prec = 220

CASES = [
    # transcendental
    ("sin", (1.0,), lambda a: mp.sin(a[0])),
    ("sin", (0.5,), lambda a: mp.sin(a[0])),
    ("sin", (1e10,), lambda a: mp.sin(a[0])),
    ("sin", (float.fromhex("0x1.6ac5b262ca1ffp+849"),), lambda a: mp.sin(a[0])),
    ("sin", (3.141592653589793,), lambda a: mp.sin(a[0])),
    ("cos", (1.0,), lambda a: mp.cos(a[0])),
    ("cos", (2.5,), lambda a: mp.cos(a[0])),
    ("cos", (1.5707963267948966,), lambda a: mp.cos(a[0])),
    ("tan", (1.2,), lambda a: mp.tan(a[0])),
    ("tan", (-4.7,), lambda a: mp.tan(a[0])),
    ("asin", (0.7,), lambda a: mp.asin(a[0])),
    ("asin", (-0.9999,), lambda a: mp.asin(a[0])),
    ("acos", (-0.3,), lambda a: mp.acos(a[0])),
    ("acos", (0.99999988079071,), lambda a: mp.acos(a[0])),
    ("atan", (3.7,), lambda a: mp.atan(a[0])),
    ("atan", (-1e-8,), lambda a: mp.atan(a[0])),
    ("atan2", (-2.5, 1.75), lambda a: mp.atan2(a[0], a[1])),
    ("atan2", (1e-30, -1.0), lambda a: mp.atan2(a[0], a[1])),
    ("exp", (1.0,), lambda a: mp.exp(a[0])),
    ("exp", (-50.25,), lambda a: mp.exp(a[0])),
    ("exp", (700.1,), lambda a: mp.exp(a[0])),
    ("log", (7.25,), lambda a: mp.log(a[0])),
    ("log", (1.0 + 2.0 ** -30,), lambda a: mp.log(a[0])),
    ("log", (1e-300,), lambda a: mp.log(a[0])),
    ("log2", (10.0,), lambda a: mp.log(a[0]) / mp.log(2)),
    ("log2", (0.7,), lambda a: mp.log(a[0]) / mp.log(2)),
    ("log10", (12345.678,), lambda a: mp.log(a[0]) / mp.log(10)),
    ("pow", (2.5, 3.25), lambda a: mp.power(a[0], a[1])),
    ("pow", (1.0000001, 12345.0), lambda a: mp.power(a[0], a[1])),
    ("pow", (2.0, 0.5), lambda a: mp.power(a[0], a[1])),
    ("sqrt", (2.0,), lambda a: mp.sqrt(a[0])),
    ("sqrt", (1.2345e-200,), lambda a: mp.sqrt(a[0])),
    ("cbrt", (17.0,), lambda a: mp.cbrt(a[0])),
    ("cbrt", (-17.0,), lambda a: -mp.cbrt(-a[0])),
    ("hypot", (3e200, 4e200), lambda a: mp.hypot(a[0], a[1])),
    ("hypot", (1.5e-200, -2.5e-200), lambda a: mp.hypot(a[0], a[1])),
    ("sincos", (0.5,), lambda a: (mp.sin(a[0]), mp.cos(a[0]))),
    # exact by definition
    ("fabs", (-3.5,), lambda a: mp.mpf(3.5)),
    ("floor", (2.75,), lambda a: mp.mpf(2.0)),
    ("floor", (-2.25,), lambda a: mp.mpf(-3.0)),
    ("ceil", (-2.25,), lambda a: mp.mpf(-2.0)),
    ("fmod", (7.5, 2.25), lambda a: mp.fmod(a[0], a[1])),
]


def hi_lo(v: mp.mpf) -> tuple[str, str]:
    hi = float(v)
    lo = float(v - mp.mpf(hi))
    return float.hex(hi), float.hex(lo)


def main() -> None:
    out = os.path.join(os.path.dirname(__file__), "..", "tests", "data", "extended_references.py")
    lines = [
        '"""Frozen multiprecision references (mpmath, 220 bits).',
        "",
        "Generated by tools/gen_reference_fixtures.py; do not edit by hand.",
        '"""',
        "",
        "REFERENCES = [",
    ]
    for name, args, fn in CASES:
        ref = fn([mp.mpf(a) for a in args])
        if isinstance(ref, tuple):
            refs = [hi_lo(r) for r in ref]
        else:
            refs = [hi_lo(ref)]
        args_repr = ", ".join(float.hex(float(a)) for a in args)
        refs_repr = ", ".join(f'("{h}", "{l}")' for h, l in refs)
        lines.append(f'    ("{name}", ({args_repr!s},), [{refs_repr}]),'.replace(f"({args_repr!s},)", "(" + ", ".join(f'float.fromhex("{float.hex(float(a))}")' for a in args) + ",)"))
    lines.append("]")
    with open(out, "w") as f:
        f.write("\n".join(lines) + "\n")
    print(f"wrote {len(CASES)} cases to {out}")
    assert len(CASES) >= 20


if __name__ == "__main__":
    main()
