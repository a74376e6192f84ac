"""vpreclibm: profile and tune per-call-site output precision of libm calls.

The package pairs a preloadable shared object, which intercepts the binary64
math entry points of dynamically linked programs, with pure-Python tooling:
reduced-format rounding, an extended-precision function evaluator, profile
and precision-config file formats, a dichotomic precision explorer, and a
CSV/SVG reporter.
"""

from .extmath import FUNCTIONS, FUNCTION_NAMES, ExtendedValue, MathFunction, eval_extended
from .formats import (
    BINARY32,
    BINARY64,
    FloatFormat,
    RoundedResult,
    RoundFlag,
    is_representable,
    round_to_format,
)

__all__ = [
    "FloatFormat",
    "RoundFlag",
    "RoundedResult",
    "round_to_format",
    "is_representable",
    "BINARY32",
    "BINARY64",
    "ExtendedValue",
    "MathFunction",
    "FUNCTIONS",
    "FUNCTION_NAMES",
    "eval_extended",
]

__version__ = "0.1.0"
