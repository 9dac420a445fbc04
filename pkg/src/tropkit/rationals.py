"""Exact rational literals.

All file formats carry rationals as strings "p/q" or "p" (and "-inf" for
the tropical zero).  Decimal strings are rejected so that no value ever
passes through floating point.
"""

import re
from fractions import Fraction

from .errors import InputError

_RAT_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")

NEG_INF_LITERAL = "-inf"


def parse_rational(s):
    """Parse "p/q" or "p" into a Fraction.  Decimals are an input error."""
    if not isinstance(s, str) or not _RAT_RE.match(s.strip()):
        raise InputError(f"bad rational literal {s!r} (expected 'p/q' or 'p')")
    return Fraction(s.strip())


def format_rational(x):
    """Canonical string form: "p" for integers, "p/q" otherwise."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
