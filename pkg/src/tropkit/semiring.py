"""The tropical semifield: reals with -infinity under (max, +).

Scalars are exact: finite values are Fractions in lowest terms, and the
additive zero -inf is a distinguished variant rather than a sentinel
number, so no ordinary arithmetic can touch it by accident.
"""

from fractions import Fraction

from .errors import DomainError, InputError
from .rationals import NEG_INF_LITERAL, format_rational, parse_rational


class TropicalScalar:
    """An element of R union {-inf}; immutable, equality is structural."""

    __slots__ = ("_v",)

    def __init__(self, value=None):
        if value is None:
            self._v = None
        elif isinstance(value, TropicalScalar):
            self._v = value._v
        elif isinstance(value, float):
            raise InputError("tropical scalars are exact; floats are not accepted")
        else:
            self._v = Fraction(value)

    @property
    def is_neg_inf(self):
        return self._v is None

    @property
    def finite_value(self):
        """The underlying Fraction; undefined for -inf."""
        if self._v is None:
            raise DomainError("-inf has no finite value")
        return self._v

    def __eq__(self, other):
        if not isinstance(other, TropicalScalar):
            return NotImplemented
        return self._v == other._v

    def __hash__(self):
        return hash(("TropicalScalar", self._v))

    def __le__(self, other):
        if self._v is None:
            return True
        if other._v is None:
            return False
        return self._v <= other._v

    def __lt__(self, other):
        return self <= other and self != other

    # Tropical operator sugar: + is max, * is addition, ** is scaling.
    def __add__(self, other):
        return trop_add(self, other)

    def __mul__(self, other):
        return trop_mul(self, other)

    def __pow__(self, k):
        return trop_pow(self, k)

    def __repr__(self):
        return f"TropicalScalar({str(self)!r})"

    def __str__(self):
        if self._v is None:
            return NEG_INF_LITERAL
        return format_rational(self._v)

    @classmethod
    def parse(cls, s):
        if isinstance(s, str) and s.strip() == NEG_INF_LITERAL:
            return NEG_INF
        return cls(parse_rational(s))


NEG_INF = TropicalScalar()        # additive zero 0_T
ZERO = TropicalScalar(0)          # multiplicative unit 1_T


def trop_add(a, b):
    """Tropical sum: max(a, b), with -inf the least element."""
    if a._v is None:
        return b
    if b._v is None:
        return a
    return a if a._v >= b._v else b


def trop_mul(a, b):
    """Tropical product: ordinary addition; -inf absorbs."""
    if a._v is None or b._v is None:
        return NEG_INF
    return TropicalScalar(a._v + b._v)


def trop_pow(a, k):
    """Tropical k-th power: the rational multiple k*a.

    k = 0 gives the unit.  Negative k inverts, which is undefined for -inf.
    """
    k = int(k)
    if a._v is None:
        if k < 0:
            raise DomainError("negative tropical power of -inf")
        if k == 0:
            return ZERO
        return NEG_INF
    return TropicalScalar(a._v * k)
