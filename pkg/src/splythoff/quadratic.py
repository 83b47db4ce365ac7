"""Exact arithmetic on quadratic irrationals (p + q*sqrt(d)) / r.

All comparisons and floors are decided with integer arithmetic only;
no floating point appears on any result path.
"""

from dataclasses import dataclass
from math import gcd, isqrt


def squarefree_split(d):
    """Write d = s * f**2 with s squarefree; returns (s, f)."""
    if d < 0:
        raise ValueError("d must be non-negative")
    s, f = d, 1
    t = 2
    while t * t <= s:
        tt = t * t
        while s % tt == 0:
            s //= tt
            f *= t
        t += 1
    return s, f


@dataclass(frozen=True, eq=False)
class QuadraticIrrational:
    """Canonical (p + q*sqrt(d)) / r with r > 0, gcd(p, q, r) = 1, d squarefree.

    Rational values are stored with q = 0 and d = 1.
    """

    p: int
    q: int = 0
    d: int = 1
    r: int = 1

    def __post_init__(self):
        p, q, d, r = self.p, self.q, self.d, self.r
        if r == 0:
            raise ZeroDivisionError("r must be non-zero")
        if d < 1:
            raise ValueError("d must be positive")
        s, f = squarefree_split(d)
        q *= f
        d = s
        if d == 1:
            p += q
            q = 0
        if q == 0:
            d = 1
        if r < 0:
            p, q, r = -p, -q, -r
        g = gcd(gcd(abs(p), abs(q)), r)
        if g > 1:
            p, q, r = p // g, q // g, r // g
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "r", r)

    # -- predicates ---------------------------------------------------------

    @property
    def is_rational(self):
        return self.q == 0

    @property
    def is_integer(self):
        return self.q == 0 and self.r == 1

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, int):
            return QuadraticIrrational(other)
        if isinstance(other, QuadraticIrrational):
            return other
        return NotImplemented

    def _common_d(self, other):
        if self.q == 0:
            return other.d
        if other.q == 0:
            return self.d
        if self.d != other.d:
            raise ValueError(f"incompatible radicals sqrt({self.d}) and sqrt({other.d})")
        return self.d

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = self._common_d(other)
        p = self.p * other.r + other.p * self.r
        q = self.q * other.r + other.q * self.r
        return QuadraticIrrational(p, q, d, self.r * other.r)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticIrrational(-self.p, -self.q, self.d, self.r)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = self._common_d(other)
        p = self.p * other.p + self.q * other.q * d
        q = self.p * other.q + self.q * other.p
        return QuadraticIrrational(p, q, d, self.r * other.r)

    __rmul__ = __mul__

    def inverse(self):
        norm = self.p * self.p - self.q * self.q * self.d
        if norm == 0:
            raise ZeroDivisionError("inverse of zero")
        return QuadraticIrrational(self.r * self.p, -self.r * self.q, self.d, norm)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    # -- order --------------------------------------------------------------

    def sign(self):
        """Sign of the value: -1, 0 or 1."""
        p, q, d = self.p, self.q, self.d
        if q == 0:
            return (p > 0) - (p < 0)
        if p == 0:
            return 1 if q > 0 else -1
        if p > 0 and q > 0:
            return 1
        if p < 0 and q < 0:
            return -1
        # Opposite signs: compare p**2 with q**2 * d.
        lhs, rhs = p * p, q * q * d
        if p > 0:  # q < 0
            return (lhs > rhs) - (lhs < rhs)
        return (rhs > lhs) - (rhs < lhs)

    def _cmp(self, other):
        diff = self - other
        return diff.sign()

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        # Canonical form makes structural equality value equality.
        return (self.p, self.q, self.d, self.r) == (other.p, other.q, other.d, other.r)

    def __hash__(self):
        return hash((self.p, self.q, self.d, self.r))

    def __lt__(self, other):
        return self._cmp(self._coerce(other)) < 0

    def __le__(self, other):
        return self._cmp(self._coerce(other)) <= 0

    def __gt__(self, other):
        return self._cmp(self._coerce(other)) > 0

    def __ge__(self, other):
        return self._cmp(self._coerce(other)) >= 0

    # -- floor --------------------------------------------------------------

    def floor(self):
        """Exact floor of the value."""
        p, q, d, r = self.p, self.q, self.d, self.r
        if q >= 0:
            root = isqrt(q * q * d)  # floor(q * sqrt(d))
        else:
            t = isqrt(q * q * d)
            root = -t if t * t == q * q * d else -t - 1
        # q*sqrt(d) is either an integer (q == 0) or irrational, so
        # floor(p + q*sqrt(d)) == p + root exactly.
        return (p + root) // r

    def __float__(self):
        from math import sqrt

        return (self.p + self.q * sqrt(self.d)) / self.r

    def __str__(self):
        if self.q == 0:
            return f"{self.p}/{self.r}" if self.r != 1 else str(self.p)
        return f"({self.p}+{self.q}*sqrt({self.d}))/{self.r}"


def sqrt_of(d):
    """The quadratic irrational sqrt(d)."""
    return QuadraticIrrational(0, 1, d)


GOLDEN_RATIO = QuadraticIrrational(1, 1, 5, 2)
