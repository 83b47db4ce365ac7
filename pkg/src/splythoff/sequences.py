"""Mex-rule table generators and exact Beatty sequence machinery.

The generators rebuild the Wythoff, Splythoff and Quadribonacci tables
from nothing but minimal-excluded-value bookkeeping; the Beatty side
provides exact floors of k*alpha + gamma over quadratic fields, the
complementarity conditions, and Sturmian words.
"""

from dataclasses import dataclass
from math import isqrt

from .quadratic import GOLDEN_RATIO, QuadraticIrrational, sqrt_of


def mex(values, positive=False):
    """Least element of N (or of {1,2,...} when positive) absent from values."""
    s = set(values)
    m = 1 if positive else 0
    while m in s:
        m += 1
    return m


class _MexTracker:
    """Amortized O(1) mex over {start, start+1, ...} under insertions."""

    __slots__ = ("seen", "cursor")

    def __init__(self, start=1):
        self.seen = set()
        self.cursor = start

    def add(self, value):
        self.seen.add(value)

    def mex(self):
        seen = self.seen
        m = self.cursor
        while m in seen:
            m += 1
        self.cursor = m
        return m


@dataclass
class MexTable:
    """Named strictly increasing rows of equal length."""

    kind: str
    row_names: list
    rows: dict

    def row(self, name):
        return self.rows[name]

    @property
    def columns(self):
        return len(self.rows[self.row_names[0]])


def wythoff_columns(n):
    """First n Wythoff P-position columns by the mex recursion."""
    if n < 1:
        raise ValueError("n must be at least 1")
    a_row, b_row = [], []
    tracker = _MexTracker()
    for i in range(1, n + 1):
        a = tracker.mex()
        b = a + i
        a_row.append(a)
        b_row.append(b)
        tracker.add(a)
        tracker.add(b)
    return MexTable("wythoff", ["A", "B"], {"A": a_row, "B": b_row})


def splythoff_columns(n):
    """First n Splythoff table columns (Delta, A, B, Sigma) by the mex rule."""
    if n < 1:
        raise ValueError("n must be at least 1")
    rows = {"Delta": [], "A": [], "B": [], "Sigma": []}
    ab = _MexTracker()
    ds = _MexTracker()
    for _ in range(n):
        delta = ds.mex()
        a = ab.mex()
        b = a + delta
        sigma = a + b
        for name, v in (("Delta", delta), ("A", a), ("B", b), ("Sigma", sigma)):
            rows[name].append(v)
        ab.add(a)
        ab.add(b)
        ds.add(delta)
        ds.add(sigma)
    return MexTable("splythoff", ["Delta", "A", "B", "Sigma"], rows)


QUADRIBONACCI_ROWS = ["a0", "b0", "x0", "a1", "x1", "x2", "x3", "a2", "b2"]


def quadribonacci_columns(n):
    """The nine Quadribonacci sequences generated by the double mex rule.

    a-rows rebuild the difference table, x-rows the positions table,
    b0 the first double-difference row and b2 the sum row.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    rows = {name: [] for name in QUADRIBONACCI_ROWS}
    diff = _MexTracker()  # over the three difference rows
    ddiff = _MexTracker()  # over dD0, dD1 and the sum row
    pos = _MexTracker()  # over the four position rows
    for i in range(1, n + 1):
        a0 = diff.mex()
        b0 = ddiff.mex()
        x0 = pos.mex()
        a1 = a0 + b0
        x1 = x0 + a0
        x2 = x1 + a1
        x3 = x0 + x1 + x2 + i
        a2 = x3 - x2
        d1 = a2 - a1  # second double-difference row, feeds the ddiff mex
        b2 = a0 + a1 + a2  # sum row
        for name, v in zip(QUADRIBONACCI_ROWS, (a0, b0, x0, a1, x1, x2, x3, a2, b2)):
            rows[name].append(v)
        for v in (a0, a1, a2):
            diff.add(v)
        for v in (b0, d1, b2):
            ddiff.add(v)
        for v in (x0, x1, x2, x3):
            pos.add(v)
    return MexTable("quadribonacci", QUADRIBONACCI_ROWS, rows)


# -- Beatty machinery -------------------------------------------------------


def beatty_floor(alpha, gamma, kk):
    """Exact floor(kk * alpha + gamma)."""
    if kk < 0:
        raise ValueError("index must be non-negative")
    return (alpha * kk + gamma).floor()


def beatty_sequence(alpha, gamma, n, start=1):
    """[floor(k*alpha + gamma) for k = start .. start+n-1].

    Exact, using one integer square root per term on the expanded
    representation (P + Q*sqrt(d)) / R instead of full field arithmetic.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    gamma = gamma if isinstance(gamma, QuadraticIrrational) else QuadraticIrrational(gamma)
    d = alpha._common_d(gamma)
    big_r = alpha.r * gamma.r
    p0, q0 = gamma.p * alpha.r, gamma.q * alpha.r
    p1, q1 = alpha.p * gamma.r, alpha.q * gamma.r
    out = []
    for k in range(start, start + n):
        p = p0 + k * p1
        q = q0 + k * q1
        t = isqrt(q * q * d)
        if q < 0:
            root = -t if t * t == q * q * d else -t - 1
        else:
            root = t
        out.append((p + root) // big_r)
    return out


@dataclass(frozen=True)
class BeattyPair:
    """Offsets for the pair floor(k*alpha+gamma), floor(k*beta+delta), k >= 1."""

    alpha: QuadraticIrrational
    beta: QuadraticIrrational
    gamma: QuadraticIrrational
    delta: QuadraticIrrational

    def a_sequence(self, n):
        return beatty_sequence(self.alpha, self.gamma, n)

    def b_sequence(self, n):
        return beatty_sequence(self.beta, self.delta, n)


def skolem_fraenkel_check(pair):
    """Exact complementarity conditions for a non-homogeneous Beatty pair.

    Checks 1/alpha + 1/beta == 1 and gamma/alpha + delta/beta == 0 for
    1-indexed sequences, requiring alpha and beta irrational with
    1 < alpha < 2 < beta.  Degenerate pairs where alpha + gamma is an
    integer are rejected.
    """
    alpha, beta, gamma, delta = pair.alpha, pair.beta, pair.gamma, pair.delta
    if alpha.is_rational or beta.is_rational:
        return False
    if not (QuadraticIrrational(1) < alpha < 2 < beta):
        return False
    if (alpha + gamma).is_integer:
        return False
    if 1 / alpha + 1 / beta != 1:
        return False
    return gamma / alpha + delta / beta == 0


def wythoff_ab_params(a, b):
    """The Beatty pair whose differences B_k - A_k sweep the (a, b) family.

    alpha is the positive root of x**2 + (a-2)*x - a, beta = alpha + a.
    b = a gives the homogeneous a-Wythoff pair (gamma = delta = 0); b = a+1
    gives the shifted family (for a = 1 this is the k+1 difference table).
    """
    if a < 1:
        raise ValueError("a must be positive")
    if not 0 < b <= a + 1:
        raise ValueError(f"b must satisfy 0 < b <= a+1, got b={b} for a={a}")
    d = a * a + 4
    alpha = QuadraticIrrational(2 - a, 1, d, 2)
    beta = alpha + a
    gamma = 2 - alpha - b / beta
    delta = 2 - beta + b / alpha
    return BeattyPair(alpha, beta, gamma, delta)


# -- Sturmian words ---------------------------------------------------------


def sturmian_word(rho, x, n):
    """First n letters u_k = floor(k*rho+x) - floor((k-1)*rho+x), k from 1."""
    if rho.is_rational or not (QuadraticIrrational(0) < rho < 1):
        raise ValueError("rho must be irrational in (0, 1)")
    if not (QuadraticIrrational(0) <= x < 1):
        raise ValueError("x must lie in [0, 1)")
    if n < 0:
        raise ValueError("n must be non-negative")
    letters = bytearray()
    prev = x.floor()
    for k in range(1, n + 1):
        cur = beatty_floor(rho, x, k)
        letters.append(cur - prev)
        prev = cur
    return bytes(letters)


def sturmian_zero_positions(rho, x, n):
    """The Beatty locations floor(k*(rho+1) + x) for k = 1..n.

    For offset x = 0 the word's ones sit exactly one step after these
    locations; the complementary gaps carry the zeroes.
    """
    return [beatty_floor(rho + 1, x, k) for k in range(1, n + 1)]
