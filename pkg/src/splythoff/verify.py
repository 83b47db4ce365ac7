"""Named cross-verification suites tying the independent generators together.

Every check rebuilds its data by at least two unrelated methods (mex rule
vs. substitution scan vs. retrograde game solving, or computed grid vs.
frozen oracle) and reports pass/fail with a concrete counterexample.
"""

import time
from dataclasses import dataclass, field

from . import games, sequences, tables, words

# Frozen oracle: Sprague-Grundy values of Splythoff Nim on the 18x18 board,
# one line per second-pile size n = 17 down to n = 0, columns m = 0..17.
# An "i" prefix marks cells whose value differs from the Wythoff grid.
GOLDEN_SG_18 = """
17 i13 i18 i20 i12 11 i15 i22 i14 i4 i1 i19 i16 i10 i7 24 25 21
16 17 15 i19 i20 i14 i21 i12 i22 i0 i5 i8 6 i24 i10 9 13 25
15 16 i14 18 i19 i17 i20 i21 i12 i2 i4 i22 i23 i7 i8 i11 9 24
14 i15 i16 i17 i18 i13 i12 i19 i1 i3 i20 i21 i22 i23 i9 i8 i10 i7
13 14 12 11 i8 i16 17 i0 i9 5 6 i18 i21 i19 i23 i7 i24 i10
12 i9 i13 i7 11 i15 i14 i2 18 i8 i19 i20 10 i21 i22 i23 6 i16
11 i12 10 i13 i14 i9 i0 i16 17 6 i7 15 i20 i18 i21 i22 i8 i19
10 11 9 8 13 12 i2 15 16 17 14 i7 i19 6 i20 i4 i5 i1
9 10 11 12 i1 7 13 14 15 16 17 6 i8 5 i3 i2 i0 i4
8 6 7 10 i0 2 5 3 4 15 16 17 18 i9 i1 i12 i22 i14
7 8 6 9 i10 1 4 5 3 14 15 i16 i2 i0 i19 i21 i12 i22
6 7 8 1 9 10 3 4 5 13 i2 i0 i14 17 i12 i20 i21 i15
5 3 4 0 6 8 10 1 2 7 12 i9 i15 i16 i13 i17 i14 11
4 5 3 2 7 6 9 i10 i0 i1 13 i14 11 i8 i18 i19 i20 i12
3 4 5 6 2 0 1 9 10 12 8 i13 i7 11 i17 18 i19 i20
2 0 1 5 3 4 8 6 7 11 9 10 i13 12 i16 i14 15 i18
1 2 0 4 5 3 7 8 6 10 11 i12 i9 14 i15 16 17 i13
0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17
""".strip()


def golden_sg_table():
    """(values, italics): 18x18 value map m,n -> value and the italic cell set."""
    values = {}
    italics = set()
    lines = GOLDEN_SG_18.splitlines()
    for r, line in enumerate(lines):
        n = len(lines) - 1 - r
        for m, tok in enumerate(line.split()):
            if tok.startswith("i"):
                italics.add((m, n))
                tok = tok[1:]
            values[(m, n)] = int(tok)
    return values, italics


@dataclass
class VerificationReport:
    name: str
    params: dict
    passed: bool
    counterexample: object = None
    seconds: float = 0.0

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        extra = "" if self.passed else f"  counterexample={self.counterexample!r}"
        ps = " ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{status} {self.name} ({ps}) [{self.seconds:.2f}s]{extra}"


def _report(name, params, passed, counterexample, t0):
    return VerificationReport(name, params, passed, counterexample, time.time() - t0)


def check_theorem1(n=1000):
    """Solver, mex rule and letter-position differences agree on n columns."""
    t0 = time.time()
    pos = games.p_positions(games.SPLYTHOFF, n)
    table = sequences.splythoff_columns(n)
    stream = words.WordStream(words.kbonacci_substitution(3))
    x = stream.letter_positions(0, n)
    y = stream.letter_positions(1, n)
    z = stream.letter_positions(2, n)
    for i in range(n):
        triple = (pos[i].a, table.row("A")[i], y[i] - x[i])
        if len(set(triple)) != 1:
            return _report("theorem1", {"n": n}, False, ("A", i + 1, triple), t0)
        triple = (pos[i].b, table.row("B")[i], z[i] - y[i])
        if len(set(triple)) != 1:
            return _report("theorem1", {"n": n}, False, ("B", i + 1, triple), t0)
    return _report("theorem1", {"n": n}, True, None, t0)


def check_coding(n=10**5):
    """Deleting letter 2 from the 3-bonacci word gives the A/B indicator word."""
    t0 = time.time()
    word = words.fixed_point_prefix(words.kbonacci_substitution(3), 0, n)
    coded = words.Coding((bytes([0]), bytes([1]), b"")).apply(word)
    m = len(coded)
    table = sequences.splythoff_columns(m)
    indicator = bytearray(m + 1)
    for b in table.row("B"):
        if b <= m:
            indicator[b] = 1
    expected = bytes(indicator[1:])
    if coded != expected:
        bad = next(i for i in range(m) if coded[i] != expected[i])
        return _report("coding", {"n": n}, False, (bad + 1, coded[bad]), t0)
    return _report("coding", {"n": n}, True, None, t0)


def check_partitions(ks=(3, 4, 5, 6), upto=10**5):
    """Difference rows, and double-difference rows plus the sum row,
    each partition 1..upto for every alphabet size in ks."""
    t0 = time.time()
    for k in ks:
        base = tables.positions_table(k, upto)
        diff = tables.difference_table(k, upto, base=base)
        rep = tables.check_partition(diff.rows, upto)
        if not rep.is_partition:
            return _report(
                "partitions", {"k": k, "upto": upto}, False,
                ("difference", rep.first_violation, rep.violation), t0,
            )
        dd = tables.double_difference_table(k, upto, base=base)
        rep = tables.check_partition(dd.rows, upto)
        if not rep.is_partition:
            return _report(
                "partitions", {"k": k, "upto": upto}, False,
                ("double_difference", rep.first_violation, rep.violation), t0,
            )
    return _report("partitions", {"ks": ks, "upto": upto}, True, None, t0)


def check_theorem4(n=10**4):
    """The double mex rule rebuilds all three 4-bonacci tables."""
    t0 = time.time()
    mex_table = sequences.quadribonacci_columns(n)
    base = tables.positions_table(4, n)
    diff = tables.difference_table(4, n, base=base)
    dd = tables.double_difference_table(4, n, base=base)
    pairs = [
        ("x0", base.row("X0")), ("x1", base.row("X1")),
        ("x2", base.row("X2")), ("x3", base.row("X3")),
        ("a0", diff.row("D0")), ("a1", diff.row("D1")), ("a2", diff.row("D2")),
        ("b0", dd.row("dD0")), ("b2", dd.row("S")),
    ]
    for name, expected in pairs:
        got = mex_table.row(name)
        if got != expected:
            bad = next(i for i in range(n) if got[i] != expected[i])
            return _report("theorem4", {"n": n}, False, (name, bad + 1, got[bad], expected[bad]), t0)
    return _report("theorem4", {"n": n}, True, None, t0)


def check_lemma18(k=4, n=10**4):
    """Last positions row equals the index plus the sum of all rows."""
    t0 = time.time()
    base = tables.positions_table(k, n)
    last = base.rows[-1]
    for i in range(n):
        total = (i + 1) + sum(base.rows[j][i] for j in range(k - 1))
        if last[i] != total:
            return _report("lemma18", {"k": k, "n": n}, False, (i + 1, last[i], total), t0)
    return _report("lemma18", {"k": k, "n": n}, True, None, t0)


def check_sg_table():
    """Computed 18x18 grid equals the frozen oracle; cells that differ from
    the Wythoff grid are exactly the oracle's marked cells."""
    t0 = time.time()
    expected, italics = golden_sg_table()
    grid = games.sprague_grundy_grid(games.SPLYTHOFF, 18)
    wgrid = games.sprague_grundy_grid(games.WYTHOFF, 18)
    for (m, n), v in expected.items():
        if grid.value(m, n) != v:
            return _report("sg-table", {"size": 18}, False, ("value", m, n, grid.value(m, n), v), t0)
    differing = {
        (m, n)
        for m in range(18)
        for n in range(18)
        if grid.value(m, n) != wgrid.value(m, n)
    }
    if differing != italics:
        cell = sorted(differing.symmetric_difference(italics))[0]
        return _report("sg-table", {"size": 18}, False, ("italics", cell), t0)
    return _report("sg-table", {"size": 18}, True, None, t0)


def check_characterization(bound=300):
    """Stagewise membership description of Splythoff N-positions."""
    t0 = time.time()
    rep = games.np_characterization_check(bound)
    return _report("characterization", {"bound": bound}, rep.holds, rep.first_counterexample, t0)


def check_evidence(size=512, value_cap=100):
    """Grid-line observations: rows and columns hold each small value at
    most once; diagonal offset 3 avoids 0 and offset 4 avoids 1."""
    t0 = time.time()
    grid = games.sprague_grundy_grid(games.SPLYTHOFF, size)
    for index in range(size):
        for axis in ("row", "column"):
            rep = games.sg_permutation_check(grid, axis, index, prefix_cap=value_cap)
            if rep.first_duplicate is not None:
                return _report(
                    "evidence", {"size": size, "cap": value_cap}, False,
                    (axis, index, "duplicate", rep.first_duplicate), t0,
                )
    for offset, value in ((3, 0), (4, 1)):
        rep = games.sg_permutation_check(grid, "diagonal", offset, prefix_cap=value)
        if rep.counts.get(value, 0) != 0:
            return _report(
                "evidence", {"size": size}, False, ("diagonal", offset, "contains", value), t0,
            )
    return _report("evidence", {"size": size, "cap": value_cap}, True, None, t0)


def check_beatty(a_max=5, upto=10**5, positions=500, solver_a_max=4):
    """Complementarity conditions and partition for every (a, b) pair, and
    solver agreement with the homogeneous pair for small a."""
    t0 = time.time()
    for a in range(1, a_max + 1):
        for b in range(1, a + 1):
            pair = sequences.wythoff_ab_params(a, b)
            if not sequences.skolem_fraenkel_check(pair):
                return _report("beatty", {"a": a, "b": b}, False, ("conditions", a, b), t0)
            n = upto  # A_k >= k, so upto terms always decide coverage of 1..upto
            rep = tables.check_partition(
                [pair.a_sequence(n), pair.b_sequence(n)], upto
            )
            if not rep.is_partition:
                return _report(
                    "beatty", {"a": a, "b": b}, False,
                    ("partition", rep.first_violation, rep.violation), t0,
                )
    for a in range(1, solver_a_max + 1):
        family = "wythoff" if a == 1 else "a_wythoff"
        pos = games.p_positions(games.GameRules(family, a), positions)
        pair = sequences.wythoff_ab_params(a, a)
        a_seq = pair.a_sequence(positions)
        b_seq = pair.b_sequence(positions)
        for i in range(positions):
            if (pos[i].a, pos[i].b) != (a_seq[i], b_seq[i]):
                return _report(
                    "beatty", {"a": a}, False,
                    ("solver", i + 1, (pos[i].a, pos[i].b), (a_seq[i], b_seq[i])), t0,
                )
    return _report("beatty", {"a_max": a_max, "upto": upto}, True, None, t0)


CHECKS = {
    "theorem1": check_theorem1,
    "coding": check_coding,
    "partitions": check_partitions,
    "theorem4": check_theorem4,
    "lemma18": check_lemma18,
    "sg-table": check_sg_table,
    "characterization": check_characterization,
    "evidence": check_evidence,
    "beatty": check_beatty,
}


def run_checks(names=("all",), overrides=None):
    """Run the named checks (or every check for 'all'), yielding reports."""
    overrides = overrides or {}
    selected = list(CHECKS) if "all" in names else list(names)
    for name in selected:
        if name not in CHECKS:
            raise ValueError(f"unknown check {name!r}")
        kwargs = overrides.get(name, {})
        yield CHECKS[name](**kwargs)
