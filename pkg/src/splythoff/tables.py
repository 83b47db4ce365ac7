"""Letter-position tables of k-bonacci words and their difference tables.

Three table kinds are built over the first n letters of the k-bonacci
word: the positions table (row j lists where letter j occurs), the
difference table (successive row differences) and the double-difference
table (differences of differences plus a sum row).  The positions table
can be built two independent ways: by per-letter column increments and
by scanning the word itself.
"""

from dataclasses import dataclass

from .errors import InsufficientTermsError
from .words import WordStream, kbonacci_substitution

MAX_COLUMNS = 10**8


@dataclass
class SequenceTable:
    """Equal-length strictly increasing integer rows under a letter header."""

    kind: str
    k: int
    header: bytes
    row_names: list
    rows: list

    def __post_init__(self):
        n = len(self.header)
        for name, row in zip(self.row_names, self.rows):
            if len(row) != n:
                raise ValueError(f"row {name} has length {len(row)}, expected {n}")

    @property
    def columns(self):
        return len(self.header)

    def row(self, name):
        return self.rows[self.row_names.index(name)]


def step_lengths(k, i):
    """Column increments for letter i: the lengths of theta^(j+1)(i), j < k.

    Computed by the doubling recurrence (length doubles at every level
    except the single level where the last letter appears) and verified
    against direct expansion in the test suite.
    """
    if not 3 <= k <= 16:
        raise ValueError(f"k must be in 3..16, got {k}")
    if not 0 <= i < k:
        raise ValueError(f"letter {i} out of range for k={k}")
    lengths = [1 if i == k - 1 else 2]
    for h in range(1, k):
        nxt = 2 * lengths[-1] - (1 if h + i == k - 1 else 0)
        lengths.append(nxt)
    return tuple(lengths[:k])


def _header(k, n):
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > MAX_COLUMNS:
        raise ValueError(f"n={n} exceeds the {MAX_COLUMNS} column cap")
    stream = WordStream(kbonacci_substitution(k))
    return stream.prefix(n)


def positions_table(k, n):
    """Positions table built from the per-letter column increments."""
    header = _header(k, n)
    steps = [step_lengths(k, i) for i in range(k)]
    col = [1 << j for j in range(k)]
    rows = [[c] for c in col]
    for m in range(n - 1):
        inc = steps[header[m]]
        col = [c + d for c, d in zip(col, inc)]
        for row, c in zip(rows, col):
            row.append(c)
    names = [f"X{j}" for j in range(k)]
    return SequenceTable("positions", k, header, names, rows)


def positions_table_oracle(k, n):
    """Positions table read off the word directly, one scan per letter."""
    header = _header(k, n)
    stream = WordStream(kbonacci_substitution(k))
    rows = [stream.letter_positions(j, n) for j in range(k)]
    names = [f"X{j}" for j in range(k)]
    return SequenceTable("positions", k, header, names, rows)


def difference_table(k, n, base=None):
    """Rows D{j} = X{j+1} - X{j} of the positions table."""
    table = base if base is not None else positions_table(k, n)
    rows = [
        [hi - lo for hi, lo in zip(table.rows[j + 1], table.rows[j])]
        for j in range(k - 1)
    ]
    names = [f"D{j}" for j in range(k - 1)]
    return SequenceTable("difference", k, table.header, names, rows)


def double_difference_table(k, n, base=None):
    """Difference rows of the difference table plus the sum row."""
    diff = difference_table(k, n, base=base)
    rows = [
        [hi - lo for hi, lo in zip(diff.rows[j + 1], diff.rows[j])]
        for j in range(k - 2)
    ]
    sigma = [sum(col) for col in zip(*diff.rows)]
    names = [f"dD{j}" for j in range(k - 2)] + ["S"]
    return SequenceTable("double_difference", k, diff.header, names, rows + [sigma])


@dataclass
class PartitionReport:
    is_partition: bool
    first_violation: int = None
    violation: str = None  # "missing" or "duplicate"


def check_partition(rows, upto, names=None):
    """Check that the rows cover 1..upto exactly once each.

    Rows must be strictly increasing.  Raises InsufficientTermsError when
    a row ends before `upto` while coverage of the gap is still open.
    """
    if upto < 1:
        raise ValueError("upto must be at least 1")
    counts = bytearray(upto + 1)
    min_last = None
    for row in rows:
        if not row:
            raise InsufficientTermsError("empty row")
        last = row[-1]
        min_last = last if min_last is None else min(min_last, last)
        for v in row:
            if v > upto:
                break
            if 1 <= v:
                if counts[v] < 2:
                    counts[v] += 1
    for v in range(1, upto + 1):
        if counts[v] == 1:
            continue
        if counts[v] > 1:
            return PartitionReport(False, v, "duplicate")
        if v <= min_last:
            return PartitionReport(False, v, "missing")
        raise InsufficientTermsError(
            f"coverage of {v} undecided: some row ends at {min_last} < {upto}"
        )
    return PartitionReport(True)
