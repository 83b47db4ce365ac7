"""Game rules, retrograde solving and step-code experiments.

Four families are supported: Wythoff, a-Wythoff (doubles may remove
amounts differing by less than a), Splythoff (Wythoff plus the split
move) and a-Splythoff.  P-positions come from a retrograde sieve over
pile sums that uses nothing but the move rules; Sprague-Grundy grids
come from a bitmask mex sweep.
"""

import struct
from dataclasses import dataclass, field

from .errors import BoardGrowthError
from .words import fixed_point_prefix

FAMILIES = ("wythoff", "a_wythoff", "splythoff", "a_splythoff")


@dataclass(frozen=True, order=True)
class Position:
    """Unordered pile pair, stored with a <= b."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise ValueError("pile sizes must be non-negative")
        if self.a > self.b:
            a, b = self.b, self.a
            object.__setattr__(self, "a", a)
            object.__setattr__(self, "b", b)

    @property
    def delta(self):
        return self.b - self.a

    @property
    def sigma(self):
        return self.a + self.b


@dataclass(frozen=True)
class GameRules:
    family: str
    a: int = 1

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.a < 1:
            raise ValueError("parameter a must be at least 1")
        if self.family in ("wythoff", "splythoff") and self.a != 1:
            raise ValueError(f"{self.family} has no parameter; use the a_ variant")

    @property
    def splits(self):
        return self.family in ("splythoff", "a_splythoff")


WYTHOFF = GameRules("wythoff")
SPLYTHOFF = GameRules("splythoff")


def legal_moves(rules, pos):
    """All successor positions, by direct enumeration."""
    u, v = pos.a, pos.b
    out = set()
    for t in range(1, u + 1):
        out.add(Position(u - t, v))
    for t in range(1, v + 1):
        out.add(Position(u, v - t))
    width = rules.a
    for x in range(1, u + 1):
        for y in range(max(1, x - width + 1), min(v, x + width - 1) + 1):
            out.add(Position(u - x, v - y))
            if rules.splits:
                # A double that empties exactly one pile may split the rest,
                # provided at least as much was removed from the surviving
                # pile as from the cleared one.
                rest = None
                if u - x == 0 and v - y >= 2 and y >= x:
                    rest = v - y
                elif v - y == 0 and u - x >= 2 and x >= y:
                    rest = u - x
                if rest is not None:
                    for c in range(1, rest):
                        out.add(Position(c, rest - c))
    return out


@dataclass
class SGGrid:
    """Sprague-Grundy values for all positions on a size x size board."""

    rules: GameRules
    size: int
    values: list = field(repr=False)

    def value(self, m, n):
        return self.values[m][n]


def _lowest_zero_bit(mask):
    inv = ~mask
    return (inv & -inv).bit_length() - 1


def _grid_fast(rules, size):
    """Bitmask sweep for the width-1 games (Wythoff, Splythoff)."""
    n = size
    grid = [[0] * n for _ in range(n)]
    line = [0] * n  # values seen on cells touching pile count i
    diag = [0] * n  # values seen on cells with difference d
    level = [0] * (2 * n - 1)  # values on cells with sum s and both piles > 0
    splits = rules.splits
    for s in range(0, 2 * n - 1):
        for u in range(max(0, s - n + 1), s // 2 + 1):
            v = s - u
            mask = line[u] | line[v] | diag[v - u]
            if splits and u >= 1 and v - u >= 2:
                mask |= level[v - u]
            g = _lowest_zero_bit(mask)
            grid[u][v] = grid[v][u] = g
            bit = 1 << g
            line[u] |= bit
            line[v] |= bit
            diag[v - u] |= bit
            if u >= 1:
                level[s] |= bit
    return grid


def _grid_generic(rules, size):
    """Reference sweep via legal_moves; fine for small boards."""
    grid = [[0] * size for _ in range(size)]
    for s in range(0, 2 * size - 1):
        for u in range(max(0, s - size + 1), s // 2 + 1):
            v = s - u
            seen = set()
            for succ in legal_moves(rules, Position(u, v)):
                if succ.b < size:
                    seen.add(grid[succ.a][succ.b])
            g = 0
            while g in seen:
                g += 1
            grid[u][v] = grid[v][u] = g
    return grid


def sprague_grundy_grid(rules, size):
    """Retrograde Sprague-Grundy values on a size x size board.

    All moves stay on the board (they only shrink piles), so the grid is
    exact regardless of size.
    """
    if size < 1:
        raise ValueError("size must be at least 1")
    if size * size > 64 * 10**6:
        raise MemoryError(f"board {size}x{size} exceeds the cell cap")
    if rules.a == 1:
        values = _grid_fast(rules, size)
    else:
        values = _grid_generic(rules, size)
    return SGGrid(rules, size, values)


class _Sieve:
    """Retrograde P-position sieve over increasing pile sums.

    A cell is an N-position exactly if some move reaches an already-found
    P-position; moves strictly decrease the pile sum, so sweeping sums in
    increasing order is a valid retrograde order.
    """

    def __init__(self, rules, max_sum):
        self.rules = rules
        self.max_sum = max_sum
        # partner[c] = the other coordinate of the P-position containing c
        self.partner = [-1] * (max_sum + 1)
        self.by_diff = [None] * (max_sum + 1)
        self.by_sum = [None] * (max_sum + 1)  # only P-positions with a >= 1
        self.found = []  # nonzero P-positions in sum order
        # Skip pointers: once a coordinate has a partner, every later cell
        # using it loses by a single move, so it never needs revisiting.
        self.skip = list(range(max_sum + 3))

    def _next_unused(self, u):
        skip = self.skip
        root = u
        while skip[root] != root:
            root = skip[root]
        while skip[u] != u:
            skip[u], u = root, skip[u]
        return root

    def _retire(self, u):
        self.skip[u] = u + 1

    def run(self, stop_count=None):
        rules = self.rules
        width = rules.a
        splits = rules.splits
        partner, by_diff, by_sum = self.partner, self.by_diff, self.by_sum
        for s in range(0, self.max_sum + 1):
            u = self._next_unused(0)
            while u <= s // 2:
                v = s - u
                pv = partner[v]
                if 0 <= pv < u:
                    u = self._next_unused(u + 1)
                    continue  # single keeping pile v
                if u >= 1 and self._reaches_p(u, v, width, splits):
                    u = self._next_unused(u + 1)
                    continue
                # No move reaches a P-position: (u, v) is one.
                if partner[u] != -1 or partner[v] != -1:
                    raise AssertionError("coordinate reused by two P-positions")
                partner[u] = v
                partner[v] = u
                self._retire(u)
                self._retire(v)
                d = v - u
                if by_diff[d] is not None:
                    raise AssertionError("difference reused by two P-positions")
                by_diff[d] = (u, v)
                if u >= 1:
                    if by_sum[s] is not None:
                        raise AssertionError("sum reused by two P-positions")
                    by_sum[s] = (u, v)
                    self.found.append(Position(u, v))
                    if stop_count and len(self.found) >= stop_count:
                        return
                u = self._next_unused(u + 1)

    def _reaches_p(self, u, v, width, splits):
        d = v - u
        by_diff, by_sum = self.by_diff, self.by_sum
        # Doubles: remove x and y with |x - y| < width.
        for e in range(max(0, d - width + 1), min(d + width, len(by_diff))):
            pq = by_diff[e]
            if pq is None:
                continue
            if e <= d:
                if pq[0] < u:
                    return True
            elif pq[1] < v:
                return True
        # Doubles that swap which pile is smaller.
        if width > d:
            for e in range(0, width - d):
                pq = by_diff[e]
                if pq is not None and pq[1] < u:
                    return True
        if splits:
            # Empty the small pile, removing at least as much from the big
            # one, and split the remainder: reachable sums are d-width+1..d.
            for m in range(max(2, d - width + 1), d + 1):
                if by_sum[m] is not None:
                    return True
        return False


def p_positions(rules, count, max_sum_cap=10**7):
    """The first `count` non-zero P-positions, ordered by smaller pile."""
    if count < 1:
        raise ValueError("count must be at least 1")
    # Sums grow roughly linearly in the index for every family we solve.
    max_sum = max(64, 8 * count)
    while max_sum <= max_sum_cap:
        sieve = _Sieve(rules, max_sum)
        sieve.run(stop_count=count)
        if len(sieve.found) >= count:
            found = sorted(sieve.found[:count])
            return found
        max_sum *= 2
    raise BoardGrowthError(f"no {count} P-positions below sum {max_sum_cap}")


@dataclass
class CharacterizationReport:
    holds: bool
    bound: int
    first_counterexample: tuple = None


def np_characterization_check(bound, grid=None):
    """Stagewise coordinate/difference description of Splythoff N-positions.

    Enumerate the non-zero P-positions in order.  A position (m, n) with
    0 < m < n is claimed to gain its first move to one of the first i
    P-positions exactly when i is the first index at which m or n appears
    as a coordinate, or n - m or n + m appears as a difference or a sum,
    of the enumerated table.  The check compares these two stage numbers
    for every cell with n <= bound and also confirms that the grid's
    zero-value cells are exactly the enumerated P-positions.
    """
    if bound < 2:
        raise ValueError("bound must be at least 2")
    if grid is None:
        grid = sprague_grundy_grid(SPLYTHOFF, bound + 1)
    pos = p_positions(SPLYTHOFF, 2 * bound + 4)
    coord_index = {}
    partner = {}
    delta_index = {}
    sigma_index = {}
    for i, p in enumerate(pos, start=1):
        coord_index.setdefault(p.a, i)
        coord_index.setdefault(p.b, i)
        partner.setdefault(p.a, p.b)
        partner.setdefault(p.b, p.a)
        delta_index.setdefault(p.delta, i)
        sigma_index.setdefault(p.sigma, i)
    for v in range(1, 2 * bound + 1):
        covered = v in coord_index if v <= bound else True
        if not covered or (v not in delta_index and v not in sigma_index):
            raise BoardGrowthError(f"P-position table too short to decide {v}")
    p_set = {(p.a, p.b) for p in pos}
    for m in range(1, bound + 1):
        for n in range(m + 1, bound + 1):
            if grid.value(m, n) == 0:
                if (m, n) not in p_set:
                    return CharacterizationReport(False, bound, (m, n))
                continue
            if (m, n) in p_set:
                return CharacterizationReport(False, bound, (m, n))
            d, s = n - m, n + m
            stage_cond = min(
                coord_index[m],
                coord_index[n],
                delta_index.get(d, sigma_index.get(d)),
                delta_index.get(s, sigma_index.get(s)),
            )
            reachable = []
            if partner[m] < n:
                reachable.append(coord_index[m])
            if partner[n] < m:
                reachable.append(coord_index[n])
            i = delta_index.get(d)
            if i is not None and pos[i - 1].a < m:
                reachable.append(i)  # double along the shared difference
            i = sigma_index.get(d)
            if i is not None:
                reachable.append(i)  # empty the small pile, split the rest
            if not reachable or min(reachable) != stage_cond:
                return CharacterizationReport(False, bound, (m, n))
    return CharacterizationReport(True, bound)


@dataclass
class LineReport:
    axis: str
    index: int
    counts: dict
    first_duplicate: int = None
    missing: list = None


def sg_permutation_check(grid, axis, index, prefix_cap=None):
    """Value multiplicities along one grid line; evidence, not proof."""
    n = grid.size
    if axis == "row":
        values = [grid.values[index][j] for j in range(n)]
    elif axis == "column":
        values = [grid.values[j][index] for j in range(n)]
    elif axis == "diagonal":
        values = [grid.values[j][j + index] for j in range(n - index)]
    elif axis == "reflected-diagonal":
        values = [grid.values[index - j][j] for j in range(index + 1) if index - j < n]
    else:
        raise ValueError(f"unknown axis {axis!r}")
    cap = prefix_cap if prefix_cap is not None else max(values, default=0)
    counts = {}
    first_dup = None
    for v in values:
        if v > cap:
            continue
        counts[v] = counts.get(v, 0) + 1
        if counts[v] == 2 and first_dup is None:
            first_dup = v
    missing = [v for v in range(cap + 1) if v not in counts]
    return LineReport(axis, index, counts, first_dup, missing)


@dataclass
class StepCode:
    """Consecutive P-position steps coded by order of first appearance."""

    step_alphabet: list  # (dA, dB) pairs
    code: bytes

    def decode(self, first):
        """Rebuild the (A, B) columns starting from the given first position."""
        a, b = first
        cols = [(a, b)]
        for letter in self.code:
            da, db = self.step_alphabet[letter]
            a, b = a + da, b + db
            cols.append((a, b))
        return cols


def step_code(rules, n):
    """Step code of the first n P-positions of a game."""
    if n < 2:
        raise ValueError("need at least two P-positions for a step")
    pos = p_positions(rules, n)
    alphabet = []
    index = {}
    code = bytearray()
    for prev, cur in zip(pos, pos[1:]):
        step = (cur.a - prev.a, cur.b - prev.b)
        if step not in index:
            index[step] = len(alphabet)
            alphabet.append(step)
        code.append(index[step])
    return StepCode(alphabet, bytes(code))


@dataclass
class FixpointReport:
    consistent_prefix_length: int
    word_length: int

    @property
    def fully_consistent(self):
        return self.consistent_prefix_length == self.word_length


def check_substitution_fixpoint(word, sub):
    """Longest prefix of word agreeing with the fixed point of sub."""
    if not word:
        return FixpointReport(0, 0)
    seed = word[0]
    if seed >= sub.alphabet_size or sub.images[seed][0] != seed:
        return FixpointReport(0, len(word))
    fixed = fixed_point_prefix(sub, seed, len(word))
    match = 0
    for x, y in zip(word, fixed):
        if x != y:
            break
        match += 1
    return FixpointReport(match, len(word))


# -- serialization ----------------------------------------------------------


def grid_to_csv(grid, descending=False):
    """CSV rows of the grid; descending lists the largest second pile first."""
    rows = range(grid.size - 1, -1, -1) if descending else range(grid.size)
    lines = []
    for n in rows:
        lines.append(",".join(str(grid.values[m][n]) for m in range(grid.size)))
    return "\n".join(lines) + "\n"


def grid_to_binary(grid):
    """Compact dump: magic 'SGG1', u32 size, then size**2 u32 values row-major."""
    out = bytearray(b"SGG1")
    out += struct.pack("<I", grid.size)
    for row in grid.values:
        out += struct.pack(f"<{grid.size}I", *row)
    return bytes(out)


def grid_from_binary(blob):
    if blob[:4] != b"SGG1":
        raise ValueError("bad magic")
    (size,) = struct.unpack_from("<I", blob, 4)
    values = []
    offset = 8
    for _ in range(size):
        values.append(list(struct.unpack_from(f"<{size}I", blob, offset)))
        offset += 4 * size
    return values
