"""Verification-grade engine for Wythoff-style split games and the
letter-position tables of k-bonacci substitution words.

Everything of note is generated at least twice by unrelated methods —
substitution scans, mex rules, exact Beatty floors, retrograde game
solving — and the verify module cross-checks them against each other.
"""

from .errors import (
    BoardGrowthError,
    InsufficientTermsError,
    NoFixedPointError,
    ScanCapExceededError,
)
from .games import (
    FAMILIES,
    SPLYTHOFF,
    WYTHOFF,
    GameRules,
    Position,
    SGGrid,
    StepCode,
    check_substitution_fixpoint,
    legal_moves,
    np_characterization_check,
    p_positions,
    sg_permutation_check,
    sprague_grundy_grid,
    step_code,
)
from .quadratic import GOLDEN_RATIO, QuadraticIrrational, sqrt_of
from .sequences import (
    BeattyPair,
    MexTable,
    beatty_floor,
    beatty_sequence,
    mex,
    quadribonacci_columns,
    skolem_fraenkel_check,
    splythoff_columns,
    sturmian_word,
    sturmian_zero_positions,
    wythoff_ab_params,
    wythoff_columns,
)
from .tables import (
    SequenceTable,
    check_partition,
    difference_table,
    double_difference_table,
    positions_table,
    positions_table_oracle,
    step_lengths,
)
from .words import (
    Coding,
    Substitution,
    WordStream,
    apply_coding,
    expand,
    fixed_point_prefix,
    kbonacci_substitution,
    letter_positions,
    prefix_word,
)

__version__ = "1.0.0"
