"""Step-code experiments for the split games with parameter a.

An experiment computes the step code of the first n P-positions, then
measures how far the code agrees with the fixed point of each candidate
substitution.  Alphabet growth is tracked so that runs at increasing n
show whether the step alphabet keeps growing.
"""

import json
from dataclasses import dataclass, field

from .games import GameRules, step_code
from .words import Substitution, fixed_point_prefix

# Conjectured substitutions tried by default, keyed by parameter a.
DEFAULT_CANDIDATES = {
    1: {"0:01,1:02,2:0": Substitution((bytes([0, 1]), bytes([0, 2]), bytes([0])))},
    2: {"0:01,1:02,2:0": Substitution((bytes([0, 1]), bytes([0, 2]), bytes([0])))},
    3: {"0:01,1:2,2:01": Substitution((bytes([0, 1]), bytes([2]), bytes([0, 1])))},
}


def parse_candidate(spec):
    """Substitution from comma-separated "letter:image" pairs of digits."""
    images = {}
    for part in spec.split(","):
        letter, _, image = part.partition(":")
        if not letter.strip().isdigit() or not image.strip().isdigit():
            raise ValueError(f"bad candidate rule {part!r}")
        images[int(letter)] = bytes(int(c) for c in image.strip())
    size = max(images) + 1
    if sorted(images) != list(range(size)):
        raise ValueError("candidate must define one image per letter 0..k-1")
    for image in images.values():
        for c in image:
            if c >= size:
                raise ValueError(f"image letter {c} lacks a rule")
    return Substitution(tuple(images[j] for j in range(size)))


@dataclass
class ExperimentRecord:
    a: int
    n: int
    step_alphabet: list
    code_prefix: bytes
    candidates: dict = field(default_factory=dict)  # spec -> consistent prefix length

    def to_json(self):
        return json.dumps(
            {
                "a": self.a,
                "n": self.n,
                "alphabet_size": len(self.step_alphabet),
                "step_alphabet": [list(s) for s in self.step_alphabet],
                "code_prefix": "".join(str(c) for c in self.code_prefix),
                "candidates": self.candidates,
            },
            sort_keys=True,
        )


def consistent_prefix(code, sub):
    """Length of the longest prefix of code matching sub's fixed point."""
    if not code:
        return 0
    seed = code[0]
    if seed >= sub.alphabet_size or sub.images[seed][0] != seed:
        return 0
    fixed = fixed_point_prefix(sub, seed, len(code))
    match = 0
    for x, y in zip(code, fixed):
        if x != y:
            break
        match += 1
    return match


def run_experiment(a, n, candidates=None, prefix_cap=200):
    """Step-code experiment for the split game with parameter a."""
    family = "splythoff" if a == 1 else "a_splythoff"
    sc = step_code(GameRules(family, a), n)
    tried = dict(DEFAULT_CANDIDATES.get(a, {}))
    for spec in candidates or ():
        tried[spec] = parse_candidate(spec)
    results = {spec: consistent_prefix(sc.code, sub) for spec, sub in tried.items()}
    return ExperimentRecord(a, n, sc.step_alphabet, sc.code[:prefix_cap], results)
