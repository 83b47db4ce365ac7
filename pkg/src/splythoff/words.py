"""Substitutions, codings and fixed-point word streams over small alphabets.

Words are bytes objects; each byte is one letter of the alphabet
{0, ..., k-1}.  All positions reported to callers are 1-based.
"""

from dataclasses import dataclass, field

from .errors import NoFixedPointError, ScanCapExceededError

MAX_ALPHABET = 16


def _check_images(images, alphabet_size, allow_empty):
    if not 1 <= alphabet_size <= MAX_ALPHABET:
        raise ValueError(f"alphabet size {alphabet_size} not in 1..{MAX_ALPHABET}")
    if len(images) != alphabet_size:
        raise ValueError("one image per letter required")
    for letter, image in enumerate(images):
        if not image and not allow_empty:
            raise ValueError(f"image of letter {letter} is empty")
        for c in image:
            if c >= alphabet_size:
                raise ValueError(f"letter {c} in image of {letter} out of range")


@dataclass(frozen=True)
class Substitution:
    """Letter-to-word rewriting rule; every image is non-empty."""

    images: tuple

    def __post_init__(self):
        _check_images(self.images, len(self.images), allow_empty=False)

    @property
    def alphabet_size(self):
        return len(self.images)

    def expand(self, word):
        """Apply the substitution once to a word."""
        images = self.images
        try:
            return b"".join(images[c] for c in word)
        except IndexError:
            bad = next(c for c in word if c >= len(images))
            raise ValueError(f"letter {bad} out of range") from None


@dataclass(frozen=True)
class Coding:
    """Letter-to-word map applied once; empty images delete letters."""

    images: tuple

    def __post_init__(self):
        _check_images(self.images, len(self.images), allow_empty=True)

    @property
    def alphabet_size(self):
        return len(self.images)

    def apply(self, word):
        images = self.images
        try:
            return b"".join(images[c] for c in word)
        except IndexError:
            bad = next(c for c in word if c >= len(images))
            raise ValueError(f"letter {bad} out of range") from None


def kbonacci_substitution(k):
    """The k-bonacci rule 0->01, 1->02, ..., (k-2)->0(k-1), (k-1)->0."""
    if not 2 <= k <= MAX_ALPHABET:
        raise ValueError(f"k must be in 2..{MAX_ALPHABET}, got {k}")
    images = tuple(bytes([0, j + 1]) for j in range(k - 1)) + (bytes([0]),)
    return Substitution(images)


def expand(sub, word):
    return sub.expand(word)


def apply_coding(coding, word):
    return coding.apply(word)


def fixed_point_prefix(sub, seed, n):
    """First n letters of the fixed point of sub starting from seed."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if seed >= sub.alphabet_size:
        raise ValueError(f"seed {seed} out of range")
    image = sub.images[seed]
    if image[0] != seed:
        raise NoFixedPointError(
            f"image of {seed} starts with {image[0]}, no fixed point from this seed"
        )
    word = bytes([seed])
    while len(word) < n:
        new = sub.expand(word)
        if len(new) <= len(word):
            # Degenerate rule that never grows; the seed alone is the fixed point.
            raise NoFixedPointError("substitution does not grow from this seed")
        word = new
    return word[:n]


def prefix_word(k, j):
    """The palindromic word w_j with theta_k^j(0) = w_j + [j]; length 2^j - 1."""
    if not 2 <= k <= MAX_ALPHABET:
        raise ValueError(f"k must be in 2..{MAX_ALPHABET}, got {k}")
    if not 0 <= j <= k - 1:
        raise ValueError(f"j must be in 0..{k - 1}, got {j}")
    w = b""
    for i in range(j):
        w = w + bytes([i]) + w
    return w


@dataclass
class WordStream:
    """Lazily extended prefix of a substitution fixed point.

    Single-writer: parallel readers should take a prefix() snapshot.
    """

    substitution: Substitution
    seed: int = 0
    scan_cap: int = 10**8
    _prefix: bytes = field(default=b"", repr=False)

    def __post_init__(self):
        image = self.substitution.images[self.seed]
        if image[0] != self.seed:
            raise NoFixedPointError(
                f"image of {self.seed} does not start with {self.seed}"
            )
        self._prefix = bytes([self.seed])

    def prefix(self, n):
        """First n letters; extends the materialized prefix if needed."""
        if n > len(self._prefix):
            self._prefix = fixed_point_prefix(self.substitution, self.seed, n)
        return self._prefix[:n]

    def letter(self, position):
        """Letter at a 1-based position."""
        if position < 1:
            raise ValueError("positions are 1-based")
        return self.prefix(position)[position - 1]

    def letter_positions(self, letter, count):
        """1-based positions of the first `count` occurrences of letter."""
        if letter >= self.substitution.alphabet_size:
            raise ValueError(f"letter {letter} out of range")
        found = []
        scanned = 0
        size = max(len(self._prefix), 1024)
        while len(found) < count:
            if scanned >= self.scan_cap:
                raise ScanCapExceededError(
                    f"letter {letter}: {len(found)} occurrences in first {scanned} letters"
                )
            word = self.prefix(min(size, self.scan_cap))
            start = scanned
            idx = word.find(letter, start)
            while idx >= 0 and len(found) < count:
                found.append(idx + 1)
                idx = word.find(letter, idx + 1)
            scanned = len(word)
            size *= 2
        return found[:count]


def letter_positions(stream, letter, count):
    return stream.letter_positions(letter, count)
