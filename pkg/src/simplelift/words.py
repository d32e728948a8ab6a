"""Cyclic words in a free group of finite rank.

Letters are written ``a, b, c, ...`` for the generators and ``A, B, C, ...``
for their inverses.  A :class:`CyclicWord` is stored freely and cyclically
reduced, as the least rotation under the order ``a < A < b < B < ...``.
"""

from __future__ import annotations

from dataclasses import dataclass
from string import ascii_lowercase


class WordError(ValueError):
    pass


class InvalidCharacter(WordError):
    pass


class TrivialWord(WordError):
    pass


class RankMismatch(WordError):
    pass


@dataclass(frozen=True, order=True)
class Letter:
    generator: int
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.generator < 0:
            raise ValueError("generator index must be nonnegative")

    @property
    def key(self) -> int:
        # a < A < b < B < ...
        return 2 * self.generator + (0 if self.sign > 0 else 1)

    def inverse(self) -> Letter:
        return Letter(self.generator, -self.sign)

    def __str__(self):
        ch = ascii_lowercase[self.generator]
        return ch if self.sign > 0 else ch.upper()


def letter_from_char(ch: str, rank: int) -> Letter:
    low = ch.lower()
    if len(ch) != 1 or low not in ascii_lowercase:
        raise InvalidCharacter(f"invalid character {ch!r}")
    gen = ascii_lowercase.index(low)
    if gen >= rank:
        raise InvalidCharacter(f"letter {ch!r} outside rank {rank}")
    return Letter(gen, 1 if ch == low else -1)


def free_reduce(letters):
    out = []
    for x in letters:
        if out and out[-1].generator == x.generator and out[-1].sign == -x.sign:
            out.pop()
        else:
            out.append(x)
    return out


def cyclic_reduce(letters):
    letters = free_reduce(letters)
    i, j = 0, len(letters)
    while j - i >= 2 and letters[i] == letters[j - 1].inverse():
        i += 1
        j -= 1
    return letters[i:j]


def least_rotation(keys) -> int:
    """Start index of the lexicographically least rotation of ``keys``."""
    s = list(keys)
    n = len(s)
    i, j, k = 0, 1, 0
    while i < n and j < n and k < n:
        x, y = s[(i + k) % n], s[(j + k) % n]
        if x == y:
            k += 1
            continue
        if x > y:
            i += k + 1
        else:
            j += k + 1
        if i == j:
            j += 1
        k = 0
    return min(i, j)


@dataclass(frozen=True)
class CyclicWord:
    """A nontrivial conjugacy class in the free group of the given rank."""

    letters: tuple
    rank: int = 2

    def __post_init__(self):
        letters = cyclic_reduce(list(self.letters))
        if not letters:
            raise TrivialWord("word reduces to the identity")
        for x in letters:
            if x.generator >= self.rank:
                raise RankMismatch(f"letter {x} outside rank {self.rank}")
        k = least_rotation([x.key for x in letters])
        object.__setattr__(self, "letters", tuple(letters[k:] + letters[:k]))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self):
        return "".join(str(x) for x in self.letters)

    def __repr__(self):
        return f"CyclicWord({str(self)!r}, rank={self.rank})"


def parse(text: str, rank: int = 2) -> CyclicWord:
    if not text:
        raise TrivialWord("empty word")
    return CyclicWord(tuple(letter_from_char(ch, rank) for ch in text), rank)


def render(w: CyclicWord) -> str:
    return str(w)


def invert(w: CyclicWord) -> CyclicWord:
    return CyclicWord(tuple(x.inverse() for x in reversed(w.letters)), w.rank)


def power_root(w: CyclicWord) -> tuple[CyclicWord, int]:
    """Return ``(root, k)`` with ``w == root**k`` and ``root`` not a proper power."""
    n = len(w)
    letters = w.letters
    for p in range(1, n + 1):
        if n % p == 0 and all(letters[i] == letters[i % p] for i in range(p, n)):
            return CyclicWord(letters[:p], w.rank), n // p
    raise AssertionError("unreachable")


def is_primitive(w: CyclicWord) -> bool:
    """True when ``w`` is not a proper power (the only sense used here)."""
    return power_root(w)[1] == 1


def gamma_n(n: int) -> CyclicWord:
    """The curve ``a b^n`` on the pair of pants."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return CyclicWord((Letter(0, 1),) + (Letter(1, 1),) * n, 2)


def swap_generators(w: CyclicWord, perm) -> CyclicWord:
    """Relabel generators: generator ``i`` becomes ``perm[i]``."""
    return CyclicWord(tuple(Letter(perm[x.generator], x.sign) for x in w.letters), w.rank)
