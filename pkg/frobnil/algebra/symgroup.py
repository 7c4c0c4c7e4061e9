"""
Permutations of {1, ..., n} in one-line notation, lengths and reduced words.

A word [i1, ..., ik] stands for the product s_{i1} s_{i2} ... s_{ik}, with
composition (w v)(j) = w(v(j)).

>>> w = longest(3)
>>> w.images, length(w), reduced_word(w)
((3, 2, 1), 3, [1, 2, 1])
>>> sorted(all_reduced_words(w))
[(1, 2, 1), (2, 1, 2)]
"""

from collections import deque
from functools import lru_cache
from itertools import permutations
from typing import Iterator, List, NamedTuple, Sequence, Set, Tuple

from frobnil.exceptions import IndexOutOfRange, SizeMismatch, SizeTooLarge

__all__ = [
    "Permutation", "identity", "simple", "compose", "inverse", "length",
    "reduced_word", "all_reduced_words", "longest", "from_word",
    "right_mul", "left_mul", "all_permutations", "REDUCED_WORDS_MAX_N",
]

# all_reduced_words refuses larger symmetric groups
REDUCED_WORDS_MAX_N = 5


class Permutation(NamedTuple):
    """A bijection of {1..n}; images[i] = w(i + 1)."""
    images: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.images))

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.images)) + "]"


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def simple(n: int, i: int) -> Permutation:
    """The transposition s_i = (i, i+1) in S_n."""
    if not 1 <= i < n:
        raise IndexOutOfRange(f"s_{i} does not exist in S_{n}")
    images = list(range(1, n + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(tuple(images))


def compose(w: Permutation, v: Permutation) -> Permutation:
    """(w o v)(i) = w(v(i))."""
    if w.n != v.n:
        raise SizeMismatch(f"cannot compose permutations of sizes {w.n} and {v.n}")
    return Permutation(tuple(w.images[j - 1] for j in v.images))


def inverse(w: Permutation) -> Permutation:
    images = [0] * w.n
    for i, v in enumerate(w.images):
        images[v - 1] = i + 1
    return Permutation(tuple(images))


def length(w: Permutation) -> int:
    """Number of inversions."""
    images = w.images
    return sum(
        1
        for i in range(len(images))
        for j in range(i + 1, len(images))
        if images[i] > images[j]
    )


def right_mul(w: Permutation, i: int) -> Permutation:
    """w s_i: swaps positions i and i+1 of the one-line notation."""
    images = list(w.images)
    images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(tuple(images))


def left_mul(i: int, w: Permutation) -> Permutation:
    """s_i w: swaps the values i and i+1."""
    return Permutation(tuple(i + 1 if v == i else i if v == i + 1 else v for v in w.images))


def _left_descents(w: Permutation) -> List[int]:
    # i is a left descent iff i+1 appears before i in one-line notation
    position = {v: p for p, v in enumerate(w.images)}
    return [i for i in range(1, w.n) if position[i + 1] < position[i]]


@lru_cache(maxsize=None)
def _canonical_word(w: Permutation) -> Tuple[int, ...]:
    word: List[int] = []
    while True:
        descents = _left_descents(w)
        if not descents:
            return tuple(word)
        i = descents[0]
        word.append(i)
        w = left_mul(i, w)


def reduced_word(w: Permutation) -> List[int]:
    """The lexicographically smallest reduced word of w."""
    return list(_canonical_word(w))


def all_reduced_words(w: Permutation) -> Set[Tuple[int, ...]]:
    """Every reduced word of w, by breadth-first peeling of left descents."""
    if w.n > REDUCED_WORDS_MAX_N:
        raise SizeTooLarge(
            f"reduced-word enumeration is limited to n <= {REDUCED_WORDS_MAX_N}, got n = {w.n}"
        )
    words: Set[Tuple[int, ...]] = set()
    queue = deque([(w, ())])
    while queue:
        current, prefix = queue.popleft()
        descents = _left_descents(current)
        if not descents:
            words.add(prefix)
            continue
        for i in descents:
            queue.append((left_mul(i, current), prefix + (i,)))
    return words


def longest(n: int) -> Permutation:
    """i -> n + 1 - i."""
    if n < 1:
        raise IndexOutOfRange("the longest element needs n >= 1")
    return Permutation(tuple(range(n, 0, -1)))


def from_word(n: int, word: Sequence[int]) -> Permutation:
    """Evaluate s_{i1} ... s_{ik} in S_n."""
    w = identity(n)
    for i in word:
        if not 1 <= i < n:
            raise IndexOutOfRange(f"s_{i} does not exist in S_{n}")
        w = right_mul(w, i)
    return w


def all_permutations(n: int) -> Iterator[Permutation]:
    for images in permutations(range(1, n + 1)):
        yield Permutation(images)
