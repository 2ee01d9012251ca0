"""Stirling permutations, restricted growth functions, and their descents.

Words are tuples of positive integers. Descent positions are 1-based: i is a
descent of w when w[i] > w[i+1] for 1 <= i < len(w); the last letter is never
a descent.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from operator import gt
from typing import Iterable, Iterator, Sequence

from .errors import EmptyWord, IncompatibleUniformity, NotUniform

Word = tuple[int, ...]

#: above this order second Eulerian rows come from the recurrence
ENUMERATION_THRESHOLD = 8


def descents(w: Sequence[int]) -> set[int]:
    if len(w) == 0:
        raise EmptyWord("descents of the empty word are undefined")
    return {i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1]}


def des(w: Sequence[int]) -> int:
    if len(w) == 0:
        raise EmptyWord("descents of the empty word are undefined")
    return sum(map(gt, w, w[1:]))


def descent_vector(words: Iterable[Sequence[int]], size: int | None = None) -> list[int]:
    """Histogram of descent counts, indexed from 0 descents.

    ``size`` pads (or fixes) the vector length; otherwise it is trimmed to the
    largest descent count observed.
    """
    hist: Counter[int] = Counter(des(w) for w in words)
    n = size if size is not None else (max(hist) + 1 if hist else 0)
    return [hist.get(k, 0) for k in range(n)]


def is_multiset_permutation(w: Sequence[int], n: int, r: int) -> bool:
    return len(w) == n * r and Counter(w) == Counter({i: r for i in range(1, n + 1)})


def is_stirling_permutation(w: Sequence[int], r: int) -> bool:
    """Betweenness test: letters between any two copies of i are all >= i."""
    if not w:
        return True
    n = max(w)
    if not is_multiset_permutation(w, n, r):
        return False
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for pos, v in enumerate(w):
        first.setdefault(v, pos)
        last[v] = pos
    return all(min(w[first[i] : last[i] + 1]) >= i for i in first)


def multiset_permutations(n: int, r: int) -> Iterator[Word]:
    """Every permutation of {1^r, ..., n^r}, each once."""
    remaining = [0] + [r] * n
    word: list[int] = []
    total = n * r

    def rec() -> Iterator[Word]:
        if len(word) == total:
            yield tuple(word)
            return
        for v in range(1, n + 1):
            if remaining[v]:
                remaining[v] -= 1
                word.append(v)
                yield from rec()
                word.pop()
                remaining[v] += 1

    return rec()


def _stirling_level(n: int, r: int) -> list[Word]:
    words: list[Word] = [()]
    for m in range(1, n + 1):
        block = (m,) * r
        words = [w[:g] + block + w[g:] for w in words for g in range(len(w) + 1)]
    return words


def stirling_permutations(n: int, r: int = 2) -> Iterator[Word]:
    """Order-r Stirling permutations of {1^r, ..., n^r}.

    Built by inserting the block n^r into every gap of every word of order
    n - 1; the last level is streamed rather than materialized.
    """
    if n < 0 or r < 1:
        raise ValueError("need n >= 0 and r >= 1")
    if n == 0:
        yield ()
        return
    block = (n,) * r
    for w in _stirling_level(n - 1, r):
        for g in range(len(w) + 1):
            yield w[:g] + block + w[g:]


@lru_cache(maxsize=None)
def stirling_descent_vector(n: int, r: int = 2) -> tuple[int, ...]:
    """Descent histogram of order-r Stirling permutations, by enumeration."""
    if n == 0:
        return (1,)
    hist = [0] * (n * r)
    for w in stirling_permutations(n, r):
        hist[sum(map(gt, w, w[1:]))] += 1
    while len(hist) > 1 and hist[-1] == 0:
        hist.pop()
    return tuple(hist)


@lru_cache(maxsize=None)
def second_eulerian_enumerated(n: int) -> tuple[int, ...]:
    """<<n, k>> for k = 0..n-1 by counting descents of all Stirling permutations."""
    if n < 1:
        raise ValueError("second Eulerian rows start at n = 1")
    row = list(stirling_descent_vector(n, 2))
    return tuple(row + [0] * (n - len(row)))


@lru_cache(maxsize=None)
def second_eulerian_recurrence(n: int) -> tuple[int, ...]:
    """<<n, k>> = (k+1)<<n-1, k>> + (2n-1-k)<<n-1, k-1>>, with <<1, 0>> = 1."""
    if n < 1:
        raise ValueError("second Eulerian rows start at n = 1")
    row = [1]
    for m in range(2, n + 1):
        prev = row + [0]
        row = [
            (k + 1) * prev[k] + ((2 * m - 1 - k) * prev[k - 1] if k else 0)
            for k in range(m)
        ]
    return tuple(row)


def second_eulerian_with_path(n: int, threshold: int = ENUMERATION_THRESHOLD) -> tuple[list[int], str]:
    if n <= threshold:
        return list(second_eulerian_enumerated(n)), "enumeration"
    return list(second_eulerian_recurrence(n)), "recurrence"


def second_eulerian(n: int, threshold: int = ENUMERATION_THRESHOLD) -> list[int]:
    """Row n of the second Eulerian triangle, indexed by number of descents."""
    return second_eulerian_with_path(n, threshold)[0]


def is_ordered_by_jth_occurrence(w: Sequence[int], n: int, r: int, j: int) -> bool:
    if not is_multiset_permutation(w, n, r):
        return False
    seen: Counter[int] = Counter()
    pos = {}
    for p, v in enumerate(w):
        seen[v] += 1
        if seen[v] == j:
            pos[v] = p
    return all(pos[i] < pos[i + 1] for i in range(1, n))


def ordered_by_jth_occurrence(n: int, r: int, j: int) -> Iterator[Word]:
    """Permutations of {1^r..n^r} whose j-th copies of 1, ..., n appear in order."""
    if not 1 <= j <= r:
        raise ValueError(f"need 1 <= j <= r, got j={j}, r={r}")
    placed = [0] * (n + 1)
    word: list[int] = []
    total = n * r

    def rec() -> Iterator[Word]:
        if len(word) == total:
            yield tuple(word)
            return
        for v in range(1, n + 1):
            c = placed[v]
            if c == r:
                continue
            if c + 1 == j and v > 1 and placed[v - 1] < j:
                continue
            placed[v] = c + 1
            word.append(v)
            yield from rec()
            word.pop()
            placed[v] = c

    return rec()


def is_rgf(w: Sequence[int]) -> bool:
    if not w or w[0] != 1:
        return False
    top = 0
    for v in w:
        if v < 1 or v > top + 1:
            return False
        top = max(top, v)
    return True


def is_k_uniform(w: Sequence[int], k: int) -> bool:
    return all(c == k for c in Counter(w).values())


def rgf_enumerate(length: int, k_uniform: int | None = None) -> Iterator[Word]:
    """All restricted growth functions of ``length``; optionally only k-uniform ones."""
    if length < 1:
        raise ValueError("RGF length must be >= 1")
    k = k_uniform
    if k is not None and (k < 1 or length % k):
        raise IncompatibleUniformity(f"{k} does not divide {length}")
    max_blocks = length // k if k else length
    counts = [0] * (max_blocks + 2)
    word: list[int] = []

    def rec(top: int) -> Iterator[Word]:
        if len(word) == length:
            yield tuple(word)
            return
        if k is not None:
            # every open block still has to be filled to size k
            owed = sum(k - counts[v] for v in range(1, top + 1))
            if owed > length - len(word):
                return
        for v in range(1, min(top + 1, max_blocks) + 1):
            if k is not None and counts[v] == k:
                continue
            counts[v] += 1
            word.append(v)
            yield from rec(max(top, v))
            word.pop()
            counts[v] -= 1

    return rec(0)


def rgf_to_jth_word(w: Sequence[int], n: int, k: int) -> Word:
    """Reverse and complement: w'_j = n + 1 - w_{kn+1-j}."""
    if len(w) != k * n or not is_k_uniform(w, k) or set(w) != set(range(1, n + 1)):
        raise NotUniform(f"expected a {k}-uniform word of length {k * n} on 1..{n}")
    return tuple(n + 1 - v for v in reversed(w))
