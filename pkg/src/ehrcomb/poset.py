"""Finite posets on the elements 0..size-1, given by cover relations.

Constructors follow one id convention so fixtures stay stable: copies are laid
out one after another, each copy keeps the original element order, and any
adjoined element (maximum or connector) comes last in its copy.
"""

from __future__ import annotations

import heapq
import itertools
import json
import os
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import InvalidLabeling, InvalidPoset, ParseError
from .stirlingperm import descent_vector


def _topological_order(size: int, covers) -> list[int]:
    upper = [[] for _ in range(size)]
    indeg = [0] * size
    for a, b in covers:
        upper[a].append(b)
        indeg[b] += 1
    heap = [v for v in range(size) if indeg[v] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        v = heapq.heappop(heap)
        order.append(v)
        for w in upper[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    if len(order) != size:
        raise InvalidPoset("cover relation contains a cycle")
    return order


@dataclass(frozen=True)
class Poset:
    """Immutable finite poset. Covers are reduced on construction."""

    size: int
    covers: tuple[tuple[int, int], ...] = ()
    _above: tuple[int, ...] = field(default=(), repr=False, compare=False)

    def __init__(self, size: int, relations: Sequence[Sequence[int]] = ()):
        if size < 0:
            raise InvalidPoset("size must be non-negative")
        rel = set()
        for pair in relations:
            a, b = (int(t) for t in pair)
            if not (0 <= a < size and 0 <= b < size):
                raise InvalidPoset(f"relation {(a, b)} out of range for size {size}")
            if a == b:
                raise InvalidPoset(f"reflexive relation {(a, b)} is not a cover")
            rel.add((a, b))
        order = _topological_order(size, rel)
        upper = [[] for _ in range(size)]
        for a, b in rel:
            upper[a].append(b)
        # strict up-sets as bitmasks, filled in reverse topological order
        above = [0] * size
        for v in reversed(order):
            m = 0
            for w in upper[v]:
                m |= (1 << w) | above[w]
            above[v] = m
        covers = []
        for a in range(size):
            implied = 0
            for b in range(size):
                if above[a] >> b & 1:
                    implied |= above[b]
            covers.extend((a, b) for b in range(size) if (above[a] & ~implied) >> b & 1)
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "covers", tuple(sorted(covers)))
        object.__setattr__(self, "_above", tuple(above))

    def __len__(self) -> int:
        return self.size

    def less(self, a: int, b: int) -> bool:
        """Strict order a < b."""
        return bool(self._above[a] >> b & 1)

    def lower_covers(self, v: int) -> list[int]:
        return [a for a, b in self.covers if b == v]

    def upper_covers(self, v: int) -> list[int]:
        return [b for a, b in self.covers if a == v]

    def maximal(self) -> list[int]:
        return [v for v in range(self.size) if not self._above[v]]

    def minimal(self) -> list[int]:
        has_lower = {b for _, b in self.covers}
        return [v for v in range(self.size) if v not in has_lower]

    def relations(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.size) for b in range(self.size) if self.less(a, b)]

    def canonical_labeling(self) -> list[int]:
        """Natural labeling from a topological sort taking the smallest id first.

        Returns ``labels`` with ``labels[element]`` the label of that element.
        """
        labels = [0] * self.size
        for lab, v in enumerate(_topological_order(self.size, self.covers)):
            labels[v] = lab
        return labels

    def is_natural_labeling(self, labels: Sequence[int]) -> bool:
        if sorted(labels) != list(range(self.size)):
            return False
        return all(labels[a] < labels[b] for a, b in self.covers)

    def to_json(self) -> dict:
        return {"size": self.size, "covers": [list(c) for c in self.covers]}

    @classmethod
    def from_json(cls, data: dict) -> Poset:
        """Accepts cover pairs or any generating relations; unknown keys are rejected."""
        extra = set(data) - {"size", "covers", "relations"}
        if "size" not in data or extra:
            raise InvalidPoset(f"expected keys size, covers/relations; got {sorted(data)}")
        pairs = list(data.get("covers", ())) + list(data.get("relations", ()))
        return cls(int(data["size"]), [tuple(pair) for pair in pairs])

    def dumps(self) -> str:
        return json.dumps(self.to_json())


EMPTY = Poset(0)


def make_chain(m: int) -> Poset:
    return Poset(m, [(i, i + 1) for i in range(m - 1)])


def make_antichain(m: int) -> Poset:
    return Poset(m)


def disjoint_union(*posets: Poset) -> Poset:
    rel, off = [], 0
    for p in posets:
        rel.extend((a + off, b + off) for a, b in p.covers)
        off += p.size
    return Poset(off, rel)


def adjoin_max(p: Poset) -> Poset:
    top = p.size
    return Poset(p.size + 1, list(p.covers) + [(v, top) for v in p.maximal()])


def comb_over(p: Poset, n: int) -> Poset:
    """n copies of P with a maximum adjoined to each; the maxima form a chain."""
    return bicomb_over(p, EMPTY, n)


def bicomb_over(p: Poset, r: Poset, n: int) -> Poset:
    """n copies of (P, connector c, R), c above P and below R, with c_1 < ... < c_n.

    Copy layout: P's elements, then R's, then the connector.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    width = p.size + r.size + 1
    rel = []
    for i in range(n):
        off = i * width
        c = off + width - 1
        rel.extend((a + off, b + off) for a, b in p.covers)
        rel.extend((a + off + p.size, b + off + p.size) for a, b in r.covers)
        rel.extend((v + off, c) for v in p.maximal())
        rel.extend((c, v + off + p.size) for v in r.minimal())
        if i:
            rel.append((c - width, c))
    return Poset(n * width, rel)


def make_comb(n: int) -> Poset:
    """Comb C_n: spine x_1 < ... < x_n with a tooth y_i below each x_i.

    Ids: y_i = 2(i-1), x_i = 2(i-1) + 1.
    """
    return comb_over(make_chain(1), n)


def stirling_poset(k: int, r: int) -> Poset:
    """Stirling poset of order r with k segments (kr elements).

    Each segment is a tooth followed by r - 1 spine elements; all spine
    elements form one chain and each tooth sits below the first spine element
    of its segment. r = 2 gives the comb C_k and r = 1 the k-antichain. Its
    linear extensions are counted by 1 * (r+1) * (2r+1) * ... like the order-r
    Stirling permutations.
    """
    if k < 0 or r < 1:
        raise ValueError("need k >= 0 and r >= 1")
    rel, prev_spine = [], None
    for i in range(k):
        base = i * r
        tooth = base
        spine = list(range(base + 1, base + r))
        if spine:
            rel.append((tooth, spine[0]))
            rel.extend(zip(spine, spine[1:]))
            if prev_spine is not None:
                rel.append((prev_spine, spine[0]))
            prev_spine = spine[-1]
    return Poset(k * r, rel)


def linear_extensions(p: Poset) -> Iterator[tuple[int, ...]]:
    """Every linear extension once, as a tuple of element ids, bottom first."""
    indeg = [0] * p.size
    upper = [[] for _ in range(p.size)]
    for a, b in p.covers:
        indeg[b] += 1
        upper[a].append(b)
    seq: list[int] = []

    def rec() -> Iterator[tuple[int, ...]]:
        if len(seq) == p.size:
            yield tuple(seq)
            return
        for v in range(p.size):
            if indeg[v] == 0:
                indeg[v] = -1
                for w in upper[v]:
                    indeg[w] -= 1
                seq.append(v)
                yield from rec()
                seq.pop()
                for w in upper[v]:
                    indeg[w] += 1
                indeg[v] = 0

    return rec()


def count_linear_extensions(p: Poset) -> int:
    return sum(1 for _ in linear_extensions(p))


def descent_enumerator(p: Poset, labels: Sequence[int] | None = None) -> list[int]:
    """Descent histogram over linear extensions, read as words of labels.

    The result is indexed by number of descents and trimmed of trailing zeros.
    """
    if labels is None:
        labels = p.canonical_labeling()
    if not p.is_natural_labeling(labels):
        raise InvalidLabeling("labeling is not an order-preserving bijection onto 0..size-1")
    if p.size == 0:
        return [1]
    return descent_vector([labels[v] for v in ext] for ext in linear_extensions(p))


def natural_labelings(p: Poset) -> Iterator[list[int]]:
    """All natural labelings (one per linear extension)."""
    for ext in linear_extensions(p):
        labels = [0] * p.size
        for lab, v in enumerate(ext):
            labels[v] = lab
        yield labels


def is_isomorphic(p: Poset, q: Poset, max_size: int = 8) -> bool:
    if p.size != q.size or len(p.covers) != len(q.covers):
        return False
    if p.size > max_size:
        raise ValueError(f"isomorphism search limited to size <= {max_size}")

    def signature(x: Poset, v: int) -> tuple[int, int, int, int]:
        return (len(x.lower_covers(v)), len(x.upper_covers(v)),
                bin(x._above[v]).count("1"),
                sum(1 for u in range(x.size) if x.less(u, v)))

    sp = [signature(p, v) for v in range(p.size)]
    sq = [signature(q, v) for v in range(q.size)]
    if sorted(sp) != sorted(sq):
        return False
    cq = set(q.covers)
    candidates = [[w for w in range(q.size) if sq[w] == sp[v]] for v in range(p.size)]
    for image in itertools.product(*candidates):
        if len(set(image)) == p.size and all((image[a], image[b]) in cq for a, b in p.covers):
            return True
    return False


# --- constructor DSL -------------------------------------------------------
#   chain:m | antichain:m | comb:n | comb(SPEC):n | bicomb(SPEC,SPEC):n
#   pyr(SPEC) | stirling:k:r | file:PATH | PATH (a JSON poset file)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str):
        raise ParseError(msg, self.text, self.pos)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def ident(self) -> str:
        start = self.pos
        while self.peek().isalpha():
            self.pos += 1
        return self.text[start : self.pos]

    def integer(self) -> int:
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected a non-negative integer")
        return int(self.text[start : self.pos])

    def path(self, stops: str) -> str:
        start = self.pos
        while self.peek() and self.peek() not in stops:
            self.pos += 1
        if start == self.pos:
            self.error("expected a file path")
        return self.text[start : self.pos]

    def spec(self, stops: str = "") -> Poset:
        start = self.pos
        name = self.ident()
        nxt = self.peek()
        if name in ("chain", "antichain") and nxt == ":":
            self.pos += 1
            m = self.integer()
            return make_chain(m) if name == "chain" else make_antichain(m)
        if name == "comb" and nxt == ":":
            self.pos += 1
            return make_comb(self.integer())
        if name == "comb" and nxt == "(":
            self.pos += 1
            inner = self.spec(stops=")")
            self.expect(")")
            self.expect(":")
            return comb_over(inner, self.integer())
        if name == "bicomb" and nxt == "(":
            self.pos += 1
            left = self.spec(stops=",")
            self.expect(",")
            right = self.spec(stops=")")
            self.expect(")")
            self.expect(":")
            return bicomb_over(left, right, self.integer())
        if name == "pyr" and nxt == "(":
            self.pos += 1
            inner = self.spec(stops=")")
            self.expect(")")
            return adjoin_max(inner)
        if name == "stirling" and nxt == ":":
            self.pos += 1
            k = self.integer()
            self.expect(":")
            return stirling_poset(k, self.integer())
        if name == "file" and nxt == ":":
            self.pos += 1
            return load_poset(self.path(stops))
        self.pos = start
        path = self.path(stops)
        if not os.path.exists(path):
            self.pos = start
            self.error(f"unknown poset constructor or missing file {path!r}")
        return load_poset(path)


def parse_poset_spec(text: str) -> Poset:
    parser = _Parser(text.strip())
    poset = parser.spec()
    if parser.pos != len(parser.text):
        parser.error("trailing input")
    return poset


def load_poset(path: str) -> Poset:
    with open(path) as fh:
        return Poset.from_json(json.load(fh))
