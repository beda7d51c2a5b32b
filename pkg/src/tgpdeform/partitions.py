"""Partition and tableau combinatorics.

Partitions are tuples of positive integers in weakly decreasing order, diagrams
use the English convention (first row on top). The modified Kostka-Foulkes
polynomial is computed as the cocharge generating function over semistandard
tableaux.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence


class Partition(tuple):
    """An integer partition; zero parts are dropped on construction."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        parts = [p for p in parts if p > 0]
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the comma format, e.g. ``"3,2,1"``; an empty string is the empty partition."""
        text = text.strip().strip("()[]")
        if not text:
            return cls()
        return cls(int(tok) for tok in text.split(","))

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """1-based part access, zero beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def transpose(self) -> "Partition":
        return transpose(self)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


def as_partition(lam: Sequence[int] | str) -> Partition:
    if isinstance(lam, Partition):
        return lam
    if isinstance(lam, str):
        return Partition.parse(lam)
    return Partition(lam)


def transpose(lam: Sequence[int]) -> Partition:
    lam = as_partition(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def dominance_leq(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff every prefix sum of ``lam`` is at most the matching prefix sum of ``mu``."""
    lam, mu = as_partition(lam), as_partition(mu)
    if lam.size != mu.size:
        raise ValueError(f"dominance needs equal sizes, got {lam.size} and {mu.size}")
    s = t = 0
    for k in range(max(len(lam), len(mu))):
        s += lam.part(k + 1)
        t += mu.part(k + 1)
        if s > t:
            return False
    return True


def m_lambda(lam: Sequence[int], n: int) -> int:
    """Number of boxes in rows ``n+1, ..., l(lam)``."""
    lam = as_partition(lam)
    if not 0 <= n < len(lam):
        raise ValueError(f"n={n} out of range for a partition of length {len(lam)}")
    return sum(lam[n:])


def n_stat(mu: Sequence[int]) -> int:
    return sum(p * j for j, p in enumerate(as_partition(mu)))


@lru_cache(maxsize=None)
def partitions_of(d: int) -> tuple[Partition, ...]:
    """All partitions of ``d`` in reverse lexicographic order, ``(d)`` first."""
    if d < 0:
        raise ValueError("d must be non-negative")

    def gen(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(Partition(p) for p in gen(d, d))


def multinomial(parts: Iterable[int]) -> int:
    parts = list(parts)
    result, total = 1, 0
    for p in parts:
        for i in range(1, p + 1):
            total += 1
            result = result * total // i
    return result


# --------------------------------------------------------------------------
# Tableaux


@dataclass(frozen=True)
class Tableau:
    """A filling of a Young diagram, stored row by row (top row first)."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows if len(r)))
        Partition(len(r) for r in self.rows)

    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self.rows)

    @property
    def content(self) -> tuple[int, ...]:
        counts = Counter(x for row in self.rows for x in row)
        top = max(counts, default=0)
        return tuple(counts[i] for i in range(1, top + 1))

    def is_semistandard(self) -> bool:
        for row in self.rows:
            if any(x < 1 for x in row) or any(row[j] > row[j + 1] for j in range(len(row) - 1)):
                return False
        for upper, lower in zip(self.rows, self.rows[1:]):
            if any(lower[j] <= upper[j] for j in range(len(lower))):
                return False
        return True

    def __str__(self) -> str:
        return " / ".join(" ".join(map(str, r)) for r in self.rows)


def _horizontal_strips(inner: tuple[int, ...], outer: Partition, size: int) -> Iterator[tuple[int, ...]]:
    """Partitions ``nu`` with ``inner <= nu <= outer`` such that ``nu/inner`` is a horizontal strip of ``size`` boxes."""
    rows = len(outer)
    inner = inner + (0,) * (rows - len(inner))

    def rec(i: int, left: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
        if i == rows:
            if left == 0:
                yield tuple(acc)
            return
        # a horizontal strip may not put two boxes in one column
        cap = outer[i] if i == 0 else min(outer[i], inner[i - 1])
        for row_len in range(min(cap, inner[i] + left), inner[i] - 1, -1):
            acc.append(row_len)
            yield from rec(i + 1, left - (row_len - inner[i]), acc)
            acc.pop()

    yield from rec(0, size, [])


def enumerate_ssyt(shape: Sequence[int], content: Sequence[int]) -> list[Tableau]:
    """All semistandard tableaux of the given shape and content.

    Letters are placed value by value; the boxes holding value ``i`` form a
    horizontal strip, which is exactly the row/column condition.
    """
    shape = as_partition(shape)
    content = tuple(int(c) for c in content)
    if any(c < 0 for c in content):
        raise ValueError("content entries must be non-negative")
    if shape.size != sum(content):
        raise ValueError(f"shape has {shape.size} boxes but content sums to {sum(content)}")

    results: list[Tableau] = []

    def rec(value: int, current: tuple[int, ...], chain: list[tuple[int, ...]]) -> None:
        if value > len(content):
            if current + (0,) * (len(shape) - len(current)) == tuple(shape):
                results.append(_tableau_from_chain(chain, len(shape)))
            return
        for nxt in _horizontal_strips(current, shape, content[value - 1]):
            chain.append(nxt)
            rec(value + 1, nxt, chain)
            chain.pop()

    rec(1, (0,) * len(shape), [])
    return results


def _tableau_from_chain(chain: list[tuple[int, ...]], rows: int) -> Tableau:
    filled: list[list[int]] = [[] for _ in range(rows)]
    prev = (0,) * rows
    for value, nu in enumerate(chain, start=1):
        for i in range(rows):
            filled[i].extend([value] * (nu[i] - prev[i]))
        prev = nu
    return Tableau(tuple(tuple(r) for r in filled))


@lru_cache(maxsize=None)
def _kostka_cached(lam: Partition, mu: Partition) -> int:
    return len(enumerate_ssyt(lam, mu))


def kostka_number(lam: Sequence[int], mu: Sequence[int]) -> int:
    lam, mu = as_partition(lam), as_partition(mu)
    if lam.size != mu.size:
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    return _kostka_cached(lam, mu)


# --------------------------------------------------------------------------
# Words and cocharge


def word_content(word: Sequence[int]) -> Partition:
    """Content of a word, required to be a partition."""
    if any(x < 1 for x in word):
        raise ValueError("word letters must be positive integers")
    counts = Counter(word)
    top = max(counts, default=0)
    if top > len(word):
        raise ValueError(f"letter {top} is too large for a word of length {len(word)} with partition content")
    vec = [counts[i] for i in range(1, top + 1)]
    if any(vec[i] < vec[i + 1] for i in range(len(vec) - 1)):
        raise ValueError(f"content {tuple(vec)} of word is not a partition")
    return Partition(vec)


def standard_subwords(word: Sequence[int]) -> list[tuple[int, ...]]:
    """Split a word with partition content into standard subwords.

    Each pass starts at the rightmost remaining 1, then repeatedly takes the
    rightmost ``i+1`` to the left of the last pick, wrapping around to the
    rightmost ``i+1`` overall when none lies to the left.
    """
    word = tuple(int(x) for x in word)
    content = word_content(word)
    alive = [True] * len(word)
    subwords = []
    for _ in range(content.part(1)):
        picked = []
        pos = len(word)
        letter = 1
        while True:
            candidates = [i for i in range(len(word)) if alive[i] and word[i] == letter]
            if not candidates:
                break
            left = [i for i in candidates if i < pos]
            pos = max(left) if left else max(candidates)
            picked.append(pos)
            letter += 1
        for i in picked:
            alive[i] = False
        subwords.append(tuple(word[i] for i in sorted(picked)))
    return subwords


def _cocharge_standard(word: tuple[int, ...]) -> int:
    where = {x: i for i, x in enumerate(word)}
    total = level = 0
    for i in range(2, len(word) + 1):
        if where[i] < where[i - 1]:
            level += 1
        total += level
    return total


def cocharge_word(word: Sequence[int]) -> int:
    return sum(_cocharge_standard(w) for w in standard_subwords(word))


def reading_word(tableau: Tableau) -> tuple[int, ...]:
    """Rows read left to right, bottom row first."""
    return tuple(x for row in reversed(tableau.rows) for x in row)


def cocharge(tableau: Tableau) -> int:
    return cocharge_word(reading_word(tableau))


# --------------------------------------------------------------------------
# q-polynomials


@dataclass(frozen=True)
class QPoly:
    """Univariate polynomial in ``q`` with non-negative integer coefficients."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = list(self.coeffs)
        if any(x < 0 for x in c):
            raise ValueError("QPoly coefficients must be non-negative")
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "QPoly":
        counts = Counter(exponents)
        top = max(counts, default=-1)
        return cls(tuple(counts[i] for i in range(top + 1)))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "QPoly":
        return cls((0,) * degree + (coeff,))

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __call__(self, q):
        value = 0
        for c in reversed(self.coeffs):
            value = value * q + c
        return value

    def __add__(self, other: "QPoly") -> "QPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return QPoly(tuple(self.coefficient(i) + other.coefficient(i) for i in range(n)))

    def to_json(self) -> dict[str, int]:
        return {str(i): c for i, c in enumerate(self.coeffs) if c}

    @classmethod
    def from_json(cls, data: dict) -> "QPoly":
        top = max((int(k) for k in data), default=-1)
        return cls(tuple(int(data.get(str(i), 0)) for i in range(top + 1)))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            base = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
            if not base:
                terms.append(str(c))
            else:
                terms.append(base if c == 1 else f"{c}*{base}")
        return " + ".join(terms)


@lru_cache(maxsize=None)
def _modified_kostka_cached(lam: Partition, mu: Partition) -> QPoly:
    return QPoly.from_exponents(cocharge(t) for t in enumerate_ssyt(lam, mu))


def modified_kostka(lam: Sequence[int], mu: Sequence[int]) -> QPoly:
    """Sum of ``q**cocharge(T)`` over semistandard tableaux of shape ``lam`` and content ``mu``."""
    lam, mu = as_partition(lam), as_partition(mu)
    if lam.size != mu.size:
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    return _modified_kostka_cached(lam, mu)
