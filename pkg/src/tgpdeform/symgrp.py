"""Permutations, irreducible characters of S_d, and character arithmetic.

Characters are computed with the Murnaghan-Nakayama rule on beta-sets.
Composition of permutations is left to right, ``(s*t)(j) = t(s(j))``, which
matches the right action on polynomials.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial, prod
from typing import Iterable, Mapping, Sequence

from .partitions import Partition, as_partition, partitions_of

MAX_TABLE_DEGREE = 8


@dataclass(frozen=True)
class Permutation:
    """Bijection of ``1..d`` stored as its image vector."""

    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(x) for x in self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"{imgs} is not a permutation of 1..{len(imgs)}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, d: int) -> "Permutation":
        return cls(tuple(range(1, d + 1)))

    @classmethod
    def transposition(cls, d: int, i: int, j: int) -> "Permutation":
        imgs = list(range(1, d + 1))
        imgs[i - 1], imgs[j - 1] = j, i
        return cls(tuple(imgs))

    @classmethod
    def simple(cls, d: int, i: int) -> "Permutation":
        """The simple transposition ``(i, i+1)``."""
        if not 1 <= i < d:
            raise ValueError(f"no simple transposition s_{i} in S_{d}")
        return cls.transposition(d, i, i + 1)

    @classmethod
    def from_cycles(cls, d: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        imgs = list(range(1, d + 1))
        for cyc in cycles:
            for k, x in enumerate(cyc):
                imgs[x - 1] = cyc[(k + 1) % len(cyc)]
        return cls(tuple(imgs))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """``self`` then ``other``: ``j -> other(self(j))``."""
        if self.degree != other.degree:
            raise ValueError("permutations of different degrees")
        return Permutation(tuple(other.images[x - 1] for x in self.images))

    __mul__ = compose

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for j, x in enumerate(self.images, start=1):
            inv[x - 1] = j
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> Partition:
        return Partition(sorted((len(c) for c in self.cycles()), reverse=True))

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def __str__(self) -> str:
        cyc = [c for c in self.cycles() if len(c) > 1]
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "id"


def class_representative(cycle_type: Sequence[int] | str) -> Permutation:
    """Permutation whose cycles occupy consecutive blocks, longest first."""
    ct = as_partition(cycle_type)
    cycles, start = [], 1
    for p in ct:
        cycles.append(tuple(range(start, start + p)))
        start += p
    return Permutation.from_cycles(ct.size, cycles)


def z_value(cycle_type: Sequence[int]) -> int:
    """Order of the centralizer of a permutation with the given cycle type."""
    counts: dict[int, int] = {}
    for p in cycle_type:
        counts[p] = counts.get(p, 0) + 1
    return prod(p ** m * factorial(m) for p, m in counts.items())


def class_size(cycle_type: Sequence[int]) -> int:
    ct = as_partition(cycle_type)
    return factorial(ct.size) // z_value(ct)


def hook_dimension(lam: Sequence[int]) -> int:
    """``dim L(lam)`` by the hook length formula."""
    lam = as_partition(lam)
    conj = lam.transpose()
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(lam.size) // hooks


# --------------------------------------------------------------------------
# Murnaghan-Nakayama


def _beta_set(lam: Partition, length: int) -> tuple[int, ...]:
    parts = list(lam) + [0] * (length - len(lam))
    return tuple(parts[i] + length - 1 - i for i in range(length))


@lru_cache(maxsize=None)
def _mn(beta: frozenset, rho: tuple[int, ...]) -> int:
    """Character value on beta-sets: remove rim hooks of the sizes in ``rho``."""
    if not rho:
        return 1
    k, rest = rho[0], rho[1:]
    total = 0
    for b in beta:
        if b - k < 0 or (b - k) in beta:
            continue
        # sign = (-1)^(number of beads strictly between b-k and b)
        between = sum(1 for x in beta if b - k < x < b)
        new = frozenset((beta - {b}) | {b - k})
        total += (-1) ** between * _mn(new, rest)
    return total


def character_value(lam: Sequence[int], rho: Sequence[int]) -> int:
    """``chi_lam`` on the class of cycle type ``rho``."""
    lam, rho = as_partition(lam), as_partition(rho)
    if lam.size != rho.size:
        raise ValueError(f"{lam} and {rho} have different sizes")
    length = max(len(lam), 1)
    return _mn(frozenset(_beta_set(lam, length)), tuple(rho))


@dataclass(frozen=True)
class CharacterTable:
    d: int
    irreducibles: tuple[Partition, ...]
    classes: tuple[Partition, ...]
    values: tuple[tuple[int, ...], ...]
    class_sizes: tuple[int, ...]

    def value(self, lam: Sequence[int], rho: Sequence[int]) -> int:
        return self.values[self.irreducibles.index(as_partition(lam))][self.classes.index(as_partition(rho))]

    def row(self, lam: Sequence[int]) -> tuple[int, ...]:
        return self.values[self.irreducibles.index(as_partition(lam))]


@lru_cache(maxsize=None)
def character_table(d: int) -> CharacterTable:
    if not 1 <= d <= MAX_TABLE_DEGREE:
        raise ValueError(f"character tables are supported for 1 <= d <= {MAX_TABLE_DEGREE}, got {d}")
    parts = partitions_of(d)
    vals = tuple(tuple(character_value(lam, rho) for rho in parts) for lam in parts)
    return CharacterTable(d, parts, parts, vals, tuple(class_size(rho) for rho in parts))


# --------------------------------------------------------------------------
# class functions and multiplicity vectors


@dataclass(frozen=True)
class ClassFunction:
    d: int
    values: Mapping[Partition, Fraction]

    @classmethod
    def from_callable(cls, d: int, fn) -> "ClassFunction":
        return cls(d, {rho: Fraction(fn(rho)) for rho in partitions_of(d)})

    def __call__(self, rho: Sequence[int]) -> Fraction:
        return self.values[as_partition(rho)]


class CharacterVector:
    """Multiplicities ``mu -> [V : L(mu)]`` for partitions of ``d``; zeros dropped."""

    __slots__ = ("d", "mult")

    def __init__(self, d: int, mult: Mapping = ()):
        self.d = d
        clean = {}
        for k, v in dict(mult).items():
            lam = as_partition(k)
            if lam.size != d:
                raise ValueError(f"{lam} is not a partition of {d}")
            if v:
                clean[lam] = clean.get(lam, 0) + int(v)
        self.mult = {k: clean[k] for k in sorted(clean, reverse=True) if clean[k]}

    @classmethod
    def irreducible(cls, lam: Sequence[int]) -> "CharacterVector":
        lam = as_partition(lam)
        return cls(lam.size, {lam: 1})

    def __getitem__(self, lam) -> int:
        return self.mult.get(as_partition(lam), 0)

    def __eq__(self, other) -> bool:
        return isinstance(other, CharacterVector) and self.d == other.d and self.mult == other.mult

    def __hash__(self) -> int:
        return hash((self.d, tuple(self.mult.items())))

    def __add__(self, other: "CharacterVector") -> "CharacterVector":
        if self.d != other.d:
            raise ValueError("degree mismatch")
        out = dict(self.mult)
        for k, v in other.mult.items():
            out[k] = out.get(k, 0) + v
        return CharacterVector(self.d, out)

    def __bool__(self) -> bool:
        return bool(self.mult)

    def dimension(self) -> int:
        return sum(m * hook_dimension(lam) for lam, m in self.mult.items())

    def class_function(self) -> ClassFunction:
        if self.d == 0:
            return ClassFunction(0, {Partition(): Fraction(sum(self.mult.values()))})
        table = character_table(self.d)
        return ClassFunction(self.d, {rho: Fraction(sum(m * table.value(lam, rho) for lam, m in self.mult.items()))
                                      for rho in table.classes})

    def to_json(self) -> dict[str, int]:
        return {f"({lam})": m for lam, m in self.mult.items()}

    @classmethod
    def from_json(cls, d: int, data: Mapping[str, int]) -> "CharacterVector":
        return cls(d, {Partition.parse(k): v for k, v in data.items()})

    def __repr__(self) -> str:
        return f"CharacterVector({self.d}, {json.dumps(self.to_json())})"


def decompose(phi: ClassFunction) -> CharacterVector:
    """Multiplicities of the irreducibles in a class function."""
    d = phi.d
    if d == 0:
        return CharacterVector(0, {Partition(): phi(Partition())})
    table = character_table(d)
    out = {}
    for lam, row in zip(table.irreducibles, table.values):
        m = sum(size * phi(rho) * chi for rho, size, chi in zip(table.classes, table.class_sizes, row)) / factorial(d)
        if m.denominator != 1 or m < 0:
            raise ValueError(f"multiplicity of {lam} is {m}; not a genuine character")
        out[lam] = int(m)
    return CharacterVector(d, out)


def sign_twist(v: CharacterVector) -> CharacterVector:
    return CharacterVector(v.d, {lam.transpose(): m for lam, m in v.mult.items()})


def _splittings(rho: Partition, d1: int) -> list[tuple[Partition, Partition]]:
    """Ways to split the cycles of ``rho`` into a part of size d1 and the rest."""
    counts: dict[int, int] = {}
    for p in rho:
        counts[p] = counts.get(p, 0) + 1
    lengths = sorted(counts, reverse=True)
    out = []
    for choice in product(*(range(counts[p] + 1) for p in lengths)):
        if sum(k * p for k, p in zip(choice, lengths)) != d1:
            continue
        r1, r2 = [], []
        for k, p in zip(choice, lengths):
            r1 += [p] * k
            r2 += [p] * (counts[p] - k)
        out.append((Partition(r1), Partition(r2)))
    return out


def induced_character(v1: CharacterVector, v2: CharacterVector) -> CharacterVector:
    """Character of the module induced from ``S_d1 x S_d2`` to ``S_{d1+d2}``."""
    d1, d2 = v1.d, v2.d
    d = d1 + d2
    if d1 == 0:
        return CharacterVector(d2, {k: m * sum(v1.mult.values()) for k, m in v2.mult.items()})
    if d2 == 0:
        return CharacterVector(d1, {k: m * sum(v2.mult.values()) for k, m in v1.mult.items()})
    f1, f2 = v1.class_function(), v2.class_function()

    def value(rho: Partition) -> Fraction:
        z = z_value(rho)
        return sum((Fraction(z, z_value(r1) * z_value(r2)) * f1(r1) * f2(r2) for r1, r2 in _splittings(rho, d1)),
                   Fraction(0))

    return decompose(ClassFunction.from_callable(d, value))


def induced_product(vectors: Iterable[CharacterVector]) -> CharacterVector:
    vectors = list(vectors)
    if not vectors:
        return CharacterVector(0, {Partition(): 1})
    acc = vectors[0]
    for v in vectors[1:]:
        acc = induced_character(acc, v)
    return acc


def trivial_character(d: int) -> CharacterVector:
    return CharacterVector(d, {Partition([d]) if d else Partition(): 1})


def sign_character(d: int) -> CharacterVector:
    return CharacterVector(d, {Partition([1] * d): 1})


def permutation_module_character(lam: Sequence[int]) -> CharacterVector:
    """Character of ``M(lam)``: trivial characters induced over the column lengths of ``lam``."""
    lam = as_partition(lam)
    return induced_product(trivial_character(c) for c in lam.transpose())
