"""Tanisaki ideals, their deformations, and the quotient algebras they cut out.

For a partition ``lam`` of ``d`` and column labels ``a = (a_1..a_p)``,
``p = lam_1``, stratum ``n`` of the deformed generating set consists of

    sum_k (-1)^k e_{r-k}(t_J) h_k(a^(n)),    |J| = d - n,
                                             d-n-m_lam(n) < r <= d-n,

where ``a^(n)`` lists the labels of the boxes in rows ``n+1..`` read row by
row. With ``a = 0`` this is the undeformed Tanisaki set.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import PreconditionError, TheoremViolation
from .groebner import (
    GroebnerBasis,
    buchberger,
    coordinates,
    ideal_equal,
    is_groebner,
    multiplication_matrix,
    normal_form,
    normal_form_monomial,
    quotient_basis,
)
from .linalg import Matrix, span_basis
from .modules import RepMatrices
from .partitions import (
    Partition,
    as_partition,
    kostka_number,
    m_lambda,
    modified_kostka,
    multinomial,
    n_stat,
    partitions_of,
)
from .polyring import (
    MPoly,
    Monomial,
    complete_homogeneous_eval,
    elementary_eval,
    elementary_symmetric,
    shift_scale,
    to_rational,
)
from .symgrp import (
    CharacterVector,
    ClassFunction,
    Permutation,
    class_representative,
    decompose,
    induced_product,
)

ORDER = "degrevlex"


# --------------------------------------------------------------------------
# parameters


@dataclass(frozen=True)
class EvalParams:
    """Column labels ``(a_1..a_p)``; one exact rational per column."""

    values: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(to_rational(v) for v in self.values))

    @classmethod
    def zeros(cls, p: int) -> "EvalParams":
        return cls((0,) * p)

    @classmethod
    def parse(cls, text: str) -> "EvalParams":
        return cls(tuple(tok.strip() for tok in text.split(",") if tok.strip()))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def is_zero(self) -> bool:
        return not any(self.values)

    def is_distinct(self) -> bool:
        return len(set(self.values)) == len(self.values)

    def to_json(self) -> list[str]:
        return [str(v) for v in self.values]

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.values)


def as_params(lam: Partition, a) -> EvalParams:
    if a is None:
        a = EvalParams.zeros(lam.part(1))
    elif not isinstance(a, EvalParams):
        a = EvalParams(tuple(a))
    if len(a) != lam.part(1):
        raise PreconditionError(f"need {lam.part(1)} parameters for {lam}, got {len(a)}")
    return a


def row_labels(lam: Sequence[int], a, n: int = 0) -> tuple[Fraction, ...]:
    """Labels of the boxes in rows ``n+1, n+2, ...``; a box in column i carries ``a_i``."""
    lam = as_partition(lam)
    a = as_params(lam, a)
    out: list[Fraction] = []
    for row in lam[n:]:
        out.extend(a.values[:row])
    return tuple(out)


def d_lambda(lam: Sequence[int]) -> int:
    """``d! / prod (lam^t_i)!``."""
    return multinomial(as_partition(lam).transpose())


# --------------------------------------------------------------------------
# generating sets


@dataclass(frozen=True)
class TanisakiEntry:
    n: int
    J: tuple[int, ...]
    r: int
    poly: MPoly

    def to_json(self) -> dict:
        return {"n": self.n, "J": list(self.J), "r": self.r, "poly": self.poly.to_text(ORDER)}


@dataclass(frozen=True)
class TanisakiSet:
    lam: Partition
    params: EvalParams | None
    entries: tuple[TanisakiEntry, ...]

    def polys(self) -> list[MPoly]:
        return [e.poly for e in self.entries]

    def __len__(self) -> int:
        return len(self.entries)

    def to_json(self) -> dict:
        return {
            "lambda": str(self.lam),
            "params": self.params.to_json() if self.params is not None else None,
            "count": len(self.entries),
            "generators": [e.to_json() for e in self.entries],
        }


def _strata(lam: Partition) -> Iterator[tuple[int, int, int]]:
    d = lam.size
    for n in range(len(lam)):
        yield n, d - n, m_lambda(lam, n)


def tanisaki_generators(lam: Sequence[int]) -> TanisakiSet:
    """Undeformed set: ``e_r(t_J)`` with ``|J| = d-n`` and ``d-n-m_lam(n) < r <= d-n``."""
    lam = as_partition(lam)
    if not lam:
        raise PreconditionError("the empty partition has no Tanisaki ideal")
    d = lam.size
    entries = []
    for n, size, m in _strata(lam):
        for J in combinations(range(1, d + 1), size):
            for r in range(size - m + 1, size + 1):
                entries.append(TanisakiEntry(n, J, r, elementary_symmetric(J, r, d)))
    return TanisakiSet(lam, None, tuple(entries))


def _deformed(lam: Partition, a: EvalParams, reduced: bool) -> TanisakiSet:
    d = lam.size
    entries = []
    for n, size, m in _strata(lam):
        labels = row_labels(lam, a, n)
        h = [complete_homogeneous_eval(labels, k) for k in range(size + 1)]
        top = size - m + (lam[n] if reduced else m)
        for J in combinations(range(1, d + 1), size):
            e = [elementary_symmetric(J, j, d) for j in range(size + 1)]
            for r in range(size - m + 1, top + 1):
                poly = MPoly.zero(d)
                for k in range(r + 1):
                    if h[k] and e[r - k]:
                        poly = poly + e[r - k] * ((-1) ** k * h[k])
                entries.append(TanisakiEntry(n, J, r, poly))
    return TanisakiSet(lam, a, tuple(entries))


def deformed_generators(lam: Sequence[int], a=None) -> TanisakiSet:
    lam = as_partition(lam)
    if not lam:
        raise PreconditionError("the empty partition has no Tanisaki ideal")
    return _deformed(lam, as_params(lam, a), reduced=False)


def reduced_generators(lam: Sequence[int], a=None) -> TanisakiSet:
    """Only the coefficients of ``x^-1 .. x^-lam_{n+1}`` in each stratum."""
    lam = as_partition(lam)
    if not lam:
        raise PreconditionError("the empty partition has no Tanisaki ideal")
    return _deformed(lam, as_params(lam, a), reduced=True)


# --------------------------------------------------------------------------
# quotient algebras


class TGPAlgebra:
    """``Q[t_1..t_d]`` modulo the deformed Tanisaki ideal."""

    def __init__(self, lam: Partition, params: EvalParams, gb: GroebnerBasis):
        self.lam = lam
        self.params = params
        self.d = lam.size
        self.gb = gb
        self.basis: tuple[Monomial, ...] = tuple(quotient_basis(gb))
        self.index = {m: i for i, m in enumerate(self.basis)}
        self.graded = params.is_zero()

    @property
    def dim(self) -> int:
        return len(self.basis)

    def normal_form(self, f: MPoly) -> MPoly:
        return normal_form(f, self.gb)

    def coordinates(self, f: MPoly) -> list[Fraction]:
        return coordinates(self.normal_form(f), self.basis, self.index)

    def permutation_action(self, sigma: Permutation, basis: Sequence[Monomial] | None = None) -> Matrix:
        """Column j holds the coordinates of ``b_j . sigma``."""
        basis = self.basis if basis is None else basis
        cols = []
        for b in basis:
            img = [0] * self.d
            for j, e in enumerate(b):
                img[sigma.images[j] - 1] = e
            nf = normal_form_monomial(tuple(img), self.gb)
            cols.append(coordinates(nf, self.basis, self.index))
        n = len(self.basis)
        return Matrix([[cols[j][i] for j in range(len(basis))] for i in range(n)])

    def trace(self, sigma: Permutation, basis: Sequence[Monomial] | None = None) -> Fraction:
        """Trace of ``sigma`` on the span of ``basis`` (a sub-basis closed under the action)."""
        basis = self.basis if basis is None else basis
        total = Fraction(0)
        for b in basis:
            img = [0] * self.d
            for j, e in enumerate(b):
                img[sigma.images[j] - 1] = e
            total += normal_form_monomial(tuple(img), self.gb).terms.get(b, 0)
        return total

    def __repr__(self) -> str:
        return f"TGPAlgebra(lambda={self.lam}, params=({self.params}), dim={self.dim})"


@lru_cache(maxsize=512)
def _build(lam: Partition, params: EvalParams) -> TGPAlgebra:
    gens = deformed_generators(lam, params).polys()
    gb = buchberger(gens, ORDER, lam.size)
    return TGPAlgebra(lam, params, gb)


def build_quotient(lam: Sequence[int], a=None) -> TGPAlgebra:
    lam = as_partition(lam)
    if not lam:
        raise PreconditionError("the empty partition has no Tanisaki ideal")
    return _build(lam, as_params(lam, a))


def character(R: TGPAlgebra) -> CharacterVector:
    """``S_d``-character of the whole quotient, from traces of class representatives."""
    return decompose(ClassFunction.from_callable(R.d, lambda rho: R.trace(class_representative(rho))))


def graded_character(R: TGPAlgebra) -> dict[int, CharacterVector]:
    if not R.graded:
        raise PreconditionError("graded character needs the undeformed (homogeneous) ideal")
    by_degree: dict[int, list[Monomial]] = {}
    for b in R.basis:
        by_degree.setdefault(sum(b), []).append(b)
    out = {}
    for deg in sorted(by_degree):
        chunk = by_degree[deg]
        out[deg] = decompose(ClassFunction.from_callable(R.d, lambda rho: R.trace(class_representative(rho), chunk)))
    return out


def predicted_graded_character(lam: Sequence[int]) -> dict[int, CharacterVector]:
    """``i -> {mu -> [q^i] K~_{mu, lam^t}}``."""
    lam = as_partition(lam)
    lt = lam.transpose()
    d = lam.size
    out: dict[int, dict[Partition, int]] = {}
    for mu in partitions_of(d):
        poly = modified_kostka(mu, lt)
        for i, c in enumerate(poly.coeffs):
            if c:
                out.setdefault(i, {})[mu] = c
    return {i: CharacterVector(d, out[i]) for i in sorted(out)}


def predicted_character(lam: Sequence[int]) -> CharacterVector:
    """``mu -> K_{mu, lam^t}``."""
    lam = as_partition(lam)
    lt = lam.transpose()
    return CharacterVector(lam.size, {mu: kostka_number(mu, lt) for mu in partitions_of(lam.size)})


def graded_character_json(gch: dict[int, CharacterVector]) -> dict[str, dict[str, int]]:
    return {str(deg): v.to_json() for deg, v in gch.items()}


# --------------------------------------------------------------------------
# representation matrices


def rep_matrices(R: TGPAlgebra, amended: bool = False) -> RepMatrices:
    """Matrices of ``s_1..s_{d-1}`` (variable permutation) and ``t_1..t_d`` (multiplication)."""
    if amended and any(v == 0 for v in R.params):
        raise PreconditionError("the affine action needs every parameter nonzero")
    d = R.d
    sign = -1 if amended else 1
    sig = []
    for i in range(1, d):
        m = R.permutation_action(Permutation.simple(d, i))
        sig.append(m.scale(sign) if amended else m)
    ts = [multiplication_matrix(MPoly.variable(d, i), R.gb, R.basis) for i in range(1, d + 1)]
    return RepMatrices(d, tuple(sig), tuple(ts), amended)


def inverse_is_polynomial(R: TGPAlgebra, M: RepMatrices | None = None) -> bool:
    """``t_i^{-1}`` equals ``-q(t_i)/p(0)`` where ``p(x) = prod_j (x - a^(0)_j) = x q(x) + p(0)``."""
    labels = row_labels(R.lam, R.params, 0)
    if any(v == 0 for v in labels):
        raise PreconditionError("inverse needs every parameter nonzero")
    M = M or rep_matrices(R)
    # coefficients of p, lowest degree first
    p = [Fraction(1)]
    for a in labels:
        p = [Fraction(0)] + p
        for k in range(len(p) - 1):
            p[k] -= a * p[k + 1]
    q = p[1:]
    n = R.dim
    for T in M.t:
        acc = Matrix.zeros(n)
        power = Matrix.identity(n)
        for c in q:
            if c:
                acc = acc + power.scale(c)
            power = power @ T
        inv = acc.scale(-1 / p[0])
        if T @ inv != Matrix.identity(n):
            return False
    return True


# --------------------------------------------------------------------------
# identities in the quotient


def symmetric_evaluation_check(R: TGPAlgebra) -> bool:
    """``e_i(t) - e_i(a^(0))`` vanishes in the quotient for every i."""
    d = R.d
    labels = row_labels(R.lam, R.params, 0)
    full = range(1, d + 1)
    return all(not R.normal_form(elementary_symmetric(full, i, d) - elementary_eval(labels, i))
               for i in range(1, d + 1))


def root_product_check(R: TGPAlgebra) -> bool:
    """``prod_j (t_i - a^(0)_j)`` vanishes in the quotient for every i."""
    d = R.d
    labels = row_labels(R.lam, R.params, 0)
    for i in range(1, d + 1):
        t = MPoly.variable(d, i)
        prod = MPoly.constant(d, 1)
        for a in labels:
            prod = R.normal_form(prod * (t - a))
        if prod:
            return False
    return True


def truncation_check(R: TGPAlgebra) -> bool:
    """``prod_{j in J} (x + t_j)`` is divisible by ``prod_i (x + a^(n)_i)`` modulo the ideal.

    Polynomials in x have coefficients in the quotient; the quotient of the
    division must have degree ``d - n - m_lam(n)``.
    """
    lam, d = R.lam, R.d
    for n, size, m in _strata(lam):
        labels = row_labels(lam, R.params, n)
        divisor = [Fraction(1)]  # coefficients of prod (x + a_i), highest degree first
        for a in labels:
            divisor = [x + a * y for x, y in zip(divisor + [Fraction(0)], [Fraction(0)] + divisor)]
        for J in combinations(range(1, d + 1), size):
            # prod (x + t_j) = sum_r e_r(t_J) x^{size - r}
            num = [R.normal_form(elementary_symmetric(J, r, d)) for r in range(size + 1)]
            quot = []
            for k in range(size - m + 1):
                c = num[k]
                quot.append(c)
                if c:
                    for j in range(1, m + 1):
                        num[k + j] = num[k + j] - c * divisor[j]
            if any(R.normal_form(c) for c in num[size - m + 1:]):
                return False
            if len(quot) != size - m + 1 or not quot[0]:
                return False
    return True


def head_socle_check(R: TGPAlgebra) -> dict[str, bool]:
    """Character-level head and socle facts for the cyclic vector 1."""
    d = R.d
    one = R.coordinates(MPoly.constant(d, 1))
    orbit = [R.coordinates(MPoly.constant(d, 1).permute(Permutation.simple(d, i).images)) for i in range(1, d)]
    span = span_basis([one] + orbit)
    ch = character(R)
    top_ok = True
    if R.graded:
        gch = graded_character(R)
        top = max(gch)
        top_ok = top == n_stat(R.lam.transpose()) and gch[top] == CharacterVector.irreducible(R.lam.transpose())
    return {
        "one_spans_trivial": len(span) == 1 and any(one),
        "trivial_multiplicity_one": ch[Partition([d])] == 1,
        "socle_candidate_present": ch[R.lam.transpose()] >= 1,
        "top_degree_is_transpose": top_ok,
    }


# --------------------------------------------------------------------------
# point variety at distinct parameters


def _multiset_permutations(items: Sequence) -> Iterator[tuple]:
    counts = Counter(items)
    keys = sorted(counts)
    n = len(items)
    acc: list = []

    def rec() -> Iterator[tuple]:
        if len(acc) == n:
            yield tuple(acc)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                acc.append(k)
                yield from rec()
                acc.pop()
                counts[k] += 1

    yield from rec()


def variety_points(lam: Sequence[int], a) -> list[tuple[Fraction, ...]]:
    """Arrangements of ``t`` in which ``a_i`` occurs ``lam^t_i`` times."""
    lam = as_partition(lam)
    a = as_params(lam, a)
    if not a.is_distinct():
        raise PreconditionError("point variety oracle needs pairwise distinct parameters")
    multiset = []
    for v, h in zip(a.values, lam.transpose()):
        multiset += [v] * h
    return list(_multiset_permutations(multiset))


def annihilation_check(lam: Sequence[int], a, generators: Iterable[MPoly] | None = None) -> bool:
    """Every generator vanishes at every variety point."""
    lam = as_partition(lam)
    pts = variety_points(lam, a)
    gens = list(generators) if generators is not None else deformed_generators(lam, a).polys()
    return all(g.evaluate(p) == 0 for g in gens for p in pts)


def point_variety_oracle(lam: Sequence[int], a) -> int:
    lam = as_partition(lam)
    if not annihilation_check(lam, a):
        raise TheoremViolation(f"a variety point of {lam} fails to annihilate a generator")
    return len(variety_points(lam, a))


# --------------------------------------------------------------------------
# theorem checks


def flatness_check(lam: Sequence[int], a=None) -> dict:
    lam = as_partition(lam)
    R = build_quotient(lam, a)
    ch = character(R)
    expected = predicted_character(lam)
    return {
        "lambda": str(lam),
        "params": R.params.to_json(),
        "dim": R.dim,
        "d_lambda": d_lambda(lam),
        "flat": R.dim == d_lambda(lam),
        "character": ch.to_json(),
        "character_match": ch == expected,
    }


def _swap(a: EvalParams, i: int, j: int) -> EvalParams:
    v = list(a.values)
    v[i], v[j] = v[j], v[i]
    return EvalParams(tuple(v))


def shift_scale_check(lam: Sequence[int], a, b, c) -> dict:
    """Image of the ideal at ``b a + c`` under ``t -> b t + c`` against the ideal at ``a``."""
    lam = as_partition(lam)
    a = as_params(lam, a)
    b, c = to_rational(b), to_rational(c)
    if b == 0:
        raise PreconditionError("scale factor b must be nonzero")
    d = lam.size
    moved = EvalParams(tuple(b * x + c for x in a.values))
    images = [shift_scale(f, b, c) for f in deformed_generators(lam, moved).polys()]
    shift_ok = buchberger(images, ORDER, d) == build_quotient(lam, a).gb
    cols = lam.transpose()
    equal_swaps, other_swaps = [], []
    base = build_quotient(lam, a).gb
    for i in range(len(cols)):
        for j in range(i + 1, len(cols)):
            sw = _swap(a, i, j)
            if sw == a:
                continue
            same = build_quotient(lam, sw).gb == base
            (equal_swaps if cols[i] == cols[j] else other_swaps).append(
                {"columns": [i + 1, j + 1], "equal_ideals": same})
    return {
        "lambda": str(lam),
        "params": a.to_json(),
        "b": str(b),
        "c": str(c),
        "shift_scale": shift_ok,
        "swaps_equal_length": equal_swaps,
        "swaps_unequal_length": other_swaps,
        "ok": shift_ok and all(s["equal_ideals"] for s in equal_swaps),
    }


def splitting(lam: Sequence[int], b) -> list[tuple[Fraction, Partition]]:
    """Group the columns of ``lam`` by parameter value, in order of first appearance."""
    lam = as_partition(lam)
    b = as_params(lam, b)
    groups: dict[Fraction, list[int]] = {}
    for v, h in zip(b.values, lam.transpose()):
        groups.setdefault(v, []).append(h)
    return [(v, Partition(sorted(hs, reverse=True)).transpose()) for v, hs in groups.items()]


def split_check(lam: Sequence[int], b) -> dict:
    lam = as_partition(lam)
    b = as_params(lam, b)
    R = build_quotient(lam, b)
    blocks = splitting(lam, b)
    parts = [build_quotient(mu, (v,) * mu.part(1)) for v, mu in blocks]
    ch = character(R)
    induced = induced_product(character(P) for P in parts)
    dim_pred = multinomial(mu.size for _, mu in blocks)
    for P in parts:
        dim_pred *= P.dim
    return {
        "lambda": str(lam),
        "params": b.to_json(),
        "blocks": [{"value": str(v), "lambda": str(mu), "dim": P.dim} for (v, mu), P in zip(blocks, parts)],
        "dim": R.dim,
        "dim_product": dim_pred,
        "dim_ok": R.dim == dim_pred,
        "character_ok": ch == induced,
        "ok": R.dim == dim_pred and ch == induced,
    }


def reduced_set_check(lam: Sequence[int], a=None) -> bool:
    lam = as_partition(lam)
    return ideal_equal(deformed_generators(lam, a).polys(), reduced_generators(lam, a).polys(), ORDER, lam.size)


# --------------------------------------------------------------------------
# parameter batteries


def random_rational(rng: random.Random, nonzero: bool = True) -> Fraction:
    while True:
        x = Fraction(rng.randint(-6, 6), rng.randint(1, 3))
        if x or not nonzero:
            return x


def _distinct(rng: random.Random, k: int) -> list[Fraction]:
    out: list[Fraction] = []
    while len(out) < k:
        x = random_rational(rng)
        if x not in out:
            out.append(x)
    return out


def parameter_battery(lam: Sequence[int], trials: int = 5, seed: int = 0) -> list[tuple[str, EvalParams]]:
    """Seeded parameter vectors covering the repetition patterns available for ``lam``.

    Patterns: all zero, all equal nonzero, all distinct, and (when there are
    at least three columns) a mix of repeated and distinct values. Random
    vectors fill the list up to ``trials``. The generator is Python's
    ``random.Random`` (Mersenne Twister) seeded with ``seed`` and ``lam``.
    """
    lam = as_partition(lam)
    p = lam.part(1)
    rng = random.Random(f"{seed}:{lam}")
    out = [("zero", EvalParams.zeros(p))]
    out.append(("equal", EvalParams((random_rational(rng),) * p)))
    if p >= 2:
        out.append(("distinct", EvalParams(tuple(_distinct(rng, p)))))
    if p >= 3:
        x, y = _distinct(rng, 2)
        vals = [x, x] + [y] * (p - 2)
        if p >= 4:
            vals = [x, y, x] + _distinct(rng, p - 3)
        rng.shuffle(vals)
        out.append(("mixed", EvalParams(tuple(vals))))
    while len(out) < trials:
        k = rng.randint(1, p)
        pool = _distinct(rng, k)
        out.append(("random", EvalParams(tuple(rng.choice(pool) for _ in range(p)))))
    return out


def multiblock_battery(lam: Sequence[int], count: int = 3, seed: int = 0) -> list[EvalParams]:
    """Nonzero parameter vectors with at least two distinct values (none if lam has one column)."""
    lam = as_partition(lam)
    p = lam.part(1)
    if p < 2:
        return []
    rng = random.Random(f"split:{seed}:{lam}")
    out = []
    while len(out) < count:
        k = rng.randint(2, p)
        pool = _distinct(rng, k)
        vals = pool + [rng.choice(pool) for _ in range(p - k)]
        rng.shuffle(vals)
        cand = EvalParams(tuple(vals))
        if cand not in out:
            out.append(cand)
    return out


# --------------------------------------------------------------------------
# reports


def algebra_report(lam: Sequence[int], a=None, seed: int | None = None) -> dict:
    lam = as_partition(lam)
    R = build_quotient(lam, a)
    ch = character(R)
    checks = {
        "flat": R.dim == d_lambda(lam),
        "character": ch == predicted_character(lam),
        "symmev": symmetric_evaluation_check(R),
        "root_product": root_product_check(R),
        "groebner_verified": is_groebner(R.gb),
    }
    report = {
        "lambda": str(lam),
        "params": R.params.to_json(),
        "dim": R.dim,
        "d_lambda": d_lambda(lam),
        "character": ch.to_json(),
        "graded_character": graded_character_json(graded_character(R)) if R.graded else None,
        "checks": checks,
        "seed": seed,
    }
    if R.graded:
        checks["graded_character"] = graded_character(R) == predicted_graded_character(lam)
    return report
