"""Highest-weight multiplicities for sl_{n+1} and the Schur-Weyl relabelling.

Dominant weights are partitions with at most ``n`` parts. Tensoring with the
fundamental module ``V(omega_k)`` adds a vertical strip of size ``k``; the
tensor product over the columns of ``lam`` is the oracle compared against
the sign-twisted character of the deformed quotient.
"""

from __future__ import annotations

from math import comb
from typing import Iterator, Mapping, Sequence

from .errors import PreconditionError
from .partitions import Partition, as_partition, kostka_number, partitions_of
from .symgrp import CharacterVector, sign_twist


class GDecomposition:
    """Multiplicities of irreducible ``sl_{n+1}``-modules, keyed by partitions."""

    __slots__ = ("rank", "mult")

    def __init__(self, rank: int, mult: Mapping = ()):
        self.rank = rank
        clean: dict[Partition, int] = {}
        for k, v in dict(mult).items():
            lam = as_partition(k)
            if len(lam) > rank:
                raise PreconditionError(f"{lam} has more than {rank} parts")
            if v:
                clean[lam] = clean.get(lam, 0) + int(v)
        self.mult = {k: clean[k] for k in sorted(clean, key=lambda p: (-sum(p), [-x for x in p])) if clean[k]}

    def __getitem__(self, lam) -> int:
        return self.mult.get(as_partition(lam), 0)

    def __eq__(self, other) -> bool:
        return isinstance(other, GDecomposition) and self.rank == other.rank and self.mult == other.mult

    def __repr__(self) -> str:
        return f"GDecomposition(rank={self.rank}, {self.to_json()['multiplicities']})"

    def dimension(self) -> int:
        return sum(m * weyl_dimension(lam, self.rank) for lam, m in self.mult.items())

    def to_json(self) -> dict:
        return {"rank": self.rank, "multiplicities": {f"({lam})": m for lam, m in self.mult.items()}}


def weyl_dimension(lam: Sequence[int], n: int) -> int:
    """``dim V(wt(lam))`` for ``sl_{n+1}`` by the hook-content formula."""
    lam = as_partition(lam)
    if len(lam) > n + 1:
        return 0
    conj = lam.transpose()
    num, den = 1, 1
    for i, row in enumerate(lam):
        for j in range(row):
            num *= n + 1 + j - i
            den *= (row - j - 1) + (conj[j] - i - 1) + 1
    return num // den


def _vertical_strips(mu: Partition, k: int, max_rows: int) -> Iterator[Partition]:
    """Partitions obtained from ``mu`` by adding ``k`` boxes, no two in a row."""
    rows = list(mu) + [0] * (max_rows - len(mu))
    if len(rows) > max_rows:
        return

    def rec(i: int, left: int, acc: list[int]) -> Iterator[Partition]:
        if i == len(rows):
            if left == 0:
                yield Partition(acc)
            return
        for add in (0, 1):
            if add > left:
                continue
            val = rows[i] + add
            if i > 0 and val > acc[-1]:
                continue
            acc.append(val)
            yield from rec(i + 1, left - add, acc)
            acc.pop()

    yield from rec(0, k, [])


def tensor_fundamental(dec: GDecomposition, k: int) -> GDecomposition:
    """``dec (x) V(omega_k)`` via the column Pieri rule, truncated to ``sl_{n+1}``.

    A column of height ``n+1`` is the trivial weight; shapes are reduced by
    removing full columns.
    """
    n = dec.rank
    out: dict[Partition, int] = {}
    for mu, m in dec.mult.items():
        for nu in _vertical_strips(mu, k, n + 1):
            full = nu[n] if len(nu) > n else 0
            red = Partition(x - full for x in nu)
            out[red] = out.get(red, 0) + m
    return GDecomposition(n, out)


def weyl_gmodule_decomposition(lam: Sequence[int], n: int, column_order: Sequence[int] | None = None) -> GDecomposition:
    """Decomposition of ``V(omega_{lam^t_1}) (x) ... (x) V(omega_{lam^t_p})``."""
    lam = as_partition(lam)
    if lam.size > n:
        raise PreconditionError(f"|lambda| = {lam.size} exceeds n = {n}")
    cols = list(lam.transpose()) if column_order is None else list(column_order)
    if sorted(cols, reverse=True) != list(lam.transpose()):
        raise ValueError("column_order must be a rearrangement of the column heights")
    dec = GDecomposition(n, {Partition(): 1})
    for k in cols:
        dec = tensor_fundamental(dec, k)
    return dec


def schur_weyl_image(v: CharacterVector, n: int) -> GDecomposition:
    """Send ``L(mu)`` to ``V(wt(mu))`` in the stable range ``d <= n``."""
    if v.d > n:
        raise PreconditionError(f"d = {v.d} exceeds n = {n}; outside the stable range")
    return GDecomposition(n, dict(v.mult))


def dualweyl_check(lam: Sequence[int], a=None, n: int | None = None) -> dict:
    """Sign-twisted character of the deformed quotient against the Pieri oracle."""
    from .tgp import build_quotient, character

    lam = as_partition(lam)
    n = lam.size if n is None else n
    if lam.size > n:
        raise PreconditionError(f"|lambda| = {lam.size} exceeds n = {n}")
    R = build_quotient(lam, a)
    image = schur_weyl_image(sign_twist(character(R)), n)
    oracle = weyl_gmodule_decomposition(lam, n)
    cross = kostka_cross_identity(lam, n, oracle)
    expected_dim = 1
    for h in lam.transpose():
        expected_dim *= comb(n + 1, h)
    return {
        "lambda": str(lam),
        "params": R.params.to_json(),
        "rank": n,
        "image": image.to_json()["multiplicities"],
        "oracle": oracle.to_json()["multiplicities"],
        "match": image == oracle,
        "kostka_identity": cross,
        "dimension_ok": image.dimension() == expected_dim == oracle.dimension(),
        "ok": image == oracle and cross and image.dimension() == expected_dim,
    }


def kostka_cross_identity(lam: Sequence[int], n: int, oracle: GDecomposition | None = None) -> bool:
    """``[W : V(mu)] = K_{mu^t, lam^t}`` for every partition ``mu`` of ``|lam|``."""
    lam = as_partition(lam)
    oracle = oracle or weyl_gmodule_decomposition(lam, n)
    lt = lam.transpose()
    for mu in partitions_of(lam.size):
        if len(mu) > n:
            continue
        if oracle[mu] != kostka_number(mu.transpose(), lt):
            return False
    return all(sum(mu) == lam.size for mu in oracle.mult)
