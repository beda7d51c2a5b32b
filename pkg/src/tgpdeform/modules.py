"""Finite-dimensional right modules over the extended affine symmetric group.

A module is given by matrices for the simple transpositions and for
``t_1..t_d``. Matrices act on coordinate columns: column j of ``[g]`` holds
the coordinates of ``v_j . g``, so ``[g h] = [h][g]``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import factorial
from typing import Sequence

from .linalg import Matrix, nullspace, span_basis
from .partitions import Partition
from .symgrp import CharacterVector, ClassFunction, Permutation, character_table, decompose, hook_dimension


def reduced_word(sigma: Permutation) -> list[int]:
    """Indices i with ``sigma = s_{i_1} s_{i_2} ...`` under left-to-right composition."""
    imgs = list(sigma.images)
    word: list[int] = []
    # swapping positions i, i+1 of the image vector composes s_i on the left,
    # so the swaps of a bubble sort read off sigma = s_{i_1} s_{i_2} ...
    changed = True
    while changed:
        changed = False
        for i in range(len(imgs) - 1):
            if imgs[i] > imgs[i + 1]:
                imgs[i], imgs[i + 1] = imgs[i + 1], imgs[i]
                word.append(i + 1)
                changed = True
    return word


@dataclass(frozen=True)
class RepMatrices:
    d: int
    sigma: tuple[Matrix, ...]
    t: tuple[Matrix, ...]
    amended: bool = False

    @property
    def dim(self) -> int:
        return self.t[0].nrows if self.t else 1

    def generators(self) -> list[Matrix]:
        return list(self.sigma) + list(self.t)

    def perm_matrix(self, sigma: Permutation) -> Matrix:
        out = Matrix.identity(self.dim)
        for i in reduced_word(sigma):
            out = self.sigma[i - 1] @ out
        return out

    @cached_property
    def group_matrices(self) -> dict[Permutation, Matrix]:
        """Matrices of every element of ``S_d`` by breadth-first products."""
        ident = Permutation.identity(self.d)
        mats = {ident: Matrix.identity(self.dim)}
        frontier = [ident]
        while frontier:
            nxt = []
            for g in frontier:
                for i in range(1, self.d):
                    h = g.compose(Permutation.simple(self.d, i))
                    if h not in mats:
                        mats[h] = self.sigma[i - 1] @ mats[g]
                        nxt.append(h)
            frontier = nxt
        return mats

    def character(self) -> CharacterVector:
        if self.d == 1:
            return CharacterVector(1, {Partition([1]): self.dim})
        from .symgrp import class_representative
        phi = ClassFunction.from_callable(self.d, lambda rho: self.perm_matrix(class_representative(rho)).trace())
        return decompose(phi)

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "amended": self.amended,
            "sigma": [m.to_json() for m in self.sigma],
            "t": [m.to_json() for m in self.t],
        }

    def map_entries(self, fn) -> "RepMatrices":
        return RepMatrices(self.d, tuple(m.substitute(fn) for m in self.sigma),
                           tuple(m.substitute(fn) for m in self.t), self.amended)


def verify_affine_relations(M: RepMatrices, require_invertible: bool = True) -> bool:
    """Defining relations of the extended affine symmetric group as matrix identities."""
    n, d = M.dim, M.d
    eye = Matrix.identity(n)
    s, t = M.sigma, M.t
    if len(s) != d - 1 or len(t) != d:
        return False
    for i in range(d - 1):
        if s[i] @ s[i] != eye:
            return False
        if i + 1 < d - 1 and s[i] @ s[i + 1] @ s[i] != s[i + 1] @ s[i] @ s[i + 1]:
            return False
        for j in range(i + 2, d - 1):
            if s[i] @ s[j] != s[j] @ s[i]:
                return False
    for i in range(d):
        for j in range(i + 1, d):
            if t[i] @ t[j] != t[j] @ t[i]:
                return False
    for i in range(d - 1):
        # s_i t_i = t_{i+1} s_i, written for the anti-homomorphism g -> [g]
        if t[i] @ s[i] != s[i] @ t[i + 1]:
            return False
        for j in range(d):
            if j not in (i, i + 1) and t[j] @ s[i] != s[i] @ t[j]:
                return False
    if require_invertible and any(m.det() == 0 for m in t):
        return False
    return True


# --------------------------------------------------------------------------
# structure of modules


def closure(M: RepMatrices, vectors: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Basis of the smallest submodule containing ``vectors``.

    Closure under the ``t_i`` suffices for their inverses, which are
    polynomials in ``t_i`` whenever they exist.
    """
    basis = span_basis(vectors)
    gens = M.generators()
    queue = list(basis)
    while queue:
        v = queue.pop()
        for g in gens:
            w = g.apply(v)
            new = span_basis(basis + [w])
            if len(new) > len(basis):
                basis = new
                queue.append(w)
    return basis


def is_invariant(M: RepMatrices, vectors: Sequence[Sequence[Fraction]]) -> bool:
    base = span_basis(vectors)
    return len(closure(M, base)) == len(base)


def isotypic_components(M: RepMatrices) -> dict[Partition, list[list[Fraction]]]:
    """``S_d``-isotypic components via central idempotents."""
    d, n = M.d, M.dim
    out = {}
    if d == 1:
        return {Partition([1]): [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]}
    table = character_table(d)
    mats = M.group_matrices
    for lam, row in zip(table.irreducibles, table.values):
        acc = Matrix.zeros(n)
        for g, mat in mats.items():
            chi = row[table.classes.index(g.cycle_type())]
            if chi:
                acc = acc + mat.scale(chi)
        proj = acc.scale(Fraction(hook_dimension(lam), factorial(d)))
        cols = span_basis(proj.transpose().tolist())
        if cols:
            out[lam] = cols
    return out


def intertwiners(A: RepMatrices, B: RepMatrices) -> list[Matrix]:
    """Basis of ``{X : X [g]_A = [g]_B X}`` for all generators ``g``."""
    na, nb = A.dim, B.dim
    rows = []
    # unknown X[p][q] is variable p*na + q
    for ga, gb in zip(A.generators(), B.generators()):
        for p in range(nb):
            for q in range(na):
                eq = [Fraction(0)] * (na * nb)
                for k in range(na):
                    c = ga[k, q]
                    if c:
                        eq[p * na + k] += c
                for k in range(nb):
                    c = gb[p, k]
                    if c:
                        eq[k * na + q] -= c
                if any(eq):
                    rows.append(eq)
    sols = nullspace(rows, na * nb)
    return [Matrix([v[p * na:(p + 1) * na] for p in range(nb)]) for v in sols]


def endomorphism_dimension(M: RepMatrices) -> int:
    return len(intertwiners(M, M))


def is_isomorphic(A: RepMatrices, B: RepMatrices, trials: int = 4, seed: int = 0) -> bool:
    """Look for an invertible intertwiner among random combinations of a basis.

    The determinant of a generic combination is a nonzero polynomial whenever
    an invertible intertwiner exists, so random integer points from a large
    range find one except with negligible probability.
    """
    if A.d != B.d or A.dim != B.dim:
        return False
    basis = intertwiners(A, B)
    if not basis:
        return False
    rng = random.Random(seed)
    for _ in range(trials):
        X = Matrix.zeros(A.dim)
        for b in basis:
            X = X + b.scale(rng.randint(-10**6, 10**6))
        if X.det() != 0:
            return True
    return False


def algebra_dimension(M: RepMatrices) -> int:
    """Dimension of the matrix algebra generated by the action."""
    n = M.dim
    flat = lambda m: [x for r in m.rows for x in r]
    basis = span_basis([flat(Matrix.identity(n))])
    elems = [Matrix.identity(n)]
    gens = M.generators()
    while elems:
        nxt = []
        for e in elems:
            for g in gens:
                p = g @ e
                new = span_basis(basis + [flat(p)])
                if len(new) > len(basis):
                    basis = new
                    nxt.append(p)
        elems = nxt
    return len(basis)


def is_irreducible(M: RepMatrices) -> bool:
    """Burnside: irreducible over an algebraically closed field iff the action spans all matrices.

    Over Q this tests absolute irreducibility.
    """
    return algebra_dimension(M) == M.dim ** 2


def dual_module(M: RepMatrices) -> RepMatrices:
    """Contragredient module: ``g -> ([g]^{-1})^T``."""
    return RepMatrices(M.d, tuple(m.inverse().transpose() for m in M.sigma),
                       tuple(m.inverse().transpose() for m in M.t), M.amended)


def is_cyclic_vector(M: RepMatrices, v: Sequence[Fraction]) -> bool:
    return len(closure(M, [v])) == M.dim


def fingerprint(M: RepMatrices) -> dict:
    """Isomorphism invariants used to tell limit modules apart."""
    comps = isotypic_components(M)
    iso = {}
    for lam, vecs in comps.items():
        iso[f"({lam})"] = {
            "dim": len(vecs),
            "invariant": is_invariant(M, vecs),
            "generated_dim": len(closure(M, vecs)),
        }
    return {
        "dim": M.dim,
        "character": M.character().to_json(),
        "isotypic": iso,
        "endomorphism_dim": endomorphism_dimension(M),
        "irreducible": is_irreducible(M),
    }
