"""Buchberger's algorithm over the rationals and zero-dimensional quotients.

Internally every polynomial is a primitive integer polynomial (a dict from
exponent tuples to ints with positive leading coefficient); reductions are
fraction-free. Bases handed back to callers are reduced and monic over Q.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .linalg import Matrix
from .polyring import (
    MPoly,
    Monomial,
    mono_divides,
    mono_lcm,
    order_key,
)

IntPoly = dict  # Monomial -> int


class NotZeroDimensional(ValueError):
    pass


# --------------------------------------------------------------------------
# integer polynomial helpers


def _primitive(p: IntPoly, key) -> IntPoly:
    """Divide by the content and make the leading coefficient positive."""
    if not p:
        return p
    g = 0
    for c in p.values():
        g = gcd(g, c)
        if g == 1:
            break
    lead = p[max(p, key=key)]
    if lead < 0:
        g = -g
    if g == 1:
        return p
    return {m: c // g for m, c in p.items()}


def _to_intpoly(f: MPoly, key) -> IntPoly:
    den = 1
    for c in f.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    p = {m: int(c * den) for m, c in f.terms.items()}
    return _primitive(p, key)


def _reduce(p: IntPoly, basis: list[IntPoly], lms: list[Monomial], lcs: list[int], key) -> IntPoly:
    """Fraction-free remainder of ``p`` modulo ``basis``, up to a nonzero scalar."""
    p = dict(p)
    rem: IntPoly = {}
    steps = 0
    while p:
        m = max(p, key=key)
        a = p[m]
        for idx, lm in enumerate(lms):
            if mono_divides(lm, m):
                break
        else:
            rem[m] = a
            del p[m]
            continue
        g, c = basis[idx], lcs[idx]
        k = gcd(a, c)
        scale, mult = c // k, a // k
        if scale != 1:
            for mm in p:
                p[mm] *= scale
            for mm in rem:
                rem[mm] *= scale
        shift = tuple(x - y for x, y in zip(m, lm))
        for gm, gc in g.items():
            mm = tuple(x + y for x, y in zip(gm, shift))
            v = p.get(mm, 0) - mult * gc
            if v:
                p[mm] = v
            else:
                p.pop(mm, None)
        steps += 1
        if steps % 32 == 0 and (p or rem):
            both = _primitive({**p, **rem}, key)
            # _primitive may flip the sign; keep the split between p and rem
            p = {mm: both[mm] for mm in p}
            rem = {mm: both[mm] for mm in rem}
    return _primitive(rem, key)


def _spoly(f: IntPoly, g: IntPoly, lmf: Monomial, lmg: Monomial, lcf: int, lcg: int) -> IntPoly:
    lcm = mono_lcm(lmf, lmg)
    k = gcd(lcf, lcg)
    cf, cg = lcg // k, lcf // k
    sf = tuple(x - y for x, y in zip(lcm, lmf))
    sg = tuple(x - y for x, y in zip(lcm, lmg))
    out: IntPoly = {}
    for m, c in f.items():
        mm = tuple(x + y for x, y in zip(m, sf))
        out[mm] = out.get(mm, 0) + cf * c
    for m, c in g.items():
        mm = tuple(x + y for x, y in zip(m, sg))
        v = out.get(mm, 0) - cg * c
        if v:
            out[mm] = v
        else:
            out.pop(mm, None)
    return {m: c for m, c in out.items() if c}


def _row_reduce_inputs(polys: list[IntPoly], key) -> list[IntPoly]:
    """Gaussian elimination on the coefficient vectors of the generators.

    Same ideal, pairwise distinct leading monomials, no leading monomial
    appearing in another generator; removes the heavy linear redundancy of
    Tanisaki-type generator sets before any S-pair work.
    """
    pivots: dict[Monomial, IntPoly] = {}
    for p in polys:
        p = dict(p)
        while p:
            m = max(p, key=key)
            if m not in pivots:
                break
            q = pivots[m]
            a, c = p[m], q[m]
            k = gcd(a, c)
            s, t = c // k, a // k
            out = {mm: s * v for mm, v in p.items()}
            for mm, v in q.items():
                w = out.get(mm, 0) - t * v
                if w:
                    out[mm] = w
                else:
                    out.pop(mm, None)
            p = out
        if p:
            p = _primitive(p, key)
            lm = max(p, key=key)
            # back-substitute into existing rows
            for pm, q in list(pivots.items()):
                if lm in q:
                    a, c = q[lm], p[lm]
                    k = gcd(a, c)
                    s, t = c // k, a // k
                    out = {mm: s * v for mm, v in q.items()}
                    for mm, v in p.items():
                        w = out.get(mm, 0) - t * v
                        if w:
                            out[mm] = w
                        else:
                            out.pop(mm, None)
                    pivots[pm] = _primitive(out, key)
            pivots[lm] = p
    return [pivots[m] for m in sorted(pivots, key=key)]


# --------------------------------------------------------------------------
# Buchberger


def _buchberger_int(polys: list[IntPoly], key) -> list[IntPoly]:
    basis: list[IntPoly] = []
    lms: list[Monomial] = []
    lcs: list[int] = []
    pairs: list[tuple[int, int]] = []
    lcm_of: dict[tuple[int, int], Monomial] = {}

    def add(h: IntPoly) -> None:
        nonlocal pairs
        lmh = max(h, key=key)
        new = len(basis)
        basis.append(h)
        lms.append(lmh)
        lcs.append(h[lmh])
        # Gebauer-Moeller update
        cands = []
        for i in range(new):
            cands.append((i, mono_lcm(lms[i], lmh)))
        kept = []
        for idx, (i, L) in enumerate(cands):
            coprime = L == tuple(x + y for x, y in zip(lms[i], lmh))
            if coprime:
                kept.append((i, L, True))
                continue
            dominated = False
            for jdx, (j, L2) in enumerate(cands):
                if jdx != idx and mono_divides(L2, L) and (L2 != L or jdx < idx):
                    dominated = True
                    break
            if not dominated:
                kept.append((i, L, False))
        old = []
        for (i, j) in pairs:
            L = lcm_of[(i, j)]
            if (mono_divides(lmh, L) and mono_lcm(lms[i], lmh) != L and mono_lcm(lms[j], lmh) != L):
                del lcm_of[(i, j)]
                continue
            old.append((i, j))
        for i, L, coprime in kept:
            if not coprime:
                old.append((i, new))
                lcm_of[(i, new)] = L
        pairs = old
        # basis elements whose leading monomial is a multiple of lmh stay as
        # reducers; minimalization later discards them

    for p in polys:
        add(p)

    while pairs:
        best = min(pairs, key=lambda ij: (key(lcm_of[ij]), ij))
        pairs.remove(best)
        i, j = best
        del lcm_of[best]
        s = _spoly(basis[i], basis[j], lms[i], lms[j], lcs[i], lcs[j])
        if not s:
            continue
        r = _reduce(s, basis, lms, lcs, key)
        if r:
            add(r)

    # minimalize then interreduce
    order_idx = sorted(range(len(basis)), key=lambda i: (key(lms[i]), i))
    minimal: list[int] = []
    for i in order_idx:
        if not any(mono_divides(lms[j], lms[i]) for j in minimal):
            minimal.append(i)
    mb = [basis[i] for i in minimal]
    mlm = [lms[i] for i in minimal]
    mlc = [lcs[i] for i in minimal]
    reduced = []
    for i in range(len(mb)):
        others = [k for k in range(len(mb)) if k != i]
        # the leading term is irreducible by the other minimal elements, so a
        # full reduction keeps it and reduces only the tail
        reduced.append(_reduce(mb[i], [mb[k] for k in others], [mlm[k] for k in others],
                               [mlc[k] for k in others], key))
    return reduced


# --------------------------------------------------------------------------
# public types


class GroebnerBasis:
    """Reduced Groebner basis; ``polys`` are monic and sorted by leading monomial."""

    def __init__(self, nvars: int, order: str, polys: Sequence[MPoly], _intpolys: list[IntPoly] | None = None):
        self.nvars = nvars
        self.order = order
        self._key = order_key(order)
        self.polys = tuple(polys)
        self.leading_monomials = tuple(p.leading_monomial(order) for p in self.polys)
        if _intpolys is None:
            _intpolys = [_to_intpoly(p, self._key) for p in self.polys]
        self._int = _intpolys
        self._lcs = [p[lm] for p, lm in zip(self._int, self.leading_monomials)]
        self._nf_cache: dict[Monomial, MPoly] = {}

    def __len__(self) -> int:
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return self.nvars == other.nvars and self.order == other.order and self.polys == other.polys

    def __repr__(self) -> str:
        return f"GroebnerBasis({self.order}, [{', '.join(p.to_text(self.order) for p in self.polys)}])"

    def is_unit_ideal(self) -> bool:
        return any(sum(lm) == 0 for lm in self.leading_monomials)

    def to_json(self) -> dict:
        return {"order": self.order, "nvars": self.nvars, "basis": [p.to_json(self.order) for p in self.polys]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data: dict) -> "GroebnerBasis":
        n = data["nvars"]
        return cls(n, data["order"], [MPoly.from_json(p, n) for p in data["basis"]])


def buchberger(gens: Iterable[MPoly], order: str = "degrevlex", nvars: int | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``."""
    gens = list(gens)
    if nvars is None:
        if not gens:
            raise ValueError("cannot infer the ring of an empty generator list; pass nvars")
        nvars = gens[0].nvars
    if any(g.nvars != nvars for g in gens):
        raise ValueError("all generators must live in the same ring")
    key = order_key(order)
    polys = [_to_intpoly(g, key) for g in gens if g]
    polys = _row_reduce_inputs(polys, key)
    if any(sum(max(p, key=key)) == 0 for p in polys):
        one = MPoly.constant(nvars, 1)
        return GroebnerBasis(nvars, order, [one])
    reduced = _buchberger_int(polys, key) if polys else []
    out = []
    for p in sorted(reduced, key=lambda p: key(max(p, key=key))):
        lm = max(p, key=key)
        lc = p[lm]
        out.append(MPoly._raw(nvars, {m: Fraction(c, lc) for m, c in p.items()}))
    return GroebnerBasis(nvars, order, out)


def normal_form(f: MPoly, G: GroebnerBasis) -> MPoly:
    """Unique remainder of ``f`` modulo the reduced basis ``G``."""
    if f.nvars != G.nvars:
        raise ValueError("polynomial and basis live in different rings")
    if not f:
        return f
    if len(f.terms) == 1:
        (m, c), = f.terms.items()
        return normal_form_monomial(m, G) * c
    den = 1
    for c in f.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    p = {m: int(c * den) for m, c in f.terms.items()}
    return _normal_form_int(p, den, G)


def _normal_form_int(p: IntPoly, den: int, G: GroebnerBasis) -> MPoly:
    """Exact remainder of ``p / den``; tracks the fraction-free scaling."""
    key = G._key
    p = dict(p)
    rem: IntPoly = {}
    scale_total = 1
    while p:
        m = max(p, key=key)
        a = p[m]
        for idx, lm in enumerate(G.leading_monomials):
            if mono_divides(lm, m):
                break
        else:
            rem[m] = a
            del p[m]
            continue
        g, c = G._int[idx], G._lcs[idx]
        k = gcd(a, c)
        scale, mult = c // k, a // k
        if scale != 1:
            scale_total *= scale
            for mm in p:
                p[mm] *= scale
            for mm in rem:
                rem[mm] *= scale
        shift = tuple(x - y for x, y in zip(m, lm))
        for gm, gc in g.items():
            mm = tuple(x + y for x, y in zip(gm, shift))
            v = p.get(mm, 0) - mult * gc
            if v:
                p[mm] = v
            else:
                p.pop(mm, None)
    total = den * scale_total
    return MPoly._raw(G.nvars, {m: Fraction(c, total) for m, c in rem.items()})


def normal_form_monomial(m: Monomial, G: GroebnerBasis) -> MPoly:
    """Memoized normal form of a single monomial."""
    cached = G._nf_cache.get(m)
    if cached is None:
        cached = _normal_form_int({m: 1}, 1, G)
        G._nf_cache[m] = cached
    return cached


def reduces_to_zero(f: MPoly, G: GroebnerBasis) -> bool:
    return not normal_form(f, G)


def is_groebner(G: GroebnerBasis) -> bool:
    """Post-hoc check that every S-polynomial of basis pairs reduces to zero."""
    key = G._key
    n = len(G._int)
    for i in range(n):
        for j in range(i + 1, n):
            s = _spoly(G._int[i], G._int[j], G.leading_monomials[i], G.leading_monomials[j], G._lcs[i], G._lcs[j])
            if s and _reduce(s, G._int, list(G.leading_monomials), G._lcs, key):
                return False
    return True


def is_reduced(G: GroebnerBasis) -> bool:
    for i, p in enumerate(G.polys):
        if p.terms[G.leading_monomials[i]] != 1:
            return False
        for j, lm in enumerate(G.leading_monomials):
            if i != j and any(mono_divides(lm, m) for m in p.terms):
                return False
    return True


# --------------------------------------------------------------------------
# zero-dimensional quotients


def quotient_basis(G: GroebnerBasis) -> list[Monomial]:
    """Standard monomials of a zero-dimensional ideal, ascending in the order."""
    n = G.nvars
    lms = G.leading_monomials
    if G.is_unit_ideal():
        return []
    for v in range(n):
        if not any(lm[v] > 0 and sum(lm) == lm[v] for lm in lms):
            raise NotZeroDimensional(f"ideal is not zero-dimensional: no pure power of t{v + 1} among leading monomials")
    seen = {(0,) * n}
    frontier = [(0,) * n]
    while frontier:
        nxt = []
        for m in frontier:
            for v in range(n):
                mm = m[:v] + (m[v] + 1,) + m[v + 1:]
                if mm in seen:
                    continue
                if any(mono_divides(lm, mm) for lm in lms):
                    continue
                seen.add(mm)
                nxt.append(mm)
        frontier = nxt
    return sorted(seen, key=G._key)


def quotient_dimension(G: GroebnerBasis) -> int:
    return len(quotient_basis(G))


def ideal_equal(gens1: Iterable[MPoly], gens2: Iterable[MPoly], order: str = "degrevlex", nvars: int | None = None) -> bool:
    g1, g2 = list(gens1), list(gens2)
    if nvars is None:
        nvars = (g1 or g2)[0].nvars if (g1 or g2) else 0
    return buchberger(g1, order, nvars) == buchberger(g2, order, nvars)


def coordinates(f: MPoly, basis: Sequence[Monomial], index: dict[Monomial, int] | None = None) -> list[Fraction]:
    """Coordinates of a normal form in a standard-monomial basis."""
    if index is None:
        index = {m: i for i, m in enumerate(basis)}
    vec = [Fraction(0)] * len(basis)
    for m, c in f.terms.items():
        try:
            vec[index[m]] = c
        except KeyError:
            raise ValueError(f"monomial {m} is not standard; reduce first") from None
    return vec


def multiplication_matrix(f: MPoly, G: GroebnerBasis, basis: Sequence[Monomial] | None = None) -> Matrix:
    """Matrix of ``v -> v*f`` on the quotient; column j holds NF(b_j * f)."""
    if basis is None:
        basis = quotient_basis(G)
    index = {m: i for i, m in enumerate(basis)}
    n = len(basis)
    cols = []
    for b in basis:
        acc: dict[Monomial, Fraction] = {}
        for m, c in f.terms.items():
            prod = tuple(x + y for x, y in zip(b, m))
            for mm, cc in normal_form_monomial(prod, G).terms.items():
                v = acc.get(mm, 0) + c * cc
                if v:
                    acc[mm] = v
                else:
                    acc.pop(mm, None)
        cols.append(coordinates(MPoly._raw(G.nvars, acc), basis, index))
    return Matrix([[cols[j][i] for j in range(n)] for i in range(n)])
