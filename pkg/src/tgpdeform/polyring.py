"""Sparse multivariate polynomials over the rationals in variables t1..td.

A polynomial is an immutable map from exponent tuples to nonzero
``fractions.Fraction`` coefficients. Monomial orders are identified by name
(``"degrevlex"``, ``"deglex"``, ``"lex"``) and realized as sort keys: a larger
key is a larger monomial.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Mapping, Sequence

Monomial = tuple[int, ...]
Rational = Fraction

ORDERS = ("degrevlex", "deglex", "lex")


def to_rational(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass a Fraction or a 'p/q' string")
    return Fraction(x)


def _degrevlex_key(m: Monomial) -> tuple:
    return (sum(m), tuple(-e for e in reversed(m)))


def _deglex_key(m: Monomial) -> tuple:
    return (sum(m), m)


def _lex_key(m: Monomial) -> tuple:
    return m


_KEYS = {"degrevlex": _degrevlex_key, "deglex": _deglex_key, "lex": _lex_key}


def order_key(order: str) -> Callable[[Monomial], tuple]:
    """Memoized sort key for a named monomial order."""
    try:
        return _cached_keys[order]
    except KeyError:
        raise ValueError(f"unknown monomial order {order!r}; expected one of {ORDERS}") from None


_cached_keys = {name: lru_cache(maxsize=None)(fn) for name, fn in _KEYS.items()}


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


class MPoly:
    """Polynomial in ``nvars`` commuting variables with rational coefficients."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Monomial, object] | None = None):
        self.nvars = nvars
        clean: dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != nvars or any(e < 0 for e in mono):
                raise ValueError(f"bad monomial {mono} for a ring in {nvars} variables")
            c = to_rational(c)
            if c:
                clean[mono] = clean.get(mono, 0) + c
                if not clean[mono]:
                    del clean[mono]
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Monomial, Fraction]) -> "MPoly":
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        obj._hash = None
        return obj

    # constructors ----------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "MPoly":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c) -> "MPoly":
        c = to_rational(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "MPoly":
        """The variable ``t_i`` (1-based)."""
        if not 1 <= i <= nvars:
            raise ValueError(f"variable index {i} out of range 1..{nvars}")
        mono = tuple(1 if j == i - 1 else 0 for j in range(nvars))
        return cls._raw(nvars, {mono: Fraction(1)})

    @classmethod
    def monomial(cls, mono: Sequence[int], coeff=1) -> "MPoly":
        return cls(len(mono), {tuple(mono): coeff})

    # basic protocol --------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, MPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MPoly.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise ValueError(f"ring mismatch: {self.nvars} vs {other.nvars} variables")
            return other
        return MPoly.constant(self.nvars, other)

    # arithmetic ------------------------------------------------------------

    def __add__(self, other) -> "MPoly":
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return MPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly._raw(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "MPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "MPoly":
        if not isinstance(other, MPoly):
            c = to_rational(other)
            if not c:
                return MPoly.zero(self.nvars)
            return MPoly._raw(self.nvars, {m: v * c for m, v in self.terms.items()})
        other = self._coerce(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    del out[m]
        return MPoly._raw(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MPoly":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = MPoly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_term(self, mono: Monomial, coeff) -> "MPoly":
        coeff = to_rational(coeff)
        if not coeff:
            return MPoly.zero(self.nvars)
        return MPoly._raw(self.nvars, {mono_mul(m, mono): c * coeff for m, c in self.terms.items()})

    # inspection ------------------------------------------------------------

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def coefficient(self, mono: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coefficient((0,) * self.nvars)

    def sorted_terms(self, order: str = "degrevlex", descending: bool = True) -> list[tuple[Monomial, Fraction]]:
        key = order_key(order)
        return sorted(self.terms.items(), key=lambda mc: key(mc[0]), reverse=descending)

    def leading_monomial(self, order: str = "degrevlex") -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order_key(order))

    def leading_coefficient(self, order: str = "degrevlex") -> Fraction:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: str = "degrevlex") -> "MPoly":
        if not self.terms:
            return self
        return self * (1 / self.leading_coefficient(order))

    def evaluate(self, point: Sequence) -> Fraction:
        point = [to_rational(x) for x in point]
        if len(point) != self.nvars:
            raise ValueError("point has wrong dimension")
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v *= x**e
            total += v
        return total

    # substitutions ---------------------------------------------------------

    def permute(self, images: Sequence[int]) -> "MPoly":
        """Substitute ``t_j -> t_{images[j-1]}`` (images are 1-based)."""
        if len(images) != self.nvars:
            raise ValueError(f"permutation of size {len(images)} on a ring of {self.nvars} variables")
        out = {}
        for m, c in self.terms.items():
            new = [0] * self.nvars
            for j, e in enumerate(m):
                new[images[j] - 1] = e
            out[tuple(new)] = c
        return MPoly._raw(self.nvars, out)

    def substitute(self, values: Sequence["MPoly"]) -> "MPoly":
        """Substitute ``t_j -> values[j-1]`` simultaneously."""
        if len(values) != self.nvars:
            raise ValueError("need one substitution per variable")
        result = MPoly.zero(values[0].nvars if values else self.nvars)
        powers: dict[tuple[int, int], MPoly] = {}
        for m, c in self.terms.items():
            term = MPoly.constant(result.nvars, c)
            for j, e in enumerate(m):
                if e:
                    if (j, e) not in powers:
                        powers[(j, e)] = values[j] ** e
                    term = term * powers[(j, e)]
            result = result + term
        return result

    def embed(self, nvars: int, offset: int = 0) -> "MPoly":
        """Move into a ring with ``nvars`` variables, shifting indices by ``offset``."""
        if offset + self.nvars > nvars:
            raise ValueError("target ring too small")
        pad_left, pad_right = (0,) * offset, (0,) * (nvars - offset - self.nvars)
        return MPoly._raw(nvars, {pad_left + m + pad_right: c for m, c in self.terms.items()})

    # text and json ---------------------------------------------------------

    def to_text(self, order: str = "degrevlex") -> str:
        if not self.terms:
            return "0"
        pieces = []
        for m, c in self.sorted_terms(order):
            factors = [f"t{j + 1}" if e == 1 else f"t{j + 1}^{e}" for j, e in enumerate(m) if e]
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    __str__ = to_text

    def __repr__(self) -> str:
        return f"MPoly({self.nvars}, {self.to_text()!r})"

    _TERM = re.compile(r"^(?:(\d+(?:/\d+)?)\*?)?((?:t\d+(?:\^\d+)?\*?)*)$")

    @classmethod
    def parse(cls, text: str, nvars: int) -> "MPoly":
        """Parse the text format, e.g. ``"3/2*t1^2*t3 - t2 + 1"``."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial text")
        if s[0] not in "+-":
            s = "+" + s
        tokens = re.findall(r"([+-])([^+-]+)", s)
        if "".join(sgn + body for sgn, body in tokens) != s:
            raise ValueError(f"cannot parse polynomial {text!r}")
        terms: dict[Monomial, Fraction] = {}
        for sgn, body in tokens:
            match = cls._TERM.match(body)
            if not match or not body:
                raise ValueError(f"cannot parse term {body!r}")
            coeff = Fraction(match.group(1)) if match.group(1) else Fraction(1)
            mono = [0] * nvars
            for var, exp in re.findall(r"t(\d+)(?:\^(\d+))?", match.group(2) or ""):
                idx = int(var)
                if not 1 <= idx <= nvars:
                    raise ValueError(f"variable t{idx} outside ring of {nvars} variables")
                mono[idx - 1] += int(exp) if exp else 1
            if sgn == "-":
                coeff = -coeff
            key = tuple(mono)
            terms[key] = terms.get(key, 0) + coeff
        return cls(nvars, terms)

    def to_json(self, order: str = "degrevlex") -> list[dict]:
        return [{"exponents": list(m), "coeff": str(c)} for m, c in self.sorted_terms(order)]

    @classmethod
    def from_json(cls, data: list[dict], nvars: int | None = None) -> "MPoly":
        if nvars is None:
            if not data:
                raise ValueError("cannot infer ring size from an empty term list")
            nvars = len(data[0]["exponents"])
        return cls(nvars, {tuple(t["exponents"]): Fraction(t["coeff"]) for t in data})


# --------------------------------------------------------------------------
# symmetric-function constructors


def elementary_symmetric(J: Iterable[int], r: int, d: int) -> MPoly:
    """``e_r`` in the variables ``t_j, j in J`` (1-based), as a polynomial in d variables."""
    J = sorted(set(J))
    if any(not 1 <= j <= d for j in J):
        raise ValueError(f"index set {J} not inside 1..{d}")
    if r < 0 or r > len(J):
        return MPoly.zero(d)
    terms = {}
    for combo in combinations(J, r):
        mono = [0] * d
        for j in combo:
            mono[j - 1] = 1
        terms[tuple(mono)] = Fraction(1)
    return MPoly._raw(d, terms)


def complete_homogeneous_eval(values: Sequence, k: int) -> Fraction:
    """``h_k`` evaluated at a vector, via ``h_k(a_1..a_j) = h_k(a_1..a_{j-1}) + a_j h_{k-1}(a_1..a_j)``."""
    if k < 0:
        return Fraction(0)
    h = [Fraction(1)] + [Fraction(0)] * k
    for a in values:
        a = to_rational(a)
        for i in range(1, k + 1):
            h[i] += a * h[i - 1]
    return h[k]


def elementary_eval(values: Sequence, k: int) -> Fraction:
    """``e_k`` evaluated at a vector."""
    if k < 0:
        return Fraction(0)
    e = [Fraction(1)] + [Fraction(0)] * k
    for a in values:
        a = to_rational(a)
        for i in range(k, 0, -1):
            e[i] += a * e[i - 1]
    return e[k]


def apply_permutation(f: MPoly, sigma) -> MPoly:
    """Right action ``f . sigma``: substitute ``t_j -> t_{sigma(j)}``."""
    images = getattr(sigma, "images", sigma)
    return f.permute(tuple(images))


def shift_scale(f: MPoly, b, c) -> MPoly:
    """Substitute ``t_k -> b*t_k + c`` in every variable."""
    b, c = to_rational(b), to_rational(c)
    if b == 0:
        raise ValueError("scale factor b must be nonzero")
    d = f.nvars
    subs = [MPoly.variable(d, k) * b + c for k in range(1, d + 1)]
    return f.substitute(subs)
