"""Dense exact matrices over Q, sized for representation matrices of small modules."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


class Matrix:
    """Immutable matrix with Fraction entries."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable]):
        self.rows = tuple(tuple(x if isinstance(x, Fraction) else Fraction(x) for x in r) for r in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> "Matrix":
        return cls([[0] * (n if m is None else m) for _ in range(n)])

    @classmethod
    def diag(cls, entries: Sequence) -> "Matrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return "Matrix([" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows) + "])"

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.rows]

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.rows]

    def column(self, j: int) -> list[Fraction]:
        return [r[j] for r in self.rows]

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in r] for r in self.rows])

    def scale(self, c) -> "Matrix":
        c = Fraction(c)
        return Matrix([[c * a for a in r] for r in self.rows])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        other_rows = [[(j, x) for j, x in enumerate(r) if x] for r in other.rows]
        out = []
        for r in self.rows:
            acc = [Fraction(0)] * other.ncols
            for k, a in enumerate(r):
                if a:
                    for j, b in other_rows[k]:
                        acc[j] += a * b
            out.append(acc)
        return Matrix(out)

    def apply(self, v: Sequence) -> list[Fraction]:
        return [sum((a * x for a, x in zip(r, v) if a), Fraction(0)) for r in self.rows]

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self.rows)) if self.rows else Matrix([])

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def trace(self) -> Fraction:
        return sum((self.rows[i][i] for i in range(min(self.shape))), Fraction(0))

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def substitute(self, fn) -> "Matrix":
        return Matrix([[fn(x) for x in r] for r in self.rows])

    def rank(self) -> int:
        return len(rref(self.tolist())[1])

    def det(self) -> Fraction:
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        a = self.tolist()
        n = self.nrows
        det = Fraction(1)
        for c in range(n):
            piv = next((r for r in range(c, n) if a[r][c]), None)
            if piv is None:
                return Fraction(0)
            if piv != c:
                a[c], a[piv] = a[piv], a[c]
                det = -det
            det *= a[c][c]
            for r in range(c + 1, n):
                if a[r][c]:
                    f = a[r][c] / a[c][c]
                    a[r] = [x - f * y for x, y in zip(a[r], a[c])]
        return det

    def inverse(self) -> "Matrix":
        n = self.nrows
        if n != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(self.rows)]
        red, pivots = rref(aug)
        if pivots[:n] != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return Matrix([r[n:] for r in red[:n]])

    def nullspace(self) -> list[list[Fraction]]:
        return nullspace(self.tolist(), self.ncols)


def rref(a: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    a = [list(r) for r in a]
    if not a:
        return a, []
    nr, nc = len(a), len(a[0])
    pivots = []
    row = 0
    for c in range(nc):
        piv = next((r for r in range(row, nr) if a[r][c]), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = 1 / a[row][c]
        a[row] = [x * inv for x in a[row]]
        for r in range(nr):
            if r != row and a[r][c]:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[row])]
        pivots.append(c)
        row += 1
        if row == nr:
            break
    return a, pivots


def nullspace(a: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of ``{x : a x = 0}``."""
    if not a:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(a)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][f]
        basis.append(v)
    return basis


def span_basis(vectors: Iterable[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Row-reduced basis of the span of the given vectors."""
    vecs = [list(v) for v in vectors]
    if not vecs:
        return []
    red, pivots = rref(vecs)
    return red[: len(pivots)]
