"""Exact linear algebra over the rationals or a prime field.

Matrices are tuples of row tuples. Systems are solved with a sparse
Gauss-Jordan eliminator whose rows are ``{column: value}`` dicts, which
suits the intertwiner systems: every equation touches a handful of unknowns.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Matrix = tuple[tuple, ...]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class ExactField:
    """Rationals when ``p`` is None, otherwise GF(p)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def name(self) -> str:
        return "rational" if self.p is None else f"gf{self.p}"

    def el(self, x):
        if self.p is None:
            return x if isinstance(x, (int, Fraction)) else Fraction(x)
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return x % self.p

    def reduce(self, x):
        return x if self.p is None else x % self.p

    def inv(self, x):
        if self.p is None:
            return Fraction(1) / x
        return pow(x, -1, self.p)

    @classmethod
    def parse(cls, text: str) -> "ExactField":
        t = text.strip().lower()
        if t in ("rational", "rationals", "q"):
            return RATIONALS
        if t.startswith("gf") and t[2:].isdigit():
            return cls(int(t[2:]))
        raise ValueError(f"unknown field {text!r}; expected rational, gf2 or gf<p>")


RATIONALS = ExactField()
GF2 = ExactField(2)


class Eliminator:
    """Incremental row reduction; keeps one normalized row per pivot."""

    def __init__(self, field: ExactField):
        self.field = field
        self.rows: dict[int, dict[int, object]] = {}

    def reduce(self, row: dict) -> dict:
        F = self.field
        r = {c: v for c, v in row.items() if v != 0}
        while True:
            hits = [c for c in r if c in self.rows]
            if not hits:
                return r
            c = min(hits)
            f = r[c]
            for k, v in self.rows[c].items():
                nv = F.reduce(r.get(k, 0) - f * v)
                if nv == 0:
                    r.pop(k, None)
                else:
                    r[k] = nv
            r.pop(c, None)

    def add(self, row: dict) -> bool:
        """Insert a row; True when it was independent of the earlier ones."""
        r = self.reduce(row)
        if not r:
            return False
        F = self.field
        piv = min(r)
        inv = F.inv(r[piv])
        self.rows[piv] = {c: F.reduce(v * inv) for c, v in r.items()}
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)

    def rref(self) -> dict[int, dict]:
        F = self.field
        for piv in sorted(self.rows, reverse=True):
            prow = self.rows[piv]
            for other, orow in self.rows.items():
                if other == piv or piv not in orow:
                    continue
                f = orow[piv]
                for k, v in prow.items():
                    nv = F.reduce(orow.get(k, 0) - f * v)
                    if nv == 0:
                        orow.pop(k, None)
                    else:
                        orow[k] = nv
        return self.rows


def _sparse_rows(m: Sequence[Sequence]) -> list[dict]:
    return [{c: v for c, v in enumerate(row) if v != 0} for row in m]


def sparse_rank(rows: Iterable[dict], field: ExactField) -> int:
    e = Eliminator(field)
    for r in rows:
        e.add(r)
    return e.rank


def sparse_nullspace(rows: Iterable[dict], ncols: int, field: ExactField) -> list[dict]:
    """Basis of {x : row . x = 0 for every row}, as sparse vectors."""
    e = Eliminator(field)
    for r in rows:
        e.add(r)
    red = e.rref()
    basis = []
    for free in range(ncols):
        if free in red:
            continue
        vec = {free: 1}
        for piv, prow in red.items():
            if free in prow:
                vec[piv] = field.reduce(-prow[free])
        basis.append(vec)
    return basis


def zeros(r: int, c: int) -> Matrix:
    return tuple((0,) * c for _ in range(r))


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def ncols(m: Matrix, default: int = 0) -> int:
    return len(m[0]) if m else default


def transpose(m: Matrix, nc: int | None = None) -> Matrix:
    if not m:
        return tuple(() for _ in range(nc or 0))
    return tuple(zip(*m))


def matmul(a: Matrix, b: Matrix, field: ExactField, cols: int = 0) -> Matrix:
    """a (r x k) times b (k x c); ``cols`` gives c when k is zero."""
    if not b:
        return zeros(len(a), cols)
    bt = tuple(zip(*b))
    red = field.reduce
    return tuple(tuple(red(sum(x * y for x, y in zip(row, col))) for col in bt) for row in a)


def mat_sub(a: Matrix, b: Matrix, field: ExactField) -> Matrix:
    return tuple(tuple(field.reduce(x - y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def is_zero(m: Matrix) -> bool:
    return all(v == 0 for row in m for v in row)


def rank(m: Matrix, field: ExactField) -> int:
    return sparse_rank(_sparse_rows(m), field)


def nullspace(m: Matrix, n: int, field: ExactField) -> list[tuple]:
    """Column-vector basis of the kernel of an (r x n) matrix."""
    out = []
    for vec in sparse_nullspace(_sparse_rows(m), n, field):
        out.append(tuple(vec.get(i, 0) for i in range(n)))
    return out


def columns_to_matrix(cols: Sequence[Sequence], nrows: int) -> Matrix:
    if not cols:
        return tuple(() for _ in range(nrows))
    return tuple(tuple(col[i] for col in cols) for i in range(nrows))


def independent_columns(cols: Sequence[Sequence], field: ExactField) -> list[int]:
    """Indices of a maximal independent subfamily, greedily from the left."""
    e = Eliminator(field)
    keep = []
    for idx, col in enumerate(cols):
        if e.add({i: v for i, v in enumerate(col) if v != 0}):
            keep.append(idx)
    return keep


def complement_units(span: Sequence[Sequence], n: int, field: ExactField) -> list[int]:
    """Standard basis indices completing ``span`` to a basis of k^n."""
    e = Eliminator(field)
    for v in span:
        e.add({i: x for i, x in enumerate(v) if x != 0})
    extra = []
    for i in range(n):
        if e.add({i: 1}):
            extra.append(i)
    return extra


def left_inverse(b: Matrix, k: int, field: ExactField) -> Matrix:
    """For b (n x k) of full column rank, some L (k x n) with L b = I."""
    n = len(b)
    if k == 0:
        return ()
    e = Eliminator(field)
    chosen = []
    for i in range(n):
        if e.add({j: v for j, v in enumerate(b[i]) if v != 0}):
            chosen.append(i)
        if len(chosen) == k:
            break
    if len(chosen) < k:
        raise ValueError("matrix does not have full column rank")
    block = [list(b[i]) for i in chosen]
    inv = invert([tuple(r) for r in block], field)
    out = [[0] * n for _ in range(k)]
    for r in range(k):
        for c, i in enumerate(chosen):
            out[r][i] = inv[r][c]
    return tuple(tuple(r) for r in out)


def invert(m: Matrix, field: ExactField) -> Matrix:
    n = len(m)
    aug = [[field.el(x) for x in row] + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        piv = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = field.inv(aug[c][c])
        aug[c] = [field.reduce(x * inv) for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [field.reduce(x - f * y) for x, y in zip(aug[r], aug[c])]
    return tuple(tuple(row[n:]) for row in aug)


def right_inverse(q: Matrix, n: int, field: ExactField) -> Matrix:
    """For q (k x n) of full row rank, some S (n x k) with q S = I."""
    k = len(q)
    lt = left_inverse(transpose(q) if k else tuple(() for _ in range(n)), k, field)
    return transpose(lt, n) if k else tuple(() for _ in range(n))
