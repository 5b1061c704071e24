"""Exact rational scalars, matrices and the dense-tensor kernel.

Scalars are ``gmpy2.mpq``: arbitrary precision, always in lowest terms with a
positive denominator, so ``==`` is structural.  Dense multilinear maps are
numpy object arrays of ``mpq``; by convention the *last* axis of a cochain
tensor is its output index and the leading axes are its inputs.

Linear maps act on row vectors: ``M[i, j]`` is the coefficient of ``e_j`` in
the image of ``e_i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import gmpy2
import numpy as np

Q = gmpy2.mpq
ZERO = Q(0)
ONE = Q(1)


def parse_rational(value) -> gmpy2.mpq:
    """Parse an int or a ``"p/q"`` / ``"p"`` string into an exact rational.

    Floats and bools are rejected: they have no exact place in this package.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError(f"not an exact rational: {value!r}")
    if isinstance(value, int):
        return Q(value)
    if type(value) is type(ZERO):
        return value
    if isinstance(value, str):
        text = value.strip()
        num, sep, den = text.partition("/")
        try:
            p = int(num)
            q = int(den) if sep else 1
        except ValueError:
            raise ValueError(f"malformed rational {value!r}") from None
        if q == 0:
            raise ValueError(f"zero denominator in {value!r}")
        return Q(p, q)
    raise ValueError(f"not an exact rational: {value!r}")


def format_rational(x) -> str:
    x = Q(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# dense tensors


def zeros(shape: Sequence[int]) -> np.ndarray:
    out = np.empty(tuple(shape), dtype=object)
    out.fill(ZERO)
    return out


def as_tensor(data) -> np.ndarray:
    """Object array of mpq from nested lists / arrays of exact values."""
    arr = np.array(data, dtype=object)
    flat = [parse_rational(x) for x in arr.flat]
    out = np.empty(arr.shape, dtype=object)
    out.flat[:] = flat if flat else []
    return out


def identity(d: int) -> np.ndarray:
    out = zeros((d, d))
    for i in range(d):
        out[i, i] = ONE
    return out


def canon(t: np.ndarray) -> np.ndarray:
    """Coerce stray python ints (from numpy reductions) back to mpq."""
    out = np.empty(t.shape, dtype=object)
    out.flat[:] = [Q(x) for x in t.flat]
    return out


def tensors_equal(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


def is_zero(t: np.ndarray) -> bool:
    return not any(t.flat)


def first_difference(a: np.ndarray, b: np.ndarray):
    """Multi-index of the first entry where ``a`` and ``b`` differ, or None."""
    for idx in np.ndindex(a.shape):
        if a[idx] != b[idx]:
            return idx
    return None


def mat_power(m: np.ndarray, k: int) -> np.ndarray:
    out = identity(m.shape[0])
    for _ in range(k):
        out = out.dot(m)
    return out


def act_on_inputs(t: np.ndarray, m: np.ndarray, slots: Iterable[int] | None = None) -> np.ndarray:
    """Precompose the listed input slots of ``t`` with the linear map ``m``."""
    n_in = t.ndim - 1
    if slots is None:
        slots = range(n_in)
    for k in slots:
        t = np.moveaxis(np.tensordot(m, t, axes=([1], [k])), 0, k)
    return t


def act_on_output(t: np.ndarray, m: np.ndarray) -> np.ndarray:
    return np.tensordot(t, m, axes=([t.ndim - 1], [0]))


def insert(f: np.ndarray, g: np.ndarray, i: int) -> np.ndarray:
    """Plug the output of ``g`` into input ``i`` (1-based) of ``f``.

    No twisting is applied; callers handle powers of the structure map.
    """
    m = f.ndim - 1
    n = g.ndim - 1
    if not 1 <= i <= m:
        raise IndexError(f"insertion position {i} outside 1..{m}")
    t = np.tensordot(f, g, axes=([i - 1], [n]))
    perm = list(range(i - 1)) + list(range(m, m + n)) + list(range(i - 1, m - 1)) + [m - 1]
    return t.transpose(perm)


def bilinear(prod: np.ndarray, left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """``prod(left(x...), right(z...))`` as a tensor over the inputs of both."""
    p = left.ndim - 1
    q = right.ndim - 1
    t = np.tensordot(left, prod, axes=([p], [0]))       # x..., z_out, out
    t = np.tensordot(t, right, axes=([p], [q]))         # x..., out, z...
    perm = list(range(p)) + list(range(p + 1, p + 1 + q)) + [p]
    return t.transpose(perm)


# ---------------------------------------------------------------------------
# matrices


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entries length does not match shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> Matrix:
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, tuple(parse_rational(x) for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int | None = None) -> Matrix:
        columns = [list(c) for c in columns]
        if nrows is None:
            nrows = len(columns[0]) if columns else 0
        entries = tuple(Q(columns[j][i]) for i in range(nrows) for j in range(len(columns)))
        return cls(nrows, len(columns), entries)

    @classmethod
    def zero(cls, rows: int, cols: int) -> Matrix:
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def column(self, j: int) -> list:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def to_rows(self) -> list[list]:
        return [self.row(i) for i in range(self.rows)]

    def to_array(self) -> np.ndarray:
        out = np.empty((self.rows, self.cols), dtype=object)
        out.flat[:] = list(self.entries)
        return out

    def apply(self, v: Sequence) -> list:
        return [sum((self.entries[i * self.cols + j] * v[j] for j in range(self.cols) if v[j]), ZERO)
                for i in range(self.rows)]

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        a_rows = _sparse_rows(self)
        b_rows = _sparse_rows(other)
        out = [ZERO] * (self.rows * other.cols)
        for i, arow in enumerate(a_rows):
            base = i * other.cols
            for k, a in arow.items():
                for j, b in b_rows[k].items():
                    out[base + j] += a * b
        return Matrix(self.rows, other.cols, tuple(out))

    def is_zero(self) -> bool:
        return not any(self.entries)


def _sparse_rows(m: Matrix) -> list[dict]:
    out = []
    for i in range(m.rows):
        base = i * m.cols
        out.append({j: m.entries[base + j] for j in range(m.cols) if m.entries[base + j]})
    return out


# ---------------------------------------------------------------------------
# elimination


def rref(m: Matrix) -> tuple[list[dict], list[int]]:
    """Reduced row echelon form as sparse rows plus the pivot column list."""
    rows = [r for r in _sparse_rows(m) if r]
    pivots: list[int] = []
    reduced: list[dict] = []
    for col in range(m.cols):
        pick = None
        for idx, r in enumerate(rows):
            if col in r:
                pick = idx
                break
        if pick is None:
            continue
        prow = rows.pop(pick)
        inv = 1 / prow[col]
        prow = {j: v * inv for j, v in prow.items()}
        for other in (rows, reduced):
            for idx, r in enumerate(other):
                c = r.get(col)
                if c:
                    _axpy(r, -c, prow)
        rows = [r for r in rows if r]
        reduced.append(prow)
        pivots.append(col)
        if not rows:
            break
    return reduced, pivots


def _axpy(target: dict, scale, source: dict) -> None:
    for j, v in source.items():
        w = target.get(j, ZERO) + scale * v
        if w:
            target[j] = w
        else:
            target.pop(j, None)


def rank(m: Matrix) -> int:
    ech = Echelon(m.rows)
    for j in range(m.cols):
        ech.add(m.column(j))
    return ech.rank


def kernel_basis(m: Matrix) -> list[list]:
    """Basis of ``{v : m v = 0}``; one vector per free column, unit there."""
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [ZERO] * m.cols
        v[free] = ONE
        for prow, p in zip(reduced, pivots):
            c = prow.get(free)
            if c:
                v[p] = -c
        basis.append(v)
    return basis


def free_columns(m: Matrix) -> list[int]:
    _, pivots = rref(m)
    pivot_set = set(pivots)
    return [j for j in range(m.cols) if j not in pivot_set]


def in_span(v: Sequence, basis: Sequence[Sequence]) -> bool:
    ech = Echelon(len(v))
    for b in basis:
        if len(b) != len(v):
            raise ValueError("vectors of different lengths")
        ech.add(b)
    return ech.contains(v)


class Echelon:
    """Incrementally built echelon basis of a subspace of Q^n.

    Every stored row has its pivot at its smallest nonzero index, which makes
    reduction in ascending pivot order exact and final.
    """

    def __init__(self, length: int):
        self.length = length
        self._rows: dict[int, dict] = {}
        self._order: list[int] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _reduce(self, v: Sequence) -> dict:
        if len(v) != self.length:
            raise ValueError(f"vector length {len(v)} != {self.length}")
        r = {j: Q(x) for j, x in enumerate(v) if x}
        if not r:
            return r
        for p in self._order:
            c = r.get(p)
            if c:
                _axpy(r, -c, self._rows[p])
                if not r:
                    break
        return r

    def add(self, v: Sequence) -> bool:
        """Add ``v``; return True iff it enlarged the span."""
        r = self._reduce(v)
        if not r:
            return False
        p = min(r)
        inv = 1 / r[p]
        self._rows[p] = {j: x * inv for j, x in r.items()}
        self._order.append(p)
        self._order.sort()
        return True

    def contains(self, v: Sequence) -> bool:
        return not self._reduce(v)


def solve(m: Matrix, b: Sequence) -> list | None:
    """One solution of ``m x = b`` or None when inconsistent."""
    aug = Matrix.from_columns([m.column(j) for j in range(m.cols)] + [list(b)], nrows=m.rows)
    reduced, pivots = rref(aug)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [ZERO] * m.cols
    for prow, p in zip(reduced, pivots):
        x[p] = prow.get(m.cols, ZERO)
    return x
