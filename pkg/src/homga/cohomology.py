"""Cochain complexes as exact matrices, cohomology and its Gerstenhaber
structure.

Both complexes (hom-associative and tree-indexed) are wrapped in a small
common interface so dimensions, representatives and class arithmetic are
written once.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .exactlin import Echelon, Matrix, ONE, Q, ZERO, free_columns, identity, kernel_basis, solve
from . import homassoc as ha
from . import homdialg as hd
from .trees import enumerate_trees


class InvalidAlgebra(ValueError):
    pass


# ---------------------------------------------------------------------------
# alpha-constraint subspaces


def _kron_power(m: np.ndarray, n: int) -> np.ndarray:
    out = np.array([[ONE]], dtype=object)
    for _ in range(n):
        out = np.kron(out, m)
    return out


def _alpha_key(alpha: np.ndarray) -> tuple:
    return (alpha.shape[0], tuple(alpha.flat))


@lru_cache(maxsize=None)
def _constraint(alpha_key: tuple, n: int) -> tuple[Matrix, tuple[int, ...]]:
    d, flat = alpha_key
    alpha = np.empty((d, d), dtype=object)
    alpha.flat[:] = list(flat)
    # vec(alpha o f - f o alpha^n) with the output index varying fastest
    lhs = np.kron(identity(d ** n), alpha.T)
    rhs = np.kron(_kron_power(alpha, n), identity(d))
    m = lhs - rhs
    mat = Matrix(m.shape[0], m.shape[1], tuple(Q(x) for x in m.flat))
    return mat, tuple(free_columns(mat))


def constraint_matrix(alpha: np.ndarray, n: int) -> Matrix:
    """Matrix of ``f -> alpha o f - f o alpha^(x n)`` on flattened tensors."""
    return _constraint(_alpha_key(alpha), n)[0]


@lru_cache(maxsize=None)
def _subspace(alpha_key: tuple, n: int) -> tuple[tuple[tuple, ...], tuple[int, ...]]:
    mat, free = _constraint(alpha_key, n)
    return tuple(tuple(v) for v in kernel_basis(mat)), free


def _to_tensor(v: Sequence, d: int, n: int) -> np.ndarray:
    t = np.empty((d,) * (n + 1), dtype=object)
    t.flat[:] = list(v)
    return t


def alpha_subspace_basis(A: ha.HomAssociativeAlgebra, n: int) -> list[ha.Cochain]:
    if n < 1:
        raise ValueError("cochain degree starts at 1")
    vecs, _ = _subspace(_alpha_key(A.alpha), n)
    return [ha.Cochain(A, _to_tensor(v, A.dim, n)) for v in vecs]


def project_onto_alpha_subspace(A: ha.HomAssociativeAlgebra, t: np.ndarray) -> ha.Cochain:
    n = t.ndim - 1
    vecs, _ = _subspace(_alpha_key(A.alpha), n)
    if not vecs:
        return ha.Cochain.zero(A, n)
    v = list(t.flat)
    gram = Matrix.from_rows([[sum((x * y for x, y in zip(a, b) if x and y), ZERO) for b in vecs] for a in vecs])
    rhs = [sum((x * y for x, y in zip(a, v) if x and y), ZERO) for a in vecs]
    coeffs = solve(gram, rhs)
    out = [ZERO] * len(v)
    for c, b in zip(coeffs, vecs):
        if c:
            out = [o + c * x for o, x in zip(out, b)]
    return ha.Cochain(A, _to_tensor(out, A.dim, n))


# ---------------------------------------------------------------------------
# complexes


class CochainComplex:
    """Degreewise bases of the alpha-compatible cochains plus the coboundary.

    Subclasses supply ``_basis_vectors``, ``from_vector``, ``delta`` and the
    operad-level operations.
    """

    label = "H"

    def __init__(self):
        self._delta_cache: dict[int, Matrix] = {}
        self._image_cache: dict[int, Echelon] = {}

    # subclass hooks -------------------------------------------------------
    def _basis_vectors(self, n: int) -> tuple[list[tuple], list[int]]:
        raise NotImplementedError

    def from_vector(self, n: int, v: Sequence):
        raise NotImplementedError

    def delta(self, f):
        raise NotImplementedError

    def d(self, f):
        raise NotImplementedError

    def dot(self, f, g):
        raise NotImplementedError

    def bracket(self, f, g):
        raise NotImplementedError

    # shared machinery -----------------------------------------------------
    def dimension(self, n: int) -> int:
        return len(self._basis_vectors(n)[0])

    def basis(self, n: int) -> list:
        vecs, _ = self._basis_vectors(n)
        return [self.from_vector(n, v) for v in vecs]

    def coords(self, n: int, f) -> list:
        _, free = self._basis_vectors(n)
        v = f.vector()
        return [v[j] for j in free]

    def from_coords(self, n: int, c: Sequence):
        vecs, _ = self._basis_vectors(n)
        size = len(vecs[0]) if vecs else self.ambient_size(n)
        out = [ZERO] * size
        for a, b in zip(c, vecs):
            if a:
                out = [o + a * x for o, x in zip(out, b)]
        return self.from_vector(n, out)

    def ambient_size(self, n: int) -> int:
        raise NotImplementedError

    def contains(self, n: int, f) -> bool:
        return self.from_coords(n, self.coords(n, f)).vector() == f.vector()

    def delta_matrix(self, n: int) -> Matrix:
        if n not in self._delta_cache:
            cols = [self.coords(n + 1, self.delta(b)) for b in self.basis(n)]
            self._delta_cache[n] = Matrix.from_columns(cols, nrows=self.dimension(n + 1))
        return self._delta_cache[n]

    def slice(self, n: int) -> ComplexSlice:
        return ComplexSlice(n, self.basis(n), self.delta_matrix(n))

    def image_echelon(self, n: int) -> Echelon:
        """Echelon basis of ``delta(C^(n-1))`` in degree-``n`` coordinates."""
        if n not in self._image_cache:
            ech = Echelon(self.dimension(n))
            if n >= 2:
                m = self.delta_matrix(n - 1)
                for j in range(m.cols):
                    ech.add(m.column(j))
            self._image_cache[n] = ech
        return self._image_cache[n]

    def delta_rank(self, n: int) -> int:
        if n < 1:
            return 0
        return self.image_echelon(n + 1).rank

    def cocycle_dimension(self, n: int) -> int:
        return self.dimension(n) - self.delta_rank(n)

    def cohomology_dimension(self, n: int) -> int:
        if n < 2:
            raise ValueError("cohomology is defined from degree 2 on; use cocycle_dimension(1)")
        return self.cocycle_dimension(n) - self.delta_rank(n - 1)

    def is_coboundary(self, f) -> bool:
        n = f.degree
        if not self.contains(n, f):
            return False
        if n < 2:
            return f.is_zero()
        return self.image_echelon(n).contains(self.coords(n, f))

    def cohomology_basis(self, n: int) -> list[CohomologyClass]:
        if n < 2:
            raise ValueError("cohomology is defined from degree 2 on")
        ech = Echelon(self.dimension(n))
        if n >= 2:
            m = self.delta_matrix(n - 1)
            for j in range(m.cols):
                ech.add(m.column(j))
        classes = []
        for v in kernel_basis(self.delta_matrix(n)):
            if ech.add(v):
                classes.append(CohomologyClass(n, self.from_coords(n, v), self))
        return classes

    def sign_relation(self, n: int):
        """``s`` with ``d = s * delta`` on degree ``n``; 0 if both vanish
        identically, None if no such sign exists."""
        candidates = {1, -1}
        for b in self.basis(n):
            db, deltab = self.d(b), self.delta(b)
            if db.vector() == deltab.vector():
                candidates &= {1} if not deltab.is_zero() else {1, -1}
            elif db.vector() == (-deltab).vector():
                candidates &= {-1}
            else:
                return None
            if not candidates:
                return None
        return candidates.pop() if len(candidates) == 1 else 0


@dataclass(frozen=True)
class ComplexSlice:
    degree: int
    basis: list
    delta_matrix: Matrix


class HochschildComplex(CochainComplex):
    label = "H"

    def __init__(self, A: ha.HomAssociativeAlgebra):
        super().__init__()
        self.algebra = A

    def _basis_vectors(self, n):
        return _subspace(_alpha_key(self.algebra.alpha), n)

    def ambient_size(self, n):
        return self.algebra.dim ** (n + 1)

    def from_vector(self, n, v):
        return ha.Cochain(self.algebra, _to_tensor(v, self.algebra.dim, n))

    def delta(self, f):
        return ha.hochschild_delta(f)

    def d(self, f):
        return ha.differential_d(f)

    def dot(self, f, g):
        return ha.dot_product(f, g)

    def bracket(self, f, g):
        return ha.gerstenhaber_bracket(f, g)


class DialgebraComplex(CochainComplex):
    label = "HY"

    def __init__(self, D: hd.HomDialgebra, max_degree: int = 6):
        super().__init__()
        self.dialgebra = D
        self.max_degree = max_degree

    def _basis_vectors(self, n):
        return _tree_subspace(_alpha_key(self.dialgebra.alpha), n)

    def ambient_size(self, n):
        return len(enumerate_trees(n)) * self.dialgebra.dim ** (n + 1)

    def from_vector(self, n, v):
        if n > self.max_degree:
            raise ValueError(f"tree cochain degree {n} exceeds the cap {self.max_degree}")
        d = self.dialgebra.dim
        block = d ** (n + 1)
        comps = tuple(_to_tensor(v[k * block:(k + 1) * block], d, n) for k in range(len(enumerate_trees(n))))
        return hd.TreeCochain(self.dialgebra, comps)

    def delta(self, f):
        return hd.dialgebra_delta(f)

    def d(self, f):
        return hd.dialgebra_differential(f)

    def dot(self, f, g):
        return hd.dialgebra_dot(f, g)

    def bracket(self, f, g):
        return hd.dialgebra_bracket(f, g)


@lru_cache(maxsize=None)
def _tree_subspace(alpha_key: tuple, n: int):
    """Per-tree constraint kernels, concatenated block by block."""
    vecs, free = _subspace(alpha_key, n)
    trees = len(enumerate_trees(n))
    block = alpha_key[0] ** (n + 1)
    out_vecs, out_free = [], []
    for t in range(trees):
        for v, j in zip(vecs, free):
            full = [ZERO] * (block * trees)
            full[t * block:(t + 1) * block] = v
            out_vecs.append(tuple(full))
            out_free.append(t * block + j)
    return tuple(out_vecs), tuple(out_free)


class EmbeddedComplex(CochainComplex):
    """The constant-in-tree subcomplex of a diagonal dialgebra."""

    label = "HY(const)"

    def __init__(self, A: ha.HomAssociativeAlgebra):
        super().__init__()
        self.algebra = A
        self.dialgebra = hd.HomDialgebra(A.mu, A.mu, A.alpha, f"diag-{A.name}")
        self._inner = HochschildComplex(A)

    def _basis_vectors(self, n):
        vecs, free = self._inner._basis_vectors(n)
        trees = len(enumerate_trees(n))
        return tuple(tuple(v) * trees for v in vecs), free

    def ambient_size(self, n):
        return len(enumerate_trees(n)) * self.algebra.dim ** (n + 1)

    def from_vector(self, n, v):
        return DialgebraComplex.from_vector(self, n, v)

    max_degree = 8

    def delta(self, f):
        return hd.dialgebra_delta(f)

    def d(self, f):
        return hd.dialgebra_differential(f)

    def dot(self, f, g):
        return hd.dialgebra_dot(f, g)

    def bracket(self, f, g):
        return hd.dialgebra_bracket(f, g)


_COMPLEXES: dict = {}


def complex_for(algebra) -> CochainComplex:
    """Shared (cached) complex for an algebra or dialgebra; validates it."""
    key = (type(algebra).__name__, algebra.key())
    if key not in _COMPLEXES:
        if isinstance(algebra, ha.HomAssociativeAlgebra):
            report = ha.validate_hom_algebra(algebra)
            cx = HochschildComplex(algebra)
        elif isinstance(algebra, hd.HomDialgebra):
            report = hd.validate_hom_dialgebra(algebra)
            cx = DialgebraComplex(algebra)
        else:
            raise TypeError(f"no cochain complex for {type(algebra).__name__}")
        if report:
            raise InvalidAlgebra(f"{algebra.name or 'algebra'} is invalid: {report[0]}")
        _COMPLEXES[key] = cx
    return _COMPLEXES[key]


def _complex_of(f) -> CochainComplex:
    return complex_for(f.algebra if isinstance(f, ha.Cochain) else f.dialgebra)


# ---------------------------------------------------------------------------
# public operations


def cohomology_dimension(A, n: int) -> int:
    return complex_for(A).cohomology_dimension(n)


def cocycle_dimension(A, n: int) -> int:
    return complex_for(A).cocycle_dimension(n)


def cohomology_basis(A, n: int) -> list[CohomologyClass]:
    return complex_for(A).cohomology_basis(n)


def is_coboundary(f) -> bool:
    return _complex_of(f).is_coboundary(f)


@dataclass(frozen=True, eq=False)
class CohomologyClass:
    degree: int
    representative: object
    complex: CochainComplex

    def __post_init__(self):
        if not self.complex.delta(self.representative).is_zero():
            raise ValueError("representative is not a cocycle")

    def __eq__(self, other):
        if not isinstance(other, CohomologyClass):
            return NotImplemented
        if other.degree != self.degree:
            return False
        return self.complex.is_coboundary(self.representative - other.representative)

    __hash__ = None

    def is_zero(self) -> bool:
        return self.complex.is_coboundary(self.representative)

    def __add__(self, other):
        return CohomologyClass(self.degree, self.representative + other.representative, self.complex)

    def __sub__(self, other):
        return CohomologyClass(self.degree, self.representative - other.representative, self.complex)

    def __neg__(self):
        return CohomologyClass(self.degree, -self.representative, self.complex)

    def __rmul__(self, scalar):
        return CohomologyClass(self.degree, scalar * self.representative, self.complex)

    def perturbed(self, g) -> CohomologyClass:
        """Same class, representative shifted by ``delta(g)``."""
        return CohomologyClass(self.degree, self.representative + self.complex.delta(g), self.complex)


def zero_class(cx: CochainComplex, n: int) -> CohomologyClass:
    return CohomologyClass(n, cx.from_coords(n, [ZERO] * cx.dimension(n)), cx)


def induced_cup(x: CohomologyClass, y: CohomologyClass) -> CohomologyClass:
    """Class of the operadic dot product of the representatives."""
    rep = x.complex.dot(x.representative, y.representative)
    return CohomologyClass(x.degree + y.degree, rep, x.complex)


def induced_bracket(x: CohomologyClass, y: CohomologyClass) -> CohomologyClass:
    rep = x.complex.bracket(x.representative, y.representative)
    return CohomologyClass(x.degree + y.degree - 1, rep, x.complex)
