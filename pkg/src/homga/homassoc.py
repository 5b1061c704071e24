"""Hom-associative algebras and the alpha-twisted endomorphism operad.

A cochain of degree ``n`` is a multilinear map ``A^n -> A`` stored as a
tensor ``c[i_1, ..., i_n, j]`` (coefficient of ``e_j`` in
``f(e_{i_1}, ..., e_{i_n})``).  Compositions twist the spectator inputs by
powers of ``alpha`` so that alpha-compatible cochains form a non-symmetric
operad; braces, the bracket, the dot product and the differential are all
derived from those compositions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .exactlin import (
    Q,
    act_on_inputs,
    act_on_output,
    as_tensor,
    bilinear,
    first_difference,
    identity,
    insert,
    is_zero,
    mat_power,
    tensors_equal,
    zeros,
)


class ArityError(ValueError):
    pass


@dataclass(frozen=True)
class Violation:
    """An identity that fails on a specific tuple of basis vectors (0-based)."""

    identity: str
    basis: tuple
    lhs: tuple
    rhs: tuple

    def __str__(self):
        args = ", ".join(f"e{i + 1}" for i in self.basis)
        return f"{self.identity} fails at ({args}): lhs={_vec(self.lhs)} rhs={_vec(self.rhs)}"


def _vec(v) -> str:
    from .exactlin import format_rational
    return "(" + ", ".join(format_rational(x) for x in v) + ")"


def tensor_violations(name: str, lhs: np.ndarray, rhs: np.ndarray) -> list[Violation]:
    """Compare two cochain tensors fiber by fiber over input basis tuples."""
    out = []
    for idx in np.ndindex(lhs.shape[:-1]):
        a, b = lhs[idx], rhs[idx]
        if any(x != y for x, y in zip(a, b)):
            out.append(Violation(name, idx, tuple(a), tuple(b)))
    return out


@dataclass(frozen=True, eq=False)
class HomAssociativeAlgebra:
    """``(A, mu, alpha)`` over the rationals.

    ``mu[i, j, k]`` is the ``e_k`` coefficient of ``mu(e_i, e_j)``;
    ``alpha[i, j]`` is the ``e_j`` coefficient of ``alpha(e_i)``.
    """

    mu: np.ndarray
    alpha: np.ndarray
    name: str = ""

    def __post_init__(self):
        mu = as_tensor(self.mu)
        alpha = as_tensor(self.alpha)
        d = alpha.shape[0] if alpha.ndim == 2 else -1
        if alpha.ndim != 2 or alpha.shape != (d, d):
            raise ValueError(f"alpha must be square, got shape {alpha.shape}")
        if mu.shape != (d, d, d):
            raise ValueError(f"mu must have shape {(d, d, d)}, got {mu.shape}")
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "alpha", alpha)

    @property
    def dim(self) -> int:
        return self.alpha.shape[0]

    def key(self) -> tuple:
        return (self.dim, tuple(self.mu.flat), tuple(self.alpha.flat))

    def __eq__(self, other):
        if not isinstance(other, HomAssociativeAlgebra):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def alpha_power(self, k: int) -> np.ndarray:
        cache = self.__dict__.setdefault("_power_cache", {})
        if k not in cache:
            cache[k] = mat_power(self.alpha, k)
        return cache[k]

    @cached_property
    def mu_cochain(self) -> Cochain:
        return Cochain(self, self.mu)

    @cached_property
    def identity_cochain(self) -> Cochain:
        return Cochain(self, identity(self.dim))


@dataclass(frozen=True, eq=False)
class Cochain:
    """An element of the degree-``n`` cochain space of ``algebra``."""

    algebra: HomAssociativeAlgebra
    coeffs: np.ndarray

    def __post_init__(self):
        d = self.algebra.dim
        if self.coeffs.ndim < 2 or any(s != d for s in self.coeffs.shape):
            raise ValueError(f"cochain tensor shape {self.coeffs.shape} incompatible with dim {d}")

    @classmethod
    def checked(cls, algebra: HomAssociativeAlgebra, data) -> Cochain:
        """Build a cochain, rejecting tensors that do not commute with alpha."""
        c = cls(algebra, as_tensor(data))
        if not is_alpha_compatible(c):
            raise ValueError("tensor is not alpha-compatible")
        return c

    @classmethod
    def projected(cls, algebra: HomAssociativeAlgebra, data) -> Cochain:
        """Orthogonal projection (standard rational inner product) onto the
        alpha-compatible subspace."""
        from .cohomology import project_onto_alpha_subspace
        return project_onto_alpha_subspace(algebra, as_tensor(data))

    @classmethod
    def zero(cls, algebra: HomAssociativeAlgebra, degree: int) -> Cochain:
        return cls(algebra, zeros((algebra.dim,) * (degree + 1)))

    @property
    def degree(self) -> int:
        return self.coeffs.ndim - 1

    @property
    def reduced_degree(self) -> int:
        return self.degree - 1

    def vector(self) -> list:
        return list(self.coeffs.flat)

    def __call__(self, *indices: int) -> tuple:
        """Coordinates of ``f(e_{i_1}, ..., e_{i_n})`` (0-based indices)."""
        return tuple(self.coeffs[tuple(indices)])

    def _same(self, other: Cochain) -> None:
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise ValueError("cochains over different algebras")

    def __add__(self, other: Cochain) -> Cochain:
        self._same(other)
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        return Cochain(self.algebra, self.coeffs + other.coeffs)

    def __sub__(self, other: Cochain) -> Cochain:
        self._same(other)
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        return Cochain(self.algebra, self.coeffs - other.coeffs)

    def __neg__(self) -> Cochain:
        return Cochain(self.algebra, -self.coeffs)

    def __rmul__(self, scalar) -> Cochain:
        return Cochain(self.algebra, self.coeffs * Q(scalar))

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        return self.algebra == other.algebra and tensors_equal(self.coeffs, other.coeffs)

    __hash__ = None

    def is_zero(self) -> bool:
        return is_zero(self.coeffs)


def _check_shape(A: HomAssociativeAlgebra) -> None:
    d = A.dim
    if A.mu.shape != (d, d, d) or A.alpha.shape != (d, d):
        raise ValueError("inconsistent structure tensor shapes")


def hom_associator(A: HomAssociativeAlgebra) -> tuple[np.ndarray, np.ndarray]:
    """Tensors of ``mu(alpha a, mu(b, c))`` and ``mu(mu(a, b), alpha c)``."""
    left = insert(act_on_inputs(A.mu, A.alpha, [0]), A.mu, 2)
    right = insert(act_on_inputs(A.mu, A.alpha, [1]), A.mu, 1)
    return left, right


def validate_hom_algebra(A: HomAssociativeAlgebra) -> list[Violation]:
    """All violations of multiplicativity and hom-associativity."""
    _check_shape(A)
    report = tensor_violations(
        "multiplicativity", act_on_output(A.mu, A.alpha), act_on_inputs(A.mu, A.alpha))
    left, right = hom_associator(A)
    report += tensor_violations("hom-associativity", left, right)
    return report


def is_alpha_compatible(f: Cochain) -> bool:
    a = f.algebra.alpha
    return tensors_equal(act_on_output(f.coeffs, a), act_on_inputs(f.coeffs, a))


# ---------------------------------------------------------------------------
# operad structure


def partial_composition(f: Cochain, g: Cochain, i: int) -> Cochain:
    m, n = f.degree, g.degree
    if not 1 <= i <= m:
        raise ArityError(f"position {i} outside 1..{m}")
    f._same(g)
    A = f.algebra
    twisted = act_on_inputs(f.coeffs, A.alpha_power(n - 1), [k for k in range(m) if k != i - 1])
    return Cochain(A, insert(twisted, g.coeffs, i))


def gamma_alpha(f: Cochain, gs: Sequence[Cochain]) -> Cochain:
    """Full composition; ``g_p`` has its output twisted by
    ``alpha^(sum of reduced degrees of the other arguments)``."""
    k = f.degree
    if len(gs) != k:
        raise ArityError(f"composition needs {k} arguments, got {len(gs)}")
    A = f.algebra
    total = sum(g.reduced_degree for g in gs)
    t = f.coeffs
    for p in range(k, 0, -1):
        g = gs[p - 1]
        f._same(g)
        t = insert(t, act_on_output(g.coeffs, A.alpha_power(total - g.reduced_degree)), p)
    return Cochain(A, t)


def gamma_iterated(f: Cochain, gs: Sequence[Cochain]) -> Cochain:
    """``(...((f o_k g_k) o_{k-1} g_{k-1}) ...) o_1 g_1``."""
    if len(gs) != f.degree:
        raise ArityError(f"composition needs {f.degree} arguments, got {len(gs)}")
    out = f
    for p in range(len(gs), 0, -1):
        out = partial_composition(out, gs[p - 1], p)
    return out


def brace_terms(m: int, degrees: Sequence[int]):
    """Yield ``(positions, sign)`` for each order-preserving insertion.

    The sign exponent sums ``|g_p| * i_p`` where ``i_p`` counts the composite
    inputs in front of ``g_p``: one per identity slot, ``deg g_q`` per
    earlier argument.
    """
    for positions in itertools.combinations(range(m), len(degrees)):
        eps = 0
        before = 0
        for pos, deg in zip(positions, degrees):
            eps += (deg - 1) * (pos + before)
            before += deg - 1
        yield positions, (-1) ** (eps % 2)


def brace(f: Cochain, gs: Sequence[Cochain]) -> Cochain:
    if not gs:
        return f
    m = f.degree
    if len(gs) > m:
        raise ArityError(f"cannot insert {len(gs)} arguments into degree {m}")
    A = f.algebra
    ident = A.identity_cochain
    out_degree = m + sum(g.reduced_degree for g in gs)
    acc = zeros((A.dim,) * (out_degree + 1))
    for positions, sign in brace_terms(m, [g.degree for g in gs]):
        args = [ident] * m
        for pos, g in zip(positions, gs):
            args[pos] = g
        term = gamma_alpha(f, args).coeffs
        acc = acc + term if sign > 0 else acc - term
    return Cochain(A, acc)


def circle_product(f: Cochain, g: Cochain) -> Cochain:
    return brace(f, [g])


def gerstenhaber_bracket(f: Cochain, g: Cochain) -> Cochain:
    sign = (-1) ** ((f.reduced_degree * g.reduced_degree) % 2)
    fg = circle_product(f, g)
    gf = circle_product(g, f)
    return fg - gf if sign > 0 else fg + gf


def dot_product(f: Cochain, g: Cochain) -> Cochain:
    """``(-1)^(|f|+1) {mu}{f, g}``."""
    b = brace(f.algebra.mu_cochain, [f, g])
    return b if f.reduced_degree % 2 == 1 else -b


def cup_product(f: Cochain, g: Cochain) -> Cochain:
    f._same(g)
    A = f.algebra
    m, n = f.degree, g.degree
    left = act_on_inputs(f.coeffs, A.alpha_power(n - 1))
    right = act_on_inputs(g.coeffs, A.alpha_power(m - 1))
    return Cochain(A, bilinear(A.mu, left, right))


def differential_d(f: Cochain) -> Cochain:
    mu = f.algebra.mu_cochain
    a = circle_product(mu, f)
    b = circle_product(f, mu)
    return a - b if f.reduced_degree % 2 == 0 else a + b


def hochschild_delta(f: Cochain) -> Cochain:
    A = f.algebra
    n = f.degree
    mu, alpha = A.mu, A.alpha
    lead = A.alpha_power(n - 1)
    # mu(alpha^{n-1} a_1, f(a_2, ..., a_{n+1}))
    acc = bilinear(mu, lead, f.coeffs)
    for i in range(1, n + 1):
        spectators = act_on_inputs(f.coeffs, alpha, [k for k in range(n) if k != i - 1])
        term = insert(spectators, mu, i)
        acc = acc - term if i % 2 else acc + term
    last = bilinear(mu, f.coeffs, lead)
    acc = acc + last if (n + 1) % 2 == 0 else acc - last
    return Cochain(A, acc)


def compare(lhs: Cochain, rhs: Cochain):
    """First differing multi-index (inputs..., output) or None when equal."""
    return first_difference(lhs.coeffs, rhs.coeffs)
