"""Hom-dialgebras and tree-indexed cochains.

A degree-``n`` tree cochain holds one ``(d,)*(n+1)`` tensor per ``n``-tree,
in the order of :func:`trees.enumerate_trees`.  Compositions reroute the tree
argument through the R maps and otherwise reuse the tensor kernel of the
hom-associative case.
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
    mat_power,
    tensors_equal,
    zeros,
)
from .homassoc import ArityError, Cochain, Violation, brace_terms, tensor_violations
from .trees import (
    DASHV,
    PlanarBinaryTree,
    bullet,
    enumerate_trees,
    face,
    parse_word,
    r0,
    ri,
    tree_index,
)


@dataclass(frozen=True, eq=False)
class HomDialgebra:
    """``(D, -|, |-, alpha)``; tensors use the hom-associative conventions."""

    dashv: np.ndarray
    vdash: np.ndarray
    alpha: np.ndarray
    name: str = ""

    def __post_init__(self):
        alpha = as_tensor(self.alpha)
        if alpha.ndim != 2 or alpha.shape[0] != alpha.shape[1]:
            raise ValueError(f"alpha must be square, got shape {alpha.shape}")
        d = alpha.shape[0]
        for label in ("dashv", "vdash"):
            t = as_tensor(getattr(self, label))
            if t.shape != (d, d, d):
                raise ValueError(f"{label} must have shape {(d, d, d)}, got {t.shape}")
            object.__setattr__(self, label, t)
        object.__setattr__(self, "alpha", alpha)

    @property
    def dim(self) -> int:
        return self.alpha.shape[0]

    def key(self) -> tuple:
        return (self.dim, tuple(self.dashv.flat), tuple(self.vdash.flat), tuple(self.alpha.flat))

    def __eq__(self, other):
        if not isinstance(other, HomDialgebra):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def alpha_power(self, k: int) -> np.ndarray:
        cache = self.__dict__.setdefault("_power_cache", {})
        if k not in cache:
            cache[k] = mat_power(self.alpha, k)
        return cache[k]

    def product(self, symbol) -> np.ndarray:
        return self.dashv if symbol is DASHV else self.vdash

    @cached_property
    def identity_cochain(self) -> TreeCochain:
        return TreeCochain(self, (identity(self.dim),))

    @cached_property
    def pi(self) -> TreeCochain:
        return pi_multiplication(self, check=False)


@dataclass(frozen=True, eq=False)
class TreeCochain:
    dialgebra: HomDialgebra
    components: tuple

    def __post_init__(self):
        comps = tuple(self.components)
        if not comps:
            raise ValueError("a tree cochain needs at least one component")
        n = comps[0].ndim - 1
        if n < 1 or len(comps) != len(enumerate_trees(n)):
            raise ValueError(f"expected {len(enumerate_trees(max(n, 0)))} tree components of degree {n}")
        shape = (self.dialgebra.dim,) * (n + 1)
        if any(c.shape != shape for c in comps):
            raise ValueError("component shape mismatch")
        object.__setattr__(self, "components", comps)

    @classmethod
    def zero(cls, D: HomDialgebra, degree: int) -> TreeCochain:
        shape = (D.dim,) * (degree + 1)
        return cls(D, tuple(zeros(shape) for _ in enumerate_trees(degree)))

    @classmethod
    def from_function(cls, D: HomDialgebra, degree: int, fn) -> TreeCochain:
        """``fn(tree) -> tensor`` evaluated on every ``degree``-tree."""
        return cls(D, tuple(as_tensor(fn(y)) for y in enumerate_trees(degree)))

    @property
    def degree(self) -> int:
        return self.components[0].ndim - 1

    @property
    def reduced_degree(self) -> int:
        return self.degree - 1

    def at(self, y: PlanarBinaryTree | str) -> np.ndarray:
        if isinstance(y, str):
            y = parse_word(y)
        return self.components[tree_index(y)]

    def vector(self) -> list:
        return [x for c in self.components for x in c.flat]

    def _same(self, other: TreeCochain) -> None:
        if other.dialgebra is not self.dialgebra and other.dialgebra != self.dialgebra:
            raise ValueError("cochains over different dialgebras")
        if other.degree != self.degree:
            raise ValueError("degree mismatch")

    def __add__(self, other):
        self._same(other)
        return TreeCochain(self.dialgebra, tuple(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other):
        self._same(other)
        return TreeCochain(self.dialgebra, tuple(a - b for a, b in zip(self.components, other.components)))

    def __neg__(self):
        return TreeCochain(self.dialgebra, tuple(-a for a in self.components))

    def __rmul__(self, scalar):
        s = Q(scalar)
        return TreeCochain(self.dialgebra, tuple(a * s for a in self.components))

    def __eq__(self, other):
        if not isinstance(other, TreeCochain):
            return NotImplemented
        return (self.dialgebra == other.dialgebra and self.degree == other.degree
                and all(tensors_equal(a, b) for a, b in zip(self.components, other.components)))

    __hash__ = None

    def is_zero(self) -> bool:
        return not any(x for c in self.components for x in c.flat)


def validate_hom_dialgebra(D: HomDialgebra) -> list[Violation]:
    """Violations of multiplicativity for both products and the five axioms."""
    a = D.alpha
    report = []
    for label, p in (("multiplicativity(-|)", D.dashv), ("multiplicativity(|-)", D.vdash)):
        report += tensor_violations(label, act_on_output(p, a), act_on_inputs(p, a))
    L, R = D.dashv, D.vdash

    def outer_left(inner, outer):   # outer(alpha a, inner(b, c))
        return insert(act_on_inputs(outer, a, [0]), inner, 2)

    def outer_right(inner, outer):  # outer(inner(a, b), alpha c)
        return insert(act_on_inputs(outer, a, [1]), inner, 1)

    checks = [
        ("a(a)-|(b-|c) = (a-|b)-|a(c)", outer_left(L, L), outer_right(L, L)),
        ("(a-|b)-|a(c) = a(a)-|(b|-c)", outer_right(L, L), outer_left(R, L)),
        ("(a|-b)-|a(c) = a(a)|-(b-|c)", outer_right(R, L), outer_left(L, R)),
        ("(a-|b)|-a(c) = a(a)|-(b|-c)", outer_right(L, R), outer_left(R, R)),
        ("a(a)|-(b|-c) = (a|-b)|-a(c)", outer_left(R, R), outer_right(R, R)),
    ]
    for label, lhs, rhs in checks:
        report += tensor_violations(label, lhs, rhs)
    return report


def is_alpha_compatible(f: TreeCochain) -> bool:
    a = f.dialgebra.alpha
    return all(tensors_equal(act_on_output(c, a), act_on_inputs(c, a)) for c in f.components)


def embed_hochschild(f: Cochain, D: HomDialgebra | None = None) -> TreeCochain:
    """The constant-in-tree cochain ``y -> f`` over the diagonal dialgebra."""
    A = f.algebra
    if D is None:
        D = HomDialgebra(A.mu, A.mu, A.alpha, f"diag-{A.name}")
    elif not (tensors_equal(D.dashv, A.mu) and tensors_equal(D.vdash, A.mu)
              and tensors_equal(D.alpha, A.alpha)):
        raise ValueError("embedding target must be the diagonal dialgebra of the source algebra")
    return TreeCochain(D, tuple(f.coeffs for _ in enumerate_trees(f.degree)))


# ---------------------------------------------------------------------------
# operad structure


def _ones_with(m: int, i: int, n: int) -> tuple:
    return tuple(n if k == i else 1 for k in range(1, m + 1))


def dialgebra_partial_composition(f: TreeCochain, g: TreeCochain, i: int) -> TreeCochain:
    m, n = f.degree, g.degree
    if not 1 <= i <= m:
        raise ArityError(f"position {i} outside 1..{m}")
    if g.dialgebra is not f.dialgebra and g.dialgebra != f.dialgebra:
        raise ValueError("cochains over different dialgebras")
    D = f.dialgebra
    ns = _ones_with(m, i, n)
    spectators = [k for k in range(m) if k != i - 1]
    twisted = [act_on_inputs(c, D.alpha_power(n - 1), spectators) for c in f.components]
    comps = []
    for y in enumerate_trees(m + n - 1):
        fy = twisted[tree_index(r0(m, ns, y))]
        gy = g.components[tree_index(ri(m, ns, i, y))]
        comps.append(insert(fy, gy, i))
    return TreeCochain(D, tuple(comps))


def dialgebra_gamma(f: TreeCochain, gs: Sequence[TreeCochain]) -> TreeCochain:
    k = f.degree
    if len(gs) != k:
        raise ArityError(f"composition needs {k} arguments, got {len(gs)}")
    D = f.dialgebra
    ns = tuple(g.degree for g in gs)
    total = sum(g.reduced_degree for g in gs)
    twisted = [[act_on_output(c, D.alpha_power(total - g.reduced_degree)) for c in g.components]
               for g in gs]
    comps = []
    for y in enumerate_trees(sum(ns)):
        t = f.components[tree_index(r0(k, ns, y))]
        for p in range(k, 0, -1):
            t = insert(t, twisted[p - 1][tree_index(ri(k, ns, p, y))], p)
        comps.append(t)
    return TreeCochain(D, tuple(comps))


def dialgebra_gamma_iterated(f: TreeCochain, gs: Sequence[TreeCochain]) -> TreeCochain:
    if len(gs) != f.degree:
        raise ArityError(f"composition needs {f.degree} arguments, got {len(gs)}")
    out = f
    for p in range(len(gs), 0, -1):
        out = dialgebra_partial_composition(out, gs[p - 1], p)
    return out


def dialgebra_brace(f: TreeCochain, gs: Sequence[TreeCochain]) -> TreeCochain:
    if not gs:
        return f
    m = f.degree
    if len(gs) > m:
        raise ArityError(f"cannot insert {len(gs)} arguments into degree {m}")
    D = f.dialgebra
    ident = D.identity_cochain
    acc = None
    for positions, sign in brace_terms(m, [g.degree for g in gs]):
        args = [ident] * m
        for pos, g in zip(positions, gs):
            args[pos] = g
        term = dialgebra_gamma(f, args)
        term = term if sign > 0 else -term
        acc = term if acc is None else acc + term
    return acc


def dialgebra_circle(f: TreeCochain, g: TreeCochain) -> TreeCochain:
    return dialgebra_brace(f, [g])


def dialgebra_bracket(f: TreeCochain, g: TreeCochain) -> TreeCochain:
    fg = dialgebra_circle(f, g)
    gf = dialgebra_circle(g, f)
    return fg - gf if (f.reduced_degree * g.reduced_degree) % 2 == 0 else fg + gf


def pi_multiplication(D: HomDialgebra, check: bool = True) -> TreeCochain:
    """``pi([21]; a, b) = a -| b`` and ``pi([12]; a, b) = a |- b``."""
    if check:
        report = validate_hom_dialgebra(D)
        if report:
            raise ValueError(f"not a hom-dialgebra: {report[0]}")
    return TreeCochain.from_function(
        D, 2, lambda y: D.dashv if parse_word("[21]") == y else D.vdash)


def pipi_closed_form(D: HomDialgebra) -> dict[str, np.ndarray]:
    """The five rows of the {pi}{pi} table, evaluated straight from the
    products: ``(a o b) o' alpha(c) - alpha(a) o'' (b o''' c)``."""
    L, R, a = D.dashv, D.vdash, D.alpha

    def outer_right(inner, outer):
        return insert(act_on_inputs(outer, a, [1]), inner, 1)

    def outer_left(inner, outer):
        return insert(act_on_inputs(outer, a, [0]), inner, 2)

    return {
        "[123]": outer_right(R, R) - outer_left(R, R),
        "[213]": outer_right(L, R) - outer_left(R, R),
        "[131]": outer_right(R, L) - outer_left(L, R),
        "[312]": outer_right(L, L) - outer_left(R, L),
        "[321]": outer_right(L, L) - outer_left(L, L),
    }


def pipi_case_table(D: HomDialgebra) -> dict[str, tuple[np.ndarray, np.ndarray]]:
    """Per 3-tree: (operadic {pi}{pi} component, closed-form row)."""
    pp = dialgebra_circle(D.pi, D.pi)
    closed = pipi_closed_form(D)
    return {word: (pp.at(word), closed[word]) for word in closed}


def dialgebra_dot(f: TreeCochain, g: TreeCochain) -> TreeCochain:
    """``(-1)^(|f|+1) {pi}{f, g}``."""
    b = dialgebra_brace(f.dialgebra.pi, [f, g])
    return b if f.reduced_degree % 2 == 1 else -b


def dialgebra_dot_direct(f: TreeCochain, g: TreeCochain) -> TreeCochain:
    """``(-1)^(mn) pi(R_0 y; alpha^(n-1) f(R_1 y; ...), alpha^(m-1) g(R_2 y; ...))``."""
    D = f.dialgebra
    m, n = f.degree, g.degree
    ns = (m, n)
    pi = D.pi
    comps = []
    for y in enumerate_trees(m + n):
        left = act_on_output(f.components[tree_index(ri(2, ns, 1, y))], D.alpha_power(n - 1))
        right = act_on_output(g.components[tree_index(ri(2, ns, 2, y))], D.alpha_power(m - 1))
        t = bilinear(pi.components[tree_index(r0(2, ns, y))], left, right)
        comps.append(t if (m * n) % 2 == 0 else -t)
    return TreeCochain(D, tuple(comps))


def dialgebra_differential(f: TreeCochain) -> TreeCochain:
    pi = f.dialgebra.pi
    a = dialgebra_circle(pi, f)
    b = dialgebra_circle(f, pi)
    return a - b if f.reduced_degree % 2 == 0 else a + b


def dialgebra_delta(f: TreeCochain) -> TreeCochain:
    D = f.dialgebra
    n = f.degree
    alpha = D.alpha
    lead = D.alpha_power(n - 1)
    comps = []
    for y in enumerate_trees(n + 1):
        acc = bilinear(D.product(bullet(y, 0)), lead, f.components[tree_index(face(y, 0))])
        for i in range(1, n + 1):
            fy = f.components[tree_index(face(y, i))]
            spectators = act_on_inputs(fy, alpha, [k for k in range(n) if k != i - 1])
            term = insert(spectators, D.product(bullet(y, i)), i)
            acc = acc - term if i % 2 else acc + term
        last = bilinear(D.product(bullet(y, n + 1)), f.components[tree_index(face(y, n + 1))], lead)
        acc = acc + last if (n + 1) % 2 == 0 else acc - last
        comps.append(acc)
    return TreeCochain(D, tuple(comps))


def compare(lhs: TreeCochain, rhs: TreeCochain):
    """``(tree index, multi-index)`` of the first difference, or None."""
    for t, (a, b) in enumerate(zip(lhs.components, rhs.components)):
        idx = first_difference(a, b)
        if idx is not None:
            return t, idx
    return None
