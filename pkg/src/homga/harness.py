"""Seeded randomized and exhaustive verification of the identity catalogue.

Each identity is a function of one trial: it draws random alpha-compatible
cochains from a generator seeded by ``(seed, identity, fixture, trial)`` and
returns ``None`` or a failure record.  Equality is exact; there is no
tolerance anywhere.
"""

from __future__ import annotations

import itertools
import zlib
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import fixtures as fx
from . import homassoc as ha
from . import homdialg as hd
from . import trees as tr
from .cohomology import (
    CochainComplex,
    DialgebraComplex,
    HochschildComplex,
    induced_bracket,
    induced_cup,
)
from .exactlin import Q, ZERO, format_rational


@dataclass(frozen=True)
class TrialConfig:
    seed: int = 20240917
    trials: int = 50
    max_degree: int = 4
    coefficient_bound: int = 3
    fixture: str | None = None
    max_tree_vertices: int = 6


@dataclass
class Verdict:
    identity: str
    fixture: str
    passed: bool
    trials: int = 0
    detail: str = ""
    witness: dict | None = None

    def line(self, fmt: str = "text") -> str:
        status = "PASS" if self.passed else "FAIL"
        wit = _format_witness(self.witness) if self.witness else ""
        if fmt == "tsv":
            return "\t".join([self.identity, self.fixture, status, str(self.trials), self.detail, wit])
        out = f"{status}  {self.identity:<26} {self.fixture:<22} trials={self.trials}"
        if self.detail:
            out += f"  {self.detail}"
        if wit:
            out += f"  witness: {wit}"
        return out


def _format_witness(w: dict) -> str:
    parts = []
    for k, v in w.items():
        if isinstance(v, (tuple, list)):
            v = "(" + ",".join(format_rational(x) if not isinstance(x, str) else x for x in v) + ")"
        parts.append(f"{k}={v}")
    return " ".join(parts)


class UnknownIdentity(KeyError):
    pass


# ---------------------------------------------------------------------------
# random cochains


def make_rng(seed: int, *labels) -> np.random.Generator:
    """Generator from a fixed splittable scheme over (seed, labels...)."""
    words = [seed & 0xFFFFFFFF, (seed >> 32) & 0xFFFFFFFF]
    for label in labels:
        words.append(label if isinstance(label, int) else zlib.crc32(str(label).encode()))
    return np.random.default_rng(words)


def random_rational(rng: np.random.Generator, bound: int):
    if bound <= 0:
        return ZERO
    return Q(int(rng.integers(-bound, bound + 1)), int(rng.integers(1, bound + 1)))


def random_cochain(cx: CochainComplex, n: int, rng: np.random.Generator, bound: int = 3):
    """Random rational combination of the alpha-compatible basis in degree n."""
    coords = [random_rational(rng, bound) for _ in range(cx.dimension(n))]
    return cx.from_coords(n, coords)


# ---------------------------------------------------------------------------
# uniform access to the two operads


class AssocOps:
    kind = "assoc"

    def __init__(self, A: ha.HomAssociativeAlgebra):
        self.algebra = A
        self.name = A.name
        self.cx = HochschildComplex(A)
        self.ident = A.identity_cochain
        self.mult = A.mu_cochain
        self.max_out = {1: 8, 2: 6}.get(A.dim, 5)
        self.cohomology_cap = {1: 9, 2: 8}.get(A.dim, 5)

    compose = staticmethod(ha.partial_composition)
    gamma = staticmethod(ha.gamma_alpha)
    gamma_iterated = staticmethod(ha.gamma_iterated)
    brace = staticmethod(ha.brace)
    dot = staticmethod(ha.dot_product)
    d = staticmethod(ha.differential_d)
    delta = staticmethod(ha.hochschild_delta)
    bracket = staticmethod(ha.gerstenhaber_bracket)

    def validate(self):
        return ha.validate_hom_algebra(self.algebra)

    def random(self, n, rng, bound):
        return random_cochain(self.cx, n, rng, bound)

    def zero(self, n):
        return ha.Cochain.zero(self.algebra, n)

    def diff(self, lhs, rhs):
        idx = ha.compare(lhs, rhs)
        if idx is None:
            return None
        key = idx[:-1]
        return {"basis": tuple(i + 1 for i in key), "lhs": tuple(lhs.coeffs[key]), "rhs": tuple(rhs.coeffs[key])}


class DialgOps:
    kind = "dialg"

    def __init__(self, D: hd.HomDialgebra):
        self.algebra = D
        self.name = D.name
        self.cx = DialgebraComplex(D)
        self.ident = D.identity_cochain
        self.mult = D.pi
        self.max_out = 4 if D.dim >= 2 else 6
        self.cohomology_cap = 5 if D.dim <= 2 else 4

    compose = staticmethod(hd.dialgebra_partial_composition)
    gamma = staticmethod(hd.dialgebra_gamma)
    gamma_iterated = staticmethod(hd.dialgebra_gamma_iterated)
    brace = staticmethod(hd.dialgebra_brace)
    dot = staticmethod(hd.dialgebra_dot)
    d = staticmethod(hd.dialgebra_differential)
    delta = staticmethod(hd.dialgebra_delta)
    bracket = staticmethod(hd.dialgebra_bracket)

    def validate(self):
        return hd.validate_hom_dialgebra(self.algebra)

    def random(self, n, rng, bound):
        return random_cochain(self.cx, n, rng, bound)

    def zero(self, n):
        return hd.TreeCochain.zero(self.algebra, n)

    def diff(self, lhs, rhs):
        loc = hd.compare(lhs, rhs)
        if loc is None:
            return None
        t, idx = loc
        key = idx[:-1]
        y = tr.enumerate_trees(lhs.degree)[t]
        return {"tree": repr(y), "basis": tuple(i + 1 for i in key),
                "lhs": tuple(lhs.components[t][key]), "rhs": tuple(rhs.components[t][key])}


def ops_for(algebra):
    if isinstance(algebra, ha.HomAssociativeAlgebra):
        return AssocOps(algebra)
    if isinstance(algebra, hd.HomDialgebra):
        return DialgOps(algebra)
    raise TypeError(type(algebra).__name__)


def _degrees(rng, count, out_degree, cap, lo=1, hi=3):
    """Random degrees in [lo, hi] whose resulting output degree fits ``cap``."""
    for _ in range(200):
        degs = [int(rng.integers(lo, hi + 1)) for _ in range(count)]
        if out_degree(degs) <= cap:
            return degs
    return [lo] * count


def _brace_or_zero(ops, f, gs):
    try:
        return ops.brace(f, gs)
    except ha.ArityError:
        return None


def _add(acc, term, sign=1):
    if term is None:
        return acc
    term = term if sign > 0 else -term
    return term if acc is None else acc + term


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def _check(ops, lhs, rhs, **info):
    if lhs is None and rhs is None:
        return None
    if lhs is None:
        lhs = ops.zero(rhs.degree)
    if rhs is None:
        rhs = ops.zero(lhs.degree)
    if lhs.degree != rhs.degree:
        return {**info, "error": f"degree {lhs.degree} vs {rhs.degree}"}
    w = ops.diff(lhs, rhs)
    return None if w is None else {**info, **w}


# ---------------------------------------------------------------------------
# identity trials (return None or a failure dict)


def t_operad_assoc_1(ops, rng, cfg):
    m, n, p = _degrees(rng, 3, lambda g: sum(g) - 2, ops.max_out)
    f, g, h = (ops.random(k, rng, cfg.coefficient_bound) for k in (m, n, p))
    i = int(rng.integers(1, m + 1))
    j = int(rng.integers(1, n + 1))
    lhs = ops.compose(ops.compose(f, g, i), h, i + j - 1)
    rhs = ops.compose(f, ops.compose(g, h, j), i)
    fail = _check(ops, lhs, rhs, degrees=(m, n, p), positions=(i, j))
    if fail:
        return fail
    k = _degrees(rng, 1, lambda g: g[0], 3)[0]
    ns = _degrees(rng, k, lambda g: sum(g), ops.max_out)
    top = ops.random(k, rng, cfg.coefficient_bound)
    args = [ops.random(q, rng, cfg.coefficient_bound) for q in ns]
    return _check(ops, ops.gamma(top, args), ops.gamma_iterated(top, args),
                  form="gamma-vs-iterated", degrees=(k, *ns))


def t_operad_assoc_2(ops, rng, cfg):
    m, n, p = _degrees(rng, 3, lambda g: sum(g) - 2, ops.max_out, lo=1)
    m = max(m, 2)
    f, g, h = (ops.random(k, rng, cfg.coefficient_bound) for k in (m, n, p))
    i, j = sorted(int(x) for x in rng.choice(np.arange(1, m + 1), size=2, replace=False))
    lhs = ops.compose(ops.compose(f, g, i), h, j + n - 1)
    rhs = ops.compose(ops.compose(f, h, j), g, i)
    return _check(ops, lhs, rhs, degrees=(m, n, p), positions=(i, j))


def t_operad_identity(ops, rng, cfg):
    m = int(rng.integers(1, 4))
    f = ops.random(m, rng, cfg.coefficient_bound)
    for i in range(1, m + 1):
        fail = _check(ops, ops.compose(f, ops.ident, i), f, form=f"f o_{i} id", degrees=(m,))
        if fail:
            return fail
    fail = _check(ops, ops.compose(ops.ident, f, 1), f, form="id o_1 f", degrees=(m,))
    if fail:
        return fail
    fail = _check(ops, ops.gamma(f, [ops.ident] * m), f, form="gamma(f; id..id)", degrees=(m,))
    if fail:
        return fail
    return _check(ops, ops.gamma(ops.ident, [f]), f, form="gamma(id; f)", degrees=(m,))


def _pre_jacobi_rhs(ops, f, gs, hs):
    n = len(hs)
    acc = None
    for cuts in itertools.combinations_with_replacement(range(n + 1), 2 * len(gs)):
        # cuts = (i_1, j_1, i_2, j_2, ...) non-decreasing
        args = []
        prev = 0
        eps = 0
        ok = True
        for p, g in enumerate(gs):
            i, j = cuts[2 * p], cuts[2 * p + 1]
            args.extend(hs[prev:i])
            inner = _brace_or_zero(ops, g, hs[i:j])
            if inner is None:
                ok = False
                break
            args.append(inner)
            eps += g.reduced_degree * sum(h.reduced_degree for h in hs[:i])
            prev = j
        if not ok:
            continue
        args.extend(hs[prev:])
        acc = _add(acc, _brace_or_zero(ops, f, args), _sign(eps))
    return acc


def t_pre_jacobi(ops, rng, cfg):
    a = int(rng.integers(1, 3))
    b = int(rng.integers(1, 3))
    degs = _degrees(rng, 1 + a + b, lambda g: g[0] + sum(x - 1 for x in g[1:]), ops.max_out)
    degs[0] = max(degs[0], a)
    f = ops.random(degs[0], rng, cfg.coefficient_bound)
    gs = [ops.random(k, rng, cfg.coefficient_bound) for k in degs[1:1 + a]]
    hs = [ops.random(k, rng, cfg.coefficient_bound) for k in degs[1 + a:]]
    inner = ops.brace(f, gs)
    lhs = _brace_or_zero(ops, inner, hs)
    rhs = _pre_jacobi_rhs(ops, f, gs, hs)
    return _check(ops, lhs, rhs, degrees=tuple(degs), shape=(a, b))


def _mu_product(ops, x, y):
    """Unsigned product {m}{x, y}; the signed dot differs by (-1)^(|x|+1)."""
    return ops.brace(ops.mult, [x, y])


def _distributivity(ops, f, g, hs, product, g_weight):
    lhs = _brace_or_zero(ops, product(f, g), hs)
    rhs = None
    for k in range(len(hs) + 1):
        left = _brace_or_zero(ops, f, hs[:k])
        right = _brace_or_zero(ops, g, hs[k:])
        if left is None or right is None:
            continue
        eps = g_weight * sum(h.reduced_degree for h in hs[:k])
        rhs = _add(rhs, product(left, right), _sign(eps))
    return lhs, rhs


def t_distributivity(ops, rng, cfg):
    n = int(rng.integers(0, 3))
    degs = _degrees(rng, 2 + n, lambda g: g[0] + g[1] + sum(x - 1 for x in g[2:]), ops.max_out)
    f = ops.random(degs[0], rng, cfg.coefficient_bound)
    g = ops.random(degs[1], rng, cfg.coefficient_bound)
    hs = [ops.random(k, rng, cfg.coefficient_bound) for k in degs[2:]]
    # unsigned product: the sign weight is the reduced degree of g
    lhs, rhs = _distributivity(ops, f, g, hs, lambda x, y: _mu_product(ops, x, y), g.reduced_degree)
    fail = _check(ops, lhs, rhs, form="{m}{f,g}", degrees=tuple(degs))
    if fail:
        return fail
    # signed dot: the sign weight becomes the full degree of g
    lhs, rhs = _distributivity(ops, f, g, hs, ops.dot, g.degree)
    return _check(ops, lhs, rhs, form="dot", degrees=tuple(degs))


def t_higher_homotopy(ops, rng, cfg):
    n = int(rng.integers(0, 2))
    degs = _degrees(rng, 2 + n, lambda g: g[0] + sum(x - 1 for x in g[1:]) + 1, ops.max_out)
    f = ops.random(degs[0], rng, cfg.coefficient_bound)
    gs = [ops.random(k, rng, cfg.coefficient_bound) for k in degs[1:]]
    prod = lambda x, y: _mu_product(ops, x, y)
    F = f.reduced_degree
    lhs = None
    braced = _brace_or_zero(ops, f, gs)
    if braced is not None:
        lhs = _add(lhs, ops.d(braced))
    lhs = _add(lhs, _brace_or_zero(ops, ops.d(f), gs), -1)
    for i in range(len(gs)):
        e = F + sum(g.reduced_degree for g in gs[:i])
        args = gs[:i] + [ops.d(gs[i])] + gs[i + 1:]
        lhs = _add(lhs, _brace_or_zero(ops, f, args), -_sign(e))
    rhs = None
    rest = _brace_or_zero(ops, f, gs[1:])
    if rest is not None:
        rhs = _add(rhs, prod(gs[0], rest), _sign(F * gs[0].reduced_degree + 1))
    for i in range(n):
        e = F + sum(g.reduced_degree for g in gs[:i])
        args = gs[:i] + [prod(gs[i], gs[i + 1])] + gs[i + 2:]
        rhs = _add(rhs, _brace_or_zero(ops, f, args), _sign(e))
    head = _brace_or_zero(ops, f, gs[:n])
    if head is not None:
        rhs = _add(rhs, prod(head, gs[n]), -1)
    return _check(ops, lhs, rhs, degrees=tuple(degs))


def t_bracket_antisym(ops, rng, cfg):
    m, n = _degrees(rng, 2, lambda g: sum(g) - 1, ops.max_out)
    f, g = ops.random(m, rng, cfg.coefficient_bound), ops.random(n, rng, cfg.coefficient_bound)
    lhs = ops.bracket(f, g)
    rhs = ops.bracket(g, f)
    rhs = rhs if (f.reduced_degree * g.reduced_degree) % 2 else -rhs
    return _check(ops, lhs, rhs, degrees=(m, n))


def t_delta_squared(ops, rng, cfg):
    n = int(rng.integers(1, max(2, min(cfg.max_degree, ops.max_out - 1))))
    f = ops.random(n, rng, cfg.coefficient_bound)
    fail = _check(ops, ops.delta(ops.delta(f)), ops.zero(n + 2), form="delta(delta f)", degrees=(n,))
    if fail:
        return fail
    return _check(ops, ops.d(ops.d(f)), ops.zero(n + 2), form="d(d f)", degrees=(n,))


def t_embed_chain_map(ops, rng, cfg):
    A = ops.algebra
    D = fx.diagonal_dialgebra(A)
    dops = DialgOps(D)
    emb = lambda c: hd.embed_hochschild(c, D)
    m, n = _degrees(rng, 2, lambda g: sum(g), min(dops.max_out, ops.max_out), hi=2)
    f = ops.random(m, rng, cfg.coefficient_bound)
    g = ops.random(n, rng, cfg.coefficient_bound)
    checks = [("delta", lambda: (emb(ops.delta(f)), dops.delta(emb(f))))]
    i = int(rng.integers(1, m + 1))
    checks.append((f"o_{i}", lambda: (emb(ops.compose(f, g, i)), dops.compose(emb(f), emb(g), i))))
    checks.append(("dot", lambda: (emb(ops.dot(f, g)), dops.dot(emb(f), emb(g)))))
    checks.append(("bracket", lambda: (emb(ops.bracket(f, g)), dops.bracket(emb(f), emb(g)))))
    for label, pair in checks:
        lhs, rhs = pair()
        fail = _check(dops, lhs, rhs, form=label, degrees=(m, n))
        if fail:
            return fail
    return None


def t_pipi_table(ops, rng, cfg):
    d = ops.algebra.dim
    bound = max(cfg.coefficient_bound, 1)

    def rand_tensor(shape):
        t = np.empty(shape, dtype=object)
        t.flat[:] = [random_rational(rng, bound) for _ in range(int(np.prod(shape)))]
        return t

    alpha = np.eye(d, dtype=int).astype(object) if rng.integers(0, 2) == 0 else rand_tensor((d, d))
    D = hd.HomDialgebra(rand_tensor((d, d, d)), rand_tensor((d, d, d)), alpha, "random-products")
    for word, (operadic, closed) in hd.pipi_case_table(D).items():
        idx = next((k for k in np.ndindex(operadic.shape) if operadic[k] != closed[k]), None)
        if idx is not None:
            return {"tree": word, "basis": tuple(i + 1 for i in idx[:-1]),
                    "lhs": tuple(operadic[idx[:-1]]), "rhs": tuple(closed[idx[:-1]])}
    return None


# exhaustive / structural checks (single "trial")


def e_mult_square(ops, cfg):
    sq = ops.brace(ops.mult, [ops.mult])
    fail = _check(ops, sq, ops.zero(3), form="{m}{m}")
    if fail or ops.kind != "assoc":
        return fail
    A = ops.algebra
    expansion = ops.gamma(ops.mult, [ops.mult, ops.ident]) - ops.gamma(ops.mult, [ops.ident, ops.mult])
    fail = _check(ops, sq, expansion, form="{mu}{mu} expansion")
    if fail:
        return fail
    left, right = ha.hom_associator(A)
    return _check(ops, sq, ha.Cochain(A, right - left), form="{mu}{mu} vs associator")


def e_pipi_valid(ops, cfg):
    fail = e_mult_square(ops, cfg)
    if fail:
        return fail
    for word, (operadic, closed) in hd.pipi_case_table(ops.algebra).items():
        if any(x for x in closed.flat):
            return {"tree": word, "form": "closed-form row nonzero"}
    return None


def e_delta_squared_matrices(ops, cfg):
    cx = ops.cx
    top = cfg.max_degree if ops.kind == "assoc" else min(cfg.max_degree, 3)
    for n in range(1, top):
        prod = cx.delta_matrix(n + 1) @ cx.delta_matrix(n)
        if not prod.is_zero():
            return {"form": "delta^(n+1) delta^n matrix", "degree": n}
    return None


def e_sign_sequence(ops, cfg):
    top = cfg.max_degree if ops.kind == "assoc" else min(cfg.max_degree, 3)
    signs = [ops.cx.sign_relation(n) for n in range(1, top + 1)]
    if any(s is None for s in signs):
        return {"form": "d not proportional to delta"}, _sign_text(signs)
    return None, _sign_text(signs)


def _sign_text(signs) -> str:
    return "s=(" + ",".join({1: "+1", -1: "-1", 0: "0"}.get(s, "?") for s in signs) + ")"


def _classes(cx, degrees):
    out = []
    for n in degrees:
        try:
            out.extend(cx.cohomology_basis(n))
        except ValueError:
            pass
    return out


def _cohomology_degrees(ops):
    return (2, 3) if ops.kind == "assoc" else (2,)


def _defect_is_coboundary(cx, defect, info):
    if defect is None or cx.is_coboundary(defect):
        return None
    return {**info, "form": "defect is not a coboundary", "degree": defect.degree}


def _perturb(ops, cls, rng, cfg):
    return cls.perturbed(ops.random(cls.degree - 1, rng, cfg.coefficient_bound))


def c_graded_comm(ops, rng, cfg):
    cx = ops.cx
    classes = _classes(cx, _cohomology_degrees(ops))
    for a, b in itertools.product(range(len(classes)), repeat=2):
        x, y = classes[a], classes[b]
        if x.degree + y.degree > ops.cohomology_cap:
            continue
        xp, yp = _perturb(ops, x, rng, cfg), _perturb(ops, y, rng, cfg)
        sign = _sign(x.degree * y.degree)
        xy = induced_cup(xp, yp).representative
        yx = induced_cup(y, x).representative
        fail = _defect_is_coboundary(cx, xy - yx if sign > 0 else xy + yx, {"classes": (a, b)})
        if fail:
            return fail
        # well-definedness: perturbed vs unperturbed products agree in cohomology
        fail = _defect_is_coboundary(cx, xy - induced_cup(x, y).representative,
                                     {"classes": (a, b), "check": "well-defined"})
        if fail:
            return fail
    return None


def c_assoc(ops, rng, cfg):
    """Past the cohomology cap the representatives are compared exactly,
    which is stronger since the dot product is associative on cochains."""
    cx = ops.cx
    classes = _classes(cx, _cohomology_degrees(ops))
    for a, b, c in itertools.product(range(len(classes)), repeat=3):
        x, y, z = classes[a], classes[b], classes[c]
        xp, zp = _perturb(ops, x, rng, cfg), _perturb(ops, z, rng, cfg)
        if x.degree + y.degree + z.degree > ops.cohomology_cap:
            lhs = ops.dot(ops.dot(xp.representative, y.representative), zp.representative)
            rhs = ops.dot(xp.representative, ops.dot(y.representative, zp.representative))
            fail = _check(ops, lhs, rhs, classes=(a, b, c), check="cochain level")
        else:
            lhs = induced_cup(induced_cup(xp, y), z).representative
            rhs = induced_cup(x, induced_cup(y, zp)).representative
            fail = _defect_is_coboundary(cx, lhs - rhs, {"classes": (a, b, c)})
        if fail:
            return fail
    return None


def c_leibniz(ops, rng, cfg):
    cx = ops.cx
    classes = _classes(cx, _cohomology_degrees(ops))
    for a, b, c in itertools.product(range(len(classes)), repeat=3):
        x, y, z = classes[a], classes[b], classes[c]
        if x.degree + y.degree + z.degree - 1 > ops.cohomology_cap:
            continue
        xp = _perturb(ops, x, rng, cfg)
        X, Y = x.degree - 1, y.degree - 1
        lhs = induced_bracket(xp, induced_cup(y, z)).representative
        t1 = induced_cup(induced_bracket(x, y), z).representative
        t2 = induced_cup(y, induced_bracket(x, z)).representative
        defect = lhs - t1 - t2 if _sign(X * (Y + 1)) > 0 else lhs - t1 + t2
        fail = _defect_is_coboundary(cx, defect, {"classes": (a, b, c)})
        if fail:
            return fail
    return None


def c_jacobi(ops, rng, cfg):
    cx = ops.cx
    classes = _classes(cx, _cohomology_degrees(ops))
    for a, b, c in itertools.product(range(len(classes)), repeat=3):
        x, y, z = classes[a], classes[b], classes[c]
        if x.degree + y.degree + z.degree - 2 > ops.cohomology_cap:
            continue
        X, Y, Z = x.degree - 1, y.degree - 1, z.degree - 1
        terms = [
            (_sign(X * Z), induced_bracket(x, induced_bracket(y, z))),
            (_sign(Y * X), induced_bracket(y, induced_bracket(z, x))),
            (_sign(Z * Y), induced_bracket(z, induced_bracket(x, y))),
        ]
        total = None
        for s, cls in terms:
            total = _add(total, cls.representative, s)
        fail = _defect_is_coboundary(cx, total, {"classes": (a, b, c)})
        if fail:
            return fail
    return None


def c_bracket_class(ops, rng, cfg):
    """Bracket on classes is well defined and graded antisymmetric."""
    cx = ops.cx
    classes = _classes(cx, _cohomology_degrees(ops))
    for a, b in itertools.product(range(len(classes)), repeat=2):
        x, y = classes[a], classes[b]
        xy = induced_bracket(_perturb(ops, x, rng, cfg), _perturb(ops, y, rng, cfg)).representative
        yx = induced_bracket(y, x).representative
        s = _sign((x.degree - 1) * (y.degree - 1))
        fail = _defect_is_coboundary(cx, xy + yx if s > 0 else xy - yx, {"classes": (a, b)})
        if fail:
            return fail
    return None


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _group(ms, ns):
    out, pos = [], 0
    for n in ns:
        out.append(sum(ms[pos:pos + n]))
        pos += n
    return tuple(out)


def _preoperadic_cases(cap):
    """(k, ns, ms, y) with sum(ms) <= cap."""
    for M in range(1, cap + 1):
        ys = tr.enumerate_trees(M)
        for N in range(1, M + 1):
            for ms in _compositions(M, N):
                for k in range(1, N + 1):
                    for ns in _compositions(N, k):
                        for y in ys:
                            yield k, ns, ms, y


def x_preoperadic_1(cfg):
    for k in range(1, cfg.max_tree_vertices + 1):
        for y in tr.enumerate_trees(k):
            if tr.r0(k, (1,) * k, y) != y:
                return {"tree": repr(y), "k": k}
    return None


def x_preoperadic_2(cfg):
    for k, ns, ms, y in _preoperadic_cases(cfg.max_tree_vertices):
        N = sum(ns)
        lhs = tr.r0(k, ns, tr.r0(N, ms, y))
        rhs = tr.r0(k, _group(ms, ns), y)
        if lhs != rhs:
            return {"tree": repr(y), "ns": ns, "ms": ms, "lhs": repr(lhs), "rhs": repr(rhs)}
    return None


def x_preoperadic_3(cfg):
    for k, ns, ms, y in _preoperadic_cases(cfg.max_tree_vertices):
        N = sum(ns)
        grouped = _group(ms, ns)
        start = 0
        for i in range(1, k + 1):
            block = ms[start:start + ns[i - 1]]
            lhs = tr.ri(k, ns, i, tr.r0(N, ms, y))
            rhs = tr.r0(ns[i - 1], block, tr.ri(k, grouped, i, y))
            if lhs != rhs:
                return {"tree": repr(y), "ns": ns, "ms": ms, "i": i, "lhs": repr(lhs), "rhs": repr(rhs)}
            start += ns[i - 1]
    return None


def x_preoperadic_4(cfg):
    for k, ns, ms, y in _preoperadic_cases(cfg.max_tree_vertices):
        N = sum(ns)
        grouped = _group(ms, ns)
        start = 0
        for i in range(1, k + 1):
            block = ms[start:start + ns[i - 1]]
            for j in range(1, ns[i - 1] + 1):
                lhs = tr.ri(N, ms, start + j, y)
                rhs = tr.ri(ns[i - 1], block, j, tr.ri(k, grouped, i, y))
                if lhs != rhs:
                    return {"tree": repr(y), "ns": ns, "ms": ms, "i": i, "j": j,
                            "lhs": repr(lhs), "rhs": repr(rhs)}
            start += ns[i - 1]
    return None


def x_presimplicial(cfg):
    for n in range(2, cfg.max_tree_vertices + 1):
        for y in tr.enumerate_trees(n):
            for j in range(n + 1):
                for i in range(j):
                    if tr.face(tr.face(y, j), i) != tr.face(tr.face(y, i), j - 1):
                        return {"tree": repr(y), "i": i, "j": j}
    return None


# ---------------------------------------------------------------------------
# catalogue


@dataclass(frozen=True)
class Identity:
    name: str
    kinds: tuple           # fixture kinds it applies to; () = fixture-free
    trial: Callable | None = None       # (ops, rng, cfg) -> failure | None
    exhaustive: Callable | None = None  # (ops, cfg) or (cfg) -> failure | None
    min_trials: int = 0


CATALOGUE = [
    Identity("operad-assoc-1", ("assoc", "dialg"), trial=t_operad_assoc_1, min_trials=50),
    Identity("operad-assoc-2", ("assoc", "dialg"), trial=t_operad_assoc_2, min_trials=50),
    Identity("operad-identity", ("assoc", "dialg"), trial=t_operad_identity, min_trials=50),
    Identity("pre-jacobi", ("assoc", "dialg"), trial=t_pre_jacobi, min_trials=25),
    Identity("distributivity", ("assoc", "dialg"), trial=t_distributivity, min_trials=25),
    Identity("higher-homotopy", ("assoc", "dialg"), trial=t_higher_homotopy, min_trials=25),
    Identity("delta-squared", ("assoc", "dialg"), trial=t_delta_squared, exhaustive=e_delta_squared_matrices),
    Identity("mu-square", ("assoc",), exhaustive=e_mult_square),
    Identity("pi-square", ("dialg",), exhaustive=e_pipi_valid),
    Identity("pipi-table", ("dialg",), trial=t_pipi_table, min_trials=25),
    Identity("d-vs-delta-sign", ("assoc", "dialg"), exhaustive=e_sign_sequence),
    Identity("bracket-antisym", ("assoc", "dialg"), trial=t_bracket_antisym, min_trials=25),
    Identity("leibniz-on-cohomology", ("assoc", "dialg"), trial=c_leibniz),
    Identity("graded-comm-on-cohomology", ("assoc", "dialg"), trial=c_graded_comm),
    Identity("assoc-on-cohomology", ("assoc", "dialg"), trial=c_assoc),
    Identity("jacobi-on-cohomology", ("assoc", "dialg"), trial=c_jacobi),
    Identity("bracket-on-cohomology", ("assoc", "dialg"), trial=c_bracket_class),
    Identity("embed-chain-map", ("assoc",), trial=t_embed_chain_map, min_trials=25),
    Identity("preoperadic-1", (), exhaustive=x_preoperadic_1),
    Identity("preoperadic-2", (), exhaustive=x_preoperadic_2),
    Identity("preoperadic-3", (), exhaustive=x_preoperadic_3),
    Identity("preoperadic-4", (), exhaustive=x_preoperadic_4),
    Identity("presimplicial", (), exhaustive=x_presimplicial),
]

BY_NAME = {ident.name: ident for ident in CATALOGUE}
NAMES = [ident.name for ident in CATALOGUE]

# cohomology checks draw one perturbation per class per trial; a few suffice
COHOMOLOGY_TRIALS = 3


def _trial_count(ident: Identity, cfg: TrialConfig) -> int:
    if ident.name.endswith("-on-cohomology"):
        return min(cfg.trials, COHOMOLOGY_TRIALS)
    return max(cfg.trials, ident.min_trials) if cfg.trials > 0 else 0


def _default_fixtures(ident: Identity) -> list:
    out = []
    if "assoc" in ident.kinds:
        out += [fx.hom_associative(n) for n in fx.HOM_ASSOCIATIVE]
    if "dialg" in ident.kinds:
        out += [fx.hom_dialgebra(n) for n in fx.HOM_DIALGEBRA]
    return out


def _kind(algebra) -> str:
    return "assoc" if isinstance(algebra, ha.HomAssociativeAlgebra) else "dialg"


_OPS_CACHE: dict = {}


def _ops(algebra):
    key = (type(algebra).__name__, algebra.key())
    if key not in _OPS_CACHE:
        _OPS_CACHE[key] = ops_for(algebra)
    return _OPS_CACHE[key]


def run_identity_on(ident: Identity, algebra, cfg: TrialConfig) -> Verdict:
    ops = _ops(algebra)
    label = algebra.name or "algebra"
    if ident.exhaustive is not None:
        fail = ident.exhaustive(ops, cfg)
        detail = ""
        if isinstance(fail, tuple):
            fail, detail = fail
        if fail:
            return Verdict(ident.name, label, False, 0, detail, {"fixture": label, **fail})
        if ident.trial is None:
            return Verdict(ident.name, label, True, 0, detail)
    count = _trial_count(ident, cfg)
    for t in range(count):
        rng = make_rng(cfg.seed, ident.name, label, t)
        fail = ident.trial(ops, rng, cfg)
        if fail:
            return Verdict(ident.name, label, False, t + 1, "",
                           {"fixture": label, "trial": t, **fail})
    return Verdict(ident.name, label, True, count)


def replay(verdict: Verdict, cfg: TrialConfig, algebra=None):
    """Re-run the failing trial recorded in ``verdict``; returns its failure."""
    ident = BY_NAME[verdict.identity]
    if algebra is None:
        algebra = fx.fixture(verdict.fixture)
    ops = _ops(algebra)
    if verdict.witness is None or "trial" not in verdict.witness:
        fail = ident.exhaustive(ops, cfg)
        return fail[0] if isinstance(fail, tuple) else fail
    rng = make_rng(cfg.seed, ident.name, verdict.fixture, verdict.witness["trial"])
    return ident.trial(ops, rng, cfg)


def check_identity(name: str, config: TrialConfig = TrialConfig(), algebra=None) -> list[Verdict]:
    """Run one catalogue entry; one verdict per applicable fixture."""
    if name not in BY_NAME:
        raise UnknownIdentity(name)
    ident = BY_NAME[name]
    if not ident.kinds:
        fail = ident.exhaustive(config)
        return [Verdict(name, "-", fail is None, 0, f"n<={config.max_tree_vertices}", fail)]
    if algebra is None and config.fixture is not None:
        algebra = fx.fixture(config.fixture)
    targets = [algebra] if algebra is not None else _default_fixtures(ident)
    out = []
    for A in targets:
        if _kind(A) not in ident.kinds:
            out.append(Verdict(name, A.name or "algebra", True, 0, "not applicable"))
            continue
        out.append(run_identity_on(ident, A, config))
    return out


def validation_verdict(algebra) -> Verdict:
    report = _ops(algebra).validate()
    label = algebra.name or "algebra"
    if report:
        v = report[0]
        return Verdict("validate", label, False, 0, f"{len(report)} violation(s)",
                       {"fixture": label, "identity": v.identity, "basis": tuple(i + 1 for i in v.basis),
                        "lhs": v.lhs, "rhs": v.rhs})
    return Verdict("validate", label, True, 0)


NEGATIVE_CONTROLS = [
    ("mu-square", "perturbed-dual-yau2"),
    ("mu-square", "skew"),
    ("pi-square", "perturbed-bimodule"),
]


@dataclass
class SuiteReport:
    verdicts: list = field(default_factory=list)

    @property
    def failures(self) -> int:
        return sum(not v.passed for v in self.verdicts)

    def lines(self, fmt: str = "text") -> list[str]:
        out = [v.line(fmt) for v in self.verdicts]
        passed = len(self.verdicts) - self.failures
        if fmt == "tsv":
            out.append(f"summary\t-\t{'PASS' if not self.failures else 'FAIL'}\t{passed}\t{self.failures} failed")
        else:
            out.append(f"summary: {passed} passed, {self.failures} failed")
        return out


def run_suite(config: TrialConfig = TrialConfig(), names=None, algebra=None) -> SuiteReport:
    """Validate the fixtures, then run the catalogue in its fixed order,
    then the negative controls (which pass when the failure is detected)."""
    report = SuiteReport()
    if algebra is None and config.fixture is not None:
        algebra = fx.fixture(config.fixture)
    if algebra is not None:
        targets = [algebra]
    else:
        targets = [fx.fixture(n) for n in fx.VALID]
    for A in targets:
        v = validation_verdict(A)
        report.verdicts.append(v)
        if not v.passed:
            return report
    for ident in CATALOGUE:
        if names is not None and ident.name not in names:
            continue
        report.verdicts.extend(check_identity(ident.name, config, algebra))
    if algebra is None and names is None:
        for name, fixture_name in NEGATIVE_CONTROLS:
            inner = check_identity(name, config, fx.fixture(fixture_name))[0]
            caught = not inner.passed and inner.witness is not None
            report.verdicts.append(Verdict(f"{name}!negative-control", fixture_name, caught, 0,
                                           "violation detected" if caught else "violation missed",
                                           inner.witness if caught else None))
    return report
