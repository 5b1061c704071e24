"""Shipped example algebras.

Every fixture here is a small algebra given by structure constants.  Valid
ones are checked by the test-suite before any identity is run on them; the
``perturbed-*`` and ``skew-*`` entries are deliberate negative controls.
"""

from __future__ import annotations

from .exactlin import Q, act_on_output, as_tensor, identity, zeros
from .homassoc import HomAssociativeAlgebra


def _diag(values):
    out = zeros((len(values), len(values)))
    for i, v in enumerate(values):
        out[i, i] = Q(v)
    return out


def truncated_polynomial(k: int, lam=1) -> HomAssociativeAlgebra:
    """K[x]/(x^k) in the basis 1, x, ..., x^(k-1), Yau-twisted by x -> lam x."""
    lam = Q(lam)
    mu = zeros((k, k, k))
    for a in range(k):
        for b in range(k):
            if a + b < k:
                mu[a, b, a + b] = Q(1)
    alpha = _diag([lam ** a for a in range(k)])
    name = f"trunc{k}" if lam == 1 else f"trunc{k}-yau{lam}"
    return HomAssociativeAlgebra(act_on_output(mu, alpha), alpha, name)


def ground_field() -> HomAssociativeAlgebra:
    return HomAssociativeAlgebra(as_tensor([[[1]]]), as_tensor([[1]]), "field")


def dual_numbers(lam=1) -> HomAssociativeAlgebra:
    A = truncated_polynomial(2, lam)
    name = "dual" if Q(lam) == 1 else f"dual-yau{Q(lam)}"
    return HomAssociativeAlgebra(A.mu, A.alpha, name)


def perturbed_dual(lam=2) -> HomAssociativeAlgebra:
    """Yau-twisted dual numbers with mu(e2, e2) = e1: neither multiplicative
    nor hom-associative."""
    A = dual_numbers(lam)
    mu = A.mu.copy()
    mu[1, 1, 0] = Q(1)
    return HomAssociativeAlgebra(mu, A.alpha, f"perturbed-dual-yau{Q(lam)}")


def skew_algebra() -> HomAssociativeAlgebra:
    """Non-associative product with alpha = id, so multiplicativity holds but
    (e1 e1) e1 != e1 (e1 e1)."""
    mu = zeros((2, 2, 2))
    mu[0, 0, 0] = Q(1)
    mu[0, 0, 1] = Q(1)
    mu[0, 1, 1] = Q(1)
    return HomAssociativeAlgebra(mu, identity(2), "skew")


HOM_ASSOCIATIVE = {
    "field": ground_field,
    "dual": dual_numbers,
    "dual-yau2": lambda: dual_numbers(2),
    "trunc3": lambda: truncated_polynomial(3),
    "trunc3-yau2": lambda: truncated_polynomial(3, 2),
}

HOM_ASSOCIATIVE_INVALID = {
    "perturbed-dual-yau2": perturbed_dual,
    "skew": skew_algebra,
}


def hom_associative(name: str) -> HomAssociativeAlgebra:
    table = {**HOM_ASSOCIATIVE, **HOM_ASSOCIATIVE_INVALID}
    if name not in table:
        raise KeyError(f"unknown hom-associative fixture {name!r}")
    A = table[name]()
    return HomAssociativeAlgebra(A.mu, A.alpha, name)


def bimodule_dialgebra(swap: bool = False):
    """``a -| b = phi(b) a`` and ``a |- b = phi(a) b`` with
    ``phi(m) = m1 + m2``; optionally Yau-twisted by the coordinate swap."""
    from .homdialg import HomDialgebra

    dashv = zeros((2, 2, 2))
    vdash = zeros((2, 2, 2))
    for i in range(2):
        for j in range(2):
            dashv[i, j, i] = Q(1)
            vdash[i, j, j] = Q(1)
    if not swap:
        return HomDialgebra(dashv, vdash, identity(2), "bimodule")
    alpha = as_tensor([[0, 1], [1, 0]])
    return HomDialgebra(act_on_output(dashv, alpha), act_on_output(vdash, alpha), alpha, "bimodule-swap")


def diagonal_dialgebra(A: HomAssociativeAlgebra):
    from .homdialg import HomDialgebra
    return HomDialgebra(A.mu, A.mu, A.alpha, f"diag-{A.name}")


def perturbed_bimodule():
    """The bimodule dialgebra with e2 |- e2 = e1 + e2: multiplicative (alpha
    is the identity) but not diassociative."""
    from .homdialg import HomDialgebra

    D = bimodule_dialgebra()
    vdash = D.vdash.copy()
    vdash[1, 1, 0] = Q(1)
    return HomDialgebra(D.dashv, vdash, D.alpha, "perturbed-bimodule")


HOM_DIALGEBRA = {
    "diag-dual": lambda: diagonal_dialgebra(dual_numbers()),
    "diag-dual-yau2": lambda: diagonal_dialgebra(dual_numbers(2)),
    "bimodule": bimodule_dialgebra,
    "bimodule-swap": lambda: bimodule_dialgebra(swap=True),
}

HOM_DIALGEBRA_INVALID = {
    "perturbed-bimodule": perturbed_bimodule,
}


def hom_dialgebra(name: str):
    from .homdialg import HomDialgebra

    table = {**HOM_DIALGEBRA, **HOM_DIALGEBRA_INVALID}
    if name not in table:
        raise KeyError(f"unknown hom-dialgebra fixture {name!r}")
    D = table[name]()
    return HomDialgebra(D.dashv, D.vdash, D.alpha, name)


def fixture(name: str):
    if name in HOM_ASSOCIATIVE or name in HOM_ASSOCIATIVE_INVALID:
        return hom_associative(name)
    if name in HOM_DIALGEBRA or name in HOM_DIALGEBRA_INVALID:
        return hom_dialgebra(name)
    raise KeyError(f"unknown fixture {name!r}")


VALID = list(HOM_ASSOCIATIVE) + list(HOM_DIALGEBRA)
INVALID = list(HOM_ASSOCIATIVE_INVALID) + list(HOM_DIALGEBRA_INVALID)
