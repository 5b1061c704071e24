import numpy as np
import pytest
from hypothesis import given, strategies as st

import oracles
from homga import fixtures as fx
from homga import homassoc as ha
from homga.cohomology import HochschildComplex
from homga.exactlin import Q, as_tensor
from homga.harness import make_rng, random_cochain

VALID = list(fx.HOM_ASSOCIATIVE)


def rand(A, n, seed):
    return random_cochain(HochschildComplex(A), n, make_rng(seed, A.name, n), 3)


def as_frac(c):
    return oracles.frac_tensor(c.coeffs)


@pytest.mark.parametrize("name", VALID)
def test_fixtures_validate(name):
    assert ha.validate_hom_algebra(fx.hom_associative(name)) == []


def test_perturbed_fixture_reports_both_axioms():
    report = ha.validate_hom_algebra(fx.hom_associative("perturbed-dual-yau2"))
    assert {v.identity for v in report} == {"multiplicativity", "hom-associativity"}
    v = next(v for v in report if v.identity == "multiplicativity")
    assert v.basis == (1, 1)
    assert "(e2, e2)" in str(v)


def test_skew_is_multiplicative_but_not_associative():
    report = ha.validate_hom_algebra(fx.hom_associative("skew"))
    assert report and all(v.identity == "hom-associativity" for v in report)


def test_yau_twist_lambda_one_is_untwisted():
    A = fx.truncated_polynomial(2, 1)
    B = fx.hom_associative("dual")
    assert np.array_equal(A.mu, B.mu) and np.array_equal(A.alpha, B.alpha)


@pytest.mark.parametrize("name", VALID)
@pytest.mark.parametrize("n", [1, 2, 3])
def test_delta_matches_oracle(name, n):
    A = fx.hom_associative(name)
    f = rand(A, n, 11)
    want = oracles.twisted_delta(oracles.frac_tensor(A.mu), oracles.frac_tensor(A.alpha), as_frac(f), n)
    assert oracles.flatten(as_frac(ha.hochschild_delta(f))) == oracles.flatten(want)


@pytest.mark.parametrize("name", ["dual-yau2", "trunc3-yau2"])
@given(m=st.integers(1, 3), n=st.integers(1, 2), data=st.data())
def test_partial_composition_matches_oracle(name, m, n, data):
    A = fx.hom_associative(name)
    seed = data.draw(st.integers(0, 1000))
    f, g = rand(A, m, seed), rand(A, n, seed + 1)
    i = data.draw(st.integers(1, m))
    want = oracles.partial(as_frac(f), m, as_frac(g), n, i, oracles.frac_tensor(A.alpha))
    assert oracles.flatten(as_frac(ha.partial_composition(f, g, i))) == oracles.flatten(want)


@pytest.mark.parametrize("name", ["dual", "dual-yau2", "trunc3-yau2"])
def test_cup_product_and_dot_sign(name):
    A = fx.hom_associative(name)
    al = oracles.frac_tensor(A.alpha)
    for m in (1, 2, 3):
        for n in (1, 2):
            f, g = rand(A, m, m), rand(A, n, 10 + n)
            want = oracles.cup(oracles.frac_tensor(A.mu), al, as_frac(f), m, as_frac(g), n)
            assert oracles.flatten(as_frac(ha.cup_product(f, g))) == oracles.flatten(want)
            dot = ha.dot_product(f, g)
            cup = ha.cup_product(f, g)
            assert dot == (cup if (m * n) % 2 == 0 else -cup)


@pytest.mark.parametrize("name", ["dual", "trunc3-yau2"])
def test_bracket_matches_oracle(name):
    A = fx.hom_associative(name)
    al = oracles.frac_tensor(A.alpha)
    for m, n in [(1, 1), (2, 1), (2, 2), (3, 2)]:
        f, g = rand(A, m, 3 * m), rand(A, n, 5 * n)
        fg = oracles.gerstenhaber_circle(as_frac(f), m, as_frac(g), n, al)
        gf = oracles.gerstenhaber_circle(as_frac(g), n, as_frac(f), m, al)
        s = (-1) ** ((m - 1) * (n - 1))
        want = [a - s * b for a, b in zip(fg, gf)]
        assert oracles.flatten(as_frac(ha.gerstenhaber_bracket(f, g))) == want


def test_mu_mu_expansion_matches_associator():
    A = fx.hom_associative("dual-yau2")
    mu, ident = A.mu_cochain, A.identity_cochain
    expansion = ha.gamma_alpha(mu, [mu, ident]) - ha.gamma_alpha(mu, [ident, mu])
    assert ha.brace(mu, [mu]) == expansion
    assert ha.brace(mu, [mu]).is_zero()


@pytest.mark.parametrize("name", fx.INVALID[:2])
def test_mu_mu_nonzero_on_invalid(name):
    A = fx.hom_associative(name)
    sq = ha.brace(A.mu_cochain, [A.mu_cochain])
    left, right = ha.hom_associator(A)
    assert not sq.is_zero()
    assert np.array_equal(sq.coeffs, right - left)


def test_brace_terms_signs():
    # {mu}{mu}: mu in slot 1 with no sign, slot 2 with sign -1
    assert list(ha.brace_terms(2, [2])) == [((0,), 1), ((1,), -1)]
    # two degree-1 arguments never pick up a sign
    assert all(s == 1 for _, s in ha.brace_terms(3, [1, 1]))


def test_brace_arity_error():
    A = fx.hom_associative("dual")
    f = rand(A, 1, 1)
    with pytest.raises(ha.ArityError):
        ha.brace(f, [f, f])


def test_brace_empty_is_identity():
    A = fx.hom_associative("trunc3")
    f = rand(A, 2, 4)
    assert ha.brace(f, []) == f


@pytest.mark.parametrize("name", VALID)
def test_d_squared_zero(name):
    A = fx.hom_associative(name)
    for n in (1, 2, 3):
        f = rand(A, n, 7)
        assert ha.differential_d(ha.differential_d(f)).is_zero()
        assert ha.hochschild_delta(ha.hochschild_delta(f)).is_zero()


def test_d_is_signed_delta_on_random():
    A = fx.hom_associative("trunc3-yau2")
    for n in (1, 2, 3, 4):
        f = rand(A, n, n)
        sign = 1 if n % 2 else -1
        d, delta = ha.differential_d(f), ha.hochschild_delta(f)
        assert d == (delta if sign > 0 else -delta)


def test_checked_constructor_rejects_incompatible():
    A = fx.hom_associative("dual-yau2")
    bad = np.zeros((2, 2), dtype=object)
    bad[0, 1] = Q(1)  # e1 -> e2 does not commute with diag(1, 2)
    with pytest.raises(ValueError):
        ha.Cochain.checked(A, bad)
    ok = ha.Cochain.checked(A, as_tensor([[1, 0], [0, 3]]))
    assert ha.is_alpha_compatible(ok)


def test_projected_constructor():
    A = fx.hom_associative("dual-yau2")
    t = as_tensor([[1, 5], [7, 3]])
    p = ha.Cochain.projected(A, t)
    assert ha.is_alpha_compatible(p)
    assert p.coeffs[0, 0] == 1 and p.coeffs[1, 1] == 3 and p.coeffs[0, 1] == 0 and p.coeffs[1, 0] == 0
    assert ha.Cochain.projected(A, p.coeffs) == p


def test_cochain_arithmetic_and_call():
    A = fx.hom_associative("dual")
    f = rand(A, 2, 1)
    assert (f + f) == 2 * f
    assert (f - f).is_zero()
    assert f(0, 1) == tuple(f.coeffs[0, 1])
    with pytest.raises(ValueError):
        f + rand(A, 1, 1)
