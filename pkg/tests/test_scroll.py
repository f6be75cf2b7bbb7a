import itertools
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from weierext.cohomology import CohomologyAnswer, GenericityPolicy, surface_h
from weierext.lattice import DivisorClass, HypothesisError, SurfaceData
from weierext.scroll import (
    SplitBundle,
    scroll_h,
    scroll_serre_dual,
    sym_power,
    verify_scroll_claims,
    weierstrass_bundle,
    zak_nonextendable,
)

bundles = st.builds(
    SplitBundle,
    st.lists(st.integers(-6, 6), min_size=3, max_size=3).map(tuple),
    st.integers(0, 2),
)


def sym_by_exponents(degrees, u):
    # sum_i m_i d_i over exponent vectors with sum m_i = u
    return Counter(
        sum(m * d for m, d in zip(ms, degrees))
        for ms in itertools.product(range(u + 1), repeat=len(degrees))
        if sum(ms) == u
    )


@given(bundles, st.integers(0, 6))
def test_sym_power_against_exponents(E, u):
    assert sym_power(E, u).multiset() == sym_by_exponents(E.summand_degrees, u)
    assert sym_power(E, u).rank == (u + 1) * (u + 2) // 2


def test_sym_power_examples():
    E = SplitBundle((0, -2, -3), 0)
    assert sym_power(E, 1) == E
    assert sym_power(E, 0).summand_degrees == (0,)
    assert sorted(sym_power(E, 2).summand_degrees) == [-6, -5, -4, -3, -2, 0]


def test_weierstrass_bundle():
    E = weierstrass_bundle(SurfaceData(2, 3))
    assert E.multiset() == Counter([0, -6, -9]) and E.det_degree == -15


@pytest.mark.parametrize("policy", list(GenericityPolicy))
def test_serre_duality_independent_branches(policy):
    mismatches = []
    for g in range(3):
        for n in (1, 2):
            E = SplitBundle((0, -2 * n, -3 * n), g)
            for u, m, q in itertools.product(range(-6, 7), range(-20, 21), range(4)):
                du, dm = scroll_serre_dual(u, m, E)
                if scroll_h(u, m, E, q, policy) != scroll_h(du, dm, E, 3 - q, policy):
                    mismatches.append((g, n, u, m, q))
    assert mismatches == []


@given(bundles, st.integers(0, 5), st.integers(-20, 20))
def test_chi_additivity(E, u, m):
    hs = [scroll_h(u, m, E, q) for q in range(4)]
    chi = sum((-1) ** q * h.value for q, h in enumerate(hs))
    assert chi == sum(m + d + 1 - E.base_genus for d in sym_power(E, u).summand_degrees)


def test_scroll_h_examples():
    E = weierstrass_bundle(SurfaceData(0, 1))
    for m in range(-10, 10):
        assert all(scroll_h(-1, m, E, q) == CohomologyAnswer.exact(0) for q in range(4))
    assert all(scroll_h(0, -1, E, q).value == 0 for q in range(4))
    # u = 2, deg A large: H^2(O_Y(-A)) = 0
    assert scroll_h(-2, -50, E, 2).value == 0


def test_scroll_rejects_rank():
    with pytest.raises(ValueError):
        scroll_h(0, 0, SplitBundle((0, 1), 0), 0)


def test_claims_rational_example():
    report = verify_scroll_claims(SurfaceData(0, 1), 6, 8)
    assert all(report.claims.values()) and report.tangent_h1_vanishes
    assert report.to_dict()["tangent_h1_vanishes"] is True


def test_claims_elliptic_base_generic():
    report = verify_scroll_claims(SurfaceData(1, 1), 6, 7, GenericityPolicy.ASSUME_GENERIC)
    assert report.tangent_h1_vanishes


def test_rational_exception_is_a_real_obstruction():
    with pytest.raises(HypothesisError) as err:
        verify_scroll_claims(SurfaceData(0, 1), 6, 7)
    assert err.value.hypothesis == "b != a + 1 if (n, g) = (1, 0)"
    assert "(a, b, n) ≠ (6, 7, 1)" in str(err.value)
    # the vanishing it guards does fail there: h^1 of Sym^2 E (2K_B + L + M)
    E = weierstrass_bundle(SurfaceData(0, 1))
    u, b = 2, 7
    assert scroll_h(-u - 3, 2 - b - 6, E, 2).value > 0


@pytest.mark.parametrize("a, b", [(5, 20), (4, 20), (3, 20), (6, 6)])
def test_claim_hypotheses(a, b):
    with pytest.raises(HypothesisError):
        verify_scroll_claims(SurfaceData(1, 1), a, b)


@pytest.mark.parametrize("policy", list(GenericityPolicy))
def test_claims_hold_on_grid(policy):
    failing = []
    for g, n, u in itertools.product(range(4), range(1, 4), range(2, 5)):
        a = 3 * u
        for b in range(a * n + 1, a * n + 41):
            if (n, g) == (1, 0) and b == a + 1:
                continue
            if not verify_scroll_claims(SurfaceData(g, n), a, b, policy).tangent_h1_vanishes:
                failing.append((g, n, a, b))
    assert failing == []


def test_normal_bundle_class_vanishing():
    for g, n, u in itertools.product(range(3), range(1, 4), range(2, 6)):
        for b in range(max(3 * u * n + 1, 6 * n + 1), 3 * u * n + 30):
            d = DivisorClass(9 - 3 * u, 6 * n - b)
            assert d.alpha <= 3
            assert surface_h(d, SurfaceData(g, n), 0) == CohomologyAnswer.exact(0)


@pytest.mark.parametrize(
    "g, n, a, b, expected",
    [(0, 1, 6, 8, True), (2, 1, 9, 10, True), (0, 1, 5, 6, False), (0, 1, 6, 7, False)],
)
def test_zak(g, n, a, b, expected):
    assert zak_nonextendable(SurfaceData(g, n), a, b) is expected
