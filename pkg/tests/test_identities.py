import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rankcrank.identities import (
    BaileyPair,
    bailey_check,
    bailey_transform,
    check_bivariate_identity_32,
    check_bivariate_identity_35,
    check_classical_degeneration,
    check_classical_tables,
    check_corollary_52,
    check_corollary_53,
    check_corollary_54,
    check_crank_gf,
    check_fg,
    check_odd_vanishing,
    check_prop_51,
    check_rank_gf,
    check_theorem_11,
    check_theorem_22,
    check_theorem_26,
    check_theorem_28,
    classical_gf_eta,
    classical_gf_mu,
    compare,
    crank_pair,
    cs2_series,
    first_mismatch,
    gf_eta_rhs,
    gf_mu_rhs,
    multisum_core,
    rank_pair,
    rs1_series,
    table_to_zq,
)
from rankcrank.moments import symmetrized_series
from rankcrank.partitions import table_MS2, table_NS1
from rankcrank.qfunctions import pochhammer, pochhammer_scaled
from rankcrank.series import QSeries, ZQSeries

from oracles import geometric, multisum_chains


def bump(s):
    """Add 1 to the q^1 coefficient of a QSeries."""
    return s.with_coefficient(1, s[1] + 1)


def test_rs1_and_cs2_examples():
    rs = rs1_series(1, 3)
    assert rs.slices[1] == {0: 1}
    assert rs.slices[2] == {1: 1, -1: 1, 0: -1}
    cs = cs2_series(1, 2)
    assert cs.slices[1] == {1: 1, -1: 1, 0: -1}
    for N in range(1, 4):
        assert cs2_series(N, 5).slices[0] == {0: 1}


@pytest.mark.parametrize("N", range(1, 5))
def test_bivariate_series_match_tables(N):
    Q = 16
    assert rs1_series(N, Q) == table_to_zq(table_NS1(N, Q), Q)
    assert cs2_series(N, Q) == table_to_zq(table_MS2(N, Q), Q)
    assert check_rank_gf(N, Q).passed and check_crank_gf(N, Q).passed


@pytest.mark.parametrize("N,Q", [(1, 10), (3, 20)])
def test_bivariate_partial_fraction_identities(N, Q):
    assert check_bivariate_identity_32(N, Q).passed
    assert check_bivariate_identity_35(N, Q).passed


def test_closed_form_examples():
    assert list(gf_mu_rhs(1, 1, 4)) == [0, 1, 3, 6, 10]
    assert gf_eta_rhs(1, 1, 2)[2] == 1
    for N in range(1, 6):
        assert gf_eta_rhs(N, 1, 5)[1] == 0


def test_eta_mu_closed_form_checks():
    r = check_theorem_26(1, 1, 20)
    assert r.passed
    assert list(gf_mu_rhs(1, 1, 20))[:4] == [0, 1, 3, 6]
    assert check_theorem_22(3, 2, 25).passed


def test_multisum_examples():
    Q = 12
    q = QSeries.monomial(1, Q)
    one_minus_q = QSeries.from_poly([1, -1], Q)
    one_minus_q2 = QSeries.from_poly([1, 0, -1], Q)
    assert multisum_core(1, 1, Q) == q * (one_minus_q ** 2).invert()
    assert multisum_core(2, 1, Q) == q * (one_minus_q ** 2).invert() + q * q * (one_minus_q2 ** 2).invert()
    assert multisum_core(1, 2, Q) == q * q * (one_minus_q ** 4).invert()
    with pytest.raises(ValueError):
        multisum_core(1, 0, Q)
    with pytest.raises(ValueError):
        multisum_core(1, 1, Q, weight="bogus")


@pytest.mark.parametrize("N", range(1, 5))
@pytest.mark.parametrize("k", range(1, 4))
def test_multisum_matches_chain_enumeration(N, k):
    Q = 15
    assert list(multisum_core(N, k, Q)) == multisum_chains(N, k, Q)
    poch = lambda n: list(pochhammer(n, Q))  # noqa: E731
    assert list(multisum_core(N, k, Q, weight="pochhammer")) == multisum_chains(N, k, Q, poch)


def test_weighted_multisum_examples():
    Q = 20
    rhs = multisum_core(1, 1, Q, weight="pochhammer") * pochhammer(1, Q).invert()
    assert list(rhs) == list(range(Q + 1))
    rhs4 = multisum_core(4, 1, Q, weight="pochhammer") * pochhammer(4, Q).invert()
    assert rhs4[4] == 10
    assert check_theorem_28(1, 1, Q).passed
    assert check_theorem_28(3, 2, Q).passed


def test_multisum_closed_forms():
    for N in (1, 2, 3):
        for k in (1, 2):
            assert check_corollary_52(N, k, 18).passed
            assert check_corollary_53(N, k, 18).passed
            assert check_corollary_53(N, k, 18, against="closed-form").passed
            assert check_corollary_54(N, k, 18).passed
    with pytest.raises(ValueError):
        check_corollary_53(1, 1, 5, against="nope")


def test_spt_moment_identity():
    assert check_theorem_11(5, 20).passed


def test_bailey_examples():
    Q = 10
    cp, rp = crank_pair(Q), rank_pair(Q)
    one_minus_q = QSeries.from_poly([1, -1], Q)
    lhs = (one_minus_q ** 2).invert() - QSeries.from_poly([1, 1], Q) * (
        one_minus_q * QSeries.from_poly([1, 0, -1], Q)).invert()
    assert lhs == QSeries.zero(Q) == cp.beta(1)
    assert one_minus_q * (one_minus_q ** 2).invert() == rp.beta(1)
    for pair in (cp, rp):
        assert pair.alpha(0) == pair.beta(0) == QSeries.one(Q)
        assert bailey_check(pair, 8).passed


def test_bailey_transform_examples():
    Q = 20
    t1 = bailey_transform(crank_pair(Q), 2, 3)
    t2 = bailey_transform(rank_pair(Q), -1, 2)
    for t in (t1, t2):
        assert t.alpha(0) == t.beta(0) == QSeries.one(Q)
        assert bailey_check(t, 6).passed
    with pytest.raises(ZeroDivisionError):
        bailey_transform(crank_pair(Q), 0, 2)


@given(st.fractions(min_value=-5, max_value=5, max_denominator=5),
       st.fractions(min_value=-5, max_value=5, max_denominator=5),
       st.sampled_from(["crank", "rank"]))
@settings(max_examples=20, deadline=None)
def test_bailey_transform_property(r1, r2, kind):
    if r1 == 0 or r2 == 0:
        return
    base = crank_pair(12) if kind == "crank" else rank_pair(12)
    assert bailey_check(bailey_transform(base, r1, r2), 4).passed


def test_bailey_general_a():
    # the unit pair relative to a: alpha_0 = beta_0 = 1 and the rest follow from the defining sum
    Q, a = 10, Fraction(1, 2)
    base = BaileyPair("delta", Q, lambda n: QSeries.one(Q) if n == 0 else QSeries.zero(Q),
                      lambda n: _delta_beta(n, a, Q), a)
    assert bailey_check(base, 5).passed
    assert bailey_check(bailey_transform(base, 3, Fraction(-2, 7)), 4).passed


def _delta_beta(n, a, Q):
    return (pochhammer(n, Q) * pochhammer_scaled(a, 1, n, Q)).invert()


def test_chain_sum_bailey_identity():
    assert check_prop_51(crank_pair(15), 1, 1).passed
    assert check_prop_51(rank_pair(15), 1, 2).passed
    assert check_prop_51(rank_pair(25), 3, 3).passed
    with pytest.raises(ValueError):
        check_prop_51(BaileyPair("a=2", 10, crank_pair(10).alpha, crank_pair(10).beta, 2), 1, 1)


def test_classical_examples():
    assert classical_gf_eta(1, 10)[4] == 10
    assert classical_gf_mu(1, 10)[4] == 20
    diff = classical_gf_mu(1, 10) - classical_gf_eta(1, 10)
    assert list(diff)[1:6] == [1, 3, 5, 10, 14]
    assert all(r.passed for r in check_classical_degeneration(6, 2, 12))
    assert all(r.passed for r in check_classical_tables(6, 12))


def test_mu_closed_form_at_cap_one():
    # at N = 1 the closed form simplifies to q/(1-q)^3
    assert list(gf_mu_rhs(1, 1, 8)) == [0] + geometric(1, 3, 7)


def test_fg_and_odd():
    for t in (table_NS1(3, 15), table_MS2(3, 15)):
        for k in (1, 2, 3):
            assert all(r.passed for r in check_fg(t, k, 15))
        assert check_odd_vanishing(t, 3, 15).passed
    with pytest.raises(ValueError):
        check_odd_vanishing(table_NS1(1, 3), 2, 3)


# -- report plumbing -----------------------------------------------------------

def test_comparison_is_symmetric():
    a = QSeries.from_poly([1, 2, 3], 4)
    b = QSeries.from_poly([1, 2, 4], 4)
    ab = first_mismatch(a, b)
    ba = first_mismatch(b, a)
    assert (ab.degree, ab.lhs, ab.rhs) == (2, 3, 4)
    assert (ba.degree, ba.lhs, ba.rhs) == (2, 4, 3)
    assert first_mismatch(a, a) is None
    with pytest.raises(ValueError):
        first_mismatch(a, QSeries.one(3))


@pytest.mark.parametrize("N,nu", [(1, 1), (3, 2)])
def test_swapping_sides_keeps_verdict(N, nu):
    Q = 15
    lhs = symmetrized_series(table_MS2(N, Q), 2 * nu, Q)
    rhs = gf_mu_rhs(N, nu, Q)
    assert compare("x", {}, lhs, rhs, 0.0).passed == compare("x", {}, rhs, lhs, 0.0).passed is True
    assert compare("x", {}, bump(lhs), rhs, 0.0).passed == compare("x", {}, rhs, bump(lhs), 0.0).passed is False


def test_report_serialization():
    r = check_theorem_26(1, 1, 6, tamper=bump)
    assert not r.passed
    data = r.to_json()
    assert data["status"] == "fail"
    assert data["first_mismatch"] == {"degree": 1, "lhs": 2, "rhs": 1}
    assert json.loads(json.dumps(data)) == data
    assert "first mismatch at q^1" in r.to_text()
    assert "elapsed" not in data and "elapsed" in r.to_json(timing=True)


# -- negative controls ------------------------------------------------------------

def zq_bump(s):
    return s + ZQSeries.from_qseries(QSeries.monomial(2, s.order), z_exponent=1)


@pytest.mark.parametrize("make", [
    lambda: check_bivariate_identity_32(2, 8, tamper=zq_bump),
    lambda: check_bivariate_identity_35(2, 8, tamper=zq_bump),
    lambda: check_rank_gf(2, 8, table=table_NS1(2, 8).perturbed(1, 3)),
    lambda: check_crank_gf(2, 8, table=table_MS2(2, 8).perturbed(0, 2)),
    lambda: check_theorem_22(2, 1, 8, table=table_NS1(2, 8).perturbed(2, 4)),
    lambda: check_theorem_26(2, 1, 8, table=table_MS2(2, 8).perturbed(2, 4)),
    lambda: check_theorem_28(2, 1, 8, crank_table=table_MS2(2, 8).perturbed(3, 5)),
    lambda: check_theorem_11(2, 8, rank_table=table_NS1(2, 8).perturbed(1, 2)),
    lambda: check_corollary_52(2, 1, 8, tamper=bump),
    lambda: check_corollary_53(2, 1, 8, table=table_MS2(2, 8).perturbed(2, 3)),
    lambda: check_corollary_53(2, 1, 8, against="closed-form", tamper=bump),
    lambda: check_corollary_54(2, 1, 8, tamper=bump),
    lambda: check_prop_51(rank_pair(10), 1, 2, tamper=bump),
    lambda: bailey_check(rank_pair(10), 4, tamper=lambda n, s: bump(s) if n == 3 else s),
    lambda: check_classical_degeneration(4, 1, 8, tamper=bump)[0],
    lambda: check_classical_tables(4, 8, tamper=zq_bump)[1],
    lambda: check_fg(table_MS2(2, 8), 1, 8, tamper=bump)[0],
    lambda: check_odd_vanishing(table_NS1(2, 8).perturbed(1, 3, 1), 1, 8),
])
def test_negative_controls(make):
    report = make()
    assert not report.passed
    assert report.first_mismatch is not None


def test_perturbed_bailey_pair_fails():
    base = rank_pair(10)
    broken = BaileyPair("rank-broken", 10, base.alpha,
                        lambda n: bump(base.beta(n)) if n == 2 else base.beta(n))
    report = bailey_check(broken, 4)
    assert not report.passed and report.first_mismatch.index == 2


def test_random_single_coefficient_tamper_is_caught():
    rng = random.Random(7)
    Q = 12
    for _ in range(10):
        deg, delta = rng.randrange(Q + 1), rng.choice([-2, -1, 1, 2])
        tamper = lambda s: s.with_coefficient(deg, s[deg] + delta)  # noqa: E731
        r = check_theorem_26(2, 1, Q, tamper=tamper)
        assert not r.passed and r.first_mismatch.degree == deg
