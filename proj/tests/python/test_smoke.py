import cmath

import pytest

import qdh


def test_qpoch():
    assert qdh.qpoch(0.5, 0.5, 2) == pytest.approx(0.5 * 0.75)
    assert abs(qdh.qpoch_inf(0.0, 0.3) - 1.0) < 1e-15


def test_q_binomial():
    q, a, z = 0.5, 0.3, 0.4
    lhs = qdh.phi([a], [], q, z)
    rhs = qdh.qpoch_inf(a * z, q) / qdh.qpoch_inf(z, q)
    assert abs(lhs - rhs) < 1e-12 * abs(rhs)


def test_cdqh_poly_matches_explicit_sum():
    p = qdh.CDQHParams(0.5, 0.3, 0.4, 0.6, 0.7)
    z = complex(0.3, 0.2)
    for n in range(6):
        a = qdh.monic_poly(qdh.Family.CDQH, p.family(), z, n)
        b = qdh.explicit_poly(p, z, n)
        assert abs(a - b) <= 1e-10 * abs(a)


def test_cf_routes_agree():
    p = qdh.CDQHParams(0.5, 0.3, 0.4, 0.6, 0.7)
    z = complex(2.0, 1.0)
    ratio = qdh.cf(p, z)
    assert abs(qdh.cf(p, z, qdh.CfForm.Pincherle) - ratio) < 1e-9 * abs(ratio)
    truncated = 1 / qdh.cf_truncated(qdh.Family.CDQH, p.family(), z, 400)
    assert abs(truncated - ratio) < 1e-8 * abs(ratio)


def test_weight_positive():
    p = qdh.CDQHParams(0.5, 0.4, 0.4, 0.5, 0.4)
    for x in (-0.9, 0.0, 0.7):
        assert qdh.weight(p, x) > 0


def test_limit_poly_against_recurrence():
    params = qdh.FamilyParams(q=0.5, A=0.35, B=0.45)
    z = complex(0.8, -0.3)
    seq = qdh.forward_eval(qdh.Family.Wall, params, z, 0, 1, 6)
    for n in range(7):
        assert cmath.isclose(qdh.limit_poly(qdh.Family.Wall, params, z, n), seq[n], rel_tol=1e-11)


def test_fourth_limit_zeros_interlace():
    a, _ = qdh.fourth_limit_zeros(0.5, 0, 8)
    b, _ = qdh.fourth_limit_zeros(0.5, 1, 8)
    assert len(a) == 8 and all(x < 0 for x in a)
    assert qdh.interlaces(a, b)


def test_errors_carry_kind():
    with pytest.raises(qdh.Error) as info:
        qdh.qpoch(0.3, 1.5, 2)
    assert info.value.kind == "InvalidBase"
    with pytest.raises(qdh.Error):
        qdh.family_from_string("nosuch")


def test_run_check():
    reports = qdh.run_check("qbessel")
    assert len(reports) == 1
    assert reports[0]["pass"] is True
    assert "qbessel" in qdh.check_names()
