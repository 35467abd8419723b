import dataclasses
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chaingeo.configurations import (
    ChainConfig,
    Kind,
    assemble,
    build_ca,
    build_cb,
    chain_radius_ca,
    chain_radius_cb,
    incircle_delta,
    minus_sign_root,
    square_in_delta,
    verify_config,
)
from chaingeo.geom import Circle, Point
from chaingeo.qfield import QNum, qnum_sign, qnum_sqrt, qnum_to_float


def Q(p, q=0, n=1):
    return QNum(F(p), F(q), n)


def P(x, y, n=1):
    return Point(Q(x, 0, n), Q(y, 0, n))


# chain radii --------------------------------------------------------------

def test_chain_radius_cb_examples():
    assert chain_radius_cb(1, 1) == F(1, 4)
    assert chain_radius_cb(4, 1) == F(1, 9)
    b2 = chain_radius_cb(2, 1)
    assert b2 == Q(3, -2, 2)
    # value found by bisection on the tangency constraint
    assert qnum_to_float(b2) == pytest.approx(0.1715728753, abs=1e-10)


@pytest.mark.parametrize("n, a", [(0, 1), (-1, 1), (3, 0), (3, F(-1, 2))])
def test_chain_radius_cb_errors(n, a):
    with pytest.raises(ValueError):
        chain_radius_cb(n, a)


def test_chain_radius_cb_accepts_field_element():
    a = Q(1, 1, 2)
    b = chain_radius_cb(2, a)
    assert b * (QNum.sqrt_of(2) + 1) ** 2 == a


def test_chain_radius_ca_examples():
    assert chain_radius_ca(2, 1) == 4
    assert chain_radius_ca(3, 1) == 1
    assert chain_radius_ca(5, 1) == F(1, 4)


def test_chain_radius_ca_rejects_single_circle():
    with pytest.raises(ValueError):
        chain_radius_ca(1, 1)
    with pytest.raises(ValueError):
        chain_radius_ca(3, 0)


# builders -----------------------------------------------------------------

def test_build_cb_problem_instance():
    cfg = build_cb(1, 1)
    assert cfg.d == F(2, 5) and cfg.bc == F(2, 5)
    assert cfg.B == P(F(1, 5), F(2, 5))
    assert cfg.A == P(F(1, 5), 0)
    assert cfg.C == P(F(-1, 5), F(2, 5))


def test_build_cb_n4():
    cfg = build_cb(4, 1)
    assert cfg.d == F(1, 5) and cfg.bc == F(4, 5)


def test_build_cb_n5():
    cfg = build_cb(5, 1)
    expected_d = Q(F(14, 29), F(-4, 29), 5)
    assert cfg.d == expected_d
    assert cfg.d * (7 + 2 * QNum.sqrt_of(5)) == 2
    assert cfg.bc == 5 * expected_d
    # float cross-check from a 30-digit mpmath solve of the tangency system
    assert qnum_to_float(cfg.d) == pytest.approx(0.174335451379339, abs=1e-14)
    assert qnum_to_float(cfg.bc) == pytest.approx(0.871677256896697, abs=1e-14)


def test_build_cb_layout():
    cfg = build_cb(3, 1)
    assert cfg.kind is Kind.CB and len(cfg.outer) == 2 and len(cfg.chain) == 3
    b = cfg.b
    assert [c.center.x for c in cfg.chain] == [-2 * b, 0 * b, 2 * b]
    assert cfg.outer[0].center == Point(Q(-1, 0, 3), Q(1, 0, 3))


def test_build_ca_examples():
    c4 = build_ca(4, 1)
    assert c4.d == F(8, 13) and c4.bc == F(24, 13)
    c2 = build_ca(2, 1)
    assert c2.d == F(8, 5) and c2.bc == F(8, 5)
    c3 = build_ca(3, 1)
    assert c3.d == 1 and c3.bc == 2


def test_build_ca_rejects_n1():
    with pytest.raises(ValueError):
        build_ca(1, 1)


def test_build_cb_with_irrational_radius():
    cfg = build_cb(2, Q(1, 1, 2))
    assert verify_config(cfg).overall


def test_mixed_radicand_radius_rejected():
    with pytest.raises(ValueError):
        build_cb(3, Q(1, 1, 2))


# incircle and square ------------------------------------------------------

def test_incircle_examples():
    assert incircle_delta(1) == Circle(P(0, F(1, 4)), Q(F(1, 4)))
    assert incircle_delta(4) == Circle(P(0, 1), Q(1))
    assert incircle_delta(1) == build_cb(1, 1).chain[0]
    with pytest.raises(ValueError):
        incircle_delta(0)


def test_square_examples():
    sq = square_in_delta(1)
    assert sq.side == F(2, 5)
    assert sq.B == P(F(1, 5), F(2, 5))
    assert sq.A == P(F(1, 5), 0) and sq.D == P(F(-1, 5), 0) and sq.C == P(F(-1, 5), F(2, 5))
    assert square_in_delta(F(5, 2)).side == 1
    with pytest.raises(ValueError):
        square_in_delta(-1)


def test_square_rejected_root():
    # s = 2a also puts (s/2, s) on the right circle; it is the square outside the gap
    for a in (F(1), F(2, 3), F(7, 5)):
        s = 2 * a
        assert F(5, 4) * s * s - 3 * a * s + a * a == 0
        assert (s / 2 - a) ** 2 + (s - a) ** 2 == a * a
        assert square_in_delta(a).side != s


# verification -------------------------------------------------------------

def test_verify_cb7():
    report = verify_config(build_cb(7, F(3, 2)))
    assert report.overall
    assert len(report.entries) == 14


def test_verify_ca2():
    assert verify_config(build_ca(2, 1)).overall


@pytest.mark.parametrize("kind, n", [(Kind.CB, 5), (Kind.CA, 4), (Kind.CB, 1)])
def test_tampered_config_fails(kind, n):
    good = build_cb(n, 1) if kind is Kind.CB else build_ca(n, 1)
    bad = assemble(kind, n, good.a, good.b + F(1, 1000))
    report = verify_config(bad)
    assert not report.overall
    tangency = dict(report.entries)
    assert not tangency["beta1 touches " + ("alpha1" if kind is Kind.CB else "alpha") + " at C"]
    assert not tangency["betan touches " + ("alpha2" if kind is Kind.CB else "alpha") + " at B"]


def test_report_never_raises_on_garbage():
    cfg = build_cb(2, 1)
    broken = ChainConfig(**{**cfg.__dict__, "chain": cfg.chain[:1]})
    report = verify_config(broken)
    assert not report.overall


# properties ---------------------------------------------------------------

A_SAMPLES = [F(1), F(2, 3), F(7, 5), F(13, 4)]


def _scaled(cfg, lam):
    def sp(p):
        return Point(p.x * lam, p.y * lam)

    def sc(c):
        return Circle(sp(c.center), c.r * lam)

    return ChainConfig(
        kind=cfg.kind, n=cfg.n, a=cfg.a * lam, b=cfg.b * lam,
        outer=tuple(map(sc, cfg.outer)), chain=tuple(map(sc, cfg.chain)),
        A=sp(cfg.A), B=sp(cfg.B), C=sp(cfg.C), d=cfg.d * lam, bc=cfg.bc * lam,
    )


@settings(max_examples=40, deadline=None)
@given(
    st.integers(min_value=1, max_value=30),
    st.fractions(min_value=F(1, 10), max_value=10, max_denominator=12),
)
def test_scaling_covariance(n, lam):
    assert build_cb(n, lam) == _scaled(build_cb(n, 1), lam)
    if n >= 2:
        assert build_ca(n, lam) == _scaled(build_ca(n, 1), lam)


@pytest.mark.parametrize("n", range(1, 41))
def test_half_chord_closed_form(n):
    root = QNum.sqrt_of(n)
    for a in A_SAMPLES:
        cfg = build_cb(n, a)
        assert cfg.bc / 2 == cfg.a * n / (1 + (1 + root) ** 2)
        radical = qnum_sqrt((cfg.a * 2 - cfg.d) * cfg.d)
        assert radical is not None
        assert radical == cfg.a - cfg.bc / 2


@pytest.mark.parametrize("a", A_SAMPLES)
def test_square_corners_are_incircle_contacts(a):
    sq = square_in_delta(a)
    cfg = build_cb(1, a)
    assert sq.B == cfg.B and sq.C == cfg.C


@pytest.mark.parametrize("n", range(1, 60))
def test_minus_sign_root_is_rejected(n):
    for a in A_SAMPLES:
        b = chain_radius_cb(n, a)
        d_minus = minus_sign_root(n, a)
        diff = 2 * b - d_minus
        assert qnum_sign(diff) == -1
        root = QNum.sqrt_of(n)
        assert diff == 2 * b.lift(a) * (1 - 4 * root) / (n * n - n + 2 * root + 2)


def test_minus_sign_root_at_one_is_not_d():
    # the two candidate roots differ even for a single chain circle
    assert minus_sign_root(1, 1) == 2
    assert build_cb(1, 1).d == F(2, 5)


def test_json_roundtrip():
    for cfg in (build_cb(5, F(2, 3)), build_ca(4, 1)):
        data = cfg.to_json()
        assert set(data) == {"kind", "n", "a", "b", "outer", "chain", "points", "d", "bc", "report"}
        assert data["report"]["overall"] is True
        assert ChainConfig.from_json(data) == cfg



def test_replaced_config_is_audited_afresh():
    good = build_cb(4, 1)
    bad = dataclasses.replace(good, d=good.d + 1)
    assert verify_config(good).overall and not verify_config(bad).overall
