import random

import pytest

from sextic19.curve import (
    MoebiusMap,
    ParameterLocation,
    ProjectiveMap,
    RationalPlaneCurve,
    reparametrize,
)
from sextic19.numberfield import QQ
from sextic19.polynomial import UniPoly
from sextic19.singularity import (
    SingularityClaim,
    SingularityError,
    SingularityType,
    branch_type_at,
    certify,
    two_branch_type,
)

P = lambda *c: UniPoly.from_ints(QQ, c)


def test_type_invariants():
    for n in range(1, 20):
        st = SingularityType(n)
        assert st.mu == n
        assert st.delta == (n + 1) // 2
        assert st.branches == (1 if n % 2 == 0 else 2)
        assert st.mu == 2 * st.delta - st.branches + 1


@pytest.mark.parametrize("k", range(1, 10))
def test_standard_models(k):
    # (t^2, t^(2k+1), 1) has A_2k at t = 0
    curve = RationalPlaneCurve(
        QQ, P(0, 0, 1), P(*([0] * (2 * k + 1) + [1])), P(1)
    )
    assert branch_type_at(curve, QQ.zero, claimed=2 * k).n == 2 * k


def test_cusp():
    curve = RationalPlaneCurve(QQ, P(0, 0, 1), P(0, 0, 0, 1), P(1))
    assert branch_type_at(curve, QQ.zero).n == 2


def test_smooth_point_rejected():
    curve = RationalPlaneCurve(QQ, P(0, 1), P(0, 0, 1), P(1))
    with pytest.raises(SingularityError):
        branch_type_at(curve, QQ.zero)


def test_high_multiplicity_rejected():
    curve = RationalPlaneCurve(QQ, P(0, 0, 0, 1), P(0, 0, 0, 0, 1), P(1))
    with pytest.raises(SingularityError):
        branch_type_at(curve, QQ.zero)


def test_node_on_cubic():
    curve = RationalPlaneCurve(QQ, P(-1, 0, 1), P(0, -1, 0, 1), P(1))
    loc = ParameterLocation.at_pair(QQ.from_int(1), QQ.from_int(-1))
    assert two_branch_type(curve, loc).n == 1


def test_two_branch_images_differ():
    curve = RationalPlaneCurve(QQ, P(0, 0, 1), P(0, 1), P(1))
    loc = ParameterLocation.at_pair(QQ.from_int(1), QQ.from_int(2))
    with pytest.raises(SingularityError):
        two_branch_type(curve, loc)


def test_case3_types(by_id):
    rec = by_id[3]
    assert branch_type_at(rec.curve, "inf", claimed=2).n == 2
    assert two_branch_type(
        rec.curve, ParameterLocation.at_roots(rec.p), claimed=17
    ).n == 17


def test_two_branch_symmetric(by_id):
    curve = RationalPlaneCurve(QQ, P(-1, 0, 1), P(0, -1, 0, 1), P(1))
    a = ParameterLocation.at_pair(QQ.from_int(1), QQ.from_int(-1))
    b = ParameterLocation.at_pair(QQ.from_int(-1), QQ.from_int(1))
    assert two_branch_type(curve, a).n == two_branch_type(curve, b).n


def test_case25_certificate(by_id):
    rec = by_id[25]
    cert = certify(rec.curve, rec.claims, curve_id=25)
    assert cert.passed
    assert cert.checks["milnor_total"] == 19
    assert cert.checks["delta_total"] == 10
    assert cert.checks["implicit_degree"] == 6


def test_case25_swapped_locations_fail(by_id):
    rec = by_id[25]
    claims = [
        SingularityClaim(SingularityType(3),
                         ParameterLocation.at_roots(rec.p)),
        SingularityClaim(SingularityType(10),
                         ParameterLocation.at_infinity()),
        SingularityClaim(SingularityType(2),
                         ParameterLocation.at_value(QQ.zero)),
        SingularityClaim(SingularityType(4),
                         ParameterLocation.at_value(QQ.from_int(4))),
    ]
    cert = certify(rec.curve, claims, curve_id=25, implicit_check=False)
    assert not cert.passed
    bad = [v for v in cert.verdicts if not v.ok]
    assert len(bad) == 2


@pytest.mark.parametrize("seed", range(3))
def test_branch_type_invariance(by_id, seed):
    # the classified type is stable under projective maps of the plane and
    # Moebius changes of the parameter
    rng = random.Random(seed)
    rec = by_id[3]
    curve = rec.curve
    while True:
        rows = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
        try:
            T = ProjectiveMap.from_ints(QQ, rows)
            break
        except Exception:
            continue
    moved = curve.apply_projective(T)
    assert branch_type_at(moved, "inf", claimed=2).n == 2
    # shift the parameter so the pair location moves with it
    shift = rng.randint(1, 5)
    m = MoebiusMap.from_ints(QQ, 1, shift, 0, 1)   # t -> t + shift
    re = reparametrize(moved, m)
    shifted_p = rec.p.taylor_shift(QQ.from_int(shift))
    assert two_branch_type(
        re, ParameterLocation.at_roots(shifted_p), claimed=17
    ).n == 17


def test_certify_reports_locations(by_id):
    rec = by_id[3]
    cert = certify(rec.curve, rec.claims, curve_id=3, implicit_check=False)
    d = cert.to_dict()
    assert d["curve"] == 3
    assert all(v["ok"] for v in d["claims"])
    assert any("roots" in v["location"] for v in d["claims"])


def test_case37_odd_pair_is_node(by_id):
    rec = by_id[37]
    assert two_branch_type(rec.curve, rec.odd_claim.location, claimed=1).n == 1


def test_case1_certificate(by_id):
    rec = by_id[1]
    cert = certify(rec.curve, rec.claims, curve_id=1, implicit_check=False)
    assert cert.passed
    assert cert.checks["milnor_total"] == 19
    assert cert.checks["delta_total"] == 10
