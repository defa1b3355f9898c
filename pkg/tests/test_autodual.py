import pytest

from sextic19.autodual import certify_autodual, dual_degree_law


def test_degree_law_all_curves(corpus):
    for rec in corpus:
        deg, predicted = dual_degree_law(rec)
        assert deg == predicted, (rec.id, deg, predicted)


def test_case33_dual_degree(by_id):
    assert dual_degree_law(by_id[33]) == (5, 5)


@pytest.mark.parametrize("rid", [26, 36, 38])
def test_autodual_certificates(by_id, rid):
    rep = certify_autodual(by_id[rid])
    assert rep["ok"], rep.get("error", rep)
    assert rep["dual_degree"] == 6
    assert rep["multiset_equal"]
    assert sorted(rep["dual_multiset"]) == sorted(by_id[rid].multiset)
