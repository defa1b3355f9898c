import json

import pytest

from sextic19.database import (
    CorpusError,
    cross_check_record,
    corpus_sha256,
    default_corpus_path,
    load_corpus,
    roundtrip_identity,
)

CORPUS_SHA256 = (
    "3b399429f27952e5fce540dc6c586d1d5b8b696e5378a470864f3b47998b0d7d"
)


def test_loads_39_records(corpus):
    assert len(corpus) == 39
    assert [r.id for r in corpus] == list(range(1, 40))


def test_exactly_four_efields_differ(corpus):
    assert [r.id for r in corpus if r.flags["E_differs_from_F"]] == \
        [1, 16, 34, 36]


def test_expected_flags(corpus):
    assert [r.id for r in corpus if r.flags["has_symmetry"]] == [3, 28, 29, 37]
    assert [r.id for r in corpus if r.flags["autodual_claimed"]] == [26, 36, 38]
    assert [r.id for r in corpus if r.flags["has_alt_parametrization"]] == [16]
    assert [r.id for r in corpus if r.flags["has_printed_implicit"]] == [34, 36]


def test_multiset_sums(corpus):
    for rec in corpus:
        assert sum(rec.multiset) == 19
        assert len([n for n in rec.multiset if n % 2 == 1]) == 1
        delta = sum((n + 1) // 2 for n in rec.multiset)
        assert delta == 10


def test_claims_cover_multiset(corpus):
    for rec in corpus:
        claimed = [rec.odd_claim.stype.n]
        for c in rec.even_claims:
            claimed.extend([c.stype.n] * c.point_count())
        assert sorted(claimed) == sorted(rec.multiset), rec.id


def test_checksum_frozen():
    assert corpus_sha256() == CORPUS_SHA256


def test_roundtrip():
    assert roundtrip_identity()


def test_record3_fields(by_id):
    rec = by_id[3]
    assert rec.p.to_str() == "t^2 - 3"
    assert rec.field == __import__("sextic19.numberfield",
                                   fromlist=["QQ"]).QQ


def test_record36_field_descriptor(by_id):
    rec = by_id[36]
    assert rec.flags["E_differs_from_F"]
    assert rec.field_F_desc["generators"] == []
    assert rec.field_E_desc["generators"][0]["minpoly"] == ["1", "1", "1"]


def test_truncated_file_rejected(tmp_path):
    with open(default_corpus_path()) as fh:
        text = fh.read()
    broken = tmp_path / "broken.json"
    broken.write_text(text[: len(text) // 2])
    with pytest.raises(Exception):
        load_corpus(str(broken))


def test_schema_violation_rejected(tmp_path):
    doc = json.load(open(default_corpus_path()))
    doc["curves"][0]["p"] = 12345
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    with pytest.raises(CorpusError):
        load_corpus(str(bad))


def test_invariant_violation_rejected(tmp_path):
    doc = json.load(open(default_corpus_path()))
    doc["curves"][2]["multiset"] = [17, 1]    # sums to 18
    doc["curves"][2]["odd"]["n"] = 1
    bad = tmp_path / "badsum.json"
    bad.write_text(json.dumps(doc))
    with pytest.raises(CorpusError) as err:
        load_corpus(str(bad))
    assert "19" in str(err.value)


def test_cross_check_simple_records(corpus):
    for rec in corpus[:6]:
        rep = cross_check_record(rec)
        assert rep["ok"], rep


def test_cross_check_printed_implicits(by_id):
    for rid in (34, 36):
        rep = cross_check_record(by_id[rid])
        assert rep["ok"], rep
        assert rep["checks"]["printed_implicit_matches"]["ok"]


def test_cross_check_alt_parametrization(by_id):
    rep = cross_check_record(by_id[16])
    assert rep["ok"], rep
    detail = rep["checks"]["alt_parametrization_same_curve"]["detail"]
    assert "diagonal" in detail or "unit" in detail


def test_cross_check_every_record(corpus):
    for rec in corpus:
        rep = cross_check_record(rec)
        assert rep["ok"], (rec.id, rep)
