"""Candidate enumeration and the survey pipeline."""

import csv
import io
import json

import pytest

from freeperiod import (
    BoundMode,
    Candidate,
    CandidateRecord,
    FilterConfig,
    IntPoly,
    MurasugiHit,
    SurveyReport,
    candidate_record,
    construct_witness,
    cyclotomic,
    enumerate_candidates,
    factor_over_z,
    survey,
    verify_witness,
)
from freeperiod.lspace import _factor_candidate


def bag(fp):
    return dict(fp.factors)


# -- enumeration -----------------------------------------------------------


def test_counts_per_genus_and_total():
    cands = list(enumerate_candidates(8))
    assert len(cands) == 2 ** 8 - 1
    for g in range(1, 9):
        assert sum(c.genus == g for c in cands) == 2 ** (g - 1)


def test_candidate_invariants_exhaustive():
    for cand in enumerate_candidates(7):
        p = cand.poly
        assert int(p.degree) == 2 * cand.genus and p.lc == 1
        assert p(1) == 1
        assert tuple(p) == tuple(reversed(tuple(p)))
        support = [c for c in reversed(tuple(p)) if c]
        assert all(a == -b for a, b in zip(support, support[1:]))
        assert support[0] == 1


def test_stream_is_sorted_by_genus_then_exponents():
    cands = list(enumerate_candidates(6))
    keys = [(c.genus, c.exponents) for c in cands]
    assert keys == sorted(keys)


def test_from_gap_set_round_trip():
    cand = Candidate.from_gap_set(5, frozenset({9, 7, 6}))
    assert cand.exponents == (10, 9, 7, 6, 5, 4, 3, 1, 0)
    upper = frozenset(b for b in cand.exponents if cand.genus < b < 2 * cand.genus)
    assert Candidate.from_gap_set(5, upper) == cand


def test_validate_rejections():
    good = Candidate.from_gap_set(2, frozenset({3}))
    with pytest.raises(ValueError, match="genus must be positive"):
        Candidate(genus=0, exponents=(0,), poly=IntPoly.one())
    with pytest.raises(ValueError, match="symmetric"):
        Candidate(genus=3, exponents=(6, 5, 4, 1, 0), poly=good.poly)
    with pytest.raises(ValueError, match="strictly decrease"):
        Candidate(genus=2, exponents=(4, 3, 3, 1, 0), poly=good.poly)
    with pytest.raises(ValueError, match="does not match"):
        Candidate(genus=2, exponents=(4, 2, 0), poly=good.poly)


def test_top_gap_filter():
    kept = list(enumerate_candidates(4, FilterConfig(top_gap_1=True)))
    assert len(kept) == 8
    assert all(c.top_gap == 1 for c in kept)
    # genus 1 has top gap 1 automatically; above that the filter halves
    assert [sum(c.genus == g for c in kept) for g in (1, 2, 3, 4)] == [1, 1, 2, 4]


def test_custom_predicate_filter():
    keep = lambda c: c.poly[1] == 0
    kept = list(enumerate_candidates(4, FilterConfig(predicate=keep)))
    assert kept and all(c.poly[1] == 0 for c in kept)
    rep = survey(2, filters=FilterConfig(predicate=keep))
    assert rep.custom_filter and not rep.top_gap_1


# -- per-candidate factoring -----------------------------------------------


def test_factorization_matches_generic_factoring():
    for cand in enumerate_candidates(6):
        factors = _factor_candidate(cand.poly)
        prod = IntPoly.one()
        for f, m in factors:
            prod = prod * f ** m
        assert prod == cand.poly
        generic = factor_over_z(cand.poly)
        assert generic.sign == 1 and generic.content == 1
        assert dict(factors) == bag(generic)


def test_known_factor_bags():
    by_exps = {c.exponents: c for c in enumerate_candidates(3)}
    phi = cyclotomic
    assert dict(_factor_candidate(by_exps[(2, 1, 0)].poly)) == {phi(6): 1}
    assert dict(_factor_candidate(by_exps[(4, 2, 0)].poly)) == {phi(12): 1}
    assert dict(_factor_candidate(by_exps[(4, 3, 2, 1, 0)].poly)) == {phi(10): 1}
    assert dict(_factor_candidate(by_exps[(6, 3, 0)].poly)) == {phi(18): 1}
    assert dict(_factor_candidate(by_exps[(6, 5, 3, 1, 0)].poly)) == {
        phi(6): 1, phi(12): 1}
    assert dict(_factor_candidate(by_exps[(6, 5, 4, 3, 2, 1, 0)].poly)) == {
        phi(14): 1}
    noncyclo = by_exps[(6, 4, 3, 2, 0)].poly
    assert dict(_factor_candidate(noncyclo)) == {noncyclo: 1}


# -- records ---------------------------------------------------------------


def test_records_screen_only_noncyclotomic_candidates():
    rep = survey(4)
    for r in rep.records:
        if r.cyclotomic_product:
            assert r.murasugi is None and r.e_gcd is None
        else:
            assert isinstance(r.murasugi, tuple)
            assert isinstance(r.e_gcd, int) and r.e_gcd >= 1


def test_frozen_counts_through_genus_4():
    rep = survey(4)
    assert rep.counts == {"candidates": 15, "cyclotomic_products": 11,
                          "noncyclotomic": 4}
    assert rep.counts["cyclotomic_products"] == sum(
        r.cyclotomic_product for r in rep.records)


def test_small_survey_has_no_exceptional_candidates():
    rep = survey(6)
    assert rep.hartley_exceptional == ()
    assert rep.murasugi_exceptional(2) == ()
    assert rep.murasugi_exceptional() == ()


def test_murasugi_hit_gate_requires_divides_by_default():
    base = candidate_record(Candidate.from_gap_set(3, frozenset({4})))
    assert not base.cyclotomic_product
    bare = MurasugiHit(q=2, lam=1, quotient=IntPoly((1,)), shift=0, sign=1,
                       divides=False)
    rec = CandidateRecord(candidate=base.candidate, factors=base.factors,
                          cyclotomic_product=False, hartley=base.hartley,
                          e_gcd=base.e_gcd, murasugi=(bare,))
    assert not rec.murasugi_hit_at(2)
    assert rec.murasugi_hit_at(2, require_divides=False)
    assert not rec.murasugi_hit_at(3, require_divides=False)


def test_genus_16_square_candidate_is_the_known_hartley_window():
    # the one alternating candidate through genus 16 whose root is a square
    # in its own field; its top gap is 3, outside the gap-1 subfamily
    cand = Candidate.from_gap_set(16, frozenset({29, 23, 21, 20, 19, 18}))
    assert cand.top_gap == 3
    rec = candidate_record(cand)
    assert not rec.cyclotomic_product
    assert dict(rec.factors) == {cand.poly: 1}
    assert rec.hartley_exceptional and rec.hartley.members == (2,)
    cert = construct_witness(cand.poly, 2)
    held, sign = verify_witness(cand.poly, 2, cert.witness)
    assert held and sign == 1 and cert.witness(1) == 1


# -- whole-survey behavior -------------------------------------------------


def test_survey_is_deterministic_and_jobs_invariant():
    first = survey(5)
    again = survey(5)
    forked = survey(5, jobs=3)
    assert first == again == forked
    assert first.to_json() == again.to_json() == forked.to_json()


def test_survey_mode_is_recorded():
    rep = survey(2, mode=BoundMode.RIGOROUS)
    assert rep.mode is BoundMode.RIGOROUS
    cfg = rep.to_payload()["config"]
    assert cfg["mode"] == "rigorous" and cfg["rigorous"] is True


def test_progress_callback_sees_monotone_completion():
    seen = []
    rep = survey(4, progress=lambda done, total: seen.append((done, total)))
    assert seen and seen[-1] == (15, 15)
    assert [d for d, _ in seen] == sorted(d for d, _ in seen)
    assert len(rep.records) == 15


def test_enumerate_rejects_nonpositive_genus():
    with pytest.raises(ValueError, match="g_max must be positive"):
        list(enumerate_candidates(0))


# -- serialization ---------------------------------------------------------


def test_json_round_trip():
    rep = survey(5)
    assert SurveyReport.from_json(rep.to_json()) == rep


def test_payload_shape():
    rep = survey(3)
    payload = rep.to_payload()
    assert payload["version"] == 1
    assert payload["config"]["g_max"] == 3
    assert payload["aggregates"]["candidates"] == 7
    assert payload["aggregates"]["hartley_exceptional"] == []
    assert len(payload["records"]) == 7
    rec = payload["records"][0]
    assert rec["genus"] == 1 and rec["exponents"] == [2, 1, 0]
    assert rec["poly"] == "t^2 - t + 1"
    assert rec["murasugi"] is None and rec["cyclotomic_product"] is True


def test_rejects_unknown_report_version():
    payload = survey(2).to_payload()
    payload["version"] = 99
    with pytest.raises(ValueError, match="unsupported report version"):
        SurveyReport.from_payload(payload)


def test_csv_shape_and_parseability():
    rep = survey(4)
    text = rep.to_csv()
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["genus", "exponents", "poly", "cyclotomic_product",
                       "e_gcd", "hartley_set", "murasugi_screened",
                       "murasugi_hits"]
    assert len(rows) == 1 + 15
    assert [r[0] for r in rows[1:]] == [str(rec.candidate.genus)
                                        for rec in rep.records]
    # polynomial cells contain commas only via quoting, never raw
    assert all(len(r) == 8 for r in rows[1:])
