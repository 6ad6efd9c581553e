import pytest

from latticelab import (
    Rank2Form,
    analyze_record,
    condition_check,
    embedding_class_count,
    full_report,
    load_involution_controls,
    load_table,
    nonsymplectic_order,
    phi_order_bound,
    polarization_root,
    polarized_criterion,
    root_for_degree,
    transcendental_candidates,
    uniqueness_for_record,
)
from latticelab.errors import AssumptionMissingError, NotMaximalRankError


def record(table, row):
    return next(r for r in load_table(table) if r.row == row)


def test_tables_load():
    hm = load_table("hm15")
    assert len(hm) == 15
    assert all(r.rank_K == 4 and r.rank_S == 20 for r in hm)
    assert all(r.q_S.order == r.q_K.order for r in hm)
    k3 = load_table("k3max11")
    assert len(k3) == 11
    assert all(r.rank_K == 5 and r.rank_S == 19 for r in k3)


def test_condition_check_examples():
    rec1 = record("hm15", 1)
    verdict = condition_check(rec1)
    assert verdict.passed
    assert verdict.alpha == {3: 1}

    rec10 = record("hm15", 10)
    verdict = condition_check(rec10)
    assert verdict.passed
    assert verdict.alpha == {2: 2, 3: 3, 5: 3}


def test_condition_check_involution_controls():
    controls = {r.group: r for r in load_involution_controls()}
    assert not condition_check(controls["E8(2)"]).passed
    assert not condition_check(controls["D12+(2)"]).passed
    assert condition_check(controls["BW16"]).passed


def test_polarization_roots():
    e6 = polarization_root("E6")
    assert e6.rank == 6 and e6.q_R.order == 3
    assert root_for_degree(2).name == "E7"
    assert root_for_degree(4).name == "D7"
    assert root_for_degree(6).name == "E6+A1"
    assert root_for_degree(0).name == "E8"
    with pytest.raises(ValueError):
        root_for_degree(8)


def test_cubic_pass_set():
    report = full_report("hm15", "E6")
    passes = [v.record.row for v in report if v.passed]
    assert passes == [1, 4, 5, 10, 11, 13]


def test_criterion_witness_details():
    e6 = polarization_root("E6")
    res2 = polarized_criterion(record("hm15", 2), e6)
    assert not res2.passed
    assert not res2.has_nontrivial_saturation
    assert res2.failed_conditions == (4,)

    res1 = polarized_criterion(record("hm15", 1), e6)
    assert res1.passed
    assert res1.has_nontrivial_saturation
    # the primitive embedding itself fails; only overlattices succeed
    trivial = next(o for o in res1.outcomes if o.witness.trivial)
    assert not trivial.verdict.exists

    res4 = polarized_criterion(record("hm15", 4), e6)
    kinds = {o.witness.trivial: o.verdict.exists for o in res4.outcomes}
    assert kinds[True] and kinds[False]


def test_transcendental_candidates_rows():
    e6 = polarization_root("E6")
    rec1 = record("hm15", 1)
    res = polarized_criterion(rec1, e6)
    wit = next(o.witness for o in res.outcomes
               if o.verdict.exists and not o.witness.trivial)
    cands = transcendental_candidates(rec1, e6, wit)
    assert [(f.a, f.b, f.c) for f in cands] == [(6, 3, 6)]
    assert all(f.negative for f in cands)


def test_transcendental_requires_rank2_complement():
    e7 = polarization_root("E7")
    rec = record("hm15", 1)  # rank_S = 20, root rank 7: complement rank 1
    res = polarized_criterion(rec, polarization_root("E6"))
    wit = res.outcomes[0].witness
    with pytest.raises(NotMaximalRankError):
        transcendental_candidates(rec, e7, wit)


def test_embedding_count_requires_flag():
    e6 = polarization_root("E6")
    rec2 = record("hm15", 2)
    res = polarized_criterion(rec2, e6)
    with pytest.raises(AssumptionMissingError):
        embedding_class_count(rec2, e6, res.outcomes[0].witness,
                              Rank2Form(2, 1, 14, negative=True))


def test_nonsymplectic_orders():
    rec1 = record("hm15", 1)
    assert nonsymplectic_order(rec1, Rank2Form(6, 3, 6, negative=True), True) \
        == (6, 174960)
    rec4 = record("hm15", 4)
    assert nonsymplectic_order(rec4, Rank2Form(2, 1, 18, negative=True), True)[0] == 2
    assert nonsymplectic_order(rec4, Rank2Form(18, 3, 18, negative=True), False)[0] == 1
    rec11 = record("hm15", 11)
    assert nonsymplectic_order(rec11, Rank2Form(22, 11, 22, negative=True), False)[0] == 3
    k3rec = record("k3max11", 3)
    with pytest.raises(NotMaximalRankError):
        nonsymplectic_order(k3rec, Rank2Form(12, 0, 30, negative=True), True)


def test_nonsymplectic_is_within_phi_bound():
    for verdict in full_report("hm15", "E6"):
        for cls in verdict.classes:
            if cls.nonsymplectic is not None:
                assert cls.nonsymplectic in phi_order_bound(verdict.record.rank_S)


def test_phi_order_bound():
    def phi(n):
        out = 0
        for k in range(1, n + 1):
            g = k
            m = n
            while m:
                g, m = m, g % m
            if g == 1:
                out += 1
        return out

    def oracle(rank_s):
        bound = 22 - rank_s
        out = set()
        for a in range(7):
            for b in range(5):
                n = 2 ** a * 3 ** b
                if phi(n) <= bound:
                    out.add(n)
        return out

    assert phi_order_bound(20) == {1, 2, 3, 4, 6}
    assert phi_order_bound(0) == oracle(0)
    assert phi_order_bound(16) == oracle(16)
    with pytest.raises(ValueError):
        phi_order_bound(21)
    with pytest.raises(ValueError):
        phi_order_bound(-1)


def test_k3_pass_sets():
    deg2 = full_report("k3max11", "E7")
    assert [v.record.row for v in deg2 if v.passed] == [3, 7, 9, 11]
    deg6 = full_report("k3max11", "E6+A1")
    assert [v.record.row for v in deg6 if v.passed] == [3, 8, 10]


def test_degree0_runs_without_rank2_analysis():
    report = full_report("k3max11", "E8")
    # S + E8 has rank 27 > 26: nothing can pass
    assert not any(v.passed for v in report)


def test_every_passing_witness_is_checkable():
    from latticelab import even_lattice_exists
    for verdict in full_report("hm15", "E6"):
        if not verdict.criterion:
            continue
        for outcome in verdict.criterion.outcomes:
            if outcome.verdict.exists:
                assert even_lattice_exists(outcome.complement).exists


def test_report_determinism():
    r1 = full_report("hm15", "E6")
    r2 = full_report("hm15", "E6")
    assert [v.to_json_dict() for v in r1] == [v.to_json_dict() for v in r2]


def test_uniqueness_criterion_rows():
    assert uniqueness_for_record(record("hm15", 1))[0]
    assert uniqueness_for_record(record("hm15", 13))[0]


def test_analyze_record_json_round_trip():
    import json
    verdict = analyze_record(record("hm15", 4), polarization_root("E6"))
    blob = json.dumps(verdict.to_json_dict())
    assert json.loads(blob)["pass"] is True


def test_data_dir_env_override(tmp_path, monkeypatch):
    import shutil
    from latticelab.casebook import data_dir
    from latticelab.errors import DataFileMissingError
    src = data_dir()
    for name in ("hm15.json", "k3max11.json", "fu_cases.json", "involutions.json"):
        shutil.copy(src / name, tmp_path / name)
    monkeypatch.setenv("LATTICELAB_DATA", str(tmp_path))
    assert len(load_table("hm15")) == 15
    (tmp_path / "hm15.json").unlink()
    with pytest.raises(DataFileMissingError):
        load_table("hm15")


def test_candidate_forms_negate_to_quotient():
    from latticelab import discriminant_form, is_isomorphic, negate_form
    e6 = polarization_root("E6")
    for verdict in full_report("hm15", "E6"):
        if not verdict.passed:
            continue
        for outcome in verdict.criterion.outcomes:
            if not outcome.verdict.exists:
                continue
            for t in transcendental_candidates(verdict.record, e6,
                                               outcome.witness):
                q_t = discriminant_form(t.signed_lattice())
                assert is_isomorphic(negate_form(q_t), outcome.witness.quotient)
