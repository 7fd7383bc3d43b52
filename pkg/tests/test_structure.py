import random

import pytest

from qsemi.structure import (ProductReport, SubsetSpec, canonical_ground_set,
                             cancellation_report, check_cancellative_samples,
                             check_tup, enumerate_subset_specs,
                             make_subset_spec, product_report, run_tup_sweep,
                             subset_specs_over, subsets_colex)
from qsemi.words import (canonicalizer, class_of, concat, seeded_word,
                         words_equal)

# both halves of the identity window against both halves shifted by one
C_HALVES = ((1, 2, 3, 4), (2, 3, 4, 1))
D_HALVES = ((5, 6, 7, 8), (6, 7, 8, 5))


def test_make_subset_spec_canonicalizes(g2, cfg2):
    spec = make_subset_spec([g2.u + (3,)], [(1, 2)], g2, cfg2)
    assert spec.C == (tuple(range(1, 9)) + (3,),)
    assert spec.D == ((1, 2),)


def test_make_subset_spec_rejects_equivalent_members(g2, cfg2):
    with pytest.raises(ValueError, match="side C"):
        make_subset_spec([g2.t, g2.u], [(1,)], g2, cfg2)
    with pytest.raises(ValueError, match="side D"):
        make_subset_spec([(1,)], [g2.t, g2.u], g2, cfg2)


def test_product_report_hand_example(g2, cfg2):
    spec = make_subset_spec(C_HALVES, D_HALVES, g2, cfg2)
    report = product_report(spec, g2, cfg2)
    # (1,2,3,4)+(5,6,7,8) spells the identity window and (2,3,4,1)+(6,7,8,5)
    # spells t, so those two products merge; the cross products stay apart
    assert report.unique_count == 2
    merged = report.products[tuple(range(1, 9))]
    assert sorted(merged) == [(0, 0), (1, 1)]
    assert len(report.products) == 3


def test_product_report_agrees_with_pairwise_equality(g2, cfg2):
    rng = random.Random(5)
    for _ in range(5):
        spec = make_subset_spec(
            {seeded_word(rng, g2, rng.randint(1, 5)) for _ in range(2)},
            {seeded_word(rng, g2, rng.randint(1, 5)) for _ in range(2)},
            g2, cfg2)
        report = product_report(spec, g2, cfg2)
        raw = [concat(c, d) for c in spec.C for d in spec.D]
        unique = sum(
            1 for w in raw
            if sum(words_equal(w, v, g2, cfg2) for v in raw) == 1)
        assert report.unique_count == unique


def test_check_tup(g2, cfg2):
    spec = make_subset_spec(C_HALVES, D_HALVES, g2, cfg2)
    assert check_tup(spec, g2, cfg2)
    with pytest.raises(ValueError):
        check_tup(make_subset_spec([(1,)], [(2,)], g2, cfg2), g2, cfg2)


def test_check_tup_reports_planted_failure(two_element8, cfg2, capsys):
    spec = SubsetSpec(C=((1, 2), (2, 1)), D=((3, 4, 5, 6, 7, 8),))
    assert not check_tup(spec, two_element8, cfg2)
    err = capsys.readouterr().err
    assert "two-unique-products failure" in err
    assert "1,2,3,4,5,6,7,8" in err


def test_subsets_colex():
    got = list(subsets_colex(5, 2))
    assert len(got) == 15
    assert got[:5] == [(0,), (1,), (2,), (3,), (4,)]
    assert got[5:9] == [(0, 1), (0, 2), (1, 2), (0, 3)]
    assert all(len(set(s)) == len(s) for s in got)


def test_subset_specs_over_counts():
    reps = [(1,), (2,), (3,), (4,)]
    specs = list(subset_specs_over(reps, 2))
    # 10 subsets a side, minus the 16 pairs of two singletons
    assert len(specs) == 10 * 10 - 4 * 4
    assert specs[0] == SubsetSpec(C=((1,),), D=((1,), (2,)))
    assert all(len(s.C) + len(s.D) > 2 for s in specs)


def test_canonical_ground_set(g2, cfg2):
    reps = canonical_ground_set(g2, cfg2, 1)
    assert reps == [()] + [(i,) for i in range(1, 9)]
    assert len(canonical_ground_set(g2, cfg2, 2)) == 1 + 8 + 64


def test_enumerate_subset_specs(g2, cfg2):
    stream = enumerate_subset_specs(g2, cfg2, 1, 2)
    first = next(stream)
    assert first.C == ((),)
    assert first.D == ((), (1,))
    assert all(len(s.C) + len(s.D) > 2
               for s in (next(stream) for _ in range(20)))


def test_run_tup_sweep_summary(g2, cfg2):
    reps = canonical_ground_set(g2, cfg2, 1)
    summary, failure = run_tup_sweep(g2, cfg2, reps, 2, limit=500)
    assert failure is None
    assert summary["k"] == 2
    assert summary["max_len"] == 1
    assert summary["max_size"] == 2
    assert summary["specs_checked"] == 500
    assert summary["min_unique_count"] >= 2
    assert summary["elapsed_ms"] >= 0


def test_run_tup_sweep_detects_planted_failure(two_element8, cfg2):
    reps = [(1, 2), (2, 1), (3, 4, 5, 6, 7, 8)]
    summary, failure = run_tup_sweep(two_element8, cfg2, reps, 3)
    assert failure is not None
    assert failure["C"] == ["1,2", "2,1"]
    assert failure["D"] == ["3,4,5,6,7,8"]
    assert failure["unique_count"] == 0
    assert summary["specs_checked"] == failure["spec_index"] + 1
    assert summary["min_unique_count"] == 0


def test_cancellation_report_passes_on_the_monoid(g2, cfg2):
    report = cancellation_report(g2, cfg2, trials=300, max_len=10,
                                 rng=random.Random(0))
    assert report["passed"]
    assert report["violations"] == []
    assert report["antecedent_hits"] > 50
    assert check_cancellative_samples(g2, cfg2, 50, 10, random.Random(1))


def test_cancellation_report_flags_planted_violation(two_element8, cfg2):
    a, b, c = (1, 2), (2, 1), (3, 4, 5, 6, 7, 8)
    report = cancellation_report(two_element8, cfg2, trials=0, max_len=10,
                                 triples=[(a, b, c)])
    assert not report["passed"]
    assert report["trials"] == 1
    assert report["violations"] == [
        {"side": "right", "a": "1,2", "b": "2,1", "c": "3,4,5,6,7,8"}]


def test_cancellation_antecedent_via_classes(g2, cfg2):
    # when b is drawn from the class of a, both laws must hold verbatim
    rng = random.Random(7)
    for _ in range(5):
        a = seeded_word(rng, g2, 9, p_window=1.0)
        cls = class_of(a, g2, cfg2)
        for b in sorted(cls.members)[:4]:
            c = seeded_word(rng, g2, 3)
            assert words_equal(concat(a, c), concat(b, c), g2, cfg2)
            assert words_equal(concat(c, a), concat(c, b), g2, cfg2)
