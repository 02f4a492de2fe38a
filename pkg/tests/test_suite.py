import json

import pytest

from monoidpoints.fixtures import fixture
from monoidpoints.monoid import FiniteMonoid
from monoidpoints.oracle import Corpus, CorpusEntry, build_corpus
from monoidpoints.suite import CHECKS, CHECKS_BY_NAME, run_theorem_suite


def test_default_corpus_all_pass():
    report = run_theorem_suite(build_corpus(3, fixture_names=["m5", "t2", "brandt"]))
    assert report.ok, [r.to_dict() for r in report.failures]
    summary = report.summary()
    assert set(summary) >= {c.name for c in CHECKS}
    json.dumps(report.to_dict(timing=True))


def test_corrupted_table_reported():
    bad = FiniteMonoid([[0, 1, 2], [1, 2, 0], [2, 1, 0]], 0)
    corpus = Corpus([CorpusEntry("bad", bad, ("named example",)), CorpusEntry("m5", fixture("m5"), ("named example",))])
    report = run_theorem_suite(corpus)
    assert not report.ok
    bad_results = [r for r in report.results if r.monoid == "bad"]
    assert len(bad_results) == 1
    assert bad_results[0].check == "validate"
    assert bad_results[0].witness["law"] == "associativity"
    assert all(r.passed for r in report.results if r.monoid == "m5")


def test_empty_corpus_warns():
    with pytest.warns(UserWarning):
        report = run_theorem_suite(Corpus([]))
    assert report.ok and report.results == [] and report.warnings


def test_seeded_bug_is_caught(monkeypatch):
    import monoidpoints.suite as suite

    real = suite.classify_points

    def broken(m, check=True):
        cls = real(m, check)
        # drop a point
        return type(cls)(cls.monoid, cls.representatives[:-1], cls.j_classes, cls.category) if len(cls) > 1 else cls

    monkeypatch.setattr(suite, "classify_points", broken)
    report = run_theorem_suite(Corpus([CorpusEntry("m5", fixture("m5"), ("named example",))]),
                               ["classification_oracle", "bijection_counts"])
    assert not report.ok
    assert all(r.witness for r in report.failures)


def test_guarded_checks_skip():
    report = run_theorem_suite(Corpus([CorpusEntry("t3", fixture("t3"), ("transformation",))]), ["transversality"])
    (r,) = [x for x in report.results if x.check == "transversality"]
    assert r.skipped and r.passed


def test_timing_only_when_asked():
    report = run_theorem_suite(Corpus([CorpusEntry("two", fixture("two"), ("named example",))]), ["lattice"])
    assert "seconds" not in json.dumps(report.to_dict())
    assert "seconds" in json.dumps(report.to_dict(timing=True))


def test_checks_by_name_unique():
    assert len(CHECKS_BY_NAME) == len(CHECKS)
