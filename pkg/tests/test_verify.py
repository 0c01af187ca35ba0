import json

import pytest

from eqproj.grading import INF
from eqproj.ring import RingParams
from eqproj.verify import (
    CheckReport,
    check_cancellation_nonvanishing,
    check_grading_suite,
    check_lewis,
    check_maps_suite,
    check_relations_table,
    check_ring_suite,
    check_splitting_vanishing,
    run_suites,
)

WINDOW = range(-10, 11)


class TestReports:
    def test_schema(self):
        rep = check_lewis(2, 1)
        doc = rep.to_json()
        assert set(doc) == {"name", "params", "cases", "failures"}
        json.dumps(doc)
        assert rep.passed and doc["cases"] > 0

    def test_failures_recorded(self):
        rep = CheckReport("demo", "none")
        rep.run(False, lambda: "cxwm2^-1*cw @ p=1,q=2")
        assert not rep.passed
        assert rep.failures == ["cxwm2^-1*cw @ p=1,q=2"]

    def test_deterministic_given_seed(self):
        a = check_ring_suite(RingParams(2, 2), 300, seed=42)
        b = check_ring_suite(RingParams(2, 2), 300, seed=42)
        assert a.to_json() == b.to_json()


class TestSuitesPass:
    def test_grading(self):
        rep = check_grading_suite(3, 3, WINDOW)
        assert rep.passed, rep.failures[:3]

    def test_splitting(self):
        for p in range(1, 4):
            for q in range(1, 4):
                rep = check_splitting_vanishing(p, q, WINDOW)
                assert rep.passed, rep.failures[:3]
        with pytest.raises(ValueError):
            check_splitting_vanishing(0, 2, WINDOW)

    def test_cancellation(self):
        for p, q in [(1, 1), (1, 2), (2, 1), (3, 2)]:
            rep = check_cancellation_nonvanishing(p, q, WINDOW)
            assert rep.passed, rep.failures[:3]
            assert rep.cases > 0

    def test_relations(self):
        for p, q in [(1, 1), (1, 2), (2, 1), (2, 3)]:
            rep = check_relations_table(p, q)
            assert rep.passed, rep.failures[:3]

    def test_lewis(self):
        for p, q in [(2, 1), (3, 2), (4, 2), (3, 3)]:
            rep = check_lewis(p, q)
            assert rep.passed, rep.failures[:3]
        with pytest.raises(ValueError):
            check_lewis(2, 3)

    def test_ring(self):
        rep = check_ring_suite(RingParams(2, 2), 400, seed=1)
        assert rep.passed, rep.failures[:3]
        rep = check_ring_suite(RingParams(INF, INF), 200, seed=1)
        assert rep.passed, rep.failures[:3]

    def test_maps(self):
        rep = check_maps_suite(2, 2, 40, seed=1)
        assert rep.passed, rep.failures[:3]

    def test_runner(self):
        reports = run_suites(["lewis", "splitting"], pmax=2, qmax=2, window=range(-6, 7))
        assert reports and all(r.passed for r in reports)
        with pytest.raises(ValueError):
            run_suites(["bogus"], 2, 2, range(-2, 3))
