"""The functional-equation residual checks must all come back clean."""

from __future__ import annotations

import pytest

from permlab.systems import SYSTEMS, verify_all, verify_system


def test_system_names():
    assert set(SYSTEMS) == {"sites", "1243_1423", "1243_1342", "1243_1324"}


@pytest.mark.parametrize("name", SYSTEMS)
def test_each_system_passes(name):
    results = verify_system(name, depth=7)
    assert results, "a system must run at least one check"
    for result in results:
        assert result.ok, str(result)


def test_verify_all_shape():
    report = verify_all(depth=6)
    assert set(report) == set(SYSTEMS)
    total = sum(len(v) for v in report.values())
    assert total >= 30
    assert all(r.ok for results in report.values() for r in results)


def test_unknown_system_rejected():
    with pytest.raises(ValueError):
        verify_system("nope")


def test_detail_reports_depth():
    results = verify_system("sites", depth=5)
    assert any("x^5" in r.detail for r in results)
