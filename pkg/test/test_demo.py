# Copyright (C) 2026 The ArithDyn Development Team

import os
import arithdyn.util as util
import arithdyn.toric.fan_management as fm
from arithdyn.run_framework.demo import demo_suite


def test_demo_suite_passes():
    rep = demo_suite()
    assert rep['passed'], [r for r in rep['rows'] if r['status'] != 'pass']
    assert rep['exit_code'] == 0
    assert len(rep['rows']) == 10
    rows = dict((r['name'], r) for r in rep['rows'])
    assert rows['Hirzebruch non-nef divisor']['detail'] == \
        {'non_nef_rays': [1]}
    assert rows['counterexample']['detail']['non_realizable'] == [6, 4]


def test_demo_suite_with_broken_fixture(tmp_path):
    for name in fm.FIXTURES:
        if name != 'p2':
            fm.write_fan(fm.load_fixture(name),
                         os.path.join(str(tmp_path), name + '.fan.json'))
    (tmp_path / 'p2.fan.json').write_text('{')
    rep = demo_suite(fixtures=str(tmp_path))
    assert rep['exit_code'] == 2
    errors = [r['name'] for r in rep['rows'] if r['status'] == 'error']
    assert 'scalar pullback' in errors
    assert 'counterexample' not in errors


def test_demo_suite_budget(monkeypatch):
    monkeypatch.setenv(util.DIGIT_BUDGET_ENV, '100')
    rep = demo_suite()
    assert rep['exit_code'] == 3
    rows = dict((r['name'], r) for r in rep['rows'])
    assert rows['deep iteration']['error']['type'] == 'BudgetError'
