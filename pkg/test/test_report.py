# Copyright (C) 2026 The ArithDyn Development Team

import json
from fractions import Fraction
import numpy as np
from arithdyn.linalg.basic import InputError, BudgetError
from arithdyn.linalg.ratmat import ratMatrix
from arithdyn.run_framework.report import report, jsonable, \
    collect_citations, SCHEMA_VERSION


def test_jsonable_conversions():
    assert jsonable(Fraction(-3, 4)) == ['-3', '4']
    assert jsonable((1, 2)) == [1, 2]
    assert jsonable({3: np.int64(5)}) == {'3': 5}
    assert jsonable(np.float64(0.5)) == 0.5
    assert jsonable(float('nan')) == 'nan'
    assert jsonable(frozenset([(2,), (1,)])) == [[1], [2]]
    assert jsonable(ratMatrix.identity(2)) == ratMatrix.identity(2).to_json()


def test_collect_citations():
    obj = {'a': {'citation': 'silv1'}, 'citations': ['ExE', 'silv1'],
           'rows': [{'citation': 'potdeg'}]}
    assert collect_citations(obj) == ['ExE', 'potdeg', 'silv1']


def test_result_report():
    rep = report(['fan', 'validate'], {'value': Fraction(1, 2),
                                       'citation': 'potdeg'})
    odict = rep.to_json()
    assert odict['schema_version'] == SCHEMA_VERSION
    assert odict['result'] == {'value': ['1', '2'], 'citation': 'potdeg'}
    assert odict['citations'] == ['potdeg']
    assert 'error' not in odict
    assert rep.dumps() == rep.dumps()
    assert json.loads(rep.dumps()) == odict


def test_error_report():
    err = InputError('--fan', "no such fixture")
    rep = report(['fan'], error=err, exit_code=err.exit_code)
    odict = rep.to_json()
    assert rep.exit_code == 2
    assert odict['error'] == {'type': 'InputError',
                              'message': '--fan: no such fixture',
                              'exit_code': 2}
    assert 'result' not in odict


def test_budget_report_keeps_partial():
    err = BudgetError("too many digits", ratMatrix.identity(1))
    odict = report(['height'], error=err, exit_code=3).to_json()
    assert odict['error']['exit_code'] == 3
    assert odict['error']['partial'] == ratMatrix.identity(1).to_json()


def test_write(tmp_path, capsys):
    rep = report(['demo'], {'passed': True})
    rep.write()
    assert json.loads(capsys.readouterr().out)['result'] == {'passed': True}
    path = tmp_path / 'out.json'
    rep.write(str(path))
    assert json.loads(path.read_text())['command'] == ['demo']
