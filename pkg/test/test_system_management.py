# Copyright (C) 2026 The ArithDyn Development Team

import json
import pytest
from arithdyn.linalg.basic import InputError
import arithdyn.toric.fan_management as fm
import arithdyn.dynamics.system_management as sm
from arithdyn.dynamics.heights import dynSystem, powerMap, p1Map


def test_read_inline_and_file(tmp_path):
    text = '{"factors": [{"kind": "power", "dim": 1, "d": 2}]}'
    sys = sm.read_system(text)
    assert sys.factors[0].degree == 2
    path = str(tmp_path / 'system.json')
    fm.write_json(dynSystem([p1Map([1, 0, 1], [0, 1, 0]),
                             powerMap(2, 3)]).to_json(), path)
    back = sm.read_system(path)
    assert back.to_json() == json.load(open(path))
    assert back.dims == (1, 2)


def test_bad_systems():
    with pytest.raises(InputError):
        sm.read_system('{"factors": [{"kind": "cubic"}]}')
    with pytest.raises(InputError):
        sm.read_system('{"factors": [{"kind": "power", "dim": 1}]}')
    with pytest.raises(InputError):
        sm.read_system('{"factors": 3}')
    with pytest.raises(InputError):
        sm.read_system('{"factors": [')


def test_read_points(tmp_path):
    assert sm.read_point('2,1').factors == ((2, 1),)
    path = tmp_path / 'point.json'
    path.write_text('{"point": [[2, 1], [1, 1]]}')
    assert sm.read_point(str(path)).dims == (1, 1)


def test_read_curve_and_point():
    curve = sm.read_curve('0,-2')
    assert sm.read_epoint(curve, '3,5').x == 3
    assert sm.read_epoint(curve, 'inf').is_infinity
    with pytest.raises(InputError):
        sm.read_epoint(curve, '3')
