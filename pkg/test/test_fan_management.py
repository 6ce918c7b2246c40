# Copyright (C) 2026 The ArithDyn Development Team

from fractions import Fraction
import pytest
from arithdyn.linalg.basic import InputError
from arithdyn.linalg.ratmat import ratMatrix
import arithdyn.toric.fan_management as fm


def test_every_fixture_loads():
    for name in fm.FIXTURES:
        f = fm.load_fixture(name)
        assert f.name == name


def test_write_and_read_fan(tmp_path, p2xp1):
    fm.write_fan(p2xp1, 'copy.fan.json', str(tmp_path))
    back = fm.read_fan(str(tmp_path / 'copy.fan.json'))
    assert back == p2xp1


def test_name_defaults_to_file_name(tmp_path, p2):
    obj = p2.to_json()
    del obj['name']
    fm.write_json(obj, str(tmp_path / 'plane.fan.json'))
    assert fm.read_fan(str(tmp_path / 'plane.fan.json')).name == 'plane'


def test_bad_files(tmp_path):
    bad = tmp_path / 'bad.fan.json'
    bad.write_text('{"dim": 2, ')
    with pytest.raises(InputError):
        fm.read_fan(str(bad))
    with pytest.raises(InputError):
        fm.read_fan(str(tmp_path / 'missing.fan.json'))
    with pytest.raises(InputError):
        fm.fixture_path('p7')


def test_resolve_fan(p2):
    assert fm.resolve_fan('p2') == p2
    assert fm.resolve_fan('p2.fan.json') == p2
    assert fm.resolve_fan(fm.fixture_path('p2')) == p2
    with pytest.raises(InputError):
        fm.resolve_fan('nowhere')


def test_read_matrix(tmp_path):
    assert fm.read_matrix('2,0;0,3') == ratMatrix.diag([2, 3])
    fm.write_json({'matrix': [[1, 2], [3, 4]]}, str(tmp_path / 'm.json'))
    assert fm.read_matrix(str(tmp_path / 'm.json')) == \
        ratMatrix.from_rows([[1, 2], [3, 4]])


def test_read_divisor(p2):
    assert fm.read_divisor('1,0,1/2', p2) == [1, 0, Fraction(1, 2)]
    with pytest.raises(InputError):
        fm.read_divisor('1,0', p2)


def test_parse_index_set():
    assert fm.parse_index_set('') == ()
    assert fm.parse_index_set('0, 2') == (0, 2)
