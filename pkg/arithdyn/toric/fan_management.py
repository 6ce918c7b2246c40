# Copyright (C) 2026 The ArithDyn Development Team

"""
This module handles reading and writing of fans, matrices, divisors and
index sets as JSON, and locates the bundled fixture fans (``p2``,
``p1xp1``, ``hirzebruch2``, ``p2xp1``).
"""

import os
import json
import logging
from arithdyn.linalg.basic import InputError
from arithdyn.linalg.ratmat import ratMatrix
import arithdyn.toric.fan as fan_mod
import arithdyn.util as util

logger = logging.getLogger(__name__)

#: str, directory of the bundled fixture fans
FIXTURE_DIR = os.path.join(os.path.dirname(__file__), 'fixtures')
#: list of str, names of the bundled fixture fans
FIXTURES = ['p2', 'p1xp1', 'hirzebruch2', 'p2xp1']

def read_json(file_name, path=None):
    """
    Load a JSON document.

    :param string file_name: file name
    :param string path: directory containing ``file_name``
    :rtype: object
    """
    if path is not None:
        file_name = os.path.join(path, file_name)
    if not os.path.isfile(file_name):
        raise InputError(file_name, "no such file")
    try:
        with open(file_name, 'r') as fid:
            return json.load(fid)
    except ValueError as err:
        raise InputError(file_name, "invalid JSON ({})".format(err))

def write_json(obj, file_name, path=None):
    """
    Write ``obj`` as indented JSON with sorted keys.

    :param obj: JSON serializable object
    :param string file_name: file name
    :param string path: directory containing ``file_name``
    """
    if path is not None:
        file_name = os.path.join(path, file_name)
    with open(file_name, 'w') as fid:
        json.dump(obj, fid, indent=2, sort_keys=True)
        fid.write('\n')

def fixture_path(name):
    """
    :param string name: fixture name with or without ``.fan.json``
    :rtype: string
    :returns: path of the bundled fixture file
    """
    if name.endswith('.fan.json'):
        name = name[:-len('.fan.json')]
    if name not in FIXTURES:
        raise InputError(name, "unknown fixture; choose one of " +
                         ", ".join(FIXTURES))
    return os.path.join(FIXTURE_DIR, name + '.fan.json')

def read_fan(file_name, path=None):
    """
    Read a fan from ``{"dim", "rays", "max_cones"}`` JSON.

    :rtype: :class:`~arithdyn.toric.fan.fan`
    """
    obj = read_json(file_name, path)
    f = fan_mod.fan.from_json(obj)
    if f.name is None:
        base = os.path.basename(file_name)
        f.name = base.split('.')[0]
    return f

def write_fan(f, file_name, path=None):
    """
    Write ``f`` as JSON.
    """
    write_json(f.to_json(), file_name, path)

def load_fixture(name):
    """
    :param string name: one of :data:`FIXTURES`
    :rtype: :class:`~arithdyn.toric.fan.fan`
    """
    return read_fan(fixture_path(name))

def resolve_fan(arg):
    """
    Resolve a command line ``--fan`` argument: an existing file path, or the
    name of a bundled fixture (``p2`` or ``p2.fan.json``).

    :rtype: :class:`~arithdyn.toric.fan.fan`
    """
    if os.path.isfile(arg):
        return read_fan(arg)
    base = os.path.basename(arg)
    if base.endswith('.fan.json'):
        base = base[:-len('.fan.json')]
    if base in FIXTURES:
        return load_fixture(base)
    raise InputError(arg, "neither a file nor a bundled fixture")

def read_matrix(arg):
    """
    Read a matrix from a JSON file or from the inline form ``"a,b;c,d"``.

    :rtype: :class:`~arithdyn.linalg.ratmat.ratMatrix`
    """
    if os.path.isfile(arg):
        obj = read_json(arg)
        if isinstance(obj, dict) and 'matrix' in obj:
            obj = obj['matrix']
        return ratMatrix.from_json(obj)
    return ratMatrix.parse(arg)

def read_divisor(arg, f):
    """
    Read the ray coefficients of a torus-invariant divisor on ``f`` from a
    JSON file (``{"coeffs": [...]}`` or a list) or inline ``"1,0,0"``.

    :rtype: list of :class:`~fractions.Fraction`
    """
    if os.path.isfile(arg):
        obj = read_json(arg)
        if isinstance(obj, dict):
            obj = obj.get('coeffs')
        if not isinstance(obj, list):
            raise InputError(arg, "expected a list of coefficients")
        coeffs = [util.to_fraction(x) for x in obj]
    else:
        coeffs = [util.to_fraction(x) for x in arg.split(',')]
    if len(coeffs) != f.n_rays:
        raise InputError(arg, "divisor has {} coefficients, fan has {} rays"
                         .format(len(coeffs), f.n_rays))
    return coeffs

def parse_index_set(text):
    """
    :param string text: ``"0,1"``; the empty string is the zero cone
    :rtype: tuple of ints
    """
    text = text.strip()
    if not text:
        return ()
    return tuple(util.to_int(x, text) for x in text.split(','))
