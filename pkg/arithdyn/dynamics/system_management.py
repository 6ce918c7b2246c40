# Copyright (C) 2026 The ArithDyn Development Team

"""
This module handles reading dynamical systems, projective points and
elliptic curve data from JSON files or inline strings. Systems use
``{"factors": [{"kind": "p1map", "f": [...], "g": [...]} | {"kind":
"power", "dim": k, "d": d}]}``.
"""

import os
import json
import logging
from arithdyn.linalg.basic import InputError
import arithdyn.toric.fan_management as fm
import arithdyn.dynamics.heights as heights
import arithdyn.dynamics.elliptic as elliptic

logger = logging.getLogger(__name__)

def factor_from_json(obj):
    """
    :param dict obj: one factor description
    :rtype: :class:`~arithdyn.dynamics.heights.p1Map` or
        :class:`~arithdyn.dynamics.heights.powerMap`
    """
    if not isinstance(obj, dict) or 'kind' not in obj:
        raise InputError('factor', "each factor needs a \"kind\"")
    kind = obj['kind']
    try:
        if kind == heights.p1Map.kind:
            return heights.p1Map(obj['f'], obj['g'])
        if kind == heights.powerMap.kind:
            return heights.powerMap(obj['dim'], obj['d'])
    except KeyError as err:
        raise InputError(kind, "missing key {}".format(err))
    raise InputError(kind, "unknown factor kind; use \"p1map\" or \"power\"")

def system_from_json(obj):
    """
    :rtype: :class:`~arithdyn.dynamics.heights.dynSystem`
    """
    if isinstance(obj, dict):
        obj = obj.get('factors')
    if not isinstance(obj, list):
        raise InputError('system', "expected {\"factors\": [...]}")
    return heights.dynSystem([factor_from_json(f) for f in obj])

def read_system(arg):
    """
    :param string arg: path of a system JSON file, or the JSON text itself
    :rtype: :class:`~arithdyn.dynamics.heights.dynSystem`
    """
    if not os.path.isfile(arg) and arg.lstrip().startswith('{'):
        try:
            return system_from_json(json.loads(arg))
        except ValueError as err:
            raise InputError('system', "invalid JSON ({})".format(err))
    return system_from_json(fm.read_json(arg))

def read_point(arg):
    """
    A projective point from a JSON file or inline ``"2,1;1,1"``.

    :rtype: :class:`~arithdyn.dynamics.heights.projPoint`
    """
    if os.path.isfile(arg):
        return heights.projPoint.from_json(fm.read_json(arg))
    return heights.projPoint.parse(arg)

def read_curve(arg):
    """
    :param string arg: ``"a,b"``
    :rtype: :class:`~arithdyn.dynamics.elliptic.weierstrassCurve`
    """
    return elliptic.weierstrassCurve.parse(arg)

def read_epoint(curve, arg):
    """
    :param string arg: ``"x,y"`` or ``"inf"``
    :rtype: :class:`~arithdyn.dynamics.elliptic.ePoint`
    """
    return elliptic.ePoint.parse(curve, arg)
