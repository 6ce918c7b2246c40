# Copyright (C) 2026 The ArithDyn Development Team

"""
This module contains the :class:`report` written by every command and the
conversion of results (Fractions, tuples, domain objects) to JSON. The
rendering uses sorted keys and carries no timestamps, so identical inputs
give byte-identical output.
"""

import sys
import json
import math
from fractions import Fraction
import numpy as np
import arithdyn.util as util
from arithdyn.linalg.basic import pickleable

#: str, version of the report layout
SCHEMA_VERSION = '1.0'

def jsonable(obj):
    """
    Recursively convert ``obj`` to plain JSON types: rationals become
    ``["num", "den"]``, tuples become lists and objects with a ``to_json``
    method are converted through it.

    :rtype: object
    """
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, float):
        if math.isnan(obj) or math.isinf(obj):
            return str(obj)
        return obj
    if isinstance(obj, Fraction):
        return util.frac_to_json(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return jsonable(float(obj))
    if isinstance(obj, complex):
        return [jsonable(obj.real), jsonable(obj.imag)]
    if isinstance(obj, dict):
        return dict((str(k), jsonable(v)) for k, v in obj.items())
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = [jsonable(v) for v in obj]
        if isinstance(obj, (set, frozenset)):
            items.sort(key=lambda v: json.dumps(v, sort_keys=True))
        return items
    if hasattr(obj, 'to_json'):
        return jsonable(obj.to_json())
    return str(obj)

def collect_citations(obj, found=None):
    """
    :rtype: list of str
    :returns: every value stored under a ``citation`` key or in a
        ``citations`` list, sorted
    """
    if found is None:
        found = set()
    if isinstance(obj, dict):
        for k, v in obj.items():
            if k == 'citation' and isinstance(v, str):
                found.add(v)
            elif k == 'citations' and isinstance(v, list):
                found.update(c for c in v if isinstance(c, str))
            else:
                collect_citations(v, found)
    elif isinstance(obj, list):
        for v in obj:
            collect_citations(v, found)
    return sorted(found)

class report(pickleable):
    """
    Outcome of one command.
    """
    def __init__(self, command, result=None, error=None, exit_code=0):
        """
        Initalization

        :param list command: the argument vector echoed back
        :param result: JSON convertible result
        :param error: :class:`~arithdyn.linalg.basic.Error` or None
        :param int exit_code: process exit code
        """
        #: list of str
        self.command = list(command)
        #: object, JSON ready result
        self.result = jsonable(result)
        #: :class:`~arithdyn.linalg.basic.Error` or None
        self.error = error
        #: int
        self.exit_code = exit_code
        super(report, self).__init__()

    @property
    def citations(self):
        return collect_citations(self.result)

    def to_json(self):
        odict = {'schema_version': SCHEMA_VERSION, 'command': self.command}
        if self.error is not None:
            odict['error'] = jsonable(self.error.to_json())
        else:
            odict['result'] = self.result
            odict['citations'] = self.citations
        return odict

    def dumps(self):
        """
        :rtype: str
        """
        return json.dumps(self.to_json(), sort_keys=True, indent=2)

    def write(self, out=None):
        """
        Write to the file ``out`` or to stdout.
        """
        text = self.dumps() + '\n'
        if out is None:
            sys.stdout.write(text)
        else:
            with open(out, 'w') as fid:
                fid.write(text)
