# Copyright (C) 2026 The ArithDyn Development Team

"""
The module contains general tools for ArithDyn: configuration constants and
their environment overrides, logging setup, conversion of exact rationals to
and from their JSON form, and integer lattice grids.
"""

import os
import logging
import math
from fractions import Fraction
import numpy as np
from arithdyn.linalg.basic import InputError

#: float, absolute tolerance for numeric eigenvalue moduli
TOL = 1e-9
#: int, cap on Newton polishing iterations for numeric roots
MAX_ITER = 200
#: int, largest matrix dimension accepted
MAX_DIM = 64
#: int, largest ray count accepted by the simplicity search
MAX_RAYS = 16
#: int, largest Picard rank accepted by the nef cone enumeration
MAX_NEF_RANK = 6
#: int, largest number of doublings for canonical heights
MAX_DEPTH = 10
#: int, Mazur's bound on the order of a rational torsion point
TORSION_BOUND = 12
#: int, default cap on the number of decimal digits of a coordinate
DEFAULT_DIGIT_BUDGET = 10**6
#: str, environment variable overriding :data:`DEFAULT_DIGIT_BUDGET`
DIGIT_BUDGET_ENV = 'ARITHDYN_DIGIT_BUDGET'
#: str, environment variable for the log level
LOG_LEVEL_ENV = 'ARITHDYN_LOG_LEVEL'

LOG_FORMAT = '%(levelname)s %(name)s: %(message)s'

def digit_budget(override=None):
    """
    Return the current digit budget. The environment is read on every call.

    :param int override: explicit budget, takes precedence when given
    :rtype: int
    :returns: maximum number of decimal digits per coordinate
    """
    if override is not None:
        value = override
    else:
        value = os.environ.get(DIGIT_BUDGET_ENV, DEFAULT_DIGIT_BUDGET)
    try:
        value = int(value)
    except (TypeError, ValueError):
        raise InputError(DIGIT_BUDGET_ENV, "digit budget must be an integer,"
                         " got {!r}".format(value))
    if value < 1:
        raise InputError(DIGIT_BUDGET_ENV, "digit budget must be positive")
    return value

def decimal_digits(n):
    """
    Cheap upper estimate of the number of decimal digits of ``|n|``.

    :param int n: integer
    :rtype: int
    """
    return int(abs(n).bit_length() * math.log10(2)) + 1

def setup_logging(level=None):
    """
    Attach a single stderr handler to the ``arithdyn`` logger.

    :param level: level name or number; defaults to ``$ARITHDYN_LOG_LEVEL``
        or ``WARNING``
    :rtype: :class:`logging.Logger`
    """
    if level is None:
        level = os.environ.get(LOG_LEVEL_ENV, 'WARNING')
    if isinstance(level, str):
        name = level.upper()
        level = logging.getLevelName(name)
        if not isinstance(level, int):
            raise InputError('--log-level', "unknown level " + name)
    logger = logging.getLogger('arithdyn')
    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(handler)
    logger.setLevel(level)
    return logger

def to_fraction(value):
    """
    Convert ``value`` to a :class:`~fractions.Fraction`.

    Accepted forms are ints, Fractions, strings such as ``"3"``, ``"-3/2"``
    and pairs ``["num", "den"]``.

    :rtype: :class:`~fractions.Fraction`
    """
    if isinstance(value, bool):
        raise InputError(repr(value), "expected a rational number")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, np.integer):
        return Fraction(int(value))
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise InputError(repr(value), "rational pairs have two entries")
        num, den = (to_fraction(v) for v in value)
        if den == 0:
            raise InputError(repr(value), "zero denominator")
        return num / den
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise InputError(value, "not a rational number")
    raise InputError(repr(value), "expected a rational number")

def to_int(value, expr=None):
    """
    Convert ``value`` to an int, rejecting non-integral rationals.

    :rtype: int
    """
    q = to_fraction(value)
    if q.denominator != 1:
        raise InputError(expr or repr(value), "expected an integer")
    return q.numerator

def frac_to_json(q):
    """
    :param q: rational number
    :rtype: list
    :returns: ``["num", "den"]`` as decimal strings
    """
    q = Fraction(q)
    return [str(q.numerator), str(q.denominator)]

def frac_str(q):
    """
    :rtype: str
    :returns: ``"n"`` or ``"n/d"``
    """
    return str(Fraction(q))

def vector_gcd(v):
    """
    :param v: sequence of ints
    :rtype: int
    :returns: gcd of the entries (0 for the zero vector)
    """
    g = 0
    for x in v:
        g = math.gcd(g, int(x))
    return g

def primitive(v):
    """
    Scale a nonzero rational vector to the primitive integer vector on the
    same ray.

    :param v: sequence of rationals
    :rtype: tuple
    """
    v = [Fraction(x) for x in v]
    den = 1
    for x in v:
        den = den * x.denominator // math.gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = vector_gcd(ints)
    if g == 0:
        raise InputError(repr(v), "the zero vector spans no ray")
    return tuple(x // g for x in ints)

def random_lattice_points(num, dim, radius, seed=0):
    """
    Draw ``num`` integer points uniformly from ``[-radius, radius]^dim``.

    :param int num: number of points
    :param int dim: dimension
    :param int radius: half side length
    :param int seed: seed for :class:`numpy.random.RandomState`
    :rtype: list of tuples of ints
    """
    state = np.random.RandomState(seed)
    pts = state.randint(-radius, radius + 1, size=(num, dim))
    return [tuple(int(x) for x in row) for row in pts]
