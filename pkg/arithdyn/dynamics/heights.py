# Copyright (C) 2026 The ArithDyn Development Team

"""
This module contains Weil heights on products of projective spaces over
``Q`` and the iteration of product dynamical systems built from

* :class:`p1Map` a pair of integer binary forms of equal degree on ``P^1``,
* :class:`powerMap` the coordinate power map ``x_i -> x_i^d`` on ``P^k``.

Orbits are computed exactly with Python integers; a digit budget (see
:func:`arithdyn.util.digit_budget`) aborts runaway iterations with a
:class:`~arithdyn.linalg.basic.BudgetError` carrying the partial result.
"""

import math
import logging
import arithdyn.util as util
from arithdyn.linalg.basic import pickleable, Error, InputError, \
    BudgetError
from arithdyn.linalg.ratmat import ratMatrix

logger = logging.getLogger(__name__)

def _normalize(coords):
    """
    Clear denominators, divide by the gcd and make the first nonzero
    coordinate positive.
    """
    coords = [util.to_fraction(x) for x in coords]
    den = 1
    for x in coords:
        den = den * x.denominator // math.gcd(den, x.denominator)
    ints = [int(x * den) for x in coords]
    g = util.vector_gcd(ints)
    if g == 0:
        raise InputError(repr(coords), "projective coordinates are all zero")
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        g = -g
    return tuple(x // g for x in ints)

def log_max(coords):
    """
    :param coords: integer coordinates
    :rtype: float
    :returns: ``log max |x_i|`` (0 for units)
    """
    return math.log(max(abs(x) for x in coords))

class projPoint(pickleable):
    """
    A rational point on ``P^k1 x ... x P^kr`` with primitive integer
    coordinates in every factor.
    """
    def __init__(self, factors):
        """
        Initalization

        :param factors: one coordinate list per projective factor
        """
        if not factors:
            raise InputError('point', "a point needs at least one factor")
        #: tuple of tuples of ints
        self.factors = tuple(_normalize(c) for c in factors)
        for c in self.factors:
            if len(c) < 2:
                raise InputError(repr(c), "a projective point needs at least"
                                 " two coordinates")
        super(projPoint, self).__init__()

    @classmethod
    def parse(cls, text):
        """
        :param string text: ``"2,1"`` or ``"2,1;1,1"`` (factors separated by
            semicolons)
        :rtype: :class:`projPoint`
        """
        text = text.strip()
        if not text:
            raise InputError('point', "empty point")
        return cls([[util.to_fraction(x) for x in part.split(',')]
                    for part in text.split(';')])

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, dict):
            obj = obj.get('point', obj.get('factors'))
        if isinstance(obj, str):
            return cls.parse(obj)
        if not isinstance(obj, list) or not obj:
            raise InputError('point', "expected a list of coordinate lists")
        if not isinstance(obj[0], list):
            obj = [obj]
        return cls(obj)

    @property
    def dims(self):
        return tuple(len(c) - 1 for c in self.factors)

    def max_abs(self):
        """
        :rtype: list of ints
        :returns: exact ``max |x_i|`` per factor
        """
        return [max(abs(x) for x in c) for c in self.factors]

    def __eq__(self, other):
        if not isinstance(other, projPoint):
            return NotImplemented
        return self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __repr__(self):
        return 'projPoint({})'.format(';'.join(
            ':'.join(str(x) for x in c) for c in self.factors))

    def to_json(self):
        return [[str(x) for x in c] for c in self.factors]

def weil_height(p):
    """
    Sum of the per-factor logarithmic heights ``log max |x_i|``.

    :type p: :class:`projPoint`
    :rtype: tuple
    :returns: (height as a float, list of exact per-factor maxima)
    """
    return sum(log_max(c) for c in p.factors), p.max_abs()

def _form_mul(f, g):
    """
    Product of binary forms given by coefficients in descending powers of
    ``x``.
    """
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return out

def _form_pow(f, k):
    out = [1]
    for _ in range(k):
        out = _form_mul(out, f)
    return out

def _form_substitute(coeffs, F, G):
    """
    ``sum c_i F^(d-i) G^i`` for a form of degree ``d = len(coeffs) - 1``.
    """
    d = len(coeffs) - 1
    out = [0] * (d * (len(F) - 1) + 1)
    for i, c in enumerate(coeffs):
        if c:
            term = _form_mul(_form_pow(F, d - i), _form_pow(G, i))
            for k, t in enumerate(term):
                out[k] += c * t
    return out

def sylvester_resultant(f, g):
    """
    Resultant of two binary forms of the same formal degree through the
    determinant of their Sylvester matrix.

    :param f: coefficients of ``F`` in descending powers of ``x``
    :param g: coefficients of ``G``
    :rtype: int
    """
    d, e = len(f) - 1, len(g) - 1
    n = d + e
    rows = []
    for i in range(e):
        rows.append([0] * i + list(f) + [0] * (n - d - 1 - i))
    for i in range(d):
        rows.append([0] * i + list(g) + [0] * (n - e - 1 - i))
    det = ratMatrix.from_rows(rows, cols=n).det()
    return int(det)

class p1Map(pickleable):
    """
    ``(x : y) -> (F(x, y) : G(x, y))`` with ``F = sum f_i x^(d-i) y^i``.
    """
    kind = 'p1map'

    def __init__(self, f, g, check=True):
        """
        Initalization

        :param f: integer coefficients of ``F`` in descending powers of ``x``
        :param g: integer coefficients of ``G``
        :param bool check: verify the resultant is nonzero
        """
        f = [util.to_int(c, 'f') for c in f]
        g = [util.to_int(c, 'g') for c in g]
        d = max(len(f), len(g)) - 1
        if d < 1:
            raise InputError('p1map', "degree must be at least 1")
        #: list of ints, coefficients of F
        self.f = [0] * (d + 1 - len(f)) + f
        #: list of ints, coefficients of G
        self.g = [0] * (d + 1 - len(g)) + g
        #: int, degree d
        self.degree = d
        #: int, projective dimension of the factor
        self.dim = 1
        if check and sylvester_resultant(self.f, self.g) == 0:
            raise InputError('p1map', "F and G have a common zero (resultant"
                             " is 0), the map is not a morphism")
        super(p1Map, self).__init__()

    def __call__(self, coords):
        x, y = coords
        d = self.degree
        xs = [x ** (d - i) for i in range(d + 1)]
        ys = [y ** i for i in range(d + 1)]
        return [sum(c * a * b for c, a, b in zip(self.f, xs, ys)),
                sum(c * a * b for c, a, b in zip(self.g, xs, ys))]

    def compose(self, other):
        """
        :rtype: :class:`p1Map`
        :returns: ``self o other``
        """
        return p1Map(_form_substitute(self.f, other.f, other.g),
                     _form_substitute(self.g, other.f, other.g), check=False)

    def resultant(self):
        return sylvester_resultant(self.f, self.g)

    def to_json(self):
        return {'kind': self.kind, 'f': [str(c) for c in self.f],
                'g': [str(c) for c in self.g]}

class powerMap(pickleable):
    """
    ``(x_0 : ... : x_k) -> (x_0^d : ... : x_k^d)``.
    """
    kind = 'power'

    def __init__(self, dim, degree):
        dim = util.to_int(dim, 'dim')
        degree = util.to_int(degree, 'd')
        if dim < 1:
            raise InputError('power', "dimension must be at least 1")
        if degree < 1:
            raise InputError('power', "degree must be at least 1")
        #: int, projective dimension k
        self.dim = dim
        #: int, degree d
        self.degree = degree
        super(powerMap, self).__init__()

    def __call__(self, coords):
        image = [x ** self.degree for x in coords]
        if util.vector_gcd(image) != 1:
            raise Error("power map image of a primitive point is not"
                        " primitive")
        return image

    def compose(self, other):
        return powerMap(self.dim, self.degree * other.degree)

    def to_json(self):
        return {'kind': self.kind, 'dim': self.dim, 'd': self.degree}

class dynSystem(pickleable):
    """
    A product morphism ``f_1 x ... x f_r`` of :class:`p1Map` and
    :class:`powerMap` factors.
    """
    def __init__(self, factors):
        if not factors:
            raise InputError('system', "a system needs at least one factor")
        #: list of factor maps
        self.factors = list(factors)
        super(dynSystem, self).__init__()

    @property
    def dims(self):
        return tuple(f.dim for f in self.factors)

    def to_json(self):
        return {'factors': [f.to_json() for f in self.factors]}

def dynamical_degree(sys):
    """
    :type sys: :class:`dynSystem`
    :rtype: int
    :returns: the largest factor degree
    """
    return max(f.degree for f in sys.factors)

def iterate_system(sys, m):
    """
    The ``m``-th iterate as a system, by exact composition.

    :type sys: :class:`dynSystem`
    :param int m: positive iterate
    :rtype: :class:`dynSystem`
    """
    if m < 1:
        raise InputError('m', "iterate must be positive")
    factors = []
    for f in sys.factors:
        g = f
        for _ in range(m - 1):
            g = g.compose(f)
        factors.append(g)
    return dynSystem(factors)

def _check_arity(sys, p):
    if sys.dims != p.dims:
        raise InputError('point', "point lives on a product of dimensions {}"
                         " but the system acts on {}".format(p.dims,
                                                             sys.dims))

def _apply_factor(f, coords, budget):
    top = max(abs(x) for x in coords)
    if f.degree * (util.decimal_digits(top) - 1) > budget:
        raise BudgetError("next iterate exceeds the digit budget of {}"
                          " decimal digits".format(budget))
    image = f(coords)
    if all(x == 0 for x in image):
        raise Error("zero image of {}".format(coords))
    image = _normalize(image)
    if util.decimal_digits(max(abs(x) for x in image)) > budget:
        raise BudgetError("iterate exceeds the digit budget of {} decimal"
                          " digits".format(budget))
    return image

def apply(sys, p, budget=None):
    """
    One exact step of ``sys`` at ``p``.

    :type sys: :class:`dynSystem`
    :type p: :class:`projPoint`
    :param int budget: digit budget override
    :rtype: :class:`projPoint`
    """
    _check_arity(sys, p)
    budget = util.digit_budget(budget)
    return projPoint([_apply_factor(f, c, budget)
                      for f, c in zip(sys.factors, p.factors)])

class alphaEstimate(pickleable):
    """
    Height sequence along an orbit with the ratio and root estimators of
    the arithmetic degree.
    """
    def __init__(self, heights, complete=True):
        """
        Initalization

        :param list heights: ``h(f^k P)`` for ``k = 0 .. n``
        :param bool complete: False when the iteration was cut short
        """
        #: list of floats, h_0 .. h_n
        self.heights = heights
        #: int, iterates computed
        self.n = len(heights) - 1
        #: bool
        self.complete = complete
        #: list, h_(k+1) / h_k or None where h_k = 0
        self.ratios = [heights[k + 1] / heights[k] if heights[k] > 0
                       else None for k in range(self.n)]
        #: list, h+(f^k P)^(1/k) for k >= 1 with h+ = max(h, 1)
        self.roots = [max(heights[k], 1.0) ** (1.0 / k)
                      for k in range(1, self.n + 1)]
        #: bool, the last height vanished
        self.collapsed = self.n >= 0 and heights[-1] == 0
        if self.collapsed or not self.ratios or self.ratios[-1] is None:
            self.estimate = 1.0
        else:
            self.estimate = max(1.0, self.ratios[-1])
        self.root_estimate = self.roots[-1] if self.roots else 1.0
        usable = [r for r in self.ratios[-2:] if r is not None]
        #: float, spread of the last two ratios
        self.diagnostic = abs(usable[-1] - usable[0]) if len(usable) == 2 \
            else None
        super(alphaEstimate, self).__init__()

    def to_json(self):
        return {'n': self.n, 'heights': self.heights, 'ratios': self.ratios,
                'roots': self.roots, 'estimate': self.estimate,
                'root_estimate': self.root_estimate,
                'collapsed': self.collapsed, 'diagnostic': self.diagnostic,
                'complete': self.complete}

def alpha_estimate(sys, p, n, budget=None):
    """
    Iterate ``sys`` ``n`` times from ``p`` and estimate the arithmetic
    degree ``lim h(f^k P)^(1/k)``. The reported estimate is the last height
    ratio; the root estimator is carried along and logged.

    :type sys: :class:`dynSystem`
    :type p: :class:`projPoint`
    :param int n: number of iterates, at least 3
    :param int budget: digit budget override
    :rtype: :class:`alphaEstimate`
    """
    if n < 3:
        raise InputError('iters', "at least 3 iterates are needed")
    _check_arity(sys, p)
    budget = util.digit_budget(budget)
    heights = [weil_height(p)[0]]
    q = p
    for k in range(n):
        try:
            q = apply(sys, q, budget)
        except BudgetError as err:
            partial = alphaEstimate(heights, complete=False)
            logger.warning("alpha estimate stopped after %d of %d iterates",
                           k, n)
            raise BudgetError(err.msg, partial)
        heights.append(weil_height(q)[0])
        logger.debug("alpha: iterate %d height %.6g", k + 1, heights[-1])
    est = alphaEstimate(heights)
    logger.info("alpha: ratio estimate %.6g, root estimate %.6g",
                est.estimate, est.root_estimate)
    return est

def canonical_height_system(sys, p, depth=8, budget=None):
    """
    Canonical height ``sum_j lim h(f_j^n P_j) / d_j^n`` for the ample
    eigendivisor ``O(1)`` on each factor (so ``lambda = d_j > 1``). The
    tail bound assumes geometric decay of the successive differences with
    ratio ``1/d_j``.

    :type sys: :class:`dynSystem`
    :type p: :class:`projPoint`
    :param int depth: iterates per factor
    :rtype: dict
    """
    _check_arity(sys, p)
    if depth < 1 or depth > util.MAX_DEPTH:
        raise InputError('depth', "depth must lie in 1..{}".format(
            util.MAX_DEPTH))
    budget = util.digit_budget(budget)
    factors = []
    for f, coords in zip(sys.factors, p.factors):
        d = f.degree
        if d < 2:
            raise InputError('system', "canonical heights need degree at"
                             " least 2 on every factor")
        terms = [log_max(coords)]
        for k in range(1, depth + 1):
            coords = _apply_factor(f, coords, budget)
            terms.append(log_max(coords) / d ** k)
        bound = abs(terms[-1] - terms[-2]) / (d - 1)
        factors.append({'value': terms[-1], 'bound': bound,
                        'sequence': terms, 'degree': d})
    return {'value': sum(e['value'] for e in factors),
            'bound': sum(e['bound'] for e in factors), 'factors': factors}
