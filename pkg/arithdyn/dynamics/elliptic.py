# Copyright (C) 2026 The ArithDyn Development Team

"""
This module contains elliptic curves ``y^2 = x^3 + a x + b`` over ``Q``:
the exact group law, torsion detection up to Mazur's bound, canonical
heights as the doubling limit ``lim 4^-n h(x(2^n P))``, and the
arithmetic degree classifier for the isogeny ``(P, Q) -> (aP, bQ)`` of
``E x E``.
"""

import math
import logging
from fractions import Fraction
import arithdyn.util as util
from arithdyn.linalg.basic import pickleable, InputError, CapacityError, \
    BudgetError

logger = logging.getLogger(__name__)

class weierstrassCurve(pickleable):
    """
    ``y^2 = x^3 + a x + b`` with integer ``a, b`` and ``4a^3 + 27b^2 != 0``.
    """
    def __init__(self, a, b):
        #: int
        self.a = util.to_int(a, 'curve a')
        #: int
        self.b = util.to_int(b, 'curve b')
        #: int, -16 (4 a^3 + 27 b^2)
        self.discriminant = -16 * (4 * self.a ** 3 + 27 * self.b ** 2)
        if self.discriminant == 0:
            raise InputError(str(self), "singular curve (4a^3 + 27b^2 = 0)")
        super(weierstrassCurve, self).__init__()

    @classmethod
    def parse(cls, text):
        """
        :param string text: ``"a,b"``
        """
        parts = text.split(',')
        if len(parts) != 2:
            raise InputError(text, "a curve is given as \"a,b\"")
        return cls(*parts)

    def contains(self, x, y):
        return y * y == x ** 3 + self.a * x + self.b

    def __eq__(self, other):
        if not isinstance(other, weierstrassCurve):
            return NotImplemented
        return (self.a, self.b) == (other.a, other.b)

    def __hash__(self):
        return hash((self.a, self.b))

    def __str__(self):
        return 'y^2 = x^3 + {}x + {}'.format(self.a, self.b)

    def to_json(self):
        return {'a': str(self.a), 'b': str(self.b)}

class ePoint(pickleable):
    """
    A rational point of a :class:`weierstrassCurve`; ``x = y = None`` is the
    point at infinity.
    """
    def __init__(self, curve, x=None, y=None):
        #: :class:`weierstrassCurve`
        self.curve = curve
        if x is None or y is None:
            #: :class:`~fractions.Fraction` or None
            self.x = None
            #: :class:`~fractions.Fraction` or None
            self.y = None
        else:
            self.x = util.to_fraction(x)
            self.y = util.to_fraction(y)
            if not curve.contains(self.x, self.y):
                raise InputError('({}, {})'.format(self.x, self.y),
                                 "point is not on " + str(curve))
        super(ePoint, self).__init__()

    @classmethod
    def infinity(cls, curve):
        return cls(curve)

    @classmethod
    def parse(cls, curve, text):
        """
        :param string text: ``"x,y"`` or ``"inf"``
        """
        text = text.strip()
        if text.lower() in ('inf', 'o', 'infinity'):
            return cls(curve)
        parts = text.split(',')
        if len(parts) != 2:
            raise InputError(text, "a point is given as \"x,y\" or \"inf\"")
        return cls(curve, *parts)

    @property
    def is_infinity(self):
        return self.x is None

    def __neg__(self):
        return ec_negate(self)

    def __add__(self, other):
        return ec_add(self, other)

    def __eq__(self, other):
        if not isinstance(other, ePoint):
            return NotImplemented
        return (self.curve, self.x, self.y) == (other.curve, other.x,
                                                other.y)

    def __hash__(self):
        return hash((self.curve, self.x, self.y))

    def __repr__(self):
        if self.is_infinity:
            return 'ePoint(inf)'
        return 'ePoint({}, {})'.format(self.x, self.y)

    def to_json(self):
        if self.is_infinity:
            return 'inf'
        return [util.frac_to_json(self.x), util.frac_to_json(self.y)]

def on_curve(curve, x, y):
    """
    :rtype: bool
    """
    return curve.contains(util.to_fraction(x), util.to_fraction(y))

def _same_curve(P, Q):
    if P.curve != Q.curve:
        raise InputError('points', "points lie on different curves")

def ec_negate(P):
    if P.is_infinity:
        return P
    return ePoint(P.curve, P.x, -P.y)

def ec_add(P, Q):
    """
    Exact chord and tangent addition.

    :type P: :class:`ePoint`
    :type Q: :class:`ePoint`
    :rtype: :class:`ePoint`
    """
    _same_curve(P, Q)
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    if P.x == Q.x:
        if P.y != Q.y or P.y == 0:
            return ePoint.infinity(P.curve)
        m = (3 * P.x * P.x + P.curve.a) / (2 * P.y)
    else:
        m = (Q.y - P.y) / (Q.x - P.x)
    x3 = m * m - P.x - Q.x
    y3 = m * (P.x - x3) - P.y
    return ePoint(P.curve, x3, y3)

def ec_double(P):
    return ec_add(P, P)

def ec_multiply(n, P):
    """
    ``nP`` by double and add.

    :param int n: multiplier, may be negative
    :type P: :class:`ePoint`
    :rtype: :class:`ePoint`
    """
    n = util.to_int(n, 'n')
    if n < 0:
        return ec_multiply(-n, ec_negate(P))
    result = ePoint.infinity(P.curve)
    addend = P
    while n:
        if n & 1:
            result = ec_add(result, addend)
        addend = ec_double(addend)
        n >>= 1
    return result

def naive_height(P):
    """
    ``h(P) = log max(|num x|, |den x|)``, zero at infinity.

    :rtype: float
    """
    if P.is_infinity:
        return 0.0
    return math.log(max(abs(P.x.numerator), P.x.denominator))

def torsion_order(P):
    """
    :rtype: int or None
    :returns: the order of ``P`` when it is at most :data:`TORSION_BOUND`,
        None otherwise (then ``P`` has infinite order over ``Q``)
    """
    Q = P
    for k in range(1, util.TORSION_BOUND + 1):
        if Q.is_infinity:
            return k
        Q = ec_add(Q, P)
    return None

def is_torsion(P):
    """
    Exact over ``Q``: a rational torsion point has order at most 12.

    :type P: :class:`ePoint`
    :rtype: bool
    """
    return torsion_order(P) is not None

def _double_x(num, den, a, b):
    """
    ``x(2P)`` from ``x(P) = num/den`` in lowest terms, or None when ``2P`` is
    the point at infinity.
    """
    n2, d2 = num * num, den * den
    new_num = n2 * n2 - 2 * a * n2 * d2 - 8 * b * num * d2 * den + \
        a * a * d2 * d2
    new_den = 4 * den * (n2 * num + a * num * d2 + b * d2 * den)
    if new_den == 0:
        return None
    g = math.gcd(new_num, new_den)
    if new_den < 0:
        g = -g
    return new_num // g, new_den // g

def canonical_height(P, depth=8, budget=None):
    """
    Canonical height ``lim 4^-n h(x(2^n P))`` by repeated doubling of the
    ``x`` coordinate.

    :type P: :class:`ePoint`
    :param int depth: number of doublings, at most :data:`MAX_DEPTH`
    :param int budget: digit budget override
    :rtype: tuple
    :returns: (value, error bound); both exactly 0.0 for torsion points
    """
    if depth > util.MAX_DEPTH:
        raise CapacityError("canonical height depth is capped at {}, got {}"
                            .format(util.MAX_DEPTH, depth))
    if depth < 1:
        raise InputError('depth', "depth must be positive")
    if P.is_infinity or is_torsion(P):
        logger.debug("canonical height of torsion point %r is 0", P)
        return 0.0, 0.0
    budget = util.digit_budget(budget)
    a, b = P.curve.a, P.curve.b
    num, den = P.x.numerator, P.x.denominator
    seen = set([(num, den)])
    terms = [math.log(max(abs(num), den))]
    for k in range(1, depth + 1):
        nxt = _double_x(num, den, a, b)
        if nxt is None or nxt in seen:
            logger.info("doubling orbit of %r is finite", P)
            return 0.0, 0.0
        num, den = nxt
        seen.add(nxt)
        if util.decimal_digits(max(abs(num), den)) > budget:
            raise BudgetError("x(2^{} P) exceeds the digit budget of {}"
                              " decimal digits".format(k, budget))
        terms.append(math.log(max(abs(num), den)) / 4 ** k)
    diffs = [abs(terms[k] - terms[k - 1]) for k in range(1, len(terms))]
    last = diffs[-1]
    before = diffs[-2] / 4 if len(diffs) > 1 else last
    bound = 4.0 / 3.0 * max(last, before)
    return terms[-1], bound

def exe_classify(a, b, P, Q, non_cm=True, depth=8, iters=6):
    """
    Arithmetic degree of ``(P, Q)`` under ``f(P, Q) = (aP, bQ)`` on
    ``E x E``: ``a^2`` when ``P`` has infinite order, ``b^2`` when ``Q``
    has, the larger of the two when both have, and 1 otherwise. The exact
    answer comes from torsion tests; a numeric cross-check iterates
    ``h(f^n(P, Q)) = a^(2n) h(P) + b^(2n) h(Q)`` on canonical heights.

    :param int a: multiplier on the first factor
    :param int b: multiplier on the second factor
    :type P: :class:`ePoint`
    :type Q: :class:`ePoint`
    :param bool non_cm: the user asserts ``E`` has no complex
        multiplication
    :rtype: dict
    """
    a = util.to_int(a, 'a')
    b = util.to_int(b, 'b')
    if a < 1 or b < 1:
        raise InputError('a, b', "multipliers must be positive")
    _same_curve(P, Q)
    if non_cm:
        logger.warning("E assumed without complex multiplication; this is"
                       " not verified")
    else:
        logger.warning("E may have complex multiplication; the Neron-Severi"
                       " rank is then 4 but the value set of the diagonal"
                       " isogeny is unchanged")
    tP, tQ = is_torsion(P), is_torsion(Q)
    hP = canonical_height(P, depth)
    hQ = canonical_height(Q, depth)
    candidates = [(1, '1')]
    if not tP:
        candidates.append((a * a, 'a^2'))
    if not tQ:
        candidates.append((b * b, 'b^2'))
    alpha, label = max(candidates, key=lambda c: c[0])

    def total(n):
        return a ** (2 * n) * hP[0] + b ** (2 * n) * hQ[0]
    if total(iters) > 0:
        ratio = total(iters + 1) / total(iters)
    else:
        ratio = 1.0
    agrees = abs(ratio - alpha) <= 1e-2 * alpha
    return {'alpha': alpha, 'label': label,
            'torsion': {'P': tP, 'Q': tQ},
            'canonical_heights': {'P': list(hP), 'Q': list(hQ)},
            'cross_check': {'ratio': ratio, 'iterations': iters,
                            'agrees': agrees},
            'non_cm_asserted': bool(non_cm), 'depth': depth,
            'citation': 'ExE'}
