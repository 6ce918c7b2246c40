# Copyright (C) 2026 The ArithDyn Development Team

"""
This module models an abelian surface ``A`` with ``End(A) x Q = M_2(Q)``
and Rosati involution the transpose. The Neron-Severi space is the space of
symmetric 2x2 matrices with basis ``E11, E22, E12+E21``; an isogeny ``f``
acts by ``theta_f(alpha) = f^T alpha f``. A class is nef iff it is positive
semidefinite and ample iff positive definite.
"""

import logging
from fractions import Fraction
import arithdyn.util as util
from arithdyn.linalg.basic import pickleable, InputError, HypothesisError
from arithdyn.linalg.ratmat import ratMatrix, rational_eigen

logger = logging.getLogger(__name__)

#: list of str, labels of the symmetric class basis
BASIS_LABELS = ['E11', 'E22', 'E12+E21']
#: tuple of str, the four endomorphism algebra types of a simple abelian
#: variety
ALBERT_TYPES = ('I', 'II', 'III', 'IV')

def check_albert_type(kind):
    """
    Only type II with ``M_2(Q)`` and the transpose involution is modelled.

    :param string kind: Albert type label
    """
    kind = str(kind).upper()
    if kind not in ALBERT_TYPES:
        raise InputError(kind, "unknown Albert type; one of " +
                         ", ".join(ALBERT_TYPES))
    if kind != 'II':
        raise HypothesisError(kind, "only type II (End = M2(Q), Rosati ="
                              " transpose) is supported", 'AlbertClass')
    return kind

class endoMat(pickleable):
    """
    An isogeny ``f`` as a nonsingular 2x2 rational matrix.
    """
    def __init__(self, matrix):
        if not isinstance(matrix, ratMatrix):
            matrix = ratMatrix.from_rows(matrix)
        if matrix.shape != (2, 2):
            raise InputError('f', "endomorphisms are 2x2 matrices")
        if matrix.det() == 0:
            raise InputError('f', "singular matrix is not an isogeny")
        #: :class:`~arithdyn.linalg.ratmat.ratMatrix`
        self.matrix = matrix
        super(endoMat, self).__init__()

    def compose(self, other):
        """
        :returns: ``self o other``
        """
        return endoMat(self.matrix * other.matrix)

    def to_json(self):
        return self.matrix.to_json()

def rosati(f):
    """
    :type f: :class:`endoMat`
    :rtype: :class:`endoMat`
    :returns: ``f'`` = ``f^T``
    """
    return endoMat(f.matrix.transpose())

class symClass(pickleable):
    """
    ``[[x11, x12], [x12, x22]]``, stored by its coordinates
    ``(x11, x22, x12)`` in the basis ``E11, E22, E12+E21``.
    """
    def __init__(self, coords):
        coords = tuple(util.to_fraction(x) for x in coords)
        if len(coords) != 3:
            raise InputError('class', "symmetric classes have 3 coordinates")
        #: tuple of :class:`~fractions.Fraction`
        self.coords = coords
        super(symClass, self).__init__()

    @classmethod
    def from_matrix(cls, m):
        if not m.is_symmetric() or m.shape != (2, 2):
            raise InputError('class', "expected a symmetric 2x2 matrix")
        return cls((m[0, 0], m[1, 1], m[0, 1]))

    def matrix(self):
        x11, x22, x12 = self.coords
        return ratMatrix.from_rows([[x11, x12], [x12, x22]])

    def det(self):
        x11, x22, x12 = self.coords
        return x11 * x22 - x12 * x12

    def trace(self):
        return self.coords[0] + self.coords[1]

    def __eq__(self, other):
        if not isinstance(other, symClass):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def to_json(self):
        return [util.frac_to_json(x) for x in self.coords]

def _as_class(alpha):
    if isinstance(alpha, symClass):
        return alpha
    if isinstance(alpha, ratMatrix):
        return symClass.from_matrix(alpha)
    return symClass(alpha)

def is_nef_class(alpha):
    """
    ``det >= 0`` and ``tr >= 0``.

    :rtype: bool
    """
    alpha = _as_class(alpha)
    return alpha.det() >= 0 and alpha.trace() >= 0

def is_ample_class(alpha):
    """
    ``det > 0`` and ``tr > 0``.

    :rtype: bool
    """
    alpha = _as_class(alpha)
    return alpha.det() > 0 and alpha.trace() > 0

def subspace_meets_nef(basis, strict=False):
    """
    Whether the span of ``basis`` contains a nonzero nef class (an ample
    class when ``strict``). On a line the determinant decides; on a plane
    the determinant is a binary quadratic form which must not be negative
    (semi)definite; the whole space contains the identity.

    :param basis: linearly independent coordinate vectors
    :param bool strict: ask for an ample class
    :rtype: bool
    """
    basis = [_as_class(v) for v in basis]
    if not basis:
        return False
    if len(basis) == 1:
        d = basis[0].det()
        return d > 0 if strict else d >= 0
    if len(basis) == 2:
        (u11, u22, u12), (v11, v22, v12) = basis[0].coords, basis[1].coords
        A = u11 * u22 - u12 * u12
        C = v11 * v22 - v12 * v12
        B = u11 * v22 + v11 * u22 - 2 * u12 * v12
        disc = B * B - 4 * A * C
        if strict:
            return not (A <= 0 and C <= 0 and disc <= 0)
        return not (A < 0 and disc < 0)
    return True

class thetaAction(pickleable):
    """
    ``theta_f`` on the symmetric classes, with its eigen structure and the
    nef and ample status of every rational eigenspace.
    """
    def __init__(self, endo, matrix, tol=None):
        #: :class:`endoMat`
        self.endo = endo
        #: :class:`~arithdyn.linalg.ratmat.ratMatrix`, columns are images
        #: of the basis classes
        self.matrix = matrix
        #: :class:`~arithdyn.linalg.ratmat.eigenReport`
        self.eigen = rational_eigen(matrix, tol)
        #: dict, eigenvalue -> {'nef': bool, 'ample': bool}
        self.flags = {}
        for lam in self.eigen.eigenvalues():
            basis = self.eigen.eigenspace(lam)
            self.flags[lam] = {'nef': subspace_meets_nef(basis),
                               'ample': subspace_meets_nef(basis, True)}
        super(thetaAction, self).__init__()

    def eigendivisors(self):
        """
        :rtype: list of dicts
        :returns: per rational eigenvalue (decreasing) its eigenspace and
            flags
        """
        out = []
        for lam in self.eigen.eigenvalues():
            basis = self.eigen.eigenspace(lam)
            out.append({'eigenvalue': util.frac_to_json(lam),
                        'eigenspace': [_label(v) for v in basis],
                        'nef': self.flags[lam]['nef'],
                        'ample': self.flags[lam]['ample']})
        return out

    def to_json(self):
        return {'basis': BASIS_LABELS, 'endo': self.endo.to_json(),
                'matrix': self.matrix.to_json(),
                'eigen': self.eigen.to_json(),
                'eigendivisors': self.eigendivisors()}

def _label(v):
    """
    Name a coordinate vector in the basis, e.g. ``E11`` or ``E11 - E22``.
    """
    v = util.primitive(v)
    if next(c for c in v if c != 0) < 0:
        v = tuple(-c for c in v)
    nonzero = [(c, name) for c, name in zip(v, BASIS_LABELS) if c != 0]
    text = ''
    for c, name in nonzero:
        if len(nonzero) > 1 and '+' in name:
            name = '(' + name + ')'
        term = name if abs(c) == 1 else '{}{}'.format(abs(c), name)
        if not text:
            text = term
        else:
            text += (' - ' if c < 0 else ' + ') + term
    return text

def theta_matrix(f, tol=None):
    """
    Matrix of ``alpha -> f^T alpha f`` in the basis ``E11, E22, E12+E21``.

    :param f: the isogeny
    :type f: :class:`endoMat` or 2x2 :class:`ratMatrix`
    :rtype: :class:`thetaAction`
    """
    if not isinstance(f, endoMat):
        f = endoMat(f)
    ft = f.matrix.transpose()
    columns = []
    for k in range(3):
        e = symClass([int(j == k) for j in range(3)]).matrix()
        columns.append(symClass.from_matrix(ft * e * f.matrix).coords)
    return thetaAction(f, ratMatrix.from_columns(columns, rows=3), tol)

def _descending(values):
    return sorted(set(values), reverse=True)

def counterexample_report(a, b):
    """
    Eigen structure of ``theta`` for ``f = diag(a, b)`` with ``a > b >= 1``
    on a simple abelian surface with ``End = M_2(Q)``, and on ``E x E`` for
    comparison.

    :param int a: larger multiplier
    :param int b: smaller multiplier
    :rtype: dict
    """
    a = util.to_int(a, 'a')
    b = util.to_int(b, 'b')
    if not a > b >= 1:
        raise InputError('a, b', "need a > b >= 1, got a={}, b={}".format(
            a, b))
    theta = theta_matrix(ratMatrix.diag([a, b]))
    realizable = _descending([a * a, 1])
    non_realizable = _descending([a * b] + ([b * b] if b > 1 else []))
    return {
        'parameters': {'a': a, 'b': b},
        'parameters_note': "only a and b enter the construction",
        'theta': theta.to_json(),
        'eigenvalues': [util.frac_to_json(x) for x in
                        theta.eigen.eigenvalues()],
        'eigendivisors': theta.eigendivisors(),
        'realizable': {
            'values': realizable,
            'citation': 'silv1',
            'hypothesis': "A simple: every point is preperiodic or has a"
                          " dense orbit, the only proper abelian"
                          " subvariety is 0"},
        'non_realizable': {
            'values': non_realizable,
            'citation': 'MainCounterexample',
            'hypothesis': "non-realizable under the stated hypotheses (A"
                          " simple, End(A) x Q = M2(Q))"},
        'product_comparison': {
            'variety': 'E x E',
            'realizable': _descending([a * a, b * b, 1]),
            'non_realizable': [a * b],
            'citation': 'ExE'},
        'citations': ['absetup', 'MainCounterexample', 'silv1', 'ExE']}

def general_isogeny_report(f, simple_hypothesis=False, tol=None):
    """
    Eigen structure of ``theta_f`` for an integral isogeny. With the
    simplicity hypothesis the realizable arithmetic degrees are
    ``{lambda_1, 1}`` and every other potential degree is non-realizable;
    without it the degrees are labelled potential only.

    :param f: integer 2x2 matrix with nonzero determinant
    :param bool simple_hypothesis: ``A`` is asserted simple
    :rtype: dict
    """
    if not isinstance(f, endoMat):
        f = endoMat(f)
    if not f.matrix.is_integer():
        raise InputError('f', "isogenies have integer matrices")
    theta = theta_matrix(f, tol)
    tol = theta.eigen.tolerance
    lam1 = theta.eigen.spectral_radius
    potential = []
    for lam in theta.eigen.eigenvalues():
        if abs(lam) > 1 and abs(lam) not in potential:
            potential.append(abs(lam))
    for z in theta.eigen.residual.numeric_roots(tol):
        r = abs(z)
        if r > 1 + tol and not any(abs(r - float(s)) <= 1e-7 * max(1.0, r)
                                   for s in potential):
            potential.append(r)
    potential.sort(key=float, reverse=True)

    def as_json(x):
        return util.frac_to_json(x) if isinstance(x, Fraction) else x
    report = {'theta': theta.to_json(), 'dynamical_degree': lam1,
              'potential_degrees': [as_json(x) for x in potential],
              'simple_hypothesis': bool(simple_hypothesis),
              'citations': ['absetup']}
    if simple_hypothesis:
        top = [x for x in potential if abs(float(x) - lam1) <= tol *
               max(1.0, lam1)]
        rest = [x for x in potential if x not in top]
        report['realizable'] = {
            'values': [as_json(x) for x in top] + [1],
            'citation': 'silv1', 'hypothesis': "A simple"}
        report['non_realizable'] = {
            'values': [as_json(x) for x in rest],
            'citation': 'silv1', 'hypothesis': "A simple"}
        report['citations'].append('silv1')
    else:
        report['labels'] = "potential only: realizability depends on the" \
                           " variety, pass the simplicity hypothesis"
    return report

def kodaira_product_report(a, b, degrees):
    """
    ``X = (P^1)^k x E^2`` with ``h = h_1 x ... x h_k`` of degrees ``d_i``
    on the ``P^1`` factors and ``(P, Q) -> (aP, bQ)`` on ``E x E``.

    :param int a: multiplier on the first elliptic factor
    :param int b: multiplier on the second elliptic factor
    :param list degrees: degrees ``d_i >= 1`` of the ``P^1`` maps
    :rtype: dict
    """
    a = util.to_int(a, 'a')
    b = util.to_int(b, 'b')
    degrees = [util.to_int(d, 'degrees') for d in degrees]
    if a < 1 or b < 1 or any(d < 1 for d in degrees):
        raise InputError('a, b, degrees', "all multipliers and degrees must"
                         " be positive")
    potential = _descending(degrees + [a * a, a * b, b * b])
    arithmetic = _descending([1] + degrees + [a * a, b * b])
    non_arithmetic = [x for x in potential if x not in arithmetic]
    return {'parameters': {'a': a, 'b': b, 'degrees': degrees},
            'potential_degrees': potential,
            'arithmetic_degrees': {'values': arithmetic,
                                   'citation': 'Kodiradimrealizability'},
            'non_arithmetic': {'values': non_arithmetic,
                               'citation': 'Kodiradimrealizability'},
            'int_amplified': all(x > 1 for x in potential),
            'citations': ['Kodiradimrealizability', 'ExE']}
