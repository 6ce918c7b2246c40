# Copyright (C) 2026 The ArithDyn Development Team

"""
This module contains torus-invariant divisors ``D = sum a_rho D_rho`` on
simplicial toric varieties and the linear dynamics of their pullbacks:

* Cartier data ``m_sigma`` and the support function ``psi_D``,
* pullbacks of divisors under equivariant endomorphisms,
* the class group ``Z^rays / M`` with a section basis of ray divisors,
* the matrix of ``f^*`` on the class group, its eigenvalues, nef
  eigendivisors and potential arithmetic degrees,
* nef tests, the nef cone and equivariant realizability witnesses.

Divisor classes are written in the section basis: the ray divisors ``D_j``
for the rays ``j`` that are not among the first linearly independent rays
(the pivot rays). Every report echoes the basis.
"""

import logging
from fractions import Fraction
import arithdyn.util as util
from arithdyn.linalg.basic import pickleable, Error, InputError, \
    HypothesisError, CapacityError
from arithdyn.linalg.ratmat import ratMatrix, rational_eigen
import arithdyn.linalg.cones as cones
import arithdyn.linalg.smith as smith
import arithdyn.toric.toric_endo as toric_endo

logger = logging.getLogger(__name__)

def _dot(a, b):
    return sum((Fraction(x) * Fraction(y) for x, y in zip(a, b)),
               Fraction(0))

class tDivisor(pickleable):
    """
    A torus-invariant ``Q``-divisor, by its ray coefficients.
    """
    def __init__(self, f, coeffs):
        """
        Initalization

        :param f: the fan
        :type f: :class:`~arithdyn.toric.fan.fan`
        :param coeffs: one rational coefficient per ray
        """
        coeffs = tuple(util.to_fraction(a) for a in coeffs)
        if len(coeffs) != f.n_rays:
            raise InputError('divisor', "{} coefficients for {} rays".format(
                len(coeffs), f.n_rays))
        #: :class:`~arithdyn.toric.fan.fan`
        self.fan = f
        #: tuple of :class:`~fractions.Fraction`, the coefficients a_rho
        self.coeffs = coeffs
        super(tDivisor, self).__init__()

    @classmethod
    def ray(cls, f, i):
        """
        :rtype: :class:`tDivisor`
        :returns: the prime divisor ``D_i``
        """
        return cls(f, [int(j == i) for j in range(f.n_rays)])

    @classmethod
    def principal(cls, f, m):
        """
        :param m: character in ``M``
        :rtype: :class:`tDivisor`
        :returns: ``div(chi^m) = sum <m, v_rho> D_rho``
        """
        return cls(f, [_dot(m, v) for v in f.rays])

    def is_zero(self):
        return all(a == 0 for a in self.coeffs)

    def __add__(self, other):
        return tDivisor(self.fan, [a + b for a, b in
                                   zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        return tDivisor(self.fan, [a - b for a, b in
                                   zip(self.coeffs, other.coeffs)])

    def __mul__(self, scalar):
        scalar = util.to_fraction(scalar)
        return tDivisor(self.fan, [scalar * a for a in self.coeffs])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, tDivisor):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "tDivisor({})".format([util.frac_str(a) for a in self.coeffs])

    def to_json(self):
        return {'coeffs': [util.frac_to_json(a) for a in self.coeffs]}

def _as_divisor(f, d):
    if isinstance(d, tDivisor):
        return d
    return tDivisor(f, d)

def cartier_data(f, d):
    """
    For every maximal cone the covector ``m_sigma`` with
    ``<m_sigma, v_rho> = -a_rho`` on the rays of ``sigma``.

    :type f: :class:`~arithdyn.toric.fan.fan`
    :param d: the divisor
    :type d: :class:`tDivisor` or sequence of rationals
    :rtype: list of tuples, aligned with ``f.max_cones``
    """
    d = _as_divisor(f, d)
    out = []
    for k, c in enumerate(f.max_cones):
        if len(c) != f.dim:
            raise InputError('max_cones[{}]'.format(k), "cone is not full"
                             " dimensional")
        if f.dim == 0:
            out.append(())
            continue
        V = ratMatrix.from_rows(f.cone_rays(c), cols=f.dim)
        if V.rank() != f.dim:
            raise InputError('max_cones[{}]'.format(k), "singular ray matrix"
                             " (cone is not simplicial)")
        out.append(V.solve([-d.coeffs[i] for i in c]))
    return out

def support_value(f, d, v, cartier=None):
    """
    The support function ``psi_D(v) = <m_sigma, v>`` for ``v`` in
    ``sigma``; the value is checked to agree on every maximal cone
    containing ``v``.

    :type f: :class:`~arithdyn.toric.fan.fan`
    :param d: the divisor
    :param v: rational vector in the support of ``f``
    :param cartier: precomputed :func:`cartier_data`
    :rtype: :class:`~fractions.Fraction`
    """
    v = [util.to_fraction(x) for x in v]
    if all(x == 0 for x in v):
        return Fraction(0)
    if cartier is None:
        cartier = cartier_data(f, d)
    values = set()
    for c, m in zip(f.max_cones, cartier):
        if cones.in_cone(f.cone_rays(c), v):
            values.add(_dot(m, v))
    if not values:
        raise InputError(repr([util.frac_str(x) for x in v]),
                         "vector outside the support of the fan")
    if len(values) > 1:
        raise Error("support function is inconsistent at {}".format(v))
    return values.pop()

def pullback_divisor(endo, d):
    """
    ``f^*D`` for the toric morphism of ``endo``: the coefficient on
    ``D_rho`` is ``-psi_D(phi(v_rho))``.

    :type endo: :class:`~arithdyn.toric.toric_endo.latticeEndo`
    :param d: the divisor
    :rtype: :class:`tDivisor`
    """
    f = endo.fan
    d = _as_divisor(f, d)
    cartier = cartier_data(f, d)
    return tDivisor(f, [-support_value(f, d, endo.apply(v), cartier)
                        for v in f.rays])

class classGroup(pickleable):
    """
    The class group ``Cl = Z^rays / M`` presented by the Smith normal form
    of the ray matrix.
    """
    def __init__(self, f, snf, pivot_rays, section_rays, torsion):
        #: :class:`~arithdyn.toric.fan.fan`
        self.fan = f
        #: tuple of :class:`~arithdyn.linalg.ratmat.ratMatrix`, (U, D, V)
        self.snf = snf
        #: tuple of ints, the first linearly independent rays
        self.pivot_rays = pivot_rays
        #: tuple of ints, rays whose divisors form the section basis
        self.section_rays = section_rays
        #: list of ints, torsion invariants greater than one
        self.torsion = torsion
        self._pivot_matrix = ratMatrix.from_rows(f.cone_rays(pivot_rays),
                                                 cols=f.dim)
        super(classGroup, self).__init__()

    @property
    def rank(self):
        return len(self.section_rays)

    def basis_labels(self):
        return ['D{}'.format(j) for j in self.section_rays]

    def coordinates(self, d):
        """
        Coordinates of the class of ``d`` in the section basis.

        :rtype: tuple of :class:`~fractions.Fraction`
        """
        d = _as_divisor(self.fan, d)
        if self.fan.dim == 0:
            return tuple(d.coeffs)
        m = self._pivot_matrix.solve([d.coeffs[i] for i in self.pivot_rays])
        return tuple(d.coeffs[j] - _dot(m, self.fan.rays[j])
                     for j in self.section_rays)

    def divisor(self, coords):
        """
        :param coords: section coordinates
        :rtype: :class:`tDivisor`
        """
        coeffs = [Fraction(0)] * self.fan.n_rays
        for j, x in zip(self.section_rays, coords):
            coeffs[j] = util.to_fraction(x)
        return tDivisor(self.fan, coeffs)

    def is_principal(self, d):
        """
        Whether ``d`` is zero in ``Cl tensor Q``.
        """
        return all(x == 0 for x in self.coordinates(d))

    def to_json(self):
        return {'rank': self.rank, 'torsion': self.torsion,
                'basis': self.basis_labels(),
                'pivot_rays': list(self.pivot_rays),
                'section_rays': list(self.section_rays),
                'smith_diagonal': [int(self.snf[1][i, i]) for i in
                                   range(min(self.snf[1].rows,
                                             self.snf[1].cols))]}

def class_group(f):
    """
    Cokernel of ``M -> Z^rays``, ``m -> (<m, v_rho>)_rho``.

    :type f: :class:`~arithdyn.toric.fan.fan`
    :rtype: :class:`classGroup`
    """
    R = ratMatrix.from_rows(f.rays, cols=f.dim)
    if R.rank() != f.dim:
        raise InputError(f.name or 'fan', "degenerate ray span: rays do not"
                         " span Q^{}".format(f.dim))
    snf = smith.smith_normal_form(R)
    D = snf[1]
    torsion = [int(D[i, i]) for i in range(min(D.rows, D.cols))
               if D[i, i] > 1]
    pivots = tuple(R.transpose().rref()[1]) if f.dim else ()
    section = tuple(j for j in range(f.n_rays) if j not in pivots)
    return classGroup(f, snf, pivots, section, torsion)

def nef_inequalities(f, cg=None):
    """
    Rows ``a`` such that a class with section coordinates ``x`` is nef iff
    ``a . x >= 0`` for all rows: for every maximal cone ``sigma`` and ray
    ``rho`` outside it, ``<m_sigma, v_rho> + a_rho >= 0``.

    :type f: :class:`~arithdyn.toric.fan.fan`
    :type cg: :class:`classGroup`
    :rtype: list of tuples
    """
    if cg is None:
        cg = class_group(f)
    position = dict((j, k) for k, j in enumerate(cg.section_rays))
    rows = set()
    for c in f.max_cones:
        V = ratMatrix.from_rows(f.cone_rays(c), cols=f.dim)
        Vt = V.transpose()
        for r in range(f.n_rays):
            if r in c:
                continue
            w = Vt.solve(f.rays[r])
            row = [Fraction(0)] * cg.rank
            for p, j in enumerate(c):
                if j in position:
                    row[position[j]] -= w[p]
            if r in position:
                row[position[r]] += 1
            if any(x != 0 for x in row):
                rows.add(util.primitive(row))
    return sorted(rows)

def is_nef(f, d):
    """
    Support-function convexity: ``<m_sigma, v_rho> >= -a_rho`` for every
    maximal cone ``sigma`` and every ray ``rho`` not in ``sigma``.

    :type f: :class:`~arithdyn.toric.fan.fan`
    :param d: the divisor
    :rtype: bool
    """
    d = _as_divisor(f, d)
    for c, m in zip(f.max_cones, cartier_data(f, d)):
        for r in range(f.n_rays):
            if r not in c and _dot(m, f.rays[r]) < -d.coeffs[r]:
                return False
    return True

def nef_cone_rays(f):
    """
    Extreme rays of the nef cone in section coordinates, by double
    description over :func:`nef_inequalities`.

    :type f: :class:`~arithdyn.toric.fan.fan`
    :rtype: list of tuples of ints
    """
    cg = class_group(f)
    if cg.rank > util.MAX_NEF_RANK:
        raise CapacityError("nef cone enumeration is capped at Picard rank"
                            " {}, got {}".format(util.MAX_NEF_RANK, cg.rank))
    return cones.extreme_rays(nef_inequalities(f, cg), cg.rank)

class pullbackAction(pickleable):
    """
    The linear action ``f^*`` on the class group.
    """
    def __init__(self, f, cg, matrix, source, tol=None):
        """
        Initalization

        :param f: the fan
        :param cg: its class group
        :type cg: :class:`classGroup`
        :param matrix: ``rank x rank`` matrix of ``f^*`` in the section
            basis (columns are images of basis classes)
        :param string source: ``"equivariant"`` or ``"linear"``
        :param float tol: numeric tolerance
        """
        #: :class:`~arithdyn.toric.fan.fan`
        self.fan = f
        #: :class:`classGroup`
        self.class_group = cg
        #: :class:`~arithdyn.linalg.ratmat.ratMatrix`
        self.matrix = matrix
        #: str, how the action was obtained
        self.source = source
        #: float, numeric tolerance
        self.tol = util.TOL if tol is None else tol
        #: :class:`~arithdyn.linalg.ratmat.eigenReport`
        self.eigen = rational_eigen(matrix, self.tol)
        #: list of str
        self.warnings = []
        if not matrix.is_integer():
            msg = "pullback matrix has non-integral entries"
            logger.warning(msg)
            self.warnings.append(msg)
        self._nef_rows = nef_inequalities(f, cg)
        #: dict, eigenvalue -> (nef status, witness) for |eigenvalue| > 1
        self.nef_flags = {}
        for lam in self.eigen.eigenvalues():
            if abs(lam) > 1:
                self.nef_flags[lam] = nef_eigendivisor(self, lam)
        super(pullbackAction, self).__init__()

    def to_json(self):
        return {
            'basis': self.class_group.basis_labels(),
            'matrix': self.matrix.to_json(),
            'source': self.source,
            'integral': self.matrix.is_integer(),
            'eigen': self.eigen.to_json(),
            'nef_eigendivisors': [
                {'eigenvalue': util.frac_to_json(lam),
                 'nef': status,
                 'witness': None if w is None else list(w)}
                for lam, (status, w) in sorted(self.nef_flags.items(),
                                               reverse=True)],
            'warnings': self.warnings}

def nef_eigendivisor(action, lam):
    """
    Whether the eigenspace of ``lam`` contains a nonzero nef class.

    :type action: :class:`pullbackAction`
    :param lam: rational eigenvalue
    :rtype: tuple
    :returns: (status, witness) with status True, False, or None when
        ``lam`` is not a rational eigenvalue (unsupported); the witness is
        a primitive integer class in section coordinates
    """
    if isinstance(lam, float) or action.eigen.multiplicity(lam) == 0:
        return None, None
    basis = action.eigen.eigenspace(lam)
    k = len(basis)
    rows = [tuple(_dot(a, b) for b in basis) for a in action._nef_rows]

    def combine(t):
        return util.primitive([sum((ti * b[i] for ti, b in zip(t, basis)),
                                   Fraction(0))
                               for i in range(action.class_group.rank)])
    line = cones.lineality(rows, k)
    if line:
        return True, combine(line[0])
    rays = cones.extreme_rays(rows, k)
    if rays:
        return True, combine(rays[0])
    return False, None

def pullback_matrix(endo, tol=None):
    """
    Matrix of ``f^*`` on the class group for an equivariant endomorphism.

    :type endo: :class:`~arithdyn.toric.toric_endo.latticeEndo`
    :rtype: :class:`pullbackAction`
    """
    f = endo.fan
    ok, witness = toric_endo.check_compatible(endo.matrix, f)
    if not ok:
        raise HypothesisError('endo', "cone {} is not mapped into a cone"
                              .format(witness['cone']), 'cone-preservation')
    cg = class_group(f)
    for k in range(f.dim):
        m = [int(i == k) for i in range(f.dim)]
        if not cg.is_principal(pullback_divisor(endo, tDivisor.principal(f,
                                                                         m))):
            raise HypothesisError('endo', "pullback is not well defined"
                                  " modulo principal divisors", 'toricsk')
    columns = [cg.coordinates(pullback_divisor(endo, tDivisor.ray(f, j)))
               for j in cg.section_rays]
    matrix = ratMatrix.from_columns(columns, rows=cg.rank)
    return pullbackAction(f, cg, matrix, 'equivariant', tol)

def linear_action(f, matrix, tol=None):
    """
    A user supplied action on the class group of ``f`` (for morphisms that
    are not equivariant).

    :type f: :class:`~arithdyn.toric.fan.fan`
    :type matrix: :class:`~arithdyn.linalg.ratmat.ratMatrix`
    :rtype: :class:`pullbackAction`
    """
    cg = class_group(f)
    if matrix.shape != (cg.rank, cg.rank):
        raise InputError('matrix', "expected a {0}x{0} matrix on the class"
                         " group".format(cg.rank))
    return pullbackAction(f, cg, matrix, 'linear', tol)

def potential_arithmetic_degrees(action):
    """
    Eigenvalue moduli greater than one, in decreasing order, each tagged
    with exactness and the nef eigendivisor status.

    :type action: :class:`pullbackAction`
    :rtype: list of dicts with keys ``modulus``, ``eigenvalue``,
        ``rational``, ``nef_eigendivisor``, ``witness``
    """
    tol = action.tol
    out = []
    for lam in action.eigen.eigenvalues():
        if abs(lam) > 1:
            status, witness = action.nef_flags[lam]
            out.append({'modulus': abs(float(lam)), 'eigenvalue': lam,
                        'rational': True, 'nef_eigendivisor': status,
                        'witness': witness})
    moduli = []
    for z in action.eigen.residual.numeric_roots(tol):
        r = abs(z)
        if r > 1 + tol and not any(abs(r - s) <= 1e-7 * max(1.0, s)
                                   for s in moduli):
            moduli.append(r)
    for r in moduli:
        out.append({'modulus': r, 'eigenvalue': None, 'rational': False,
                    'nef_eigendivisor': None, 'witness': None})
    out.sort(key=lambda e: (-e['modulus'], -(e['eigenvalue'] or 0)))
    return out

def classify_action(action, max_power=12):
    """
    Int-amplified test (every eigenvalue modulus exceeds one), scalar test
    and the least iterate acting as a scalar ``q > 1``.

    :type action: :class:`pullbackAction`
    :rtype: dict
    """
    M = action.matrix
    n = M.rows
    tol = action.tol
    moduli = action.eigen.numeric_moduli
    int_amplified = n > 0 and all(r > 1 + tol for r in moduli)

    def scalar_of(A):
        q = A[0, 0] if n else None
        if n and A == q * ratMatrix.identity(n):
            return q
        return None
    scalar = scalar_of(M)
    polarized_power = None
    A = ratMatrix.identity(n)
    for k in range(1, max_power + 1):
        A = A * M
        q = scalar_of(A)
        if q is not None and q > 1:
            polarized_power = k
            break
    if scalar is not None:
        verdict = "scalar action: every potential arithmetic degree is" \
                  " realized (dialprop)"
    else:
        verdict = "undetermined"
    return {'int_amplified': int_amplified,
            'scalar': None if scalar is None else util.frac_to_json(scalar),
            'polarized_power': polarized_power, 'verdict': verdict}

def _projective_space_dim(f):
    """
    ``k`` if ``f`` is the fan of ``P^k`` in some lattice basis, else None.
    """
    k = f.dim
    if f.n_rays != k + 1 or len(f.max_cones) != k + 1:
        return None
    if any(sum(r[i] for r in f.rays) != 0 for i in range(k)):
        return None
    if k and abs(ratMatrix.from_rows(f.rays[:k]).det()) != 1:
        return None
    if any(len(c) != k for c in f.max_cones):
        return None
    return k

def _projective_components(f):
    """
    Dimensions ``[k1, ..., kr]`` when ``f`` is the fan of
    ``P^k1 x ... x P^kr``, found by splitting ``f`` until every piece is a
    projective space fan. None when some simple piece is not one.

    :type f: :class:`~arithdyn.toric.fan.fan`
    :rtype: list of ints or None
    """
    k = _projective_space_dim(f)
    if k is not None:
        return [k]
    try:
        simple, witness = toric_endo.is_simple(f)
        if simple:
            return None
        pieces = toric_endo.split_fan(f, witness).factors
    except (CapacityError, InputError):
        return None
    dims = []
    for fac in pieces:
        sub = _projective_components(fac.fan)
        if sub is None:
            return None
        dims.extend(sub)
    return dims

def realizability_report_equivariant(endo, iters=10, budget=None):
    """
    Eigen-fan decomposition plus one witness point per eigenvalue
    ``n_i > 1``: the torus point with coordinate 2 on factor ``i`` and 1
    elsewhere. When every factor fan is a product of projective space fans
    the orbit of the witness under the induced power maps is iterated and
    its arithmetic degree estimated.

    :type endo: :class:`~arithdyn.toric.toric_endo.latticeEndo`
    :param int iters: iterations of the numeric estimate
    :param int budget: digit budget override
    :rtype: dict
    """
    import arithdyn.dynamics.heights as heights
    dec = toric_endo.eigen_fan_decomposition(endo)
    m = dec.stabilizing_power
    dims = [_projective_components(fac.fan) for fac in dec.factors]
    numeric = all(ks is not None for ks in dims)
    system = None
    if numeric:
        system = heights.dynSystem([heights.powerMap(k, fac.eigenvalue)
                                    for ks, fac in zip(dims, dec.factors)
                                    for k in ks])
    witnesses = []
    for i, fac in enumerate(dec.factors):
        if fac.eigenvalue <= 1:
            continue
        entry = {'factor': i, 'eigenvalue': fac.eigenvalue,
                 'alpha': fac.eigenvalue ** (1.0 / m)}
        if numeric:
            coords = []
            for j, ks in enumerate(dims):
                for k in ks:
                    coords.append([2] * k + [1] if j == i
                                  else [1] * (k + 1))
            point = heights.projPoint(coords)
            estimate = heights.alpha_estimate(system, point, iters, budget)
            entry['kind'] = 'numeric'
            entry['components'] = dims[i]
            entry['point'] = [list(c) for c in point.factors]
            entry['estimate_iterate'] = estimate.estimate
            entry['estimate'] = estimate.estimate ** (1.0 / m)
            entry['error'] = abs(entry['estimate'] - entry['alpha'])
        else:
            entry['kind'] = 'symbolic (asserted by theorem)'
            entry['point'] = "torus point with coordinates 2 on factor {}" \
                             " and 1 elsewhere".format(i)
        witnesses.append(entry)
    return {'decomposition': dec.to_json(), 'stabilizing_power': m,
            'witnesses': witnesses,
            'citation': 'equivariantrealizability'}
