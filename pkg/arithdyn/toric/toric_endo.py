# Copyright (C) 2026 The ArithDyn Development Team

"""
This module contains the analysis of equivariant endomorphisms of toric
varieties, given as lattice maps ``phi: N -> N`` compatible with a fan:

* fan compatibility and the induced permutation of rays,
* the stabilizing iterate ``phi^m`` fixing every ray,
* the decomposition of the fan into a product of eigen-fans, one for each
  eigenvalue of ``phi^m``,
* simplicity of a fan (no product decomposition) by exhaustive search over
  ray bipartitions, and endomorphisms witnessing non-simplicity.

The bipartition search is split across MPI ranks when :mod:`mpi4py` is
available; the lexicographically smallest witness is always returned.
"""

import logging
import itertools
import math
from functools import reduce
import arithdyn.util as util
from arithdyn.linalg.basic import pickleable, comm, Error, InputError, \
    HypothesisError, CapacityError
from arithdyn.linalg.ratmat import ratMatrix
import arithdyn.linalg.cones as cones
import arithdyn.linalg.smith as smith
import arithdyn.toric.fan as fan_mod

logger = logging.getLogger(__name__)

def _as_matrix(phi, dim):
    if isinstance(phi, latticeEndo):
        phi = phi.matrix
    if not isinstance(phi, ratMatrix):
        phi = ratMatrix.from_rows(phi)
    if phi.shape != (dim, dim):
        raise InputError('endo', "matrix of shape {}x{} does not act on a rank"
                         " {} lattice".format(phi.rows, phi.cols, dim))
    if not phi.is_integer():
        raise InputError('endo', "lattice maps have integer entries")
    if dim and phi.det() == 0:
        raise InputError('endo', "matrix is singular")
    return phi

class latticeEndo(pickleable):
    """
    An injective lattice map ``phi: N -> N`` acting on a fan.
    """
    def __init__(self, matrix, f, check=False):
        """
        Initalization

        :param matrix: square integer matrix
        :type matrix: :class:`~arithdyn.linalg.ratmat.ratMatrix` or list
        :param f: the fan acted on
        :type f: :class:`~arithdyn.toric.fan.fan`
        :param bool check: verify compatibility with ``f``
        """
        #: :class:`~arithdyn.linalg.ratmat.ratMatrix`, the lattice map
        self.matrix = _as_matrix(matrix, f.dim)
        #: :class:`~arithdyn.toric.fan.fan`, the fan acted on
        self.fan = f
        super(latticeEndo, self).__init__()
        if check:
            ok, witness = check_compatible(self.matrix, f)
            if not ok:
                raise HypothesisError('endo', "cone {} is not mapped into a"
                                      " cone".format(witness['cone']),
                                      'cone-preservation')

    def apply(self, v):
        """
        :rtype: tuple of ints
        """
        return tuple(int(x) for x in self.matrix.apply(v))

    def compose(self, other):
        """
        :rtype: :class:`latticeEndo`
        :returns: ``self o other``
        """
        return latticeEndo(self.matrix * other.matrix, self.fan)

    def power(self, m):
        """
        :rtype: :class:`latticeEndo`
        """
        return latticeEndo(self.matrix ** m, self.fan)

    def to_json(self):
        return {'matrix': self.matrix.as_int_rows(), 'fan': self.fan.name}

def check_compatible(phi, f):
    """
    Whether ``phi`` maps every cone of ``f`` into some cone of ``f``.

    :param phi: square integer matrix
    :type f: :class:`~arithdyn.toric.fan.fan`
    :rtype: tuple
    :returns: (flag, witness) where witness describes the first maximal cone
        whose image lies in no cone, or None
    """
    phi = _as_matrix(phi, f.dim)
    for k, c in enumerate(f.max_cones):
        images = [phi.apply(v) for v in f.cone_rays(c)]
        if not any(all(cones.in_cone(f.cone_rays(d), w) for w in images)
                   for d in f.max_cones):
            return False, {'cone': k, 'rays': list(c),
                           'images': [[int(x) for x in w] for w in images]}
    return True, None

def ray_permutation(endo):
    """
    The permutation ``pi`` of rays with ``phi(v_i) = c_i v_pi(i)``.

    :type endo: :class:`latticeEndo`
    :rtype: tuple
    :returns: (permutation, positive integer scale factors)
    """
    f = endo.fan
    perm, scales = [], []
    for i, v in enumerate(f.rays):
        w = endo.apply(v)
        g = util.vector_gcd(w)
        u = tuple(x // g for x in w)
        if u not in f.rays:
            raise HypothesisError('endo', "image {} of ray {} is not a"
                                  " multiple of a ray (not ray-to-ray)"
                                  .format(list(w), i), 'iterationlemma')
        perm.append(f.rays.index(u))
        scales.append(g)
    if len(set(perm)) != len(perm):
        raise HypothesisError('endo', "rays are not permuted",
                              'iterationlemma')
    return tuple(perm), tuple(scales)

def cycle_lengths(perm):
    """
    :rtype: list of ints
    """
    seen, lengths = set(), []
    for start in range(len(perm)):
        if start in seen:
            continue
        k, i = 0, start
        while i not in seen:
            seen.add(i)
            i = perm[i]
            k += 1
        lengths.append(k)
    return lengths

def _lcm(a, b):
    return a * b // math.gcd(a, b)

def stabilizing_power(endo):
    """
    Least ``m >= 1`` such that ``phi^m`` fixes every ray.

    :type endo: :class:`latticeEndo`
    :rtype: int
    """
    perm, _ = ray_permutation(endo)
    m = reduce(_lcm, cycle_lengths(perm), 1)
    fixed, _ = ray_permutation(endo.power(m))
    if any(i != j for i, j in enumerate(fixed)):
        raise Error("phi^{} does not fix the rays".format(m))
    return m

class eigenFactor(pickleable):
    """
    One factor of a :class:`decomposition`.
    """
    def __init__(self, eigenvalue, basis, factor_fan, ray_indices):
        #: int or None, eigenvalue of the stabilizing iterate on this factor
        self.eigenvalue = eigenvalue
        #: list of tuples of ints, basis of the saturated sublattice
        self.basis = basis
        #: :class:`~arithdyn.toric.fan.fan`, the factor fan in that basis
        self.fan = factor_fan
        #: tuple of ints, source rays belonging to this factor
        self.ray_indices = ray_indices
        super(eigenFactor, self).__init__()

    def to_json(self):
        return {'eigenvalue': self.eigenvalue,
                'basis': [list(b) for b in self.basis],
                'fan': self.fan.to_json(),
                'ray_indices': list(self.ray_indices)}

class decomposition(pickleable):
    """
    A splitting of a fan into a product of factor fans.
    """
    def __init__(self, source, stabilizing_power, factors, lattice_index):
        #: :class:`~arithdyn.toric.fan.fan`, the decomposed fan
        self.fan = source
        #: int, iterate of the endomorphism used (1 for plain splittings)
        self.stabilizing_power = stabilizing_power
        #: list of :class:`eigenFactor`
        self.factors = factors
        #: int, index of the sum of factor sublattices in N
        self.lattice_index = lattice_index
        #: list of str
        self.warnings = []
        super(decomposition, self).__init__()

    def eigenvalues(self):
        return [fac.eigenvalue for fac in self.factors]

    def to_json(self):
        return {'stabilizing_power': self.stabilizing_power,
                'lattice_index': self.lattice_index,
                'factors': [fac.to_json() for fac in self.factors],
                'warnings': self.warnings}

def _restrict(c, group):
    return tuple(i for i in c if i in group)

def _factor_cones(f, group):
    restrictions = set(_restrict(c, group) for c in f.max_cones)
    return sorted(r for r in restrictions
                  if not any(set(r) < set(s) for s in restrictions))

def _is_product(f, groups):
    """
    Whether the maximal cones of ``f`` are exactly the joins of one maximal
    restricted cone per group.
    """
    factor_cones = [_factor_cones(f, set(g)) for g in groups]
    joins = set(tuple(sorted(x for part in combo for x in part))
                for combo in itertools.product(*factor_cones))
    return joins == set(f.max_cones), factor_cones

def _require_complete_simplicial(f):
    if not f.is_simplicial():
        raise InputError(f.name or 'fan', "fan is not simplicial")
    if not fan_mod.is_complete(f):
        raise InputError(f.name or 'fan', "fan is not complete")

def split_fan(f, groups, eigenvalues=None, power=1, citation='product'):
    """
    Decompose ``f`` along a partition of its rays.

    :type f: :class:`~arithdyn.toric.fan.fan`
    :param groups: list of lists of ray indices partitioning the rays
    :param eigenvalues: optional eigenvalue per group
    :param int power: stabilizing power recorded in the result
    :param string citation: tag cited when the splitting fails
    :rtype: :class:`decomposition`
    """
    groups = [tuple(sorted(g)) for g in groups]
    if sorted(i for g in groups for i in g) != list(range(f.n_rays)) or \
            not all(groups):
        raise InputError('groups', "groups must partition the rays")
    n = f.dim
    bases = [smith.saturation_basis(f.cone_rays(g), n) for g in groups]
    if sum(len(b) for b in bases) != n:
        raise HypothesisError('groups', "eigenspaces do not span: dimensions"
                              " {} in rank {}".format(
                                  [len(b) for b in bases], n), citation)
    ok, factor_cones = _is_product(f, groups)
    if not ok:
        raise HypothesisError('groups', "product property fails", citation)
    index = smith.lattice_index(bases, n)
    factors = []
    for k, (g, basis, fc) in enumerate(zip(groups, bases, factor_cones)):
        B = ratMatrix.from_columns(basis, rows=n)
        rays = [tuple(int(x) for x in B.solve_any(f.rays[i])) for i in g]
        local = dict((i, j) for j, i in enumerate(g))
        sub = fan_mod.fan(len(basis), rays,
                          [tuple(local[i] for i in c) for c in fc],
                          '{}[{}]'.format(f.name or 'fan', k))
        if not sub.is_simplicial() or not fan_mod.is_complete(sub):
            raise HypothesisError('groups', "factor {} is not a complete"
                                  " simplicial fan".format(k), citation)
        lam = eigenvalues[k] if eigenvalues is not None else None
        factors.append(eigenFactor(lam, basis, sub, g))
    dec = decomposition(f, power, factors, index)
    if index > 1:
        msg = "factor sublattices have index {} in N".format(index)
        logger.warning(msg)
        dec.warnings.append(msg)
    return dec

def eigen_fan_decomposition(endo):
    """
    Split the fan of ``endo`` into the eigen-fans of its stabilizing
    iterate ``phi^m``: rays are grouped by their scale factor under
    ``phi^m`` and each group spans an eigenspace.

    :type endo: :class:`latticeEndo`
    :rtype: :class:`decomposition`
    """
    f = endo.fan
    _require_complete_simplicial(f)
    ok, witness = check_compatible(endo.matrix, f)
    if not ok:
        raise HypothesisError('endo', "cone {} is not mapped into a cone"
                              .format(witness['cone']), 'iterationlemma')
    m = stabilizing_power(endo)
    psi = endo.power(m)
    _, scales = ray_permutation(psi)
    values = sorted(set(scales))
    groups = [[i for i, s in enumerate(scales) if s == lam] for lam in values]
    dec = split_fan(f, groups, values, m, 'toricmorphismbackbone')
    for fac in dec.factors:
        for b in fac.basis:
            if psi.apply(b) != tuple(fac.eigenvalue * x for x in b):
                raise Error("phi^{} does not act as {} on factor basis"
                            .format(m, fac.eigenvalue))
    logger.info("decomposed %s: m=%d, eigenvalues %s", f.name, m, values)
    return dec

def _partition_ok(f, first, second):
    ok, _ = _is_product(f, [first, second])
    if not ok:
        return False
    n = f.dim
    r1 = ratMatrix.from_rows(f.cone_rays(first), cols=n).rank()
    r2 = ratMatrix.from_rows(f.cone_rays(second), cols=n).rank()
    if r1 + r2 != n or r1 == 0 or r2 == 0:
        return False
    if ratMatrix.from_rows(f.rays, cols=n).rank() != n:
        return False
    bases = [smith.saturation_basis(f.cone_rays(first), n),
             smith.saturation_basis(f.cone_rays(second), n)]
    return smith.lattice_index(bases, n) == 1

def is_simple(f):
    """
    Whether ``f`` admits no splitting into a product of two fans.

    Every bipartition ``R1 | R2`` of the rays with ray 0 in ``R1`` is tried
    in lexicographic order of ``R1``.

    :type f: :class:`~arithdyn.toric.fan.fan`
    :rtype: tuple
    :returns: (flag, witness) with witness ``(R1, R2)`` or None
    """
    report = fan_mod.validate(f)
    if not report.valid:
        raise InputError(f.name or 'fan', "fan is invalid: " +
                         report.violations[0]['detail'])
    _require_complete_simplicial(f)
    if f.n_rays > util.MAX_RAYS:
        raise CapacityError("simplicity search is capped at {} rays, fan has"
                            " {}".format(util.MAX_RAYS, f.n_rays))
    everything = set(range(f.n_rays))
    candidates = []
    for k in range(0, f.n_rays - 1):
        for rest in itertools.combinations(range(1, f.n_rays), k):
            candidates.append((0,) + rest)
    candidates.sort()
    rank, size = comm.Get_rank(), comm.Get_size()
    found = None
    for first in candidates[rank::size]:
        second = tuple(sorted(everything - set(first)))
        if _partition_ok(f, first, second):
            found = (first, second)
            break
    results = [r for r in comm.allgather(found) if r is not None]
    logger.debug("simplicity: %d candidates, %d rank(s)", len(candidates),
                 size)
    if not results:
        return True, None
    return False, min(results)

def nonpolarized_witness(dec, n1, n2):
    """
    The endomorphism acting as ``n1`` on the first factor sublattice and as
    ``n2`` on the others.

    :type dec: :class:`decomposition`
    :param int n1: positive integer
    :param int n2: positive integer different from ``n1``
    :rtype: :class:`latticeEndo`
    """
    n1, n2 = int(n1), int(n2)
    if n1 < 1 or n2 < 1:
        raise InputError('n1, n2', "scales must be positive")
    if n1 == n2:
        raise InputError('n1, n2', "scales must differ")
    if len(dec.factors) < 2:
        raise InputError('decomposition', "single-factor decomposition")
    n = dec.fan.dim
    columns = [b for fac in dec.factors for b in fac.basis]
    values = [n1] * len(dec.factors[0].basis) + \
        [n2] * (len(columns) - len(dec.factors[0].basis))
    B = ratMatrix.from_columns(columns, rows=n)
    M = B * ratMatrix.diag(values) * B.inverse()
    if not M.is_integer():
        raise HypothesisError('decomposition', "witness is not integral"
                              " (lattice index {})".format(dec.lattice_index),
                              'notsimple')
    endo = latticeEndo(M, dec.fan)
    ok, witness = check_compatible(endo.matrix, dec.fan)
    if not ok:
        raise Error("witness does not preserve cone {}".format(
            witness['cone']))
    if len(set(ray_permutation(endo)[1])) < 2:
        raise Error("witness acts by a single scale")
    return endo

def simplicity_crosscheck(f, endos):
    """
    Compare the bipartition oracle with the scale factors of ray-fixing
    endomorphisms: a simple fan admits only uniform scales. The converse is
    only checked over ``endos``.

    :type f: :class:`~arithdyn.toric.fan.fan`
    :param endos: list of :class:`latticeEndo` acting on ``f``
    :rtype: dict
    """
    simple, witness = is_simple(f)
    rows = []
    for endo in endos:
        perm, scales = ray_permutation(endo)
        fixes = all(i == j for i, j in enumerate(perm))
        rows.append({'matrix': endo.matrix.as_int_rows(), 'fixes_rays': fixes,
                     'scales': list(scales),
                     'uniform': len(set(scales)) == 1})
    fixing = [r for r in rows if r['fixes_rays']]
    if simple:
        consistent = all(r['uniform'] for r in fixing)
    else:
        consistent = any(not r['uniform'] for r in fixing) or not fixing
    return {'simple': simple,
            'witness': [list(p) for p in witness] if witness else None,
            'endomorphisms': rows, 'consistent': consistent,
            'note': "the converse direction is checked only over the"
                    " supplied endomorphisms"}
