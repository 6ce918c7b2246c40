# Copyright (C) 2026 The ArithDyn Development Team

"""
This module contains the :class:`fan` class, a rational polyhedral fan given
by its primitive ray generators and its maximal cones, and the combinatorial
operations on fans: validation, completeness, products and star fans of
cones (the fans of torus orbit closures).

Only maximal cones are stored; faces are derived on demand.
"""

import logging
import itertools
import arithdyn.util as util
from arithdyn.linalg.basic import pickleable, InputError
from arithdyn.linalg.ratmat import ratMatrix
import arithdyn.linalg.cones as cones
import arithdyn.linalg.smith as smith

logger = logging.getLogger(__name__)

class fan(pickleable):
    """
    A fan in ``N_R`` with ``N = Z^dim``.
    """
    def __init__(self, dim, rays, max_cones, name=None):
        """
        Initalization

        :param int dim: lattice rank
        :param rays: integer ray generators
        :param max_cones: ray-index sets of the maximal cones
        :param string name: optional label used in reports
        """
        dim = util.to_int(dim, 'dim')
        try:
            rays = [tuple(util.to_int(x, 'rays') for x in r) for r in rays]
            max_cones = [tuple(sorted(util.to_int(i, 'max_cones')
                                      for i in c)) for c in max_cones]
        except TypeError:
            raise InputError('fan', "malformed fan data")
        if dim < 0:
            raise InputError('dim', "negative lattice rank")
        for i, r in enumerate(rays):
            if len(r) != dim:
                raise InputError('rays[{}]'.format(i), "ray has {} entries,"
                                 " lattice rank is {}".format(len(r), dim))
        for k, c in enumerate(max_cones):
            for i in c:
                if i < 0 or i >= len(rays):
                    raise InputError('max_cones[{}]'.format(k),
                                     "ray index {} out of range".format(i))
            if len(set(c)) != len(c):
                raise InputError('max_cones[{}]'.format(k),
                                 "repeated ray index")
        #: int, rank of the lattice N
        self.dim = dim
        #: tuple of tuples of ints, the ray generators
        self.rays = tuple(rays)
        #: tuple of sorted tuples of ray indices, the maximal cones
        self.max_cones = tuple(max_cones)
        #: str, label
        self.name = name
        super(fan, self).__init__()

    @property
    def n_rays(self):
        return len(self.rays)

    def cone_rays(self, cone):
        """
        :param cone: ray-index set
        :rtype: list of tuples
        :returns: the generators of ``cone``
        """
        return [self.rays[i] for i in cone]

    def signature(self):
        """
        :rtype: tuple
        :returns: (dim, ray count, max-cone count), an isomorphism invariant
        """
        return (self.dim, self.n_rays, len(self.max_cones))

    def __eq__(self, other):
        if not isinstance(other, fan):
            return NotImplemented
        return (self.dim, self.rays, set(self.max_cones)) == \
            (other.dim, other.rays, set(other.max_cones))

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.dim, self.rays, frozenset(self.max_cones)))

    def __repr__(self):
        return "fan({}, dim={}, rays={}, max_cones={})".format(
            self.name, self.dim, list(self.rays), list(self.max_cones))

    def to_json(self):
        """
        :rtype: dict
        """
        odict = {'dim': self.dim, 'rays': [list(r) for r in self.rays],
                 'max_cones': [list(c) for c in self.max_cones]}
        if self.name:
            odict['name'] = self.name
        return odict

    @classmethod
    def from_json(cls, obj):
        """
        :param dict obj: ``{"dim", "rays", "max_cones"}``
        :rtype: :class:`fan`
        """
        if not isinstance(obj, dict):
            raise InputError('fan', "expected a JSON object")
        missing = [k for k in ('dim', 'rays', 'max_cones') if k not in obj]
        if missing:
            raise InputError('fan', "missing keys " + ", ".join(missing))
        return cls(obj['dim'], obj['rays'], obj['max_cones'],
                   obj.get('name'))

    def is_simplicial(self):
        """
        :rtype: bool
        """
        return all(_is_simplicial_cone(self, c) for c in self.max_cones)

    def validate(self):
        """
        See :func:`validate`.
        """
        return validate(self)

    def is_complete(self):
        """
        See :func:`is_complete`.
        """
        return is_complete(self)

def _is_simplicial_cone(f, cone):
    if not cone:
        return True
    return ratMatrix.from_rows(f.cone_rays(cone), cols=f.dim).rank() == \
        len(cone)

class coneRef(pickleable):
    """
    A cone of a fan, given by a set of ray indices contained in some maximal
    cone.
    """
    def __init__(self, f, indices):
        """
        Initalization

        :param f: the fan
        :type f: :class:`fan`
        :param indices: ray indices
        """
        indices = tuple(sorted(set(int(i) for i in indices)))
        for i in indices:
            if i < 0 or i >= f.n_rays:
                raise InputError('cone', "ray index {} out of range"
                                 .format(i))
        if not any(set(indices) <= set(c) for c in f.max_cones):
            raise InputError('cone', "{} is not a cone of the fan".format(
                list(indices)))
        #: :class:`fan`, the ambient fan
        self.fan = f
        #: tuple of ints, ray indices
        self.indices = indices
        super(coneRef, self).__init__()

    def generators(self):
        return self.fan.cone_rays(self.indices)

class validationReport(pickleable):
    """
    Result of :func:`validate`.
    """
    def __init__(self):
        #: list of dicts ``{"kind", "rays" or "cones", "detail"}``
        self.violations = []
        #: list of ints, indices of non-simplicial maximal cones
        self.non_simplicial = []
        #: list of index pairs whose face property was not checked
        self.unchecked_pairs = []
        super(validationReport, self).__init__()

    @property
    def valid(self):
        return not self.violations

    @property
    def simplicial(self):
        return not self.non_simplicial

    def add(self, kind, detail, rays=None, cones=None):
        entry = {'kind': kind, 'detail': detail}
        if rays is not None:
            entry['rays'] = list(rays)
        if cones is not None:
            entry['cones'] = list(cones)
        self.violations.append(entry)

    def to_json(self):
        return {'valid': self.valid, 'simplicial': self.simplicial,
                'violations': self.violations,
                'non_simplicial_cones': self.non_simplicial,
                'unchecked_pairs': [list(p) for p in self.unchecked_pairs]}

def validate(f):
    """
    Check primitivity and uniqueness of rays, maximality and simpliciality of
    cones and the face-intersection property of every pair of maximal cones.

    :type f: :class:`fan`
    :rtype: :class:`validationReport`
    """
    report = validationReport()
    for i, r in enumerate(f.rays):
        g = util.vector_gcd(r)
        if g == 0:
            report.add('zero_ray', "ray {} is the zero vector".format(i),
                       rays=[i])
        elif g != 1:
            report.add('non_primitive', "ray {} = {} has gcd {}".format(
                i, list(r), g), rays=[i])
    for i, j in itertools.combinations(range(f.n_rays), 2):
        if f.rays[i] == f.rays[j]:
            report.add('duplicate_ray', "rays {} and {} coincide".format(i, j),
                       rays=[i, j])
    for k, c in enumerate(f.max_cones):
        if not _is_simplicial_cone(f, c):
            report.non_simplicial.append(k)
    for k, l in itertools.combinations(range(len(f.max_cones)), 2):
        a, b = set(f.max_cones[k]), set(f.max_cones[l])
        if a <= b or b <= a:
            report.add('non_maximal', "cone {} is contained in cone {}"
                       .format(*((k, l) if a <= b else (l, k))),
                       cones=[k, l])
            continue
        if k in report.non_simplicial or l in report.non_simplicial:
            report.unchecked_pairs.append((k, l))
            continue
        if not cones.proper_intersection(f.cone_rays(f.max_cones[k]),
                                         f.cone_rays(f.max_cones[l])):
            report.add('face_intersection', "cones {} and {} overlap beyond a"
                       " common face".format(k, l), cones=[k, l])
    if report.unchecked_pairs:
        logger.warning("%d pair(s) of non-simplicial cones not checked for"
                       " the face property", len(report.unchecked_pairs))
    return report

def is_complete(f):
    """
    A pure simplicial fan is complete iff every facet of a maximal cone lies
    in exactly two maximal cones and the maximal cones are connected through
    facets.

    :type f: :class:`fan`
    :rtype: bool
    """
    if f.dim == 0:
        return True
    for k, c in enumerate(f.max_cones):
        if len(c) != f.dim or not _is_simplicial_cone(f, c):
            raise InputError('max_cones[{}]'.format(k), "fan is not pure and"
                             " simplicial of dimension {}".format(f.dim))
    if not f.max_cones:
        return False
    facets = {}
    for k, c in enumerate(f.max_cones):
        for i in c:
            facets.setdefault(tuple(x for x in c if x != i), []).append(k)
    if any(len(owners) != 2 for owners in facets.values()):
        return False
    seen = {0}
    stack = [0]
    while stack:
        k = stack.pop()
        c = f.max_cones[k]
        for i in c:
            for l in facets[tuple(x for x in c if x != i)]:
                if l not in seen:
                    seen.add(l)
                    stack.append(l)
    return len(seen) == len(f.max_cones)

def picard_rank(f):
    """
    :rtype: int
    :returns: ray count minus the rank of the ray span
    """
    if not f.rays:
        return 0
    return f.n_rays - ratMatrix.from_rows(f.rays, cols=f.dim).rank()

def product(f1, f2):
    """
    Product fan in ``N1 + N2`` whose maximal cones are the joins of one
    maximal cone from each factor.

    :type f1: :class:`fan`
    :type f2: :class:`fan`
    :rtype: :class:`fan`
    """
    zeros1, zeros2 = (0,) * f1.dim, (0,) * f2.dim
    rays = [r + zeros2 for r in f1.rays] + [zeros1 + r for r in f2.rays]
    shift = f1.n_rays
    max_cones = [c1 + tuple(shift + j for j in c2)
                 for c1 in f1.max_cones for c2 in f2.max_cones]
    name = None
    if f1.name and f2.name:
        name = '{}x{}'.format(f1.name, f2.name)
    return fan(f1.dim + f2.dim, rays, max_cones, name)

def cones_containing(f, tau):
    """
    :rtype: list of tuples
    :returns: the maximal cones containing the ray-index set ``tau``
    """
    tau = set(tau)
    return [c for c in f.max_cones if tau <= set(c)]

def faces(f):
    """
    :rtype: list of tuples
    :returns: all cones of ``f`` (faces of simplicial maximal cones), sorted
        by dimension then lexicographically
    """
    out = set()
    for c in f.max_cones:
        for k in range(len(c) + 1):
            out.update(itertools.combinations(c, k))
    return sorted(out, key=lambda c: (len(c), c))

def star_fan(f, tau):
    """
    The fan Star(tau) in ``N / (span(tau) cap N)``: images of the cones
    containing ``tau``.

    :type f: :class:`fan`
    :param tau: a cone of ``f``
    :type tau: :class:`coneRef` or iterable of ray indices
    :rtype: :class:`fan`
    """
    if not isinstance(tau, coneRef):
        tau = coneRef(f, tau)
    if not tau.indices:
        return fan(f.dim, f.rays, f.max_cones, f.name)
    Q = smith.quotient_map(tau.generators(), f.dim)
    containing = cones_containing(f, tau.indices)
    index = {}
    rays = []
    for i in sorted(set(j for c in containing for j in c) - set(tau.indices)):
        image = Q.apply(f.rays[i])
        if all(x == 0 for x in image):
            logger.warning("ray %d projects to zero and is dropped", i)
            continue
        image = util.primitive(image)
        if image not in rays:
            rays.append(image)
        index[i] = rays.index(image)
    max_cones = []
    for c in containing:
        cone = tuple(sorted(set(index[i] for i in c if i in index)))
        if cone not in max_cones:
            max_cones.append(cone)
    name = None
    if f.name:
        name = 'star({},{})'.format(f.name, ','.join(map(str, tau.indices)))
    return fan(Q.rows, rays, max_cones, name)

def star_picard_report(f, tau):
    """
    Picard ranks of ``f`` and of its star fan at ``tau``, both computed from
    ray counts.

    :rtype: dict
    """
    star = star_fan(f, tau)
    rho_source, rho_star = picard_rank(f), picard_rank(star)
    if rho_source != rho_star:
        logger.warning("star fan changes the Picard rank: %d -> %d",
                       rho_source, rho_star)
    return {'rho_source': rho_source, 'rho_star': rho_star,
            'equal': rho_source == rho_star, 'star': star}

def point_fan():
    """
    :rtype: :class:`fan`
    :returns: the fan of a point, in the rank 0 lattice
    """
    return fan(0, [], [()], 'point')

def projective_space_fan(n):
    """
    :param int n: dimension
    :rtype: :class:`fan`
    :returns: the fan of ``P^n`` with rays ``e_1, ..., e_n, -(e_1+...+e_n)``
    """
    rays = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    rays.append(tuple([-1] * n))
    max_cones = list(itertools.combinations(range(n + 1), n))
    return fan(n, rays, max_cones, 'p{}'.format(n))

def hirzebruch_fan(r):
    """
    :param int r: twist
    :rtype: :class:`fan`
    :returns: the fan of the Hirzebruch surface ``H_r``
    """
    rays = [(1, 0), (0, 1), (-1, r), (0, -1)]
    return fan(2, rays, [(0, 1), (1, 2), (2, 3), (0, 3)],
               'hirzebruch{}'.format(r))
