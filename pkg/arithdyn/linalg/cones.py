# Copyright (C) 2026 The ArithDyn Development Team

"""
This module contains exact polyhedral computations over the rationals:

* :func:`fm_feasible` feasibility of a system of linear equations and
  inequalities by Gaussian substitution followed by Fourier-Motzkin
  elimination;
* :func:`in_cone` membership of a vector in a finitely generated cone;
* :func:`proper_intersection` whether two cones meet in a common face;
* :func:`extreme_rays` the extreme rays of ``{x : A x >= 0}`` by the double
  description method.
"""

import logging
from fractions import Fraction
import arithdyn.util as util
from arithdyn.linalg.basic import InputError
from arithdyn.linalg.ratmat import ratMatrix

logger = logging.getLogger(__name__)

def _dot(a, b):
    return sum((x * y for x, y in zip(a, b)), Fraction(0))

def _normalize(row):
    """
    Scale an inequality ``(c, d)`` so that its first nonzero coefficient has
    absolute value 1.
    """
    c, d = row
    lead = next((x for x in c if x != 0), None)
    if lead is None:
        return row
    s = abs(lead)
    return (tuple(x / s for x in c), d / s)

def fm_feasible(eqs, ineqs, nvars):
    """
    Decide whether ``{x : c.x = d for (c, d) in eqs; c.x <= d for (c, d) in
    ineqs}`` is nonempty.

    :param list eqs: equations as (coefficients, right hand side)
    :param list ineqs: inequalities as (coefficients, right hand side)
    :param int nvars: number of variables
    :rtype: bool
    """
    eqs = [(tuple(Fraction(x) for x in c), Fraction(d)) for c, d in eqs]
    ineqs = [(tuple(Fraction(x) for x in c), Fraction(d)) for c, d in ineqs]
    while eqs:
        a, b = eqs.pop()
        j = next((k for k in range(nvars) if a[k] != 0), None)
        if j is None:
            if b != 0:
                return False
            continue

        def substitute(row):
            c, d = row
            if c[j] == 0:
                return row
            f = c[j] / a[j]
            return (tuple(ck - f * ak for ck, ak in zip(c, a)), d - f * b)
        eqs = [substitute(e) for e in eqs]
        ineqs = [substitute(e) for e in ineqs]
    rows = set(_normalize(r) for r in ineqs)
    for j in range(nvars):
        pos = [r for r in rows if r[0][j] > 0]
        neg = [r for r in rows if r[0][j] < 0]
        new = set(r for r in rows if r[0][j] == 0)
        for cp, dp in pos:
            for cn, dn in neg:
                sp, sn = cp[j], -cn[j]
                c = tuple(sn * x + sp * y for x, y in zip(cp, cn))
                new.add(_normalize((c, sn * dp + sp * dn)))
        rows = set()
        for c, d in new:
            if all(x == 0 for x in c):
                if d < 0:
                    return False
            else:
                rows.add((c, d))
        logger.debug("fm: eliminated x%d, %d inequalities left", j,
                     len(rows))
    return all(d >= 0 for _, d in rows)

def in_cone(generators, v):
    """
    Exact test of ``v in cone(generators)``.

    :param generators: list of rational vectors
    :param v: rational vector
    :rtype: bool
    """
    v = [Fraction(x) for x in v]
    n = len(v)
    generators = [tuple(Fraction(x) for x in g) for g in generators]
    if not generators:
        return all(x == 0 for x in v)
    G = ratMatrix.from_columns(generators, rows=n)
    if G.rank() == len(generators):
        lam = G.solve_any(v)
        return lam is not None and all(x >= 0 for x in lam)
    k = len(generators)
    eqs = [([g[i] for g in generators], v[i]) for i in range(n)]
    ineqs = [([-int(j == i) for j in range(k)], 0) for i in range(k)]
    return fm_feasible(eqs, ineqs, k)

def proper_intersection(gens1, gens2):
    """
    Whether two simplicial cones meet exactly in the cone spanned by their
    common generators. Decided by infeasibility of ``sum l_i u_i = sum m_j
    w_j`` with ``l, m >= 0`` putting total weight 1 on non-shared
    generators.

    :param gens1: generators of the first cone (primitive integer vectors)
    :param gens2: generators of the second cone
    :rtype: bool
    """
    gens1 = [tuple(g) for g in gens1]
    gens2 = [tuple(g) for g in gens2]
    if not gens1 or not gens2:
        return True
    n = len(gens1[0])
    common = set(gens1) & set(gens2)
    k1, k2 = len(gens1), len(gens2)
    nvars = k1 + k2
    eqs = []
    for i in range(n):
        eqs.append(([g[i] for g in gens1] + [-g[i] for g in gens2], 0))
    weight = [0 if g in common else 1 for g in gens1] + \
        [0 if g in common else 1 for g in gens2]
    if not any(weight):
        return True
    eqs.append((weight, 1))
    ineqs = [([-int(j == i) for j in range(nvars)], 0) for i in range(nvars)]
    return not fm_feasible(eqs, ineqs, nvars)

def lineality(inequalities, dim):
    """
    :param inequalities: rows ``a`` of ``a . x >= 0``
    :param int dim: ambient dimension
    :rtype: list of tuples
    :returns: basis of the lineality space ``{x : A x = 0}``
    """
    if not inequalities:
        return [tuple(Fraction(int(i == j)) for j in range(dim))
                for i in range(dim)]
    return ratMatrix.from_rows(inequalities, cols=dim).kernel()

def extreme_rays(inequalities, dim):
    """
    Extreme rays of the pointed cone ``{x in Q^dim : a . x >= 0}`` by the
    double description method, as primitive integer vectors in decreasing
    lexicographic order.

    :param inequalities: list of rational row vectors ``a``
    :param int dim: ambient dimension
    :rtype: list of tuples of ints
    """
    rows = [tuple(Fraction(x) for x in a) for a in inequalities]
    rows = [a for a in rows if any(x != 0 for x in a)]
    if dim == 0:
        return []
    if len(lineality(rows, dim)) > 0:
        raise InputError('extreme_rays', "cone is not pointed")
    # an initial simplicial cone from independent rows
    basis, rest = [], []
    for i, a in enumerate(rows):
        if len(basis) < dim and ratMatrix.from_rows(
                [rows[j] for j in basis] + [a], cols=dim).rank() == \
                len(basis) + 1:
            basis.append(i)
        else:
            rest.append(i)
    inv = ratMatrix.from_rows([rows[i] for i in basis]).inverse()
    rays = [inv.col(j) for j in range(dim)]
    processed = list(basis)

    def zeros(r):
        return frozenset(i for i in processed if _dot(rows[i], r) == 0)

    for i in rest:
        a = rows[i]
        values = [_dot(a, r) for r in rays]
        zsets = [zeros(r) for r in rays]
        new = [r for r, v in zip(rays, values) if v >= 0]
        for p, vp in enumerate(values):
            if vp <= 0:
                continue
            for q, vq in enumerate(values):
                if vq >= 0:
                    continue
                common = zsets[p] & zsets[q]
                if len(common) < dim - 2:
                    continue
                if any(common <= zsets[r] for r in range(len(rays))
                       if r != p and r != q):
                    continue
                new.append(tuple(vp * y - vq * x
                                 for x, y in zip(rays[p], rays[q])))
        rays = new
        processed.append(i)
        logger.debug("dd: row %d processed, %d rays", i, len(rays))
    out = sorted(set(util.primitive(r) for r in rays), reverse=True)
    return out
