# Copyright (C) 2026 The ArithDyn Development Team

"""
This module runs the headline computations of ArithDyn in sequence and
collects a pass/fail row for each. The suite exits with the largest exit
code among failed rows: 2 for a broken fixture, 3 for a budget or capacity
abort and 1 for a wrong value.
"""

import os
import logging
from fractions import Fraction
import numpy as np
import arithdyn.util as util
from arithdyn.linalg.basic import Error
from arithdyn.linalg.ratmat import ratMatrix
import arithdyn.toric.fan_management as fm
import arithdyn.toric.toric_endo as toric_endo
import arithdyn.toric.toric_divisors as td
import arithdyn.dynamics.abelian as abelian
import arithdyn.dynamics.heights as heights
import arithdyn.dynamics.elliptic as elliptic

logger = logging.getLogger(__name__)

#: list of (curve (a, b), point (x, y)) of infinite order
NONTORSION_FIXTURES = [
    ((0, -2), (3, 5)),
    ((0, 17), (-2, 3)), ((0, 17), (-1, 4)), ((0, 17), (2, 5)),
    ((0, 17), (4, 9)), ((0, 17), (8, 23)), ((0, 17), (43, 282)),
    ((0, 2), (-1, 1)), ((0, 3), (1, 2)), ((0, 5), (-1, 2)),
    ((0, 8), (1, 3)), ((0, 8), (2, 4)), ((0, -11), (3, 4)),
    ((0, 10), (-1, 3)), ((0, 15), (1, 4)), ((0, -4), (2, 2)),
    ((0, -4), (5, 11)), ((0, 24), (1, 5)), ((0, 24), (-2, 4)),
    ((0, -26), (3, 1))]
#: list of (curve (a, b), point (x, y)) of finite order
TORSION_FIXTURES = [
    ((-1, 0), (0, 0)), ((-1, 0), (1, 0)), ((-1, 0), (-1, 0)),
    ((0, 1), (2, 3)), ((0, 1), (0, 1)), ((0, 1), (-1, 0))]

def _values(pairs):
    return [Fraction(int(n), int(d)) for n, d in pairs]

def _load(fixtures, name):
    if fixtures is None:
        return fm.load_fixture(name)
    return fm.read_fan(os.path.join(fixtures, name + '.fan.json'))

def counterexample_row(a, b, eigenvalues, realizable, non_realizable):
    rep = abelian.counterexample_report(a, b)
    flags = [(e['eigenspace'], e['nef']) for e in rep['eigendivisors']]
    ok = _values(rep['eigenvalues']) == eigenvalues and \
        rep['realizable']['values'] == realizable and \
        rep['non_realizable']['values'] == non_realizable
    if (a, b) == (3, 2):
        ok = ok and flags == [(['E11'], True), (['E12+E21'], False),
                              (['E22'], True)]
    return ok, {'eigenvalues': rep['eigenvalues'],
                'realizable': rep['realizable']['values'],
                'non_realizable': rep['non_realizable']['values']}

def exe_row():
    curve = elliptic.weierstrassCurve(0, -2)
    P = elliptic.ePoint(curve, 3, 5)
    O = elliptic.ePoint.infinity(curve)
    out = {}
    ok = True
    for label, (X, Y), expected in (('(P,O)', (P, O), 4),
                                    ('(O,P)', (O, P), 9),
                                    ('(O,O)', (O, O), 1)):
        rep = elliptic.exe_classify(2, 3, X, Y, depth=8)
        out[label] = rep['alpha']
        ok = ok and rep['alpha'] == expected and rep['cross_check']['agrees']
    return ok, out

def scalar_row(fixtures):
    out = {}
    ok = True
    for name in fm.FIXTURES:
        f = _load(fixtures, name)
        endo = toric_endo.latticeEndo(2 * ratMatrix.identity(f.dim), f)
        M = td.pullback_matrix(endo).matrix
        out[name] = M == 2 * ratMatrix.identity(M.rows)
        ok = ok and out[name]
    return ok, out

def decomposition_row(fixtures, budget=None):
    f = _load(fixtures, 'p1xp1')
    endo = toric_endo.latticeEndo(ratMatrix.diag([2, 3]), f)
    dec = toric_endo.eigen_fan_decomposition(endo)
    action = td.pullback_matrix(endo)
    degrees = td.potential_arithmetic_degrees(action)
    rep = td.realizability_report_equivariant(endo, 10, budget)
    errors = [w['error'] for w in rep['witnesses']]
    ok = dec.eigenvalues() == [2, 3] and \
        action.matrix == ratMatrix.diag([2, 3]) and \
        [d['eigenvalue'] for d in degrees] == [3, 2] and \
        all(d['nef_eigendivisor'] for d in degrees) and \
        [w['point'] for w in rep['witnesses']] == [[[2, 1], [1, 1]],
                                                   [[1, 1], [2, 1]]] and \
        all(e < 1e-3 for e in errors)
    return ok, {'eigenvalues': dec.eigenvalues(),
                'estimates': [w['estimate'] for w in rep['witnesses']]}

def simplicity_row(fixtures):
    expected = {'p2': None, 'hirzebruch2': None,
                'p1xp1': ((0, 1), (2, 3)), 'p2xp1': ((0, 1, 2), (3, 4))}
    out = {}
    ok = True
    for name, witness in sorted(expected.items()):
        simple, found = toric_endo.is_simple(_load(fixtures, name))
        out[name] = simple
        ok = ok and simple == (witness is None) and found == witness
    return ok, out

def hirzebruch_row(fixtures):
    f = _load(fixtures, 'hirzebruch2')
    failing = [i for i in range(f.n_rays)
               if not td.is_nef(f, td.tDivisor.ray(f, i))]
    return failing == [1], {'non_nef_rays': failing}

def canonical_height_row(depth=8, budget=None):
    ok = True
    worst = 0.0
    for (a, b), (x, y) in TORSION_FIXTURES:
        P = elliptic.ePoint(elliptic.weierstrassCurve(a, b), x, y)
        ok = ok and elliptic.canonical_height(P, depth, budget) == (0.0, 0.0)
    for (a, b), (x, y) in NONTORSION_FIXTURES:
        P = elliptic.ePoint(elliptic.weierstrassCurve(a, b), x, y)
        h, e = elliptic.canonical_height(P, depth, budget)
        h2, e2 = elliptic.canonical_height(elliptic.ec_double(P), depth,
                                           budget)
        gap = abs(h2 - 4 * h)
        worst = max(worst, gap)
        ok = ok and h > 0 and gap <= e2 + 4 * e
    return ok, {'max_quadraticity_gap': worst}

def property_row(fixtures, points=100, seed=0):
    ok = True
    for name in fm.FIXTURES:
        f = _load(fixtures, name)
        phi = toric_endo.latticeEndo(2 * ratMatrix.identity(f.dim), f)
        d = td.tDivisor.ray(f, 0)
        pulled = td.pullback_divisor(phi, d)
        cd, cp = td.cartier_data(f, d), td.cartier_data(f, pulled)
        for v in util.random_lattice_points(points, f.dim, 5, seed):
            lhs = td.support_value(f, pulled, v, cp)
            rhs = td.support_value(f, d, phi.apply(v), cd)
            ok = ok and lhs == rhs
    f = _load(fixtures, 'p1xp1')
    swap = toric_endo.latticeEndo(ratMatrix.from_rows([[0, 1], [1, 0]]), f)
    diag = toric_endo.latticeEndo(ratMatrix.diag([2, 3]), f)
    lhs = td.pullback_matrix(diag.compose(swap)).matrix
    rhs = td.pullback_matrix(swap).matrix * td.pullback_matrix(diag).matrix
    ok = ok and lhs == rhs
    state = np.random.RandomState(seed)
    for _ in range(20):
        f1 = ratMatrix.from_rows(state.randint(-3, 4, size=(2, 2)).tolist())
        g1 = ratMatrix.from_rows(state.randint(-3, 4, size=(2, 2)).tolist())
        if f1.det() == 0 or g1.det() == 0:
            continue
        ok = ok and abelian.theta_matrix(f1 * g1).matrix == \
            abelian.theta_matrix(g1).matrix * abelian.theta_matrix(f1).matrix
    square = td.potential_arithmetic_degrees(td.pullback_matrix(
        diag.power(2)))
    ok = ok and [e['eigenvalue'] for e in square] == [9, 4]
    system = heights.dynSystem([heights.powerMap(1, 2),
                                heights.powerMap(1, 3)])
    both = heights.alpha_estimate(system, heights.projPoint([[2, 1], [2, 1]]),
                                  13).estimate
    ok = ok and abs(both - 3.0) < 1e-2
    return ok, {'product_estimate': both}

def deep_iteration_row(iters=20, budget=None):
    system = heights.dynSystem([heights.powerMap(1, 2)])
    est = heights.alpha_estimate(system, heights.projPoint([[2, 1]]), iters,
                                 budget)
    return abs(est.estimate - 2.0) < 1e-9, {'estimate': est.estimate,
                                             'iterates': est.n}

def demo_suite(fixtures=None, budget=None):
    """
    Run every headline computation and report one row each.

    :param string fixtures: directory holding replacement fixture fans
    :param int budget: digit budget override
    :rtype: dict
    :returns: ``{"rows": [...], "passed": bool, "exit_code": int}``
    """
    rows = [
        ('counterexample', lambda: counterexample_row(
            3, 2, [9, 6, 4], [9, 1], [6, 4])),
        ('degenerate counterexample', lambda: counterexample_row(
            2, 1, [4, 2, 1], [4, 1], [2])),
        ('E x E classifier', exe_row),
        ('scalar pullback', lambda: scalar_row(fixtures)),
        ('decomposition round trip', lambda: decomposition_row(fixtures,
                                                               budget)),
        ('simplicity oracle', lambda: simplicity_row(fixtures)),
        ('Hirzebruch non-nef divisor', lambda: hirzebruch_row(fixtures)),
        ('canonical heights', lambda: canonical_height_row(budget=budget)),
        ('properties', lambda: property_row(fixtures)),
        ('deep iteration', lambda: deep_iteration_row(budget=budget))]
    out = []
    for name, compute in rows:
        try:
            ok, detail = compute()
            code = 0 if ok else 1
            row = {'name': name, 'status': 'pass' if ok else 'fail',
                   'exit_code': code, 'detail': detail}
        except Error as err:
            row = {'name': name, 'status': 'error',
                   'exit_code': err.exit_code, 'error': err.to_json()}
        logger.info("demo: %s %s", name, row['status'])
        out.append(row)
    code = max(r['exit_code'] for r in out)
    return {'rows': out, 'passed': code == 0, 'exit_code': code}
