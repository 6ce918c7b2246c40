# Copyright (C) 2026 The ArithDyn Development Team

"""
This module contains the :program:`arithdyn` command line program. Every
command prints one JSON :class:`~arithdyn.run_framework.report.report` to
stdout (or ``--out``) and exits with 0 on success, 2 on invalid input or a
failed hypothesis and 3 when a capacity cap or the digit budget is hit.
Any other exception is reported as an :class:`~arithdyn.linalg.basic.Error`
with exit code 1.

Commands::

    fan {validate, simple, star, product}
    endo {check, permutation, decompose, witness}
    ns {classgroup, pullback, potdeg, nef, nefcone, realize-equivariant,
        classify}
    abelian {theta, counterexample, product}
    height {weil, alpha, canheight}
    elliptic {add, multiply, canheight, torsion}
    exe {classify}
    demo
"""

import sys
import argparse
import logging
import arithdyn.util as util
from arithdyn.linalg.basic import Error, InputError
import arithdyn.toric.fan as fan_mod
import arithdyn.toric.fan_management as fm
import arithdyn.toric.toric_endo as toric_endo
import arithdyn.toric.toric_divisors as td
import arithdyn.dynamics.abelian as abelian
import arithdyn.dynamics.heights as heights
import arithdyn.dynamics.elliptic as elliptic
import arithdyn.dynamics.system_management as sm
from arithdyn.run_framework.report import report

logger = logging.getLogger(__name__)

class argumentParser(argparse.ArgumentParser):
    """
    :class:`argparse.ArgumentParser` raising
    :class:`~arithdyn.linalg.basic.InputError` instead of exiting.
    """
    def error(self, message):
        raise InputError('arguments', message)

def _groups(text):
    """
    ``"0,1;2,3"`` to ``[[0, 1], [2, 3]]``.
    """
    return [list(fm.parse_index_set(part)) for part in text.split(';')]

def _endo(args):
    f = fm.resolve_fan(args.fan)
    return toric_endo.latticeEndo(fm.read_matrix(args.matrix), f)

def _action(args):
    if args.linear:
        f = fm.resolve_fan(args.fan)
        return td.linear_action(f, fm.read_matrix(args.matrix), args.tolerance)
    return td.pullback_matrix(_endo(args), args.tolerance)

# fan

def fan_validate(args):
    f = fm.resolve_fan(args.fan)
    rep = fan_mod.validate(f)
    out = rep.to_json()
    out['fan'] = f
    out['picard_rank'] = fan_mod.picard_rank(f)
    if rep.valid and rep.simplicial:
        out['complete'] = fan_mod.is_complete(f)
    else:
        out['complete'] = None
    return out

def fan_simple(args):
    f = fm.resolve_fan(args.fan)
    simple, witness = toric_endo.is_simple(f)
    out = {'fan': f.name, 'simple': simple,
           'witness': [list(p) for p in witness] if witness else None,
           'citation': 'simple=linsimple'}
    if witness:
        dec = toric_endo.split_fan(f, witness, citation='notsimple')
        out['decomposition'] = dec
    return out

def fan_star(args):
    f = fm.resolve_fan(args.fan)
    return fan_mod.star_picard_report(f, fm.parse_index_set(args.cone))

def fan_product(args):
    return fan_mod.product(fm.resolve_fan(args.fan), fm.resolve_fan(args.fan2))

# endo

def endo_check(args):
    f = fm.resolve_fan(args.fan)
    ok, witness = toric_endo.check_compatible(fm.read_matrix(args.matrix), f)
    return {'compatible': ok, 'witness': witness}

def endo_permutation(args):
    endo = _endo(args)
    perm, scales = toric_endo.ray_permutation(endo)
    return {'permutation': perm, 'scales': scales,
            'cycle_lengths': toric_endo.cycle_lengths(perm),
            'stabilizing_power': toric_endo.stabilizing_power(endo),
            'citation': 'iterationlemma'}

def endo_decompose(args):
    dec = toric_endo.eigen_fan_decomposition(_endo(args))
    out = dec.to_json()
    out['citation'] = 'toricmorphismbackbone'
    return out

def endo_witness(args):
    f = fm.resolve_fan(args.fan)
    dec = toric_endo.split_fan(f, _groups(args.groups))
    endo = toric_endo.nonpolarized_witness(dec, args.n1, args.n2)
    action = td.pullback_matrix(endo, args.tolerance)
    return {'endo': endo, 'pullback': action,
            'classification': td.classify_action(action),
            'citation': 'notsimple'}

# ns

def ns_classgroup(args):
    return td.class_group(fm.resolve_fan(args.fan))

def ns_pullback(args):
    action = td.pullback_matrix(_endo(args), args.tolerance)
    out = action.to_json()
    out['citation'] = 'toricsk'
    return out

def ns_potdeg(args):
    action = _action(args)
    return {'basis': action.class_group.basis_labels(),
            'matrix': action.matrix,
            'potential_degrees': td.potential_arithmetic_degrees(action),
            'citation': 'potdeg'}

def ns_nef(args):
    f = fm.resolve_fan(args.fan)
    coeffs = fm.read_divisor(args.divisor, f)
    cg = td.class_group(f)
    return {'divisor': coeffs, 'nef': td.is_nef(f, coeffs),
            'cartier_data': td.cartier_data(f, coeffs),
            'class': cg.coordinates(coeffs),
            'basis': cg.basis_labels()}

def ns_nefcone(args):
    f = fm.resolve_fan(args.fan)
    cg = td.class_group(f)
    rays = td.nef_cone_rays(f)
    return {'basis': cg.basis_labels(), 'rays': rays,
            'divisors': [cg.divisor(r) for r in rays]}

def ns_realize(args):
    return td.realizability_report_equivariant(_endo(args), args.iters,
                                               args.digit_budget)

def ns_classify(args):
    action = _action(args)
    out = td.classify_action(action)
    out['matrix'] = action.matrix
    if out['scalar'] is not None:
        out['citation'] = 'dialprop'
    return out

# abelian

def abelian_theta(args):
    abelian.check_albert_type(args.albert_type)
    return abelian.general_isogeny_report(fm.read_matrix(args.matrix),
                                          args.simple, args.tolerance)

def abelian_counterexample(args):
    return abelian.counterexample_report(args.a, args.b)

def abelian_product(args):
    degrees = [util.to_int(x, '--degrees') for x in args.degrees.split(',')
               if x.strip()]
    return abelian.kodaira_product_report(args.a, args.b, degrees)

# height

def height_weil(args):
    p = sm.read_point(args.point)
    value, maxima = heights.weil_height(p)
    return {'point': p, 'height': value, 'max_abs': [str(m) for m in maxima]}

def height_alpha(args):
    sys_ = sm.read_system(args.system)
    p = sm.read_point(args.point)
    est = heights.alpha_estimate(sys_, p, args.iters, args.digit_budget)
    return {'system': sys_, 'point': p, 'alpha': est,
            'dynamical_degree': heights.dynamical_degree(sys_)}

def height_canheight(args):
    sys_ = sm.read_system(args.system)
    p = sm.read_point(args.point)
    return heights.canonical_height_system(sys_, p, args.depth,
                                           args.digit_budget)

# elliptic

def elliptic_add(args):
    curve = sm.read_curve(args.curve)
    P, Q = sm.read_epoint(curve, args.P), sm.read_epoint(curve, args.Q)
    return {'curve': curve, 'sum': elliptic.ec_add(P, Q)}

def elliptic_multiply(args):
    curve = sm.read_curve(args.curve)
    P = sm.read_epoint(curve, args.P)
    return {'curve': curve, 'n': args.n,
            'product': elliptic.ec_multiply(args.n, P)}

def elliptic_canheight(args):
    curve = sm.read_curve(args.curve)
    P = sm.read_epoint(curve, args.point)
    value, bound = elliptic.canonical_height(P, args.depth, args.digit_budget)
    return {'curve': curve, 'point': P, 'canonical_height': value,
            'error_bound': bound, 'depth': args.depth,
            'naive_height': elliptic.naive_height(P)}

def elliptic_torsion(args):
    curve = sm.read_curve(args.curve)
    P = sm.read_epoint(curve, args.point)
    order = elliptic.torsion_order(P)
    return {'curve': curve, 'point': P, 'torsion': order is not None,
            'order': order}

def exe_classify(args):
    curve = sm.read_curve(args.curve)
    P = sm.read_epoint(curve, args.P)
    Q = sm.read_epoint(curve, args.Q)
    return elliptic.exe_classify(args.a, args.b, P, Q, non_cm=not args.cm,
                                 depth=args.depth)

def demo(args):
    from arithdyn.run_framework.demo import demo_suite
    return demo_suite(args.fixtures, args.digit_budget)

def _build_parser():
    common = argumentParser(add_help=False)
    common.add_argument('--out', default=None,
                        help="write the report to this file")
    common.add_argument('--tolerance', type=float, default=util.TOL,
                        help="numeric eigenvalue tolerance")
    common.add_argument('--log-level', default=None,
                        help="DEBUG, INFO, WARNING or ERROR")
    common.add_argument('--digit-budget', type=int, default=None,
                        help="maximum decimal digits per coordinate")

    parser = argumentParser(prog='arithdyn', description="Exact toric,"
                            " abelian and elliptic arithmetic dynamics")
    groups = parser.add_subparsers(dest='group')

    def leaf(sub, name, handler, *options):
        p = sub.add_parser(name, parents=[common])
        for flags, kwargs in options:
            p.add_argument(*flags, **kwargs)
        p.set_defaults(handler=handler)
        return p

    fan_opt = (('--fan',), {'required': True,
                            'help': "fan JSON file or fixture name"})
    matrix_opt = (('--matrix',), {'required': True,
                                  'help': "matrix JSON file or \"a,b;c,d\""})
    endo_opt = (('--endo', '--matrix'),
                {'dest': 'matrix', 'required': True,
                 'help': "endomorphism matrix JSON file or \"a,b;c,d\""})
    linear_opt = (('--linear',), {'action': 'store_true',
                                  'help': "the matrix acts on the class"
                                  " group directly"})

    sub = groups.add_parser('fan').add_subparsers(dest='command')
    leaf(sub, 'validate', fan_validate, fan_opt)
    leaf(sub, 'simple', fan_simple, fan_opt)
    leaf(sub, 'star', fan_star, fan_opt,
         (('--cone',), {'required': True, 'help': "ray indices \"0,1\""}))
    leaf(sub, 'product', fan_product, fan_opt,
         (('--fan2',), {'required': True}))

    sub = groups.add_parser('endo').add_subparsers(dest='command')
    leaf(sub, 'check', endo_check, fan_opt, matrix_opt)
    leaf(sub, 'permutation', endo_permutation, fan_opt, matrix_opt)
    leaf(sub, 'decompose', endo_decompose, fan_opt, matrix_opt)
    leaf(sub, 'witness', endo_witness, fan_opt,
         (('--groups',), {'required': True,
                          'help': "ray partition \"0,1;2,3\""}),
         (('--n1',), {'type': int, 'default': 2}),
         (('--n2',), {'type': int, 'default': 3}))

    sub = groups.add_parser('ns').add_subparsers(dest='command')
    leaf(sub, 'classgroup', ns_classgroup, fan_opt)
    leaf(sub, 'pullback', ns_pullback, fan_opt, endo_opt)
    leaf(sub, 'potdeg', ns_potdeg, fan_opt, matrix_opt, linear_opt)
    leaf(sub, 'nef', ns_nef, fan_opt,
         (('--divisor',), {'required': True,
                           'help': "coefficients \"1,0,0\" or JSON file"}))
    leaf(sub, 'nefcone', ns_nefcone, fan_opt)
    leaf(sub, 'realize-equivariant', ns_realize, fan_opt, matrix_opt,
         (('--iters',), {'type': int, 'default': 10}))
    leaf(sub, 'classify', ns_classify, fan_opt, matrix_opt, linear_opt)

    sub = groups.add_parser('abelian').add_subparsers(dest='command')
    leaf(sub, 'theta', abelian_theta, matrix_opt,
         (('--simple',), {'action': 'store_true',
                          'help': "assert that A is simple"}),
         (('--albert-type',), {'default': 'II'}))
    leaf(sub, 'counterexample', abelian_counterexample,
         (('--a',), {'type': int, 'required': True}),
         (('--b',), {'type': int, 'required': True}))
    leaf(sub, 'product', abelian_product,
         (('--a',), {'type': int, 'required': True}),
         (('--b',), {'type': int, 'required': True}),
         (('--degrees',), {'default': '', 'help': "P^1 map degrees \"2,3\""}))

    sub = groups.add_parser('height').add_subparsers(dest='command')
    point_opt = (('--point',), {'required': True})
    system_opt = (('--system',), {'required': True})
    leaf(sub, 'weil', height_weil, point_opt)
    leaf(sub, 'alpha', height_alpha, system_opt, point_opt,
         (('--iters',), {'type': int, 'default': 10}))
    leaf(sub, 'canheight', height_canheight, system_opt, point_opt,
         (('--depth',), {'type': int, 'default': 8}))

    sub = groups.add_parser('elliptic').add_subparsers(dest='command')
    curve_opt = (('--curve',), {'required': True, 'help': "\"a,b\""})
    leaf(sub, 'add', elliptic_add, curve_opt,
         (('--P',), {'required': True}), (('--Q',), {'required': True}))
    leaf(sub, 'multiply', elliptic_multiply, curve_opt,
         (('--P',), {'required': True}),
         (('--n',), {'type': int, 'required': True}))
    leaf(sub, 'canheight', elliptic_canheight, curve_opt, point_opt,
         (('--depth',), {'type': int, 'default': 8}))
    leaf(sub, 'torsion', elliptic_torsion, curve_opt, point_opt)

    sub = groups.add_parser('exe').add_subparsers(dest='command')
    leaf(sub, 'classify', exe_classify, curve_opt,
         (('--a',), {'type': int, 'required': True}),
         (('--b',), {'type': int, 'required': True}),
         (('--P',), {'required': True}), (('--Q',), {'required': True}),
         (('--depth',), {'type': int, 'default': 8}),
         (('--cm',), {'action': 'store_true',
                      'help': "E may have complex multiplication"}))

    leaf(groups, 'demo', demo,
         (('--fixtures',), {'default': None,
                             'help': "directory of replacement fixture fans"}))
    return parser

def run(argv, write=True):
    """
    Parse ``argv``, run the command and write its report.

    :param list argv: arguments without the program name
    :param bool write: write the report to stdout or ``--out``
    :rtype: tuple
    :returns: (exit code, :class:`~arithdyn.run_framework.report.report`)
    """
    argv = list(argv)
    out = None
    try:
        args = _build_parser().parse_args(argv)
        if getattr(args, 'handler', None) is None:
            raise InputError('arguments', "missing command")
        out = args.out
        util.setup_logging(args.log_level)
        if args.digit_budget is not None:
            util.digit_budget(args.digit_budget)
        result = args.handler(args)
        if args.handler is demo:
            rep = report(argv, result, exit_code=result['exit_code'])
        else:
            rep = report(argv, result)
    except Error as err:
        logger.error("%s", err)
        rep = report(argv, error=err, exit_code=err.exit_code)
    except Exception as exc:
        logger.exception("internal error")
        err = Error("internal error: {}: {}".format(type(exc).__name__, exc))
        rep = report(argv, error=err, exit_code=err.exit_code)
    if write:
        rep.write(out)
    return rep.exit_code, rep

def main():
    """
    Console entry point.
    """
    code, _ = run(sys.argv[1:])
    sys.exit(code)

if __name__ == "__main__":
    main()
