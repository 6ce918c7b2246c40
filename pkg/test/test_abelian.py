# Copyright (C) 2026 The ArithDyn Development Team

from fractions import Fraction
import numpy as np
import pytest
from arithdyn.linalg.basic import InputError, HypothesisError
from arithdyn.linalg.ratmat import ratMatrix
import arithdyn.dynamics.abelian as abelian


def test_theta_of_a_diagonal_isogeny():
    theta = abelian.theta_matrix(ratMatrix.diag([3, 2]))
    assert theta.matrix == ratMatrix.diag([9, 4, 6])
    divisors = theta.eigendivisors()
    assert [d['eigenvalue'] for d in divisors] == [['9', '1'], ['6', '1'],
                                                  ['4', '1']]
    assert [d['eigenspace'] for d in divisors] == [['E11'], ['E12+E21'],
                                                  ['E22']]
    assert [d['nef'] for d in divisors] == [True, False, True]
    assert [d['ample'] for d in divisors] == [False, False, False]


def test_theta_of_an_anti_diagonal_isogeny():
    theta = abelian.theta_matrix(ratMatrix.from_rows([[0, 1], [2, 0]]))
    assert theta.matrix == ratMatrix.from_rows([[0, 4, 0], [1, 0, 0],
                                                [0, 0, 2]])
    assert theta.eigen.eigenvalues() == [2, -2]
    assert theta.eigen.multiplicity(2) == 2
    assert theta.flags[2] == {'nef': True, 'ample': True}
    assert theta.eigendivisors()[0]['eigenspace'] == ['2E11 + E22',
                                                     'E12+E21']


def test_theta_is_contravariant():
    state = np.random.RandomState(11)
    checked = 0
    while checked < 15:
        f = ratMatrix.from_rows(state.randint(-3, 4, size=(2, 2)).tolist())
        g = ratMatrix.from_rows(state.randint(-3, 4, size=(2, 2)).tolist())
        if f.det() == 0 or g.det() == 0:
            continue
        assert abelian.theta_matrix(f * g).matrix == \
            abelian.theta_matrix(g).matrix * abelian.theta_matrix(f).matrix
        checked += 1


def test_nef_and_ample_classes():
    assert abelian.is_nef_class(ratMatrix.from_rows([[1, 0], [0, 0]]))
    assert not abelian.is_ample_class(ratMatrix.from_rows([[1, 0], [0, 0]]))
    assert abelian.is_ample_class(ratMatrix.identity(2))
    assert not abelian.is_nef_class((1, 1, 2))
    assert not abelian.is_nef_class((-1, -1, 0))
    assert abelian.is_nef_class((Fraction(1, 2), 2, 1))
    with pytest.raises(InputError):
        abelian.is_nef_class(ratMatrix.from_rows([[1, 2], [0, 1]]))


def test_subspace_meets_nef():
    diagonal = [(1, 0, 0), (0, 1, 0)]
    assert abelian.subspace_meets_nef(diagonal)
    assert abelian.subspace_meets_nef(diagonal, strict=True)
    indefinite = [(1, -1, 0), (0, 0, 1)]
    assert not abelian.subspace_meets_nef(indefinite)
    assert not abelian.subspace_meets_nef(indefinite, strict=True)
    assert not abelian.subspace_meets_nef([(0, 0, 1)])
    assert abelian.subspace_meets_nef([(1, 0, 0)])
    assert not abelian.subspace_meets_nef([(1, 0, 0)], strict=True)
    assert abelian.subspace_meets_nef([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert not abelian.subspace_meets_nef([])


def test_rosati_is_the_transpose():
    f = abelian.endoMat([[1, 2], [3, 4]])
    assert abelian.rosati(f).matrix == ratMatrix.from_rows([[1, 3], [2, 4]])
    assert f.compose(f).matrix == ratMatrix.from_rows([[7, 10], [15, 22]])


def test_endo_mat_validation():
    with pytest.raises(InputError):
        abelian.endoMat([[1, 2], [2, 4]])
    with pytest.raises(InputError):
        abelian.endoMat(ratMatrix.identity(3))


def test_counterexample():
    rep = abelian.counterexample_report(3, 2)
    assert rep['eigenvalues'] == [['9', '1'], ['6', '1'], ['4', '1']]
    assert rep['realizable']['values'] == [9, 1]
    assert rep['non_realizable']['values'] == [6, 4]
    assert rep['non_realizable']['citation'] == 'MainCounterexample'
    assert rep['product_comparison']['realizable'] == [9, 4, 1]
    assert rep['product_comparison']['non_realizable'] == [6]


def test_degenerate_counterexample():
    rep = abelian.counterexample_report(2, 1)
    assert rep['eigenvalues'] == [['4', '1'], ['2', '1'], ['1', '1']]
    assert rep['realizable']['values'] == [4, 1]
    assert rep['non_realizable']['values'] == [2]


@pytest.mark.parametrize('a, b', [(2, 2), (1, 2), (3, 0)])
def test_counterexample_parameters(a, b):
    with pytest.raises(InputError):
        abelian.counterexample_report(a, b)


def test_albert_types():
    assert abelian.check_albert_type('ii') == 'II'
    with pytest.raises(HypothesisError) as err:
        abelian.check_albert_type('IV')
    assert err.value.citation == 'AlbertClass'
    with pytest.raises(InputError) as err:
        abelian.check_albert_type('V')
    assert not isinstance(err.value, HypothesisError)


def test_general_isogeny_with_simplicity():
    rep = abelian.general_isogeny_report(ratMatrix.diag([3, 2]), True)
    assert rep['dynamical_degree'] == 9.0
    assert rep['potential_degrees'] == [['9', '1'], ['6', '1'], ['4', '1']]
    assert rep['realizable']['values'] == [['9', '1'], 1]
    assert rep['non_realizable']['values'] == [['6', '1'], ['4', '1']]


def test_general_isogeny_without_simplicity():
    rep = abelian.general_isogeny_report(ratMatrix.diag([3, 2]))
    assert 'realizable' not in rep
    assert rep['labels'].startswith('potential only')


def test_general_isogeny_with_irrational_spectrum():
    golden = (1 + 5 ** 0.5) / 2
    rep = abelian.general_isogeny_report([[1, 1], [1, 0]], True)
    assert rep['dynamical_degree'] == pytest.approx(golden ** 2)
    (top,) = rep['potential_degrees']
    assert top == pytest.approx(golden ** 2)
    assert rep['realizable']['values'][-1] == 1
    assert rep['non_realizable']['values'] == []


def test_general_isogeny_needs_integer_matrix():
    with pytest.raises(InputError):
        abelian.general_isogeny_report(ratMatrix.parse('1/2,0;0,1'))


def test_kodaira_product():
    rep = abelian.kodaira_product_report(3, 2, [2, 5])
    assert rep['potential_degrees'] == [9, 6, 5, 4, 2]
    assert rep['arithmetic_degrees']['values'] == [9, 5, 4, 2, 1]
    assert rep['non_arithmetic']['values'] == [6]
    assert rep['int_amplified']
    assert not abelian.kodaira_product_report(1, 1, [])['int_amplified']
    with pytest.raises(InputError):
        abelian.kodaira_product_report(2, 1, [0])


def test_scalar_isogeny_has_one_potential_degree():
    for n in (2, 1000):
        theta = abelian.theta_matrix(ratMatrix.diag([n, n]))
        assert theta.matrix == n * n * ratMatrix.identity(3)
        rep = abelian.general_isogeny_report(ratMatrix.diag([n, n]), True)
        assert rep['potential_degrees'] == [[str(n * n), '1']]
        assert rep['dynamical_degree'] == float(n * n)
