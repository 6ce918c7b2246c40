# Copyright (C) 2026 The ArithDyn Development Team
"""
ArithDyn dynamics is a subpackage of ArithDyn for the arithmetic side:
heights and arithmetic degrees of orbits on products of projective spaces,
elliptic curve canonical heights and the endomorphism algebra model of
abelian surfaces.

:mod:`~arithdyn.dynamics.heights`
    Weil heights, product systems, iteration and arithmetic degree
    estimates.
:mod:`~arithdyn.dynamics.elliptic`
    Group law, torsion, canonical heights and the ``E x E`` classifier.
:mod:`~arithdyn.dynamics.abelian`
    ``theta_f`` on symmetric classes, nef and ample tests and the
    counterexample reports.
:mod:`~arithdyn.dynamics.system_management`
    JSON input of systems, points and curves.
"""
__all__ = ['heights', 'elliptic', 'abelian', 'system_management']
