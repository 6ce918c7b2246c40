# Copyright (C) 2026 The ArithDyn Development Team

"""
This package is a Python-based framework for exact computations in
arithmetic dynamics: the linear-algebraic dynamics of surjective
endomorphisms of toric varieties and abelian surfaces, and numerical
estimates of arithmetic degrees by height iteration.

All arithmetic on lattices, divisors and matrices is exact (rational numbers
of arbitrary precision). Floating point only appears in eigenvalue moduli and
in logarithmic heights.

This package contains four subpackages

* :mod:`~arithdyn.linalg` exact rational linear algebra, Smith normal forms
  and polyhedral cones
* :mod:`~arithdyn.toric` fans, equivariant endomorphisms and torus-invariant
  divisors
* :mod:`~arithdyn.dynamics` abelian surface endomorphisms, Weil heights,
  elliptic curves and arithmetic degree estimates
* :mod:`~arithdyn.run_framework` the :program:`arithdyn` command line
  program, JSON reports and the demonstration suite

"""
__all__ = ['util', 'linalg', 'toric', 'dynamics', 'run_framework']
