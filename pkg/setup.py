#!/usr/bin/env python

# Copyright (C) 2026 The ArithDyn Development Team


try:
  from setuptools import setup
except ImportError:
    from distutils.core import setup

setup(name='ArithDyn',
      version='0.1.0',
      description='Exact toric, abelian and elliptic arithmetic dynamics',
      author='The ArithDyn Development Team',
      packages=['arithdyn', 'arithdyn.linalg', 'arithdyn.toric',
      'arithdyn.dynamics', 'arithdyn.run_framework'],
      package_data={'arithdyn.toric': ['fixtures/*.fan.json']},
      license='Revised BSD License',
      install_requires=['numpy', 'sympy'],
      extras_require={'test': ['pytest'], 'mpi': ['mpi4py']},
      entry_points={'console_scripts':
                    ['arithdyn=arithdyn.run_framework.cli:main']}
      )
