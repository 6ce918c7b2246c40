# Copyright (C) 2026 The ArithDyn Development Team

"""
This subpackage contains

* :mod:`~arithdyn.run_framework.report` the :class:`report` container and
  its deterministic JSON rendering
* :mod:`~arithdyn.run_framework.cli` the :program:`arithdyn` command line
  program, :func:`~arithdyn.run_framework.cli.run` and ``main``
* :mod:`~arithdyn.run_framework.demo` the consolidated acceptance suite

"""

__all__ = ['report', 'cli', 'demo']
