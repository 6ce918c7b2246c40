# Copyright (C) 2026 The ArithDyn Development Team

"""
This subpackage contains

*   the module :mod:`~arithdyn.toric.fan` the :class:`~arithdyn.toric.fan.fan`
    class, validation, completeness, products and star fans;
*   the module :mod:`~arithdyn.toric.fan_management` reading and writing fans,
    matrices and divisors as JSON, and the bundled fixture fans;
*   the module :mod:`~arithdyn.toric.toric_endo` equivariant endomorphisms:
    compatibility, ray permutations, eigen-fan decompositions and simplicity;
*   the module :mod:`~arithdyn.toric.toric_divisors` torus-invariant divisors,
    the class group, pullbacks, nef cones and potential arithmetic degrees.

"""
__all__ = ["fan", "fan_management", "toric_endo", "toric_divisors"]
