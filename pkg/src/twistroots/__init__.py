"""Exact verification of roots of Dehn twists and their algebraic shadows.

Modules:

- :mod:`twistroots.words` -- freely reduced words in free groups
- :mod:`twistroots.autos` -- free-group endomorphisms and automorphisms
- :mod:`twistroots.braid` -- braid words and the Artin action
- :mod:`twistroots.rootcalc` -- exponent calculus and fractional-twist ledgers
- :mod:`twistroots.matrix`, :mod:`twistroots.symplectic` -- integer and symplectic matrices
- :mod:`twistroots.polygon` -- polygon gluings and rotation numbers
- :mod:`twistroots.cli` -- the ``verify`` command
"""

__version__ = "0.1.0"
