"""qtoric: exact arithmetic for quantum affine toric degenerations.

Subpackages by theme:

* ``exact``: rationals and the rational-function field Q(q)
* ``kernels``: integer enumeration kernels (compiled when available)
* ``semigroup``: positive affine semigroups: membership, Hilbert bases,
  presentations, normality, interior, Gorenstein witnesses
* ``latticekit``: finite distributive lattices and their semigroups str(L)
* ``freealg``: degree-truncated rewriting in free noncommutative algebras
* ``twisted``: 2-cocycles and twisted semigroup algebras
* ``degen``: degeneration criteria, associated graded, reports
* ``stringgeo``: root data, string cones, weighted semigroups, point counts
* ``demos``: worked end-to-end examples
* ``cli``: the ``qtoric`` command-line front end
"""

__version__ = "0.1.0"
