"""Exact-arithmetic verification toolkit for character-theoretic computations.

Subpackage map:

- ``cyclotomic``   exact arithmetic in Q(zeta_n), Galois action, conductors
- ``qpoly``        integer polynomials in q, cyclotomic factors, generic degrees
- ``ladic``        multiplicative number theory mod ell, root-existence tests
- ``partitions``   partitions, beta-sets, rim hooks, d-cores
- ``symbols``      two-row symbols for classical types, hooks and cores
- ``wreath``       character tables of C_m wr S_a and index-2 subgroups
- ``grouptable``   generic exact character tables of explicit finite groups
- ``weyl``         Weyl groups as signed permutations, d-regular elements, centralizers
- ``fields``       character-field descriptors and their ell-adic resolution
- ``langmap``      torus cocharacters over small finite fields, Lang-map checks
- ``suites``       named verification suites producing CheckReports
- ``cli``          command-line entry point (``charverify``)
"""

__version__ = "0.1.0"
