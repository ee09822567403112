"""Exact and numerical tools around the discrete series of Sp6(R).

Submodules: rootsys (C3 roots, Weyl group), gaussrat and matlie (exact sp6
matrices over Q(i)), uchar (U(3) characters), wedge (wedge^p p+ (x) wedge^q p-
with the adjoint action), packets, lfunc (Spin L-factors and Gamma factors),
bmquad (Bochner-Martinelli quadrature) and cli.
"""

__version__ = "0.1.0"
