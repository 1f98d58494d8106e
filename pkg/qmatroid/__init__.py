"""
Exact verification of subset-sum identities for GF(q)-linear matroids:
an alpha-sum formula for chi of the dual matroid, convolution identities for
the characteristic and rank polynomials, and finite vacuum Feynman amplitudes.
"""

__version__ = "0.1.0"
