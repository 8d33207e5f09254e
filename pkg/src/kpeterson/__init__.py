"""Type C affine Weyl group combinatorics and the K-theoretic Peterson map for LG(n)."""

__version__ = "0.1.0"
