"""Face-number invariants of simplicial complexes and homology manifolds."""

__version__ = "0.1.0"
