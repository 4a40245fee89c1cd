"""extend3: exact enumeration of immersed 3-manifolds bounding a transversely
immersed closed oriented surface in R^3."""

__version__ = "0.1.0"
