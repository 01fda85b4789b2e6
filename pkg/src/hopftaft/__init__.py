"""Exact construction and classification of the Hopf algebras that factorize
through a Taft algebra and a cyclic group algebra."""

__version__ = "0.1.0"
