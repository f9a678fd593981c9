"""Invariants, moduli and classification of two-dimensional commutative algebras over Q."""

from .algebra import SPLIT, ZERO, Algebra, LinMap, field_algebra, gl_act
from .invariants import bundle, moduli

__all__ = ["Algebra", "LinMap", "SPLIT", "ZERO", "field_algebra", "gl_act", "bundle", "moduli"]
