"""Algebra functionality: generated Boolean algebras and Cantor-Bendixson profiles"""

__all__ = ["boolean", "cantor_bendixson"]
