"""Lattice functionality: closed families under join, meet and meet-prime"""

__all__ = ["elements", "operations", "generate"]
