"""Closure functionality: accumulation points, closures and least generating sets"""

__all__ = ["engine", "reports"]
