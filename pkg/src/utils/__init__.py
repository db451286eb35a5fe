"""Utility functions and helpers"""

__all__ = ["utils", "validators", "history"]
