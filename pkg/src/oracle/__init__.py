"""Oracle functionality: depth projections and brute-force closure verdicts"""

__all__ = ["projection"]
