"""Gallery functionality: named cases and seeded random families"""

__all__ = ["cases", "random_families"]
