"""Family functionality: index sets, blocks and the exact set calculus"""

__all__ = ["indexset", "blocks", "calculus", "family"]
