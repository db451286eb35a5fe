"""Script parser, session interpreter, verify suites and the theoria command group"""

__all__ = ["parser", "interpreter", "verify", "main"]
