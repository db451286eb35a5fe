"""Core functionality: theory points, masks, sentences and engine errors"""

__all__ = ["words", "sentences", "trichotomy", "errors"]
