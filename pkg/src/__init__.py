"""theoria - symbolic closures and generating sets of theory families"""

__version__ = "1.0.0"
__description__ = "Closures, least generating sets and lattices of families of theories"
