"""
tropgon: lattice polygons, tropical plane curves and their moduli dimensions
"""

from .config import APP_VERSION

__version__ = APP_VERSION
