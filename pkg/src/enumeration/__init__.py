"""
Enumeration of maximal non-hyperelliptic polygons of small genus
"""
from .candidates import enumerate_interior_candidates
from .corpus import Corpus, enumerate_maximal, table_row
