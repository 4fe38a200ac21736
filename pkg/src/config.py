"""
Configuration settings for tropgon
"""

# Application settings
APP_NAME = "tropgon"
APP_VERSION = "1.0.0"

# Enumeration settings
DEFAULT_MAX_GENUS = 8
MAX_SUPPORTED_GENUS = 8
TABLE_GENERA = (2, 3, 4, 5, 6, 8)
TABLE_DEGREES = (2, 3, 4)

# Gonality search limits
GONALITY_VERTEX_CAP = 14  # vertices of the loopless model
GONALITY_DEGREE_CAP = 6  # chips
SCRAMBLE_MAX_EGG_SIZE = 3  # vertices per egg
SCRAMBLE_SEARCH_VERTEX_CAP = 40  # vertices

# Witness families
WITNESS_D4_GENERA = range(7, 50, 3)
WITNESS_D5_GENERA = range(12, 41)
CRYSTAL_SAMPLE_SIZE = 20
CRYSTAL_MIN_GENUS = 27

# Worker settings
DEFAULT_JOBS = 1

# Output settings
JSON_INDENT = 2
CORPUS_FILE_TEMPLATE = "corpus-g{genus}.json"
