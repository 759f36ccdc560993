"""Exact computations in the Hopf algebra of parking functions and its relatives."""
from . import coeffs, words
from . import pqsym
from . import sqsym
from . import ncsf
from . import cqsym
from . import scqsym

coeffs.freeze_registry()

__version__ = "0.1.0"
