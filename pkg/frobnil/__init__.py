# Frobnil package
"""
Exact-arithmetic Frobenius nilCoxeter, polynomial and nilHecke algebras,
with a command-line front-end and an HTTP verification service.
"""

__version__ = "1.0.0"
