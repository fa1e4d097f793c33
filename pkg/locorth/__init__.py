"""
locorth - principe d'orthogonalité locale (LO) pour les scénarios de Bell
"""

__version__ = "1.0.0"
