#!/usr/bin/env python3
"""
Exceptions de locorth

InputError -> code de sortie 2, BudgetExceeded -> code de sortie 3.
"""


class LocOrthError(Exception):
    """Erreur de base"""


class InputError(LocOrthError, ValueError):
    """Entrée invalide (fichier, paramètre, dimensions)"""


class ScenarioError(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class ScenarioMismatch(InputError):
    pass


class FormatError(InputError):
    """Erreur d'analyse d'un fichier, avec numéro de ligne"""

    def __init__(self, message: str, line: int = 0, source: str = ""):
        self.message = message
        self.line = line
        self.source = source
        where = f"{source}:{line}" if source else f"ligne {line}"
        super().__init__(f"{where}: {message}" if line else message)

    def __reduce__(self):
        return (self.__class__, (self.message, self.line, self.source))


class NegativeProbabilityError(InputError):
    pass


class LHVModelError(InputError):
    pass


class MixtureError(InputError):
    pass


class InputDistributionError(InputError):
    pass


class NotACliqueError(InputError):
    """Deux événements non orthogonaux dans un ensemble censé être une clique"""

    def __init__(self, message: str, pair=None):
        self.pair = pair
        super().__init__(message)

    def __reduce__(self):
        return (self.__class__, (self.args[0], self.pair))


class ProtocolError(InputError):
    pass


class ArityMismatch(ProtocolError):
    pass


class PropertyPError(InputError):
    pass


class PreconditionError(InputError):
    pass


class NoCrossingError(InputError):
    pass


class BudgetExceeded(LocOrthError):
    """Budget (cliques, temps, orbite) épuisé"""


class SizeLimitExceeded(BudgetExceeded):
    """Graphe ou programme linéaire trop grand"""


class InternalError(LocOrthError):
    """Violation d'un invariant interne (ne doit jamais arriver)"""
