#!/usr/bin/env python3
"""
Familles de bases locales

La base 0 est la base standard. Pour d = 2, la base j est la rotation
d'angle j radians : |e⟩ = cos j|0⟩ + sin j|1⟩. Pour d ≥ 3, c'est la
transformée de Fourier suivie de phases exp(i·j·l²). Aucun vecteur d'une
base n'est orthogonal à un vecteur d'une autre base (propriété P),
vérifié à la construction.
"""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .. import settings
from ..errors import DimensionMismatch, PropertyPError

# Notation des vecteurs de la base 1
PRIMED_SYMBOLS = ("e", "e⊥", "e⊤")


@dataclass(frozen=True, eq=False)
class BasisFamily:
    """
    m bases orthonormées de C^d

    Args:
        d: Dimension locale
        m: Nombre de bases
        change_of_basis: Matrices unitaires (m, d, d) ; la colonne a de la
            matrice x est le vecteur a de la base x
    """

    d: int
    m: int
    change_of_basis: np.ndarray

    def __post_init__(self):
        if self.change_of_basis.shape != (self.m, self.d, self.d):
            raise DimensionMismatch(f"matrices de changement de base de forme {self.change_of_basis.shape}")
        for x, matrix in enumerate(self.change_of_basis):
            if not np.allclose(matrix.conj().T @ matrix, np.eye(self.d), atol=settings.NUMERIC_TOLERANCE):
                raise DimensionMismatch(f"la base {x} n'est pas orthonormée")
        self.check_property_p()

    def vector(self, basis: int, element: int) -> np.ndarray:
        return self.change_of_basis[basis][:, element]

    @cached_property
    def overlaps(self) -> np.ndarray:
        """Produits scalaires ⟨φ^x_a|φ^x'_a'⟩ indexés par les chiffres a + d·x"""
        columns = np.concatenate(list(self.change_of_basis), axis=1)
        return columns.conj().T @ columns

    def check_property_p(self):
        overlaps = np.abs(self.overlaps)
        for x in range(self.m):
            for y in range(x + 1, self.m):
                block = overlaps[x * self.d:(x + 1) * self.d, y * self.d:(y + 1) * self.d]
                if block.min() <= settings.NUMERIC_TOLERANCE:
                    raise PropertyPError(f"les bases {x} et {y} ont des vecteurs orthogonaux")

    def symbol(self, basis: int, element: int) -> str:
        """Notation d'un vecteur : 0, 1, 2 pour la base standard, e, e⊥, e⊤ pour la base 1"""
        if basis == 0 and self.d <= 10:
            return str(element)
        if basis == 1 and self.d <= len(PRIMED_SYMBOLS):
            return PRIMED_SYMBOLS[element]
        return f"b{basis}_{element}"


def rotation_matrix(angle: float) -> np.ndarray:
    c, s = np.cos(angle), np.sin(angle)
    return np.array([[c, -s], [s, c]], dtype=complex)


def fourier_matrix(d: int) -> np.ndarray:
    k = np.arange(d)
    return np.exp(2j * np.pi * np.outer(k, k) / d) / np.sqrt(d)


def default_family(d: int, m: int = 2) -> BasisFamily:
    """Famille par défaut, reproductible, vérifiée pour la propriété P"""
    matrices = [np.eye(d, dtype=complex)]
    for j in range(1, m):
        if d == 2:
            matrices.append(rotation_matrix(float(j)))
        else:
            phases = np.exp(1j * j * np.arange(d) ** 2)
            matrices.append(np.diag(phases) @ fourier_matrix(d))
    return BasisFamily(d, m, np.array(matrices))
