#!/usr/bin/env python3
"""
Ensembles de vecteurs produits associés aux inégalités LO

L'événement (a⃗|x⃗) donne le vecteur |φ^{x1}_{a1}⟩ ⊗ … ⊗ |φ^{xn}_{an}⟩ :
le réglage choisit la base, le résultat l'élément. Le chiffre a + d·x
d'un événement est aussi l'index du vecteur local dans la famille.
"""

import itertools
from dataclasses import dataclass, replace
from functools import reduce
from typing import Optional

import numpy as np
from scipy.linalg import null_space

from .. import settings
from ..errors import DimensionMismatch, InternalError, PreconditionError, SizeLimitExceeded
from ..inequalities.inequality import LOInequality
from ..journal import log_message
from ..scenario.events import Scenario, digits_orthogonal
from .bases import BasisFamily


@dataclass(frozen=True, eq=False)
class ProductVectorSet:
    family: BasisFamily
    n: int
    members: tuple

    @property
    def scenario(self) -> Scenario:
        return Scenario(self.n, self.family.m, self.family.d)

    @property
    def digits(self) -> np.ndarray:
        """(t, n) : chiffre base·d + élément de chaque site"""
        d = self.family.d
        return np.array([[x * d + a for x, a in member] for member in self.members], dtype=np.int64).reshape(-1, self.n)

    def __len__(self):
        return len(self.members)

    def symbols(self, member: tuple) -> str:
        return "|" + "".join(self.family.symbol(x, a) for x, a in member) + "⟩"

    def site_vectors(self, member: tuple) -> np.ndarray:
        return np.array([self.family.vector(x, a) for x, a in member])

    def state(self, member: tuple) -> np.ndarray:
        return reduce(np.kron, self.site_vectors(member))


@dataclass(frozen=True)
class GramVerdict:
    orthogonal: bool
    pair: Optional[tuple] = None
    value: Optional[complex] = None


def vectors_from_inequality(inequality: LOInequality, family: BasisFamily) -> ProductVectorSet:
    """Un vecteur produit par événement, dans l'ordre des événements"""
    s = inequality.scenario
    if (s.m, s.d) != (family.m, family.d):
        raise DimensionMismatch(f"famille ({family.m} bases, d={family.d}) incompatible avec {s}")
    members = tuple(tuple(zip(e.settings, e.outcomes)) for e in inequality.event_list())
    return ProductVectorSet(family, s.n, members)


def _overlap_products(family: BasisFamily, candidates: np.ndarray, members: np.ndarray) -> np.ndarray:
    """(K, t) : ⟨membre|candidat⟩ pour des vecteurs de la famille donnés par leurs chiffres"""
    product = np.ones((candidates.shape[0], members.shape[0]), dtype=complex)
    for site in range(candidates.shape[1]):
        product *= family.overlaps[np.ix_(members[:, site], candidates[:, site])].T
    return product


def gram_orthogonality(pvs: ProductVectorSet) -> GramVerdict:
    """
    Orthogonalité deux à deux, numérique et combinatoire

    Les deux critères doivent coïncider ; un désaccord est une erreur interne.
    """
    digits = pvs.digits
    s = pvs.scenario
    gram = _overlap_products(pvs.family, digits, digits)
    for i, j in itertools.combinations(range(len(pvs)), 2):
        numeric = abs(gram[j, i]) <= settings.NUMERIC_TOLERANCE
        combinatorial = digits_orthogonal(s, tuple(digits[i]), tuple(digits[j]))
        if numeric != combinatorial:
            raise InternalError(f"vecteurs {i} et {j} : critères numérique et combinatoire en désaccord")
        if not numeric:
            return GramVerdict(False, (i, j), complex(gram[j, i]))
    return GramVerdict(True)


def extension_vectors(pvs: ProductVectorSet, chunk: int = 65536) -> list:
    """Vecteurs produits de la famille orthogonaux à tous les membres (chiffres par site)"""
    s = pvs.scenario
    if s.event_count > settings.VERTEX_LIMIT:
        raise SizeLimitExceeded(f"{s.event_count} vecteurs produits dépassent la limite de {settings.VERTEX_LIMIT}")
    members = pvs.digits
    found = []
    for start in range(0, s.event_count, chunk):
        stop = min(start + chunk, s.event_count)
        candidates = np.array([s.digits(index) for index in range(start, stop)], dtype=np.int64)
        if not len(members):
            found.extend(tuple(int(v) for v in row) for row in candidates)
            continue
        overlaps = np.abs(_overlap_products(pvs.family, candidates, members))
        hits = np.all(overlaps <= settings.NUMERIC_TOLERANCE, axis=1)
        found.extend(tuple(int(v) for v in row) for row in candidates[hits])
    return found


def weak_unextendible(pvs: ProductVectorSet, family: Optional[BasisFamily] = None) -> bool:
    """
    Aucun vecteur produit de la famille n'est orthogonal à tous les membres

    Args:
        pvs: Ensemble de vecteurs produits
        family: Famille de bases des candidats (défaut : `pvs.family`, celle
            de `vectors_from_inequality`) ; les membres y sont réinterprétés

    Returns:
        Vrai si l'ensemble est faiblement inextensible
    """
    if family is not None and family is not pvs.family:
        if (family.d, family.m) != (pvs.family.d, pvs.family.m):
            raise DimensionMismatch(f"famille (d={family.d}, m={family.m}) incompatible avec l'ensemble")
        pvs = replace(pvs, family=family)
    return not extension_vectors(pvs)


def _random_sites(rng: np.random.Generator, count: int, n: int, d: int) -> np.ndarray:
    vectors = rng.normal(size=(count, n, d)) + 1j * rng.normal(size=(count, n, d))
    return vectors / np.linalg.norm(vectors, axis=2, keepdims=True)


def qubit_upb_check(pvs: ProductVectorSet, samples: int = 10 ** 6, seed: Optional[int] = None,
                    chunk: int = 50_000) -> bool:
    """
    Pour d = 2, un UPB faible est un UPB ; contrôle par tirage de vecteurs produits aléatoires

    Args:
        pvs: Ensemble faiblement inextensible de qubits
        samples: Nombre de vecteurs produits tirés
        seed: Graine (défaut LOCORTH_SEED)
        chunk: Taille des lots

    Returns:
        Vrai si aucun vecteur tiré n'est orthogonal à tous les membres
    """
    if pvs.family.d != 2:
        raise PreconditionError("qubit_upb_check demande d = 2")
    if not weak_unextendible(pvs):
        raise PreconditionError("l'ensemble n'est pas faiblement inextensible")
    if not len(pvs):
        return True
    rng = np.random.default_rng(settings.SEED if seed is None else seed)
    members = np.array([pvs.site_vectors(member) for member in pvs.members])
    for start in range(0, samples, chunk):
        count = min(chunk, samples - start)
        vectors = _random_sites(rng, count, pvs.n, 2)
        overlaps = np.einsum("tsk,csk->cts", members.conj(), vectors).prod(axis=2)
        if np.any(np.all(np.abs(overlaps) <= settings.NUMERIC_TOLERANCE, axis=1)):
            log_message("⚠️ vecteur produit orthogonal à tout l'ensemble trouvé par tirage", "warning")
            return False
    return True


def site_candidates(family: BasisFamily) -> list:
    """
    Vecteurs orthogonaux à l'espace engendré par au plus d−1 vecteurs des bases

    Doublons (à une phase près) retirés, ordre de génération conservé.
    """
    columns = [family.vector(x, a) for x in range(family.m) for a in range(family.d)]
    candidates = []
    for size in range(1, family.d):
        for subset in itertools.combinations(columns, size):
            kernel = null_space(np.array([v.conj() for v in subset]), rcond=settings.NUMERIC_TOLERANCE)
            for vector in kernel.T:
                if all(abs(np.vdot(other, vector)) < 1 - settings.NUMERIC_TOLERANCE for other in candidates):
                    candidates.append(vector)
    return candidates


def find_orthogonal_product_vector(pvs: ProductVectorSet) -> Optional[np.ndarray]:
    """
    Cherche dans une famille structurée un vecteur produit orthogonal à tout l'ensemble

    Returns:
        Vecteurs locaux (n, d) du premier vecteur certifié, ou None ; l'absence
        dans la famille ne prouve pas l'inextensibilité pour d ≥ 3
    """
    candidates = site_candidates(pvs.family)
    members = np.array([pvs.site_vectors(member) for member in pvs.members]).reshape(len(pvs), pvs.n, pvs.family.d)
    # overlaps[t, s, c] = ⟨membre t au site s | candidat c⟩
    overlaps = np.einsum("tsk,ck->tsc", members.conj(), np.array(candidates))
    for combo in itertools.product(range(len(candidates)), repeat=pvs.n):
        product = np.ones(len(pvs), dtype=complex)
        for site, c in enumerate(combo):
            product *= overlaps[:, site, c]
        if np.all(np.abs(product) <= settings.NUMERIC_TOLERANCE):
            return np.array([candidates[c] for c in combo])
    return None
