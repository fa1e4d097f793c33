#!/usr/bin/env python3
"""
Configuration centrale de locorth

Toutes les valeurs se surchargent par variables d'environnement (voir
`.env.example`).
"""

import os
import time
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, Field

from .errors import BudgetExceeded

# Configuration - chemins
BASE_DIR = Path(__file__).parent.parent
TEMPLATES_DIR = BASE_DIR / "templates"
DATA_DIR = BASE_DIR / "data"


def _optional_float(name: str) -> Optional[float]:
    raw = os.getenv(name, "").strip()
    return float(raw) if raw else None


# Limites de calcul
VERTEX_LIMIT = int(os.getenv("LOCORTH_VERTEX_LIMIT", str(2 ** 20)))
MAX_CLIQUES = int(os.getenv("LOCORTH_MAX_CLIQUES", str(10 ** 8)))
BUDGET_SECONDS = _optional_float("LOCORTH_BUDGET_SECONDS")
LP_MAX_VARIABLES = int(os.getenv("LOCORTH_LP_MAX_VARIABLES", "4096"))
ORBIT_BUDGET = int(os.getenv("LOCORTH_ORBIT_BUDGET", str(10 ** 7)))
ORBIT_CACHE_LIMIT = int(os.getenv("LOCORTH_ORBIT_CACHE_LIMIT", "200000"))
THREADS = int(os.getenv("LOCORTH_THREADS", "1"))
SEED = int(os.getenv("LOCORTH_SEED", "0"))

# Tolérance numérique (produits scalaires complexes)
NUMERIC_TOLERANCE = 1e-10

# Journal - une chaîne vide désactive le fichier
LOG_PATH = os.getenv("LOCORTH_LOG_PATH", str(BASE_DIR / "logs" / "locorth.log"))
LOG_LEVEL = os.getenv("LOCORTH_LOG_LEVEL", "WARNING")


class BudgetClock:
    """
    Budget en cours de consommation

    Compte les cliques produites et surveille l'horloge murale. La vérification
    du temps n'a lieu que toutes les `check_every` opérations.
    """

    def __init__(self, max_cliques: int, seconds: Optional[float], check_every: int = 1024):
        self.max_cliques = max_cliques
        self.deadline = None if seconds is None else time.monotonic() + seconds
        self.check_every = check_every
        self.cliques = 0
        self._ticks = 0

    def count_clique(self):
        self.cliques += 1
        if self.cliques > self.max_cliques:
            raise BudgetExceeded(f"budget de cliques dépassé ({self.max_cliques})")

    def tick(self):
        self._ticks += 1
        if self.deadline is not None and self._ticks % self.check_every == 0:
            if time.monotonic() > self.deadline:
                raise BudgetExceeded("budget de temps dépassé")


class Budget(BaseModel):
    """Budget d'énumération (nombre de cliques et temps mural)"""

    max_cliques: int = Field(default=MAX_CLIQUES, ge=1)
    seconds: Optional[float] = Field(default=BUDGET_SECONDS, gt=0)

    def start(self) -> BudgetClock:
        return BudgetClock(self.max_cliques, self.seconds)


def default_budget() -> Budget:
    return Budget()
