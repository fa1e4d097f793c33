#!/usr/bin/env python3
"""
Scénarios de Bell (n, m, d) et encodage des événements

Un événement (a1…an|x1…xn) est indexé en base mixte : pour chaque partie,
le chiffre vaut a + d·x (réglage avant résultat), parties de poids fort en
premier.
"""

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from ..errors import DimensionMismatch, FormatError, ScenarioError


def is_decimal(text: str) -> bool:
    """Chiffres ASCII uniquement (`str.isdigit` accepte aussi `²`)"""
    return text.isascii() and text.isdigit()


@dataclass(frozen=True, order=True)
class Event:
    """Événement (a1…an|x1…xn)"""

    outcomes: tuple
    settings: tuple

    @property
    def parties(self) -> int:
        return len(self.outcomes)

    def label(self) -> str:
        """Notation compacte `a1…an|x1…xn`"""
        return "".join(map(str, self.outcomes)) + "|" + "".join(map(str, self.settings))

    def __str__(self):
        return self.label()


@dataclass(frozen=True)
class Scenario:
    """Scénario de Bell : n parties, m réglages, d résultats par réglage"""

    n: int
    m: int
    d: int

    def __post_init__(self):
        if self.n < 1 or self.m < 1 or self.d < 2:
            raise ScenarioError(f"scénario invalide ({self.n},{self.m},{self.d}) : n≥1, m≥1, d≥2 requis")

    @property
    def radix(self) -> int:
        """Nombre de couples (réglage, résultat) pour une partie"""
        return self.m * self.d

    @property
    def event_count(self) -> int:
        return self.radix ** self.n

    @property
    def context_count(self) -> int:
        return self.m ** self.n

    def __str__(self):
        return f"({self.n},{self.m},{self.d})"

    def tag(self) -> str:
        return f"{self.n}{self.m}{self.d}"

    # ------------------------------------------------------------------
    # Encodage
    # ------------------------------------------------------------------

    def check_event(self, event: Event):
        if len(event.outcomes) != self.n or len(event.settings) != self.n:
            raise DimensionMismatch(f"l'événement {event.label()} n'a pas {self.n} parties")
        for a, x in zip(event.outcomes, event.settings):
            if not 0 <= a < self.d or not 0 <= x < self.m:
                raise DimensionMismatch(f"l'événement {event.label()} sort du scénario {self}")

    def encode(self, event: Event) -> int:
        """Index en base mixte de l'événement"""
        self.check_event(event)
        index = 0
        for a, x in zip(event.outcomes, event.settings):
            index = index * self.radix + a + self.d * x
        return index

    def index_of(self, outcomes: Sequence[int], settings: Sequence[int]) -> int:
        return self.encode(Event(tuple(outcomes), tuple(settings)))

    def digits(self, index: int) -> tuple:
        """Chiffres (a + d·x) de chaque partie, partie 1 en tête"""
        if not 0 <= index < self.event_count:
            raise DimensionMismatch(f"index {index} hors du scénario {self}")
        digits = []
        for _ in range(self.n):
            index, digit = divmod(index, self.radix)
            digits.append(digit)
        return tuple(reversed(digits))

    def from_digits(self, digits: Sequence[int]) -> int:
        index = 0
        for digit in digits:
            index = index * self.radix + digit
        return index

    def decode(self, index: int) -> Event:
        digits = self.digits(index)
        return Event(
            tuple(digit % self.d for digit in digits),
            tuple(digit // self.d for digit in digits),
        )

    def events(self) -> Iterator[Event]:
        for index in range(self.event_count):
            yield self.decode(index)

    def setting_tuples(self) -> Iterator[tuple]:
        return itertools.product(range(self.m), repeat=self.n)

    def outcome_tuples(self) -> Iterator[tuple]:
        return itertools.product(range(self.d), repeat=self.n)

    def parse_event(self, text: str, line: int = 0) -> Event:
        """
        Lit un événement au format `a1…an|x1…xn`

        Args:
            text: Chaîne telle qu'imprimée dans les tableaux (`110|011`)
            line: Numéro de ligne pour les messages d'erreur

        Returns:
            L'événement, vérifié contre le scénario
        """
        outcomes, sep, settings = text.strip().partition("|")
        if not sep or not is_decimal(outcomes) or not is_decimal(settings):
            raise FormatError(f"événement illisible {text!r}", line)
        event = Event(tuple(int(c) for c in outcomes), tuple(int(c) for c in settings))
        try:
            self.check_event(event)
        except DimensionMismatch as exc:
            raise FormatError(str(exc), line) from exc
        return event


def are_orthogonal(scenario: Scenario, e: Event, f: Event) -> bool:
    """
    Orthogonalité locale : même réglage et résultats différents pour au
    moins une partie.
    """
    scenario.check_event(e)
    scenario.check_event(f)
    return any(
        x == y and a != b
        for a, x, b, y in zip(e.outcomes, e.settings, f.outcomes, f.settings)
    )


def digits_orthogonal(scenario: Scenario, u: Sequence[int], v: Sequence[int]) -> bool:
    """Même critère sur des chiffres déjà décodés"""
    d = scenario.d
    return any(p != q and p // d == q // d for p, q in zip(u, v))
