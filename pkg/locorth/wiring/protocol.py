#!/usr/bin/env python3
"""
Protocoles de câblage

Les r·n parties de P^{⊗r} (copie c, partie i ↦ c·n + i) sont réparties
en groupes. Chaque groupe reçoit une entrée y et mesure ses boîtes l'une
après l'autre : la partie suivante, son réglage et, à la fin, la sortie du
groupe sont lus dans des tables indexées par (y, résultats obtenus jusque
là). Un ordre qui dépend des résultats donne un câblage dynamique.
"""

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Optional, Sequence

from ..boxes.box import Box
from ..boxes.lhv import LHVModel, from_lhv
from ..errors import ArityMismatch, ProtocolError
from ..scenario.events import Scenario


@dataclass(frozen=True)
class Branch:
    """Historique complet d'un groupe : parties, réglages et résultats dans l'ordre de mesure"""

    parties: tuple
    settings: tuple
    outcomes: tuple
    output: int


@dataclass(frozen=True)
class WiringGroup:
    parties: tuple
    inputs: int
    outputs: int
    order: dict = field(default_factory=dict)
    settings: dict = field(default_factory=dict)
    output: dict = field(default_factory=dict)

    def branches(self, y: int, base: Scenario) -> Iterator[Branch]:
        """Historiques atteignables pour l'entrée y, en profondeur dans l'ordre des résultats"""
        yield from self._walk(y, (), (), (), base)

    def _walk(self, y: int, history: tuple, parties: tuple, settings: tuple, base: Scenario):
        if len(history) == len(self.parties):
            try:
                output = self.output[(y, history)]
            except KeyError:
                raise ProtocolError(f"sortie non définie pour y={y}, historique {history}") from None
            yield Branch(parties, settings, history, output)
            return
        try:
            party = self.order[(y, history)]
            setting = self.settings[(y, history)]
        except KeyError:
            raise ProtocolError(f"ordre ou réglage non défini pour y={y}, historique {history}") from None
        for a in range(base.d):
            yield from self._walk(y, history + (a,), parties + (party,), settings + (setting,), base)


@dataclass(frozen=True)
class WiringProtocol:
    base: Scenario
    r: int
    groups: tuple

    @property
    def party_count(self) -> int:
        return self.r * self.base.n

    @property
    def copy_scenario(self) -> Scenario:
        """Scénario de P^{⊗r}"""
        return Scenario(self.party_count, self.base.m, self.base.d)

    @cached_property
    def wired_scenario(self) -> Scenario:
        arities = {(g.inputs, g.outputs) for g in self.groups}
        if len(arities) != 1:
            raise ArityMismatch(f"arités de groupes différentes : {sorted(arities)}")
        inputs, outputs = arities.pop()
        return Scenario(len(self.groups), inputs, outputs)

    def check(self):
        """
        Vérifie la partition des parties et la cohérence des tables

        Chaque historique atteignable doit visiter chaque membre du groupe
        exactement une fois, avec des réglages et sorties dans les bornes.
        """
        if self.r < 1 or not self.groups:
            raise ProtocolError("protocole vide")
        members = sorted(p for g in self.groups for p in g.parties)
        if members != list(range(self.party_count)):
            raise ProtocolError(f"les groupes ne partitionnent pas les {self.party_count} parties")
        self.wired_scenario  # lève ArityMismatch
        for index, group in enumerate(self.groups):
            for y in range(group.inputs):
                for branch in group.branches(y, self.base):
                    if sorted(branch.parties) != sorted(group.parties):
                        raise ProtocolError(f"groupe {index}, y={y} : ordre {branch.parties} invalide")
                    if any(not 0 <= x < self.base.m for x in branch.settings):
                        raise ArityMismatch(f"groupe {index} : réglage hors de 0..{self.base.m - 1}")
                    if not 0 <= branch.output < group.outputs:
                        raise ArityMismatch(f"groupe {index} : sortie {branch.output} hors de 0..{group.outputs - 1}")


@dataclass(frozen=True)
class StochasticWiring:
    """
    Câblage déterministe de P^{⊗copies} ⊗ P_loc

    P_loc est la boîte classique engendrée par le modèle `local` ; elle
    fournit l'aléa partagé du câblage stochastique.
    """

    local: LHVModel
    base: WiringProtocol
    copies: int

    def __post_init__(self):
        if not isinstance(self.local, LHVModel):
            raise ProtocolError("l'aléa partagé doit être décrit par un modèle LHV")
        if self.copies < 1:
            raise ProtocolError("au moins une copie de la boîte est câblée")
        if self.base.r != 1:
            raise ProtocolError("le protocole d'un câblage stochastique porte sur une seule copie étendue")

    @cached_property
    def local_box(self) -> Box:
        return from_lhv(self.local)


# ----------------------------------------------------------------------
# Protocoles usuels
# ----------------------------------------------------------------------

def _single_party_group(party: int, settings: Sequence[int], outputs: Sequence[int], d: int) -> WiringGroup:
    """Groupe d'une partie : réglage settings[y], sortie outputs[a]"""
    order = {(y, ()): party for y in range(len(settings))}
    setting = {(y, ()): settings[y] for y in range(len(settings))}
    output = {(y, (a,)): outputs[a] for y in range(len(settings)) for a in range(d)}
    return WiringGroup((party,), len(settings), 1 + max(outputs), order, setting, output)


def identity_protocol(base: Scenario) -> WiringProtocol:
    return restrict_settings_protocol(base, range(base.m))


def restrict_settings_protocol(base: Scenario, kept: Sequence[int]) -> WiringProtocol:
    """Chaque partie ne conserve que les réglages `kept`, renumérotés 0, 1, …"""
    kept = tuple(kept)
    if not kept or any(not 0 <= x < base.m for x in kept):
        raise ProtocolError(f"réglages {kept} hors du scénario {base}")
    groups = tuple(_single_party_group(i, kept, tuple(range(base.d)), base.d) for i in range(base.n))
    return WiringProtocol(base, 1, groups)


def coarse_graining_protocol(base: Scenario, mapping: Sequence[int]) -> WiringProtocol:
    """Regroupe les résultats : le résultat a devient mapping[a]"""
    mapping = tuple(mapping)
    if len(mapping) != base.d or min(mapping) < 0:
        raise ProtocolError(f"regroupement {mapping} incompatible avec d={base.d}")
    if sorted(set(mapping)) != list(range(1 + max(mapping))):
        raise ProtocolError(f"regroupement {mapping} : sorties non consécutives")
    groups = tuple(_single_party_group(i, tuple(range(base.m)), mapping, base.d) for i in range(base.n))
    return WiringProtocol(base, 1, groups)


def _random_group(parties: list, base: Scenario, rng: random.Random, inputs: int, outputs: int,
                  dynamic: bool) -> WiringGroup:
    order, settings, output = {}, {}, {}
    for y in range(inputs):
        static = list(parties)
        rng.shuffle(static)

        def walk(history: tuple, remaining: list):
            if not remaining:
                output[(y, history)] = rng.randrange(outputs)
                return
            party = rng.choice(remaining) if dynamic else static[len(history)]
            order[(y, history)] = party
            settings[(y, history)] = rng.randrange(base.m)
            rest = [p for p in remaining if p != party]
            for a in range(base.d):
                walk(history + (a,), rest)

        walk((), list(parties))
    return WiringGroup(tuple(sorted(parties)), inputs, outputs, order, settings, output)


def random_protocol(base: Scenario, r: int, rng: random.Random, groups: Optional[int] = None,
                    inputs: int = 2, outputs: int = 2, dynamic: bool = True,
                    partition: Optional[Sequence[Sequence[int]]] = None) -> WiringProtocol:
    """
    Protocole aléatoire : partition aléatoire des r·n parties, tables tirées au hasard

    Args:
        base: Scénario de la boîte câblée
        r: Nombre de copies
        rng: Générateur pseudo-aléatoire
        groups: Nombre de groupes (défaut n)
        inputs: Entrées par groupe
        outputs: Sorties par groupe
        dynamic: Ordre de mesure dépendant des résultats
        partition: Groupes imposés (seules les tables sont tirées)

    Returns:
        Protocole vérifié
    """
    total = r * base.n
    if partition is None:
        groups = base.n if groups is None else groups
        if not 1 <= groups <= total:
            raise ProtocolError(f"{groups} groupes pour {total} parties")
        parties = list(range(total))
        rng.shuffle(parties)
        cuts = sorted(rng.sample(range(1, total), groups - 1))
        bounds = [0] + cuts + [total]
        partition = [parties[bounds[g]:bounds[g + 1]] for g in range(groups)]
    protocol = WiringProtocol(
        base,
        r,
        tuple(_random_group(list(block), base, rng, inputs, outputs, dynamic) for block in partition),
    )
    protocol.check()
    return protocol
