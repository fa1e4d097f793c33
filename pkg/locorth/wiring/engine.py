#!/usr/bin/env python3
"""
Boîte câblée et développement des inégalités

P_wired(b⃗|y⃗) somme P^{⊗r}(a⃗|x⃗) sur les historiques de tous les groupes
dont les sorties valent b⃗ ; un historique fixe les réglages x⃗ des
parties qu'il visite. Développer une inégalité du scénario câblé remplace
chaque terme par les événements de ces historiques.
"""

import itertools
from fractions import Fraction
from typing import Iterator

from ..boxes.box import Box, tensor, tensor_power
from ..errors import InternalError, NotACliqueError, ScenarioMismatch
from ..inequalities.inequality import LOInequality
from ..journal import log_message
from ..scenario.events import Event
from .protocol import StochasticWiring, WiringProtocol


def _branch_table(protocol: WiringProtocol) -> list:
    """branches[g][y] : historiques complets du groupe g pour l'entrée y"""
    return [
        [list(group.branches(y, protocol.base)) for y in range(group.inputs)]
        for group in protocol.groups
    ]


def _combined_events(protocol: WiringProtocol, branches: list, inputs: tuple) -> Iterator[tuple]:
    """(sorties b⃗, index de l'événement de P^{⊗r}) pour chaque combinaison d'historiques"""
    target = protocol.copy_scenario
    for combo in itertools.product(*(branches[g][y] for g, y in enumerate(inputs))):
        outcomes = [0] * protocol.party_count
        settings = [0] * protocol.party_count
        for branch in combo:
            for party, x, a in zip(branch.parties, branch.settings, branch.outcomes):
                settings[party] = x
                outcomes[party] = a
        yield tuple(b.output for b in combo), target.encode(Event(tuple(outcomes), tuple(settings)))


def wire(box: Box, protocol: WiringProtocol) -> Box:
    """
    Boîte obtenue en câblant r copies de `box`

    Args:
        box: Boîte du scénario de base du protocole
        protocol: Protocole vérifié

    Returns:
        Boîte du scénario câblé (groupes, entrées, sorties)
    """
    if box.scenario != protocol.base:
        raise ScenarioMismatch(f"boîte {box.scenario} et protocole sur {protocol.base}")
    protocol.check()
    power = tensor_power(box, protocol.r).table
    wired = protocol.wired_scenario
    branches = _branch_table(protocol)

    table = {}
    for inputs in wired.setting_tuples():
        for outputs, index in _combined_events(protocol, branches, inputs):
            p = power.get(index)
            if p:
                key = Event(outputs, inputs)
                table[key] = table.get(key, Fraction(0)) + p
    log_message(f"Câblage de {protocol.r} copie(s) {protocol.base} vers {wired}", "debug")
    return Box.from_table(wired, table)


def expand_inequality(inequality: LOInequality, protocol: WiringProtocol) -> LOInequality:
    """
    Inégalité sur P^{⊗r} obtenue en substituant la boîte câblée

    Les événements développés sont deux à deux orthogonaux ; le contraire
    est une erreur interne.
    """
    if inequality.scenario != protocol.wired_scenario:
        raise ScenarioMismatch(f"inégalité {inequality.scenario} et scénario câblé {protocol.wired_scenario}")
    protocol.check()
    branches = _branch_table(protocol)
    expanded = []
    for event in inequality.event_list():
        for outputs, index in _combined_events(protocol, branches, event.settings):
            if outputs == event.outcomes:
                expanded.append(index)
    if len(set(expanded)) != len(expanded):
        raise InternalError("développement : événement répété")
    try:
        return LOInequality(protocol.copy_scenario, tuple(expanded))
    except NotACliqueError as exc:
        raise InternalError(f"développement non orthogonal : {exc}") from exc


def stochastic_wire(box: Box, wiring: StochasticWiring) -> Box:
    """Câble P^{⊗copies} ⊗ P_loc avec le protocole déterministe du câblage"""
    extended = tensor(tensor_power(box, wiring.copies), wiring.local_box)
    if extended.scenario != wiring.base.base:
        raise ScenarioMismatch(f"système étendu {extended.scenario} et protocole sur {wiring.base.base}")
    return wire(extended, wiring.base)
