#!/usr/bin/env python3
"""
Fichiers d'inégalités LO

    scenario <n> <m> <d>
    <a1…an>|<x1…xn>
    …

Un événement par ligne à l'écriture ; à la lecture, plusieurs événements
séparés par des blancs sont acceptés sur une même ligne (recopie directe
des tableaux). `#` commence un commentaire.
"""

from pathlib import Path
from typing import Union

from ..boxes.storage import content_lines, parse_header
from ..errors import FormatError, InputError, NotACliqueError
from .inequality import LOInequality


def parse_inequality(text: str, source: str = "") -> LOInequality:
    """
    Analyse un fichier d'inégalité

    Args:
        text: Contenu du fichier
        source: Nom du fichier pour les messages d'erreur

    Returns:
        Inégalité dont l'orthogonalité a été vérifiée
    """
    lines = content_lines(text)
    try:
        number, header = next(lines)
    except StopIteration:
        raise FormatError("fichier d'inégalité vide", 1, source) from None
    try:
        scenario = parse_header(header, number, "scenario")
        events = {}
        for number, line in lines:
            for token in line.split():
                index = scenario.encode(scenario.parse_event(token, number))
                if index in events:
                    raise FormatError(f"événement {token} répété", number)
                events[index] = number
    except FormatError as exc:
        if source and not exc.source:
            raise FormatError(exc.message, exc.line, source) from exc
        raise
    try:
        return LOInequality(scenario, tuple(events))
    except NotACliqueError as exc:
        first, second = (scenario.encode(scenario.parse_event(label)) for label in exc.pair)
        raise FormatError(exc.args[0], max(events[first], events[second]), source) from exc


def serialize_inequality(inequality: LOInequality) -> str:
    s = inequality.scenario
    return "\n".join([f"scenario {s.n} {s.m} {s.d}"] + inequality.labels()) + "\n"


def load_inequality(path: Union[str, Path]) -> LOInequality:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"lecture impossible de {path}: {exc}") from exc
    return parse_inequality(text, str(path))


def save_inequality(inequality: LOInequality, path: Union[str, Path], comment: str = ""):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    header = "".join(f"# {line}\n" for line in comment.splitlines())
    path.write_text(header + serialize_inequality(inequality), encoding="utf-8")
