#!/usr/bin/env python3
"""
Lecture et écriture des fichiers de boîtes

Format (UTF-8, une entrée par ligne) :

    box <n> <m> <d>
    <a1…an>|<x1…xn> <num>/<den>

Les événements absents valent zéro ; `#` commence un commentaire.
"""

from fractions import Fraction
from pathlib import Path
from typing import Iterator, Union

from ..errors import FormatError, InputError, ScenarioError
from ..scenario.events import Scenario, is_decimal
from .box import Box, deterministic_box, pr_box, uniform_box

NAMED_BOXES = ("pr", "uniform", "det:<sorties>")


def content_lines(text: str) -> Iterator[tuple]:
    """(numéro de ligne, contenu) sans commentaires ni lignes vides"""
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def parse_header(line: str, number: int, keyword: str) -> Scenario:
    parts = line.split()
    if len(parts) != 4 or parts[0] != keyword or not all(is_decimal(p) for p in parts[1:]):
        raise FormatError(f"en-tête attendu `{keyword} <n> <m> <d>`, lu {line!r}", number)
    try:
        return Scenario(*(int(p) for p in parts[1:]))
    except ScenarioError as exc:
        raise FormatError(str(exc), number) from exc


def parse_box(text: str, source: str = "") -> Box:
    """
    Analyse le contenu d'un fichier de boîte

    Args:
        text: Contenu du fichier
        source: Nom du fichier pour les messages d'erreur

    Returns:
        La boîte (non validée : appeler `validate`)
    """
    lines = content_lines(text)
    try:
        number, header = next(lines)
    except StopIteration:
        raise FormatError("fichier de boîte vide", 1, source) from None
    try:
        scenario = parse_header(header, number, "box")
        table = {}
        for number, line in lines:
            parts = line.split()
            if len(parts) != 2:
                raise FormatError(f"ligne attendue `<a>|<x> <num>/<den>`, lu {line!r}", number)
            index = scenario.encode(scenario.parse_event(parts[0], number))
            if index in table:
                raise FormatError(f"événement {parts[0]} répété", number)
            try:
                table[index] = Fraction(parts[1])
            except (ValueError, ZeroDivisionError):
                raise FormatError(f"probabilité illisible {parts[1]!r}", number) from None
    except FormatError as exc:
        if source and not exc.source:
            raise FormatError(exc.message, exc.line, source) from exc
        raise
    return Box.from_table(scenario, table)


def serialize_box(box: Box) -> str:
    """Événements par index croissant, fractions réduites"""
    s = box.scenario
    lines = [f"box {s.n} {s.m} {s.d}"]
    for index, p in box.entries:
        lines.append(f"{s.decode(index).label()} {p.numerator}/{p.denominator}")
    return "\n".join(lines) + "\n"


def load_box(path: Union[str, Path]) -> Box:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"lecture impossible de {path}: {exc}") from exc
    return parse_box(text, str(path))


def save_box(box: Box, path: Union[str, Path]):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(serialize_box(box), encoding="utf-8")


def parse_deterministic_code(code: str) -> Box:
    """
    Boîte déterministe décrite par `det:<sorties>`

    `<sorties>` liste, pour chaque partie, les résultats associés aux réglages
    0, 1, … (`det:01,10`). Sans virgule, chaque chiffre est le résultat
    constant d'une partie à deux réglages (`det:000`).
    """
    if not is_decimal(code.replace(",", "")):
        raise InputError(f"boîte déterministe illisible det:{code}")
    if "," in code:
        strategy = [tuple(int(c) for c in group) for group in code.split(",")]
    else:
        strategy = [(int(c), int(c)) for c in code]
    m = len(strategy[0])
    if any(len(f) != m for f in strategy):
        raise InputError(f"det:{code} : toutes les parties doivent avoir {m} réglages")
    d = max(2, 1 + max(max(f) for f in strategy))
    return deterministic_box(Scenario(len(strategy), m, d), strategy)


def resolve_box(name: str) -> Box:
    """
    Boîte nommée (`pr`, `uniform`, `uniform:n,m,d`, `det:<sorties>`) ou fichier
    """
    if name == "pr":
        return pr_box()
    if name == "uniform":
        return uniform_box(Scenario(2, 2, 2))
    if name.startswith("uniform:"):
        try:
            n, m, d = (int(p) for p in name[len("uniform:"):].split(","))
        except ValueError:
            raise InputError(f"boîte uniforme illisible {name}") from None
        return uniform_box(Scenario(n, m, d))
    if name.startswith("det:"):
        return parse_deterministic_code(name[len("det:"):])
    return load_box(name)
