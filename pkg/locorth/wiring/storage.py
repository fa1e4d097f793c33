#!/usr/bin/env python3
"""
Fichiers de câblage

    wiring r=<r> base <n> <m> <d>
    group <g>: parties <p…> inputs <Y> outputs <B>
    order <g> <y> <historique> <partie>
    input <g> <y> <historique> <réglage>
    output <g> <y> <historique> <sortie>

Les groupes sont déclarés dans l'ordre 0, 1, … avant leurs tables.
L'historique est la suite des résultats déjà obtenus par le groupe
(`-` s'il est vide, sinon une chaîne de chiffres). `#` commence un
commentaire.
"""

import re
from pathlib import Path
from typing import Union

from ..boxes.storage import content_lines
from ..errors import FormatError, InputError
from ..scenario.events import Scenario
from .protocol import WiringGroup, WiringProtocol

HEADER = re.compile(r"^wiring\s+r=(\d+)\s+base\s+(\d+)\s+(\d+)\s+(\d+)$", re.ASCII)
GROUP = re.compile(r"^group\s+(\d+):\s+parties\s+([\d\s]+?)\s+inputs\s+(\d+)\s+outputs\s+(\d+)$", re.ASCII)
TABLE = re.compile(r"^(order|input|output)\s+(\d+)\s+(\d+)\s+(-|\d+)\s+(\d+)$", re.ASCII)
TABLE_FIELDS = {"order": "order", "input": "settings", "output": "output"}


def _history(text: str) -> tuple:
    return () if text == "-" else tuple(int(c) for c in text)


def _history_text(history: tuple) -> str:
    return "".join(map(str, history)) or "-"


def parse_wiring(text: str, source: str = "") -> WiringProtocol:
    """
    Analyse un fichier de câblage

    Args:
        text: Contenu du fichier
        source: Nom du fichier pour les messages d'erreur

    Returns:
        Protocole vérifié
    """
    lines = content_lines(text)
    try:
        number, header = next(lines)
    except StopIteration:
        raise FormatError("fichier de câblage vide", 1, source) from None
    match = HEADER.match(header)
    if not match:
        raise FormatError(f"en-tête attendu 'wiring r=<r> base <n> <m> <d>', lu {header!r}", number, source)
    r, n, m, d = (int(v) for v in match.groups())
    try:
        base = Scenario(n, m, d)
    except InputError as exc:
        raise FormatError(str(exc), number, source) from exc

    groups = []
    for number, line in lines:
        match = GROUP.match(line)
        if match:
            gid = int(match.group(1))
            if gid != len(groups):
                raise FormatError(f"groupe {gid} déclaré hors d'ordre", number, source)
            parties = tuple(int(p) for p in match.group(2).split())
            groups.append(WiringGroup(parties, int(match.group(3)), int(match.group(4))))
            continue
        match = TABLE.match(line)
        if not match:
            raise FormatError(f"ligne illisible {line!r}", number, source)
        kind, gid, y, history, value = match.groups()
        gid = int(gid)
        if gid >= len(groups):
            raise FormatError(f"groupe {gid} non déclaré", number, source)
        table = getattr(groups[gid], TABLE_FIELDS[kind])
        key = (int(y), _history(history))
        if key in table:
            raise FormatError(f"entrée {kind} répétée pour y={y}, historique {history}", number, source)
        table[key] = int(value)

    protocol = WiringProtocol(base, r, tuple(groups))
    protocol.check()
    return protocol


def serialize_wiring(protocol: WiringProtocol) -> str:
    base = protocol.base
    lines = [f"wiring r={protocol.r} base {base.n} {base.m} {base.d}"]
    for gid, group in enumerate(protocol.groups):
        parties = " ".join(map(str, group.parties))
        lines.append(f"group {gid}: parties {parties} inputs {group.inputs} outputs {group.outputs}")
    for gid, group in enumerate(protocol.groups):
        for kind, name in TABLE_FIELDS.items():
            table = getattr(group, name)
            for (y, history) in sorted(table, key=lambda key: (key[0], len(key[1]), key[1])):
                lines.append(f"{kind} {gid} {y} {_history_text(history)} {table[(y, history)]}")
    return "\n".join(lines) + "\n"


def load_wiring(path: Union[str, Path]) -> WiringProtocol:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"lecture impossible de {path}: {exc}") from exc
    return parse_wiring(text, str(path))


def save_wiring(protocol: WiringProtocol, path: Union[str, Path]):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(serialize_wiring(protocol), encoding="utf-8")
