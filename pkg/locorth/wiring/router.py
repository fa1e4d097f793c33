#!/usr/bin/env python3
"""
Sous-commande wire
"""

from ..boxes.storage import resolve_box, serialize_box
from ..cli.app import CommandRouter, RunOptions, arg, to_csv
from ..inequalities.inequality import evaluate
from ..inequalities.storage import load_inequality, serialize_inequality
from ..journal import log_message
from .engine import expand_inequality, wire
from .storage import load_wiring

# Configuration
router = CommandRouter()


@router.command(
    "wire",
    help="câble r copies d'une boîte selon un protocole",
    arguments=[
        arg("box", help="boîte nommée ou fichier .box"),
        arg("wiring", help="fichier de câblage"),
        arg("--expand", default=None, help="inégalité du scénario câblé à développer sur P^{⊗r}"),
    ],
)
def wire_command(options: RunOptions, args) -> str:
    box = resolve_box(args.box)
    protocol = load_wiring(args.wiring)
    wired = wire(box, protocol)
    if args.expand:
        inequality = load_inequality(args.expand)
        expanded = expand_inequality(inequality, protocol)
        log_message(f"Développement : {len(inequality)} → {len(expanded)} termes, valeur {evaluate(inequality, wired)}")
        return serialize_inequality(expanded)
    if options.format == "csv":
        s = wired.scenario
        return to_csv(["event", "probability"], [[s.decode(index).label(), p] for index, p in wired.entries])
    return serialize_box(wired)
