#!/usr/bin/env python3
"""
Sous-commandes check-box et ns-max
"""

from ..boxes.box import validate
from ..boxes.storage import resolve_box, serialize_box
from ..cli.app import CommandRouter, RunOptions, arg, to_csv
from ..errors import InputError
from .inequality import check_lo_k
from .nsmax import ns_optimum
from .storage import load_inequality

# Configuration
router = CommandRouter()


@router.command(
    "check-box",
    help="teste le principe LO sur k copies d'une boîte",
    arguments=[
        arg("box", help="pr, uniform, uniform:n,m,d, det:<sorties> ou fichier .box"),
        arg("--all", action="store_true", help="toutes les cliques maximales violées"),
    ],
)
def check_box_command(options: RunOptions, args) -> str:
    box = resolve_box(args.box)
    verdict = validate(box)
    if not verdict.ok:
        raise InputError(f"{args.box} : boîte {verdict.describe()}")
    result = check_lo_k(box, options.k, options.budget, all_witnesses=args.all)

    if result.satisfied:
        witnesses = ()
    else:
        witnesses = result.witnesses or ((result.witness, result.value),)
    if options.format == "csv":
        return to_csv(
            ["k", "verdict", "value", "terms", "events"],
            [[options.k, "VIOLATED", value, len(w), " ".join(w.labels())] for w, value in witnesses]
            or [[options.k, "SATISFIED", "", "", ""]],
        )
    lines = [result.describe()]
    for witness, value in witnesses:
        lines.append(f"  {value}: " + " ".join(witness.labels()))
    return "\n".join(lines)


@router.command(
    "ns-max",
    help="maximum exact d'une inégalité sur les boîtes non-signalantes",
    arguments=[
        arg("file", help="fichier d'inégalité"),
        arg("--box", action="store_true", help="affiche aussi une boîte optimale"),
    ],
)
def ns_max_command(options: RunOptions, args) -> str:
    inequality = load_inequality(args.file)
    optimum = ns_optimum(inequality, options.budget)
    if args.box:
        return f"{optimum.value}\n{serialize_box(optimum.box)}"
    return str(optimum.value)
