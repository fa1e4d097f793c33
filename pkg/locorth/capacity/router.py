#!/usr/bin/env python3
"""
Sous-commandes capacity, threshold et pack
"""

from ..boxes.storage import resolve_box
from ..cli.app import CommandRouter, RunOptions, arg, render, to_csv
from ..errors import InputError
from ..inequalities.storage import load_inequality
from .alpha import LOVASZ_NO_PR, capacity_report, critical_purity_from_capacity, support_probability
from .packing import box_packing
from .threshold import NoisyFamily, min_threshold_over_cliques, violation_threshold

# Configuration
router = CommandRouter()

# Puissance à partir de laquelle --long-running est exigé
LONG_RUNNING_POWER = 3


def require_long_running(options: RunOptions, k: int, what: str):
    if k >= LONG_RUNNING_POWER and not options.long_running:
        raise InputError(f"{what} pour k = {k} demande --long-running")


@router.command(
    "capacity",
    help="α_k, α_k^(1/k) et pureté critique pour k = 1..K (K = --k)",
    arguments=[arg("--box", default="pr", help="boîte à support uniforme")],
)
def capacity_command(options: RunOptions, args) -> str:
    require_long_running(options, options.k, "capacity")
    box = resolve_box(args.box)
    rows = capacity_report(box, range(1, options.k + 1), options.budget)
    reference = rows[0].reference_upper_theta
    asymptotic = None
    if reference is not None:
        s = box.scenario
        asymptotic = critical_purity_from_capacity(reference, support_probability(box), s.n, s.d)
    if options.format == "csv":
        return to_csv(
            ["k", "alpha_k", "lower_bound_theta", "critical_purity", "reference_upper_theta"],
            [[row.k, row.alpha_k, row.lower_bound_theta, row.critical_purity,
              "" if row.reference_upper_theta is None else row.reference_upper_theta] for row in rows],
        )
    return render("capacity.txt.j2", box=args.box, rows=rows, reference=reference, asymptotic=asymptotic)


@router.command(
    "threshold",
    help="pureté seuil de violation d'une inégalité (ou minimum sur toutes les cliques)",
    arguments=[
        arg("file", nargs="?", default=None, help="fichier d'inégalité ; absent, toutes les cliques"),
        arg("--box", default="pr", help="boîte mélangée au bruit blanc"),
    ],
)
def threshold_command(options: RunOptions, args) -> str:
    base = resolve_box(args.box)
    if args.file:
        inequality = load_inequality(args.file)
        n = base.scenario.n
        if inequality.scenario.n % n:
            raise InputError(f"{inequality.scenario} n'est pas une puissance de {base.scenario}")
        family = NoisyFamily.white_noise(base, inequality.scenario.n // n)
        q = violation_threshold(inequality, family)
        if options.format == "csv":
            return to_csv(["k", "threshold", "terms"], [[family.k, q, len(inequality)]])
        return f"threshold {q:.12f} (k={family.k}, {len(inequality)} terms)"

    require_long_running(options, options.k + 1, "threshold sur toutes les cliques")
    found = min_threshold_over_cliques(
        NoisyFamily.white_noise(base, options.k), options.budget, options.threads, options.progress
    )
    if found is None:
        return "none"
    q, witness = found
    if options.format == "csv":
        return to_csv(["k", "threshold", "terms", "events"], [[options.k, q, len(witness), " ".join(witness.labels())]])
    return f"threshold {q:.12f} (k={options.k}, {len(witness)} terms)\n  " + " ".join(witness.labels())


@router.command(
    "pack",
    help="empilement maximal de cubes sur le tore (Z/torus)^k (k = --k)",
    arguments=[
        arg("--torus", type=int, default=8, help="côté du tore"),
        arg("--side", type=int, default=3, help="côté des cubes"),
    ],
)
def pack_command(options: RunOptions, args) -> str:
    require_long_running(options, options.k, "pack")
    centres = box_packing(options.k, args.torus, args.side, options.budget)
    if options.format == "csv":
        return to_csv([f"x{i}" for i in range(options.k)], centres)
    lines = [" ".join(map(str, centre)) for centre in centres]
    return "\n".join(lines + [f"{len(centres)} cubes"])
