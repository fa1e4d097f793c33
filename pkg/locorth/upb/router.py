#!/usr/bin/env python3
"""
Sous-commande upb : ensembles de vecteurs produits d'une inégalité
"""

import numpy as np

from ..cli.app import CommandRouter, RunOptions, arg, render, to_csv
from ..inequalities.storage import load_inequality
from .bases import default_family
from .vectors import (
    find_orthogonal_product_vector,
    gram_orthogonality,
    qubit_upb_check,
    vectors_from_inequality,
    weak_unextendible,
)

# Configuration
router = CommandRouter()


def format_complex(z: complex) -> str:
    return f"{z.real:+.6f}{z.imag:+.6f}i"


def format_sites(sites: np.ndarray) -> str:
    return " ".join("(" + ", ".join(format_complex(z) for z in site) + ")" for site in sites)


@router.command(
    "upb",
    help="vecteurs produits associés à une inégalité LO",
    arguments=[
        arg("file", help="fichier d'inégalité"),
        arg("--samples", type=int, default=10 ** 6, help="tirages du contrôle qubit"),
        arg("--search", action="store_true", help="cherche un vecteur produit orthogonal (d ≥ 3)"),
    ],
)
def upb_command(options: RunOptions, args) -> str:
    inequality = load_inequality(args.file)
    family = default_family(inequality.scenario.d, inequality.scenario.m)
    pvs = vectors_from_inequality(inequality, family)
    verdict = gram_orthogonality(pvs)
    weak = weak_unextendible(pvs)
    upb = None
    if family.d == 2 and weak:
        upb = qubit_upb_check(pvs, args.samples, options.seed)
    extension = None
    if args.search:
        found = find_orthogonal_product_vector(pvs)
        extension = format_sites(found) if found is not None else "none"

    if options.format == "csv":
        return to_csv(
            ["member", "symbols", "sites"],
            [[index, pvs.symbols(member), format_sites(pvs.site_vectors(member))]
             for index, member in enumerate(pvs.members)],
        )
    members = [
        {"symbols": pvs.symbols(member), "sites": format_sites(pvs.site_vectors(member))}
        for member in pvs.members
    ]
    return render(
        "upb.txt.j2",
        count=len(pvs),
        scenario=str(inequality.scenario),
        members=members,
        orthogonal=verdict.orthogonal,
        weak=weak,
        upb=upb,
        extension=extension,
    )
