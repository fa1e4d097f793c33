#!/usr/bin/env python3
"""
Sous-commandes d'énumération et de classification des inégalités
"""

from ..cli.app import CommandRouter, RunOptions, arg, to_csv
from ..inequalities.inequality import LOInequality
from ..inequalities.storage import load_inequality
from ..journal import log_message
from ..scenario.events import Scenario
from ..scenario.graph import orthogonality_graph
from ..search.cliques import maximal_cliques
from .pipeline import classify, enumerate_classes, write_classes

# Configuration
router = CommandRouter()


def format_classes(records: list, options: RunOptions) -> str:
    if options.format == "csv":
        return to_csv(
            ["index", "terms", "members", "ns_max", "events"],
            [
                [index, record.terms, record.members, record.ns_value, " ".join(record.representative.labels())]
                for index, record in enumerate(records, start=1)
            ],
        )
    lines = []
    for index, record in enumerate(records, start=1):
        value = f", ns_max {record.ns_value}" if record.ns_value is not None else ""
        lines.append(f"class {index}: {record.terms} terms, {record.members} members{value}")
        lines.append("  " + " ".join(record.representative.labels()))
    lines.append(f"{len(records)} classes")
    return "\n".join(lines)


@router.command(
    "inequalities",
    help="inégalités LO optimales d'un scénario",
    arguments=[
        arg("n", type=int),
        arg("m", type=int),
        arg("d", type=int),
        arg("--classify", action="store_true", help="regroupe les cliques en classes d'équivalence"),
        arg("--keep-trivial", action="store_true", help="conserve les classes sans violation"),
        arg("--out", default=None, help="répertoire des fichiers class_<scénario>_<i>.loineq"),
    ],
)
def inequalities_command(options: RunOptions, args) -> str:
    scenario = Scenario(args.n, args.m, args.d)
    if args.classify:
        records = enumerate_classes(
            scenario, options.budget, args.keep_trivial, options.threads, options.progress
        )
        if args.out:
            paths = write_classes(records, args.out)
            log_message(f"💾 {len(paths)} fichiers écrits dans {args.out}")
        return format_classes(records, options)

    graph = orthogonality_graph(scenario)
    cliques = maximal_cliques(graph, options.budget, threads=options.threads, progress=options.progress)
    inequalities = [LOInequality(scenario, clique, check=False) for clique in cliques]
    if options.format == "csv":
        return to_csv(["terms", "events"], [[len(i), " ".join(i.labels())] for i in inequalities])
    return "\n".join([" ".join(i.labels()) for i in inequalities] + [f"{len(inequalities)} maximal cliques"])


@router.command(
    "classify",
    help="classes d'équivalence d'un ensemble de fichiers d'inégalités",
    arguments=[
        arg("files", nargs="+"),
        arg("--out", default=None, help="répertoire des représentants"),
    ],
)
def classify_command(options: RunOptions, args) -> str:
    inequalities = [load_inequality(path) for path in args.files]
    records = classify(inequalities, options.budget, threads=options.threads, progress=options.progress)
    if args.out:
        write_classes(records, args.out)
    return format_classes(records, options)
