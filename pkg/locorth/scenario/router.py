#!/usr/bin/env python3
"""
Sous-commande graph : graphes d'orthogonalité et export DOT
"""

from ..boxes.storage import resolve_box
from ..cli.app import CommandRouter, RunOptions, arg, render, to_csv
from ..errors import InputError
from .events import Scenario
from .graph import complement, orthogonality_graph, orthogonality_subgraph

# Configuration
router = CommandRouter()


@router.command(
    "graph",
    help="graphe d'orthogonalité d'un scénario ou du support d'une boîte",
    arguments=[
        arg("scenario", nargs="*", type=int, help="n m d"),
        arg("--support", default=None, help="boîte dont le support induit le graphe"),
        arg("--complement", action="store_true", help="graphe de non-orthogonalité"),
    ],
)
def graph_command(options: RunOptions, args) -> str:
    if args.support:
        box = resolve_box(args.support)
        graph = orthogonality_subgraph(box.scenario, box.support())
        name = "NO_support" if args.complement else "O_support"
    elif len(args.scenario) == 3:
        scenario = Scenario(*args.scenario)
        graph = orthogonality_graph(scenario)
        name = ("NO_" if args.complement else "O_") + scenario.tag()
    else:
        raise InputError("graph attend n m d ou --support BOX")
    if args.complement:
        graph = complement(graph)

    labels = [graph.label(v) for v in range(graph.vertex_count)]
    if options.format == "dot":
        return render("graph.dot.j2", name=name, labels=labels, edges=list(graph.edges()))
    if options.format == "csv":
        return to_csv(["u", "v"], [[labels[u], labels[v]] for u, v in graph.edges()])
    degrees = sorted({graph.degree(v) for v in range(graph.vertex_count)})
    return (
        f"{name}: {graph.vertex_count} vertices, {graph.edge_count()} edges, "
        f"degrees {' '.join(map(str, degrees))}"
    )
