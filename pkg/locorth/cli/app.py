#!/usr/bin/env python3
"""
Ossature de la ligne de commande

Chaque service déclare ses sous-commandes sur un `CommandRouter` ;
l'application principale les inclut (`include_router`) et se charge des
options globales, de la journalisation et des codes de sortie :
0 = terminé, 2 = entrée invalide, 3 = budget épuisé.
"""

import argparse
import csv
import io
import sys
from dataclasses import dataclass, field
from typing import Callable, List, Literal, Optional

from jinja2 import Environment, FileSystemLoader
from pydantic import BaseModel, Field, ValidationError

from .. import __version__, settings
from ..errors import BudgetExceeded, InputError, LocOrthError
from ..journal import configure, log_message
from ..settings import Budget


# Configuration
templates = Environment(
    loader=FileSystemLoader(str(settings.TEMPLATES_DIR)),
    trim_blocks=True,
    lstrip_blocks=True,
    keep_trailing_newline=True,
)


def render(template: str, **context) -> str:
    return templates.get_template(template).render(**context)


def to_csv(header: list, rows) -> str:
    """Texte CSV (séparateur virgule, fins de ligne \\n)"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def arg(*flags, **kwargs) -> tuple:
    """Déclaration d'argument, transmise telle quelle à argparse"""
    return flags, kwargs


@dataclass
class Command:
    name: str
    handler: Callable
    help: str = ""
    arguments: tuple = ()


@dataclass
class CommandRouter:
    """Registre des sous-commandes d'un service"""

    commands: List[Command] = field(default_factory=list)

    def command(self, name: str, help: str = "", arguments=()):
        def decorator(handler: Callable) -> Callable:
            self.commands.append(Command(name, handler, help, tuple(arguments)))
            return handler

        return decorator


class RunOptions(BaseModel):
    """Options globales validées"""

    k: int = Field(default=1, ge=1)
    budget: Budget = Field(default_factory=Budget)
    seed: int = settings.SEED
    long_running: bool = False
    format: Literal["text", "csv", "dot"] = "text"
    threads: int = Field(default=settings.THREADS, ge=1)
    progress: bool = False


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--k", type=int, default=1, help="nombre de copies / puissance")
    common.add_argument("--budget-cliques", type=int, default=settings.MAX_CLIQUES,
                        help="nombre maximal de cliques énumérées")
    common.add_argument("--budget-seconds", type=float, default=settings.BUDGET_SECONDS,
                        help="budget de temps mural (secondes)")
    common.add_argument("--seed", type=int, default=settings.SEED, help="graine pseudo-aléatoire")
    common.add_argument("--long-running", action="store_true", help="autorise les calculs longs")
    common.add_argument("--format", default="text", choices=["text", "csv", "dot"], help="format de sortie")
    common.add_argument("--threads", type=int, default=settings.THREADS, help="processus de recherche")
    common.add_argument("--progress", action="store_true", help="barres de progression sur stderr")
    common.add_argument("--log-level", default=None, help="niveau du journal sur stderr")
    return common


class Application:
    """Application en ligne de commande composée de routeurs"""

    def __init__(self, title: str, description: str = "", version: str = __version__):
        self.title = title
        self.description = description
        self.version = version
        self.commands: dict = {}

    def include_router(self, router: CommandRouter):
        for command in router.commands:
            if command.name in self.commands:
                raise LocOrthError(f"sous-commande {command.name} déclarée deux fois")
            self.commands[command.name] = command

    def build_parser(self) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(prog=self.title, description=self.description)
        parser.add_argument("--version", action="version", version=f"{self.title} {self.version}")
        subparsers = parser.add_subparsers(dest="command", required=True)
        common = _common_parser()
        for name in sorted(self.commands):
            command = self.commands[name]
            sub = subparsers.add_parser(name, help=command.help, parents=[common])
            for flags, kwargs in command.arguments:
                sub.add_argument(*flags, **kwargs)
        return parser

    def run(self, argv: Optional[List[str]] = None, stdout=None) -> int:
        """
        Exécute une sous-commande

        Args:
            argv: Arguments (défaut : sys.argv[1:])
            stdout: Flux des résultats (défaut : sys.stdout)

        Returns:
            Code de sortie
        """
        stdout = stdout or sys.stdout
        try:
            args = self.build_parser().parse_args(argv)
        except SystemExit as exc:
            return int(exc.code or 0)
        configure(args.log_level)

        try:
            options = RunOptions(
                k=args.k,
                budget=Budget(max_cliques=args.budget_cliques, seconds=args.budget_seconds),
                seed=args.seed,
                long_running=args.long_running,
                format=args.format,
                threads=args.threads,
                progress=args.progress,
            )
            log_message(f"🚀 {self.title} {args.command}")
            output = self.commands[args.command].handler(options, args)
        except ValidationError as exc:
            print(f"❌ option invalide : {exc.errors()[0]['msg']}", file=sys.stderr)
            return 2
        except InputError as exc:
            log_message(f"❌ {exc}")
            print(f"❌ {exc}", file=sys.stderr)
            return 2
        except BudgetExceeded as exc:
            log_message(f"❌ {exc}")
            print(f"❌ budget épuisé : {exc}", file=sys.stderr)
            return 3

        if output:
            stdout.write(output if output.endswith("\n") else output + "\n")
        log_message(f"✅ {args.command} terminé")
        return 0
