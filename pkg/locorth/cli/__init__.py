"""
Ligne de commande locorth
"""

from .app import Application, CommandRouter, RunOptions, arg, render, to_csv

__all__ = ["Application", "CommandRouter", "RunOptions", "arg", "render", "to_csv"]
