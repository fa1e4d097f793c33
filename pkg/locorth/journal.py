#!/usr/bin/env python3
"""
Journalisation de locorth

Même format que les scripts du serveur : `[YYYY-mm-dd HH:MM:SS] message`,
écrit dans `logs/locorth.log` et recopié sur stderr. Rien n'est écrit sur
stdout, réservé aux résultats.
"""

import logging
import sys
from pathlib import Path

from . import settings

logger = logging.getLogger("locorth")
_configured = False


def configure(level: str = None):
    """Installe les handlers (fichier + stderr) une seule fois"""
    global _configured
    if _configured:
        if level:
            for handler in logger.handlers:
                if isinstance(handler, logging.StreamHandler) and not isinstance(handler, logging.FileHandler):
                    handler.setLevel(level.upper())
        return
    _configured = True

    formatter = logging.Formatter("[%(asctime)s] %(message)s", "%Y-%m-%d %H:%M:%S")
    logger.setLevel(logging.DEBUG)
    logger.propagate = False

    if settings.LOG_PATH:
        try:
            log_path = Path(settings.LOG_PATH)
            log_path.parent.mkdir(parents=True, exist_ok=True)
            file_handler = logging.FileHandler(log_path, encoding="utf-8")
            file_handler.setLevel(logging.INFO)
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)
        except OSError:
            # Répertoire en lecture seule : stderr seulement
            pass

    stream_handler = logging.StreamHandler(sys.stderr)
    stream_handler.setLevel((level or settings.LOG_LEVEL).upper())
    stream_handler.setFormatter(formatter)
    logger.addHandler(stream_handler)


def log_message(message: str, level: str = "info"):
    """
    Enregistre un message dans le journal

    Args:
        message: Texte du message
        level: Niveau ("debug", "info", "warning", "error")
    """
    configure()
    logger.log(getattr(logging, level.upper(), logging.INFO), message)
