#!/usr/bin/env python3
"""
Application centrale - locorth
Principe d'orthogonalité locale : inégalités, boîtes, câblages, UPB, capacité
"""

import sys

from locorth.cli.app import Application

# Importer les routers des services
from locorth.capacity import router as capacity_router
from locorth.classify import router as classify_router
from locorth.inequalities import router as inequalities_router
from locorth.scenario import router as scenario_router
from locorth.upb import router as upb_router
from locorth.wiring import router as wiring_router

# Configuration
app = Application(
    "locorth",
    description="Orthogonalité locale pour les scénarios de Bell",
)

# Inclure les routers des services
app.include_router(scenario_router.router)
app.include_router(inequalities_router.router)
app.include_router(classify_router.router)
app.include_router(wiring_router.router)
app.include_router(upb_router.router)
app.include_router(capacity_router.router)


def run(argv=None, stdout=None) -> int:
    return app.run(argv, stdout)


if __name__ == "__main__":
    sys.exit(run())
